//! Inclusion–exclusion for three sets, recovered from the two inverses.
//!
//! Every element `x` of the universe has a membership pattern
//! `T(x) = {i : x ∈ Sᵢ} ⊆ {A, B, C}`. Counting elements per pattern gives a
//! weight function on `2^{A,B,C}` whose transform is
//! `f(X) = #{x : T(x) ⊆ X}`. Then
//!
//! * `|A ∪ B ∪ C| = Σ_{T ≠ ∅} Φ(T)`, each `Φ(T)` recovered by the alternating sum;
//! * `|⋂_{i∈K} Sᵢ| = μ(𝒱(∅; {i} : i ∈ K))`, recovered by the difference operators,
//!   and the classic alternating sum of those intersection sizes gives the union again.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};
use crate::inversion::{invert_measure, FamilyMeasureQuery};
use crate::scalar::{Rational, Scalar};
use crate::stone::{invert_base_measure, BaseSet, StoneModel};
use crate::transform::{transform_table, WeightFn};

pub const MAX_UNIVERSE: usize = 20;

const NAMES: [&str; 3] = ["A", "B", "C"];

#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionTerm {
    /// Which of A, B, C are intersected, as a subset of `{0,1,2}`.
    pub sets: Subset,
    pub direct: usize,
    pub recovered: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InclusionExclusionReport {
    pub universe: GroundSet,
    pub sets: [Subset; 3],
    pub terms: Vec<IntersectionTerm>,
    /// `Σ_K (-1)^{|K|+1} |⋂_K Sᵢ|` using the recovered term values.
    pub classic_total: Rational,
    /// `Σ_{T ≠ ∅} Φ(T)` via the alternating-sum inverse.
    pub inverse_total: Rational,
    pub direct_union: usize,
}

impl InclusionExclusionReport {
    pub fn consistent(&self) -> bool {
        let direct = Rational::from_i64(self.direct_union as i64);
        self.classic_total == direct
            && self.inverse_total == direct
            && self
                .terms
                .iter()
                .all(|t| t.recovered == Rational::from_i64(t.direct as i64))
    }

    pub fn render(&self) -> String {
        let u = &self.universe;
        let mut out = String::new();
        let w = &mut out;
        for (name, s) in NAMES.iter().zip(&self.sets) {
            writeln!(w, "{name} = {{{}}}", u.key(*s)).unwrap();
        }
        writeln!(
            w,
            "intersection sizes (direct count / difference-operator inverse):"
        )
        .unwrap();
        for t in &self.terms {
            writeln!(
                w,
                "  |{}| = {} / {}",
                term_name(t.sets),
                t.direct,
                t.recovered
            )
            .unwrap();
        }
        let signed: Vec<String> = self
            .terms
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let sign = if t.sets.len() % 2 == 1 { "+" } else { "-" };
                if k == 0 {
                    format!("{}", t.recovered)
                } else {
                    format!("{sign} {}", t.recovered)
                }
            })
            .collect();
        writeln!(
            w,
            "inclusion-exclusion: |A∪B∪C| = {} = {}",
            signed.join(" "),
            self.classic_total
        )
        .unwrap();
        writeln!(
            w,
            "alternating-sum inverse: |A∪B∪C| = Σ_{{T≠∅}} Φ(T) = {}",
            self.inverse_total
        )
        .unwrap();
        writeln!(w, "direct count: |A∪B∪C| = {}", self.direct_union).unwrap();
        writeln!(
            w,
            "{}",
            if self.consistent() {
                "MATCH"
            } else {
                "MISMATCH"
            }
        )
        .unwrap();
        out
    }
}

fn term_name(sets: Subset) -> String {
    sets.elements()
        .map(|i| NAMES[i])
        .collect::<Vec<_>>()
        .join("∩")
}

pub fn inclusion_exclusion(
    universe: &GroundSet,
    sets: [Subset; 3],
) -> Result<InclusionExclusionReport> {
    if universe.size() > MAX_UNIVERSE {
        return Err(Error::TooLarge {
            what: format!("universe of size {}", universe.size()),
            limit: MAX_UNIVERSE,
        });
    }
    for s in &sets {
        universe.check(*s)?;
    }

    let index = GroundSet::with_labels(&NAMES)?;
    let family = SetFamily::power_set(index.clone())?;
    let mut counts = [0i64; 8];
    for x in 0..universe.size() {
        let pattern = (0..3).filter(|&i| sets[i].contains(x));
        counts[Subset::from_indices(pattern).mask() as usize] += 1;
    }
    let phi = WeightFn::new(
        family.clone(),
        family
            .members()
            .iter()
            .map(|&t| (t, Rational::from_i64(counts[t.mask() as usize]))),
    )?;
    let f = transform_table(&phi)?;

    let nonempty: Vec<Subset> = family.members()[1..].to_vec();
    let inverse_total = invert_measure(&f, &FamilyMeasureQuery::new(nonempty.clone())?)?;

    let model = StoneModel::new(family);
    let mut terms = Vec::new();
    let mut classic_total = Rational::from_i64(0);
    for &k in &nonempty {
        let hits = k.elements().map(|i| Subset::from_indices([i])).collect();
        let recovered = invert_base_measure(&model, &f, &BaseSet::new(Subset::EMPTY, hits)?)?;
        let direct = k
            .elements()
            .fold(universe.full(), |acc, i| acc.intersection(sets[i]))
            .len();
        if k.len() % 2 == 1 {
            classic_total += recovered.clone();
        } else {
            classic_total -= recovered.clone();
        }
        terms.push(IntersectionTerm {
            sets: k,
            direct,
            recovered,
        });
    }

    Ok(InclusionExclusionReport {
        universe: universe.clone(),
        sets,
        terms,
        classic_total,
        inverse_total,
        direct_union: sets[0].union(sets[1]).union(sets[2]).len(),
    })
}
