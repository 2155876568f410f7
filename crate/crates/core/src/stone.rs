//! Finite Stone-space model: base sets `𝒱(F; U₁,…,Uₙ)`, open-set
//! semicharacters and the difference-operator inverse.
//!
//! The ground set is a finite discrete space, so every subset is
//! open-and-compact and closed. A measure on the family is a finitely supported
//! weight map; its transform at an open set `U` is `Σ_{A ⊆ U} μ({A})`, and
//!
//! ```text
//! μ(𝒱(F; U₁,…,Uₙ)) = (-1)^n (Δ_{U₁} ∘ … ∘ Δ_{Uₙ} f')(F),
//!     f'(F) = f(M ∖ F),   (Δ_U φ)(A) = φ(A ∪ U) − φ(A).
//! ```

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};
use crate::scalar::Scalar;
use crate::transform::{SetFunction, WeightFn};

/// Largest list of base sets accepted by [`measure_finite_union`].
pub const MAX_UNION_TERMS: usize = 20;

/// A family of open-and-compact subsets of a finite discrete space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoneModel {
    family: SetFamily,
}

impl StoneModel {
    pub fn new(family: SetFamily) -> Self {
        StoneModel { family }
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn ground(&self) -> &GroundSet {
        self.family.ground()
    }
}

/// `𝒱(F; U₁,…,Uₙ) = {A ∈ 𝒮 : A ∩ F = ∅, A ∩ Uᵢ ≠ ∅ ∀i}`.
///
/// With no hit sets this is `𝒮^F = {A : A ∩ F = ∅}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseSet {
    exclude: Subset,
    hits: Vec<Subset>,
}

impl BaseSet {
    /// Fails with `DegenerateBase` if some hit set is empty.
    pub fn new(exclude: Subset, hits: Vec<Subset>) -> Result<Self> {
        if let Some(i) = hits.iter().position(|u| u.is_empty()) {
            return Err(Error::DegenerateBase(i));
        }
        Ok(BaseSet { exclude, hits })
    }

    /// `𝒮^F`.
    pub fn avoiding(exclude: Subset) -> Self {
        BaseSet {
            exclude,
            hits: Vec::new(),
        }
    }

    pub fn exclude(&self) -> Subset {
        self.exclude
    }

    pub fn hits(&self) -> &[Subset] {
        &self.hits
    }

    /// Membership predicate, independent of any family.
    pub fn admits(&self, a: Subset) -> bool {
        a.is_disjoint(self.exclude) && self.hits.iter().all(|&u| !a.is_disjoint(u))
    }

    /// Same base set with repeated hit sets removed, first occurrence kept.
    pub fn deduplicated(&self) -> BaseSet {
        let mut hits: Vec<Subset> = Vec::with_capacity(self.hits.len());
        for &u in &self.hits {
            if !hits.contains(&u) {
                hits.push(u);
            }
        }
        BaseSet {
            exclude: self.exclude,
            hits,
        }
    }

    fn check(&self, ground: &GroundSet) -> Result<()> {
        ground.check(self.exclude)?;
        self.hits.iter().try_for_each(|&u| ground.check(u))
    }
}

/// A finitely supported non-negative measure on the family.
#[derive(Debug, Clone, PartialEq)]
pub struct PointMeasure<S> {
    weights: BTreeMap<Subset, S>,
}

impl<S: Scalar> PointMeasure<S> {
    /// Every atom must be a family member and carry a non-negative weight.
    pub fn new(model: &StoneModel, weights: impl IntoIterator<Item = (Subset, S)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, w) in weights {
            if !model.family().contains(a) {
                return Err(Error::NotInFamily(a));
            }
            if !w.is_finite() || w < S::zero() {
                return Err(Error::InvalidWeights(format!(
                    "weight {w} at {:?} is not a finite non-negative number",
                    model.ground().key(a)
                )));
            }
            if map.insert(a, w).is_some() {
                return Err(Error::InvalidWeights(format!(
                    "atom {:?} given twice",
                    model.ground().key(a)
                )));
            }
        }
        Ok(PointMeasure { weights: map })
    }

    /// Measure with density `phi`; all weights must be non-negative.
    pub fn from_weights(phi: &WeightFn<S>) -> Result<Self> {
        let model = StoneModel::new(phi.family().clone());
        Self::new(&model, phi.iter().map(|(a, v)| (a, v.clone())))
    }

    pub fn weights(&self) -> &BTreeMap<Subset, S> {
        &self.weights
    }

    pub fn weight(&self, a: Subset) -> S {
        self.weights.get(&a).cloned().unwrap_or_else(S::zero)
    }

    pub fn total_mass(&self) -> S {
        self.weights
            .values()
            .cloned()
            .fold(S::zero(), |acc, v| acc + v)
    }

    /// The transform `U ↦ laplace_of_measure(self, U)` as a set function.
    pub fn transform(&self) -> MeasureTransform<'_, S> {
        MeasureTransform(self)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MeasureTransform<'a, S>(&'a PointMeasure<S>);

impl<S: Scalar> SetFunction<S> for MeasureTransform<'_, S> {
    fn value(&self, x: Subset) -> Option<S> {
        Some(laplace_of_measure(self.0, x))
    }
}

/// Members of `v` in family order.
pub fn base_members(model: &StoneModel, v: &BaseSet) -> Result<Vec<Subset>> {
    v.check(model.ground())?;
    Ok(model
        .family()
        .members()
        .iter()
        .copied()
        .filter(|&a| v.admits(a))
        .collect())
}

/// `𝒱(F; U…) ∩ 𝒱(F'; U'…) = 𝒱(F ∪ F'; U…, U'…)`.
pub fn base_intersect(v: &BaseSet, w: &BaseSet) -> BaseSet {
    BaseSet {
        exclude: v.exclude.union(w.exclude),
        hits: v.hits.iter().chain(&w.hits).copied().collect(),
    }
}

/// `ψ_U(A) = 1` iff `A ⊆ U`. `U = ∅` is admitted and gives the semicharacter
/// that is 1 only at `∅`.
pub fn psi_open(u: Subset, a: Subset) -> u8 {
    u8::from(a.is_subset_of(u))
}

/// `f(U) = ∫ ψ_U dμ = Σ_{A ⊆ U} μ({A})`.
pub fn laplace_of_measure<S: Scalar>(mu: &PointMeasure<S>, u: Subset) -> S {
    mu.weights
        .iter()
        .filter(|(a, _)| psi_open(u, **a) == 1)
        .fold(S::zero(), |acc, (_, w)| acc + w.clone())
}

/// `f'(F) = f(M ∖ F)`.
pub fn f_prime<S: Scalar, F: SetFunction<S> + ?Sized>(
    f: &F,
    ground: &GroundSet,
    exclude: Subset,
) -> Result<S> {
    let open = ground.complement(exclude);
    f.value(open)
        .ok_or_else(|| Error::IncompleteTable(ground.key(open)))
}

/// `(Δ_U φ)(A) = φ(A ∪ U) − φ(A)`.
pub fn delta<S: Scalar>(u: Subset, phi: impl Fn(Subset) -> S, a: Subset) -> S {
    phi(a.union(u)) - phi(a)
}

/// `μ(𝒱(F; U₁,…,Uₙ))` from transform values, after removing repeated hit sets.
pub fn invert_base_measure<S: Scalar, F: SetFunction<S> + ?Sized>(
    model: &StoneModel,
    f: &F,
    v: &BaseSet,
) -> Result<S> {
    invert_base_measure_verbatim(model, f, &v.deduplicated())
}

/// `(-1)^n (Δ_{U₁} ∘ … ∘ Δ_{Uₙ} f')(F)` applied to the hit list exactly as given.
pub fn invert_base_measure_verbatim<S: Scalar, F: SetFunction<S> + ?Sized>(
    model: &StoneModel,
    f: &F,
    v: &BaseSet,
) -> Result<S> {
    v.check(model.ground())?;
    let value = difference_chain(f, model.ground(), &v.hits, v.exclude)?;
    Ok(if v.hits.len().is_multiple_of(2) {
        value
    } else {
        -value
    })
}

/// `(Δ_{U₁} ∘ … ∘ Δ_{Uₙ} f')(point)`, peeling the outermost operator first.
fn difference_chain<S: Scalar, F: SetFunction<S> + ?Sized>(
    f: &F,
    ground: &GroundSet,
    hits: &[Subset],
    point: Subset,
) -> Result<S> {
    match hits.split_first() {
        None => f_prime(f, ground, point),
        Some((&u, rest)) => {
            let shifted = difference_chain(f, ground, rest, point.union(u))?;
            let here = difference_chain(f, ground, rest, point)?;
            Ok(shifted - here)
        }
    }
}

/// Measure of `V₁ ∪ … ∪ V_k` by inclusion–exclusion over base intersections.
pub fn measure_finite_union<S: Scalar, F: SetFunction<S> + ?Sized>(
    model: &StoneModel,
    f: &F,
    bases: &[BaseSet],
) -> Result<S> {
    if bases.is_empty() {
        return Err(Error::BadArguments("no base sets given".into()));
    }
    if bases.len() > MAX_UNION_TERMS {
        return Err(Error::TooLarge {
            what: format!("union of {} base sets", bases.len()),
            limit: MAX_UNION_TERMS,
        });
    }
    let mut total = S::zero();
    for picked in 1u32..(1 << bases.len()) {
        let mut terms = (0..bases.len()).filter(|i| picked & (1 << i) != 0);
        let first = bases[terms.next().expect("non-empty selection")].clone();
        let meet = terms.fold(first, |acc, i| base_intersect(&acc, &bases[i]));
        let value = invert_base_measure(model, f, &meet)?;
        if picked.count_ones() % 2 == 1 {
            total += value;
        } else {
            total -= value;
        }
    }
    Ok(total)
}

/// Disjoint neighbourhoods of two distinct sets.
///
/// If `A ∖ B ≠ ∅` the pair is `𝒱(M ∖ A; A ∖ B) ∋ A` and `𝒱(A ∖ B) ∋ B`;
/// otherwise the roles are swapped. Returns `None` when `A = B`.
pub fn separating_pair(ground: &GroundSet, a: Subset, b: Subset) -> Option<(BaseSet, BaseSet)> {
    if a == b {
        return None;
    }
    let around = |x: Subset, y: Subset| BaseSet {
        exclude: ground.complement(x),
        hits: vec![x.difference(y)],
    };
    if !a.difference(b).is_empty() {
        Some((around(a, b), BaseSet::avoiding(a.difference(b))))
    } else {
        Some((BaseSet::avoiding(b.difference(a)), around(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::union_closure;
    use crate::scalar::Rational;

    fn s(idx: &[usize]) -> Subset {
        Subset::from_indices(idx.iter().copied())
    }

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn power(n: usize) -> StoneModel {
        StoneModel::new(SetFamily::power_set(GroundSet::new(n).unwrap()).unwrap())
    }

    /// The four-point example as a measure on 2^{1,2}.
    fn four_point(model: &StoneModel) -> PointMeasure<Rational> {
        PointMeasure::new(
            model,
            [
                (s(&[]), q(1)),
                (s(&[0]), q(2)),
                (s(&[1]), q(3)),
                (s(&[0, 1]), q(4)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn base_members_examples() {
        let model = power(2);
        let full = model.ground().full();
        let v = BaseSet::new(Subset::EMPTY, vec![full]).unwrap();
        assert_eq!(
            base_members(&model, &v).unwrap(),
            vec![s(&[0]), s(&[1]), s(&[0, 1])]
        );
        assert_eq!(
            base_members(&model, &BaseSet::avoiding(full)).unwrap(),
            vec![Subset::EMPTY]
        );
        let v = BaseSet::new(s(&[0]), vec![s(&[1])]).unwrap();
        assert_eq!(base_members(&model, &v).unwrap(), vec![s(&[1])]);
    }

    #[test]
    fn empty_hit_sets_are_degenerate() {
        assert_eq!(
            BaseSet::new(Subset::EMPTY, vec![s(&[0]), Subset::EMPTY]),
            Err(Error::DegenerateBase(1))
        );
    }

    #[test]
    fn base_sets_outside_the_ground_are_rejected() {
        let model = power(2);
        assert!(base_members(&model, &BaseSet::avoiding(s(&[4]))).is_err());
    }

    #[test]
    fn intersection_law_small_cases() {
        let model = power(3);
        let v = BaseSet::new(s(&[0]), vec![s(&[1, 2])]).unwrap();
        let vv = base_intersect(&v, &v);
        assert_eq!(vv.hits().len(), 2);
        assert_eq!(
            base_members(&model, &vv).unwrap(),
            base_members(&model, &v).unwrap()
        );
        let a = BaseSet::avoiding(s(&[0]));
        let b = BaseSet::avoiding(s(&[2]));
        assert_eq!(base_intersect(&a, &b), BaseSet::avoiding(s(&[0, 2])));
    }

    #[test]
    fn psi_open_examples() {
        let full = s(&[0, 1, 2]);
        for a in full.subsets() {
            assert_eq!(psi_open(full, a), 1);
            assert_eq!(psi_open(a, Subset::EMPTY), 1);
        }
        assert_eq!(psi_open(s(&[0]), s(&[0, 1])), 0);
    }

    #[test]
    fn laplace_of_measure_matches_the_four_point_example() {
        let model = power(2);
        let mu = four_point(&model);
        assert_eq!(laplace_of_measure(&mu, s(&[0])), q(3));
        assert_eq!(laplace_of_measure(&mu, s(&[1])), q(4));
        assert_eq!(laplace_of_measure(&mu, s(&[0, 1])), q(10));
    }

    #[test]
    fn f_prime_examples() {
        let model = power(2);
        let mu = four_point(&model);
        let f = mu.transform();
        let g = model.ground();
        assert_eq!(f_prime(&f, g, Subset::EMPTY).unwrap(), q(10));
        assert_eq!(f_prime(&f, g, g.full()).unwrap(), q(1));
        assert_eq!(f_prime(&f, g, s(&[0])).unwrap(), q(4));
    }

    #[test]
    fn delta_examples() {
        let phi = |a: Subset| q(a.mask() as i64 * a.mask() as i64);
        let u = s(&[1]);
        assert_eq!(delta(u, phi, s(&[1, 2])), q(0));

        // Δ_U ∘ Δ_U = −Δ_U, because (Δ_U φ)(A ∪ U) = 0.
        for a in s(&[0, 1, 2]).subsets() {
            let once = delta(u, phi, a);
            let twice = delta(u, |b| delta(u, phi, b), a);
            assert_eq!(twice, -once);
        }

        // φ = f' for the four-point example, U = {1}, A = ∅:
        // f'({1}) − f'(∅) = f({2}) − f({1,2}) = 4 − 10.
        let model = power(2);
        let mu = four_point(&model);
        let f = mu.transform();
        let fp = |x: Subset| f_prime(&f, model.ground(), x).unwrap();
        assert_eq!(delta(s(&[0]), fp, Subset::EMPTY), q(-6));
    }

    #[test]
    fn invert_base_measure_small_cases() {
        let model = power(2);
        let mu = four_point(&model);
        let f = mu.transform();
        let g = model.ground();

        let total = invert_base_measure(&model, &f, &BaseSet::avoiding(Subset::EMPTY)).unwrap();
        assert_eq!(total, q(10));

        // n = 1: f(M ∖ F) − f(M ∖ (F ∪ U₁)).
        let (excl, hit) = (s(&[0]), s(&[1]));
        let v = BaseSet::new(excl, vec![hit]).unwrap();
        let chain =
            f.value(g.complement(excl)).unwrap() - f.value(g.complement(excl.union(hit))).unwrap();
        assert_eq!(invert_base_measure(&model, &f, &v).unwrap(), chain);
        assert_eq!(chain, q(3));
    }

    #[test]
    fn verbatim_formula_on_repeated_hits() {
        let g = GroundSet::new(3).unwrap();
        let model = StoneModel::new(union_closure(&g, &[s(&[0]), s(&[1, 2])]).unwrap());
        let mu = PointMeasure::new(
            &model,
            model
                .family()
                .members()
                .iter()
                .map(|&m| (m, q(m.mask() as i64 + 1))),
        )
        .unwrap();
        let f = mu.transform();
        let v = BaseSet::new(Subset::EMPTY, vec![s(&[1]), s(&[1])]).unwrap();
        let expected: Rational = base_members(&model, &v)
            .unwrap()
            .iter()
            .map(|&a| mu.weight(a))
            .fold(q(0), |acc, w| acc + w);
        assert_eq!(invert_base_measure(&model, &f, &v).unwrap(), expected);
        assert_eq!(
            invert_base_measure_verbatim(&model, &f, &v).unwrap(),
            expected
        );
    }

    #[test]
    fn finite_unions() {
        let model = power(2);
        let mu = four_point(&model);
        let f = mu.transform();
        let v = BaseSet::new(s(&[0]), vec![s(&[1])]).unwrap();
        assert_eq!(
            measure_finite_union(&model, &f, std::slice::from_ref(&v)).unwrap(),
            invert_base_measure(&model, &f, &v).unwrap()
        );

        // {{2}} and {{1}} are disjoint: 3 + 2.
        let w = BaseSet::new(s(&[1]), vec![s(&[0])]).unwrap();
        assert_eq!(
            measure_finite_union(&model, &f, &[v.clone(), w]).unwrap(),
            q(5)
        );

        // 𝒮^{1,2} = {∅} and 𝒱(∅; M) cover everything.
        let cover = [
            BaseSet::avoiding(model.ground().full()),
            BaseSet::new(Subset::EMPTY, vec![model.ground().full()]).unwrap(),
        ];
        assert_eq!(measure_finite_union(&model, &f, &cover).unwrap(), q(10));

        assert!(measure_finite_union::<Rational, _>(&model, &f, &[]).is_err());
    }

    #[test]
    fn separation() {
        let g = GroundSet::new(3).unwrap();
        let (va, vb) = separating_pair(&g, s(&[0, 1]), s(&[1])).unwrap();
        assert!(va.admits(s(&[0, 1])));
        assert!(vb.admits(s(&[1])));
        let (va, vb) = separating_pair(&g, s(&[1]), s(&[1, 2])).unwrap();
        assert!(va.admits(s(&[1])));
        assert!(vb.admits(s(&[1, 2])));
        assert!(separating_pair(&g, s(&[1]), s(&[1])).is_none());
    }

    #[test]
    fn measures_must_be_non_negative_and_on_the_family() {
        let model = power(1);
        assert!(PointMeasure::new(&model, [(s(&[0]), q(-1))]).is_err());
        assert!(PointMeasure::new(&model, [(s(&[1]), q(1))]).is_err());
    }
}
