//! The forward Laplace transform `f(X) = Σ_{A ∈ 𝒮, A ⊆ X} Φ(A)`.
//!
//! [`laplace_forward`] evaluates a single point by summing over the family.
//! [`zeta_fast`] fills the whole `2^n` table with the subset-sum dynamic
//! program: `n` passes, pass `i` adding `values[X \ {i}]` into `values[X]` for
//! every `X ∋ i`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};
use crate::scalar::Scalar;

/// A function on subsets of the ground set that can be queried pointwise.
///
/// `None` means the function is not known at that subset (for example, a
/// transform table that lacks a row).
pub trait SetFunction<S> {
    fn value(&self, x: Subset) -> Option<S>;
}

impl<S: Clone, T: SetFunction<S> + ?Sized> SetFunction<S> for &T {
    fn value(&self, x: Subset) -> Option<S> {
        (**self).value(x)
    }
}

/// Adapter turning a closure into a [`SetFunction`].
pub struct FnSetFunction<F>(pub F);

impl<S, F: Fn(Subset) -> Option<S>> SetFunction<S> for FnSetFunction<F> {
    fn value(&self, x: Subset) -> Option<S> {
        (self.0)(x)
    }
}

/// A partially known set function, e.g. loaded from a table file.
pub type SparseTable<S> = BTreeMap<Subset, S>;

impl<S: Clone> SetFunction<S> for BTreeMap<Subset, S> {
    fn value(&self, x: Subset) -> Option<S> {
        self.get(&x).cloned()
    }
}

/// Weight function `Φ : 𝒮 → scalars`, one value per family member.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightFn<S> {
    family: SetFamily,
    values: Vec<S>,
}

impl<S: Scalar> WeightFn<S> {
    /// Requires exactly one finite value per member.
    pub fn new(family: SetFamily, values: impl IntoIterator<Item = (Subset, S)>) -> Result<Self> {
        let mut slots: Vec<Option<S>> = vec![None; family.len()];
        for (subset, value) in values {
            let pos = family.position(subset).ok_or_else(|| {
                Error::InvalidWeights(format!(
                    "weight given for {:?}, which is not a family member",
                    family.ground().key(subset)
                ))
            })?;
            if !value.is_finite() {
                return Err(Error::InvalidWeights(format!(
                    "weight at {:?} is not finite",
                    family.ground().key(subset)
                )));
            }
            if slots[pos].replace(value).is_some() {
                return Err(Error::InvalidWeights(format!(
                    "weight for {:?} given twice",
                    family.ground().key(subset)
                )));
            }
        }
        let values = slots
            .into_iter()
            .zip(family.members())
            .map(|(v, &m)| {
                v.ok_or_else(|| {
                    Error::InvalidWeights(format!(
                        "member {:?} has no weight",
                        family.ground().key(m)
                    ))
                })
            })
            .collect::<Result<Vec<S>>>()?;
        Ok(WeightFn { family, values })
    }

    /// Values listed in family member order.
    pub fn from_values(family: SetFamily, values: Vec<S>) -> Result<Self> {
        if values.len() != family.len() {
            return Err(Error::InvalidWeights(format!(
                "{} values for {} members",
                values.len(),
                family.len()
            )));
        }
        let pairs: Vec<(Subset, S)> = family.members().iter().copied().zip(values).collect();
        Self::new(family, pairs)
    }

    /// Point mass of weight 1 at `at`.
    pub fn point_mass(family: SetFamily, at: Subset) -> Result<Self> {
        if !family.contains(at) {
            return Err(Error::NotInFamily(at));
        }
        let values = family
            .members()
            .iter()
            .map(|&m| if m == at { S::one() } else { S::zero() })
            .collect();
        Ok(WeightFn { family, values })
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn ground(&self) -> &GroundSet {
        self.family.ground()
    }

    pub fn get(&self, a: Subset) -> Option<&S> {
        self.family.position(a).map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, &S)> {
        self.family.members().iter().copied().zip(&self.values)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| *v >= S::zero())
    }

    /// `μ_Φ(𝒜) = Σ_{A ∈ 𝒜} Φ(A)`, with non-members contributing 0.
    pub fn measure<'a>(&self, sets: impl IntoIterator<Item = &'a Subset>) -> S {
        sets.into_iter()
            .filter_map(|a| self.get(*a).cloned())
            .fold(S::zero(), |acc, v| acc + v)
    }

    pub fn total_mass(&self) -> S {
        self.values
            .iter()
            .cloned()
            .fold(S::zero(), |acc, v| acc + v)
    }

    /// Φ extended by zero to all `2^n` masks.
    pub fn to_dense(&self) -> Result<Vec<S>> {
        self.ground().check_dense()?;
        let mut dense = vec![S::zero(); self.ground().dense_len()];
        for (m, v) in self.iter() {
            dense[m.mask() as usize] = v.clone();
        }
        Ok(dense)
    }

    /// Lazily evaluated transform `X ↦ laplace_forward(self, X)`.
    pub fn transform(&self) -> Laplace<'_, S> {
        Laplace(self)
    }
}

/// The transform of a weight function, evaluated on demand.
#[derive(Debug, Clone, Copy)]
pub struct Laplace<'a, S>(&'a WeightFn<S>);

impl<S: Scalar> SetFunction<S> for Laplace<'_, S> {
    fn value(&self, x: Subset) -> Option<S> {
        self.0
            .ground()
            .contains(x)
            .then(|| laplace_forward(self.0, x))
    }
}

/// Dense table of transform values indexed by subset mask.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformTable<S> {
    ground: GroundSet,
    values: Vec<S>,
}

impl<S: Scalar> TransformTable<S> {
    pub fn new(ground: GroundSet, values: Vec<S>) -> Result<Self> {
        ground.check_dense()?;
        if values.len() != ground.dense_len() {
            return Err(Error::BadArguments(format!(
                "dense table has {} entries, expected 2^{} = {}",
                values.len(),
                ground.size(),
                ground.dense_len()
            )));
        }
        Ok(TransformTable { ground, values })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn get(&self, x: Subset) -> &S {
        &self.values[x.mask() as usize]
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn into_values(self) -> Vec<S> {
        self.values
    }
}

impl<S: Scalar> SetFunction<S> for TransformTable<S> {
    fn value(&self, x: Subset) -> Option<S> {
        self.values.get(x.mask() as usize).cloned()
    }
}

/// `f(X) = Σ_{A ∈ 𝒮, A ⊆ X} Φ(A)`. `X` need not be a member.
pub fn laplace_forward<S: Scalar>(phi: &WeightFn<S>, x: Subset) -> S {
    let mut total = S::zero();
    for (a, v) in phi.iter() {
        if a.is_subset_of(x) {
            total += v.clone();
        }
    }
    total
}

/// Batched [`laplace_forward`].
pub fn zeta_sparse<S: Scalar>(phi: &WeightFn<S>, queries: &[Subset]) -> Vec<S> {
    queries.iter().map(|&x| laplace_forward(phi, x)).collect()
}

/// Subset-sum transform of a dense `2^n` array, `O(n·2^n)` additions.
pub fn zeta_fast<S: Scalar>(ground: &GroundSet, mut dense: Vec<S>) -> Result<TransformTable<S>> {
    ground.check_dense()?;
    check_len(ground, dense.len())?;
    butterfly(&mut dense, |lo, hi| *hi += lo);
    TransformTable::new(ground.clone(), dense)
}

/// Transform of `phi` over all `2^n` subsets via [`zeta_fast`].
pub fn transform_table<S: Scalar>(phi: &WeightFn<S>) -> Result<TransformTable<S>> {
    zeta_fast(phi.ground(), phi.to_dense()?)
}

pub(crate) fn check_len(ground: &GroundSet, len: usize) -> Result<()> {
    if len == ground.dense_len() {
        Ok(())
    } else {
        Err(Error::BadArguments(format!(
            "dense array has {len} entries, expected 2^{} = {}",
            ground.size(),
            ground.dense_len()
        )))
    }
}

/// Runs `op(values[X], values[X ∪ {i}])` for each bit `i` and each `X ∌ i`.
/// Every entry receives its contributions in a fixed order.
pub(crate) fn butterfly<S>(values: &mut [S], op: impl Fn(&S, &mut S)) {
    let n = values.len();
    debug_assert!(n.is_power_of_two());
    let mut half = 1;
    while half < n {
        for block in values.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (l, h) in lo.iter().zip(hi.iter_mut()) {
                op(l, h);
            }
        }
        half *= 2;
    }
}

/// `Σ_{Y ⊆ X ⊆ A} (-1)^{|X|}` by enumerating the `2^{|A∖Y|}` intermediate sets.
///
/// Equals `(-1)^{|A|}` when `Y = A` and 0 otherwise.
pub fn alternating_sum(y: Subset, a: Subset) -> Result<i64> {
    if !y.is_subset_of(a) {
        return Err(Error::BadArguments(format!("{y} is not a subset of {a}")));
    }
    Ok(a.difference(y)
        .subsets()
        .map(|free| {
            if y.union(free).len().is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .sum())
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

    /// 𝒮 = 2^{1,2} with Φ(∅)=1, Φ({1})=2, Φ({2})=3, Φ({1,2})=4.
    fn four_point() -> WeightFn<Rational> {
        let fam = SetFamily::power_set(GroundSet::new(2).unwrap()).unwrap();
        WeightFn::new(
            fam,
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
    fn point_mass_at_empty_set_gives_ones() {
        let fam = SetFamily::power_set(GroundSet::new(3).unwrap()).unwrap();
        let phi = WeightFn::<Rational>::point_mass(fam, Subset::EMPTY).unwrap();
        for x in phi.ground().all_subsets() {
            assert_eq!(laplace_forward(&phi, x), q(1));
        }
    }

    #[test]
    fn point_mass_gives_an_indicator() {
        let fam = SetFamily::power_set(GroundSet::new(3).unwrap()).unwrap();
        let a0 = s(&[0, 2]);
        let phi = WeightFn::<Rational>::point_mass(fam, a0).unwrap();
        for x in phi.ground().all_subsets() {
            let expected = if a0.is_subset_of(x) { 1 } else { 0 };
            assert_eq!(laplace_forward(&phi, x), q(expected), "at {x}");
        }
    }

    #[test]
    fn four_point_example() {
        let phi = four_point();
        assert_eq!(laplace_forward(&phi, s(&[0])), q(3));
        assert_eq!(laplace_forward(&phi, s(&[1])), q(4));
        assert_eq!(laplace_forward(&phi, s(&[0, 1])), q(10));
        assert_eq!(
            zeta_sparse(&phi, &[s(&[0]), s(&[1]), s(&[0, 1])]),
            vec![q(3), q(4), q(10)]
        );
        let table = transform_table(&phi).unwrap();
        assert_eq!(table.values(), &[q(1), q(3), q(4), q(10)]);
    }

    #[test]
    fn zeta_fast_trivial_inputs() {
        let g = GroundSet::new(4).unwrap();
        let zeros = zeta_fast(&g, vec![q(0); 16]).unwrap();
        assert!(zeros.values().iter().all(|v| *v == q(0)));

        let mut delta = vec![q(0); 16];
        delta[0] = q(1);
        let ones = zeta_fast(&g, delta).unwrap();
        assert!(ones.values().iter().all(|v| *v == q(1)));
    }

    #[test]
    fn zeta_fast_rejects_bad_sizes() {
        let g = GroundSet::new(3).unwrap();
        assert!(zeta_fast(&g, vec![0.0; 7]).is_err());
        let big = GroundSet::new(25).unwrap();
        assert!(matches!(
            zeta_fast(&big, Vec::<f64>::new()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn non_member_queries_use_the_literal_sum() {
        let g = GroundSet::new(3).unwrap();
        let fam = union_closure(&g, &[s(&[0, 1]), s(&[1, 2])]).unwrap();
        let phi = WeightFn::from_values(fam, vec![q(5), q(7), q(11), q(13)]).unwrap();
        // {1,2} is a member, {1} is not.
        assert_eq!(laplace_forward(&phi, s(&[0])), q(5));
        assert_eq!(laplace_forward(&phi, s(&[0, 1])), q(12));
        assert_eq!(laplace_forward(&phi, g.full()), phi.total_mass());
    }

    #[test]
    fn weight_validation() {
        let fam = SetFamily::power_set(GroundSet::new(1).unwrap()).unwrap();
        assert!(WeightFn::new(fam.clone(), [(s(&[]), q(1))]).is_err());
        assert!(WeightFn::new(
            fam.clone(),
            [(s(&[]), q(1)), (s(&[0]), q(1)), (s(&[1]), q(1))]
        )
        .is_err());
        assert!(WeightFn::new(fam.clone(), [(s(&[]), f64::NAN), (s(&[0]), 1.0)]).is_err());
        let signed = WeightFn::new(fam, [(s(&[]), q(-1)), (s(&[0]), q(2))]).unwrap();
        assert!(!signed.is_nonnegative());
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(alternating_sum(s(&[0, 1]), s(&[0, 1])).unwrap(), 1);
        assert_eq!(alternating_sum(s(&[]), s(&[0])).unwrap(), 0);
        assert_eq!(alternating_sum(s(&[0]), s(&[0, 1, 2])).unwrap(), 0);
        assert_eq!(alternating_sum(s(&[2]), s(&[2])).unwrap(), -1);
        assert!(matches!(
            alternating_sum(s(&[3]), s(&[0])),
            Err(Error::BadArguments(_))
        ));
    }
}
