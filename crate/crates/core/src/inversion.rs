//! Recovering weights and family measures from transform values.
//!
//! `Φ(A) = Σ_{X ⊆ A} (-1)^{|A|+|X|} f(X)` needs `f` at every subset of `A`,
//! members of the family or not, so the inverse takes any [`SetFunction`].

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::Subset;
use crate::scalar::Scalar;
use crate::transform::{butterfly, check_len, SetFunction, TransformTable};

/// A finite family `𝒜` of distinct sets whose measure is requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMeasureQuery {
    sets: Vec<Subset>,
}

impl FamilyMeasureQuery {
    pub fn new(sets: Vec<Subset>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(sets.len());
        if let Some(dup) = sets.iter().find(|s| !seen.insert(**s)) {
            return Err(Error::BadArguments(format!(
                "{dup} appears twice in the query"
            )));
        }
        Ok(FamilyMeasureQuery { sets })
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }
}

/// `(-1)^{|A|} Σ_{X ⊆ A} (-1)^{|X|} f(X)`, using `2^{|A|}` queries.
pub fn invert_point<S: Scalar, F: SetFunction<S> + ?Sized>(f: &F, a: Subset) -> Result<S> {
    let mut total = S::zero();
    for x in a.subsets() {
        let v = f
            .value(x)
            .ok_or_else(|| Error::IncompleteTable(x.to_string()))?;
        if a.difference(x).len().is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

/// `μ_Φ(𝒜) = Σ_{A ∈ 𝒜} Σ_{X ⊆ A} (-1)^{|A|+|X|} f(X)`.
///
/// Sets outside the family contribute the zero-extended density, which is 0
/// whenever `f` is the transform of weights supported on the family.
pub fn invert_measure<S: Scalar, F: SetFunction<S> + ?Sized>(
    f: &F,
    query: &FamilyMeasureQuery,
) -> Result<S> {
    query
        .sets()
        .iter()
        .try_fold(S::zero(), |acc, &a| Ok(acc + invert_point(f, a)?))
}

/// [`invert_measure`] that rejects query sets outside `family`.
pub fn invert_measure_strict<S: Scalar, F: SetFunction<S> + ?Sized>(
    family: &SetFamily,
    f: &F,
    query: &FamilyMeasureQuery,
) -> Result<S> {
    if let Some(&outside) = query.sets().iter().find(|a| !family.contains(**a)) {
        return Err(Error::NotInFamily(outside));
    }
    invert_measure(f, query)
}

/// Möbius transform of a dense table: `output[A] = invert_point(table, A)` for
/// every mask, in `O(n·2^n)` subtractions.
pub fn mobius_fast<S: Scalar>(table: &TransformTable<S>) -> Result<Vec<S>> {
    let mut values = table.values().to_vec();
    mobius_in_place(&mut values);
    Ok(values)
}

/// In-place variant of [`mobius_fast`] over a raw `2^n` array.
pub fn mobius_dense<S: Scalar>(
    ground: &crate::ground::GroundSet,
    mut values: Vec<S>,
) -> Result<Vec<S>> {
    ground.check_dense()?;
    check_len(ground, values.len())?;
    mobius_in_place(&mut values);
    Ok(values)
}

fn mobius_in_place<S: Scalar>(values: &mut [S]) {
    butterfly(values, |lo, hi| *hi -= lo);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::scalar::Rational;
    use crate::transform::{transform_table, zeta_fast, FnSetFunction, WeightFn};

    fn s(idx: &[usize]) -> Subset {
        Subset::from_indices(idx.iter().copied())
    }

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn four_point_table() -> TransformTable<Rational> {
        let fam = SetFamily::power_set(GroundSet::new(2).unwrap()).unwrap();
        let phi = WeightFn::from_values(fam, vec![q(1), q(2), q(3), q(4)]).unwrap();
        transform_table(&phi).unwrap()
    }

    #[test]
    fn constant_one_inverts_to_point_mass_at_empty() {
        let f = FnSetFunction(|_| Some(q(1)));
        assert_eq!(invert_point(&f, Subset::EMPTY).unwrap(), q(1));
        assert_eq!(invert_point(&f, s(&[0])).unwrap(), q(0));
    }

    #[test]
    fn four_point_recovery() {
        let table = four_point_table();
        assert_eq!(invert_point(&table, s(&[0, 1])).unwrap(), q(4));
        assert_eq!(invert_point(&table, s(&[0])).unwrap(), q(2));
    }

    #[test]
    fn measure_queries() {
        let f = FnSetFunction(|_| Some(q(1)));
        let unit = FamilyMeasureQuery::new(vec![Subset::EMPTY]).unwrap();
        assert_eq!(invert_measure(&f, &unit).unwrap(), q(1));

        let table = four_point_table();
        let all =
            FamilyMeasureQuery::new(GroundSet::new(2).unwrap().all_subsets().collect()).unwrap();
        assert_eq!(invert_measure(&table, &all).unwrap(), q(10));

        let pair = FamilyMeasureQuery::new(vec![s(&[0]), s(&[1])]).unwrap();
        assert_eq!(invert_measure(&table, &pair).unwrap(), q(5));
    }

    #[test]
    fn duplicate_query_sets_are_rejected() {
        assert!(FamilyMeasureQuery::new(vec![s(&[0]), s(&[0])]).is_err());
    }

    #[test]
    fn strict_mode_rejects_non_members() {
        let g = GroundSet::new(2).unwrap();
        let fam = crate::family::union_closure(&g, &[s(&[0, 1])]).unwrap();
        let phi = WeightFn::from_values(fam.clone(), vec![q(2), q(5)]).unwrap();
        let f = phi.transform();
        let query = FamilyMeasureQuery::new(vec![s(&[0]), s(&[0, 1])]).unwrap();
        assert_eq!(invert_measure(&f, &query).unwrap(), q(5));
        assert_eq!(
            invert_measure_strict(&fam, &f, &query),
            Err(Error::NotInFamily(s(&[0])))
        );
    }

    #[test]
    fn missing_rows_are_reported() {
        let mut table = crate::transform::SparseTable::new();
        table.insert(Subset::EMPTY, q(1));
        assert!(matches!(
            invert_point(&table, s(&[0])),
            Err(Error::IncompleteTable(_))
        ));
    }

    #[test]
    fn mobius_round_trips() {
        let g = GroundSet::new(3).unwrap();
        let mut point = vec![q(0); 8];
        point[5] = q(1);
        let table = zeta_fast(&g, point.clone()).unwrap();
        assert_eq!(mobius_fast(&table).unwrap(), point);

        let ones = TransformTable::new(GroundSet::new(2).unwrap(), vec![q(1); 4]).unwrap();
        assert_eq!(mobius_fast(&ones).unwrap(), vec![q(1), q(0), q(0), q(0)]);
    }

    #[test]
    fn mobius_agrees_with_pointwise_inversion() {
        let table = four_point_table();
        let fast = mobius_fast(&table).unwrap();
        for a in table.ground().all_subsets() {
            assert_eq!(fast[a.mask() as usize], invert_point(&table, a).unwrap());
        }
    }
}
