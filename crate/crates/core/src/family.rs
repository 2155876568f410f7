//! Union-closed families of subsets (semilattices of sets).

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};

/// A finite family of subsets containing `∅` and closed under union.
///
/// Members are kept sorted by `(popcount, mask)`.
#[derive(Debug, Clone)]
pub struct SetFamily {
    ground: GroundSet,
    members: Vec<Subset>,
    index: HashMap<Subset, usize>,
}

impl PartialEq for SetFamily {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.members == other.members
    }
}

impl Eq for SetFamily {}

impl SetFamily {
    /// Validates an explicit member list. Duplicates are ignored.
    pub fn new(ground: GroundSet, members: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let members: BTreeSet<Subset> = members.into_iter().collect();
        for &m in &members {
            ground.check(m)?;
        }
        if !members.contains(&Subset::EMPTY) {
            return Err(Error::NotASemilattice("the empty set is missing".into()));
        }
        let list: Vec<Subset> = members.iter().copied().collect();
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                if !members.contains(&a.union(b)) {
                    return Err(Error::NotASemilattice(format!(
                        "{} ∪ {} = {} is missing",
                        ground.key(a),
                        ground.key(b),
                        ground.key(a.union(b))
                    )));
                }
            }
        }
        Ok(Self::from_sorted_unchecked(ground, list))
    }

    /// The full power set `2^M`.
    pub fn power_set(ground: GroundSet) -> Result<Self> {
        ground.check_dense()?;
        let mut members: Vec<Subset> = ground.all_subsets().collect();
        members.sort();
        Ok(Self::from_sorted_unchecked(ground, members))
    }

    pub(crate) fn from_sorted_unchecked(ground: GroundSet, members: Vec<Subset>) -> Self {
        let index = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        SetFamily {
            ground,
            members,
            index,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false: `∅` is a member of every family.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, subset: Subset) -> bool {
        self.index.contains_key(&subset)
    }

    /// Position of `subset` in member order.
    pub fn position(&self, subset: Subset) -> Option<usize> {
        self.index.get(&subset).copied()
    }

    /// Union of all members.
    pub fn top(&self) -> Subset {
        self.members.last().copied().unwrap_or(Subset::EMPTY)
    }
}

/// Smallest union-closed family containing `seeds` and `∅`.
pub fn union_closure(ground: &GroundSet, seeds: &[Subset]) -> Result<SetFamily> {
    let mut closed: HashSet<Subset> = HashSet::from([Subset::EMPTY]);
    for &seed in seeds {
        ground.check(seed)?;
        if closed.contains(&seed) {
            continue;
        }
        // Adding one generator to a closed family: F ∪ {A ∪ s : A ∈ F} is closed.
        let extra: Vec<Subset> = closed.iter().map(|a| a.union(seed)).collect();
        closed.extend(extra);
    }
    let mut members: Vec<Subset> = closed.into_iter().collect();
    members.sort();
    Ok(SetFamily::from_sorted_unchecked(ground.clone(), members))
}

/// True iff `family` lies in the ground set, contains `∅` and is closed under
/// pairwise union.
pub fn is_semilattice(ground: &GroundSet, family: &[Subset]) -> bool {
    let set: HashSet<Subset> = family.iter().copied().collect();
    if !set.contains(&Subset::EMPTY) || !set.iter().all(|&s| ground.contains(s)) {
        return false;
    }
    set.iter()
        .all(|&a| set.iter().all(|&b| set.contains(&a.union(b))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(idx: &[usize]) -> Subset {
        Subset::from_indices(idx.iter().copied())
    }

    // Element "1" is index 0, "2" is index 1, "3" is index 2.
    fn m3() -> GroundSet {
        GroundSet::with_labels(&["1", "2", "3"]).unwrap()
    }

    #[test]
    fn closure_of_two_singletons() {
        let fam = union_closure(&m3(), &[s(&[0]), s(&[1])]).unwrap();
        assert_eq!(fam.members(), &[s(&[]), s(&[0]), s(&[1]), s(&[0, 1])]);
    }

    #[test]
    fn closure_of_nothing_is_the_unit() {
        let fam = union_closure(&m3(), &[]).unwrap();
        assert_eq!(fam.members(), &[Subset::EMPTY]);
    }

    #[test]
    fn closure_of_overlapping_pairs() {
        let fam = union_closure(&m3(), &[s(&[0, 1]), s(&[1, 2])]).unwrap();
        assert_eq!(
            fam.members(),
            &[s(&[]), s(&[0, 1]), s(&[1, 2]), s(&[0, 1, 2])]
        );
    }

    #[test]
    fn closure_rejects_foreign_seeds() {
        assert!(union_closure(&m3(), &[s(&[5])]).is_err());
    }

    #[test]
    fn semilattice_validator() {
        let g = m3();
        assert!(is_semilattice(&g, &[s(&[]), s(&[0]), s(&[1]), s(&[0, 1])]));
        assert!(!is_semilattice(&g, &[s(&[]), s(&[0]), s(&[1])]));
        assert!(!is_semilattice(&g, &[s(&[0])]));
    }

    #[test]
    fn new_reports_the_missing_union() {
        let err = SetFamily::new(m3(), [s(&[]), s(&[0]), s(&[2])]).unwrap_err();
        assert!(err.to_string().contains("1,3"), "{err}");
        assert!(SetFamily::new(m3(), [s(&[0])]).is_err());
    }

    #[test]
    fn singletons_generate_the_power_set() {
        let g = m3();
        let fam = union_closure(&g, &[s(&[0]), s(&[1]), s(&[2])]).unwrap();
        assert_eq!(fam, SetFamily::power_set(g).unwrap());
        assert_eq!(fam.len(), 8);
    }
}
