//! Brute-force reference implementations.
//!
//! These deliberately avoid the crate's subset helpers and kernels: element
//! membership is tested bit by bit, subsets are generated recursively or by
//! naive submask walks, and signs come from a local popcount. They are slow on
//! purpose and exist to check the fast paths.

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};
use crate::scalar::Scalar;
use crate::stone::{BaseSet, PointMeasure, StoneModel};
use crate::transform::{SetFunction, WeightFn};

/// Largest ground set for [`enumerate_union_closed_families`].
pub const MAX_ENUMERATED_GROUND: usize = 4;

fn bit(mask: u64, i: usize) -> bool {
    (mask >> i) & 1 == 1
}

fn count_bits(mut mask: u64) -> usize {
    let mut n = 0;
    while mask != 0 {
        n += (mask & 1) as usize;
        mask >>= 1;
    }
    n
}

fn contained(a: u64, x: u64) -> bool {
    (0..64).all(|i| !bit(a, i) || bit(x, i))
}

fn meets(a: u64, b: u64) -> bool {
    (0..64).any(|i| bit(a, i) && bit(b, i))
}

fn subsets_of(a: u64) -> Vec<u64> {
    fn go(elements: &[usize], prefix: u64, out: &mut Vec<u64>) {
        match elements.split_first() {
            None => out.push(prefix),
            Some((&e, rest)) => {
                go(rest, prefix, out);
                go(rest, prefix | (1 << e), out);
            }
        }
    }
    let elements: Vec<usize> = (0..64).filter(|&i| bit(a, i)).collect();
    let mut out = Vec::with_capacity(1 << elements.len());
    go(&elements, 0, &mut out);
    out
}

/// Literal sum of `Φ(A)` over members `A ⊆ X`.
pub fn oracle_forward<S: Scalar>(phi: &WeightFn<S>, x: Subset) -> S {
    let mut total = S::zero();
    for &a in phi.family().members() {
        if contained(a.mask(), x.mask()) {
            total += phi.get(a).expect("member has a weight").clone();
        }
    }
    total
}

/// `Σ_{X ⊆ A} (-1)^{|A|+|X|} f(X)` with subsets generated recursively.
pub fn oracle_invert<S: Scalar, F: SetFunction<S> + ?Sized>(f: &F, a: Subset) -> Result<S> {
    let size_a = count_bits(a.mask());
    let mut total = S::zero();
    for x in subsets_of(a.mask()) {
        let v = f
            .value(Subset::from_mask(x))
            .ok_or_else(|| Error::IncompleteTable(Subset::from_mask(x).to_string()))?;
        if (size_a + count_bits(x)).is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

/// Sum of atom weights over members satisfying the base-set predicate.
pub fn oracle_base_measure<S: Scalar>(model: &StoneModel, mu: &PointMeasure<S>, v: &BaseSet) -> S {
    let mut total = S::zero();
    for &a in model.family().members() {
        let avoids = !meets(a.mask(), v.exclude().mask());
        let hits_all = v.hits().iter().all(|u| meets(a.mask(), u.mask()));
        if avoids && hits_all {
            total += mu.weight(a);
        }
    }
    total
}

/// Naive `O(3^n)` subset sums over a dense array.
pub fn naive_zeta<S: Scalar>(dense: &[S]) -> Vec<S> {
    let len = dense.len() as u64;
    (0..len)
        .map(|x| {
            let mut total = S::zero();
            let mut sub = x;
            loop {
                total += dense[sub as usize].clone();
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & x;
            }
            total
        })
        .collect()
}

/// Naive `O(3^n)` alternating subset sums over a dense array.
pub fn naive_mobius<S: Scalar>(dense: &[S]) -> Vec<S> {
    let len = dense.len() as u64;
    (0..len)
        .map(|a| {
            let mut total = S::zero();
            let mut sub = a;
            loop {
                let v = dense[sub as usize].clone();
                if count_bits(a ^ sub).is_multiple_of(2) {
                    total += v;
                } else {
                    total -= v;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & a;
            }
            total
        })
        .collect()
}

/// Every union-closed family over `ground` that contains `∅`, ordered by the
/// bitset of its members.
pub fn enumerate_union_closed_families(ground: &GroundSet) -> Result<Vec<SetFamily>> {
    let n = ground.size();
    if n > MAX_ENUMERATED_GROUND {
        return Err(Error::TooLarge {
            what: format!("family enumeration over a ground set of size {n}"),
            limit: MAX_ENUMERATED_GROUND,
        });
    }
    let subsets = 1usize << n;
    let mut families = Vec::new();
    // Bit k of `choice` selects subset mask k; bit 0 (the empty set) is forced.
    for choice in 0u64..(1u64 << subsets) {
        if !bit(choice, 0) {
            continue;
        }
        let closed = (0..subsets).all(|a| {
            !bit(choice, a) || (0..subsets).all(|b| !bit(choice, b) || bit(choice, a | b))
        });
        if closed {
            let members = (0..subsets)
                .filter(|&k| bit(choice, k))
                .map(|k| Subset::from_mask(k as u64));
            families.push(SetFamily::new(ground.clone(), members)?);
        }
    }
    Ok(families)
}
