//! Semicharacters of set semilattices.
//!
//! On a union-closed family every semicharacter is `{0,1}`-valued and has the
//! form `ψ_X(A) = 1 ⟺ A ⊆ X`. Distinct `X` may induce the same function on the
//! family, so a semicharacter is identified by its canonical support
//! `∪{B ∈ 𝒮 : B ⊆ X}`, which is itself a member of the family.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::Subset;

/// Above this many canonical supports enumeration is refused.
pub const MAX_SEMICHARACTERS: usize = 1 << 20;

#[derive(Debug, Clone, Copy)]
pub struct Semicharacter<'a> {
    family: &'a SetFamily,
    defining: Subset,
    support: Subset,
}

impl<'a> Semicharacter<'a> {
    /// `ψ_X` on `family`. `X` may be any subset of the ground set.
    pub fn new(family: &'a SetFamily, defining: Subset) -> Result<Self> {
        family.ground().check(defining)?;
        Ok(Semicharacter {
            family,
            defining,
            support: canonicalize(family, defining),
        })
    }

    /// The constant semicharacter `ψ ≡ 1`, i.e. `ψ_M`.
    pub fn unit(family: &'a SetFamily) -> Self {
        let full = family.ground().full();
        Semicharacter {
            family,
            defining: full,
            support: canonicalize(family, full),
        }
    }

    pub fn family(&self) -> &'a SetFamily {
        self.family
    }

    pub fn defining_set(&self) -> Subset {
        self.defining
    }

    pub fn support(&self) -> Subset {
        self.support
    }

    /// `ψ(A)`: 1 if `A ⊆ X`, else 0.
    pub fn evaluate(&self, a: Subset) -> Result<u8> {
        if !self.family.contains(a) {
            return Err(Error::NotInFamily(a));
        }
        Ok(u8::from(a.is_subset_of(self.defining)))
    }

    /// Members on which `ψ` equals 1, in family order.
    pub fn kernel_members(&self) -> impl Iterator<Item = Subset> + '_ {
        self.family
            .members()
            .iter()
            .copied()
            .filter(|a| a.is_subset_of(self.defining))
    }
}

/// Two semicharacters are equal when they agree on the family, i.e. when their
/// canonical supports coincide.
impl PartialEq for Semicharacter<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.support == other.support
    }
}

impl Eq for Semicharacter<'_> {}

/// `∪{B ∈ 𝒮 : B ⊆ X}`.
pub fn canonicalize(family: &SetFamily, x: Subset) -> Subset {
    family
        .members()
        .iter()
        .filter(|b| b.is_subset_of(x))
        .fold(Subset::EMPTY, |acc, &b| acc.union(b))
}

/// Recovers the support of a semicharacter given by its values on the family.
///
/// The values must cover every member, lie in `{0,1}`, equal 1 at `∅` and be
/// multiplicative.
pub fn support(family: &SetFamily, values: &HashMap<Subset, u8>) -> Result<Subset> {
    let value_of = |a: Subset| -> Result<u8> {
        match values.get(&a) {
            Some(&v) if v <= 1 => Ok(v),
            Some(&v) => Err(Error::NotASemicharacter(format!(
                "value {v} at {} is not 0 or 1",
                family.ground().key(a)
            ))),
            None => Err(Error::NotASemicharacter(format!(
                "no value given for member {:?}",
                family.ground().key(a)
            ))),
        }
    };
    if let Some(extra) = values.keys().find(|k| !family.contains(**k)) {
        return Err(Error::NotInFamily(*extra));
    }
    if value_of(Subset::EMPTY)? != 1 {
        return Err(Error::NotASemicharacter(
            "value at the empty set must be 1".into(),
        ));
    }
    let members = family.members();
    for (i, &a) in members.iter().enumerate() {
        let va = value_of(a)?;
        for &b in &members[i + 1..] {
            let vb = value_of(b)?;
            let vab = value_of(a.union(b))?;
            if vab != va * vb {
                return Err(Error::NotASemicharacter(format!(
                    "ψ({}) = {vab} but ψ({})·ψ({}) = {}",
                    family.ground().key(a.union(b)),
                    family.ground().key(a),
                    family.ground().key(b),
                    va * vb
                )));
            }
        }
    }
    Ok(members
        .iter()
        .filter(|a| values[a] == 1)
        .fold(Subset::EMPTY, |acc, &a| acc.union(a)))
}

/// One semicharacter per canonical support.
///
/// Canonical supports are exactly the members of the family: every member is
/// its own canonical support and `canonicalize` always returns a member.
pub fn enumerate_semicharacters(family: &SetFamily) -> Result<Vec<Semicharacter<'_>>> {
    if family.len() > MAX_SEMICHARACTERS {
        return Err(Error::TooLarge {
            what: format!("{} canonical supports", family.len()),
            limit: MAX_SEMICHARACTERS,
        });
    }
    Ok(family
        .members()
        .iter()
        .map(|&m| Semicharacter {
            family,
            defining: m,
            support: m,
        })
        .collect())
}
