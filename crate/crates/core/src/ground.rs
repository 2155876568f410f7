//! Ground sets and bitmask-encoded subsets.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest ground set any operation accepts (one bit per element in a `u64`).
pub const MAX_GROUND: usize = 64;

/// Largest ground set for which dense `2^n` tables are built.
pub const DENSE_LIMIT: usize = 24;

/// A subset of a ground set; element `i` corresponds to bit `i`.
///
/// Ordering is by cardinality first and mask value second, which is the
/// iteration order used for family members everywhere in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_mask(mask: u64) -> Self {
        Subset(mask)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Subset(indices.into_iter().fold(0, |m, i| {
            assert!(i < MAX_GROUND, "element index {i} out of range");
            m | (1 << i)
        }))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, element: usize) -> bool {
        element < MAX_GROUND && self.0 & (1 << element) != 0
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub const fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub const fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full {
                None
            } else {
                Some(current.wrapping_sub(full) & full)
            };
            Some(Subset(current))
        })
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// A finite, indexed ground set `M`, optionally with element labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    size: usize,
    labels: Option<Arc<[String]>>,
}

impl GroundSet {
    /// Unlabeled ground set `{0, .., size-1}`.
    pub fn new(size: usize) -> Result<Self> {
        if size > MAX_GROUND {
            return Err(Error::TooLarge {
                what: format!("ground set of size {size}"),
                limit: MAX_GROUND,
            });
        }
        Ok(GroundSet { size, labels: None })
    }

    /// Labeled ground set; labels must be non-empty and pairwise distinct.
    pub fn with_labels<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidGround("no labels given".into()));
        }
        if labels.len() > MAX_GROUND {
            return Err(Error::TooLarge {
                what: format!("ground set of size {}", labels.len()),
                limit: MAX_GROUND,
            });
        }
        let mut seen = HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            let label = label.as_ref();
            if label.is_empty() || label.contains(',') || label.trim() != label {
                return Err(Error::InvalidGround(format!(
                    "label {label:?} must be non-empty, without commas or surrounding spaces"
                )));
            }
            if let Some(j) = seen.insert(label, i) {
                return Err(Error::InvalidGround(format!(
                    "duplicate label {label:?} at positions {j} and {i}"
                )));
            }
        }
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        Ok(GroundSet {
            size: labels.len(),
            labels: Some(labels.into()),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, element: usize) -> String {
        match &self.labels {
            Some(labels) => labels[element].clone(),
            None => element.to_string(),
        }
    }

    pub fn full(&self) -> Subset {
        Subset(if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        })
    }

    pub fn contains(&self, subset: Subset) -> bool {
        subset.is_subset_of(self.full())
    }

    pub fn complement(&self, subset: Subset) -> Subset {
        self.full().difference(subset)
    }

    pub fn check(&self, subset: Subset) -> Result<()> {
        if self.contains(subset) {
            Ok(())
        } else {
            Err(Error::BadArguments(format!(
                "{subset} is not a subset of a ground set of size {}",
                self.size
            )))
        }
    }

    /// Fails with `TooLarge` unless dense `2^n` tables are permitted.
    pub fn check_dense(&self) -> Result<()> {
        if self.size > DENSE_LIMIT {
            Err(Error::TooLarge {
                what: format!("dense table over a ground set of size {}", self.size),
                limit: DENSE_LIMIT,
            })
        } else {
            Ok(())
        }
    }

    /// Number of subsets, `2^size`. Only meaningful for dense sizes.
    pub fn dense_len(&self) -> usize {
        1usize << self.size
    }

    pub fn all_subsets(&self) -> impl Iterator<Item = Subset> {
        self.full().subsets()
    }

    /// Canonical key: labels of the members in element order, joined by `,`.
    /// The empty set has the empty key.
    pub fn key(&self, subset: Subset) -> String {
        subset
            .elements()
            .map(|i| self.label(i))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses a key produced by [`GroundSet::key`]. Labels may appear in any
    /// order; `{}` is accepted as an alias for the empty key.
    pub fn parse_key(&self, key: &str) -> Result<Subset> {
        let trimmed = key.trim();
        if trimmed.is_empty() || trimmed == "{}" {
            return Ok(Subset::EMPTY);
        }
        let mut mask = 0u64;
        for part in trimmed.split(',') {
            let part = part.trim();
            let index = match &self.labels {
                Some(labels) => labels.iter().position(|l| l == part),
                None => part.parse::<usize>().ok().filter(|&i| i < self.size),
            };
            match index {
                Some(i) if mask & (1 << i) == 0 => mask |= 1 << i,
                Some(_) => {
                    return Err(Error::BadArguments(format!(
                        "subset key {key:?} repeats label {part:?}"
                    )))
                }
                None => {
                    return Err(Error::BadArguments(format!(
                        "subset key {key:?} has unknown label {part:?}"
                    )))
                }
            }
        }
        Ok(Subset(mask))
    }
}

/// Builds a labeled ground set.
pub fn make_ground<S: AsRef<str>>(labels: &[S]) -> Result<GroundSet> {
    GroundSet::with_labels(labels)
}
