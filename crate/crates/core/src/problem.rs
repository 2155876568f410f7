//! Text formats: JSON problem files and tab-separated transform tables.
//!
//! A problem file:
//!
//! ```json
//! {
//!   "ground": ["1", "2"],
//!   "family": [[], ["1"], ["2"], ["1", "2"]],
//!   "weights": { "": "1", "1": "2", "2": "3", "1,2": "4" },
//!   "scalar_kind": "rational"
//! }
//! ```
//!
//! Subset keys are labels joined by `,` in ground order; the empty set has the
//! empty key. Rational weights are `"p/q"` strings or integers.
//!
//! A transform table has optional `#` header lines followed by one
//! `key<TAB>value` row per subset, in mask order:
//!
//! ```text
//! # ground	1,2
//! # scalar	rational
//! 	1
//! 1	3
//! 2	4
//! 1,2	10
//! ```

#![allow(clippy::tabs_in_doc_comments)]

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{union_closure, SetFamily};
use crate::ground::{GroundSet, Subset};
use crate::scalar::{Scalar, ScalarKind};
use crate::transform::{SparseTable, WeightFn};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub ground: Vec<String>,
    pub family: Vec<Vec<String>>,
    pub weights: BTreeMap<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar_kind: Option<String>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files always serialize")
    }

    /// Builds a problem file from a weight function, keys in family order.
    pub fn from_weights<S: Scalar>(phi: &WeightFn<S>) -> Result<Self> {
        let ground = phi.ground();
        let labels = (0..ground.size()).map(|i| ground.label(i)).collect();
        let family = phi
            .family()
            .members()
            .iter()
            .map(|m| m.elements().map(|i| ground.label(i)).collect())
            .collect();
        let weights = phi
            .iter()
            .map(|(m, v)| (ground.key(m), serde_json::Value::String(v.to_string())))
            .collect();
        Ok(ProblemFile {
            ground: labels,
            family,
            weights,
            scalar_kind: Some(S::KIND.name().to_owned()),
        })
    }

    /// The scalar kind named in the file, defaulting to rational.
    pub fn scalar_kind(&self) -> Result<ScalarKind> {
        self.scalar_kind
            .as_deref()
            .map_or(Ok(ScalarKind::Rational), str::parse)
    }

    pub fn ground_set(&self) -> Result<GroundSet> {
        GroundSet::with_labels(&self.ground)
    }

    fn member(&self, ground: &GroundSet, labels: &[String]) -> Result<Subset> {
        let mut mask = Subset::EMPTY;
        for label in labels {
            let s = ground.parse_key(label).map_err(|_| {
                Error::BadArguments(format!("family member uses unknown label {label:?}"))
            })?;
            if s.len() != 1 {
                return Err(Error::BadArguments(format!(
                    "family member entry {label:?} is not a single label"
                )));
            }
            mask = mask.union(s);
        }
        Ok(mask)
    }

    /// Resolves the file into a validated weight function.
    ///
    /// With `close`, the listed members are closed under union first and
    /// members added by the closure get weight 0.
    pub fn weight_fn<S: Scalar>(&self, close: bool) -> Result<WeightFn<S>> {
        let ground = self.ground_set()?;
        let listed = self
            .family
            .iter()
            .map(|labels| self.member(&ground, labels))
            .collect::<Result<Vec<Subset>>>()?;
        let family = if close {
            union_closure(&ground, &listed)?
        } else {
            SetFamily::new(ground.clone(), listed.iter().copied()).map_err(|e| match e {
                Error::NotASemilattice(msg) => {
                    Error::NotASemilattice(format!("{msg} (use --close to add missing unions)"))
                }
                other => other,
            })?
        };
        let mut values: BTreeMap<Subset, S> = BTreeMap::new();
        for (key, raw) in &self.weights {
            let subset = ground.parse_key(key)?;
            if !family.contains(subset) {
                return Err(Error::InvalidWeights(format!(
                    "weight given for {key:?}, which is not a family member"
                )));
            }
            let text = match raw {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) => n.to_string(),
                other => {
                    return Err(Error::InvalidWeights(format!(
                        "weight for {key:?} must be a string or number, found {other}"
                    )))
                }
            };
            if values.insert(subset, S::parse(&text)?).is_some() {
                return Err(Error::InvalidWeights(format!(
                    "weight for {key:?} given twice under different spellings"
                )));
            }
        }
        let listed: HashSet<Subset> = listed.into_iter().chain([Subset::EMPTY]).collect();
        for &m in family.members() {
            if let std::collections::btree_map::Entry::Vacant(e) = values.entry(m) {
                if close && !listed.contains(&m) {
                    e.insert(S::zero());
                } else {
                    return Err(Error::InvalidWeights(format!(
                        "member {:?} has no weight",
                        ground.key(m)
                    )));
                }
            }
        }
        WeightFn::new(family, values)
    }
}

/// A transform table read from text.
#[derive(Debug, Clone, PartialEq)]
pub struct TableFile<S> {
    pub ground: GroundSet,
    pub scalar_kind: Option<ScalarKind>,
    pub rows: SparseTable<S>,
}

impl<S: Scalar> TableFile<S> {
    /// Parses a table. Without a `# ground` header the element order is the
    /// order in which labels first appear in the rows.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ground_labels: Option<Vec<String>> = None;
        let mut scalar_kind = None;
        let mut raw_rows: Vec<(usize, &str, &str)> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            if let Some(header) = line.strip_prefix('#') {
                let header = header.trim_start();
                let (name, value) = header.split_once('\t').unwrap_or((header, ""));
                match name.trim() {
                    "ground" => {
                        ground_labels =
                            Some(value.split(',').map(|l| l.trim().to_owned()).collect())
                    }
                    "scalar" => {
                        scalar_kind = Some(value.trim().parse().map_err(|e: Error| {
                            parse_error(line_no, 1 + line.find('\t').unwrap_or(0), e.to_string())
                        })?)
                    }
                    _ => {}
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line.split_once('\t').ok_or_else(|| {
                parse_error(
                    line_no,
                    1,
                    "expected a row of the form key<TAB>value".into(),
                )
            })?;
            raw_rows.push((line_no, key, value));
        }

        let labels = match ground_labels {
            Some(labels) => labels,
            None => {
                let mut seen: Vec<String> = Vec::new();
                for (_, key, _) in &raw_rows {
                    for label in key.split(',').map(str::trim).filter(|l| !l.is_empty()) {
                        if !seen.iter().any(|s| s == label) {
                            seen.push(label.to_owned());
                        }
                    }
                }
                seen
            }
        };
        let ground = if labels.is_empty() {
            GroundSet::new(0)?
        } else {
            GroundSet::with_labels(&labels)?
        };

        let mut rows = SparseTable::new();
        for (line_no, key, value) in raw_rows {
            let subset = ground
                .parse_key(key)
                .map_err(|e| parse_error(line_no, 1, e.to_string()))?;
            let value =
                S::parse(value).map_err(|e| parse_error(line_no, key.len() + 2, e.to_string()))?;
            if rows.insert(subset, value).is_some() {
                return Err(parse_error(
                    line_no,
                    1,
                    format!("duplicate row for {key:?}"),
                ));
            }
        }
        Ok(TableFile {
            ground,
            scalar_kind,
            rows,
        })
    }

    /// All `2^n` rows as a dense vector, or `IncompleteTable` naming the first
    /// missing key.
    pub fn dense(&self) -> Result<Vec<S>> {
        self.ground.check_dense()?;
        self.ground
            .all_subsets()
            .map(|x| {
                self.rows
                    .get(&x)
                    .cloned()
                    .ok_or_else(|| Error::IncompleteTable(format!("{:?}", self.ground.key(x))))
            })
            .collect()
    }
}

fn parse_error(line: usize, column: usize, message: String) -> Error {
    Error::Parse {
        line,
        column,
        message,
    }
}

/// Header lines identifying the ground set and scalar kind of a table.
pub fn table_header(ground: &GroundSet, kind: ScalarKind) -> String {
    let labels: Vec<String> = (0..ground.size()).map(|i| ground.label(i)).collect();
    format!("# ground\t{}\n# scalar\t{}\n", labels.join(","), kind)
}

/// `key<TAB>value` rows for the given subsets, in the order given.
pub fn table_rows<'a, S: Scalar + 'a>(
    ground: &GroundSet,
    rows: impl IntoIterator<Item = (Subset, &'a S)>,
) -> String {
    let mut out = String::new();
    for (x, v) in rows {
        writeln!(out, "{}\t{}", ground.key(x), v).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    const FOUR_POINT: &str = r#"{
  "ground": ["1", "2"],
  "family": [[], ["1"], ["2"], ["1", "2"]],
  "weights": {"": "1", "1": "2", "2": "3", "1,2": 4},
  "scalar_kind": "rational"
}"#;

    #[test]
    fn parses_the_four_point_problem() {
        let file = ProblemFile::parse(FOUR_POINT).unwrap();
        let phi: WeightFn<Rational> = file.weight_fn(false).unwrap();
        assert_eq!(phi.family().len(), 4);
        assert_eq!(phi.total_mass(), Rational::from_i64(10));
        assert_eq!(file.scalar_kind().unwrap(), ScalarKind::Rational);
    }

    #[test]
    fn json_errors_carry_positions() {
        let err = ProblemFile::parse("{\n  \"ground\": [\"a\",\n  oops").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_keys_are_named() {
        let text = FOUR_POINT.replace("\"1,2\": 4", "\"1,9\": 4");
        let err = ProblemFile::parse(&text)
            .unwrap()
            .weight_fn::<Rational>(false)
            .unwrap_err()
            .to_string();
        assert!(err.contains("1,9"), "{err}");
    }

    #[test]
    fn non_closed_families_need_close() {
        let text = r#"{"ground": ["a","b"], "family": [[], ["a"], ["b"]],
                       "weights": {"": "1", "a": "1", "b": "1"}}"#;
        let file = ProblemFile::parse(text).unwrap();
        let err = file.weight_fn::<Rational>(false).unwrap_err().to_string();
        assert!(err.contains("--close"), "{err}");
        let phi = file.weight_fn::<Rational>(true).unwrap();
        assert_eq!(
            phi.get(Subset::from_mask(0b11)),
            Some(&Rational::from_i64(0))
        );
    }

    #[test]
    fn missing_and_foreign_weights() {
        let missing = FOUR_POINT.replace(", \"1,2\": 4", "");
        assert!(ProblemFile::parse(&missing)
            .unwrap()
            .weight_fn::<Rational>(false)
            .is_err());
        let text = r#"{"ground": ["a","b"], "family": [[], ["a","b"]],
                       "weights": {"": "1", "a,b": "1", "a": "2"}}"#;
        assert!(ProblemFile::parse(text)
            .unwrap()
            .weight_fn::<Rational>(false)
            .is_err());
    }

    #[test]
    fn problem_files_round_trip_through_json() {
        let phi: WeightFn<Rational> = ProblemFile::parse(FOUR_POINT)
            .unwrap()
            .weight_fn(false)
            .unwrap();
        let again = ProblemFile::parse(&ProblemFile::from_weights(&phi).unwrap().to_json())
            .unwrap()
            .weight_fn::<Rational>(false)
            .unwrap();
        assert_eq!(phi, again);
    }

    #[test]
    fn tables_with_and_without_headers() {
        let with = "# ground\t1,2\n# scalar\trational\n\t1\n1\t3\n2\t4\n1,2\t10\n";
        let t: TableFile<Rational> = TableFile::parse(with).unwrap();
        assert_eq!(t.ground.size(), 2);
        assert_eq!(t.scalar_kind, Some(ScalarKind::Rational));
        assert_eq!(t.dense().unwrap().len(), 4);

        let without = "\t1\n1\t3\n2\t4\n1,2\t10\n";
        let u: TableFile<Rational> = TableFile::parse(without).unwrap();
        assert_eq!(u.rows, t.rows);
    }

    #[test]
    fn table_errors() {
        let bad_value: Result<TableFile<Rational>> = TableFile::parse("\t1\na\tx/y\n");
        assert!(matches!(bad_value, Err(Error::Parse { line: 2, .. })));
        let no_tab: Result<TableFile<Rational>> = TableFile::parse("a 1\n");
        assert!(matches!(no_tab, Err(Error::Parse { line: 1, .. })));
        let partial: TableFile<Rational> = TableFile::parse("# ground\ta,b\n\t1\na\t2\n").unwrap();
        assert!(matches!(partial.dense(), Err(Error::IncompleteTable(_))));
    }
}
