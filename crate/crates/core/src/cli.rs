//! Command implementations behind the `laplace` binary.
//!
//! Each command reads its inputs from strings and writes its report to a
//! writer, so the binary stays a thin argument parser. Exit codes: 0 success,
//! 1 a MISMATCH verdict, 2 an input error.

use std::io::{self, Write};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::demo::inclusion_exclusion;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::inversion::{invert_measure, invert_point, mobius_fast, FamilyMeasureQuery};
use crate::oracle::{naive_mobius, naive_zeta, oracle_base_measure};
use crate::problem::{table_header, table_rows, ProblemFile, TableFile};
use crate::scalar::{Rational, Scalar, ScalarKind};
use crate::stone::{invert_base_measure, BaseSet, PointMeasure, StoneModel};
use crate::transform::{transform_table, zeta_fast, zeta_sparse, WeightFn};

/// Largest ground set for which the bench also runs the naive kernels.
pub const BENCH_ORACLE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Mismatch,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Mismatch => 1,
        }
    }
}

pub const INPUT_ERROR_EXIT: i32 = 2;

fn io_err(e: io::Error) -> Error {
    Error::BadArguments(format!("write failed: {e}"))
}

#[derive(Debug, Clone, Default)]
pub struct TransformOptions {
    pub queries: Vec<String>,
    pub all: bool,
    pub close: bool,
    pub scalar: Option<ScalarKind>,
}

/// `transform`: rows `key<TAB>f(key)` in mask order.
pub fn cmd_transform(
    problem: &str,
    opts: &TransformOptions,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let file = ProblemFile::parse(problem)?;
    match opts.scalar.map_or_else(|| file.scalar_kind(), Ok)? {
        ScalarKind::Rational => transform_with::<Rational>(&file, opts, out),
        ScalarKind::Float => transform_with::<f64>(&file, opts, out),
    }
}

fn transform_with<S: Scalar>(
    file: &ProblemFile,
    opts: &TransformOptions,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let phi: WeightFn<S> = file.weight_fn(opts.close)?;
    let ground = phi.ground();
    let body = if opts.all {
        if !opts.queries.is_empty() {
            return Err(Error::BadArguments(
                "--all cannot be combined with subset keys".into(),
            ));
        }
        let table = transform_table(&phi)?;
        table_rows(ground, ground.all_subsets().zip(table.values()))
    } else {
        let queries = sorted_queries(ground, &opts.queries)?;
        let values = zeta_sparse(&phi, &queries);
        table_rows(ground, queries.into_iter().zip(&values))
    };
    out.write_all(table_header(ground, S::KIND).as_bytes())
        .and_then(|_| out.write_all(body.as_bytes()))
        .map_err(io_err)?;
    Ok(Outcome::Success)
}

fn sorted_queries(ground: &GroundSet, keys: &[String]) -> Result<Vec<Subset>> {
    if keys.is_empty() {
        return Err(Error::BadArguments(
            "no subset keys given (or use --all)".into(),
        ));
    }
    let mut subsets = keys
        .iter()
        .map(|k| ground.parse_key(k))
        .collect::<Result<Vec<_>>>()?;
    subsets.sort_by_key(|s| s.mask());
    subsets.dedup();
    Ok(subsets)
}

#[derive(Debug, Clone, Default)]
pub struct InvertOptions {
    pub queries: Vec<String>,
    pub all: bool,
    pub family: bool,
    pub scalar: Option<ScalarKind>,
}

/// `invert`: `Φ(A)` per queried key, all `2^n` densities with `--all`, or the
/// family measure `μ_Φ(𝒜)` of the queried keys with `--family`.
pub fn cmd_invert(table: &str, opts: &InvertOptions, out: &mut dyn Write) -> Result<Outcome> {
    let header_kind = TableFile::<f64>::parse(table)
        .ok()
        .and_then(|t| t.scalar_kind);
    match opts.scalar.or(header_kind).unwrap_or_default() {
        ScalarKind::Rational => invert_with::<Rational>(table, opts, out),
        ScalarKind::Float => invert_with::<f64>(table, opts, out),
    }
}

fn invert_with<S: Scalar>(
    text: &str,
    opts: &InvertOptions,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let table: TableFile<S> = TableFile::parse(text)?;
    let ground = &table.ground;
    let report = if opts.all {
        if opts.family || !opts.queries.is_empty() {
            return Err(Error::BadArguments(
                "--all cannot be combined with --family or subset keys".into(),
            ));
        }
        let dense = crate::transform::TransformTable::new(ground.clone(), table.dense()?)?;
        let phi = mobius_fast(&dense)?;
        table_rows(ground, ground.all_subsets().zip(&phi))
    } else if opts.family {
        let query = FamilyMeasureQuery::new(sorted_queries(ground, &opts.queries)?)?;
        let value = invert_measure(&table.rows, &query).map_err(|e| name_missing(ground, e))?;
        format!("measure\t{value}\n")
    } else {
        let queries = sorted_queries(ground, &opts.queries)?;
        let values = queries
            .iter()
            .map(|&a| invert_point(&table.rows, a).map_err(|e| name_missing(ground, e)))
            .collect::<Result<Vec<S>>>()?;
        table_rows(ground, queries.into_iter().zip(&values))
    };
    out.write_all(report.as_bytes()).map_err(io_err)?;
    Ok(Outcome::Success)
}

/// Rewrites `IncompleteTable` errors to use label keys instead of indices.
fn name_missing(ground: &GroundSet, e: Error) -> Error {
    match e {
        Error::IncompleteTable(index_form) => {
            let indices = index_form
                .trim_matches(|c| c == '{' || c == '}')
                .split(',')
                .filter_map(|i| i.parse::<usize>().ok());
            Error::IncompleteTable(format!("{:?}", ground.key(Subset::from_indices(indices))))
        }
        other => other,
    }
}

#[derive(Debug, Clone, Default)]
pub struct BaseMeasureOptions {
    pub exclude: String,
    pub hits: Vec<String>,
    pub close: bool,
    pub scalar: Option<ScalarKind>,
}

/// `base-measure`: `μ(𝒱(F; U₁,…,Uₙ))` from the difference-operator inverse
/// next to the direct sum over the base set, with a verdict.
///
/// The transform is computed from the problem's weights unless `table` is
/// given, in which case the inverse reads the table instead.
pub fn cmd_base_measure(
    problem: &str,
    table: Option<&str>,
    opts: &BaseMeasureOptions,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let file = ProblemFile::parse(problem)?;
    match opts.scalar.map_or_else(|| file.scalar_kind(), Ok)? {
        ScalarKind::Rational => base_measure_with::<Rational>(&file, table, opts, out),
        ScalarKind::Float => base_measure_with::<f64>(&file, table, opts, out),
    }
}

fn base_measure_with<S: Scalar>(
    file: &ProblemFile,
    table: Option<&str>,
    opts: &BaseMeasureOptions,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let phi: WeightFn<S> = file.weight_fn(opts.close)?;
    let ground = phi.ground().clone();
    let model = StoneModel::new(phi.family().clone());
    let mu = PointMeasure::from_weights(&phi)?;
    let exclude = ground.parse_key(&opts.exclude)?;
    let hits = opts
        .hits
        .iter()
        .map(|k| ground.parse_key(k))
        .collect::<Result<Vec<_>>>()?;
    let v = BaseSet::new(exclude, hits)?;

    let inverse = match table {
        Some(text) => {
            let t: TableFile<S> = TableFile::parse(text)?;
            if t.ground != ground {
                return Err(Error::BadArguments(
                    "table ground set differs from the problem's".into(),
                ));
            }
            invert_base_measure(&model, &t.rows, &v).map_err(|e| name_missing(&ground, e))?
        }
        None => invert_base_measure(&model, &mu.transform(), &v)?,
    };
    let direct = oracle_base_measure(&model, &mu, &v);
    let matches = match S::KIND {
        ScalarKind::Rational => inverse == direct,
        ScalarKind::Float => {
            let scale = mu.total_mass().to_f64().max(1.0);
            (inverse.to_f64() - direct.to_f64()).abs() <= 1e-9 * scale
        }
    };
    writeln!(out, "inverse\t{inverse}").map_err(io_err)?;
    writeln!(out, "oracle\t{direct}").map_err(io_err)?;
    writeln!(out, "{}", if matches { "MATCH" } else { "MISMATCH" }).map_err(io_err)?;
    Ok(if matches {
        Outcome::Success
    } else {
        Outcome::Mismatch
    })
}

/// `bench`: mean wall time per kernel as `kernel,n,millis` lines.
///
/// The naive `O(3^n)` kernels run only for `n ≤ 16`, and their output is
/// checked against the fast kernels.
pub fn cmd_bench(n: usize, reps: usize, out: &mut dyn Write) -> Result<Outcome> {
    if !(4..=crate::ground::DENSE_LIMIT).contains(&n) {
        return Err(Error::BadArguments(format!(
            "bench size {n} is outside 4..={}",
            crate::ground::DENSE_LIMIT
        )));
    }
    if reps == 0 {
        return Err(Error::BadArguments("reps must be at least 1".into()));
    }
    let ground = GroundSet::new(n)?;
    let mut rng = StdRng::seed_from_u64(0x5eed ^ n as u64);
    let input: Vec<f64> = (0..ground.dense_len())
        .map(|_| rng.gen_range(-1.0..1.0))
        .collect();

    let time = |f: &mut dyn FnMut()| {
        let start = Instant::now();
        for _ in 0..reps {
            f();
        }
        start.elapsed().as_secs_f64() * 1e3 / reps as f64
    };

    let mut table = None;
    let zeta_ms =
        time(&mut || table = Some(zeta_fast(&ground, input.clone()).expect("dense size")));
    let table = table.expect("ran at least once");
    let mut back = Vec::new();
    let mobius_ms = time(&mut || back = mobius_fast(&table).expect("dense size"));

    writeln!(out, "zeta_fast,{n},{zeta_ms:.3}").map_err(io_err)?;
    writeln!(out, "mobius_fast,{n},{mobius_ms:.3}").map_err(io_err)?;

    let mut outcome = Outcome::Success;
    if n <= BENCH_ORACLE_LIMIT {
        let mut naive_z = Vec::new();
        let naive_zeta_ms = time(&mut || naive_z = naive_zeta(&input));
        let mut naive_m = Vec::new();
        let naive_mobius_ms = time(&mut || naive_m = naive_mobius(table.values()));
        writeln!(out, "naive_zeta,{n},{naive_zeta_ms:.3}").map_err(io_err)?;
        writeln!(out, "naive_mobius,{n},{naive_mobius_ms:.3}").map_err(io_err)?;
        let scale: f64 = input.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
        let close =
            |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-9 * scale);
        if !(close(&naive_z, table.values()) && close(&naive_m, &back)) {
            outcome = Outcome::Mismatch;
        }
    }
    if !input.iter().zip(&back).all(|(x, y)| (x - y).abs() <= 1e-9) {
        outcome = Outcome::Mismatch;
    }
    writeln!(
        out,
        "# {}",
        if outcome == Outcome::Success {
            "kernels agree"
        } else {
            "MISMATCH"
        }
    )
    .map_err(io_err)?;
    Ok(outcome)
}

/// `demo-ie`: three sets given as label keys over `universe` (or, if the
/// universe is empty, over the labels they mention in order of appearance).
pub fn cmd_demo_inclusion_exclusion(
    universe: &[String],
    sets: [&str; 3],
    out: &mut dyn Write,
) -> Result<Outcome> {
    let labels: Vec<String> = if universe.is_empty() {
        let mut seen: Vec<String> = Vec::new();
        for key in sets {
            for label in key.split(',').map(str::trim).filter(|l| !l.is_empty()) {
                if !seen.iter().any(|s| s == label) {
                    seen.push(label.to_owned());
                }
            }
        }
        seen
    } else {
        universe.to_vec()
    };
    let ground = if labels.is_empty() {
        GroundSet::new(0)?
    } else {
        GroundSet::with_labels(&labels)?
    };
    let parsed = [
        ground.parse_key(sets[0])?,
        ground.parse_key(sets[1])?,
        ground.parse_key(sets[2])?,
    ];
    let report = inclusion_exclusion(&ground, parsed)?;
    out.write_all(report.render().as_bytes()).map_err(io_err)?;
    Ok(if report.consistent() {
        Outcome::Success
    } else {
        Outcome::Mismatch
    })
}
