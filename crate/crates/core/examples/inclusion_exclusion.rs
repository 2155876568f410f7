//! |A ∪ B ∪ C| two ways: classic inclusion-exclusion with every intersection
//! size taken from a difference-operator inverse, and the alternating-sum
//! inverse over nonempty index patterns.
//!
//! Run with `cargo run --example inclusion_exclusion`.

use semilattice_laplace::demo::inclusion_exclusion;
use semilattice_laplace::{make_ground, Result};

fn main() -> Result<()> {
    let labels: Vec<String> = (1..=10).map(|i| i.to_string()).collect();
    let universe = make_ground(&labels)?;
    let sets = [
        universe.parse_key("1,2,3,4,5")?,
        universe.parse_key("4,5,6,7")?,
        universe.parse_key("1,5,7,9")?,
    ];
    let report = inclusion_exclusion(&universe, sets)?;
    print!("{}", report.render());
    assert!(report.consistent());
    Ok(())
}
