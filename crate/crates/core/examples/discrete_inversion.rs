//! Recover weights from transform values by alternating sums over subsets.
//!
//! Run with `cargo run --example discrete_inversion`.

use semilattice_laplace::{
    invert_measure, invert_point, make_ground, mobius_fast, transform_table, union_closure,
    FamilyMeasureQuery, Rational, Result, WeightFn,
};

fn main() -> Result<()> {
    let ground = make_ground(&["x", "y", "z"])?;
    let key = |k: &str| ground.parse_key(k);
    let family = union_closure(&ground, &[key("x")?, key("y")?, key("z")?])?;

    // Weight |A|² on every member.
    let phi = WeightFn::new(
        family.clone(),
        family
            .members()
            .iter()
            .map(|&a| (a, Rational::from((a.len() * a.len()) as i64))),
    )?;
    let f = phi.transform();

    for k in ["", "x", "x,y", "x,y,z"] {
        let a = key(k)?;
        println!("Φ({{{k}}}) = {}", invert_point(&f, a)?);
    }

    // Summing recovered weights over a family of sets.
    let pairs = FamilyMeasureQuery::new(vec![key("x,y")?, key("x,z")?, key("y,z")?])?;
    println!(
        "measure of the three pairs = {}",
        invert_measure(&f, &pairs)?
    );

    // Dense inverse of the full table gives every weight at once.
    let table = transform_table(&phi)?;
    let recovered = mobius_fast(&table)?;
    assert!(family
        .members()
        .iter()
        .all(|&a| &recovered[a.mask() as usize] == phi.get(a).unwrap()));
    println!("dense inverse agrees on all {} members", family.len());
    Ok(())
}
