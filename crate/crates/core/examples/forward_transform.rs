//! Forward transform of a weight function on a small union-closed family.
//!
//! Run with `cargo run --example forward_transform`.

use semilattice_laplace::{
    laplace_forward, make_ground, transform_table, union_closure, Rational, Result, Subset,
    WeightFn,
};

fn main() -> Result<()> {
    let ground = make_ground(&["a", "b", "c"])?;
    let key = |k: &str| ground.parse_key(k);

    // Seeds {a}, {b,c}; the closure adds ∅ and {a,b,c}.
    let family = union_closure(&ground, &[key("a")?, key("b,c")?])?;
    println!("family:");
    for &m in family.members() {
        println!("  {{{}}}", ground.key(m));
    }

    let phi = WeightFn::new(
        family.clone(),
        [
            (Subset::EMPTY, Rational::from(1)),
            (key("a")?, Rational::from(2)),
            (key("b,c")?, "1/3".parse::<Rational>().unwrap()),
            (key("a,b,c")?, Rational::from(5)),
        ],
    )?;

    // One value at a time...
    let x = key("a,b")?;
    println!("f({{{}}}) = {}", ground.key(x), laplace_forward(&phi, x));

    // ...or the whole table with the butterfly kernel.
    let table = transform_table(&phi)?;
    println!("\nX\tf(X)");
    for x in ground.all_subsets() {
        println!("{{{}}}\t{}", ground.key(x), table.get(x));
    }
    println!("\ntotal mass f(M) = {}", table.get(ground.full()));
    Ok(())
}
