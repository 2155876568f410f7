//! Every {0,1}-valued multiplicative function on a union-closed family is
//! indexed by exactly one member: its support.
//!
//! Run with `cargo run --example semicharacters`.

use semilattice_laplace::{
    canonicalize, enumerate_semicharacters, make_ground, union_closure, Result,
};

fn main() -> Result<()> {
    let ground = make_ground(&["1", "2", "3", "4"])?;
    let key = |k: &str| ground.parse_key(k);
    let family = union_closure(&ground, &[key("1,2")?, key("2,3")?, key("4")?])?;
    println!(
        "{} members, {} semicharacters\n",
        family.len(),
        enumerate_semicharacters(&family)?.len()
    );

    for psi in enumerate_semicharacters(&family)? {
        let ones: Vec<String> = psi
            .kernel_members()
            .map(|m| format!("{{{}}}", ground.key(m)))
            .collect();
        println!(
            "ψ_{{{}}} = 1 on {}",
            ground.key(psi.support()),
            ones.join(" ")
        );
    }

    // Arbitrary sets collapse to the union of the members inside them.
    println!();
    for k in ["1,2,3", "1,3,4", "3"] {
        let x = key(k)?;
        println!(
            "canonical support of {{{k}}} is {{{}}}",
            ground.key(canonicalize(&family, x))
        );
    }
    Ok(())
}
