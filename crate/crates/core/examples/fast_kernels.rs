//! O(n·2^n) dense kernels against the O(3^n) submask walk, in floating point.
//!
//! Run with `cargo run --release --example fast_kernels [n]`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use semilattice_laplace::{mobius_fast, zeta_fast, GroundSet, Result};

fn naive_zeta(values: &[f64]) -> Vec<f64> {
    (0..values.len() as u64)
        .map(|x| {
            let mut total = 0.0;
            let mut s = x;
            loop {
                total += values[s as usize];
                if s == 0 {
                    break total;
                }
                s = (s - 1) & x;
            }
        })
        .collect()
}

fn main() -> Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(16);
    let ground = GroundSet::new(n)?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let input: Vec<f64> = (0..ground.dense_len())
        .map(|_| rng.gen_range(-1.0..1.0))
        .collect();

    let t = Instant::now();
    let table = zeta_fast(&ground, input.clone())?;
    println!("zeta_fast    n={n}: {:?}", t.elapsed());

    let t = Instant::now();
    let back = mobius_fast(&table)?;
    println!("mobius_fast  n={n}: {:?}", t.elapsed());

    let worst = back
        .iter()
        .zip(&input)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("round-trip max error {worst:.2e}");

    if n <= 18 {
        let t = Instant::now();
        let slow = naive_zeta(&input);
        println!("naive zeta   n={n}: {:?}", t.elapsed());
        let gap = slow
            .iter()
            .zip(table.values())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!("max |fast - naive| = {gap:.2e}");
    }
    Ok(())
}
