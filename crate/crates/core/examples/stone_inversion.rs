//! Measures of base sets V(F; U1..Un) from difference operators applied to
//! the transform, checked against direct sums.
//!
//! Run with `cargo run --example stone_inversion`.

use semilattice_laplace::stone::separating_pair;
use semilattice_laplace::{
    base_intersect, base_members, invert_base_measure, make_ground, measure_finite_union,
    union_closure, BaseSet, PointMeasure, Rational, Result, StoneModel,
};

fn main() -> Result<()> {
    let ground = make_ground(&["p", "q", "r", "s"])?;
    let key = |k: &str| ground.parse_key(k);
    let model = StoneModel::new(union_closure(
        &ground,
        &[key("p")?, key("q,r")?, key("s")?, key("p,r")?],
    )?);

    let mu = PointMeasure::new(
        &model,
        model
            .family()
            .members()
            .iter()
            .map(|&a| (a, Rational::from(1 + a.mask() as i64 % 3))),
    )?;
    let f = mu.transform();

    let show = |v: &BaseSet| {
        let hits: Vec<String> = v
            .hits()
            .iter()
            .map(|u| format!("{{{}}}", ground.key(*u)))
            .collect();
        match hits.is_empty() {
            true => format!("V({{{}}})", ground.key(v.exclude())),
            false => format!("V({{{}}}; {})", ground.key(v.exclude()), hits.join(", ")),
        }
    };

    let bases = [
        BaseSet::new(key("s")?, vec![key("p")?])?,
        BaseSet::new(key("")?, vec![key("q,r")?, key("p,s")?])?,
        BaseSet::avoiding(key("p")?),
    ];
    for v in &bases {
        let direct: Rational = base_members(&model, v)?
            .into_iter()
            .fold(Rational::from(0), |acc, a| acc + mu.weight(a));
        println!(
            "{} = {} (direct {direct})",
            show(v),
            invert_base_measure(&model, &f, v)?
        );
    }

    let both = base_intersect(&bases[0], &bases[1]);
    println!(
        "{} = {}",
        show(&both),
        invert_base_measure(&model, &f, &both)?
    );
    println!(
        "union of all three = {}",
        measure_finite_union(&model, &f, &bases)?
    );

    let (a, b) = (key("p")?, key("p,q,r")?);
    let (va, vb) = separating_pair(&ground, a, b).expect("distinct sets separate");
    println!("{{p}} ∈ {} and {{p,q,r}} ∈ {}", show(&va), show(&vb));
    Ok(())
}
