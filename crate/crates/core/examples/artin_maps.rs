// Presentations and morphisms: t_i in terms of t_0, t_1, the type B
// embedding, and the k = ±1 identification.

use atilde_garside::artin::{cll_t_as_shi_word, phi, verify_k_iso, verify_phi, BWord};
use atilde_garside::interval::IntervalCtx;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for i in [-2, -1, 2, 3] {
        println!("t[{i}] = {}", cll_t_as_shi_word(i));
    }

    let ctx = IntervalCtx::new(4, 1)?;
    let q: BWord = "q1 q2 q1 q2".parse()?;
    println!("phi({q}) = {}", phi(&q, &ctx)?);
    let g = BWord::garside_element(3);
    println!("phi({g}) = {}", phi(&g, &ctx)?);

    let report = verify_phi(&ctx)?;
    println!("{report}");
    assert!(report.passed());

    let report = verify_k_iso(3, 2)?;
    println!("{}", report.to_string().lines().last().unwrap_or_default());
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
