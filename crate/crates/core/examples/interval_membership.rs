// Membership in [1, λ^k] through bubbles, cross-checked against lengths.

use atilde_garside::interval::{in_interval, in_interval_by_length, z_partition, IntervalCtx};
use atilde_garside::monomial::MonomialMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (vec![4, 5, 3, 1, 2], vec![0, 1, 0, -1, 0]),
        (vec![4, 5, 3, 1, 2], vec![0, 0, -2, 0, 2]),
        (vec![1, 3, 2, 4], vec![-4, 1, 1, 2]),
    ];
    for (perm, exps) in cases {
        let w = MonomialMatrix::new(perm, exps)?;
        let z = z_partition(&w);
        println!("{w}bubbles at {:?}", z.bubbles);
        for k in [1, 2] {
            let ctx = IntervalCtx::new(w.n(), k)?;
            let member = in_interval(&w, &ctx);
            assert_eq!(member, in_interval_by_length(&w, &ctx));
            println!("  in [1, lambda^{k}]: {member}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
