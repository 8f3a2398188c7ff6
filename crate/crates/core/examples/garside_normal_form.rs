// Left-greedy normal forms in the Garside group of [1, λ^k].

use atilde_garside::garside::{from_group_word, is_left_weighted, tau};
use atilde_garside::interval::IntervalCtx;
use atilde_garside::monomial::eval_word;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = IntervalCtx::new(3, 1)?;
    let words = [
        "t[1] t[0] s3 t[1] t[0] s3",
        "s3 t[2] t[1] s3 t[-1]",
        "t[0]^-1 s3 t[4] t[3] t[0]",
        "s3^-1 t[1]^-1 t[0]^-1",
    ];
    for w in words {
        let word = w.parse()?;
        let g = from_group_word(&word, &ctx)?;
        println!("{w:<28} -> {g}");
        for pair in g.factors().windows(2) {
            assert!(is_left_weighted(&pair[0], &pair[1], &ctx));
        }
        assert_eq!(g.to_matrix(&ctx), eval_word(&word, 3)?);
    }

    let s = ctx.simple(eval_word(&"t[2] s3".parse()?, 3)?)?;
    println!("tau(t[2] s3) = {}", tau(&s, &ctx));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
