// Meets, joins and complements in the lattice of simples.

use atilde_garside::interval::{complement_right, join_left, join_right, meet_left, IntervalCtx};
use atilde_garside::monomial::eval_word;
use atilde_garside::word::Generator::{S, T};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = IntervalCtx::new(4, 2)?;
    println!("Delta = {}", ctx.delta_simple());

    let pairs = [(T(3), T(-1)), (T(1), S(3)), (T(-2), S(4)), (S(3), S(4))];
    for (x, y) in pairs {
        let (a, b) = (ctx.atom(x)?, ctx.atom(y)?);
        let j = join_left(&a, &b, &ctx);
        assert_eq!(j, join_right(&a, &b, &ctx));
        println!("{x} v {y} = {j}");
    }

    let a = ctx.simple(eval_word(&"t[2] t[0] s3".parse()?, 4)?)?;
    let b = ctx.simple(eval_word(&"t[5] t[3] s4".parse()?, 4)?)?;
    println!("a = {a}, b = {b}");
    println!("a ^ b = {}", meet_left(&a, &b, &ctx));
    println!("a v b = {}", join_left(&a, &b, &ctx));
    println!("complement of a = {}", complement_right(&a, &ctx));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
