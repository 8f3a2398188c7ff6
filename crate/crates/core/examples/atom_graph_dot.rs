// DOT rendering of the atoms below a simple.

use atilde_garside::dot::atom_graph_dot;
use atilde_garside::interval::IntervalCtx;
use atilde_garside::monomial::eval_word;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = IntervalCtx::new(4, 1)?;
    let dot = atom_graph_dot(&ctx.delta_simple(), &ctx);
    print!("{dot}");
    assert_eq!(dot.matches("t[*]").count(), 1);

    let s = ctx.simple(eval_word(&"t[1] s3 s4".parse()?, 4)?)?;
    print!("{}", atom_graph_dot(&s, &ctx));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
