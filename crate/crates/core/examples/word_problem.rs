// Deciding equality of words in the affine braid group.

use atilde_garside::garside::word_problem;
use atilde_garside::interval::IntervalCtx;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = IntervalCtx::new(4, 1)?;
    let cases = [
        ("t[2] t[1]", "t[5] t[4]", true),
        ("s3 t[2] s3", "t[2] s3 t[2]", true),
        ("s4 t[-3]", "t[-3] s4", true),
        ("t[1] t[0] t[1]^-1", "t[2]", true),
        ("t[2] t[0]", "t[3] t[1]", false),
        ("t[0] t[0]", "", false),
    ];
    for (a, b, expected) in cases {
        let eq = word_problem(&a.parse()?, &b.parse()?, &ctx)?;
        println!("{a:>20} == {b:<16} {eq}");
        assert_eq!(eq, expected);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
