// Reduced expressions and lengths in G(∞,∞,n).

use atilde_garside::geodesic::{
    block_decomposition, left_descents, length, max_length, reduced_expression,
};
use atilde_garside::monomial::{eval_word, MonomialMatrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let w = MonomialMatrix::from_json_str(r#"{"n":4,"perm":[4,2,3,1],"exps":[0,-1,2,-1]}"#)?;
    println!("{w}");

    let re = reduced_expression(&w);
    println!("RE(w) = {re}");
    println!("length = {}", length(&w));
    for block in block_decomposition(&w) {
        println!("  block: {block}");
    }
    assert_eq!(re.to_string(), "t[0] s3 t[2] t[0] s4 s3 t[-1]");
    assert_eq!(eval_word(&re, 4)?, w);

    println!("left descents: {}", left_descents(&w));

    let lambda = MonomialMatrix::diagonal(vec![-3, 1, 1, 1])?;
    println!("RE(lambda) = {}", reduced_expression(&lambda));
    assert_eq!(length(&lambda), max_length(4));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
