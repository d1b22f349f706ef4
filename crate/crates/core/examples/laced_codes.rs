// Idempotent residuated chains as words over n, p, C, I.

use std::error::Error;

use reslat::chains::{compile, enumerate_codes, recover_code, validate_code_semantics, LacedCode};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let code: LacedCode = "nCp".parse()?;
    let chain = compile(&code);
    println!("{code} has {} elements, commutative: {}", code.size(), code.is_commutative());
    println!("levels {:?}", chain.level_of);
    println!("signs  {:?}", chain.sign_of);
    for row in chain.algebra.prod_table() {
        println!("  {row:?}");
    }
    println!("recovered: {}", recover_code(&chain.algebra)?);
    println!("laced conditions hold: {}", validate_code_semantics(&code).ok());

    let words: Vec<String> = enumerate_codes(5, false)?.map(|c| c.to_string()).collect();
    println!("{} chains with 5 elements: {}", words.len(), words.join(" "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
