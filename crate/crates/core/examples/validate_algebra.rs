// Load an algebra from its JSON document, complete the residuals and check it.

use std::error::Error;

use reslat::algebra::{properties, validate};
use reslat::constructions::abs_monoid;
use reslat::FinAlgebra;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // three-element Gödel chain: product is the meet, unit on top
    let doc = r#"{"n": 3, "unit": 2, "leq": "chain", "prod": [[0,0,0],[0,1,1],[0,1,2]]}"#;
    let a = FinAlgebra::from_json(doc)?.with_residuals()?;
    let report = validate(&a);
    println!("validation: {}", report.to_string().trim_end());
    println!("flags: {:?}", properties(&a).names());
    println!("1\\0 = {}, 1/1 = {}", a.ld(1, 0), a.rd(1, 1));
    println!("{}", a.to_json());

    // 0·0 = 1 sits above 0·1 = 0, so no residuals satisfy the adjunction
    let broken = FinAlgebra::from_json(r#"{"n": 2, "unit": 1, "leq": "chain", "prod": [[1,0],[0,1]]}"#)?;
    print!("{}", validate(&broken));

    // the symmetric truncation -2..=2 of the absolute-value product has no residuals
    match abs_monoid(-2, 2) {
        Ok(_) => println!("unexpectedly residuated"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
