// The four-element noncommutative idempotent chain and its opposite.

use std::collections::BTreeSet;
use std::error::Error;

use reslat::algebra::{generated_subalgebra, properties};
use reslat::constructions::c4;
use reslat::oracle::is_isomorphic;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = c4();
    println!("flags {:?}", properties(&a).names());
    for row in a.prod_table() {
        println!("  {row:?}");
    }
    for x in 0..a.n() {
        println!("<{x}> = {:?}", generated_subalgebra(&a, &BTreeSet::from([x]))?);
    }
    println!("isomorphic to its opposite: {}", is_isomorphic(&a, &a.opposite()).is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
