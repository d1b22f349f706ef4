// A finite partial subalgebra of a conservative chain closed into a finite algebra.

use std::collections::BTreeSet;
use std::error::Error;

use reslat::algebra::validate;
use reslat::constructions::{abs_chain, c4, check_partial_preservation, fep_closure};
use reslat::oracle::is_isomorphic;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // integers -3..=2 under x·y = the one with larger absolute value
    let a = abs_chain(2)?;
    let b = BTreeSet::from([3, 4]);
    let cl = fep_closure(&a, &b)?;
    println!("closure of {b:?} lives on {:?}", cl.elements);
    println!("valid: {}", validate(&cl.algebra).ok());
    println!("partial operations preserved: {}", check_partial_preservation(&a, &cl)?.ok());
    println!("isomorphic to C4: {}", is_isomorphic(&cl.algebra, &c4()).is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
