// Congruences, monolith and subdirect irreducibility.

use std::error::Error;

use reslat::algebra::{atoms, congruences, is_subdirectly_irreducible};
use reslat::chains::compile;
use reslat::constructions::c4;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (name, a) in [("C4", c4()), ("nnp", compile(&"nnp".parse()?).algebra)] {
        let cons = congruences(&a)?;
        println!("{name}: {} congruences", cons.len());
        for c in &cons {
            println!("  {:?}", c.blocks());
        }
        println!("  atoms {}", atoms(&cons).len());
        println!("  subdirectly irreducible: {}", is_subdirectly_irreducible(&a)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
