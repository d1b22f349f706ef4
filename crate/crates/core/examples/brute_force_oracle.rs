// Exhaustive search for small residuated lattices up to isomorphism.

use std::error::Error;

use reslat::algebra::properties;
use reslat::oracle::{brute_force, canonical, ConstraintSet};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for spec in ["", "idempotent", "idempotent,chain", "conservative,commutative"] {
        let cs: ConstraintSet = spec.parse()?;
        let counts: Vec<usize> =
            (1..=5).map(|n| brute_force(n, &cs).map(|m| m.len())).collect::<Result<_, _>>()?;
        println!("{cs}: {counts:?}");
    }
    let models = brute_force(4, &"conservative,commutative".parse()?)?;
    for m in &models {
        println!("{} {:?}", &canonical(m).hash_hex()[..12], properties(m).names());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
