// Monoidal preorder, noncommuting partners, closure operators and generated subalgebras.

use std::collections::BTreeSet;
use std::error::Error;

use reslat::algebra::{gamma_closure, generated_subalgebra, is_closure_operator, monoidal_preorder};
use reslat::chains::compile;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = compile(&"pCn".parse()?).algebra;
    let p = monoidal_preorder(&a)?;
    for x in 0..a.n() {
        let below: Vec<usize> = (0..a.n()).filter(|&y| p.le(y, x)).collect();
        println!("{x}: below {below:?}, partner {}", p.sharp(x));
    }
    println!("greatest element of the preorder: {:?}", p.greatest());

    let g = gamma_closure(&a, a.unit())?;
    println!("gamma_1 = {g:?}, closure operator: {}", is_closure_operator(&a, &g));

    let seed = BTreeSet::from([0]);
    println!("generated by {{0}}: {:?}", generated_subalgebra(&a, &seed)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
