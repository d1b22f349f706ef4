// Completing spans of commutative idempotent chains to commuting squares.

use std::error::Error;

use reslat::algebra::find_embeddings;
use reslat::chains::{compile, recover_code};
use reslat::constructions::{amalgamate_cic, amalgamate_osm, sugihara_from_involution, Span};
use reslat::FinAlgebra;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let trivial = FinAlgebra::trivial().with_residuals()?;
    let s3 = sugihara_from_involution(3)?;
    let span = Span::new(trivial.clone(), s3.clone(), s3, vec![1], vec![1]);
    let m = amalgamate_osm(&span)?;
    println!("S3 and S3 over the unit: D has {} elements, j1 {:?}, j2 {:?}", m.d.n(), m.j1, m.j2);

    let b = compile(&"pn".parse()?).algebra;
    let c = compile(&"np".parse()?).algebra;
    for i1 in find_embeddings(&trivial, &b)? {
        for i2 in find_embeddings(&trivial, &c)? {
            let span = Span::new(trivial.clone(), b.clone(), c.clone(), i1.clone(), i2.clone());
            let m = amalgamate_cic(&span)?;
            println!("pn and np over the unit: D = {}, commutes: {}", recover_code(&m.d)?, m.commutes(&span));
        }
    }
    let two = compile(&"".parse()?).algebra;
    let g3 = compile(&"n".parse()?).algebra;
    let embeddings = find_embeddings(&two, &g3)?;
    println!("2-chain embeds into n in {} ways", embeddings.len());
    for i1 in &embeddings {
        for i2 in &embeddings {
            let span = Span::new(two.clone(), g3.clone(), g3.clone(), i1.clone(), i2.clone());
            let m = amalgamate_cic(&span)?;
            println!("  i1 {i1:?}, i2 {i2:?}: D = {}", recover_code(&m.d)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
