// Commutative idempotent chains as an odd Sugihara skeleton with fibers.

use std::error::Error;

use reslat::algebra::skeleton;
use reslat::chains::recover_code;
use reslat::constructions::{sugihara_from_involution, tensor, SkeletonDecomposition};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let s = sugihara_from_involution(3)?;
    let a = tensor(&SkeletonDecomposition::new(s, vec![2, 1, 3]))?;
    println!("S3 with fibers [2, 1, 3] has {} elements, code {}", a.n(), recover_code(&a)?);

    let sk = skeleton(&a)?;
    println!("skeleton elements {:?}", sk.elements);
    println!("fibers {:?}", sk.fibers);
    let back = tensor(&SkeletonDecomposition::from_skeleton(&sk))?;
    println!("rebuilt equals original: {}", back.prod_table() == a.prod_table());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
