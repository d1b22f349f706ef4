use super::FinAlgebra;
use crate::error::{Error, Result};

/// Greatest element of `{z : pred(z)}` in the order of `a`, if any.
pub(crate) fn greatest(a: &FinAlgebra, pred: impl Fn(usize) -> bool) -> Option<usize> {
    let n = a.n();
    let mut cand = None;
    for z in 0..n {
        if pred(z) {
            match cand {
                None => cand = Some(z),
                Some(c) if a.leq(c, z) => cand = Some(z),
                Some(_) => {}
            }
        }
    }
    let m = cand?;
    (0..n).all(|z| !pred(z) || a.leq(z, m)).then_some(m)
}

/// Computes `x\c = max {z : x·z ≤ c}` and `c/y = max {z : z·y ≤ c}` by
/// scanning the carrier.
pub fn complete_residuals(a: &FinAlgebra) -> Result<FinAlgebra> {
    if !a.is_lattice() {
        return Err(Error::WrongClass("order is not a lattice".into()));
    }
    let n = a.n();
    let mut ld = vec![0; n * n];
    let mut rd = vec![0; n * n];
    for x in 0..n {
        for c in 0..n {
            ld[x * n + c] = greatest(a, |z| a.leq(a.mul(x, z), c)).ok_or(Error::NotResiduable {
                expr: "x·z ≤ c",
                x,
                c,
            })?;
            rd[c * n + x] = greatest(a, |z| a.leq(a.mul(z, x), c)).ok_or(Error::NotResiduable {
                expr: "z·x ≤ c",
                x,
                c,
            })?;
        }
    }
    Ok(a.clone().set_residuals(ld, rd))
}
