use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};

/// The odd Sugihara chain on `0..n` with involution `i ↦ n-1-i`.
pub fn sugihara_from_involution(n: usize) -> Result<FinAlgebra> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenSize(n));
    }
    let neg = |x: usize| n - 1 - x;
    let mul = |x: usize, y: usize| if x <= neg(y) { x.min(y) } else { x.max(y) };
    let imp = |x: usize, y: usize| if x <= y { neg(x).max(y) } else { neg(x).min(y) };
    let base = FinAlgebra::chain_from_fn(n, (n - 1) / 2, mul)?;
    let mut ld = Vec::with_capacity(n * n);
    let mut rd = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            ld.push(imp(x, y));
            rd.push(imp(y, x));
        }
    }
    Ok(base.set_residuals(ld, rd))
}

/// Integers `lo..=hi` (with `lo ≤ 0 ≤ hi`) under `x·y = x` if `|x| ≥ |y|`,
/// else `y`. Residuals are completed, so truncations that are not residuated
/// fail with `NotResiduable`.
pub fn abs_monoid(lo: i64, hi: i64) -> Result<FinAlgebra> {
    if lo > 0 || hi < 0 {
        return Err(Error::WrongClass(format!("{lo}..={hi} does not contain 0")));
    }
    let n = (hi - lo + 1) as usize;
    let value = |i: usize| lo + i as i64;
    let mul = |x: usize, y: usize| if value(x).abs() >= value(y).abs() { x } else { y };
    FinAlgebra::chain_from_fn(n, (-lo) as usize, mul)?.with_residuals()
}

/// `abs_monoid(-(k+1), k)`: the residuated truncation with `2k+2` elements.
pub fn abs_chain(k: usize) -> Result<FinAlgebra> {
    if k == 0 {
        return Err(Error::SizeTooSmall(k, 1));
    }
    let k = k as i64;
    abs_monoid(-(k + 1), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{generated_subalgebra, monoidal_preorder, properties, validate};
    use std::collections::BTreeSet;

    #[test]
    fn small_sugihara_chains() {
        assert_eq!(sugihara_from_involution(1).unwrap(), FinAlgebra::trivial().with_residuals().unwrap());
        assert!(matches!(sugihara_from_involution(4), Err(Error::EvenSize(4))));
        let s3 = sugihara_from_involution(3).unwrap();
        let p = monoidal_preorder(&s3).unwrap();
        // −1 ⊑ 1 ⊑ 0
        assert!(p.le(0, 2) && p.le(2, 1) && !p.le(2, 0) && !p.le(1, 2));
    }

    #[test]
    fn s5_matches_formula() {
        let s = sugihara_from_involution(5).unwrap();
        assert!(validate(&s).ok());
        assert!(properties(&s).odd_sugihara);
        for x in -2i64..=2 {
            for y in -2i64..=2 {
                let expect = if x <= -y { x.min(y) } else { x.max(y) };
                assert_eq!(s.mul((x + 2) as usize, (y + 2) as usize), (expect + 2) as usize);
            }
        }
        assert_eq!(s.clone(), s.without_residuals().with_residuals().unwrap());
    }

    #[test]
    fn symmetric_truncation_is_not_residuated() {
        for k in 1..=4 {
            assert!(matches!(abs_monoid(-k, k), Err(Error::NotResiduable { .. })));
        }
    }

    #[test]
    fn abs_chain_facts() {
        for k in 1..=5 {
            let a = abs_chain(k).unwrap();
            assert!(validate(&a).ok());
            let f = properties(&a);
            assert!(f.idempotent && !f.commutative && f.totally_ordered);
            let minus_one = a.unit() - 1;
            let g = generated_subalgebra(&a, &BTreeSet::from([minus_one])).unwrap();
            assert_eq!(g.len(), a.n());
        }
        // k = 2: carrier −3..2, unit at index 3; 1\0 = −2
        let a = abs_chain(2).unwrap();
        assert_eq!(a.ld(4, 3), 1);
        assert_eq!(a.mul(4, 2), 4);
        assert_eq!(a.mul(2, 4), 2);
    }
}
