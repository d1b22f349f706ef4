use std::collections::BTreeSet;

use crate::algebra::{properties, CheckReport, FinAlgebra};
use crate::error::{Error, Result};

/// A finite algebra containing a given partial subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FepClosure {
    pub algebra: FinAlgebra,
    /// Carrier of `algebra` as indices of the ambient algebra, ascending.
    pub elements: Vec<usize>,
    /// The partial subalgebra (with the unit adjoined), ascending.
    pub domain: Vec<usize>,
    /// `inclusion[i]` is the index in `algebra` of `domain[i]`.
    pub inclusion: Vec<usize>,
}

/// Closes `b ∪ {1}` inside a conservative residuated lattice `a`: adjoin
/// `⊤\1` and `1/⊤` for `⊤ = ⋁b`, then every `x ∧ 1`, then all joins. The
/// product is restricted and the residuals recomputed inside the result.
pub fn fep_closure(a: &FinAlgebra, b: &BTreeSet<usize>) -> Result<FepClosure> {
    if !a.is_lattice() || !properties(a).conservative {
        return Err(Error::WrongClass("closure needs a conservative lattice".into()));
    }
    if let Some(&x) = b.iter().find(|&&x| x >= a.n()) {
        return Err(Error::IndexOutOfRange { table: "subset", index: x, n: a.n() });
    }
    let a = a.residuated()?;
    let u = a.unit();
    let mut domain = b.clone();
    domain.insert(u);
    let top = domain.iter().copied().reduce(|x, y| a.join(x, y)).expect("nonempty");
    let mut set = domain.clone();
    set.insert(a.ld(top, u));
    set.insert(a.rd(u, top));
    let with_meets: Vec<usize> = set.iter().map(|&x| a.meet(x, u)).collect();
    set.extend(with_meets);
    loop {
        let current: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &x in &current {
            for &y in &current {
                set.insert(a.join(x, y));
            }
        }
        if set.len() == before {
            break;
        }
    }
    let elements: Vec<usize> = set.into_iter().collect();
    let algebra = a.clone().into_owned().without_residuals().restrict(&elements)?.with_residuals()?;
    let domain: Vec<usize> = domain.into_iter().collect();
    let inclusion =
        domain.iter().map(|x| elements.binary_search(x).expect("domain lies in the closure")).collect();
    Ok(FepClosure { algebra, elements, domain, inclusion })
}

/// Every operation of `a` that is defined on `closure.domain` (both arguments
/// and the result in the domain) agrees with the corresponding operation of
/// the closure.
type BinOp = dyn Fn(&FinAlgebra, usize, usize) -> usize;

pub fn check_partial_preservation(a: &FinAlgebra, closure: &FepClosure) -> Result<CheckReport> {
    let a = a.residuated()?;
    let c = &closure.algebra;
    let dom = &closure.domain;
    let image = |x: usize| dom.binary_search(&x).ok().map(|i| closure.inclusion[i]);
    let mut r = CheckReport::new();
    if image(a.unit()) != Some(c.unit()) {
        r.record("partial.unit", &[a.unit()]);
    }
    let ops: [(&str, &BinOp); 5] = [
        ("partial.meet", &|t, x, y| t.meet(x, y)),
        ("partial.join", &|t, x, y| t.join(x, y)),
        ("partial.product", &|t, x, y| t.mul(x, y)),
        ("partial.left_residual", &|t, x, y| t.ld(x, y)),
        ("partial.right_residual", &|t, x, y| t.rd(x, y)),
    ];
    for (i, &x) in dom.iter().enumerate() {
        for (j, &y) in dom.iter().enumerate() {
            for (name, op) in &ops {
                let v = op(&a, x, y);
                if let Some(iv) = image(v) {
                    let (ix, iy) = (closure.inclusion[i], closure.inclusion[j]);
                    if op(c, ix, iy) != iv {
                        r.record(name, &[x, y, v]);
                    }
                }
            }
        }
    }
    Ok(r)
}
