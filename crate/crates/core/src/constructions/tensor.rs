use serde::{Deserialize, Serialize};

use crate::algebra::{properties, FinAlgebra, Skeleton};
use crate::error::{Error, Result};

/// An odd Sugihara chain together with the size of the fiber chain over each
/// of its elements. The top of every fiber is the skeleton element itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonDecomposition {
    pub skeleton: FinAlgebra,
    pub fiber_sizes: Vec<usize>,
}

/// Fiber specification as read from disk.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiberSpec {
    pub fibers: Vec<usize>,
}

impl SkeletonDecomposition {
    pub fn new(skeleton: FinAlgebra, fiber_sizes: Vec<usize>) -> Self {
        SkeletonDecomposition { skeleton, fiber_sizes }
    }

    pub fn from_skeleton(s: &Skeleton) -> Self {
        SkeletonDecomposition {
            skeleton: s.algebra.clone(),
            fiber_sizes: s.fibers.iter().map(Vec::len).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.fiber_sizes.iter().sum()
    }
}

/// Glues the fibers along the skeleton. Elements are numbered fiber by fiber
/// in skeleton order, bottom-up within each fiber, which is the lattice order.
pub fn tensor(d: &SkeletonDecomposition) -> Result<FinAlgebra> {
    let s = d.skeleton.normalize_labels();
    if !s.is_chain_tagged() || !properties(&s).odd_sugihara {
        return Err(Error::BadSkeleton("skeleton must be an odd Sugihara chain".into()));
    }
    let s = s.residuated()?.into_owned();
    if d.fiber_sizes.len() != s.n() {
        return Err(Error::BadFibers(format!(
            "{} fibers for a skeleton of size {}",
            d.fiber_sizes.len(),
            s.n()
        )));
    }
    if let Some(c) = d.fiber_sizes.iter().position(|&k| k == 0) {
        return Err(Error::BadFibers(format!("fiber over {c} is empty")));
    }
    let mut home = Vec::new();
    let mut tops = Vec::with_capacity(s.n());
    for (c, &k) in d.fiber_sizes.iter().enumerate() {
        home.extend(std::iter::repeat_n(c, k));
        tops.push(home.len() - 1);
    }
    let n = home.len();
    let u = s.unit();
    let neg_top = |x: usize| tops[s.ld(home[x], u)];
    let mul = |x: usize, y: usize| {
        let (a, b) = (home[x], home[y]);
        if a == b {
            if a <= u {
                x.min(y)
            } else {
                x.max(y)
            }
        } else if s.mul(a, b) == a {
            x
        } else {
            y
        }
    };
    let imp = |x: usize, y: usize| if x <= y { neg_top(x).max(y) } else { neg_top(x).min(y) };
    let base = FinAlgebra::chain_from_fn(n, tops[u], mul)?;
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
