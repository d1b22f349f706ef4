//! Finite residuated-lattice candidates and everything that inspects them.
//!
//! A [`FinAlgebra`] is a carrier `0..n`, a lattice order (either the index
//! order of a chain or an explicit matrix), a monoid product with a unit, and
//! optionally the two residual tables. Construction only checks shapes and
//! index ranges; the algebraic axioms are checked by [`validate`].

mod check;
mod congruence;
mod json;
pub mod laws;
mod props;
mod residual;
mod structure;

use std::borrow::Cow;

use crate::error::{Error, Result};

pub use check::{check_homomorphism, find_embeddings, validate, CheckReport, Embedding, Violation};
pub use congruence::{
    atoms, congruences, congruences_bounded, is_subdirectly_irreducible, Partition, DEFAULT_CONGRUENCE_BOUND,
};
pub use json::AlgebraDoc;
pub use props::{properties, PropertyFlags};
pub use residual::complete_residuals;
pub use structure::{
    gamma_closure, generated_subalgebra, is_closure_operator, monoidal_preorder, skeleton, PreorderRel,
    Skeleton,
};

/// How the lattice order of an algebra is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    /// The index order `0 < 1 < … < n-1`.
    Chain,
    /// `m[x][y]` is true iff `x ≤ y`.
    Matrix(Vec<Vec<bool>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct LatticeOps {
    meet: Vec<usize>,
    join: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    n: usize,
    chain: bool,
    leq: Vec<bool>,
    unit: usize,
    prod: Vec<usize>,
    ld: Option<Vec<usize>>,
    rd: Option<Vec<usize>>,
    lattice: Option<LatticeOps>,
}

fn flatten(table: &'static str, n: usize, rows: Vec<Vec<usize>>) -> Result<Vec<usize>> {
    if rows.len() != n {
        return Err(Error::DimensionMismatch { table, expected: n, found: rows.len() });
    }
    let mut flat = Vec::with_capacity(n * n);
    for row in rows {
        if row.len() != n {
            return Err(Error::DimensionMismatch { table, expected: n, found: row.len() });
        }
        for v in row {
            if v >= n {
                return Err(Error::IndexOutOfRange { table, index: v, n });
            }
            flat.push(v);
        }
    }
    Ok(flat)
}

fn unflatten(n: usize, flat: &[usize]) -> Vec<Vec<usize>> {
    flat.chunks(n).map(<[usize]>::to_vec).collect()
}

impl FinAlgebra {
    pub fn new(n: usize, order: Order, unit: usize, prod: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeTooSmall(0, 1));
        }
        if unit >= n {
            return Err(Error::IndexOutOfRange { table: "unit", index: unit, n });
        }
        let (chain, leq) = match order {
            Order::Chain => {
                let mut leq = vec![false; n * n];
                for x in 0..n {
                    for y in x..n {
                        leq[x * n + y] = true;
                    }
                }
                (true, leq)
            }
            Order::Matrix(m) => {
                if m.len() != n {
                    return Err(Error::DimensionMismatch { table: "leq", expected: n, found: m.len() });
                }
                let mut leq = Vec::with_capacity(n * n);
                for row in m {
                    if row.len() != n {
                        return Err(Error::DimensionMismatch { table: "leq", expected: n, found: row.len() });
                    }
                    leq.extend(row);
                }
                (false, leq)
            }
        };
        let prod = flatten("prod", n, prod)?;
        let lattice = lattice_ops(n, &leq);
        Ok(FinAlgebra { n, chain, leq, unit, prod, ld: None, rd: None, lattice })
    }

    /// Builds an algebra whose product is given by a closure.
    pub fn from_fn(n: usize, order: Order, unit: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let prod = (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect();
        Self::new(n, order, unit, prod)
    }

    pub fn chain_from_fn(n: usize, unit: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::from_fn(n, Order::Chain, unit, mul)
    }

    /// The one-element algebra.
    pub fn trivial() -> Self {
        Self::new(1, Order::Chain, 0, vec![vec![0]]).expect("trivial algebra is well-formed")
    }

    pub fn with_residual_tables(
        mut self,
        ld: Option<Vec<Vec<usize>>>,
        rd: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        self.ld = ld.map(|t| flatten("ld", self.n, t)).transpose()?;
        self.rd = rd.map(|t| flatten("rd", self.n, t)).transpose()?;
        Ok(self)
    }

    pub(crate) fn set_residuals(mut self, ld: Vec<usize>, rd: Vec<usize>) -> Self {
        debug_assert_eq!(ld.len(), self.n * self.n);
        debug_assert_eq!(rd.len(), self.n * self.n);
        self.ld = Some(ld);
        self.rd = Some(rd);
        self
    }

    pub fn without_residuals(mut self) -> Self {
        self.ld = None;
        self.rd = None;
        self
    }

    /// Fills in the residual tables by max-scan if they are absent.
    pub fn with_residuals(self) -> Result<Self> {
        if self.has_residuals() {
            Ok(self)
        } else {
            complete_residuals(&self)
        }
    }

    /// Borrows `self` if both residual tables are present, otherwise computes them.
    pub fn residuated(&self) -> Result<Cow<'_, FinAlgebra>> {
        if self.has_residuals() {
            Ok(Cow::Borrowed(self))
        } else {
            complete_residuals(self).map(Cow::Owned)
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// True when the order was given by the `chain` tag.
    pub fn is_chain_tagged(&self) -> bool {
        self.chain
    }

    pub fn order(&self) -> Order {
        if self.chain {
            Order::Chain
        } else {
            Order::Matrix((0..self.n).map(|x| (0..self.n).map(|y| self.leq(x, y)).collect()).collect())
        }
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.prod[x * self.n + y]
    }

    pub fn has_residuals(&self) -> bool {
        self.ld.is_some() && self.rd.is_some()
    }

    /// `x \ c`. Panics if the left residual table is absent.
    #[inline]
    pub fn ld(&self, x: usize, c: usize) -> usize {
        self.ld.as_ref().expect("left residual table missing")[x * self.n + c]
    }

    /// `c / y`. Panics if the right residual table is absent.
    #[inline]
    pub fn rd(&self, c: usize, y: usize) -> usize {
        self.rd.as_ref().expect("right residual table missing")[c * self.n + y]
    }

    pub fn has_ld(&self) -> bool {
        self.ld.is_some()
    }

    pub fn has_rd(&self) -> bool {
        self.rd.is_some()
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice.is_some()
    }

    /// Lattice meet. Panics if the order is not a lattice.
    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        if self.chain {
            return x.min(y);
        }
        self.lattice.as_ref().expect("order is not a lattice").meet[x * self.n + y]
    }

    /// Lattice join. Panics if the order is not a lattice.
    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        if self.chain {
            return x.max(y);
        }
        self.lattice.as_ref().expect("order is not a lattice").join[x * self.n + y]
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.n).find(|&b| (0..self.n).all(|x| self.leq(b, x)))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.n).find(|&t| (0..self.n).all(|x| self.leq(x, t)))
    }

    /// True when every pair of elements is comparable.
    pub fn is_totally_ordered(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    pub fn prod_table(&self) -> Vec<Vec<usize>> {
        unflatten(self.n, &self.prod)
    }

    pub fn ld_table(&self) -> Option<Vec<Vec<usize>>> {
        self.ld.as_ref().map(|t| unflatten(self.n, t))
    }

    pub fn rd_table(&self) -> Option<Vec<Vec<usize>>> {
        self.rd.as_ref().map(|t| unflatten(self.n, t))
    }

    /// The algebra with the product reversed (`x ·' y = y · x`).
    pub fn opposite(&self) -> FinAlgebra {
        let n = self.n;
        let mut out = self.clone();
        for x in 0..n {
            for y in 0..n {
                out.prod[x * n + y] = self.mul(y, x);
            }
        }
        if let (Some(_), Some(_)) = (&self.ld, &self.rd) {
            let mut ld = vec![0; n * n];
            let mut rd = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    ld[a * n + b] = self.rd(b, a);
                    rd[a * n + b] = self.ld(b, a);
                }
            }
            out.ld = Some(ld);
            out.rd = Some(rd);
        } else {
            out.ld = None;
            out.rd = None;
        }
        out
    }

    /// Relabels the carrier: element `x` becomes `perm[x]`.
    ///
    /// The result carries an explicit order matrix unless `perm` is the
    /// identity on a chain-tagged algebra.
    pub fn relabel(&self, perm: &[usize]) -> FinAlgebra {
        let n = self.n;
        assert_eq!(perm.len(), n, "permutation length");
        if self.chain && perm.iter().enumerate().all(|(i, &p)| i == p) {
            return self.clone();
        }
        let mut inv = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let map_table = |t: &Vec<usize>| {
            let mut out = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    out[a * n + b] = perm[t[inv[a] * n + inv[b]]];
                }
            }
            out
        };
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = self.leq(inv[a], inv[b]);
            }
        }
        let lattice = lattice_ops(n, &leq);
        FinAlgebra {
            n,
            chain: false,
            leq,
            unit: perm[self.unit],
            prod: map_table(&self.prod),
            ld: self.ld.as_ref().map(map_table),
            rd: self.rd.as_ref().map(map_table),
            lattice,
        }
    }

    /// Switches to the `chain` tag when the order matrix is exactly the index order.
    pub fn into_chain_tag(mut self) -> FinAlgebra {
        let n = self.n;
        if !self.chain && (0..n).all(|x| (0..n).all(|y| self.leq(x, y) == (x <= y))) {
            self.chain = true;
        }
        self
    }

    /// The subalgebra on `elems` (sorted ascending), relabelled `0..elems.len()`
    /// in that order. The subset must be closed under the product and, when
    /// present, the residuals; the lattice operations of the result are those
    /// of the induced order.
    pub fn restrict(&self, elems: &[usize]) -> Result<FinAlgebra> {
        self.substructure(elems, self.unit)
    }

    /// Like [`restrict`](Self::restrict) but with `unit` (an element of
    /// `elems`) as the identity of the result.
    pub fn substructure(&self, elems: &[usize], unit: usize) -> Result<FinAlgebra> {
        let n = self.n;
        let k = elems.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &e) in elems.iter().enumerate() {
            if e >= n {
                return Err(Error::IndexOutOfRange { table: "subset", index: e, n });
            }
            pos[e] = i;
        }
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::WrongClass("subset must be sorted and duplicate-free".into()));
        }
        if unit >= n || pos[unit] == usize::MAX {
            return Err(Error::WrongClass("subset does not contain the unit".into()));
        }
        let sub_table = |t: &Vec<usize>, name: &str| -> Result<Vec<usize>> {
            let mut out = Vec::with_capacity(k * k);
            for &a in elems {
                for &b in elems {
                    let v = t[a * n + b];
                    if pos[v] == usize::MAX {
                        return Err(Error::WrongClass(format!(
                            "subset not closed under {name}: ({a}, {b}) ↦ {v}"
                        )));
                    }
                    out.push(pos[v]);
                }
            }
            Ok(out)
        };
        let prod = sub_table(&self.prod, "product")?;
        let ld = self.ld.as_ref().map(|t| sub_table(t, "left residual")).transpose()?;
        let rd = self.rd.as_ref().map(|t| sub_table(t, "right residual")).transpose()?;
        let mut leq = Vec::with_capacity(k * k);
        for &a in elems {
            for &b in elems {
                leq.push(self.leq(a, b));
            }
        }
        let lattice = lattice_ops(k, &leq);
        Ok(FinAlgebra { n: k, chain: self.chain, leq, unit: pos[unit], prod, ld, rd, lattice })
    }

    /// Relabels along the linear extension of `≤` that always takes the
    /// smallest available index next, so lattice order refines index order.
    /// Chains end up chain-tagged.
    pub fn normalize_labels(&self) -> FinAlgebra {
        if self.chain {
            return self.clone();
        }
        let n = self.n;
        let mut indeg: Vec<usize> =
            (0..n).map(|y| (0..n).filter(|&x| x != y && self.leq(x, y)).count()).collect();
        let mut perm = vec![usize::MAX; n];
        for next in 0..n {
            let free = |x: usize| perm[x] == usize::MAX;
            let x = (0..n)
                .find(|&x| free(x) && indeg[x] == 0)
                .or_else(|| (0..n).find(|&x| free(x)))
                .expect("an unassigned element remains");
            perm[x] = next;
            for y in (0..n).filter(|&y| y != x && self.leq(x, y)) {
                indeg[y] = indeg[y].saturating_sub(1);
            }
        }
        self.relabel(&perm).into_chain_tag()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&AlgebraDoc::from(self)).expect("algebra serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&AlgebraDoc::from(self)).expect("algebra serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AlgebraDoc = serde_json::from_str(text)?;
        doc.try_into()
    }
}

/// Meet and join tables, or `None` if `leq` is not a lattice order.
fn lattice_ops(n: usize, leq: &[bool]) -> Option<LatticeOps> {
    let le = |x: usize, y: usize| leq[x * n + y];
    for x in 0..n {
        if !le(x, x) {
            return None;
        }
        for y in 0..n {
            if x != y && le(x, y) && le(y, x) {
                return None;
            }
            for z in 0..n {
                if le(x, y) && le(y, z) && !le(x, z) {
                    return None;
                }
            }
        }
    }
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let lower = (0..n).filter(|&z| le(z, x) && le(z, y));
            let m = lower.clone().find(|&z| lower.clone().all(|w| le(w, z)))?;
            let upper = (0..n).filter(|&z| le(x, z) && le(y, z));
            let j = upper.clone().find(|&z| upper.clone().all(|w| le(z, w)))?;
            meet[x * n + y] = m;
            join[x * n + y] = j;
        }
    }
    Some(LatticeOps { meet, join })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_errors() {
        assert!(matches!(
            FinAlgebra::new(2, Order::Chain, 0, vec![vec![0, 0]]),
            Err(Error::DimensionMismatch { table: "prod", .. })
        ));
        assert!(matches!(
            FinAlgebra::new(2, Order::Chain, 0, vec![vec![0, 2], vec![0, 1]]),
            Err(Error::IndexOutOfRange { table: "prod", index: 2, .. })
        ));
        assert!(matches!(
            FinAlgebra::new(2, Order::Chain, 5, vec![vec![0, 0], vec![0, 1]]),
            Err(Error::IndexOutOfRange { table: "unit", .. })
        ));
        let a = FinAlgebra::chain_from_fn(2, 1, usize::min).unwrap();
        assert!(matches!(
            a.with_residual_tables(Some(vec![vec![1, 1]]), None),
            Err(Error::DimensionMismatch { table: "ld", .. })
        ));
    }

    #[test]
    fn matrix_lattice_ops() {
        // diamond 0 < 1,2 < 3
        let m = vec![
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ];
        let a = FinAlgebra::from_fn(4, Order::Matrix(m), 3, |x, y| {
            if x == 3 {
                y
            } else if y == 3 {
                x
            } else {
                0
            }
        })
        .unwrap();
        assert!(a.is_lattice());
        assert_eq!(a.meet(1, 2), 0);
        assert_eq!(a.join(1, 2), 3);
        assert_eq!(a.bottom(), Some(0));
        assert_eq!(a.top(), Some(3));
        assert!(!a.is_totally_ordered());
    }

    #[test]
    fn relabel_then_chain_tag() {
        let a = FinAlgebra::chain_from_fn(3, 2, usize::min).unwrap();
        let b = a.relabel(&[2, 1, 0]);
        assert!(!b.is_chain_tagged());
        assert!(b.leq(2, 0));
        assert_eq!(b.unit(), 0);
        let back = b.relabel(&[2, 1, 0]).into_chain_tag();
        assert_eq!(back, a);
    }
}
