use std::fmt;

use serde::Serialize;

use super::FinAlgebra;
use crate::error::{Error, Result};

/// Number of witnesses kept per axiom; the count is still exact.
const WITNESS_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
    /// Violations found but not stored, per the witness cap.
    pub suppressed: usize,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, axiom: &str, witness: &[usize]) {
        let seen = self.violations.iter().filter(|v| v.axiom == axiom).count();
        if seen < WITNESS_CAP {
            self.violations.push(Violation { axiom: axiom.to_string(), witness: witness.to_vec() });
        } else {
            self.suppressed += 1;
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.suppressed += other.suppressed;
        for v in other.violations {
            self.record(&v.axiom, &v.witness);
        }
    }

    pub fn has(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return writeln!(f, "ok");
        }
        writeln!(f, "FAILED: {} violation(s)", self.violations.len() + self.suppressed)?;
        for v in &self.violations {
            writeln!(f, "  {} at {:?}", v.axiom, v.witness)?;
        }
        if self.suppressed > 0 {
            writeln!(f, "  ... and {} more", self.suppressed)?;
        }
        Ok(())
    }
}

/// Checks the lattice, monoid and residuation axioms.
///
/// Without residual tables, residuation is checked by computing the candidate
/// `max {z : x·z ≤ c}` and verifying `x·z ≤ c ⟺ z ≤ max` (and dually).
pub fn validate(a: &FinAlgebra) -> CheckReport {
    let n = a.n();
    let mut r = CheckReport::new();

    for x in 0..n {
        if !a.leq(x, x) {
            r.record("order.reflexive", &[x]);
        }
        for y in 0..n {
            if x != y && a.leq(x, y) && a.leq(y, x) {
                r.record("order.antisymmetric", &[x, y]);
            }
            for z in 0..n {
                if a.leq(x, y) && a.leq(y, z) && !a.leq(x, z) {
                    r.record("order.transitive", &[x, y, z]);
                }
            }
        }
    }
    if !r.ok() {
        return r;
    }
    if !a.is_lattice() {
        for x in 0..n {
            for y in 0..n {
                let lower: Vec<_> = (0..n).filter(|&z| a.leq(z, x) && a.leq(z, y)).collect();
                if !lower.iter().any(|&m| lower.iter().all(|&w| a.leq(w, m))) {
                    r.record("lattice.meet", &[x, y]);
                }
                let upper: Vec<_> = (0..n).filter(|&z| a.leq(x, z) && a.leq(y, z)).collect();
                if !upper.iter().any(|&j| upper.iter().all(|&w| a.leq(j, w))) {
                    r.record("lattice.join", &[x, y]);
                }
            }
        }
        return r;
    }

    let u = a.unit();
    for x in 0..n {
        if a.mul(u, x) != x || a.mul(x, u) != x {
            r.record("monoid.unit", &[x]);
        }
        for y in 0..n {
            let xy = a.mul(x, y);
            for z in 0..n {
                if a.mul(xy, z) != a.mul(x, a.mul(y, z)) {
                    r.record("monoid.associative", &[x, y, z]);
                }
            }
        }
    }

    match (a.has_ld(), a.has_rd()) {
        (true, _) | (_, true) => {
            for x in 0..n {
                for y in 0..n {
                    let xy = a.mul(x, y);
                    for c in 0..n {
                        let lhs = a.leq(xy, c);
                        if a.has_ld() && lhs != a.leq(y, a.ld(x, c)) {
                            r.record("residuation.left", &[x, y, c]);
                        }
                        if a.has_rd() && lhs != a.leq(x, a.rd(c, y)) {
                            r.record("residuation.right", &[x, y, c]);
                        }
                    }
                }
            }
        }
        _ => {}
    }
    if !a.has_ld() {
        for x in 0..n {
            for c in 0..n {
                check_residual_exists(a, &mut r, "residuation.left", &[x, c], |z| a.leq(a.mul(x, z), c));
            }
        }
    }
    if !a.has_rd() {
        for y in 0..n {
            for c in 0..n {
                check_residual_exists(a, &mut r, "residuation.right", &[c, y], |z| a.leq(a.mul(z, y), c));
            }
        }
    }
    r
}

fn check_residual_exists(
    a: &FinAlgebra,
    r: &mut CheckReport,
    axiom: &str,
    witness: &[usize],
    below: impl Fn(usize) -> bool,
) {
    let n = a.n();
    let set: Vec<_> = (0..n).filter(|&z| below(z)).collect();
    match set.iter().copied().find(|&m| set.iter().all(|&w| a.leq(w, m))) {
        None => r.record(axiom, witness),
        Some(m) => {
            if let Some(z) = (0..n).find(|&z| a.leq(z, m) && !below(z)) {
                let mut w = witness.to_vec();
                w.push(z);
                r.record(axiom, &w);
            }
        }
    }
}

/// An index map between two algebras, to be checked as an embedding.
#[derive(Clone, Debug)]
pub struct Embedding<'a> {
    pub source: &'a FinAlgebra,
    pub target: &'a FinAlgebra,
    pub map: Vec<usize>,
}

impl<'a> Embedding<'a> {
    pub fn new(source: &'a FinAlgebra, target: &'a FinAlgebra, map: Vec<usize>) -> Self {
        Embedding { source, target, map }
    }

    pub fn identity(a: &'a FinAlgebra) -> Self {
        Embedding { source: a, target: a, map: (0..a.n()).collect() }
    }
}

/// Pointwise preservation of ∧, ∨, ·, \, / and the unit.
pub fn check_homomorphism(e: &Embedding<'_>) -> Result<CheckReport> {
    let (s, t, f) = (e.source, e.target, &e.map);
    if f.len() != s.n() {
        return Err(Error::DimensionMismatch { table: "map", expected: s.n(), found: f.len() });
    }
    if let Some(&bad) = f.iter().find(|&&v| v >= t.n()) {
        return Err(Error::IndexOutOfRange { table: "map", index: bad, n: t.n() });
    }
    let mut seen = vec![usize::MAX; t.n()];
    for (x, &fx) in f.iter().enumerate() {
        if seen[fx] != usize::MAX {
            return Err(Error::NotInjective(seen[fx], x));
        }
        seen[fx] = x;
    }
    let s = s.residuated()?;
    let t = t.residuated()?;
    Ok(homomorphism_report(&s, &t, f))
}

fn homomorphism_report(s: &FinAlgebra, t: &FinAlgebra, f: &[usize]) -> CheckReport {
    let mut r = CheckReport::new();
    if f[s.unit()] != t.unit() {
        r.record("preserves.unit", &[s.unit()]);
    }
    for x in 0..s.n() {
        for y in 0..s.n() {
            let (fx, fy) = (f[x], f[y]);
            if f[s.meet(x, y)] != t.meet(fx, fy) {
                r.record("preserves.meet", &[x, y]);
            }
            if f[s.join(x, y)] != t.join(fx, fy) {
                r.record("preserves.join", &[x, y]);
            }
            if f[s.mul(x, y)] != t.mul(fx, fy) {
                r.record("preserves.product", &[x, y]);
            }
            if f[s.ld(x, y)] != t.ld(fx, fy) {
                r.record("preserves.left_residual", &[x, y]);
            }
            if f[s.rd(x, y)] != t.rd(fx, fy) {
                r.record("preserves.right_residual", &[x, y]);
            }
        }
    }
    r
}

/// All embeddings of `source` into `target`, in lexicographic order of the
/// index maps. Both algebras must be residuated lattices.
pub fn find_embeddings(source: &FinAlgebra, target: &FinAlgebra) -> Result<Vec<Vec<usize>>> {
    let s = source.residuated()?;
    let t = target.residuated()?;
    let mut out = Vec::new();
    let mut map = Vec::with_capacity(s.n());
    let mut used = vec![false; t.n()];
    extend_embedding(&s, &t, &mut map, &mut used, &mut out);
    Ok(out)
}

fn extend_embedding(
    s: &FinAlgebra,
    t: &FinAlgebra,
    map: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let k = map.len();
    if k == s.n() {
        if homomorphism_report(s, t, map).ok() {
            out.push(map.clone());
        }
        return;
    }
    for v in 0..t.n() {
        if used[v] || (k == s.unit()) != (v == t.unit()) {
            continue;
        }
        map.push(v);
        // partial check on the images fixed so far
        let consistent = (0..=k).all(|x| {
            (0..=k).all(|y| {
                let img = |z: usize| if z <= k { Some(map[z]) } else { None };
                let (fx, fy) = (map[x], map[y]);
                s.leq(x, y) == t.leq(fx, fy)
                    && [
                        (s.mul(x, y), t.mul(fx, fy)),
                        (s.meet(x, y), t.meet(fx, fy)),
                        (s.join(x, y), t.join(fx, fy)),
                        (s.ld(x, y), t.ld(fx, fy)),
                        (s.rd(x, y), t.rd(fx, fy)),
                    ]
                    .iter()
                    .all(|&(sv, tv)| img(sv).is_none_or(|m| m == tv))
            })
        });
        if consistent {
            used[v] = true;
            extend_embedding(s, t, map, used, out);
            used[v] = false;
        }
        map.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{compile, LacedCode};

    fn two_chain() -> FinAlgebra {
        FinAlgebra::chain_from_fn(2, 1, usize::min).unwrap()
    }

    fn c4() -> FinAlgebra {
        compile(&"C".parse::<LacedCode>().unwrap()).algebra
    }

    #[test]
    fn boolean_chain_is_valid() {
        assert!(validate(&two_chain()).ok());
    }

    #[test]
    fn c4_with_residuals_is_valid() {
        let a = c4();
        assert!(a.has_residuals());
        assert!(validate(&a).ok());
        assert!(validate(&a.clone().without_residuals()).ok());
    }

    #[test]
    fn non_monotone_product_is_rejected() {
        // chain 0<1<2, unit 2, meet except 0·1 = 2
        let a = FinAlgebra::chain_from_fn(3, 2, |x, y| if (x, y) == (0, 1) { 2 } else { x.min(y) }).unwrap();
        let r = validate(&a);
        assert!(!r.ok());
        assert!(r.has("residuation.left") || r.has("residuation.right"));
        // tables that claim to be residuals are rejected too
        let b = a
            .with_residual_tables(
                Some(vec![vec![2, 2, 2], vec![0, 2, 2], vec![0, 1, 2]]),
                Some(vec![vec![2, 0, 0], vec![2, 2, 1], vec![2, 2, 2]]),
            )
            .unwrap();
        assert!(!validate(&b).ok());
    }

    #[test]
    fn non_lattice_order_reported() {
        // two maximal elements
        let m = vec![vec![true, true, true], vec![false, true, false], vec![false, false, true]];
        let a = FinAlgebra::new(3, crate::algebra::Order::Matrix(m), 0, vec![vec![0, 1, 2]; 3]).unwrap();
        assert!(validate(&a).has("lattice.join"));
    }

    #[test]
    fn identity_and_bad_maps() {
        let a = c4();
        assert!(check_homomorphism(&Embedding::identity(&a)).unwrap().ok());
        let b = two_chain();
        // ⊥ ↦ c, 1 ↦ 1: ⊥\⊥ = 1 but c\c = c♯
        let r = check_homomorphism(&Embedding::new(&b, &a, vec![1, 2])).unwrap();
        assert!(!r.ok());
        assert!(r.has("preserves.left_residual"));
        assert!(matches!(
            check_homomorphism(&Embedding::new(&b, &a, vec![2, 2])),
            Err(Error::NotInjective(0, 1))
        ));
    }

    #[test]
    fn embeddings_of_two_chain() {
        let a = c4();
        // ⊥\⊥ = c♯ in C₄, so even ⊥ ↦ ⊥ fails
        assert!(find_embeddings(&two_chain(), &a).unwrap().is_empty());
        let godel3 = FinAlgebra::chain_from_fn(3, 2, usize::min).unwrap();
        assert_eq!(find_embeddings(&two_chain(), &godel3).unwrap(), vec![vec![0, 2], vec![1, 2]]);
    }
}
