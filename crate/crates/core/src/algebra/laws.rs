//! Quantified structural facts about idempotent algebras, each checked
//! exhaustively on a finite algebra. Every suite only inspects the algebras
//! its hypothesis covers and reports nothing otherwise.

use std::collections::BTreeSet;

use super::{congruences, generated_subalgebra, monoidal_preorder, properties, CheckReport, FinAlgebra};

fn idempotent(a: &FinAlgebra) -> bool {
    (0..a.n()).all(|x| a.mul(x, x) == x)
}

fn is_neg(a: &FinAlgebra, x: usize) -> bool {
    a.leq(x, a.unit())
}

fn is_pos(a: &FinAlgebra, x: usize) -> bool {
    a.leq(a.unit(), x)
}

/// `x∧y ≤ xy ≤ x∨y`, with `xy = x∨y` above the unit and `xy = x∧y` below it.
pub fn product_bounds(a: &FinAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    if !idempotent(a) || !a.is_lattice() {
        return r;
    }
    let u = a.unit();
    for x in 0..a.n() {
        for y in 0..a.n() {
            let (p, m, j) = (a.mul(x, y), a.meet(x, y), a.join(x, y));
            if !a.leq(m, p) {
                r.record("bounds.meet_below_product", &[x, y]);
            }
            if !a.leq(p, j) {
                r.record("bounds.product_below_join", &[x, y]);
            }
            if a.leq(u, p) && p != j {
                r.record("bounds.above_unit_is_join", &[x, y]);
            }
            if a.leq(p, u) && p != m {
                r.record("bounds.below_unit_is_meet", &[x, y]);
            }
        }
    }
    r
}

/// Products inside the negative cone are meets, inside the positive cone joins.
pub fn cone_products(a: &FinAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    if !idempotent(a) || !a.is_lattice() {
        return r;
    }
    for x in 0..a.n() {
        for y in 0..a.n() {
            if is_neg(a, x) && is_neg(a, y) && a.mul(x, y) != a.meet(x, y) {
                r.record("cones.negative_product_is_meet", &[x, y]);
            }
            if is_pos(a, x) && is_pos(a, y) && a.mul(x, y) != a.join(x, y) {
                r.record("cones.positive_product_is_join", &[x, y]);
            }
        }
    }
    r
}

/// `⊑` is a preorder with the unit on top and the lattice bottom (if any) at
/// the bottom.
pub fn preorder_facts(a: &FinAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    let Ok(p) = monoidal_preorder(a) else { return r };
    let n = a.n();
    for x in 0..n {
        if !p.le(x, x) {
            r.record("preorder.reflexive", &[x]);
        }
        if !p.le(x, a.unit()) {
            r.record("preorder.unit_greatest", &[x]);
        }
        if let Some(b) = a.bottom() {
            if !p.le(b, x) {
                r.record("preorder.bottom_least", &[x]);
            }
        }
        for y in 0..n {
            for z in 0..n {
                if p.le(x, y) && p.le(y, z) && !p.le(x, z) {
                    r.record("preorder.transitive", &[x, y, z]);
                }
            }
        }
    }
    r
}

/// In a conservative algebra, `↓1 ∪ ↑1` is totally ordered.
pub fn conservative_cones_are_chains(a: &FinAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    if !properties(a).conservative {
        return r;
    }
    let cone: Vec<usize> = (0..a.n()).filter(|&x| is_neg(a, x) || is_pos(a, x)).collect();
    for &x in &cone {
        for &y in &cone {
            if !a.leq(x, y) && !a.leq(y, x) {
                r.record("conservative.cone_total", &[x, y]);
            }
        }
    }
    r
}

/// An idempotent chain is conservative and `xy = x` if `x ⊑ y`, else `y`.
pub fn chain_product_from_preorder(a: &FinAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    if !idempotent(a) || !a.is_totally_ordered() {
        return r;
    }
    if !properties(a).conservative {
        r.record("chain.conservative", &[]);
    }
    let Ok(p) = monoidal_preorder(a) else { return r };
    for x in 0..a.n() {
        for y in 0..a.n() {
            let expect = if p.le(x, y) { x } else { y };
            if a.mul(x, y) != expect {
                r.record("chain.product_from_preorder", &[x, y]);
            }
        }
    }
    r
}

/// In an idempotent chain every element is central or has exactly one
/// non-commuting partner, of opposite sign and either `∼` or `⋈` to it.
pub fn central_or_pair(a: &FinAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    if !idempotent(a) || !a.is_totally_ordered() {
        return r;
    }
    let Ok(p) = monoidal_preorder(a) else { return r };
    for x in 0..a.n() {
        let others: Vec<usize> = (0..a.n()).filter(|&y| a.mul(x, y) != a.mul(y, x)).collect();
        match others.as_slice() {
            [] => {}
            [y] => {
                let y = *y;
                let same_sign = (is_neg(a, x) && is_neg(a, y)) || (is_pos(a, x) && is_pos(a, y));
                if same_sign {
                    r.record("pair.opposite_signs", &[x, y]);
                }
                if !p.equiv(x, y) && !p.incomparable(x, y) {
                    r.record("pair.equivalent_or_incomparable", &[x, y]);
                }
            }
            [y, z, ..] => r.record("pair.unique_partner", &[x, *y, *z]),
        }
    }
    r
}

/// For `x ∉ {a, a♯}`: `a ⊑ x ⟺ a♯ ⊑ x` and `x ⊑ a ⟺ x ⊑ a♯`.
pub fn pairs_are_laced(a: &FinAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    if !idempotent(a) || !a.is_totally_ordered() {
        return r;
    }
    let Ok(p) = monoidal_preorder(a) else { return r };
    for x in 0..a.n() {
        let s = p.sharp(x);
        if s == x {
            continue;
        }
        for y in (0..a.n()).filter(|&y| y != x && y != s) {
            if p.le(x, y) != p.le(s, y) {
                r.record("laced.above", &[x, s, y]);
            }
            if p.le(y, x) != p.le(y, s) {
                r.record("laced.below", &[x, s, y]);
            }
        }
    }
    r
}

/// Conservative implies idempotent; totally ordered and idempotent implies
/// conservative.
pub fn flag_implications(a: &FinAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    let f = properties(a);
    if f.conservative && !f.idempotent {
        r.record("flags.conservative_implies_idempotent", &[]);
    }
    if f.totally_ordered && f.idempotent && !f.conservative {
        r.record("flags.idempotent_chain_is_conservative", &[]);
    }
    r
}

/// The congruence list contains `Δ` and `∇` and is closed under intersection.
pub fn congruence_facts(a: &FinAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    let Ok(cons) = congruences(a) else { return r };
    let n = a.n();
    if !cons.iter().any(|p| p.is_discrete()) {
        r.record("congruence.has_delta", &[n]);
    }
    if !cons.iter().any(|p| p.is_total()) {
        r.record("congruence.has_nabla", &[n]);
    }
    for (i, p) in cons.iter().enumerate() {
        for (j, q) in cons.iter().enumerate() {
            if !cons.contains(&p.intersect(q)) {
                r.record("congruence.meet_closed", &[i, j]);
            }
        }
    }
    r
}

/// Every suite above.
pub fn check_all(a: &FinAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    for suite in [
        product_bounds,
        cone_products,
        preorder_facts,
        conservative_cones_are_chains,
        chain_product_from_preorder,
        central_or_pair,
        pairs_are_laced,
        flag_implications,
        congruence_facts,
    ] {
        r.merge(suite(a));
    }
    r
}

/// `|⟨Y⟩| ≤ bound(|Y|)` for every seed `Y` with `1 ≤ |Y| ≤ max_seed`, on
/// commutative idempotent chains. Witness: the seed followed by the size of
/// the generated set.
pub fn generation_bound(a: &FinAlgebra, max_seed: usize, bound: fn(usize) -> usize) -> CheckReport {
    let mut r = CheckReport::new();
    let f = properties(a);
    if !(f.totally_ordered && f.commutative && f.idempotent) {
        return r;
    }
    let Ok(a) = a.residuated() else { return r };
    for seed in subsets_up_to(a.n(), max_seed) {
        if seed.is_empty() {
            continue;
        }
        let set: BTreeSet<usize> = seed.iter().copied().collect();
        let size = generated_subalgebra(&a, &set).map_or(0, |g| g.len());
        if size > bound(seed.len()) {
            let mut w = seed.clone();
            w.push(size);
            r.record("generation.size_bound", &w);
        }
    }
    r
}

/// All subsets of `0..n` with at most `k` elements, in lexicographic order.
pub fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == k {
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
