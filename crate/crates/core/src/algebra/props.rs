use serde::Serialize;

use super::FinAlgebra;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyFlags {
    pub idempotent: bool,
    pub commutative: bool,
    pub conservative: bool,
    pub totally_ordered: bool,
    pub odd_sugihara: bool,
}

impl PropertyFlags {
    pub fn names(&self) -> Vec<&'static str> {
        [
            (self.idempotent, "idempotent"),
            (self.commutative, "commutative"),
            (self.conservative, "conservative"),
            (self.totally_ordered, "totally_ordered"),
            (self.odd_sugihara, "odd_sugihara"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }
}

/// Exhaustive table scan. `odd_sugihara` additionally needs `x ↦ x\1` to be an
/// involution fixing the unit; residuals are computed if absent.
pub fn properties(a: &FinAlgebra) -> PropertyFlags {
    let n = a.n();
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let idempotent = (0..n).all(|x| a.mul(x, x) == x);
    let commutative = pairs().all(|(x, y)| a.mul(x, y) == a.mul(y, x));
    let conservative = pairs().all(|(x, y)| {
        let p = a.mul(x, y);
        p == x || p == y
    });
    let totally_ordered = a.is_totally_ordered();
    let odd_sugihara = totally_ordered
        && commutative
        && idempotent
        && a.residuated().is_ok_and(|r| {
            let u = r.unit();
            let neg = |x: usize| r.ld(x, u);
            neg(u) == u && (0..n).all(|x| neg(neg(x)) == x)
        });
    PropertyFlags { idempotent, commutative, conservative, totally_ordered, odd_sugihara }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Order;
    use crate::constructions::{c4, sugihara_from_involution};

    #[test]
    fn boolean_chain() {
        let f = properties(&FinAlgebra::chain_from_fn(2, 1, usize::min).unwrap());
        assert!(f.idempotent && f.commutative && f.conservative && f.totally_ordered);
        // ¬⊥ = 1 and ¬1 = 1, so ¬ is not an involution
        assert!(!f.odd_sugihara);
    }

    #[test]
    fn c4_flags() {
        let f = properties(&c4());
        assert!(!f.commutative);
        assert!(f.conservative && f.totally_ordered && f.idempotent);
        assert!(!f.odd_sugihara);
    }

    #[test]
    fn square_of_boolean_chain_is_not_conservative() {
        // 2×2 with pairs encoded as 2a+b; meet is the product
        let m = (0..4).map(|x| (0..4).map(|y| (x & y) == x).collect()).collect();
        let a = FinAlgebra::from_fn(4, Order::Matrix(m), 3, |x, y| x & y).unwrap();
        let f = properties(&a);
        assert!(f.idempotent && f.commutative);
        assert!(!f.conservative && !f.totally_ordered);
    }

    #[test]
    fn sugihara_chains_are_odd() {
        for n in [1, 3, 5, 7] {
            assert!(properties(&sugihara_from_involution(n).unwrap()).odd_sugihara);
        }
    }
}
