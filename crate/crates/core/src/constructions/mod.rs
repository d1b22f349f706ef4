//! Ways of building residuated lattices from smaller data.

mod amalgam;
mod catalan;
mod fep;
mod sugihara;
mod tensor;

pub use amalgam::{amalgamate_cic, amalgamate_osm, merge_chains, Amalgam, Span};
pub use catalan::{catalan_decompose, catalan_sum, enumerate_catalan};
pub use fep::{check_partial_preservation, fep_closure, FepClosure};
pub use sugihara::{abs_chain, abs_monoid, sugihara_from_involution};
pub use tensor::{tensor, FiberSpec, SkeletonDecomposition};

use crate::algebra::FinAlgebra;
use crate::chains::{compile, LacedCode};

/// The four-element chain `⊥ < c < 1 < c♯` whose product is `xy = x` unless
/// `y` sits strictly below `x` in the monoidal preorder, with `c ∼ c♯`.
pub fn c4() -> FinAlgebra {
    compile(&LacedCode::new(vec![crate::chains::Letter::CPair])).algebra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{congruences, properties, validate};

    #[test]
    fn c4_basics() {
        let a = c4();
        assert!(validate(&a).ok());
        let f = properties(&a);
        assert!(!f.commutative && f.conservative);
        assert_eq!(congruences(&a).unwrap().len(), 2);
        assert_ne!(a.prod_table(), a.opposite().prod_table());
    }
}
