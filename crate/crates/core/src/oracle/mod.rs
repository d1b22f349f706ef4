//! Brute-force model finder for small residuated lattices, and isomorphism
//! machinery. Shares nothing with the structural enumerators apart from the
//! data model and the validator.

mod canonical;
mod lattices;
mod search;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use canonical::{
    canonical, canonical_labeling, canonical_representative, for_each_linear_extension, is_isomorphic,
    CanonicalForm,
};
pub use lattices::lattices;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_BRUTE: usize = 6;

/// Requested properties of the models. Residuation is always required.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConstraintSet {
    pub idempotent: bool,
    pub commutative: bool,
    pub conservative: bool,
    pub chain: bool,
}

impl ConstraintSet {
    pub fn names(&self) -> Vec<&'static str> {
        let mut out = vec!["residuated"];
        for (on, name) in [
            (self.idempotent, "idempotent"),
            (self.commutative, "commutative"),
            (self.conservative, "conservative"),
            (self.chain, "chain"),
        ] {
            if on {
                out.push(name);
            }
        }
        out
    }
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names().join(","))
    }
}

impl FromStr for ConstraintSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cs = ConstraintSet::default();
        for word in s.split(',').map(str::trim).filter(|w| !w.is_empty()) {
            match word {
                "idempotent" => cs.idempotent = true,
                "commutative" => cs.commutative = true,
                "conservative" => cs.conservative = true,
                "chain" => cs.chain = true,
                // residuated finite lattices always have an annihilating bottom
                "residuated" | "bounded-annihilating-bottom" => {}
                other => {
                    return Err(Error::Parse {
                        what: "constraints",
                        detail: format!("unknown constraint {other:?}"),
                    })
                }
            }
        }
        Ok(cs)
    }
}

/// All models of size `n` up to isomorphism, each in canonical labeling and
/// sorted by canonical form. Sizes above [`DEFAULT_MAX_BRUTE`] are refused.
pub fn brute_force(n: usize, cs: &ConstraintSet) -> Result<Vec<FinAlgebra>> {
    brute_force_bounded(n, cs, DEFAULT_MAX_BRUTE, 1)
}

/// [`brute_force`] with an explicit size cap and worker count.
pub fn brute_force_bounded(n: usize, cs: &ConstraintSet, max: usize, jobs: usize) -> Result<Vec<FinAlgebra>> {
    if n > max {
        return Err(Error::TooLarge { n, max });
    }
    if n == 0 {
        return Err(Error::SizeTooSmall(0, 1));
    }
    let orders = if cs.chain { vec![lattices::chain(n)] } else { lattices(n) };
    let mut found: BTreeMap<CanonicalForm, FinAlgebra> = BTreeMap::new();
    for order in &orders {
        for unit in 0..n {
            for model in search::products(order, unit, cs, jobs.max(1)) {
                let (form, perm) = canonical_labeling(&model);
                found.entry(form).or_insert_with(|| {
                    model
                        .relabel(&perm)
                        .into_chain_tag()
                        .with_residuals()
                        .expect("search only emits residuated models")
                });
            }
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{properties, validate};

    fn cs(s: &str) -> ConstraintSet {
        s.parse().unwrap()
    }

    #[test]
    fn parse_constraints() {
        let c = cs("conservative, commutative");
        assert!(c.conservative && c.commutative && !c.chain);
        assert_eq!(c.to_string(), "residuated,commutative,conservative");
        assert!("frobnicate".parse::<ConstraintSet>().is_err());
    }

    #[test]
    fn small_censuses() {
        assert_eq!(brute_force(3, &cs("idempotent,chain")).unwrap().len(), 2);
        assert_eq!(brute_force(4, &cs("conservative,commutative")).unwrap().len(), 5);
        assert_eq!(brute_force(4, &cs("idempotent,chain,commutative")).unwrap().len(), 4);
        assert_eq!(brute_force(1, &cs("conservative")).unwrap().len(), 1);
    }

    #[test]
    fn models_carry_requested_flags() {
        for m in brute_force(4, &cs("idempotent")).unwrap() {
            assert!(validate(&m).ok());
            assert!(properties(&m).idempotent);
        }
    }

    #[test]
    fn size_cap() {
        assert!(matches!(brute_force(7, &cs("chain,idempotent")), Err(Error::TooLarge { n: 7, max: 6 })));
    }
}
