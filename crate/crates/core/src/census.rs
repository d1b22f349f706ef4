//! Counts per size for each class, computed by every available method.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::chains::enumerate_codes;
use crate::constructions::enumerate_catalan;
use crate::counting::{catalan_count, count_cic, count_ic_closed, count_ic_formula, count_ic_recurrence};
use crate::error::{Error, Result};
use crate::oracle::{brute_force_bounded, ConstraintSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    /// Commutative idempotent residuated chains.
    Cic,
    /// Idempotent residuated chains.
    Ic,
    /// Commutative conservative residuated lattices.
    Catalan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Recurrence,
    Closed,
    Enumerate,
    Bruteforce,
}

impl Class {
    pub fn name(self) -> &'static str {
        match self {
            Class::Cic => "cic",
            Class::Ic => "ic",
            Class::Catalan => "catalan",
        }
    }

    pub fn min_size(self) -> usize {
        match self {
            Class::Catalan => 1,
            _ => 2,
        }
    }

    pub fn methods(self) -> &'static [Method] {
        use Method::*;
        match self {
            Class::Cic => &[Formula, Enumerate, Bruteforce],
            Class::Ic => &[Formula, Recurrence, Closed, Enumerate, Bruteforce],
            Class::Catalan => &[Formula, Recurrence, Enumerate, Bruteforce],
        }
    }

    /// The brute-force query for this class.
    pub fn constraints(self) -> ConstraintSet {
        match self {
            Class::Cic => {
                ConstraintSet { idempotent: true, commutative: true, chain: true, ..Default::default() }
            }
            Class::Ic => ConstraintSet { idempotent: true, chain: true, ..Default::default() },
            Class::Catalan => ConstraintSet { conservative: true, commutative: true, ..Default::default() },
        }
    }
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Recurrence => "recurrence",
            Method::Closed => "closed",
            Method::Enumerate => "enumerate",
            Method::Bruteforce => "bruteforce",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Class::Cic, Class::Ic, Class::Catalan]
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse { what: "class", detail: format!("unknown class {s:?}") })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use Method::*;
        [Formula, Recurrence, Closed, Enumerate, Bruteforce]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse { what: "method", detail: format!("unknown method {s:?}") })
    }
}

fn as_string<S: Serializer>(
    v: &BTreeMap<Method, Option<BigUint>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let m: BTreeMap<&str, Option<String>> =
        v.iter().map(|(k, x)| (k.name(), x.as_ref().map(BigUint::to_string))).collect();
    m.serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub size: usize,
    /// `None` when the method was skipped (brute force above the size cap).
    #[serde(serialize_with = "as_string")]
    pub values: BTreeMap<Method, Option<BigUint>>,
}

impl CensusRow {
    pub fn agrees(&self) -> bool {
        let mut known = self.values.values().flatten();
        match known.next() {
            Some(first) => known.all(|v| v == first),
            None => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub class: Class,
    pub methods: Vec<Method>,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn agrees(&self) -> bool {
        self.rows.iter().all(CensusRow::agrees)
    }

    /// Aligned text table, one row per size.
    pub fn table(&self) -> String {
        let mut header = vec!["size".to_string()];
        header.extend(self.methods.iter().map(|m| m.name().to_string()));
        let mut lines = vec![header];
        for r in &self.rows {
            let mut line = vec![r.size.to_string()];
            for m in &self.methods {
                line.push(match r.values.get(m) {
                    Some(Some(v)) => v.to_string(),
                    _ => "-".to_string(),
                });
            }
            lines.push(line);
        }
        let widths: Vec<usize> =
            (0..lines[0].len()).map(|i| lines.iter().map(|l| l[i].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for l in &lines {
            let cells: Vec<String> = l.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}", w = *w)).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Catalan numbers by the convolution recursion.
fn catalan_by_convolution(n: usize) -> BigUint {
    let mut c: Vec<BigUint> = vec![BigUint::from(1u8)];
    for m in 1..n {
        let next = (0..m).map(|k| &c[k] * &c[m - 1 - k]).sum();
        c.push(next);
    }
    c[n - 1].clone()
}

pub fn count_by(
    class: Class,
    method: Method,
    n: usize,
    brute_cap: usize,
    jobs: usize,
) -> Result<Option<BigUint>> {
    if n < class.min_size() {
        return Err(Error::SizeTooSmall(n, class.min_size()));
    }
    if !class.methods().contains(&method) {
        return Err(Error::Parse {
            what: "method",
            detail: format!("{method} is not available for class {class}"),
        });
    }
    let v = match (class, method) {
        (Class::Cic, Method::Formula) => count_cic(n)?,
        (Class::Ic, Method::Formula) => count_ic_formula(n)?,
        (Class::Ic, Method::Recurrence) => count_ic_recurrence(n)?,
        (Class::Ic, Method::Closed) => count_ic_closed(n)?,
        (Class::Catalan, Method::Formula) => catalan_count(n)?,
        (Class::Catalan, Method::Recurrence) => catalan_by_convolution(n),
        (Class::Cic, Method::Enumerate) => enumerate_codes(n, true)?.count().into(),
        (Class::Ic, Method::Enumerate) => enumerate_codes(n, false)?.count().into(),
        (Class::Catalan, Method::Enumerate) => enumerate_catalan(n)?.len().into(),
        (_, Method::Bruteforce) => {
            if n > brute_cap {
                return Ok(None);
            }
            brute_force_bounded(n, &class.constraints(), brute_cap, jobs)?.len().into()
        }
        _ => unreachable!("checked against Class::methods"),
    };
    Ok(Some(v))
}

pub fn census(
    class: Class,
    sizes: impl IntoIterator<Item = usize>,
    methods: &[Method],
    brute_cap: usize,
    jobs: usize,
) -> Result<CensusReport> {
    let mut rows = Vec::new();
    for size in sizes {
        let mut values = BTreeMap::new();
        for &m in methods {
            values.insert(m, count_by(class, m, size, brute_cap, jobs)?);
        }
        rows.push(CensusRow { size, values });
    }
    Ok(CensusReport { class, methods: methods.to_vec(), rows })
}
