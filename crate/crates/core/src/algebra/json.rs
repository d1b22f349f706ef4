use serde::{Deserialize, Serialize};

use super::{FinAlgebra, Order};
use crate::error::{Error, Result};

/// On-disk form of an algebra. Tables are row-major with the row index as the
/// left (first) argument; `leq` is either the string `"chain"` or a 0/1 matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub n: usize,
    pub unit: usize,
    pub leq: LeqDoc,
    pub prod: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ld: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rd: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LeqDoc {
    Tag(String),
    Matrix(Vec<Vec<u8>>),
}

impl From<&FinAlgebra> for AlgebraDoc {
    fn from(a: &FinAlgebra) -> Self {
        let leq = match a.order() {
            Order::Chain => LeqDoc::Tag("chain".to_string()),
            Order::Matrix(m) => {
                LeqDoc::Matrix(m.into_iter().map(|row| row.into_iter().map(u8::from).collect()).collect())
            }
        };
        AlgebraDoc { n: a.n(), unit: a.unit(), leq, prod: a.prod_table(), ld: a.ld_table(), rd: a.rd_table() }
    }
}

impl TryFrom<AlgebraDoc> for FinAlgebra {
    type Error = Error;

    fn try_from(doc: AlgebraDoc) -> Result<Self> {
        let order = match doc.leq {
            LeqDoc::Tag(t) if t == "chain" => Order::Chain,
            LeqDoc::Tag(t) => return Err(Error::Parse { what: "leq", detail: format!("unknown tag {t:?}") }),
            LeqDoc::Matrix(m) => {
                let mut rows = Vec::with_capacity(m.len());
                for row in m {
                    let mut out = Vec::with_capacity(row.len());
                    for v in row {
                        match v {
                            0 => out.push(false),
                            1 => out.push(true),
                            other => {
                                return Err(Error::Parse {
                                    what: "leq",
                                    detail: format!("entry {other} is not 0 or 1"),
                                })
                            }
                        }
                    }
                    rows.push(out);
                }
                Order::Matrix(rows)
            }
        };
        FinAlgebra::new(doc.n, order, doc.unit, doc.prod)?.with_residual_tables(doc.ld, doc.rd)
    }
}
