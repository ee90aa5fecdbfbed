//! Exact truncated bivariate series, the closed-form generating functions
//! for every descent family, recurrence-built descent tables, and the
//! three-way comparison between them and the exhaustive oracle.

mod bivariate;
mod cross_check;
mod named;
mod poly;
mod table;

pub use bivariate::BivariateSeries;
pub use cross_check::{
    check_identities, cross_check, AuxCheck, CellCheck, CellStatus, CrossCheckReport, IdentityCheck,
};
pub use named::{build_named_series, eulerian_123_rows, NamedSeries};
pub use poly::YPoly;
pub use table::{build_table, oracle_table, series_table, DescentTable, Family, REFERENCE_T_ROWS};

use thiserror::Error;

use crate::oracle::OracleError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term {0} is not invertible")]
    NonUnitConstant(String),
    #[error("constant term {0} is not the square of a positive rational")]
    NonSquareConstant(String),
    #[error("series is not divisible by {0}")]
    NotDivisible(String),
    #[error("series of order {order} cannot be divided by x^{needed}")]
    OrderExhausted { order: usize, needed: usize },
    #[error("coefficient of x^{n} y^{d} is not an integer")]
    NonInteger { n: usize, d: usize },
    #[error("coefficient of x^{n} y^{d} is outside the degree bound d <= 2n+1")]
    DegreeBound { n: usize, d: usize },
    #[error("negative table entry at n={n}, d={d}")]
    NegativeEntry { n: usize, d: usize },
    #[error("unknown {kind} {name:?}")]
    UnknownName { kind: &'static str, name: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
