//! Closed-form generating functions, expanded exactly.
//!
//! | name | class                          |
//! |------|--------------------------------|
//! | Q    | `C_{2n}(132)`                  |
//! | R    | `C_{2n+1}(132)`                |
//! | E    | `S_n(123)`                     |
//! | V    | `C_{2n+1}(123)`                |
//! | K    | image of `phi` is a Dyck path  |
//! | CK   | ... an elevated Dyck path      |
//! | S    | ... an elevated proper prefix  |
//! | T    | `C_{2n}(123)`                  |
//!
//! Q and R are expanded exactly as their printed rational forms; where those
//! forms disagree with the class counts the tables are authoritative (see
//! [`super::cross_check`]).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::{BivariateSeries, SeriesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedSeries {
    Q,
    R,
    E,
    V,
    K,
    CK,
    S,
    T,
}

impl NamedSeries {
    pub const ALL: [NamedSeries; 8] = [
        NamedSeries::Q,
        NamedSeries::R,
        NamedSeries::E,
        NamedSeries::V,
        NamedSeries::K,
        NamedSeries::CK,
        NamedSeries::S,
        NamedSeries::T,
    ];
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedSeries::Q => "Q",
            NamedSeries::R => "R",
            NamedSeries::E => "E",
            NamedSeries::V => "V",
            NamedSeries::K => "K",
            NamedSeries::CK => "CK",
            NamedSeries::S => "S",
            NamedSeries::T => "T",
        })
    }
}

impl FromStr for NamedSeries {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedSeries::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| SeriesError::UnknownName {
                kind: "series",
                name: s.to_string(),
            })
    }
}

/// Expands `name` through `x^order`, checking that every coefficient is an
/// integer within the degree bound `d <= 2n + 1`.
pub fn build_named_series(name: NamedSeries, order: usize) -> Result<BivariateSeries, SeriesError> {
    let series = expand(name, order)?;
    let rows = series.to_integer_rows()?;
    for (n, row) in rows.iter().enumerate() {
        if row.len() > 2 * n + 2 {
            return Err(SeriesError::DegreeBound { n, d: row.len() - 1 });
        }
    }
    Ok(series)
}

pub(crate) fn expand(name: NamedSeries, order: usize) -> Result<BivariateSeries, SeriesError> {
    match name {
        NamedSeries::Q => {
            BivariateSeries::from_terms(order, &[(1, 1, 0), (1, 1, 1)]).div(&one_minus_x_one_plus_y2(order))
        }
        NamedSeries::R => BivariateSeries::from_terms(order, &[(1, 1, 0)]).div(&one_minus_x_one_plus_y2(order)),
        NamedSeries::E => series_e(order),
        NamedSeries::V => series_v(order),
        NamedSeries::K => series_k(order),
        NamedSeries::CK => {
            let k = series_k(order)?;
            Ok(ck_from_k(&k))
        }
        NamedSeries::T => {
            let k = series_k(order)?;
            t_from_k(&k)
        }
        NamedSeries::S => {
            let k = series_k(order)?;
            let t = t_from_k(&k)?;
            Ok(s_from_t_k(&t, &k))
        }
    }
}

fn one_minus_x_one_plus_y2(order: usize) -> BivariateSeries {
    BivariateSeries::from_terms(order, &[(1, 0, 0), (-1, 1, 0), (-1, 1, 2)])
}

/// `1 - 4x y^a - 4x^2 y^a + 4x^2 y^{2a}`.
fn radicand(order: usize, a: usize) -> BivariateSeries {
    BivariateSeries::from_terms(order, &[(1, 0, 0), (-4, 1, a), (-4, 2, a), (4, 2, 2 * a)])
}

fn series_e(order: usize) -> Result<BivariateSeries, SeriesError> {
    let work = order + 1;
    let poly = BivariateSeries::from_terms(
        work,
        &[(-1, 0, 0), (2, 1, 1), (2, 2, 1), (-2, 1, 2), (-4, 2, 2), (2, 2, 3)],
    );
    let numerator = &poly + &radicand(work, 1).sqrt()?;
    let denominator = BivariateSeries::from_terms(order, &[(2, 1, 1), (-2, 0, 0), (-2, 1, 0)]);
    numerator.div_x(1)?.div_y(2)?.div(&denominator)
}

fn series_v(order: usize) -> Result<BivariateSeries, SeriesError> {
    let work = order + 1;
    let numerator = &radicand(work, 2).sqrt()? - &BivariateSeries::one(work);
    let denominator = BivariateSeries::from_terms(order, &[(-2, 0, 0), (-2, 1, 0), (2, 1, 2)]);
    numerator.div_x(1)?.div_y(2)?.div(&denominator)
}

fn series_k(order: usize) -> Result<BivariateSeries, SeriesError> {
    let work = order + 1;
    let poly = BivariateSeries::from_terms(work, &[(1, 0, 0), (-2, 1, 2), (-2, 2, 2), (2, 2, 4)]);
    let numerator = &poly - &radicand(work, 2).sqrt()?;
    let denominator = BivariateSeries::from_terms(order, &[(2, 0, 0), (-2, 1, 2), (2, 1, 0)]);
    let fraction = numerator.div_x(1)?.div_y(3)?.div(&denominator)?;
    Ok(&BivariateSeries::one(order) + &fraction)
}

/// `CK = x y^2 (K - 1 - x y) + x^2 y^2 (1 - y^2)(K - 1) + 1 + x y + x^2 y`.
pub(crate) fn ck_from_k(k: &BivariateSeries) -> BivariateSeries {
    let order = k.order();
    let one = BivariateSeries::one(order);
    let k1 = k - &one;
    let xy = BivariateSeries::from_terms(order, &[(1, 1, 1)]);
    let first = (&k1 - &xy).shift_x(1).shift_y(2);
    let second = &BivariateSeries::from_terms(order, &[(1, 2, 2), (-1, 2, 4)]) * &k1;
    let tail = BivariateSeries::from_terms(order, &[(1, 0, 0), (1, 1, 1), (1, 2, 1)]);
    &(&first + &second) + &tail
}

/// `T = (-x y^3 K^2 + (1 - 2x y^2 + x y + x y^3) K + x y^2 - 2x y + x)
///      / (1 - x y + x y^3 - x y^2 K - x y^3 K)`.
pub(crate) fn t_from_k(k: &BivariateSeries) -> Result<BivariateSeries, SeriesError> {
    let order = k.order();
    let terms = |t: &[(i64, usize, usize)]| BivariateSeries::from_terms(order, t);
    let k2 = k * k;
    let numerator = &(&(-&(&terms(&[(1, 1, 3)]) * &k2))
        + &(&terms(&[(1, 0, 0), (-2, 1, 2), (1, 1, 1), (1, 1, 3)]) * k))
        + &terms(&[(1, 1, 2), (-2, 1, 1), (1, 1, 0)]);
    let denominator = &terms(&[(1, 0, 0), (-1, 1, 1), (1, 1, 3)]) - &(&terms(&[(1, 1, 2), (1, 1, 3)]) * k);
    numerator.div(&denominator)
}

/// `S = 1 + x + x y (T - 1) + x y^2 T - x y^2 K`.
pub(crate) fn s_from_t_k(t: &BivariateSeries, k: &BivariateSeries) -> BivariateSeries {
    let order = t.order().min(k.order());
    let one = BivariateSeries::one(order);
    let base = BivariateSeries::from_terms(order, &[(1, 0, 0), (1, 1, 0)]);
    let a = (t - &one).shift_x(1).shift_y(1);
    let b = t.shift_x(1).shift_y(2);
    let c = k.shift_x(1).shift_y(2);
    &(&(&base + &a) + &b) - &c
}

/// `e_{n,k}`: number of 123-avoiding permutations of length `n` with `k`
/// descents, read off the expansion of `E`.
pub fn eulerian_123_rows(max_n: usize) -> Result<Vec<Vec<BigInt>>, SeriesError> {
    build_named_series(NamedSeries::E, max_n)?.to_integer_rows()
}
