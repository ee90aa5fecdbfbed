//! Descent tables: `rows[n][d]` counts members of the `n`-th class of a
//! family with `d` descents.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use super::{build_named_series, BivariateSeries, NamedSeries, SeriesError};
use crate::oracle::{descent_histogram, ClassSpec, DescentHistogram, OracleError, OracleLimits, Subclass};

/// The first rows of the `C_{2n}(123)` table.
pub const REFERENCE_T_ROWS: [&[u64]; 6] = [
    &[1],
    &[1, 1],
    &[0, 2, 3, 1],
    &[0, 0, 3, 9, 7, 1],
    &[0, 0, 0, 6, 20, 28, 15, 1],
    &[0, 0, 0, 0, 10, 50, 85, 75, 31, 1],
];

/// A family of classes indexed by `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `C_{2n}(132)`.
    Q,
    /// `C_{2n+1}(132)`.
    R,
    /// `C_{2n+1}(123)`.
    V,
    /// Members of `C_{2n}(123)` whose image path is a Dyck path.
    K,
    /// ... an elevated Dyck path.
    CK,
    /// ... an elevated proper prefix.
    G,
    /// `C_{2n}(123)`.
    T,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Q,
        Family::R,
        Family::V,
        Family::K,
        Family::CK,
        Family::G,
        Family::T,
    ];

    /// Permutation length of the `n`-th class.
    pub fn perm_len(self, n: usize) -> usize {
        match self {
            Family::R | Family::V => 2 * n + 1,
            _ => 2 * n,
        }
    }

    pub fn class_spec(self, n: usize) -> ClassSpec {
        let len = self.perm_len(n);
        match self {
            Family::Q | Family::R => ClassSpec::centro(len).avoiding_digits("132"),
            Family::V | Family::T => ClassSpec::centro(len).avoiding_digits("123"),
            Family::K => ClassSpec::centro(len).avoiding_digits("123").with_subclass(Subclass::K),
            Family::CK => ClassSpec::centro(len).avoiding_digits("123").with_subclass(Subclass::CK),
            Family::G => ClassSpec::centro(len).avoiding_digits("123").with_subclass(Subclass::G),
        }
    }

    /// The closed form whose expansion gives this table.
    pub fn named_series(self) -> NamedSeries {
        match self {
            Family::Q => NamedSeries::Q,
            Family::R => NamedSeries::R,
            Family::V => NamedSeries::V,
            Family::K => NamedSeries::K,
            Family::CK => NamedSeries::CK,
            Family::G => NamedSeries::S,
            Family::T => NamedSeries::T,
        }
    }

    /// Largest `n` whose class the oracle may enumerate under `limits`.
    pub fn oracle_max_n(self, limits: OracleLimits) -> Option<usize> {
        let cap = limits.max_centro_len;
        match self {
            Family::R | Family::V => cap.checked_sub(1).map(|c| c / 2),
            _ => Some(cap / 2),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Q => "q",
            Family::R => "r",
            Family::V => "v",
            Family::K => "k",
            Family::CK => "ck",
            Family::G => "g",
            Family::T => "t",
        })
    }
}

impl FromStr for Family {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| SeriesError::UnknownName {
                kind: "family",
                name: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTable {
    pub family: Family,
    rows: Vec<Vec<BigInt>>,
}

impl DescentTable {
    /// Rows are stored without trailing zeros.
    pub fn new(family: Family, rows: Vec<Vec<BigInt>>) -> Self {
        let rows = rows.into_iter().map(trim).collect();
        DescentTable { family, rows }
    }

    pub fn from_series(family: Family, series: &BivariateSeries) -> Result<Self, SeriesError> {
        Ok(DescentTable::new(family, series.to_integer_rows()?))
    }

    pub fn from_histograms(family: Family, histograms: &[DescentHistogram]) -> Self {
        DescentTable::new(family, histograms.iter().map(DescentHistogram::to_row).collect())
    }

    pub fn get(&self, n: usize, d: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|r| r.get(d))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        self.rows.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn max_n(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(|r| r.len().saturating_sub(1)).max().unwrap_or(0)
    }

    pub fn row_total(&self, n: usize) -> BigInt {
        self.row(n).iter().sum()
    }

    pub fn to_csv(&self) -> String {
        let width = self.max_degree();
        let mut out = String::from("n\\d");
        for d in 0..=width {
            out.push_str(&format!(",{d}"));
        }
        out.push('\n');
        for n in 0..self.rows.len() {
            out.push_str(&n.to_string());
            for d in 0..=width {
                out.push_str(&format!(",{}", self.get(n, d)));
            }
            out.push('\n');
        }
        out
    }
}

fn trim(mut row: Vec<BigInt>) -> Vec<BigInt> {
    while row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
    row
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// The table for `family` through `max_n`, from counting formulas and
/// recurrences only.
pub fn build_table(family: Family, max_n: usize) -> Result<DescentTable, SeriesError> {
    let rows = match family {
        Family::Q => (0..=max_n)
            .map(|n| {
                if n == 0 {
                    vec![BigInt::one()]
                } else {
                    (0..2 * n).map(|k| binomial(n - 1, k / 2)).collect()
                }
            })
            .collect(),
        Family::R => (0..=max_n)
            .map(|n| {
                (0..=2 * n)
                    .map(|k| if k % 2 == 0 { binomial(n, k / 2) } else { BigInt::zero() })
                    .collect()
            })
            .collect(),
        Family::V => {
            let e = super::eulerian_123_rows(max_n)?;
            (0..=max_n)
                .map(|n| {
                    let mut row = vec![BigInt::zero(); 2 * n + 2];
                    if n == 0 {
                        row[0] = BigInt::one();
                    } else {
                        for (k, c) in e[n].iter().enumerate() {
                            row[2 * k + 2] = c.clone();
                        }
                    }
                    row
                })
                .collect()
        }
        Family::K | Family::CK | Family::G | Family::T => {
            let r = Recurrences::run(max_n)?;
            match family {
                Family::K => r.k,
                Family::CK => r.ck,
                Family::G => r.g,
                _ => r.t,
            }
        }
    };
    Ok(DescentTable::new(family, rows))
}

/// Tables indexed by `[n][d]` with `d` in `0..=2n+1`.
struct Recurrences {
    k: Vec<Vec<BigInt>>,
    ck: Vec<Vec<BigInt>>,
    g: Vec<Vec<BigInt>>,
    t: Vec<Vec<BigInt>>,
}

fn at(table: &[Vec<BigInt>], n: usize, d: isize) -> BigInt {
    if d < 0 {
        return BigInt::zero();
    }
    table
        .get(n)
        .and_then(|r| r.get(d as usize))
        .cloned()
        .unwrap_or_else(BigInt::zero)
}

fn poly(coeffs: &[i64], n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); 2 * n + 2];
    for (d, &c) in coeffs.iter().enumerate() {
        row[d] = BigInt::from(c);
    }
    row
}

fn check_nonnegative(row: &[BigInt], n: usize) -> Result<(), SeriesError> {
    match row.iter().position(|c| c.sign() == Sign::Minus) {
        Some(d) => Err(SeriesError::NegativeEntry { n, d }),
        None => Ok(()),
    }
}

impl Recurrences {
    fn run(max_n: usize) -> Result<Self, SeriesError> {
        let mut r = Recurrences {
            k: vec![poly(&[1], 0)],
            ck: vec![poly(&[1], 0)],
            g: vec![poly(&[1], 0)],
            t: vec![poly(&[1], 0)],
        };
        for n in 1..=max_n {
            let width = 2 * n + 2;
            let ck: Vec<BigInt> = match n {
                1 | 2 => poly(&[0, 1], n),
                _ => (0..width as isize)
                    .map(|d| at(&r.k, n - 1, d - 2) - at(&r.k, n - 2, d - 4) + at(&r.k, n - 2, d - 2))
                    .collect(),
            };
            check_nonnegative(&ck, n)?;
            r.ck.push(ck);

            let k: Vec<BigInt> = if n == 1 {
                poly(&[0, 1], 1)
            } else {
                (0..width as isize)
                    .map(|d| {
                        let mut sum = at(&r.ck, n, d);
                        for i in 1..n {
                            for j in 1..=(d - 2) {
                                sum += at(&r.ck, i, j) * at(&r.k, n - i, d - 1 - j);
                            }
                        }
                        sum
                    })
                    .collect()
            };
            check_nonnegative(&k, n)?;
            r.k.push(k);

            let g: Vec<BigInt> = if n == 1 {
                poly(&[1], 1)
            } else {
                (0..width as isize)
                    .map(|d| at(&r.t, n - 1, d - 1) + at(&r.t, n - 1, d - 2) - at(&r.k, n - 1, d - 2))
                    .collect()
            };
            check_nonnegative(&g, n)?;
            r.g.push(g);

            let t: Vec<BigInt> = if n == 1 {
                poly(&[1, 1], 1)
            } else {
                (0..width as isize)
                    .map(|d| {
                        let mut sum = at(&r.g, n, d) + at(&r.k, n, d);
                        for i in 1..n {
                            for j in 0..d {
                                sum += at(&r.g, i, j) * at(&r.k, n - i, d - 1 - j);
                            }
                        }
                        sum
                    })
                    .collect()
            };
            check_nonnegative(&t, n)?;
            r.t.push(t);
        }
        Ok(r)
    }
}

/// The table for `family` through `max_n`, by exhaustive enumeration.
pub fn oracle_table(family: Family, max_n: usize, limits: OracleLimits) -> Result<DescentTable, OracleError> {
    let histograms = (0..=max_n)
        .map(|n| descent_histogram(&family.class_spec(n), limits))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DescentTable::from_histograms(family, &histograms))
}

/// The table for `family` through `max_n`, from its closed form.
pub fn series_table(family: Family, max_n: usize) -> Result<DescentTable, SeriesError> {
    DescentTable::from_series(family, &build_named_series(family.named_series(), max_n)?)
}
