//! Exhaustive ground truth: enumerate a permutation class and tally descents.
//!
//! Centrosymmetric permutations are generated directly from their first
//! half (each position takes an unused value pair `{v, m+1-v}` in one of two
//! orientations), so length 16 costs `8!·2^8` candidates instead of `16!`.

use std::env;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use thiserror::Error;

use crate::bijection::phi;
use crate::path::PathKind;
use crate::perm::{contains_123, contains_pattern_generic, descent_count, Permutation};

pub const ORACLE_ENV: &str = "CENSYM_MAX_ORACLE_N";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("length {len} exceeds the oracle cap {cap} (raise {ORACLE_ENV} to override)")]
    CapExceeded { len: usize, cap: usize },
    #[error("invalid class: {0}")]
    InvalidSpec(String),
}

/// Largest lengths the oracle will enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_centro_len: usize,
    pub max_general_len: usize,
}

impl OracleLimits {
    /// Caps for targeted single-class counts.
    pub const TARGETED: OracleLimits = OracleLimits {
        max_centro_len: 16,
        max_general_len: 9,
    };
    /// Caps for suites that sweep every length up to the cap.
    pub const EXHAUSTIVE: OracleLimits = OracleLimits {
        max_centro_len: 14,
        max_general_len: 9,
    };

    /// `base`, with the centrosymmetric cap replaced by the environment
    /// override when it is set to a valid integer.
    pub fn from_env(base: OracleLimits) -> OracleLimits {
        match env::var(ORACLE_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            Some(len) => OracleLimits {
                max_centro_len: len,
                ..base
            },
            None => base,
        }
    }
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits::TARGETED
    }
}

/// Subsets of `C_{2n}(123)` singled out by the shape of the image path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subclass {
    /// Image is a Dyck path.
    K,
    /// Image is an elevated Dyck path.
    CK,
    /// Image is an elevated proper prefix.
    G,
    /// Image is a Dyck path followed by an elevated proper prefix.
    Composite,
}

impl FromStr for Subclass {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "k" => Ok(Subclass::K),
            "ck" => Ok(Subclass::CK),
            "g" => Ok(Subclass::G),
            "composite" => Ok(Subclass::Composite),
            other => Err(OracleError::InvalidSpec(format!("unknown subclass {other:?}"))),
        }
    }
}

impl fmt::Display for Subclass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subclass::K => "k",
            Subclass::CK => "ck",
            Subclass::G => "g",
            Subclass::Composite => "composite",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    pub len: usize,
    pub centrosymmetric: bool,
    pub avoid: Option<Permutation>,
    pub subclass: Option<Subclass>,
}

impl ClassSpec {
    pub fn all(len: usize) -> Self {
        ClassSpec {
            len,
            centrosymmetric: false,
            avoid: None,
            subclass: None,
        }
    }

    pub fn centro(len: usize) -> Self {
        ClassSpec {
            centrosymmetric: true,
            ..ClassSpec::all(len)
        }
    }

    pub fn avoiding(mut self, pattern: Permutation) -> Self {
        self.avoid = Some(pattern);
        self
    }

    pub fn avoiding_digits(self, pattern: &str) -> Self {
        self.avoiding(Permutation::from_digits(pattern).expect("valid pattern literal"))
    }

    pub fn with_subclass(mut self, subclass: Subclass) -> Self {
        self.subclass = Some(subclass);
        self
    }

    pub fn validate(&self, limits: OracleLimits) -> Result<(), OracleError> {
        if self.subclass.is_some() {
            let is_123 = self.avoid.as_ref().is_some_and(|p| p.values() == [1, 2, 3]);
            if !self.centrosymmetric || !is_123 || !self.len.is_multiple_of(2) {
                return Err(OracleError::InvalidSpec(
                    "subclasses require centrosymmetric, 123-avoiding, even length".to_string(),
                ));
            }
        }
        let cap = if self.centrosymmetric {
            limits.max_centro_len
        } else {
            limits.max_general_len
        };
        if self.len > cap {
            return Err(OracleError::CapExceeded { len: self.len, cap });
        }
        Ok(())
    }

    /// False once `prefix` already contains the avoided pattern; every
    /// extension then contains it too.
    fn prefix_ok(&self, prefix: &[usize]) -> bool {
        match &self.avoid {
            Some(pattern) if pattern.values() == [1, 2, 3] => !contains_123(prefix),
            Some(pattern) => !contains_pattern_generic(prefix, pattern.values()),
            None => true,
        }
    }

    fn accepts(&self, values: &[usize]) -> bool {
        if !self.prefix_ok(values) {
            return false;
        }
        match self.subclass {
            None => true,
            Some(sub) => {
                let image = phi(&Permutation::from_vec_unchecked(values.to_vec()))
                    .expect("validated spec implies the bijection domain");
                let class = image.classify().expect("even length");
                match sub {
                    Subclass::K => class.is_dyck_path,
                    Subclass::CK => class.is_dyck_path && class.is_elevated,
                    Subclass::G => class.kind() == PathKind::ElevatedProper,
                    Subclass::Composite => class.kind() == PathKind::Composite,
                }
            }
        }
    }

    /// Candidate values for the first position, used to split the work.
    fn first_choices(&self) -> Vec<Option<usize>> {
        let m = self.len;
        if m == 0 || (self.centrosymmetric && m == 1) {
            return vec![None];
        }
        let centre = (m % 2 == 1).then_some(m.div_ceil(2));
        (1..=m)
            .filter(|&v| !(self.centrosymmetric && Some(v) == centre))
            .map(Some)
            .collect()
    }

    fn walk<F: FnMut(&[usize])>(&self, first: Option<usize>, f: &mut F) {
        let m = self.len;
        let mut buf = vec![0usize; m];
        let mut used = vec![false; m + 2];
        if self.centrosymmetric {
            if m % 2 == 1 {
                let c = m.div_ceil(2);
                buf[m / 2] = c;
                used[c] = true;
            }
            let mut start = 0;
            if let Some(v) = first {
                place_pair(&mut buf, &mut used, 0, v);
                start = 1;
            }
            centro_rec(self, &mut buf, &mut used, start, f);
        } else {
            let mut start = 0;
            if let Some(v) = first {
                buf[0] = v;
                used[v] = true;
                start = 1;
            }
            general_rec(self, &mut buf, &mut used, start, f);
        }
    }
}

fn place_pair(buf: &mut [usize], used: &mut [bool], pos: usize, v: usize) {
    let m = buf.len();
    buf[pos] = v;
    buf[m - 1 - pos] = m + 1 - v;
    used[v] = true;
    used[m + 1 - v] = true;
}

fn centro_rec<F: FnMut(&[usize])>(spec: &ClassSpec, buf: &mut [usize], used: &mut [bool], pos: usize, f: &mut F) {
    let m = buf.len();
    if pos == m / 2 {
        if spec.accepts(buf) {
            f(buf);
        }
        return;
    }
    for v in 1..=m {
        if used[v] {
            continue;
        }
        place_pair(buf, used, pos, v);
        if spec.prefix_ok(&buf[..=pos]) {
            centro_rec(spec, buf, used, pos + 1, f);
        }
        used[v] = false;
        used[m + 1 - v] = false;
    }
}

fn general_rec<F: FnMut(&[usize])>(spec: &ClassSpec, buf: &mut [usize], used: &mut [bool], pos: usize, f: &mut F) {
    let m = buf.len();
    if pos == m {
        if spec.accepts(buf) {
            f(buf);
        }
        return;
    }
    for v in 1..=m {
        if used[v] {
            continue;
        }
        buf[pos] = v;
        used[v] = true;
        if spec.prefix_ok(&buf[..=pos]) {
            general_rec(spec, buf, used, pos + 1, f);
        }
        used[v] = false;
    }
}

/// Calls `f` on every member of the class, in lexicographic order of the
/// one-line notation.
pub fn for_each_member<F: FnMut(&[usize])>(spec: &ClassSpec, limits: OracleLimits, mut f: F) -> Result<(), OracleError> {
    spec.validate(limits)?;
    for first in spec.first_choices() {
        spec.walk(first, &mut f);
    }
    Ok(())
}

pub fn enumerate_class(spec: &ClassSpec, limits: OracleLimits) -> Result<Vec<Permutation>, OracleError> {
    let mut out = Vec::new();
    for_each_member(spec, limits, |v| out.push(Permutation::from_vec_unchecked(v.to_vec())))?;
    Ok(out)
}

/// Number of members with each descent count.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DescentHistogram {
    counts: Vec<BigUint>,
}

impl DescentHistogram {
    fn from_counts(mut raw: Vec<u64>) -> Self {
        while raw.last() == Some(&0) {
            raw.pop();
        }
        DescentHistogram {
            counts: raw.into_iter().map(BigUint::from).collect(),
        }
    }

    pub fn get(&self, d: usize) -> BigUint {
        self.counts.get(d).cloned().unwrap_or_default()
    }

    /// Counts indexed by descent number, without trailing zeros.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn to_row(&self) -> Vec<BigInt> {
        self.counts.iter().map(|c| BigInt::from(c.clone())).collect()
    }
}

pub fn descent_histogram(spec: &ClassSpec, limits: OracleLimits) -> Result<DescentHistogram, OracleError> {
    spec.validate(limits)?;
    let width = spec.len.max(1);
    let merged = spec
        .first_choices()
        .into_par_iter()
        .map(|first| {
            let mut local = vec![0u64; width];
            spec.walk(first, &mut |v: &[usize]| local[descent_count(v)] += 1);
            local
        })
        .reduce(
            || vec![0u64; width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(DescentHistogram::from_counts(merged))
}
