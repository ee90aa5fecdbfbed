//! Dyck prefixes: lattice paths of `U = (1,1)` and `D = (1,-1)` steps that
//! start at the origin and never go below the x-axis.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Longest prefix [`enumerate_prefixes`] will produce without an explicit cap.
pub const DEFAULT_PREFIX_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("illegal character {ch:?} at step {index}")]
    InvalidChar { ch: char, index: usize },
    #[error("path goes below the x-axis at step {index}")]
    BelowAxis { index: usize },
    #[error("path length {0} is odd")]
    OddLength(usize),
    #[error("length {len} exceeds the enumeration cap {cap}")]
    CapExceeded { len: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }

    fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStats {
    pub height: usize,
    pub returns: usize,
    pub valleys: usize,
    pub triple_falls: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    DyckPath,
    ElevatedProper,
    Composite,
}

/// Outcome of the last return decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathClassification {
    pub is_dyck_path: bool,
    pub is_elevated: bool,
    /// `(dyck_part, elevated_proper_part)` for composite prefixes.
    pub split: Option<(LatticePath, LatticePath)>,
}

impl PathClassification {
    pub fn kind(&self) -> PathKind {
        if self.is_dyck_path {
            PathKind::DyckPath
        } else if self.split.is_some() {
            PathKind::Composite
        } else {
            PathKind::ElevatedProper
        }
    }
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        let mut h = 0i64;
        for (i, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(PathError::BelowAxis { index: i + 1 });
            }
        }
        Ok(LatticePath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(LatticePath::new(steps.clone()).is_ok());
        LatticePath { steps }
    }

    pub fn empty() -> Self {
        LatticePath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `h_0 = 0, h_1, …, h_len`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut h = 0i64;
        out.push(0);
        for s in &self.steps {
            h += s.delta();
            out.push(h as usize);
        }
        out
    }

    pub fn final_height(&self) -> usize {
        let ups = self.steps.iter().filter(|&&s| s == Step::U).count();
        2 * ups - self.len()
    }

    pub fn is_dyck_path(&self) -> bool {
        self.final_height() == 0
    }

    /// 1-based indices of the steps that are returns (D steps landing on
    /// the axis).
    pub fn return_positions(&self) -> Vec<usize> {
        let heights = self.heights();
        self.steps
            .iter()
            .enumerate()
            .filter(|(i, &s)| s == Step::D && heights[i + 1] == 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn returns(&self) -> usize {
        self.return_positions().len()
    }

    /// No return at all, or a single return at the last step. The empty
    /// path is not elevated.
    pub fn is_elevated(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        match self.return_positions().as_slice() {
            [] => true,
            [only] => *only == self.len(),
            _ => false,
        }
    }

    pub fn stats(&self) -> PathStats {
        let valleys = self
            .steps
            .windows(2)
            .filter(|w| w[0] == Step::D && w[1] == Step::U)
            .count();
        let triple_falls = self
            .steps
            .windows(3)
            .filter(|w| w.iter().all(|&s| s == Step::D))
            .count();
        PathStats {
            height: self.final_height(),
            returns: self.returns(),
            valleys,
            triple_falls,
        }
    }

    pub fn classify(&self) -> Result<PathClassification, PathError> {
        if !self.len().is_multiple_of(2) {
            return Err(PathError::OddLength(self.len()));
        }
        let is_dyck_path = self.is_dyck_path();
        let is_elevated = self.is_elevated();
        let split = match self.return_positions().last() {
            Some(&last) if !is_dyck_path => Some((
                LatticePath::from_steps_unchecked(self.steps[..last].to_vec()),
                LatticePath::from_steps_unchecked(self.steps[last..].to_vec()),
            )),
            _ => None,
        };
        Ok(PathClassification {
            is_dyck_path,
            is_elevated,
            split,
        })
    }

    /// Appends `other`; the result is a Dyck prefix because `self` ends at a
    /// non-negative height.
    pub fn concat(&self, other: &LatticePath) -> LatticePath {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        LatticePath { steps }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                _ => Err(PathError::InvalidChar { ch, index: i + 1 }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        LatticePath::new(steps)
    }
}

/// All Dyck prefixes of the given even length, in lexicographic order with
/// `U < D`.
pub fn enumerate_prefixes(len: usize) -> Result<Prefixes, PathError> {
    enumerate_prefixes_capped(len, DEFAULT_PREFIX_CAP)
}

pub fn enumerate_prefixes_capped(len: usize, cap: usize) -> Result<Prefixes, PathError> {
    if !len.is_multiple_of(2) {
        return Err(PathError::OddLength(len));
    }
    if len > cap {
        return Err(PathError::CapExceeded { len, cap });
    }
    Ok(Prefixes {
        current: Some(vec![Step::U; len]),
    })
}

/// Iterator returned by [`enumerate_prefixes`].
#[derive(Debug, Clone)]
pub struct Prefixes {
    current: Option<Vec<Step>>,
}

impl Iterator for Prefixes {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let out = self.current.take()?;
        // Successor: flip the rightmost U that can become a D, then complete
        // with the smallest suffix (all U).
        let mut heights = Vec::with_capacity(out.len());
        let mut h = 0i64;
        for s in &out {
            heights.push(h);
            h += s.delta();
        }
        if let Some(i) = (0..out.len())
            .rev()
            .find(|&i| out[i] == Step::U && heights[i] >= 1)
        {
            let mut next = out.clone();
            next[i] = Step::D;
            for s in &mut next[i + 1..] {
                *s = Step::U;
            }
            self.current = Some(next);
        }
        Some(LatticePath::from_steps_unchecked(out))
    }
}
