//! Permutations in one-line notation and the statistics used throughout the
//! crate: reverse/complement, centrosymmetry, pattern containment, descents,
//! left-to-right minima and (right) connected components.
//!
//! Positions and values are 1-based in every public API. The empty
//! permutation is a valid member of every class.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("invalid token {token:?} at position {position}")]
    InvalidToken { token: String, position: usize },
    #[error("value {value} at position {position} is out of range 1..={len}")]
    OutOfRange {
        value: usize,
        position: usize,
        len: usize,
    },
    #[error("duplicate value {value} at position {position}")]
    Duplicate { value: usize, position: usize },
    #[error("not centrosymmetric of even length")]
    NotEvenCentrosymmetric,
    #[error("permutation contains the pattern {pattern}")]
    ContainsPattern { pattern: String },
    #[error("odd-cardinality alphabet of size {0} has no middle element")]
    OddAlphabet(usize),
}

/// A permutation of `{1..n}` stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Validates that `values` is a permutation of `1..=values.len()`.
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let len = values.len();
        let mut seen = vec![false; len + 1];
        for (i, &v) in values.iter().enumerate() {
            if v == 0 || v > len {
                return Err(PermError::OutOfRange {
                    value: v,
                    position: i + 1,
                    len,
                });
            }
            if seen[v] {
                return Err(PermError::Duplicate {
                    value: v,
                    position: i + 1,
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// Caller guarantees `values` is a permutation of `1..=len`.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// Parses the compact single-digit form, e.g. `"2143"`. Only meaningful
    /// for `n <= 9`.
    pub fn from_digits(s: &str) -> Result<Self, PermError> {
        let mut values = Vec::with_capacity(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch.to_digit(10) {
                Some(d) => values.push(d as usize),
                None => {
                    return Err(PermError::InvalidToken {
                        token: ch.to_string(),
                        position: i + 1,
                    })
                }
            }
        }
        Permutation::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn reverse(&self) -> Permutation {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn is_centrosymmetric(&self) -> bool {
        is_centrosymmetric_slice(&self.values)
    }

    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        if pattern.values == [1, 2, 3] {
            return contains_123(&self.values);
        }
        contains_pattern_generic(&self.values, &pattern.values)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    /// `Des(p)` as sorted 1-based positions.
    pub fn descent_set(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn descent_count(&self) -> usize {
        descent_count(&self.values)
    }

    /// Left-to-right minima values, in order of appearance.
    pub fn ltr_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut current = usize::MAX;
        for &v in &self.values {
            if v < current {
                current = v;
                out.push(v);
            }
        }
        out
    }

    /// The word `w(p) = p(1)..p(n)` of an even-length centrosymmetric
    /// permutation, which determines it.
    pub fn left_half_word(&self) -> Result<&[usize], PermError> {
        self.require_even_centrosymmetric()?;
        Ok(&self.values[..self.len() / 2])
    }

    pub(crate) fn require_even_centrosymmetric(&self) -> Result<(), PermError> {
        if !self.len().is_multiple_of(2) || !self.is_centrosymmetric() {
            return Err(PermError::NotEvenCentrosymmetric);
        }
        Ok(())
    }

    /// Finest decomposition of the positions into intervals `I` with
    /// `p(I) = I`.
    pub fn connected_components(&self) -> Vec<RangeInclusive<usize>> {
        component_bounds(&self.values)
            .into_iter()
            .map(|(a, b)| a..=b)
            .collect()
    }

    /// Components of the reversed permutation, mapped back to positions of
    /// `self` and listed left to right.
    pub fn right_connected_components(&self) -> Vec<RangeInclusive<usize>> {
        let n = self.len();
        let reversed: Vec<usize> = self.values.iter().rev().copied().collect();
        let mut out: Vec<_> = component_bounds(&reversed)
            .into_iter()
            .map(|(a, b)| (n + 1 - b)..=(n + 1 - a))
            .collect();
        out.reverse();
        out
    }

    /// Descent count of an even-length centrosymmetric permutation read off
    /// its first half: `2·des(w)`, plus one when `p(n) > n`.
    pub fn descents_from_half(&self) -> Result<usize, PermError> {
        let half = self.left_half_word()?;
        let n = half.len();
        let base = 2 * descent_count(half);
        Ok(if n > 0 && half[n - 1] > n { base + 1 } else { base })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Integers separated by whitespace and/or commas.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut values = Vec::new();
        for (i, token) in s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .enumerate()
        {
            let v = token.parse::<usize>().map_err(|_| PermError::InvalidToken {
                token: token.to_string(),
                position: i + 1,
            })?;
            values.push(v);
        }
        Permutation::new(values)
    }
}

pub(crate) fn is_centrosymmetric_slice(values: &[usize]) -> bool {
    let n = values.len();
    (0..n / 2 + n % 2).all(|i| values[i] + values[n - 1 - i] == n + 1)
}

pub(crate) fn descent_count(values: &[usize]) -> usize {
    values.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Linear-time test for an increasing subsequence of length three.
pub(crate) fn contains_123(values: &[usize]) -> bool {
    let mut first = usize::MAX;
    let mut second = usize::MAX;
    for &v in values {
        if v <= first {
            first = v;
        } else if v <= second {
            second = v;
        } else {
            return true;
        }
    }
    false
}

/// Backtracking search for a subsequence order-isomorphic to `pattern`.
pub(crate) fn contains_pattern_generic(values: &[usize], pattern: &[usize]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > values.len() {
        return false;
    }
    let mut chosen = vec![0usize; k];
    search(values, pattern, &mut chosen, 0, 0)
}

fn search(values: &[usize], pattern: &[usize], chosen: &mut [usize], depth: usize, start: usize) -> bool {
    let k = pattern.len();
    if depth == k {
        return true;
    }
    // Value window implied by already-matched entries.
    let target = pattern[depth];
    let mut lo = 0usize;
    let mut hi = usize::MAX;
    for t in 0..depth {
        if pattern[t] < target {
            lo = lo.max(chosen[t]);
        } else {
            hi = hi.min(chosen[t]);
        }
    }
    let remaining = k - depth;
    for pos in start..=values.len() - remaining {
        let v = values[pos];
        if v > lo && v < hi {
            chosen[depth] = v;
            if search(values, pattern, chosen, depth + 1, pos + 1) {
                return true;
            }
        }
    }
    false
}

/// 1-based inclusive bounds of the connected components, using the
/// prefix-maximum characterization.
fn component_bounds(values: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 1;
    let mut max = 0;
    for (i, &v) in values.iter().enumerate() {
        max = max.max(v);
        if max == i + 1 {
            out.push((start, i + 1));
            start = i + 2;
        }
    }
    out
}

/// Replaces each entry by its rank within the word's own value set.
pub fn renormalize(word: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = word.to_vec();
    sorted.sort_unstable();
    word.iter()
        .map(|v| sorted.binary_search(v).expect("value present") + 1)
        .collect()
}

/// Inverse of [`renormalize`]: maps rank `r` to the `r`-th smallest element
/// of `alphabet` (which must be sorted).
pub fn denormalize(word: &[usize], alphabet: &[usize]) -> Vec<usize> {
    word.iter().map(|&r| alphabet[r - 1]).collect()
}

/// Lower median `s_h` of a sorted set of size `2h`.
pub fn middle_element(sorted_alphabet: &[usize]) -> Result<usize, PermError> {
    let size = sorted_alphabet.len();
    if size == 0 || !size.is_multiple_of(2) {
        return Err(PermError::OddAlphabet(size));
    }
    Ok(sorted_alphabet[size / 2 - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn d(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(p("").len(), 0);
        assert_eq!(Permutation::new(vec![2, 1, 4, 3]).unwrap().len(), 4);
        assert_eq!(
            Permutation::new(vec![1, 1]),
            Err(PermError::Duplicate { value: 1, position: 2 })
        );
        assert_eq!(
            "1 2 5".parse::<Permutation>(),
            Err(PermError::OutOfRange { value: 5, position: 3, len: 3 })
        );
        assert_eq!(
            "1,x,2".parse::<Permutation>(),
            Err(PermError::InvalidToken { token: "x".into(), position: 2 })
        );
        assert_eq!(p("3, 1,2"), d("312"));
    }

    #[test]
    fn zero_is_out_of_range() {
        assert!(matches!(
            "0".parse::<Permutation>(),
            Err(PermError::OutOfRange { value: 0, .. })
        ));
    }

    #[test]
    fn reverse_complement() {
        assert_eq!(d("321").reverse(), d("123"));
        assert_eq!(d("132").complement(), d("312"));
        assert_eq!(d("2413").complement().reverse(), d("2413"));
    }

    #[test]
    fn centrosymmetry() {
        assert!(p("7 8 6 4 5 3 1 2").is_centrosymmetric());
        assert!(d("123").is_centrosymmetric());
        assert!(!d("231").is_centrosymmetric());
        assert!(Permutation::empty().is_centrosymmetric());
    }

    #[test]
    fn patterns() {
        assert!(!d("563412").contains_pattern(&d("132")));
        assert!(d("1234").contains_pattern(&d("123")));
        assert!(!d("2413").contains_pattern(&d("123")));
        assert!(!contains_pattern_generic(&[2, 4, 1, 3], &[1, 2, 3]));
        assert!(d("2413").contains_pattern(&d("21")));
        assert!(d("2413").contains_pattern(&Permutation::empty()));
    }

    #[test]
    fn descents() {
        assert_eq!(d("654321").descent_set(), vec![1, 2, 3, 4, 5]);
        assert_eq!(d("654321").descent_count(), 5);
        assert!(d("123456").descent_set().is_empty());
        assert_eq!(d("645231").descent_set(), vec![1, 3, 5]);
        assert_eq!(d("645231").descent_count(), 3);
    }

    #[test]
    fn half_word() {
        let sigma = p("11 16 15 9 7 14 13 12 5 4 3 10 8 2 1 6");
        assert_eq!(sigma.left_half_word().unwrap(), &[11, 16, 15, 9, 7, 14, 13, 12]);
        assert_eq!(d("21").left_half_word().unwrap(), &[2]);
        assert_eq!(d("3412").left_half_word().unwrap(), &[3, 4]);
        assert_eq!(d("132").left_half_word(), Err(PermError::NotEvenCentrosymmetric));
        assert_eq!(d("1243").left_half_word(), Err(PermError::NotEvenCentrosymmetric));
    }

    #[test]
    fn right_components() {
        assert_eq!(p("2 7 6 1 3 5 4").right_connected_components().len(), 1);
        let tau = p("7 8 6 4 5 3 1 2");
        assert_eq!(
            tau.right_connected_components(),
            vec![1..=2, 3..=3, 4..=5, 6..=6, 7..=8]
        );
        assert_eq!(d("4321").right_connected_components().len(), 4);
        assert!(d("5764213").right_connected_components().len() > 1);
        assert!(Permutation::empty().right_connected_components().is_empty());
    }

    #[test]
    fn left_components() {
        assert_eq!(d("2143").connected_components(), vec![1..=2, 3..=4]);
        assert_eq!(d("4321").connected_components().len(), 1);
    }

    #[test]
    fn half_descents() {
        assert_eq!(d("3412").descents_from_half().unwrap(), 1);
        assert_eq!(d("2143").descents_from_half().unwrap(), 2);
        assert_eq!(d("4321").descents_from_half().unwrap(), 3);
        assert_eq!(Permutation::empty().descents_from_half().unwrap(), 0);
    }

    #[test]
    fn normalization() {
        assert_eq!(renormalize(&[7, 3, 9]), vec![2, 1, 3]);
        assert_eq!(denormalize(&[2, 1, 3], &[3, 7, 9]), vec![7, 3, 9]);
        assert_eq!(middle_element(&[1, 2, 3, 4]), Ok(2));
        assert_eq!(middle_element(&[1, 4]), Ok(1));
        assert_eq!(middle_element(&[1, 2, 3]), Err(PermError::OddAlphabet(3)));
    }

    #[test]
    fn display_round_trip() {
        let sigma = p("11 16 15 9 7 14 13 12 5 4 3 10 8 2 1 6");
        assert_eq!(sigma.to_string().parse::<Permutation>().unwrap(), sigma);
    }

    fn all_perms(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !prefix.contains(&v) {
                prefix.push(v);
                all_perms(n, prefix, out);
                prefix.pop();
            }
        }
    }

    #[test]
    fn fast_123_agrees_with_search() {
        for n in 0..=8 {
            let mut perms = Vec::new();
            all_perms(n, &mut Vec::new(), &mut perms);
            for v in &perms {
                assert_eq!(contains_123(v), contains_pattern_generic(v, &[1, 2, 3]), "{v:?}");
            }
        }
    }
}
