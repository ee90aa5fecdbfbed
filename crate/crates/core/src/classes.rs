//! Structural descriptions and generators of the classes `C_n(132)` and
//! `C_n(123)`, and the maps relating odd and even lengths.

use crate::bijection::{phi_inverse, BijectionError};
use crate::path::{enumerate_prefixes_capped, PathError};
use crate::perm::{contains_123, contains_pattern_generic, PermError, Permutation};

const PATTERN_132: [usize; 3] = [1, 3, 2];

fn contains_132(values: &[usize]) -> bool {
    contains_pattern_generic(values, &PATTERN_132)
}

/// `α ↦ α' (n+1) α`, where `α'` lists the complements to `2n+2` of
/// `α(n), …, α(1)`. Maps `S_n(123)` onto `C_{2n+1}(123)`.
pub fn odd_embed(alpha: &Permutation) -> Result<Permutation, PermError> {
    if contains_123(alpha.values()) {
        return Err(PermError::ContainsPattern {
            pattern: "123".to_string(),
        });
    }
    let n = alpha.len();
    let mut values: Vec<usize> = alpha.values().iter().rev().map(|&v| 2 * n + 2 - v).collect();
    values.push(n + 1);
    values.extend_from_slice(alpha.values());
    Ok(Permutation::from_vec_unchecked(values))
}

/// Inverse of [`odd_embed`]: the right half of an odd-length member of
/// `C_{2n+1}(123)`.
pub fn odd_project(sigma: &Permutation) -> Result<Permutation, PermError> {
    let len = sigma.len();
    if len.is_multiple_of(2) || !sigma.is_centrosymmetric() {
        return Err(PermError::NotEvenCentrosymmetric);
    }
    if contains_123(sigma.values()) {
        return Err(PermError::ContainsPattern {
            pattern: "123".to_string(),
        });
    }
    let n = len / 2;
    Permutation::new(sigma.values()[n + 1..].to_vec())
}

/// `C_{2n}(132) → C_{2n+1}(132)`: values above `n` shift up by one and
/// `n + 1` is inserted at the centre.
pub fn even_to_odd_132(p: &Permutation) -> Result<Permutation, PermError> {
    p.require_even_centrosymmetric()?;
    if contains_132(p.values()) {
        return Err(PermError::ContainsPattern {
            pattern: "132".to_string(),
        });
    }
    let n = p.len() / 2;
    let shift = |v: usize| if v > n { v + 1 } else { v };
    let mut values: Vec<usize> = p.values()[..n].iter().map(|&v| shift(v)).collect();
    values.push(n + 1);
    values.extend(p.values()[n..].iter().map(|&v| shift(v)));
    Ok(Permutation::from_vec_unchecked(values))
}

/// Inverse of [`even_to_odd_132`].
pub fn odd_to_even_132(alpha: &Permutation) -> Result<Permutation, PermError> {
    let len = alpha.len();
    if len.is_multiple_of(2) || !alpha.is_centrosymmetric() {
        return Err(PermError::NotEvenCentrosymmetric);
    }
    let n = len / 2;
    let values = alpha
        .values()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != n)
        .map(|(_, &v)| if v > n + 1 { v - 1 } else { v })
        .collect();
    Permutation::new(values)
}

/// `C_n(132)` built from its structure: the identity, plus every word
/// `y y+1 … n β 1 2 … n+1-y` with `y > ⌈n/2⌉` and `β` (renormalized) in
/// `C_{2y-2-n}(132)`. Odd lengths go through [`even_to_odd_132`].
/// The result is sorted.
pub fn generate_c132(n: usize) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = if n.is_multiple_of(2) {
        even_c132(n)
            .into_iter()
            .map(Permutation::from_vec_unchecked)
            .collect()
    } else {
        even_c132(n - 1)
            .into_iter()
            .map(|v| {
                even_to_odd_132(&Permutation::from_vec_unchecked(v))
                    .expect("structural generator yields C(132) members")
            })
            .collect()
    };
    out.sort();
    out
}

fn even_c132(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(1..=n).collect::<Vec<usize>>()];
    for y in (n.div_ceil(2) + 1)..=n {
        let inner_len = 2 * y - 2 - n;
        let offset = n + 1 - y;
        for beta in even_c132(inner_len) {
            let mut word: Vec<usize> = (y..=n).collect();
            word.extend(beta.iter().map(|&v| v + offset));
            word.extend(1..=offset);
            out.push(word);
        }
    }
    out
}

/// `C_{2n}(123)` as the image of all Dyck prefixes of length `2n` under the
/// inverse bijection, in the lexicographic order of the prefixes.
pub fn generate_c123_even(len: usize, cap: usize) -> Result<Vec<Permutation>, BijectionError> {
    enumerate_prefixes_capped(len, cap)?
        .map(|path| phi_inverse(&path))
        .collect()
}

/// `C_{2n}(123)` from the first-block characterization: `w(σ) = x_1 w_1
/// w(σ')` with `x_1 ≥ n`, `w_1 = 2n, 2n-1, …, 2n-l_1+1` above `x_1`, and
/// `σ'` a member of `C(123)` over the remaining alphabet whose first entry is
/// below `x_1`. The result is sorted.
pub fn generate_c123_even_structural(len: usize, cap: usize) -> Result<Vec<Permutation>, BijectionError> {
    if !len.is_multiple_of(2) {
        return Err(PathError::OddLength(len).into());
    }
    if len > cap {
        return Err(PathError::CapExceeded { len, cap }.into());
    }
    let mut memo: Vec<Option<Vec<Vec<usize>>>> = vec![None; len / 2 + 1];
    let mut out: Vec<Permutation> = structural_c123(len / 2, &mut memo)
        .into_iter()
        .map(Permutation::from_vec_unchecked)
        .collect();
    out.sort();
    Ok(out)
}

fn structural_c123(n: usize, memo: &mut Vec<Option<Vec<Vec<usize>>>>) -> Vec<Vec<usize>> {
    if let Some(done) = &memo[n] {
        return done.clone();
    }
    let total = 2 * n;
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    }
    for x1 in n.max(1)..=total {
        for l1 in 0..n {
            if total - l1 < x1 {
                break;
            }
            let removed_hi = total - l1; // w_1 occupies (removed_hi, total]
            let alphabet: Vec<usize> = (1..=total)
                .filter(|&v| {
                    v != x1 && v != total + 1 - x1 && v <= removed_hi && v > l1
                })
                .collect();
            let inner_half = n - l1 - 1;
            for inner in structural_c123(inner_half, memo) {
                if let Some(&first) = inner.first() {
                    if alphabet[first - 1] >= x1 {
                        continue;
                    }
                }
                let mut half = Vec::with_capacity(n);
                half.push(x1);
                half.extend((removed_hi + 1..=total).rev());
                half.extend(inner[..inner_half].iter().map(|&r| alphabet[r - 1]));
                let mut values = half.clone();
                values.extend(half.iter().rev().map(|&v| total + 1 - v));
                out.push(values);
            }
        }
    }
    memo[n] = Some(out.clone());
    out
}
