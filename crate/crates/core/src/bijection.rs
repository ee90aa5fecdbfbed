//! The bijection between `C_{2n}(123)` and Dyck prefixes of length `2n`.
//!
//! `phi` consumes the left-to-right minima blocks of `w(σ)` one at a time.
//! With `k = 2n + 1 - x_1`:
//!
//! * non-tiny `x_1` (`k < n + 1`): emit `U^k D^{l_1+1}`, then the image of
//!   the renormalized remainder `σ'` with its leftmost `k - l_1 - 1` steps
//!   removed;
//! * tiny `x_1` (`k = n + 1`): emit `U^k D^{l_1}`, then the image of `σ'`
//!   with its leftmost `k - l_1 - 2` steps removed.
//!
//! `phi_inverse` reads the path as `U^j D^k π'` and rebuilds the outer
//! values of `σ`, recursing on a shorter path for the middle.

use thiserror::Error;

use crate::decomposition::MinimaDecomposition;
use crate::path::{LatticePath, PathError, Step};
use crate::perm::{contains_123, renormalize, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("permutation has a tiny minimum; block height formulas do not apply")]
    TinyMinimum,
    #[error("verification failed for {perm}: {detail}")]
    Verification { perm: String, detail: String },
}

/// One recursion level of `phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiBlock {
    /// The left-to-right minimum `x_i`, in the values of the original
    /// permutation.
    pub min: usize,
    /// `l_i`, the length of the word following the minimum.
    pub word_len: usize,
    pub tiny: bool,
    /// Exponent of the leading `U` run emitted at this level.
    pub up_run: usize,
    /// Steps of the final path contributed by this level, after ancestors
    /// removed their share.
    pub emitted: Vec<Step>,
    /// Number of leading steps this level removes from the image of its
    /// remainder.
    pub deleted_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTrace {
    pub path: LatticePath,
    pub blocks: Vec<PhiBlock>,
    /// `(k(P_j), k(Q_j))` evaluated by the closed formula for every block.
    pub predicted_heights: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentsVsReturns {
    pub components: usize,
    pub returns: usize,
    pub dyck: bool,
}

fn check_domain(p: &Permutation) -> Result<(), BijectionError> {
    p.require_even_centrosymmetric()?;
    if contains_123(p.values()) {
        return Err(PermError::ContainsPattern {
            pattern: "123".to_string(),
        }
        .into());
    }
    Ok(())
}

pub fn phi(p: &Permutation) -> Result<LatticePath, BijectionError> {
    Ok(phi_trace(p)?.path)
}

pub fn phi_trace(p: &Permutation) -> Result<PhiTrace, BijectionError> {
    check_domain(p)?;
    let dec = MinimaDecomposition::new(p)?;
    let mut levels = Vec::with_capacity(dec.blocks.len());
    let tagged = phi_levels(p.values(), 0, &mut levels);
    if levels.len() != dec.blocks.len() {
        return Err(BijectionError::Verification {
            perm: p.to_string(),
            detail: "recursion depth differs from the number of minima".to_string(),
        });
    }

    let steps: Vec<Step> = tagged.iter().map(|&(_, s)| s).collect();
    let path = LatticePath::new(steps).map_err(|e| BijectionError::Verification {
        perm: p.to_string(),
        detail: format!("image is not a Dyck prefix ({e})"),
    })?;

    let blocks = levels
        .into_iter()
        .enumerate()
        .map(|(depth, level)| PhiBlock {
            min: dec.blocks[depth].min,
            word_len: level.word_len,
            tiny: level.tiny,
            up_run: level.up_run,
            emitted: tagged
                .iter()
                .filter(|&&(tag, _)| tag == depth)
                .map(|&(_, s)| s)
                .collect(),
            deleted_count: level.deleted_count,
        })
        .collect();

    Ok(PhiTrace {
        path,
        blocks,
        predicted_heights: height_formula(&dec),
    })
}

struct Level {
    word_len: usize,
    tiny: bool,
    up_run: usize,
    deleted_count: usize,
}

/// Image of the (renormalized) permutation `values`, each step tagged with
/// the recursion depth that emitted it.
fn phi_levels(values: &[usize], depth: usize, levels: &mut Vec<Level>) -> Vec<(usize, Step)> {
    let total = values.len();
    if total == 0 {
        return Vec::new();
    }
    let n = total / 2;
    let x1 = values[0];
    let word_len = values[1..n].iter().take_while(|&&v| v > x1).count();
    let up_run = total + 1 - x1;
    let tiny = up_run == n + 1;
    let (downs, deleted_count) = if tiny {
        (word_len, up_run - word_len - 2)
    } else {
        (word_len + 1, up_run - word_len - 1)
    };
    levels.push(Level {
        word_len,
        tiny,
        up_run,
        deleted_count,
    });

    let rest = renormalize(&values[word_len + 1..total - word_len - 1]);
    let tail = phi_levels(&rest, depth + 1, levels);

    let mut out = Vec::with_capacity(total);
    out.extend(std::iter::repeat_n((depth, Step::U), up_run));
    out.extend(std::iter::repeat_n((depth, Step::D), downs));
    out.extend_from_slice(&tail[deleted_count..]);
    out
}

pub fn phi_inverse(path: &LatticePath) -> Result<Permutation, BijectionError> {
    if !path.len().is_multiple_of(2) {
        return Err(PathError::OddLength(path.len()).into());
    }
    Ok(Permutation::from_vec_unchecked(inverse_rec(path.steps())))
}

fn inverse_rec(steps: &[Step]) -> Vec<usize> {
    let total = steps.len();
    if total == 0 {
        return Vec::new();
    }
    let n = total / 2;
    let j = steps.iter().take_while(|&&s| s == Step::U).count();
    let k = steps[j..].iter().take_while(|&&s| s == Step::D).count();
    let rest = &steps[j + k..];
    let ups = |count: usize| std::iter::repeat_n(Step::U, count);

    let mut sigma = vec![0usize; total + 1];
    let (middle, lo) = if j <= n {
        sigma[1] = total + 1 - j;
        for t in 2..=k {
            sigma[t] = total + 2 - t;
        }
        sigma[total] = j;
        for t in 1..k {
            sigma[total - t] = t;
        }
        let sub: Vec<Step> = ups(j - k).chain(rest.iter().copied()).collect();
        (inverse_rec(&sub), k + 1)
    } else if j == n + 1 {
        sigma[1] = n;
        for t in 2..=k + 1 {
            sigma[t] = total + 2 - t;
        }
        sigma[total] = n + 1;
        for t in 1..=k {
            sigma[total - t] = t;
        }
        let sub: Vec<Step> = ups(j - k - 2).chain(rest.iter().copied()).collect();
        (inverse_rec(&sub), k + 2)
    } else {
        sigma[1] = n;
        sigma[total] = n + 1;
        let sub: Vec<Step> = ups(j - 2)
            .chain(std::iter::repeat_n(Step::D, k))
            .chain(rest.iter().copied())
            .collect();
        (inverse_rec(&sub), 2)
    };

    let mut used = vec![false; total + 1];
    for &v in &sigma[1..] {
        used[v] = true;
    }
    let free: Vec<usize> = (1..=total).filter(|&v| !used[v]).collect();
    debug_assert_eq!(free.len(), middle.len());
    for (offset, &r) in middle.iter().enumerate() {
        sigma[lo + offset] = free[r - 1];
    }
    sigma.remove(0);
    sigma
}

fn height_formula(dec: &MinimaDecomposition) -> Vec<(i64, i64)> {
    let total = 2 * dec.half_len as i64;
    let mut consumed = 0i64;
    dec.blocks
        .iter()
        .enumerate()
        .map(|(idx, block)| {
            let p = total - idx as i64 - block.min as i64 - consumed;
            consumed += block.len() as i64;
            (p, p - block.len() as i64)
        })
        .collect()
}

/// `k(P_j) = 2n - (j-1) - x_j - Σ_{r<j} l_r` and `k(Q_j) = k(P_j) - l_j`,
/// defined for permutations without tiny minima.
pub fn predicted_heights(p: &Permutation) -> Result<Vec<(i64, i64)>, BijectionError> {
    check_domain(p)?;
    let dec = MinimaDecomposition::new(p)?;
    if dec.tiny_count() > 0 {
        return Err(BijectionError::TinyMinimum);
    }
    Ok(height_formula(&dec))
}

/// Heights of `phi(p)` right after the down step matching each minimum
/// (`P_j`) and right after the last down step of its word (`Q_j`). Every
/// entry of `w(p)` accounts for one down step when `p` has no tiny minimum.
pub fn observed_heights(p: &Permutation) -> Result<Vec<(i64, i64)>, BijectionError> {
    let dec = MinimaDecomposition::new(p)?;
    let path = phi(p)?;
    let heights = path.heights();
    let down_ends: Vec<usize> = path
        .steps()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == Step::D)
        .map(|(i, _)| heights[i + 1])
        .collect();
    let mut seen = 0usize;
    let mut out = Vec::with_capacity(dec.blocks.len());
    for block in &dec.blocks {
        let at = |count: usize| down_ends.get(count - 1).map(|&h| h as i64).unwrap_or(-1);
        let p_height = at(seen + 1);
        seen += 1 + block.len();
        out.push((p_height, at(seen)));
    }
    Ok(out)
}

/// Measures right connected components and returns of `phi(p)` and checks
/// that components equal `2·ret`, plus one when `phi(p)` is proper.
pub fn components_vs_returns(p: &Permutation) -> Result<ComponentsVsReturns, BijectionError> {
    let path = phi(p)?;
    let components = p.right_connected_components().len();
    let returns = path.returns();
    let dyck = path.is_dyck_path();
    let expected = 2 * returns + usize::from(!dyck);
    if !p.is_empty() && components != expected {
        return Err(BijectionError::Verification {
            perm: p.to_string(),
            detail: format!("{components} right connected components, expected {expected}"),
        });
    }
    Ok(ComponentsVsReturns {
        components,
        returns,
        dyck,
    })
}
