//! Left-to-right minima decomposition of a permutation in `C_{2n}(123)`.
//!
//! The first half `w(σ)` factors as `x_1 w_1 x_2 w_2 … x_s w_s` where the
//! `x_i` are the left-to-right minima. Alongside the blocks we keep the
//! shrinking alphabets `A_0 ⊇ A_1 ⊇ …` (each block removes its values and
//! their complements), the middle element of each alphabet, and which minima
//! are tiny (equal to the middle of the preceding alphabet).

use crate::perm::{contains_123, middle_element, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimaBlock {
    pub min: usize,
    pub word: Vec<usize>,
}

impl MinimaBlock {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimaDecomposition {
    /// Half length `n` of the decomposed permutation.
    pub half_len: usize,
    pub blocks: Vec<MinimaBlock>,
    /// `A_0, …, A_s`, each sorted ascending. The last one is always empty.
    pub alphabets: Vec<Vec<usize>>,
    /// `m(A_0), …, m(A_{s-1})`.
    pub middles: Vec<usize>,
    /// One flag per block; `tiny[i]` is true iff `x_{i+1} = m(A_i)`.
    pub tiny: Vec<bool>,
}

impl MinimaDecomposition {
    /// Decomposes `p`, which must lie in `C_{2n}(123)`.
    pub fn new(p: &Permutation) -> Result<Self, PermError> {
        let half = p.left_half_word()?;
        if contains_123(p.values()) {
            return Err(PermError::ContainsPattern {
                pattern: "123".to_string(),
            });
        }
        let total = p.len();

        let mut blocks: Vec<MinimaBlock> = Vec::new();
        for &v in half {
            match blocks.last_mut() {
                Some(last) if v > last.min => last.word.push(v),
                _ => blocks.push(MinimaBlock {
                    min: v,
                    word: Vec::new(),
                }),
            }
        }

        let mut alphabets = vec![(1..=total).collect::<Vec<usize>>()];
        let mut middles = Vec::with_capacity(blocks.len());
        let mut tiny = Vec::with_capacity(blocks.len());
        for block in &blocks {
            let current = alphabets.last().expect("A_0 present");
            let middle = middle_element(current)?;
            middles.push(middle);
            tiny.push(block.min == middle);
            let removed = |v: &usize| {
                let hits = |u: usize| u == *v || total + 1 - u == *v;
                hits(block.min) || block.word.iter().any(|&u| hits(u))
            };
            let next: Vec<usize> = current.iter().filter(|v| !removed(v)).copied().collect();
            alphabets.push(next);
        }

        Ok(MinimaDecomposition {
            half_len: half.len(),
            blocks,
            alphabets,
            middles,
            tiny,
        })
    }

    pub fn minima(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.min).collect()
    }

    /// Lengths `l_i` of the words `w_i`.
    pub fn word_lengths(&self) -> Vec<usize> {
        self.blocks.iter().map(MinimaBlock::len).collect()
    }

    pub fn tiny_minima(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .zip(&self.tiny)
            .filter(|(_, &t)| t)
            .map(|(b, _)| b.min)
            .collect()
    }

    pub fn tiny_count(&self) -> usize {
        self.tiny.iter().filter(|&&t| t).count()
    }

    /// Concatenation `x_1 w_1 … x_s w_s`.
    pub fn word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.half_len);
        for b in &self.blocks {
            out.push(b.min);
            out.extend_from_slice(&b.word);
        }
        out
    }
}
