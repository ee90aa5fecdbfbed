use proptest::prelude::*;

use censym::bijection::phi_inverse;
use censym::classes::{generate_c123_even, generate_c123_even_structural};
use censym::decomposition::MinimaDecomposition;
use censym::oracle::{enumerate_class, ClassSpec, OracleLimits};
use censym::path::{LatticePath, Step};
use censym::series::{BivariateSeries, YPoly};
use censym::{phi, Permutation};

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// Centrosymmetric permutation of length `2n` or `2n + 1`.
fn centrosymmetric(max_half: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_half, any::<bool>())
        .prop_flat_map(|(n, odd)| {
            (
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), n),
                Just(odd),
            )
        })
        .prop_map(|(pairs, flips, odd)| {
            let n = pairs.len();
            let m = 2 * n + usize::from(odd);
            let mut values = vec![0; m];
            for (i, (&k, &flip)) in pairs.iter().zip(&flips).enumerate() {
                let v = if flip { m - k } else { k + 1 };
                values[i] = v;
                values[m - 1 - i] = m + 1 - v;
            }
            if odd {
                values[n] = n + 1;
            }
            Permutation::new(values).unwrap()
        })
}

/// Dyck prefix of length `2n`: random steps, with any step that would go
/// below the axis turned into an up step.
fn dyck_prefix(max_half: usize) -> impl Strategy<Value = LatticePath> {
    (0..=max_half)
        .prop_flat_map(|n| prop::collection::vec(any::<bool>(), 2 * n))
        .prop_map(|bits| {
            let mut height = 0i64;
            let steps = bits
                .into_iter()
                .map(|down| {
                    if down && height > 0 {
                        height -= 1;
                        Step::D
                    } else {
                        height += 1;
                        Step::U
                    }
                })
                .collect();
            LatticePath::new(steps).unwrap()
        })
}

fn series(order: usize) -> impl Strategy<Value = BivariateSeries> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, 0..4), order + 1)
        .prop_map(move |rows| BivariateSeries::from_rows(order, rows.into_iter().map(YPoly::from_ints).collect()))
}

proptest! {
    #[test]
    fn reverse_and_complement_are_involutions(p in permutation(12)) {
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!(p.complement().complement(), p.clone());
        prop_assert_eq!(p.reverse().complement(), p.complement().reverse());
    }

    #[test]
    fn centrosymmetric_means_reverse_is_complement(p in centrosymmetric(9)) {
        prop_assert!(p.is_centrosymmetric());
        prop_assert_eq!(p.reverse(), p.complement());
    }

    #[test]
    fn descent_sets_are_mirrored(p in centrosymmetric(9)) {
        let m = p.len();
        let des = p.descent_set();
        for &i in &des {
            prop_assert!(des.contains(&(m - i)));
        }
    }

    #[test]
    fn descents_follow_from_half(p in centrosymmetric(9)) {
        if p.len() % 2 == 0 {
            prop_assert_eq!(p.descents_from_half().unwrap(), p.descent_count());
        } else {
            prop_assert!(p.descents_from_half().is_err());
        }
    }

    #[test]
    fn permutation_text_round_trip(p in permutation(20)) {
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn path_text_round_trip(path in dyck_prefix(12)) {
        prop_assert_eq!(path.to_string().parse::<LatticePath>().unwrap(), path);
    }

    #[test]
    fn phi_inverts_on_random_prefixes(path in dyck_prefix(12)) {
        let sigma = phi_inverse(&path).unwrap();
        prop_assert!(sigma.is_centrosymmetric());
        prop_assert!(sigma.avoids(&Permutation::from_digits("123").unwrap()));
        prop_assert_eq!(phi(&sigma).unwrap(), path);
    }

    #[test]
    fn decomposition_reconstructs_half(path in dyck_prefix(10)) {
        let sigma = phi_inverse(&path).unwrap();
        let dec = MinimaDecomposition::new(&sigma).unwrap();
        prop_assert_eq!(dec.word(), sigma.left_half_word().unwrap().to_vec());
        let minima = dec.minima();
        prop_assert!(minima.windows(2).all(|w| w[0] > w[1]));
        for (i, block) in dec.blocks.iter().enumerate() {
            prop_assert!(block.word.iter().all(|&v| v > block.min));
            prop_assert_eq!(dec.tiny[i], block.min == dec.middles[i]);
            prop_assert!(dec.alphabets[i].contains(&block.min));
        }
        prop_assert_eq!(dec.tiny_count() * 2, path.final_height());
    }

    #[test]
    fn division_inverts_multiplication(a in series(8), b in series(8), c in 1i64..=4) {
        let mut rows = b.rows().to_vec();
        rows[0] = YPoly::from_ints([c]);
        let unit = BivariateSeries::from_rows(8, rows);
        prop_assert_eq!((&a * &unit).div(&unit).unwrap(), a.clone());
        prop_assert_eq!(&a.div(&unit).unwrap() * &unit, a);
    }

    #[test]
    fn sqrt_inverts_squaring(a in series(8), c in 1i64..=4) {
        let mut rows = a.rows().to_vec();
        rows[0] = YPoly::from_ints([c]);
        let root = BivariateSeries::from_rows(8, rows);
        prop_assert_eq!((&root * &root).sqrt().unwrap(), root);
    }
}

#[test]
fn decomposition_invariants_exhaustive() {
    for len in (0..=14).step_by(2) {
        let members = enumerate_class(&ClassSpec::centro(len).avoiding_digits("123"), OracleLimits::EXHAUSTIVE).unwrap();
        for sigma in members {
            let dec = MinimaDecomposition::new(&sigma).unwrap();
            let lengths: usize = dec.word_lengths().iter().map(|l| l + 1).sum();
            assert_eq!(lengths, len / 2, "{sigma}");
            assert_eq!(dec.alphabets.len(), dec.blocks.len() + 1);
            assert!(dec.alphabets.last().unwrap().is_empty());
            for (i, alphabet) in dec.alphabets.iter().enumerate().skip(1) {
                assert_eq!(alphabet.len() + 2 * (dec.word_lengths()[i - 1] + 1), dec.alphabets[i - 1].len());
            }
            let half = sigma.left_half_word().unwrap();
            let mut running = Vec::new();
            for &v in half {
                if running.last().is_none_or(|&m| v < m) {
                    running.push(v);
                }
            }
            assert_eq!(dec.minima(), running, "{sigma}");
        }
    }
}

#[test]
fn structural_generator_matches_inverse_map() {
    for len in (0..=12).step_by(2) {
        let mut via_paths = generate_c123_even(len, 16).unwrap();
        via_paths.sort();
        assert_eq!(generate_c123_even_structural(len, 16).unwrap(), via_paths, "length {len}");
    }
}
