//! Exhaustive verification suites over every structure in the crate.
//!
//! Each suite runs a list of named checks up to a half length `max_n` and
//! records how many cases each check saw and the first counterexample, if
//! any. Known misprints in closed forms are collected separately and never
//! count as failures.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::bijection::{components_vs_returns, observed_heights, phi, phi_inverse, predicted_heights};
use crate::classes::{generate_c123_even, generate_c123_even_structural, generate_c132, odd_embed};
use crate::decomposition::MinimaDecomposition;
use crate::oracle::{enumerate_class, ClassSpec, OracleError, OracleLimits};
use crate::path::{enumerate_prefixes, LatticePath, PathError, Step};
use crate::perm::{contains_123, contains_pattern_generic, renormalize, Permutation};
use crate::series::{
    build_table, check_identities, cross_check, BivariateSeries, CellStatus, Family, SeriesError, YPoly,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Perm,
    Path,
    Bijection,
    Series,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Perm => "perm",
            Suite::Path => "path",
            Suite::Bijection => "bijection",
            Suite::Series => "series",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "perm" => Ok(Suite::Perm),
            "path" => Ok(Suite::Path),
            "bijection" => Ok(Suite::Bijection),
            "series" => Ok(Suite::Series),
            "all" => Ok(Suite::All),
            other => Err(VerifyError::UnknownSuite(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Path(#[from] PathError),
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    /// Disagreements with printed closed forms; informational only.
    pub discrepancies: Vec<String>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

struct Recorder<'a> {
    suite: Suite,
    report: &'a mut VerifyReport,
}

impl Recorder<'_> {
    /// Runs `check` on every item, stopping at the first failure.
    fn each<T, I, F>(&mut self, name: &str, items: I, mut check: F)
    where
        I: IntoIterator<Item = T>,
        F: FnMut(&T) -> Result<(), String>,
    {
        let mut checked = 0;
        let mut counterexample = None;
        for item in items {
            checked += 1;
            if let Err(e) = check(&item) {
                counterexample = Some(e);
                break;
            }
        }
        self.report.checks.push(CheckResult {
            suite: self.suite,
            name: name.to_string(),
            checked,
            counterexample,
        });
    }

    fn single(&mut self, name: &str, outcome: Result<(), String>) {
        self.each(name, [()], |_| outcome.clone());
    }
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Runs `suite` for half lengths up to `max_n` under `limits`.
pub fn run_suite(suite: Suite, max_n: usize, limits: OracleLimits) -> Result<VerifyReport, VerifyError> {
    let mut report = VerifyReport::default();
    let suites: &[Suite] = match suite {
        Suite::All => &[Suite::Perm, Suite::Path, Suite::Bijection, Suite::Series],
        Suite::Perm => &[Suite::Perm],
        Suite::Path => &[Suite::Path],
        Suite::Bijection => &[Suite::Bijection],
        Suite::Series => &[Suite::Series],
    };
    for &s in suites {
        let mut rec = Recorder {
            suite: s,
            report: &mut report,
        };
        match s {
            Suite::Perm => perm_suite(&mut rec, max_n, limits)?,
            Suite::Path => path_suite(&mut rec, max_n)?,
            Suite::Bijection => bijection_suite(&mut rec, max_n, limits)?,
            Suite::Series => series_suite(&mut rec, max_n, limits)?,
            Suite::All => unreachable!(),
        }
    }
    Ok(report)
}

/// `len` must not exceed the centrosymmetric cap of `limits`.
fn c123(len: usize, limits: OracleLimits) -> Result<Vec<Permutation>, OracleError> {
    enumerate_class(&ClassSpec::centro(len).avoiding_digits("123"), limits)
}

fn perm_suite(rec: &mut Recorder, max_n: usize, limits: OracleLimits) -> Result<(), VerifyError> {
    let mut centro = Vec::new();
    for m in 0..=(2 * max_n).min(limits.max_centro_len) {
        centro.extend(enumerate_class(&ClassSpec::centro(m), limits)?);
    }
    rec.each("descent sets are mirror symmetric", &centro, |p| {
        let des = p.descent_set();
        let m = p.len();
        ensure(des.iter().all(|&i| des.contains(&(m - i))), || format!("{p}"))
    });
    rec.each("descents of even members follow from the half word", &centro, |p| {
        if p.len() % 2 == 1 {
            return Ok(());
        }
        let half = p.descents_from_half().map_err(|e| format!("{p}: {e}"))?;
        ensure(half == p.descent_count(), || format!("{p}: {half} from half"))
    });

    let mut general = Vec::new();
    for m in 0..=(2 * max_n).min(8).min(limits.max_general_len) {
        general.extend(enumerate_class(&ClassSpec::all(m), limits)?);
    }
    rec.each("reverse and complement are involutions", &general, |p| {
        ensure(
            p.reverse().reverse() == **p
                && p.complement().complement() == **p
                && p.is_centrosymmetric() == (p.reverse() == p.complement()),
            || format!("{p}"),
        )
    });
    rec.each("123 fast path agrees with backtracking", &general, |p| {
        ensure(
            contains_123(p.values()) == contains_pattern_generic(p.values(), &[1, 2, 3]),
            || format!("{p}"),
        )
    });
    rec.each("text form round trips", &general, |p| {
        ensure(p.to_string().parse::<Permutation>().ok().as_ref() == Some(p), || format!("{p}"))
    });

    let mut avoiders = Vec::new();
    for n in 0..=max_n {
        avoiders.extend(c123(2 * n, limits)?);
    }
    rec.each("minima decomposition invariants", &avoiders, |p| decomposition_invariants(p));
    rec.each("first block structure of C_2n(123)", &avoiders, |p| first_block_structure(p));
    Ok(())
}

fn decomposition_invariants(p: &Permutation) -> Result<(), String> {
    let dec = MinimaDecomposition::new(p).map_err(|e| format!("{p}: {e}"))?;
    let half = p.left_half_word().map_err(|e| format!("{p}: {e}"))?;
    ensure(dec.word() == half, || format!("{p}: reconstruction"))?;
    ensure(dec.minima().windows(2).all(|w| w[0] > w[1]), || format!("{p}: minima not decreasing"))?;
    for (i, block) in dec.blocks.iter().enumerate() {
        ensure(block.min >= dec.middles[i], || format!("{p}: x_{} below the middle element", i + 1))?;
        ensure(block.word.iter().all(|&v| v > block.min), || format!("{p}: word below its minimum"))?;
    }
    // once a minimum is tiny, every later one is too
    ensure(dec.tiny.windows(2).all(|w| !w[0] || w[1]), || format!("{p}: tiny flags not monotone"))?;
    Ok(())
}

fn first_block_structure(p: &Permutation) -> Result<(), String> {
    if p.is_empty() {
        return Ok(());
    }
    let dec = MinimaDecomposition::new(p).map_err(|e| format!("{p}: {e}"))?;
    let n = dec.half_len;
    let first = &dec.blocks[0];
    ensure(first.min >= n, || format!("{p}: x_1 < n"))?;
    let expected: Vec<usize> = (2 * n - first.word.len() + 1..=2 * n).rev().collect();
    ensure(first.word == expected, || format!("{p}: w_1 is not a descending run from 2n"))?;
    ensure(first.word.is_empty() || 2 * n - first.word.len() + 1 > first.min, || {
        format!("{p}: w_1 does not lie above x_1")
    })
}

fn path_suite(rec: &mut Recorder, max_n: usize) -> Result<(), VerifyError> {
    let mut prefixes = Vec::new();
    for n in 0..=max_n {
        let found: Vec<LatticePath> = enumerate_prefixes(2 * n)?.collect();
        prefixes.push(found);
    }
    rec.each("prefix counts are central binomials", 0..=max_n, |&n| {
        let count = BigInt::from(prefixes[n].len());
        ensure(count == binomial(2 * n, n), || format!("length {}: {count}", 2 * n))
    });
    let all: Vec<&LatticePath> = prefixes.iter().flatten().collect();
    rec.each("text form round trips", &all, |path| {
        ensure(path.to_string().parse::<LatticePath>().ok().as_ref() == Some(*path), || path.to_string())
    });
    rec.each("enumeration is strictly increasing", prefixes.iter(), |found| {
        ensure(found.windows(2).all(|w| w[0] < w[1]), || "order".to_string())
    });
    rec.each("classification split", &all, |path| {
        let class = path.classify().map_err(|e| format!("{path}: {e}"))?;
        match &class.split {
            Some((dyck, rest)) => {
                ensure(dyck.is_dyck_path() && !dyck.is_empty(), || format!("{path}: first part"))?;
                ensure(dyck.steps().last() == Some(&Step::D), || format!("{path}: first part ends with U"))?;
                ensure(rest.returns() == 0 && rest.final_height() > 0, || format!("{path}: second part"))?;
                ensure(dyck.concat(rest) == ***path, || format!("{path}: concatenation"))
            }
            None => ensure(path.is_dyck_path() || path.returns() == 0, || format!("{path}: missing split")),
        }
    });
    rec.each("valleys and triple falls from run lengths", &all, |path| {
        let stats = path.stats();
        let mut runs = Vec::new();
        let mut current = 0usize;
        for &s in path.steps() {
            if s == Step::D {
                current += 1;
            } else if current > 0 {
                runs.push(current);
                current = 0;
            }
        }
        let trailing = current;
        if trailing > 0 {
            runs.push(trailing);
        }
        let falls: usize = runs.iter().map(|&r| r.saturating_sub(2)).sum();
        let valleys = runs.len() - usize::from(trailing > 0);
        ensure(stats.triple_falls == falls && stats.valleys == valleys, || path.to_string())
    });
    Ok(())
}

fn bijection_suite(rec: &mut Recorder, max_n: usize, limits: OracleLimits) -> Result<(), VerifyError> {
    let mut by_len = Vec::new();
    for n in 0..=max_n {
        by_len.push(c123(2 * n, limits)?);
    }
    let members: Vec<&Permutation> = by_len.iter().flatten().collect();

    rec.each("inverse undoes phi", &members, |p| {
        let path = phi(p).map_err(|e| format!("{p}: {e}"))?;
        ensure(phi_inverse(&path).ok().as_ref() == Some(*p), || format!("{p}"))
    });
    rec.each("phi undoes the inverse on every prefix", 0..=max_n, |&n| {
        for path in enumerate_prefixes(2 * n).map_err(|e| e.to_string())? {
            let sigma = phi_inverse(&path).map_err(|e| format!("{path}: {e}"))?;
            ensure(phi(&sigma).ok().as_ref() == Some(&path), || format!("{path}"))?;
        }
        Ok(())
    });
    rec.each("image of phi is the full prefix set", 0..=max_n, |&n| {
        let image: BTreeSet<LatticePath> = by_len[n].iter().filter_map(|p| phi(p).ok()).collect();
        let all: BTreeSet<LatticePath> = enumerate_prefixes(2 * n).map_err(|e| e.to_string())?.collect();
        ensure(image.len() == by_len[n].len() && image == all, || format!("length {}", 2 * n))
    });
    rec.each("final height is twice the tiny minima", &members, |p| {
        let path = phi(p).map_err(|e| e.to_string())?;
        let dec = MinimaDecomposition::new(p).map_err(|e| e.to_string())?;
        ensure(path.final_height() == 2 * dec.tiny_count(), || format!("{p}"))
    });
    rec.each("Dyck image iff no tiny minimum", &members, |p| {
        let path = phi(p).map_err(|e| e.to_string())?;
        let dec = MinimaDecomposition::new(p).map_err(|e| e.to_string())?;
        ensure(path.is_dyck_path() == (dec.tiny_count() == 0), || format!("{p}"))
    });
    rec.each("no tiny minimum iff the half word is the top half", &members, |p| {
        let dec = MinimaDecomposition::new(p).map_err(|e| e.to_string())?;
        let n = p.len() / 2;
        let top = p.left_half_word().map_err(|e| e.to_string())?.iter().all(|&v| v > n);
        ensure(top == (dec.tiny_count() == 0), || format!("{p}"))
    });
    rec.each("descents on Dyck images", &members, |p| {
        let path = phi(p).map_err(|e| e.to_string())?;
        if p.is_empty() || !path.is_dyck_path() {
            return Ok(());
        }
        let s = path.stats();
        ensure(p.descent_count() == 2 * (s.triple_falls + s.valleys) + 1, || format!("{p}"))
    });
    rec.each("right components against returns", &members, |p| {
        components_vs_returns(p).map(|_| ()).map_err(|e| e.to_string())
    });
    rec.each("block heights on permutations without tiny minima", &members, |p| {
        match predicted_heights(p) {
            Ok(predicted) => {
                let observed = observed_heights(p).map_err(|e| e.to_string())?;
                ensure(predicted == observed, || format!("{p}: {predicted:?} vs {observed:?}"))
            }
            Err(_) => Ok(()),
        }
    });
    rec.each("composite images split the permutation", &members, |p| composite_rule(p));
    rec.each("structural generator matches the inverse map", 0..=max_n, |&n| {
        let mut via_paths = generate_c123_even(2 * n, limits.max_centro_len.max(2 * n)).map_err(|e| e.to_string())?;
        via_paths.sort();
        let structural =
            generate_c123_even_structural(2 * n, limits.max_centro_len.max(2 * n)).map_err(|e| e.to_string())?;
        ensure(structural == via_paths && via_paths == by_len[n], || format!("length {}", 2 * n))
    });

    let mut c132_lens = Vec::new();
    for m in 0..=(2 * max_n + 1).min(limits.max_centro_len) {
        c132_lens.push(m);
    }
    rec.each("C_n(132) generator matches enumeration", c132_lens, |&m| {
        let enumerated = enumerate_class(&ClassSpec::centro(m).avoiding_digits("132"), limits).map_err(|e| e.to_string())?;
        ensure(generate_c132(m) == enumerated, || format!("length {m}"))
    });

    let mut s123 = Vec::new();
    for m in 1..=max_n.min(limits.max_general_len) {
        s123.extend(enumerate_class(&ClassSpec::all(m).avoiding_digits("123"), limits)?);
    }
    rec.each("odd embedding doubles descents plus two", &s123, |alpha| {
        let image = odd_embed(alpha).map_err(|e| e.to_string())?;
        ensure(
            image.is_centrosymmetric()
                && !contains_123(image.values())
                && image.descent_count() == 2 * alpha.descent_count() + 2,
            || format!("{alpha}"),
        )
    });
    Ok(())
}

/// For a composite image `D' D''`, the centre of `p` of length `|D''|` is
/// order-isomorphic to the inverse image of `D''` and the outer parts to
/// that of `D'`.
fn composite_rule(p: &Permutation) -> Result<(), String> {
    let path = phi(p).map_err(|e| e.to_string())?;
    let class = path.classify().map_err(|e| e.to_string())?;
    let Some((dyck, rest)) = class.split else {
        return Ok(());
    };
    let values = p.values();
    let outer = dyck.len() / 2;
    let inner: Vec<usize> = values[outer..values.len() - outer].to_vec();
    let mut outside: Vec<usize> = values[..outer].to_vec();
    outside.extend_from_slice(&values[values.len() - outer..]);
    let tau2 = phi_inverse(&rest).map_err(|e| e.to_string())?;
    let tau13 = phi_inverse(&dyck).map_err(|e| e.to_string())?;
    ensure(renormalize(&inner) == tau2.values() && renormalize(&outside) == tau13.values(), || {
        format!("{p}")
    })
}

fn series_suite(rec: &mut Recorder, max_n: usize, limits: OracleLimits) -> Result<(), VerifyError> {
    for family in Family::ALL {
        let report = cross_check(family, max_n, limits)?;
        let label = format!("{family} table, closed form and oracle agree");
        let failure = report.failures().next().map(|c| {
            format!(
                "n = {}, d = {}: table {}, series {}, oracle {}",
                c.n,
                c.d,
                c.table,
                c.series,
                c.oracle.as_ref().map_or("-".to_string(), BigInt::to_string)
            )
        });
        rec.report.checks.push(CheckResult {
            suite: rec.suite,
            name: label,
            checked: report.cells.len(),
            counterexample: failure,
        });
        for aux in &report.aux {
            match aux.status {
                CellStatus::Discrepancy => rec.report.discrepancies.push(format!("{}: {}", aux.name, aux.detail)),
                status => rec.single(&aux.name, ensure(status == CellStatus::Pass, || aux.detail.clone())),
            }
        }
        rec.report.discrepancies.extend(report.discrepancies);
        rec.report.notes.extend(report.notes);
    }

    let t = build_table(Family::T, max_n)?;
    rec.each("C_2n(123) rows sum to central binomials", 0..=max_n, |&n| {
        ensure(t.row_total(n) == binomial(2 * n, n), || format!("n = {n}"))
    });
    let q = build_table(Family::Q, max_n)?;
    rec.each("C_2n(132) rows sum to powers of two", 0..=max_n, |&n| {
        ensure(q.row_total(n) == BigInt::from(1) << n, || format!("n = {n}"))
    });
    let v = build_table(Family::V, max_n)?;
    rec.each("odd 123 table vanishes off even d >= 2", 1..=max_n, |&n| {
        let bad = (0..=2 * n + 1).find(|&d| (d % 2 == 1 || d == 0) && v.get(n, d) != BigInt::from(0));
        ensure(bad.is_none(), || format!("n = {n}, d = {}", bad.unwrap_or_default()))
    });

    let identities = check_identities(max_n)?;
    rec.each("generating function identities", &identities, |c| {
        ensure(c.holds, || format!("{} first differs at x^{}", c.name, c.first_mismatch.unwrap_or_default()))
    });

    let order = max_n.max(1);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let cases: Vec<(BivariateSeries, BivariateSeries, i64)> = (0..100)
        .map(|_| (random_series(&mut rng, order), random_series(&mut rng, order), rng.random_range(1..=5)))
        .collect();
    rec.each("division inverts multiplication", &cases, |(a, b, c)| {
        let unit = with_constant(b, *c);
        let q = a.div(&unit).map_err(|e| e.to_string())?;
        ensure(&q * &unit == *a, || format!("{a:?} / {unit:?}"))
    });
    rec.each("square root inverts squaring", &cases, |(a, _, c)| {
        let root = with_constant(a, *c);
        let square = &root * &root;
        let back = square.sqrt().map_err(|e| e.to_string())?;
        ensure(back == root && &back * &back == square, || format!("{root:?}"))
    });
    Ok(())
}

fn random_series(rng: &mut StdRng, order: usize) -> BivariateSeries {
    let rows = (0..=order)
        .map(|_| {
            let degree = rng.random_range(0..4);
            YPoly::from_ints((0..degree).map(|_| rng.random_range(-5..=5)))
        })
        .collect();
    BivariateSeries::from_rows(order, rows)
}

fn with_constant(s: &BivariateSeries, c: i64) -> BivariateSeries {
    let mut rows = s.rows().to_vec();
    rows[0] = YPoly::from_ints([c]);
    BivariateSeries::from_rows(s.order(), rows)
}
