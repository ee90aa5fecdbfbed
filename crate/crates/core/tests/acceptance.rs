//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use censym::bijection::{components_vs_returns, observed_heights, predicted_heights};
use censym::classes::{generate_c123_even, generate_c132};
use censym::decomposition::MinimaDecomposition;
use censym::oracle::{descent_histogram, enumerate_class, ClassSpec, OracleLimits};
use censym::path::{enumerate_prefixes, LatticePath};
use censym::series::{build_table, check_identities, cross_check, eulerian_123_rows, BivariateSeries, Family, YPoly};
use censym::{phi, phi_inverse, Permutation};

type Outcome = Result<String, String>;

fn limits(cap: usize) -> OracleLimits {
    OracleLimits::from_env(OracleLimits {
        max_centro_len: cap,
        max_general_len: 9,
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn c123(len: usize, cap: usize) -> Result<Vec<Permutation>, String> {
    enumerate_class(&ClassSpec::centro(len).avoiding_digits("123"), limits(cap)).map_err(|e| e.to_string())
}

fn central_binomial() -> Outcome {
    for n in 0..=8u64 {
        let got = generate_c123_even(2 * n as usize, 16).map_err(|e| e.to_string())?.len() as u64;
        if got != binomial(2 * n, n) {
            return Err(format!("inverse generator gives {got} at n = {n}"));
        }
    }
    for n in 0..=7u64 {
        let got = c123(2 * n as usize, 14)?.len() as u64;
        if got != binomial(2 * n, n) {
            return Err(format!("brute force gives {got} at n = {n}"));
        }
    }
    Ok("n <= 8 via inverse map, n <= 7 by brute force".into())
}

fn round_trip() -> Outcome {
    let mut checked = 0usize;
    for len in (0..=16).step_by(2) {
        let members = c123(len, 16)?;
        let mut images = BTreeSet::new();
        for sigma in &members {
            let path = phi(sigma).map_err(|e| e.to_string())?;
            if phi_inverse(&path).map_err(|e| e.to_string())? != *sigma {
                return Err(format!("inverse fails on {sigma}"));
            }
            images.insert(path);
        }
        let prefixes: BTreeSet<LatticePath> = enumerate_prefixes(len).map_err(|e| e.to_string())?.collect();
        if images.len() != members.len() || images != prefixes {
            return Err(format!("image of length {len} is not the full prefix set"));
        }
        for path in &prefixes {
            let back = phi(&phi_inverse(path).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            if back != *path {
                return Err(format!("forward map fails on {path}"));
            }
        }
        checked += members.len();
    }
    Ok(format!("{checked} permutations and prefixes, 2n <= 16"))
}

fn worked_examples() -> Outcome {
    let sigma: Permutation = "11 16 15 9 7 14 13 12 5 4 3 10 8 2 1 6".parse().map_err(|e| format!("{e}"))?;
    let forward = phi(&sigma).map_err(|e| e.to_string())?.to_string();
    if forward != "UUUUUUDDDUUDUDDD" {
        return Err(format!("forward example gives {forward}"));
    }
    let path: LatticePath = "UUUDDUUUUUUDDUUD".parse().map_err(|e| format!("{e}"))?;
    let backward = phi_inverse(&path).map_err(|e| e.to_string())?.to_string();
    if backward != "14 16 8 15 13 7 6 12 5 11 10 4 2 9 1 3" {
        return Err(format!("inverse example gives {backward}"));
    }
    Ok("both worked examples reproduced".into())
}

fn t_table() -> Outcome {
    let report = cross_check(Family::T, 8, limits(14)).map_err(|e| e.to_string())?;
    if report.oracle_max_n != Some(7) {
        return Err(format!("oracle leg reached {:?}, expected n = 7", report.oracle_max_n));
    }
    if let Some(cell) = report.failures().next() {
        return Err(format!(
            "n = {}, d = {}: table {}, series {}, oracle {:?}, reference {:?}",
            cell.n, cell.d, cell.table, cell.series, cell.oracle, cell.reference
        ));
    }
    let missing_reference = (0..=5).any(|n| report.cells.iter().any(|c| c.n == n && c.reference.is_none()));
    if missing_reference {
        return Err("reference rows were not compared".into());
    }
    Ok(format!("{} cells agree", report.cells.len()))
}

fn results_132() -> Outcome {
    for (family, len_of) in [(Family::Q, 0usize), (Family::R, 1)] {
        let expected = build_table(family, 7).map_err(|e| e.to_string())?;
        for n in 0..=7 {
            if family == Family::Q && n == 0 {
                continue;
            }
            let spec = ClassSpec::centro(2 * n + len_of).avoiding_digits("132");
            let hist = descent_histogram(&spec, limits(16)).map_err(|e| e.to_string())?;
            let row = hist.to_row();
            let width = row.len().max(expected.row(n).len());
            if (0..width).any(|d| row.get(d).cloned().unwrap_or_default() != expected.get(n, d)) {
                return Err(format!("{family} differs at n = {n}"));
            }
        }
        let report = cross_check(family, 7, limits(16)).map_err(|e| e.to_string())?;
        if !report.passed() {
            return Err(format!("{family} cross-check failed"));
        }
    }
    let six: BTreeSet<String> = ["123456", "456123", "563412", "564312", "623451", "645231", "653421", "654321"]
        .into_iter()
        .map(String::from)
        .collect();
    let seven: BTreeSet<String> = ["1234567", "5674123", "6734512", "6754312", "7234561", "7564231", "7634521", "7654321"]
        .into_iter()
        .map(String::from)
        .collect();
    let digits = |ps: Vec<Permutation>| -> BTreeSet<String> {
        ps.iter().map(|p| p.values().iter().map(|v| v.to_string()).collect()).collect()
    };
    for (len, listed) in [(6, &six), (7, &seven)] {
        let oracle = digits(
            enumerate_class(&ClassSpec::centro(len).avoiding_digits("132"), limits(16)).map_err(|e| e.to_string())?,
        );
        if &oracle != listed || &digits(generate_c132(len)) != listed {
            return Err(format!("listed members of length {len} not reproduced"));
        }
    }
    Ok("histograms n <= 7, both member lists".into())
}

fn odd_123() -> Outcome {
    let e = eulerian_123_rows(8).map_err(|e| e.to_string())?;
    for n in 1..=8 {
        let spec = ClassSpec::centro(2 * n + 1).avoiding_digits("123");
        let hist = descent_histogram(&spec, limits(17)).map_err(|e| e.to_string())?;
        for d in 0..=(2 * n + 1) {
            let expected = if d >= 2 && d % 2 == 0 {
                e[n].get((d - 2) / 2).cloned().unwrap_or_default()
            } else {
                BigInt::default()
            };
            if BigInt::from(hist.get(d)) != expected {
                return Err(format!("n = {n}, d = {d}"));
            }
        }
    }
    let report = cross_check(Family::V, 8, limits(17)).map_err(|e| e.to_string())?;
    if !report.passed() {
        let aux: Vec<String> = report.aux.iter().map(|a| format!("{}: {}", a.name, a.status)).collect();
        return Err(format!("cross-check failed ({})", aux.join("; ")));
    }
    Ok("odd histograms n <= 8, E(x, y^2) substitution exact".into())
}

fn structure() -> Outcome {
    let mut checked = 0usize;
    for len in (2..=14).step_by(2) {
        for sigma in c123(len, 14)? {
            let path = phi(&sigma).map_err(|e| e.to_string())?;
            let dec = MinimaDecomposition::new(&sigma).map_err(|e| e.to_string())?;
            let tiny = dec.tiny_count();
            if path.final_height() != 2 * tiny {
                return Err(format!("endpoint height on {sigma}"));
            }
            if path.is_dyck_path() != (tiny == 0) {
                return Err(format!("Dyck criterion on {sigma}"));
            }
            if path.is_dyck_path() {
                let stats = path.stats();
                if sigma.descent_count() != 2 * (stats.triple_falls + stats.valleys) + 1 {
                    return Err(format!("descent formula on {sigma}"));
                }
            }
            components_vs_returns(&sigma).map_err(|e| e.to_string())?;
            if tiny == 0 {
                let predicted = predicted_heights(&sigma).map_err(|e| e.to_string())?;
                if predicted != observed_heights(&sigma).map_err(|e| e.to_string())? {
                    return Err(format!("block heights on {sigma}"));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} permutations, 2n <= 14"))
}

fn random_series(order: usize) -> impl Strategy<Value = BivariateSeries> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, 0..4), order + 1).prop_map(move |rows| {
        BivariateSeries::from_rows(order, rows.into_iter().map(YPoly::from_ints).collect())
    })
}

fn with_constant(s: BivariateSeries, c: i64) -> BivariateSeries {
    let mut rows = s.rows().to_vec();
    rows[0] = YPoly::from_ints([c]);
    BivariateSeries::from_rows(s.order(), rows)
}

fn series_soundness() -> Outcome {
    const ORDER: usize = 12;
    let mut runner = TestRunner::new(Config {
        cases: 128,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = (random_series(ORDER), random_series(ORDER), 1i64..=5, prop::bool::ANY);
    runner
        .run(&strategy, |(a, b, c, negative)| {
            let unit = with_constant(b, if negative { -c } else { c });
            let quotient = a.div(&unit).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(&(&quotient * &unit), &a);
            prop_assert_eq!(&(&a * &unit).div(&unit).map_err(|e| TestCaseError::fail(e.to_string()))?, &a);
            let root = with_constant(a.clone(), c);
            let square = &root * &root;
            prop_assert_eq!(&square.sqrt().map_err(|e| TestCaseError::fail(e.to_string()))?, &root);
            let shifted = with_constant(a, c * c);
            let r = shifted.sqrt().map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(&(&r * &r), &shifted);
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    let radicand = BivariateSeries::from_terms(11, &[(1, 0, 0), (-4, 1, 0)]);
    let catalan = (&BivariateSeries::one(11) - &radicand.sqrt().map_err(|e| e.to_string())?)
        .div_x(1)
        .map_err(|e| e.to_string())?
        .to_integer_rows()
        .map_err(|e| e.to_string())?;
    for n in 0..=10usize {
        let dyck = enumerate_prefixes(2 * n)
            .map_err(|e| e.to_string())?
            .filter(LatticePath::is_dyck_path)
            .count();
        let got = catalan[n].first().cloned().unwrap_or_default() / 2;
        if got != BigInt::from(dyck) {
            return Err(format!("Catalan coefficient {n}: series {got}, paths {dyck}"));
        }
    }

    for check in check_identities(12).map_err(|e| e.to_string())? {
        if !check.holds {
            return Err(format!("{} fails at x^{:?}", check.name, check.first_mismatch));
        }
    }
    Ok("128 random cases, Catalan n <= 10, identities to order 12".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("central binomial count", central_binomial),
        ("bijection round trip", round_trip),
        ("worked examples", worked_examples),
        ("C_2n(123) descent table", t_table),
        ("132-avoiding classes", results_132),
        ("odd 123-avoiding case", odd_123),
        ("structure theorems", structure),
        ("series engine soundness", series_soundness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail}; {secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
