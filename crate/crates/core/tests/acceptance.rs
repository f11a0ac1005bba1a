//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hypmat::jordan::{
    verify_representation, Algebra, CDElement, H3Element, PointSet, TargetMatroid,
};
use hypmat::matroid::{
    check_polymatroid, enumerate, has_minor, is_isomorphic, linear_rank_ineq,
    subset_from_one_based, verify_basis_exchange, verify_d_partition, violation_search, Family,
    RankInequality, RankOracle, RankTable, SearchScope, VHMatroid,
};
use hypmat::sampling::{grid_rational, stream_rng};
use hypmat::symfun::{sample_inequality, verify_identity, Identity, Inequality};
use hypmat::vamoslab::{
    build_hnk, counterex_ranks, h22_reference, hpp_falsify_complete63, kummer_check, whpp_witness,
};
use hypmat::Rational;
use num::Signed;

const SEED: u64 = 0xC0FFEE;
const PROBE_TRIALS: usize = 512;
const PROBE_TOL: f64 = 1e-9;
const INEQUALITY_SAMPLES: usize = 10_000;
const INCLUSION_SAMPLES: usize = 1000;
const JORDAN_CASES: usize = 500;
const RANDOM_WITNESSES: usize = 10;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn vamos_reference() -> Result<RankTable, String> {
    let nonbases = [
        [1, 2, 3, 4],
        [1, 2, 5, 6],
        [1, 2, 7, 8],
        [3, 4, 5, 6],
        [5, 6, 7, 8],
    ];
    let masks: Vec<u64> = nonbases
        .iter()
        .map(|s| subset_from_one_based(s, 8))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    RankTable::from_nonbases(8, 4, &masks).map_err(err)
}

fn v8_reconstruction() -> Outcome {
    let m = VHMatroid::new(common::hypergraph("diamond.json")).map_err(err)?;
    let bases = m.bases();
    ensure(bases.len() == 65, format!("{} bases", bases.len()))?;
    ensure(m.nonbases().len() == 5, "expected 5 non-bases")?;
    ensure(
        is_isomorphic(&m, &vamos_reference()?).map_err(err)?,
        "not isomorphic to V8",
    )?;
    ensure(
        verify_basis_exchange(&bases).map_err(err)?.is_none(),
        "basis exchange fails",
    )?;
    let hyperplanes = enumerate(&m, Family::Hyperplanes).map_err(err)?;
    let part = verify_d_partition(&hyperplanes, 8, 3).map_err(err)?;
    ensure(
        part.holds && !part.trivial,
        "hyperplanes are not a non-trivial 3-partition",
    )?;
    Ok("65 bases, 5 non-bases, isomorphic to V8, exchange and 3-partition hold".into())
}

fn ingleton_violation() -> Outcome {
    let m = VHMatroid::new(common::hypergraph("diamond.json")).map_err(err)?;
    let witnesses = violation_search(&m, RankInequality::Ingleton, SearchScope::PairedDoubletons)
        .map_err(err)?;
    let w = witnesses.first().ok_or("no Ingleton violation on V8")?;
    ensure(
        (w.lhs, w.rhs) == (16, 15),
        format!("V8 witness lhs {} rhs {}", w.lhs, w.rhs),
    )?;
    let mut found = vec![format!("V8: {} > {}", w.lhs, w.rhs)];
    for k in 2..=4 {
        let z: Vec<usize> = (1..=k - 2).collect();
        let c = counterex_ranks(k + 1, k, &z, k - 1, k).map_err(err)?;
        ensure(
            (c.lhs, c.rhs) == (10 * k - 4, 10 * k - 5),
            format!("k={k}: lhs {} rhs {}", c.lhs, c.rhs),
        )?;
        if k == 2 {
            ensure(
                c.lhs_terms == [4, 4, 2, 2, 4],
                format!("k=2 terms {:?}", c.lhs_terms),
            )?;
        }
        found.push(format!("k={k}: {} > {}", c.lhs, c.rhs));
    }
    Ok(found.join(", "))
}

fn dfz_violation() -> Outcome {
    let m = VHMatroid::new(common::hypergraph("dfz.json")).map_err(err)?;
    ensure(m.hypergraph().edges().len() == 9, "expected 9 edges")?;
    let sets: Vec<u64> = (0..6).map(|i| m.paired(1 << i)).collect();
    let v = linear_rank_ineq(RankInequality::Dfz, &m, &sets).map_err(err)?;
    ensure(v.violated, format!("lhs {} rhs {}", v.lhs, v.rhs))?;
    let t = Instant::now();
    let minor = has_minor(&m, &vamos_reference()?).map_err(err)?;
    ensure(!minor, "V8 is a minor")?;
    budget(t, 60, "minor search")?;
    Ok(format!("dfz lhs {} > rhs {}; V8 not a minor", v.lhs, v.rhs))
}

fn identity_suite() -> Outcome {
    let mut count = 0;
    for which in Identity::ALL {
        for r in which.min_r()..=4 {
            for n in r + 1..=8 {
                let c = verify_identity(which, r, n).map_err(err)?;
                ensure(
                    c.holds && c.difference.is_zero(),
                    format!("{} r={r} n={n}", which.name()),
                )?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} identity instances with zero difference"))
}

fn inequality_sampling() -> Outcome {
    let mut cases: Vec<(Inequality, usize, usize)> = vec![
        (Inequality::TuranRefined, 2, 6),
        (Inequality::TuranRefined, 3, 6),
        (Inequality::TuranRefined, 4, 8),
    ];
    for r in 2..=4 {
        cases.push((Inequality::Eng, r, r + 2));
    }
    for &(which, r, n) in &cases {
        let rep = sample_inequality(which, r, n, INEQUALITY_SAMPLES, SEED).map_err(err)?;
        ensure(
            rep.nonnegative_on_samples,
            format!("{} r={r} n={n}: min {}", which.name(), rep.min_value),
        )?;
    }
    for n in 1..=8 {
        let rep = sample_inequality(Inequality::TuranRefined, 1, n, 1, SEED).map_err(err)?;
        ensure(
            rep.exact_zero_gap,
            format!("turan_refined r=1 n={n} gap is not zero"),
        )?;
    }
    Ok(format!(
        "{} sampled cases nonnegative; r=1 gap identically zero",
        cases.len()
    ))
}

fn whpp_witnesses() -> Outcome {
    let mut hs: Vec<(String, _)> = ["diamond.json", "burton_gn_5.json", "dfz.json"]
        .iter()
        .map(|f| (f.to_string(), common::hypergraph(f)))
        .collect();
    for (i, h) in common::random_hypergraphs(RANDOM_WITNESSES, SEED)
        .into_iter()
        .enumerate()
    {
        hs.push((format!("random #{i} {}", h.to_json()), h));
    }
    for (name, h) in &hs {
        let b = whpp_witness(h, PROBE_TRIALS, SEED, PROBE_TOL).map_err(err)?;
        ensure(b.support_match, format!("{name}: support mismatch"))?;
        ensure(
            b.probe.failures == 0,
            format!(
                "{name}: {} probe failures, worst {:?}",
                b.probe.failures, b.probe.worst_witness
            ),
        )?;
    }
    Ok(format!(
        "{} witnesses, support match, 0 failures in {PROBE_TRIALS} probes each",
        hs.len()
    ))
}

fn hpp_falsifier() -> Outcome {
    let r = hpp_falsify_complete63().map_err(err)?;
    let disc = r.discriminant.clone().ok_or("no discriminant")?;
    ensure(r.degree == 2, format!("degree {}", r.degree))?;
    ensure(disc.is_negative(), format!("discriminant {disc}"))?;
    ensure(!r.real_rooted, "restriction is real-rooted")?;
    Ok(format!("degree 2, discriminant {disc}"))
}

fn kummer() -> Outcome {
    let h = build_hnk(2, 2).map_err(err)?.h;
    ensure(
        h.permute_vars(&[2, 3, 0, 1]).map_err(err)? == h22_reference(),
        "h_{2,2} mismatch",
    )?;
    let rep = kummer_check(PROBE_TRIALS, SEED, INCLUSION_SAMPLES, PROBE_TOL).map_err(err)?;
    ensure(rep.h22_matches_reference, "h_{2,2} mismatch")?;
    ensure(
        rep.q_at_ones == Rational::from_integer(2304.into()),
        format!("q(1) = {}", rep.q_at_ones),
    )?;
    ensure(rep.probe_q_h22.failures == 0, "q h_{2,2} probe failed")?;
    ensure(
        rep.inclusion.samples == INCLUSION_SAMPLES,
        "too few inclusion samples",
    )?;
    ensure(
        rep.inclusion.failures == 0,
        format!("{:?}", rep.inclusion.first_failure),
    )?;
    ensure(rep.passed, "report not passed")?;
    Ok(format!(
        "q(1)=2304, {PROBE_TRIALS} probes clean, {INCLUSION_SAMPLES} inclusion samples clean"
    ))
}

fn random_h3(alg: Algebra, case: usize) -> H3Element {
    let mut rng = stream_rng(SEED, (alg.level() as u64) << 32 | case as u64);
    let mut r = || grid_rational(&mut rng, -5, 5, 4);
    let diag = [r(), r(), r()];
    let off =
        std::array::from_fn(|_| CDElement::new((0..alg.dim()).map(|_| r()).collect()).unwrap());
    H3Element::new(diag, off).unwrap()
}

fn jordan_suite() -> Outcome {
    for alg in Algebra::ALL {
        for case in 0..JORDAN_CASES {
            let x = random_h3(alg, case);
            ensure(
                x.cayley_hamilton_residual().is_zero(),
                format!("{alg} case {case}"),
            )?;
        }
    }
    let load = |p: &str, m: &str| -> Result<(PointSet, TargetMatroid), String> {
        Ok((
            PointSet::from_json(&common::data(p)).map_err(err)?,
            TargetMatroid::from_json(&common::data(m)).map_err(err)?,
        ))
    };
    let (pappus, pappus_m) = load("nonpappus_points.json", "nonpappus_matroid.json")?;
    let c = verify_representation(&pappus, &pappus_m).map_err(err)?;
    ensure(
        c.represents && c.subsets_checked == 512,
        "Non-Pappus mismatches",
    )?;
    let (desargues, desargues_m) = load("nondesargues_points.json", "nondesargues_matroid.json")?;
    let c = verify_representation(&desargues, &desargues_m).map_err(err)?;
    ensure(
        c.represents && c.subsets_checked == 1024,
        "Non-Desargues mismatches",
    )?;
    let truncated = pappus.truncate(Algebra::C).map_err(err)?;
    let c = verify_representation(&truncated, &pappus_m).map_err(err)?;
    ensure(
        !c.mismatches.is_empty(),
        "complex truncation still represents Non-Pappus",
    )?;
    Ok(format!(
        "Cayley-Hamilton on {JORDAN_CASES} elements x 4 algebras; both point sets verified; truncation has {} mismatches",
        c.mismatches.len()
    ))
}

fn oracle_equivalence() -> Outcome {
    let corpus = common::corpus();
    for h in &corpus {
        let m = VHMatroid::new(h.clone()).map_err(err)?;
        let brute = m.brute_force_table().map_err(err)?;
        if let Some(s) = (0..=m.full_mask()).find(|&s| m.rank(s) != brute.rank(s)) {
            return Err(format!("{} differs at {s:#b}", h.to_json()));
        }
        check_polymatroid(&brute).map_err(|v| format!("{}: {v:?}", h.to_json()))?;
    }
    Ok(format!(
        "{} matroids, closed form = brute force, polymatroid axioms hold",
        corpus.len()
    ))
}

fn budget(start: Instant, secs: u64, what: &str) -> Result<(), String> {
    let limit = Duration::from_secs(secs);
    ensure(
        start.elapsed() <= limit,
        format!("{what} took {:.1?}, budget {limit:?}", start.elapsed()),
    )
}

/// Name, wall-clock budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("V8 reconstruction", 1, v8_reconstruction),
        ("Ingleton violation", 1, ingleton_violation),
        ("DFZ violation", 60, dfz_violation),
        ("identity suite", 30, identity_suite),
        ("inequality sampling", 60, inequality_sampling),
        ("WHPP witnesses", 300, whpp_witnesses),
        ("HPP falsifier", 1, hpp_falsifier),
        ("h22 and Kummer", 60, kummer),
        ("Jordan suite", 120, jordan_suite),
        ("oracle equivalence", 120, oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, secs, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run().and_then(|msg| budget(start, *secs, "criterion").map(|_| msg));
        let elapsed = start.elapsed();
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name} ({elapsed:.2?}): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
