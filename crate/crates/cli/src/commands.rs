use std::path::Path;
use std::str::FromStr;

use hypmat::jordan::{verify_representation, Algebra, PointSet, TargetMatroid};
use hypmat::matroid::{
    check_polymatroid, enumerate, family_one_based, has_minor, linear_rank_ineq,
    subset_from_one_based, verify_basis_exchange, verify_d_partition, violation_search, Family,
    Hypergraph, PolymatroidViolation, RankInequality, RankOracle, RankTable, SearchScope,
    VHMatroid,
};
use hypmat::stability::{
    approx_values, cone_member, cone_member_approx, eigenvalues, hyp_rank, probe_hyperbolicity,
    probe_stability,
};
use hypmat::symfun::{sample_inequality, verify_identity, Identity, Inequality};
use hypmat::vamoslab::{
    bases_gen_poly, build_hnk, counterex_ranks, hpp_restriction, kummer_check, w_poly, whpp_witness,
};
use hypmat::{bits, ExactPoly, Rational};
use num::One;
use serde_json::{json, Value};

use crate::{
    Command, ExpectMinor, Failure, FamilyArg, GlobalOpts, InequalityArg, Outcome, PolyArgs,
    RankIneqArgs,
};

type Run = Result<Outcome, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    Ok(Hypergraph::from_json(&read(path)?)?)
}

fn matroid(path: &Path) -> Result<VHMatroid, Failure> {
    Ok(VHMatroid::new(hypergraph(path)?)?)
}

fn poly(path: &Path) -> Result<ExactPoly, Failure> {
    Ok(ExactPoly::from_json(&read(path)?)?)
}

fn input(e: String) -> Failure {
    Failure::Input(e)
}

fn ser<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable result")
}

fn done(result: Value, passed: bool) -> Run {
    Ok(Outcome { result, passed })
}

/// The Vámos matroid on `[8]` with its five non-bases.
fn vamos() -> Result<RankTable, Failure> {
    let nonbases = [
        [1, 2, 3, 4],
        [1, 2, 5, 6],
        [1, 2, 7, 8],
        [3, 4, 5, 6],
        [5, 6, 7, 8],
    ];
    let masks = nonbases
        .iter()
        .map(|s| subset_from_one_based(s, 8))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RankTable::from_nonbases(8, 4, &masks)?)
}

pub fn run(cmd: &Command, g: &GlobalOpts) -> Run {
    match cmd {
        Command::BuildMatroid(a) => build_matroid(&a.hypergraph),
        Command::Rank { input, set, paired } => rank(&input.hypergraph, set, *paired),
        Command::Enumerate { input, family } => enumerate_family(&input.hypergraph, *family),
        Command::VerifyAxioms(a) => verify_axioms(&a.hypergraph),
        Command::Ingleton(a) => rank_inequality(RankInequality::Ingleton, a, g),
        Command::Dfz(a) => rank_inequality(RankInequality::Dfz, a, g),
        Command::SearchViolations {
            input,
            inequality,
            max_pairs,
            limit,
        } => {
            let which = match inequality {
                InequalityArg::Ingleton => RankInequality::Ingleton,
                InequalityArg::Dfz => RankInequality::Dfz,
            };
            let m = matroid(&input.hypergraph)?;
            search(which, &m, *max_pairs, *limit, g)
        }
        Command::Minors {
            input,
            target,
            expect,
        } => minors(&input.hypergraph, target.as_deref(), *expect),
        Command::BasesPoly(a) => {
            let m = matroid(&a.hypergraph)?;
            let p = bases_gen_poly(&m)?;
            let ones = vec![Rational::one(); p.arity()];
            done(
                json!({
                    "hypergraph": m.hypergraph(),
                    "num_bases": p.num_terms(),
                    "value_at_ones": p.evaluate(&ones)?.to_string(),
                    "closed_form_agrees": true,
                    "poly": p,
                }),
                true,
            )
        }
        Command::WPoly(a) => {
            let h = hypergraph(&a.hypergraph)?;
            let w = w_poly(&h)?;
            done(
                json!({ "hypergraph": h, "f": w.f, "w": w.w, "support_equal": w.support_equal }),
                w.support_equal,
            )
        }
        Command::WhppWitness(a) => {
            let b = whpp_witness(&hypergraph(&a.hypergraph)?, g.trials, g.seed, g.tol)?;
            let found = b.probe.failures > 0;
            let passed = b.support_match && b.diagonal_recovers_w && found == g.expect_violation;
            done(ser(&b), passed)
        }
        Command::HppFalsify { hypergraph: path } => {
            let h = match path {
                Some(p) => hypergraph(p)?,
                None => Hypergraph::complete(6, 3)?,
            };
            let r = hpp_restriction(&h)?;
            // A refutation is the expected outcome here.
            done(ser(&r), r.non_real)
        }
        Command::BuildHnk { n, k } => {
            let hnk = build_hnk(*n, *k)?;
            done(
                json!({
                    "n": n,
                    "k": k,
                    "hypergraph": hnk.hypergraph,
                    "num_bases": hnk.h.num_terms(),
                    "bases_poly": hnk.h,
                }),
                true,
            )
        }
        Command::Kummer => {
            let r = kummer_check(g.trials, g.seed, g.samples, g.tol)?;
            done(ser(&r), r.passed)
        }
        Command::CounterexRanks { n, k, z, x, y } => {
            let z = match z {
                Some(list) => crate::parse::indices(list).map_err(input)?,
                None => (1..k.saturating_sub(1)).collect(),
            };
            let c = counterex_ranks(
                *n,
                *k,
                &z,
                x.unwrap_or(k.saturating_sub(1)),
                y.unwrap_or(*k),
            )?;
            done(ser(&c), c.violated)
        }
        Command::CheckIdentities { r, n, identity } => {
            check_identities(*r, *n, identity.as_deref())
        }
        Command::InequalitySample { inequality, r, n } => {
            let which = Inequality::from_str(inequality)?;
            let rep = sample_inequality(which, *r, *n, g.samples, g.seed)?;
            let found = !rep.nonnegative_on_samples;
            done(ser(&rep), found == g.expect_violation)
        }
        Command::Probe {
            poly: path,
            direction,
        } => {
            let p = poly(path)?;
            let rep = match direction {
                Some(e) => {
                    let e = crate::parse::rationals(e).map_err(input)?;
                    probe_hyperbolicity(&p, &e, g.trials, g.seed, g.tol)?
                }
                None => probe_stability(&p, g.trials, g.seed, g.tol)?,
            };
            let found = rep.failures > 0;
            done(ser(&rep), found == g.expect_violation)
        }
        Command::Eigenvalues(a) => eigen(a),
        Command::ConeMember(a) => cone(a, g),
        Command::JordanVerify {
            points,
            matroid,
            truncate,
        } => {
            let mut pts = PointSet::from_json(&read(points)?)?;
            if let Some(alg) = truncate {
                pts = pts.truncate(Algebra::from_str(alg)?)?;
            }
            let target = TargetMatroid::from_json(&read(matroid)?)?;
            let check = verify_representation(&pts, &target)?;
            let found = !check.represents;
            done(ser(&check), found == g.expect_violation)
        }
    }
}

fn build_matroid(path: &Path) -> Run {
    let m = matroid(path)?;
    let bases = m.bases();
    done(
        json!({
            "hypergraph": m.hypergraph(),
            "ground_size": m.ground_size(),
            "rank": m.full_rank(),
            "num_bases": bases.len(),
            "nonbases": family_one_based(&m.nonbases()),
            "bases": family_one_based(&bases),
        }),
        true,
    )
}

fn rank(path: &Path, set: &str, paired: bool) -> Run {
    let m = matroid(path)?;
    let n = m.n();
    let elems = crate::parse::ground_set(set, n).map_err(input)?;
    let mask = if paired {
        m.paired(subset_from_one_based(&elems, n)?)
    } else {
        subset_from_one_based(&elems, 2 * n)?
    };
    done(
        json!({ "set": bits::to_one_based(mask), "rank": m.rank(mask), "paired": paired }),
        true,
    )
}

fn enumerate_family(path: &Path, family: FamilyArg) -> Run {
    let m = matroid(path)?;
    let what = match family {
        FamilyArg::Bases => Family::Bases,
        FamilyArg::Circuits => Family::Circuits,
        FamilyArg::Hyperplanes => Family::Hyperplanes,
    };
    let sets = enumerate(&m, what)?;
    done(
        json!({ "family": family, "count": sets.len(), "sets": family_one_based(&sets) }),
        true,
    )
}

fn polymatroid_json(v: &PolymatroidViolation) -> Value {
    match v {
        PolymatroidViolation::EmptySetRank(r) => json!({ "kind": "empty_set_rank", "rank": r }),
        PolymatroidViolation::NotMonotone { set, element } => {
            json!({ "kind": "not_monotone", "set": bits::to_one_based(*set), "element": element + 1 })
        }
        PolymatroidViolation::NotSubmodular { set, a, b } => json!({
            "kind": "not_submodular",
            "set": bits::to_one_based(*set),
            "a": a + 1,
            "b": b + 1,
        }),
    }
}

fn verify_axioms(path: &Path) -> Run {
    let m = matroid(path)?;
    let exchange = verify_basis_exchange(&m.bases())?;
    let hyperplanes = enumerate(&m, Family::Hyperplanes)?;
    let d = 2 * m.hypergraph().d() - 1;
    let partition = verify_d_partition(&hyperplanes, m.ground_size(), d)?;
    let poly = check_polymatroid(&RankTable::from_oracle(&m)?);
    let passed = exchange.is_none() && partition.holds && !partition.trivial && poly.is_ok();
    done(
        json!({
            "basis_exchange": { "holds": exchange.is_none(), "violation": exchange },
            "hyperplane_partition": { "d": d, "check": partition },
            "polymatroid": {
                "holds": poly.is_ok(),
                "violation": poly.err().as_ref().map(polymatroid_json),
            },
        }),
        passed,
    )
}

fn search(
    which: RankInequality,
    m: &VHMatroid,
    max_pairs: Option<usize>,
    limit: usize,
    g: &GlobalOpts,
) -> Run {
    let scope = match max_pairs {
        Some(k) => SearchScope::PairedUnions { max_pairs: k },
        None => SearchScope::PairedDoubletons,
    };
    let found = violation_search(m, which, scope)?;
    let scope_json = match scope {
        SearchScope::PairedDoubletons => json!({ "kind": "paired_doubletons" }),
        SearchScope::PairedUnions { max_pairs } => {
            json!({ "kind": "paired_unions", "max_pairs": max_pairs })
        }
    };
    done(
        json!({
            "inequality": which,
            "hypergraph": m.hypergraph(),
            "scope": scope_json,
            "violations": found.len(),
            "witnesses": &found[..found.len().min(limit)],
        }),
        found.is_empty() != g.expect_violation,
    )
}

fn rank_inequality(which: RankInequality, a: &RankIneqArgs, g: &GlobalOpts) -> Run {
    let m = matroid(&a.input.hypergraph)?;
    let Some(spec) = &a.sets else {
        return search(which, &m, a.max_pairs, a.limit, g);
    };
    if a.max_pairs.is_some() {
        return Err(Failure::Input(
            "--max-pairs applies to searches, not to --sets".into(),
        ));
    }
    let sets = crate::parse::set_list(spec, m.n()).map_err(input)?;
    let masks = sets
        .iter()
        .map(|s| subset_from_one_based(s, m.ground_size()))
        .collect::<Result<Vec<_>, _>>()?;
    let v = linear_rank_ineq(which, &m, &masks)?;
    done(
        json!({
            "inequality": which,
            "hypergraph": m.hypergraph(),
            "sets": masks.iter().map(|&s| bits::to_one_based(s)).collect::<Vec<_>>(),
            "value": v,
        }),
        v.violated == g.expect_violation,
    )
}

fn minors(path: &Path, target: Option<&Path>, expect: Option<ExpectMinor>) -> Run {
    let m = matroid(path)?;
    let (present, target_json) = match target {
        Some(t) => {
            let tm = matroid(t)?;
            (
                has_minor(&m, &tm)?,
                json!({ "hypergraph": tm.hypergraph() }),
            )
        }
        None => (has_minor(&m, &vamos()?)?, json!("vamos")),
    };
    let passed = match expect {
        None => true,
        Some(ExpectMinor::Present) => present,
        Some(ExpectMinor::Absent) => !present,
    };
    done(
        json!({ "hypergraph": m.hypergraph(), "target": target_json, "has_minor": present }),
        passed,
    )
}

fn check_identities(r: usize, n: usize, only: Option<&str>) -> Run {
    let which: Vec<Identity> = match only {
        Some(name) => vec![Identity::from_str(name)?],
        None => Identity::ALL
            .into_iter()
            .filter(|i| r >= i.min_r())
            .collect(),
    };
    if which.is_empty() {
        return Err(Failure::Input(format!("no identity applies at r = {r}")));
    }
    let checks = which
        .into_iter()
        .map(|i| verify_identity(i, r, n))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = checks.iter().all(|c| c.holds);
    done(json!({ "r": r, "n": n, "checks": checks }), passed)
}

fn eigen(a: &PolyArgs) -> Run {
    let h = poly(&a.poly)?;
    let e = crate::parse::rationals(&a.direction).map_err(input)?;
    let x = crate::parse::rationals(&a.point).map_err(input)?;
    match eigenvalues(&h, &e, &x) {
        Ok(s) => done(
            json!({
                "hyperbolic_at_x": true,
                "eigenvalues": &s,
                "approx": approx_values(&s),
                "lambda_max": s.lambda_max(),
                "lambda_min": s.lambda_min(),
                "rank": hyp_rank(&h, &e, &x)?,
            }),
            true,
        ),
        Err(e @ hypmat::Error::NotHyperbolic { .. }) => done(
            json!({ "hyperbolic_at_x": false, "detail": e.to_string() }),
            false,
        ),
        Err(e) => Err(e.into()),
    }
}

fn cone(a: &PolyArgs, g: &GlobalOpts) -> Run {
    let h = poly(&a.poly)?;
    let e = crate::parse::rationals(&a.direction).map_err(input)?;
    let (status, exact) = match crate::parse::rationals(&a.point) {
        Ok(x) => (cone_member(&h, &e, &x)?, true),
        Err(_) => {
            let x = crate::parse::floats(&a.point).map_err(input)?;
            (cone_member_approx(&h, &e, &x, g.tol)?, false)
        }
    };
    done(json!({ "status": status, "exact": exact }), true)
}
