use rayon::prelude::*;
use serde::Serialize;

use super::{RankOracle, VHMatroid, EXHAUSTIVE_CAP};
use crate::bits;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankInequality {
    Ingleton,
    Dfz,
}

impl RankInequality {
    pub fn arity(self) -> usize {
        match self {
            RankInequality::Ingleton => 4,
            RankInequality::Dfz => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RankInequality::Ingleton => "ingleton",
            RankInequality::Dfz => "dfz",
        }
    }
}

impl std::str::FromStr for RankInequality {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ingleton" => Ok(RankInequality::Ingleton),
            "dfz" => Ok(RankInequality::Dfz),
            _ => Err(Error::input(format!("unknown rank inequality {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityValue {
    pub lhs: usize,
    pub rhs: usize,
    pub violated: bool,
}

// Index lists into the set tuple (A = 0, B = 1, ...).
const INGLETON_LHS: &[&[usize]] = &[&[0, 1], &[0, 2, 3], &[2], &[3], &[1, 2, 3]];
const INGLETON_RHS: &[&[usize]] = &[&[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]];

const DFZ_LHS: &[&[usize]] = &[
    &[0, 3],
    &[1, 2],
    &[2, 4],
    &[4, 5],
    &[1, 3, 5],
    &[0, 1, 2, 3],
    &[0, 1, 2, 4],
    &[0, 2, 4, 5],
    &[0, 3, 4, 5],
];
const DFZ_RHS: &[&[usize]] = &[
    &[0, 1, 2],
    &[0, 1, 3],
    &[0, 2, 4],
    &[0, 3, 5],
    &[0, 4, 5],
    &[1, 2, 3],
    &[1, 2, 4],
    &[2, 4, 5],
    &[3, 4, 5],
];

fn side<O: RankOracle + ?Sized>(o: &O, sets: &[u64], terms: &[&[usize]]) -> usize {
    terms
        .iter()
        .map(|t| o.rank(t.iter().fold(0, |m, &i| m | sets[i])))
        .sum()
}

fn evaluate<O: RankOracle + ?Sized>(which: RankInequality, o: &O, sets: &[u64]) -> InequalityValue {
    let (l, r) = match which {
        RankInequality::Ingleton => (INGLETON_LHS, INGLETON_RHS),
        RankInequality::Dfz => (DFZ_LHS, DFZ_RHS),
    };
    let lhs = side(o, sets, l);
    let rhs = side(o, sets, r);
    InequalityValue {
        lhs,
        rhs,
        violated: lhs > rhs,
    }
}

/// Both sides of the inequality `lhs <= rhs` for the given sets.
pub fn linear_rank_ineq<O: RankOracle + ?Sized>(
    which: RankInequality,
    o: &O,
    sets: &[u64],
) -> Result<InequalityValue> {
    if sets.len() != which.arity() {
        return Err(Error::input(format!(
            "{} takes {} sets, got {}",
            which.name(),
            which.arity(),
            sets.len()
        )));
    }
    for &s in sets {
        o.rank_checked(s)?;
    }
    Ok(evaluate(which, o, sets))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchScope {
    /// Each set is one pair `{i, i'}`, with distinct vertices across the tuple.
    PairedDoubletons,
    /// Each set is `S ∪ S'` for a nonempty vertex set of at most `max_pairs` vertices.
    PairedUnions { max_pairs: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationWitness {
    pub sets: Vec<u64>,
    pub lhs: usize,
    pub rhs: usize,
}

impl Serialize for ViolationWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct W {
            sets: Vec<Vec<usize>>,
            lhs: usize,
            rhs: usize,
        }
        W {
            sets: self.sets.iter().map(|&m| bits::to_one_based(m)).collect(),
            lhs: self.lhs,
            rhs: self.rhs,
        }
        .serialize(s)
    }
}

/// Largest number of set tuples a search may visit.
pub const SEARCH_BUDGET: u128 = 200_000_000;

/// Every violating tuple within the scope, in lexicographic order of the
/// vertex sets generating it.
pub fn violation_search(
    m: &VHMatroid,
    which: RankInequality,
    scope: SearchScope,
) -> Result<Vec<ViolationWitness>> {
    if m.ground_size() > EXHAUSTIVE_CAP {
        return Err(Error::input(format!(
            "ground set of {} elements exceeds the exhaustive limit {EXHAUSTIVE_CAP}",
            m.ground_size()
        )));
    }
    let n = m.n();
    let k = which.arity();
    let (candidates, distinct): (Vec<u64>, bool) = match scope {
        SearchScope::PairedDoubletons => ((0..n).map(|i| 1u64 << i).collect(), true),
        SearchScope::PairedUnions { max_pairs } => {
            let c = (1..=max_pairs.min(n))
                .flat_map(|s| bits::k_subsets(n, s))
                .collect();
            (c, false)
        }
    };
    let c = candidates.len() as u128;
    if c.pow(k as u32) > SEARCH_BUDGET {
        return Err(Error::input(format!(
            "search would visit {} tuples (limit {SEARCH_BUDGET}); lower max_pairs",
            c.pow(k as u32)
        )));
    }
    let paired: Vec<u64> = candidates.iter().map(|&v| m.paired(v)).collect();
    let per_first: Vec<Vec<ViolationWitness>> = (0..candidates.len())
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut idx = vec![first];
            extend(m, which, &paired, distinct, k, &mut idx, &mut out);
            out
        })
        .collect();
    Ok(per_first.into_iter().flatten().collect())
}

fn extend(
    m: &VHMatroid,
    which: RankInequality,
    paired: &[u64],
    distinct: bool,
    k: usize,
    idx: &mut Vec<usize>,
    out: &mut Vec<ViolationWitness>,
) {
    if idx.len() == k {
        let sets: Vec<u64> = idx.iter().map(|&i| paired[i]).collect();
        let v = evaluate(which, m, &sets);
        if v.violated {
            out.push(ViolationWitness {
                sets,
                lhs: v.lhs,
                rhs: v.rhs,
            });
        }
        return;
    }
    for c in 0..paired.len() {
        if distinct && idx.contains(&c) {
            continue;
        }
        idx.push(c);
        extend(m, which, paired, distinct, k, idx, out);
        idx.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{Hypergraph, Uniform};

    fn diamond() -> VHMatroid {
        let h = Hypergraph::new(
            4,
            2,
            &[vec![1, 2], vec![1, 3], vec![2, 3], vec![2, 4], vec![3, 4]],
        )
        .unwrap();
        VHMatroid::new(h).unwrap()
    }

    #[test]
    fn vamos_witness() {
        let m = diamond();
        // A = {1,1'}, B = {4,4'}, C = {2,2'}, D = {3,3'}
        let sets: Vec<u64> = [0, 3, 1, 2].iter().map(|&i| m.paired(1 << i)).collect();
        let v = linear_rank_ineq(RankInequality::Ingleton, &m, &sets).unwrap();
        assert_eq!(
            v,
            InequalityValue {
                lhs: 16,
                rhs: 15,
                violated: true
            }
        );
        let found =
            violation_search(&m, RankInequality::Ingleton, SearchScope::PairedDoubletons).unwrap();
        assert!(found.iter().any(|w| w.sets == sets));
    }

    #[test]
    fn uniform_satisfies_ingleton() {
        let u = Uniform { r: 2, m: 4 };
        let v = linear_rank_ineq(RankInequality::Ingleton, &u, &[1, 2, 4, 8]).unwrap();
        assert!(!v.violated);
        let m = VHMatroid::new(Hypergraph::empty(4, 2).unwrap()).unwrap();
        for scope in [
            SearchScope::PairedDoubletons,
            SearchScope::PairedUnions { max_pairs: 4 },
        ] {
            assert!(violation_search(&m, RankInequality::Ingleton, scope)
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn wrong_arity_and_range() {
        let u = Uniform { r: 2, m: 4 };
        assert!(linear_rank_ineq(RankInequality::Dfz, &u, &[1, 2, 4, 8]).is_err());
        assert!(linear_rank_ineq(RankInequality::Ingleton, &u, &[1, 2, 4, 16]).is_err());
    }

    #[test]
    fn dfz_example() {
        let edges = [
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 5],
            [1, 4, 6],
            [1, 5, 6],
            [2, 3, 4],
            [2, 3, 5],
            [3, 5, 6],
            [4, 5, 6],
        ];
        let h =
            Hypergraph::new(6, 3, &edges.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap();
        let m = VHMatroid::new(h).unwrap();
        let sets: Vec<u64> = (0..6).map(|i| m.paired(1 << i)).collect();
        let v = linear_rank_ineq(RankInequality::Dfz, &m, &sets).unwrap();
        // Values from a brute-force basis oracle.
        assert_eq!(
            v,
            InequalityValue {
                lhs: 46,
                rhs: 45,
                violated: true
            }
        );
        assert!(
            !violation_search(&m, RankInequality::Dfz, SearchScope::PairedDoubletons)
                .unwrap()
                .is_empty()
        );
    }
}
