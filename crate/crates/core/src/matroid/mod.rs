//! Matroids on at most 16 elements through their rank functions.
//!
//! Subsets are `u64` masks over `0..m`. For the V_H matroids the element
//! `i'` paired with vertex `i` is `i + n`; external JSON is 1-based.

mod axioms;
mod hypergraph;
mod ineq;
mod minor;
mod vh;

use std::collections::HashSet;

use crate::bits;
use crate::error::{Error, Result};

pub use axioms::{
    check_polymatroid, verify_basis_exchange, verify_d_partition, DPartitionCheck,
    DPartitionViolation, ExchangeViolation, PolymatroidViolation,
};
pub use hypergraph::{Hypergraph, HypergraphJson};
pub use ineq::{
    linear_rank_ineq, violation_search, InequalityValue, RankInequality, SearchScope,
    ViolationWitness,
};
pub use minor::{has_minor, is_isomorphic, minor};
pub use vh::{diagonal_polymatroid, VHMatroid};

/// Largest ground set for exhaustive enumeration.
pub const EXHAUSTIVE_CAP: usize = 16;

pub trait RankOracle: Sync {
    fn ground_size(&self) -> usize;

    /// Rank of a subset of `0..ground_size()`; the mask is not range-checked.
    fn rank(&self, s: u64) -> usize;

    fn full_mask(&self) -> u64 {
        (1u64 << self.ground_size()) - 1
    }

    fn full_rank(&self) -> usize {
        self.rank(self.full_mask())
    }

    fn rank_checked(&self, s: u64) -> Result<usize> {
        if s & !self.full_mask() != 0 {
            return Err(Error::input(format!(
                "subset {:?} leaves the ground set 1..={}",
                bits::to_one_based(s),
                self.ground_size()
            )));
        }
        Ok(self.rank(s))
    }

    fn is_independent(&self, s: u64) -> bool {
        self.rank(s) == bits::size(s)
    }
}

impl<T: RankOracle + ?Sized> RankOracle for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn rank(&self, s: u64) -> usize {
        (**self).rank(s)
    }
}

/// Ranks of every subset, indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    m: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    pub fn from_oracle<O: RankOracle + ?Sized>(o: &O) -> Result<Self> {
        let m = o.ground_size();
        check_cap(m)?;
        let ranks = bits::all_subsets(m).map(|s| o.rank(s) as u8).collect();
        Ok(RankTable { m, ranks })
    }

    pub fn from_fn(m: usize, f: impl Fn(u64) -> usize) -> Result<Self> {
        check_cap(m)?;
        Ok(RankTable {
            m,
            ranks: bits::all_subsets(m).map(|s| f(s) as u8).collect(),
        })
    }

    /// Brute-force rank from a basis family: `r(S) = max |S ∩ B|`.
    pub fn from_bases(m: usize, bases: &[u64]) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::input("a matroid needs at least one basis"));
        }
        Self::from_fn(m, |s| {
            bases.iter().map(|b| bits::size(s & b)).max().unwrap_or(0)
        })
    }

    pub fn from_nonbases(m: usize, rank: usize, nonbases: &[u64]) -> Result<Self> {
        let bad: HashSet<u64> = nonbases.iter().copied().collect();
        let bases: Vec<u64> = bits::k_subsets(m, rank)
            .filter(|b| !bad.contains(b))
            .collect();
        Self::from_bases(m, &bases)
    }
}

impl RankOracle for RankTable {
    fn ground_size(&self) -> usize {
        self.m
    }
    fn rank(&self, s: u64) -> usize {
        self.ranks[s as usize] as usize
    }
}

/// `U_{r,m}`.
#[derive(Clone, Copy, Debug)]
pub struct Uniform {
    pub r: usize,
    pub m: usize,
}

impl RankOracle for Uniform {
    fn ground_size(&self) -> usize {
        self.m
    }
    fn rank(&self, s: u64) -> usize {
        bits::size(s).min(self.r)
    }
}

fn check_cap(m: usize) -> Result<()> {
    if m > EXHAUSTIVE_CAP {
        return Err(Error::input(format!(
            "ground set of {m} elements exceeds the exhaustive limit {EXHAUSTIVE_CAP}"
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Bases,
    Circuits,
    Hyperplanes,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bases" => Ok(Family::Bases),
            "circuits" => Ok(Family::Circuits),
            "hyperplanes" => Ok(Family::Hyperplanes),
            _ => Err(Error::input(format!("unknown family {s:?}"))),
        }
    }
}

/// Exhaustive enumeration; masks ascending.
pub fn enumerate<O: RankOracle + ?Sized>(o: &O, what: Family) -> Result<Vec<u64>> {
    let m = o.ground_size();
    check_cap(m)?;
    let full = o.full_mask();
    let r = o.full_rank();
    let keep = |s: u64| -> bool {
        let k = bits::size(s);
        let rs = o.rank(s);
        match what {
            Family::Bases => k == r && rs == r,
            Family::Circuits => {
                k > 0 && rs + 1 == k && bits::elements(s).all(|x| o.rank(s & !(1 << x)) == k - 1)
            }
            Family::Hyperplanes => {
                r > 0 && rs + 1 == r && bits::elements(full & !s).all(|x| o.rank(s | 1 << x) == r)
            }
        }
    };
    Ok(bits::all_subsets(m).filter(|&s| keep(s)).collect())
}

/// Sorted, 1-based rendering of a family.
pub fn family_one_based(f: &[u64]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = f.iter().map(|&s| bits::to_one_based(s)).collect();
    v.sort();
    v
}

/// Parses a 1-based subset of `1..=m`.
pub fn subset_from_one_based(elems: &[usize], m: usize) -> Result<u64> {
    let mut mask = 0u64;
    for &e in elems {
        if e == 0 || e > m {
            return Err(Error::input(format!("element {e} outside 1..={m}")));
        }
        mask |= 1 << (e - 1);
    }
    Ok(mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_families() {
        let u = Uniform { r: 2, m: 3 };
        assert_eq!(enumerate(&u, Family::Circuits).unwrap(), vec![0b111]);
        assert_eq!(enumerate(&u, Family::Bases).unwrap().len(), 3);
        assert_eq!(
            enumerate(&u, Family::Hyperplanes).unwrap(),
            vec![0b001, 0b010, 0b100]
        );
    }

    #[test]
    fn table_from_bases_matches_uniform() {
        let bases: Vec<u64> = bits::k_subsets(6, 3).collect();
        let t = RankTable::from_bases(6, &bases).unwrap();
        let u = Uniform { r: 3, m: 6 };
        assert!(bits::all_subsets(6).all(|s| t.rank(s) == u.rank(s)));
    }

    #[test]
    fn range_and_cap_errors() {
        let u = Uniform { r: 2, m: 3 };
        assert!(u.rank_checked(0b1000).is_err());
        assert!(subset_from_one_based(&[0], 3).is_err());
        assert!(enumerate(&Uniform { r: 2, m: 17 }, Family::Bases).is_err());
    }
}
