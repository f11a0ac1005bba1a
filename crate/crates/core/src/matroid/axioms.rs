use std::collections::HashSet;

use serde::Serialize;

use super::RankOracle;
use crate::bits;
use crate::error::{Error, Result};

/// `B1 - x + y` is not a member for any `y` in `B2 - B1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub b1: u64,
    pub b2: u64,
    /// 0-based element of `B1 - B2`.
    pub element: usize,
}

impl Serialize for ExchangeViolation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct W {
            b1: Vec<usize>,
            b2: Vec<usize>,
            element: usize,
        }
        W {
            b1: bits::to_one_based(self.b1),
            b2: bits::to_one_based(self.b2),
            element: self.element + 1,
        }
        .serialize(s)
    }
}

/// Exhaustive basis-exchange check; the first violation in ascending
/// `(B1, B2, x)` order is returned.
pub fn verify_basis_exchange(family: &[u64]) -> Result<Option<ExchangeViolation>> {
    if family.is_empty() {
        return Err(Error::input("empty set family"));
    }
    let mut sorted = family.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let members: HashSet<u64> = sorted.iter().copied().collect();
    for &b1 in &sorted {
        for &b2 in &sorted {
            for x in bits::elements(b1 & !b2) {
                let base = b1 & !(1 << x);
                let ok = bits::elements(b2 & !b1).any(|y| members.contains(&(base | 1 << y)));
                if !ok {
                    return Ok(Some(ExchangeViolation { b1, b2, element: x }));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DPartitionViolation {
    SmallMember { member: u64 },
    Uncovered { subset: u64 },
    MultiplyCovered { subset: u64, count: usize },
}

impl Serialize for DPartitionViolation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match self {
            DPartitionViolation::SmallMember { member } => {
                m.serialize_entry("kind", "small_member")?;
                m.serialize_entry("set", &bits::to_one_based(*member))?;
            }
            DPartitionViolation::Uncovered { subset } => {
                m.serialize_entry("kind", "uncovered")?;
                m.serialize_entry("set", &bits::to_one_based(*subset))?;
            }
            DPartitionViolation::MultiplyCovered { subset, count } => {
                m.serialize_entry("kind", "multiply_covered")?;
                m.serialize_entry("set", &bits::to_one_based(*subset))?;
                m.serialize_entry("count", count)?;
            }
        }
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DPartitionCheck {
    pub holds: bool,
    /// The family is exactly `{E}`.
    pub trivial: bool,
    pub violation: Option<DPartitionViolation>,
}

/// Every member has at least `d` elements and every `d`-subset of the
/// ground set `0..m` lies in exactly one member.
pub fn verify_d_partition(family: &[u64], m: usize, d: usize) -> Result<DPartitionCheck> {
    if family.is_empty() {
        return Err(Error::input("empty set family"));
    }
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    if family.iter().any(|&s| s & !full != 0) {
        return Err(Error::input("family member leaves the ground set"));
    }
    let trivial = family.len() == 1 && family[0] == full;
    let violation = if let Some(&member) = family.iter().find(|&&s| bits::size(s) < d) {
        Some(DPartitionViolation::SmallMember { member })
    } else {
        bits::k_subsets(m, d).find_map(|t| {
            let count = family.iter().filter(|&&s| s & t == t).count();
            match count {
                1 => None,
                0 => Some(DPartitionViolation::Uncovered { subset: t }),
                _ => Some(DPartitionViolation::MultiplyCovered { subset: t, count }),
            }
        })
    };
    Ok(DPartitionCheck {
        holds: violation.is_none(),
        trivial,
        violation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolymatroidViolation {
    EmptySetRank(usize),
    NotMonotone { set: u64, element: usize },
    NotSubmodular { set: u64, a: usize, b: usize },
}

/// `r(∅) = 0`, `r(S) <= r(S + a)` and `r(S + a) + r(S + b) >= r(S + a + b) + r(S)`;
/// the local forms imply the global axioms.
pub fn check_polymatroid<O: RankOracle + ?Sized>(o: &O) -> Result<(), PolymatroidViolation> {
    let m = o.ground_size();
    if o.rank(0) != 0 {
        return Err(PolymatroidViolation::EmptySetRank(o.rank(0)));
    }
    for s in bits::all_subsets(m) {
        let rs = o.rank(s);
        let outside: Vec<usize> = (0..m).filter(|&i| s >> i & 1 == 0).collect();
        for (k, &a) in outside.iter().enumerate() {
            let ra = o.rank(s | 1 << a);
            if ra < rs {
                return Err(PolymatroidViolation::NotMonotone { set: s, element: a });
            }
            for &b in &outside[k + 1..] {
                let rb = o.rank(s | 1 << b);
                let rab = o.rank(s | 1 << a | 1 << b);
                if ra + rb < rab + rs {
                    return Err(PolymatroidViolation::NotSubmodular { set: s, a, b });
                }
            }
        }
    }
    Ok(())
}
