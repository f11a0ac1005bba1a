use rayon::prelude::*;

use super::{enumerate, Family, RankOracle, RankTable};
use crate::bits;
use crate::error::{Error, Result};

/// `M \ D / C` with the remaining elements relabeled in increasing order:
/// `r'(S) = r(S ∪ C) - r(C)`.
pub fn minor<O: RankOracle + ?Sized>(o: &O, delete: u64, contract: u64) -> Result<RankTable> {
    if delete & contract != 0 {
        return Err(Error::input("delete and contract sets overlap"));
    }
    o.rank_checked(delete | contract)?;
    let rest: Vec<usize> = bits::elements(o.full_mask() & !(delete | contract)).collect();
    let rc = o.rank(contract);
    RankTable::from_fn(rest.len(), |s| {
        let lifted = bits::elements(s).fold(contract, |acc, i| acc | 1 << rest[i]);
        o.rank(lifted) - rc
    })
}

/// Cheap isomorphism invariants.
#[derive(PartialEq, Eq)]
struct Invariants {
    m: usize,
    rank: usize,
    hyperplane_sizes: Vec<usize>,
    /// Per element: number of circuits of each size containing it.
    signatures: Vec<Vec<usize>>,
    sorted_signatures: Vec<Vec<usize>>,
}

impl Invariants {
    fn of(t: &RankTable) -> Invariants {
        let m = t.ground_size();
        let mut hyperplane_sizes: Vec<usize> = enumerate(t, Family::Hyperplanes)
            .expect("table is within the cap")
            .iter()
            .map(|&h| bits::size(h))
            .collect();
        hyperplane_sizes.sort_unstable();
        let mut signatures = vec![vec![0usize; m + 1]; m];
        for c in enumerate(t, Family::Circuits).expect("table is within the cap") {
            let k = bits::size(c);
            for i in bits::elements(c) {
                signatures[i][k] += 1;
            }
        }
        let mut sorted_signatures = signatures.clone();
        sorted_signatures.sort();
        Invariants {
            m,
            rank: t.full_rank(),
            hyperplane_sizes,
            signatures,
            sorted_signatures,
        }
    }

    fn compatible(&self, other: &Invariants) -> bool {
        self.m == other.m
            && self.rank == other.rank
            && self.hyperplane_sizes == other.hyperplane_sizes
            && self.sorted_signatures == other.sorted_signatures
    }
}

fn isomorphic_tables(a: &RankTable, ia: &Invariants, b: &RankTable, ib: &Invariants) -> bool {
    if !ia.compatible(ib) {
        return false;
    }
    let m = ia.m;
    // image[T] for subsets T of the elements assigned so far.
    let mut image = vec![0u64; 1 << m];
    let mut used = 0u64;
    fn go(
        pos: usize,
        a: &RankTable,
        ia: &Invariants,
        b: &RankTable,
        ib: &Invariants,
        image: &mut [u64],
        used: &mut u64,
    ) -> bool {
        let m = ia.m;
        if pos == m {
            return true;
        }
        for j in 0..m {
            if *used >> j & 1 == 1 || ia.signatures[pos] != ib.signatures[j] {
                continue;
            }
            let base = 1usize << pos;
            let ok = (0..base).all(|t| {
                let img = image[t] | 1 << j;
                image[t | base] = img;
                a.rank((t | base) as u64) == b.rank(img)
            });
            if ok {
                *used |= 1 << j;
                if go(pos + 1, a, ia, b, ib, image, used) {
                    return true;
                }
                *used &= !(1 << j);
            }
        }
        false
    }
    go(0, a, ia, b, ib, &mut image, &mut used)
}

/// Exhaustive isomorphism test by backtracking over element assignments,
/// pruned by hyperplane sizes and per-element circuit counts.
pub fn is_isomorphic<A: RankOracle + ?Sized, B: RankOracle + ?Sized>(a: &A, b: &B) -> Result<bool> {
    let ta = RankTable::from_oracle(a)?;
    let tb = RankTable::from_oracle(b)?;
    let (ia, ib) = (Invariants::of(&ta), Invariants::of(&tb));
    Ok(isomorphic_tables(&ta, &ia, &tb, &ib))
}

/// Whether some `M / C \ D` is isomorphic to `target`. Every minor arises
/// with `C` independent and `D` coindependent, so only those are tried.
pub fn has_minor<A: RankOracle + ?Sized, B: RankOracle + ?Sized>(
    m: &A,
    target: &B,
) -> Result<bool> {
    let tm = RankTable::from_oracle(m)?;
    let tt = RankTable::from_oracle(target)?;
    let it = Invariants::of(&tt);
    let (big, small) = (tm.ground_size(), tt.ground_size());
    let (rm, rt) = (tm.full_rank(), tt.full_rank());
    if small > big || rt > rm || rm - rt > big - small {
        return Ok(false);
    }
    let k = rm - rt;
    let dsize = big - small - k;
    let full = tm.full_mask();
    let contracts: Vec<u64> = bits::k_subsets(big, k)
        .filter(|&c| tm.is_independent(c))
        .collect();
    Ok(contracts.par_iter().any(|&c| {
        let rest = full & !c;
        let rest_idx: Vec<usize> = bits::elements(rest).collect();
        bits::k_subsets(rest_idx.len(), dsize).any(|dl| {
            let d = bits::elements(dl).fold(0u64, |acc, i| acc | 1 << rest_idx[i]);
            if tm.rank(full & !d) != rm {
                return false;
            }
            let mt = minor(&tm, d, c).expect("disjoint by construction");
            let im = Invariants::of(&mt);
            isomorphic_tables(&mt, &im, &tt, &it)
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{Hypergraph, Uniform, VHMatroid};

    fn vh(n: usize, d: usize, edges: &[&[usize]]) -> VHMatroid {
        let e: Vec<Vec<usize>> = edges.iter().map(|e| e.to_vec()).collect();
        VHMatroid::new(Hypergraph::new(n, d, &e).unwrap()).unwrap()
    }

    #[test]
    fn contracting_uniform() {
        let u = Uniform { r: 4, m: 8 };
        let m = minor(&u, 0, 0b11).unwrap();
        let want = Uniform { r: 2, m: 6 };
        assert!(bits::all_subsets(6).all(|s| m.rank(s) == want.rank(s)));
        assert!(minor(&u, 1, 1).is_err());
    }

    #[test]
    fn vamos_relabelings_are_isomorphic() {
        let a = vh(4, 2, &[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]]);
        let b = vh(4, 2, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[3, 4]]);
        assert!(is_isomorphic(&a, &b).unwrap());
        let c = vh(4, 2, &[&[1, 2], &[1, 3], &[2, 3], &[2, 4]]);
        assert!(!is_isomorphic(&a, &c).unwrap());
        assert!(has_minor(&a, &a).unwrap());
    }

    #[test]
    fn deleting_an_isolated_pair() {
        let a = vh(4, 2, &[&[1, 2], &[2, 3], &[3, 4]]);
        let big = VHMatroid::new(a.hypergraph().with_isolated(1).unwrap()).unwrap();
        // vertex 5 is element 4 and 5' is element 9
        let m = minor(&big, 1 << 4 | 1 << 9, 0).unwrap();
        assert!(is_isomorphic(&m, &a).unwrap());
    }
}
