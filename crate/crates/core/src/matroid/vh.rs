use std::collections::HashSet;

use super::{Hypergraph, RankOracle, RankTable};
use crate::bits;
use crate::error::{Error, Result};

/// The sparse paving matroid of rank `2d` on `{1, 1', ..., n, n'}` whose
/// non-bases are the sets `e ∪ e'` for edges `e`.
#[derive(Clone, Debug)]
pub struct VHMatroid {
    h: Hypergraph,
    circuit_hyperplanes: HashSet<u64>,
}

impl VHMatroid {
    pub fn new(h: Hypergraph) -> Result<Self> {
        if 2 * h.n() > 63 {
            return Err(Error::input("ground set too large"));
        }
        if h.d() == h.n() && !h.edges().is_empty() {
            return Err(Error::input(
                "with d = n the single edge removes the only basis",
            ));
        }
        let n = h.n();
        let circuit_hyperplanes = h.edges().iter().map(|&e| e | (e << n)).collect();
        Ok(VHMatroid {
            h,
            circuit_hyperplanes,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    /// `S ∪ S'` for a vertex set `S`.
    pub fn paired(&self, vertices: u64) -> u64 {
        vertices | (vertices << self.n())
    }

    /// The sets `e ∪ e'`, ascending.
    pub fn nonbases(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.circuit_hyperplanes.iter().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn is_basis(&self, s: u64) -> bool {
        bits::size(s) == 2 * self.h.d() && !self.circuit_hyperplanes.contains(&s)
    }

    /// Bases by enumeration of all `2d`-subsets.
    pub fn bases(&self) -> Vec<u64> {
        bits::k_subsets(2 * self.n(), 2 * self.h.d())
            .filter(|&s| !self.circuit_hyperplanes.contains(&s))
            .collect()
    }

    /// Rank table by maximizing `|S ∩ B|` over bases, independent of the
    /// closed form.
    pub fn brute_force_table(&self) -> Result<RankTable> {
        RankTable::from_bases(2 * self.n(), &self.bases())
    }
}

impl RankOracle for VHMatroid {
    fn ground_size(&self) -> usize {
        2 * self.h.n()
    }

    fn rank(&self, s: u64) -> usize {
        let k = bits::size(s);
        let r = 2 * self.h.d();
        match k.cmp(&r) {
            std::cmp::Ordering::Less => k,
            std::cmp::Ordering::Equal if self.circuit_hyperplanes.contains(&s) => r - 1,
            _ => r,
        }
    }
}

/// `r0(S) = r(S ∪ S')` on the vertex set `1..=n`.
pub fn diagonal_polymatroid(m: &VHMatroid) -> Result<RankTable> {
    RankTable::from_fn(m.n(), |s| m.rank(m.paired(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{enumerate, Family, Uniform};

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
    fn diamond_counts() {
        let m = diamond();
        assert_eq!(m.bases().len(), 65);
        // {1,1',2,2'} with {1,2} an edge
        assert_eq!(m.rank(0b0011_0011), 3);
        assert_eq!(m.rank(0), 0);
        assert!(bits::k_subsets(8, 7).all(|s| m.rank(s) == 4));
    }

    #[test]
    fn full_edge_without_bases_is_rejected() {
        let h = Hypergraph::new(3, 3, &[vec![1, 2, 3]]).unwrap();
        assert!(VHMatroid::new(h).is_err());
        assert!(VHMatroid::new(Hypergraph::empty(3, 3).unwrap()).is_ok());
    }

    #[test]
    fn empty_graph_is_uniform() {
        let m = VHMatroid::new(Hypergraph::empty(5, 2).unwrap()).unwrap();
        let u = Uniform { r: 4, m: 10 };
        assert!(bits::all_subsets(10).all(|s| m.rank(s) == u.rank(s)));
    }

    #[test]
    fn complete_three_uniform_on_six() {
        let m = VHMatroid::new(Hypergraph::complete(6, 3).unwrap()).unwrap();
        assert_eq!(m.bases().len(), 904);
    }

    #[test]
    fn closed_form_matches_brute_force_on_diamond() {
        let m = diamond();
        let t = m.brute_force_table().unwrap();
        assert!(bits::all_subsets(8).all(|s| m.rank(s) == t.rank(s)));
    }

    #[test]
    fn diamond_hyperplanes() {
        let m = diamond();
        let hyp = enumerate(&m, Family::Hyperplanes).unwrap();
        let big: Vec<u64> = hyp
            .iter()
            .copied()
            .filter(|&s| bits::size(s) == 4)
            .collect();
        assert_eq!(big, m.nonbases());
        let small = hyp.iter().filter(|&&s| bits::size(s) == 3).count();
        let covered: usize = bits::k_subsets(8, 3)
            .filter(|&s| m.nonbases().iter().any(|&e| s & e == s))
            .count();
        assert_eq!(small, 56 - covered);
        assert_eq!(hyp.len(), 5 + small);
    }

    #[test]
    fn diagonal_ranks() {
        let m = diamond();
        let r0 = diagonal_polymatroid(&m).unwrap();
        assert_eq!(r0.rank(0), 0);
        assert_eq!(r0.rank(0b0001), 2);
        assert_eq!(r0.rank(0b0011), 3);
        assert_eq!(r0.rank(0b1001), 4);
        assert_eq!(r0.rank(0b1111), 4);
    }
}
