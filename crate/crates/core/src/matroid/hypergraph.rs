use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};

/// A `d`-uniform edge family on the vertices `1..=n` (stored 0-based as masks).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    d: usize,
    edges: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub d: usize,
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Edges use 1-based vertex labels.
    pub fn new(n: usize, d: usize, edges: &[Vec<usize>]) -> Result<Self> {
        if d == 0 || d > n {
            return Err(Error::input(format!(
                "need 1 <= d <= n, got d = {d}, n = {n}"
            )));
        }
        if n > 31 {
            return Err(Error::input("at most 31 vertices are supported"));
        }
        let mut masks = Vec::with_capacity(edges.len());
        for e in edges {
            if e.iter().any(|&v| v == 0 || v > n) {
                return Err(Error::input(format!(
                    "edge {e:?} has a vertex outside 1..={n}"
                )));
            }
            let m = bits::from_indices(e.iter().map(|v| v - 1));
            if bits::size(m) != d || e.len() != d {
                return Err(Error::input(format!(
                    "edge {e:?} does not have {d} distinct vertices"
                )));
            }
            masks.push(m);
        }
        Self::from_masks(n, d, masks)
    }

    pub fn from_masks(n: usize, d: usize, mut masks: Vec<u64>) -> Result<Self> {
        masks.sort_unstable();
        if masks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("repeated edge"));
        }
        Ok(Hypergraph { n, d, edges: masks })
    }

    pub fn complete(n: usize, d: usize) -> Result<Self> {
        Self::from_masks(n, d, bits::k_subsets(n, d).collect())
    }

    pub fn empty(n: usize, d: usize) -> Result<Self> {
        Self::from_masks(n, d, Vec::new())
    }

    /// Each `d`-subset is an edge independently with probability `p`.
    pub fn random<R: Rng>(n: usize, d: usize, p: f64, rng: &mut R) -> Result<Self> {
        let edges = bits::k_subsets(n, d).filter(|_| rng.gen_bool(p)).collect();
        Self::from_masks(n, d, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Edge masks over `0..n`, ascending.
    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    pub fn is_edge(&self, mask: u64) -> bool {
        self.edges.binary_search(&mask).is_ok()
    }

    /// The `d`-subsets that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = u64> + '_ {
        bits::k_subsets(self.n, self.d).filter(|m| !self.is_edge(*m))
    }

    /// The same edges on `n + extra` vertices.
    pub fn with_isolated(&self, extra: usize) -> Result<Self> {
        Self::from_masks(self.n + extra, self.d, self.edges.clone())
    }

    pub fn to_json_value(&self) -> HypergraphJson {
        HypergraphJson {
            n: self.n,
            d: self.d,
            edges: self.edges.iter().map(|&m| bits::to_one_based(m)).collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: HypergraphJson =
            serde_json::from_str(s).map_err(|e| Error::input(format!("hypergraph JSON: {e}")))?;
        Self::new(j.n, j.d, &j.edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("hypergraph serialization")
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Hypergraph::new(4, 2, &[vec![1, 2], vec![2, 5]]).is_err());
        assert!(Hypergraph::new(4, 2, &[vec![1, 1]]).is_err());
        assert!(Hypergraph::new(4, 2, &[vec![1, 2, 3]]).is_err());
        assert!(Hypergraph::new(4, 2, &[vec![1, 2], vec![2, 1]]).is_err());
        assert!(Hypergraph::new(2, 3, &[]).is_err());
    }

    #[test]
    fn json_round_trip_sorts_edges() {
        let h = Hypergraph::from_json(r#"{"n":4,"d":2,"edges":[[3,4],[1,2]]}"#).unwrap();
        assert_eq!(h.to_json(), r#"{"n":4,"d":2,"edges":[[1,2],[3,4]]}"#);
        assert_eq!(h.non_edges().count(), 4);
    }
}
