use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cd::{Algebra, CDElement};
use super::h3::H3Element;
use crate::matroid::{subset_from_one_based, RankOracle, RankTable, EXHAUSTIVE_CAP};
use crate::poly::json::parse_rational;
use crate::{bits, Error, Rational, Result};

/// `v v* / |v|^2` after right-multiplying `v` by the conjugate of its last
/// nonzero coordinate, which makes that coordinate real and positive.
///
/// Over R, C and H the rescaling leaves the projection unchanged. Over O it
/// keeps the entries inside an associative subalgebra; the result is still
/// tested for idempotency.
pub fn rank_one_from_vector(v: &[CDElement; 3]) -> Result<H3Element> {
    let alg = v[0].algebra();
    if v.iter().any(|c| c.algebra() != alg) {
        return Err(Error::input("vector coordinates from different algebras"));
    }
    let Some(last) = v.iter().rev().find(|c| !c.is_zero()) else {
        return Err(Error::input("the zero vector spans no point"));
    };
    let u = last.conj();
    let w: [CDElement; 3] = std::array::from_fn(|i| &v[i] * &u);
    let total: Rational = w.iter().map(CDElement::norm).sum();
    let inv = total.recip();
    let p = H3Element::new(
        std::array::from_fn(|i| w[i].norm() * &inv),
        [(0, 1), (0, 2), (1, 2)].map(|(i, j)| (&w[i] * &w[j].conj()).scale(&inv)),
    )?;
    if !p.is_idempotent() || p.jrank() != 1 {
        return Err(Error::input(
            "v v* is not a rank-one idempotent; renormalize v so its entries lie in an associative subalgebra",
        ));
    }
    Ok(p)
}

#[derive(Debug, Deserialize)]
struct PointSetJson {
    algebra: String,
    points: Vec<Vec<Vec<String>>>,
}

/// Points of a projective plane over a composition algebra, each given by a
/// homogeneous coordinate vector in `K^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    pub algebra: Algebra,
    pub vectors: Vec<[CDElement; 3]>,
}

impl PointSet {
    pub fn new(algebra: Algebra, vectors: Vec<[CDElement; 3]>) -> Result<Self> {
        if vectors.iter().flatten().any(|c| c.algebra() != algebra) {
            return Err(Error::input(format!("coordinates outside {algebra}")));
        }
        Ok(PointSet { algebra, vectors })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PointSetJson =
            serde_json::from_str(s).map_err(|e| Error::input(format!("point set JSON: {e}")))?;
        let algebra: Algebra = j.algebra.parse()?;
        let vectors = j
            .points
            .iter()
            .enumerate()
            .map(|(k, p)| -> Result<[CDElement; 3]> {
                if p.len() != 3 {
                    return Err(Error::input(format!("point {} needs 3 coordinates", k + 1)));
                }
                let coords: Vec<CDElement> = p
                    .iter()
                    .map(|c| {
                        let r: Vec<Rational> =
                            c.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
                        if r.len() != algebra.dim() {
                            return Err(Error::input(format!(
                                "point {}: {} coordinates for an element of {algebra}",
                                k + 1,
                                r.len()
                            )));
                        }
                        CDElement::new(r)
                    })
                    .collect::<Result<_>>()?;
                Ok([coords[0].clone(), coords[1].clone(), coords[2].clone()])
            })
            .collect::<Result<_>>()?;
        PointSet::new(algebra, vectors)
    }

    pub fn to_json(&self) -> String {
        let points: Vec<Vec<Vec<String>>> = self
            .vectors
            .iter()
            .map(|v| {
                v.iter()
                    .map(|c| c.coords().iter().map(|q| q.to_string()).collect())
                    .collect()
            })
            .collect();
        serde_json::json!({ "algebra": self.algebra.to_string(), "points": points }).to_string()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Image of every coordinate in a smaller algebra, e.g. quaternions cut
    /// down to their complex parts.
    pub fn truncate(&self, alg: Algebra) -> Result<PointSet> {
        let vectors = self
            .vectors
            .iter()
            .map(|v| -> Result<[CDElement; 3]> {
                Ok([
                    v[0].truncate(alg)?,
                    v[1].truncate(alg)?,
                    v[2].truncate(alg)?,
                ])
            })
            .collect::<Result<_>>()?;
        Ok(PointSet {
            algebra: alg,
            vectors,
        })
    }

    pub fn projections(&self) -> Result<Vec<H3Element>> {
        let mut bad = Vec::new();
        let mut out = Vec::with_capacity(self.len());
        for (k, v) in self.vectors.iter().enumerate() {
            match rank_one_from_vector(v) {
                Ok(p) => out.push(p),
                Err(e) => bad.push(format!("point {}: {e}", k + 1)),
            }
        }
        if !bad.is_empty() {
            return Err(Error::input(bad.join("; ")));
        }
        Ok(out)
    }
}

/// `r(S) = rank(Σ_{i in S} P_i)` for rank-one idempotents `P_i`.
#[derive(Clone, Debug)]
pub struct JordanMatroid {
    points: Vec<H3Element>,
}

impl JordanMatroid {
    pub fn points(&self) -> &[H3Element] {
        &self.points
    }
}

impl RankOracle for JordanMatroid {
    fn ground_size(&self) -> usize {
        self.points.len()
    }

    fn rank(&self, s: u64) -> usize {
        let alg = self.points.first().map_or(Algebra::R, H3Element::algebra);
        bits::elements(s)
            .fold(H3Element::zero(alg), |acc, i| {
                acc.try_add(&self.points[i]).expect("one algebra")
            })
            .jrank()
    }
}

/// Checks every point is a rank-one idempotent; offenders are listed 1-based.
pub fn matroid_from_points(points: Vec<H3Element>) -> Result<JordanMatroid> {
    if let Some(first) = points.first() {
        if points.iter().any(|p| p.algebra() != first.algebra()) {
            return Err(Error::input("points from different algebras"));
        }
    }
    let bad: Vec<String> = points
        .iter()
        .enumerate()
        .filter(|(_, p)| !(p.is_idempotent() && p.jrank() == 1))
        .map(|(k, _)| (k + 1).to_string())
        .collect();
    if !bad.is_empty() {
        return Err(Error::input(format!(
            "not rank-one idempotents: points {}",
            bad.join(", ")
        )));
    }
    Ok(JordanMatroid { points })
}

/// A matroid given by its rank and non-bases, 1-based in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetMatroid {
    pub ground: usize,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub nonbases: Vec<Vec<usize>>,
}

impl TargetMatroid {
    pub fn from_json(s: &str) -> Result<Self> {
        let t: TargetMatroid =
            serde_json::from_str(s).map_err(|e| Error::input(format!("matroid JSON: {e}")))?;
        if t.ground > EXHAUSTIVE_CAP {
            return Err(Error::input(format!(
                "ground set larger than {EXHAUSTIVE_CAP}"
            )));
        }
        for nb in &t.nonbases {
            if nb.len() != t.rank {
                return Err(Error::input(format!(
                    "non-basis {nb:?} does not have {} elements",
                    t.rank
                )));
            }
        }
        Ok(t)
    }

    pub fn nonbasis_masks(&self) -> Result<Vec<u64>> {
        self.nonbases
            .iter()
            .map(|nb| subset_from_one_based(nb, self.ground))
            .collect()
    }

    pub fn rank_table(&self) -> Result<RankTable> {
        RankTable::from_nonbases(self.ground, self.rank, &self.nonbasis_masks()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankMismatch {
    pub set: Vec<usize>,
    pub expected: usize,
    pub found: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentationCheck {
    pub algebra: Algebra,
    pub subsets_checked: usize,
    pub represents: bool,
    pub mismatches: Vec<RankMismatch>,
}

/// Compares the Jordan rank of every subset of points with the target.
pub fn verify_representation(
    points: &PointSet,
    target: &TargetMatroid,
) -> Result<RepresentationCheck> {
    if points.len() != target.ground {
        return Err(Error::input(format!(
            "{} points for a ground set of {}",
            points.len(),
            target.ground
        )));
    }
    let m = matroid_from_points(points.projections()?)?;
    let t = target.rank_table()?;
    let mut mismatches: Vec<RankMismatch> = bits::all_subsets(target.ground)
        .into_par_iter()
        .filter_map(|s| {
            let (expected, found) = (t.rank(s), m.rank(s));
            (expected != found).then(|| RankMismatch {
                set: bits::to_one_based(s),
                expected,
                found,
            })
        })
        .collect();
    mismatches.sort_by(|a, b| {
        a.set
            .len()
            .cmp(&b.set.len())
            .then_with(|| a.set.cmp(&b.set))
    });
    Ok(RepresentationCheck {
        algebra: points.algebra,
        subsets_checked: 1 << target.ground,
        represents: mismatches.is_empty(),
        mismatches,
    })
}
