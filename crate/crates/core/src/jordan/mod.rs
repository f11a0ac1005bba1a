//! Rank-3 Euclidean Jordan algebras `H_3(K)` over the composition algebras
//! and matroids of rank-one idempotents in them.

mod cd;
mod h3;
mod points;

pub use cd::{Algebra, CDElement};
pub use h3::{frame_verify, Freudenthal, H3Element, SpectralData};
pub use points::{
    matroid_from_points, rank_one_from_vector, verify_representation, JordanMatroid, PointSet,
    RankMismatch, RepresentationCheck, TargetMatroid,
};
