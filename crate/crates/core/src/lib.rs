//! Exact verification library for curvature invariants of Kähler-Einstein
//! model spaces: polynomial integration over spheres, partition and
//! power-sum combinatorics, curvature-moment identities, pointwise Chern
//! densities via brute-force exterior algebra, pinching and Chern-number
//! criteria with exact radical comparison, and branched-cover Chern numbers.
//!
//! All arithmetic is exact: rationals are arbitrary precision, pi is carried
//! symbolically, and radicals are compared by powering, never by rounding.

pub mod chern;
pub mod covers;
pub mod criteria;
pub mod curvature;
pub mod decimal;
pub mod error;
pub mod partitions;
pub mod pi;
pub mod polysphere;
pub mod radical;
pub mod scalar;
pub mod suite;
pub mod verdict;

pub use chern::DensityReport;
pub use covers::{BranchDatum, CoverNumbers, GradedClass};
pub use criteria::{EinsteinSign, ManifoldData};
pub use curvature::{EinsteinData, KahlerCurvature};
pub use error::{Error, Result};
pub use partitions::Partition;
pub use pi::PiRational;
pub use polysphere::{MultiIndex, MultiPoly};
pub use radical::RootExpr;
pub use scalar::Rational;
pub use verdict::{Scalar, Status, Verdict};
