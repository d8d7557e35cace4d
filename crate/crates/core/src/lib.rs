//! Exact predegree polynomials and orbit-closure degrees of plane curves.
//!
//! A curve is described by a [`CurveDescriptor`]: its degree, components and
//! special points. [`assemble`] turns it into an [`OrbitReport`] carrying the
//! adjusted predegree polynomial (a.p.p.) in `Q[H]/(H^9)`, the orbit
//! dimension, the predegree and, given the stabilizer degree, the degree of
//! the orbit closure.
//!
//! ```
//! use orbitdeg::{assemble, CurveDescriptor, FlexCount};
//!
//! let quartic = CurveDescriptor::irreducible(4).with_flexes(FlexCount::Auto);
//! let report = assemble(&quartic).unwrap();
//! assert_eq!(report.orbit_dimension, 8);
//! assert_eq!(report.predegree.to_string(), "14280");
//! ```

pub mod cli;
pub mod corpus;
pub mod corrections;
pub mod engine;
pub mod error;
pub mod local;
pub mod model;
pub mod series;

pub use corrections::{Correction, CorrectionKind, ErratumPolicy};
pub use engine::{assemble, assemble_with, predegree_direct, scale, union, OrbitReport};
pub use error::{Error, Result};
pub use model::{CurveDescriptor, FlexCount, IrreducibleSingularity, NewtonSide, PointFeature, TruncationSpec};
pub use series::{KJet2, Rational, TruncSeries};
