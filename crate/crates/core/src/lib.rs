//! Probability amplitudes, operators and sequential-measurement simulation for
//! spin-1/2 systems measured along arbitrary axes.
//!
//! The crate is layered bottom-up:
//!
//! - [`linalg2`]: complex 2-vectors and 2×2 matrices, closed-form Hermitian eigensystems
//! - [`geometry`]: quantization axes as polar angles
//! - [`amplitudes`]: transition amplitudes, probabilities and the composition law
//! - [`operators`]: generalized spin operators and their eigenvectors
//! - [`representation`]: state vectors and expectation values per reference-axis case
//! - [`simulator`]: seeded Monte-Carlo of measurement chains
//! - [`verify`]: the identity checks, run as one report

pub mod amplitudes;
pub mod error;
pub mod geometry;
pub mod linalg2;
pub mod operators;
pub mod representation;
pub mod rng;
pub mod simulator;
pub mod tolerance;
pub mod verify;

pub use amplitudes::{chi, compose, probability, Amplitude, Outcome, SpinContext};
pub use error::LandeError;
pub use geometry::Direction;
pub use linalg2::{Complex, EigenPair, Mat2, Vec2};
pub use operators::ObservableSpec;
pub use representation::{CaseSelector, Eigenvalues, MeasurementSetup};
pub use simulator::{ChainResult, ChainSpec};
pub use verify::CheckReport;
