//! Beurling-Fourier algebras on compact groups, computed exactly at desk scale.
//!
//! * [`dual`]: duals of compact groups as fusion rings (finite character
//!   tables, the circle, SU(2) and finite products).
//! * [`weights`]: central weights, their validity checks, symmetrisation,
//!   products and restrictions to subgroups.
//! * [`fourier`]: matrix models of finite groups, the Fourier transform and
//!   the A(G,ω), A_Δ(G,Ω) and A_{γⁿ} norms.
//! * [`diagnostics`]: operator amenability constants, boundedness of Ω,
//!   Θ-operator scans for Arens regularity and point-derivation obstructions.
//! * [`line`]: scalar central weights on ℝ (duals of Heisenberg groups).
//!
//! The numeric modules are generic over [`Real`]; the aliases below fix the
//! scalar to `f64`, which is what the tolerances are sized for.

pub mod diagnostics;
pub mod dual;
mod error;
pub mod fourier;
pub mod line;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod weights;

pub use dual::{CharacterTable, DualTable, FusionVector, IrrepLabel, Truncation};
pub use error::{Error, Result};
pub use scalar::Real;
pub use weights::WeightDescriptor;

pub type Weight = weights::Weight<f64>;
pub type ViolationReport = weights::ViolationReport<f64>;
pub type MatrixModel = fourier::MatrixModel<f64>;
pub type GroupFunction = fourier::GroupFunction<f64>;
pub type FourierCoefficients = fourier::FourierCoefficients<f64>;
pub type CMatrix = linalg::CMatrix<f64>;
pub type ThetaEntry = diagnostics::ThetaEntry<f64>;
pub type ScanReport = diagnostics::ScanReport<f64>;
pub type ObstructionSequence = diagnostics::ObstructionSequence<f64>;
pub type ProductAmenability = diagnostics::ProductAmenability<f64>;
pub type Classification = diagnostics::Classification<f64>;
pub type LineWeight = line::LineWeight<f64>;
pub type LineViolationReport = line::LineViolationReport<f64>;
