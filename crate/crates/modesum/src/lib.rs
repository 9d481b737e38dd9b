//! Mode-resolved Casimir interaction between two planar metallic mirrors.
//!
//! The Casimir energy of a lossy (Drude) mirror pair can be organised as a
//! sum over complex mode frequencies instead of the usual imaginary-frequency
//! Lifshitz integral. This crate evaluates the two mode classes that carry
//! the interesting physics, and the Lifshitz baseline they must add up to:
//!
//! * [`plasmon`] — coupled surface-plasmon branches in the quasi-static
//!   limit, with damping, including the short-distance asymptotics.
//! * [`eddy`] — the overdamped eddy-current (Foucault) continuum living on
//!   the branch cut of the medium wavenumber along the negative imaginary
//!   frequency axis; repulsive at zero temperature, and cancelling the
//!   plasma-model TE free energy at high temperature.
//! * [`lifshitz`] — imaginary-frequency totals (zero-temperature integral
//!   and Matsubara sum) used as the independent baseline.
//!
//! Everything is computed in natural units `hbar = c = 1` with the plasma
//! frequency as the frequency scale; see [`params`] for the conversions.

pub mod eddy;
pub mod error;
pub mod lifshitz;
pub mod params;
pub mod plasmon;
pub mod quad;
pub mod reflection;

pub use error::{Error, Result};
pub use params::{
    ComplexFrequency, CutoffLambda, EnergyEstimate, Geometry, MaterialModel, MaterialParams,
    Temperature,
};
pub use quad::{Domain, IntegralEstimate, QuadratureConfig, TailTransform};
pub use reflection::{EvaluationPoint, Polarization, Side};
