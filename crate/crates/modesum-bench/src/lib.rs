//! Shared fixtures for the kernel benchmarks.

use modesum::{CutoffLambda, Geometry, MaterialParams, QuadratureConfig, Temperature};

pub const LAMBDA_P: f64 = 2.0 * std::f64::consts::PI;

/// Gold-like mirrors: gamma / omega_p = 1e-3.
pub fn gold_like() -> MaterialParams {
    MaterialParams::drude(1.0, 1e-3).expect("valid material")
}

pub fn geometry(l_over_lambda_p: f64) -> Geometry {
    Geometry::new(l_over_lambda_p * LAMBDA_P).expect("valid separation")
}

pub fn cutoff() -> CutoffLambda {
    CutoffLambda::new(0.01).expect("valid cutoff")
}

pub fn classical_temperature(geometry: Geometry) -> Temperature {
    Temperature::new(5.0 / geometry.l).expect("valid temperature")
}

pub fn quad() -> QuadratureConfig {
    QuadratureConfig::default()
}
