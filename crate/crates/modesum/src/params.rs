//! Unit conventions, material models and the shared domain types.
//!
//! Internal unit system: `hbar = c = 1` and all frequencies are measured in
//! units of the plasma frequency `omega_p`. A length is therefore measured
//! in units of `c / omega_p`, the plasma wavelength is `lambda_p = 2*pi`
//! (times `c / omega_p`), and an energy per unit area is measured in units
//! of `hbar * omega_p^3 / c^2`. SI values enter and leave only through the
//! conversion helpers at the bottom of this module.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Absolute tolerance (in units of `omega_p`) below which the real part of a
/// mode frequency is treated as exactly zero.
pub const IM_AXIS_TOL: f64 = 1e-14;

/// Dielectric response model of the mirror material.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaterialModel {
    /// Drude metal with a finite damping rate.
    Drude,
    /// Lossless plasma model (`gamma = 0` exactly).
    Plasma,
}

/// Drude/plasma description of the mirrors.
///
/// `omega_p` is normally 1 (it is the internal frequency unit); it is kept
/// explicit so that formulas stay dimensionally honest.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialParams {
    /// Plasma angular frequency (internal unit, normally 1).
    pub omega_p: f64,
    /// Damping rate in units of `omega_p`.
    pub gamma: f64,
    /// Response model; `Plasma` forces `gamma = 0`.
    pub model: MaterialModel,
}

impl MaterialParams {
    /// Drude metal with damping rate `gamma >= 0`.
    pub fn drude(omega_p: f64, gamma: f64) -> Result<Self> {
        if !(omega_p > 0.0) || !omega_p.is_finite() {
            return Err(Error::domain(format!("omega_p must be positive, got {omega_p}")));
        }
        if !(gamma >= 0.0) || !gamma.is_finite() {
            return Err(Error::domain(format!("gamma must be non-negative, got {gamma}")));
        }
        Ok(Self { omega_p, gamma, model: MaterialModel::Drude })
    }

    /// Lossless plasma model (`gamma = 0`).
    pub fn plasma(omega_p: f64) -> Result<Self> {
        if !(omega_p > 0.0) || !omega_p.is_finite() {
            return Err(Error::domain(format!("omega_p must be positive, got {omega_p}")));
        }
        Ok(Self { omega_p, gamma: 0.0, model: MaterialModel::Plasma })
    }

    /// Plasma wavelength `2*pi*c/omega_p` in internal length units.
    pub fn lambda_p(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.omega_p
    }

    /// True when the material supports the eddy-current continuum.
    pub fn is_dissipative(&self) -> bool {
        self.gamma > 0.0
    }
}

/// Mirror separation, in units of `c / omega_p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    /// Separation `L > 0`.
    pub l: f64,
}

impl Geometry {
    pub fn new(l: f64) -> Result<Self> {
        if !(l > 0.0) || !l.is_finite() {
            return Err(Error::domain(format!("separation L must be positive, got {l}")));
        }
        Ok(Self { l })
    }
}

/// Bath cutoff frequency `Lambda`, in units of `omega_p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffLambda {
    /// Cutoff `Lambda > 0`.
    pub lambda_cut: f64,
}

impl CutoffLambda {
    pub fn new(lambda_cut: f64) -> Result<Self> {
        if !(lambda_cut > 0.0) || !lambda_cut.is_finite() {
            return Err(Error::domain(format!("cutoff Lambda must be positive, got {lambda_cut}")));
        }
        Ok(Self { lambda_cut })
    }
}

/// Temperature as `k_B T` in units of `hbar * omega_p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Temperature {
    /// `k_B T / (hbar omega_p) >= 0`.
    pub t: f64,
}

impl Temperature {
    pub fn new(t: f64) -> Result<Self> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::domain(format!("temperature must be non-negative, got {t}")));
        }
        Ok(Self { t })
    }
}

/// A mode eigenfrequency in the closed lower half of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexFrequency {
    /// Frequency in units of `omega_p`; `Im <= 0` (modes decay).
    pub value: Complex64,
    /// Set iff `|Re| <= IM_AXIS_TOL`; such modes carry the 1/2 weight in
    /// mode sums.
    pub purely_imaginary: bool,
}

impl ComplexFrequency {
    pub fn new(value: Complex64) -> Result<Self> {
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::domain("mode frequency must be finite".to_string()));
        }
        if value.im > 0.0 {
            return Err(Error::domain(format!(
                "mode frequency must decay (Im <= 0), got {value}"
            )));
        }
        Ok(Self { value, purely_imaginary: value.re.abs() <= IM_AXIS_TOL })
    }

    /// Purely imaginary mode `-i xi` with decay rate `xi >= 0`.
    pub fn imaginary(xi: f64) -> Result<Self> {
        if !(xi >= 0.0) || !xi.is_finite() {
            return Err(Error::domain(format!("decay rate must be non-negative, got {xi}")));
        }
        Ok(Self { value: Complex64::new(0.0, -xi), purely_imaginary: true })
    }

    /// Mode-sum weight: 1/2 for purely imaginary eigenfrequencies, else 1.
    pub fn weight(&self) -> f64 {
        if self.purely_imaginary {
            0.5
        } else {
            1.0
        }
    }
}

/// A computed energy (per unit area) together with the relative tolerance
/// actually achieved by the quadrature behind it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyEstimate {
    /// Energy per unit area in units of `hbar * omega_p^3 / c^2`.
    pub value: f64,
    /// Achieved relative tolerance (error estimate / |value|).
    pub achieved_rel_tol: f64,
}

impl EnergyEstimate {
    pub(crate) fn new(value: f64, abs_error: f64) -> Self {
        let achieved_rel_tol = if value != 0.0 { (abs_error / value).abs() } else { abs_error };
        Self { value, achieved_rel_tol }
    }
}

/// Casimir energy per unit area between two perfect mirrors,
/// `-pi^2 / (720 L^3)` in natural units.
pub fn ideal_casimir_energy_per_area(geometry: Geometry) -> f64 {
    let l = geometry.l;
    -std::f64::consts::PI.powi(2) / (720.0 * l * l * l)
}

/// Reduction factor `eta = e / ideal`; 1 for a perfect-mirror total.
pub fn reduction_factor(e: f64, geometry: Geometry) -> f64 {
    e / ideal_casimir_energy_per_area(geometry)
}

// ---------------------------------------------------------------------------
// SI boundary
// ---------------------------------------------------------------------------

/// Speed of light, m/s.
pub const C_SI: f64 = 299_792_458.0;
/// Reduced Planck constant, J s.
pub const HBAR_SI: f64 = 1.054_571_817e-34;
/// Boltzmann constant, J/K.
pub const KB_SI: f64 = 1.380_649e-23;
/// Electronvolt, J.
pub const EV_SI: f64 = 1.602_176_634e-19;

/// Length in meters -> internal units of `c / omega_p`.
pub fn length_to_internal(l_m: f64, omega_p_rad_s: f64) -> f64 {
    l_m * omega_p_rad_s / C_SI
}

/// Internal length -> meters.
pub fn length_to_si(l: f64, omega_p_rad_s: f64) -> f64 {
    l * C_SI / omega_p_rad_s
}

/// Angular frequency in rad/s -> units of `omega_p`.
pub fn frequency_to_internal(omega_rad_s: f64, omega_p_rad_s: f64) -> f64 {
    omega_rad_s / omega_p_rad_s
}

/// Internal frequency -> rad/s.
pub fn frequency_to_si(omega: f64, omega_p_rad_s: f64) -> f64 {
    omega * omega_p_rad_s
}

/// Photon energy in eV -> angular frequency in rad/s.
pub fn ev_to_rad_s(e_ev: f64) -> f64 {
    e_ev * EV_SI / HBAR_SI
}

/// Temperature in kelvin -> internal `k_B T / (hbar omega_p)`.
pub fn temperature_to_internal(t_k: f64, omega_p_rad_s: f64) -> f64 {
    KB_SI * t_k / (HBAR_SI * omega_p_rad_s)
}

/// Internal temperature -> kelvin.
pub fn temperature_to_si(t: f64, omega_p_rad_s: f64) -> f64 {
    t * HBAR_SI * omega_p_rad_s / KB_SI
}

/// Internal energy per unit area -> J/m^2.
pub fn energy_per_area_to_si(e: f64, omega_p_rad_s: f64) -> f64 {
    e * HBAR_SI * omega_p_rad_s.powi(3) / (C_SI * C_SI)
}
