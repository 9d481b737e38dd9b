//! Drude/plasma dielectric function and single-interface Fresnel
//! coefficients at complex frequency, with explicit branch-side control
//! next to the eddy-current cut.
//!
//! The medium wavenumber `k_m = sqrt(eps(w) w^2 - k^2)` has a branch cut on
//! the negative imaginary frequency axis wherever `k_m^2 > 0`; that segment
//! `xi in (xi_low(k), gamma)` at `w = -i xi` is the eddy-current continuum.
//! Evaluations on the two sides of the cut are complex conjugates of each
//! other. `Side::CutLeft` selects the limit from `Re(w) = -0^+`, which is
//! the side entering the mode-density integrals; it is computed exactly on
//! the axis (real arithmetic inside, conjugation at the end) rather than by
//! a small numerical offset. The offset evaluation is kept as an
//! independent cross-check oracle ([`cut_im_log_offset`]).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::{Geometry, MaterialParams};
use crate::quad;

/// Field polarization at a planar interface.
#[allow(clippy::upper_case_acronyms)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarization {
    TE,
    TM,
}

impl Polarization {
    pub const BOTH: [Polarization; 2] = [Polarization::TE, Polarization::TM];
}

impl std::fmt::Display for Polarization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Polarization::TE => write!(f, "TE"),
            Polarization::TM => write!(f, "TM"),
        }
    }
}

/// Branch-side selector for evaluations near the negative imaginary axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Plain evaluation with decaying-root conventions (`Im >= 0` for both
    /// normal wavenumbers). This is the path used on the positive
    /// imaginary (Lifshitz) axis.
    OnAxis,
    /// Limit onto the negative imaginary axis from `Re(w) = -0^+`, the side
    /// entering the eddy-current mode-density integrals.
    CutLeft,
}

/// Complex frequency, lateral wavevector and branch side for one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationPoint {
    pub omega: Complex64,
    pub k: f64,
    pub side: Side,
}

impl EvaluationPoint {
    pub fn new(omega: Complex64, k: f64, side: Side) -> Result<Self> {
        if !(k >= 0.0) || !k.is_finite() {
            return Err(Error::domain(format!("wavevector k must be non-negative, got {k}")));
        }
        if side == Side::CutLeft && !(omega.re == 0.0 && omega.im < 0.0) {
            return Err(Error::domain(format!(
                "CutLeft requires a purely imaginary frequency with Im < 0, got {omega}"
            )));
        }
        Ok(Self { omega, k, side })
    }

    /// On-axis point at `w = i xi` (positive imaginary axis).
    pub fn imaginary_axis(xi: f64, k: f64) -> Result<Self> {
        Self::new(Complex64::new(0.0, xi), k, Side::OnAxis)
    }

    /// Left-side point at `w = -i xi - 0^+` on the eddy cut axis.
    pub fn cut_left(xi: f64, k: f64) -> Result<Self> {
        if !(xi > 0.0) {
            return Err(Error::domain(format!("cut coordinate xi must be positive, got {xi}")));
        }
        Self::new(Complex64::new(0.0, -xi), k, Side::CutLeft)
    }
}

/// Principal square root flipped onto the `Im >= 0` branch (fields decay
/// away from the interface).
fn sqrt_im_nonneg(z: Complex64) -> Complex64 {
    let r = z.sqrt();
    if r.im < 0.0 {
        -r
    } else {
        r
    }
}

/// Drude permittivity `eps(w) = 1 - wp^2 / (w (w + i gamma))`; the plasma
/// model is the exact `gamma = 0` case.
pub fn epsilon(omega: Complex64, m: &MaterialParams) -> Result<Complex64> {
    let denom = omega * (omega + Complex64::new(0.0, m.gamma));
    if denom == Complex64::new(0.0, 0.0) {
        return Err(Error::singular(format!(
            "Drude permittivity pole at omega = {omega} (gamma = {})",
            m.gamma
        )));
    }
    Ok(Complex64::new(1.0, 0.0) - m.omega_p * m.omega_p / denom)
}

/// `k_m^2` on the negative imaginary axis, `w = -i xi`: a real number,
/// `-xi^2 + wp^2 xi / (gamma - xi) - k^2` for the Drude model.
pub fn medium_wavenumber_sq_on_cut(xi: f64, k: f64, m: &MaterialParams) -> f64 {
    if m.gamma == xi {
        // pole of eps at w = -i gamma: k_m^2 -> +inf
        return f64::INFINITY;
    }
    -xi * xi + m.omega_p * m.omega_p * xi / (m.gamma - xi) - k * k
}

/// Vacuum normal wavenumber `sqrt(w^2 - k^2)` on the decaying branch.
pub fn vacuum_wavenumber(omega: Complex64, k: f64) -> Complex64 {
    sqrt_im_nonneg(omega * omega - Complex64::new(k * k, 0.0))
}

/// Medium wavenumber `k_m = sqrt(eps(w) w^2 - k^2)`.
///
/// `OnAxis`: decaying branch `Im(k_m) >= 0`. `CutLeft`: evaluated exactly on
/// the axis; inside the cut (`k_m^2 > 0`) the real positive root is
/// reported, outside the imaginary decaying root.
pub fn medium_wavenumber(pt: &EvaluationPoint, m: &MaterialParams) -> Result<Complex64> {
    match pt.side {
        Side::OnAxis => {
            let eps = epsilon(pt.omega, m)?;
            Ok(sqrt_im_nonneg(eps * pt.omega * pt.omega - Complex64::new(pt.k * pt.k, 0.0)))
        }
        Side::CutLeft => {
            let xi = -pt.omega.im;
            let km2 = medium_wavenumber_sq_on_cut(xi, pt.k, m);
            if km2 > 0.0 {
                Ok(Complex64::new(km2.sqrt(), 0.0))
            } else {
                Ok(Complex64::new(0.0, (-km2).sqrt()))
            }
        }
    }
}

fn fresnel_from_roots(
    pol: Polarization,
    eps: Complex64,
    k_vac: Complex64,
    k_med: Complex64,
) -> Result<Complex64> {
    let (num, den) = match pol {
        Polarization::TE => (k_vac - k_med, k_vac + k_med),
        Polarization::TM => (eps * k_vac - k_med, eps * k_vac + k_med),
    };
    if den == Complex64::new(0.0, 0.0) {
        return Err(Error::singular(format!("vanishing Fresnel denominator ({pol})")));
    }
    Ok(num / den)
}

/// Fresnel reflection coefficient of the vacuum/medium interface.
///
/// On the positive imaginary axis the result is real with `|r| <= 1`. On
/// `CutLeft` the two sides of the eddy cut are complex conjugates; the left
/// side is the conjugate of the decaying-root evaluation, which makes
/// `Im ln[1 - r^2 e^{-2 kappa L}]` carry the sign that renders the
/// eddy-current energy repulsive.
pub fn fresnel_r(pol: Polarization, pt: &EvaluationPoint, m: &MaterialParams) -> Result<Complex64> {
    match pt.side {
        Side::OnAxis => {
            let eps = epsilon(pt.omega, m)?;
            let kv = vacuum_wavenumber(pt.omega, pt.k);
            let km = sqrt_im_nonneg(eps * pt.omega * pt.omega - Complex64::new(pt.k * pt.k, 0.0));
            fresnel_from_roots(pol, eps, kv, km)
        }
        Side::CutLeft => {
            let eps = epsilon(pt.omega, m)?; // real on the axis
            let kv = vacuum_wavenumber(pt.omega, pt.k); // i kappa
            let km = {
                let xi = -pt.omega.im;
                let km2 = medium_wavenumber_sq_on_cut(xi, pt.k, m);
                if km2 > 0.0 {
                    Complex64::new(km2.sqrt(), 0.0)
                } else {
                    Complex64::new(0.0, (-km2).sqrt())
                }
            };
            Ok(fresnel_from_roots(pol, eps, kv, km)?.conj())
        }
    }
}

/// Endpoints `(xi_low, xi_high)` of the eddy-current cut at lateral
/// wavevector `k`.
///
/// `xi_high = gamma` exactly; `xi_low` is the root of
/// `k_m^2(-i xi) = 0`, equivalently of the cubic
/// `xi^3 - gamma xi^2 + (wp^2 + k^2) xi - gamma k^2`, which for
/// `k << wp/c` behaves as `D k^2` with `D = gamma / wp^2`.
pub fn cut_endpoints(k: f64, m: &MaterialParams) -> Result<(f64, f64)> {
    if !m.is_dissipative() {
        return Err(Error::NoCut);
    }
    if !(k >= 0.0) || !k.is_finite() {
        return Err(Error::domain(format!("wavevector k must be non-negative, got {k}")));
    }
    let gamma = m.gamma;
    if k == 0.0 {
        return Ok((0.0, gamma));
    }
    let wp2 = m.omega_p * m.omega_p;
    // same sign as k_m^2 on (0, gamma), but polynomial (no pole at gamma)
    let cubic = |xi: f64| ((xi - gamma) * xi + (wp2 + k * k)) * xi - gamma * k * k;
    // cubic(lo) = lo^2 (lo - gamma) < 0 exactly at this starting guess
    let lo = gamma * k * k / (wp2 + k * k);
    let xi_low = quad::find_root_bracketed(cubic, lo, gamma, 1e-15 * gamma)?;
    Ok((xi_low, gamma))
}

/// `Im ln[1 - r_p^2(-i xi - 0^+) e^{-2 kappa L}]` with
/// `kappa = sqrt(xi^2 + k^2)`: the branch-cut discontinuity density behind
/// the eddy-current integrals. Zero (to rounding) outside the cut.
pub fn cut_im_log(
    pol: Polarization,
    xi: f64,
    k: f64,
    geometry: Geometry,
    m: &MaterialParams,
) -> Result<f64> {
    if !(xi > 0.0) || !xi.is_finite() {
        return Err(Error::domain(format!("xi must be positive, got {xi}")));
    }
    let pt = EvaluationPoint::cut_left(xi, k)?;
    let r = fresnel_r(pol, &pt, m)?;
    let kappa = xi.hypot(k);
    let round_trip = r * r * (-2.0 * kappa * geometry.l).exp();
    Ok((Complex64::new(1.0, 0.0) - round_trip).arg())
}

/// Numerical-offset oracle for [`cut_im_log`]: evaluates at
/// `w = -delta - i xi` with decaying-branch roots and Richardson
/// extrapolation `2 f(delta/2) - f(delta)`.
pub fn cut_im_log_offset(
    pol: Polarization,
    xi: f64,
    k: f64,
    geometry: Geometry,
    m: &MaterialParams,
    delta: f64,
) -> Result<f64> {
    if !(delta > 0.0) {
        return Err(Error::domain(format!("offset must be positive, got {delta}")));
    }
    let one = offset_im_log(pol, xi, k, geometry, m, delta)?;
    let half = offset_im_log(pol, xi, k, geometry, m, delta / 2.0)?;
    Ok(2.0 * half - one)
}

fn offset_im_log(
    pol: Polarization,
    xi: f64,
    k: f64,
    geometry: Geometry,
    m: &MaterialParams,
    delta: f64,
) -> Result<f64> {
    let omega = Complex64::new(-delta, -xi);
    let eps = epsilon(omega, m)?;
    let kv = sqrt_im_nonneg(omega * omega - Complex64::new(k * k, 0.0));
    let km = sqrt_im_nonneg(eps * omega * omega - Complex64::new(k * k, 0.0));
    let r = fresnel_from_roots(pol, eps, kv, km)?;
    let kappa = xi.hypot(k);
    let round_trip = r * r * (-2.0 * kappa * geometry.l).exp();
    Ok((Complex64::new(1.0, 0.0) - round_trip).arg())
}
