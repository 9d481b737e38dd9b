//! Eddy-current (Foucault) contribution to the Casimir interaction.
//!
//! The overdamped current modes of a Drude mirror form a continuum on the
//! branch cut `xi in (xi_low(k), gamma)` of the medium wavenumber along the
//! negative imaginary frequency axis. Their contribution is obtained from
//! the change of the mode density along the cut, `Im ln[1 - r_p^2 e^{-2
//! kappa L}]` on the `-0^+` side, weighted by the derivative of the energy
//! carried per mode:
//!
//! * zero temperature: weight `d/dxi [xi/(2 pi) ln(xi/Lambda)]`, giving an
//!   energy that depends logarithmically on the bath cutoff and is
//!   repulsive once the cutoff is large enough;
//! * high temperature: weight `d/dxi [1/2 k_B T ln(hbar xi / k_B T)]`
//!   (the 1/2 is the weight every purely imaginary mode carries in the
//!   mode sum), giving a cutoff-independent free energy that cancels the
//!   plasma-model TE free energy for good conductors.
//!
//! The lossless plasma model has no cut and therefore no eddy terms.

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::params::{CutoffLambda, EnergyEstimate, Geometry, MaterialParams, Temperature};
use crate::quad::{self, Domain, IntegralEstimate, QuadratureConfig, TailTransform};
use crate::reflection::{cut_endpoints, cut_im_log, Polarization};

/// Which statistical regime an [`EddyResult`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EddyRegime {
    /// Zero-temperature energy (cutoff dependent).
    ZeroT,
    /// High-temperature (classical) free energy (cutoff independent).
    HighT,
}

/// An eddy-current energy or free energy per unit area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EddyResult {
    /// Energy per unit area, units of `hbar omega_p^3 / c^2`.
    pub value: f64,
    pub polarization: Polarization,
    pub regime: EddyRegime,
    /// The bath cutoff the value depends on; `None` in the classical
    /// regime, which is cutoff free.
    pub cutoff_used: Option<CutoffLambda>,
    /// Relative tolerance actually achieved by the nested quadrature.
    pub achieved_tol: f64,
}

/// Iterated integral over the cut support:
/// `int_0^infty k dk [ int_{xi_low(k)}^{gamma} w(xi) ImLn(xi, k) dxi ]`.
///
/// The inner support is known analytically, so the nonsmooth region is
/// confined exactly; the outer tail is cut off by `e^{-2 kappa L}`.
fn cut_weighted_integral<W>(
    pol: Polarization,
    geometry: Geometry,
    m: &MaterialParams,
    quad_cfg: &QuadratureConfig,
    weight: W,
) -> Result<IntegralEstimate>
where
    W: Fn(f64) -> f64,
{
    let gamma = m.gamma;
    let inner_cfg = quad_cfg.with_breakpoints(Vec::new());
    let inner_failure: Cell<Option<Error>> = Cell::new(None);

    let inner = |k: f64| -> f64 {
        let (lo, hi) = match cut_endpoints(k, m) {
            Ok(b) => b,
            Err(e) => {
                inner_failure.set(Some(e));
                return 0.0;
            }
        };
        if lo >= hi {
            return 0.0; // cut collapsed at floating-point resolution
        }
        let f = |xi: f64| match cut_im_log(pol, xi, k, geometry, m) {
            Ok(v) => weight(xi) * v,
            Err(e) => {
                inner_failure.set(Some(e));
                0.0
            }
        };
        match quad::integrate(f, Domain::Finite(lo, hi), &inner_cfg) {
            Ok(est) => est.value,
            Err(Error::NonConvergence { best, error, .. })
                if error <= 1e3 * inner_cfg.abs_tol =>
            {
                best
            }
            Err(e) => {
                inner_failure.set(Some(e));
                0.0
            }
        }
    };

    let mut outer_cfg = quad_cfg.clone();
    outer_cfg.tail_transform = TailTransform::ExpDecay;
    outer_cfg.tail_scale = 0.5 / geometry.l;
    outer_cfg.breakpoints.push(gamma);

    let outer = quad::integrate(|k: f64| k * inner(k), Domain::SemiInfinite(0.0), &outer_cfg)?;
    if let Some(e) = inner_failure.take() {
        return Err(e);
    }
    // converged inner integrals contribute at most their requested
    // relative tolerance to the iterated result
    Ok(IntegralEstimate {
        value: outer.value,
        abs_error: outer.abs_error + quad_cfg.rel_tol * outer.value.abs(),
    })
}

/// Zero-temperature eddy-current energy per unit area and polarization.
///
/// Exactly zero for the plasma model. Repulsive (positive) provided the
/// bath cutoff is large enough; the crossover sits near `Lambda ~ 2 gamma`
/// at short distances and below `gamma` for `L >~ lambda_p`.
pub fn eddy_energy_t0(
    pol: Polarization,
    geometry: Geometry,
    m: &MaterialParams,
    cutoff: CutoffLambda,
    quad_cfg: &QuadratureConfig,
) -> Result<EddyResult> {
    if !m.is_dissipative() {
        return Ok(EddyResult {
            value: 0.0,
            polarization: pol,
            regime: EddyRegime::ZeroT,
            cutoff_used: Some(cutoff),
            achieved_tol: 0.0,
        });
    }
    let lambda = cutoff.lambda_cut;
    let est = cut_weighted_integral(pol, geometry, m, quad_cfg, |xi| (xi / lambda).ln() + 1.0)?;
    let norm = 4.0 * std::f64::consts::PI.powi(3);
    let e = EnergyEstimate::new(est.value / norm, est.abs_error / norm);
    Ok(EddyResult {
        value: e.value,
        polarization: pol,
        regime: EddyRegime::ZeroT,
        cutoff_used: Some(cutoff),
        achieved_tol: e.achieved_rel_tol,
    })
}

/// High-temperature (classical) eddy-current free energy per unit area.
///
/// Cutoff independent and linear in `T` by construction. The caller is
/// responsible for high-temperature applicability, `k_B T >> hbar gamma`.
pub fn eddy_free_energy_high_t(
    pol: Polarization,
    geometry: Geometry,
    m: &MaterialParams,
    temp: Temperature,
    quad_cfg: &QuadratureConfig,
) -> Result<EddyResult> {
    if !(temp.t > 0.0) {
        return Err(Error::domain("high-temperature limit requires T > 0".to_string()));
    }
    if !m.is_dissipative() {
        return Ok(EddyResult {
            value: 0.0,
            polarization: pol,
            regime: EddyRegime::HighT,
            cutoff_used: None,
            achieved_tol: 0.0,
        });
    }
    let est = cut_weighted_integral(pol, geometry, m, quad_cfg, |xi| 1.0 / xi)?;
    let norm = -4.0 * std::f64::consts::PI.powi(2) / temp.t;
    let e = EnergyEstimate::new(est.value / norm, (est.abs_error / norm).abs());
    Ok(EddyResult {
        value: e.value,
        polarization: pol,
        regime: EddyRegime::HighT,
        cutoff_used: None,
        achieved_tol: e.achieved_rel_tol,
    })
}

/// High-temperature TE free energy of the plasma model: the classical
/// (zero-Matsubara) term
/// `(k_B T / 2) int k dk/2pi ln(1 - r^2 e^{-2kL})` with the static TE
/// plasma reflection `r = (k - sqrt(k^2 + wp^2)) / (k + sqrt(k^2 + wp^2))`.
/// Strictly negative (attractive). Only `omega_p` is read from `m`.
pub fn plasma_high_t_te_reference(
    geometry: Geometry,
    m: &MaterialParams,
    temp: Temperature,
    quad_cfg: &QuadratureConfig,
) -> Result<EnergyEstimate> {
    if !(temp.t > 0.0) {
        return Err(Error::domain("high-temperature limit requires T > 0".to_string()));
    }
    let wp = m.omega_p;
    let l = geometry.l;
    let f = |k: f64| {
        let r = (k - k.hypot(wp)) / (k + k.hypot(wp));
        let q = r * r * (-2.0 * k * l).exp();
        k * (-q).ln_1p()
    };
    let mut cfg = quad_cfg.clone();
    cfg.tail_transform = TailTransform::ExpDecay;
    cfg.tail_scale = 0.5 / l;
    let est = quad::integrate(f, Domain::SemiInfinite(0.0), &cfg)?;
    let norm = temp.t / (4.0 * std::f64::consts::PI);
    Ok(EnergyEstimate::new(norm * est.value, norm * est.abs_error))
}

/// `F_eddy^TE / (-F_plasma^TE)` at high temperature: tends to 1 for good
/// conductors at large distance, where eddy currents cancel the
/// plasma-model TE attraction.
pub fn te_cancellation_ratio(
    geometry: Geometry,
    m: &MaterialParams,
    temp: Temperature,
    quad_cfg: &QuadratureConfig,
) -> Result<f64> {
    let eddy = eddy_free_energy_high_t(Polarization::TE, geometry, m, temp, quad_cfg)?;
    let reference = plasma_high_t_te_reference(geometry, m, temp, quad_cfg)?;
    if !(reference.value.abs() > f64::MIN_POSITIVE) {
        return Err(Error::Numerical(
            "plasma TE reference underflowed; cancellation ratio undefined".to_string(),
        ));
    }
    Ok(eddy.value / -reference.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn drude(gamma: f64) -> MaterialParams {
        MaterialParams::drude(1.0, gamma).unwrap()
    }

    fn lambda_p() -> f64 {
        2.0 * std::f64::consts::PI
    }

    #[test]
    fn plasma_model_has_no_eddy_energy() {
        let m = MaterialParams::plasma(1.0).unwrap();
        let g = Geometry::new(1.0).unwrap();
        let cfg = QuadratureConfig::default();
        let r = eddy_energy_t0(Polarization::TE, g, &m, CutoffLambda::new(1.0).unwrap(), &cfg)
            .unwrap();
        assert_eq!(r.value, 0.0);
        let f = eddy_free_energy_high_t(
            Polarization::TE,
            g,
            &m,
            Temperature::new(0.1).unwrap(),
            &cfg,
        )
        .unwrap();
        assert_eq!(f.value, 0.0);
    }

    #[test]
    fn te_t0_energy_is_repulsive_at_plasma_wavelength() {
        // gamma = 0.01 wp, Lambda = 10 gamma, L = lambda_p
        let m = drude(0.01);
        let g = Geometry::new(lambda_p()).unwrap();
        let cfg = QuadratureConfig::default();
        let r = eddy_energy_t0(Polarization::TE, g, &m, CutoffLambda::new(0.1).unwrap(), &cfg)
            .unwrap();
        assert!(r.value > 0.0);
        // frozen from an independent (scipy) evaluation of the same integral
        assert_relative_eq!(r.value, 6.233_464_855_4e-7, max_relative = 1e-6);
        assert!(r.achieved_tol < 1e-7);
    }

    #[test]
    fn tm_contribution_is_small() {
        let m = drude(0.01);
        let g = Geometry::new(lambda_p()).unwrap();
        let cfg = QuadratureConfig::default();
        let lam = CutoffLambda::new(0.1).unwrap();
        let te = eddy_energy_t0(Polarization::TE, g, &m, lam, &cfg).unwrap();
        let tm = eddy_energy_t0(Polarization::TM, g, &m, lam, &cfg).unwrap();
        assert_relative_eq!(tm.value, 2.574_452e-9, max_relative = 1e-4);
        assert!(tm.value.abs() < 0.01 * te.value.abs());
    }

    #[test]
    fn high_t_free_energy_linear_in_temperature() {
        let m = drude(1e-3);
        let g = Geometry::new(10.0 * lambda_p()).unwrap();
        let cfg = QuadratureConfig::default();
        let t1 = Temperature::new(0.05).unwrap();
        let t2 = Temperature::new(0.10).unwrap();
        let f1 = eddy_free_energy_high_t(Polarization::TE, g, &m, t1, &cfg).unwrap();
        let f2 = eddy_free_energy_high_t(Polarization::TE, g, &m, t2, &cfg).unwrap();
        assert_relative_eq!(f2.value, 2.0 * f1.value, max_relative = 1e-12);
    }

    #[test]
    fn high_t_free_energy_is_cutoff_free() {
        let m = drude(1e-3);
        let g = Geometry::new(10.0 * lambda_p()).unwrap();
        let f = eddy_free_energy_high_t(
            Polarization::TE,
            g,
            &m,
            Temperature::new(0.08).unwrap(),
            &QuadratureConfig::default(),
        )
        .unwrap();
        assert_eq!(f.cutoff_used, None);
        assert_eq!(f.regime, EddyRegime::HighT);
    }

    #[test]
    fn plasma_reference_perfect_mirror_limit() {
        // wp -> inf: -(k_B T) zeta(3) / (16 pi L^2)
        let m = MaterialParams::plasma(1e6).unwrap();
        let l = 2.0;
        let g = Geometry::new(l).unwrap();
        let t = Temperature::new(0.3).unwrap();
        let r = plasma_high_t_te_reference(g, &m, t, &QuadratureConfig::default()).unwrap();
        let zeta3 = 1.202_056_903_159_594_3;
        let ideal = -t.t * zeta3 / (16.0 * std::f64::consts::PI * l * l);
        assert_relative_eq!(r.value, ideal, max_relative = 1e-5);
    }

    #[test]
    fn plasma_reference_transparent_limit() {
        let m = MaterialParams::plasma(1e-8).unwrap();
        let g = Geometry::new(2.0).unwrap();
        let t = Temperature::new(0.3).unwrap();
        let r = plasma_high_t_te_reference(g, &m, t, &QuadratureConfig::default()).unwrap();
        assert_abs_diff_eq!(r.value, 0.0, epsilon = 1e-18);
    }

    #[test]
    fn plasma_reference_is_attractive() {
        let m = MaterialParams::plasma(1.0).unwrap();
        let g = Geometry::new(5.0).unwrap();
        let t = Temperature::new(0.2).unwrap();
        let r = plasma_high_t_te_reference(g, &m, t, &QuadratureConfig::default()).unwrap();
        assert!(r.value < 0.0);
    }

    #[test]
    fn te_cancellation_for_good_conductor() {
        // gamma/wp = 1e-3, L = 10 lambda_p, k_B T L = 5
        let m = drude(1e-3);
        let l = 10.0 * lambda_p();
        let g = Geometry::new(l).unwrap();
        let t = Temperature::new(5.0 / l).unwrap();
        let ratio = te_cancellation_ratio(g, &m, t, &QuadratureConfig::default()).unwrap();
        assert_relative_eq!(ratio, 1.0, max_relative = 5e-3);
        // frozen from the prototype computation
        assert_relative_eq!(ratio, 0.999_973, max_relative = 1e-4);
    }

    #[test]
    fn cancellation_degrades_with_damping() {
        let l = 10.0 * lambda_p();
        let g = Geometry::new(l).unwrap();
        let t = Temperature::new(5.0 / l).unwrap();
        let cfg = QuadratureConfig::default();
        let r1 = te_cancellation_ratio(g, &drude(1e-3), t, &cfg).unwrap();
        let r2 = te_cancellation_ratio(g, &drude(0.1), t, &cfg).unwrap();
        assert!((r1 - 1.0).abs() < (r2 - 1.0).abs());
    }

    #[test]
    fn zero_temperature_rejected_in_classical_regime() {
        let m = drude(1e-3);
        let g = Geometry::new(1.0).unwrap();
        let t = Temperature::new(0.0).unwrap();
        assert!(eddy_free_energy_high_t(Polarization::TE, g, &m, t, &QuadratureConfig::default())
            .is_err());
    }
}
