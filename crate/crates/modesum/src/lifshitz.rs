//! Imaginary-frequency Lifshitz totals: the independent baseline every
//! mode-resolved contribution is validated against.
//!
//! Zero temperature: `E/A = int dxi/2pi int k dk/2pi sum_p ln(1 - r_p^2
//! e^{-2 kappa L})` over the positive imaginary axis. Finite temperature:
//! the Matsubara sum `F/A = k_B T sum'_n int k dk/2pi sum_p ln(...)` at
//! `xi_n = 2 pi n k_B T`, zero term weighted 1/2. The Drude TE zero term
//! vanishes identically (`r_TE(i xi -> 0) = 0`) and is set to zero
//! analytically to avoid a 0*inf ambiguity; the plasma TE zero term is the
//! classical reference that the eddy currents cancel.

use std::cell::Cell;

use crate::eddy;
use crate::error::{Error, Result};
use crate::params::{
    ideal_casimir_energy_per_area, CutoffLambda, Geometry, MaterialModel, MaterialParams,
    Temperature,
};
use crate::plasmon::ZETA_3;
use crate::quad::{self, Domain, QuadratureConfig, TailTransform};
use crate::reflection::{fresnel_r, EvaluationPoint, Polarization};

/// Growth threshold for the Matsubara tail extrapolation.
const MATSUBARA_TAIL_FRACTION: f64 = 1e-4;
/// Hard cap on the number of Matsubara terms.
const MATSUBARA_MAX_TERMS: usize = 1_000_000;

/// Total and per-polarization energies (or free energies) per unit area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LifshitzBreakdown {
    /// `te + tm`, exact by construction.
    pub total: f64,
    pub te: f64,
    pub tm: f64,
    /// `total / ideal_casimir_energy_per_area`.
    pub eta: f64,
    /// Relative tolerance actually achieved.
    pub achieved_tol: f64,
}

/// Squared reflection coefficient on the positive imaginary axis.
fn r_squared(pol: Polarization, xi: f64, k: f64, m: &MaterialParams) -> Result<f64> {
    let pt = EvaluationPoint::imaginary_axis(xi, k)?;
    let r = fresnel_r(pol, &pt, m)?;
    Ok(r.norm_sqr())
}

/// `int_0^inf dxi int_0^inf k dk ln(1 - r_p^2 e^{-2 kappa L})`, iterated
/// with the frequency integral innermost.
fn polarization_integral(
    pol: Polarization,
    geometry: Geometry,
    m: &MaterialParams,
    quad_cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    let l = geometry.l;
    let inner_failure: Cell<Option<Error>> = Cell::new(None);

    let mut inner_cfg = quad_cfg.with_breakpoints(vec![m.gamma, m.omega_p]);
    inner_cfg.tail_transform = TailTransform::ExpDecay;
    inner_cfg.tail_scale = 0.5 / l;

    let inner = |k: f64| -> f64 {
        let f = |xi: f64| match r_squared(pol, xi, k, m) {
            Ok(r2) => {
                let q = r2 * (-2.0 * xi.hypot(k) * l).exp();
                (-q).ln_1p()
            }
            Err(e) => {
                inner_failure.set(Some(e));
                0.0
            }
        };
        match quad::integrate(f, Domain::SemiInfinite(0.0), &inner_cfg) {
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
    outer_cfg.tail_scale = 0.5 / l;
    outer_cfg.breakpoints.push(m.omega_p);

    let outer = quad::integrate(|k: f64| k * inner(k), Domain::SemiInfinite(0.0), &outer_cfg)?;
    if let Some(e) = inner_failure.take() {
        return Err(e);
    }
    // converged inner integrals contribute at most their requested
    // relative tolerance to the iterated result
    Ok((outer.value, outer.abs_error + quad_cfg.rel_tol * outer.value.abs()))
}

/// Zero-temperature Casimir energy per unit area from the Lifshitz
/// integral; strictly negative, `eta -> 1` in the perfect-mirror limit.
pub fn casimir_energy_t0(
    geometry: Geometry,
    m: &MaterialParams,
    quad_cfg: &QuadratureConfig,
) -> Result<LifshitzBreakdown> {
    let norm = 4.0 * std::f64::consts::PI.powi(2);
    let (te_raw, te_err) = polarization_integral(Polarization::TE, geometry, m, quad_cfg)?;
    let (tm_raw, tm_err) = polarization_integral(Polarization::TM, geometry, m, quad_cfg)?;
    let te = te_raw / norm;
    let tm = tm_raw / norm;
    let total = te + tm;
    let abs_err = (te_err + tm_err) / norm;
    Ok(LifshitzBreakdown {
        total,
        te,
        tm,
        eta: total / ideal_casimir_energy_per_area(geometry),
        achieved_tol: if total != 0.0 { (abs_err / total).abs() } else { abs_err },
    })
}

/// One `n >= 1` Matsubara term (per unit area, polarization `pol`).
fn matsubara_term(
    pol: Polarization,
    xi_n: f64,
    geometry: Geometry,
    m: &MaterialParams,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    let l = geometry.l;
    let failure: Cell<Option<Error>> = Cell::new(None);
    let f = |k: f64| match r_squared(pol, xi_n, k, m) {
        Ok(r2) => {
            let q = r2 * (-2.0 * xi_n.hypot(k) * l).exp();
            k * (-q).ln_1p()
        }
        Err(e) => {
            failure.set(Some(e));
            0.0
        }
    };
    let mut kcfg = cfg.clone();
    kcfg.tail_transform = TailTransform::ExpDecay;
    kcfg.tail_scale = 0.5 / l;
    kcfg.breakpoints.push(m.omega_p);
    let est = quad::integrate(f, Domain::SemiInfinite(0.0), &kcfg)?;
    if let Some(e) = failure.take() {
        return Err(e);
    }
    Ok((est.value / (2.0 * std::f64::consts::PI), est.abs_error / (2.0 * std::f64::consts::PI)))
}

/// Finite-temperature Casimir free energy per unit area from the Matsubara
/// sum. The `n = 0` TE term is exactly zero for the Drude model and the
/// classical plasma reference otherwise; the tail is summed until terms
/// fall below `1e-4` of the running sum and then geometrically
/// extrapolated (hard cap `1e6` terms).
pub fn free_energy_t(
    geometry: Geometry,
    m: &MaterialParams,
    temp: Temperature,
    quad_cfg: &QuadratureConfig,
) -> Result<LifshitzBreakdown> {
    if !(temp.t > 0.0) {
        return Err(Error::domain("free energy requires T > 0".to_string()));
    }
    let t = temp.t;
    let l = geometry.l;
    let mut values = [0.0f64; 2];
    let mut errors = [0.0f64; 2];

    for (idx, pol) in Polarization::BOTH.into_iter().enumerate() {
        // n = 0, weight 1/2
        let (zero_value, zero_error) = match pol {
            Polarization::TE => match m.model {
                MaterialModel::Drude if m.gamma > 0.0 => (0.0, 0.0),
                // gamma = 0 (either model): static TE plasma reflection
                _ => {
                    let est = eddy::plasma_high_t_te_reference(geometry, m, temp, quad_cfg)?;
                    (est.value, est.value.abs() * est.achieved_rel_tol)
                }
            },
            // r_TM(0) = 1 exactly: closed form -t zeta(3) / (16 pi L^2)
            Polarization::TM => {
                (-t * ZETA_3 / (16.0 * std::f64::consts::PI * l * l), 0.0)
            }
        };
        let mut sum = zero_value;
        let mut err = zero_error;

        let mut previous = 0.0f64;
        let mut n = 1usize;
        loop {
            let xi_n = 2.0 * std::f64::consts::PI * (n as f64) * t;
            let (raw, raw_err) = matsubara_term(pol, xi_n, geometry, m, quad_cfg)?;
            let term = t * raw;
            sum += term;
            err += t * raw_err;

            if n >= 2 && term.abs() < MATSUBARA_TAIL_FRACTION * sum.abs().max(f64::MIN_POSITIVE) {
                // geometric tail from the last ratio
                if previous != 0.0 {
                    let rho = term / previous;
                    if rho > 0.0 && rho < 1.0 {
                        let tail = term * rho / (1.0 - rho);
                        sum += tail;
                        // the ratio drifts slowly; charge a tenth of the tail
                        err += 0.1 * tail.abs();
                    } else {
                        err += term.abs();
                    }
                }
                break;
            }
            if n >= MATSUBARA_MAX_TERMS {
                return Err(Error::NonConvergence {
                    best: sum,
                    error: term.abs(),
                    requested: MATSUBARA_TAIL_FRACTION * sum.abs(),
                });
            }
            previous = term;
            n += 1;
        }
        values[idx] = sum;
        errors[idx] = err;
    }

    let te = values[0];
    let tm = values[1];
    let total = te + tm;
    let abs_err = errors[0] + errors[1];
    Ok(LifshitzBreakdown {
        total,
        te,
        tm,
        eta: total / ideal_casimir_energy_per_area(geometry),
        achieved_tol: if total != 0.0 { (abs_err / total).abs() } else { abs_err },
    })
}

/// High-temperature consistency ratio `F_TE(Drude) / |F_eddy^TE|`: near
/// zero when eddy currents cancel the propagating TE modes.
pub fn propagating_minus_eddy_check_te(
    geometry: Geometry,
    m: &MaterialParams,
    temp: Temperature,
    quad_cfg: &QuadratureConfig,
) -> Result<f64> {
    if !m.is_dissipative() {
        return Err(Error::NoCut);
    }
    let fe = free_energy_t(geometry, m, temp, quad_cfg)?;
    let eddy_te =
        eddy::eddy_free_energy_high_t(Polarization::TE, geometry, m, temp, quad_cfg)?;
    if !(eddy_te.value.abs() > f64::MIN_POSITIVE) {
        return Err(Error::Numerical(
            "TE eddy free energy underflowed; ratio undefined".to_string(),
        ));
    }
    Ok(fe.te / eddy_te.value.abs())
}

/// The cutoff is irrelevant here but several call sites pass one around;
/// re-exported for symmetric signatures in the CLI.
pub type Cutoff = CutoffLambda;
