//! Coupled surface-plasmon branches in the quasi-static limit, their
//! damped mode frequencies, and the plasmonic part of the Casimir energy.
//!
//! The two branches `w_pm^2 = wp^2/2 (1 pm e^{-kL})` acquire damping as
//! `Omega_pm = sqrt(w_pm^2 - gamma^2/4) - i gamma/2`. When
//! `w_-^2 < gamma^2/4` the minus branch is overdamped and splits into two
//! purely imaginary roots `-i(gamma/2 pm s)`, each counted with the 1/2
//! weight that all purely imaginary eigenfrequencies carry in the mode sum.
//! The mode energy includes the bath-cutoff logarithm; its divergent pieces
//! cancel between the branches (and against the `L = inf` reference), which
//! is why the plasmon energy is cutoff independent.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::{
    ideal_casimir_energy_per_area, ComplexFrequency, CutoffLambda, EnergyEstimate, Geometry,
    MaterialParams,
};
use crate::quad::{self, Domain, QuadratureConfig, TailTransform};

/// Riemann zeta(3); the short-distance dissipative correction carries
/// `15 zeta(3) / pi^4`.
pub const ZETA_3: f64 = 1.202_056_903_159_594_3;

/// Short-distance coefficient of the lossless plasmon energy (its defining
/// integral evaluates to 1.19334...; kept at the printed 4-figure value).
pub const ALPHA_SHORT_DISTANCE: f64 = 1.193;

/// One dispersion branch: a damped mode, or the overdamped pair of purely
/// imaginary roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Branch {
    Mode(ComplexFrequency),
    /// Roots `-i(gamma/2 - s)` and `-i(gamma/2 + s)`, each of weight 1/2.
    OverdampedPair(ComplexFrequency, ComplexFrequency),
}

impl Branch {
    fn from_squared_frequency(w2: f64, gamma: f64) -> Self {
        let d = w2 - 0.25 * gamma * gamma;
        if d > 0.0 {
            // frequency constructor cannot fail: Im = -gamma/2 <= 0
            Branch::Mode(
                ComplexFrequency::new(Complex64::new(d.sqrt(), -0.5 * gamma))
                    .expect("damped mode lies in the lower half plane"),
            )
        } else {
            let s = (-d).sqrt();
            let slow = ComplexFrequency::imaginary(0.5 * gamma - s)
                .expect("overdamped root is non-negative");
            let fast = ComplexFrequency::imaginary(0.5 * gamma + s)
                .expect("overdamped root is non-negative");
            Branch::OverdampedPair(slow, fast)
        }
    }

    /// The branch's eigenfrequencies (one, or the overdamped pair).
    pub fn modes(&self) -> impl Iterator<Item = ComplexFrequency> {
        match *self {
            Branch::Mode(m) => [Some(m), None].into_iter().flatten(),
            Branch::OverdampedPair(a, b) => [Some(a), Some(b)].into_iter().flatten(),
        }
    }

    pub fn is_overdamped(&self) -> bool {
        matches!(self, Branch::OverdampedPair(..))
    }

    /// Weighted imaginary part, `sum_m weight(m) * Im(omega_m)`.
    fn weighted_im(&self) -> f64 {
        self.modes().map(|m| m.weight() * m.value.im).sum()
    }

    /// Sum of mode energies over the branch; the exact-zero root that the
    /// overdamped pair develops as `k L -> 0` contributes its (vanishing)
    /// limit.
    fn term_sum(&self, cutoff: CutoffLambda) -> f64 {
        self.modes()
            .map(|m| {
                if m.value == Complex64::new(0.0, 0.0) {
                    0.0 // xi ln(xi) -> 0
                } else {
                    mode_term(&m, cutoff).expect("nonzero frequency")
                }
            })
            .sum()
    }
}

/// The symmetric/antisymmetric surface-plasmon pair at one wavevector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlasmonPair {
    pub plus: Branch,
    pub minus: Branch,
    /// Lateral wavevector.
    pub k: f64,
    /// Mirror separation; `f64::INFINITY` is the reference configuration.
    pub l: f64,
}

impl PlasmonPair {
    /// Representative frequency of the plus branch.
    pub fn omega_plus(&self) -> ComplexFrequency {
        match self.plus {
            Branch::Mode(m) | Branch::OverdampedPair(m, _) => m,
        }
    }

    /// Representative frequency of the minus branch (the slow root when
    /// overdamped).
    pub fn omega_minus(&self) -> ComplexFrequency {
        match self.minus {
            Branch::Mode(m) | Branch::OverdampedPair(m, _) => m,
        }
    }

    pub fn overdamped_minus(&self) -> bool {
        self.minus.is_overdamped()
    }
}

fn validate_material(m: &MaterialParams) -> Result<()> {
    if m.gamma * m.gamma >= 2.0 * m.omega_p * m.omega_p {
        return Err(Error::domain(format!(
            "quasi-static plasmon branches require gamma < sqrt(2) omega_p, got gamma = {}",
            m.gamma
        )));
    }
    Ok(())
}

fn branch_pair(k: f64, l: f64, m: &MaterialParams) -> (Branch, Branch) {
    let e = if l.is_infinite() { 0.0 } else { (-k * l).exp() };
    let half_wp2 = 0.5 * m.omega_p * m.omega_p;
    (
        Branch::from_squared_frequency(half_wp2 * (1.0 + e), m.gamma),
        Branch::from_squared_frequency(half_wp2 * (1.0 - e), m.gamma),
    )
}

/// Quasi-static coupled surface-plasmon frequencies at wavevector `k` and
/// separation `l` (`f64::INFINITY` for the decoupled reference).
pub fn quasistatic_frequencies(k: f64, l: f64, m: &MaterialParams) -> Result<PlasmonPair> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::domain(format!("wavevector k must be positive, got {k}")));
    }
    if !(l > 0.0) {
        return Err(Error::domain(format!("separation must be positive, got {l}")));
    }
    validate_material(m)?;
    let (plus, minus) = branch_pair(k, l, m);
    Ok(PlasmonPair { plus, minus, k, l })
}

/// Energy carried by one mode in the dissipative mode sum:
/// `weight * (1/2) Re[w - (2 i w / pi) ln(w / Lambda)]`, with weight 1/2
/// for purely imaginary eigenfrequencies. For `w = -i xi` this reduces to
/// `-(xi / 2 pi) ln(xi / Lambda)` exactly.
pub fn mode_term(omega: &ComplexFrequency, cutoff: CutoffLambda) -> Result<f64> {
    let w = omega.value;
    if w == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("mode term undefined at zero frequency".to_string()));
    }
    let log = (w / cutoff.lambda_cut).ln();
    let term = w - Complex64::new(0.0, 2.0 / std::f64::consts::PI) * w * log;
    Ok(omega.weight() * 0.5 * term.re)
}

/// Wavevector where the minus branch crosses into the overdamped regime,
/// `(wp^2/2)(1 - e^{-k* L}) = gamma^2/4`; `None` for lossless mirrors.
pub fn overdamping_threshold(geometry: Geometry, m: &MaterialParams) -> Option<f64> {
    if m.gamma == 0.0 {
        return None;
    }
    let x = m.gamma * m.gamma / (2.0 * m.omega_p * m.omega_p);
    if x >= 1.0 {
        return None; // overdamped at every wavevector
    }
    Some(-(-x).ln_1p() / geometry.l)
}

/// Plasmonic Casimir energy per unit area: the `k` integral of the
/// mode-term difference between separation `L` and the decoupled reference.
pub fn plasmon_energy(
    geometry: Geometry,
    m: &MaterialParams,
    cutoff: CutoffLambda,
    quad_cfg: &QuadratureConfig,
) -> Result<EnergyEstimate> {
    validate_material(m)?;
    let l = geometry.l;

    let (plus_inf, minus_inf) = branch_pair(1.0, f64::INFINITY, m);
    let reference = plus_inf.term_sum(cutoff) + minus_inf.term_sum(cutoff);

    let integrand = |k: f64| {
        let (plus, minus) = branch_pair(k, l, m);
        k / (2.0 * std::f64::consts::PI)
            * (plus.term_sum(cutoff) + minus.term_sum(cutoff) - reference)
    };

    let mut cfg = quad_cfg.clone();
    cfg.tail_transform = TailTransform::ExpDecay;
    cfg.tail_scale = 1.0 / l;
    if let Some(kstar) = overdamping_threshold(geometry, m) {
        cfg.breakpoints.push(kstar);
    }

    let est = quad::integrate(integrand, Domain::SemiInfinite(0.0), &cfg)?;
    Ok(EnergyEstimate::new(est.value, est.abs_error))
}

/// Short-distance expansion of the plasmon energy,
/// `ideal * (3/2) (alpha L/lambda_p - (15 zeta(3)/pi^4) gamma L)`.
pub fn plasmon_energy_asymptotic(geometry: Geometry, m: &MaterialParams) -> f64 {
    let pi4 = std::f64::consts::PI.powi(4);
    let bracket = ALPHA_SHORT_DISTANCE * geometry.l / m.lambda_p()
        - 15.0 * ZETA_3 / pi4 * m.gamma * geometry.l;
    ideal_casimir_energy_per_area(geometry) * 1.5 * bracket
}

/// Imaginary part of the weighted frequency sum, separation minus
/// reference; vanishes identically because every configuration carries the
/// same total decay rate `-gamma`.
pub fn sum_rule_residual(k: f64, geometry: Geometry, m: &MaterialParams) -> Result<f64> {
    let at_l = quasistatic_frequencies(k, geometry.l, m)?;
    let at_inf = quasistatic_frequencies(k, f64::INFINITY, m)?;
    Ok(at_l.plus.weighted_im() + at_l.minus.weighted_im()
        - at_inf.plus.weighted_im()
        - at_inf.minus.weighted_im())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn drude(gamma: f64) -> MaterialParams {
        MaterialParams::drude(1.0, gamma).unwrap()
    }

    fn cutoff(x: f64) -> CutoffLambda {
        CutoffLambda::new(x).unwrap()
    }

    #[test]
    fn decoupled_limit_is_single_interface_plasmon() {
        let m = MaterialParams::plasma(1.0).unwrap();
        let pair = quasistatic_frequencies(5.0, f64::INFINITY, &m).unwrap();
        let expected = 1.0 / 2f64.sqrt();
        assert_relative_eq!(pair.omega_plus().value.re, expected, max_relative = 1e-15);
        assert_relative_eq!(pair.omega_minus().value.re, expected, max_relative = 1e-15);
        assert_eq!(pair.omega_plus().value.im, 0.0);
    }

    #[test]
    fn lossless_branches_are_real() {
        let m = MaterialParams::plasma(1.0).unwrap();
        let pair = quasistatic_frequencies(0.7, 1.3, &m).unwrap();
        for mode in pair.plus.modes().chain(pair.minus.modes()) {
            assert_eq!(mode.value.im, 0.0);
            assert!(mode.value.re > 0.0);
        }
        assert!(!pair.overdamped_minus());
    }

    #[test]
    fn damped_branch_hand_value() {
        // e^{-kL} = 0.5: w_+^2 = 0.75, Omega_+ = sqrt(0.75 - 0.0025) - 0.05i
        let m = drude(0.1);
        let k = std::f64::consts::LN_2;
        let pair = quasistatic_frequencies(k, 1.0, &m).unwrap();
        let wp = pair.omega_plus().value;
        assert_relative_eq!(wp.re, (0.75f64 - 0.0025).sqrt(), max_relative = 1e-12);
        assert_relative_eq!(wp.im, -0.05, max_relative = 1e-15);
    }

    #[test]
    fn overdamped_pair_roots() {
        // kL tiny: w_-^2 -> 0, roots at -i(gamma/2 -+ s)
        let m = drude(0.1);
        let pair = quasistatic_frequencies(1e-6, 1.0, &m).unwrap();
        assert!(pair.overdamped_minus());
        let modes: Vec<_> = pair.minus.modes().collect();
        assert_eq!(modes.len(), 2);
        assert!(modes.iter().all(|f| f.purely_imaginary));
        // the two decay rates add up to gamma
        let total: f64 = modes.iter().map(|f| -f.value.im).sum();
        assert_relative_eq!(total, 0.1, max_relative = 1e-12);
    }

    #[test]
    fn invalid_inputs_rejected() {
        let m = drude(0.1);
        assert!(quasistatic_frequencies(0.0, 1.0, &m).is_err());
        assert!(quasistatic_frequencies(-1.0, 1.0, &m).is_err());
        // damping beyond the quasi-static branch description
        let heavy = drude(1.5);
        assert!(quasistatic_frequencies(1.0, 1.0, &heavy).is_err());
    }

    #[test]
    fn mode_term_examples() {
        let lam = cutoff(2.0);
        // real frequency at the cutoff: log vanishes, term = Lambda/2
        let f = ComplexFrequency::new(Complex64::new(2.0, 0.0)).unwrap();
        assert_relative_eq!(mode_term(&f, lam).unwrap(), 1.0, max_relative = 1e-15);

        // purely imaginary at the cutoff: term = 0
        let f = ComplexFrequency::imaginary(2.0).unwrap();
        assert_abs_diff_eq!(mode_term(&f, lam).unwrap(), 0.0, epsilon = 1e-16);

        // xi = 0.1, Lambda = 1: -(0.1/2pi) ln 0.1 = +0.03665
        let f = ComplexFrequency::imaginary(0.1).unwrap();
        let t = mode_term(&f, cutoff(1.0)).unwrap();
        assert_relative_eq!(t, 3.664_677_994_397_138e-2, max_relative = 1e-13);
        assert_abs_diff_eq!(t, 0.03665, epsilon = 1e-5);

        assert!(mode_term(&ComplexFrequency::imaginary(0.0).unwrap(), lam).is_err());
    }

    #[test]
    fn mode_term_matches_closed_form_on_axis() {
        let lam = cutoff(0.7);
        for i in 1..200 {
            let xi = 1e-4 * (i as f64) * 37.3 % 3.0 + 1e-6;
            let f = ComplexFrequency::imaginary(xi).unwrap();
            let closed = -xi / (2.0 * std::f64::consts::PI) * (xi / 0.7).ln();
            let got = mode_term(&f, lam).unwrap();
            assert_abs_diff_eq!(got, closed, epsilon = 1e-14 * (1.0 + closed.abs()));
        }
    }

    #[test]
    fn sum_rule_examples() {
        let g = Geometry::new(1.0).unwrap();
        // lossless: all frequencies real, residual exactly zero
        let m0 = MaterialParams::plasma(1.0).unwrap();
        assert_eq!(sum_rule_residual(0.3, g, &m0).unwrap(), 0.0);

        let m = drude(0.1);
        for &k in &[1e-6, 0.01, 0.5, 3.0, 50.0] {
            let r = sum_rule_residual(k, g, &m).unwrap();
            assert!(r.abs() < 1e-13, "residual {r:e} at k = {k}");
        }
    }

    #[test]
    fn zeta3_coefficient_value() {
        // 15 zeta(3) / pi^4 = 0.1851054... (0.18512 to the precision the
        // dissipative correction is ever quoted at)
        let c = 15.0 * ZETA_3 / std::f64::consts::PI.powi(4);
        assert_abs_diff_eq!(c, 0.1851044, epsilon = 1e-7);
        assert_abs_diff_eq!(c, 0.18512, epsilon = 2e-5);
    }

    #[test]
    fn asymptotic_examples() {
        // gamma = 0, L/lambda_p = 0.01
        let m = MaterialParams::plasma(1.0).unwrap();
        let l = 0.01 * m.lambda_p();
        let g = Geometry::new(l).unwrap();
        let e = plasmon_energy_asymptotic(g, &m);
        let expected = ideal_casimir_energy_per_area(g) * 1.5 * 1.193 * 0.01;
        assert_relative_eq!(e, expected, max_relative = 1e-14);

        // damping weakens the attraction
        let e_damped = plasmon_energy_asymptotic(g, &drude(0.01));
        assert!(e_damped > e);
        assert!(e_damped < 0.0);
    }

    #[test]
    fn plasmon_energy_short_distance() {
        let m = MaterialParams::plasma(1.0).unwrap();
        let l = 0.01 * m.lambda_p();
        let g = Geometry::new(l).unwrap();
        let cfg = QuadratureConfig::default();
        let e = plasmon_energy(g, &m, cutoff(1.0), &cfg).unwrap();

        // eta_pl ~ (3/2) alpha L/lambda_p within 2%
        let eta = e.value / ideal_casimir_energy_per_area(g);
        assert_relative_eq!(eta, 1.5 * 1.193 * 0.01, max_relative = 0.02);

        // frozen from an independent adaptive quadrature of the same integral
        assert_relative_eq!(e.value, -9.892_010_663e-1, max_relative = 1e-7);
    }

    #[test]
    fn plasmon_energy_cutoff_invariance() {
        let m = drude(0.01);
        let g = Geometry::new(0.1 * m.lambda_p()).unwrap();
        let cfg = QuadratureConfig::default();
        let e1 = plasmon_energy(g, &m, cutoff(0.01), &cfg).unwrap().value;
        let e2 = plasmon_energy(g, &m, cutoff(0.02), &cfg).unwrap().value;
        let e3 = plasmon_energy(g, &m, cutoff(10.0), &cfg).unwrap().value;
        assert_relative_eq!(e1, e2, max_relative = 1e-9);
        assert_relative_eq!(e1, e3, max_relative = 1e-8);
    }

    #[test]
    fn plasmon_energy_large_distance_finite() {
        let m = MaterialParams::plasma(1.0).unwrap();
        let g = Geometry::new(10.0 * m.lambda_p()).unwrap();
        let e = plasmon_energy(g, &m, cutoff(1.0), &QuadratureConfig::default()).unwrap();
        assert!(e.value.is_finite());
    }

    #[test]
    fn integrand_continuous_at_overdamping_threshold() {
        let m = drude(0.1);
        let g = Geometry::new(1.0).unwrap();
        let kstar = overdamping_threshold(g, &m).unwrap();
        let lam = cutoff(1.0);
        let term = |k: f64| {
            let (p, mi) = branch_pair(k, 1.0, &m);
            p.term_sum(lam) + mi.term_sum(lam)
        };
        let below = term(kstar * (1.0 - 1e-9));
        let above = term(kstar * (1.0 + 1e-9));
        assert_abs_diff_eq!(below, above, epsilon = 1e-8);
    }
}
