//! Run configuration: SI-facing inputs, the flat `key = value` config file
//! format, and the conversion to internal (natural) units.
//!
//! The file format is line based: `[section]` headers, `key = value`
//! pairs, `#` comments. Floats are written with 17 significant digits so
//! that a serialize/parse round trip is bit faithful.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use modesum::params::{
    self, ev_to_rad_s, frequency_to_internal, length_to_internal, temperature_to_internal,
};
use modesum::{CutoffLambda, Geometry, MaterialModel, MaterialParams, QuadratureConfig,
    Temperature};

/// Mirror separation, as provided by the user.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistanceSpec {
    /// Absolute separation in meters.
    Meters(f64),
    /// Dimensionless `L / lambda_p`.
    Ratio(f64),
}

/// Everything a run needs, in user-facing units.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Plasma angular frequency, rad/s.
    pub omega_p_rad_s: f64,
    /// Damping rate, rad/s (0 for the plasma model).
    pub gamma_rad_s: f64,
    pub model: MaterialModel,
    /// Mirror separation; must be provided (by flag or config file).
    pub distance: Option<DistanceSpec>,
    /// Temperature in kelvin; `None` runs zero-temperature quantities only.
    pub temperature_k: Option<f64>,
    /// Bath cutoff in units of gamma (falls back to omega_p when gamma = 0).
    pub lambda_over_gamma: f64,
    /// Override of the quadrature relative tolerance.
    pub rel_tol: Option<f64>,
    /// Output path for tables/CSV; stdout when absent.
    pub out: Option<PathBuf>,
    /// Worker budget for sweeps.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            omega_p_rad_s: 1.37e16,
            gamma_rad_s: 0.0,
            model: MaterialModel::Plasma,
            distance: None,
            temperature_k: None,
            lambda_over_gamma: 10.0,
            rel_tol: None,
            out: None,
            jobs: 1,
        }
    }
}

/// Internal-unit bundle handed to the library.
#[derive(Debug, Clone)]
pub struct InternalRun {
    pub material: MaterialParams,
    pub geometry: Geometry,
    pub temperature: Option<Temperature>,
    pub cutoff: CutoffLambda,
    pub quad: QuadratureConfig,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.omega_p_rad_s > 0.0) {
            return Err(format!("material.omega_p must be positive, got {}", self.omega_p_rad_s));
        }
        if !(self.gamma_rad_s >= 0.0) {
            return Err(format!("material.gamma must be non-negative, got {}", self.gamma_rad_s));
        }
        if self.model == MaterialModel::Plasma && self.gamma_rad_s != 0.0 {
            return Err("material.model = plasma requires gamma = 0".to_string());
        }
        match self.distance {
            None => {
                return Err(
                    "missing separation: give --distance / --distance-ratio (or \
                     geometry.distance_m / geometry.distance_ratio in the config file)"
                        .to_string(),
                );
            }
            Some(DistanceSpec::Meters(l)) if !(l > 0.0) => {
                return Err(format!("geometry.distance must be positive, got {l}"));
            }
            Some(DistanceSpec::Ratio(r)) if !(r > 0.0) => {
                return Err(format!("geometry.distance_ratio must be positive, got {r}"));
            }
            _ => {}
        }
        if let Some(t) = self.temperature_k {
            if !(t > 0.0) {
                return Err(format!("temperature must be positive, got {t}"));
            }
        }
        if !(self.lambda_over_gamma > 0.0) {
            return Err(format!("cutoff must be positive, got {}", self.lambda_over_gamma));
        }
        if let Some(rt) = self.rel_tol {
            if !(rt > 0.0) {
                return Err(format!("rel_tol must be positive, got {rt}"));
            }
        }
        if self.jobs == 0 {
            return Err("jobs must be at least 1".to_string());
        }
        Ok(())
    }

    /// Convert to natural units (`omega_p = 1`).
    pub fn to_internal(&self) -> Result<InternalRun, String> {
        self.validate()?;
        let wp = self.omega_p_rad_s;
        let gamma = frequency_to_internal(self.gamma_rad_s, wp);
        let material = match self.model {
            MaterialModel::Plasma => MaterialParams::plasma(1.0),
            MaterialModel::Drude => MaterialParams::drude(1.0, gamma),
        }
        .map_err(|e| e.to_string())?;
        let l = match self.distance.expect("validated above") {
            DistanceSpec::Meters(l_m) => length_to_internal(l_m, wp),
            DistanceSpec::Ratio(r) => r * material.lambda_p(),
        };
        let geometry = Geometry::new(l).map_err(|e| e.to_string())?;
        let temperature = match self.temperature_k {
            Some(t_k) => {
                Some(Temperature::new(temperature_to_internal(t_k, wp)).map_err(|e| e.to_string())?)
            }
            None => None,
        };
        // cutoff is specified in units of gamma; the plasma model has no
        // gamma scale, so fall back to omega_p (every plasma-model result
        // is cutoff independent anyway)
        let lambda = if gamma > 0.0 { self.lambda_over_gamma * gamma } else { 1.0 };
        let cutoff = CutoffLambda::new(lambda).map_err(|e| e.to_string())?;
        let mut quad = QuadratureConfig::default();
        if let Some(rt) = self.rel_tol {
            quad.rel_tol = rt;
        }
        Ok(InternalRun { material, geometry, temperature, cutoff, quad })
    }

    /// Serialize to the flat config format, 17 significant digits.
    #[allow(dead_code)] // the format round-trip contract is test-exercised
    pub fn to_file_format(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "[material]");
        let _ = writeln!(s, "omega_p_rad_s = {}", fmt_f64(self.omega_p_rad_s));
        let _ = writeln!(s, "gamma_rad_s = {}", fmt_f64(self.gamma_rad_s));
        let _ = writeln!(
            s,
            "model = {}",
            match self.model {
                MaterialModel::Drude => "drude",
                MaterialModel::Plasma => "plasma",
            }
        );
        let _ = writeln!(s);
        let _ = writeln!(s, "[geometry]");
        match self.distance {
            Some(DistanceSpec::Meters(l)) => {
                let _ = writeln!(s, "distance_m = {}", fmt_f64(l));
            }
            Some(DistanceSpec::Ratio(r)) => {
                let _ = writeln!(s, "distance_ratio = {}", fmt_f64(r));
            }
            None => {}
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "[temperature]");
        if let Some(t) = self.temperature_k {
            let _ = writeln!(s, "kelvin = {}", fmt_f64(t));
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "[cutoff]");
        let _ = writeln!(s, "lambda_over_gamma = {}", fmt_f64(self.lambda_over_gamma));
        let _ = writeln!(s);
        let _ = writeln!(s, "[quadrature]");
        if let Some(rt) = self.rel_tol {
            let _ = writeln!(s, "rel_tol = {}", fmt_f64(rt));
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "[output]");
        if let Some(p) = &self.out {
            let _ = writeln!(s, "path = {}", p.display());
        }
        let _ = writeln!(s, "jobs = {}", self.jobs);
        s
    }

    /// Parse the flat config format; unknown keys are errors (they are
    /// usually typos).
    pub fn from_file_format(text: &str) -> Result<Self, String> {
        let mut cfg = RunConfig::default();
        let mut saw_distance = false;
        let mut section = String::new();
        let mut entries: BTreeMap<(String, String), String> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                section = name.trim().to_string();
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value, got {line:?}", lineno + 1))?;
            entries.insert(
                (section.clone(), key.trim().to_string()),
                value.trim().to_string(),
            );
        }

        for ((section, key), value) in entries {
            let parse_f64 = |v: &str| {
                v.parse::<f64>().map_err(|_| format!("{section}.{key}: invalid number {v:?}"))
            };
            match (section.as_str(), key.as_str()) {
                ("material", "omega_p_rad_s") => cfg.omega_p_rad_s = parse_f64(&value)?,
                ("material", "gamma_rad_s") => cfg.gamma_rad_s = parse_f64(&value)?,
                ("material", "model") => {
                    cfg.model = match value.as_str() {
                        "drude" => MaterialModel::Drude,
                        "plasma" => MaterialModel::Plasma,
                        other => return Err(format!("material.model: unknown model {other:?}")),
                    }
                }
                ("geometry", "distance_m") => {
                    if saw_distance {
                        return Err("geometry: give exactly one of distance_m / distance_ratio"
                            .to_string());
                    }
                    saw_distance = true;
                    cfg.distance = Some(DistanceSpec::Meters(parse_f64(&value)?));
                }
                ("geometry", "distance_ratio") => {
                    if saw_distance {
                        return Err("geometry: give exactly one of distance_m / distance_ratio"
                            .to_string());
                    }
                    saw_distance = true;
                    cfg.distance = Some(DistanceSpec::Ratio(parse_f64(&value)?));
                }
                ("temperature", "kelvin") => cfg.temperature_k = Some(parse_f64(&value)?),
                ("cutoff", "lambda_over_gamma") => cfg.lambda_over_gamma = parse_f64(&value)?,
                ("quadrature", "rel_tol") => cfg.rel_tol = Some(parse_f64(&value)?),
                ("output", "path") => cfg.out = Some(PathBuf::from(value)),
                ("output", "jobs") => {
                    cfg.jobs = value
                        .parse::<usize>()
                        .map_err(|_| format!("output.jobs: invalid count {value:?}"))?;
                }
                (s, k) => return Err(format!("unknown config key [{s}] {k}")),
            }
        }
        Ok(cfg)
    }
}

/// 17 significant digits: enough to round-trip any f64 exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parse a frequency-like flag value: plain rad/s, or electronvolt with an
/// `eV` suffix (e.g. `9.0eV`).
pub fn parse_frequency(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if let Some(ev) = t.strip_suffix("eV").or_else(|| t.strip_suffix("ev")) {
        let v = ev
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("invalid photon energy {s:?}"))?;
        Ok(ev_to_rad_s(v))
    } else {
        t.parse::<f64>().map_err(|_| format!("invalid angular frequency {s:?} (rad/s or <x>eV)"))
    }
}

/// Internal energy per unit area -> J/m^2 for display.
pub fn to_si_energy(e: f64, cfg: &RunConfig) -> f64 {
    params::energy_per_area_to_si(e, cfg.omega_p_rad_s)
}
