//! The `sweep` subcommand: evaluate the decomposition over a parameter
//! grid and emit a fixed-column CSV.
//!
//! Column order and formats are stable so downstream diffs stay
//! meaningful. Failed points record their error in the last column and do
//! not abort the sweep. Points are evaluated concurrently up to the worker
//! budget; rows are written in grid order regardless of completion order.

use clap::ValueEnum;
use modesum::eddy::{eddy_energy_t0, eddy_free_energy_high_t, plasma_high_t_te_reference};
use modesum::lifshitz::casimir_energy_t0;
use modesum::params::ideal_casimir_energy_per_area;
use modesum::plasmon::{plasmon_energy, plasmon_energy_asymptotic};
use modesum::reflection::Polarization;
use modesum::MaterialModel;

use crate::config::{fmt_f64, DistanceSpec, RunConfig};
use crate::CliError;

pub const CSV_HEADER: &str = "param_value,E_ideal,E_total,E_total_TE,E_total_TM,E_plasmon,\
E_plasmon_asym,E_eddy_TE,E_eddy_TM,F_eddy_TE_highT,F_plasma_TE_highT,eta_total,tol_achieved,\
error_flag";

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    /// Separation (meters if the base config uses meters, else L/lambda_p)
    L,
    /// Temperature in kelvin
    T,
    /// Damping rate in rad/s
    Gamma,
    /// Bath cutoff in units of gamma
    Lambda,
}

/// Parse `log:start:stop:points` / `lin:start:stop:points`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 4 {
        return Err(format!("grid must be scale:start:stop:points, got {spec:?}"));
    }
    let start: f64 = parts[1].parse().map_err(|_| format!("bad grid start {:?}", parts[1]))?;
    let stop: f64 = parts[2].parse().map_err(|_| format!("bad grid stop {:?}", parts[2]))?;
    let n: usize = parts[3].parse().map_err(|_| format!("bad grid point count {:?}", parts[3]))?;
    if n < 2 {
        return Err(format!("grid needs at least 2 points, got {n}"));
    }
    if !(start > 0.0) || !(stop > 0.0) {
        return Err(format!("grid bounds must be positive, got {start}..{stop}"));
    }
    let step = |i: usize| i as f64 / (n - 1) as f64;
    match parts[0] {
        "lin" => Ok((0..n).map(|i| start + (stop - start) * step(i)).collect()),
        "log" => Ok((0..n).map(|i| start * (stop / start).powf(step(i))).collect()),
        other => Err(format!("grid scale must be lin or log, got {other:?}")),
    }
}

struct SweepRow {
    param_value: f64,
    fields: [Option<f64>; 10],
    eta_total: Option<f64>,
    tol: f64,
    errors: Vec<String>,
}

fn apply_param(cfg: &RunConfig, param: SweepParam, value: f64) -> RunConfig {
    let mut c = cfg.clone();
    match param {
        SweepParam::L => {
            c.distance = Some(match cfg.distance {
                Some(DistanceSpec::Meters(_)) => DistanceSpec::Meters(value),
                _ => DistanceSpec::Ratio(value),
            });
        }
        SweepParam::T => c.temperature_k = Some(value),
        SweepParam::Gamma => {
            c.gamma_rad_s = value;
            c.model = if value > 0.0 { MaterialModel::Drude } else { MaterialModel::Plasma };
        }
        SweepParam::Lambda => c.lambda_over_gamma = value,
    }
    c
}

fn evaluate_point(cfg: &RunConfig, param: SweepParam, value: f64) -> SweepRow {
    let mut row = SweepRow {
        param_value: value,
        fields: [None; 10],
        eta_total: None,
        tol: 0.0,
        errors: Vec::new(),
    };
    let point_cfg = apply_param(cfg, param, value);
    let run = match point_cfg.to_internal() {
        Ok(r) => r,
        Err(e) => {
            row.errors.push(e);
            return row;
        }
    };
    let (m, g, cutoff, quad) = (run.material, run.geometry, run.cutoff, run.quad);
    let record_err = |ctx: &str, e: modesum::Error, errors: &mut Vec<String>| {
        errors.push(format!("{ctx}: {e}").replace(',', ";"));
    };

    row.fields[0] = Some(ideal_casimir_energy_per_area(g));

    match casimir_energy_t0(g, &m, &quad) {
        Ok(b) => {
            row.fields[1] = Some(b.total);
            row.fields[2] = Some(b.te);
            row.fields[3] = Some(b.tm);
            row.eta_total = Some(b.eta);
            row.tol = row.tol.max(b.achieved_tol);
        }
        Err(e) => record_err("lifshitz", e, &mut row.errors),
    }
    match plasmon_energy(g, &m, cutoff, &quad) {
        Ok(p) => {
            row.fields[4] = Some(p.value);
            row.tol = row.tol.max(p.achieved_rel_tol);
        }
        Err(e) => record_err("plasmon", e, &mut row.errors),
    }
    row.fields[5] = Some(plasmon_energy_asymptotic(g, &m));
    match eddy_energy_t0(Polarization::TE, g, &m, cutoff, &quad) {
        Ok(r) => {
            row.fields[6] = Some(r.value);
            row.tol = row.tol.max(r.achieved_tol);
        }
        Err(e) => record_err("eddy-te", e, &mut row.errors),
    }
    match eddy_energy_t0(Polarization::TM, g, &m, cutoff, &quad) {
        Ok(r) => {
            row.fields[7] = Some(r.value);
            row.tol = row.tol.max(r.achieved_tol);
        }
        Err(e) => record_err("eddy-tm", e, &mut row.errors),
    }
    if let Some(t) = run.temperature {
        match eddy_free_energy_high_t(Polarization::TE, g, &m, t, &quad) {
            Ok(r) => {
                row.fields[8] = Some(r.value);
                row.tol = row.tol.max(r.achieved_tol);
            }
            Err(e) => record_err("eddy-highT", e, &mut row.errors),
        }
        match plasma_high_t_te_reference(g, &m, t, &quad) {
            Ok(r) => {
                row.fields[9] = Some(r.value);
                row.tol = row.tol.max(r.achieved_rel_tol);
            }
            Err(e) => record_err("plasma-ref", e, &mut row.errors),
        }
    }
    row
}

pub fn run(cfg: &RunConfig, param: SweepParam, grid: &[f64]) -> Result<String, CliError> {
    // validate the base config once (sweeping L supplies the separation)
    let probe = apply_param(cfg, param, grid[0]);
    probe.to_internal().map_err(CliError::Usage)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Numerical(format!("thread pool: {e}")))?;

    let rows: Vec<SweepRow> = pool.install(|| {
        use rayon::prelude::*;
        grid.par_iter().map(|&v| evaluate_point(cfg, param, v)).collect()
    });

    let mut out = String::with_capacity(rows.len() * 256);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_f64(row.param_value));
        for field in row.fields {
            out.push(',');
            if let Some(v) = field {
                out.push_str(&fmt_f64(v));
            }
        }
        out.push(',');
        if let Some(eta) = row.eta_total {
            out.push_str(&fmt_f64(eta));
        }
        out.push(',');
        out.push_str(&fmt_f64(row.tol));
        out.push(',');
        out.push_str(&row.errors.join("; "));
        out.push('\n');
    }
    Ok(out)
}
