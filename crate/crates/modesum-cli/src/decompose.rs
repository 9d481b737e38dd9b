//! The `decompose` subcommand: one table row per mode-class quantity.

use modesum::eddy::{eddy_energy_t0, eddy_free_energy_high_t, plasma_high_t_te_reference};
use modesum::lifshitz::{casimir_energy_t0, free_energy_t};
use modesum::params::{ideal_casimir_energy_per_area, reduction_factor};
use modesum::plasmon::{plasmon_energy, plasmon_energy_asymptotic};
use modesum::reflection::Polarization;

use crate::config::{to_si_energy, RunConfig};
use crate::CliError;

struct Row {
    label: String,
    value: Option<f64>,
    tol: Option<f64>,
    note: String,
}

pub fn run(cfg: &RunConfig) -> Result<String, CliError> {
    let run = cfg.to_internal().map_err(CliError::Usage)?;
    let (m, g, cutoff, quad) = (run.material, run.geometry, run.cutoff, run.quad);
    let mut rows: Vec<Row> = Vec::new();

    let ideal = ideal_casimir_energy_per_area(g);
    rows.push(Row { label: "ideal Casimir".into(), value: Some(ideal), tol: None, note: String::new() });

    let lifshitz = casimir_energy_t0(g, &m, &quad)?;
    rows.push(Row {
        label: "Lifshitz total (T=0)".into(),
        value: Some(lifshitz.total),
        tol: Some(lifshitz.achieved_tol),
        note: String::new(),
    });
    rows.push(Row {
        label: "Lifshitz TE".into(),
        value: Some(lifshitz.te),
        tol: Some(lifshitz.achieved_tol),
        note: String::new(),
    });
    rows.push(Row {
        label: "Lifshitz TM".into(),
        value: Some(lifshitz.tm),
        tol: Some(lifshitz.achieved_tol),
        note: String::new(),
    });

    let plasmon = plasmon_energy(g, &m, cutoff, &quad)?;
    rows.push(Row {
        label: "surface plasmons (mode sum)".into(),
        value: Some(plasmon.value),
        tol: Some(plasmon.achieved_rel_tol),
        note: String::new(),
    });
    rows.push(Row {
        label: "plasmons, short-distance form".into(),
        value: Some(plasmon_energy_asymptotic(g, &m)),
        tol: None,
        note: String::new(),
    });

    let no_cut = !m.is_dissipative();
    let eddy_note = |base: &str| {
        if no_cut {
            format!("{base}no cut")
        } else {
            base.trim_end_matches(", ").to_string()
        }
    };
    let eddy_te = eddy_energy_t0(Polarization::TE, g, &m, cutoff, &quad)?;
    let eddy_tm = eddy_energy_t0(Polarization::TM, g, &m, cutoff, &quad)?;
    rows.push(Row {
        label: format!("eddy currents TE (T=0, Lambda={:.3e})", cutoff.lambda_cut),
        value: Some(eddy_te.value),
        tol: Some(eddy_te.achieved_tol),
        note: eddy_note(""),
    });
    rows.push(Row {
        label: format!("eddy currents TM (T=0, Lambda={:.3e})", cutoff.lambda_cut),
        value: Some(eddy_tm.value),
        tol: Some(eddy_tm.achieved_tol),
        note: eddy_note(""),
    });

    let residual = lifshitz.total - plasmon.value - eddy_te.value - eddy_tm.value;
    rows.push(Row {
        label: "residual (propagating + remainder)".into(),
        value: Some(residual),
        tol: None,
        note: "total - plasmon - eddy".into(),
    });

    if let Some(t) = run.temperature {
        let classical_warn = if t.t < m.gamma {
            "WARN: k_B T < hbar*gamma, classical limit doubtful, "
        } else {
            ""
        };
        let fe_te = eddy_free_energy_high_t(Polarization::TE, g, &m, t, &quad)?;
        let fe_tm = eddy_free_energy_high_t(Polarization::TM, g, &m, t, &quad)?;
        rows.push(Row {
            label: "eddy currents TE (high-T free energy)".into(),
            value: Some(fe_te.value),
            tol: Some(fe_te.achieved_tol),
            note: eddy_note(classical_warn),
        });
        rows.push(Row {
            label: "eddy currents TM (high-T free energy)".into(),
            value: Some(fe_tm.value),
            tol: Some(fe_tm.achieved_tol),
            note: eddy_note(classical_warn),
        });
        let plasma_ref = plasma_high_t_te_reference(g, &m, t, &quad)?;
        rows.push(Row {
            label: "plasma-model TE reference (high-T)".into(),
            value: Some(plasma_ref.value),
            tol: Some(plasma_ref.achieved_rel_tol),
            note: String::new(),
        });
        let free = free_energy_t(g, &m, t, &quad)?;
        rows.push(Row {
            label: "Matsubara free energy (total)".into(),
            value: Some(free.total),
            tol: Some(free.achieved_tol),
            note: String::new(),
        });
        rows.push(Row {
            label: "Matsubara free energy TE".into(),
            value: Some(free.te),
            tol: Some(free.achieved_tol),
            note: String::new(),
        });
    }

    // render
    let mut out = String::new();
    out.push_str(&format!(
        "# omega_p = {:.6e} rad/s, gamma/omega_p = {:.6e}, L = {:.6e} c/omega_p (L/lambda_p = {:.6e})\n",
        cfg.omega_p_rad_s,
        m.gamma,
        g.l,
        g.l / m.lambda_p(),
    ));
    if let Some(t) = run.temperature {
        out.push_str(&format!("# k_B T / (hbar omega_p) = {:.6e}\n", t.t));
    }
    out.push_str(&format!(
        "{:<42} {:>14} {:>14} {:>11} {:>10}  {}\n",
        "quantity", "E [hw_p^3/c^2]", "E [J/m^2]", "eta", "tol", "note"
    ));
    for r in rows {
        let (vs, si, eta) = match r.value {
            Some(v) => (
                format!("{v:+.6e}"),
                format!("{:+.6e}", to_si_energy(v, cfg)),
                format!("{:+.4e}", reduction_factor(v, g)),
            ),
            None => ("-".into(), "-".into(), "-".into()),
        };
        let tol = r.tol.map_or("-".to_string(), |t| format!("{t:.1e}"));
        out.push_str(&format!(
            "{:<42} {:>14} {:>14} {:>11} {:>10}  {}\n",
            r.label, vs, si, eta, tol, r.note
        ));
    }
    Ok(out)
}
