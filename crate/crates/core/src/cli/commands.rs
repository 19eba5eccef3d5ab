use rayon::prelude::*;

use super::format::{input, value, Format, Table, ERR};
use super::{BoundArgs, CompareArgs, PointArgs, Report, ScanArgs, Status, TableArgs};
use crate::model::{transformed_params, Channel, PotentialParams};
use crate::oracle::{oracle_delta_approx, oracle_delta_exact, IntegrationConfig, OraclePhase};
use crate::phaseshift::{
    bound_states, delta_l, hypergeom_solution, table_sweep, wrap_pi, AngleUnit, TableGrid,
};
use crate::oracle::shooting_bound_states;
use crate::reference::published_delta;
use crate::{Complex64, Error};

/// |x − y| reduced mod π.
fn diff_mod_pi(x: f64, y: f64) -> f64 {
    wrap_pi(2.0 * (x - y)).abs() / 2.0
}

fn validate_axes(v0: &super::PotentialArgs, alphas: &[f64], a_values: &[f64]) -> Result<(), Error> {
    for &alpha in alphas {
        for &a in a_values {
            v0.params(a, alpha)?;
        }
    }
    Ok(())
}

fn validate_ks(ls: &[u32], ks: &[f64]) -> Result<(), Error> {
    if ks.is_empty() {
        return Err(Error::InvalidParameter("empty k list".into()));
    }
    for &l in ls {
        for &k in ks {
            Channel::new(l, k)?;
        }
    }
    Ok(())
}

pub fn cmd_table(args: &TableArgs) -> Report {
    let grid = TableGrid::published();
    if let Err(e) = validate_axes(&args.potential, &grid.alphas, &grid.a_values) {
        return Report::usage(e);
    }
    let base = match args.potential.params(0.0, grid.alphas[0]) {
        Ok(p) => p,
        Err(e) => return Report::usage(e),
    };
    let cells = table_sweep(&base, &grid, args.unit);
    let lookup = |l: u32, a: f64, k: f64, alpha: f64| {
        cells
            .iter()
            .find(|c| c.l == l && c.a == a && c.k == k && c.alpha == alpha)
            .map(|c| c.result.as_ref().map(|r| r.delta_l))
    };
    let fmt = args.format;
    let mut status = Status::Success;
    let mut worst: Option<(f64, u32, f64, f64, f64)> = None;
    let mut text = String::new();
    let mut csv = Table::new(["l", "k", "alpha", "delta_A0", "delta_A5"]);
    if args.diff_published {
        csv.header.extend(["diff_A0".to_string(), "diff_A5".to_string()]);
    }
    for &l in &grid.ls {
        let mut md = Table::new(["k", "α", "δ (A = 0)", "δ (A = 5)"]);
        if args.diff_published {
            md.header.extend(["Δ (A = 0)".to_string(), "Δ (A = 5)".to_string()]);
        }
        for &k in &grid.ks {
            for &alpha in &grid.alphas {
                let mut row = vec![input(k), input(alpha)];
                let mut diffs = Vec::new();
                for &a in &grid.a_values {
                    match lookup(l, a, k, alpha) {
                        Some(Ok(d)) => {
                            row.push(value(d, fmt));
                            let published = published_delta(l, k, alpha, a).map(|p| args.unit.from_radians(p));
                            match published {
                                Some(p) => {
                                    let diff = d - p;
                                    if worst.is_none_or(|w| diff.abs() > w.0) {
                                        worst = Some((diff.abs(), l, k, alpha, a));
                                    }
                                    diffs.push(value(diff, fmt));
                                }
                                None => diffs.push(String::from("n/a")),
                            }
                        }
                        _ => {
                            status = status.max(Status::Numerical);
                            row.push(ERR.into());
                            diffs.push(ERR.into());
                        }
                    }
                }
                if args.diff_published {
                    row.extend(diffs);
                }
                let mut csv_row = vec![l.to_string()];
                csv_row.extend(row.iter().cloned());
                csv.push(csv_row);
                md.push(row);
            }
        }
        if fmt == Format::Markdown {
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&format!("l = {l}, V0 = {}, unit = {}\n\n", input(args.potential.v0), args.unit));
            text.push_str(&md.render(fmt));
        }
    }
    if fmt == Format::Csv {
        text = csv.render(fmt);
    }
    let mut notes = String::new();
    if args.diff_published {
        match worst {
            Some((d, l, k, alpha, a)) => {
                notes.push_str(&format!(
                    "max |diff| = {} {} at l = {l}, k = {}, alpha = {}, A = {} (tol {})\n",
                    value(d, fmt),
                    args.unit,
                    input(k),
                    input(alpha),
                    input(a),
                    input(args.tol)
                ));
                if !(d <= args.tol) {
                    status = status.max(Status::ToleranceExceeded);
                }
            }
            None => notes.push_str("no cell could be compared\n"),
        }
    }
    Report { text, notes, status }
}

pub fn cmd_scan(args: &ScanArgs) -> Report {
    let Some(ks) = args.k.values() else {
        return Report::usage("scan needs --k or --k-range");
    };
    if args.a.is_empty() {
        return Report::usage("scan needs at least one --A value");
    }
    if let Err(e) = validate_axes(&args.potential, &[args.alpha], &args.a).and(validate_ks(&[args.l], &ks)) {
        return Report::usage(e);
    }
    let points: Vec<(f64, f64)> = ks.iter().flat_map(|&k| args.a.iter().map(move |&a| (k, a))).collect();
    let deltas: Vec<crate::Result<f64>> = points
        .par_iter()
        .map(|&(k, a)| {
            let p = args.potential.params(a, args.alpha)?;
            let ch = Channel::new(args.l, k)?;
            Ok(delta_l(&p, &ch, args.unit)?.delta_l)
        })
        .collect();
    let mut header = vec!["k".to_string()];
    header.extend(args.a.iter().map(|&a| format!("delta_l_A{}", input(a))));
    let mut table = Table::new(header);
    let mut status = Status::Success;
    for (i, &k) in ks.iter().enumerate() {
        let mut row = vec![input(k)];
        for d in &deltas[i * args.a.len()..(i + 1) * args.a.len()] {
            match d {
                Ok(v) => row.push(value(*v, args.format)),
                Err(_) => {
                    status = Status::Numerical;
                    row.push(ERR.into());
                }
            }
        }
        table.push(row);
    }
    Report {
        text: table.render(args.format),
        notes: String::new(),
        status,
    }
}

fn oracle_config(p: &PotentialParams, ch: &Channel, step: Option<f64>, r_max: Option<f64>) -> IntegrationConfig {
    match r_max {
        Some(r) => IntegrationConfig::with_extent(p, ch, r, step),
        None => {
            let mut cfg = IntegrationConfig::for_channel(p, ch);
            if let Some(h) = step {
                cfg.step = h;
                cfg.min_step = h / 16.0;
            }
            cfg
        }
    }
}

struct CompareRow {
    analytic: crate::Result<f64>,
    approx: crate::Result<OraclePhase>,
    exact: crate::Result<OraclePhase>,
}

pub fn cmd_compare(args: &CompareArgs) -> Report {
    let published = TableGrid::published();
    let pick = |given: &Vec<f64>, default: &Vec<f64>| if given.is_empty() { default.clone() } else { given.clone() };
    let grid = TableGrid {
        ls: if args.l.is_empty() { published.ls.clone() } else { args.l.clone() },
        a_values: pick(&args.a, &published.a_values),
        ks: args.k.values().unwrap_or_else(|| published.ks.clone()),
        alphas: pick(&args.alpha, &published.alphas),
    };
    if let Err(e) = validate_axes(&args.potential, &grid.alphas, &grid.a_values).and(validate_ks(&grid.ls, &grid.ks)) {
        return Report::usage(e);
    }
    for v in [args.oracle_step, args.oracle_rmax].into_iter().flatten() {
        if !(v > 0.0 && v.is_finite()) {
            return Report::usage(format!("oracle step and radius must be finite and > 0, got {v}"));
        }
    }
    let points = grid.points();
    let rows: Vec<CompareRow> = points
        .par_iter()
        .map(|&(l, a, k, alpha)| {
            let setup = args.potential.params(a, alpha).and_then(|p| Ok((p, Channel::new(l, k)?)));
            match setup {
                Ok((p, ch)) => {
                    let cfg = oracle_config(&p, &ch, args.oracle_step, args.oracle_rmax);
                    CompareRow {
                        analytic: delta_l(&p, &ch, AngleUnit::Radians).map(|r| r.delta_l),
                        approx: oracle_delta_approx(&p, &ch, &cfg),
                        exact: oracle_delta_exact(&p, &ch, &cfg),
                    }
                }
                Err(e) => CompareRow {
                    analytic: Err(e.clone()),
                    approx: Err(e.clone()),
                    exact: Err(e),
                },
            }
        })
        .collect();
    let fmt = args.format;
    let unit = args.unit;
    let mut table = Table::new([
        "l",
        "A",
        "k",
        "alpha",
        "delta",
        "delta_num_approx",
        "delta_num_exact",
        "diff_approx",
        "diff_exact",
        "halving_change_rad",
    ]);
    let mut status = Status::Success;
    let mut worst_approx: Option<(f64, usize)> = None;
    let mut worst_exact: Option<(f64, usize)> = None;
    let mut worst_halving = 0.0_f64;
    let mut unconverged = 0usize;
    let cell = |r: Option<f64>| r.map(|v| value(unit.from_radians(v), fmt)).unwrap_or_else(|| ERR.into());
    for (i, (&(l, a, k, alpha), row)) in points.iter().zip(&rows).enumerate() {
        let analytic = row.analytic.as_ref().ok().copied();
        let approx = row.approx.as_ref().ok();
        let exact = row.exact.as_ref().ok();
        if analytic.is_none() || approx.is_none() || exact.is_none() {
            status = status.max(Status::Numerical);
        }
        let d_approx = analytic.zip(approx).map(|(x, o)| diff_mod_pi(x, o.delta));
        let d_exact = analytic.zip(exact).map(|(x, o)| diff_mod_pi(x, o.delta));
        if let Some(d) = d_approx {
            if worst_approx.is_none_or(|w| d > w.0) {
                worst_approx = Some((d, i));
            }
        }
        if let Some(d) = d_exact {
            if worst_exact.is_none_or(|w| d > w.0) {
                worst_exact = Some((d, i));
            }
        }
        let mut halving = None;
        for o in [approx, exact].into_iter().flatten() {
            worst_halving = worst_halving.max(o.halving_change);
            halving = Some(halving.unwrap_or(0.0_f64).max(o.halving_change));
            if !o.converged {
                unconverged += 1;
            }
        }
        table.push(vec![
            l.to_string(),
            input(a),
            input(k),
            input(alpha),
            cell(analytic),
            cell(approx.map(|o| o.delta)),
            cell(exact.map(|o| o.delta)),
            cell(d_approx),
            cell(d_exact),
            halving.map(|h| format!("{h:.2e}")).unwrap_or_else(|| ERR.into()),
        ]);
    }
    let at = |i: usize| {
        let (l, a, k, alpha) = points[i];
        format!("l = {l}, A = {}, k = {}, alpha = {}", input(a), input(k), input(alpha))
    };
    let mut notes = String::new();
    match worst_approx {
        Some((d, i)) => {
            let d = unit.from_radians(d);
            notes.push_str(&format!(
                "max |delta - delta_num_approx| mod pi = {} {unit} at {} (tol {})\n",
                value(d, fmt),
                at(i),
                input(args.tol)
            ));
            if !(d <= args.tol) {
                status = status.max(Status::ToleranceExceeded);
            }
        }
        None => notes.push_str("no approximated-equation integration succeeded\n"),
    }
    if let Some((d, i)) = worst_exact {
        notes.push_str(&format!(
            "max |delta - delta_num_exact| mod pi = {} {unit} at {}\n",
            value(unit.from_radians(d), fmt),
            at(i)
        ));
    }
    notes.push_str(&format!("max step-halving change = {worst_halving:.2e} rad"));
    if unconverged > 0 {
        notes.push_str(&format!(", {unconverged} integrations stopped at the minimum step"));
    }
    notes.push('\n');
    Report {
        text: table.render(fmt),
        notes,
        status,
    }
}

pub fn cmd_bound_states(args: &BoundArgs) -> Report {
    let p = match args.potential.params(args.a, args.alpha) {
        Ok(p) => p,
        Err(e) => return Report::usage(e),
    };
    let fmt = args.format;
    let mut status = Status::Success;
    let mut text = String::new();
    let mut csv = Table::new(["l", "n", "energy_pole", "energy_shooting", "rel_diff"]);
    for &l in &args.l {
        let pole = match bound_states(&p, l, args.n_max) {
            Ok(v) => v,
            Err(Error::NoBracket { .. } | Error::NoneFound) => Vec::new(),
            Err(e) => {
                status = Status::Numerical;
                text.push_str(&format!("l = {l}: {e}\n"));
                continue;
            }
        };
        let shooting = match shooting_bound_states(&p, l, true, args.n_max) {
            Ok(v) => v,
            Err(Error::NoneFound) => Vec::new(),
            Err(e) => {
                status = Status::Numerical;
                text.push_str(&format!("l = {l}: {e}\n"));
                continue;
            }
        };
        let levels = pole.len().max(shooting.len());
        let mut md = Table::new(["n", "E (pole)", "E (shooting)", "rel. diff"]);
        for n in 0..levels {
            let e1 = pole.get(n).map(|s| s.energy);
            let e2 = shooting.get(n).map(|s| s.energy);
            let show = |e: Option<f64>| e.map(|v| value(v, fmt)).unwrap_or_else(|| "n/a".into());
            let rel = e1
                .zip(e2)
                .map(|(a, b)| format!("{:.2e}", ((a - b) / a).abs()))
                .unwrap_or_else(|| "n/a".into());
            let row = vec![n.to_string(), show(e1), show(e2), rel];
            let mut csv_row = vec![l.to_string()];
            csv_row.extend(row.iter().cloned());
            csv.push(csv_row);
            md.push(row);
        }
        if fmt == Format::Markdown {
            if !text.is_empty() {
                text.push('\n');
            }
            if levels == 0 {
                text.push_str(&format!("l = {l}: no bound states\n"));
            } else {
                text.push_str(&format!("l = {l}\n\n"));
                text.push_str(&md.render(fmt));
            }
        }
    }
    let mut notes = String::new();
    if fmt == Format::Csv {
        if csv.rows.is_empty() {
            notes.push_str("no bound states\n");
        }
        text = csv.render(fmt) + &text;
    }
    Report { text, notes, status }
}

fn complex(z: Complex64, fmt: Format) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}i", value(z.re, fmt), value(z.im.abs(), fmt))
}

pub fn cmd_point(args: &PointArgs) -> Report {
    let setup = args.potential.params(args.a, args.alpha).and_then(|p| Ok((p, Channel::new(args.l, args.k)?)));
    let (p, ch) = match setup {
        Ok(v) => v,
        Err(e) => return Report::usage(e),
    };
    let fmt = args.format;
    let r = match delta_l(&p, &ch, args.unit) {
        Ok(r) => r,
        Err(e) => {
            return Report {
                text: String::new(),
                notes: format!("error: {e}\n"),
                status: Status::Numerical,
            }
        }
    };
    let t = transformed_params(&p, &ch);
    let s = hypergeom_solution(&p, &ch);
    let exact = |v: f64| match fmt {
        Format::Csv => value(v, fmt),
        Format::Markdown => input(v),
    };
    let rows: Vec<(&str, String)> = vec![
        ("l", ch.l.to_string()),
        ("k", input(ch.k)),
        ("alpha", input(p.alpha)),
        ("V0", input(p.v0)),
        ("A", input(p.a)),
        ("mu", input(p.mu)),
        ("hbar", input(p.hbar)),
        ("unit", args.unit.to_string()),
        ("sigma", exact(t.sigma)),
        ("zeta1", exact(t.zeta1)),
        ("zeta2", exact(t.zeta2)),
        ("zeta3", exact(t.zeta3)),
        ("sqrt_zeta1", complex(t.sqrt_zeta1, Format::Csv)),
        ("a_star", complex(s.a_star, Format::Csv)),
        ("b_star", complex(s.b_star, Format::Csv)),
        ("arg_gamma_eta1_star", value(r.terms.eta1_star, fmt)),
        ("arg_gamma_eta2_star", value(r.terms.eta2_star, fmt)),
        ("arg_gamma_a_star", value(r.terms.a_star, fmt)),
        ("arg_gamma_b_star", value(r.terms.b_star, fmt)),
        ("theta_l", value(r.theta_l, fmt)),
        ("theta_l_free", value(r.theta_l_free, fmt)),
        ("delta_l", value(r.delta_l, fmt)),
    ];
    let mut table = Table::new(["quantity", "value"]);
    for (name, v) in rows {
        table.push(vec![name.to_string(), v]);
    }
    Report {
        text: table.render(fmt),
        notes: String::new(),
        status: Status::Success,
    }
}
