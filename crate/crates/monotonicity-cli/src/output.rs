//! Rendering of reports, tables, and curves.
//!
//! JSON and CSV carry 17 significant digits — enough to reconstruct every
//! f64 bit for bit, so parsing our own output and re-rendering it yields
//! identical bytes. Text mode rounds to 4 decimals, the precision the
//! built-in tables are quoted at.

use crate::args::OutputFormat;
use monotonicity::{
    cumulative_pair, rearrange, ConvergenceRun, GridFunction, IndexReport,
};
use std::fmt::Write;

/// 17 significant digits in exponent form; a valid JSON number.
pub fn full_precision(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn render_index(report: &IndexReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!(
            "{{\"index_I\": {}, \"index_L\": {}, \"n\": {}, \"M\": {}}}\n",
            full_precision(report.index_i),
            full_precision(report.index_l),
            report.n,
            full_precision(report.domain_length),
        ),
        OutputFormat::Csv => format!(
            "index_I,index_L,n,M\n{},{},{},{}\n",
            full_precision(report.index_i),
            full_precision(report.index_l),
            report.n,
            full_precision(report.domain_length),
        ),
        OutputFormat::Text => format!(
            "index_I = {:.4}\nindex_L = {:.4}\nn = {}\nM = {:.4}\n",
            report.index_i, report.index_l, report.n, report.domain_length,
        ),
    }
}

/// One domain row of the built-in tables.
pub struct TableRow {
    pub label: &'static str,
    pub domain: f64,
    /// [I_sin, I_cos, L_sin, L_cos] on the unit domain.
    pub unit: [f64; 4],
    /// The same cells scaled to [0, M].
    pub scaled: [f64; 4],
}

pub fn render_table(rows: &[TableRow], n: usize, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            let header = format!(
                "{:>8} {:>10} {:>10} {:>10} {:>10}\n",
                "M", "I[sin]", "I[cos]", "L[sin]", "L[cos]"
            );
            let _ = writeln!(out, "Indices of sin(tM) and cos(tM) on [0, 1], n = {n}\n");
            out.push_str(&header);
            for row in rows {
                let [i_sin, i_cos, l_sin, l_cos] = row.unit;
                let _ = writeln!(
                    out,
                    "{:>8} {:>10.4} {:>10.4} {:>10.4} {:>10.4}",
                    row.label, i_sin, i_cos, l_sin, l_cos
                );
            }
            let _ = writeln!(out, "\nIndices of sin(t) and cos(t) on [0, M], n = {n}\n");
            out.push_str(&header);
            for row in rows {
                let [i_sin, i_cos, l_sin, l_cos] = row.scaled;
                let _ = writeln!(
                    out,
                    "{:>8} {:>10.4} {:>10.4} {:>10.4} {:>10.4}",
                    row.label, i_sin, i_cos, l_sin, l_cos
                );
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("table,M,index_I_sin,index_I_cos,index_L_sin,index_L_cos\n");
            for (name, cells) in [("unit", true), ("scaled", false)] {
                for row in rows {
                    let [i_sin, i_cos, l_sin, l_cos] = if cells { row.unit } else { row.scaled };
                    let _ = writeln!(
                        out,
                        "{name},{},{i_sin:.4},{i_cos:.4},{l_sin:.4},{l_cos:.4}",
                        full_precision(row.domain)
                    );
                }
            }
            out
        }
        OutputFormat::Json => {
            let mut entries = Vec::new();
            for (name, cells) in [("unit", true), ("scaled", false)] {
                for row in rows {
                    let [i_sin, i_cos, l_sin, l_cos] = if cells { row.unit } else { row.scaled };
                    entries.push(format!(
                        "{{\"table\": \"{name}\", \"M\": {}, \"index_I_sin\": {i_sin:.4}, \
                         \"index_I_cos\": {i_cos:.4}, \"index_L_sin\": {l_sin:.4}, \
                         \"index_L_cos\": {l_cos:.4}}}",
                        full_precision(row.domain)
                    ));
                }
            }
            format!("{{\"n\": {n}, \"rows\": [{}]}}\n", entries.join(", "))
        }
    }
}

/// Plot-ready curves, one row per cell at the cell midpoint: the step
/// function, its rearrangement, and the two cumulative integrals (which
/// are piecewise linear, so their midpoint values average the adjacent
/// prefix entries).
pub fn render_rearrange(g: &GridFunction) -> String {
    let sorted = rearrange(g);
    let pair = cumulative_pair(g);
    let n = g.len();
    let m = g.domain_length();
    let mut out = String::from("t,h,rearranged,H,convex_rearranged\n");
    for i in 0..n {
        let t = (i as f64 + 0.5) * m / n as f64;
        let cumulative_mid = 0.5 * (pair.cumulative()[i] + pair.cumulative()[i + 1]);
        let convex_mid = 0.5 * (pair.convex()[i] + pair.convex()[i + 1]);
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            full_precision(t),
            full_precision(g.values()[i]),
            full_precision(sorted.sorted_values()[i]),
            full_precision(cumulative_mid),
            full_precision(convex_mid),
        );
    }
    out
}

pub fn render_converge(run: &ConvergenceRun, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = format!(
                "{:>10} {:>12} {:>12} {:>12} {:>12}\n",
                "n", "index_I", "index_L", "gap_I", "gap_L"
            );
            for step in &run.steps {
                let gap = |g: Option<f64>| match g {
                    Some(g) => format!("{g:.4e}"),
                    None => "-".to_string(),
                };
                let _ = writeln!(
                    out,
                    "{:>10} {:>12.4} {:>12.4} {:>12} {:>12}",
                    step.n,
                    step.index_i,
                    step.index_l,
                    gap(step.gap_i),
                    gap(step.gap_l),
                );
            }
            let doublings = run.steps.len() - 1;
            if run.converged {
                let _ = writeln!(out, "converged after {doublings} doubling(s)");
            } else {
                let _ = writeln!(out, "not converged after {doublings} doubling(s)");
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,index_I,index_L,gap_I,gap_L,status\n");
            let last = run.steps.len() - 1;
            for (row, step) in run.steps.iter().enumerate() {
                let gap = |g: Option<f64>| g.map(full_precision).unwrap_or_default();
                let status = if row < last {
                    ""
                } else if run.converged {
                    "converged"
                } else {
                    "unconverged"
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{status}",
                    step.n,
                    full_precision(step.index_i),
                    full_precision(step.index_l),
                    gap(step.gap_i),
                    gap(step.gap_l),
                );
            }
            out
        }
        OutputFormat::Json => {
            let steps: Vec<String> = run
                .steps
                .iter()
                .map(|step| {
                    let gap = |g: Option<f64>| {
                        g.map(full_precision).unwrap_or_else(|| "null".to_string())
                    };
                    format!(
                        "{{\"n\": {}, \"index_I\": {}, \"index_L\": {}, \"gap_I\": {}, \"gap_L\": {}}}",
                        step.n,
                        full_precision(step.index_i),
                        full_precision(step.index_l),
                        gap(step.gap_i),
                        gap(step.gap_l),
                    )
                })
                .collect();
            format!(
                "{{\"converged\": {}, \"steps\": [{}]}}\n",
                run.converged,
                steps.join(", ")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_precision_round_trips_exactly() {
        for x in [
            0.0,
            1.0,
            -1.0,
            std::f64::consts::PI,
            4.0 / 3.0,
            1.2732395447351628,
            6.02e23,
            -2.5e-308,
        ] {
            let rendered = full_precision(x);
            let parsed: f64 = rendered.parse().unwrap();
            assert_eq!(parsed.to_bits(), x.to_bits(), "{rendered}");
            assert_eq!(full_precision(parsed), rendered);
        }
    }
}
