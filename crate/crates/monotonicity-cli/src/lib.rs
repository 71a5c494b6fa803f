//! Command dispatch and exit-code policy for the `monotonicity` binary.
//!
//! Exit codes: 0 success, 2 input error (bad flags, unreadable or malformed
//! CSV), 3 output error (unwritable destination), 4 non-convergence.

pub mod args;
pub mod input;
pub mod output;

use std::f64::consts::PI;
use std::path::Path;

use monotonicity::{converge, report, sample, AnalyticFunction, SampleRule};
use thiserror::Error;

pub use args::{Cli, Command, FunctionKind, OutputFormat, RuleArg};
use args::{ConvergeArgs, IndexArgs, RearrangeArgs, TableArgs};
use output::TableRow;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Output(String),
    #[error(
        "not converged: doubling gaps (I {gap_i:.3e}, L {gap_l:.3e}) did not reach the tolerance"
    )]
    Unconverged { gap_i: f64, gap_l: f64 },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Output(_) => 3,
            CliError::Unconverged { .. } => 4,
        }
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Index(args) => run_index(args),
        Command::Table(args) => run_table(args),
        Command::Rearrange(args) => run_rearrange(args),
        Command::Converge(args) => run_converge(args),
    }
}

fn run_index(args: &IndexArgs) -> Result<(), CliError> {
    let grid = input::grid_from_source(&args.source)?;
    let report = report(&grid);
    write_output(
        args.output.as_deref(),
        &output::render_index(&report, args.out),
    )
}

fn run_table(args: &TableArgs) -> Result<(), CliError> {
    let rows = compute_table(args.n, args.rule.into())?;
    write_output(
        args.output.as_deref(),
        &output::render_table(&rows, args.n, args.out),
    )
}

fn run_rearrange(args: &RearrangeArgs) -> Result<(), CliError> {
    let grid = input::grid_from_source(&args.source)?;
    write_output(args.output.as_deref(), &output::render_rearrange(&grid))
}

fn run_converge(args: &ConvergeArgs) -> Result<(), CliError> {
    let f = input::analytic(
        args.function,
        args.domain.unwrap_or(1.0),
        args.alpha,
        args.value,
    )?;
    // Convergence is a property of the unit-domain estimator, so the
    // estimates are reported unscaled; --M only shapes sin/cos.
    let run = converge(&f, 1.0, args.n0, args.tol, args.max_doublings, args.rule.into())
        .map_err(|e| CliError::Input(e.to_string()))?;
    write_output(
        args.output.as_deref(),
        &output::render_converge(&run, args.out),
    )?;
    if run.converged {
        Ok(())
    } else {
        let last = run.last();
        Err(CliError::Unconverged {
            gap_i: last.gap_i.unwrap_or(f64::NAN),
            gap_l: last.gap_l.unwrap_or(f64::NAN),
        })
    }
}

/// Computes the four-domain sin/cos table at grid size `n`: unit-domain
/// cells and their [0, M] rescalings, for M in {pi/2, pi, 3pi/2, 2pi}.
pub fn compute_table(n: usize, rule: SampleRule) -> Result<Vec<TableRow>, CliError> {
    let domains = [
        ("pi/2", PI / 2.0),
        ("pi", PI),
        ("3pi/2", 1.5 * PI),
        ("2pi", 2.0 * PI),
    ];
    let mut rows = Vec::with_capacity(domains.len());
    for (label, m) in domains {
        let cell = |f: AnalyticFunction| -> Result<(f64, f64), CliError> {
            let g = sample(&f, n, rule).map_err(|e| CliError::Input(e.to_string()))?;
            let r = report(&g);
            Ok((r.index_i, r.index_l))
        };
        let (i_sin, l_sin) = cell(AnalyticFunction::Sin { scale: m })?;
        let (i_cos, l_cos) = cell(AnalyticFunction::Cos { scale: m })?;
        rows.push(TableRow {
            label,
            domain: m,
            unit: [i_sin, i_cos, l_sin, l_cos],
            scaled: [m * i_sin, m * i_cos, m * m * l_sin, m * m * l_cos],
        });
    }
    Ok(rows)
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Output(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Output(format!("cannot write to stdout: {e}")))
        }
    }
}
