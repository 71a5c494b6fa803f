//! Turns a source specification into a grid.

use crate::args::{FunctionKind, SourceArgs};
use crate::CliError;
use monotonicity::io::parse_csv_grid;
use monotonicity::{sample, AnalyticFunction, GridFunction, SampleRule};

pub fn analytic(
    kind: FunctionKind,
    domain: f64,
    alpha: Option<f64>,
    value: f64,
) -> Result<AnalyticFunction, CliError> {
    match kind {
        FunctionKind::Sin => Ok(AnalyticFunction::Sin { scale: domain }),
        FunctionKind::Cos => Ok(AnalyticFunction::Cos { scale: domain }),
        FunctionKind::Halpha => {
            let alpha = alpha
                .ok_or_else(|| CliError::Input("--alpha is required for halpha".to_string()))?;
            Ok(AnalyticFunction::HAlpha { alpha })
        }
        FunctionKind::Constant => Ok(AnalyticFunction::Constant { value }),
    }
}

/// Builds the grid named by `--function ...` or `--csv ...`, with the
/// domain length resolved as: explicit `--M`, else the spacing inferred
/// from a two-column CSV, else 1.
pub fn grid_from_source(source: &SourceArgs) -> Result<GridFunction, CliError> {
    if let Some(path) = &source.csv {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let parsed = parse_csv_grid(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let domain = source.domain.or(parsed.inferred_domain).unwrap_or(1.0);
        GridFunction::new(parsed.values, domain, SampleRule::Midpoint)
            .map_err(|e| CliError::Input(e.to_string()))
    } else {
        let kind = source.function.expect("clap requires a source");
        let n = source
            .n
            .ok_or_else(|| CliError::Input("--n is required for built-in functions".to_string()))?;
        let domain = source.domain.unwrap_or(1.0);
        let f = analytic(kind, domain, source.alpha, source.value)?;
        let grid = sample(&f, n, source.rule.into()).map_err(|e| CliError::Input(e.to_string()))?;
        grid.with_domain_length(domain)
            .map_err(|e| CliError::Input(e.to_string()))
    }
}
