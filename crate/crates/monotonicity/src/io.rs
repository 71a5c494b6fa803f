//! CSV ingestion of sampled data.
//!
//! Two layouts are accepted, both UTF-8 with one row per grid cell and `.`
//! as the decimal separator:
//!
//! * one value per line — a uniform grid is assumed;
//! * `t,value` pairs — the abscissae must be strictly increasing and
//!   uniformly spaced (tolerance [`SPACING_TOLERANCE`]), and the domain
//!   length is inferred as `n · Δt`.
//!
//! Blank lines are skipped. Every error carries the 1-based source line it
//! was detected on. The estimators are only defined on uniform partitions,
//! so irregular grids are rejected rather than resampled.

use thiserror::Error;

/// Maximum deviation of any abscissa step from the mean step.
pub const SPACING_TOLERANCE: f64 = 1e-9;

/// Parse failure, pinned to the offending source line.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CsvError {
    #[error("no data rows")]
    Empty,
    #[error("line {line}: expected a number, got {token:?}")]
    InvalidNumber { line: usize, token: String },
    #[error("line {line}: expected 1 or 2 comma-separated fields, got {count}")]
    FieldCount { line: usize, count: usize },
    #[error("line {line}: mixes single-column and two-column rows")]
    MixedShape { line: usize },
    #[error("line {line}: value is not finite")]
    NonFinite { line: usize },
    #[error("line {line}: abscissae must be strictly increasing")]
    NonIncreasingAbscissa { line: usize },
    #[error("line {line}: abscissa spacing deviates from uniform by more than {SPACING_TOLERANCE}")]
    NonUniformSpacing { line: usize },
    #[error("line {line}: abscissa range does not yield a usable domain length")]
    InvalidSpacing { line: usize },
}

/// Parsed grid samples plus the domain length inferred from the abscissa
/// column, when one was present and held at least two rows.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvGrid {
    pub values: Vec<f64>,
    pub inferred_domain: Option<f64>,
}

/// Parses CSV text into grid samples.
///
/// The abscissae only fix the spacing; an offset (e.g. cell midpoints vs.
/// left endpoints, or a shifted time axis) does not change the inferred
/// domain length, matching the translation invariance of the indices.
pub fn parse_csv_grid(text: &str) -> Result<CsvGrid, CsvError> {
    let mut values = Vec::new();
    // (source line, abscissa) for two-column input.
    let mut abscissae: Vec<(usize, f64)> = Vec::new();
    let mut two_columns: Option<bool> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let row = raw.trim();
        if row.is_empty() {
            continue;
        }
        let fields: Vec<&str> = row.split(',').collect();
        let is_pair = match fields.len() {
            1 => false,
            2 => true,
            count => return Err(CsvError::FieldCount { line, count }),
        };
        match two_columns {
            None => two_columns = Some(is_pair),
            Some(shape) if shape != is_pair => {
                return Err(CsvError::MixedShape { line });
            }
            _ => {}
        }
        let parse = |token: &str| -> Result<f64, CsvError> {
            let token = token.trim();
            let number: f64 = token.parse().map_err(|_| CsvError::InvalidNumber {
                line,
                token: token.to_string(),
            })?;
            if !number.is_finite() {
                return Err(CsvError::NonFinite { line });
            }
            Ok(number)
        };
        if is_pair {
            abscissae.push((line, parse(fields[0])?));
            values.push(parse(fields[1])?);
        } else {
            values.push(parse(fields[0])?);
        }
    }

    if values.is_empty() {
        return Err(CsvError::Empty);
    }

    let inferred_domain = match two_columns {
        Some(true) if abscissae.len() >= 2 => Some(infer_domain(&abscissae)?),
        _ => None,
    };
    Ok(CsvGrid {
        values,
        inferred_domain,
    })
}

fn infer_domain(abscissae: &[(usize, f64)]) -> Result<f64, CsvError> {
    let n = abscissae.len();
    for window in abscissae.windows(2) {
        if window[1].1 <= window[0].1 {
            return Err(CsvError::NonIncreasingAbscissa { line: window[1].0 });
        }
    }
    let first_step = abscissae[1].1 - abscissae[0].1;
    if !(first_step.is_finite() && first_step > 0.0) {
        return Err(CsvError::InvalidSpacing { line: abscissae[1].0 });
    }
    for window in abscissae.windows(2) {
        // Both operands are finite differences of finite numbers, so the
        // deviation is never NaN; an overflowed step comes out infinite and
        // fails the comparison as it should.
        let step = window[1].1 - window[0].1;
        if (step - first_step).abs() > SPACING_TOLERANCE {
            return Err(CsvError::NonUniformSpacing { line: window[1].0 });
        }
    }
    // Infer the length from the whole span rather than the first step so
    // sub-tolerance jitter averages out.
    let mean_step = (abscissae[n - 1].1 - abscissae[0].1) / (n - 1) as f64;
    if !(mean_step.is_finite() && mean_step > 0.0) {
        return Err(CsvError::InvalidSpacing {
            line: abscissae[n - 1].0,
        });
    }
    let domain = mean_step * n as f64;
    if !(domain.is_finite() && domain > 0.0) {
        return Err(CsvError::InvalidSpacing {
            line: abscissae[n - 1].0,
        });
    }
    Ok(domain)
}
