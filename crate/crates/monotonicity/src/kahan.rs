//! Compensated summation (Neumaier's variant of Kahan's algorithm).
//!
//! The index estimators sum up to 10^6 terms whose weights grow with the
//! grid size; plain accumulation loses digits exactly where the table
//! reproductions need them.

/// Running sum with a separate compensation term for the lost low-order
/// bits. Works for terms of any magnitude ordering.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.compensation += (self.sum - t) + term;
        } else {
            self.compensation += (term - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}
