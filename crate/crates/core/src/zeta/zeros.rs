use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::summation::Accumulator;

/// Certified upper bound for `Σ_ρ 1/γ²` over all nontrivial zeros.
pub const INVERSE_GAMMA_SQ_BOUND: f64 = 0.04620999;

/// Ascending positive ordinates `γ` of zeros `½ + iγ`, read from a table.
///
/// Sums over zeros taken through this type run over `γ > 0` and pair each
/// zero with its conjugate, i.e. they return `Σ 2·Re f(γ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source_label: String,
}

/// A truncated sum over conjugate pairs of zeros.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroSum {
    pub value: f64,
    pub zeros_used: usize,
    /// Estimate of `Σ 2/γ²` over the zeros left out.
    pub tail_inverse_gamma_sq: f64,
}

impl ZeroTable {
    pub fn new(ordinates: Vec<f64>, source_label: impl Into<String>) -> Result<Self> {
        let mut prev = 0.0;
        for (i, &g) in ordinates.iter().enumerate() {
            validate(i + 1, g, prev)?;
            prev = g;
        }
        Ok(ZeroTable {
            ordinates,
            source_label: source_label.into(),
        })
    }

    /// Parse one decimal ordinate per line; blank lines and lines starting
    /// with `#` are skipped.
    pub fn load<R: BufRead>(reader: R, source_label: impl Into<String>) -> Result<Self> {
        let mut ordinates = Vec::new();
        let mut prev = 0.0;
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let text = line.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let g: f64 = text.parse().map_err(|_| Error::Format {
                line: lineno,
                text: text.to_string(),
            })?;
            validate(lineno, g, prev)?;
            prev = g;
            ordinates.push(g);
        }
        let source_label = source_label.into();
        if ordinates.is_empty() {
            log::warn!("zero table {source_label:?} contains no ordinates");
        }
        Ok(ZeroTable {
            ordinates,
            source_label,
        })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path)?;
        Self::load(BufReader::new(file), path.display().to_string())
    }

    /// Check that the table plausibly starts at the first Riemann zero.
    pub fn check_riemann(&self) -> Result<()> {
        match self.ordinates.first() {
            Some(&g) if !(14.0 < g && g < 14.3) => Err(Error::Validation {
                line: 1,
                reason: format!("first ordinate {g} is not the first zeta zero (~14.1347)"),
            }),
            _ => Ok(()),
        }
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    pub fn prefix(&self, count: usize) -> Result<&[f64]> {
        self.ordinates.get(..count).ok_or(Error::Range {
            requested: count,
            available: self.ordinates.len(),
        })
    }

    /// `Σ 2·Re f(γ)` over the first `count` ordinates, with the matching
    /// truncation estimate.
    pub fn pair_sum<F>(&self, count: usize, f: F) -> Result<ZeroSum>
    where
        F: Fn(f64) -> Complex64,
    {
        let gammas = self.prefix(count)?;
        let mut acc = Accumulator::new();
        for &g in gammas {
            acc.add(2.0 * f(g).re);
        }
        Ok(ZeroSum {
            value: acc.value(),
            zeros_used: count,
            tail_inverse_gamma_sq: truncation_tail(gammas.last().copied()),
        })
    }

    /// Real-valued variant of [`ZeroTable::pair_sum`] for kernels that are
    /// already the real part of a conjugate-symmetric term.
    pub fn pair_sum_real<F>(&self, count: usize, f: F) -> Result<ZeroSum>
    where
        F: Fn(f64) -> f64,
    {
        self.pair_sum(count, |g| Complex64::new(f(g), 0.0))
    }
}

fn validate(line: usize, g: f64, prev: f64) -> Result<()> {
    if !g.is_finite() || g <= 0.0 {
        return Err(Error::Validation {
            line,
            reason: format!("ordinate {g} is not a positive finite number"),
        });
    }
    if g <= prev {
        return Err(Error::Validation {
            line,
            reason: format!("ordinate {g} does not exceed the previous ordinate {prev}"),
        });
    }
    Ok(())
}

fn truncation_tail(last: Option<f64>) -> f64 {
    match last {
        None => INVERSE_GAMMA_SQ_BOUND,
        Some(g) => tail_bound_inverse_gamma_sq(g.max(15.0)),
    }
}

/// `Σ 2/γ²` over the first `count` ordinates (conjugate pairs counted).
pub fn sum_inverse_gamma_sq(table: &ZeroTable, count: usize) -> Result<f64> {
    Ok(table.pair_sum_real(count, |g| 1.0 / (g * g))?.value)
}

/// Estimate of `Σ_{γ>T} 2/γ²` from the zero density `log(t/2π)/2π`:
/// `(log(T/2π) + 1)/(πT)`. A heuristic, not a bound.
pub fn tail_bound_inverse_gamma_sq(t: f64) -> f64 {
    use std::f64::consts::PI;
    ((t / (2.0 * PI)).ln() + 1.0) / (PI * t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<ZeroTable> {
        ZeroTable::load(text.as_bytes(), "test")
    }

    #[test]
    fn loads_two_ordinates() {
        let t = load("14.134725\n21.022040\n").unwrap();
        assert_eq!(t.ordinates(), &[14.134725, 21.022040]);
        assert!(t.check_riemann().is_ok());
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = load("# hdr\n").unwrap();
        assert!(t.is_empty());
        let t = load("# a table\n\n  14.134725  \n# mid\n21.02204\n").unwrap();
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        match load("21.0\n14.1\n") {
            Err(Error::Validation { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match load("14.1\n# c\nabc\n") {
            Err(Error::Format { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(load("-1.0\n"), Err(Error::Validation { line: 1, .. })));
        assert!(matches!(load("0\n"), Err(Error::Validation { .. })));
        assert!(matches!(load("14.1\n14.1\n"), Err(Error::Validation { line: 2, .. })));
        assert!(matches!(load("inf\n"), Err(Error::Validation { .. })));
        assert!(ZeroTable::new(vec![3.0, 2.0], "v").is_err());
    }

    #[test]
    fn riemann_check_rejects_wrong_start() {
        let t = load("21.022040\n").unwrap();
        assert!(t.check_riemann().is_err());
    }

    #[test]
    fn inverse_gamma_sq_sums() {
        let t = load("14.134725\n21.022040\n").unwrap();
        let one = sum_inverse_gamma_sq(&t, 1).unwrap();
        assert!((one - 2.0 / (14.134725f64 * 14.134725)).abs() < 1e-17);
        assert!((one - 0.0100105).abs() < 1e-7);
        assert_eq!(sum_inverse_gamma_sq(&t, 0).unwrap(), 0.0);
        assert!(matches!(
            sum_inverse_gamma_sq(&t, 3),
            Err(Error::Range { requested: 3, available: 2 })
        ));
    }

    #[test]
    fn tail_estimate_values() {
        assert!((tail_bound_inverse_gamma_sq(1e4) - 2.665_037_841_872_944e-4).abs() < 1e-15);
        assert!((tail_bound_inverse_gamma_sq(100.0) - 0.01199).abs() < 1e-5);
        let mut prev = f64::INFINITY;
        let mut t = 15.0;
        while t < 1e9 {
            let v = tail_bound_inverse_gamma_sq(t);
            assert!(v > 0.0 && v < prev);
            prev = v;
            t *= 1.7;
        }
    }
}
