use serde::Serialize;
use serde_json::{json, Map, Value};

use pksums_core::analysis::{self, SMOOTHED_DEVIATION_BOUND};
use pksums_core::explicit_formula::{littlewood, oscillation_scan, truncated_psi_integral};
use pksums_core::zeta::{
    log_integral, sum_inverse_gamma_sq, tail_bound_inverse_gamma_sq, ZeroTable, INVERSE_GAMMA_SQ_BOUND,
};
use pksums_core::{prime_sums, sieve, Error, Exponent, Result};

use crate::cli::{Command, ZerosArgs};

/// Everything a command produced: table rows, scalar notes, and what goes
/// into the ledger.
#[derive(Debug, Clone, Default)]
pub struct Output {
    pub rows: Vec<Map<String, Value>>,
    pub notes: Vec<(String, Value)>,
    pub parameters: Map<String, Value>,
    pub data_source: Option<String>,
}

impl Output {
    fn push_row<T: Serialize>(&mut self, row: &T) {
        match serde_json::to_value(row).expect("report rows serialize") {
            Value::Object(map) => self.rows.push(map),
            other => panic!("row is not an object: {other}"),
        }
    }

    fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.notes.push((key.to_owned(), value.into()));
    }

    fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.parameters.insert(key.to_owned(), value.into());
    }

    /// Result fields for the ledger: the rows plus the notes.
    pub fn results(&self) -> Map<String, Value> {
        let mut out = Map::new();
        out.insert("rows".into(), Value::Array(self.rows.iter().cloned().map(Value::Object).collect()));
        for (k, v) in &self.notes {
            out.insert(k.clone(), v.clone());
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct SumsRow {
    pub x: f64,
    pub k: f64,
    pub pi_k: f64,
    pub pi_k_err: f64,
    pub psi_k: f64,
    pub psi_k_err: f64,
    pub capital_pi_k: f64,
    pub capital_pi_k_err: f64,
    pub pi_power: u64,
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct SignScanRow {
    pub x: f64,
    pub k: f64,
    pub value: f64,
    pub err_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct ZeroStatsRow {
    pub zeros_used: usize,
    pub height: f64,
    pub sum_inverse_gamma_sq: f64,
    pub bound: f64,
    pub margin: f64,
    pub tail_estimate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct MertensRow {
    pub x: f64,
    pub deviation: f64,
    pub constant: f64,
    pub difference: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct SmoothedRatioRow {
    pub x: f64,
    pub k: f64,
    pub ratio: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct CrossoverRow {
    pub k: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct PiLiRow {
    pub x: f64,
    pub pi: u64,
    pub li: f64,
    pub difference: f64,
}

/// Smallest x the oscillation scan accepts; lower grid points are dropped.
const SCAN_MIN_X: f64 = 16.0;

fn load_zeros(args: &ZerosArgs, out: &mut Output) -> Result<(ZeroTable, usize)> {
    let table = ZeroTable::from_path(&args.zeros)?;
    table.check_riemann()?;
    let count = args.count as usize;
    table.prefix(count)?;
    out.param("zeros", args.zeros.display().to_string());
    out.param("count", count);
    out.data_source = Some(format!("{} ({} ordinates)", table.source_label(), table.len()));
    Ok((table, count))
}

pub fn run(command: &Command) -> Result<Output> {
    let mut out = Output::default();
    match command {
        Command::Sums { k, x } => {
            out.param("k", *k);
            out.param("x", *x);
            let e = Exponent::new(*k)?;
            let pi = prime_sums::pi_k(*x, e)?;
            let psi = prime_sums::psi_k(*x, e)?;
            let cap = prime_sums::capital_pi_k(*x, e)?;
            let pi_power = sieve::count_primes(prime_sums::power_bound(*x, e))?;
            out.push_row(&SumsRow {
                x: *x,
                k: *k,
                pi_k: pi.value,
                pi_k_err: pi.err_bound,
                psi_k: psi.value,
                psi_k_err: psi.err_bound,
                capital_pi_k: cap.value,
                capital_pi_k_err: cap.err_bound,
                pi_power,
                delta: pi.value - pi_power as f64,
            });
        }
        Command::Theorem2 { k, x_max, x_min, samples } => {
            out.param("k", *k);
            out.param("x_max", *x_max);
            out.param("x_min", *x_min);
            out.param("samples", *samples);
            let e = Exponent::new(*k)?;
            if !(*x_min >= 2.0 && x_max >= x_min) {
                return Err(Error::Domain(format!("need 2 <= x_min <= x_max, got {x_min}, {x_max}")));
            }
            let grid = analysis::geometric_grid(*x_min, *x_max, *samples as usize);
            let reports = analysis::weighted_integral_grid(&grid, e)?;
            for r in &reports {
                out.push_row(r);
            }
            out.note("limit", analysis::weighted_integral_limit(e));
            if *k == 0.0 {
                out.note("degenerate", "k = 0: the integrand vanishes identically");
            }
        }
        Command::Theorem3 { k, x_max, samples } => {
            out.param("k", *k);
            out.param("x_max", *x_max);
            out.param("samples", *samples);
            let e = Exponent::new(*k)?;
            let scan = analysis::sign_scan(e, *x_max, *samples as usize)?;
            for i in 0..scan.x_samples.len() {
                out.push_row(&SignScanRow {
                    x: scan.x_samples[i],
                    k: *k,
                    value: scan.values[i],
                    err_bound: scan.err_bounds[i],
                });
            }
            out.note("first_negative_threshold", scan.first_negative_threshold);
            out.note("all_negative_beyond", scan.all_negative_beyond);
            if scan.degenerate {
                out.note("degenerate", "k = 0: the integrand vanishes identically");
            }
        }
        Command::Explicit { k, x, zeros, include_linear } => {
            out.param("k", *k);
            out.param("x", *x);
            out.param("include_linear", *include_linear);
            let e = Exponent::new(*k)?;
            let (table, count) = load_zeros(zeros, &mut out)?;
            out.push_row(&truncated_psi_integral(*x, e, &table, count, *include_linear)?);
        }
        Command::Littlewood { k, x, delta, zeros } => {
            out.param("k", *k);
            out.param("x", *x);
            out.param("delta", *delta);
            let e = Exponent::new(*k)?;
            let (table, count) = load_zeros(zeros, &mut out)?;
            out.push_row(&littlewood(*x, *delta, e, &table, count)?);
        }
        Command::ZerosStats { zeros } => {
            let (table, count) = load_zeros(zeros, &mut out)?;
            let sum = sum_inverse_gamma_sq(&table, count)?;
            let height = table.ordinates()[count - 1];
            out.push_row(&ZeroStatsRow {
                zeros_used: count,
                height,
                sum_inverse_gamma_sq: sum,
                bound: INVERSE_GAMMA_SQ_BOUND,
                margin: INVERSE_GAMMA_SQ_BOUND - sum,
                tail_estimate: tail_bound_inverse_gamma_sq(height),
            });
        }
        Command::Scan { k, grid } => {
            out.param("k", *k);
            out.param("grid", format!("{}:{}:{}", grid.lo, grid.hi, grid.n));
            let e = Exponent::new(*k)?;
            let mut xs = analysis::geometric_grid(grid.lo, grid.hi, grid.n);
            let before = xs.len();
            xs.retain(|&x| x >= SCAN_MIN_X);
            if xs.is_empty() {
                return Err(Error::Domain(format!("scan grid lies entirely below {SCAN_MIN_X}")));
            }
            if xs.len() < before {
                out.note("skipped_below_16", before - xs.len());
            }
            let scan = oscillation_scan(&xs, e)?;
            for p in &scan.points {
                out.push_row(p);
            }
            out.note("min", scan.min);
            out.note("max", scan.max);
            out.note("sign_changes", json!(scan.sign_changes));
        }
        Command::Mertens { x } => {
            out.param("x", *x);
            let deviation = analysis::mertens_deviation(*x)?;
            out.push_row(&MertensRow {
                x: *x,
                deviation,
                constant: analysis::MERTENS_CONSTANT,
                difference: deviation - analysis::MERTENS_CONSTANT,
            });
        }
        Command::SmoothedRatio { k, x } => {
            out.param("k", *k);
            out.param("x", *x);
            let e = Exponent::new(*k)?;
            out.push_row(&SmoothedRatioRow {
                x: *x,
                k: *k,
                ratio: analysis::smoothed_deviation_ratio(*x, e)?,
                bound: SMOOTHED_DEVIATION_BOUND,
            });
        }
        Command::Crossover { k } => {
            if let Some(k) = k {
                out.param("k", *k);
                out.push_row(&CrossoverRow { k: *k, value: analysis::crossover(*k)? });
            }
            out.note("root", analysis::crossover_root());
        }
        Command::PiLi { x } => {
            out.param("x", *x);
            let difference = analysis::pi_minus_li(*x)?;
            let pi = sieve::count_primes(*x)?;
            let li = log_integral(*x)?;
            out.push_row(&PiLiRow { x: *x, pi, li, difference });
        }
    }
    Ok(out)
}
