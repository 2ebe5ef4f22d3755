//! Segmented, odd-only sieve of Eratosthenes producing ascending prime and
//! prime-power streams.
//!
//! Segments of a batch may be sieved on several worker threads; they are
//! always handed out in ascending order, so every stream is identical for
//! any worker count and any segment size.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest sieve bound accepted (2^40).
pub const MAX_LIMIT: u64 = 1 << 40;

/// Default number of odd candidates per segment.
pub const DEFAULT_SEGMENT_SIZE: usize = 1 << 20;

pub const MIN_SEGMENT_SIZE: usize = 64;

static MAX_WORKERS: AtomicUsize = AtomicUsize::new(0);

/// Cap the number of sieving threads; `0` restores the default (all cores).
pub fn set_max_workers(n: usize) {
    MAX_WORKERS.store(n, Ordering::Relaxed);
}

pub fn max_workers() -> usize {
    match MAX_WORKERS.load(Ordering::Relaxed) {
        0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
        n => n,
    }
}

/// Convert a real bound into an integer sieve limit `⌊x⌋`, enforcing the cap.
pub fn floor_limit(x: f64) -> Result<u64> {
    if x.is_nan() {
        return Err(Error::domain("sieve bound is NaN"));
    }
    if x > MAX_LIMIT as f64 {
        return Err(Error::Resource {
            requested: x,
            cap: MAX_LIMIT,
        });
    }
    Ok(if x < 0.0 { 0 } else { x.floor() as u64 })
}

/// Largest `r` with `r^m <= n`.
pub fn iroot(n: u64, m: u32) -> u64 {
    assert!(m >= 1);
    if m == 1 || n < 2 {
        return n;
    }
    let fits = |r: u64| (r as u128).checked_pow(m).is_some_and(|v| v <= n as u128);
    let mut r = (n as f64).powf(1.0 / m as f64).round() as u64;
    while r > 0 && !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    limit: u64,
    segment_size: usize,
}

impl SieveConfig {
    pub fn new(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::domain(format!("sieve limit {limit} is below 2")));
        }
        if limit > MAX_LIMIT {
            return Err(Error::Resource {
                requested: limit as f64,
                cap: MAX_LIMIT,
            });
        }
        Ok(SieveConfig {
            limit,
            segment_size: DEFAULT_SEGMENT_SIZE,
        })
    }

    pub fn with_segment_size(mut self, segment_size: usize) -> Result<Self> {
        if segment_size < MIN_SEGMENT_SIZE {
            return Err(Error::domain(format!(
                "segment size {segment_size} is below {MIN_SEGMENT_SIZE}"
            )));
        }
        self.segment_size = segment_size;
        Ok(self)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn segment_size(&self) -> usize {
        self.segment_size
    }

    pub fn primes(&self) -> Primes {
        Primes::new(self.limit, self.segment_size)
    }

    pub fn prime_powers(&self) -> PrimePowers {
        PrimePowers::new(self.primes())
    }
}

/// Ascending primes `<= limit`. Fails only if `limit` exceeds the cap.
pub fn primes_up_to(limit: u64) -> Result<Primes> {
    if limit > MAX_LIMIT {
        return Err(Error::Resource {
            requested: limit as f64,
            cap: MAX_LIMIT,
        });
    }
    Ok(Primes::new(limit, DEFAULT_SEGMENT_SIZE))
}

/// Ascending prime powers `p^m <= limit`, `m >= 1`, with their von Mangoldt weight.
pub fn prime_powers_up_to(limit: u64) -> Result<PrimePowers> {
    Ok(PrimePowers::new(primes_up_to(limit)?))
}

/// `π(⌊x⌋)`.
pub fn count_primes(x: f64) -> Result<u64> {
    let limit = floor_limit(x)?;
    Ok(Primes::new(limit, DEFAULT_SEGMENT_SIZE).count() as u64)
}

/// Plain sieve for the base primes up to `√limit`.
fn small_primes(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Sieve odd indices `j in [j0, j1)`, where index `j` stands for `2j + 1`.
fn sieve_segment(j0: u64, j1: u64, odd_base: &[u64]) -> Vec<u64> {
    let len = (j1 - j0) as usize;
    let mut flags = vec![true; len];
    if j0 == 0 && len > 0 {
        flags[0] = false; // 1 is not prime
    }
    let n_lo = 2 * j0 + 1;
    let n_hi = 2 * (j1 - 1) + 1;
    for &p in odd_base {
        let p2 = p * p;
        if p2 > n_hi {
            break;
        }
        let mut m = n_lo.div_ceil(p);
        if m % 2 == 0 {
            m += 1;
        }
        let start = (m * p).max(p2);
        let mut idx = ((start - 1) / 2 - j0) as usize;
        let step = p as usize;
        while idx < len {
            flags[idx] = false;
            idx += step;
        }
    }
    flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(i, _)| 2 * (j0 + i as u64) + 1)
        .collect()
}

/// Iterator over primes in ascending order.
#[derive(Debug)]
pub struct Primes {
    limit: u64,
    segment_size: u64,
    odd_base: Arc<Vec<u64>>,
    next_index: u64,
    end_index: u64,
    buf: Vec<u64>,
    pos: usize,
    pending_two: bool,
}

impl Primes {
    fn new(limit: u64, segment_size: usize) -> Self {
        let root = limit.isqrt();
        let odd_base: Vec<u64> = small_primes(root).into_iter().filter(|&p| p > 2).collect();
        Primes {
            limit,
            segment_size: segment_size as u64,
            odd_base: Arc::new(odd_base),
            next_index: 0,
            end_index: if limit == 0 { 0 } else { limit.div_ceil(2) },
            buf: Vec::new(),
            pos: 0,
            pending_two: limit >= 2,
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Sieve the next batch of segments, one per worker.
    fn refill(&mut self) -> bool {
        if self.next_index >= self.end_index {
            return false;
        }
        let workers = max_workers().max(1) as u64;
        let mut bounds = Vec::with_capacity(workers as usize);
        let mut j = self.next_index;
        while j < self.end_index && (bounds.len() as u64) < workers {
            let hi = (j + self.segment_size).min(self.end_index);
            bounds.push((j, hi));
            j = hi;
        }
        self.next_index = j;
        self.buf.clear();
        self.pos = 0;
        if bounds.len() == 1 {
            let (lo, hi) = bounds[0];
            self.buf = sieve_segment(lo, hi, &self.odd_base);
        } else {
            let base = &self.odd_base;
            let parts: Vec<Vec<u64>> = std::thread::scope(|s| {
                let handles: Vec<_> = bounds
                    .iter()
                    .map(|&(lo, hi)| s.spawn(move || sieve_segment(lo, hi, base)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("sieve worker panicked"))
                    .collect()
            });
            for part in parts {
                self.buf.extend_from_slice(&part);
            }
        }
        true
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.pending_two {
            self.pending_two = false;
            return Some(2);
        }
        loop {
            if let Some(&p) = self.buf.get(self.pos) {
                self.pos += 1;
                return Some(p);
            }
            if !self.refill() {
                return None;
            }
        }
    }
}

/// A prime power `n = p^m` with `Λ(n) = log p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrimePowerTerm {
    pub n: u64,
    pub lambda: f64,
    pub prime: u64,
    pub exponent: u32,
}

/// Ascending prime powers. Powers with `m >= 2` are few (`O(√L log L)`),
/// so they are built from the small primes up front and merged in.
#[derive(Debug)]
pub struct PrimePowers {
    primes: std::iter::Peekable<Primes>,
    higher: Vec<PrimePowerTerm>,
    next_higher: usize,
}

impl PrimePowers {
    fn new(primes: Primes) -> Self {
        let limit = primes.limit();
        let mut higher = Vec::new();
        for p in small_primes(limit.isqrt()) {
            let lambda = (p as f64).ln();
            let mut n = p;
            let mut m = 1;
            while let Some(next) = n.checked_mul(p).filter(|&v| v <= limit) {
                n = next;
                m += 1;
                higher.push(PrimePowerTerm {
                    n,
                    lambda,
                    prime: p,
                    exponent: m,
                });
            }
        }
        higher.sort_unstable_by_key(|t| t.n);
        PrimePowers {
            primes: primes.peekable(),
            higher,
            next_higher: 0,
        }
    }
}

impl Iterator for PrimePowers {
    type Item = PrimePowerTerm;

    fn next(&mut self) -> Option<PrimePowerTerm> {
        let h = self.higher.get(self.next_higher).copied();
        match (self.primes.peek().copied(), h) {
            (Some(p), Some(t)) if t.n < p => {
                self.next_higher += 1;
                Some(t)
            }
            (Some(p), _) => {
                self.primes.next();
                Some(PrimePowerTerm {
                    n: p,
                    lambda: (p as f64).ln(),
                    prime: p,
                    exponent: 1,
                })
            }
            (None, Some(t)) => {
                self.next_higher += 1;
                Some(t)
            }
            (None, None) => None,
        }
    }
}
