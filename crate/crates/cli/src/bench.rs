//! Wall-clock timings of φ and the two divisions on random big operands.
//!
//! Measurement only: nothing here asserts an asymptotic bound.

use std::time::{Duration, Instant};

use gaussphi::sample::random_gint;
use gaussphi::{gauss_divide, minimal_divide, phi, GInt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Bit sizes of the default scaling table: 2^10, 2^13, 2^16.
pub const DEFAULT_SIZES: [u64; 3] = [1 << 10, 1 << 13, 1 << 16];

#[derive(Clone, Debug, Serialize)]
pub struct OpTiming {
    pub op: &'static str,
    pub median_us: f64,
    pub p90_us: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SizeTiming {
    pub bits: u64,
    pub trials: usize,
    /// SHA-256 prefix of the operands' text form; equal seeds give equal digests.
    pub operand_digest: String,
    pub ops: Vec<OpTiming>,
}

/// Operand pairs for one size; the stream depends only on `(seed, bits)`.
pub fn operands(bits: u64, trials: usize, seed: u64) -> Vec<(GInt, GInt)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ bits.rotate_left(32));
    (0..trials).map(|_| (random_gint(&mut rng, bits), random_gint(&mut rng, bits))).collect()
}

fn digest(pairs: &[(GInt, GInt)]) -> String {
    let mut hasher = Sha256::new();
    for (a, b) in pairs {
        hasher.update(a.to_string().as_bytes());
        hasher.update(b",");
        hasher.update(b.to_string().as_bytes());
        hasher.update(b";");
    }
    hasher.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Nearest-rank percentile of sorted samples, in microseconds.
fn percentile(sorted: &[Duration], p: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let rank = ((p * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
    sorted[rank - 1].as_secs_f64() * 1e6
}

fn time_op(pairs: &[(GInt, GInt)], op: &'static str, f: impl Fn(&GInt, &GInt)) -> OpTiming {
    let mut samples: Vec<Duration> = pairs
        .iter()
        .map(|(a, b)| {
            let start = Instant::now();
            f(a, b);
            start.elapsed()
        })
        .collect();
    samples.sort();
    OpTiming { op, median_us: percentile(&samples, 0.5), p90_us: percentile(&samples, 0.9) }
}

pub fn bench_size(bits: u64, trials: usize, seed: u64) -> SizeTiming {
    let pairs = operands(bits, trials, seed);
    let ops = vec![
        time_op(&pairs, "phi", |a, _| {
            std::hint::black_box(phi(a).expect("random operands are nonzero"));
        }),
        time_op(&pairs, "gauss_divide", |a, b| {
            std::hint::black_box(gauss_divide(a, b).expect("nonzero divisor"));
        }),
        time_op(&pairs, "minimal_divide", |a, b| {
            std::hint::black_box(minimal_divide(a, b).expect("nonzero divisor"));
        }),
    ];
    SizeTiming { bits, trials, operand_digest: digest(&pairs), ops }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub seed: u64,
    pub requested: SizeTiming,
    pub scaling: Vec<SizeTiming>,
}

pub fn run(bits: u64, trials: usize, seed: u64, sizes: &[u64]) -> BenchReport {
    BenchReport {
        seed,
        requested: bench_size(bits, trials, seed),
        scaling: sizes.iter().map(|&s| bench_size(s, trials, seed)).collect(),
    }
}

fn rows(out: &mut String, t: &SizeTiming) {
    for o in &t.ops {
        out.push_str(&format!(
            "{:>8} {:>16} {:>14.2} {:>14.2}  {}\n",
            t.bits, o.op, o.median_us, o.p90_us, t.operand_digest
        ));
    }
}

pub fn render(report: &BenchReport) -> String {
    let header = format!("{:>8} {:>16} {:>14} {:>14}  operands\n", "bits", "op", "median_us", "p90_us");
    let mut out = format!("seed {} trials {}\n", report.seed, report.requested.trials);
    out.push_str(&header);
    rows(&mut out, &report.requested);
    if !report.scaling.is_empty() {
        out.push_str("\nscaling\n");
        out.push_str(&header);
        for t in &report.scaling {
            rows(&mut out, t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_seed_repeats_operands() {
        assert_eq!(operands(300, 4, 9), operands(300, 4, 9));
        assert_ne!(operands(300, 4, 9), operands(300, 4, 10));
        assert_eq!(digest(&operands(64, 3, 1)), digest(&operands(64, 3, 1)));
    }

    #[test]
    fn percentiles() {
        let s: Vec<Duration> = (1..=10).map(Duration::from_micros).collect();
        assert_eq!(percentile(&s, 0.5), 5.0);
        assert_eq!(percentile(&s, 0.9), 9.0);
        assert_eq!(percentile(&s[..1], 0.9), 1.0);
    }
}
