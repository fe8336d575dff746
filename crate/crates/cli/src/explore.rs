//! Random sweeps comparing unit radii with constructed extremal radii.

use std::path::PathBuf;
use std::time::Instant;

use num_integer::Integer;
use poincare_core::extremal::{construct_extremal, Ladder};
use poincare_core::{curtiss_bound, opt_for_spec, rational, Angle, FactorSpec, Precision, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::{emit, Failure};

pub const HEADER: [&str; 7] = ["angles", "radii", "bound", "opt", "gap", "precision", "wall_time_ms"];
const DENOMINATORS: [u64; 3] = [24, 48, 96];

pub struct ExploreConfig {
    pub samples: usize,
    pub seed: u64,
    pub max_ell: usize,
    pub precision: Precision,
    pub ladder: Ladder,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExploreRecord {
    pub angles: String,
    pub radii: String,
    pub bound: u64,
    pub opt: usize,
    pub gap: u64,
    pub precision: String,
    pub wall_time_ms: u128,
}

/// Numerators coprime to `den` in `lo..hi`.
fn coprime_range(den: u64, lo: u64, hi: u64) -> Vec<u64> {
    (lo..hi).filter(|n| n.gcd(&den) == 1).collect()
}

/// Up to `max_ell` distinct quadrant-1 angles no smaller than 5π/24 (so each
/// contributes at most 3 to the bound), plus at most one quadrant-2 angle.
pub fn sample_angles(rng: &mut ChaCha8Rng, max_ell: usize) -> Vec<Angle> {
    let den = *DENOMINATORS.choose(rng).expect("nonempty");
    let q1 = coprime_range(den, (5 * den).div_ceil(24), den.div_ceil(2));
    let q2 = coprime_range(den, den / 2 + 1, den);
    let ell = rng.gen_range(1..=max_ell.max(1));
    let mut nums: Vec<u64> = q1.choose_multiple(rng, ell).copied().collect();
    if rng.gen_bool(0.5) {
        nums.push(*q2.choose(rng).expect("nonempty"));
    }
    nums.sort_unstable();
    nums.iter().map(|&n| Angle::new(n as i64, den as i64).expect("0 < n < den")).collect()
}

fn join<T, F: Fn(&T) -> String>(items: &[T], f: F) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(";")
}

fn precision_label(digits: Option<u32>) -> String {
    digits.map_or_else(|| "exact".to_string(), |d| d.to_string())
}

fn unit_record(angles: &[Angle], precision: Precision) -> Result<ExploreRecord, Failure> {
    let start = Instant::now();
    let radii = vec![rational::int(1); angles.len()];
    let spec = FactorSpec::from_angles(angles, &radii);
    let result = opt_for_spec(&spec, precision, None)?;
    let bound = curtiss_bound(&spec)?;
    Ok(ExploreRecord {
        angles: join(angles, Angle::to_string),
        radii: join(&radii, rational::format),
        bound,
        opt: result.opt,
        gap: bound - result.opt as u64,
        precision: precision_label(result.precision_digits),
        wall_time_ms: start.elapsed().as_millis(),
    })
}

fn extremal_record(angles: &[Angle], precision: Precision, ladder: &Ladder) -> Result<ExploreRecord, Failure> {
    let start = Instant::now();
    let report = construct_extremal(angles, precision, ladder)?;
    let radii: Vec<Rational> = report.spec.angles.iter().map(|a| a.r.clone()).collect();
    Ok(ExploreRecord {
        angles: join(&report.spec.angles, |a| format!("{}/{}", a.num, a.den)),
        radii: join(&radii, rational::format),
        bound: report.bound,
        opt: report.opt,
        gap: report.bound - report.opt as u64,
        precision: precision_label(report.precision_digits),
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// Two rows per sample (unit radii, then extremal radii), in sample order.
/// Sample `i` draws from stream `i` of a generator seeded with `seed`, so rows
/// do not depend on how samples are scheduled.
pub fn records(config: &ExploreConfig) -> Result<Vec<ExploreRecord>, Failure> {
    let per_sample: Vec<Result<Vec<ExploreRecord>, Failure>> = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(i as u64);
            let angles = sample_angles(&mut rng, config.max_ell);
            let mut rows = vec![unit_record(&angles, config.precision)?];
            match extremal_record(&angles, config.precision, &config.ladder) {
                Ok(row) => rows.push(row),
                Err(e) => eprintln!("sample {i} ({}): no extremal row: {e}", join(&angles, Angle::to_string)),
            }
            Ok(rows)
        })
        .collect();
    let mut out = Vec::new();
    for rows in per_sample {
        out.extend(rows?);
    }
    Ok(out)
}

pub fn to_csv(rows: &[ExploreRecord]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
}

pub fn run(config: &ExploreConfig, output: Option<&PathBuf>) -> Result<(), Failure> {
    let csv = to_csv(&records(config)?);
    match output {
        Some(_) => emit(output, &csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_angles_respect_the_grid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let angles = sample_angles(&mut rng, 3);
            let q1: Vec<_> = angles.iter().filter(|a| a.is_quadrant1()).collect();
            assert!((1..=3).contains(&q1.len()));
            assert!(angles.len() - q1.len() <= 1);
            for a in &q1 {
                assert!(24 * a.num() >= 5 * a.den());
                assert!(DENOMINATORS.contains(&a.den()));
            }
        }
    }

    #[test]
    fn empty_sweep_is_header_only() {
        assert_eq!(to_csv(&[]), "angles,radii,bound,opt,gap,precision,wall_time_ms\n");
    }
}
