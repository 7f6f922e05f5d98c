//! Scoring competing layouts against a random baseline.
//!
//! For each objective `f`, an algorithm's ratio is
//! `(f(A) - avgRandom) / (best - avgRandom)`, where `avgRandom` is the mean
//! of `f` over five seeded random block layouts and `best` is the best value
//! among the compared algorithms (largest for maximized objectives, smallest
//! for minimized ones). The best algorithm therefore scores exactly 1 and an
//! algorithm no better than random scores 0 or below.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::layout::{random_layout, run_algorithm, AlgorithmId, SearchConfig};
use crate::model::{Biclustering, BlockDecomposition, Layout};
use crate::objectives::{evaluate, Direction, ObjectiveKind};
use crate::par::*;

/// Number of random layouts averaged for the baseline.
pub const RANDOM_BASELINE_DRAWS: usize = 5;

pub type Rational = Ratio<i128>;

/// Seeds `base, base + 1, ..` for the random baseline.
pub fn default_seeds(base: u64) -> Vec<u64> {
    (0..RANDOM_BASELINE_DRAWS as u64).map(|i| base.wrapping_add(i)).collect()
}

/// Mean objective value over the random layouts drawn from `seeds`.
pub fn average_random_score(
    kind: ObjectiveKind,
    decomp: &BlockDecomposition,
    bc: &Biclustering,
    seeds: &[u64],
) -> Result<Rational> {
    if seeds.len() != RANDOM_BASELINE_DRAWS {
        return Err(Error::SeedCount {
            expected: RANDOM_BASELINE_DRAWS,
            got: seeds.len(),
        });
    }
    let mut total: i128 = 0;
    for &seed in seeds {
        total += evaluate(kind, bc, decomp, &random_layout(decomp, seed))? as i128;
    }
    Ok(Rational::new(total, seeds.len() as i128))
}

/// Best raw value among `scores` for `kind`.
pub fn best_score(kind: ObjectiveKind, scores: impl IntoIterator<Item = u64>) -> Option<u64> {
    let it = scores.into_iter();
    match kind.direction() {
        Direction::Maximize => it.max(),
        Direction::Minimize => it.min(),
    }
}

/// Normalized ratio; `None` when the best score equals the random average.
pub fn ratio(score: u64, best: u64, average_random: Rational) -> Option<Rational> {
    let denom = Rational::from_integer(best as i128) - average_random;
    if denom == Rational::from_integer(0) {
        return None;
    }
    Some((Rational::from_integer(score as i128) - average_random) / denom)
}

#[derive(Debug, Clone)]
pub struct AlgorithmResult {
    pub algorithm: AlgorithmId,
    pub layout: Layout,
    pub scores: BTreeMap<ObjectiveKind, u64>,
}

#[derive(Debug, Clone)]
pub struct ScoreReport {
    pub results: Vec<AlgorithmResult>,
    pub objectives: Vec<ObjectiveKind>,
    pub average_random: BTreeMap<ObjectiveKind, Rational>,
    /// `ratios[algorithm index][objective]`
    pub ratios: Vec<BTreeMap<ObjectiveKind, Option<Rational>>>,
    pub seeds: Vec<u64>,
}

impl ScoreReport {
    pub fn score(&self, algorithm: AlgorithmId, kind: ObjectiveKind) -> Option<u64> {
        self.results
            .iter()
            .find(|r| r.algorithm == algorithm)
            .and_then(|r| r.scores.get(&kind).copied())
    }

    pub fn ratio(&self, algorithm: AlgorithmId, kind: ObjectiveKind) -> Option<Rational> {
        let i = self.results.iter().position(|r| r.algorithm == algorithm)?;
        self.ratios[i].get(&kind).copied().flatten()
    }
}

/// Scores every objective of an existing layout.
pub fn score_layout(
    objectives: &[ObjectiveKind],
    bc: &Biclustering,
    decomp: &BlockDecomposition,
    layout: &Layout,
) -> Result<BTreeMap<ObjectiveKind, u64>> {
    objectives
        .iter()
        .map(|&k| evaluate(k, bc, decomp, layout).map(|v| (k, v)))
        .collect()
}

/// Runs each algorithm, scores its layout on every objective, and normalizes
/// against the random baseline.
pub fn build_report(
    bc: &Biclustering,
    decomp: &BlockDecomposition,
    algorithms: &[AlgorithmId],
    objectives: &[ObjectiveKind],
    cfg: &SearchConfig,
    seeds: &[u64],
) -> Result<ScoreReport> {
    if algorithms.is_empty() {
        return Err(Error::NoAlgorithms);
    }
    let results: Vec<AlgorithmResult> = algorithms
        .par_iter()
        .map(|&algorithm| {
            let layout = run_algorithm(algorithm, decomp, bc, cfg)?;
            let scores = score_layout(objectives, bc, decomp, &layout)?;
            Ok(AlgorithmResult {
                algorithm,
                layout,
                scores,
            })
        })
        .collect::<Result<_>>()?;
    let average_random: BTreeMap<ObjectiveKind, Rational> = objectives
        .iter()
        .map(|&k| average_random_score(k, decomp, bc, seeds).map(|v| (k, v)))
        .collect::<Result<_>>()?;
    let best: BTreeMap<ObjectiveKind, u64> = objectives
        .iter()
        .map(|&k| (k, best_score(k, results.iter().map(|r| r.scores[&k])).expect("non-empty")))
        .collect();
    let ratios = results
        .iter()
        .map(|r| {
            objectives
                .iter()
                .map(|&k| (k, ratio(r.scores[&k], best[&k], average_random[&k])))
                .collect()
        })
        .collect();
    Ok(ScoreReport {
        results,
        objectives: objectives.to_vec(),
        average_random,
        ratios,
        seeds: seeds.to_vec(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioSummary {
    pub mean: f64,
    /// Population variance.
    pub variance: f64,
    /// Instances with a defined ratio.
    pub count: usize,
}

/// Mean and variance of each algorithm's ratio across several instances.
/// Undefined ratios are skipped.
pub fn aggregate_ratios(reports: &[ScoreReport]) -> BTreeMap<(AlgorithmId, ObjectiveKind), RatioSummary> {
    let mut values: BTreeMap<(AlgorithmId, ObjectiveKind), Vec<f64>> = BTreeMap::new();
    for report in reports {
        for (result, ratios) in report.results.iter().zip(&report.ratios) {
            for (&kind, r) in ratios {
                let entry = values.entry((result.algorithm, kind)).or_default();
                if let Some(r) = r {
                    entry.push(to_f64(*r));
                }
            }
        }
    }
    values
        .into_iter()
        .map(|(key, xs)| {
            let n = xs.len();
            let mean = if n == 0 { f64::NAN } else { xs.iter().sum::<f64>() / n as f64 };
            let variance = if n == 0 {
                f64::NAN
            } else {
                xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64
            };
            (key, RatioSummary { mean, variance, count: n })
        })
        .collect()
}

pub fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
