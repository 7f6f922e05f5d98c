//! Small symmetric TSP solver: nearest-neighbour construction followed by 2-opt.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TspConfig {
    /// Upper bound on full 2-opt sweeps.
    pub max_passes: usize,
    /// Wall-clock budget for the improvement phase.
    pub time_limit: Duration,
    /// Selects where each 2-opt sweep starts scanning.
    pub seed: u64,
}

impl Default for TspConfig {
    fn default() -> Self {
        Self {
            max_passes: 50,
            time_limit: Duration::from_secs(10),
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TspSolution {
    /// Cyclic visiting order.
    pub tour: Vec<usize>,
    pub cost: u64,
    /// Cost of the nearest-neighbour tour before improvement.
    pub initial_cost: u64,
    pub passes: usize,
    pub timed_out: bool,
}

/// Cost of the closed tour `order`.
pub fn tour_cost(weights: &[Vec<u64>], order: &[usize]) -> u64 {
    if order.len() < 2 {
        return 0;
    }
    order
        .iter()
        .zip(order.iter().cycle().skip(1))
        .map(|(&a, &b)| weights[a][b])
        .sum()
}

fn validate(weights: &[Vec<u64>]) -> Result<()> {
    let n = weights.len();
    for (i, row) in weights.iter().enumerate() {
        if row.len() != n || row[i] != 0 {
            return Err(Error::InvalidWeights);
        }
        if (0..i).any(|j| row[j] != weights[j][i]) {
            return Err(Error::InvalidWeights);
        }
    }
    Ok(())
}

fn nearest_neighbour(weights: &[Vec<u64>]) -> Vec<usize> {
    let n = weights.len();
    let start = (0..n)
        .min_by_key(|&v| (weights[v].iter().sum::<u64>(), v))
        .unwrap_or(0);
    let mut visited = vec![false; n];
    let mut tour = Vec::with_capacity(n);
    let mut current = start;
    for _ in 0..n {
        visited[current] = true;
        tour.push(current);
        if let Some(next) = (0..n)
            .filter(|&v| !visited[v])
            .min_by_key(|&v| (weights[current][v], v))
        {
            current = next;
        }
    }
    tour
}

/// Finds a low-cost Hamiltonian cycle over a symmetric weight matrix.
///
/// The tour cost never increases: only strictly improving 2-opt moves are applied.
pub fn solve_tsp(weights: &[Vec<u64>], cfg: &TspConfig) -> Result<TspSolution> {
    validate(weights)?;
    let deadline = Instant::now() + cfg.time_limit;
    let n = weights.len();
    let mut tour = nearest_neighbour(weights);
    let initial_cost = tour_cost(weights, &tour);
    let mut cost = initial_cost;
    let mut passes = 0;
    let mut timed_out = false;
    if n >= 4 {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        'search: while passes < cfg.max_passes {
            passes += 1;
            let offset = rng.random_range(0..n);
            let mut improved = false;
            for step in 0..n - 1 {
                if Instant::now() >= deadline {
                    timed_out = true;
                    break 'search;
                }
                let i = (step + offset) % (n - 1);
                for j in i + 2..n {
                    if i == 0 && j == n - 1 {
                        continue;
                    }
                    let (a, b) = (tour[i], tour[i + 1]);
                    let (c, d) = (tour[j], tour[(j + 1) % n]);
                    let removed = weights[a][b] + weights[c][d];
                    let added = weights[a][c] + weights[b][d];
                    if added < removed {
                        tour[i + 1..=j].reverse();
                        cost = cost - removed + added;
                        improved = true;
                    }
                }
            }
            if !improved {
                break;
            }
        }
    }
    debug_assert_eq!(cost, tour_cost(weights, &tour));
    Ok(TspSolution {
        tour,
        cost,
        initial_cost,
        passes,
        timed_out,
    })
}
