//! Layout search: greedy insertion, greedy demerit, the TSP heuristic and the random baseline.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::{importance_order, Axis, Biclustering, BlockDecomposition, Layout};
use crate::objectives::{weight_matrix, BlockScorer, ObjectiveKind};
use crate::par::*;
use crate::tsp::{solve_tsp, TspConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgorithmId {
    GreedyProximity,
    GreedyConsecutiveClustersArea,
    GreedyUninterruptedArea,
    GreedyDemerit,
    TspHeuristic,
    Random,
    Identity,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 7] = [
        AlgorithmId::GreedyProximity,
        AlgorithmId::GreedyConsecutiveClustersArea,
        AlgorithmId::GreedyUninterruptedArea,
        AlgorithmId::GreedyDemerit,
        AlgorithmId::TspHeuristic,
        AlgorithmId::Random,
        AlgorithmId::Identity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::GreedyProximity => "greedy-proximity",
            AlgorithmId::GreedyConsecutiveClustersArea => "greedy-consecutive-clusters-area",
            AlgorithmId::GreedyUninterruptedArea => "greedy-uninterrupted-area",
            AlgorithmId::GreedyDemerit => "greedy-demerit",
            AlgorithmId::TspHeuristic => "tsp-heuristic",
            AlgorithmId::Random => "random",
            AlgorithmId::Identity => "identity",
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgorithmId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}`"))
    }
}

/// Position rule used by the greedy demerit insertion.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum DemeritInsertion {
    /// End-biased rule: start from the cheaper end and move inward only when
    /// both neighbours cost more than the incumbent but no more than the pair
    /// being separated.
    #[default]
    Verbatim,
    /// Position with the smallest increase in total demerit.
    InsertionMin,
}

impl DemeritInsertion {
    pub fn name(self) -> &'static str {
        match self {
            Self::Verbatim => "verbatim",
            Self::InsertionMin => "insertion-min",
        }
    }
}

impl fmt::Display for DemeritInsertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DemeritInsertion {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "verbatim" => Ok(Self::Verbatim),
            "insertion-min" => Ok(Self::InsertionMin),
            _ => Err(format!("unknown demerit insertion mode `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchConfig {
    pub tsp: TspConfig,
    /// Seed of the `Random` algorithm.
    pub seed: u64,
    pub demerit_insertion: DemeritInsertion,
}

/// Inserts `block` into `sigma` at the position with the best partial score.
///
/// The append position is the initial candidate; earlier positions replace it
/// only on strict improvement, so ties keep the earliest improving position.
pub fn greedy_add(
    scorer: &BlockScorer<'_>,
    kind: ObjectiveKind,
    axis: Axis,
    sigma: &[usize],
    block: usize,
    other: &[usize],
) -> Vec<usize> {
    let candidate = |pos: usize| {
        let mut seq = Vec::with_capacity(sigma.len() + 1);
        seq.extend_from_slice(&sigma[..pos]);
        seq.push(block);
        seq.extend_from_slice(&sigma[pos..]);
        seq
    };
    let score = |seq: &[usize]| match axis {
        Axis::Row => scorer.score(kind, seq, other),
        Axis::Column => scorer.score(kind, other, seq),
    };
    let scores: Vec<u64> = (0..=sigma.len())
        .into_par_iter()
        .map(|pos| score(&candidate(pos)))
        .collect();
    let mut best = sigma.len();
    let mut best_score = scores[best];
    for (pos, &s) in scores[..sigma.len()].iter().enumerate() {
        if kind.improves(s, best_score) {
            best = pos;
            best_score = s;
        }
    }
    candidate(best)
}

/// Builds both block orders by alternately inserting the next most important row and column block.
pub fn greedy_layout(kind: ObjectiveKind, decomp: &BlockDecomposition, bc: &Biclustering) -> Layout {
    let scorer = BlockScorer::new(decomp);
    let rows = importance_order(decomp.row_blocks(), bc);
    let cols = importance_order(decomp.col_blocks(), bc);
    let mut sigma_r = Vec::with_capacity(rows.len());
    let mut sigma_c = Vec::with_capacity(cols.len());
    for i in 0..rows.len().max(cols.len()) {
        if sigma_r.len() < rows.len() {
            sigma_r = greedy_add(&scorer, kind, Axis::Row, &sigma_r, rows[i], &sigma_c);
        }
        if sigma_c.len() < cols.len() {
            sigma_c = greedy_add(&scorer, kind, Axis::Column, &sigma_c, cols[i], &sigma_r);
        }
    }
    Layout::from_block_orders(decomp, sigma_r, sigma_c).expect("greedy places every block once")
}

/// Orders the blocks of one axis by importance and inserts them one at a time
/// according to `mode`, using pairwise demerit weights.
pub fn greedy_demerit_axis(
    decomp: &BlockDecomposition,
    bc: &Biclustering,
    axis: Axis,
    mode: DemeritInsertion,
) -> Vec<usize> {
    let w = weight_matrix(decomp, axis);
    let mut sigma: Vec<usize> = Vec::with_capacity(decomp.block_count(axis));
    for b in importance_order(decomp.blocks(axis), bc) {
        if sigma.len() < 2 {
            sigma.push(b);
            continue;
        }
        let p = match mode {
            DemeritInsertion::Verbatim => verbatim_position(&w, &sigma, b),
            DemeritInsertion::InsertionMin => cheapest_position(&w, &sigma, b),
        };
        sigma.insert(p, b);
    }
    sigma
}

fn verbatim_position(w: &[Vec<u64>], sigma: &[usize], b: usize) -> usize {
    let n = sigma.len();
    let (front, back) = (w[b][sigma[0]], w[b][sigma[n - 1]]);
    let (mut p, mut l) = if front < back { (0, front) } else { (n, back) };
    for i in 1..n {
        let prec = w[b][sigma[i - 1]];
        let succ = w[b][sigma[i]];
        let curr = w[sigma[i - 1]][sigma[i]];
        if prec.min(succ) > l && prec.max(succ) <= curr {
            p = i;
            l = prec.min(succ);
        }
    }
    p
}

fn cheapest_position(w: &[Vec<u64>], sigma: &[usize], b: usize) -> usize {
    let n = sigma.len();
    (0..=n)
        .min_by_key(|&g| {
            let left = if g > 0 { w[sigma[g - 1]][b] as i128 } else { 0 };
            let right = if g < n { w[b][sigma[g]] as i128 } else { 0 };
            let broken = if g > 0 && g < n { w[sigma[g - 1]][sigma[g]] as i128 } else { 0 };
            (left + right - broken, g)
        })
        .unwrap_or(n)
}

pub fn greedy_demerit_layout(
    decomp: &BlockDecomposition,
    bc: &Biclustering,
    mode: DemeritInsertion,
) -> Layout {
    let (sigma_r, sigma_c) = join(
        || greedy_demerit_axis(decomp, bc, Axis::Row, mode),
        || greedy_demerit_axis(decomp, bc, Axis::Column, mode),
    );
    Layout::from_block_orders(decomp, sigma_r, sigma_c).expect("every block inserted once")
}

/// Rotation of `tour` maximizing the consecutive cluster area; ties keep the earliest rotation.
fn best_cut(scorer: &BlockScorer<'_>, axis: Axis, tour: &[usize], weights: &[Vec<u64>], other: &[usize]) -> Vec<usize> {
    let rotation = |j: usize| -> Vec<usize> { tour[j..].iter().chain(&tour[..j]).copied().collect() };
    let n = tour.len();
    // (area, weight of the dropped edge): among equal areas, the cut that
    // removes the most expensive edge leaves the cheapest path
    let scores: Vec<(u64, u64)> = (0..n)
        .into_par_iter()
        .map(|j| {
            let seq = rotation(j);
            let area = match axis {
                Axis::Row => scorer.area(&seq, other),
                Axis::Column => scorer.area(other, &seq),
            };
            (area, weights[tour[(j + n - 1) % n]][tour[j]])
        })
        .collect();
    let mut best = 0;
    for (j, &s) in scores.iter().enumerate() {
        if s > scores[best] {
            best = j;
        }
    }
    rotation(best)
}

/// Solves a TSP over the pairwise demerit weights of each axis and cuts each
/// cycle where the consecutive cluster area is largest. Among cuts of equal
/// area the one dropping the heaviest edge wins, then the earliest.
///
/// Rows are cut against the identity column order, then columns against the
/// chosen row order.
pub fn tsp_layout(decomp: &BlockDecomposition, cfg: &TspConfig) -> Result<Layout> {
    let solve = |axis: Axis| {
        let w = weight_matrix(decomp, axis);
        solve_tsp(&w, cfg).map(|s| (s, w))
    };
    let (rows, cols) = join(|| solve(Axis::Row), || solve(Axis::Column));
    let ((rows, wr), (cols, wc)) = (rows?, cols?);
    let scorer = BlockScorer::new(decomp);
    let identity = Layout::identity(decomp);
    let sigma_r = best_cut(&scorer, Axis::Row, &rows.tour, &wr, identity.sigma_c());
    let sigma_c = best_cut(&scorer, Axis::Column, &cols.tour, &wc, &sigma_r);
    Layout::from_block_orders(decomp, sigma_r, sigma_c)
}

/// Uniformly random block orders on both axes.
pub fn random_layout(decomp: &BlockDecomposition, seed: u64) -> Layout {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sigma_r: Vec<usize> = (0..decomp.block_count(Axis::Row)).collect();
    let mut sigma_c: Vec<usize> = (0..decomp.block_count(Axis::Column)).collect();
    sigma_r.shuffle(&mut rng);
    sigma_c.shuffle(&mut rng);
    Layout::from_block_orders(decomp, sigma_r, sigma_c).expect("shuffle is a bijection")
}

/// Runs one layout algorithm.
pub fn run_algorithm(
    id: AlgorithmId,
    decomp: &BlockDecomposition,
    bc: &Biclustering,
    cfg: &SearchConfig,
) -> Result<Layout> {
    Ok(match id {
        AlgorithmId::GreedyProximity => greedy_layout(ObjectiveKind::Proximity, decomp, bc),
        AlgorithmId::GreedyConsecutiveClustersArea => {
            greedy_layout(ObjectiveKind::ConsecutiveClusterArea, decomp, bc)
        }
        AlgorithmId::GreedyUninterruptedArea => {
            greedy_layout(ObjectiveKind::UninterruptedArea, decomp, bc)
        }
        AlgorithmId::GreedyDemerit => greedy_demerit_layout(decomp, bc, cfg.demerit_insertion),
        AlgorithmId::TspHeuristic => tsp_layout(decomp, &cfg.tsp)?,
        AlgorithmId::Random => random_layout(decomp, cfg.seed),
        AlgorithmId::Identity => Layout::identity(decomp),
    })
}
