//! Suggesting unclustered rows and columns that resemble existing clusters.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::model::{intersection_len, Axis, BinaryMatrix, Bicluster, Biclustering, BlockDecomposition, Layout, Permutation};

/// Unclustered rows/columns matched to clusters, per cluster index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Suggestions {
    /// `suggested_rows[i]`: unclustered rows similar to column set `C_i`.
    pub suggested_rows: Vec<Vec<usize>>,
    /// `suggested_cols[i]`: unclustered columns similar to row set `R_i`.
    pub suggested_cols: Vec<Vec<usize>>,
    pub leftover_rows: Vec<usize>,
    pub leftover_cols: Vec<usize>,
}

impl Suggestions {
    /// No suggestions for a biclustering with `clusters` entries.
    pub fn none(clusters: usize) -> Self {
        Self {
            suggested_rows: vec![Vec::new(); clusters],
            suggested_cols: vec![Vec::new(); clusters],
            ..Self::default()
        }
    }

    pub fn suggested(&self, axis: Axis) -> &[Vec<usize>] {
        match axis {
            Axis::Row => &self.suggested_rows,
            Axis::Column => &self.suggested_cols,
        }
    }

    pub fn leftover(&self, axis: Axis) -> &[usize] {
        match axis {
            Axis::Row => &self.leftover_rows,
            Axis::Column => &self.leftover_cols,
        }
    }
}

/// Fraction of `set` (indices on the opposite axis) where line `index` of `axis` has a 1.
pub fn similarity(a: &BinaryMatrix, axis: Axis, index: usize, set: &[usize]) -> Result<Ratio<u64>> {
    if set.is_empty() {
        return Err(Error::EmptyCluster { cluster: 0, axis: axis.other().name() });
    }
    let hits = intersection_len(a.line_ones(axis, index), set);
    Ok(Ratio::new(hits as u64, set.len() as u64))
}

/// Number of 1-entries inside `R_i x C_i`.
pub fn cluster_ones(cluster: &Bicluster, a: &BinaryMatrix) -> u64 {
    cluster
        .rows()
        .iter()
        .map(|&r| intersection_len(a.row_ones(r), cluster.cols()) as u64)
        .sum()
}

/// Fraction of 1-entries in the submatrix `R_i x C_i`.
pub fn density(cluster: &Bicluster, a: &BinaryMatrix) -> Result<Ratio<u64>> {
    let area = cluster.area();
    if area == 0 {
        return Err(Error::EmptyCluster { cluster: 0, axis: "row" });
    }
    Ok(Ratio::new(cluster_ones(cluster, a), area))
}

/// Assigns each unclustered row to every cluster whose column set it covers at
/// least half as densely as the cluster itself, and symmetrically for columns.
pub fn suggest(a: &BinaryMatrix, bc: &Biclustering) -> Result<Suggestions> {
    suggest_with_fraction(a, bc, Ratio::new(1, 2))
}

/// [`suggest`] with the threshold `fraction * density` instead of half the density.
pub fn suggest_with_fraction(a: &BinaryMatrix, bc: &Biclustering, fraction: Ratio<u64>) -> Result<Suggestions> {
    bc.validate(a.rows(), a.cols())?;
    let threshold: Vec<Ratio<u64>> = bc
        .clusters()
        .iter()
        .map(|cl| density(cl, a).map(|d| d * fraction))
        .collect::<Result<_>>()?;
    let mut out = Suggestions::none(bc.len());
    for axis in [Axis::Row, Axis::Column] {
        let memberships = bc.memberships(axis, a.len(axis));
        let mut leftover = Vec::new();
        for (e, sig) in memberships.iter().enumerate() {
            if !sig.is_empty() {
                continue;
            }
            let mut matched = false;
            for (i, cl) in bc.clusters().iter().enumerate() {
                if similarity(a, axis, e, cl.members(axis.other()))? >= threshold[i] {
                    matched = true;
                    match axis {
                        Axis::Row => out.suggested_rows[i].push(e),
                        Axis::Column => out.suggested_cols[i].push(e),
                    }
                }
            }
            if !matched {
                leftover.push(e);
            }
        }
        match axis {
            Axis::Row => out.leftover_rows = leftover,
            Axis::Column => out.leftover_cols = leftover,
        }
    }
    Ok(out)
}

/// Arranges each axis as leftover band, suggested band, then the clustered
/// elements in their `base` order.
///
/// Suggested elements are grouped by the matched cluster that appears earliest
/// in `base`; an element matched to several clusters is placed once.
pub fn zone_layout(
    base: &Layout,
    suggestions: &Suggestions,
    bc: &Biclustering,
    decomp: &BlockDecomposition,
) -> Result<Layout> {
    let order = |axis: Axis| -> Result<Permutation> {
        let pi = base.pi(axis);
        let clustered: Vec<usize> = pi
            .order()
            .iter()
            .copied()
            .filter(|&e| !decomp.blocks(axis)[decomp.block_of(axis, e)].is_unclustered())
            .collect();
        let cluster_start: Vec<usize> = bc
            .clusters()
            .iter()
            .map(|cl| pi.image(cl.members(axis)).min().unwrap_or(usize::MAX))
            .collect();
        let mut first_match: Vec<Option<(usize, usize)>> = vec![None; decomp.element_count(axis)];
        for (i, members) in suggestions.suggested(axis).iter().enumerate() {
            for &e in members {
                let key = (cluster_start[i], i);
                let slot = &mut first_match[e];
                if slot.is_none_or(|k| key < k) {
                    *slot = Some(key);
                }
            }
        }
        let mut suggested: Vec<((usize, usize), usize)> = first_match
            .iter()
            .enumerate()
            .filter_map(|(e, k)| k.map(|k| (k, e)))
            .collect();
        suggested.sort_unstable();
        let mut seq: Vec<usize> = suggestions.leftover(axis).to_vec();
        seq.sort_unstable();
        seq.extend(suggested.into_iter().map(|(_, e)| e));
        seq.extend(clustered);
        Permutation::from_order(seq)
    };
    Layout::from_element_orders(decomp, order(Axis::Row)?, order(Axis::Column)?)
}
