//! Layout quality measures.
//!
//! Element-level functions take the element permutations directly and follow
//! the definitions cell by cell. [`BlockScorer`] evaluates the same objectives on
//! (possibly partial) block sequences and is what the searches use.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    block_sequence, cons, intersection_len, Axis, Bicluster, Biclustering, Block,
    BlockDecomposition, Layout, Permutation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ObjectiveKind {
    Proximity,
    ConsecutiveClusterArea,
    UninterruptedArea,
    Demerit,
}

impl ObjectiveKind {
    pub const ALL: [ObjectiveKind; 4] = [
        ObjectiveKind::Proximity,
        ObjectiveKind::ConsecutiveClusterArea,
        ObjectiveKind::UninterruptedArea,
        ObjectiveKind::Demerit,
    ];

    pub fn direction(self) -> Direction {
        match self {
            ObjectiveKind::Proximity | ObjectiveKind::Demerit => Direction::Minimize,
            ObjectiveKind::ConsecutiveClusterArea | ObjectiveKind::UninterruptedArea => {
                Direction::Maximize
            }
        }
    }

    /// Whether `candidate` strictly improves on `incumbent`.
    pub fn improves(self, candidate: u64, incumbent: u64) -> bool {
        match self.direction() {
            Direction::Minimize => candidate < incumbent,
            Direction::Maximize => candidate > incumbent,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ObjectiveKind::Proximity => "proximity",
            ObjectiveKind::ConsecutiveClusterArea => "consecutiveClusterArea",
            ObjectiveKind::UninterruptedArea => "uninterruptedArea",
            ObjectiveKind::Demerit => "demerit",
        }
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectiveKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown objective `{s}`"))
    }
}

fn extent(pi: &Permutation, set: &[usize]) -> Option<u64> {
    let (lo, hi) = pi
        .image(set)
        .fold((usize::MAX, 0), |(lo, hi), p| (lo.min(p), hi.max(p)));
    (lo != usize::MAX).then(|| (hi - lo + 1) as u64)
}

/// Area of the bounding rectangle of a cluster's visual rows and columns.
pub fn score_prox(cluster: &Bicluster, pi_r: &Permutation, pi_c: &Permutation) -> Result<u64> {
    match (extent(pi_r, cluster.rows()), extent(pi_c, cluster.cols())) {
        (Some(h), Some(w)) => Ok(h * w),
        (None, _) => Err(Error::EmptyCluster { cluster: 0, axis: "row" }),
        (_, None) => Err(Error::EmptyCluster { cluster: 0, axis: "column" }),
    }
}

pub fn f_prox(bc: &Biclustering, pi_r: &Permutation, pi_c: &Permutation) -> Result<u64> {
    bc.clusters()
        .iter()
        .enumerate()
        .map(|(i, cl)| {
            score_prox(cl, pi_r, pi_c).map_err(|e| match e {
                Error::EmptyCluster { axis, .. } => Error::EmptyCluster { cluster: i + 1, axis },
                e => e,
            })
        })
        .sum()
}

fn sum_sq_runs(runs: &[std::ops::Range<usize>]) -> u64 {
    runs.iter().map(|r| (r.len() as u64).pow(2)).sum()
}

/// Sum of squared areas of the consecutive pieces a cluster is drawn as.
pub fn score_area(cluster: &Bicluster, pi_r: &Permutation, pi_c: &Permutation) -> u64 {
    // sum over X x Y of (|X||Y|)^2 factors into (sum |X|^2)(sum |Y|^2)
    let rows = cons(pi_r.image(cluster.rows()));
    let cols = cons(pi_c.image(cluster.cols()));
    sum_sq_runs(&rows) * sum_sq_runs(&cols)
}

pub fn f_area(bc: &Biclustering, pi_r: &Permutation, pi_c: &Permutation) -> u64 {
    bc.clusters().iter().map(|cl| score_area(cl, pi_r, pi_c)).sum()
}

/// Visual positions on the opposite axis of the blocks sharing a cluster with `block`.
///
/// `perm` is the permutation of the opposite axis. The result is sorted.
pub fn nonzero_block(block: &Block, decomp: &BlockDecomposition, perm: &Permutation) -> Vec<usize> {
    let mut out: Vec<usize> = decomp
        .blocks(block.axis.other())
        .iter()
        .filter(|other| intersection_len(&block.signature, &other.signature) > 0)
        .flat_map(|other| perm.image(&other.members))
        .collect();
    out.sort_unstable();
    out
}

/// Uninterrupted-area objective of a layout.
pub fn f_unint(decomp: &BlockDecomposition, layout: &Layout) -> u64 {
    let scorer = BlockScorer::new(decomp);
    scorer.uninterrupted(layout.sigma_r(), layout.sigma_c())
}

/// Uninterrupted-area objective from raw element permutations, which must keep blocks contiguous.
pub fn f_unint_elements(
    decomp: &BlockDecomposition,
    pi_r: &Permutation,
    pi_c: &Permutation,
) -> Result<u64> {
    block_sequence(decomp, Axis::Row, pi_r)?;
    block_sequence(decomp, Axis::Column, pi_c)?;
    let mut total = 0;
    for (axis, opposite) in [(Axis::Row, pi_c), (Axis::Column, pi_r)] {
        for b in decomp.blocks(axis) {
            let size = b.len() as u64;
            let runs = cons(nonzero_block(b, decomp, opposite));
            total += size * size * sum_sq_runs(&runs);
        }
    }
    Ok(total)
}

/// Penalty for drawing `x` and `y` next to each other, as seen from `anchor` on the opposite axis.
pub fn demerit_triple(anchor: &Block, x: &Block, y: &Block) -> u64 {
    let c1 = intersect(&anchor.signature, &x.signature);
    let c2 = intersect(&anchor.signature, &y.signature);
    let both = intersection_len(&c1, &c2);
    let union = c1.len() + c2.len() - both;
    let size = anchor.len() as u64;
    if c1.is_empty() || c2.is_empty() {
        size * (union as u64 + 1)
    } else {
        size * (union - both) as u64
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// Demerit of placing blocks `i` and `j` of `axis` next to each other, summed over the opposite axis.
pub fn pair_weight(decomp: &BlockDecomposition, axis: Axis, i: usize, j: usize) -> u64 {
    let blocks = decomp.blocks(axis);
    decomp
        .blocks(axis.other())
        .iter()
        .map(|anchor| demerit_triple(anchor, &blocks[i], &blocks[j]))
        .sum()
}

/// All pairwise demerit weights of one axis, zero on the diagonal.
#[allow(clippy::needless_range_loop)]
pub fn weight_matrix(decomp: &BlockDecomposition, axis: Axis) -> Vec<Vec<u64>> {
    let n = decomp.block_count(axis);
    let mut w = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = pair_weight(decomp, axis, i, j);
            w[i][j] = v;
            w[j][i] = v;
        }
    }
    w
}

/// Total demerit of a block order on `axis`.
pub fn demerit_perm(decomp: &BlockDecomposition, axis: Axis, sigma: &[usize]) -> u64 {
    sigma
        .windows(2)
        .map(|w| pair_weight(decomp, axis, w[0], w[1]))
        .sum()
}

/// Demerit of both axes of a layout.
pub fn demerit_layout(decomp: &BlockDecomposition, layout: &Layout) -> u64 {
    demerit_perm(decomp, Axis::Row, layout.sigma_r())
        + demerit_perm(decomp, Axis::Column, layout.sigma_c())
}

/// Evaluates `kind` on a complete layout with the element-level definitions.
pub fn evaluate(
    kind: ObjectiveKind,
    bc: &Biclustering,
    decomp: &BlockDecomposition,
    layout: &Layout,
) -> Result<u64> {
    Ok(match kind {
        ObjectiveKind::Proximity => f_prox(bc, layout.pi_r(), layout.pi_c())?,
        ObjectiveKind::ConsecutiveClusterArea => f_area(bc, layout.pi_r(), layout.pi_c()),
        ObjectiveKind::UninterruptedArea => f_unint_elements(decomp, layout.pi_r(), layout.pi_c())?,
        ObjectiveKind::Demerit => demerit_layout(decomp, layout),
    })
}

/// Objective value restricted to the blocks placed so far.
///
/// Clusters are intersected with the placed elements, which are numbered by
/// their position in the concatenated placed blocks. A cluster that has no
/// placed row or no placed column contributes nothing.
pub fn partial_score(
    kind: ObjectiveKind,
    placed_r: &[usize],
    placed_c: &[usize],
    bc: &Biclustering,
    decomp: &BlockDecomposition,
) -> u64 {
    debug_assert_eq!(bc.len(), decomp.cluster_count());
    BlockScorer::new(decomp).score(kind, placed_r, placed_c)
}

/// Evaluates objectives on block sequences.
///
/// Because every cluster is a union of blocks, all objectives can be read off
/// the block sequences and block sizes alone.
#[derive(Debug, Clone)]
pub struct BlockScorer<'a> {
    decomp: &'a BlockDecomposition,
    clusters: usize,
    /// `row_in[b * k + i]`: row block `b` lies in cluster `i`.
    row_in: Vec<bool>,
    col_in: Vec<bool>,
}

impl<'a> BlockScorer<'a> {
    pub fn new(decomp: &'a BlockDecomposition) -> Self {
        let k = decomp.cluster_count();
        let table = |axis: Axis| {
            let blocks = decomp.blocks(axis);
            let mut t = vec![false; blocks.len() * k];
            for (b, block) in blocks.iter().enumerate() {
                for &i in &block.signature {
                    t[b * k + i] = true;
                }
            }
            t
        };
        Self {
            decomp,
            clusters: k,
            row_in: table(Axis::Row),
            col_in: table(Axis::Column),
        }
    }

    pub fn decomposition(&self) -> &BlockDecomposition {
        self.decomp
    }

    fn member(&self, axis: Axis, block: usize, cluster: usize) -> bool {
        let t = match axis {
            Axis::Row => &self.row_in,
            Axis::Column => &self.col_in,
        };
        t[block * self.clusters + cluster]
    }

    fn size(&self, axis: Axis, block: usize) -> u64 {
        self.decomp.blocks(axis)[block].len() as u64
    }

    /// Visits the maximal runs of consecutive blocks in `seq` selected by `keep`,
    /// reporting `(start offset, run length)` in elements.
    fn runs(&self, axis: Axis, seq: &[usize], keep: impl Fn(usize) -> bool, mut f: impl FnMut(u64, u64)) {
        let mut offset = 0;
        let mut current: Option<(u64, u64)> = None;
        for &b in seq {
            let size = self.size(axis, b);
            if keep(b) {
                match current.as_mut() {
                    Some((_, len)) => *len += size,
                    None => current = Some((offset, size)),
                }
            } else if let Some((start, len)) = current.take() {
                f(start, len);
            }
            offset += size;
        }
        if let Some((start, len)) = current {
            f(start, len);
        }
    }

    fn cluster_extent(&self, axis: Axis, seq: &[usize], cluster: usize) -> Option<u64> {
        let mut span: Option<(u64, u64)> = None;
        self.runs(axis, seq, |b| self.member(axis, b, cluster), |start, len| {
            let end = start + len;
            span = Some(span.map_or((start, end), |(s, _)| (s, end)));
        });
        span.map(|(s, e)| e - s)
    }

    fn cluster_sq_runs(&self, axis: Axis, seq: &[usize], cluster: usize) -> u64 {
        let mut total = 0;
        self.runs(axis, seq, |b| self.member(axis, b, cluster), |_, len| total += len * len);
        total
    }

    pub fn proximity(&self, seq_r: &[usize], seq_c: &[usize]) -> u64 {
        (0..self.clusters)
            .map(|i| {
                match (
                    self.cluster_extent(Axis::Row, seq_r, i),
                    self.cluster_extent(Axis::Column, seq_c, i),
                ) {
                    (Some(h), Some(w)) => h * w,
                    _ => 0,
                }
            })
            .sum()
    }

    pub fn area(&self, seq_r: &[usize], seq_c: &[usize]) -> u64 {
        (0..self.clusters)
            .map(|i| {
                self.cluster_sq_runs(Axis::Row, seq_r, i) * self.cluster_sq_runs(Axis::Column, seq_c, i)
            })
            .sum()
    }

    pub fn uninterrupted(&self, seq_r: &[usize], seq_c: &[usize]) -> u64 {
        let side = |axis: Axis, own: &[usize], opposite: &[usize]| -> u64 {
            own.iter()
                .map(|&b| {
                    let size = self.size(axis, b);
                    let mut sq = 0;
                    self.runs(
                        axis.other(),
                        opposite,
                        |o| self.decomp.shares(axis, b, o),
                        |_, len| sq += len * len,
                    );
                    size * size * sq
                })
                .sum()
        };
        side(Axis::Row, seq_r, seq_c) + side(Axis::Column, seq_c, seq_r)
    }

    /// Demerit of both sequences, each measured against the placed blocks of the other axis.
    pub fn demerit(&self, seq_r: &[usize], seq_c: &[usize]) -> u64 {
        let side = |axis: Axis, seq: &[usize], anchors: &[usize]| -> u64 {
            let blocks = self.decomp.blocks(axis);
            let anchor_blocks = self.decomp.blocks(axis.other());
            seq.windows(2)
                .map(|w| {
                    anchors
                        .iter()
                        .map(|&a| demerit_triple(&anchor_blocks[a], &blocks[w[0]], &blocks[w[1]]))
                        .sum::<u64>()
                })
                .sum()
        };
        side(Axis::Row, seq_r, seq_c) + side(Axis::Column, seq_c, seq_r)
    }

    pub fn score(&self, kind: ObjectiveKind, seq_r: &[usize], seq_c: &[usize]) -> u64 {
        match kind {
            ObjectiveKind::Proximity => self.proximity(seq_r, seq_c),
            ObjectiveKind::ConsecutiveClusterArea => self.area(seq_r, seq_c),
            ObjectiveKind::UninterruptedArea => self.uninterrupted(seq_r, seq_c),
            ObjectiveKind::Demerit => self.demerit(seq_r, seq_c),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::compute_blocks;

    /// 4x4 with B1 = ({1,2},{1,2}) and B2 = ({3,4},{2,3}), 1-based.
    fn d1() -> (Biclustering, BlockDecomposition) {
        let bc = Biclustering::new(vec![
            Bicluster::new([0, 1], [0, 1]),
            Bicluster::new([2, 3], [1, 2]),
        ]);
        let d = compute_blocks(&bc, 4, 4).unwrap();
        (bc, d)
    }

    fn id(n: usize) -> Permutation {
        Permutation::identity(n)
    }

    #[test]
    fn prox_examples() {
        let ex = Bicluster::new([0, 1, 4], [1, 2, 3]);
        assert_eq!(score_prox(&ex, &id(5), &id(5)).unwrap(), 15);
        assert_eq!(score_prox(&Bicluster::new([2], [3]), &id(5), &id(5)).unwrap(), 1);
        assert_eq!(score_prox(&Bicluster::new([0, 1], [0, 1]), &id(4), &id(4)).unwrap(), 4);
        assert!(score_prox(&Bicluster::new([], [0]), &id(2), &id(2)).is_err());
    }

    #[test]
    fn f_prox_examples() {
        let (bc, _) = d1();
        assert_eq!(f_prox(&bc, &id(4), &id(4)).unwrap(), 8);
        assert_eq!(f_prox(&Biclustering::default(), &id(4), &id(4)).unwrap(), 0);
        let full = Biclustering::new(vec![Bicluster::new(0..3, 0..5)]);
        let pr = Permutation::from_order(vec![2, 0, 1]).unwrap();
        let pc = Permutation::from_order(vec![4, 3, 2, 1, 0]).unwrap();
        assert_eq!(f_prox(&full, &pr, &pc).unwrap(), 15);
    }

    #[test]
    fn area_examples() {
        let rect = Bicluster::new([1, 2], [0, 1, 2]);
        assert_eq!(score_area(&rect, &id(4), &id(4)), 36);
        let ex = Bicluster::new([0, 1, 4], [1, 2, 3]);
        assert_eq!(score_area(&ex, &id(5), &id(5)), 45);
        let (bc, _) = d1();
        assert_eq!(score_area(bc.get(0), &id(4), &id(4)), 16);
        assert_eq!(f_area(&bc, &id(4), &id(4)), 32);
        assert_eq!(f_area(&Biclustering::default(), &id(4), &id(4)), 0);
        let two = Biclustering::new(vec![Bicluster::new([0], [0]), Bicluster::new([1], [1])]);
        assert_eq!(f_area(&two, &id(2), &id(2)), 2);
    }

    #[test]
    fn nonzero_examples() {
        let (_, d) = d1();
        assert_eq!(nonzero_block(&d.row_blocks()[0], &d, &id(4)), vec![0, 1]);
        let unclustered = &d.col_blocks()[3];
        assert!(unclustered.is_unclustered());
        assert!(nonzero_block(unclustered, &d, &id(4)).is_empty());
    }

    #[test]
    fn unint_examples() {
        let (bc, d) = d1();
        let l = Layout::from_block_orders(&d, vec![0, 1], vec![0, 1, 2, 3]).unwrap();
        assert_eq!(f_unint(&d, &l), 56);
        assert_eq!(f_unint_elements(&d, &id(4), &id(4)).unwrap(), 56);
        assert_eq!(evaluate(ObjectiveKind::UninterruptedArea, &bc, &d, &l).unwrap(), 56);

        let none = compute_blocks(&Biclustering::default(), 3, 3).unwrap();
        assert_eq!(f_unint(&none, &Layout::identity(&none)), 0);

        let full_bc = Biclustering::new(vec![Bicluster::new(0..3, 0..2)]);
        let full = compute_blocks(&full_bc, 3, 2).unwrap();
        assert_eq!(f_unint(&full, &Layout::identity(&full)), 36 + 36);
    }

    #[test]
    fn unint_rejects_split_blocks() {
        let bc = Biclustering::new(vec![Bicluster::new([0, 2], [0])]);
        let d = compute_blocks(&bc, 3, 1).unwrap();
        assert_eq!(
            f_unint_elements(&d, &id(3), &id(1)),
            Err(Error::NotBlockContiguous("row"))
        );
    }

    #[test]
    fn demerit_examples() {
        let (_, d) = d1();
        let rb = &d.row_blocks()[0];
        let cb = d.col_blocks();
        assert_eq!(cb[0].signature, vec![0]);
        assert_eq!(cb[1].signature, vec![0, 1]);
        assert_eq!(cb[2].signature, vec![1]);
        assert_eq!(demerit_triple(rb, &cb[0], &cb[1]), 0);
        assert_eq!(demerit_triple(rb, &cb[0], &cb[2]), 4);
        assert_eq!(demerit_triple(rb, &cb[0], &cb[0]), 0);
        assert_eq!(pair_weight(&d, Axis::Column, 0, 2), 8);
        assert_eq!(pair_weight(&d, Axis::Column, 2, 0), 8);
        assert_eq!(demerit_perm(&d, Axis::Column, &[1]), 0);
    }

    #[test]
    fn partial_examples() {
        let (bc, d) = d1();
        for kind in ObjectiveKind::ALL {
            assert_eq!(partial_score(kind, &[], &[], &bc, &d), 0);
        }
        assert_eq!(
            partial_score(ObjectiveKind::ConsecutiveClusterArea, &[0], &[0, 1], &bc, &d),
            16
        );
        let l = Layout::from_block_orders(&d, vec![1, 0], vec![2, 0, 3, 1]).unwrap();
        for kind in ObjectiveKind::ALL {
            assert_eq!(
                partial_score(kind, l.sigma_r(), l.sigma_c(), &bc, &d),
                evaluate(kind, &bc, &d, &l).unwrap(),
                "{kind}"
            );
        }
    }

    #[test]
    fn objective_names_round_trip() {
        for k in ObjectiveKind::ALL {
            assert_eq!(k.name().parse::<ObjectiveKind>().unwrap(), k);
        }
        assert!(ObjectiveKind::Proximity.improves(3, 4));
        assert!(ObjectiveKind::UninterruptedArea.improves(5, 4));
    }
}
