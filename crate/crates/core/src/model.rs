//! Matrices, biclusterings, blocks and layouts.
//!
//! All indices in this crate are 0-based. File formats and reports use
//! 1-based indices and convert at the boundary.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    Row,
    Column,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Row => "row",
            Axis::Column => "column",
        }
    }

    pub fn other(self) -> Axis {
        match self {
            Axis::Row => Axis::Column,
            Axis::Column => Axis::Row,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sparse 0/1 matrix stored as sorted adjacency lists in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    row_ones: Vec<Vec<usize>>,
    col_ones: Vec<Vec<usize>>,
}

impl BinaryMatrix {
    /// Builds a matrix from its 1-cells. Out-of-range and repeated entries are rejected.
    pub fn new(
        rows: usize,
        cols: usize,
        ones: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        let mut row_ones = vec![Vec::new(); rows];
        let mut col_ones = vec![Vec::new(); cols];
        for (r, c) in ones {
            if r >= rows {
                return Err(Error::IndexOutOfRange {
                    axis: "row",
                    index: r + 1,
                    bound: rows,
                });
            }
            if c >= cols {
                return Err(Error::IndexOutOfRange {
                    axis: "column",
                    index: c + 1,
                    bound: cols,
                });
            }
            row_ones[r].push(c);
            col_ones[c].push(r);
        }
        for (r, list) in row_ones.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEntry { row: r + 1, col: w[0] + 1 });
            }
        }
        for list in col_ones.iter_mut() {
            list.sort_unstable();
        }
        Ok(Self {
            rows,
            cols,
            row_ones,
            col_ones,
        })
    }

    /// Builds a matrix from dense rows of 0/1 values.
    pub fn from_dense(data: &[Vec<u8>]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let mut ones = Vec::new();
        for (r, row) in data.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::EmptyMatrix { rows, cols: row.len() });
            }
            ones.extend(row.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, _)| (r, c)));
        }
        Self::new(rows, cols, ones)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self, axis: Axis) -> usize {
        match axis {
            Axis::Row => self.rows,
            Axis::Column => self.cols,
        }
    }

    pub fn nnz(&self) -> usize {
        self.row_ones.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.row_ones[row].binary_search(&col).is_ok()
    }

    /// Column indices of the 1-entries in `row`, ascending.
    pub fn row_ones(&self, row: usize) -> &[usize] {
        &self.row_ones[row]
    }

    /// Row indices of the 1-entries in `col`, ascending.
    pub fn col_ones(&self, col: usize) -> &[usize] {
        &self.col_ones[col]
    }

    /// 1-entries of line `index` along `axis` (a row for `Row`, a column for `Column`).
    pub fn line_ones(&self, axis: Axis, index: usize) -> &[usize] {
        match axis {
            Axis::Row => self.row_ones(index),
            Axis::Column => self.col_ones(index),
        }
    }

    /// Iterates over all 1-cells in row-major order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.row_ones
            .iter()
            .enumerate()
            .flat_map(|(r, cs)| cs.iter().map(move |&c| (r, c)))
    }
}

/// A row set and a column set, both sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bicluster {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Bicluster {
    pub fn new(rows: impl IntoIterator<Item = usize>, cols: impl IntoIterator<Item = usize>) -> Self {
        let mut rows: Vec<usize> = rows.into_iter().collect();
        let mut cols: Vec<usize> = cols.into_iter().collect();
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        Self { rows, cols }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn members(&self, axis: Axis) -> &[usize] {
        match axis {
            Axis::Row => &self.rows,
            Axis::Column => &self.cols,
        }
    }

    /// `|R_i| * |C_i|`.
    pub fn area(&self) -> u64 {
        (self.rows.len() as u64) * (self.cols.len() as u64)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.rows.binary_search(&row).is_ok() && self.cols.binary_search(&col).is_ok()
    }
}

/// An ordered list of possibly overlapping biclusters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biclustering {
    clusters: Vec<Bicluster>,
}

impl Biclustering {
    pub fn new(clusters: Vec<Bicluster>) -> Self {
        Self { clusters }
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn clusters(&self) -> &[Bicluster] {
        &self.clusters
    }

    pub fn get(&self, index: usize) -> &Bicluster {
        &self.clusters[index]
    }

    /// Rejects empty clusters and indices outside an `rows x cols` matrix.
    pub fn validate(&self, rows: usize, cols: usize) -> Result<()> {
        for (i, cl) in self.clusters.iter().enumerate() {
            for (axis, bound) in [(Axis::Row, rows), (Axis::Column, cols)] {
                let members = cl.members(axis);
                if members.is_empty() {
                    return Err(Error::EmptyCluster {
                        cluster: i + 1,
                        axis: axis.name(),
                    });
                }
                if let Some(&last) = members.last() {
                    if last >= bound {
                        return Err(Error::IndexOutOfRange {
                            axis: axis.name(),
                            index: last + 1,
                            bound,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Cluster indices containing element `index` on `axis`, for every element.
    pub fn memberships(&self, axis: Axis, len: usize) -> Vec<Vec<usize>> {
        let mut sig = vec![Vec::new(); len];
        for (i, cl) in self.clusters.iter().enumerate() {
            for &e in cl.members(axis) {
                sig[e].push(i);
            }
        }
        sig
    }
}

/// Maximal runs of consecutive integers in `set`, ordered by their smallest element.
///
/// Runs are half-open ranges. Duplicates in the input are ignored.
pub fn cons(set: impl IntoIterator<Item = usize>) -> Vec<Range<usize>> {
    let mut xs: Vec<usize> = set.into_iter().collect();
    xs.sort_unstable();
    xs.dedup();
    let mut runs: Vec<Range<usize>> = Vec::new();
    for x in xs {
        match runs.last_mut() {
            Some(run) if run.end == x => run.end += 1,
            _ => runs.push(x..x + 1),
        }
    }
    runs
}

/// Elements of one axis sharing an identical cluster-membership signature.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub axis: Axis,
    /// Ascending element indices.
    pub members: Vec<usize>,
    /// Ascending cluster indices; empty for unclustered elements.
    pub signature: Vec<usize>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_unclustered(&self) -> bool {
        self.signature.is_empty()
    }

    pub fn min_member(&self) -> usize {
        self.members[0]
    }
}

/// Row and column blocks of a biclustering.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    row_blocks: Vec<Block>,
    col_blocks: Vec<Block>,
    row_block_of: Vec<usize>,
    col_block_of: Vec<usize>,
    /// `shares[r * t + c]`: row block `r` and column block `c` co-occur in a cluster.
    shares: Vec<bool>,
    clusters: usize,
}

impl BlockDecomposition {
    pub fn blocks(&self, axis: Axis) -> &[Block] {
        match axis {
            Axis::Row => &self.row_blocks,
            Axis::Column => &self.col_blocks,
        }
    }

    pub fn row_blocks(&self) -> &[Block] {
        &self.row_blocks
    }

    pub fn col_blocks(&self) -> &[Block] {
        &self.col_blocks
    }

    pub fn block_count(&self, axis: Axis) -> usize {
        self.blocks(axis).len()
    }

    /// Block index of element `index` on `axis`.
    pub fn block_of(&self, axis: Axis, index: usize) -> usize {
        match axis {
            Axis::Row => self.row_block_of[index],
            Axis::Column => self.col_block_of[index],
        }
    }

    pub fn cluster_count(&self) -> usize {
        self.clusters
    }

    pub fn element_count(&self, axis: Axis) -> usize {
        match axis {
            Axis::Row => self.row_block_of.len(),
            Axis::Column => self.col_block_of.len(),
        }
    }

    /// Whether block `a` on `axis` and block `b` on the other axis share a cluster.
    pub fn shares(&self, axis: Axis, a: usize, b: usize) -> bool {
        let t = self.col_blocks.len();
        match axis {
            Axis::Row => self.shares[a * t + b],
            Axis::Column => self.shares[b * t + a],
        }
    }

    /// Index of the empty-signature block on `axis`, if any element is unclustered.
    pub fn unclustered_block(&self, axis: Axis) -> Option<usize> {
        self.blocks(axis).iter().position(Block::is_unclustered)
    }
}

/// Groups rows and columns by their cluster-membership signatures.
///
/// Blocks are ordered by smallest member. All unclustered elements of an axis
/// form a single block with an empty signature.
pub fn compute_blocks(bc: &Biclustering, rows: usize, cols: usize) -> Result<BlockDecomposition> {
    bc.validate(rows, cols)?;
    let (row_blocks, row_block_of) = axis_blocks(bc, Axis::Row, rows);
    let (col_blocks, col_block_of) = axis_blocks(bc, Axis::Column, cols);
    let t = col_blocks.len();
    let mut shares = vec![false; row_blocks.len() * t];
    for (r, rb) in row_blocks.iter().enumerate() {
        for (c, cb) in col_blocks.iter().enumerate() {
            shares[r * t + c] = intersection_len(&rb.signature, &cb.signature) > 0;
        }
    }
    Ok(BlockDecomposition {
        row_blocks,
        col_blocks,
        row_block_of,
        col_block_of,
        shares,
        clusters: bc.len(),
    })
}

fn axis_blocks(bc: &Biclustering, axis: Axis, len: usize) -> (Vec<Block>, Vec<usize>) {
    let sigs = bc.memberships(axis, len);
    let mut by_sig: BTreeMap<&[usize], usize> = BTreeMap::new();
    let mut blocks: Vec<Block> = Vec::new();
    let mut block_of = vec![0; len];
    // elements are visited in ascending order, so blocks come out sorted by smallest member
    for (e, sig) in sigs.iter().enumerate() {
        let id = *by_sig.entry(sig.as_slice()).or_insert_with(|| {
            blocks.push(Block {
                axis,
                members: Vec::new(),
                signature: sig.clone(),
            });
            blocks.len() - 1
        });
        blocks[id].members.push(e);
        block_of[e] = id;
    }
    (blocks, block_of)
}

/// Size of the intersection of two ascending slices.
pub(crate) fn intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Sum of the areas of the clusters `block` belongs to.
pub fn importance(block: &Block, bc: &Biclustering) -> u64 {
    block.signature.iter().map(|&i| bc.get(i).area()).sum()
}

/// Block indices of one axis sorted by descending importance, ties by smallest member.
pub fn importance_order(blocks: &[Block], bc: &Biclustering) -> Vec<usize> {
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by_key(|&b| (std::cmp::Reverse(importance(&blocks[b], bc)), blocks[b].min_member()));
    order
}

/// A bijection between element indices and visual positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    /// `position[element]`
    position: Vec<usize>,
    /// `order[position]`
    order: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Self {
            position: (0..len).collect(),
            order: (0..len).collect(),
        }
    }

    /// Builds a permutation from the visual order: `order[p]` is the element shown at position `p`.
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let mut position = vec![usize::MAX; order.len()];
        for (p, &e) in order.iter().enumerate() {
            if e >= order.len() || position[e] != usize::MAX {
                return Err(Error::InvalidPermutation(format!(
                    "element {} repeated or out of range",
                    e + 1
                )));
            }
            position[e] = p;
        }
        Ok(Self { position, order })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of `element`.
    pub fn apply(&self, element: usize) -> usize {
        self.position[element]
    }

    /// Element shown at `position`.
    pub fn inverse(&self, position: usize) -> usize {
        self.order[position]
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// Image of a set of elements, unsorted.
    pub fn image<'a>(&'a self, set: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
        set.iter().map(move |&e| self.position[e])
    }
}

/// Concatenates `blocks` in `sigma` order; members keep ascending order within a block.
pub fn expand(sigma: &[usize], blocks: &[Block]) -> Result<Permutation> {
    check_block_order(sigma, blocks.len())?;
    let order: Vec<usize> = sigma
        .iter()
        .flat_map(|&b| blocks[b].members.iter().copied())
        .collect();
    Permutation::from_order(order)
}

fn check_block_order(sigma: &[usize], count: usize) -> Result<()> {
    let mut seen = vec![false; count];
    if sigma.len() != count {
        return Err(Error::InvalidPermutation(format!(
            "block order has {} entries, expected {count}",
            sigma.len()
        )));
    }
    for &b in sigma {
        if b >= count || std::mem::replace(&mut seen[b], true) {
            return Err(Error::InvalidPermutation(format!("block {} repeated or out of range", b + 1)));
        }
    }
    Ok(())
}

/// Row and column block orders together with the element permutations they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    sigma_r: Vec<usize>,
    sigma_c: Vec<usize>,
    pi_r: Permutation,
    pi_c: Permutation,
}

impl Layout {
    pub fn from_block_orders(
        decomp: &BlockDecomposition,
        sigma_r: Vec<usize>,
        sigma_c: Vec<usize>,
    ) -> Result<Self> {
        let pi_r = expand(&sigma_r, decomp.row_blocks())?;
        let pi_c = expand(&sigma_c, decomp.col_blocks())?;
        Ok(Self {
            sigma_r,
            sigma_c,
            pi_r,
            pi_c,
        })
    }

    /// Blocks in decomposition order, with the unclustered block moved last on each axis.
    pub fn identity(decomp: &BlockDecomposition) -> Self {
        let order = |axis: Axis| {
            let unclustered = decomp.unclustered_block(axis);
            let mut o: Vec<usize> =
                (0..decomp.block_count(axis)).filter(|&b| Some(b) != unclustered).collect();
            o.extend(unclustered);
            o
        };
        Self::from_block_orders(decomp, order(Axis::Row), order(Axis::Column))
            .expect("identity block order is a bijection")
    }

    /// Builds a layout from explicit element orders, which must keep every block
    /// contiguous. The block orders are read off the element orders.
    pub fn from_element_orders(
        decomp: &BlockDecomposition,
        pi_r: Permutation,
        pi_c: Permutation,
    ) -> Result<Self> {
        let sigma_r = block_sequence(decomp, Axis::Row, &pi_r)?;
        let sigma_c = block_sequence(decomp, Axis::Column, &pi_c)?;
        Ok(Self {
            sigma_r,
            sigma_c,
            pi_r,
            pi_c,
        })
    }

    pub fn sigma(&self, axis: Axis) -> &[usize] {
        match axis {
            Axis::Row => &self.sigma_r,
            Axis::Column => &self.sigma_c,
        }
    }

    pub fn pi(&self, axis: Axis) -> &Permutation {
        match axis {
            Axis::Row => &self.pi_r,
            Axis::Column => &self.pi_c,
        }
    }

    pub fn sigma_r(&self) -> &[usize] {
        &self.sigma_r
    }

    pub fn sigma_c(&self) -> &[usize] {
        &self.sigma_c
    }

    pub fn pi_r(&self) -> &Permutation {
        &self.pi_r
    }

    pub fn pi_c(&self) -> &Permutation {
        &self.pi_c
    }
}

/// Reads the block sequence off an element permutation, failing if any block is split.
pub fn block_sequence(decomp: &BlockDecomposition, axis: Axis, pi: &Permutation) -> Result<Vec<usize>> {
    if pi.len() != decomp.element_count(axis) {
        return Err(Error::InvalidPermutation(format!(
            "{axis} permutation has length {}, expected {}",
            pi.len(),
            decomp.element_count(axis)
        )));
    }
    let mut seq: Vec<usize> = Vec::with_capacity(decomp.block_count(axis));
    let mut seen = vec![false; decomp.block_count(axis)];
    for &e in pi.order() {
        let b = decomp.block_of(axis, e);
        if seq.last() != Some(&b) {
            if seen[b] {
                return Err(Error::NotBlockContiguous(axis.name()));
            }
            seen[b] = true;
            seq.push(b);
        }
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bc(clusters: &[(&[usize], &[usize])]) -> Biclustering {
        Biclustering::new(
            clusters
                .iter()
                .map(|(r, c)| Bicluster::new(r.iter().copied(), c.iter().copied()))
                .collect(),
        )
    }

    #[test]
    fn cons_examples() {
        assert_eq!(cons([1, 2, 5]), vec![1..3, 5..6]);
        assert!(cons([]).is_empty());
        assert_eq!(cons([3]), vec![3..4]);
        assert_eq!(cons([7, 6, 6, 5]), vec![5..8]);
    }

    #[test]
    fn overlapping_row_blocks() {
        // rows 1,2 / 2,3 (1-based) -> {1}:{1}, {2}:{1,2}, {3}:{2}
        let d = compute_blocks(&bc(&[(&[0, 1], &[0]), (&[1, 2], &[0])]), 3, 1).unwrap();
        let rb = d.row_blocks();
        assert_eq!(rb.len(), 3);
        assert_eq!((rb[0].members.as_slice(), rb[0].signature.as_slice()), (&[0][..], &[0][..]));
        assert_eq!((rb[1].members.as_slice(), rb[1].signature.as_slice()), (&[1][..], &[0, 1][..]));
        assert_eq!((rb[2].members.as_slice(), rb[2].signature.as_slice()), (&[2][..], &[1][..]));
    }

    #[test]
    fn no_clusters_gives_single_unclustered_block() {
        let d = compute_blocks(&Biclustering::default(), 4, 2).unwrap();
        assert_eq!(d.row_blocks().len(), 1);
        assert_eq!(d.row_blocks()[0].members, vec![0, 1, 2, 3]);
        assert!(d.row_blocks()[0].is_unclustered());
        assert_eq!(d.unclustered_block(Axis::Row), Some(0));
    }

    #[test]
    fn disjoint_clusters_plus_unclustered() {
        let d = compute_blocks(&bc(&[(&[0], &[0]), (&[1], &[0])]), 3, 1).unwrap();
        let members: Vec<_> = d.row_blocks().iter().map(|b| b.members.clone()).collect();
        assert_eq!(members, vec![vec![0], vec![1], vec![2]]);
        assert!(d.row_blocks()[2].is_unclustered());
    }

    #[test]
    fn out_of_bounds_and_empty_clusters_rejected() {
        assert!(matches!(
            compute_blocks(&bc(&[(&[0, 5], &[0])]), 3, 1),
            Err(Error::IndexOutOfRange { axis: "row", index: 6, .. })
        ));
        assert!(matches!(
            compute_blocks(&bc(&[(&[0], &[])]), 3, 1),
            Err(Error::EmptyCluster { cluster: 1, axis: "column" })
        ));
    }

    #[test]
    fn importance_examples() {
        let clusters = bc(&[(&[0, 1], &[0, 1]), (&[1, 2], &[0, 1, 2])]);
        let b = |sig: Vec<usize>| Block {
            axis: Axis::Row,
            members: vec![0],
            signature: sig,
        };
        assert_eq!(importance(&b(vec![0]), &clusters), 4);
        assert_eq!(importance(&b(vec![]), &clusters), 0);
        assert_eq!(importance(&b(vec![0, 1]), &clusters), 10);
    }

    #[test]
    fn expand_examples() {
        let blocks = |ms: &[&[usize]]| -> Vec<Block> {
            ms.iter()
                .map(|m| Block {
                    axis: Axis::Row,
                    members: m.to_vec(),
                    signature: vec![],
                })
                .collect()
        };
        let p = expand(&[1, 0], &blocks(&[&[2, 3], &[0, 1]])).unwrap();
        assert_eq!(p.order(), &[0, 1, 2, 3]);
        let p = expand(&[0], &blocks(&[&[0, 1, 2]])).unwrap();
        assert_eq!(p, Permutation::identity(3));
        let p = expand(&[1, 0], &blocks(&[&[0], &[1]])).unwrap();
        assert_eq!((p.apply(1), p.apply(0)), (0, 1));
        assert!(expand(&[0, 0], &blocks(&[&[0], &[1]])).is_err());
    }

    #[test]
    fn matrix_rejects_duplicates_and_bounds() {
        assert!(matches!(
            BinaryMatrix::new(2, 2, [(0, 1), (0, 1)]),
            Err(Error::DuplicateEntry { row: 1, col: 2 })
        ));
        assert!(BinaryMatrix::new(2, 2, [(2, 0)]).is_err());
        assert!(BinaryMatrix::new(0, 2, []).is_err());
        let m = BinaryMatrix::from_dense(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(m.ones().collect::<Vec<_>>(), vec![(0, 0), (1, 1)]);
        assert_eq!(m.col_ones(1), &[1]);
    }

    #[test]
    fn element_orders_must_keep_blocks_contiguous() {
        let clusters = bc(&[(&[0, 2], &[0])]);
        let d = compute_blocks(&clusters, 3, 1).unwrap();
        let split = Permutation::from_order(vec![0, 1, 2]).unwrap();
        let cols = Permutation::identity(1);
        assert_eq!(
            Layout::from_element_orders(&d, split, cols.clone()),
            Err(Error::NotBlockContiguous("row"))
        );
        let ok = Permutation::from_order(vec![1, 2, 0]).unwrap();
        let l = Layout::from_element_orders(&d, ok, cols).unwrap();
        assert_eq!(l.sigma_r(), &[1, 0]);
    }

    #[test]
    fn identity_layout_puts_unclustered_last() {
        let d = compute_blocks(&bc(&[(&[1], &[0])]), 3, 1).unwrap();
        let l = Layout::identity(&d);
        assert_eq!(l.pi_r().order(), &[1, 0, 2]);
    }
}
