//! Straight-from-the-definitions evaluator used to check the library.
//!
//! Works on plain vectors (clusters as row/column lists, permutations as
//! element -> position arrays) and recomputes everything, including
//! signatures, without touching the library's block machinery.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Debug, Clone)]
pub struct Instance {
    pub m: usize,
    pub n: usize,
    pub clusters: Vec<(Vec<usize>, Vec<usize>)>,
}

pub fn runs(set: &[usize]) -> Vec<Vec<usize>> {
    let s: BTreeSet<usize> = set.iter().copied().collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in s {
        match out.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == x => run.push(x),
            _ => out.push(vec![x]),
        }
    }
    out
}

fn image(pos: &[usize], set: &[usize]) -> Vec<usize> {
    set.iter().map(|&e| pos[e]).collect()
}

pub fn prox(inst: &Instance, pr: &[usize], pc: &[usize]) -> u64 {
    inst.clusters
        .iter()
        .map(|(r, c)| {
            let ir = image(pr, r);
            let ic = image(pc, c);
            let h = ir.iter().max().unwrap() - ir.iter().min().unwrap() + 1;
            let w = ic.iter().max().unwrap() - ic.iter().min().unwrap() + 1;
            (h * w) as u64
        })
        .sum()
}

pub fn area(inst: &Instance, pr: &[usize], pc: &[usize]) -> u64 {
    let mut total = 0u64;
    for (r, c) in &inst.clusters {
        for x in runs(&image(pr, r)) {
            for y in runs(&image(pc, c)) {
                let a = (x.len() * y.len()) as u64;
                total += a * a;
            }
        }
    }
    total
}

/// Unsquared area pieces of one cluster.
pub fn area_unsquared(r: &[usize], c: &[usize], pr: &[usize], pc: &[usize]) -> u64 {
    let mut total = 0;
    for x in runs(&image(pr, r)) {
        for y in runs(&image(pc, c)) {
            total += (x.len() * y.len()) as u64;
        }
    }
    total
}

pub fn signatures(inst: &Instance, row_axis: bool) -> Vec<BTreeSet<usize>> {
    let len = if row_axis { inst.m } else { inst.n };
    let mut sig = vec![BTreeSet::new(); len];
    for (i, (r, c)) in inst.clusters.iter().enumerate() {
        for &e in if row_axis { r } else { c } {
            sig[e].insert(i);
        }
    }
    sig
}

/// Blocks of one axis: (members, signature), ordered by smallest member.
pub fn blocks(inst: &Instance, row_axis: bool) -> Vec<(Vec<usize>, BTreeSet<usize>)> {
    let sig = signatures(inst, row_axis);
    let mut groups: BTreeMap<BTreeSet<usize>, Vec<usize>> = BTreeMap::new();
    for (e, s) in sig.iter().enumerate() {
        groups.entry(s.clone()).or_default().push(e);
    }
    let mut out: Vec<_> = groups.into_iter().map(|(s, m)| (m, s)).collect();
    out.sort_by_key(|(m, _)| m[0]);
    out
}

/// Uninterrupted area. For each block, the row runs of the block itself are
/// crossed with the runs of its nonzero columns, which coincides with the
/// block formula whenever blocks are contiguous.
pub fn unint(inst: &Instance, pr: &[usize], pc: &[usize]) -> u64 {
    unint_with(&blocks(inst, true), &blocks(inst, false), pr, pc)
}

/// [`unint`] with the row and column blocks supplied by the caller.
pub fn unint_with(
    row_blocks: &[(Vec<usize>, BTreeSet<usize>)],
    col_blocks: &[(Vec<usize>, BTreeSet<usize>)],
    pr: &[usize],
    pc: &[usize],
) -> u64 {
    let mut total = 0u64;
    for (mine, theirs, own, other) in [(row_blocks, col_blocks, pr, pc), (col_blocks, row_blocks, pc, pr)] {
        for (members, sig) in mine {
            let nonzero: Vec<usize> = theirs
                .iter()
                .filter(|(_, s)| !s.is_disjoint(sig))
                .flat_map(|(m, _)| image(other, m))
                .collect();
            for x in runs(&image(own, members)) {
                for y in runs(&nonzero) {
                    let a = (x.len() * y.len()) as u64;
                    total += a * a;
                }
            }
        }
    }
    total
}

pub fn demerit(size: usize, anchor: &BTreeSet<usize>, x: &BTreeSet<usize>, y: &BTreeSet<usize>) -> u64 {
    let c1: BTreeSet<usize> = anchor.intersection(x).copied().collect();
    let c2: BTreeSet<usize> = anchor.intersection(y).copied().collect();
    let union = c1.union(&c2).count() as u64;
    let inter = c1.intersection(&c2).count() as u64;
    if c1.is_empty() || c2.is_empty() {
        size as u64 * (union + 1)
    } else {
        size as u64 * (union - inter)
    }
}

/// Demerit of a block order on one axis (`row_axis` selects which), summing over all opposite blocks.
pub fn demerit_order(inst: &Instance, row_axis: bool, order: &[usize]) -> u64 {
    let mine = blocks(inst, row_axis);
    let anchors = blocks(inst, !row_axis);
    order
        .windows(2)
        .map(|w| {
            anchors
                .iter()
                .map(|(m, s)| demerit(m.len(), s, &mine[w[0]].1, &mine[w[1]].1))
                .sum::<u64>()
        })
        .sum()
}

/// Element positions from block orders, members ascending within blocks.
pub fn positions(blocks: &[(Vec<usize>, BTreeSet<usize>)], order: &[usize], len: usize) -> Vec<usize> {
    let mut pos = vec![usize::MAX; len];
    let mut p = 0;
    for &b in order {
        for &e in &blocks[b].0 {
            pos[e] = p;
            p += 1;
        }
    }
    pos
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Inverse of a visual order: element -> position.
pub fn invert(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (p, &e) in order.iter().enumerate() {
        pos[e] = p;
    }
    pos
}

fn random_subset(rng: &mut impl Rng, len: usize) -> Vec<usize> {
    let size = rng.random_range(1..=len);
    let mut all: Vec<usize> = (0..len).collect();
    all.shuffle(rng);
    let mut s = all[..size].to_vec();
    s.sort_unstable();
    s
}

/// Random instance with up to `max_k` non-empty clusters.
pub fn random_instance(rng: &mut impl Rng, max_m: usize, max_n: usize, max_k: usize) -> Instance {
    let m = rng.random_range(1..=max_m);
    let n = rng.random_range(1..=max_n);
    let k = rng.random_range(0..=max_k);
    let clusters = (0..k)
        .map(|_| (random_subset(rng, m), random_subset(rng, n)))
        .collect();
    Instance { m, n, clusters }
}

/// Random instance whose block counts per axis are at most `max_blocks`.
pub fn random_instance_blocks(
    rng: &mut impl Rng,
    max_m: usize,
    max_n: usize,
    max_k: usize,
    max_blocks: usize,
) -> Instance {
    loop {
        let inst = random_instance(rng, max_m, max_n, max_k);
        if blocks(&inst, true).len() <= max_blocks && blocks(&inst, false).len() <= max_blocks {
            return inst;
        }
    }
}

impl Instance {
    pub fn biclustering(&self) -> biclayout::Biclustering {
        biclayout::Biclustering::new(
            self.clusters
                .iter()
                .map(|(r, c)| biclayout::Bicluster::new(r.iter().copied(), c.iter().copied()))
                .collect(),
        )
    }
}
