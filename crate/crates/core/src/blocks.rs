//! Set partitions of a labelled index set.

use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

/// A partition of `labels` into disjoint nonempty blocks.
///
/// Blocks hold label indices in ascending order, and blocks are ordered by
/// their least member, so equal partitions compare equal structurally.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockPartition<L> {
    labels: Vec<L>,
    blocks: Vec<Vec<usize>>,
}

impl<L> BlockPartition<L> {
    /// Build from explicit blocks; they are normalised but must be disjoint
    /// and cover every label.
    pub fn from_blocks(labels: Vec<L>, mut blocks: Vec<Vec<usize>>) -> Self {
        let mut seen = vec![false; labels.len()];
        for b in &mut blocks {
            b.sort_unstable();
            for &i in b.iter() {
                assert!(!seen[i], "label {i} appears in two blocks");
                seen[i] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "blocks do not cover all labels");
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable_by_key(|b| b[0]);
        BlockPartition { labels, blocks }
    }

    /// Group labels by a key; equal keys share a block.
    pub fn from_keys<K: Ord>(labels: Vec<L>, keys: Vec<K>) -> Self {
        assert_eq!(labels.len(), keys.len());
        let mut groups: BTreeMap<K, Vec<usize>> = BTreeMap::new();
        for (i, k) in keys.into_iter().enumerate() {
            groups.entry(k).or_default().push(i);
        }
        Self::from_blocks(labels, groups.into_values().collect())
    }

    pub fn from_union_find(labels: Vec<L>, uf: &UnionFind<usize>) -> Self {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..labels.len() {
            groups.entry(uf.find(i)).or_default().push(i);
        }
        Self::from_blocks(labels, groups.into_values().collect())
    }

    pub fn singletons(labels: Vec<L>) -> Self {
        let blocks = (0..labels.len()).map(|i| vec![i]).collect();
        BlockPartition { labels, blocks }
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_members(&self, b: usize) -> impl Iterator<Item = &L> {
        self.blocks[b].iter().map(|&i| &self.labels[i])
    }

    /// `block_of()[i]` is the block index containing label `i`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.labels.len()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                out[i] = b;
            }
        }
        out
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        let of = self.block_of();
        of[a] == of[b]
    }

    pub fn map_labels<M>(self, f: impl FnMut(L) -> M) -> BlockPartition<M> {
        BlockPartition {
            labels: self.labels.into_iter().map(f).collect(),
            blocks: self.blocks,
        }
    }
}

impl<L: PartialEq> BlockPartition<L> {
    /// Compare against `coarser` over the same labels.
    pub fn compare(&self, coarser: &BlockPartition<L>) -> Comparison {
        assert!(
            self.labels == coarser.labels,
            "partitions over different label sets"
        );
        let coarse_of = coarser.block_of();
        let mut counterexample = None;
        for (b, block) in self.blocks.iter().enumerate() {
            let target = coarse_of[block[0]];
            if let Some(&stray) = block.iter().find(|&&i| coarse_of[i] != target) {
                counterexample = Some(Counterexample {
                    left_block: b,
                    right_block: coarse_of[stray],
                });
                break;
            }
        }
        let refines = counterexample.is_none();
        let equal = refines && self.blocks == coarser.blocks;
        if refines && !equal {
            let fine_of = self.block_of();
            for (b, block) in coarser.blocks.iter().enumerate() {
                let first = fine_of[block[0]];
                if block.iter().any(|&i| fine_of[i] != first) {
                    counterexample = Some(Counterexample {
                        left_block: first,
                        right_block: b,
                    });
                    break;
                }
            }
        }
        Comparison {
            refines,
            equal,
            counterexample,
        }
    }
}

/// Result of comparing a (supposedly) finer partition with a coarser one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub refines: bool,
    pub equal: bool,
    pub counterexample: Option<Counterexample>,
}

/// A left block that straddles right blocks, or a right block split on the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub left_block: usize,
    pub right_block: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keyed_blocks_are_ordered() {
        let p = BlockPartition::from_keys(vec!['a', 'b', 'c', 'd'], vec![2, 1, 2, 0]);
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1], vec![3]]);
    }

    #[test]
    fn comparison() {
        let fine =
            BlockPartition::from_blocks(vec![0, 1, 2, 3], vec![vec![0], vec![1], vec![2, 3]]);
        let coarse = BlockPartition::from_blocks(vec![0, 1, 2, 3], vec![vec![0, 1], vec![2, 3]]);
        let c = fine.compare(&coarse);
        assert!(c.refines && !c.equal);
        assert_eq!(
            c.counterexample,
            Some(Counterexample {
                left_block: 0,
                right_block: 0
            })
        );
        let back = coarse.compare(&fine);
        assert!(!back.refines && !back.equal);
        assert!(fine.compare(&fine).equal);
    }

    #[test]
    fn union_find_blocks() {
        let mut uf = UnionFind::new(5);
        uf.union(0, 3);
        uf.union(3, 4);
        let p = BlockPartition::from_union_find(vec!['a'; 5], &uf);
        assert_eq!(p.blocks(), &[vec![0, 3, 4], vec![1], vec![2]]);
    }

    #[test]
    #[should_panic]
    fn overlapping_blocks_rejected() {
        BlockPartition::from_blocks(vec![0, 1], vec![vec![0, 1], vec![1]]);
    }
}
