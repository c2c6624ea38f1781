//! Rouquier families of the cyclotomic Hecke algebras of G(m,1,n) and
//! G(m,d,n), via essential hyperplanes and semi-continuity.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use petgraph::unionfind::UnionFind;
use serde::{Serialize, Serializer};

use crate::arith::{CycloNum, LaurentPoly};
use crate::blocks::BlockPartition;
use crate::cm::{descend, IrrLabel};
use crate::error::{Error, Result};
use crate::par;
use crate::params::HeckeParams;
use crate::partitions::{enumerate_multipartitions, GroupParams, MultiPartition, Partition};

/// A hyperplane in the Hecke parameter lattice `Z^{m+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Hyperplane {
    /// `k n_{R,0} + n_{S,i} - n_{S,j} = 0`, `i < j`.
    KS { k: i64, i: usize, j: usize },
    /// `n_{R,0} = 0`.
    NR0,
}

impl Hyperplane {
    pub fn contains(&self, hp: &HeckeParams) -> bool {
        match *self {
            Hyperplane::KS { k, i, j } => k * hp.n_r0 + hp.n_s[i] - hp.n_s[j] == 0,
            Hyperplane::NR0 => hp.n_r0 == 0,
        }
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hyperplane::KS { k, i, j } => write!(f, "{k}*nR0 + nS{i} - nS{j} = 0"),
            Hyperplane::NR0 => write!(f, "nR0 = 0"),
        }
    }
}

impl Serialize for Hyperplane {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Essential iff `eta^i - eta^j` lies in a prime ideal of `Z[eta_m]`, i.e. is
/// not a unit, i.e. its norm is not `+-1`. `n_{R,0} = 0` is always essential.
pub fn is_essential(h: &Hyperplane, m: u32) -> bool {
    match *h {
        Hyperplane::NR0 => true,
        Hyperplane::KS { i, j, .. } => {
            let diff = CycloNum::zeta_pow(m, i as i64)
                .sub(&CycloNum::zeta_pow(m, j as i64))
                .expect("same conductor");
            diff.norm().abs() != crate::arith::Rat::one()
        }
    }
}

/// Arithmetic form of the same test: `m / gcd(m, j - i)` is a prime power.
pub fn is_essential_prime_power(i: usize, j: usize, m: u32) -> bool {
    let order = m as u64 / (m as u64).gcd(&(j.abs_diff(i) as u64));
    is_prime_power(order)
}

pub fn is_prime_power(mut v: u64) -> bool {
    if v < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= v {
        if v.is_multiple_of(q) {
            while v.is_multiple_of(q) {
                v /= q;
            }
            return v == 1;
        }
        q += 1;
    }
    true
}

/// Essential hyperplanes through `hp`, with `-k_bound < k < k_bound` for the
/// `KS` family (`k_bound = m` by default).
pub fn hyperplanes_containing(hp: &HeckeParams, k_bound: i64) -> Vec<Hyperplane> {
    let m = hp.m();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if !is_essential_prime_power(i, j, m as u32) {
                continue;
            }
            for k in (1 - k_bound)..k_bound {
                let h = Hyperplane::KS { k, i, j };
                if h.contains(hp) && is_essential(&h, m as u32) {
                    out.push(h);
                }
            }
        }
    }
    if Hyperplane::NR0.contains(hp) {
        out.push(Hyperplane::NR0);
    }
    out
}

/// `Res_a(x) + x^shift Res_b(x)`.
pub fn pair_residue(a: &Partition, b: &Partition, shift: i64) -> LaurentPoly {
    a.residue().add(&b.residue().shift(shift))
}

/// Families for a generic point of one essential hyperplane: equal outside
/// `{i, j}` and equal pair residue on `(lambda^i, lambda^j)`. For `k != 0`
/// the pair residue carries relative shift `k n_{R,0}` on component `j`.
/// That rule is provisional: it keeps the families inside CM blocks, but
/// unlike the `k = 0` rule it is not invariant under scaling `n`.
pub fn families_on_hyperplane(
    h: &Hyperplane,
    n_r0: i64,
    m: u32,
    n: u32,
) -> Result<BlockPartition<MultiPartition>> {
    let Hyperplane::KS { k, i, j } = *h else {
        return Err(Error::UnsupportedHyperplane);
    };
    let labels = enumerate_multipartitions(m, n);
    let shift = k * n_r0;
    let keys = par::map(&labels, |l| {
        let rest: Vec<Partition> = l
            .components()
            .iter()
            .enumerate()
            .filter(|(a, _)| *a != i && *a != j)
            .map(|(_, c)| c.clone())
            .collect();
        (rest, pair_residue(l.component(i), l.component(j), shift))
    });
    Ok(BlockPartition::from_keys(labels, keys))
}

/// Rouquier families of G(m,1,n) at `hp`: the join of the families of every
/// essential hyperplane through `hp`, all singletons when there is none.
pub fn rouquier_families_w(
    hp: &HeckeParams,
    m: u32,
    n: u32,
) -> Result<BlockPartition<MultiPartition>> {
    rouquier_families_w_bounded(hp, m, n, m as i64)
}

pub fn rouquier_families_w_bounded(
    hp: &HeckeParams,
    m: u32,
    n: u32,
    k_bound: i64,
) -> Result<BlockPartition<MultiPartition>> {
    if hp.m() != m as usize {
        return Err(Error::LengthMismatch {
            what: "Hecke parameter n_S",
            expected: m as usize,
            got: hp.m(),
        });
    }
    let labels = enumerate_multipartitions(m, n);
    let hyperplanes = hyperplanes_containing(hp, k_bound);
    if hyperplanes.contains(&Hyperplane::NR0) {
        return Err(Error::UnsupportedHyperplane);
    }
    let per_plane = par::map(&hyperplanes, |h| families_on_hyperplane(h, hp.n_r0, m, n));
    let mut uf = UnionFind::new(labels.len());
    for part in per_plane {
        for block in part?.blocks() {
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
    Ok(BlockPartition::from_union_find(labels, &uf))
}

/// Rouquier families of G(m,d,n) for a `p`-cyclic `hp`, by the same descent
/// as the CM partition.
pub fn rouquier_families_k(gp: &GroupParams, hp: &HeckeParams) -> Result<BlockPartition<IrrLabel>> {
    rouquier_families_k_bounded(gp, hp, gp.m as i64)
}

/// [`rouquier_families_k`] with hyperplanes restricted to `|k| < k_bound`;
/// `k_bound = 1` keeps only `n_{S,i} = n_{S,j}`.
pub fn rouquier_families_k_bounded(
    gp: &GroupParams,
    hp: &HeckeParams,
    k_bound: i64,
) -> Result<BlockPartition<IrrLabel>> {
    if !hp.is_p_cyclic(gp.p) {
        return Err(Error::NotCyclic { p: gp.p });
    }
    let upstairs = rouquier_families_w_bounded(hp, gp.m, gp.n, k_bound)?;
    descend(gp, &upstairs)
}

/// Pairs of partitions indexed by their joint size and pair residue.
pub struct PairTable {
    by_key: BTreeMap<(u32, LaurentPoly), Vec<(Partition, Partition)>>,
}

impl PairTable {
    pub fn new(n: u32) -> Self {
        let mut by_key: BTreeMap<(u32, LaurentPoly), Vec<(Partition, Partition)>> = BTreeMap::new();
        for total in 0..=n {
            for a_size in 0..=total {
                for a in Partition::all_of(a_size) {
                    for b in Partition::all_of(total - a_size) {
                        let key = (total, pair_residue(&a, &b, 0));
                        by_key.entry(key).or_default().push((a.clone(), b));
                    }
                }
            }
        }
        PairTable { by_key }
    }

    /// Multipartitions reachable from `lambda` by one two-component move.
    pub fn moves(&self, lambda: &MultiPartition) -> Vec<MultiPartition> {
        let m = lambda.m();
        let mut out = Vec::new();
        for s in 0..m {
            for t in s + 1..m {
                let (a, b) = (lambda.component(s), lambda.component(t));
                let key = (a.size() + b.size(), pair_residue(a, b, 0));
                for (x, y) in &self.by_key[&key] {
                    if x == a && y == b {
                        continue;
                    }
                    let mut comps = lambda.components().to_vec();
                    comps[s] = x.clone();
                    comps[t] = y.clone();
                    out.push(MultiPartition::new(comps));
                }
            }
        }
        out
    }
}

/// Whether `mu` is reachable from `lambda` by a chain of moves that change two
/// components while preserving their joint residue (breadth-first search).
pub fn chain_equivalence(lambda: &MultiPartition, mu: &MultiPartition) -> bool {
    if lambda.m() != mu.m() || lambda.size() != mu.size() {
        return false;
    }
    chain_closure(&PairTable::new(lambda.size()), lambda).contains(mu)
}

/// Everything reachable from `lambda` in the move graph, `lambda` included.
pub fn chain_closure(table: &PairTable, lambda: &MultiPartition) -> BTreeSet<MultiPartition> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in table.moves(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Connected components of the two-component move graph on `P(m,n)`.
pub fn chain_classes(m: u32, n: u32) -> BlockPartition<MultiPartition> {
    let labels = enumerate_multipartitions(m, n);
    let index: BTreeMap<&MultiPartition, usize> =
        labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let table = PairTable::new(n);
    let neighbours = par::map(&labels, |l| {
        table.moves(l).iter().map(|x| index[x]).collect::<Vec<_>>()
    });
    let mut uf = UnionFind::new(labels.len());
    for (i, ns) in neighbours.iter().enumerate() {
        for &j in ns {
            uf.union(i, j);
        }
    }
    BlockPartition::from_union_find(labels, &uf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    fn ks(k: i64, i: usize, j: usize) -> Hyperplane {
        Hyperplane::KS { k, i, j }
    }

    #[test]
    fn essential_examples() {
        assert!(is_essential(&ks(0, 0, 1), 2));
        assert!(!is_essential(&ks(0, 0, 1), 6));
        assert!(is_essential(&ks(0, 0, 2), 4));
        assert!(is_essential(&Hyperplane::NR0, 7));
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (0..20).filter(|&v| is_prime_power(v)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]);
    }

    #[test]
    fn containing() {
        let generic = HeckeParams {
            n_r0: 1,
            n_r1: 0,
            n_s: vec![0, 100, 250],
        };
        assert!(hyperplanes_containing(&generic, 3).is_empty());
        // m = 4, p = 2 cyclic point: nS0 = nS2, nS1 = nS3
        let cyc = HeckeParams {
            n_r0: 1,
            n_r1: 0,
            n_s: vec![0, 10, 0, 10],
        };
        let hs = hyperplanes_containing(&cyc, 4);
        assert_eq!(hs, vec![ks(0, 0, 2), ks(0, 1, 3)]);
        let mixed = HeckeParams {
            n_r0: 2,
            n_r1: 0,
            n_s: vec![0, 2],
        };
        assert_eq!(hyperplanes_containing(&mixed, 2), vec![ks(1, 0, 1)]);
    }

    #[test]
    fn hyperplane_families() {
        let f = families_on_hyperplane(&ks(0, 0, 1), 1, 2, 1).unwrap();
        assert_eq!(f.num_blocks(), 1);
        let f = families_on_hyperplane(&ks(0, 0, 1), 1, 2, 2).unwrap();
        let idx = |s: &str| f.labels().iter().position(|l| *l == mp(s)).unwrap();
        assert!(f.same_block(idx("(2|)"), idx("(|2)")));
        assert!(!f.same_block(idx("(2|)"), idx("(1,1|)")));
        let f = families_on_hyperplane(&ks(0, 0, 1), 1, 3, 1).unwrap();
        let lone = f.labels().iter().position(|l| *l == mp("(||1)")).unwrap();
        assert!(f.blocks().iter().any(|b| b == &vec![lone]));
        assert_eq!(
            families_on_hyperplane(&Hyperplane::NR0, 1, 2, 1),
            Err(Error::UnsupportedHyperplane)
        );
    }

    #[test]
    fn generic_point_all_singletons() {
        let hp = HeckeParams {
            n_r0: 1,
            n_r1: 0,
            n_s: vec![0, 37],
        };
        let f = rouquier_families_w(&hp, 2, 3).unwrap();
        assert_eq!(f.num_blocks(), f.labels().len());
    }

    #[test]
    fn chains() {
        assert!(chain_equivalence(&mp("(2|1)"), &mp("(2|1)")));
        assert!(chain_equivalence(&mp("(2|)"), &mp("(|2)")));
        assert!(!chain_equivalence(&mp("(2|)"), &mp("(1,1|)")));
    }

    #[test]
    fn non_cyclic_rejected() {
        let g = GroupParams::new(2, 2, 2).unwrap();
        let hp = HeckeParams {
            n_r0: 1,
            n_r1: 0,
            n_s: vec![0, 3],
        };
        assert_eq!(rouquier_families_k(&g, &hp), Err(Error::NotCyclic { p: 1 }));
    }
}
