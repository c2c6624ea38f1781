//! Calogero-Moser partitions of `Irr G(m,1,n)` and their descent to
//! `Irr G(m,d,n)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::LaurentPoly;
use crate::blocks::BlockPartition;
use crate::error::{Error, Result};
use crate::par;
use crate::params::ShiftData;
use crate::partitions::{enumerate_multipartitions, GroupParams, MultiPartition, Partition};

/// The generator `delta` of `C_d^vee`: `new[i] = old[i - p mod m]`.
pub fn cdv_rotate(lambda: &MultiPartition, p: u32) -> MultiPartition {
    let m = lambda.m();
    let p = p as usize % m;
    let comps = (0..m)
        .map(|i| lambda.component((i + m - p) % m).clone())
        .collect();
    MultiPartition::new(comps)
}

/// The `C_d^vee`-orbit of `lambda` and the order of its stabilizer; their
/// product is `d`.
pub fn orbit_and_stabilizer(lambda: &MultiPartition, d: u32) -> (BTreeSet<MultiPartition>, u32) {
    let p = lambda.m() as u32 / d;
    let mut orbit = BTreeSet::new();
    let mut cur = lambda.clone();
    for _ in 0..d {
        orbit.insert(cur.clone());
        cur = cdv_rotate(&cur, p);
    }
    let stab = d / orbit.len() as u32;
    (orbit, stab)
}

/// Least member of the orbit in the multipartition order.
pub fn canonical_rep(lambda: &MultiPartition, d: u32) -> MultiPartition {
    let (orbit, _) = orbit_and_stabilizer(lambda, d);
    orbit.into_iter().next().expect("orbit contains lambda")
}

/// The `d` blocks `lambda_i = (lambda^{ip}, ..., lambda^{(i+1)p - 1})`.
pub fn blocks_of(lambda: &MultiPartition, d: u32) -> Vec<&[Partition]> {
    let p = lambda.m() / d as usize;
    lambda.components().chunks(p).collect()
}

/// All `d` blocks of `p` consecutive components coincide.
pub fn is_d_stuttering(lambda: &MultiPartition, d: u32) -> bool {
    let blocks = blocks_of(lambda, d);
    blocks.iter().all(|b| *b == blocks[0])
}

/// `sigma . (lambda_0, ..., lambda_{d-1}) = (lambda_{sigma(0)}, ..., lambda_{sigma(d-1)})`.
pub fn permute_blocks(lambda: &MultiPartition, d: u32, sigma: &[usize]) -> MultiPartition {
    assert_eq!(sigma.len(), d as usize, "sigma must permute the d blocks");
    let blocks = blocks_of(lambda, d);
    MultiPartition::new(
        sigma
            .iter()
            .flat_map(|&j| blocks[j].iter().cloned())
            .collect(),
    )
}

/// An irreducible of G(m,d,n): a `C_d^vee`-orbit `{lambda}`, stored by its
/// canonical representative, with a character index `epsilon` of the
/// stabilizer (`epsilon = j` sends the stabilizer's canonical generator to
/// `exp(2 pi i j / stab)`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrrLabel {
    pub orbit: MultiPartition,
    pub epsilon: u32,
    pub stab: u32,
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}:{}", self.orbit, self.epsilon)
    }
}

impl Serialize for IrrLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `Irr G(m,d,n)` as `({lambda}, epsilon)` pairs, ordered by representative
/// then `epsilon`.
pub fn irr_labels(gp: &GroupParams) -> Vec<IrrLabel> {
    let mut out = Vec::new();
    for lambda in enumerate_multipartitions(gp.m, gp.n) {
        let (orbit, stab) = orbit_and_stabilizer(&lambda, gp.d);
        if orbit.first() == Some(&lambda) {
            out.extend((0..stab).map(|epsilon| IrrLabel {
                orbit: lambda.clone(),
                epsilon,
                stab,
            }));
        }
    }
    out
}

/// Dimension of the irreducible `({lambda}, epsilon)`: restriction of
/// `V_lambda` splits into `stab` constituents of equal dimension.
pub fn dim_irr(label: &IrrLabel) -> u128 {
    label.orbit.dim_wreath_irrep() / label.stab as u128
}

/// CM partition of `Irr G(m,1,n)`: equal shifted residue `Res^s(x)`.
///
/// Comparing `Res^s(x^e)` gives the same classes since `x -> x^e` is injective.
pub fn cm_partition_w(m: u32, n: u32, sd: &ShiftData) -> Result<BlockPartition<MultiPartition>> {
    if sd.m() != m as usize {
        return Err(Error::LengthMismatch {
            what: "shift vector",
            expected: m as usize,
            got: sd.m(),
        });
    }
    let labels = enumerate_multipartitions(m, n);
    let keys = par::map(&labels, |l| {
        l.shifted_residue(&sd.s).expect("length checked")
    });
    Ok(BlockPartition::from_keys(labels, keys))
}

/// The common shifted residue of each block (`Res^s(x)`, or `Res^s(x^e)`
/// when `scaled`).
pub fn block_residues(
    part: &BlockPartition<MultiPartition>,
    sd: &ShiftData,
    scaled: bool,
) -> Result<Vec<LaurentPoly>> {
    (0..part.num_blocks())
        .map(|b| {
            let first = part.block_members(b).next().expect("blocks are nonempty");
            let r = first.shifted_residue(&sd.s)?;
            Ok(if scaled { r.substitute_power(sd.e) } else { r })
        })
        .collect()
}

/// Push a `C_d^vee`-stable partition of `P(m,n)` down to `Irr G(m,d,n)`:
/// a block `{lambda}` with `lambda` d-stuttering becomes `d` singletons,
/// any other block `Q` becomes `Gamma(Q)`.
pub fn descend(
    gp: &GroupParams,
    upstairs: &BlockPartition<MultiPartition>,
) -> Result<BlockPartition<IrrLabel>> {
    let labels = irr_labels(gp);
    let mut by_rep: BTreeMap<&MultiPartition, Vec<usize>> = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        by_rep.entry(&l.orbit).or_default().push(i);
    }
    let block_of = upstairs.block_of();
    let index: BTreeMap<&MultiPartition, usize> = upstairs
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (b, members) in upstairs.blocks().iter().enumerate() {
        let mut reps = BTreeSet::new();
        for &i in members {
            let lambda = &upstairs.labels()[i];
            let rotated = cdv_rotate(lambda, gp.p);
            let j = *index
                .get(&rotated)
                .ok_or_else(|| Error::NotRotationStable(format!("{rotated} is not a label")))?;
            if block_of[j] != b {
                return Err(Error::NotRotationStable(format!(
                    "{lambda} and {rotated} lie in different blocks"
                )));
            }
            reps.insert(canonical_rep(lambda, gp.d));
        }
        if members.len() == 1 && is_d_stuttering(&upstairs.labels()[members[0]], gp.d) {
            let rep = reps.first().expect("one member");
            blocks.extend(by_rep[rep].iter().map(|&i| vec![i]));
        } else {
            blocks.push(
                reps.iter()
                    .flat_map(|r| by_rep[r].iter().copied())
                    .collect(),
            );
        }
    }
    Ok(BlockPartition::from_blocks(labels, blocks))
}

/// CM partition of `Irr G(m,d,n)` for a `p`-cyclic parameter.
pub fn cm_partition_k(gp: &GroupParams, sd: &ShiftData) -> Result<BlockPartition<IrrLabel>> {
    if sd.m() != gp.m as usize {
        return Err(Error::LengthMismatch {
            what: "shift vector",
            expected: gp.m as usize,
            got: sd.m(),
        });
    }
    if !sd.is_p_cyclic(gp.p) {
        return Err(Error::NotCyclic { p: gp.p });
    }
    let upstairs = cm_partition_w(gp.m, gp.n, sd)?;
    descend(gp, &upstairs)
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum GenericKey {
    Stuttering(usize),
    Sums(Vec<LaurentPoly>),
}

/// `sum_{i=0}^{d-1} Res_{lambda^{j+pi}}(x^e)` for each `0 <= j < p`.
pub fn class_residue_sums(lambda: &MultiPartition, d: u32, e: u64) -> Vec<LaurentPoly> {
    let p = lambda.m() / d as usize;
    (0..p)
        .map(|j| {
            let mut acc = LaurentPoly::zero();
            for i in 0..d as usize {
                acc.add_assign(&lambda.component(j + p * i).residue());
            }
            acc.substitute_power(e)
        })
        .collect()
}

/// CM partition of `Irr G(m,d,n)` at a generic parameter: stuttering orbits
/// give singletons, other orbits are grouped by [`class_residue_sums`].
pub fn cm_partition_k_generic(gp: &GroupParams, e: u64) -> BlockPartition<IrrLabel> {
    let labels = irr_labels(gp);
    let keys = par::map_range(labels.len(), |i| {
        let l = &labels[i];
        if is_d_stuttering(&l.orbit, gp.d) {
            GenericKey::Stuttering(i)
        } else {
            GenericKey::Sums(class_residue_sums(&l.orbit, gp.d, e))
        }
    });
    BlockPartition::from_keys(labels, keys)
}

pub fn prime_divisors(mut d: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= d {
        if d.is_multiple_of(q) {
            out.push(q);
            while d.is_multiple_of(q) {
                d /= q;
            }
        }
        q += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// For non-stuttering `lambda` and a prime `q | d`, a block permutation of
/// `lambda` whose stabilizer order is prime to `q`: with `l = d/q`, move a
/// block differing from `lambda_0` into position `l`, so the rotation by `l`
/// blocks (which generates the order-`q` subgroup) cannot fix it.
pub fn prime_divisor_witness(lambda: &MultiPartition, d: u32, q: u32) -> Option<MultiPartition> {
    let blocks = blocks_of(lambda, d);
    let i = (1..d as usize).find(|&i| blocks[i] != blocks[0])?;
    if d == q {
        return Some(lambda.clone());
    }
    let l = (d / q) as usize;
    let mut sigma: Vec<usize> = (0..d as usize).collect();
    sigma.swap(i, l);
    Some(permute_blocks(lambda, d, &sigma))
}

/// From a d-stuttering `lambda` and another d-stuttering `other` with the same
/// shifted residue, the non-stuttering `(lambda_0, other_0, lambda_0, ...)`.
pub fn stuttering_fallback(
    lambda: &MultiPartition,
    other: &MultiPartition,
    d: u32,
) -> MultiPartition {
    let a = blocks_of(lambda, d)[0];
    let b = blocks_of(other, d)[0];
    let comps = (0..d as usize)
        .flat_map(|i| if i == 1 { b.iter() } else { a.iter() })
        .cloned()
        .collect();
    MultiPartition::new(comps)
}

/// Bookkeeping and lemma-level checks for one descent.
#[derive(Clone, Debug, Default, Serialize)]
pub struct DescentAudit {
    pub upstairs_blocks: usize,
    pub downstairs_blocks: usize,
    pub stuttering_singletons: usize,
    pub violations: Vec<String>,
}

impl DescentAudit {
    pub fn count_identity_holds(&self, d: u32) -> bool {
        self.downstairs_blocks
            == self.upstairs_blocks + (d as usize - 1) * self.stuttering_singletons
    }

    pub fn ok(&self, d: u32) -> bool {
        self.violations.is_empty() && self.count_identity_holds(d)
    }
}

/// Audit a descent. Checks the block-count identity, that each downstairs
/// block is either a split stuttering singleton or closed under the `C_d`
/// action on `epsilon`, and (when `check_lemmas`) runs the stuttering
/// fallback and prime-divisor constructions inside every upstairs block.
pub fn audit_descent(
    gp: &GroupParams,
    upstairs: &BlockPartition<MultiPartition>,
    downstairs: &BlockPartition<IrrLabel>,
    check_lemmas: bool,
) -> DescentAudit {
    let d = gp.d;
    let mut audit = DescentAudit {
        upstairs_blocks: upstairs.num_blocks(),
        downstairs_blocks: downstairs.num_blocks(),
        ..Default::default()
    };
    let mut split_reps = BTreeSet::new();
    for members in upstairs.blocks() {
        let lambda = &upstairs.labels()[members[0]];
        if members.len() == 1 && is_d_stuttering(lambda, d) {
            audit.stuttering_singletons += 1;
            split_reps.insert(lambda.clone());
        }
    }

    for (b, members) in downstairs.blocks().iter().enumerate() {
        let first = &downstairs.labels()[members[0]];
        if members.len() == 1 && split_reps.contains(&first.orbit) {
            continue;
        }
        let mut eps: BTreeMap<&MultiPartition, BTreeSet<u32>> = BTreeMap::new();
        for &i in members {
            let l = &downstairs.labels()[i];
            eps.entry(&l.orbit).or_default().insert(l.epsilon);
        }
        for (rep, set) in eps {
            let (_, stab) = orbit_and_stabilizer(rep, d);
            if set.len() != stab as usize {
                audit.violations.push(format!(
                    "downstairs block {b} is not C_d-stable at {{{rep}}}"
                ));
            }
        }
    }

    if !check_lemmas || d == 1 {
        return audit;
    }
    let block_of = upstairs.block_of();
    let index: BTreeMap<&MultiPartition, usize> = upstairs
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    let primes = prime_divisors(d);
    for (b, members) in upstairs.blocks().iter().enumerate() {
        let lambdas: Vec<&MultiPartition> =
            members.iter().map(|&i| &upstairs.labels()[i]).collect();
        if lambdas.len() == 1 && is_d_stuttering(lambdas[0], d) {
            continue;
        }
        let non_stuttering = match lambdas.iter().find(|l| !is_d_stuttering(l, d)) {
            Some(l) => (*l).clone(),
            None => {
                let mu = stuttering_fallback(lambdas[0], lambdas[1], d);
                if is_d_stuttering(&mu, d) || index.get(&mu).map(|&j| block_of[j]) != Some(b) {
                    audit
                        .violations
                        .push(format!("stuttering fallback {mu} left block {b}"));
                    continue;
                }
                mu
            }
        };
        for &q in &primes {
            match prime_divisor_witness(&non_stuttering, d, q) {
                Some(w) => {
                    let (_, stab) = orbit_and_stabilizer(&w, d);
                    let same = index.get(&w).map(|&j| block_of[j]) == Some(b);
                    if !same || stab % q == 0 {
                        audit.violations.push(format!(
                            "prime-divisor witness {w} for q = {q} fails in block {b} (stab {stab})"
                        ));
                    }
                }
                None => audit
                    .violations
                    .push(format!("{non_stuttering} unexpectedly stuttering")),
            }
        }
    }
    audit
}
