//! Brute-force model of G(m,d,n) as monomial matrices. Only meant for desk
//! scale: it exists to check the reflection-class and counting statements
//! that the combinatorial modules rely on.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::arith::CycloNum;
use crate::error::{Error, Result};
use crate::par;
use crate::partitions::GroupParams;

/// Largest group the oracle will enumerate unless the caller raises the bound.
pub const DEFAULT_GROUP_LIMIT: u128 = 1_000_000;

/// An `n x n` monomial matrix: row `i` has the single entry `zeta^phases[i]`
/// in column `perm[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonomialElement {
    pub perm: Vec<usize>,
    pub phases: Vec<u32>,
}

impl MonomialElement {
    pub fn identity(n: usize) -> Self {
        MonomialElement {
            perm: (0..n).collect(),
            phases: vec![0; n],
        }
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &MonomialElement, m: u32) -> MonomialElement {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut phases = vec![0; n];
        for i in 0..n {
            let j = self.perm[i];
            perm[i] = other.perm[j];
            phases[i] = (self.phases[i] + other.phases[j]) % m;
        }
        MonomialElement { perm, phases }
    }

    pub fn inverse(&self, m: u32) -> MonomialElement {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut phases = vec![0; n];
        for i in 0..n {
            let j = self.perm[i];
            perm[j] = i;
            phases[j] = (m - self.phases[i]) % m;
        }
        MonomialElement { perm, phases }
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &MonomialElement, m: u32) -> MonomialElement {
        g.compose(self, m).compose(&g.inverse(m), m)
    }

    pub fn phase_sum(&self) -> u64 {
        self.phases.iter().map(|&p| p as u64).sum()
    }

    pub fn in_group(&self, gp: &GroupParams) -> bool {
        self.phase_sum().is_multiple_of(gp.d as u64)
    }

    pub fn to_matrix(&self, m: u32) -> Vec<Vec<CycloNum>> {
        let n = self.perm.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if self.perm[i] == j {
                            CycloNum::zeta_pow(m, self.phases[i] as i64)
                        } else {
                            CycloNum::zero(m)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Reflection test at the definition level: `rank(M - I) == 1`, with
    /// the rank taken over Q(zeta_m).
    pub fn is_reflection(&self, m: u32) -> bool {
        let mut mat = self.to_matrix(m);
        for (i, row) in mat.iter_mut().enumerate() {
            row[i] = row[i].sub(&CycloNum::one(m)).expect("same conductor");
        }
        matrix_rank(mat) == 1
    }

    fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Display for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .perm
            .iter()
            .zip(&self.phases)
            .map(|(j, k)| format!("{}:{}", j + 1, k))
            .collect();
        write!(f, "[{}]", cols.join(" "))
    }
}

impl Serialize for MonomialElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn matrix_rank(mut mat: Vec<Vec<CycloNum>>) -> usize {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mat[rank][col].inverse().expect("nonzero pivot");
        let pivot_row = mat[rank].clone();
        for (r, row) in mat.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].mul(&inv).expect("same conductor");
            for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                let delta = factor.mul(p).expect("same conductor");
                *entry = entry.sub(&delta).expect("same conductor");
            }
        }
        rank += 1;
    }
    rank
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every element of G(m,d,n), each exactly once, sorted.
pub fn enumerate_group(gp: &GroupParams, limit: u128) -> Result<Vec<MonomialElement>> {
    let size = gp.order();
    if size > limit {
        return Err(Error::SizeBound {
            what: "group",
            size,
            limit,
        });
    }
    let n = gp.n as usize;
    let m = gp.m;
    let total_phases = (m as u64).pow(n as u32);
    let mut out = Vec::with_capacity(size as usize);
    for perm in permutations(n) {
        for code in 0..total_phases {
            let mut c = code;
            let phases: Vec<u32> = (0..n)
                .map(|_| {
                    let v = (c % m as u64) as u32;
                    c /= m as u64;
                    v
                })
                .collect();
            let g = MonomialElement {
                perm: perm.clone(),
                phases,
            };
            if g.in_group(gp) {
                out.push(g);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All reflections of G(m,d,n), found by the rank test over the whole group.
pub fn reflections(gp: &GroupParams, limit: u128) -> Result<Vec<MonomialElement>> {
    let elements = enumerate_group(gp, limit)?;
    let flags = par::map(&elements, |g| g.is_reflection(gp.m));
    Ok(elements
        .into_iter()
        .zip(flags)
        .filter_map(|(g, r)| r.then_some(g))
        .collect())
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ReflectionLabel {
    /// The class of `s_(i,j) e_i^k e_j^-k` when it is a single class.
    R,
    /// The `i`-th piece (1-based) when that class splits.
    RSplit(u32),
    /// Diagonal reflections with nontrivial eigenvalue `zeta^k`.
    S(u32),
}

impl fmt::Display for ReflectionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReflectionLabel::R => write!(f, "R"),
            ReflectionLabel::RSplit(i) => write!(f, "R{i}"),
            ReflectionLabel::S(k) => write!(f, "S{k}"),
        }
    }
}

impl Serialize for ReflectionLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflectionClass {
    pub label: ReflectionLabel,
    pub elements: BTreeSet<MonomialElement>,
}

/// Orbits of the reflections of `gp` under conjugation by `under`, which
/// must be G(m,1,n) or `gp` itself.
pub fn conjugacy_classes_of_reflections(
    gp: &GroupParams,
    under: &GroupParams,
    limit: u128,
) -> Result<Vec<ReflectionClass>> {
    if under.m != gp.m || under.n != gp.n || (under.d != 1 && under.d != gp.d) {
        return Err(Error::InvalidGroup(format!(
            "{under} must be G(m,1,n) or {gp} itself"
        )));
    }
    let m = gp.m;
    let refl = reflections(gp, limit)?;
    let conjugators = enumerate_group(under, limit)?;
    let mut remaining: BTreeSet<MonomialElement> = refl.into_iter().collect();
    let mut orbits: Vec<BTreeSet<MonomialElement>> = Vec::new();
    while let Some(r) = remaining.pop_first() {
        let orbit: BTreeSet<MonomialElement> = par::map(&conjugators, |g| r.conjugate_by(g, m))
            .into_iter()
            .collect();
        for x in &orbit {
            remaining.remove(x);
        }
        orbits.push(orbit);
    }

    // Transposition-type orbits ordered by the least k with s_(1,2) e_1^k e_2^-k inside.
    let mut transposition: Vec<(u32, BTreeSet<MonomialElement>)> = Vec::new();
    let mut diagonal: Vec<(u32, BTreeSet<MonomialElement>)> = Vec::new();
    for orbit in orbits {
        let first = orbit.first().expect("orbits are nonempty");
        if first.is_diagonal() {
            let k = first.phases.iter().copied().find(|&k| k != 0).unwrap_or(0);
            diagonal.push((k, orbit));
        } else {
            let k = orbit
                .iter()
                .filter(|g| g.perm.len() >= 2 && g.perm[0] == 1 && g.perm[1] == 0)
                .map(|g| g.phases[0])
                .min()
                .unwrap_or(u32::MAX);
            transposition.push((k, orbit));
        }
    }
    transposition.sort_by_key(|(k, _)| *k);
    diagonal.sort_by_key(|(k, _)| *k);
    let split = transposition.len() > 1;
    let mut out = Vec::new();
    for (i, (_, elements)) in transposition.into_iter().enumerate() {
        let label = if split {
            ReflectionLabel::RSplit(i as u32 + 1)
        } else {
            ReflectionLabel::R
        };
        out.push(ReflectionClass { label, elements });
    }
    for (k, elements) in diagonal {
        out.push(ReflectionClass {
            label: ReflectionLabel::S(k),
            elements,
        });
    }
    Ok(out)
}

/// Number of conjugacy classes of G(m,d,n), i.e. its number of irreducible
/// characters, by brute-force conjugation.
pub fn count_conjugacy_classes(gp: &GroupParams, limit: u128) -> Result<usize> {
    let elements = enumerate_group(gp, limit)?;
    let index: HashMap<&MonomialElement, usize> =
        elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let images = par::map(&elements, |x| {
        elements
            .iter()
            .map(|g| index[&x.conjugate_by(g, gp.m)])
            .collect::<Vec<_>>()
    });
    let mut uf = UnionFind::new(elements.len());
    for (i, imgs) in images.iter().enumerate() {
        for &j in imgs {
            uf.union(i, j);
        }
    }
    let roots: BTreeSet<usize> = (0..elements.len()).map(|i| uf.find(i)).collect();
    Ok(roots.len())
}
