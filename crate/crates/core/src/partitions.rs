//! Partitions, multipartitions and their Young-diagram combinatorics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::LaurentPoly;
use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Nodes `(row, col)` of the Young diagram, both 1-indexed.
    pub fn young_nodes(&self) -> Vec<(u32, u32)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(a, &len)| (1..=len).map(move |b| (a as u32 + 1, b)))
            .collect()
    }

    /// `Res(x) = sum over nodes of x^(col - row)`.
    pub fn residue(&self) -> LaurentPoly {
        let mut res = LaurentPoly::zero();
        for (a, b) in self.young_nodes() {
            res.add_term(b as i64 - a as i64, 1);
        }
        res
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn standard_tableaux(&self) -> u128 {
        let n = self.size();
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (a, &row) in self.parts.iter().enumerate() {
            for b in 0..row {
                let arm = row - b - 1;
                let leg = conj.parts[b as usize] - a as u32 - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        factorial(n) / hooks
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width)
                .map(|b| self.parts.iter().filter(|&&p| p >= b).count() as u32)
                .collect(),
        }
    }

    /// All partitions of `n`, in ascending lexicographic order of parts.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for first in 1..=rem.min(max) {
                cur.push(first);
                rec(rem - first, first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub(crate) fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// An ordered tuple of `m` partitions.
///
/// Ordered first by the vector of component sizes, then by the components'
/// parts, both lexicographically. This is the order used by
/// [`enumerate_multipartitions`] and for canonical orbit representatives.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(
            !components.is_empty(),
            "a multipartition needs at least one component"
        );
        MultiPartition { components }
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn sizes(&self) -> Vec<u32> {
        self.components.iter().map(Partition::size).collect()
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.components
    }

    /// `sum_i x^{s_i} Res_{lambda^i}(x)`.
    pub fn shifted_residue(&self, shifts: &[i64]) -> Result<LaurentPoly> {
        if shifts.len() != self.m() {
            return Err(Error::LengthMismatch {
                what: "shift vector",
                expected: self.m(),
                got: shifts.len(),
            });
        }
        let mut out = LaurentPoly::zero();
        for (c, &s) in self.components.iter().zip(shifts) {
            out.add_assign(&c.residue().shift(s));
        }
        Ok(out)
    }

    /// Unshifted residue `sum_i Res_{lambda^i}(x)`.
    pub fn residue(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for c in &self.components {
            out.add_assign(&c.residue());
        }
        out
    }

    /// Dimension of the simple G(m,1,n)-module labelled by this multipartition:
    /// `n! / prod |lambda^i|! * prod f_{lambda^i}`.
    pub fn dim_wreath_irrep(&self) -> u128 {
        let mut dim = factorial(self.size());
        for c in &self.components {
            dim /= factorial(c.size());
        }
        for c in &self.components {
            dim *= c.standard_tableaux();
        }
        dim
    }
}

impl Ord for MultiPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sizes()
            .cmp(&other.sizes())
            .then_with(|| self.components.cmp(&other.components))
    }
}

impl PartialOrd for MultiPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Textual form `(3,1|2|)`: components separated by `|`, parts by `,`.
impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(Partition::to_string).collect();
        write!(f, "({})", comps.join("|"))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "multipartition must be wrapped in parentheses: `{s}`"
                ))
            })?;
        let components = inner
            .split('|')
            .map(|comp| {
                let comp = comp.trim();
                if comp.is_empty() || comp == "ø" {
                    return Ok(Partition::empty());
                }
                let parts = comp
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad part `{p}` in `{s}`")))
                    })
                    .collect::<Result<Vec<u32>>>()?;
                if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
                    return Err(Error::Parse(format!(
                        "parts must be positive and weakly decreasing in `{s}`"
                    )));
                }
                Ok(Partition::new(parts))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiPartition::new(components))
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `|P(m, n)|`, the coefficient of `x^n` in `(sum_k p(k) x^k)^m`.
pub fn count_multipartitions(m: u32, n: u32) -> u128 {
    let n = n as usize;
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            p[k] += p[k - part];
        }
    }
    let mut acc = vec![0u128; n + 1];
    acc[0] = 1;
    for _ in 0..m {
        let mut next = vec![0u128; n + 1];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for j in 0..=n - i {
                next[i + j] = next[i + j].saturating_add(a.saturating_mul(p[j]));
            }
        }
        acc = next;
    }
    acc[n]
}

/// All `m`-multipartitions of `n`, each once, in the [`MultiPartition`] order.
pub fn enumerate_multipartitions(m: u32, n: u32) -> Vec<MultiPartition> {
    assert!(m >= 1, "m must be positive");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(Partition::all_of).collect();
    let mut out = Vec::new();
    for sizes in compositions(n, m as usize) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &sz in &sizes {
            let mut next = Vec::with_capacity(acc.len() * by_size[sz as usize].len());
            for prefix in &acc {
                for part in &by_size[sz as usize] {
                    let mut v = prefix.clone();
                    v.push(part.clone());
                    next.push(v);
                }
            }
            acc = next;
        }
        out.extend(acc.into_iter().map(MultiPartition::new));
    }
    out.sort();
    out
}

/// Weak compositions of `n` into `k` parts, lexicographically ascending.
fn compositions(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn rec(rem: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 0..=rem {
            cur.push(first);
            rec(rem - first, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// Parameters `(m, d, n)` of the imprimitive group G(m,d,n), with `p = m/d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct GroupParams {
    pub m: u32,
    pub d: u32,
    pub n: u32,
    pub p: u32,
}

impl GroupParams {
    pub fn new(m: u32, d: u32, n: u32) -> Result<Self> {
        if m == 0 || d == 0 || n == 0 {
            return Err(Error::InvalidGroup(format!(
                "m, d, n must be positive (got {m}, {d}, {n})"
            )));
        }
        if !m.is_multiple_of(d) {
            return Err(Error::InvalidGroup(format!(
                "d = {d} does not divide m = {m}"
            )));
        }
        Ok(GroupParams { m, d, n, p: m / d })
    }

    /// The ambient wreath product G(m,1,n).
    pub fn wreath(&self) -> GroupParams {
        GroupParams {
            m: self.m,
            d: 1,
            n: self.n,
            p: self.m,
        }
    }

    /// `m^n n! / d`.
    pub fn order(&self) -> u128 {
        (self.m as u128).pow(self.n) * factorial(self.n) / self.d as u128
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.m, self.d, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn young_nodes_examples() {
        assert_eq!(part(&[2, 1]).young_nodes(), vec![(1, 1), (1, 2), (2, 1)]);
        assert!(Partition::empty().young_nodes().is_empty());
        assert_eq!(part(&[3, 2, 2, 1]).young_nodes().len(), 8);
    }

    #[test]
    fn residue_examples() {
        assert_eq!(part(&[1]).residue(), LaurentPoly::monomial(0, 1));
        assert_eq!(
            part(&[2, 1]).residue(),
            LaurentPoly::from_terms([(-1, 1), (0, 1), (1, 1)])
        );
        // contents of (3,2,2,1): row1 0,1,2; row2 -1,0; row3 -2,-1; row4 -3
        assert_eq!(
            part(&[3, 2, 2, 1]).residue(),
            LaurentPoly::from_terms([(-3, 1), (-2, 1), (-1, 2), (0, 2), (1, 1), (2, 1)])
        );
    }

    #[test]
    fn shifted_residue_examples() {
        assert_eq!(
            mp("(1|)").shifted_residue(&[0, 0]).unwrap(),
            LaurentPoly::monomial(0, 1)
        );
        assert_eq!(
            mp("(1|1)").shifted_residue(&[0, 5]).unwrap(),
            LaurentPoly::from_terms([(0, 1), (5, 1)])
        );
        assert!(mp("(1|1)").shifted_residue(&[0]).is_err());
    }

    #[test]
    fn notation_roundtrip() {
        let x = mp("(3,1|2|)");
        assert_eq!(x.m(), 3);
        assert_eq!(x.component(0), &part(&[3, 1]));
        assert_eq!(x.component(2), &Partition::empty());
        assert_eq!(x.to_string(), "(3,1|2|)");
        assert_eq!(mp("()").to_string(), "()");
        assert!("(1,2|)".parse::<MultiPartition>().is_err());
        assert!("1|2".parse::<MultiPartition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_multipartitions(1, 3).len(), 3);
        assert_eq!(enumerate_multipartitions(2, 2).len(), 5);
        assert_eq!(enumerate_multipartitions(3, 3).len(), 22);
        assert_eq!(enumerate_multipartitions(1, 0).len(), 1);
        assert_eq!(count_multipartitions(3, 3), 22);
    }

    #[test]
    fn enumeration_order_is_documented() {
        let all: Vec<String> = enumerate_multipartitions(2, 2)
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(all, vec!["(|1,1)", "(|2)", "(1|1)", "(1,1|)", "(2|)"]);
    }

    #[test]
    fn dimensions() {
        assert_eq!(mp("(1|1)").dim_wreath_irrep(), 2);
        assert_eq!(mp("(4)").dim_wreath_irrep(), 1);
        assert_eq!(part(&[3, 2]).standard_tableaux(), 5);
        assert_eq!(part(&[2, 2, 1]).conjugate(), part(&[3, 2]));
    }

    #[test]
    fn group_params() {
        let g = GroupParams::new(4, 2, 3).unwrap();
        assert_eq!(g.p, 2);
        assert_eq!(g.order(), 64 * 6 / 2);
        assert!(GroupParams::new(4, 3, 2).is_err());
        assert!(GroupParams::new(4, 2, 0).is_err());
    }
}
