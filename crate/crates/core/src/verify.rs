//! Named invariant suites. Each runs a family of exact checks against
//! independent oracles and collects one line per check.

use std::collections::BTreeMap;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{CycloNum, Rat};
use crate::blocks::BlockPartition;
use crate::cm::{
    audit_descent, cm_partition_k, cm_partition_k_generic, cm_partition_w, descend, dim_irr,
    irr_labels, permute_blocks,
};
use crate::error::{Error, Result};
use crate::groups::{
    conjugacy_classes_of_reflections, reflections, ReflectionLabel, DEFAULT_GROUP_LIMIT,
};
use crate::params::{c_from_h_cyclo, c_to_h, h_from_c_cyclo, h_to_c, integerize, ParamsC, ParamsH};
use crate::partitions::{
    count_multipartitions, enumerate_multipartitions, factorial, GroupParams, MultiPartition,
};
use crate::rouquier::{
    chain_classes, chain_closure, is_essential, is_essential_prime_power, rouquier_families_k,
    rouquier_families_k_bounded, rouquier_families_w_bounded, Hyperplane, PairTable,
};

pub const DEFAULT_SEED: u64 = 0x6d64_6e31;

/// The `(m, d, n)` tuples the descent, genericity and refinement suites run
/// on when no group is named.
pub const DESCENT_TUPLES: [(u32, u32, u32); 6] = [
    (2, 2, 2),
    (2, 2, 3),
    (2, 2, 4),
    (4, 2, 2),
    (3, 3, 2),
    (6, 2, 2),
];

pub const SUITES: [&str; 9] = [
    "counting",
    "classes",
    "params",
    "sdorbit",
    "descent",
    "generic",
    "chain",
    "essential",
    "refinement",
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn new(suite: &str) -> Self {
        VerifyReport {
            schema: crate::report::SCHEMA,
            suite: suite.to_string(),
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn absorb(&mut self, name: &str, result: Result<VerifyReport>) {
        match result {
            Ok(r) => {
                for c in r.checks {
                    self.check(c.name, c.passed, c.detail);
                }
            }
            Err(e) => self.check(name, false, format!("error: {e}")),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
        }
        let verdict = if self.passed { "pass" } else { "fail" };
        out.push_str(&format!(
            "suite {}: {verdict} ({} checks)\n",
            self.suite,
            self.checks.len()
        ));
        out
    }
}

fn tuples(scope: Option<&GroupParams>) -> Result<Vec<GroupParams>> {
    match scope {
        Some(gp) => Ok(vec![*gp]),
        None => DESCENT_TUPLES
            .iter()
            .map(|&(m, d, n)| GroupParams::new(m, d, n))
            .collect(),
    }
}

/// Run a suite by name. `scope` restricts group-dependent suites to one group;
/// `chain` and `essential` read `m` (and `n`) from it.
pub fn run_suite(name: &str, scope: Option<&GroupParams>, seed: u64) -> Result<VerifyReport> {
    match name {
        "counting" => counting(scope),
        "classes" => classes(scope),
        "params" => params_suite(seed, 100, 6),
        "sdorbit" => sdorbit(scope, seed, 1000),
        "descent" => descent(scope),
        "generic" => generic(scope),
        "chain" => match scope {
            Some(gp) => chain(gp.m, gp.n),
            None => chain_exhaustive(3, 4),
        },
        "essential" => essential(scope.map_or(12, |gp| gp.m)),
        "refinement" => refinement(scope),
        other => Err(Error::Parse(format!(
            "unknown suite `{other}` (expected one of {})",
            SUITES.join(", ")
        ))),
    }
}

/// Multipartition counts and the sums of squared dimensions.
pub fn counting(scope: Option<&GroupParams>) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("counting");
    let (w_cases, k_cases): (Vec<(u32, u32)>, Vec<GroupParams>) = match scope {
        Some(gp) => (vec![(gp.m, gp.n)], vec![*gp]),
        None => {
            for (m, n, want) in [(2, 2, 5), (3, 3, 22)] {
                let got = count_multipartitions(m, n);
                r.check(
                    format!("|P({m},{n})|"),
                    got == want,
                    format!("{got}, expected {want}"),
                );
            }
            let ks = [(2, 2, 2), (2, 2, 3), (3, 3, 2), (4, 2, 2)]
                .iter()
                .map(|&(m, d, n)| GroupParams::new(m, d, n))
                .collect::<Result<_>>()?;
            (vec![(2, 2), (2, 3), (3, 2)], ks)
        }
    };
    for (m, n) in w_cases {
        let labels = enumerate_multipartitions(m, n);
        let count = count_multipartitions(m, n);
        r.check(
            format!("enumerate P({m},{n})"),
            labels.len() as u128 == count,
            format!("{} listed, generating function gives {count}", labels.len()),
        );
        let sum: u128 = labels.iter().map(|l| l.dim_wreath_irrep().pow(2)).sum();
        let want = (m as u128).pow(n) * factorial(n);
        r.check(
            format!("sum dim^2 G({m},1,{n})"),
            sum == want,
            format!("{sum}, expected {want}"),
        );
    }
    for gp in k_cases {
        let sum: u128 = irr_labels(&gp).iter().map(|l| dim_irr(l).pow(2)).sum();
        let want = gp.order();
        r.check(
            format!("sum dim^2 {gp}"),
            sum == want,
            format!("{sum}, expected |{gp}| = {want}"),
        );
    }
    Ok(r)
}

/// Brute-force reflection classes against the expected shape: one class of
/// transposition-type reflections, split in two exactly when `n = 2` and `d`
/// is even, plus one class per nontrivial diagonal eigenvalue.
pub fn classes(scope: Option<&GroupParams>) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("classes");
    let groups = match scope {
        Some(gp) => vec![*gp],
        None => [(2, 2, 3), (3, 3, 2), (2, 2, 2), (4, 2, 2)]
            .iter()
            .map(|&(m, d, n)| GroupParams::new(m, d, n))
            .collect::<Result<_>>()?,
    };
    for gp in groups {
        let refl = reflections(&gp, DEFAULT_GROUP_LIMIT)?;
        let (m, n, p) = (gp.m as u64, gp.n as u64, gp.p as u64);
        let want_count = n * n.saturating_sub(1) * m / 2 + n * (p - 1);
        r.check(
            format!("{gp} reflections"),
            refl.len() as u64 == want_count,
            format!("{} found, expected {want_count}", refl.len()),
        );
        let cls = conjugacy_classes_of_reflections(&gp, &gp, DEFAULT_GROUP_LIMIT)?;
        let transposition: Vec<_> = cls
            .iter()
            .filter(|c| !matches!(c.label, ReflectionLabel::S(_)))
            .collect();
        let diagonal = cls.len() - transposition.len();
        let want_split = gp.n == 2 && gp.d % 2 == 0;
        let want_t = match gp.n {
            0 | 1 => 0,
            _ if want_split => 2,
            _ => 1,
        };
        let want_d = if gp.n >= 1 { gp.p as usize - 1 } else { 0 };
        let sizes: Vec<String> = cls
            .iter()
            .map(|c| format!("{}:{}", c.label, c.elements.len()))
            .collect();
        r.check(
            format!("{gp} reflection classes"),
            transposition.len() == want_t && diagonal == want_d,
            format!(
                "{} ({})",
                if transposition.len() == 2 {
                    "R splits into R1/R2"
                } else {
                    "R is a single class"
                },
                sizes.join(", ")
            ),
        );
        let under_w = conjugacy_classes_of_reflections(&gp, &gp.wreath(), DEFAULT_GROUP_LIMIT)?;
        let merged = under_w
            .iter()
            .filter(|c| !matches!(c.label, ReflectionLabel::S(_)))
            .count();
        r.check(
            format!("{gp} classes under {}", gp.wreath()),
            merged == want_t.min(1),
            format!("{merged} transposition-type class(es)"),
        );
    }
    Ok(r)
}

fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    Rat::new(rng.random_range(-5..=5), rng.random_range(1..=4))
}

fn nonzero_rat<R: Rng>(rng: &mut R) -> Rat {
    loop {
        let v = random_rat(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A random rational `c` that is constant on `{i : gcd(i, m) = g}` (the
/// condition for `H` to be rational).
pub fn random_rational_c<R: Rng>(rng: &mut R, m: u32) -> Vec<Rat> {
    let mut by_gcd: BTreeMap<u32, Rat> = BTreeMap::new();
    (1..m)
        .map(|i| {
            let g = num_integer::gcd(i, m);
            by_gcd.entry(g).or_insert_with(|| random_rat(rng)).clone()
        })
        .collect()
}

fn random_cyclo<R: Rng>(rng: &mut R, m: u32) -> CycloNum {
    CycloNum::from_dense(
        m,
        (0..m)
            .map(|_| Rat::from_int(rng.random_range(-3..=3)))
            .collect(),
    )
}

fn supported_on_multiples(c: &[CycloNum], d: u32) -> bool {
    c.iter()
        .enumerate()
        .all(|(idx, z)| (idx as u32 + 1).is_multiple_of(d) || z.is_zero())
}

fn cyclo_p_cyclic(big_h: &[CycloNum], p: u32) -> Result<bool> {
    let m = big_h.len();
    for i in 0..m {
        if !big_h[(i + p as usize) % m].eq_checked(&big_h[i])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// c <-> H round trips on random rational data, and the biconditional
/// "c vanishes off multiples of d iff H is p-cyclic" on random cyclotomic data.
pub fn params_suite(seed: u64, samples: usize, max_m: u32) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("params");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut round_trips = 0;
    let mut bad = Vec::new();
    for _ in 0..samples {
        let m = rng.random_range(2..=max_m);
        let pc = ParamsC::new(m, nonzero_rat(&mut rng), random_rational_c(&mut rng, m))?;
        let ph = c_to_h(&pc)?;
        let back = h_to_c(&ph)?;
        let again = c_to_h(&back)?;
        if back == pc && again == ph {
            round_trips += 1;
        } else {
            bad.push(format!(
                "m={m} c={:?}",
                pc.c.iter().map(ToString::to_string).collect::<Vec<_>>()
            ));
        }
    }
    r.check(
        "c -> H -> c round trip",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{round_trips}/{samples} exact")
        } else {
            format!("{} failures, first {}", bad.len(), bad[0])
        },
    );

    let mut cases = 0;
    let mut failures = Vec::new();
    for m in 2..=max_m.max(8) {
        for d in (1..=m).filter(|d| m % d == 0) {
            let p = m / d;
            for trial in 0..8 {
                let c: Vec<CycloNum> = (1..m)
                    .map(|i| {
                        if trial % 2 == 0 && i % d != 0 {
                            CycloNum::zero(m)
                        } else {
                            random_cyclo(&mut rng, m)
                        }
                    })
                    .collect();
                let lhs = supported_on_multiples(&c, d);
                let rhs = cyclo_p_cyclic(&h_from_c_cyclo(m, &c)?, p)?;
                cases += 1;
                if lhs != rhs {
                    failures.push(format!("c -> H, m={m} d={d}"));
                }

                let mut block: Vec<CycloNum> = (0..p).map(|_| random_cyclo(&mut rng, m)).collect();
                let rest = block[1..]
                    .iter()
                    .try_fold(CycloNum::zero(m), |acc, z| acc.add(z))?;
                block[0] = rest.neg();
                let big_h: Vec<CycloNum> = (0..m as usize)
                    .map(|i| block[i % p as usize].clone())
                    .collect();
                cases += 1;
                if !supported_on_multiples(&c_from_h_cyclo(m, &big_h)?, d) {
                    failures.push(format!("H -> c, m={m} d={d}"));
                }
            }
        }
    }
    r.check(
        "support on multiples of d <=> p-cyclic H",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{cases} cases")
        } else {
            format!("{} failures, first {}", failures.len(), failures[0])
        },
    );
    Ok(r)
}

/// The rational, `p`-cyclic parameters the descent, genericity and refinement
/// suites run on: the gap witness plus points with engineered coincidences,
/// with `e > 1`, and built from class values `c`. When `p = 1` the only
/// `p`-cyclic `H` is zero, so those points differ in `k` alone.
pub fn test_parameters(gp: &GroupParams) -> Result<Vec<(String, ParamsH)>> {
    let (m, d, p) = (gp.m, gp.d, gp.p as usize);
    let periodic =
        |block: Vec<Rat>| -> Vec<Rat> { (0..m as usize).map(|i| block[i % p].clone()).collect() };
    let pattern = |a: Rat| -> Vec<Rat> {
        let mut block = vec![Rat::zero(); p];
        if p > 1 {
            block[0] = -a.clone();
            block[1] = a;
        }
        periodic(block)
    };
    let mut out = vec![
        (
            "zero H, k = -1".to_string(),
            ParamsH::new(Rat::from_int(-1), vec![Rat::zero(); m as usize])?,
        ),
        (
            "unit step, k = -2".to_string(),
            ParamsH::new(Rat::from_int(-2), pattern(Rat::from_int(2)))?,
        ),
        (
            "half step, k = -7/2".to_string(),
            ParamsH::new(Rat::new(-7, 2), pattern(Rat::new(7, 4)))?,
        ),
        (
            "positive k = 1/3".to_string(),
            ParamsH::new(Rat::new(1, 3), pattern(Rat::new(1, 3)))?,
        ),
    ];
    let c: Vec<Rat> = (1..m)
        .map(|i| {
            if i % d == 0 {
                Rat::new(num_integer::gcd(i, m) as i64, 3)
            } else {
                Rat::zero()
            }
        })
        .collect();
    out.push((
        "from class values c, k = 5".to_string(),
        c_to_h(&ParamsC::new(m, Rat::from_int(5), c)?)?,
    ));
    out.push(("gap witness".to_string(), ParamsH::gap_witness(gp)));
    Ok(out)
}

/// Block permutations commute with `Res^s` at every `p`-cyclic parameter.
pub fn sdorbit(scope: Option<&GroupParams>, seed: u64, pairs: usize) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("sdorbit");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for gp in tuples(scope)? {
        let shifts = test_parameters(&gp)?
            .iter()
            .map(|(_, ph)| integerize(ph))
            .collect::<Result<Vec<_>>>()?;
        let labels = enumerate_multipartitions(gp.m, gp.n);
        let mut sigma: Vec<usize> = (0..gp.d as usize).collect();
        let mut bad = None;
        for _ in 0..pairs {
            let lambda = labels.choose(&mut rng).expect("P(m,n) is nonempty");
            sigma.shuffle(&mut rng);
            let moved = permute_blocks(lambda, gp.d, &sigma);
            let sd = shifts.choose(&mut rng).expect("parameters exist");
            if lambda.shifted_residue(&sd.s)? != moved.shifted_residue(&sd.s)? {
                bad = Some(format!("{lambda} vs {moved} at s = {:?}", sd.s));
                break;
            }
        }
        r.check(
            format!("{gp} S_d-invariance"),
            bad.is_none(),
            bad.unwrap_or_else(|| format!("{pairs} random (lambda, sigma) pairs")),
        );
    }
    Ok(r)
}

/// Independent oracle for the G(m,1,n) partition: the sorted multiset of
/// `s_i + content` over all nodes.
pub fn content_multiset_partition(m: u32, n: u32, s: &[i64]) -> BlockPartition<MultiPartition> {
    let labels = enumerate_multipartitions(m, n);
    let keys: Vec<Vec<i64>> = labels
        .iter()
        .map(|l| {
            let mut v: Vec<i64> = l
                .components()
                .iter()
                .zip(s)
                .flat_map(|(c, &si)| {
                    c.young_nodes()
                        .into_iter()
                        .map(move |(a, b)| si + b as i64 - a as i64)
                })
                .collect();
            v.sort_unstable();
            v
        })
        .collect();
    BlockPartition::from_keys(labels, keys)
}

/// Descent bookkeeping: block-count identity, `C_d`-stability of every
/// downstairs block, and the lemma constructions inside each upstairs block.
pub fn descent(scope: Option<&GroupParams>) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("descent");
    for gp in tuples(scope)? {
        for (name, ph) in test_parameters(&gp)? {
            let label = format!("{gp} [{name}]");
            let sd = integerize(&ph)?;
            r.check(
                format!("{label} block form"),
                sd.is_p_cyclic(gp.p) && sd.block_offsets(gp.p).iter().all(|&o| o == 0),
                format!("e = {}, s = {:?}", sd.e, sd.s),
            );
            let up = cm_partition_w(gp.m, gp.n, &sd)?;
            let oracle = content_multiset_partition(gp.m, gp.n, &sd.s);
            r.check(
                format!("{label} residue vs content oracle"),
                up.compare(&oracle).equal,
                format!("{} blocks", up.num_blocks()),
            );
            let down = descend(&gp, &up)?;
            let audit = audit_descent(&gp, &up, &down, true);
            r.check(
                format!("{label} descent"),
                audit.ok(gp.d),
                format!(
                    "{} = {} + {}*{}{}",
                    audit.downstairs_blocks,
                    audit.upstairs_blocks,
                    gp.d - 1,
                    audit.stuttering_singletons,
                    if audit.violations.is_empty() {
                        String::new()
                    } else {
                        format!("; {}", audit.violations.join("; "))
                    }
                ),
            );
        }
    }
    Ok(r)
}

/// The gap witness gives the structural generic partition.
pub fn generic(scope: Option<&GroupParams>) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("generic");
    for gp in tuples(scope)? {
        let sd = integerize(&ParamsH::gap_witness(&gp))?;
        let at_witness = cm_partition_k(&gp, &sd)?;
        let structural = cm_partition_k_generic(&gp, sd.e);
        r.check(
            format!("{gp} gap witness = generic rule"),
            at_witness.compare(&structural).equal,
            format!("{} blocks at s = {:?}", at_witness.num_blocks(), sd.s),
        );
    }
    Ok(r)
}

/// Chain classes (breadth-first search and union-find) against residue classes.
pub fn chain(m: u32, n: u32) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("chain");
    chain_case(&mut r, m, n);
    Ok(r)
}

/// [`chain`] for every `1 <= m <= max_m`, `0 <= n <= max_n`.
pub fn chain_exhaustive(max_m: u32, max_n: u32) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("chain");
    for m in 1..=max_m {
        for n in 0..=max_n {
            chain_case(&mut r, m, n);
        }
    }
    Ok(r)
}

fn chain_case(r: &mut VerifyReport, m: u32, n: u32) {
    let labels = enumerate_multipartitions(m, n);
    let by_residue =
        BlockPartition::from_keys(labels.clone(), labels.iter().map(|l| l.residue()).collect());
    let table = PairTable::new(n);
    let block_of = by_residue.block_of();
    let mut bad = None;
    for (i, lambda) in labels.iter().enumerate() {
        let reach = chain_closure(&table, lambda);
        let class: Vec<&MultiPartition> = by_residue.block_members(block_of[i]).collect();
        if reach.len() != class.len() || class.iter().any(|mu| !reach.contains(*mu)) {
            bad = Some(format!(
                "closure of {lambda} has {} members, residue class {}",
                reach.len(),
                class.len()
            ));
            break;
        }
    }
    let uf = chain_classes(m, n);
    r.check(
        format!("chain lemma m={m} n={n}"),
        bad.is_none() && uf.compare(&by_residue).equal,
        bad.unwrap_or_else(|| {
            format!(
                "{} labels, {} residue classes",
                labels.len(),
                by_residue.num_blocks()
            )
        }),
    );
}

/// Norm test for essential hyperplanes against the prime-power criterion.
pub fn essential(max_m: u32) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("essential");
    for m in 1..=max_m {
        let mut pairs = 0;
        let mut essential_count = 0;
        let mut bad = None;
        for i in 0..m as usize {
            for j in i + 1..m as usize {
                let by_norm = is_essential(&Hyperplane::KS { k: 0, i, j }, m);
                pairs += 1;
                essential_count += by_norm as usize;
                if by_norm != is_essential_prime_power(i, j, m) {
                    bad = Some(format!("disagree at (i, j) = ({i}, {j})"));
                }
            }
        }
        r.check(
            format!("essential m={m}"),
            bad.is_none(),
            bad.unwrap_or_else(|| format!("{essential_count}/{pairs} pairs essential")),
        );
    }
    Ok(r)
}

/// Rouquier families refine CM partitions at every test parameter, and agree
/// with them at the gap witness. The theorem-level checks use the `k = 0`
/// hyperplanes only; the provisional `k != 0` rule is checked separately.
pub fn refinement(scope: Option<&GroupParams>) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("refinement");
    for gp in tuples(scope)? {
        for (name, ph) in test_parameters(&gp)? {
            let label = format!("{gp} [{name}]");
            let sd = integerize(&ph)?;
            let hp = sd.hecke();
            let mut sub = VerifyReport::new("refinement");
            let result = (|| -> Result<()> {
                let rw = rouquier_families_w_bounded(&hp, gp.m, gp.n, 1)?;
                let cw = cm_partition_w(gp.m, gp.n, &sd)?;
                sub.check(
                    format!("{label} upstairs refines"),
                    rw.compare(&cw).refines,
                    format!(
                        "{} families, {} CM blocks",
                        rw.num_blocks(),
                        cw.num_blocks()
                    ),
                );
                let rk = rouquier_families_k_bounded(&gp, &hp, 1)?;
                let ck = cm_partition_k(&gp, &sd)?;
                let k_cmp = rk.compare(&ck);
                sub.check(
                    format!("{label} refines"),
                    k_cmp.refines,
                    format!(
                        "{} families, {} CM blocks",
                        rk.num_blocks(),
                        ck.num_blocks()
                    ),
                );
                if name == "gap witness" {
                    sub.check(
                        format!("{label} equal"),
                        k_cmp.equal,
                        format!("{} families", rk.num_blocks()),
                    );
                }
                let wide = rouquier_families_k(&gp, &hp)?;
                sub.check(
                    format!("{label} refines with |k| < m hyperplanes"),
                    wide.compare(&ck).refines && rk.compare(&wide).refines,
                    format!("{} families", wide.num_blocks()),
                );
                Ok(())
            })();
            r.absorb(&label, result.map(|()| sub));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(m: u32, d: u32, n: u32) -> GroupParams {
        GroupParams::new(m, d, n).unwrap()
    }

    #[test]
    fn parameters_are_p_cyclic() {
        for &(m, d, n) in &DESCENT_TUPLES {
            let g = gp(m, d, n);
            let ps = test_parameters(&g).unwrap();
            assert!(ps.len() >= 5);
            for (name, ph) in ps {
                assert!(crate::params::is_p_cyclic(&ph, g.p), "{g} {name}");
            }
        }
    }

    #[test]
    fn random_c_is_rational() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for m in 2..=8 {
            let pc = ParamsC::new(m, Rat::one(), random_rational_c(&mut rng, m)).unwrap();
            assert!(c_to_h(&pc).is_ok());
        }
    }

    #[test]
    fn small_suites_pass() {
        let g = gp(2, 2, 2);
        for name in SUITES {
            let r = run_suite(name, Some(&g), DEFAULT_SEED).unwrap();
            assert!(r.passed, "{}", r.render_text());
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", None, 0).is_err());
    }
}
