//! Parameter presentations: class values `c`, the `(h, H)` basis, integer
//! shift data `(e, s)` and Hecke parameters `n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{CycloNum, Rat};
use crate::error::{Error, Result};
use crate::partitions::GroupParams;

/// `c(R) = k`, `c(S_i) = c[i - 1]` for `1 <= i <= m - 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ParamsC {
    pub m: u32,
    pub k: Rat,
    pub c: Vec<Rat>,
}

/// `h` together with `H_0, ..., H_{m-1}`, where the `H_i` sum to zero.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ParamsH {
    pub h: Rat,
    #[serde(rename = "H")]
    pub big_h: Vec<Rat>,
}

/// Integer shift vector `s` with common denominator `e`:
/// `s_0 = 0` and `s_j - s_{j-1} = e H_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct ShiftData {
    pub e: u64,
    pub s: Vec<i64>,
}

/// `(n_{R,0}, n_{R,1}, n_{S,0..m-1})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct HeckeParams {
    pub n_r0: i64,
    pub n_r1: i64,
    pub n_s: Vec<i64>,
}

/// `H_r = (1/m) sum_{i=1}^{m-1} zeta^{ir} c_i` for every `0 <= r < m`, in Q(zeta_m).
pub fn h_from_c_cyclo(m: u32, c: &[CycloNum]) -> Result<Vec<CycloNum>> {
    if c.len() + 1 != m as usize {
        return Err(Error::LengthMismatch {
            what: "c vector",
            expected: m as usize - 1,
            got: c.len(),
        });
    }
    let inv_m = Rat::new(1, m as i64);
    (0..m as i64)
        .map(|r| {
            let mut acc = CycloNum::zero(m);
            for (idx, ci) in c.iter().enumerate() {
                let i = idx as i64 + 1;
                acc = acc.add(&CycloNum::zeta_pow(m, i * r).mul(ci)?)?;
            }
            Ok(acc.scale(&inv_m))
        })
        .collect()
}

/// `c_i = sum_{j=0}^{m-1} zeta^{-ij} H_j` for `1 <= i < m`, in Q(zeta_m).
pub fn c_from_h_cyclo(m: u32, big_h: &[CycloNum]) -> Result<Vec<CycloNum>> {
    if big_h.len() != m as usize {
        return Err(Error::LengthMismatch {
            what: "H vector",
            expected: m as usize,
            got: big_h.len(),
        });
    }
    (1..m as i64)
        .map(|i| {
            let mut acc = CycloNum::zero(m);
            for (j, hj) in big_h.iter().enumerate() {
                acc = acc.add(&CycloNum::zeta_pow(m, -i * j as i64).mul(hj)?)?;
            }
            Ok(acc)
        })
        .collect()
}

fn rational(which: String, z: &CycloNum) -> Result<Rat> {
    z.as_rational().ok_or_else(|| Error::NonRational {
        which,
        value: z.to_string(),
    })
}

/// `h = k`; `H_r` for `r >= 1` by the inverse transform, `H_0 = -sum H_r`.
/// Fails when some `H_r` is irrational.
pub fn c_to_h(pc: &ParamsC) -> Result<ParamsH> {
    let m = pc.m;
    let c: Vec<CycloNum> =
        pc.c.iter()
            .map(|v| CycloNum::from_rat(m, v.clone()))
            .collect();
    let h_cyc = h_from_c_cyclo(m, &c)?;
    let mut big_h = vec![Rat::zero(); m as usize];
    for r in 1..m as usize {
        big_h[r] = rational(format!("H_{r}"), &h_cyc[r])?;
    }
    big_h[0] = -big_h[1..].iter().cloned().sum::<Rat>();
    Ok(ParamsH {
        h: pc.k.clone(),
        big_h,
    })
}

/// Inverse of [`c_to_h`]. Fails when the `H_i` do not sum to zero or some
/// `c_i` is irrational.
pub fn h_to_c(ph: &ParamsH) -> Result<ParamsC> {
    ph.check_balanced()?;
    let m = ph.m();
    let h_cyc: Vec<CycloNum> = ph
        .big_h
        .iter()
        .map(|v| CycloNum::from_rat(m, v.clone()))
        .collect();
    let c = c_from_h_cyclo(m, &h_cyc)?
        .iter()
        .enumerate()
        .map(|(idx, z)| rational(format!("c_{}", idx + 1), z))
        .collect::<Result<Vec<_>>>()?;
    Ok(ParamsC {
        m,
        k: ph.h.clone(),
        c,
    })
}

impl ParamsC {
    pub fn new(m: u32, k: Rat, c: Vec<Rat>) -> Result<Self> {
        if c.len() + 1 != m as usize {
            return Err(Error::LengthMismatch {
                what: "c vector",
                expected: m as usize - 1,
                got: c.len(),
            });
        }
        Ok(ParamsC { m, k, c })
    }

    /// True iff `c_i = 0` whenever `d` does not divide `i`, i.e. the parameter
    /// is an extension by zero from G(m,d,n).
    pub fn is_supported_on_multiples(&self, d: u32) -> bool {
        self.c
            .iter()
            .enumerate()
            .all(|(idx, v)| (idx as u32 + 1).is_multiple_of(d) || v.is_zero())
    }
}

impl ParamsH {
    pub fn new(h: Rat, big_h: Vec<Rat>) -> Result<Self> {
        let ph = ParamsH { h, big_h };
        ph.check_balanced()?;
        Ok(ph)
    }

    pub fn m(&self) -> u32 {
        self.big_h.len() as u32
    }

    fn check_balanced(&self) -> Result<()> {
        let sum: Rat = self.big_h.iter().cloned().sum();
        if !sum.is_zero() {
            return Err(Error::UnbalancedH(sum.to_string()));
        }
        Ok(())
    }

    /// Rescale to `h = -1`; partitions are invariant under scaling.
    pub fn normalized(&self) -> Result<ParamsH> {
        if self.h.is_zero() {
            return Err(Error::ZeroK);
        }
        let factor = -self.h.recip();
        Ok(ParamsH {
            h: Rat::from_int(-1),
            big_h: self.big_h.iter().map(|v| v * &factor).collect(),
        })
    }

    /// The generic witness for G(m,d,n): `p`-cyclic, with block shifts
    /// `s'_j = j * g` for a gap `g = 2n + m`. The gap exceeds the content
    /// range of any multipartition of `n`, and is at least `m`, so no
    /// hyperplane `k n_R0 + n_Si - n_Sj = 0` with `k != 0` passes through it.
    pub fn gap_witness(gp: &GroupParams) -> ParamsH {
        let g = (2 * gp.n + gp.m) as i64;
        let p = gp.p as usize;
        let big_h = (0..gp.m as usize)
            .map(|j| {
                if j % p == 0 {
                    Rat::from_int(-(p as i64 - 1) * g)
                } else {
                    Rat::from_int(g)
                }
            })
            .collect();
        ParamsH {
            h: Rat::from_int(-1),
            big_h,
        }
    }
}

/// `H_{i+p} = H_i` for all `i` (indices mod `m`).
pub fn is_p_cyclic(ph: &ParamsH, p: u32) -> bool {
    let m = ph.big_h.len();
    let p = p as usize;
    (0..m).all(|i| ph.big_h[(i + p) % m] == ph.big_h[i])
}

/// Normalise to `h = -1`, take `e` the least common denominator of `h` and the
/// `H_i`, and form `s = (0, eH_1, eH_1 + eH_2, ...)`.
pub fn integerize(ph: &ParamsH) -> Result<ShiftData> {
    let norm = ph.normalized()?;
    let mut all = norm.big_h.clone();
    all.push(norm.h.clone());
    let e: BigInt = Rat::lcm_denom(&all);
    let e_rat = Rat::from_bigint(e.clone());
    let mut s = Vec::with_capacity(norm.big_h.len());
    let mut acc = Rat::zero();
    s.push(0);
    for hj in &norm.big_h[1..] {
        acc = acc + &(hj * &e_rat);
        s.push(
            acc.to_i64()
                .ok_or_else(|| Error::Parse(format!("shift {acc} does not fit in i64")))?,
        );
    }
    let e = e
        .to_u64()
        .ok_or_else(|| Error::Parse(format!("denominator {e} does not fit in u64")))?;
    Ok(ShiftData { e, s })
}

impl ShiftData {
    pub fn m(&self) -> usize {
        self.s.len()
    }

    /// `s_{j+p} = s_j` wherever both are defined; equivalent to the
    /// underlying `H` being `p`-cyclic.
    pub fn is_p_cyclic(&self, p: u32) -> bool {
        let p = p as usize;
        (0..self.s.len().saturating_sub(p)).all(|j| self.s[j + p] == self.s[j])
    }

    /// The first block `s' = (s_0, ..., s_{p-1})`.
    pub fn block(&self, p: u32) -> &[i64] {
        &self.s[..p as usize]
    }

    /// `s_{ip} - s_0` for each block `i`; all zero for `p`-cyclic data.
    pub fn block_offsets(&self, p: u32) -> Vec<i64> {
        self.s
            .iter()
            .step_by(p as usize)
            .map(|&v| v - self.s[0])
            .collect()
    }

    /// `n_{R,0} = e`, `n_{R,1} = 0`, `n_{S,j} = s_j`.
    pub fn hecke(&self) -> HeckeParams {
        HeckeParams {
            n_r0: self.e as i64,
            n_r1: 0,
            n_s: self.s.clone(),
        }
    }

    /// Same data with `e` (and hence every `s_j`) multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> ShiftData {
        ShiftData {
            e: self.e * factor,
            s: self.s.iter().map(|&v| v * factor as i64).collect(),
        }
    }
}

impl HeckeParams {
    pub fn m(&self) -> usize {
        self.n_s.len()
    }

    pub fn is_p_cyclic(&self, p: u32) -> bool {
        let p = p as usize;
        (0..self.n_s.len().saturating_sub(p)).all(|j| self.n_s[j + p] == self.n_s[j])
    }
}

/// JSON parameter file: `{"m":4,"d":2,"n":3,"k":"-1","c":{"2":"1/3"}}`.
///
/// Rationals are strings `"p/q"` (plain integers are accepted); omitted
/// `c_i` are zero. An `"H"` array may be given instead of `"c"`.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamFile {
    pub m: Option<u32>,
    pub d: Option<u32>,
    pub n: Option<u32>,
    pub k: Option<Rat>,
    #[serde(default)]
    pub c: Option<BTreeMap<String, Rat>>,
    #[serde(rename = "H", default)]
    pub big_h: Option<Vec<Rat>>,
}

impl ParamFile {
    pub fn parse(text: &str) -> Result<ParamFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("parameter JSON: {e}")))
    }

    /// Validate against the requested group and translate to the `(h, H)` basis.
    pub fn resolve(&self, gp: &GroupParams) -> Result<ParamsH> {
        for (name, given, want) in [
            ("m", self.m, gp.m),
            ("d", self.d, gp.d),
            ("n", self.n, gp.n),
        ] {
            if let Some(v) = given {
                if v != want {
                    return Err(Error::InvalidGroup(format!(
                        "parameter file has {name} = {v} but {name} = {want} was requested"
                    )));
                }
            }
        }
        let k = self.k.clone().unwrap_or_else(|| Rat::from_int(-1));
        if k.is_zero() {
            return Err(Error::ZeroK);
        }
        let ph = match (&self.c, &self.big_h) {
            (Some(_), Some(_)) => {
                return Err(Error::Parse("give either \"c\" or \"H\", not both".into()));
            }
            (_, Some(big_h)) => {
                if big_h.len() != gp.m as usize {
                    return Err(Error::LengthMismatch {
                        what: "H vector",
                        expected: gp.m as usize,
                        got: big_h.len(),
                    });
                }
                ParamsH::new(k, big_h.clone())?
            }
            (c, None) => {
                let mut cv = vec![Rat::zero(); gp.m as usize - 1];
                for (key, v) in c.iter().flatten() {
                    let i: usize = key
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad class index `{key}`")))?;
                    if i == 0 || i >= gp.m as usize {
                        return Err(Error::Parse(format!(
                            "class index {i} out of range 1..{}",
                            gp.m - 1
                        )));
                    }
                    cv[i - 1] = v.clone();
                }
                let pc = ParamsC::new(gp.m, k, cv)?;
                if !pc.is_supported_on_multiples(gp.d) {
                    return Err(Error::NotCyclic { p: gp.p });
                }
                c_to_h(&pc)?
            }
        };
        if !is_p_cyclic(&ph, gp.p) {
            return Err(Error::NotCyclic { p: gp.p });
        }
        Ok(ph)
    }
}
