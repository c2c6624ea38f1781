use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

use super::Rat;
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1);
    let mut result = m;
    let mut n = m;
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            while n.is_multiple_of(q) {
                n /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients (lowest degree first) of the `m`-th cyclotomic
/// polynomial, built from `x^m - 1 = prod_{k | m} Phi_k`.
pub fn cyclotomic_poly(m: u32) -> Arc<Vec<i64>> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for k in 1..m {
        if m.is_multiple_of(k) {
            let divisor = cyclotomic_poly(k);
            num = exact_div_monic(&num, &divisor);
        }
    }
    let p = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(m, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Element of the cyclotomic field Q(zeta_m), in the power basis
/// `1, zeta, ..., zeta^(phi(m)-1)` modulo `Phi_m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycloNum {
    m: u32,
    coeffs: Vec<Rat>,
}

impl CycloNum {
    pub fn zero(m: u32) -> Self {
        let deg = euler_phi(m as u64) as usize;
        CycloNum {
            m,
            coeffs: vec![Rat::zero(); deg],
        }
    }

    pub fn from_rat(m: u32, r: Rat) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = r;
        z
    }

    pub fn one(m: u32) -> Self {
        Self::from_rat(m, Rat::one())
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        let k = k.rem_euclid(m as i64) as usize;
        let mut dense = vec![Rat::zero(); k + 1];
        dense[k] = Rat::one();
        Self::from_dense(m, dense)
    }

    /// Reduce an arbitrary polynomial in `zeta` (lowest degree first).
    pub fn from_dense(m: u32, mut dense: Vec<Rat>) -> Self {
        let phi = cyclotomic_poly(m);
        let deg = phi.len() - 1;
        if dense.len() > deg {
            for k in (deg..dense.len()).rev() {
                let c = std::mem::take(&mut dense[k]);
                if c.is_zero() {
                    continue;
                }
                for (i, &p) in phi.iter().enumerate().take(deg) {
                    if p != 0 {
                        dense[k - deg + i] = &dense[k - deg + i] - &(&c * &Rat::from_int(p));
                    }
                }
            }
            dense.truncate(deg);
        }
        dense.resize(deg, Rat::zero());
        CycloNum { m, coeffs: dense }
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// `Some(q)` when the element is the rational number `q`.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// True when every coordinate is an integer, i.e. the element lies in Z[zeta_m].
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }

    fn check(&self, other: &CycloNum) -> Result<()> {
        if self.m != other.m {
            return Err(Error::ConductorMismatch(self.m, other.m));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check(other)?;
        Ok(CycloNum {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &CycloNum) -> Result<CycloNum> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycloNum {
        CycloNum {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> CycloNum {
        CycloNum {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn mul(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check(other)?;
        let n = self.coeffs.len();
        let mut dense = vec![Rat::zero(); (2 * n).saturating_sub(1).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] = &dense[i + j] + &(a * b);
                }
            }
        }
        Ok(CycloNum::from_dense(self.m, dense))
    }

    pub fn eq_checked(&self, other: &CycloNum) -> Result<bool> {
        self.check(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Phi_m`.
    pub fn inverse(&self) -> Option<CycloNum> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<Rat> = cyclotomic_poly(self.m)
            .iter()
            .map(|&c| Rat::from_int(c))
            .collect();
        // invariant: s_i * a == r_i (mod Phi)
        let (mut r0, mut r1) = (modulus, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::<Rat>::new(), vec![Rat::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since Phi_m is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let s: Vec<Rat> = s0.iter().map(|v| v * &c).collect();
        Some(CycloNum::from_dense(self.m, s))
    }

    /// Field norm down to Q, computed as the resultant `Res(Phi_m, a)`.
    pub fn norm(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let phi: Vec<Rat> = cyclotomic_poly(self.m)
            .iter()
            .map(|&c| Rat::from_int(c))
            .collect();
        resultant(&phi, &trim(self.coeffs.clone()))
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `sum_j weights[j] * zeta_m^{exponents[j]}`.
pub fn root_of_unity_sum(m: u32, exponents: &[i64], weights: &[Rat]) -> Result<CycloNum> {
    if exponents.len() != weights.len() {
        return Err(Error::LengthMismatch {
            what: "root_of_unity_sum weights",
            expected: exponents.len(),
            got: weights.len(),
        });
    }
    let mut dense = vec![Rat::zero(); m as usize];
    for (&k, w) in exponents.iter().zip(weights) {
        let k = k.rem_euclid(m as i64) as usize;
        dense[k] = &dense[k] + w;
    }
    Ok(CycloNum::from_dense(m, dense))
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Rat::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let z = Rat::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

/// Division with remainder in Q[x]; `b` must be nonzero and trimmed.
fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].recip();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] * &lead;
        for (i, y) in b.iter().enumerate() {
            rem[k + i] = &rem[k + i] - &(&c * y);
        }
        quot[k] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// `Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a)` for trimmed polynomials,
/// via the Euclidean remainder sequence.
fn resultant(f: &[Rat], g: &[Rat]) -> Rat {
    if f.is_empty() || g.is_empty() {
        return Rat::zero();
    }
    let (df, dg) = (f.len() - 1, g.len() - 1);
    if df == 0 {
        return f[0].pow(dg as u32);
    }
    if dg == 0 {
        return g[0].pow(df as u32);
    }
    let sign = if (df * dg).is_odd() {
        -Rat::one()
    } else {
        Rat::one()
    };
    if df < dg {
        return sign * resultant(g, f);
    }
    // Res(f,g) = (-1)^{df dg} Res(g,f) = (-1)^{df dg} lc(g)^{df - dr} Res(g, r)
    let (_, r) = poly_divrem(f, g);
    if r.is_empty() {
        return Rat::zero();
    }
    let dr = r.len() - 1;
    sign * g[dg].pow((df - dr) as u32) * resultant(g, &r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, k: i64) -> CycloNum {
        CycloNum::zeta_pow(m, k)
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        for m in 1..=30u32 {
            assert_eq!(cyclotomic_poly(m).len() - 1, euler_phi(m as u64) as usize);
        }
    }

    #[test]
    fn i_squared() {
        let i = z(4, 1);
        assert_eq!(i.mul(&i).unwrap(), CycloNum::from_rat(4, Rat::from_int(-1)));
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let s = CycloNum::one(3)
            .add(&z(3, 1))
            .unwrap()
            .add(&z(3, 2))
            .unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn fifth_power_is_one() {
        let mut acc = CycloNum::one(5);
        for _ in 0..5 {
            acc = acc.mul(&z(5, 1)).unwrap();
        }
        assert_eq!(acc, CycloNum::one(5));
        assert_eq!(z(5, 5), CycloNum::one(5));
    }

    #[test]
    fn conductor_mismatch() {
        assert!(matches!(
            z(3, 1).add(&z(4, 1)),
            Err(Error::ConductorMismatch(3, 4))
        ));
    }

    #[test]
    fn norms() {
        assert_eq!(
            CycloNum::one(2).sub(&z(2, 1)).unwrap().norm(),
            Rat::from_int(2)
        );
        assert_eq!(
            CycloNum::one(6).sub(&z(6, 1)).unwrap().norm(),
            Rat::from_int(1)
        );
        assert_eq!(
            CycloNum::one(4).sub(&z(4, 1)).unwrap().norm(),
            Rat::from_int(2)
        );
        assert_eq!(CycloNum::zero(7).norm(), Rat::zero());
        assert_eq!(
            CycloNum::from_rat(5, Rat::from_int(3)).norm(),
            Rat::from_int(81)
        );
    }

    #[test]
    fn inverse_roundtrip() {
        for m in 1..=12u32 {
            let a = root_of_unity_sum(
                m,
                &[0, 1, 3],
                &[Rat::from_int(2), Rat::new(1, 3), Rat::from_int(-1)],
            )
            .unwrap();
            if a.is_zero() {
                continue;
            }
            let inv = a.inverse().unwrap();
            assert_eq!(a.mul(&inv).unwrap(), CycloNum::one(m), "m={m}");
        }
        assert!(CycloNum::zero(5).inverse().is_none());
    }

    #[test]
    fn root_of_unity_sums() {
        let one = Rat::one();
        assert!(root_of_unity_sum(2, &[0, 1], &[one.clone(), one.clone()])
            .unwrap()
            .is_zero());
        let half = Rat::new(1, 2);
        assert_eq!(
            root_of_unity_sum(3, &[0, 0], &[half.clone(), half]).unwrap(),
            CycloNum::one(3)
        );
        assert!(root_of_unity_sum(4, &[1, 3], &[one.clone(), one.clone()])
            .unwrap()
            .is_zero());
        assert!(root_of_unity_sum(4, &[1], &[]).is_err());
    }
}
