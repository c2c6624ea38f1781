use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Laurent polynomial in one variable with integer coefficients.
///
/// Stored as a sorted map from exponent to coefficient; zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exponent: i64, coefficient: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert(0);
        *slot += coefficient;
        if *slot == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (e, c) in other.terms() {
            self.add_term(e, c);
        }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, c * k)))
    }

    /// Multiply by `x^r`.
    pub fn shift(&self, r: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e + r, c)).collect(),
        }
    }

    /// Substitute `x -> x^e`, i.e. multiply every exponent by `e`.
    pub fn substitute_power(&self, e: u64) -> LaurentPoly {
        assert!(e >= 1, "exponent scale must be positive");
        let e = e as i64;
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, &c)| (k * e, c)).collect(),
        }
    }

    /// Value at `x = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (e, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{mag}x")?,
                (_, 1) => write!(f, "x^{e}")?,
                _ => write!(f, "{mag}x^{e}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as `{"exponent": coefficient}` with exponents as string keys.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &c)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(e, 1)
    }

    #[test]
    fn shift_monomial() {
        assert_eq!(x(0).shift(3), x(3));
    }

    #[test]
    fn cancellation_is_canonical() {
        let p = x(-1).add(&x(1));
        let q = p.add(&x(1).neg());
        assert_eq!(q, x(-1));
        assert_eq!(q.len(), 1);
    }

    #[test]
    fn difference_of_squares() {
        let a = x(0).add(&x(1));
        let b = x(0).sub(&x(1));
        assert_eq!(a.mul(&b), x(0).sub(&x(2)));
    }

    #[test]
    fn substitute_power_scales_exponents() {
        let p = LaurentPoly::from_terms([(-1, 1), (0, 2), (1, 1)]);
        assert_eq!(
            p.substitute_power(3),
            LaurentPoly::from_terms([(-3, 1), (0, 2), (3, 1)])
        );
        assert_eq!(p.substitute_power(1), p);
    }

    #[test]
    fn substitute_power_injective_exhaustive() {
        // all polys with exponents in [-3,3], coefficients in {0,1,2}: 3^7 of them
        let mut all = Vec::new();
        for code in 0..3usize.pow(7) {
            let mut c = code;
            let mut p = LaurentPoly::zero();
            for e in -3..=3 {
                p.add_term(e, (c % 3) as i64);
                c /= 3;
            }
            all.push(p);
        }
        for e in 1..=4 {
            let images: std::collections::BTreeSet<_> =
                all.iter().map(|p| p.substitute_power(e)).collect();
            assert_eq!(images.len(), all.len());
        }
    }

    #[test]
    fn display_and_json() {
        let p = LaurentPoly::from_terms([(-1, 1), (0, 2), (2, -3)]);
        assert_eq!(p.to_string(), "x^-1 + 2 - 3x^2");
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"-1":1,"0":2,"2":-3}"#
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
