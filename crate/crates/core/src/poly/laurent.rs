use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::uni::coefficient_text;
use crate::arith::CycloNum;

/// Laurent polynomial in one variable `y`; only nonzero terms are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, CycloNum>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: CycloNum) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: CycloNum, k: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    pub fn from_terms(terms: &[(i64, CycloNum)]) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(*k, c.clone());
        }
        p
    }

    fn add_term(&mut self, k: i64, c: CycloNum) {
        let sum = match self.terms.remove(&k) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(k, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CycloNum)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> CycloNum {
        self.terms.get(&k).cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &CycloNum) -> LaurentPoly {
        let mut p = Self::zero();
        for (k, c) in &self.terms {
            p.add_term(*k, c * s);
        }
        p
    }

    /// `y^k · c(y)`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// `c(μ·y^e)` for `e = ±1`.
    pub fn substitute(&self, mu: &CycloNum, e: i64) -> LaurentPoly {
        let mut p = Self::zero();
        for (k, c) in &self.terms {
            let factor = mu.pow(*k).expect("μ is nonzero");
            p.add_term(k * e, c * &factor);
        }
        p
    }

    pub fn conj(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect() }
    }

    pub fn eval(&self, y: &CycloNum) -> CycloNum {
        self.terms.iter().fold(CycloNum::zero(), |acc, (k, c)| {
            &acc + &(c * &y.pow(*k).expect("evaluation at a nonzero point"))
        })
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (k, c) in &rhs.terms {
            p.add_term(*k, c.clone());
        }
        p
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                p.add_term(i + j, a * b);
            }
        }
        p
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, c) in self.terms.iter().rev() {
            let mono = match k {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            let (negative, body) = coefficient_text(c);
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            match (body.as_str(), mono.is_empty()) {
                (b, true) => out.push_str(b),
                ("1", false) => out.push_str(&mono),
                (b, false) => out.push_str(&format!("{b}*{mono}")),
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(i64, &CycloNum)> = self.terms().collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<(i64, CycloNum)> = Vec::deserialize(d)?;
        Ok(LaurentPoly::from_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_inverts_exponents() {
        // c(y) = y + 2y^{-1};  c(-y^{-1}) = -y^{-1} - 2y
        let c = LaurentPoly::from_terms(&[(1, CycloNum::one()), (-1, CycloNum::from_int(2))]);
        let s = c.substitute(&CycloNum::from_int(-1), -1);
        let expected = LaurentPoly::from_terms(&[(-1, CycloNum::from_int(-1)), (1, CycloNum::from_int(-2))]);
        assert_eq!(s, expected);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = LaurentPoly::monomial(CycloNum::i(), -3);
        let sum = &a + &(-&a);
        assert!(sum.is_zero());
        assert_eq!(sum.terms().count(), 0);
    }

    #[test]
    fn product() {
        let a = LaurentPoly::from_terms(&[(1, CycloNum::one()), (-1, CycloNum::one())]);
        let sq = &a * &a;
        assert_eq!(sq, LaurentPoly::from_terms(&[(2, 1.into()), (0, 2.into()), (-2, 1.into())]));
    }
}
