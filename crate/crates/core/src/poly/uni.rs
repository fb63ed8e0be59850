use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{CycloNum, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the cyclotomic tower, lowest degree
/// first, with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<CycloNum>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(CycloNum::one())
    }

    pub fn constant(c: CycloNum) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(CycloNum::one(), 1)
    }

    pub fn monomial(c: CycloNum, k: usize) -> Self {
        let mut coeffs = vec![CycloNum::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<CycloNum>) -> Self {
        while coeffs.last().is_some_and(CycloNum::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| CycloNum::from_int(c)).collect())
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        Self::new(coeffs.iter().cloned().map(CycloNum::from_rational).collect())
    }

    /// Build from sparse `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms(terms: &[(usize, CycloNum)]) -> Self {
        let top = terms.iter().map(|(k, _)| *k).max().unwrap_or(0);
        let mut coeffs = vec![CycloNum::zero(); top + 1];
        for (k, c) in terms {
            coeffs[*k] = &coeffs[*k] + c;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[CycloNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> CycloNum {
        self.coeffs.get(k).cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn lead(&self) -> CycloNum {
        self.coeffs.last().cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(CycloNum::is_one)
    }

    /// Exponents carrying a nonzero coefficient, increasing.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&k| !self.coeffs[k].is_zero()).collect()
    }

    pub fn is_monomial(&self) -> bool {
        self.support().len() == 1
    }

    pub fn scale(&self, s: &CycloNum) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &CycloNum) -> CycloNum {
        let mut acc = CycloNum::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(q(z))`.
    pub fn compose(&self, q: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// `p(a·z + b)`.
    pub fn compose_affine(&self, a: &CycloNum, b: &CycloNum) -> UniPoly {
        self.compose(&UniPoly::new(vec![b.clone(), a.clone()]))
    }

    /// `p(z^k)`.
    pub fn substitute_power(&self, k: usize) -> UniPoly {
        if k == 0 {
            return UniPoly::constant(self.coeffs.iter().fold(CycloNum::zero(), |a, c| &a + c));
        }
        let mut coeffs = vec![CycloNum::zero(); self.degree().map_or(0, |d| d * k + 1)];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * k] = c.clone();
        }
        UniPoly::new(coeffs)
    }

    /// `z^k · p(z)`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![CycloNum::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly::new(coeffs)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &CycloNum::from_int(k as i64))
                .collect(),
        )
    }

    /// Coefficientwise complex conjugation.
    pub fn conj(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(CycloNum::conj).collect())
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(CycloNum::is_real)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(CycloNum::is_rational)
    }

    pub fn to_rationals(&self) -> Result<Vec<Rational>> {
        self.coeffs
            .iter()
            .map(|c| c.to_rational().ok_or_else(|| Error::NotRational(c.to_string())))
            .collect()
    }

    /// Render with the given variable name; the output re-parses.
    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
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
        out
    }
}

/// Sign and magnitude text for a coefficient; compound values are
/// parenthesized so that they can be multiplied by a monomial.
pub(crate) fn coefficient_text(c: &CycloNum) -> (bool, String) {
    if let Some(r) = c.to_rational() {
        use num_traits::Signed;
        return (r.is_negative(), r.abs().to_string());
    }
    let s = c.to_string();
    if s.contains(" + ") || s.contains(" - ") {
        (false, format!("({s})"))
    } else if let Some(rest) = s.strip_prefix('-') {
        (true, rest.to_string())
    } else {
        (false, s)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_var("z"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![CycloNum::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl Serialize for UniPoly {
    /// Sparse list of `[exponent, scalar]` pairs.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(usize, &CycloNum)> =
            self.support().into_iter().map(|k| (k, &self.coeffs[k])).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<(usize, CycloNum)> = Vec::deserialize(d)?;
        Ok(UniPoly::from_terms(&terms))
    }
}
