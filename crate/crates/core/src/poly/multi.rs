use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::uni::{coefficient_text, UniPoly};
use crate::arith::CycloNum;

/// Sparse polynomial in a fixed number of variables. Three variables
/// `x, y, z` is the common case; larger rings are used for identities with
/// formal parameters.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, CycloNum>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: CycloNum) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, CycloNum::one())
    }

    /// The `i`-th variable.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, CycloNum::one());
        p
    }

    /// `x, y, z` in the three-variable ring.
    pub fn xyz() -> (Self, Self, Self) {
        (Self::var(3, 0), Self::var(3, 1), Self::var(3, 2))
    }

    pub fn monomial(c: CycloNum, exponents: Vec<u32>) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// Embed a univariate polynomial as a polynomial in variable `var`.
    pub fn from_uni(p: &UniPoly, nvars: usize, var: usize) -> Self {
        let mut out = Self::zero(nvars);
        for k in p.support() {
            let mut e = vec![0; nvars];
            e[var] = k as u32;
            out.add_term(e, p.coeff(k));
        }
        out
    }

    fn add_term(&mut self, e: Vec<u32>, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &CycloNum)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, e: &[u32]) -> CycloNum {
        self.terms.get(e).cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, s: &CycloNum) -> MultiPoly {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), c * s);
        }
        p
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn conj(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.conj())).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(CycloNum::is_real)
    }

    /// `P(f_1, …, f_n)`, a ring homomorphism in `P`. All images must live in
    /// the same ring, which may differ from the ring of `P`.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, |f| f.nvars);
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|f| vec![Self::one(f.nvars), f.clone()]).collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[v].len() <= k as usize {
                    let next = &powers[v][powers[v].len() - 1] * &images[v];
                    powers[v].push(next);
                }
                term = &term * &powers[v][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Exact division by variable `i`, if every term contains it.
    pub fn eval(&self, point: &[CycloNum]) -> CycloNum {
        assert_eq!(point.len(), self.nvars, "point has the wrong dimension");
        let mut acc = CycloNum::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &v.pow(k as i64).expect("nonnegative power");
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn div_by_var(&self, i: usize) -> Option<MultiPoly> {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                return None;
            }
            let mut e = e.clone();
            e[i] -= 1;
            out.add_term(e, c.clone());
        }
        Some(out)
    }

    /// Collect as a univariate polynomial in variable `i`, if no other
    /// variable occurs.
    pub fn to_uni(&self, i: usize) -> Option<UniPoly> {
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k != 0) {
                return None;
            }
            terms.push((e[i] as usize, c.clone()));
        }
        Some(UniPoly::from_terms(&terms))
    }

    /// Render with explicit variable names, highest total degree first.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for e in keys {
            let c = &self.terms[e];
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { names[v].to_string() } else { format!("{}^{k}", names[v]) })
                .collect();
            let mono = mono.join("*");
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

const XYZ: [&str; 3] = ["x", "y", "z"];

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nvars <= 3 {
            write!(f, "{}", self.display_with(&XYZ[..self.nvars]))
        } else {
            let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            write!(f, "{}", self.display_with(&refs))
        }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "mixed polynomial rings");
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "mixed polynomial rings");
        let mut p = MultiPoly::zero(self.nvars);
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                p.add_term(e, a * b);
            }
        }
        p
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// `P(f_x, f_y, f_z)` for a polynomial in `x, y, z`.
pub fn substitute_map(p: &MultiPoly, fx: &MultiPoly, fy: &MultiPoly, fz: &MultiPoly) -> MultiPoly {
    p.substitute(&[fx.clone(), fy.clone(), fz.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> MultiPoly {
        MultiPoly::constant(3, CycloNum::from_int(v))
    }

    #[test]
    fn norm_form() {
        let (x, y, _) = MultiPoly::xyz();
        let iy = y.scale(&CycloNum::i());
        assert_eq!(&(&x + &iy) * &(&x - &iy), &(&x * &x) + &(&y * &y));
    }

    #[test]
    fn sphere_pullback() {
        let (x, y, z) = MultiPoly::xyz();
        let i = CycloNum::i();
        let p = &(&(&x * &y) - &(&z * &z)) + &c(1);
        let iy = y.scale(&i);
        let out = substitute_map(&p, &(&x + &iy), &(&x - &iy), &z.scale(&i));
        let expected = &(&(&(&x * &x) + &(&y * &y)) + &(&z * &z)) + &c(1);
        assert_eq!(out, expected);
    }

    #[test]
    fn cone_pullback() {
        let (x, y, z) = MultiPoly::xyz();
        let p = &(&x * &y) - &(&z * &z);
        let out = substitute_map(&p, &(&x - &y), &(&x + &y), &z);
        let expected = &(&(&x * &x) - &(&y * &y)) - &(&z * &z);
        assert_eq!(out, expected);
        assert_eq!(substitute_map(&p, &x, &y, &z), p);
    }

    #[test]
    fn display() {
        let (x, y, z) = MultiPoly::xyz();
        let p = &(&(&x * &y) - &z.pow(3)) + &c(-2);
        assert_eq!(p.to_string(), "-z^3 + x*y - 2");
    }
}
