use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ratpoly, RootOfUnity, Rational};
use crate::error::{Error, Result};

const DEFAULT_MAX_ORDER: u32 = 240;

static MAX_ORDER: Lazy<u32> = Lazy::new(|| {
    std::env::var("REALFORMS_MAX_ORDER")
        .ok()
        .and_then(|s| s.trim().parse::<u32>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_MAX_ORDER)
});

/// Largest cyclotomic order arithmetic is allowed to produce.
///
/// Read once from `REALFORMS_MAX_ORDER`, default 240.
pub fn max_order() -> u32 {
    *MAX_ORDER
}

fn check_order(order: u64) -> Result<u32> {
    let cap = max_order();
    if order > cap as u64 {
        return Err(Error::OrderTooLarge { order, cap });
    }
    Ok(order as u32)
}

pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn mobius(n: u32) -> i8 {
    let mut n = n;
    let mut k = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

static CYCLOTOMIC: Lazy<Mutex<HashMap<u32, Arc<Vec<Rational>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The `n`-th cyclotomic polynomial, low degree first, monic.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<Rational>> {
    if let Some(p) = CYCLOTOMIC.lock().unwrap().get(&n) {
        return p.clone();
    }
    // Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}
    let divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    let mut poly: Vec<i128> = vec![1];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            let mut next = vec![0i128; poly.len() + d as usize];
            for (k, &c) in poly.iter().enumerate() {
                next[k + d as usize] += c;
                next[k] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            // exact division by x^d - 1
            let d = d as usize;
            let qlen = poly.len() - d;
            let mut quot = vec![0i128; qlen];
            for k in (0..qlen).rev() {
                let above = if k + d < qlen { quot[k + d] } else { 0 };
                quot[k] = poly[k + d] + above;
            }
            poly = quot;
        }
    }
    let rat: Arc<Vec<Rational>> = Arc::new(
        poly.into_iter()
            .map(|c| Rational::from_integer(BigInt::from(c)))
            .collect(),
    );
    CYCLOTOMIC.lock().unwrap().insert(n, rat.clone());
    rat
}

/// Reduce a power-basis vector modulo Φ_n to length φ(n).
fn reduce(n: u32, mut v: Vec<Rational>) -> Vec<Rational> {
    let modulus = cyclotomic_polynomial(n);
    let phi = modulus.len() - 1;
    if v.len() > phi {
        let nonzero: Vec<(usize, Rational)> = modulus[..phi]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();
        for k in (phi..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[k]);
            for (j, m) in &nonzero {
                v[k - phi + j] -= &c * m;
            }
        }
    }
    v.truncate(phi);
    v.resize(phi, Rational::zero());
    v
}

fn lcm(a: u32, b: u32) -> u64 {
    (a as u64 / a.gcd(&b) as u64) * b as u64
}

/// An exact element of the cyclotomic field ℚ(ζ_N), stored in the power
/// basis `1, ζ_N, …, ζ_N^{φ(N)-1}` modulo the N-th cyclotomic polynomial.
///
/// Values of different orders can be mixed freely; both operands are
/// embedded into ℚ(ζ_lcm) first. Equality is field equality, so the same
/// number written in two different orders compares equal.
#[derive(Clone)]
pub struct CycloNum {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    pub fn zero() -> Self {
        CycloNum { order: 1, coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(v.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num.into(), den.into()))
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNum { order: 1, coeffs: vec![r] }
    }

    /// The imaginary unit ζ₄.
    pub fn i() -> Self {
        Self::zeta_pow(4, 1).expect("order 4 is always allowed")
    }

    pub fn zeta(order: u32) -> Result<Self> {
        Self::zeta_pow(order, 1)
    }

    /// ζ_order^exponent; negative exponents are reduced modulo the order.
    pub fn zeta_pow(order: u32, exponent: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::Parse("root of unity of order 0".into()));
        }
        let order = check_order(order as u64)?;
        let k = exponent.rem_euclid(order as i64) as usize;
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        Ok(CycloNum { order, coeffs: reduce(order, v) })
    }

    /// Build from power-basis coordinates of exact length φ(order).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Parse("cyclotomic order 0".into()));
        }
        let order = check_order(order as u64)?;
        let phi = euler_phi(order) as usize;
        if coeffs.len() != phi {
            return Err(Error::Parse(format!(
                "order {order} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(CycloNum { order, coeffs })
    }

    /// Build from a polynomial in ζ_order of any length; it is reduced.
    pub fn from_power_sum(order: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let order = check_order(order as u64)?;
        Ok(CycloNum { order, coeffs: reduce(order, coeffs) })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    fn embed_unchecked(&self, target: u32) -> CycloNum {
        debug_assert_eq!(target % self.order, 0);
        if target == self.order {
            return self.clone();
        }
        if self.is_rational() {
            let mut coeffs = vec![Rational::zero(); euler_phi(target) as usize];
            coeffs[0] = self.coeffs[0].clone();
            return CycloNum { order: target, coeffs };
        }
        let k = (target / self.order) as usize;
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[j * k] = c.clone();
        }
        CycloNum { order: target, coeffs: reduce(target, v) }
    }

    /// Embed into ℚ(ζ_target); `target` must be a multiple of the order.
    pub fn embed(&self, target: u32) -> Result<CycloNum> {
        if target == 0 || target % self.order != 0 {
            return Err(Error::Invariant(format!(
                "cannot embed order {} into order {target}",
                self.order
            )));
        }
        check_order(target as u64)?;
        Ok(self.embed_unchecked(target))
    }

    fn common(&self, other: &CycloNum) -> Result<(u32, CycloNum, CycloNum)> {
        if self.order == other.order {
            return Ok((self.order, self.clone(), other.clone()));
        }
        if other.is_rational() && other.order != self.order {
            return Ok((self.order, self.clone(), other.embed_unchecked_rational(self.order)));
        }
        if self.is_rational() {
            return Ok((other.order, self.embed_unchecked_rational(other.order), other.clone()));
        }
        let n = check_order(lcm(self.order, other.order))?;
        Ok((n, self.embed_unchecked(n), other.embed_unchecked(n)))
    }

    fn embed_unchecked_rational(&self, target: u32) -> CycloNum {
        let mut coeffs = vec![Rational::zero(); euler_phi(target) as usize];
        coeffs[0] = self.coeffs[0].clone();
        CycloNum { order: target, coeffs }
    }

    pub fn try_add(&self, other: &CycloNum) -> Result<CycloNum> {
        let (n, a, b) = self.common(other)?;
        let coeffs = a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x + y).collect();
        Ok(CycloNum { order: n, coeffs })
    }

    pub fn try_sub(&self, other: &CycloNum) -> Result<CycloNum> {
        let (n, a, b) = self.common(other)?;
        let coeffs = a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x - y).collect();
        Ok(CycloNum { order: n, coeffs })
    }

    pub fn try_mul(&self, other: &CycloNum) -> Result<CycloNum> {
        if self.is_rational() {
            return Ok(other.scale(&self.coeffs[0]));
        }
        if other.is_rational() {
            return Ok(self.scale(&other.coeffs[0]));
        }
        let (n, a, b) = self.common(other)?;
        let prod = ratpoly::mul(&a.coeffs, &b.coeffs);
        Ok(CycloNum { order: n, coeffs: reduce(n, prod) })
    }

    pub fn try_div(&self, other: &CycloNum) -> Result<CycloNum> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(CycloNum::from_rational(r.recip()));
        }
        let modulus = cyclotomic_polynomial(self.order);
        let (g, s) = ratpoly::ext_gcd_mod(&self.coeffs, &modulus);
        if ratpoly::degree(&g) != Some(0) {
            return Err(Error::Invariant("cyclotomic polynomial is not irreducible?".into()));
        }
        Ok(CycloNum { order: self.order, coeffs: reduce(self.order, s) })
    }

    pub fn scale(&self, s: &Rational) -> CycloNum {
        CycloNum { order: self.order, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn pow(&self, exp: i64) -> Result<CycloNum> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = CycloNum::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// The Galois automorphism ζ ↦ ζ^k, for k coprime to the order.
    pub fn galois(&self, k: i64) -> CycloNum {
        let n = self.order as i64;
        if n <= 2 {
            return self.clone();
        }
        let mut v = vec![Rational::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let idx = (j as i64 * k).rem_euclid(n) as usize;
                v[idx] += c;
            }
        }
        CycloNum { order: self.order, coeffs: reduce(self.order, v) }
    }

    /// Complex conjugation, ζ ↦ ζ^{N-1}.
    pub fn conj(&self) -> CycloNum {
        self.galois(self.order as i64 - 1)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// `x · conj(x)`, a totally real element.
    pub fn norm_sq(&self) -> CycloNum {
        self.try_mul(&self.conj()).expect("same order")
    }

    pub fn is_unimodular(&self) -> bool {
        self.norm_sq().is_one()
    }

    /// Split into real and imaginary rational parts when the value lies in ℚ(i).
    pub fn as_gaussian(&self) -> Option<(Rational, Rational)> {
        let two = Rational::from_integer(2.into());
        let re = (self + &self.conj()).to_rational()? / &two;
        let im_times_i = self - &self.conj();
        let im = (&im_times_i * &CycloNum::i().conj()).to_rational()? / &two;
        Some((re, im))
    }

    /// Recognize the value as a root of unity, if it is one.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.to_rational() {
            return if r.is_one() {
                Some(RootOfUnity::one())
            } else if r == -Rational::one() {
                Some(RootOfUnity::new(2, 1))
            } else {
                None
            };
        }
        if !self.is_unimodular() {
            return None;
        }
        // the roots of unity in ℚ(ζ_N) are exactly μ_lcm(2, N)
        let full = if self.order % 2 == 1 { self.order * 2 } else { self.order };
        let me = self.embed_unchecked(full);
        let phi = me.coeffs.len();
        let mut power: Vec<Rational> = vec![Rational::zero(); phi];
        power[0] = Rational::one();
        for k in 0..full {
            if power == me.coeffs {
                return Some(RootOfUnity::new(full, k as i64));
            }
            // multiply by ζ: shift, then reduce
            let mut shifted = Vec::with_capacity(phi + 1);
            shifted.push(Rational::zero());
            shifted.extend(power);
            power = reduce(full, shifted);
        }
        None
    }

    /// Rewrite the value in the smallest cyclotomic field containing it.
    pub fn minimal(&self) -> CycloNum {
        if self.is_rational() {
            return CycloNum::from_rational(self.coeffs[0].clone());
        }
        let n = self.order;
        let mut divisors: Vec<u32> = (1..n).filter(|d| n % d == 0 && d % 4 != 2).collect();
        divisors.sort_unstable();
        for d in divisors {
            if let Some(v) = self.restrict(d) {
                return v;
            }
        }
        if n % 4 == 2 {
            if let Some(v) = self.restrict(n / 2) {
                return v;
            }
        }
        self.clone()
    }

    /// The same value as an element of ℚ(ζ_d), if it lies in that subfield.
    pub fn restrict(&self, d: u32) -> Option<CycloNum> {
        if d == 0 || self.order % d != 0 {
            return None;
        }
        if d == self.order {
            return Some(self.clone());
        }
        let phi_d = euler_phi(d) as usize;
        let cols: Vec<Vec<Rational>> = (0..phi_d)
            .map(|j| {
                let mut basis = vec![Rational::zero(); phi_d];
                basis[j] = Rational::one();
                CycloNum { order: d, coeffs: basis }.embed_unchecked(self.order).coeffs
            })
            .collect();
        let y = ratpoly::solve_columns(&cols, &self.coeffs)?;
        Some(CycloNum { order: d, coeffs: y })
    }

    /// A real square root of a nonnegative rational, built from quadratic
    /// Gauss sums. Its order grows with the squarefree part of `r`.
    pub fn sqrt_rational(r: &Rational) -> Result<CycloNum> {
        if r.is_negative() {
            return Ok(&Self::sqrt_rational(&-r)? * &CycloNum::i());
        }
        if r.is_zero() {
            return Ok(CycloNum::zero());
        }
        let num = r.numer().clone();
        let den = r.denom().clone();
        // sqrt(n/d) = sqrt(n·d)/d
        let prod = (&num * &den)
            .to_u64()
            .ok_or_else(|| Error::NotRepresentable(format!("sqrt({r}) has too large a radicand")))?;
        let (square, free) = split_square(prod)?;
        let mut out = CycloNum::from_rational(Rational::new(BigInt::from(square), den));
        for p in prime_factors(free) {
            out = out.try_mul(&sqrt_prime(p)?)?;
        }
        Ok(out)
    }

    /// Some square root of the value, when one can be written down inside
    /// the cyclotomic tower: roots of unity, rationals, and products of a
    /// rational with a root of unity.
    pub fn sqrt(&self) -> Result<CycloNum> {
        if let Some(r) = self.to_rational() {
            return Self::sqrt_rational(&r);
        }
        if let Some(w) = self.as_root_of_unity() {
            return w.square_root().to_cyclo();
        }
        let nsq = self.norm_sq();
        if let (Some((u, v)), Some(t)) = (self.as_gaussian(), nsq.to_rational()) {
            if let Some(r) = rational_sqrt_exact(&t) {
                // sqrt(u + iv) = sqrt((r+u)/2) ± i·sqrt((r-u)/2) with r = |u + iv|
                let two = Rational::from_integer(2.into());
                let re = Self::sqrt_rational(&((&r + &u) / &two))?;
                let im = Self::sqrt_rational(&((&r - &u) / &two))?;
                let im = if v.is_negative() { -im } else { im };
                let root = re.try_add(&im.try_mul(&CycloNum::i())?)?;
                if root.try_mul(&root)? == *self {
                    return Ok(root);
                }
            }
        }
        if let Some(t) = nsq.to_rational() {
            if let Some(modulus) = rational_sqrt_exact(&t) {
                let unit = self.try_div(&CycloNum::from_rational(modulus.clone()))?;
                if let Some(w) = unit.as_root_of_unity() {
                    let root_w = w.square_root().to_cyclo()?;
                    return Self::sqrt_rational(&modulus)?.try_mul(&root_w);
                }
            }
        }
        Err(Error::NotRepresentable(format!("square root of {self}")))
    }

    fn gaussian_display(re: &Rational, im: &Rational) -> String {
        let mut terms: Vec<(Rational, String)> = Vec::new();
        if !re.is_zero() {
            terms.push((re.clone(), String::new()));
        }
        if !im.is_zero() {
            terms.push((im.clone(), "i".to_string()));
        }
        join_terms(&terms)
    }
}

fn join_terms(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, basis)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if basis.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(basis);
        } else {
            out.push_str(&format!("{abs}*{basis}"));
        }
    }
    out
}

/// Exact rational square root, if `t` is a perfect square.
pub fn rational_sqrt_exact(t: &Rational) -> Option<Rational> {
    if t.is_negative() {
        return None;
    }
    let n = t.numer().sqrt();
    let d = t.denom().sqrt();
    (&n * &n == *t.numer() && &d * &d == *t.denom()).then(|| Rational::new(n, d))
}

fn split_square(mut n: u64) -> Result<(u64, u64)> {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if p > 1_000_000 {
            return Err(Error::NotRepresentable("radicand too large to factor".into()));
        }
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    if n > 1 {
        free *= n;
    }
    Ok((square, free))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else if result == 0 {
        0
    } else {
        -1
    }
}

/// A real square root of the prime `p`.
fn sqrt_prime(p: u64) -> Result<CycloNum> {
    if p == 2 {
        // ζ_8 + ζ_8^{-1}
        return CycloNum::zeta_pow(8, 1)?.try_add(&CycloNum::zeta_pow(8, -1)?);
    }
    let order = u32::try_from(p).map_err(|_| Error::NotRepresentable(format!("sqrt({p})")))?;
    check_order(p)?;
    let mut v = vec![Rational::zero(); p as usize];
    for a in 1..p {
        v[a as usize] = Rational::from_integer(legendre(a, p).into());
    }
    let gauss = CycloNum::from_power_sum(order, v)?;
    if p % 4 == 1 {
        Ok(gauss)
    } else {
        // gauss^2 = -p, so -i·gauss is a real square root of p
        gauss.try_mul(&CycloNum::i().conj())
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &CycloNum) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        match (self.is_rational(), other.is_rational()) {
            (true, true) => self.coeffs[0] == other.coeffs[0],
            (true, false) | (false, true) => false,
            (false, false) => {
                let n = lcm(self.order, other.order) as u32;
                self.embed_unchecked(n).coeffs == other.embed_unchecked(n).coeffs
            }
        }
    }
}

impl Eq for CycloNum {}

impl Default for CycloNum {
    fn default() -> Self {
        CycloNum::zero()
    }
}

impl From<i64> for CycloNum {
    fn from(v: i64) -> Self {
        CycloNum::from_int(v)
    }
}

impl From<Rational> for CycloNum {
    fn from(r: Rational) -> Self {
        CycloNum::from_rational(r)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl fmt::Display for CycloNum {
    /// Output re-parses with the scalar literal grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minimal();
        if let Some(r) = m.to_rational() {
            return write!(f, "{r}");
        }
        if m.order == 4 {
            return write!(f, "{}", Self::gaussian_display(&m.coeffs[0], &m.coeffs[1]));
        }
        let terms: Vec<(Rational, String)> = m
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let basis = match k {
                    0 => String::new(),
                    1 => format!("zeta({})", m.order),
                    _ => format!("zeta({})^{k}", m.order),
                };
                (c.clone(), basis)
            })
            .collect();
        write!(f, "{}", join_terms(&terms))
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    order: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = self.minimal();
        CycloRepr { order: m.order, coeffs: m.coeffs.iter().map(|c| c.to_string()).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CycloRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| Rational::from_str(s).map_err(|e| D::Error::custom(format!("{s}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CycloNum::from_coeffs(repr.order, coeffs).map_err(D::Error::custom)
    }
}
