//! Normal forms of `p` for the surface `xy = p(z)`: reduced form, the
//! decomposition `p = z^m q(z^n)`, the symmetry group `H_p`, isomorphism
//! testing and existence of real forms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use crate::arith::{CycloNum, Rational, RootOfUnity};
use crate::error::{Error, Result};
use crate::poly::UniPoly;

/// The period `n` in `p = z^m q(z^n)`; infinite exactly when `q = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Period {
    Infinite,
    Finite(u32),
}

impl Period {
    pub fn finite(&self) -> Option<u32> {
        match self {
            Period::Infinite => None,
            Period::Finite(n) => Some(*n),
        }
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Period::Infinite => write!(f, "infinite"),
            Period::Finite(n) => write!(f, "{n}"),
        }
    }
}

impl Serialize for Period {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Period::Infinite => s.serialize_str("infinite"),
            Period::Finite(n) => s.serialize_u32(*n),
        }
    }
}

/// The group `H_p` of affine symmetries `cz + d` with `p(cz+d) = λp(z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HpKind {
    Infinite,
    Cyclic(u32),
}

impl HpKind {
    pub fn is_infinite(&self) -> bool {
        matches!(self, HpKind::Infinite)
    }
}

impl fmt::Display for HpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HpKind::Infinite => write!(f, "infinite"),
            HpKind::Cyclic(n) => write!(f, "cyclic({n})"),
        }
    }
}

impl Serialize for HpKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `reduced(z) = λ · p(z + μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub reduced: UniPoly,
    pub lambda: CycloNum,
    pub mu: CycloNum,
}

impl Reduction {
    /// Recompute `λ · p(z + μ)` and compare with the stored reduced form.
    pub fn verify(&self, p: &UniPoly) -> bool {
        p.compose_affine(&CycloNum::one(), &self.mu).scale(&self.lambda) == self.reduced
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub d: usize,
    pub m: usize,
    pub n: Period,
    pub q: UniPoly,
    pub hp: HpKind,
    pub reduction: Reduction,
}

impl SurfaceInvariants {
    pub fn reduced(&self) -> &UniPoly {
        &self.reduction.reduced
    }

    /// `z^m q(z^n)`, which must equal the reduced form.
    pub fn recompose(&self) -> UniPoly {
        match self.n {
            Period::Infinite => UniPoly::monomial(CycloNum::one(), self.m),
            Period::Finite(n) => self.q.substitute_power(n as usize).shift(self.m),
        }
    }
}

/// Bring `p` to the monic form with vanishing subleading coefficient.
pub fn reduce_form(p: &UniPoly) -> Result<Reduction> {
    let d = match p.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    let lead = p.lead();
    let lambda = lead.inv()?;
    let mu = -&(&p.coeff(d - 1) / &(&lead * &CycloNum::from_int(d as i64)));
    let reduced = p.compose_affine(&CycloNum::one(), &mu).scale(&lambda);
    debug_assert!(reduced.is_monic() && reduced.coeff(d - 1).is_zero());
    Ok(Reduction { reduced, lambda, mu })
}

/// `(m, n, q)` with `reduced = z^m q(z^n)`, `q(0) ≠ 0` and `n` maximal.
pub fn decompose(reduced: &UniPoly) -> (usize, Period, UniPoly) {
    let support = reduced.support();
    let m = support[0];
    if support.len() == 1 {
        return (m, Period::Infinite, UniPoly::one());
    }
    let n = support[1..].iter().fold(0usize, |g, &e| g.gcd(&(e - m)));
    let q = UniPoly::from_terms(
        &support.iter().map(|&e| ((e - m) / n, reduced.coeff(e))).collect::<Vec<_>>(),
    );
    (m, Period::Finite(n as u32), q)
}

pub fn symmetry_group(reduced: &UniPoly) -> HpKind {
    match decompose(reduced).1 {
        Period::Infinite => HpKind::Infinite,
        Period::Finite(n) => HpKind::Cyclic(n),
    }
}

/// Reduced form, decomposition and symmetry group of `p`.
pub fn invariants(p: &UniPoly) -> Result<SurfaceInvariants> {
    let reduction = reduce_form(p)?;
    let d = reduction.reduced.degree().expect("nonconstant");
    let (m, n, q) = decompose(&reduction.reduced);
    let hp = match n {
        Period::Infinite => HpKind::Infinite,
        Period::Finite(n) => HpKind::Cyclic(n),
    };
    let inv = SurfaceInvariants { d, m, n, q, hp, reduction };
    if inv.recompose() != inv.reduction.reduced || !inv.reduction.verify(p) {
        return Err(Error::Invariant(format!("decomposition of {p} does not recompose")));
    }
    Ok(inv)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rationals,
    GaussianRationals,
}

/// `p(a·z + b) = λ · q(z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub a: CycloNum,
    pub b: CycloNum,
    pub lambda: CycloNum,
}

impl IsoWitness {
    pub fn verify(&self, p: &UniPoly, q: &UniPoly) -> bool {
        p.compose_affine(&self.a, &self.b) == q.scale(&self.lambda)
    }

    /// The witness for the reverse direction `q(a'z + b') = λ' p(z)`.
    pub fn invert(&self) -> IsoWitness {
        let a = self.a.inv().expect("a is nonzero");
        let b = -&(&self.b * &a);
        let lambda = self.lambda.inv().expect("λ is nonzero");
        IsoWitness { a, b, lambda }
    }
}

/// Integers `u` with `Σ u_i k_i = gcd(k)`.
fn bezout(ks: &[i64]) -> (i64, Vec<i64>) {
    let mut g = 0i64;
    let mut us: Vec<i64> = Vec::with_capacity(ks.len());
    for &k in ks {
        let e = g.extended_gcd(&k);
        // e.gcd = e.x * g + e.y * k
        for u in us.iter_mut() {
            *u *= e.x;
        }
        us.push(e.y);
        g = e.gcd;
    }
    if g < 0 {
        g = -g;
        for u in us.iter_mut() {
            *u = -*u;
        }
    }
    (g, us)
}

/// Solve `a^{k_e} = r_e` for all `e` jointly: returns `(g, R)` with every
/// solution satisfying `a^g = R`, or `None` when the system is inconsistent.
fn power_system(eqs: &[(i64, CycloNum)]) -> Result<Option<(u32, CycloNum)>> {
    let ks: Vec<i64> = eqs.iter().map(|(k, _)| *k).collect();
    let (g, us) = bezout(&ks);
    let mut big_r = CycloNum::one();
    for ((_, r), u) in eqs.iter().zip(&us) {
        big_r = big_r.try_mul(&r.pow(*u)?)?;
    }
    for (k, r) in eqs {
        if big_r.pow(k / g)? != *r {
            return Ok(None);
        }
    }
    Ok(Some((g as u32, big_r)))
}

fn integer_root(n: &BigInt, g: u32) -> Option<BigInt> {
    if n.is_negative() {
        if g % 2 == 0 {
            return None;
        }
        return integer_root(&-n, g).map(|r| -r);
    }
    let r = n.nth_root(g);
    (num_traits::pow(r.clone(), g as usize) == *n).then_some(r)
}

/// A rational `s` with `s^g = r`, if one exists.
pub fn rational_root(r: &Rational, g: u32) -> Option<Rational> {
    if g == 0 {
        return r.is_one().then(Rational::one);
    }
    Some(Rational::new(integer_root(r.numer(), g)?, integer_root(r.denom(), g)?))
}

/// A root `a` of `a^g = big_r` in the requested field, if one exists.
fn field_root(big_r: &CycloNum, g: u32, over: Field) -> Result<Option<CycloNum>> {
    let units: Vec<CycloNum> = match over {
        Field::Rationals => vec![CycloNum::one(), CycloNum::from_int(-1)],
        Field::GaussianRationals => (0..4).map(|k| CycloNum::zeta_pow(4, k)).collect::<Result<_>>()?,
    };
    for w in units {
        let rest = big_r.try_div(&w.pow(g as i64)?)?;
        if let Some(r) = rest.to_rational() {
            if let Some(s) = rational_root(&r, g) {
                return Ok(Some(w.scale(&s)));
            }
        }
    }
    Ok(None)
}

fn in_field(p: &UniPoly, over: Field) -> bool {
    match over {
        Field::Rationals => p.is_rational(),
        Field::GaussianRationals => p.coeffs().iter().all(|c| c.as_gaussian().is_some()),
    }
}

/// Search for `(a, b, λ)` over the given field with `p(az + b) = λ q(z)`.
///
/// Both inputs are reduced first; an isomorphism between reduced forms has
/// no translation part and its scale factor solves a finite system of
/// equations `a^{d-e} = P_e / Q_e`, one per exponent in the support.
pub fn iso_test(p: &UniPoly, q: &UniPoly, over: Field) -> Result<Option<IsoWitness>> {
    for f in [p, q] {
        if f.degree().unwrap_or(0) == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !in_field(f, over) {
            return Err(Error::NotRational(f.to_string()));
        }
    }
    if p.degree() != q.degree() {
        return Ok(None);
    }
    let rp = reduce_form(p)?;
    let rq = reduce_form(q)?;
    let big_p = &rp.reduced;
    let big_q = &rq.reduced;
    if big_p.support() != big_q.support() {
        return Ok(None);
    }
    let d = big_p.degree().unwrap();
    let eqs: Vec<(i64, CycloNum)> = big_p
        .support()
        .into_iter()
        .filter(|&e| e < d)
        .map(|e| ((d - e) as i64, &big_p.coeff(e) / &big_q.coeff(e)))
        .collect();
    let a = if eqs.is_empty() {
        CycloNum::one()
    } else {
        let Some((g, big_r)) = power_system(&eqs)? else {
            return Ok(None);
        };
        match field_root(&big_r, g, over)? {
            Some(a) => a,
            None => return Ok(None),
        }
    };
    let b = &rp.mu - &(&a * &rq.mu);
    let lambda = &(&a.pow(d as i64)? * &rq.lambda) / &rp.lambda;
    let w = IsoWitness { a, b, lambda };
    if !w.verify(p, q) {
        return Err(Error::Invariant(format!("isomorphism witness for {p} ~ {q} failed")));
    }
    Ok(Some(w))
}

/// `real_poly(z) = λ · p(a·z + b)` with real coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealWitness {
    pub real_poly: UniPoly,
    pub lambda: CycloNum,
    pub a: CycloNum,
    pub b: CycloNum,
}

impl RealWitness {
    pub fn verify(&self, p: &UniPoly) -> bool {
        self.real_poly.is_real() && p.compose_affine(&self.a, &self.b).scale(&self.lambda) == self.real_poly
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealFormExistence {
    pub exists: bool,
    /// Present whenever a real form exists and the rescaling stays inside
    /// the cyclotomic tower.
    pub witness: Option<RealWitness>,
    /// Set when a real form exists but the required rescaling is a
    /// unimodular number that is not a root of unity.
    pub outside_tower: bool,
}

/// Decide whether some `λ p(az + b)` has real coefficients.
pub fn real_form_exists(p: &UniPoly) -> Result<RealFormExistence> {
    let red = reduce_form(p)?;
    let big_p = &red.reduced;
    let d = big_p.degree().unwrap();
    let found = |alpha: CycloNum| -> Result<RealFormExistence> {
        let scale = alpha.pow(-(d as i64))?;
        let real_poly = big_p.compose_affine(&alpha, &CycloNum::zero()).scale(&scale);
        let witness = RealWitness {
            real_poly,
            lambda: &scale * &red.lambda,
            a: alpha,
            b: red.mu.clone(),
        };
        if !witness.verify(p) {
            return Err(Error::Invariant(format!("real witness for {p} failed")));
        }
        Ok(RealFormExistence { exists: true, witness: Some(witness), outside_tower: false })
    };
    let eqs: Vec<(i64, CycloNum)> = big_p
        .support()
        .into_iter()
        .filter(|&e| e < d)
        .map(|e| {
            let c = big_p.coeff(e);
            ((d - e) as i64, &c / &c.conj())
        })
        .collect();
    if eqs.is_empty() {
        return found(CycloNum::one());
    }
    let Some((g, big_r)) = power_system(&eqs)? else {
        return Ok(RealFormExistence { exists: false, witness: None, outside_tower: false });
    };
    let Some(root) = big_r.as_root_of_unity() else {
        return Ok(RealFormExistence { exists: true, witness: None, outside_tower: true });
    };
    // among the g-th roots of R pick one of least multiplicative order
    let base = root.nth_root(g);
    let step = RootOfUnity::new(g, 1);
    let a = (0..g as i64)
        .map(|j| base.mul(&step.pow(j)))
        .min_by_key(|w| (w.multiplicative_order(), w.reduced().exponent()))
        .expect("g ≥ 1");
    let alpha = a.square_root().to_cyclo()?;
    found(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn poly(s: &str) -> UniPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let r = reduce_form(&poly("2z^2 + 4z + 2")).unwrap();
        assert_eq!(r.reduced, poly("z^2"));
        assert_eq!(r.lambda, CycloNum::from_ratio(1, 2));
        assert_eq!(r.mu, CycloNum::from_int(-1));
        let r = reduce_form(&poly("z^3")).unwrap();
        assert_eq!((r.lambda, r.mu), (CycloNum::one(), CycloNum::zero()));
        assert_eq!(reduce_form(&poly("z^3 + 3z^2")).unwrap().reduced, poly("z^3 - 3z + 2"));
        assert_eq!(reduce_form(&poly("5")), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn decompose_examples() {
        let (m, n, q) = decompose(&poly("z^6 + z^2"));
        assert_eq!((m, n, q), (2, Period::Finite(4), poly("t + 1")));
        assert_eq!(decompose(&poly("z^4")), (4, Period::Infinite, UniPoly::one()));
        assert_eq!(decompose(&poly("z^3 + z")), (1, Period::Finite(2), poly("t + 1")));
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(symmetry_group(&poly("z^5")), HpKind::Infinite);
        assert_eq!(symmetry_group(&poly("z^6 + z^2")), HpKind::Cyclic(4));
        let r = reduce_form(&poly("z^3 + z^2 - 1")).unwrap();
        assert_eq!(symmetry_group(&r.reduced), HpKind::Cyclic(1));
    }

    #[test]
    fn iso_examples() {
        let w = iso_test(&poly("z^2"), &poly("(z+1)^2"), Field::Rationals).unwrap().unwrap();
        assert!(w.verify(&poly("z^2"), &poly("(z+1)^2")));
        assert_eq!((w.a, w.b, w.lambda), (CycloNum::one(), CycloNum::one(), CycloNum::one()));
        assert!(iso_test(&poly("z^3"), &poly("z^3 + 1"), Field::Rationals).unwrap().is_none());
        let w = iso_test(&poly("z^2"), &poly("2z^2 + 4z + 2"), Field::Rationals).unwrap().unwrap();
        assert!(w.verify(&poly("z^2"), &poly("2z^2 + 4z + 2")));
        assert_eq!(w.lambda, CycloNum::from_ratio(1, 2));
    }

    #[test]
    fn iso_needs_gaussian_scale() {
        // z^4 + 1 and z^4 - 1 differ by a = zeta(8), not in Q(i)
        assert!(iso_test(&poly("z^4+1"), &poly("z^4-1"), Field::GaussianRationals).unwrap().is_none());
        // z^3 + z and z^3 - z differ by a = i
        assert!(iso_test(&poly("z^3+z"), &poly("z^3-z"), Field::Rationals).unwrap().is_none());
        let w = iso_test(&poly("z^3+z"), &poly("z^3-z"), Field::GaussianRationals).unwrap().unwrap();
        assert!(w.verify(&poly("z^3+z"), &poly("z^3-z")));
    }

    #[test]
    fn existence_examples() {
        let r = real_form_exists(&poly("z^3 + i")).unwrap();
        assert!(r.exists);
        assert_eq!(r.witness.unwrap().real_poly, poly("z^3 - 1"));
        assert!(!real_form_exists(&poly("z^3 + z + 1 + i")).unwrap().exists);
        let r = real_form_exists(&poly("z^4 - 2z^2 + 1")).unwrap();
        assert_eq!(r.witness.unwrap().real_poly, poly("z^4 - 2z^2 + 1"));
    }

    #[test]
    fn existence_outside_the_tower() {
        // z^2 + (3+4i)/5 needs a unimodular rescaling of infinite order
        let r = real_form_exists(&poly("z^2 + (3 + 4i)/5")).unwrap();
        assert!(r.exists && r.outside_tower && r.witness.is_none());
    }
}
