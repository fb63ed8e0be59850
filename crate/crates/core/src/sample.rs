//! Random group elements for property checks and the identity replays.
//!
//! Scalars are products of a small root of unity and a small rational, so
//! that moduli stay rational and the square roots taken by the reductions
//! stay inside a modest cyclotomic field.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arith::CycloNum;
use crate::autgroup::{AffineAut, Gl2z, HalfTorusAut, MonomialAut, PsiElement};
use crate::error::Result;
use crate::invariants::{invariants, Period};
use crate::poly::{LaurentPoly, UniPoly};

const ROOT_ORDERS: [u32; 5] = [1, 2, 3, 4, 6];

pub fn small_rational<R: Rng>(rng: &mut R) -> CycloNum {
    let num = loop {
        let v = rng.gen_range(-4i64..=4);
        if v != 0 {
            break v;
        }
    };
    CycloNum::from_ratio(num, rng.gen_range(1i64..=3))
}

pub fn root_of_unity<R: Rng>(rng: &mut R) -> CycloNum {
    let order = *ROOT_ORDERS.choose(rng).expect("nonempty");
    CycloNum::zeta_pow(order, rng.gen_range(0..order as i64)).expect("small order")
}

/// A nonzero root of unity times a nonzero rational.
pub fn scalar<R: Rng>(rng: &mut R) -> CycloNum {
    &root_of_unity(rng) * &small_rational(rng)
}

/// `u + v·i` with small integers, possibly zero.
pub fn gaussian<R: Rng>(rng: &mut R) -> CycloNum {
    let (u, v) = (rng.gen_range(-2i64..=2), rng.gen_range(-2i64..=2));
    &CycloNum::from_int(u) + &(&CycloNum::from_int(v) * &CycloNum::i())
}

pub fn small_poly<R: Rng>(rng: &mut R, max_degree: usize) -> UniPoly {
    UniPoly::new((0..=max_degree).map(|_| gaussian(rng)).collect())
}

pub fn laurent<R: Rng>(rng: &mut R) -> LaurentPoly {
    let terms: Vec<(i64, CycloNum)> = (0..rng.gen_range(0..=2)).map(|_| (rng.gen_range(-2i64..=2), gaussian(rng))).collect();
    LaurentPoly::from_terms(&terms)
}

/// An element `c` with `p(cz) = c^m p(z)` for reduced `p = z^m q(z^n)`,
/// and that `m`.
fn symmetry<R: Rng>(rng: &mut R, p: &UniPoly) -> Result<(CycloNum, usize)> {
    let inv = invariants(p)?;
    let c = match inv.n {
        Period::Infinite => scalar(rng),
        Period::Finite(n) => CycloNum::zeta_pow(n, rng.gen_range(0..n as i64))?,
    };
    Ok((c, inv.m))
}

/// A random element of `B(p)` with `d = 0`, for reduced `p`.
pub fn psi<R: Rng>(rng: &mut R, p: &UniPoly, max_r_degree: usize) -> Result<PsiElement> {
    let (c, m) = symmetry(rng, p)?;
    let a = scalar(rng);
    let b = &c.pow(m as i64)? / &a;
    let r = small_poly(rng, max_r_degree);
    Ok(PsiElement::new(a, b, c, CycloNum::zero(), r))
}

/// A random element of `A(p) ∩ B(p)` or its product with the swap, for
/// reduced `p` of degree at least 3.
pub fn affine<R: Rng>(rng: &mut R, p: &UniPoly) -> Result<AffineAut> {
    let (c, m) = symmetry(rng, p)?;
    let a = scalar(rng);
    let b = &c.pow(m as i64)? / &a;
    Ok(AffineAut { swap: rng.gen_bool(0.5), a, b, c, d: CycloNum::zero() })
}

pub fn gl2z<R: Rng>(rng: &mut R) -> Gl2z {
    let gens = [Gl2z([[0, 1], [1, 0]]), Gl2z([[1, 1], [0, 1]]), Gl2z([[1, -1], [0, 1]]), Gl2z([[-1, 0], [0, 1]])];
    (0..rng.gen_range(0..=3)).fold(Gl2z::IDENTITY, |acc, _| acc.mul(gens.choose(rng).expect("nonempty")))
}

pub fn monomial<R: Rng>(rng: &mut R) -> MonomialAut {
    MonomialAut::new(scalar(rng), scalar(rng), gl2z(rng))
}

pub fn halftorus<R: Rng>(rng: &mut R) -> HalfTorusAut {
    HalfTorusAut {
        lambda: scalar(rng),
        m: rng.gen_range(-2i64..=2),
        c: laurent(rng),
        mu: scalar(rng),
        e: if rng.gen_bool(0.5) { 1 } else { -1 },
    }
}
