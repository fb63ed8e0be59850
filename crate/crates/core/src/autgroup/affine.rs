use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_cocycle, Chain, Classified, GroupElement};
use crate::arith::{rational_sqrt_exact, CycloNum, RootOfUnity};
use crate::error::{Error, Result};
use crate::invariants::{invariants, HpKind};
use crate::poly::{MultiPoly, UniPoly};

/// `(ax, by, cz + d)`, or `(ay, bx, cz + d)` when `swap` is set.
///
/// For `deg p ≥ 3` these are all the automorphisms of `xy = p(z)` that
/// preserve the two coordinate fibrations.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AffineAut {
    pub swap: bool,
    pub a: CycloNum,
    pub b: CycloNum,
    pub c: CycloNum,
    pub d: CycloNum,
}

impl AffineAut {
    pub fn diagonal(a: CycloNum, b: CycloNum, c: CycloNum) -> Self {
        AffineAut { swap: false, a, b, c, d: CycloNum::zero() }
    }

    pub fn swapped(a: CycloNum, b: CycloNum, c: CycloNum) -> Self {
        AffineAut { swap: true, a, b, c, d: CycloNum::zero() }
    }

    pub fn belongs_to(&self, p: &UniPoly) -> bool {
        if self.a.is_zero() || self.b.is_zero() || self.c.is_zero() {
            return false;
        }
        p.compose_affine(&self.c, &self.d) == p.scale(&(&self.a * &self.b))
    }

    pub fn to_map(&self) -> [MultiPoly; 3] {
        let (x, y, z) = MultiPoly::xyz();
        let (u, v) = if self.swap { (y, x) } else { (x, y) };
        [
            u.scale(&self.a),
            v.scale(&self.b),
            &z.scale(&self.c) + &MultiPoly::constant(3, self.d.clone()),
        ]
    }
}

impl GroupElement for AffineAut {
    fn identity() -> Self {
        Self::diagonal(CycloNum::one(), CycloNum::one(), CycloNum::one())
    }

    fn compose(&self, g: &Self) -> Self {
        let (a, b) = if self.swap {
            (&self.a * &g.b, &self.b * &g.a)
        } else {
            (&self.a * &g.a, &self.b * &g.b)
        };
        AffineAut {
            swap: self.swap ^ g.swap,
            a,
            b,
            c: &self.c * &g.c,
            d: &(&self.c * &g.d) + &self.d,
        }
    }

    fn inverse(&self) -> Self {
        let ai = self.a.inv().expect("a is nonzero");
        let bi = self.b.inv().expect("b is nonzero");
        let ci = self.c.inv().expect("c is nonzero");
        let (a, b) = if self.swap { (bi, ai) } else { (ai, bi) };
        AffineAut { swap: self.swap, a, b, d: -(&self.d * &ci), c: ci }
    }

    fn conj(&self) -> Self {
        AffineAut {
            swap: self.swap,
            a: self.a.conj(),
            b: self.b.conj(),
            c: self.c.conj(),
            d: self.d.conj(),
        }
    }
}

impl fmt::Display for AffineAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u, v, w] = self.to_map();
        write!(f, "({}, {}, {})", u, v, w)
    }
}

/// The six candidate classes of real structures for `deg p ≥ 3`, with
/// `c = ζ_n` and `a = ζ_{2n}^m` for `p = z^m q(z^n)`:
/// `(x,y,z)`, `(ax,ay,cz)`, `(y,x,z)`, `(−y,−x,z)`, `(ay,ax,cz)`, `(−ay,−ax,cz)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AClass {
    Tau1,
    Tau2,
    Tau3,
    Tau4,
    Tau5,
    Tau6,
}

impl AClass {
    pub const ALL: [AClass; 6] =
        [AClass::Tau1, AClass::Tau2, AClass::Tau3, AClass::Tau4, AClass::Tau5, AClass::Tau6];

    pub fn index(self) -> usize {
        self as usize + 1
    }

    /// The classes that occur for the given `deg p` and `H_p`.
    pub fn occurring(deg: usize, hp: HpKind) -> Vec<AClass> {
        let odd = deg % 2 == 1;
        match hp {
            HpKind::Infinite if odd => vec![AClass::Tau1, AClass::Tau3],
            HpKind::Cyclic(n) if n % 2 == 0 && odd => {
                vec![AClass::Tau1, AClass::Tau2, AClass::Tau3, AClass::Tau5]
            }
            HpKind::Cyclic(n) if n % 2 == 0 => AClass::ALL.to_vec(),
            _ => vec![AClass::Tau1, AClass::Tau3, AClass::Tau4],
        }
    }

    /// The representative cocycle of this class for the given `m` and `n`.
    pub fn representative(self, m: usize, n: u32) -> Result<AffineAut> {
        let one = CycloNum::one;
        let (a, c) = (CycloNum::zeta_pow(2 * n, m as i64)?, CycloNum::zeta(n)?);
        Ok(match self {
            AClass::Tau1 => AffineAut::identity(),
            AClass::Tau2 => AffineAut::diagonal(a.clone(), a, c),
            AClass::Tau3 => AffineAut::swapped(one(), one(), one()),
            AClass::Tau4 => AffineAut::swapped(-one(), -one(), one()),
            AClass::Tau5 => AffineAut::swapped(a.clone(), a, c),
            AClass::Tau6 => AffineAut::swapped(-&a, -&a, c),
        })
    }
}

impl fmt::Display for AClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau{}", self.index())
    }
}

/// Reduces a cocycle `τ` of the fibration-preserving automorphisms of
/// `xy = p(z)` to one of the six representatives.
///
/// `p` must be real, reduced (monic with no `z^{d-1}` term) and of degree at
/// least 3. Degree 2 is handled by the fixed tables in the classifier.
pub fn classify_a_cocycle(tau: &AffineAut, p: &UniPoly) -> Result<Classified<AffineAut, AClass>> {
    let deg = p.degree().unwrap_or(0);
    if deg < 3 {
        return Err(Error::DegreeTooSmall { found: deg, required: 3 });
    }
    if !p.is_real() {
        return Err(Error::NotReal);
    }
    if !p.is_monic() || !p.coeff(deg - 1).is_zero() {
        return Err(Error::NotReduced);
    }
    if !tau.belongs_to(p) {
        return Err(Error::NotInGroup(format!("{tau} does not preserve xy = {p}")));
    }
    if !is_cocycle(tau) {
        return Err(Error::NotACocycle);
    }
    let inv = invariants(p)?;
    let (m, hp) = (inv.m, inv.hp);
    let n = match hp {
        HpKind::Infinite => 1,
        HpKind::Cyclic(n) => n,
    };
    let zeta_n = CycloNum::zeta(n)?;
    let a0 = CycloNum::zeta_pow(2 * n, m as i64)?;
    let mut chain = Chain::new(tau);

    // c ∈ H_p up to γ ↦ c·γ̄/γ, using θ = (γ^d x, y, γz)
    let c = tau.c.clone();
    let gamma = match hp {
        HpKind::Infinite => c.sqrt()?,
        HpKind::Cyclic(n) => {
            let k = exponent_in(&c, n)?;
            let k = if k % 2 == 1 && n % 2 == 1 { k + n as i64 } else { k };
            CycloNum::zeta_pow(n, k.div_euclid(2))?
        }
    };
    if !gamma.is_one() {
        chain.apply(&AffineAut::diagonal(gamma.pow(deg as i64)?, CycloNum::one(), gamma));
    }
    let c = chain.current.c.clone();
    let twisted = if c.is_one() {
        false
    } else if c == zeta_n {
        true
    } else {
        return Err(Error::Invariant(format!("c = {c} was not reduced")));
    };

    let class = if !chain.current.swap {
        let (a, b) = (chain.current.a.clone(), chain.current.b.clone());
        if !twisted {
            let lam = a.sqrt()?;
            chain.apply(&AffineAut::diagonal(lam.clone(), lam.inv()?, CycloNum::one()));
            AClass::Tau1
        } else {
            let lam = (&a / &b).sqrt()?.sqrt()?;
            chain.apply(&AffineAut::diagonal(lam.clone(), lam.inv()?, CycloNum::one()));
            if chain.current.a != a0 {
                let i = CycloNum::i();
                chain.apply(&AffineAut::diagonal(i.clone(), -i, CycloNum::one()));
            }
            AClass::Tau2
        }
    } else {
        let a = chain.current.a.clone();
        let t = a.norm_sq().to_rational().ok_or_else(|| {
            Error::NotRepresentable(format!("|a|^2 is not rational for a = {a}"))
        })?;
        let modulus = rational_sqrt_exact(&t).ok_or_else(|| {
            Error::NotRepresentable(format!("|a| is not rational for a = {a}"))
        })?;
        if !num_traits::One::is_one(&modulus) {
            let lam = CycloNum::sqrt_rational(&modulus)?;
            chain.apply(&AffineAut::diagonal(lam.clone(), lam.inv()?, CycloNum::one()));
        }
        let a = chain.current.a.clone();
        let base = if twisted { a0.clone() } else { CycloNum::one() };
        let positive = if a == base {
            true
        } else if a == -&base {
            false
        } else {
            return Err(Error::Invariant(format!("unexpected swap coefficient {a}")));
        };
        let club = deg % 2 == 1 && (hp.is_infinite() || n % 2 == 0);
        if !positive && club {
            let one = CycloNum::one();
            chain.apply(&AffineAut::diagonal(one.clone(), -&one, -one));
        }
        match (twisted, positive || club) {
            (false, true) => AClass::Tau3,
            (false, false) => AClass::Tau4,
            (true, true) => AClass::Tau5,
            (true, false) => AClass::Tau6,
        }
    };
    let reduction = chain.finish(tau)?;
    if reduction.normal_form != class.representative(m, n)? {
        return Err(Error::Invariant(format!(
            "reduced to {} which is not the representative of {class}",
            reduction.normal_form
        )));
    }
    Ok(Classified { class, reduction })
}

/// `k` with `c = ζ_n^k`.
fn exponent_in(c: &CycloNum, n: u32) -> Result<i64> {
    let root = RootOfUnity::from_cyclo(c)
        .map_err(|_| Error::NotInGroup(format!("{c} is not a root of unity")))?
        .reduced();
    if n % root.order() != 0 {
        return Err(Error::NotInGroup(format!("{c} is not an {n}-th root of unity")));
    }
    Ok(root.exponent() as i64 * (n / root.order()) as i64)
}
