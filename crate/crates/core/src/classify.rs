//! Real forms of `xy = p(z)`: the number of isomorphism classes and an
//! explicit equation for each, together with whether it has real points.
//!
//! The surfaces are `S_abc : x² + (−1)^a y² + (−1)^b z^m q((−1)^c z^n) = 0`
//! for `p = z^m q(z^n)` in reduced form.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::CycloNum;
use crate::autgroup::AClass;
use crate::error::{Error, Result};
use crate::invariants::{invariants, real_form_exists, HpKind, IsoWitness, Period, RealWitness, SurfaceInvariants};
use crate::poly::{attains_nonpositive, nonpositive_witness, MultiPoly, UniPoly};

fn display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// The bits `(a, b, c)` of `S_abc`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Bits(pub u8, pub u8, pub u8);

impl Bits {
    pub fn all() -> impl Iterator<Item = Bits> {
        (0..8u8).map(|k| Bits(k >> 2 & 1, k >> 1 & 1, k & 1))
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}{}{}", self.0, self.1, self.2)
    }
}

fn sign(bit: u8) -> CycloNum {
    if bit == 0 {
        CycloNum::one()
    } else {
        -CycloNum::one()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RealFormRep {
    pub bits: Bits,
    pub label: String,
    #[serde(serialize_with = "display")]
    pub equation: MultiPoly,
    /// `(−1)^b z^m q((−1)^c z^n)`.
    #[serde(serialize_with = "display")]
    pub univariate: UniPoly,
    pub real_points: bool,
    /// An exact real point `(x, y, z)` when one was found.
    pub real_point: Option<[CycloNum; 3]>,
}

impl RealFormRep {
    /// Builds `S_abc` for `p = z^m q(z^n)`; `n = None` stands for `q = 1`.
    pub fn new(bits: Bits, m: usize, n: Option<u32>, q: &UniPoly) -> Result<Self> {
        let inner = match n {
            None => UniPoly::one(),
            Some(n) => q.compose_affine(&sign(bits.2), &CycloNum::zero()).substitute_power(n as usize),
        };
        let univariate = inner.shift(m).scale(&sign(bits.1));
        let (x, y, _) = MultiPoly::xyz();
        let equation = &(&x.pow(2) + &y.pow(2).scale(&sign(bits.0))) + &MultiPoly::from_uni(&univariate, 3, 2);
        let (real_points, real_point) = real_point_status(bits.0, &univariate)?;
        if let Some(pt) = &real_point {
            if !equation.eval(pt).is_zero() || pt.iter().any(|c| !c.is_real()) {
                return Err(Error::Invariant(format!("bad real point for {equation}")));
            }
        }
        Ok(RealFormRep { bits, label: bits.to_string(), equation, univariate, real_points, real_point })
    }
}

/// Whether `x² ± y² + f(z) = 0` has a real point, with one when possible.
///
/// With the minus sign there is always one over `z = 0`. With the plus sign
/// a real point exists iff `f` takes a nonpositive value.
pub fn real_point_status(a_bit: u8, f: &UniPoly) -> Result<(bool, Option<[CycloNum; 3]>)> {
    if a_bit == 1 {
        let t = -&f.eval(&CycloNum::zero());
        let half = CycloNum::from_ratio(1, 2);
        let x = &(&t + &CycloNum::one()) * &half;
        let y = &(&t - &CycloNum::one()) * &half;
        return Ok((true, Some([x, y, CycloNum::zero()])));
    }
    if !attains_nonpositive(f)? {
        return Ok((false, None));
    }
    let Some(z0) = nonpositive_witness(f)? else {
        return Ok((true, None));
    };
    let z0 = CycloNum::from_rational(z0);
    let t = -&f.eval(&z0);
    let x = match t.to_rational() {
        Some(t) => CycloNum::sqrt_rational(&t).ok(),
        None => None,
    };
    Ok((true, x.map(|x| [x, CycloNum::zero(), z0])))
}

/// Which condition of the classification table applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableRow {
    /// `q = 1, d = 2`
    MonomialQuadratic,
    /// `q = 1, d ≥ 3` odd
    MonomialOdd,
    /// `q = 1, d ≥ 4` even
    MonomialEven,
    /// `q ≠ 1, n` odd
    PeriodOdd,
    /// `q ≠ 1, n` even, `d` odd
    PeriodEvenDegreeOdd,
    /// `q ≠ 1, (n, d) = (2, 2)`
    Quadratic,
    /// `q ≠ 1, n, d` even, `(n, d) ≠ (2, 2)`
    PeriodEvenDegreeEven,
}

impl TableRow {
    pub fn condition(self) -> &'static str {
        match self {
            TableRow::MonomialQuadratic => "q=1, d=2",
            TableRow::MonomialOdd => "q=1, d>=3 odd",
            TableRow::MonomialEven => "q=1, d>=4 even",
            TableRow::PeriodOdd => "q!=1, n odd",
            TableRow::PeriodEvenDegreeOdd => "q!=1, n even, d odd",
            TableRow::Quadratic => "q!=1, (n,d)=(2,2)",
            TableRow::PeriodEvenDegreeEven => "q!=1, n and d even, (n,d)!=(2,2)",
        }
    }

    pub fn count(self) -> usize {
        self.bits().len()
    }

    /// The representatives listed in the table for this row.
    pub fn bits(self) -> Vec<Bits> {
        match self {
            TableRow::MonomialQuadratic | TableRow::MonomialOdd => vec![Bits(0, 0, 0), Bits(1, 1, 0)],
            TableRow::MonomialEven | TableRow::PeriodOdd => vec![Bits(0, 0, 0), Bits(0, 1, 0), Bits(1, 1, 0)],
            TableRow::PeriodEvenDegreeOdd | TableRow::Quadratic => {
                Bits::all().filter(|b| b.1 == b.2).collect()
            }
            TableRow::PeriodEvenDegreeEven => {
                Bits::all().filter(|b| (b.0 == 0 && b.1 == 0) || b.1 == 1).collect()
            }
        }
    }

    pub fn select(d: usize, n: Period) -> TableRow {
        match n {
            Period::Infinite if d == 2 => TableRow::MonomialQuadratic,
            Period::Infinite if d % 2 == 1 => TableRow::MonomialOdd,
            Period::Infinite => TableRow::MonomialEven,
            Period::Finite(n) if n % 2 == 1 => TableRow::PeriodOdd,
            Period::Finite(_) if d % 2 == 1 => TableRow::PeriodEvenDegreeOdd,
            Period::Finite(2) if d == 2 => TableRow::Quadratic,
            Period::Finite(_) => TableRow::PeriodEvenDegreeEven,
        }
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.condition())
    }
}

/// The surface `S_abc` equivalent to the real structure `τ`, read off from
/// the conjugating linear maps of the degree ≥ 3 case.
pub fn tau_bits(class: AClass) -> Bits {
    match class {
        AClass::Tau1 => Bits(1, 1, 0),
        AClass::Tau2 => Bits(1, 1, 1),
        AClass::Tau3 => Bits(0, 1, 0),
        AClass::Tau4 => Bits(0, 0, 0),
        AClass::Tau5 => Bits(0, 1, 1),
        AClass::Tau6 => Bits(0, 0, 1),
    }
}

/// Representatives derived from the list of cocycle classes rather than
/// from the table: the classes `τ_i` that occur for `(d, H_p)`, their
/// surfaces, and the identification `S_{a1c} ≅ S_{a0c}` by `(x, y, −z)`
/// whenever `p(−z) = −p(z)`.
pub fn derive_bits(d: usize, hp: HpKind) -> Vec<Bits> {
    let mut out: Vec<Bits> = if d == 2 {
        match hp {
            // (y,x,−z) and (x,y,z) give x²+y²+z² and x²−y²−z²
            HpKind::Infinite => vec![Bits(0, 0, 0), Bits(1, 1, 0)],
            // the four forms x² ± y² + z² ± μ
            HpKind::Cyclic(_) => Bits::all().filter(|b| b.1 == b.2).collect(),
        }
    } else {
        let odd_symmetric = d % 2 == 1 && (hp.is_infinite() || matches!(hp, HpKind::Cyclic(n) if n % 2 == 0));
        AClass::occurring(d, hp)
            .into_iter()
            .map(tau_bits)
            .map(|b| {
                let flip = match hp {
                    HpKind::Infinite => b.0 == 0 && b.1 == 1,
                    HpKind::Cyclic(_) => b.1 == 1 && b.2 == 0,
                };
                if odd_symmetric && flip {
                    Bits(b.0, 0, b.2)
                } else {
                    b
                }
            })
            .collect()
    };
    if hp.is_infinite() {
        // c is meaningless when q = 1
        for b in &mut out {
            b.2 = 0;
        }
    }
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationResult {
    #[serde(serialize_with = "display")]
    pub input: UniPoly,
    /// Present when the input was not real and had to be rescaled first.
    pub real_form: Option<RealWitness>,
    #[serde(serialize_with = "display")]
    pub reduced: UniPoly,
    pub witness: crate::invariants::Reduction,
    pub m: usize,
    pub n: Period,
    #[serde(serialize_with = "display")]
    pub q: UniPoly,
    pub hp: HpKind,
    pub row: TableRow,
    pub condition: &'static str,
    pub count: usize,
    pub representatives: Vec<RealFormRep>,
    /// For `d = 2, q ≠ 1`: `(z² + μ)(az + b) = λ(z² − 1)`.
    pub quadratic_normalization: Option<IsoWitness>,
    pub merges: Vec<String>,
}

/// Classifies the real forms of `xy = p(z)`.
///
/// `p` must have degree at least 2. Non-real input is first rescaled to a
/// real polynomial when possible; a surface without real forms is an error.
pub fn classify(p: &UniPoly) -> Result<ClassificationResult> {
    let deg = p.degree().unwrap_or(0);
    if deg < 2 {
        return Err(Error::DegreeTooSmall { found: deg, required: 2 });
    }
    let (real, real_form) = if p.is_rational() {
        (p.clone(), None)
    } else {
        let ex = real_form_exists(p)?;
        if !ex.exists {
            return Err(Error::NotReal);
        }
        let w = ex.witness.ok_or_else(|| {
            Error::NotRepresentable(format!("{p} has a real form but no rescaling inside the cyclotomic tower"))
        })?;
        if !w.real_poly.is_rational() {
            return Err(Error::NotRational(w.real_poly.to_string()));
        }
        (w.real_poly.clone(), Some(w))
    };
    let inv: SurfaceInvariants = invariants(&real)?;
    let row = TableRow::select(inv.d, inv.n);
    let bits = row.bits();
    if bits != derive_bits(inv.d, inv.hp) {
        return Err(Error::Invariant(format!("table and case list disagree for {p}")));
    }
    let representatives = bits
        .iter()
        .map(|&b| RealFormRep::new(b, inv.m, inv.n.finite(), &inv.q))
        .collect::<Result<Vec<_>>>()?;
    let quadratic_normalization = if row == TableRow::Quadratic {
        // reduced = z² + μ; z² + μ at sqrt(−μ)·z equals −μ(z² − 1)
        let mu = inv.reduced().coeff(0);
        let w = IsoWitness { a: CycloNum::sqrt_rational(&(-&mu).to_rational().expect("rational"))?, b: CycloNum::zero(), lambda: -&mu };
        if !w.verify(inv.reduced(), &UniPoly::from_ints(&[-1, 0, 1])) {
            return Err(Error::Invariant("quadratic normalization failed".into()));
        }
        Some(w)
    } else {
        None
    };
    let merges = match row {
        TableRow::MonomialOdd => vec!["(x, y, -z): S000 -> S010".to_string()],
        TableRow::PeriodEvenDegreeOdd => vec!["(x, y, -z): S_a1c -> S_a0c".to_string()],
        _ => Vec::new(),
    };
    Ok(ClassificationResult {
        input: p.clone(),
        real_form,
        reduced: inv.reduced().clone(),
        witness: inv.reduction.clone(),
        m: inv.m,
        n: inv.n,
        q: inv.q.clone(),
        hp: inv.hp,
        row,
        condition: row.condition(),
        count: representatives.len(),
        representatives,
        quadratic_normalization,
        merges,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TorusKind {
    /// `(𝔸¹∖{0})²`
    Torus,
    /// `𝔸¹ × (𝔸¹∖{0})`
    HalfTorus,
    /// `𝔸¹∖{0}`
    PuncturedLine,
}

impl std::str::FromStr for TorusKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "torus" => Ok(TorusKind::Torus),
            "half-torus" => Ok(TorusKind::HalfTorus),
            "punctured-line" => Ok(TorusKind::PuncturedLine),
            other => Err(Error::Parse(format!("unknown surface '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TorusForm {
    pub label: &'static str,
    pub equation: &'static str,
    pub real_points: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorusClassification {
    pub kind: TorusKind,
    pub count: usize,
    pub classes: Vec<TorusForm>,
}

/// The fixed lists of real forms of the punctured line and the two tori.
///
/// `Γ₁ : xy = 1`, `Γ₂ : x² + y² = 1` and `Γ₃ : x² + y² = −1`.
pub fn classify_torus(kind: TorusKind) -> TorusClassification {
    let form = |label, equation, real_points| TorusForm { label, equation, real_points };
    let classes = match kind {
        TorusKind::PuncturedLine => vec![
            form("G1", "xy - 1 = 0", true),
            form("G2", "x^2 + y^2 - 1 = 0", true),
            form("G3", "x^2 + y^2 + 1 = 0", false),
        ],
        TorusKind::Torus => vec![
            form("G1xG1", "x1*y1 - 1 = 0, x2*y2 - 1 = 0", true),
            form("G1xG2", "x1*y1 - 1 = 0, x2^2 + y2^2 - 1 = 0", true),
            form("G1xG3", "x1*y1 - 1 = 0, x2^2 + y2^2 + 1 = 0", false),
            form("G2xG2", "x1^2 + y1^2 - 1 = 0, x2^2 + y2^2 - 1 = 0", true),
            form("G3xG3", "x1^2 + y1^2 + 1 = 0, x2^2 + y2^2 + 1 = 0", false),
            form("A2-minus-conic", "A^2 minus {x^2 + y^2 = 0}", true),
        ],
        TorusKind::HalfTorus => vec![
            form("A1xG1", "A^1 x {xy - 1 = 0}", true),
            form("A1xG2", "A^1 x {x^2 + y^2 - 1 = 0}", true),
            form("A1xG3", "A^1 x {x^2 + y^2 + 1 = 0}", false),
            form("P2-minus-conic", "P^2 minus {x^2 + y^2 = 0}", true),
        ],
    };
    TorusClassification { kind, count: classes.len(), classes }
}
