//! Replays the explicit identities behind the classification: the
//! conjugating linear maps and their pulled-back equations, the quadric
//! model of `xy = z² − 1`, the composition law of `ψ` maps, and the
//! conjugations used for the tori.
//!
//! Every case is an exact polynomial or group identity. Expected equations
//! for the generic rows are generated from the `S_abc` formula, not typed in.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::CycloNum;
use crate::autgroup::{
    conjugate, is_cocycle, AClass, Gl2z, GroupElement, HalfTorusAut, MonomialAut, PsiElement,
};
use crate::classify::{tau_bits, RealFormRep};
use crate::poly::{substitute_map, LaurentPoly, MultiPoly, UniPoly};
use crate::sample;

#[derive(Clone, Debug, Serialize)]
pub struct VerificationCase {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub cases: Vec<VerificationCase>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn merge(&mut self, other: Report) {
        self.cases.extend(other.cases);
    }

    fn check(&mut self, id: impl Into<String>, description: impl Into<String>, outcome: Result<(), String>) {
        let (passed, detail) = match outcome {
            Ok(()) => (true, None),
            Err(e) => (false, Some(e)),
        };
        self.cases.push(VerificationCase { id: id.into(), description: description.into(), passed, detail });
    }

    fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, id: impl Into<String>, description: impl Into<String>, got: T, want: T) {
        let outcome = if got == want { Ok(()) } else { Err(format!("got {got:?}, expected {want:?}")) };
        self.check(id, description, outcome);
    }
}

type Map3 = [MultiPoly; 3];

fn compose(f: &Map3, g: &Map3) -> Map3 {
    [
        substitute_map(&f[0], &g[0], &g[1], &g[2]),
        substitute_map(&f[1], &g[0], &g[1], &g[2]),
        substitute_map(&f[2], &g[0], &g[1], &g[2]),
    ]
}

fn conj_map(f: &Map3) -> Map3 {
    [f[0].conj(), f[1].conj(), f[2].conj()]
}

fn c(v: i64) -> CycloNum {
    CycloNum::from_int(v)
}

fn i() -> CycloNum {
    CycloNum::i()
}

/// `xy − p(z)`.
fn surface(p: &UniPoly) -> MultiPoly {
    let (x, y, _) = MultiPoly::xyz();
    &(&x * &y) - &MultiPoly::from_uni(p, 3, 2)
}

/// `u·x + v·y` style linear forms, with `w` the coefficient of `z`.
fn lin(u: CycloNum, v: CycloNum, w: CycloNum) -> MultiPoly {
    let (x, y, z) = MultiPoly::xyz();
    &(&x.scale(&u) + &y.scale(&v)) + &z.scale(&w)
}

fn quadric(sy: i64, sz: i64, constant: i64) -> MultiPoly {
    let (x, y, z) = MultiPoly::xyz();
    &(&(&x.pow(2) + &y.pow(2).scale(&c(sy))) + &z.pow(2).scale(&c(sz))) + &MultiPoly::constant(3, c(constant))
}

/// Checks `τ ∘ conj(θ) = θ` and `θ*(xy − p(z)) = unit · expected`.
fn theta_row(
    report: &mut Report,
    id: String,
    p: &UniPoly,
    tau: &Map3,
    theta: &Map3,
    unit: &CycloNum,
    expected: &MultiPoly,
) {
    let twisted = compose(tau, &conj_map(theta));
    let first = if &twisted == theta { Ok(()) } else { Err(format!("tau o conj(theta) = {twisted:?}")) };
    report.check(format!("{id}/descent"), "tau o conj(theta) = theta", first);
    let pulled = substitute_map(&surface(p), &theta[0], &theta[1], &theta[2]);
    let want = expected.scale(unit);
    let second = if pulled == want { Ok(()) } else { Err(format!("pullback {pulled}, expected {want}")) };
    report.check(format!("{id}/pullback"), format!("theta*(xy - p(z)) = ({unit})*({expected})"), second);
}

/// Tables for `z² − 1` and `z²`.
fn quadratic_tables(report: &mut Report) {
    let one = || c(1);
    let zero = || c(0);
    let (x, y, z) = MultiPoly::xyz();
    let p = UniPoly::from_ints(&[-1, 0, 1]);
    let rows: [(Map3, Map3, i64, MultiPoly); 4] = [
        (
            [y.clone(), x.clone(), -&z],
            [lin(one(), i(), zero()), lin(one(), -i(), zero()), lin(zero(), zero(), i())],
            1,
            quadric(1, 1, 1),
        ),
        (
            [-&y, -&x, z.clone()],
            [lin(one(), i(), zero()), lin(-one(), i(), zero()), z.clone()],
            -1,
            quadric(1, 1, -1),
        ),
        (
            [x.clone(), y.clone(), z.clone()],
            [lin(one(), one(), zero()), lin(-one(), one(), zero()), z.clone()],
            -1,
            quadric(-1, 1, -1),
        ),
        (
            [-&x, -&y, -&z],
            [lin(-i(), i(), zero()), lin(i(), i(), zero()), lin(zero(), zero(), i())],
            1,
            quadric(-1, 1, 1),
        ),
    ];
    for (k, (tau, theta, unit, eq)) in rows.iter().enumerate() {
        theta_row(report, format!("theta/z2-1/row{}", k + 1), &p, tau, theta, &c(*unit), eq);
    }
    let p = UniPoly::from_ints(&[0, 0, 1]);
    let rows: [(Map3, Map3, MultiPoly); 2] = [
        (
            [y.clone(), x.clone(), -&z],
            [lin(one(), i(), zero()), lin(one(), -i(), zero()), lin(zero(), zero(), i())],
            quadric(1, 1, 0),
        ),
        (
            [x.clone(), y.clone(), z.clone()],
            [lin(one(), -one(), zero()), lin(one(), one(), zero()), z.clone()],
            quadric(-1, -1, 0),
        ),
    ];
    for (k, (tau, theta, eq)) in rows.iter().enumerate() {
        theta_row(report, format!("theta/z2/row{}", k + 1), &p, tau, theta, &c(1), eq);
    }
}

/// The conjugating maps for `τ₁, τ₃, τ₄` (with `β = 1, α = 1`) and
/// `τ₂, τ₅, τ₆` (with the given `β, α`), and the unit in front of the
/// pulled-back equation.
fn theta_for(class: AClass, alpha: &CycloNum, beta: &CycloNum) -> (Map3, CycloNum) {
    let one = || c(1);
    let zero = || c(0);
    let z = MultiPoly::xyz().2;
    let bz = || lin(zero(), zero(), alpha.clone());
    let b2 = beta * beta;
    let scaled = |m: MultiPoly| m.scale(beta);
    match class {
        AClass::Tau1 => ([lin(one(), one(), zero()), lin(one(), -one(), zero()), z], one()),
        AClass::Tau3 => ([lin(one(), i(), zero()), lin(one(), -i(), zero()), z], one()),
        AClass::Tau4 => ([lin(one(), i(), zero()), lin(-one(), i(), zero()), z], -one()),
        AClass::Tau2 => ([scaled(lin(one(), one(), zero())), scaled(lin(one(), -one(), zero())), bz()], b2),
        AClass::Tau5 => ([scaled(lin(one(), i(), zero())), scaled(lin(one(), -i(), zero())), bz()], b2),
        AClass::Tau6 => ([scaled(lin(one(), i(), zero())), scaled(lin(-one(), i(), zero())), bz()], -b2),
    }
}

fn monomial_tables(report: &mut Report) {
    for d in 3..=6usize {
        let p = UniPoly::monomial(c(1), d);
        for class in [AClass::Tau1, AClass::Tau3, AClass::Tau4] {
            let tau = class.representative(d, 1).expect("small order").to_map();
            let (theta, unit) = theta_for(class, &c(1), &c(1));
            let rep = RealFormRep::new(tau_bits(class), d, None, &UniPoly::one()).expect("rational");
            theta_row(report, format!("theta/z^{d}/{class}"), &p, &tau, &theta, &unit, &rep.equation);
        }
    }
}

/// The battery of `(m, n, q)` instances for the finite-`H_p` table.
pub fn battery() -> Vec<(usize, u32, UniPoly)> {
    let qs = [
        UniPoly::from_ints(&[1, 1]),
        UniPoly::from_ints(&[-1, 1]),
        UniPoly::from_ints(&[1, 1, 1]),
        UniPoly::from_ints(&[3, 2]),
    ];
    let mut out = Vec::new();
    for (m, n) in [(0usize, 2u32), (1, 2), (2, 4), (3, 2)] {
        for q in &qs {
            out.push((m, n, q.clone()));
        }
    }
    out
}

fn finite_tables(report: &mut Report) {
    for (m, n, q) in battery() {
        let p = q.substitute_power(n as usize).shift(m);
        let alpha = CycloNum::zeta(2 * n).expect("small order");
        let beta = CycloNum::zeta_pow(4 * n, m as i64).expect("small order");
        for class in AClass::ALL {
            let tau_elem = class.representative(m, n).expect("small order");
            let tau = tau_elem.to_map();
            let (theta, unit) = theta_for(class, &alpha, &beta);
            let rep = RealFormRep::new(tau_bits(class), m, Some(n), &q).expect("rational");
            let id = format!("theta/m{m}-n{n}-q({})/{class}", q.display_var("t"));
            theta_row(report, id.clone(), &p, &tau, &theta, &unit, &rep.equation);
            report.check(
                format!("{id}/cocycle"),
                "tau is a cocycle preserving xy = p(z)",
                if tau_elem.belongs_to(&p) && is_cocycle(&tau_elem) { Ok(()) } else { Err("not a cocycle".into()) },
            );
        }
    }
}

/// Conjugating linear maps and pulled-back equations for every table row.
pub fn verify_theta_tables() -> Report {
    let mut report = Report::default();
    quadratic_tables(&mut report);
    monomial_tables(&mut report);
    finite_tables(&mut report);
    report
}

/// The model of `xy = z² − 1` as `ℙ¹×ℙ¹` minus the diagonal and the
/// `PGL₂` action on it, with all parameters as indeterminates.
pub fn verify_quadric_isomorphism() -> Report {
    let mut report = Report::default();
    let v = |n: usize, k: usize| MultiPoly::var(n, k);
    let two = c(2);

    // ([a:b],[c:d]) ↦ (2ac, 2bd, ad+bc)/(ad−bc), cleared of denominators
    let (a, b, cc, d) = (v(4, 0), v(4, 1), v(4, 2), v(4, 3));
    let px = (&a * &cc).scale(&two);
    let py = (&b * &d).scale(&two);
    let pz = &(&a * &d) + &(&b * &cc);
    let pw = &(&a * &d) - &(&b * &cc);
    let lhs = &(&(&px * &py) - &pz.pow(2)) + &pw.pow(2);
    report.check(
        "quadric/p1xp1-map",
        "4abcd - (ad+bc)^2 + (ad-bc)^2 = 0",
        if lhs.is_zero() { Ok(()) } else { Err(format!("got {lhs}")) },
    );

    // the PGL₂ matrix in the ring k[x, y, z, α, β, γ, δ]
    let n = 7;
    let (x, y, z) = (v(n, 0), v(n, 1), v(n, 2));
    let (al, be, ga, de) = (v(n, 3), v(n, 4), v(n, 5), v(n, 6));
    let row = |u: MultiPoly, w: MultiPoly, t: MultiPoly| &(&(&u * &x) + &(&w * &y)) + &(&t * &z);
    let mx = row(al.pow(2), be.pow(2), (&al * &be).scale(&two));
    let my = row(ga.pow(2), de.pow(2), (&ga * &de).scale(&two));
    let mz = row(&al * &ga, &be * &de, &(&al * &de) + &(&be * &ga));
    let det = &(&al * &de) - &(&be * &ga);
    let cone = &(&x * &y) - &z.pow(2);
    let image = &(&mx * &my) - &mz.pow(2);
    let want = &det.pow(2) * &cone;
    report.check(
        "quadric/pgl2-preserves-cone",
        "(MX)(MY) - (MZ)^2 = det^2 (xy - z^2)",
        if image == want { Ok(()) } else { Err(format!("got {image}")) },
    );
    let image1 = &image - &det.pow(2);
    let want1 = &det.pow(2) * &(&cone - &MultiPoly::one(n));
    report.check(
        "quadric/pgl2-preserves-quadric",
        "after dividing by det, xy - z^2 - 1 is preserved",
        if image1 == want1 { Ok(()) } else { Err(format!("got {image1}")) },
    );
    let specialize = |m: &MultiPoly| {
        let mut images: Vec<MultiPoly> = (0..3).map(|k| v(n, k)).collect();
        images.extend([MultiPoly::one(n), MultiPoly::zero(n), MultiPoly::zero(n), MultiPoly::one(n)]);
        m.substitute(&images)
    };
    report.expect_eq(
        "quadric/pgl2-identity",
        "alpha = delta = 1, beta = gamma = 0 gives the identity",
        [specialize(&mx), specialize(&my), specialize(&mz)],
        [x.clone(), y.clone(), z.clone()],
    );

    // equivariance: φ(R·[a:b], R·[c:d]) = M_R · φ([a:b], [c:d])
    let n = 8;
    let (a, b, cc, d) = (v(n, 0), v(n, 1), v(n, 2), v(n, 3));
    let (al, be, ga, de) = (v(n, 4), v(n, 5), v(n, 6), v(n, 7));
    let phi = |a: &MultiPoly, b: &MultiPoly, cc: &MultiPoly, d: &MultiPoly| {
        [
            (a * cc).scale(&two),
            (b * d).scale(&two),
            &(a * d) + &(b * cc),
            &(a * d) - &(b * cc),
        ]
    };
    let act = |u: &MultiPoly, w: &MultiPoly| (&(&al * u) + &(&be * w), &(&ga * u) + &(&de * w));
    let (a2, b2) = act(&a, &b);
    let (c2, d2) = act(&cc, &d);
    let moved = phi(&a2, &b2, &c2, &d2);
    let base = phi(&a, &b, &cc, &d);
    let det = &(&al * &de) - &(&be * &ga);
    let mrow = |u: MultiPoly, w: MultiPoly, t: MultiPoly| &(&(&u * &base[0]) + &(&w * &base[1])) + &(&t * &base[2]);
    let expect = [
        mrow(al.pow(2), be.pow(2), (&al * &be).scale(&two)),
        mrow(ga.pow(2), de.pow(2), (&ga * &de).scale(&two)),
        mrow(&al * &ga, &be * &de, &(&al * &de) + &(&be * &ga)),
        &det * &base[3],
    ];
    report.expect_eq(
        "quadric/pgl2-equivariance",
        "the parametrisation intertwines the diagonal action on P1xP1 with the 3x3 matrix",
        moved.to_vec(),
        expect.to_vec(),
    );
    report
}

fn pullback_law(psi: &PsiElement, p: &UniPoly) -> Result<(), String> {
    let map = psi.to_map(p).map_err(|e| e.to_string())?;
    let eq = surface(p);
    let pulled = substitute_map(&eq, &map[0], &map[1], &map[2]);
    let want = eq.scale(&(&psi.a * &psi.b));
    if pulled == want {
        Ok(())
    } else {
        Err(format!("pullback {pulled}, expected {want}"))
    }
}

/// The pullback identity `ψ*(xy − p) = ab·(xy − p)` and the composition law
/// of `ψ` maps, on fixed and seeded random samples.
pub fn verify_group_laws() -> Report {
    let mut report = Report::default();
    let z2 = UniPoly::from_ints(&[0, 0, 1]);
    let shear = PsiElement::shear(UniPoly::var());
    report.check("group/psi-shear-pullback", "psi_{1,1,1,0,x} preserves xy - z^2", pullback_law(&shear, &z2));
    let map = shear.to_map(&z2).expect("valid");
    let eq = surface(&z2);
    report.expect_eq(
        "group/psi-shear-equation",
        "pullback of xy - z^2 under psi_{1,1,1,0,x} is xy - z^2",
        substitute_map(&eq, &map[0], &map[1], &map[2]),
        eq.clone(),
    );
    report.check("group/psi-identity-pullback", "identity pullback", pullback_law(&PsiElement::identity(), &z2));

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let ambient = [z2, UniPoly::from_ints(&[-1, 0, 1]), UniPoly::from_ints(&[0, 1, 0, 1]), UniPoly::from_ints(&[1, 0, 0, 1])];
    for (k, p) in ambient.iter().enumerate() {
        for s in 0..4 {
            let f = sample::psi(&mut rng, p, 1).expect("sample");
            let g = sample::psi(&mut rng, p, 1).expect("sample");
            let h = sample::psi(&mut rng, p, 1).expect("sample");
            let id = format!("group/p{k}-sample{s}");
            report.check(format!("{id}/pullback"), format!("psi*(xy - p) = ab(xy - p) for p = {p}"), pullback_law(&f, p));
            let closed = f.compose(&g).to_map(p).expect("valid");
            let expanded = compose(&f.to_map(p).expect("valid"), &g.to_map(p).expect("valid"));
            report.expect_eq(format!("{id}/composition"), "closed-form composition matches substitution", closed, expanded);
            report.expect_eq(
                format!("{id}/associativity"),
                "(f o g) o h = f o (g o h)",
                f.compose(&g).compose(&h),
                f.compose(&g.compose(&h)),
            );
            report.expect_eq(format!("{id}/inverse"), "f o f^-1 = id", f.compose(&f.inverse()), PsiElement::identity());
        }
    }
    report
}

/// The explicit conjugations used for `(𝔸¹∖{0})²` and `𝔸¹ × (𝔸¹∖{0})`.
pub fn verify_section4_witnesses() -> Report {
    let mut report = Report::default();
    let one = || c(1);
    let s2 = Gl2z([[-1, 0], [0, -1]]);

    let nu = MonomialAut::new(-one(), one(), s2);
    let alpha = MonomialAut::matrix(Gl2z([[1, 0], [1, 1]]));
    report.expect_eq(
        "torus/alpha-x-xy",
        "alpha = (x, xy) conjugates (-1/x, 1/y) to (-1/x, -1/y)",
        conjugate(&alpha, &nu),
        MonomialAut::new(-one(), -one(), s2),
    );
    let swap = MonomialAut::matrix(Gl2z([[0, 1], [1, 0]]));
    report.expect_eq(
        "torus/alpha-swap",
        "alpha = (y, x) conjugates (-1/x, 1/y) to (1/x, -1/y)",
        conjugate(&swap, &nu),
        MonomialAut::new(one(), -one(), s2),
    );
    let lam = &c(2) + &i();
    let nu = MonomialAut::new(lam.inv().expect("nonzero"), lam.conj(), Gl2z([[0, 1], [1, 0]]));
    let alpha = MonomialAut::scaling(lam.inv().expect("nonzero"), one());
    report.check(
        "torus/sigma3",
        "(y/l, conj(l) x) is a cocycle conjugated to (y, x) by (x/l, y)",
        if is_cocycle(&nu) && conjugate(&alpha, &nu) == swap {
            Ok(())
        } else {
            Err(format!("got {}", conjugate(&alpha, &nu)))
        },
    );

    // (x, y) ↦ (x + y, i(x − y)) turns (conj y, conj x) into the standard structure
    let two_vars = |k| MultiPoly::var(2, k);
    let (x, y) = (two_vars(0), two_vars(1));
    let f = [&x + &y, (&x - &y).scale(&i())];
    let swapped = [
        f[0].substitute(&[y.clone(), x.clone()]),
        f[1].substitute(&[y.clone(), x.clone()]),
    ];
    let conic = &f[0].pow(2) + &f[1].pow(2);
    report.check(
        "torus/conic-model",
        "(x+y, i(x-y)) intertwines (conj y, conj x) with conjugation and maps xy = 0 to x^2 + y^2 = 0",
        if swapped == [f[0].conj(), f[1].conj()] && conic == (&x * &y).scale(&c(4)) {
            Ok(())
        } else {
            Err("identity fails".into())
        },
    );
    let (px, py, pz) = MultiPoly::xyz();
    let g = [&py + &pz, (&py - &pz).scale(&i()), px.clone()];
    let rho = [px.clone(), pz.clone(), py.clone()];
    let g_rho: Vec<MultiPoly> = g.iter().map(|h| substitute_map(h, &rho[0], &rho[1], &rho[2])).collect();
    let plane_conic = &g[0].pow(2) + &g[1].pow(2);
    report.check(
        "halftorus/plane-model",
        "[y+z : i(y-z) : x] intertwines [conj x : conj z : conj y] with conjugation and maps yz = 0 to x^2 + y^2 = 0",
        if g_rho == g.iter().map(MultiPoly::conj).collect::<Vec<_>>() && plane_conic == (&py * &pz).scale(&c(4)) {
            Ok(())
        } else {
            Err("identity fails".into())
        },
    );

    let lp = |terms: &[(i64, CycloNum)]| LaurentPoly::from_terms(terms);
    // σ₀: c + c̄ = 0, α = (x + c/2, y)
    let cc = lp(&[(2, i()), (-1, i().scale(&num_rational::BigRational::from_integer(3.into())))]);
    let nu = HalfTorusAut::translation(cc.clone());
    let alpha = HalfTorusAut::translation(cc.scale(&CycloNum::from_ratio(1, 2)));
    report.check(
        "halftorus/sigma0",
        "(x + c(y), y) with c + conj(c) = 0 is trivialised by (x + c/2, y)",
        if is_cocycle(&nu) && conjugate(&alpha, &nu).is_identity() { Ok(()) } else { Err("fails".into()) },
    );
    // σ₁: c̄(y) + c(y⁻¹) = 0, α = (x − c̄(y)/2, y)
    let cc = lp(&[(1, i()), (-1, i())]);
    let nu = HalfTorusAut { lambda: one(), m: 0, c: cc.clone(), mu: one(), e: -1 };
    let alpha = HalfTorusAut::translation(cc.conj().scale(&CycloNum::from_ratio(-1, 2)));
    let target = HalfTorusAut { lambda: one(), m: 0, c: LaurentPoly::zero(), mu: one(), e: -1 };
    report.check(
        "halftorus/sigma1",
        "(x + i(y + 1/y), 1/y) is reduced to (x, 1/y) by (x - conj(c)(y)/2, y)",
        if is_cocycle(&nu) && conjugate(&alpha, &nu) == target {
            Ok(())
        } else {
            Err(format!("got {}", conjugate(&alpha, &nu)))
        },
    );
    let anti = HalfTorusAut { c: lp(&[(1, i()), (-1, -i())]), ..nu };
    report.check(
        "halftorus/sigma1-antisymmetric",
        "c = i(y - 1/y) violates conj(c)(y) + c(1/y) = 0, so (x + c(y), 1/y) is not a cocycle",
        if is_cocycle(&anti) { Err("unexpectedly a cocycle".into()) } else { Ok(()) },
    );
    // σ₂: c̄(y)·y + c(y⁻¹) = 0, α = (x − c̄(y)·y/2, y)
    let cc = lp(&[(0, i()), (-1, i())]);
    let nu = HalfTorusAut { lambda: one(), m: -1, c: cc.clone(), mu: one(), e: -1 };
    let alpha = HalfTorusAut::translation(cc.conj().shift(1).scale(&CycloNum::from_ratio(-1, 2)));
    let target = HalfTorusAut { lambda: one(), m: -1, c: LaurentPoly::zero(), mu: one(), e: -1 };
    report.check(
        "halftorus/sigma2",
        "(x/y + i(1 + 1/y), 1/y) is reduced to (x/y, 1/y)",
        if is_cocycle(&nu) && conjugate(&alpha, &nu) == target {
            Ok(())
        } else {
            Err(format!("got {}", conjugate(&alpha, &nu)))
        },
    );
    report
}

/// All groups of cases. `filter` keeps the cases whose id starts with it.
pub fn verify_all(filter: Option<&str>) -> Report {
    let mut report = Report::default();
    report.merge(verify_theta_tables());
    report.merge(verify_quadric_isomorphism());
    report.merge(verify_group_laws());
    report.merge(verify_section4_witnesses());
    if let Some(f) = filter {
        report.cases.retain(|c| c.id.starts_with(f));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_clean(r: &Report) {
        if let Some(case) = r.cases.iter().find(|c| !c.passed) {
            panic!("{}: {:?}", case.id, case.detail);
        }
    }

    #[test]
    fn tables() {
        assert_clean(&verify_theta_tables());
    }

    #[test]
    fn quadric() {
        assert_clean(&verify_quadric_isomorphism());
    }

    #[test]
    fn group_laws() {
        assert_clean(&verify_group_laws());
    }

    #[test]
    fn section4() {
        assert_clean(&verify_section4_witnesses());
    }
}
