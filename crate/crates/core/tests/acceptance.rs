//! One pass/fail line per acceptance criterion. Runs without the test
//! harness so the report is always printed.
//!
//! All checks are exact; the only tolerances are the wall-clock budgets
//! below.

use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use realforms::autgroup::{
    classify_a_cocycle, conjugate, gl2z_involution_class, h1_mu_bruteforce, reduce_b_cocycle, reduce_halftorus_cocycle,
    reduce_torus_cocycle, AClass, AffineAut, Gl2z, GroupElement, HalfTorusClass, InvolutionClass, PsiElement, TorusClass,
};
use realforms::classify::{classify, classify_torus, derive_bits, Bits, TableRow, TorusKind};
use realforms::invariants::{invariants, real_form_exists};
use realforms::poly::{substitute_map, MultiPoly};
use realforms::sample;
use realforms::verify::verify_all;
use realforms::{CycloNum, UniPoly};

const THEOREM_BUDGET: Duration = Duration::from_secs(5);
const VERIFY_BUDGET: Duration = Duration::from_secs(10);
const CONJUGATES_PER_CLASS: usize = 50;
const GL2Z_SAMPLES: usize = 200;
const GL2Z_ENTRY_BOUND: i64 = 50;
const GROUP_LAW_TRIPLES: usize = 500;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Count of real forms read directly off the case list of the theorem,
/// from the shape `λ·z^m q(z^n)` used to build the polynomial.
fn oracle_count(d: usize, n: Option<u32>) -> usize {
    match n {
        None if d == 2 => 2,
        None if d % 2 == 1 => 2,
        None => 3,
        Some(n) if n % 2 == 1 => 3,
        Some(_) if d % 2 == 1 => 4,
        Some(_) => {
            if d == 2 {
                4
            } else {
                6
            }
        }
    }
}

/// A random `λ·P(z + s)` with `P = z^m q(z^n)` reduced, `q(0) ≠ 0` and the
/// exponents of `q` coprime, together with `(d, n)` (`None` for monomials).
fn random_surface(rng: &mut ChaCha8Rng) -> (UniPoly, usize, Option<u32>) {
    loop {
        let n = rng.gen_range(1u32..=4);
        let k = rng.gen_range(0usize..=3);
        let m = rng.gen_range(0usize..=3);
        if n == 1 && k == 1 {
            continue;
        }
        let mut q: Vec<i64> = (0..=k).map(|_| rng.gen_range(-3i64..=3)).collect();
        q[k] = 1;
        if n == 1 && k >= 2 {
            q[k - 1] = 0;
        }
        if k > 0 && q[0] == 0 {
            q[0] = 1;
        }
        let exps: Vec<usize> = (1..=k).filter(|&e| q[e] != 0).collect();
        let g = exps.iter().fold(0usize, |g, &e| g.gcd(&e));
        let monomial = k == 0;
        if !monomial && g != 1 {
            continue;
        }
        let d = m + n as usize * k;
        if d < 2 || (monomial && m < 2) {
            continue;
        }
        let big_p = UniPoly::from_ints(&q).substitute_power(n as usize).shift(m);
        let lambda = CycloNum::from_ratio(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=3));
        let s = CycloNum::from_ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        let p = big_p.compose_affine(&CycloNum::one(), &s).scale(&lambda);
        let n = if monomial { None } else { Some(n) };
        return (p, d, n);
    }
}

fn criterion_theorem() -> Outcome {
    let start = Instant::now();
    let corpus: [(&[i64], usize); 8] = [
        (&[-1, 0, 1], 4),
        (&[0, 0, 1], 2),
        (&[0, 0, 0, 1], 2),
        (&[0, 0, 0, 0, 1], 3),
        (&[0, 1, 0, 1], 4),
        (&[0, 0, 1, 0, 1], 6),
        (&[0, 0, 1, 0, 0, 0, 1], 6),
        (&[0, 0, 3, 1], 3),
    ];
    for (coeffs, want) in corpus {
        let p = UniPoly::from_ints(coeffs);
        let r = classify(&p).map_err(|e| format!("{p}: {e}"))?;
        ensure(r.count == want && r.representatives.len() == want, || format!("{p}: count {} != {want}", r.count))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let (p, d, n) = random_surface(&mut rng);
        let r = classify(&p).map_err(|e| format!("{p}: {e}"))?;
        let inv = invariants(&p).map_err(|e| format!("{p}: {e}"))?;
        let table = TableRow::select(inv.d, inv.n).bits();
        let mut listed: Vec<Bits> = r.representatives.iter().map(|rep| rep.bits).collect();
        listed.sort();
        let mut rederived = derive_bits(inv.d, inv.hp);
        rederived.sort();
        let mut table = table;
        table.sort();
        ensure(inv.d == d && inv.n.finite() == n, || format!("{p}: invariants {:?}", (inv.d, inv.n)))?;
        ensure(table == rederived && listed == table, || format!("{p}: table {table:?}, case list {rederived:?}"))?;
        ensure(r.count == oracle_count(d, n), || format!("{p}: count {} != {}", r.count, oracle_count(d, n)))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < THEOREM_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("8 corpus + 50 random, {elapsed:.2?}"))
}

fn criterion_verifier() -> Outcome {
    let start = Instant::now();
    let report = verify_all(None);
    let elapsed = start.elapsed();
    if let Some(bad) = report.cases.iter().find(|c| !c.passed) {
        return Err(format!("{} failed: {:?}", bad.id, bad.detail));
    }
    for group in ["theta/", "quadric/p1xp1-map", "quadric/pgl2-preserves-cone", "group/", "torus/", "halftorus/"] {
        ensure(report.cases.iter().any(|c| c.id.starts_with(group)), || format!("no case for {group}"))?;
    }
    ensure(elapsed < VERIFY_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{} cases, {elapsed:.2?}", report.cases.len()))
}

fn criterion_h1() -> Outcome {
    for n in 1..=64u32 {
        let want = if n % 2 == 0 { 2 } else { 1 };
        let got = h1_mu_bruteforce(n).len();
        ensure(got == want, || format!("n = {n}: {got} classes"))?;
    }
    Ok("n = 1..64".into())
}

fn random_gl2z(rng: &mut ChaCha8Rng) -> Gl2z {
    let gens = [Gl2z([[1, 1], [0, 1]]), Gl2z([[1, 0], [1, 1]]), Gl2z([[0, 1], [1, 0]]), Gl2z([[-1, 0], [0, 1]])];
    loop {
        let len = rng.gen_range(1..=12);
        let mut b = Gl2z::IDENTITY;
        for _ in 0..len {
            let g = gens.choose(rng).expect("nonempty");
            b = if rng.gen_bool(0.5) { b.mul(g) } else { b.mul(&g.inverse()) };
        }
        if b.0.iter().flatten().all(|e| e.abs() <= GL2Z_ENTRY_BOUND) {
            return b;
        }
    }
}

fn criterion_gl2z() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let classes = [InvolutionClass::Identity, InvolutionClass::Sigma1, InvolutionClass::Sigma2, InvolutionClass::Sigma3];
    for k in 0..GL2Z_SAMPLES {
        let class = classes[k % 4];
        let b = random_gl2z(&mut rng);
        let m = b.mul(&class.matrix()).mul(&b.inverse());
        let (got, p) = gl2z_involution_class(&m).map_err(|e| format!("{m}: {e}"))?;
        ensure(got == class, || format!("{m}: {got} != {class}"))?;
        ensure(p.inverse().mul(&m).mul(&p) == class.matrix(), || format!("{m}: conjugator {p} fails"))?;
    }
    Ok(format!("{GL2Z_SAMPLES} conjugates, entries <= {GL2Z_ENTRY_BOUND}"))
}

/// Ambient polynomials of degree 3 and 4 covering infinite `H_p`, odd
/// and even `n`, and both parities of `d`.
fn affine_ambients() -> Vec<UniPoly> {
    vec![
        UniPoly::from_ints(&[0, 0, 0, 1]),
        UniPoly::from_ints(&[0, 0, 0, 0, 1]),
        UniPoly::from_ints(&[0, 1, 0, 1]),
        UniPoly::from_ints(&[0, 0, 1, 0, 1]),
        UniPoly::from_ints(&[1, 0, 0, 1]),
        UniPoly::from_ints(&[0, 1, 0, 0, 1]),
        UniPoly::from_ints(&[2, -3, 0, 1]),
        UniPoly::from_ints(&[1, 0, 0, 0, 1]),
    ]
}

fn representative(class: AClass, p: &UniPoly) -> AffineAut {
    let inv = invariants(p).expect("valid");
    match inv.n.finite() {
        Some(n) => class.representative(inv.m, n),
        None => class.representative(inv.d, 1),
    }
    .expect("small order")
}

fn criterion_reductions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut classes = 0;
    // A(p) ∩ B(p) and B(p) for degree 3 and 4
    for p in affine_ambients() {
        let inv = invariants(&p).map_err(|e| e.to_string())?;
        for class in AClass::occurring(inv.d, inv.hp) {
            let tau = representative(class, &p);
            let expected = classify_a_cocycle(&tau, &p).map_err(|e| format!("{p} {class}: {e}"))?.class;
            classes += 1;
            for _ in 0..CONJUGATES_PER_CLASS {
                let theta = sample::affine(&mut rng, &p).map_err(|e| e.to_string())?;
                let input = conjugate(&theta, &tau);
                let r = classify_a_cocycle(&input, &p).map_err(|e| format!("{p} {class}: {e}"))?;
                ensure(r.class == expected && r.verify(&input), || format!("{p}: {input} gave {}", r.class))?;
            }
            if tau.swap {
                continue;
            }
            let psi = PsiElement::affine(tau.a.clone(), tau.b.clone(), tau.c.clone(), tau.d.clone());
            classes += 1;
            for _ in 0..CONJUGATES_PER_CLASS {
                let theta = sample::psi(&mut rng, &p, 2).map_err(|e| e.to_string())?;
                let input = conjugate(&theta, &psi);
                let r = reduce_b_cocycle(&input, &p).map_err(|e| format!("{p} {class}: {e}"))?;
                let nf = &r.normal_form;
                ensure(r.verify(&input) && nf.a.is_one() && nf.r.is_zero(), || format!("{p}: B-reduction of {input} gave {nf}"))?;
                let back = AffineAut { swap: false, a: nf.a.clone(), b: nf.b.clone(), c: nf.c.clone(), d: nf.d.clone() };
                let again = classify_a_cocycle(&back, &p).map_err(|e| e.to_string())?;
                ensure(again.class == expected, || format!("{p}: B-reduction of {input} lands in {}", again.class))?;
            }
        }
    }
    // B(p) in degree 2, where the normal form is checked for shape only
    for p in [UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[-1, 0, 1])] {
        let one = CycloNum::one;
        for tau in [PsiElement::identity(), PsiElement::affine(-one(), -one(), one(), CycloNum::zero())] {
            classes += 1;
            for _ in 0..CONJUGATES_PER_CLASS {
                let theta = sample::psi(&mut rng, &p, 2).map_err(|e| e.to_string())?;
                let input = conjugate(&theta, &tau);
                let r = reduce_b_cocycle(&input, &p).map_err(|e| format!("{p}: {e}"))?;
                ensure(r.verify(&input) && r.normal_form.a.is_one() && r.normal_form.r.is_zero(), || {
                    format!("{p}: B-reduction of {input} gave {}", r.normal_form)
                })?;
            }
        }
    }
    for class in TorusClass::ALL {
        let tau = class.representative();
        classes += 1;
        for _ in 0..CONJUGATES_PER_CLASS {
            let input = conjugate(&sample::monomial(&mut rng), &tau);
            let r = reduce_torus_cocycle(&input).map_err(|e| format!("{class}: {input}: {e}"))?;
            ensure(r.class == class && r.verify(&input), || format!("{input} gave {}", r.class))?;
        }
    }
    for class in HalfTorusClass::ALL {
        let tau = class.representative();
        classes += 1;
        for _ in 0..CONJUGATES_PER_CLASS {
            let input = conjugate(&sample::halftorus(&mut rng), &tau);
            let r = reduce_halftorus_cocycle(&input).map_err(|e| format!("{class}: {input}: {e}"))?;
            ensure(r.class == class && r.verify(&input), || format!("{input} gave {}", r.class))?;
        }
    }
    Ok(format!("{classes} classes x {CONJUGATES_PER_CLASS} conjugates"))
}

fn criterion_real_points() -> Outcome {
    let (x, y, z) = MultiPoly::xyz();
    let one = MultiPoly::one(3);
    let sum = &(&x.pow(2) + &y.pow(2)) + &z.pow(2);

    let r = classify(&UniPoly::from_ints(&[-1, 0, 1])).map_err(|e| e.to_string())?;
    let empty: Vec<_> = r.representatives.iter().filter(|rep| !rep.real_points).collect();
    ensure(empty.len() == 1 && empty[0].equation == &sum + &one, || "z^2 - 1: wrong empty set".into())?;
    for rep in r.representatives.iter().filter(|rep| rep.real_points) {
        let pt = rep.real_point.as_ref().ok_or("missing witness")?;
        ensure(rep.equation.eval(pt).is_zero(), || format!("{}: witness fails", rep.equation))?;
    }

    let r = classify(&UniPoly::from_ints(&[0, 0, 1])).map_err(|e| e.to_string())?;
    let cone = r.representatives.iter().find(|rep| rep.equation == sum).ok_or("x^2+y^2+z^2 missing")?;
    let origin = [CycloNum::zero(), CycloNum::zero(), CycloNum::zero()];
    ensure(cone.real_points && cone.real_point.as_ref() == Some(&origin), || "cone point".into())?;
    let other = &(&x.pow(2) - &y.pow(2)) - &z.pow(2);
    let hyper = r.representatives.iter().find(|rep| rep.equation == other).ok_or("x^2-y^2-z^2 missing")?;
    ensure(hyper.real_points, || "x^2 - y^2 - z^2 should have real points".into())?;

    let line = classify_torus(TorusKind::PuncturedLine);
    let status: Vec<bool> = line.classes.iter().map(|c| c.real_points).collect();
    ensure(status == [true, true, false], || format!("punctured line {status:?}"))?;
    Ok("z^2-1, z^2, G1..G3".into())
}

fn criterion_existence() -> Outcome {
    let p = UniPoly::new(vec![CycloNum::i(), CycloNum::zero(), CycloNum::zero(), CycloNum::one()]);
    let r = real_form_exists(&p).map_err(|e| e.to_string())?;
    let w = r.witness.ok_or("no witness for z^3 + i")?;
    let expanded = p.compose_affine(&w.a, &w.b).scale(&w.lambda);
    ensure(r.exists && expanded == UniPoly::from_ints(&[-1, 0, 0, 1]), || format!("witness gives {expanded}"))?;

    let p = UniPoly::new(vec![&CycloNum::one() + &CycloNum::i(), CycloNum::one(), CycloNum::zero(), CycloNum::one()]);
    let r = real_form_exists(&p).map_err(|e| e.to_string())?;
    ensure(!r.exists, || "z^3 + z + 1 + i has no real form".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 100 {
        let degree = rng.gen_range(2..=5);
        let p = sample::small_poly(&mut rng, degree);
        if p.degree().unwrap_or(0) < 2 {
            continue;
        }
        let a = real_form_exists(&p).map_err(|e| format!("{p}: {e}"))?;
        let b = real_form_exists(&p.conj()).map_err(|e| format!("{p}: {e}"))?;
        ensure(a.exists == b.exists, || format!("{p}: conj changes the answer"))?;
        if let Some(w) = &a.witness {
            ensure(w.verify(&p), || format!("{p}: witness fails"))?;
        }
        checked += 1;
    }
    Ok("z^3+i, z^3+z+1+i, 100 conjugate pairs".into())
}

fn group_laws<G: GroupElement>(f: &G, g: &G, h: &G) -> Result<(), String> {
    ensure(f.compose(g).compose(h) == f.compose(&g.compose(h)), || format!("associativity fails for {f:?}, {g:?}, {h:?}"))?;
    ensure(f.compose(g).conj() == f.conj().compose(&g.conj()), || format!("conj fails for {f:?}, {g:?}"))
}

fn criterion_group_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let ambient = [UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[0, 1, 0, 1]), UniPoly::from_ints(&[-1, 0, 1])];
    for k in 0..GROUP_LAW_TRIPLES {
        let p = &ambient[k % ambient.len()];
        let (f, g, h) = (
            sample::psi(&mut rng, p, 1).map_err(|e| e.to_string())?,
            sample::psi(&mut rng, p, 1).map_err(|e| e.to_string())?,
            sample::psi(&mut rng, p, 1).map_err(|e| e.to_string())?,
        );
        group_laws(&f, &g, &h)?;
        let (mf, mg) = (f.to_map(p).map_err(|e| e.to_string())?, g.to_map(p).map_err(|e| e.to_string())?);
        let expanded: Vec<MultiPoly> = mf.iter().map(|c| substitute_map(c, &mg[0], &mg[1], &mg[2])).collect();
        let closed = f.compose(&g).to_map(p).map_err(|e| e.to_string())?;
        ensure(closed.to_vec() == expanded, || format!("composition of {f} and {g} disagrees with substitution"))?;

        group_laws(&sample::monomial(&mut rng), &sample::monomial(&mut rng), &sample::monomial(&mut rng))?;
        group_laws(&sample::halftorus(&mut rng), &sample::halftorus(&mut rng), &sample::halftorus(&mut rng))?;
    }
    Ok(format!("{GROUP_LAW_TRIPLES} triples per group"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 classification counts", criterion_theorem),
        ("2 identity replay", criterion_verifier),
        ("3 H1(mu_n) parity", criterion_h1),
        ("4 GL2(Z) involutions", criterion_gl2z),
        ("5 cocycle reductions", criterion_reductions),
        ("6 real points", criterion_real_points),
        ("7 real form existence", criterion_existence),
        ("8 group laws", criterion_group_laws),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                println!("FAIL  criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
