use std::io::Write;
use std::panic;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use realforms::autgroup::{
    classify_a_cocycle, gl2z_involution_class, h1_mu_bruteforce, pgl2_cocycle_epsilon, reduce_b_cocycle,
    reduce_halftorus_cocycle, reduce_torus_cocycle, AffineAut, Gl2z, HalfTorusAut, Mat2, MonomialAut, PsiElement,
};
use realforms::classify::{classify, classify_torus, ClassificationResult, TorusKind};
use realforms::invariants::{iso_test, real_form_exists, Field};
use realforms::poly::{parse_poly, parse_scalar};
use realforms::verify::verify_all;
use realforms::{CycloNum, Error, UniPoly};

const SCHEMA: &str = "realforms/1";

#[derive(Parser)]
#[command(name = "realforms", version, about = "Real forms of the surfaces xy = p(z) and of the complex tori")]
struct Cli {
    /// Emit a single JSON document instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count and list the real forms of xy = p(z).
    Classify { poly: String },
    /// Decide whether xy = p(z) and xy = q(z) are isomorphic.
    Isotest {
        p: String,
        q: String,
        #[arg(long, value_enum, default_value = "q")]
        over: Over,
    },
    /// Decide whether xy = p(z) has a real form.
    Exists { poly: String },
    /// Conjugacy class of an involution [[a, b], [c, d]] of GL2(Z).
    Involution {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },
    /// Classes of H^1(Gal(C/R), mu_n).
    H1mu { n: u32 },
    /// Reduce a cocycle, given as JSON, to its normal form.
    ReduceCocycle {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Ambient polynomial, for `psi` and `affine`.
        #[arg(long)]
        p: Option<String>,
        element: String,
    },
    /// Real forms of torus, half-torus or punctured-line.
    ClassifyTorus { kind: String },
    /// Replay the exact identities behind the classification.
    #[command(name = "verify-paper")]
    Verify {
        #[arg(long = "case")]
        case: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Over {
    Q,
    Qi,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Psi,
    Affine,
    Torus,
    Halftorus,
    Pgl2,
}

struct Output {
    command: &'static str,
    value: Value,
    human: String,
    ok: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::Invariant(_) => 4,
        _ => 3,
    }
}

fn poly(s: &str) -> Result<UniPoly, Error> {
    parse_poly(s)
}

/// Replaces scalar strings like `"1/2 + i"` by their JSON encoding.
fn scalar_field(v: &mut Value) -> Result<(), Error> {
    if let Value::String(s) = v {
        *v = to_value(&parse_scalar(s)?);
    } else if let Value::Number(n) = v {
        *v = to_value(&parse_scalar(&n.to_string())?);
    }
    Ok(())
}

/// Polynomials may be given as text or as `[exponent, scalar]` pairs.
fn poly_field(v: &mut Value, allow_text: bool) -> Result<(), Error> {
    match v {
        Value::String(s) if allow_text => *v = to_value(&parse_poly(s)?),
        Value::Array(terms) => {
            for t in terms {
                if let Value::Array(pair) = t {
                    if let Some(c) = pair.get_mut(1) {
                        scalar_field(c)?;
                    }
                }
            }
        }
        _ => {}
    }
    Ok(())
}

fn normalize(kind: Kind, v: &mut Value) -> Result<(), Error> {
    let Value::Object(map) = v else {
        return Err(Error::Parse("element must be a JSON object".into()));
    };
    let scalars: &[&str] = match kind {
        Kind::Psi | Kind::Affine => &["a", "b", "c", "d"],
        Kind::Torus => &["a", "b"],
        Kind::Halftorus => &["lambda", "mu"],
        Kind::Pgl2 => &[],
    };
    for key in scalars {
        if let Some(f) = map.get_mut(*key) {
            scalar_field(f)?;
        }
    }
    match kind {
        Kind::Psi => {
            map.entry("d").or_insert_with(|| to_value(&CycloNum::zero()));
            map.entry("r").or_insert_with(|| Value::Array(Vec::new()));
            if let Some(r) = map.get_mut("r") {
                poly_field(r, true)?;
            }
        }
        Kind::Affine => {
            map.entry("d").or_insert_with(|| to_value(&CycloNum::zero()));
            map.entry("swap").or_insert(Value::Bool(false));
        }
        Kind::Halftorus => {
            if let Some(c) = map.get_mut("c") {
                poly_field(c, false)?;
            }
        }
        Kind::Torus | Kind::Pgl2 => {}
    }
    Ok(())
}

fn parse_element<T: serde::de::DeserializeOwned>(kind: Kind, text: &str) -> Result<T, Error> {
    let mut v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    normalize(kind, &mut v)?;
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_matrix(text: &str) -> Result<Mat2, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let v = v.get("matrix").cloned().unwrap_or(v);
    let entry = |r: usize, c: usize| -> Result<CycloNum, Error> {
        let mut e = v.get(r).and_then(|row| row.get(c)).cloned().ok_or_else(|| Error::Parse("expected [[a, b], [c, d]]".into()))?;
        scalar_field(&mut e)?;
        serde_json::from_value(e).map_err(|e| Error::Parse(e.to_string()))
    };
    Ok(Mat2::new(entry(0, 0)?, entry(0, 1)?, entry(1, 0)?, entry(1, 1)?))
}

fn table(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows[0].len()).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn render_classification(r: &ClassificationResult) -> String {
    let mut out = format!("input      {}\n", r.input);
    if let Some(w) = &r.real_form {
        out += &format!("real form  {}\n", w.real_poly);
    }
    out += &format!("reduced    {}\n", r.reduced);
    out += &format!("m = {}, n = {}, q(t) = {}, H_p {}\n", r.m, r.n, r.q.display_var("t"), r.hp);
    out += &format!("row        {}\n", r.condition);
    out += &format!("count      {}\n\n", r.count);
    let mut rows = vec![vec!["class".to_string(), "equation".into(), "real points".into()]];
    for rep in &r.representatives {
        let pts = match (&rep.real_point, rep.real_points) {
            (Some([x, y, z]), _) => format!("yes ({x}, {y}, {z})"),
            (None, true) => "yes".into(),
            (None, false) => "none".into(),
        };
        rows.push(vec![rep.bits.to_string(), format!("{} = 0", rep.equation), pts]);
    }
    out + &table(&rows)
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let out = match &cli.command {
        Command::Classify { poly: text } => {
            let r = classify(&poly(text)?)?;
            Output { command: "classify", human: render_classification(&r), value: to_value(&r), ok: true }
        }
        Command::Isotest { p, q, over } => {
            let (p, q) = (poly(p)?, poly(q)?);
            let field = match over {
                Over::Q => Field::Rationals,
                Over::Qi => Field::GaussianRationals,
            };
            let w = iso_test(&p, &q, field)?;
            let human = match &w {
                Some(w) => format!("isomorphic: p({}*z + {}) = ({}) * q(z)\n", w.a, w.b, w.lambda),
                None => "not isomorphic\n".into(),
            };
            Output {
                command: "isotest",
                value: json!({ "isomorphic": w.is_some(), "witness": w }),
                human,
                ok: true,
            }
        }
        Command::Exists { poly: text } => {
            let r = real_form_exists(&poly(text)?)?;
            let human = match (&r.witness, r.exists) {
                (Some(w), _) => format!("real form exists: ({}) * p({}*z + {}) = {}\n", w.lambda, w.a, w.b, w.real_poly),
                (None, true) => "real form exists (rescaling outside the cyclotomic tower)\n".into(),
                (None, false) => "no real form\n".into(),
            };
            Output { command: "exists", value: to_value(&r), human, ok: true }
        }
        Command::Involution { a, b, c, d } => {
            let m = Gl2z::new(*a, *b, *c, *d)?;
            let (class, p) = gl2z_involution_class(&m)?;
            Output {
                command: "involution",
                value: json!({ "input": m, "class": class, "conjugator": p }),
                human: format!("class       {class}\nconjugator  {p}\nP^-1 M P = {}\n", class.matrix()),
                ok: true,
            }
        }
        Command::H1mu { n } => {
            if *n == 0 {
                return Err(Error::Parse("n must be positive".into()));
            }
            let classes = h1_mu_bruteforce(*n);
            let mut rows = vec![vec!["representative".to_string(), "members".into()]];
            for c in &classes {
                let members: Vec<String> = c.members.iter().map(|r| r.to_string()).collect();
                rows.push(vec![c.representative.to_string(), members.join(", ")]);
            }
            Output {
                command: "h1mu",
                value: json!({ "n": n, "count": classes.len(), "classes": classes }),
                human: format!("{} classes\n\n{}", classes.len(), table(&rows)),
                ok: true,
            }
        }
        Command::ReduceCocycle { kind, p, element } => reduce(*kind, p.as_deref(), element)?,
        Command::ClassifyTorus { kind } => {
            let kind: TorusKind = kind.parse()?;
            let r = classify_torus(kind);
            let mut rows = vec![vec!["class".to_string(), "model".into(), "real points".into()]];
            for c in &r.classes {
                rows.push(vec![c.label.into(), c.equation.into(), if c.real_points { "yes" } else { "none" }.into()]);
            }
            Output {
                command: "classify-torus",
                human: format!("count  {}\n\n{}", r.count, table(&rows)),
                value: to_value(&r),
                ok: true,
            }
        }
        Command::Verify { case } => {
            let r = verify_all(case.as_deref());
            if r.cases.is_empty() {
                return Err(Error::Parse(format!("no case matches '{}'", case.as_deref().unwrap_or(""))));
            }
            let mut human = String::new();
            for c in &r.cases {
                human += &format!("{}  {}\n", if c.passed { "PASS" } else { "FAIL" }, c.id);
                if let Some(d) = &c.detail {
                    human += &format!("      {d}\n");
                }
            }
            human += &format!("\n{} passed, {} failed\n", r.passed(), r.failed());
            Output {
                command: "verify-paper",
                value: json!({ "passed": r.passed(), "failed": r.failed(), "cases": r.cases }),
                human,
                ok: r.all_passed(),
            }
        }
    };
    Ok(out)
}

fn ambient(p: Option<&str>) -> Result<UniPoly, Error> {
    poly(p.ok_or_else(|| Error::Parse("--p is required for this kind".into()))?)
}

fn reduce(kind: Kind, p: Option<&str>, element: &str) -> Result<Output, Error> {
    let (value, human) = match kind {
        Kind::Psi => {
            let p = ambient(p)?;
            let tau: PsiElement = parse_element(kind, element)?;
            let r = reduce_b_cocycle(&tau, &p)?;
            let human = format!("normal form  {}\nwitness      {}\n", r.normal_form, r.witness);
            (to_value(&r), human)
        }
        Kind::Affine => {
            let p = ambient(p)?;
            let tau: AffineAut = parse_element(kind, element)?;
            let r = classify_a_cocycle(&tau, &p)?;
            let human = format!(
                "class        {}\nnormal form  {}\nwitness      {}\n",
                r.class, r.reduction.normal_form, r.reduction.witness
            );
            (to_value(&r), human)
        }
        Kind::Torus => {
            let nu: MonomialAut = parse_element(kind, element)?;
            let r = reduce_torus_cocycle(&nu)?;
            let human = format!(
                "class        {}\nnormal form  {}\nwitness      {}\n",
                r.class, r.reduction.normal_form, r.reduction.witness
            );
            (to_value(&r), human)
        }
        Kind::Halftorus => {
            let nu: HalfTorusAut = parse_element(kind, element)?;
            let nu = HalfTorusAut::new(nu.lambda, nu.m, nu.c, nu.mu, nu.e)?;
            let r = reduce_halftorus_cocycle(&nu)?;
            let human = format!(
                "class        {}\nnormal form  {}\nwitness      {}\n",
                r.class, r.reduction.normal_form, r.reduction.witness
            );
            (to_value(&r), human)
        }
        Kind::Pgl2 => {
            let a = parse_matrix(element)?;
            let r = pgl2_cocycle_epsilon(&a)?;
            let human = format!("epsilon      {}\nA conj(A)    {} * I\nconjugator   {}\nnormal form  {}\n", r.epsilon, r.s, r.r, r.normal_form);
            (to_value(&r), human)
        }
    };
    Ok(Output { command: "reduce-cocycle", value, human, ok: true })
}

fn panic_message(payload: &(dyn std::any::Any + Send)) -> String {
    payload
        .downcast_ref::<String>()
        .cloned()
        .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "unknown failure".into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    panic::set_hook(Box::new(|_| {}));
    let result = panic::catch_unwind(|| run(&cli));
    let _ = panic::take_hook();
    match result {
        Ok(Ok(out)) => {
            if cli.json {
                let doc = json!({ "schema": SCHEMA, "command": out.command, "result": out.value });
                let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                let _ = write!(std::io::stdout(), "{}", out.human);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(payload) => {
            let msg = panic_message(payload.as_ref());
            eprintln!("error: {msg}");
            // arithmetic outside the configured order cap is a domain error
            if msg.contains("configured cap") {
                ExitCode::from(3)
            } else {
                ExitCode::from(4)
            }
        }
    }
}
