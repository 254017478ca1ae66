use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::centralizer::{
    centralizer_basis, decompose, homog_centralizer_component, xy_centralizer_basis,
    CentralizerBasis, HomogKind,
};
use crate::derivation::{
    derivation_report, gen_dixmier_pair, main_theorem_check, render_script, Automorphism,
    DixmierPair,
};
use crate::error::{Result, WeylError};
use crate::graded::{homogeneous_components, to_xy_form};
use crate::leading::{leading_data, sector};
use crate::oracle::{oracle_equal, oracle_mul_check};
use crate::poly::Poly;
use crate::{Rational, Weyl};

use super::parse::parse;
use super::print::{print, rational_string, to_json};

#[derive(Debug, Parser)]
#[command(
    name = "weyl",
    version,
    about = "Exact computations in the first Weyl algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Normalize {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Product A*B.
    Mul {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Commutator [A, B] = AB - BA.
    Comm {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Power A^N.
    Pow {
        a: String,
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Leading data v, w, ℓ, ℓ_t, ℓ_c on both sides.
    Leading {
        p: String,
        #[arg(long)]
        json: bool,
    },
    /// Homogeneous components as X^j f(XY) or f(XY) Y^-j.
    Grade {
        p: String,
        #[arg(long)]
        json: bool,
    },
    /// The homogeneous part Z(P) ∩ W_j for homogeneous P.
    HomogCentralizer {
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
        #[arg(long)]
        json: bool,
    },
    /// Basis of Z(P) up to a total-degree bound.
    Centralizer {
        p: String,
        #[arg(long)]
        max_total_degree: u32,
        #[arg(long)]
        json: bool,
    },
    /// Write R over k[S_0] S_r for the centralizer of P.
    Decompose {
        r: String,
        #[arg(long)]
        basis_of: String,
        #[arg(long)]
        max_total_degree: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check Z(P) = k[P] and the derivation ad_Q on Z(P) for [Q, P] = 1.
    CheckDixmier {
        p: String,
        q: String,
        #[arg(long)]
        max_total_degree: u32,
        #[arg(long)]
        json: bool,
    },
    /// Image of (X, Y) under a script such as "addY:Y^2;fourier;addX:-2*X".
    GenPair {
        #[arg(long)]
        script: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare A and B, or check A*B, as differential operators on k[t].
    OracleCheck {
        a: String,
        b: String,
        #[arg(long)]
        mul: bool,
    },
}

/// Result of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// 3 for internal inconsistencies, 2 for everything the caller can fix.
pub fn exit_code(e: &WeylError) -> i32 {
    match e {
        WeylError::Internal(_) => 3,
        _ => 2,
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((success, stdout)) => Outcome {
            code: if success { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn emit(json: bool, value: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    }
}

fn element(json: bool, a: &Weyl) -> String {
    emit(json, json!(to_json(a)), format!("{}\n", print(a)))
}

fn execute(command: Command) -> Result<(bool, String)> {
    match command {
        Command::Normalize { expr, json } => Ok((true, element(json, &parse(&expr)?))),
        Command::Mul { a, b, json } => Ok((true, element(json, &parse(&a)?.mul(&parse(&b)?)))),
        Command::Comm { a, b, json } => {
            Ok((true, element(json, &parse(&a)?.commutator(&parse(&b)?))))
        }
        Command::Pow { a, n, json } => Ok((true, element(json, &parse(&a)?.pow(n)))),
        Command::Leading { p, json } => leading(&parse(&p)?, json),
        Command::Grade { p, json } => grade(&parse(&p)?, json),
        Command::HomogCentralizer { p, j, json } => homog(&parse(&p)?, j, json),
        Command::Centralizer {
            p,
            max_total_degree,
            json,
        } => {
            let basis = any_basis(&parse(&p)?, max_total_degree)?;
            Ok((true, emit(json, basis_json(&basis), basis_text(&basis))))
        }
        Command::Decompose {
            r,
            basis_of,
            max_total_degree,
            json,
        } => {
            let basis = centralizer_basis(&parse(&basis_of)?, max_total_degree)?;
            let parts = decompose(&parse(&r)?, &basis)?;
            let mut text = String::new();
            for (k, t) in parts.iter().enumerate() {
                writeln!(text, "T_{k}: {}", t.render("S_0")).unwrap();
            }
            let value = json!({
                "parts": parts.iter().map(poly_json).collect::<Vec<_>>(),
            });
            Ok((true, emit(json, value, text)))
        }
        Command::CheckDixmier {
            p,
            q,
            max_total_degree,
            json,
        } => check_dixmier(&parse(&p)?, &parse(&q)?, max_total_degree, json),
        Command::GenPair { script, json } => {
            let script = parse_script(&script)?;
            let pair = gen_dixmier_pair(&script)?;
            let value = json!({
                "script": render_script(&script),
                "p": to_json(&pair.p),
                "q": to_json(&pair.q),
            });
            let text = format!("P: {}\nQ: {}\n", print(&pair.p), print(&pair.q));
            Ok((true, emit(json, value, text)))
        }
        Command::OracleCheck { a, b, mul } => {
            let (a, b) = (parse(&a)?, parse(&b)?);
            let ok = if mul {
                oracle_mul_check(&a, &b)
            } else {
                oracle_equal(&a, &b)
            };
            Ok((ok, format!("{ok}\n")))
        }
    }
}

fn poly_json(p: &Poly<Rational>) -> Value {
    json!(p.coeffs().iter().map(rational_string).collect::<Vec<_>>())
}

fn leading(p: &Weyl, json: bool) -> Result<(bool, String)> {
    let d = leading_data(p)?;
    let value = json!({
        "v": d.v,
        "vbar": d.vbar,
        "w": d.w,
        "wbar": d.wbar,
        "ell": to_json(&d.ell),
        "ellbar": to_json(&d.ellbar),
        "ell_t": to_json(&d.ell_t),
        "ell_c": rational_string(&d.ell_c),
        "monic": d.monic,
    });
    let text = format!(
        "v: {}\nvbar: {}\nw: {}\nwbar: {}\nell: {}\nellbar: {}\nell_t: {}\nell_c: {}\nmonic: {}\n",
        d.v,
        d.vbar,
        d.w,
        d.wbar,
        print(&d.ell),
        print(&d.ellbar),
        print(&d.ell_t),
        d.ell_c,
        d.monic
    );
    Ok((true, emit(json, value, text)))
}

fn grade(p: &Weyl, json: bool) -> Result<(bool, String)> {
    let mut text = String::new();
    let mut parts = Vec::new();
    for (j, h) in homogeneous_components(p) {
        let form = to_xy_form(&h)?;
        writeln!(text, "{j}: {form}").unwrap();
        parts.push(json!({ "element": to_json(&h), "form": form.to_json() }));
    }
    if parts.is_empty() {
        text.push_str("0\n");
    }
    Ok((true, emit(json, json!({ "components": parts }), text)))
}

fn homog(p: &Weyl, j: i64, json: bool) -> Result<(bool, String)> {
    let res = homog_centralizer_component(p, j)?;
    let kind = serde_json::to_value(res.kind).expect("serializable");
    let kind = kind.as_str().unwrap_or_default().to_string();
    let mut text = format!("kind: {kind}\n");
    let mut value = json!({ "kind": kind });
    if let Some(g) = &res.generator {
        let elt = crate::graded::from_xy_form(g);
        writeln!(text, "generator: {g}\nelement: {}", print(&elt)).unwrap();
        value["generator"] = json!(g.to_json());
        value["element"] = json!(to_json(&elt));
    }
    Ok((res.kind != HomogKind::Empty, emit(json, value, text)))
}

fn any_basis(p: &Weyl, bound: u32) -> Result<CentralizerBasis<Rational>> {
    if !p.is_zero() && !p.is_scalar() && sector(p)?.is_none() {
        return xy_centralizer_basis(p, bound);
    }
    centralizer_basis(p, bound)
}

fn basis_text(b: &CentralizerBasis<Rational>) -> String {
    let mut t = String::new();
    let sector = serde_json::to_value(b.sector).expect("serializable");
    writeln!(t, "P: {}", print(&b.p)).unwrap();
    writeln!(t, "bound: {}", b.bound).unwrap();
    writeln!(t, "sector: {}", sector.as_str().unwrap_or_default()).unwrap();
    writeln!(t, "direction: {}", b.direction).unwrap();
    writeln!(t, "L: {:?}", b.l_set()).unwrap();
    writeln!(t, "d: {}", b.d).unwrap();
    writeln!(t, "n0: {}", b.n0).unwrap();
    for (l, r) in &b.elements {
        writeln!(t, "R_{l}: {}", print(r)).unwrap();
    }
    for (k, s) in b.s.iter().enumerate() {
        match s {
            Some(s) => writeln!(
                t,
                "S_{k}: {} (l = {}, degree = {})",
                print(&s.element),
                s.l,
                s.degree
            )
            .unwrap(),
            None => writeln!(t, "S_{k}: none within the bound").unwrap(),
        }
    }
    writeln!(t, "truncated: {}", b.truncated).unwrap();
    t
}

fn basis_json(b: &CentralizerBasis<Rational>) -> Value {
    json!({
        "p": to_json(&b.p),
        "bound": b.bound,
        "sector": b.sector,
        "direction": b.direction,
        "L": b.l_set(),
        "d": b.d,
        "n0": b.n0,
        "elements": b.elements.iter().map(|(l, r)| json!({ "l": l, "element": to_json(r) })).collect::<Vec<_>>(),
        "s": b.s.iter().map(|s| s.as_ref().map(|s| json!({
            "l": s.l,
            "degree": s.degree,
            "element": to_json(&s.element),
        }))).collect::<Vec<_>>(),
        "truncated": b.truncated,
    })
}

fn check_dixmier(p: &Weyl, q: &Weyl, bound: u32, json: bool) -> Result<(bool, String)> {
    let pair = DixmierPair::new(p.clone(), q.clone())?;
    let main = main_theorem_check(&pair, bound)?;
    let report = derivation_report(&pair, &main.basis)?;
    let value = json!({
        "main_theorem": main.holds,
        "centralizer_dim": main.centralizer_dim,
        "powers_dim": main.powers_dim,
        "derivation": report,
    });
    let mut t = String::new();
    writeln!(t, "main_theorem: {}", main.holds).unwrap();
    writeln!(t, "centralizer_dim: {}", main.centralizer_dim).unwrap();
    writeln!(t, "powers_dim: {}", main.powers_dim).unwrap();
    writeln!(t, "J: {:?}", report.j_set).unwrap();
    for (r, (g, w)) in &report.drops {
        writeln!(t, "S_{r}: g = {g}, w = {w}").unwrap();
    }
    match report.constant_drop {
        Some(c) => writeln!(t, "constant_drop: {c}").unwrap(),
        None => writeln!(t, "constant_drop: none").unwrap(),
    }
    writeln!(t, "kernel_dim: {}", report.kernel_dim).unwrap();
    Ok((main.holds, emit(json, value, t)))
}

fn univariate(text: &str, in_x: bool) -> Result<Poly<Rational>> {
    let e = parse(text)?;
    let top = e
        .terms()
        .map(|(m, _)| if in_x { m.i } else { m.j })
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![Rational::from_integer(0.into()); top as usize + 1];
    for (m, c) in e.terms() {
        let (own, other) = if in_x { (m.i, m.j) } else { (m.j, m.i) };
        if other != 0 {
            return Err(WeylError::MalformedInput(format!(
                "{text:?} is not a polynomial in {} alone",
                if in_x { "X" } else { "Y" }
            )));
        }
        coeffs[own as usize] = c.clone();
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Parses `addY:<poly in Y>`, `addX:<poly in X>` and `fourier`, separated by `;`.
pub fn parse_script(text: &str) -> Result<Vec<Automorphism<Rational>>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|step| {
            if step == "fourier" {
                Ok(Automorphism::Fourier)
            } else if let Some(p) = step.strip_prefix("addY:") {
                Ok(Automorphism::AddPolyOfYToX(univariate(p, false)?))
            } else if let Some(p) = step.strip_prefix("addX:") {
                Ok(Automorphism::AddPolyOfXToY(univariate(p, true)?))
            } else {
                Err(WeylError::MalformedInput(format!(
                    "unknown script step {step:?}"
                )))
            }
        })
        .collect()
}
