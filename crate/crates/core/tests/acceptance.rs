//! Acceptance suite: one line per criterion, nonzero exit status on any failure.
//!
//! Run with `cargo test --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::Rng;

use common::*;
use weyl_core::centralizer::{
    centralizer_basis, coordinates, degree, generated_monoid, homog_centralizer_component,
    monoid_classes, CentralizerBasis, HomogKind,
};
use weyl_core::cli::{self, from_json, parse, print, to_json};
use weyl_core::derivation::{
    ad, derivation_report, gen_dixmier_pair, main_theorem_check, no_partner_check,
    random_dixmier_pair, render_script, DixmierPair, FixtureLimits,
};
use weyl_core::graded::{from_xy_form, shift, to_xy_form, GradedForm};
use weyl_core::leading::{
    aligned, ell, ell_c, ell_side, ell_t, ell_t_side, v, w as weight, w_side, Weight,
};
use weyl_core::oracle::oracle_mul_check;
use weyl_core::{Poly, Rational, Weyl};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure!(t <= limit, "{what} took {:.2?}, limit {:.0?}", t, limit);
    Ok(())
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn c1_products() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(1);
    for k in 0..1000 {
        let (a, b) = (element(&mut rng), element(&mut rng));
        ensure!(oracle_mul_check(&a, &b), "pair {k}: ({a}) * ({b})");
    }
    within(start, secs(10), "1000 products")?;
    Ok(format!(
        "1000 pairs checked against the operator action in {:.2?}",
        start.elapsed()
    ))
}

fn c2_laws() -> Outcome {
    let start = Instant::now();
    ensure!(Weyl::y().commutator(&Weyl::x()).is_one(), "[Y, X] != 1");
    let mut rng = rng(2);
    for k in 0..300 {
        let (a, b, c) = (element(&mut rng), element(&mut rng), element(&mut rng));
        ensure!(
            a.mul(&b).mul(&c) == a.mul(&b.mul(&c)),
            "associativity fails on triple {k}"
        );
        let jac = a
            .commutator(&b.commutator(&c))
            .add(&b.commutator(&c.commutator(&a)))
            .add(&c.commutator(&a.commutator(&b)));
        ensure!(jac.is_zero(), "Jacobi fails on triple {k}");
    }
    within(start, secs(10), "300 triples")?;
    Ok(format!("[Y,X] = 1; 300 triples in {:.2?}", start.elapsed()))
}

fn c3_multiplicativity() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(3);
    let err = |e: weyl_core::WeylError| e.to_string();
    for k in 0..500 {
        let (p, q) = (nonzero_element(&mut rng), nonzero_element(&mut rng));
        let pq = p.mul(&q);
        ensure!(
            v(&pq).map_err(err)? == v(&p).map_err(err)? + v(&q).map_err(err)?,
            "v, pair {k}"
        );
        ensure!(
            weight(&pq).map_err(err)? == weight(&p).map_err(err)? + weight(&q).map_err(err)?,
            "w, pair {k}"
        );
        ensure!(
            ell(&pq).map_err(err)? == ell(&p).map_err(err)?.mul(&ell(&q).map_err(err)?),
            "ell, pair {k}"
        );
        let tt = ell_t(&p).map_err(err)?.mul(&ell_t(&q).map_err(err)?);
        ensure!(
            ell_t(&pq).map_err(err)? == ell_t(&tt).map_err(err)?,
            "ell_t, pair {k}"
        );
        ensure!(
            ell_c(&pq).map_err(err)? == ell_c(&p).map_err(err)? * ell_c(&q).map_err(err)?,
            "ell_c, pair {k}"
        );
    }
    within(start, secs(10), "500 pairs")?;
    Ok(format!(
        "five identities on 500 pairs in {:.2?}",
        start.elapsed()
    ))
}

fn c4_non_aligned() -> Outcome {
    let err = |e: weyl_core::WeylError| e.to_string();
    let (a, b) = (w(&[(2, 1, 1)]), w(&[(3, 1, 1)]));
    let c = a.commutator(&b);
    ensure!(c == w(&[(4, 1, 1)]), "[X^2 Y, X^3 Y] = {c}");
    ensure!(
        w_side(&c, weyl_core::leading::Side::Plus).map_err(err)? == Weight::new(4, 1),
        "w"
    );

    let mut rng = rng(4);
    let (mut found, mut drawn) = (0, 0);
    while found < 200 {
        drawn += 1;
        ensure!(drawn < 100_000, "too few non-aligned pairs");
        let (p, q) = (nonzero_element(&mut rng), nonzero_element(&mut rng));
        if aligned(&p, &q).map_err(err)? {
            continue;
        }
        found += 1;
        let c = p.commutator(&q);
        ensure!(!c.is_zero(), "[P, Q] = 0 for non-aligned P = {p}, Q = {q}");
        let (wp, wq) = (weight(&p).map_err(err)?, weight(&q).map_err(err)?);
        let expected = Weight::new(wp.a + wq.a - 1, wp.b + wq.b - 1);
        ensure!(
            weight(&c).map_err(err)? == expected,
            "w([P,Q]) for P = {p}, Q = {q}"
        );
    }
    Ok(format!(
        "fixed case and 200 non-aligned pairs ({drawn} drawn)"
    ))
}

fn c5_shifts() -> Outcome {
    let mut rng = rng(5);
    let mut checked = 0;
    for j in 0..=6u32 {
        for _ in 0..20 {
            let deg = rng.gen_range(0..=8);
            let f = Poly::from_coeffs((0..=deg).map(|_| coeff(&mut rng)).collect());
            let fxy = from_xy_form(&GradedForm::new(0, f.clone()));
            let shifted = from_xy_form(&GradedForm::new(0, shift(&f, j as i64)));
            let (xj, yj) = (Weyl::monomial(j, 0), Weyl::monomial(0, j));
            ensure!(fxy.mul(&xj) == xj.mul(&shifted), "f(XY) X^{j} for f = {f}");
            ensure!(yj.mul(&fxy) == shifted.mul(&yj), "Y^{j} f(XY) for f = {f}");
            checked += 1;
        }
    }
    let xy = Weyl::monomial(1, 1);
    for a in 0..=10u32 {
        let mut prod = Weyl::one();
        for t in 0..a {
            prod = prod.mul(&xy.sub(&Weyl::constant(q(t as i64, 1))));
        }
        ensure!(
            prod == Weyl::monomial(a, a),
            "product of (XY - t) for a = {a}"
        );
        let via_form = from_xy_form(&GradedForm::new(0, Poly::falling_factorial(a as usize)));
        ensure!(
            via_form == Weyl::monomial(a, a),
            "falling factorial form for a = {a}"
        );
    }
    Ok(format!(
        "{checked} (f, j) cases for both identities; falling factorials a <= 10"
    ))
}

fn c6_homogeneous() -> Outcome {
    let start = Instant::now();
    let err = |e: weyl_core::WeylError| e.to_string();
    let xy = w(&[(1, 1, 1)]);
    let cases = [
        ("XY", xy.clone()),
        ("(XY)^2", xy.pow(2)),
        ("X^2", w(&[(2, 0, 1)])),
        ("X^3", w(&[(3, 0, 1)])),
        ("X^2*Y", w(&[(2, 1, 1)])),
        ("X^3*Y", w(&[(3, 1, 1)])),
        ("X*Y^2", w(&[(1, 2, 1)])),
    ];
    let mut comparisons = 0;
    for (name, p) in &cases {
        let deg_f = to_xy_form(p).map_err(err)?.f.degree().unwrap_or(0) as u32;
        for j in -8i64..=8 {
            let res = homog_centralizer_component(p, j).map_err(err)?;
            let n = 2 * deg_f * j.unsigned_abs() as u32 + 4;
            let brute = brute_force_commutant(p, &graded_monomials(j, n));
            match res.kind {
                HomogKind::AllOfKXY => {
                    ensure!(
                        j == 0 && brute.len() as u32 == n + 1,
                        "{name}, j = {j}: k[XY]"
                    )
                }
                HomogKind::Empty => ensure!(
                    brute.is_empty(),
                    "{name}, j = {j}: brute force finds {}",
                    brute.len()
                ),
                HomogKind::Line => {
                    let g = from_xy_form(res.generator.as_ref().unwrap());
                    ensure!(
                        p.commutator(&g).is_zero(),
                        "{name}, j = {j}: generator does not commute"
                    );
                    ensure!(
                        brute.len() == 1,
                        "{name}, j = {j}: brute-force dimension {}",
                        brute.len()
                    );
                    ensure!(
                        proportional(&g, &brute[0]),
                        "{name}, j = {j}: generators differ"
                    );
                }
            }
            comparisons += 1;
        }
    }
    let p = w(&[(2, 1, 1)]);
    let g = homog_centralizer_component(&p, 2).map_err(err)?;
    ensure!(
        g.generator
            .as_ref()
            .is_some_and(|g| proportional(&from_xy_form(g), &p.pow(2))),
        "Z(X^2 Y) ∩ W_2 is not spanned by (X^2 Y)^2"
    );
    let e = homog_centralizer_component(&w(&[(3, 1, 1)]), 1).map_err(err)?;
    ensure!(e.kind == HomogKind::Empty, "Z(X^3 Y) ∩ W_1 is not empty");
    within(start, secs(30), "homogeneous suite")?;
    Ok(format!(
        "{comparisons} components agree with brute force in {:.2?}",
        start.elapsed()
    ))
}

fn check_basis_laws(b: &CentralizerBasis<Rational>) -> Result<(), String> {
    let err = |e: weyl_core::WeylError| e.to_string();
    let side = b.side();
    let dir = b.direction;
    ensure!(b.elements.get(&0).is_some_and(Weyl::is_one), "R_0 != 1");
    for (l, r) in &b.elements {
        ensure!(b.p.commutator(r).is_zero(), "R_{l} does not commute with P");
        ensure!(
            ell_t_side(r, side).map_err(err)? == Weyl::monomial(dir.a * l, dir.b * l),
            "ell_t(R_{l})"
        );
        for (h, s) in b.elements.range(l..) {
            ensure!(r.commutator(s).is_zero(), "R_{l} and R_{h} do not commute");
            if let Some(rlh) = b.elements.get(&(l + h)) {
                let prod = ell_side(r, side)
                    .map_err(err)?
                    .mul(&ell_side(s, side).map_err(err)?);
                ensure!(
                    prod == ell_side(rlh, side).map_err(err)?,
                    "ell(R_{l}) ell(R_{h})"
                );
            }
        }
    }
    Ok(())
}

fn c7_structure() -> Outcome {
    let start = Instant::now();
    let err = |e: weyl_core::WeylError| e.to_string();
    let b = centralizer_basis(&w(&[(2, 0, 1)]), 10).map_err(err)?;
    ensure!(b.dim() == 11, "Z(X^2) at 10 has dimension {}", b.dim());
    for l in 0..=10u32 {
        ensure!(
            b.elements.get(&l) == Some(&Weyl::monomial(l, 0)),
            "R_{l} != X^{l}"
        );
    }
    check_basis_laws(&b)?;

    let p = w(&[(2, 1, 1)]);
    let b = centralizer_basis(&p, 9).map_err(err)?;
    ensure!(b.dim() == 4, "Z(X^2 Y) at 9 has dimension {}", b.dim());
    for m in 0..=3 {
        ensure!(
            coordinates(&p.pow(m), &b).is_ok(),
            "(X^2 Y)^{m} not in the span"
        );
    }
    check_basis_laws(&b)?;

    let two_gen = centralizer_basis(&w(&[(4, 2, 1), (3, 1, -2)]), 15).map_err(err)?;
    check_basis_laws(&two_gen)?;
    within(start, secs(60), "structure suite")?;
    Ok(format!(
        "Z(X^2)@10, Z(X^2Y)@9 and a two-generator case (L = {:?}) in {:.2?}",
        two_gen.l_set(),
        start.elapsed()
    ))
}

fn fixture_pairs() -> Vec<(String, DixmierPair<Rational>)> {
    let mut rng = rng(8);
    let limits = FixtureLimits::default();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < 6 {
        let (script, pair) = random_dixmier_pair::<Rational, _>(&mut rng, &limits).unwrap();
        if pair.p.total_degree().unwrap() < 2 || !seen.insert(print(&pair.p)) {
            continue;
        }
        out.push((render_script(&script), pair));
    }
    // A script at the edge of the limits, reaching total degree 12.
    let script = cli::parse_script("addY:Y^2;addX:X^2;addY:Y^3").unwrap();
    out.push((render_script(&script), gen_dixmier_pair(&script).unwrap()));
    out
}

fn c8_main_theorem(pairs: &[(String, DixmierPair<Rational>)]) -> Outcome {
    let err = |e: weyl_core::WeylError| e.to_string();
    let mut lines = Vec::new();
    for (script, pair) in pairs {
        let start = Instant::now();
        let td = pair.p.total_degree().map_err(err)?;
        let rep = main_theorem_check(pair, 3 * td).map_err(err)?;
        ensure!(rep.holds, "main theorem fails for script {script}");
        within(start, secs(60), &format!("script {script}"))?;
        lines.push(format!(
            "{script} (td {td}, D {}, {:.2?})",
            3 * td,
            start.elapsed()
        ));
    }
    Ok(format!("{} pairs: {}", pairs.len(), lines.join("; ")))
}

fn random_span_element<R: Rng>(rng: &mut R, parts: &[&Weyl]) -> Weyl {
    let mut r = Weyl::zero();
    for e in parts {
        r = r.add(&e.scalar_mul(&q(rng.gen_range(-5..=5), rng.gen_range(1..=3))));
    }
    r
}

fn c9_derivation(pairs: &[(String, DixmierPair<Rational>)]) -> Outcome {
    let err = |e: weyl_core::WeylError| e.to_string();
    let mut rng = rng(9);
    let mut formula_checks = 0;
    for (script, pair) in pairs {
        let td = pair.p.total_degree().map_err(err)?;
        let basis = centralizer_basis(&pair.p, 3 * td).map_err(err)?;
        let rep = derivation_report(pair, &basis).map_err(err)?;
        ensure!(
            rep.kernel_dim == 1,
            "{script}: kernel_dim = {}",
            rep.kernel_dim
        );
        ensure!(
            !rep.j_set.is_empty(),
            "{script}: ad_Q vanishes on every S_r"
        );
        let drop = rep
            .constant_drop
            .ok_or(format!("{script}: no constant drop"))?;
        for (r, (g, wr)) in &rep.drops {
            ensure!(
                *wr as i64 - *g as i64 == drop,
                "{script}: S_{r} drop differs"
            );
        }

        let domain: Vec<&Weyl> = basis
            .elements
            .values()
            .filter(|e| {
                let img = ad(&pair.q, e);
                img.is_zero() || img.total_degree().unwrap() <= basis.bound
            })
            .collect();
        let mut done = 0;
        while done < 20 {
            let r = random_span_element(&mut rng, &domain);
            if r.is_zero() || r.is_scalar() {
                continue;
            }
            let dr = ad(&pair.q, &r);
            ensure!(!dr.is_zero(), "{script}: nonconstant R in the kernel");
            let (dr_deg, r_deg) = (
                degree(&dr, &basis).map_err(err)?,
                degree(&r, &basis).map_err(err)?,
            );
            ensure!(
                dr_deg as i64 == r_deg as i64 + drop,
                "{script}: deg dR = {dr_deg}, deg R = {r_deg}, drop {drop}"
            );
            done += 1;
            formula_checks += 1;
        }

        let low: Vec<&Weyl> = basis
            .elements
            .range(..=2 * basis.d)
            .map(|(_, e)| e)
            .collect();
        for _ in 0..3 {
            let s = random_span_element(&mut rng, &low);
            let t = Poly::from_coeffs(
                (0..=rng.gen_range(1..=3))
                    .map(|_| coeff(&mut rng))
                    .collect(),
            );
            let lhs = ad(&pair.q, &t.eval_element(&s));
            let rhs = t.derivative().eval_element(&s).mul(&ad(&pair.q, &s));
            ensure!(lhs == rhs, "{script}: chain rule fails for T = {t}");
        }
    }
    Ok(format!(
        "{} pairs: drop constant, kernel_dim 1, {formula_checks} degree-formula checks, chain rule",
        pairs.len()
    ))
}

fn c10_no_partner() -> Outcome {
    let start = Instant::now();
    let err = |e: weyl_core::WeylError| e.to_string();
    let xy = w(&[(1, 1, 1)]);
    for (name, p) in [
        ("XY", xy.clone()),
        ("(XY)^2", xy.pow(2)),
        ("(XY)^3 + XY", xy.pow(3).add(&xy)),
    ] {
        ensure!(
            no_partner_check(&p, 8).map_err(err)?,
            "a partner exists for {name}"
        );
    }
    within(start, secs(30), "no-partner suite")?;
    Ok(format!(
        "three elements of k[XY] at D = 8 in {:.2?}",
        start.elapsed()
    ))
}

fn c11_monoid() -> Outcome {
    let err = |e: weyl_core::WeylError| e.to_string();
    let mut notes = Vec::new();
    for gens in [vec![2u64, 3], vec![4], vec![6, 10, 15]] {
        let l = generated_monoid(&gens, 60);
        let info = monoid_classes(&l).map_err(err)?;
        let d = gens.iter().fold(0u64, |a, g| a.gcd(g));
        let r0 = *gens.iter().min().unwrap();
        ensure!(
            info.classes_match_gcd && info.d == d && info.r0 == r0,
            "{gens:?}: {info:?}"
        );
        for r in 0..r0 {
            let nonempty = l.iter().any(|x| x % r0 == r);
            ensure!(nonempty == (r % d == 0), "{gens:?}: class {r}");
        }
        notes.push(format!("{gens:?}: r0 {r0}, d {d}"));
    }
    Ok(notes.join("; "))
}

const CENTRALIZER_X2: &str = "\
P: X^2
bound: 4
sector: plus
direction: (1, 0)
L: {0, 1, 2, 3, 4}
d: 1
n0: 1
R_0: 1
R_1: X
R_2: X^2
R_3: X^3
R_4: X^4
S_0: X (l = 1, degree = 1)
truncated: false
";

const CHECK_DIXMIER: &str = "\
main_theorem: true
centralizer_dim: 4
powers_dim: 4
J: {0}
S_0: g = 1, w = 0
constant_drop: -1
kernel_dim: 1
";

fn run_cli(args: &[&str]) -> cli::Outcome {
    cli::run(std::iter::once("weyl").chain(args.iter().copied()))
}

fn c12_cli() -> Outcome {
    let err = |e: weyl_core::WeylError| e.to_string();
    let mut rng = rng(12);
    for k in 0..500 {
        let a = element(&mut rng);
        ensure!(parse(&print(&a)).map_err(err)? == a, "roundtrip {k}: {a}");
        ensure!(
            from_json(&to_json(&a)).map_err(err)? == a,
            "JSON roundtrip {k}: {a}"
        );
    }
    let snapshots: [(&[&str], &str); 3] = [
        (&["normalize", "Y*X"], "X*Y + 1\n"),
        (
            &["centralizer", "X^2", "--max-total-degree", "4"],
            CENTRALIZER_X2,
        ),
        (
            &["check-dixmier", "X+Y^2", "Y", "--max-total-degree", "6"],
            CHECK_DIXMIER,
        ),
    ];
    for (args, expected) in snapshots {
        let out = run_cli(args);
        ensure!(
            out.code == 0 && out.stdout == expected,
            "{args:?}: exit {}, output\n{}{}",
            out.code,
            out.stdout,
            out.stderr
        );
    }
    let json = run_cli(&["normalize", "Y*X", "--json"]).stdout;
    let value: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    ensure!(
        value
            == serde_json::json!({"terms": [
                {"i": 1, "j": 1, "coeff": "1/1"},
                {"i": 0, "j": 0, "coeff": "1/1"}
            ]}),
        "JSON snapshot: {json}"
    );
    Ok("500 roundtrips, three text snapshots, one JSON snapshot".into())
}

fn main() {
    let pairs = fixture_pairs();
    let criteria: Vec<Criterion> = vec![
        ("1 product correctness", Box::new(c1_products)),
        ("2 defining relation and algebra laws", Box::new(c2_laws)),
        ("3 multiplicativity", Box::new(c3_multiplicativity)),
        ("4 non-aligned commutators", Box::new(c4_non_aligned)),
        ("5 shift identities", Box::new(c5_shifts)),
        ("6 homogeneous centralizers", Box::new(c6_homogeneous)),
        ("7 centralizer bases", Box::new(c7_structure)),
        (
            "8 main theorem on generated pairs",
            Box::new(|| c8_main_theorem(&pairs)),
        ),
        ("9 derivation suite", Box::new(|| c9_derivation(&pairs))),
        ("10 no partner in k[XY]", Box::new(c10_no_partner)),
        ("11 monoid classes", Box::new(c11_monoid)),
        ("12 CLI roundtrip and snapshots", Box::new(c12_cli)),
    ];
    let mut failures = 0;
    for (name, f) in &criteria {
        let result = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
