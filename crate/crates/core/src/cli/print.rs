use serde::{Deserialize, Serialize};

use crate::error::{Result, WeylError};
use crate::scalar::Scalar;
use crate::weyl::{Monomial, WeylElement};
use crate::{Rational, Weyl};

/// Canonical output order: total degree descending, then `X` exponent descending.
pub fn canonical_terms<F: Scalar>(a: &WeylElement<F>) -> Vec<(Monomial, F)> {
    let mut terms: Vec<_> = a.terms().map(|(m, c)| (m, c.clone())).collect();
    terms.sort_by(|(m, _), (n, _)| n.total_degree().cmp(&m.total_degree()).then(n.i.cmp(&m.i)));
    terms
}

fn monomial_text(m: Monomial) -> String {
    let factor = |var: &str, e: u32| match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    };
    [factor("X", m.i), factor("Y", m.j)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

/// Canonical text, e.g. `X^4*Y^2 + 2*X^3*Y`; reparses to the same element.
pub fn print<F: Scalar>(a: &WeylElement<F>) -> String {
    let terms = canonical_terms(a);
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = monomial_text(m);
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    out
}

/// Exact `num/den` rendering used in JSON.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub i: u32,
    pub j: u32,
    pub coeff: String,
}

/// `{"terms": [{"i": .., "j": .., "coeff": "num/den"}, ...]}` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

pub fn to_json(a: &Weyl) -> ElementJson {
    ElementJson {
        terms: canonical_terms(a)
            .into_iter()
            .map(|(m, c)| TermJson {
                i: m.i,
                j: m.j,
                coeff: rational_string(&c),
            })
            .collect(),
    }
}

pub fn from_json(json: &ElementJson) -> Result<Weyl> {
    let mut out = Weyl::zero();
    for t in &json.terms {
        let c: Rational = t
            .coeff
            .parse()
            .map_err(|_| WeylError::MalformedInput(format!("bad coefficient {:?}", t.coeff)))?;
        out.add_term(Monomial::new(t.i, t.j), c);
    }
    Ok(out)
}
