//! JSON forms of the algebraic objects.
//!
//! - generator: `[a, i]`
//! - partition: array of generators, sorted ascending
//! - polynomial: array of rational strings in ascending powers of `z`
//! - element / vector: `{"terms": [{"coeff": poly, "monomial": partition}]}`
//! - character: `{"kind": "constant" | "geometric" | "polynomial" | "factorial" | "explicit", ...}`
//! - ideal: `{"kind": "zero"}` or `{"kind": "principal", "monic": poly}`
//!
//! Rationals are strings `"p"` or `"p/q"`. Output is canonical: reduced
//! fractions with positive denominators, sorted object keys.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::enveloping::UeaElement;
use crate::lie::{GenIndex, Partition};
use crate::poly::CenterPoly;
use crate::whittaker::{
    Character, GoodnessReport, Ideal, ModuleVector, SolveOutcome, WhittakerModule,
};
use crate::Rational;

/// Input error with the JSON path where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonError {
    pub path: String,
    pub message: String,
}

impl JsonError {
    fn at(path: impl Into<String>, message: impl fmt::Display) -> Self {
        JsonError {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "at {}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for JsonError {}

type JsonResult<T> = std::result::Result<T, JsonError>;

pub fn parse_value(text: &str, what: &str) -> JsonResult<Value> {
    serde_json::from_str(text).map_err(|e| {
        JsonError::at(
            what,
            format!(
                "invalid JSON at line {} column {}: {e}",
                e.line(),
                e.column()
            ),
        )
    })
}

fn from_value<T: for<'de> Deserialize<'de>>(v: &Value, path: &str) -> JsonResult<T> {
    T::deserialize(v).map_err(|e| JsonError::at(path, e))
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational {s:?}: expected \"p\" or \"p/q\""))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational {s:?}: expected \"p\" or \"p/q\""))?;
    if den.is_zero() {
        return Err(format!("invalid rational {s:?}: zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

fn rational_at(s: &str, path: &str) -> JsonResult<Rational> {
    parse_rational(s).map_err(|m| JsonError::at(path, m))
}

fn poly_from_strings(coeffs: &[String], path: &str) -> JsonResult<CenterPoly> {
    let cs = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| rational_at(c, &format!("{path}[{k}]")))
        .collect::<JsonResult<Vec<_>>>()?;
    Ok(CenterPoly::from_coeffs(cs))
}

pub fn poly_to_value(p: &CenterPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(format_rational(c)))
            .collect(),
    )
}

pub fn poly_from_value(v: &Value, path: &str) -> JsonResult<CenterPoly> {
    let coeffs: Vec<String> = from_value(v, path)?;
    poly_from_strings(&coeffs, path)
}

pub fn generator_to_value(g: GenIndex) -> Value {
    json!([g.a, g.i])
}

pub fn generator_from_value(v: &Value, path: &str) -> JsonResult<GenIndex> {
    let [a, i]: [i64; 2] = from_value(v, path)?;
    GenIndex::generator(a, i).map_err(|e| JsonError::at(path, e))
}

/// Parses `"a,i"` as used on the command line.
pub fn generator_from_str(s: &str) -> JsonResult<GenIndex> {
    let parse = |t: &str| t.trim().parse::<i64>().ok();
    match s.split_once(',') {
        Some((a, i)) => match (parse(a), parse(i)) {
            (Some(a), Some(i)) => GenIndex::generator(a, i).map_err(|e| JsonError::at("", e)),
            _ => Err(JsonError::at(
                "",
                format!("invalid generator {s:?}: expected \"a,i\""),
            )),
        },
        None => Err(JsonError::at(
            "",
            format!("invalid generator {s:?}: expected \"a,i\""),
        )),
    }
}

fn gens_from_pairs(pairs: &[[i64; 2]], path: &str) -> JsonResult<Vec<GenIndex>> {
    pairs
        .iter()
        .enumerate()
        .map(|(k, &[a, i])| {
            GenIndex::generator(a, i).map_err(|e| JsonError::at(format!("{path}[{k}]"), e))
        })
        .collect()
}

fn partition_from_pairs(pairs: &[[i64; 2]], path: &str) -> JsonResult<Partition> {
    let gens = gens_from_pairs(pairs, path)?;
    Partition::from_sorted(gens).map_err(|e| JsonError::at(path, e))
}

pub fn partition_to_value(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&g| generator_to_value(g)).collect())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    coeff: Vec<String>,
    #[serde(default)]
    monomial: Option<Vec<[i64; 2]>>,
    #[serde(default)]
    word: Option<Vec<[i64; 2]>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermsDoc {
    terms: Vec<TermDoc>,
}

fn terms_to_value<'a>(terms: impl Iterator<Item = (&'a Partition, &'a CenterPoly)>) -> Value {
    let terms: Vec<Value> = terms
        .map(|(l, p)| json!({ "coeff": poly_to_value(p), "monomial": partition_to_value(l) }))
        .collect();
    json!({ "terms": terms })
}

/// `(partition, coefficient)` pairs of a strict element document.
fn monomial_terms(v: &Value, path: &str) -> JsonResult<Vec<(Partition, CenterPoly)>> {
    let doc: TermsDoc = from_value(v, path)?;
    doc.terms
        .iter()
        .enumerate()
        .map(|(k, t)| {
            let tp = format!("{path}.terms[{k}]");
            if t.word.is_some() {
                return Err(JsonError::at(
                    &tp,
                    "\"word\" is only accepted by normalize; use a sorted \"monomial\"",
                ));
            }
            let mono = t
                .monomial
                .as_ref()
                .ok_or_else(|| JsonError::at(&tp, "missing field `monomial`"))?;
            Ok((
                partition_from_pairs(mono, &format!("{tp}.monomial"))?,
                poly_from_strings(&t.coeff, &format!("{tp}.coeff"))?,
            ))
        })
        .collect()
}

pub fn element_to_value(u: &UeaElement) -> Value {
    terms_to_value(u.terms())
}

pub fn element_from_value(v: &Value, path: &str) -> JsonResult<UeaElement> {
    let mut out = UeaElement::zero();
    for (k, (l, p)) in monomial_terms(v, path)?.into_iter().enumerate() {
        let term = UeaElement::monomial(p, l)
            .map_err(|e| JsonError::at(format!("{path}.terms[{k}].monomial"), e))?;
        out = &out + &term;
    }
    Ok(out)
}

/// Accepts terms with either a sorted `monomial` or an arbitrary `word`
/// (which may contain `x(1,0)`) and returns the normal form of their sum.
pub fn expression_from_value(v: &Value, path: &str) -> JsonResult<UeaElement> {
    let doc: TermsDoc = from_value(v, path)?;
    let mut out = UeaElement::zero();
    for (k, t) in doc.terms.iter().enumerate() {
        let tp = format!("{path}.terms[{k}]");
        let coeff = poly_from_strings(&t.coeff, &format!("{tp}.coeff"))?;
        let term = match (&t.monomial, &t.word) {
            (Some(m), None) => {
                let l = partition_from_pairs(m, &format!("{tp}.monomial"))?;
                UeaElement::monomial(coeff, l)
                    .map_err(|e| JsonError::at(format!("{tp}.monomial"), e))?
            }
            (None, Some(w)) => {
                let gens = gens_from_pairs(w, &format!("{tp}.word"))?;
                UeaElement::from_word(coeff, &gens)
                    .map_err(|e| JsonError::at(format!("{tp}.word"), e))?
            }
            _ => {
                return Err(JsonError::at(
                    &tp,
                    "exactly one of `monomial` or `word` is required",
                ))
            }
        };
        out = &out + &term;
    }
    Ok(out)
}

pub fn vector_to_value(v: &ModuleVector) -> Value {
    terms_to_value(v.terms())
}

pub fn vector_from_value(
    v: &Value,
    module: &WhittakerModule,
    path: &str,
) -> JsonResult<ModuleVector> {
    let terms = monomial_terms(v, path)?;
    for (k, (l, _)) in terms.iter().enumerate() {
        module
            .vector([(l.clone(), CenterPoly::one())])
            .map_err(|e| JsonError::at(format!("{path}.terms[{k}].monomial"), e))?;
    }
    module.vector(terms).map_err(|e| JsonError::at(path, e))
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum CharacterDoc {
    Constant { value: String },
    Geometric { c: String, q: String },
    Polynomial { coeffs: Vec<String> },
    Factorial {},
    Explicit { values: Vec<String>, tail: String },
}

pub fn character_to_value(phi: &Character) -> Value {
    let strs = |cs: &[Rational]| cs.iter().map(format_rational).collect::<Vec<_>>();
    match phi {
        Character::Constant(c) => json!({ "kind": "constant", "value": format_rational(c) }),
        Character::Geometric { c, q } => json!({
            "kind": "geometric", "c": format_rational(c), "q": format_rational(q)
        }),
        Character::Polynomial(cs) => json!({ "kind": "polynomial", "coeffs": strs(cs) }),
        Character::Factorial => json!({ "kind": "factorial" }),
        Character::Explicit { values, tail } => json!({
            "kind": "explicit", "values": strs(values), "tail": format_rational(tail)
        }),
    }
}

pub fn character_from_value(v: &Value, path: &str) -> JsonResult<Character> {
    let doc: CharacterDoc = from_value(v, path)?;
    let list = |cs: &[String], field: &str| -> JsonResult<Vec<Rational>> {
        cs.iter()
            .enumerate()
            .map(|(k, c)| rational_at(c, &format!("{path}.{field}[{k}]")))
            .collect()
    };
    Ok(match doc {
        CharacterDoc::Constant { value } => {
            Character::Constant(rational_at(&value, &format!("{path}.value"))?)
        }
        CharacterDoc::Geometric { c, q } => Character::Geometric {
            c: rational_at(&c, &format!("{path}.c"))?,
            q: rational_at(&q, &format!("{path}.q"))?,
        },
        CharacterDoc::Polynomial { coeffs } => Character::Polynomial(list(&coeffs, "coeffs")?),
        CharacterDoc::Factorial {} => Character::Factorial,
        CharacterDoc::Explicit { values, tail } => Character::Explicit {
            values: list(&values, "values")?,
            tail: rational_at(&tail, &format!("{path}.tail"))?,
        },
    })
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum IdealDoc {
    Zero {},
    Principal { monic: Vec<String> },
}

pub fn ideal_to_value(ideal: &Ideal) -> Value {
    match ideal {
        Ideal::Zero => json!({ "kind": "zero" }),
        Ideal::Principal(g) => json!({ "kind": "principal", "monic": poly_to_value(g) }),
    }
}

pub fn ideal_from_value(v: &Value, path: &str) -> JsonResult<Ideal> {
    let doc: IdealDoc = from_value(v, path)?;
    match doc {
        IdealDoc::Zero {} => Ok(Ideal::Zero),
        IdealDoc::Principal { monic } => {
            let mpath = format!("{path}.monic");
            let g = poly_from_strings(&monic, &mpath)?;
            if g.is_zero() {
                return Err(JsonError::at(
                    mpath,
                    "generator is zero; use {\"kind\":\"zero\"}",
                ));
            }
            Ideal::principal(g).map_err(|e| JsonError::at(mpath, e))
        }
    }
}

pub fn goodness_verdict(report: &GoodnessReport) -> &'static str {
    if report.passes_at_truncation {
        "passes at truncation"
    } else {
        "not good at truncation"
    }
}

pub fn goodness_to_value(report: &GoodnessReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "n": c.n,
                "s": c.s,
                "rows": c.rows,
                "rank": c.rank,
                "required_rank": c.n + 1,
                "det_g": format_rational(&c.det_g),
                "passes": c.passes,
            })
        })
        .collect();
    json!({
        "checks": checks,
        "max_line_index": report.max_line_index,
        "singular_at": report.singular_at,
        "passes": report.passes_at_truncation,
        "verdict": goodness_verdict(report),
    })
}

pub fn solve_to_value(out: &SolveOutcome) -> Value {
    let basis: Vec<Value> = out.basis.iter().map(vector_to_value).collect();
    json!({
        "candidates": out.candidates.len(),
        "generators": out.generators,
        "constraints": out.constraints,
        "dimension": out.basis.len(),
        "basis": basis,
    })
}

/// Pretty-printed JSON with a trailing newline; keys come out sorted.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}
