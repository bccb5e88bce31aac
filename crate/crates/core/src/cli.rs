//! Command-line front end.
//!
//! Every parameter can come from a flag, from the `--input` JSON object
//! (same name, snake_case), from the JSON file named by `BLOCKALG_DEFAULTS`,
//! or from a built-in default, in that order of precedence. Resolved values
//! and their sources are echoed in each report.
//!
//! Exit codes: 0 success, 1 input error, 2 verification failure.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::enveloping::UeaElement;
use crate::json::{self, JsonError};
use crate::lie::{bracket, GenIndex, Partition};
use crate::poly::CenterPoly;
use crate::whittaker::{
    good_check, Character, DescentEnd, GeneratorCutoff, ModuleVector, Truncation, WhittakerModule,
};
use crate::Rational;

pub const DEFAULTS_ENV: &str = "BLOCKALG_DEFAULTS";

const DEFAULT_SUM_MAX: i64 = 8;
const DEFAULT_I_MAX: i64 = 10;
const DEFAULT_MAX_STEPS: i64 = 64;
const DEFAULT_PI_MIN: i64 = 0;
const DEFAULT_PART_I_MAX: i64 = 2;
const DEFAULT_LEN_MAX: i64 = 2;
const DEFAULT_N_MAX: i64 = 4;
const DEFAULT_S_MAX: i64 = 4;

/// Keys a defaults file may set.
const DEFAULTABLE: &[&str] = &[
    "sum_max",
    "i_max",
    "max_steps",
    "pi_min",
    "part_i_max",
    "len_max",
    "n_max",
    "s_max",
    "m_max",
    "character",
    "ideal",
];

#[derive(Parser, Debug)]
#[command(
    name = "blockalg",
    version,
    about = "Exact computations in the Block-type Lie algebra and its Whittaker modules"
)]
pub struct Cli {
    /// JSON object supplying parameters not given as flags
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Write the report here instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bracket of two generators, e.g. `--x 2,0 --y 0,1`
    Bracket {
        #[arg(long, allow_hyphen_values = true, value_name = "A,I")]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true, value_name = "A,I")]
        y: Option<String>,
    },
    /// PBW normal form of an element; terms may give a `word` instead of a `monomial`
    Normalize {
        /// Element JSON, or @FILE
        #[arg(long)]
        element: Option<String>,
    },
    /// Action of an element on a vector of the Whittaker module
    Act {
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        vector: Option<String>,
        #[arg(long)]
        character: Option<String>,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Basis of the Whittaker vectors supported on a truncation
    Solve {
        #[arg(long)]
        character: Option<String>,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        pi_min: Option<i64>,
        #[arg(long)]
        part_i_max: Option<i64>,
        #[arg(long)]
        len_max: Option<i64>,
        /// Defaults to max(8, 3 - pi_min)
        #[arg(long)]
        sum_max: Option<i64>,
        /// Defaults to 2 * part_i_max * len_max + 4
        #[arg(long)]
        i_max: Option<i64>,
    },
    /// Hankel rank checks for a character
    CheckCharacter {
        #[arg(long, alias = "character")]
        spec: Option<String>,
        #[arg(long)]
        n_max: Option<i64>,
        #[arg(long)]
        s_max: Option<i64>,
        /// Rows of each Hankel matrix; defaults to n + 1
        #[arg(long)]
        m_max: Option<i64>,
    },
    /// Repeatedly replace a vector by its first nonzero defect
    Descent {
        #[arg(long)]
        vector: Option<String>,
        #[arg(long)]
        character: Option<String>,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        sum_max: Option<i64>,
        #[arg(long)]
        i_max: Option<i64>,
        #[arg(long)]
        max_steps: Option<i64>,
    },
    /// Check the Whittaker vector (4 x(0,1)^2 + x(-1,2)^2 - 4 x(0,1) x(-1,2)) w' for phi = 1
    DemoCounterexample {
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        sum_max: Option<i64>,
        #[arg(long)]
        i_max: Option<i64>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    json: Value,
    text: String,
    code: i32,
}

#[derive(Clone, Copy)]
enum Source {
    Flag,
    Input,
    Defaults,
    Builtin,
}

impl Source {
    fn name(self) -> &'static str {
        match self {
            Source::Flag => "flag",
            Source::Input => "input",
            Source::Defaults => "defaults",
            Source::Builtin => "builtin",
        }
    }
}

struct Params {
    input: Map<String, Value>,
    defaults: Map<String, Value>,
    resolved: BTreeMap<String, (Value, Source)>,
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn read_object(path: &Path, what: &str) -> Result<Map<String, Value>, String> {
    let text = read_file(path)?;
    match json::parse_value(&text, what).map_err(|e| e.to_string())? {
        Value::Object(m) => Ok(m),
        _ => Err(format!("{what}: expected a JSON object")),
    }
}

impl Params {
    fn load(input: Option<&Path>, defaults: Option<&Path>) -> Result<Self, String> {
        let input = match input {
            Some(p) => read_object(p, "input")?,
            None => Map::new(),
        };
        let defaults = match defaults {
            Some(p) => read_object(p, DEFAULTS_ENV)?,
            None => Map::new(),
        };
        if let Some(k) = defaults.keys().find(|k| !DEFAULTABLE.contains(&k.as_str())) {
            return Err(format!("{DEFAULTS_ENV}: unknown key `{k}`"));
        }
        Ok(Params {
            input,
            defaults,
            resolved: BTreeMap::new(),
        })
    }

    fn lookup(&mut self, key: &str, flag: Option<Value>, builtin: Option<Value>) -> Option<Value> {
        let found = if let Some(v) = flag {
            Some((v, Source::Flag))
        } else if let Some(v) = self.input.get(key) {
            Some((v.clone(), Source::Input))
        } else if let Some(v) = self.defaults.get(key) {
            Some((v.clone(), Source::Defaults))
        } else {
            builtin.map(|v| (v, Source::Builtin))
        };
        match found {
            Some((v, src)) => {
                self.resolved.insert(key.to_string(), (v.clone(), src));
                Some(v)
            }
            None => {
                self.resolved
                    .insert(key.to_string(), (Value::Null, Source::Builtin));
                None
            }
        }
    }

    fn require(
        &mut self,
        key: &str,
        flag: Option<Value>,
        builtin: Option<Value>,
    ) -> Result<Value, String> {
        self.lookup(key, flag, builtin).ok_or_else(|| {
            format!(
                "missing parameter `{key}` (flag --{}, or key \"{key}\" in --input)",
                key.replace('_', "-")
            )
        })
    }

    /// Structured parameter given on the command line as JSON text or `@FILE`.
    fn document(
        &mut self,
        key: &str,
        flag: Option<&String>,
        builtin: Option<Value>,
    ) -> Result<Value, String> {
        let flag = flag.map(|s| flag_json(s, key)).transpose()?;
        self.require(key, flag, builtin)
    }

    fn integer(
        &mut self,
        key: &str,
        flag: Option<i64>,
        builtin: Option<i64>,
        min: i64,
    ) -> Result<i64, String> {
        let v = self.require(key, flag.map(Value::from), builtin.map(Value::from))?;
        as_integer(&v, key, min)
    }

    fn optional_integer(
        &mut self,
        key: &str,
        flag: Option<i64>,
        min: i64,
    ) -> Result<Option<i64>, String> {
        match self.lookup(key, flag.map(Value::from), None) {
            None | Some(Value::Null) => Ok(None),
            Some(v) => as_integer(&v, key, min).map(Some),
        }
    }

    fn check_input_keys(&self) -> Result<(), String> {
        match self
            .input
            .keys()
            .find(|k| !self.resolved.contains_key(k.as_str()))
        {
            Some(k) => Err(format!("input: unknown key `{k}` for this command")),
            None => Ok(()),
        }
    }

    fn echo(&self) -> (Value, Value) {
        let mut values = Map::new();
        let mut sources = Map::new();
        for (k, (v, src)) in &self.resolved {
            values.insert(k.clone(), v.clone());
            sources.insert(k.clone(), Value::from(src.name()));
        }
        (Value::Object(values), Value::Object(sources))
    }
}

fn as_integer(v: &Value, key: &str, min: i64) -> Result<i64, String> {
    match v.as_i64() {
        Some(n) if n >= min => Ok(n),
        Some(n) => Err(format!("parameter `{key}` must be >= {min} (got {n})")),
        None => Err(format!("parameter `{key}` must be an integer (got {v})")),
    }
}

fn flag_json(text: &str, key: &str) -> Result<Value, String> {
    let what = format!("--{}", key.replace('_', "-"));
    match text.strip_prefix('@') {
        Some(path) => {
            let body = read_file(Path::new(path))?;
            json::parse_value(&body, &what).map_err(|e| e.to_string())
        }
        None => json::parse_value(text, &what).map_err(|e| e.to_string()),
    }
}

fn generator_param(p: &mut Params, key: &str, flag: Option<&String>) -> Result<GenIndex, String> {
    let flag = match flag {
        Some(s) => Some(json::generator_to_value(
            json::generator_from_str(s).map_err(|e| format!("--{key}: {}", e.message))?,
        )),
        None => None,
    };
    let v = p.require(key, flag, None)?;
    json::generator_from_value(&v, key).map_err(err)
}

fn err(e: JsonError) -> String {
    e.to_string()
}

fn cutoff_params(
    p: &mut Params,
    sum_max: Option<i64>,
    i_max: Option<i64>,
) -> Result<GeneratorCutoff, String> {
    let s = p.integer("sum_max", sum_max, Some(DEFAULT_SUM_MAX), 2)?;
    let i = p.integer("i_max", i_max, Some(DEFAULT_I_MAX), 0)?;
    Ok(GeneratorCutoff::new(s, i))
}

fn module_params(
    p: &mut Params,
    character: Option<&String>,
    ideal: Option<&String>,
) -> Result<WhittakerModule, String> {
    let c = p.document("character", character, None)?;
    let c = json::character_from_value(&c, "character").map_err(err)?;
    let i = p.document("ideal", ideal, Some(json!({ "kind": "zero" })))?;
    let i = json::ideal_from_value(&i, "ideal").map_err(err)?;
    Ok(WhittakerModule::new(c, i))
}

fn cutoff_value(c: GeneratorCutoff) -> Value {
    json!({ "sum_max": c.sum_max, "i_max": c.i_max })
}

fn finish(command: &str, p: &Params, mut body: Map<String, Value>) -> Value {
    let (values, sources) = p.echo();
    body.insert("command".into(), Value::from(command));
    body.insert("parameters".into(), values);
    body.insert("parameter_sources".into(), sources);
    Value::Object(body)
}

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("report bodies are objects"),
    }
}

fn cmd_bracket(p: &mut Params, x: Option<&String>, y: Option<&String>) -> Result<Report, String> {
    let gx = generator_param(p, "x", x)?;
    let gy = generator_param(p, "y", y)?;
    p.check_input_keys()?;
    let mut u = UeaElement::zero();
    if let Some(t) = bracket(gx, gy).map_err(|e| e.to_string())? {
        let g = UeaElement::generator(t.target).map_err(|e| e.to_string())?;
        u = g.scale(&Rational::from_integer(t.coeff));
    }
    let text = format!("[{gx}, {gy}] = {u}\n");
    let body = obj(json!({ "result": json::element_to_value(&u) }));
    Ok(Report {
        json: finish("bracket", p, body),
        text,
        code: 0,
    })
}

fn cmd_normalize(p: &mut Params, element: Option<&String>) -> Result<Report, String> {
    let v = p.document("element", element, None)?;
    p.check_input_keys()?;
    let u = json::expression_from_value(&v, "element").map_err(err)?;
    let height = u.height().ok();
    let body = obj(json!({ "result": json::element_to_value(&u), "height": height }));
    Ok(Report {
        json: finish("normalize", p, body),
        text: format!("{u}\n"),
        code: 0,
    })
}

fn cmd_act(
    p: &mut Params,
    element: Option<&String>,
    vector: Option<&String>,
    character: Option<&String>,
    ideal: Option<&String>,
) -> Result<Report, String> {
    let module = module_params(p, character, ideal)?;
    let e = p.document("element", element, None)?;
    let v = p.document("vector", vector, None)?;
    p.check_input_keys()?;
    let u = json::element_from_value(&e, "element").map_err(err)?;
    let v = json::vector_from_value(&v, &module, "vector").map_err(err)?;
    let r = module.act_element(&u, &v);
    let body = obj(json!({ "result": json::vector_to_value(&r) }));
    Ok(Report {
        json: finish("act", p, body),
        text: format!("{r}\n"),
        code: 0,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    p: &mut Params,
    character: Option<&String>,
    ideal: Option<&String>,
    pi_min: Option<i64>,
    part_i_max: Option<i64>,
    len_max: Option<i64>,
    sum_max: Option<i64>,
    i_max: Option<i64>,
) -> Result<Report, String> {
    let module = module_params(p, character, ideal)?;
    let pi_min = p.integer("pi_min", pi_min, Some(DEFAULT_PI_MIN), i64::MIN)?;
    if pi_min > 0 {
        return Err(format!("parameter `pi_min` must be <= 0 (got {pi_min})"));
    }
    let part_i_max = p.integer("part_i_max", part_i_max, Some(DEFAULT_PART_I_MAX), 0)?;
    let len_max = p.integer("len_max", len_max, Some(DEFAULT_LEN_MAX), 1)?;
    let trunc = Truncation::new(pi_min, part_i_max, len_max as usize);
    // the built-in cutoff grows with the truncation
    let s = p.integer(
        "sum_max",
        sum_max,
        Some(DEFAULT_SUM_MAX.max(trunc.sufficient_sum_max())),
        2,
    )?;
    let i = p.integer("i_max", i_max, Some(trunc.default_i_max()), 0)?;
    let cutoff = GeneratorCutoff::new(s, i);
    p.check_input_keys()?;
    let out = module
        .solve_whittaker(&trunc, cutoff)
        .map_err(|e| e.to_string())?;
    let mut text = format!(
        "candidates: {}\ngenerators: {}\nconstraints: {}\ndimension: {}\n",
        out.candidates.len(),
        out.generators,
        out.constraints,
        out.basis.len()
    );
    for (k, b) in out.basis.iter().enumerate() {
        let _ = writeln!(text, "basis[{k}]: {b}");
    }
    let mut body = obj(json::solve_to_value(&out));
    body.insert(
        "truncation".into(),
        json!({ "pi_min": pi_min, "part_i_max": part_i_max, "len_max": len_max }),
    );
    body.insert("cutoff".into(), cutoff_value(cutoff));
    body.insert(
        "sufficient_sum_max".into(),
        trunc.sufficient_sum_max().into(),
    );
    body.insert("verdicts".into(), "at cutoff".into());
    Ok(Report {
        json: finish("solve", p, body),
        text,
        code: 0,
    })
}

fn cmd_check_character(
    p: &mut Params,
    spec: Option<&String>,
    n_max: Option<i64>,
    s_max: Option<i64>,
    m_max: Option<i64>,
) -> Result<Report, String> {
    let c = match spec {
        Some(s) => p.require("spec", Some(flag_json(s, "spec")?), None)?,
        None => match p
            .input
            .get("spec")
            .or_else(|| p.input.get("character"))
            .cloned()
        {
            Some(v) => {
                let key = if p.input.contains_key("spec") {
                    "spec"
                } else {
                    "character"
                };
                p.resolved.insert(key.into(), (v.clone(), Source::Input));
                v
            }
            None => p.require("character", None, None)?,
        },
    };
    let phi = json::character_from_value(&c, "spec").map_err(err)?;
    let n_max = p.integer("n_max", n_max, Some(DEFAULT_N_MAX), 1)?;
    let s_max = p.integer("s_max", s_max, Some(DEFAULT_S_MAX), 1)?;
    let m_max = p.optional_integer("m_max", m_max, 1)?;
    p.check_input_keys()?;
    let report = good_check(
        &phi,
        n_max as usize,
        s_max as usize,
        m_max.map(|m| m as usize),
    )
    .map_err(|e| e.to_string())?;
    let verdict = json::goodness_verdict(&report);
    let mut text = String::new();
    for c in &report.checks {
        let _ = writeln!(
            text,
            "n={} s={} rows={} rank={} det_G={} {}",
            c.n,
            c.s,
            c.rows,
            c.rank,
            c.det_g,
            if c.passes { "pass" } else { "fail" }
        );
    }
    if let Some(m) = report.singular_at {
        let _ = writeln!(text, "phi vanishes at c_{m}");
    }
    let _ = writeln!(text, "verdict: {verdict}");
    let body = obj(json::goodness_to_value(&report));
    Ok(Report {
        json: finish("check-character", p, body),
        text,
        code: 0,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_descent(
    p: &mut Params,
    vector: Option<&String>,
    character: Option<&String>,
    ideal: Option<&String>,
    sum_max: Option<i64>,
    i_max: Option<i64>,
    max_steps: Option<i64>,
) -> Result<Report, String> {
    let module = module_params(p, character, ideal)?;
    let v = p.document("vector", vector, None)?;
    let cutoff = cutoff_params(p, sum_max, i_max)?;
    let max_steps = p.integer("max_steps", max_steps, Some(DEFAULT_MAX_STEPS), 0)?;
    p.check_input_keys()?;
    let v = json::vector_from_value(&v, &module, "vector").map_err(err)?;
    let r = module
        .descent(&v, cutoff, max_steps as usize)
        .map_err(|e| e.to_string())?;
    let mut text = format!("start: mindeg1={} ell1={}\n", r.start.0, r.start.1);
    let steps: Vec<Value> = r
        .steps
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let _ = writeln!(
                text,
                "step {}: {} -> mindeg1={} ell1={} terms={}",
                k + 1,
                s.generator,
                s.mindeg1,
                s.ell1,
                s.terms
            );
            json!({
                "generator": json::generator_to_value(s.generator),
                "mindeg1": s.mindeg1,
                "ell1": s.ell1,
                "terms": s.terms,
            })
        })
        .collect();
    let (outcome, result, code, extra) = match &r.end {
        DescentEnd::Whittaker(w) => ("whittaker", w, 0, Value::Null),
        DescentEnd::Exhausted(w) => ("exhausted", w, 2, Value::Null),
        DescentEnd::MeasureViolation {
            step,
            before,
            after,
            vector,
        } => (
            "measure_violation",
            vector,
            2,
            json!({
                "step": step,
                "before": { "mindeg1": before.0, "ell1": before.1 },
                "after": { "mindeg1": after.0, "ell1": after.1 },
            }),
        ),
    };
    let _ = writeln!(text, "outcome: {outcome}\nresult: {result}");
    let body = obj(json!({
        "start": { "mindeg1": r.start.0, "ell1": r.start.1 },
        "steps": steps,
        "outcome": outcome,
        "violation": extra,
        "vacuum_multiple": result.is_vacuum_multiple(),
        "result": json::vector_to_value(result),
    }));
    Ok(Report {
        json: finish("descent", p, body),
        text,
        code,
    })
}

/// `(4 x(0,1)^2 + x(-1,2)^2 - 4 x(0,1) x(-1,2)) w'`.
pub fn counterexample_vector(module: &WhittakerModule) -> ModuleVector {
    let a = GenIndex::new(0, 1);
    let b = GenIndex::new(-1, 2);
    let part = |gs: Vec<GenIndex>| Partition::from_unsorted(gs);
    module
        .vector([
            (part(vec![a, a]), CenterPoly::from_int(4)),
            (part(vec![b, b]), CenterPoly::from_int(1)),
            (part(vec![a, b]), CenterPoly::from_int(-4)),
        ])
        .expect("parts lie in b-")
}

fn cmd_demo(
    p: &mut Params,
    ideal: Option<&String>,
    sum_max: Option<i64>,
    i_max: Option<i64>,
) -> Result<Report, String> {
    let i = p.document(
        "ideal",
        ideal,
        Some(json!({ "kind": "principal", "monic": ["-1", "1"] })),
    )?;
    let ideal = json::ideal_from_value(&i, "ideal").map_err(err)?;
    let cutoff = cutoff_params(p, sum_max, i_max)?;
    p.check_input_keys()?;
    let phi = Character::constant(Rational::from_integer(1.into()));
    let module = WhittakerModule::new(phi.clone(), ideal);
    let v = counterexample_vector(&module);
    let check = module.is_whittaker(&v, cutoff);
    let whittaker = check.passes();
    let scalar = v.is_vacuum_multiple();
    let code = if whittaker && !scalar { 0 } else { 2 };
    let (failing, defect) = match &check.witness {
        Some((x, d)) => (json::generator_to_value(*x), json::vector_to_value(d)),
        None => (Value::Null, Value::Null),
    };
    let mut text = format!("vector: {v}\ngenerators checked: {}\n", check.checked);
    if let Some((x, d)) = &check.witness {
        let _ = writeln!(text, "nonzero defect at {x}: {d}");
    }
    let _ = writeln!(
        text,
        "verdict: {}",
        if code == 0 {
            "Whittaker vector, not a multiple of w'"
        } else {
            "verification failed"
        }
    );
    let body = obj(json!({
        "character": json::character_to_value(&phi),
        "cutoff": cutoff_value(cutoff),
        "vector": json::vector_to_value(&v),
        "generators_checked": check.checked,
        "all_defects_zero": whittaker,
        "failing_generator": failing,
        "failing_defect": defect,
        "vacuum_multiple": scalar,
        "verdicts": "at cutoff",
    }));
    Ok(Report {
        json: finish("demo-counterexample", p, body),
        text,
        code,
    })
}

fn dispatch(cli: &Cli, defaults: Option<&Path>) -> Result<Report, String> {
    let mut p = Params::load(cli.input.as_deref(), defaults)?;
    let p = &mut p;
    match &cli.command {
        Command::Bracket { x, y } => cmd_bracket(p, x.as_ref(), y.as_ref()),
        Command::Normalize { element } => cmd_normalize(p, element.as_ref()),
        Command::Act {
            element,
            vector,
            character,
            ideal,
        } => cmd_act(
            p,
            element.as_ref(),
            vector.as_ref(),
            character.as_ref(),
            ideal.as_ref(),
        ),
        Command::Solve {
            character,
            ideal,
            pi_min,
            part_i_max,
            len_max,
            sum_max,
            i_max,
        } => cmd_solve(
            p,
            character.as_ref(),
            ideal.as_ref(),
            *pi_min,
            *part_i_max,
            *len_max,
            *sum_max,
            *i_max,
        ),
        Command::CheckCharacter {
            spec,
            n_max,
            s_max,
            m_max,
        } => cmd_check_character(p, spec.as_ref(), *n_max, *s_max, *m_max),
        Command::Descent {
            vector,
            character,
            ideal,
            sum_max,
            i_max,
            max_steps,
        } => cmd_descent(
            p,
            vector.as_ref(),
            character.as_ref(),
            ideal.as_ref(),
            *sum_max,
            *i_max,
            *max_steps,
        ),
        Command::DemoCounterexample {
            ideal,
            sum_max,
            i_max,
        } => cmd_demo(p, ideal.as_ref(), *sum_max, *i_max),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, defaults: Option<&Path>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let report = match dispatch(&cli, defaults) {
        Ok(r) => r,
        Err(msg) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
            }
        }
    };
    let body = match cli.format {
        Format::Json => json::render(&report.json),
        Format::Text => report.text,
    };
    let mut out = Outcome {
        code: report.code,
        stdout: String::new(),
        stderr: String::new(),
    };
    if report.code == 2 {
        out.stderr = "verification failed\n".to_string();
    }
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                out.code = 1;
                out.stderr = format!("error: cannot write {}: {e}\n", path.display());
            }
        }
        None => out.stdout = body,
    }
    out
}
