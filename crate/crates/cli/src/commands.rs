use std::str::FromStr;

use abc_core::abc::{
    default_radii, verify_abc_first_at, verify_abc_second_at, verify_basic_abc_at,
    verify_corollaries_at, AbcReport, Verdict,
};
use abc_core::hasse::hasse_derivative;
use abc_core::mvpoly::squarefree_factor_oracle;
use abc_core::nevanlinna::{counting, log_gauss_norm, norm_profile, truncated_counting};
use abc_core::radicals::{higher_radical, radical, square_free_part, trunc_gcd};
use abc_core::wronskian::{find_certificate, index_of_independence};
use abc_core::{Error, Monomial, MvPoly, Rational};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::corpus::mixed_corpus;
use crate::error::CliError;
use crate::instance::Instance;
use crate::report::{self, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Norm,
    Counting,
    Radical,
    Sqfree,
    Hasse,
    Wronskian,
    Independence,
    VerifyBasic,
    VerifyAbc1,
    VerifyAbc2,
    Corollaries,
    CorpusRun,
}

pub const COMMANDS: [(&str, Command); 12] = [
    ("norm", Command::Norm),
    ("counting", Command::Counting),
    ("radical", Command::Radical),
    ("sqfree", Command::Sqfree),
    ("hasse", Command::Hasse),
    ("wronskian", Command::Wronskian),
    ("independence", Command::Independence),
    ("verify-basic", Command::VerifyBasic),
    ("verify-abc1", Command::VerifyAbc1),
    ("verify-abc2", Command::VerifyAbc2),
    ("corollaries", Command::Corollaries),
    ("corpus-run", Command::CorpusRun),
];

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        COMMANDS
            .iter()
            .find(|(name, _)| *name == s)
            .map(|(_, c)| *c)
            .ok_or_else(|| CliError::Usage(format!("unknown command {s:?}")))
    }
}

impl Command {
    pub fn name(self) -> &'static str {
        COMMANDS.iter().find(|(_, c)| *c == self).expect("listed").0
    }
}

/// Command-line overrides; unset fields fall back to instance parameters.
#[derive(Clone, Debug)]
pub struct Options {
    pub rho: Option<Vec<Rational>>,
    pub ell: Option<u64>,
    pub s: Option<u32>,
    pub k: Option<usize>,
    pub seed: u64,
    pub max_n: usize,
    pub oracle_degree_cap: u32,
    /// Instances generated by `corpus-run`.
    pub count: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            rho: None,
            ell: None,
            s: None,
            k: None,
            seed: 7,
            max_n: 5,
            oracle_degree_cap: 8,
            count: 24,
        }
    }
}

pub struct Outcome {
    pub body: Value,
    pub exit: i32,
}

pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Holds => 0,
        Verdict::HypothesisViolated => 2,
        Verdict::Violated => 1,
    }
}

fn radii(inst: &Instance, opts: &Options) -> Vec<Rational> {
    opts.rho
        .clone()
        .or_else(|| inst.params.rho.clone())
        .unwrap_or_else(default_radii)
}

fn per_poly<F>(inst: &Instance, mut f: F) -> Result<Value, CliError>
where
    F: FnMut(&MvPoly) -> Result<Value, CliError>,
{
    let items = inst
        .polys
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut v = f(p)?;
            v["index"] = json!(i);
            v["input"] = report::poly(p, &inst.vars);
            Ok(v)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Value::Array(items))
}

fn with_id(id: &str, v: Value) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), json!(id));
    if let Value::Object(rest) = v {
        m.extend(rest);
    }
    Value::Object(m)
}

fn abc_outcome(inst: &Instance, rep: &AbcReport) -> Outcome {
    let body = with_id(&inst.id, report::abc_report(rep, &inst.vars));
    Outcome {
        exit: exit_code(rep.verdict),
        body,
    }
}

/// Oracle factors of `f` when its degree is within the cap.
fn oracle_value(f: &MvPoly, cap: u32, vars: &[String]) -> Result<Value, CliError> {
    if f.total_degree() > cap {
        return Ok(Value::Null);
    }
    match squarefree_factor_oracle(f, cap) {
        Ok(factors) => Ok(Value::Array(
            factors
                .iter()
                .map(|(q, e)| json!({"factor": q.to_text(Some(vars)), "multiplicity": e}))
                .collect(),
        )),
        Err(Error::Inseparable) => Ok(json!("inseparable")),
        Err(e) => Err(e.into()),
    }
}

fn step_for(fs: &[MvPoly]) -> Result<(u64, Option<u32>), CliError> {
    let field = fs[0].field();
    if !field.is_char_p() {
        return Ok((1, None));
    }
    let s = index_of_independence(fs)?.index_s;
    Ok((field.p().pow(s - 1), Some(s)))
}

pub fn run_command(cmd: Command, inst: &Instance, opts: &Options) -> Result<Outcome, CliError> {
    let vars = &inst.vars;
    let ell = opts.ell.or(inst.params.ell);
    let s = opts.s.or(inst.params.s);
    let k = opts.k.or(inst.params.k);
    let cap = inst.params.degree_cap.unwrap_or(opts.oracle_degree_cap);
    let rs = radii(inst, opts);
    let ok = |items: Value| Outcome {
        body: json!({"id": inst.id, "results": items}),
        exit: 0,
    };
    if inst.polys.is_empty() && cmd != Command::CorpusRun {
        return Err(CliError::Validation(format!("{}: no polynomials", inst.id)));
    }
    match cmd {
        Command::Norm => per_poly(inst, |f| {
            let samples: Vec<Value> = rs
                .iter()
                .map(|r| json!([report::rational(r), log_gauss_norm(f, r).to_string()]))
                .collect();
            Ok(json!({"profile": report::profile(&norm_profile(f)?), "samples": samples}))
        })
        .map(ok),
        Command::Counting => per_poly(inst, |f| {
            let data = match ell {
                Some(l) => truncated_counting(f, l)?,
                None => counting(f)?,
            };
            let mut v = report::counting(&data, &rs);
            v["ell"] = json!(ell);
            Ok(v)
        })
        .map(ok),
        Command::Radical => per_poly(inst, |f| {
            let r = match s {
                Some(level) => higher_radical(f, level)?,
                None => radical(f)?,
            };
            Ok(json!({"s": s, "result": report::poly(&r, vars), "oracle": oracle_value(f, cap, vars)?}))
        })
        .map(ok),
        Command::Sqfree => per_poly(inst, |f| {
            let r = match ell {
                Some(l) => trunc_gcd(f, l)?,
                None => square_free_part(f)?,
            };
            Ok(json!({"ell": ell, "result": report::poly(&r, vars), "oracle": oracle_value(f, cap, vars)?}))
        })
        .map(ok),
        Command::Hasse => {
            let m = vars.len();
            let gammas: Vec<Monomial> = match &inst.params.gammas {
                Some(gs) => {
                    if gs.iter().any(|g| g.len() != m) {
                        return Err(CliError::Validation("gamma length differs from the variable count".into()));
                    }
                    gs.iter().map(|g| Monomial::new(g.clone())).collect()
                }
                None => (0..m).map(|i| Monomial::unit(m, i, 1)).collect(),
            };
            per_poly(inst, |f| {
                let ds = gammas
                    .iter()
                    .map(|g| Ok(json!({"gamma": report::exps(g), "result": report::poly(&hasse_derivative(f, g)?, vars)})))
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(json!({"derivatives": ds}))
            })
            .map(ok)
        }
        Command::Wronskian => {
            let (c, s_index) = step_for(&inst.polys)?;
            let cert = find_certificate(&inst.polys, c)?;
            let members: Vec<usize> = (0..inst.polys.len()).collect();
            let mut v = report::certificate(&cert, &members, vars);
            v["s_index"] = json!(s_index);
            v["verified"] = json!(cert.verify()?);
            Ok(ok(v))
        }
        Command::Independence => {
            let res = index_of_independence(&inst.polys)?;
            let relation = res.dependent_over.as_ref().map(|(level, qs)| {
                json!({"level": level, "coefficients": qs.iter().map(|q| report::poly(q, vars)).collect::<Vec<_>>()})
            });
            let p = inst.field.characteristic();
            let c = if p == 0 { 1 } else { p.pow(res.index_s - 1) };
            Ok(ok(json!({
                "index_s": res.index_s,
                "step_c": c,
                "level_cap": res.level_cap,
                "relation_below": relation,
            })))
        }
        Command::VerifyBasic => {
            if inst.polys.len() != 2 {
                return Err(CliError::Validation(format!(
                    "{}: verify-basic takes exactly two polynomials f0, f1",
                    inst.id
                )));
            }
            let rep = verify_basic_abc_at(&inst.polys[0], &inst.polys[1], &rs)?;
            Ok(abc_outcome(inst, &rep))
        }
        Command::VerifyAbc1 => Ok(abc_outcome(inst, &verify_abc_first_at(&inst.polys, &rs)?)),
        Command::VerifyAbc2 => Ok(abc_outcome(inst, &verify_abc_second_at(&inst.polys, k, &rs)?)),
        Command::Corollaries => Ok(abc_outcome(inst, &verify_corollaries_at(&inst.polys, &rs)?)),
        Command::CorpusRun => Err(CliError::Usage("corpus-run does not take an instance".into())),
    }
}

/// Every applicable verifier on one instance.
pub fn verify_all(inst: &Instance, opts: &Options) -> Outcome {
    let mut body = Map::new();
    body.insert("id".into(), json!(inst.id));
    body.insert("instance".into(), inst.to_value());
    let texts: Vec<String> = inst
        .polys
        .iter()
        .map(|f| f.to_text(Some(&inst.vars)))
        .collect();
    body.insert("functions".into(), json!(texts));
    let mut exit = 0;
    let mut cmds = vec![Command::VerifyAbc1, Command::VerifyAbc2];
    if !inst.field.is_char_p() {
        cmds.push(Command::Corollaries);
    }
    for cmd in cmds {
        let v = match run_command(cmd, inst, opts) {
            Ok(out) => {
                if out.exit == 1 {
                    exit = 1;
                }
                let mut v = out.body;
                if let Value::Object(m) = &mut v {
                    m.shift_remove("id");
                }
                v
            }
            Err(e) => {
                exit = 1;
                json!({"error": e.to_string()})
            }
        };
        body.insert(cmd.name().into(), v);
    }
    Outcome {
        body: Value::Object(body),
        exit,
    }
}

/// Generates the mixed corpus for `opts.seed` and verifies it in parallel;
/// reports come back ordered by instance id.
pub fn corpus_run(opts: &Options) -> Result<(Vec<Value>, i32), CliError> {
    let corpus = mixed_corpus(opts.seed, opts.count, opts.max_n, 4)?;
    let mut results: Vec<(String, Outcome)> = corpus
        .par_iter()
        .map(|inst| (inst.id.clone(), verify_all(inst, opts)))
        .collect();
    results.sort_by(|a, b| a.0.cmp(&b.0));
    let exit = results.iter().map(|(_, o)| o.exit).max().unwrap_or(0);
    Ok((results.into_iter().map(|(_, o)| o.body).collect(), exit))
}

pub fn render(
    format: Format,
    cmd: Command,
    header_extra: Map<String, Value>,
    reports: &[Value],
) -> String {
    report::render(format, &report::header(cmd.name(), header_extra), reports)
}
