//! Report bodies are built as JSON values; the text format is a plain
//! indented rendering of the same value so both carry identical data.

use abc_core::abc::{AbcReport, BlockAnalysis, Check, DegreeCheck, Margin};
use abc_core::nevanlinna::{CountingData, PiecewiseLinear};
use abc_core::wronskian::WronskianCertificate;
use abc_core::{Monomial, MvPoly, Rational};
use serde_json::{json, Map, Value};

use crate::instance::poly_to_value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn poly(f: &MvPoly, vars: &[String]) -> Value {
    json!({"text": f.to_text(Some(vars)), "terms": poly_to_value(f), "degree": f.total_degree()})
}

pub fn exps(m: &Monomial) -> Value {
    json!(m.exps())
}

pub fn profile(p: &PiecewiseLinear) -> Value {
    let breaks = p.breakpoints();
    let pieces: Vec<Value> = p
        .lines()
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let from = if i == 0 {
                Value::Null
            } else {
                rational(&breaks[i - 1])
            };
            json!({"from": from, "slope": l.slope, "intercept": rational(&l.intercept)})
        })
        .collect();
    Value::Array(pieces)
}

pub fn counting(c: &CountingData, radii: &[Rational]) -> Value {
    json!({
        "n_at_zero": c.n_at_zero,
        "steps": c.steps.iter().map(|(r, n)| json!([rational(r), n])).collect::<Vec<_>>(),
        "integrated": profile(&c.integrated),
        "degree": c.final_slope(),
        "samples": radii
            .iter()
            .map(|r| json!([rational(r), c.n_at(r), rational(&c.big_n_at(r))]))
            .collect::<Vec<_>>(),
    })
}

fn check(c: &Check) -> Value {
    json!({"name": c.name, "passed": c.passed, "witness": c.witness})
}

fn degree_check(d: &DegreeCheck) -> Value {
    json!({"name": d.name, "lhs": d.lhs, "rhs": d.rhs, "slack": d.slack(), "holds": d.holds()})
}

fn margin(m: &Margin) -> Value {
    json!({
        "name": m.name,
        "asymptotic_slope": m.asymptotic_slope(),
        "eventually_non_increasing": m.eventually_non_increasing(),
        "samples": m.samples.iter().map(|(r, v)| json!([rational(r), rational(v)])).collect::<Vec<_>>(),
    })
}

pub fn certificate(cert: &WronskianCertificate, members: &[usize], vars: &[String]) -> Value {
    json!({
        "functions": members,
        "gammas": cert.gammas.iter().map(exps).collect::<Vec<_>>(),
        "step_c": cert.step_c,
        "determinant": poly(&cert.determinant, vars),
    })
}

fn block(b: &BlockAnalysis, vars: &[String]) -> Vec<Value> {
    b.partition
        .i_sets
        .iter()
        .zip(&b.certificates)
        .enumerate()
        .map(|(j, (set, cert))| {
            let members = if j == 0 { &set[1..] } else { &set[..] };
            let mut v = certificate(cert, members, vars);
            v["block"] = json!(b.indices);
            v["part"] = json!(j);
            v
        })
        .collect()
}

pub fn abc_report(rep: &AbcReport, vars: &[String]) -> Value {
    let constants = rep.constants.as_ref().map(|c| {
        json!({
            "d": c.d, "c": c.c, "a": c.a, "b": c.b, "a_bar": c.a_bar, "sigma": c.sigma,
            "k": c.k, "k_bar": c.k_bar, "s_index": c.s_index,
            "gammas_used": c.gammas_used.iter().map(exps).collect::<Vec<_>>(),
        })
    });
    let partitions: Vec<Value> = rep
        .blocks
        .iter()
        .map(|b| json!({"block": b.indices, "I": b.partition.i_sets, "J": b.partition.j_sets}))
        .collect();
    json!({
        "theorem": rep.theorem,
        "hypotheses": rep.hypotheses.iter().map(check).collect::<Vec<_>>(),
        "constants": constants,
        "partitions": partitions,
        "certificates": rep.blocks.iter().flat_map(|b| block(b, vars)).collect::<Vec<_>>(),
        "degree_checks": rep.degree_checks.iter().map(degree_check).collect::<Vec<_>>(),
        "ledger": rep.ledger.iter().map(check).collect::<Vec<_>>(),
        "margins": rep.margins.iter().map(margin).collect::<Vec<_>>(),
        "fallback": rep.fallback.as_ref().map(|f| json!({"max_a_bar": f.max_a_bar, "min_b": f.min_b})),
        "notes": rep.notes,
        "verdict": rep.verdict.label(),
    })
}

pub fn header(command: &str, extra: Map<String, Value>) -> Value {
    let mut h = Map::new();
    h.insert("tool".into(), json!("abc"));
    h.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    h.insert("command".into(), json!(command));
    h.extend(extra);
    Value::Object(h)
}

/// Header and report bodies in the requested format.
pub fn render(format: Format, header: &Value, reports: &[Value]) -> String {
    match format {
        Format::Machine => {
            let doc = json!({"header": header, "reports": reports});
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            text(&mut out, 0, None, header);
            for r in reports {
                out.push_str("---\n");
                text(&mut out, 0, None, r);
            }
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => None,
    }
}

fn text(out: &mut String, indent: usize, key: Option<&str>, v: &Value) {
    let pad = "  ".repeat(indent);
    let label = key.map(|k| format!("{k}: ")).unwrap_or_default();
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{label}{s}\n"));
        return;
    }
    // a polynomial prints as its text form
    if let Some(Value::String(t)) = v.get("text").filter(|_| v.get("terms").is_some()) {
        out.push_str(&format!("{pad}{label}{t}\n"));
        return;
    }
    match v {
        Value::Object(map) => {
            let inner = if key.is_some() {
                out.push_str(&format!("{pad}{}\n", label.trim_end()));
                indent + 1
            } else {
                indent
            };
            for (k, item) in map {
                text(out, inner, Some(k), item);
            }
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{}\n", label.trim_end()));
            for item in items {
                out.push_str(&format!("{pad}  -\n"));
                text(out, indent + 2, None, item);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
