//! Instance documents: one JSON object (or an array of them) naming a field,
//! variables, polynomials in structured form and optional task parameters.

use abc_core::{FieldKind, FieldSpec, Monomial, MvPoly, Rational};
use serde_json::{json, Map, Value};

use crate::error::CliError;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params {
    pub ell: Option<u64>,
    pub s: Option<u32>,
    pub k: Option<usize>,
    pub rho: Option<Vec<Rational>>,
    pub degree_cap: Option<u32>,
    /// Multi-indices for the `hasse` command.
    pub gammas: Option<Vec<Vec<u32>>>,
    /// Keys this tool does not interpret, kept in document order.
    pub extra: Map<String, Value>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub id: String,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub polys: Vec<MvPoly>,
    pub params: Params,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

pub fn parse_rational(text: &str) -> Result<Rational, CliError> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: i64 = num
        .parse()
        .map_err(|_| invalid(format!("bad rational {text:?}")))?;
    let den: i64 = den
        .parse()
        .map_err(|_| invalid(format!("bad rational {text:?}")))?;
    if den == 0 {
        return Err(invalid(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num.into(), den.into()))
}

/// Comma-separated rationals, as given to `--rho`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(parse_rational)
        .collect()
}

fn as_u64(v: &Value, what: &str) -> Result<u64, CliError> {
    v.as_u64()
        .ok_or_else(|| invalid(format!("{what} must be a non-negative integer")))
}

fn parse_field(v: &Value) -> Result<FieldSpec, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| invalid("\"field\" must be an object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| invalid("\"field.kind\" must be a string"))?;
    let kind = FieldKind::from_name(kind)
        .ok_or_else(|| invalid(format!("unknown field kind {kind:?}")))?;
    let p = as_u64(
        obj.get("p").ok_or_else(|| invalid("\"field.p\" missing"))?,
        "\"field.p\"",
    )?;
    FieldSpec::new(kind, p).map_err(|e| invalid(format!("field: {e}")))
}

/// A polynomial is either a list of `[exponents, coefficient]` terms or a
/// string in the polynomial text grammar over `vars`.
fn parse_poly(
    field: FieldSpec,
    vars: &[String],
    v: &Value,
    idx: usize,
) -> Result<MvPoly, CliError> {
    if let Some(text) = v.as_str() {
        return MvPoly::parse(field, vars, text).map_err(|e| invalid(format!("polys[{idx}]: {e}")));
    }
    let nvars = vars.len();
    let terms = v.as_array().ok_or_else(|| {
        invalid(format!(
            "polys[{idx}] must be a list of [exponents, coefficient] terms or a polynomial string"
        ))
    })?;
    let mut out = Vec::with_capacity(terms.len());
    for (t, term) in terms.iter().enumerate() {
        let pair = term.as_array().filter(|a| a.len() == 2);
        let (exps, coeff) = match pair {
            Some(a) => (&a[0], &a[1]),
            None => {
                return Err(invalid(format!(
                    "polys[{idx}][{t}] must be [exponents, coefficient]"
                )))
            }
        };
        let exps = exps
            .as_array()
            .ok_or_else(|| invalid(format!("polys[{idx}][{t}]: exponents must be a list")))?;
        if exps.len() != nvars {
            return Err(invalid(format!(
                "polys[{idx}][{t}]: {} exponents for {nvars} variables",
                exps.len()
            )));
        }
        let exps: Vec<u32> = exps
            .iter()
            .map(|e| {
                as_u64(e, "exponent")
                    .and_then(|e| u32::try_from(e).map_err(|_| invalid("exponent too large")))
            })
            .collect::<Result<_, _>>()?;
        let coeff = coeff
            .as_str()
            .ok_or_else(|| invalid(format!("polys[{idx}][{t}]: coefficient must be a string")))?;
        let c = field
            .parse_coeff(coeff)
            .map_err(|e| invalid(format!("polys[{idx}][{t}]: coefficient {coeff:?}: {e}")))?;
        out.push((Monomial::new(exps), c));
    }
    MvPoly::from_terms(field, nvars, out).map_err(|e| invalid(format!("polys[{idx}]: {e}")))
}

fn parse_params(v: Option<&Value>) -> Result<Params, CliError> {
    let mut params = Params::default();
    let Some(v) = v else {
        return Ok(params);
    };
    let obj = v
        .as_object()
        .ok_or_else(|| invalid("\"params\" must be an object"))?;
    for (key, val) in obj {
        match key.as_str() {
            "ell" => params.ell = Some(as_u64(val, "params.ell")?),
            "s" => params.s = Some(as_u64(val, "params.s")? as u32),
            "k" => params.k = Some(as_u64(val, "params.k")? as usize),
            "degree_cap" => params.degree_cap = Some(as_u64(val, "params.degree_cap")? as u32),
            "rho" => {
                let list = val
                    .as_array()
                    .ok_or_else(|| invalid("params.rho must be a list"))?;
                let rhos = list
                    .iter()
                    .map(|r| {
                        r.as_str()
                            .ok_or_else(|| invalid("params.rho entries are strings"))
                            .and_then(parse_rational)
                    })
                    .collect::<Result<_, _>>()?;
                params.rho = Some(rhos);
            }
            "gammas" => {
                let list = val
                    .as_array()
                    .ok_or_else(|| invalid("params.gammas must be a list"))?;
                let mut gammas = Vec::new();
                for g in list {
                    let g = g
                        .as_array()
                        .ok_or_else(|| invalid("params.gammas entries are lists"))?;
                    gammas.push(
                        g.iter()
                            .map(|e| as_u64(e, "gamma").map(|e| e as u32))
                            .collect::<Result<_, _>>()?,
                    );
                }
                params.gammas = Some(gammas);
            }
            _ => {
                params.extra.insert(key.clone(), val.clone());
            }
        }
    }
    Ok(params)
}

fn instance_from_value(v: &Value) -> Result<Instance, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| invalid("an instance must be an object"))?;
    let id = obj
        .get("id")
        .and_then(Value::as_str)
        .ok_or_else(|| invalid("\"id\" must be a string"))?
        .to_string();
    let ctx = |e: CliError| match e {
        CliError::Validation(m) => CliError::Validation(format!("{id}: {m}")),
        other => other,
    };
    let field = obj
        .get("field")
        .ok_or_else(|| invalid("\"field\" missing"))
        .and_then(parse_field)
        .map_err(ctx)?;
    let vars: Vec<String> = obj
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| ctx(invalid("\"vars\" must be a list")))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| ctx(invalid("variable names are strings")))
        })
        .collect::<Result<_, _>>()?;
    if vars.is_empty() {
        return Err(ctx(invalid("at least one variable is needed")));
    }
    let polys = obj
        .get("polys")
        .and_then(Value::as_array)
        .ok_or_else(|| ctx(invalid("\"polys\" must be a list")))?
        .iter()
        .enumerate()
        .map(|(i, p)| parse_poly(field, &vars, p, i))
        .collect::<Result<Vec<_>, _>>()
        .map_err(ctx)?;
    let params = parse_params(obj.get("params")).map_err(ctx)?;
    Ok(Instance {
        id,
        field,
        vars,
        polys,
        params,
    })
}

fn parse_json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

pub fn parse_instance(text: &str) -> Result<Instance, CliError> {
    instance_from_value(&parse_json(text)?)
}

/// A single instance or an array of them.
pub fn parse_documents(text: &str) -> Result<Vec<Instance>, CliError> {
    match parse_json(text)? {
        Value::Array(items) => items.iter().map(instance_from_value).collect(),
        v => Ok(vec![instance_from_value(&v)?]),
    }
}

pub fn poly_to_value(f: &MvPoly) -> Value {
    // highest terms first, as they are printed
    Value::Array(
        f.terms()
            .map(|(m, c)| json!([m.exps(), c.to_string()]))
            .collect(),
    )
}

impl Instance {
    pub fn to_value(&self) -> Value {
        let mut params = Map::new();
        let p = &self.params;
        if let Some(v) = p.ell {
            params.insert("ell".into(), json!(v));
        }
        if let Some(v) = p.s {
            params.insert("s".into(), json!(v));
        }
        if let Some(v) = p.k {
            params.insert("k".into(), json!(v));
        }
        if let Some(v) = &p.rho {
            params.insert(
                "rho".into(),
                json!(v.iter().map(|r| r.to_string()).collect::<Vec<_>>()),
            );
        }
        if let Some(v) = p.degree_cap {
            params.insert("degree_cap".into(), json!(v));
        }
        if let Some(v) = &p.gammas {
            params.insert("gammas".into(), json!(v));
        }
        for (k, v) in &p.extra {
            params.insert(k.clone(), v.clone());
        }
        json!({
            "id": self.id,
            "field": {"kind": self.field.kind().name(), "p": self.field.p()},
            "vars": self.vars,
            "polys": self.polys.iter().map(poly_to_value).collect::<Vec<_>>(),
            "params": params,
        })
    }

    pub fn to_text(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("serializable")
    }
}

pub fn corpus_to_text(items: &[Instance]) -> String {
    let values: Vec<Value> = items.iter().map(Instance::to_value).collect();
    serde_json::to_string_pretty(&Value::Array(values)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{"id": "m", "field": {"kind": "RATIONAL_P_ADIC", "p": 3},
        "vars": ["z"], "polys": [[[[2], "1"], [[1], "2"]]]}"#;

    #[test]
    fn minimal_document() {
        let inst = parse_instance(MINIMAL).unwrap();
        assert_eq!(inst.polys.len(), 1);
        assert_eq!(inst.polys[0].to_text(Some(&inst.vars)), "z^2 + 2*z");
        let again = parse_instance(&inst.to_text()).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn bad_prime_is_a_validation_error() {
        let text = MINIMAL.replace("RATIONAL_P_ADIC\", \"p\": 3", "PRIME_FIELD\", \"p\": 4");
        assert!(matches!(
            parse_instance(&text),
            Err(CliError::Validation(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        match parse_instance("{\"id\": \n  oops}") {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mismatched_exponent_length() {
        let text = MINIMAL.replace("[[2], \"1\"]", "[[2, 0], \"1\"]");
        assert!(matches!(
            parse_instance(&text),
            Err(CliError::Validation(_))
        ));
    }

    #[test]
    fn coefficients_are_canonicalized() {
        let text = r#"{"id": "c", "field": {"kind": "PRIME_FIELD", "p": 5}, "vars": ["x"],
            "polys": [[[[1], "7"], [[1], "1"], [[0], "0"]]], "params": {"expect": "x"}}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.polys[0].to_text(Some(&inst.vars)), "3*x");
        assert_eq!(inst.params.extra["expect"], json!("x"));
    }

    #[test]
    fn text_polynomials_match_term_lists() {
        let text = r#"{"id": "t", "field": {"kind": "PRIME_FIELD", "p": 3}, "vars": ["x", "y"],
            "polys": ["2*x^2*y + 4", [[[2, 1], "2"], [[0, 0], "1"]]]}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.polys[0], inst.polys[1]);
        let bad = text.replace("2*x^2*y + 4", "2*x^^2");
        assert!(matches!(parse_instance(&bad), Err(CliError::Validation(_))));
    }

    #[test]
    fn ratfunc_round_trip() {
        let text = r#"{"id": "r", "field": {"kind": "RATFUNC_T_ADIC", "p": 3}, "vars": ["x", "y"],
            "polys": [[[[1, 0], "(t + 1)/t^2"], [[0, 2], "2*t"]]], "params": {"rho": ["-1/2", "3"]}}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(parse_instance(&inst.to_text()).unwrap(), inst);
    }
}
