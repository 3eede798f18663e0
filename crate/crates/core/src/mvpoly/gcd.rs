//! Multivariate gcd by recursive content/primitive-part reduction with a
//! subresultant pseudo-remainder sequence in the main variable.

use crate::error::{Error, Result};

use super::MvPoly;

type Uni = Vec<MvPoly>;

fn trim(mut u: Uni) -> Uni {
    while u.last().is_some_and(MvPoly::is_zero) {
        u.pop();
    }
    u
}

/// The variable of least positive degree keeps the remainder sequence short.
fn main_variable(f: &MvPoly, g: &MvPoly) -> Option<usize> {
    (0..f.nvars())
        .rev()
        .map(|v| (f.degree_in(v).max(g.degree_in(v)), v))
        .filter(|&(d, _)| d > 0)
        .min_by_key(|&(d, _)| d)
        .map(|(_, v)| v)
}

/// Pseudo-remainder of `a` by `b` (both trimmed, `b` nonzero).
fn prem(a: &Uni, b: &Uni) -> Uni {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.clone();
    if r.len() <= db {
        return r;
    }
    let mut e = r.len() - db;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = bc * &lr;
            r[i + shift] = &r[i + shift] - &t;
        }
        r = trim(r);
        e -= 1;
    }
    if e > 0 {
        let s = lcb.pow(e as u64);
        for c in r.iter_mut() {
            *c = &*c * &s;
        }
    }
    r
}

fn content(u: &Uni) -> MvPoly {
    let mut acc = u[0].clone();
    for c in &u[1..] {
        if acc.is_one() {
            break;
        }
        acc = gcd_inner(&acc, c);
    }
    acc
}

fn primitive(u: &Uni, content: &MvPoly) -> Uni {
    if content.is_one() {
        return u.clone();
    }
    u.iter()
        .map(|c| {
            c.exact_div(content)
                .expect("content divides every coefficient")
        })
        .collect()
}

/// Subresultant PRS; returns the last nonzero remainder (not made primitive).
fn subresultant_gcd(mut a: Uni, mut b: Uni) -> Uni {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let field = a[0].field();
    let nvars = a[0].nvars();
    let mut g = MvPoly::one(field, nvars);
    let mut h = MvPoly::one(field, nvars);
    loop {
        let delta = (a.len() - b.len()) as u64;
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![MvPoly::one(field, nvars)];
        }
        let denom = &g * &h.pow(delta);
        let r: Uni = r
            .iter()
            .map(|c| c.exact_div(&denom).expect("subresultant division is exact"))
            .collect();
        a = b;
        b = r;
        g = a.last().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta);
            let den = h.pow(delta - 1);
            num.exact_div(&den).expect("subresultant division is exact")
        };
    }
}

fn gcd_inner(f: &MvPoly, g: &MvPoly) -> MvPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return MvPoly::one(f.field(), f.nvars());
    }
    if f.num_terms() == 1 && g.num_terms() == 1 {
        let (mf, _) = f.leading_term().expect("nonzero");
        let (mg, _) = g.leading_term().expect("nonzero");
        let m = super::Monomial::new(mf.exps().iter().zip(mg.exps()).map(|(a, b)| *a.min(b)));
        return MvPoly::monomial(f.field(), f.nvars(), m, f.field().one());
    }
    let (small, big) = if f.total_degree() <= g.total_degree() {
        (f, g)
    } else {
        (g, f)
    };
    if big.exact_div(small).is_ok() {
        return small.monic();
    }
    let v = main_variable(f, g).expect("non-constant inputs");
    let uf = f.to_univariate(v);
    let ug = g.to_univariate(v);
    if uf.len() == 1 {
        return gcd_inner(f, &content(&ug));
    }
    if ug.len() == 1 {
        return gcd_inner(&content(&uf), g);
    }
    let cf = content(&uf);
    let cg = content(&ug);
    let c = gcd_inner(&cf, &cg);
    let pf = primitive(&uf, &cf);
    let pg = primitive(&ug, &cg);
    let s = subresultant_gcd(pf, pg);
    let cs = content(&s);
    let ps = primitive(&s, &cs);
    let h = MvPoly::from_univariate(&ps, v, f.field(), f.nvars());
    (&c * &h).monic()
}

/// Greatest common divisor, normalized to a monic graded-lex leading term.
pub fn gcd(f: &MvPoly, g: &MvPoly) -> Result<MvPoly> {
    f.check_compatible(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    Ok(gcd_inner(f, g))
}

/// Gcd of a nonempty list; zeros are ignored unless every entry is zero.
pub fn gcd_all<'a>(fs: impl IntoIterator<Item = &'a MvPoly>) -> Result<MvPoly> {
    let mut acc: Option<MvPoly> = None;
    for f in fs {
        acc = Some(match acc {
            None => f.clone(),
            Some(a) => {
                a.check_compatible(f)?;
                if a.is_one() {
                    return Ok(a);
                }
                gcd_inner(&a, f)
            }
        });
    }
    match acc {
        None => Err(Error::DimensionMismatch("gcd of an empty list".into())),
        Some(a) if a.is_zero() => Err(Error::BothZero),
        Some(a) => Ok(a.monic()),
    }
}

/// Least common multiple `f g / gcd(f, g)`, monic.
pub fn lcm(f: &MvPoly, g: &MvPoly) -> Result<MvPoly> {
    f.check_compatible(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let d = gcd_inner(f, g);
    Ok((&f.exact_div(&d)? * g).monic())
}

pub fn lcm_all<'a>(fs: impl IntoIterator<Item = &'a MvPoly>) -> Result<MvPoly> {
    let mut acc: Option<MvPoly> = None;
    for f in fs {
        acc = Some(match acc {
            None => {
                if f.is_zero() {
                    return Err(Error::ZeroPoly);
                }
                f.monic()
            }
            Some(a) => lcm(&a, f)?,
        });
    }
    acc.ok_or_else(|| Error::DimensionMismatch("lcm of an empty list".into()))
}
