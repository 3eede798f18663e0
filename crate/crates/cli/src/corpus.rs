//! Seeded generation of zero-sum instances.
//!
//! Functions are products of distinct random low-degree factors times a
//! constant; the last one closes the sum. Coprimality modes are enforced by
//! how factors are shared and then checked after the fact.

use abc_core::abc::{subsets_coprime, MAX_FUNCTIONS};
use abc_core::mvpoly::gcd;
use abc_core::{Coeff, FieldKind, FieldSpec, Monomial, MvPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::instance::{Instance, Params};

pub const MAX_DEGREE: u32 = 10;
const ATTEMPTS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coprimality {
    Pairwise,
    /// Every `k`-subset coprime; factors are shared by at most `k - 1`
    /// functions.
    KWise(usize),
    None,
}

#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub field: FieldSpec,
    pub m: usize,
    /// Functions are `f_0, ..., f_n`.
    pub n: usize,
    pub max_deg: u32,
    pub coprimality: Coprimality,
    /// Build the collection from two zero-sum blocks.
    pub vanishing: bool,
}

impl CorpusSpec {
    fn check(&self) -> Result<(), CliError> {
        if self.n + 1 > MAX_FUNCTIONS {
            return Err(CliError::Guard(format!(
                "n = {} exceeds {}",
                self.n,
                MAX_FUNCTIONS - 1
            )));
        }
        if self.max_deg > MAX_DEGREE {
            return Err(CliError::Guard(format!(
                "degree bound {} exceeds {MAX_DEGREE}",
                self.max_deg
            )));
        }
        if self.n < 2 || self.m == 0 || self.max_deg == 0 {
            return Err(CliError::Validation(
                "need n >= 2, m >= 1 and a positive degree bound".into(),
            ));
        }
        if self.vanishing && self.n < 4 {
            // two zero-sum blocks that are coprime and not all constant need
            // at least five functions
            return Err(CliError::Validation("vanishing mode needs n >= 4".into()));
        }
        if let Coprimality::KWise(k) = self.coprimality {
            if !(2..=self.n + 1).contains(&k) {
                return Err(CliError::Validation(format!("k = {k} outside [2, n + 1]")));
            }
        }
        Ok(())
    }

    fn share_limit(&self) -> usize {
        match self.coprimality {
            Coprimality::Pairwise => 1,
            Coprimality::KWise(k) => k - 1,
            Coprimality::None => self.n + 1,
        }
    }
}

pub fn variable_names(m: usize) -> Vec<String> {
    if m <= 3 {
        ["x", "y", "w"][..m].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=m).map(|i| format!("z{i}")).collect()
    }
}

fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Coeff {
    loop {
        let c = match field.kind() {
            FieldKind::RationalPAdic => {
                let p = field.p() as i64;
                let num = rng.gen_range(-3i64..=3) * if rng.gen_bool(0.25) { p } else { 1 };
                let den = if rng.gen_bool(0.2) { p } else { 1 };
                field
                    .div(&field.from_i64(num), &field.from_i64(den))
                    .expect("nonzero denominator")
            }
            FieldKind::PrimeField => field.from_i64(rng.gen_range(1..field.p() as i64)),
            FieldKind::RatFuncTAdic => {
                let t = field.t().expect("rational function field");
                let c = field.from_i64(rng.gen_range(1..field.p() as i64));
                field.mul(&c, &field.pow(&t, rng.gen_range(0..=1)))
            }
        };
        if !field.is_zero(&c) {
            return c;
        }
    }
}

fn random_monomial(m: usize, deg: u32, rng: &mut ChaCha8Rng) -> Monomial {
    let mut exps = vec![0u32; m];
    for _ in 0..deg {
        exps[rng.gen_range(0..m)] += 1;
    }
    Monomial::new(exps)
}

/// Monic nonconstant factor of degree 1 or 2 with a nonzero constant term
/// most of the time.
fn random_factor(field: FieldSpec, m: usize, max_deg: u32, rng: &mut ChaCha8Rng) -> MvPoly {
    loop {
        let deg = rng.gen_range(1..=max_deg.clamp(1, 2));
        let mut terms = vec![(random_monomial(m, deg, rng), field.one())];
        for _ in 0..rng.gen_range(1..=2) {
            let d = rng.gen_range(0..deg);
            terms.push((random_monomial(m, d, rng), random_scalar(field, rng)));
        }
        let f = MvPoly::from_terms(field, m, terms).expect("compatible terms");
        if f.total_degree() >= 1 {
            return f.monic();
        }
    }
}

struct Builder<'a> {
    spec: &'a CorpusSpec,
    /// Factors handed out so far with how many functions use each.
    pool: Vec<(MvPoly, usize)>,
}

impl Builder<'_> {
    fn fresh_factor(&mut self, budget: u32, rng: &mut ChaCha8Rng) -> Option<usize> {
        for _ in 0..20 {
            let f = random_factor(self.spec.field, self.spec.m, budget, rng);
            if f.total_degree() > budget {
                continue;
            }
            let distinct = self
                .pool
                .iter()
                .all(|(g, _)| gcd(g, &f).map(|d| d.is_constant()).unwrap_or(false));
            if distinct {
                self.pool.push((f, 0));
                return Some(self.pool.len() - 1);
            }
        }
        None
    }

    fn function(&mut self, rng: &mut ChaCha8Rng) -> MvPoly {
        let spec = self.spec;
        let field = spec.field;
        let mut f = MvPoly::constant(field, spec.m, random_scalar(field, rng));
        if rng.gen_bool(0.15) {
            return f;
        }
        let target = rng.gen_range(1..=spec.max_deg);
        let mut used = Vec::new();
        while f.total_degree() < target {
            let budget = target - f.total_degree();
            let reusable: Vec<usize> = (0..self.pool.len())
                .filter(|&i| {
                    self.pool[i].1 < spec.share_limit()
                        && !used.contains(&i)
                        && self.pool[i].0.total_degree() <= budget
                })
                .collect();
            let pick = if !reusable.is_empty() && rng.gen_bool(0.35) {
                Some(*reusable.choose(rng).expect("nonempty"))
            } else {
                self.fresh_factor(budget, rng)
            };
            let Some(i) = pick else { break };
            let e = if rng.gen_bool(0.3) { 2 } else { 1 };
            let e = if self.pool[i].0.total_degree() * e <= budget {
                e
            } else {
                1
            };
            f = &f * &self.pool[i].0.pow(e as u64);
            self.pool[i].1 += 1;
            used.push(i);
        }
        f
    }

    /// `size` functions summing to zero, the last one being the closure.
    fn block(&mut self, size: usize, rng: &mut ChaCha8Rng) -> Option<Vec<MvPoly>> {
        let field = self.spec.field;
        let m = self.spec.m;
        if size == 2 {
            // only a constant pair keeps the block coprime
            let c = MvPoly::constant(field, m, random_scalar(field, rng));
            return Some(vec![c.clone(), -&c]);
        }
        let mut fs: Vec<MvPoly> = (0..size - 1).map(|_| self.function(rng)).collect();
        let closing = -&MvPoly::sum(field, m, &fs);
        if closing.is_zero() || closing.total_degree() > self.spec.max_deg {
            return None;
        }
        fs.push(closing);
        Some(fs)
    }
}

fn mode_holds(spec: &CorpusSpec, fs: &[MvPoly]) -> Result<bool, CliError> {
    Ok(match spec.coprimality {
        Coprimality::Pairwise => subsets_coprime(fs, 2)?.is_none(),
        Coprimality::KWise(k) => subsets_coprime(fs, k)?.is_none(),
        Coprimality::None => true,
    })
}

fn block_sizes(total: usize, vanishing: bool) -> Vec<usize> {
    if !vanishing {
        return vec![total];
    }
    let first = total / 2;
    if total - first < 3 {
        vec![3, total - 3]
    } else {
        vec![first, total - first]
    }
}

fn one_family(spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> Result<Vec<MvPoly>, CliError> {
    for _ in 0..ATTEMPTS {
        let mut b = Builder {
            spec,
            pool: Vec::new(),
        };
        let mut fs = Vec::new();
        let mut ok = true;
        for size in block_sizes(spec.n + 1, spec.vanishing) {
            match b.block(size, rng) {
                Some(block) => fs.extend(block),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok || fs.iter().all(MvPoly::is_constant) {
            continue;
        }
        fs.shuffle(rng);
        if mode_holds(spec, &fs)? {
            return Ok(fs);
        }
    }
    Err(CliError::Validation(format!(
        "no instance found in {ATTEMPTS} attempts for {spec:?}"
    )))
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<Instance>, CliError> {
    spec.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|i| {
            Ok(Instance {
                id: format!("s{}-{i:04}", spec.seed),
                field: spec.field,
                vars: variable_names(spec.m),
                polys: one_family(spec, &mut rng)?,
                params: Params::default(),
            })
        })
        .collect()
}

/// The mixed plan behind `corpus-run`: both characteristics, every
/// coprimality mode, with and without vanishing subsums.
pub fn mixed_corpus(
    seed: u64,
    count: usize,
    max_n: usize,
    max_deg: u32,
) -> Result<Vec<Instance>, CliError> {
    let fields = [
        FieldSpec::rational(3)?,
        FieldSpec::rational(5)?,
        FieldSpec::prime_field(2)?,
        FieldSpec::prime_field(3)?,
        FieldSpec::prime_field(5)?,
        FieldSpec::rational(2)?,
    ];
    if max_n < 2 {
        return Err(CliError::Validation("--max-n must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let n = rng.gen_range(2..=max_n);
        let coprimality = match rng.gen_range(0..4) {
            0 | 1 => Coprimality::Pairwise,
            2 => Coprimality::KWise(rng.gen_range(2..=(n + 1).min(3))),
            _ => Coprimality::None,
        };
        let mut spec = CorpusSpec {
            seed: rng.gen(),
            count: 1,
            field: fields[i % fields.len()],
            m: rng.gen_range(1..=2),
            n,
            max_deg: rng.gen_range(1..=max_deg),
            coprimality,
            vanishing: n >= 4 && rng.gen_bool(0.4),
        };
        // small fields in one variable rarely admit coprime closures;
        // retry, then relax to two variables and no coprimality demand
        let mut inst = None;
        for attempt in 0..6 {
            if attempt == 3 {
                spec.m = 2;
                spec.coprimality = Coprimality::None;
            }
            match generate_corpus(&spec) {
                Ok(mut v) => {
                    inst = v.pop();
                    break;
                }
                Err(CliError::Validation(_)) => spec.seed = rng.gen(),
                Err(e) => return Err(e),
            }
        }
        let mut inst = inst
            .ok_or_else(|| CliError::Validation(format!("instance {i} could not be generated")))?;
        inst.id = format!("c{seed}-{i:04}");
        out.push(inst);
    }
    Ok(out)
}
