//! Exact continuous piecewise-linear functions of the log-radius.

use std::fmt;

use num_traits::Zero;

use crate::coeffs::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub slope: i64,
    pub intercept: Rational,
}

impl Line {
    pub fn new(slope: i64, intercept: Rational) -> Self {
        Line { slope, intercept }
    }

    pub fn eval(&self, rho: &Rational) -> Rational {
        rho * Rational::from_integer(self.slope.into()) + &self.intercept
    }

    /// Abscissa where two lines of different slope meet.
    pub fn crossing(&self, other: &Line) -> Option<Rational> {
        (self.slope != other.slope).then(|| {
            (&self.intercept - &other.intercept)
                / Rational::from_integer((other.slope - self.slope).into())
        })
    }
}

/// `lines[i]` is in force on `[breakpoints[i-1], breakpoints[i])`, with the
/// first and last pieces extending to infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinear {
    breakpoints: Vec<Rational>,
    lines: Vec<Line>,
}

impl PiecewiseLinear {
    pub fn line(l: Line) -> Self {
        PiecewiseLinear {
            breakpoints: Vec::new(),
            lines: vec![l],
        }
    }

    /// Builds from explicit pieces; adjacent identical lines are merged.
    pub fn from_pieces(breakpoints: Vec<Rational>, lines: Vec<Line>) -> Self {
        assert_eq!(breakpoints.len() + 1, lines.len());
        assert!(breakpoints.windows(2).all(|w| w[0] < w[1]));
        PiecewiseLinear { breakpoints, lines }.simplified()
    }

    /// Upper envelope `max_i lines[i]`; panics on an empty list.
    pub fn upper_envelope(mut lines: Vec<Line>) -> Self {
        assert!(!lines.is_empty());
        lines.sort_by(|a, b| {
            a.slope
                .cmp(&b.slope)
                .then_with(|| a.intercept.cmp(&b.intercept))
        });
        // keep the highest intercept per slope
        let mut dedup: Vec<Line> = Vec::new();
        for l in lines {
            if dedup.last().is_some_and(|d| d.slope == l.slope) {
                dedup.pop();
            }
            dedup.push(l);
        }
        let mut hull: Vec<Line> = Vec::new();
        for l in dedup {
            while hull.len() >= 2 {
                let n = hull.len();
                let x_prev = hull[n - 2].crossing(&hull[n - 1]).expect("distinct slopes");
                let x_new = hull[n - 1].crossing(&l).expect("distinct slopes");
                if x_new <= x_prev {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(l);
        }
        let breakpoints = hull
            .windows(2)
            .map(|w| w[0].crossing(&w[1]).expect("distinct slopes"))
            .collect();
        PiecewiseLinear {
            breakpoints,
            lines: hull,
        }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    fn piece_index(&self, rho: &Rational) -> usize {
        self.breakpoints.partition_point(|b| b <= rho)
    }

    pub fn eval(&self, rho: &Rational) -> Rational {
        self.lines[self.piece_index(rho)].eval(rho)
    }

    /// Right derivative at `rho`.
    pub fn slope_at(&self, rho: &Rational) -> i64 {
        self.lines[self.piece_index(rho)].slope
    }

    pub fn first_line(&self) -> &Line {
        &self.lines[0]
    }

    pub fn last_line(&self) -> &Line {
        self.lines.last().expect("at least one piece")
    }

    pub fn final_slope(&self) -> i64 {
        self.last_line().slope
    }

    pub fn initial_slope(&self) -> i64 {
        self.first_line().slope
    }

    pub fn is_convex(&self) -> bool {
        self.lines.windows(2).all(|w| w[0].slope <= w[1].slope)
    }

    pub fn is_continuous(&self) -> bool {
        self.breakpoints
            .iter()
            .enumerate()
            .all(|(i, b)| self.lines[i].eval(b) == self.lines[i + 1].eval(b))
    }

    fn simplified(self) -> Self {
        let mut breakpoints = Vec::new();
        let mut lines = vec![self.lines[0].clone()];
        for (b, l) in self
            .breakpoints
            .into_iter()
            .zip(self.lines.into_iter().skip(1))
        {
            if lines.last() != Some(&l) {
                breakpoints.push(b);
                lines.push(l);
            }
        }
        PiecewiseLinear { breakpoints, lines }
    }

    fn merged_breakpoints(&self, other: &Self) -> Vec<Rational> {
        let mut all: Vec<Rational> = self
            .breakpoints
            .iter()
            .chain(&other.breakpoints)
            .cloned()
            .collect();
        all.sort();
        all.dedup();
        all
    }

    /// Representative point of every piece of the common refinement.
    fn combine(&self, other: &Self, op: impl Fn(&Line, &Line) -> Line) -> Self {
        let bps = self.merged_breakpoints(other);
        let mut lines = Vec::with_capacity(bps.len() + 1);
        let pick = |pl: &Self, i: usize| -> Line {
            // piece i of the refinement starts at bps[i-1]
            let probe = if i == 0 {
                bps.first()
                    .map(|b| b - Rational::from_integer(1.into()))
                    .unwrap_or_else(Rational::zero)
            } else {
                bps[i - 1].clone()
            };
            pl.lines[pl.piece_index(&probe)].clone()
        };
        for i in 0..=bps.len() {
            lines.push(op(&pick(self, i), &pick(other, i)));
        }
        PiecewiseLinear::from_pieces(bps, lines)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| {
            Line::new(a.slope + b.slope, &a.intercept + &b.intercept)
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| {
            Line::new(a.slope - b.slope, &a.intercept - &b.intercept)
        })
    }

    pub fn scale(&self, k: i64) -> Self {
        let kq = Rational::from_integer(k.into());
        if k == 0 {
            return PiecewiseLinear::line(Line::new(0, Rational::zero()));
        }
        PiecewiseLinear {
            breakpoints: self.breakpoints.clone(),
            lines: self
                .lines
                .iter()
                .map(|l| Line::new(l.slope * k, &l.intercept * &kq))
                .collect(),
        }
    }

    /// Adds `slope * rho + intercept`.
    pub fn add_line(&self, l: &Line) -> Self {
        self.add(&PiecewiseLinear::line(l.clone()))
    }

    /// Pointwise maximum.
    pub fn max(&self, other: &Self) -> Self {
        let bps = self.merged_breakpoints(other);
        let mut out_b = Vec::new();
        let mut out_l = Vec::new();
        for i in 0..=bps.len() {
            let lo = if i == 0 { None } else { Some(&bps[i - 1]) };
            let hi = bps.get(i);
            let probe = match (lo, hi) {
                (Some(l), _) => l.clone(),
                (None, Some(h)) => h - Rational::from_integer(1.into()),
                (None, None) => Rational::zero(),
            };
            let a = self.lines[self.piece_index(&probe)].clone();
            let b = other.lines[other.piece_index(&probe)].clone();
            if let Some(l) = lo {
                out_b.push(l.clone());
            }
            let inside = a
                .crossing(&b)
                .filter(|x| lo.is_none_or(|l| x > l) && hi.is_none_or(|h| x < h));
            match inside {
                Some(x) => {
                    // left of the crossing the smaller slope is on top
                    let (left, right) = if a.slope < b.slope { (a, b) } else { (b, a) };
                    out_l.push(left);
                    out_b.push(x);
                    out_l.push(right);
                }
                None => {
                    let pa = a.eval(&probe);
                    let pb = b.eval(&probe);
                    let top = if pa > pb || (pa == pb && a.slope >= b.slope) {
                        a
                    } else {
                        b
                    };
                    out_l.push(top);
                }
            }
        }
        PiecewiseLinear::from_pieces(out_b, out_l)
    }

    /// Rows `(rho, slope to the right, value)` at every breakpoint.
    pub fn table(&self) -> Vec<(Rational, i64, Rational)> {
        self.breakpoints
            .iter()
            .map(|b| (b.clone(), self.slope_at(b), self.eval(b)))
            .collect()
    }
}

impl fmt::Display for PiecewiseLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rho\tslope\tvalue")?;
        let first = self.first_line();
        writeln!(
            f,
            "-inf\t{}\t{}*rho + {}",
            first.slope, first.slope, first.intercept
        )?;
        for (rho, slope, value) in self.table() {
            writeln!(f, "{rho}\t{slope}\t{value}")?;
        }
        Ok(())
    }
}
