//! Two-player mixed equilibria by support enumeration, in exact arithmetic.
//!
//! For each pair of equal-size supports the indifference systems are solved
//! exactly. When a system is rank-deficient only its basic solution (free
//! variables at zero) is tried and the result is marked degenerate, since the
//! equilibria of such games can form continua.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::game::{CapabilityGame, CapabilityProfile, PayoffVectorSet, PureProfile};
use crate::linalg::{solve, Solution};
use crate::rational::Rational;

pub const DEFAULT_SIDE_LIMIT: usize = 8;

/// Payoff matrices `A` (row player) and `B` (column player).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimatrix {
    a: Vec<Vec<Rational>>,
    b: Vec<Vec<Rational>>,
}

impl Bimatrix {
    pub fn new(a: Vec<Vec<Rational>>, b: Vec<Vec<Rational>>) -> Result<Self> {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrices must be non-empty".into()));
        }
        if b.len() != rows || a.iter().chain(&b).any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(
                "payoff matrices must be rectangular with equal shapes".into(),
            ));
        }
        Ok(Self { a, b })
    }

    /// The bimatrix seen by players confined to capability profile `c`.
    pub fn from_game(g: &CapabilityGame, c: &CapabilityProfile) -> Result<Self> {
        if g.num_players() != 2 {
            return Err(Error::NotTwoPlayer(g.num_players()));
        }
        let sizes = g.restricted_sizes(c)?;
        let entry = |r: usize, k: usize, who: usize| g.payoff(&PureProfile(vec![r, k]))[who].clone();
        let a = (0..sizes[0])
            .map(|r| (0..sizes[1]).map(|k| entry(r, k, 0)).collect())
            .collect();
        let b = (0..sizes[0])
            .map(|r| (0..sizes[1]).map(|k| entry(r, k, 1)).collect())
            .collect();
        Self::new(a, b)
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.a[0].len()
    }

    pub fn row_payoffs(&self) -> &[Vec<Rational>] {
        &self.a
    }

    pub fn col_payoffs(&self) -> &[Vec<Rational>] {
        &self.b
    }

    /// `A y`: the row player's payoff for each pure row against `y`.
    fn row_values(&self, y: &[Rational]) -> Vec<Rational> {
        self.a.iter().map(|row| dot(row, y)).collect()
    }

    /// `x^T B`: the column player's payoff for each pure column against `x`.
    fn col_values(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.cols())
            .map(|k| {
                self.b
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (row, p)| acc + &row[k] * p)
            })
            .collect()
    }

    fn check_dims(&self, x: &MixedStrategy, y: &MixedStrategy) -> Result<()> {
        if x.len() != self.rows() || y.len() != self.cols() {
            return Err(Error::DimensionMismatch(format!(
                "strategies of length {}x{} against a {}x{} game",
                x.len(),
                y.len(),
                self.rows(),
                self.cols()
            )));
        }
        Ok(())
    }
}

fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).fold(Rational::zero(), |acc, (p, q)| acc + p * q)
}

/// A probability distribution over a restricted action set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedStrategy(Vec<Rational>);

impl MixedStrategy {
    pub fn new(p: Vec<Rational>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidDistribution("empty distribution".into()));
        }
        if p.iter().any(Signed::is_negative) {
            return Err(Error::InvalidDistribution("negative probability".into()));
        }
        let total = p.iter().fold(Rational::zero(), |acc, v| acc + v);
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!("probabilities sum to {total}")));
        }
        Ok(Self(p))
    }

    /// Point mass on `action`.
    pub fn pure(len: usize, action: usize) -> Self {
        let mut p = vec![Rational::zero(); len];
        p[action] = Rational::one();
        Self(p)
    }

    pub fn uniform(len: usize) -> Self {
        Self(vec![Rational::new(1.into(), (len as i64).into()); len])
    }

    pub fn probabilities(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Index of the action played with certainty, if any.
    pub fn as_pure(&self) -> Option<usize> {
        let mut support = self.0.iter().enumerate().filter(|(_, p)| !p.is_zero());
        match (support.next(), support.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedEquilibrium {
    pub x: MixedStrategy,
    pub y: MixedStrategy,
    pub values: (Rational, Rational),
    pub degenerate: bool,
}

/// `(x^T A y, x^T B y)`.
pub fn expected_payoff(g: &Bimatrix, x: &MixedStrategy, y: &MixedStrategy) -> Result<(Rational, Rational)> {
    g.check_dims(x, y)?;
    Ok((dot(&x.0, &g.row_values(&y.0)), dot(&g.col_values(&x.0), &y.0)))
}

/// Mixed Nash test via pure deviations: no row beats `x^T A y` against `y`
/// and no column beats `x^T B y` against `x`.
pub fn is_mixed_ne(g: &Bimatrix, x: &MixedStrategy, y: &MixedStrategy) -> Result<bool> {
    g.check_dims(x, y)?;
    let rows = g.row_values(&y.0);
    let cols = g.col_values(&x.0);
    let (u, v) = (dot(&x.0, &rows), dot(&cols, &y.0));
    Ok(rows.iter().all(|r| *r <= u) && cols.iter().all(|c| *c <= v))
}

/// Support enumeration with a configurable per-side size limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportEnumeration {
    pub side_limit: usize,
}

impl Default for SupportEnumeration {
    fn default() -> Self {
        Self {
            side_limit: DEFAULT_SIDE_LIMIT,
        }
    }
}

impl SupportEnumeration {
    pub fn run(&self, g: &Bimatrix) -> Result<Vec<MixedEquilibrium>> {
        let (m, k) = (g.rows(), g.cols());
        if m > self.side_limit || k > self.side_limit {
            return Err(Error::SizeLimitExceeded {
                rows: m,
                cols: k,
                limit: self.side_limit,
            });
        }
        let mut found: Vec<MixedEquilibrium> = Vec::new();
        let mut record = |eq: MixedEquilibrium| {
            if let Some(prev) = found.iter_mut().find(|e| e.x == eq.x && e.y == eq.y) {
                prev.degenerate |= eq.degenerate;
            } else {
                found.push(eq);
            }
        };

        for row_mask in 1u32..(1 << m) {
            let rows = members(row_mask, m);
            for col_mask in 1u32..(1 << k) {
                if col_mask.count_ones() != row_mask.count_ones() {
                    continue;
                }
                let cols = members(col_mask, k);
                if let Some(eq) = solve_supports(g, &rows, &cols) {
                    record(eq);
                }
            }
        }

        // Pure scan; only adds degeneracy information already implied above
        // in nondegenerate games.
        for r in 0..m {
            for c in 0..k {
                let (x, y) = (MixedStrategy::pure(m, r), MixedStrategy::pure(k, c));
                if is_mixed_ne(g, &x, &y)? {
                    let values = expected_payoff(g, &x, &y)?;
                    record(MixedEquilibrium {
                        x,
                        y,
                        values,
                        degenerate: false,
                    });
                }
            }
        }
        Ok(found)
    }
}

pub fn support_enumeration(g: &Bimatrix) -> Result<Vec<MixedEquilibrium>> {
    SupportEnumeration::default().run(g)
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask & (1 << i) != 0).collect()
}

/// Solves both indifference systems for one support pair and keeps the
/// candidate only if it is a feasible equilibrium of the whole game.
fn solve_supports(g: &Bimatrix, rows: &[usize], cols: &[usize]) -> Option<MixedEquilibrium> {
    // Column mix y over `cols` makes every row in `rows` earn the same v.
    let (y_support, y_basic) = indifference(rows.iter().map(|&r| cols.iter().map(|&c| g.a[r][c].clone()).collect()))?;
    // Row mix x over `rows` makes every column in `cols` earn the same w.
    let (x_support, x_basic) = indifference(cols.iter().map(|&c| rows.iter().map(|&r| g.b[r][c].clone()).collect()))?;
    if x_support.iter().chain(&y_support).any(Signed::is_negative) {
        return None;
    }
    let x = MixedStrategy(scatter(&x_support, rows, g.rows()));
    let y = MixedStrategy(scatter(&y_support, cols, g.cols()));
    if !is_mixed_ne(g, &x, &y).ok()? {
        return None;
    }
    let values = expected_payoff(g, &x, &y).ok()?;
    Some(MixedEquilibrium {
        x,
        y,
        values,
        degenerate: x_basic || y_basic,
    })
}

/// Given payoff rows `P` (one per opponent action in the support), finds a
/// distribution `p` with `P p = v 1` and `sum p = 1`. Returns the
/// distribution and whether the system was rank-deficient.
fn indifference(payoff_rows: impl Iterator<Item = Vec<Rational>>) -> Option<(Vec<Rational>, bool)> {
    let mut a: Vec<Vec<Rational>> = payoff_rows
        .map(|mut row| {
            row.push(-Rational::one());
            row
        })
        .collect();
    let n = a.len();
    let mut sum_row = vec![Rational::one(); n];
    sum_row.push(Rational::zero());
    a.push(sum_row);
    let mut b = vec![Rational::zero(); n];
    b.push(Rational::one());
    match solve(a, b, n + 1) {
        Solution::Unique(mut s) => {
            s.pop();
            Some((s, false))
        }
        Solution::Basic(mut s) => {
            s.pop();
            Some((s, true))
        }
        Solution::Inconsistent => None,
    }
}

fn scatter(values: &[Rational], at: &[usize], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (v, &i) in values.iter().zip(at) {
        out[i] = v.clone();
    }
    out
}

/// Mixed capability transfer function value plus a degeneracy marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedCtf {
    pub payoffs: PayoffVectorSet,
    pub degenerate: bool,
}

pub fn ctf_mixed(g: &CapabilityGame, c: &CapabilityProfile) -> Result<MixedCtf> {
    ctf_mixed_with(g, c, SupportEnumeration::default())
}

pub fn ctf_mixed_with(g: &CapabilityGame, c: &CapabilityProfile, solver: SupportEnumeration) -> Result<MixedCtf> {
    let bm = Bimatrix::from_game(g, c)?;
    let eqs = solver.run(&bm)?;
    Ok(MixedCtf {
        degenerate: eqs.iter().any(|e| e.degenerate),
        payoffs: eqs
            .into_iter()
            .map(|e| vec![e.values.0, e.values.1])
            .collect(),
    })
}
