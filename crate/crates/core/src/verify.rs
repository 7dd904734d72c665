//! Brute-force oracle for the Gold and Mines Game.
//!
//! Enumerates every strategy of a small instance and finds all pure
//! equilibria by exhaustive best-response comparison. It relies on
//! [`mgmg::payoff`] alone and shares nothing with the closed form, so the
//! two can be compared as independent routes.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::PayoffVectorSet;
use crate::mgmg::{self, is_complete_gold_coverage, MgmgParams, MgmgStrategy};
use crate::rational::Rational;

pub const DEFAULT_SCALE_LIMIT: usize = 3;
const MAX_COUNTEREXAMPLES: usize = 10;

/// A strategy profile together with its payoffs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileOutcome {
    pub a: MgmgStrategy,
    pub b: MgmgStrategy,
    #[serde(serialize_with = "serialize_pair")]
    pub payoff: (Rational, Rational),
}

fn serialize_pair<S: serde::Serializer>(p: &(Rational, Rational), s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(2))?;
    seq.serialize_element(&p.0.to_string())?;
    seq.serialize_element(&p.1.to_string())?;
    seq.end()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub params: MgmgParams,
    pub predicted: PayoffVectorSet,
    pub observed: PayoffVectorSet,
    pub equilibria_found: usize,
    #[serde(rename = "match")]
    pub matched: bool,
    /// Equilibria whose payoffs the closed form does not predict (capped).
    pub counterexamples: Vec<ProfileOutcome>,
    /// Predicted payoffs that no equilibrium attains.
    pub missing: PayoffVectorSet,
}

/// Exhaustive enumeration bounded by a maximum scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub scale_limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            scale_limit: DEFAULT_SCALE_LIMIT,
        }
    }
}

impl Oracle {
    pub fn new(scale_limit: usize) -> Self {
        Self { scale_limit }
    }

    fn check_scale(&self, m: usize) -> Result<()> {
        // masks are u64, so 4M <= 63 regardless of the configured bound
        if m > self.scale_limit || 4 * m > 63 {
            return Err(Error::ScaleLimitExceeded {
                m,
                limit: self.scale_limit.min(15),
            });
        }
        Ok(())
    }

    /// All strategies with exactly `c` segments (`strict`) or at most `c`,
    /// in lexicographic order of their text form.
    pub fn enumerate_strategies(&self, m: usize, c: usize, strict: bool) -> Result<Vec<MgmgStrategy>> {
        self.check_scale(m)?;
        if m == 0 || c == 0 {
            return Err(Error::InvalidParams("M and C must be positive".into()));
        }
        let n = 4 * m;
        let mut out: Vec<MgmgStrategy> = (0..1u64 << n)
            .map(|mask| MgmgStrategy::from_mask(m, mask))
            .filter(|f| {
                let s = f.segments();
                if strict {
                    s == c
                } else {
                    s <= c
                }
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Every pure equilibrium of the instance, with each player confined to
    /// its own space (at-most or exactly `C` segments).
    pub fn enumerate_pure_ne(&self, params: &MgmgParams, strict: bool) -> Result<Vec<ProfileOutcome>> {
        let m = params.m();
        let space_a = self.enumerate_strategies(m, params.ca(), strict)?;
        let space_b = self.enumerate_strategies(m, params.cb(), strict)?;
        if space_a.is_empty() || space_b.is_empty() {
            return Ok(Vec::new());
        }

        // For every A strategy: B's best value and the B strategies attaining it.
        let b_best: Vec<Vec<(usize, (Rational, Rational))>> = space_a
            .par_iter()
            .map(|a| {
                let mut best: Option<Rational> = None;
                let mut argmax = Vec::new();
                for (j, b) in space_b.iter().enumerate() {
                    let p = mgmg::payoff(a, b, params).expect("same scale");
                    match &best {
                        Some(v) if p.1 < *v => continue,
                        Some(v) if p.1 == *v => {}
                        _ => {
                            best = Some(p.1.clone());
                            argmax.clear();
                        }
                    }
                    argmax.push((j, p));
                }
                argmax
            })
            .collect();

        // For every B strategy: A's best value.
        let a_best: Vec<Rational> = space_b
            .par_iter()
            .map(|b| {
                space_a
                    .iter()
                    .map(|a| mgmg::payoff(a, b, params).expect("same scale").0)
                    .max()
                    .expect("non-empty space")
            })
            .collect();

        let mut out = Vec::new();
        for (i, candidates) in b_best.into_iter().enumerate() {
            for (j, p) in candidates {
                if p.0 == a_best[j] {
                    out.push(ProfileOutcome {
                        a: space_a[i].clone(),
                        b: space_b[j].clone(),
                        payoff: p,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Re-derives the equilibrium property of one profile from scratch.
    pub fn recheck(&self, params: &MgmgParams, profile: &ProfileOutcome, strict: bool) -> Result<bool> {
        let m = params.m();
        let (ua, ub) = mgmg::payoff(&profile.a, &profile.b, params)?;
        if (ua.clone(), ub.clone()) != profile.payoff {
            return Ok(false);
        }
        let a_ok = self
            .enumerate_strategies(m, params.ca(), strict)?
            .iter()
            .all(|d| mgmg::payoff(d, &profile.b, params).is_ok_and(|p| p.0 <= ua));
        let b_ok = self
            .enumerate_strategies(m, params.cb(), strict)?
            .iter()
            .all(|d| mgmg::payoff(&profile.a, d, params).is_ok_and(|p| p.1 <= ub));
        let in_space = |f: &MgmgStrategy, c: usize| {
            if strict {
                f.segments() == c
            } else {
                f.segments() <= c
            }
        };
        Ok(a_ok && b_ok && in_space(&profile.a, params.ca()) && in_space(&profile.b, params.cb()))
    }

    /// Compares the closed-form payoff set with the observed equilibrium
    /// payoffs under at-most-`C` spaces.
    pub fn verify_theorem(&self, params: &MgmgParams) -> Result<VerificationReport> {
        let predicted = mgmg::theorem_payoffs(params)?;
        let equilibria = self.enumerate_pure_ne(params, false)?;
        let observed: PayoffVectorSet = equilibria
            .iter()
            .map(|e| vec![e.payoff.0.clone(), e.payoff.1.clone()])
            .collect();
        let counterexamples = equilibria
            .iter()
            .filter(|e| !predicted.contains(&[e.payoff.0.clone(), e.payoff.1.clone()]))
            .take(MAX_COUNTEREXAMPLES)
            .cloned()
            .collect();
        let missing = predicted.iter().filter(|y| !observed.contains(y)).cloned().collect();
        Ok(VerificationReport {
            params: params.clone(),
            matched: predicted == observed,
            equilibria_found: equilibria.len(),
            predicted,
            observed,
            counterexamples,
            missing,
        })
    }

    /// Whether every equilibrium under exactly-`C` spaces covers all gold.
    /// Runs for any valid parameters; the answer is only guaranteed to be
    /// `true` when `rho < -mu < 1`.
    pub fn verify_lemma3(&self, params: &MgmgParams) -> Result<bool> {
        let eqs = self.enumerate_pure_ne(params, true)?;
        eqs.iter()
            .map(|e| is_complete_gold_coverage(&e.a, &e.b))
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().all(|ok| ok))
    }
}

pub fn enumerate_strategies(m: usize, c: usize, strict: bool) -> Result<Vec<MgmgStrategy>> {
    Oracle::default().enumerate_strategies(m, c, strict)
}

pub fn enumerate_mgmg_pure_ne(params: &MgmgParams, strict: bool) -> Result<Vec<ProfileOutcome>> {
    Oracle::default().enumerate_pure_ne(params, strict)
}

pub fn verify_theorem(params: &MgmgParams) -> Result<VerificationReport> {
    Oracle::default().verify_theorem(params)
}

pub fn verify_lemma3(params: &MgmgParams) -> Result<bool> {
    Oracle::default().verify_lemma3(params)
}
