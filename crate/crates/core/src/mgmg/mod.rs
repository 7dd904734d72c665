//! The Mixed Gold and Mines Game.
//!
//! `4M` resources sit at horizontal locations `0..4M` on two lines. Location
//! `i` lies on line `(i + 1) mod 2` and holds gold when `i mod 4 <= 1`,
//! a mine otherwise. A strategy picks a line at every location; its
//! capability cost is the number of constant runs (segments). Sole coverage
//! of a gold site pays 1, shared coverage pays `rho` each, and each covered
//! mine costs `mu` to every coverer.

mod closed_form;
mod construct;
mod payoff;
mod strategy;

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use closed_form::{admissible_classes, social_welfare_equal_cap, theorem_payoff, theorem_payoffs};
pub use construct::{
    build_complement_cover, build_pure_equilibrium, canonical_strategy, near_perfect_cover, pad_segments,
    perfect_cover, PadRequirement,
};
pub use payoff::{is_complete_gold_coverage, payoff, total_gold_covered};
pub use strategy::{conforms_lemma1, is_perfect_cover, lemma2_counts, summarize, CoverageSummary, MgmgStrategy};

/// Game instance `(M, rho, mu, C_A, C_B)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MgmgParams {
    m: usize,
    #[serde(serialize_with = "crate::rational::serialize")]
    rho: Rational,
    #[serde(serialize_with = "crate::rational::serialize")]
    mu: Rational,
    ca: usize,
    cb: usize,
}

impl MgmgParams {
    /// Requires `M >= 1`, `0 < rho < 1`, `mu < 0` and positive capabilities.
    pub fn new(m: usize, rho: Rational, mu: Rational, ca: usize, cb: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("M must be positive".into()));
        }
        if !rho.is_positive() || rho >= Rational::one() {
            return Err(Error::InvalidParams(format!("rho = {rho} must lie in (0, 1)")));
        }
        if !mu.is_negative() {
            return Err(Error::InvalidParams(format!("mu = {mu} must be negative")));
        }
        if ca == 0 || cb == 0 {
            return Err(Error::InvalidParams("capabilities must be positive".into()));
        }
        Ok(Self { m, rho, mu, ca, cb })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rho(&self) -> &Rational {
        &self.rho
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn ca(&self) -> usize {
        self.ca
    }

    pub fn cb(&self) -> usize {
        self.cb
    }

    pub fn with_capabilities(&self, ca: usize, cb: usize) -> Result<Self> {
        Self::new(self.m, self.rho.clone(), self.mu.clone(), ca, cb)
    }

    /// Number of locations, `4M`.
    pub fn locations(&self) -> usize {
        4 * self.m
    }

    /// Capability clamped to the perfect-cover cost `2M + 1`.
    pub fn effective(&self, c: usize) -> usize {
        c.min(2 * self.m + 1)
    }

    pub fn satisfies_theorem(&self) -> bool {
        let neg_mu = -self.mu.clone();
        self.rho.is_positive() && self.rho < neg_mu && neg_mu < Rational::one()
    }

    pub fn require_theorem(&self) -> Result<()> {
        if self.satisfies_theorem() {
            Ok(())
        } else {
            Err(Error::ParamsOutOfTheorem(format!("rho = {}, mu = {}", self.rho, self.mu)))
        }
    }

    /// Payoff of one resource to one coverer, given how many players cover it.
    pub(crate) fn delay(&self, kind: ResourceType, coverers: usize) -> Rational {
        match (kind, coverers) {
            (_, 0) => Rational::zero(),
            (ResourceType::Gold, 1) => Rational::one(),
            (ResourceType::Gold, _) => self.rho.clone(),
            (ResourceType::Mine, _) => self.mu.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ResourceType {
    Gold,
    Mine,
}

impl fmt::Display for ResourceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResourceType::Gold => "gold",
            ResourceType::Mine => "mine",
        })
    }
}

fn check_location(i: usize, m: usize) -> Result<()> {
    if i >= 4 * m {
        Err(Error::OutOfRange { index: i, len: 4 * m })
    } else {
        Ok(())
    }
}

/// Line (0 or 1) holding the resource at location `i`.
pub fn resource_line(i: usize, m: usize) -> Result<u8> {
    check_location(i, m)?;
    Ok(line_of(i))
}

pub fn resource_type(i: usize, m: usize) -> Result<ResourceType> {
    check_location(i, m)?;
    Ok(type_of(i))
}

pub(crate) fn line_of(i: usize) -> u8 {
    ((i + 1) % 2) as u8
}

pub(crate) fn type_of(i: usize) -> ResourceType {
    if i % 4 <= 1 {
        ResourceType::Gold
    } else {
        ResourceType::Mine
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LayoutRecord {
    pub index: usize,
    pub line: u8,
    #[serde(rename = "type")]
    pub kind: ResourceType,
}

/// One record per location, left to right.
pub fn layout(m: usize) -> Result<Vec<LayoutRecord>> {
    if m == 0 {
        return Err(Error::InvalidParams("M must be positive".into()));
    }
    Ok((0..4 * m)
        .map(|i| LayoutRecord {
            index: i,
            line: line_of(i),
            kind: type_of(i),
        })
        .collect())
}
