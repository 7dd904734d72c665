//! Constructive side of the equilibrium analysis: the complement cover of an
//! opponent strategy, segment padding, and explicit pure equilibria.

use std::fmt;

use super::{conforms_lemma1, is_perfect_cover, payoff, MgmgParams, MgmgStrategy};
use crate::error::{Error, Result};

/// The unique strategy covering every gold site and no mine: `1001` repeated.
pub fn perfect_cover(m: usize) -> MgmgStrategy {
    MgmgStrategy::from_bits((0..4 * m).map(|i| matches!(i % 4, 0 | 3)).collect())
        .expect("length is a positive multiple of four")
}

/// The perfect cover with one end switch removed, `2M` segments. Starting
/// on line 1 drops the final upward switch (all gold plus the last mine);
/// starting on line 0 drops the leading downward switch (all gold but the
/// one at location 0, no mines).
pub fn near_perfect_cover(m: usize, start: u8) -> Result<MgmgStrategy> {
    let mut f = perfect_cover(m);
    match start {
        0 => f.set(0, 0),
        1 => f.set(4 * m - 1, 0),
        _ => return Err(Error::InvalidT { t: start, reason: "start bit must be 0 or 1".into() }),
    }
    Ok(f)
}

/// A conforming strategy starting on line `start` with exactly
/// `min(segments, 2M + 1)` segments, built left to right by padding. Above
/// `2M` segments the result is the perfect cover, whatever `start` is.
pub fn canonical_strategy(m: usize, start: u8, segments: usize) -> Result<MgmgStrategy> {
    if start > 1 {
        return Err(Error::InvalidT { t: start, reason: "start bit must be 0 or 1".into() });
    }
    match segments {
        0 => Err(Error::InvalidParams("segment count must be positive".into())),
        1 => Ok(MgmgStrategy::constant(m, start)),
        s if s == 2 * m => near_perfect_cover(m, start),
        s if s > 2 * m => Ok(perfect_cover(m)),
        s => pad_segments(&MgmgStrategy::constant(m, start), s),
    }
}

/// Builds `f_A'` that covers exactly the gold `f_B` leaves open at block
/// endpoints: `f_A'(4k) = 1 - f_B(4k)`, `f_A'(4k+3) = 1 - f_B(4k+3)`, with
/// the block interior constant when the endpoints agree and otherwise a
/// single switch at `4k` (downward) or `4k + 2` (upward).
pub fn build_complement_cover(b: &MgmgStrategy) -> Result<MgmgStrategy> {
    if !conforms_lemma1(b) {
        return Err(Error::NonConformingInput(b.to_string()));
    }
    let mut f = b.clone();
    for k in 0..b.scale() {
        let first = 1 - b.bit(4 * k);
        let last = 1 - b.bit(4 * k + 3);
        let block: [u8; 4] = match (first, last) {
            (x, y) if x == y => [x; 4],
            (1, _) => [1, 0, 0, 0],
            _ => [0, 0, 0, 1],
        };
        for (j, v) in block.into_iter().enumerate() {
            f.set(4 * k + j, v);
        }
    }
    Ok(f)
}

/// A clause of the padding routine's input contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PadRequirement {
    ScaleAtLeastTwo,
    CapabilityAtMostTwoMMinusOne,
    ConformsToSwitchRule,
    SegmentsWithinCapability,
    LastBlockImperfect,
}

impl fmt::Display for PadRequirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PadRequirement::ScaleAtLeastTwo => "scale M must be at least 2",
            PadRequirement::CapabilityAtMostTwoMMinusOne => "capability must not exceed 2M - 1",
            PadRequirement::ConformsToSwitchRule => {
                "input must switch up only at 2 mod 4 and down only at 0 mod 4"
            }
            PadRequirement::SegmentsWithinCapability => "input must not use more segments than the capability",
            PadRequirement::LastBlockImperfect => "the last four resources must be imperfectly covered",
        })
    }
}

/// Raises the segment count of `f_prime` to exactly `ca` while keeping every
/// covered gold site, the start bit, and switch-rule conformance.
///
/// Blocks are made perfect left to right at two segments per step; an odd
/// remainder is absorbed by one of three edits on the last block.
pub fn pad_segments(f_prime: &MgmgStrategy, ca: usize) -> Result<MgmgStrategy> {
    let m = f_prime.scale();
    let fail = |r| Err(Error::PreconditionViolated(r));
    if m < 2 {
        return fail(PadRequirement::ScaleAtLeastTwo);
    }
    if ca > 2 * m - 1 {
        return fail(PadRequirement::CapabilityAtMostTwoMMinusOne);
    }
    if !conforms_lemma1(f_prime) {
        return fail(PadRequirement::ConformsToSwitchRule);
    }
    if f_prime.segments() > ca {
        return fail(PadRequirement::SegmentsWithinCapability);
    }
    if is_perfect_cover(f_prime, 4 * m - 4, 4 * m - 1)? {
        return fail(PadRequirement::LastBlockImperfect);
    }

    let mut f = f_prime.clone();
    let mut k = 0;
    while ca - f.segments() >= 2 {
        // blocks 1..k are perfect here, so k <= M - 1
        debug_assert!(k < m);
        if f.bit(4 * k + 3) == 0 {
            f.set(4 * k + 3, 1);
            if k + 1 < m {
                f.set(4 * k + 4, 1);
            }
        } else if k > 0 || f.bit(4 * k) == 1 {
            f.set(4 * k + 1, 0);
            f.set(4 * k + 2, 0);
        }
        k += 1;
    }
    if ca - f.segments() == 1 {
        let n = 4 * m;
        if f.bit(n - 1) == 0 {
            f.set(n - 1, 1);
        } else if f.bit(n - 2) == 1 {
            f.set(n - 3, 0);
            f.set(n - 2, 0);
            f.set(n - 1, 0);
        } else {
            f.set(n - 5, 1);
            f.set(n - 4, 1);
            f.set(n - 1, 0);
        }
    }
    Ok(f)
}

/// Builds an explicit pure equilibrium of the instance in class `t`.
///
/// * both capabilities above `2M`: both players play the perfect cover;
/// * exactly one above `2M`: that player plays the perfect cover and the
///   other starts on line 0 using all its capability, which forces `t`;
/// * both at most `2M`: A starts on line `t`, B on `1 - t`; the weaker
///   player plays a padded strategy and the stronger one pads the
///   complement of it. For `M = 1` a direct search replaces padding.
pub fn build_pure_equilibrium(params: &MgmgParams, t: u8) -> Result<(MgmgStrategy, MgmgStrategy)> {
    params.require_theorem()?;
    if t > 1 {
        return Err(Error::InvalidT { t, reason: "t must be 0 or 1".into() });
    }
    let m = params.m();
    let (ca, cb) = (params.ca(), params.cb());
    let big = 2 * m;
    match (ca > big, cb > big) {
        (true, true) => Ok((perfect_cover(m), perfect_cover(m))),
        (true, false) => {
            if t != 1 {
                return Err(Error::InvalidT {
                    t,
                    reason: format!("C_B = {cb} <= 2M while C_A = {ca} > 2M forces t = 1"),
                });
            }
            Ok((perfect_cover(m), canonical_strategy(m, 0, cb)?))
        }
        (false, true) => {
            if t != 0 {
                return Err(Error::InvalidT {
                    t,
                    reason: format!("C_A = {ca} <= 2M while C_B = {cb} > 2M forces t = 0"),
                });
            }
            Ok((canonical_strategy(m, 0, ca)?, perfect_cover(m)))
        }
        (false, false) if m == 1 => search_small(params, t),
        (false, false) => {
            let (start_a, start_b) = (t, 1 - t);
            if cb <= ca {
                let b = canonical_strategy(m, start_b, cb)?;
                let a = respond(&b, start_a, ca)?;
                Ok((a, b))
            } else {
                let a = canonical_strategy(m, start_a, ca)?;
                let b = respond(&a, start_b, cb)?;
                Ok((a, b))
            }
        }
    }
}

/// Full-capability complete-coverage answer to `other`.
fn respond(other: &MgmgStrategy, start: u8, cap: usize) -> Result<MgmgStrategy> {
    let m = other.scale();
    if cap > 2 * m {
        Ok(perfect_cover(m))
    } else if cap == 2 * m {
        near_perfect_cover(m, start)
    } else {
        pad_segments(&build_complement_cover(other)?, cap)
    }
}

/// `M = 1`: scan the sixteen strategies for an equilibrium in class `t`
/// with both players at full capability.
fn search_small(params: &MgmgParams, t: u8) -> Result<(MgmgStrategy, MgmgStrategy)> {
    let all: Vec<MgmgStrategy> = (0..16).map(|mask| MgmgStrategy::from_mask(1, mask)).collect();
    let space = |cap: usize| all.iter().filter(move |f| f.segments() <= cap);
    let (ea, eb) = (params.effective(params.ca()), params.effective(params.cb()));
    for a in space(ea).filter(|f| f.segments() == ea && f.start() == t) {
        for b in space(eb).filter(|f| f.segments() == eb && f.start() == 1 - t) {
            let (ua, ub) = payoff(a, b, params)?;
            let a_stable = space(params.ca()).all(|d| payoff(d, b, params).is_ok_and(|p| p.0 <= ua));
            let b_stable = space(params.cb()).all(|d| payoff(a, d, params).is_ok_and(|p| p.1 <= ub));
            if a_stable && b_stable {
                return Ok((a.clone(), b.clone()));
            }
        }
    }
    Err(Error::InvalidT {
        t,
        reason: "no equilibrium of this class exists at M = 1".into(),
    })
}
