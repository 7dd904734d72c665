use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{line_of, type_of, ResourceType};
use crate::error::{Error, Result};

/// A line choice `f(i)` for every location `i` in `0..4M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MgmgStrategy {
    bits: Vec<bool>,
}

impl MgmgStrategy {
    pub fn from_bits(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() || !bits.len().is_multiple_of(4) {
            return Err(Error::Parse(format!(
                "strategy length {} is not a positive multiple of 4",
                bits.len()
            )));
        }
        Ok(Self { bits })
    }

    pub fn constant(m: usize, line: u8) -> Self {
        Self {
            bits: vec![line == 1; 4 * m],
        }
    }

    /// Strategy of length `4m` whose bit `i` is bit `i` of `mask`
    /// (location 0 is the least significant bit).
    pub fn from_mask(m: usize, mask: u64) -> Self {
        Self {
            bits: (0..4 * m).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn scale(&self) -> usize {
        self.bits.len() / 4
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i] as u8
    }

    pub(crate) fn set(&mut self, i: usize, line: u8) {
        self.bits[i] = line == 1;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `f(0)`.
    pub fn start(&self) -> u8 {
        self.bit(0)
    }

    /// Whether the strategy covers the resource at location `i`.
    pub fn covers(&self, i: usize) -> bool {
        self.bit(i) == line_of(i)
    }

    /// Number of constant runs.
    pub fn segments(&self) -> usize {
        1 + self.bits.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

impl fmt::Display for MgmgStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl FromStr for MgmgStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("unexpected character {other:?} in strategy"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(bits)
    }
}

impl Serialize for MgmgStrategy {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Coverage structure of one strategy: `G(f)`, `M(f)`, their sizes, and
/// the upward/downward discontinuity points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageSummary {
    pub gold_sites: Vec<usize>,
    pub mine_sites: Vec<usize>,
    pub n_gold: usize,
    pub n_mine: usize,
    pub udp: Vec<usize>,
    pub ddp: Vec<usize>,
    pub seg: usize,
}

pub fn summarize(f: &MgmgStrategy) -> CoverageSummary {
    let mut gold_sites = Vec::new();
    let mut mine_sites = Vec::new();
    for i in (0..f.len()).filter(|&i| f.covers(i)) {
        match type_of(i) {
            ResourceType::Gold => gold_sites.push(i),
            ResourceType::Mine => mine_sites.push(i),
        }
    }
    let mut udp = Vec::new();
    let mut ddp = Vec::new();
    for i in 0..f.len() - 1 {
        match (f.bit(i), f.bit(i + 1)) {
            (0, 1) => udp.push(i),
            (1, 0) => ddp.push(i),
            _ => {}
        }
    }
    CoverageSummary {
        n_gold: gold_sites.len(),
        n_mine: mine_sites.len(),
        seg: udp.len() + ddp.len() + 1,
        gold_sites,
        mine_sites,
        udp,
        ddp,
    }
}

/// Upward switches only at `i = 2 (mod 4)`, downward only at `i = 0 (mod 4)`.
pub fn conforms_lemma1(f: &MgmgStrategy) -> bool {
    (0..f.len() - 1).all(|i| match (f.bit(i), f.bit(i + 1)) {
        (0, 1) => i % 4 == 2,
        (1, 0) => i % 4 == 0,
        _ => true,
    })
}

/// Gold and mine counts of a conforming strategy from its start bit and
/// segment count alone.
pub fn lemma2_counts(segments: usize, f0: u8, m: usize) -> Result<(usize, usize)> {
    if segments == 0 || segments > 2 * m + 1 {
        return Err(Error::OutOfRange {
            index: segments,
            len: 2 * m + 2,
        });
    }
    if f0 > 1 {
        return Err(Error::OutOfRange { index: f0 as usize, len: 2 });
    }
    let f0 = f0 as usize;
    Ok((m + (segments + f0 - 1) / 2, m - (segments - f0) / 2))
}

/// Every gold site in `[a, b]` covered and every mine site avoided.
pub fn is_perfect_cover(f: &MgmgStrategy, a: usize, b: usize) -> Result<bool> {
    if b >= f.len() {
        return Err(Error::OutOfRange { index: b, len: f.len() });
    }
    if a > b {
        return Err(Error::OutOfRange { index: a, len: b + 1 });
    }
    Ok((a..=b).all(|i| f.covers(i) == (type_of(i) == ResourceType::Gold)))
}
