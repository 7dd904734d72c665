//! Finite normal-form games whose players have nested, capability-indexed
//! strategy spaces, together with pure-equilibrium enumeration and the pure
//! capability transfer function.
//!
//! Each player's actions form one ordered list; capability level `j`
//! (1-based) unlocks the first `cutoffs[j - 1]` actions. Strictly increasing
//! cutoffs encode the proper-subset hierarchy.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{format_tuple, Rational};

/// One player's action list and capability cutoffs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Player {
    pub actions: Vec<String>,
    pub cutoffs: Vec<usize>,
}

impl Player {
    pub fn new<S: Into<String>>(actions: impl IntoIterator<Item = S>, cutoffs: Vec<usize>) -> Self {
        Self {
            actions: actions.into_iter().map(Into::into).collect(),
            cutoffs,
        }
    }

    /// Highest capability level `b_i`.
    pub fn max_capability(&self) -> usize {
        self.cutoffs.len()
    }

    /// Number of actions available at `level` (1-based).
    pub fn available(&self, level: usize) -> Option<usize> {
        level.checked_sub(1).and_then(|j| self.cutoffs.get(j).copied())
    }
}

/// A validated mixed capability game.
///
/// Payoffs are stored flat in row-major profile order with player 1's index
/// varying slowest; each entry is an n-tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapabilityGame {
    players: Vec<Player>,
    payoffs: Vec<Vec<Rational>>,
}

/// Capability levels `c_i`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CapabilityProfile(pub Vec<usize>);

/// Action indices `s_i`, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PureProfile(pub Vec<usize>);

impl fmt::Display for CapabilityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for PureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    write!(f, "({})", parts.join(","))
}

/// Duplicate-free set of payoff tuples, iterated in lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PayoffVectorSet(BTreeSet<Vec<Rational>>);

impl PayoffVectorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, payoff: Vec<Rational>) -> bool {
        self.0.insert(payoff)
    }

    pub fn contains(&self, payoff: &[Rational]) -> bool {
        self.0.contains(payoff)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.0.iter()
    }

    /// `f_i(c)`: the payoffs of one player across the set.
    pub fn component(&self, player: usize) -> BTreeSet<Rational> {
        self.0.iter().filter_map(|y| y.get(player).cloned()).collect()
    }

    /// Social welfare of each member.
    pub fn welfare(&self) -> BTreeSet<Rational> {
        self.0
            .iter()
            .map(|y| y.iter().fold(Rational::zero(), |acc, v| acc + v))
            .collect()
    }
}

impl FromIterator<Vec<Rational>> for PayoffVectorSet {
    fn from_iter<I: IntoIterator<Item = Vec<Rational>>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a PayoffVectorSet {
    type Item = &'a Vec<Rational>;
    type IntoIter = std::collections::btree_set::Iter<'a, Vec<Rational>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl serde::Serialize for PayoffVectorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rendered: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|y| y.iter().map(ToString::to_string).collect())
            .collect();
        rendered.serialize(s)
    }
}

impl fmt::Display for PayoffVectorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|y| format_tuple(y)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl CapabilityGame {
    /// Builds and validates a game.
    pub fn new(players: Vec<Player>, payoffs: Vec<Vec<Rational>>) -> Result<Self> {
        let game = Self { players, payoffs };
        game.validate()?;
        Ok(game)
    }

    /// Checks the hierarchy, completeness and non-emptiness invariants.
    pub fn validate(&self) -> Result<()> {
        if self.players.is_empty() {
            return Err(Error::EmptyGame("no players".into()));
        }
        for (i, p) in self.players.iter().enumerate() {
            if p.actions.is_empty() {
                return Err(Error::EmptyGame(format!("player {} has no actions", i + 1)));
            }
            if p.cutoffs.is_empty() {
                return Err(Error::HierarchyViolation {
                    player: i + 1,
                    detail: "no capability levels".into(),
                });
            }
            if p.cutoffs[0] == 0 {
                return Err(Error::HierarchyViolation {
                    player: i + 1,
                    detail: "first cutoff must be positive".into(),
                });
            }
            if let Some(w) = p.cutoffs.windows(2).find(|w| w[0] >= w[1]) {
                return Err(Error::HierarchyViolation {
                    player: i + 1,
                    detail: format!("cutoffs must strictly increase, found {} then {}", w[0], w[1]),
                });
            }
            let last = *p.cutoffs.last().unwrap();
            if last != p.actions.len() {
                return Err(Error::HierarchyViolation {
                    player: i + 1,
                    detail: format!(
                        "last cutoff {last} differs from action count {}",
                        p.actions.len()
                    ),
                });
            }
        }
        let n = self.players.len();
        let expected = self
            .players
            .iter()
            .try_fold(1usize, |acc, p| acc.checked_mul(p.actions.len()))
            .ok_or_else(|| Error::IncompletePayoffs {
                expected: usize::MAX,
                arity: n,
                detail: "profile space overflows".into(),
            })?;
        if self.payoffs.len() != expected {
            return Err(Error::IncompletePayoffs {
                expected,
                arity: n,
                detail: format!("found {} entries", self.payoffs.len()),
            });
        }
        if let Some(k) = self.payoffs.iter().position(|y| y.len() != n) {
            return Err(Error::IncompletePayoffs {
                expected,
                arity: n,
                detail: format!("entry {k} has arity {}", self.payoffs[k].len()),
            });
        }
        Ok(())
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    pub fn players(&self) -> &[Player] {
        &self.players
    }

    pub fn player(&self, i: usize) -> &Player {
        &self.players[i]
    }

    /// Payoff tuple of a full-space profile.
    pub fn payoff(&self, s: &PureProfile) -> &[Rational] {
        &self.payoffs[self.flat_index(&s.0)]
    }

    fn flat_index(&self, s: &[usize]) -> usize {
        s.iter()
            .zip(&self.players)
            .fold(0, |acc, (&a, p)| acc * p.actions.len() + a)
    }

    /// Restricted action counts `k_{i,c_i}` for a capability profile.
    pub fn restricted_sizes(&self, c: &CapabilityProfile) -> Result<Vec<usize>> {
        if c.0.len() != self.players.len() {
            return Err(Error::OutOfBounds(format!(
                "capability profile {c} has {} entries, game has {} players",
                c.0.len(),
                self.players.len()
            )));
        }
        c.0.iter()
            .zip(&self.players)
            .enumerate()
            .map(|(i, (&level, p))| {
                p.available(level).ok_or_else(|| {
                    Error::OutOfBounds(format!(
                        "capability {level} of player {} outside [1, {}]",
                        i + 1,
                        p.max_capability()
                    ))
                })
            })
            .collect()
    }

    fn check_profile(&self, sizes: &[usize], s: &PureProfile) -> Result<()> {
        if s.0.len() != sizes.len() || s.0.iter().zip(sizes).any(|(a, k)| a >= k) {
            return Err(Error::OutOfBounds(format!(
                "strategy profile {s} not inside restricted sizes {sizes:?}"
            )));
        }
        Ok(())
    }

    /// Whether `s` is a pure Nash equilibrium when players are confined to
    /// the spaces selected by `c`. Deviations outside those spaces are
    /// never consulted.
    pub fn is_pure_ne(&self, c: &CapabilityProfile, s: &PureProfile) -> Result<bool> {
        let sizes = self.restricted_sizes(c)?;
        self.check_profile(&sizes, s)?;
        Ok(self.is_pure_ne_within(&sizes, &s.0))
    }

    fn is_pure_ne_within(&self, sizes: &[usize], s: &[usize]) -> bool {
        let here = &self.payoffs[self.flat_index(s)];
        let mut probe = s.to_vec();
        for (i, &k) in sizes.iter().enumerate() {
            for alt in 0..k {
                if alt == s[i] {
                    continue;
                }
                probe[i] = alt;
                if self.payoffs[self.flat_index(&probe)][i] > here[i] {
                    return false;
                }
            }
            probe[i] = s[i];
        }
        true
    }

    /// All pure equilibria within `c`, in lexicographic order.
    pub fn enumerate_pure_ne(&self, c: &CapabilityProfile) -> Result<Vec<PureProfile>> {
        let sizes = self.restricted_sizes(c)?;
        Ok(ProfileIter::new(sizes.clone())
            .filter(|s| self.is_pure_ne_within(&sizes, s))
            .map(PureProfile)
            .collect())
    }

    /// Pure capability transfer function `f(c)`.
    pub fn ctf_pure(&self, c: &CapabilityProfile) -> Result<PayoffVectorSet> {
        Ok(self
            .enumerate_pure_ne(c)?
            .iter()
            .map(|s| self.payoff(s).to_vec())
            .collect())
    }

    /// Every capability profile of the game, in lexicographic order.
    pub fn capability_profiles(&self) -> impl Iterator<Item = CapabilityProfile> {
        let bounds: Vec<usize> = self.players.iter().map(Player::max_capability).collect();
        ProfileIter::new(bounds).map(|v| CapabilityProfile(v.into_iter().map(|c| c + 1).collect()))
    }
}

/// Odometer over `[0, sizes[0]) x ... x [0, sizes[n-1])`, last index fastest.
pub(crate) struct ProfileIter {
    sizes: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl ProfileIter {
    pub(crate) fn new(sizes: Vec<usize>) -> Self {
        let next = if sizes.iter().all(|&k| k > 0) {
            Some(vec![0; sizes.len()])
        } else {
            None
        };
        Self { sizes, next }
    }
}

impl Iterator for ProfileIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            succ[i] += 1;
            if succ[i] < self.sizes[i] {
                self.next = Some(succ);
                return Some(current);
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// Outcome of the capability-positivity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    Positive,
    NotPositive,
    /// Some shared level has no pure equilibrium, so `W_b` is empty.
    Undetermined,
}

impl fmt::Display for Positivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Positivity::Positive => "positive",
            Positivity::NotPositive => "not-positive",
            Positivity::Undetermined => "undetermined",
        })
    }
}

/// Equilibrium social welfare `W_b` at every shared capability level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WelfareLevels {
    pub levels: Vec<BTreeSet<Rational>>,
    pub verdict: Positivity,
}

/// Computes `W_b` for `b = 1..=B`, where `W_b` holds the component sums of
/// the tuples in `f(b, ..., b)`, and classifies the game.
pub fn welfare_levels(g: &CapabilityGame) -> Result<WelfareLevels> {
    let bounds: Vec<usize> = g.players.iter().map(Player::max_capability).collect();
    if bounds.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::UnequalBounds(bounds));
    }
    let levels = (1..=bounds[0])
        .map(|b| {
            g.ctf_pure(&CapabilityProfile(vec![b; bounds.len()]))
                .map(|set| set.welfare())
        })
        .collect::<Result<Vec<_>>>()?;
    let verdict = if levels.iter().any(BTreeSet::is_empty) {
        Positivity::Undetermined
    } else if levels
        .windows(2)
        .all(|w| w[0].last().unwrap() <= w[1].first().unwrap())
    {
        Positivity::Positive
    } else {
        Positivity::NotPositive
    };
    Ok(WelfareLevels { levels, verdict })
}

pub fn is_capability_positive(g: &CapabilityGame) -> Result<Positivity> {
    welfare_levels(g).map(|w| w.verdict)
}
