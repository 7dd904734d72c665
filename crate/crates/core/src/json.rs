//! JSON game descriptions.
//!
//! ```json
//! {
//!   "players": [
//!     {"actions": ["r1", "r2"], "cutoffs": [1, 2]},
//!     {"actions": ["c1", "c2"], "cutoffs": [2]}
//!   ],
//!   "payoffs": [[1, 2], [-1, 1], [2, 1], [0, 2]]
//! }
//! ```
//!
//! `payoffs` lists one n-tuple per full action profile in row-major order,
//! player 1's index varying slowest. Each value is a bare integer or a
//! `"p/q"` string; decimal numbers are rejected.

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{CapabilityGame, Player, PureProfile};
use crate::rational::{parse_rational, Rational};

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawGame {
    players: Vec<RawPlayer>,
    payoffs: Vec<Vec<JsonRational>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawPlayer {
    actions: Vec<String>,
    cutoffs: Vec<usize>,
}

#[derive(Debug)]
struct JsonRational(Rational);

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;

        impl Visitor<'_> for V {
            type Value = JsonRational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonRational, E> {
                Ok(JsonRational(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonRational, E> {
                Ok(JsonRational(Rational::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<JsonRational, E> {
                Err(E::custom(format!("decimal {v} not accepted; write it as \"p/q\"")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonRational, E> {
                parse_rational(v).map(JsonRational).map_err(E::custom)
            }
        }

        d.deserialize_any(V)
    }
}

impl Serialize for JsonRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            if let Ok(v) = i64::try_from(self.0.to_integer()) {
                return s.serialize_i64(v);
            }
        }
        s.collect_str(&self.0)
    }
}

/// Parses and validates a game description.
pub fn parse_game(text: &str) -> Result<CapabilityGame> {
    let raw: RawGame = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let players = raw
        .players
        .into_iter()
        .map(|p| Player {
            actions: p.actions,
            cutoffs: p.cutoffs,
        })
        .collect();
    let payoffs = raw
        .payoffs
        .into_iter()
        .map(|y| y.into_iter().map(|v| v.0).collect())
        .collect();
    CapabilityGame::new(players, payoffs)
}

/// Renders a game in the same format, integers bare and fractions quoted.
pub fn game_to_json(game: &CapabilityGame) -> String {
    let players: Vec<RawPlayer> = game
        .players()
        .iter()
        .map(|p| RawPlayer {
            actions: p.actions.clone(),
            cutoffs: p.cutoffs.clone(),
        })
        .collect();
    let sizes: Vec<usize> = game.players().iter().map(|p| p.actions.len()).collect();
    let payoffs = crate::game::ProfileIter::new(sizes)
        .map(|s| {
            game.payoff(&PureProfile(s))
                .iter()
                .map(|v| JsonRational(v.clone()))
                .collect()
        })
        .collect();
    serde_json::to_string_pretty(&RawGame { players, payoffs }).expect("plain data serializes")
}
