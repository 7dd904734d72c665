//! Capability transfer functions for mixed capability games.
//!
//! * [`game`]: finite games with nested, capability-indexed strategy
//!   spaces; pure equilibria and the pure transfer function.
//! * [`bimatrix`]: two-player mixed equilibria by exact support
//!   enumeration; the mixed transfer function.
//! * [`mgmg`]: the Mixed Gold and Mines Game, its equilibrium
//!   constructions and closed-form payoffs.
//! * [`verify`]: a brute-force oracle for small Gold and Mines instances.
//! * [`json`]: the JSON game description format.
//!
//! All arithmetic is exact ([`rational::Rational`]).

pub mod bimatrix;
pub mod error;
pub mod game;
pub mod json;
mod linalg;
pub mod mgmg;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use game::{CapabilityGame, CapabilityProfile, PayoffVectorSet, Player, PureProfile};
pub use rational::Rational;
