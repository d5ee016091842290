//! Exponential-weights learning dynamics on 2×2 symmetric games.
//!
//! The crate simulates the coupled log-ratio dynamics, detects the limit of a
//! run, predicts that limit from the signs of (ε₁, ε₂) and of the initial Δ
//! values, and builds such games from a two-bank lending model.

pub mod bank;
pub mod classifier;
pub mod dynamics;
pub mod equilibria;
pub mod error;
pub mod game;
pub mod numerics;

pub use classifier::{check_prediction, classify, classify_strategies, Agreement, RegimePrediction, Row};
pub use dynamics::{ew_step, simulate, simulate_from, DynState, LimitKind, LimitVerdict, SimOptions, Trajectory};
pub use equilibria::{JointDistribution, NashSet};
pub use error::{Error, Result};
pub use game::{Action, MixedStrategy, Player, SignRegime, SymmetricGame};
