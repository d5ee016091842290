use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{delta_functional, MixedStrategy, SymmetricGame};
use crate::numerics::sigmoid;

/// Admissible range of the log-ratio coordinates.
pub const U_CAP: f64 = 1e6;

/// One time step of the coupled system. `u[i] = ln(p_{i,1}/p_{i,2})` is the
/// canonical state; `p` and `delta` are derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DynState {
    pub t: u64,
    pub u: [f64; 2],
    pub p: [MixedStrategy; 2],
    pub delta: [f64; 2],
}

pub fn strategy_from_log_ratio(u: f64) -> MixedStrategy {
    MixedStrategy { p1: sigmoid(u), p2: sigmoid(-u) }
}

impl DynState {
    pub fn from_log_ratios(game: &SymmetricGame, t: u64, u: [f64; 2]) -> Self {
        let p = [strategy_from_log_ratio(u[0]), strategy_from_log_ratio(u[1])];
        let delta = [delta_functional(game, &p[0]), delta_functional(game, &p[1])];
        DynState { t, u, p, delta }
    }

    /// Initial state at t = 1 from interior strategies.
    pub fn from_strategies(game: &SymmetricGame, s1: &MixedStrategy, s2: &MixedStrategy) -> Result<Self> {
        let mut u = [0.0; 2];
        for (k, s) in [s1, s2].into_iter().enumerate() {
            if s.is_pure() {
                return Err(Error::InvalidInit(format!("player {} starts at a pure strategy", k + 1)));
            }
            u[k] = s.p1.ln() - s.p2.ln();
        }
        Ok(Self::from_log_ratios(game, 1, u))
    }

    /// û_i = u_i − ln r*, for mixed-sign games.
    pub fn u_hat(&self, game: &SymmetricGame) -> Option<[f64; 2]> {
        game.ratio_root().map(|r| {
            let l = r.ln();
            [self.u[0] - l, self.u[1] - l]
        })
    }

    /// Exact equality of the Δ values.
    pub fn identical_delta(&self) -> bool {
        self.delta[0] == self.delta[1]
    }
}

/// One exponential-weights update: u₁ += ηΔ₂, u₂ += ηΔ₁.
pub fn ew_step(game: &SymmetricGame, state: &DynState, eta: f64) -> Result<DynState> {
    game.ensure_nondegenerate()?;
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::InvalidParameter(format!("eta = {eta}")));
    }
    step_unchecked(game, state, eta)
}

pub(crate) fn step_unchecked(game: &SymmetricGame, state: &DynState, eta: f64) -> Result<DynState> {
    let u = [state.u[0] + eta * state.delta[1], state.u[1] + eta * state.delta[0]];
    let t = state.t + 1;
    if !(u[0].abs() <= U_CAP && u[1].abs() <= U_CAP) {
        return Err(Error::NonFiniteState { t, u1: u[0], u2: u[1] });
    }
    Ok(DynState::from_log_ratios(game, t, u))
}

/// Mirror image of a state under θ₁ ↔ θ₂ in the relabeled game.
pub fn relabel_state(relabeled_game: &SymmetricGame, state: &DynState) -> DynState {
    DynState::from_log_ratios(relabeled_game, state.t, [-state.u[0], -state.u[1]])
}
