use serde::{Deserialize, Serialize};

use super::state::DynState;
use crate::error::{Error, Result};
use crate::game::{Player, SymmetricGame};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillationConstruction {
    pub game: SymmetricGame,
    pub init: DynState,
    pub eta: f64,
    pub a: f64,
}

fn amplitude_scale(a: f64) -> Result<f64> {
    if !(a >= 1e-8) || !a.is_finite() {
        return Err(Error::InvalidParameter(format!("amplitude a = {a} must be finite and at least 1e-8")));
    }
    Ok(2.0 * a / (a / 2.0).tanh())
}

/// Identical initialization at u = a for ε₁ = −2a·coth(a/2) = −ε₂ and η = 1,
/// where T(a) = −a and T(−a) = a.
pub fn construct_oscillation_identical(a: f64) -> Result<OscillationConstruction> {
    let e = amplitude_scale(a)?;
    let game = SymmetricGame::from_eps(-e, e)?;
    Ok(OscillationConstruction { game, init: DynState::from_log_ratios(&game, 1, [a, a]), eta: 1.0, a })
}

/// Equal-and-opposite initialization (a, −a) for ε₁ = 2a·coth(a/2) = −ε₂ and η = 1.
/// The relation u₂ = −u₁ persists and each u alternates between ±a.
pub fn construct_oscillation_opposite(a: f64) -> Result<OscillationConstruction> {
    let e = amplitude_scale(a)?;
    let game = SymmetricGame::from_eps(e, -e)?;
    Ok(OscillationConstruction { game, init: DynState::from_log_ratios(&game, 1, [a, -a]), eta: 1.0, a })
}

/// Initialization for ε₁ = 0 < ε₂ under which player j's ratio stays below A
/// while player i's diverges, so the run ends in a strictly mixed family member.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixedLimitConstruction {
    pub init: DynState,
    pub diverging: Player,
    pub r_i_init: f64,
    pub r_j_init: f64,
    pub cap: f64,
    pub eta: f64,
    pub eps2: f64,
}

impl MixedLimitConstruction {
    /// ln of the guaranteed envelope r_i⁽¹⁾·exp(ηε₂(t−1)/(1+A)) at state index t.
    pub fn log_envelope(&self, t: u64) -> f64 {
        self.r_i_init.ln() + self.eta * self.eps2 * (t - self.init.t) as f64 / (1.0 + self.cap)
    }
}

pub fn construct_mixed_limit_example(
    game: &SymmetricGame,
    r_j_init: f64,
    cap: f64,
    eta: f64,
    diverging: Player,
) -> Result<MixedLimitConstruction> {
    let (e1, e2) = game.eps();
    if !(e1 == 0.0 && e2 > 0.0) {
        return Err(Error::WrongRegime(format!("need eps1 = 0 < eps2, got ({e1}, {e2})")));
    }
    if !(r_j_init > 0.0 && cap > r_j_init && cap.is_finite()) {
        return Err(Error::InvalidParameter(format!("need A > r_j > 0, got A = {cap}, r_j = {r_j_init}")));
    }
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::InvalidParameter(format!("eta = {eta}")));
    }
    let x = eta * e2 / (1.0 + cap);
    let r_i = eta * e2 / (-(-x).exp_m1() * (cap / r_j_init).ln());
    let mut u = [0.0; 2];
    u[diverging.index()] = r_i.ln();
    u[diverging.other().index()] = r_j_init.ln();
    Ok(MixedLimitConstruction {
        init: DynState::from_log_ratios(game, 1, u),
        diverging,
        r_i_init: r_i,
        r_j_init,
        cap,
        eta,
        eps2: e2,
    })
}
