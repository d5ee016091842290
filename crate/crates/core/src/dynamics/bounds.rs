use serde::{Deserialize, Serialize};

use super::state::DynState;
use crate::error::{Error, Result};
use crate::game::{Action, SignRegime, SymmetricGame};
use crate::numerics::log_sigmoid;

fn require_neg_pos(game: &SymmetricGame) -> Result<(f64, f64)> {
    let (e1, e2) = game.eps();
    if e1 < 0.0 && e2 > 0.0 {
        Ok((e1, e2))
    } else {
        Err(Error::WrongRegime(format!("need eps1 < 0 < eps2, got ({e1}, {e2})")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoFlipBound {
    pub n_max: f64,
    pub beta: f64,
    pub c: f64,
}

impl TwoFlipBound {
    /// Largest admissible number of two-flip events. W grows by at least a
    /// factor (1+C) per two-flip and a two-flip needs W ≤ 2β beforehand, so the
    /// last one can start from W just under 2β: floor(n_max) + 1.
    pub fn max_two_flips(&self) -> u64 {
        if self.n_max.is_nan() {
            return 0;
        }
        if self.n_max < 0.0 {
            0
        } else if self.n_max.is_infinite() {
            u64::MAX
        } else {
            self.n_max.floor() as u64 + 1
        }
    }
}

pub fn two_flip_bound(game: &SymmetricGame, eta: f64, w1: f64) -> Result<TwoFlipBound> {
    let (e1, e2) = require_neg_pos(game)?;
    if !(w1 > 0.0) {
        return Err(Error::InvalidParameter(format!("W1 = {w1} must be positive")));
    }
    let beta = eta * (-e1).max(e2);
    let rs = e2 / e1.abs();
    let m = |z: f64| z / ((1.0 + z) * (1.0 + z));
    let c = eta * (e2 - e1) * m(rs * (-beta).exp()).min(m(rs * beta.exp()));
    let n_max = (2.0 * beta / w1).ln() / c.ln_1p();
    Ok(TwoFlipBound { n_max, beta, c })
}

/// T(u) = u + η(ε₁r*eᵘ + ε₂)/(1 + r*eᵘ), the identical-initialization map in
/// shifted coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContractionMap {
    pub eta: f64,
    pub eps1: f64,
    pub eps2: f64,
    pub r_star: f64,
    pub gamma: f64,
}

pub fn contraction_map(game: &SymmetricGame, eta: f64) -> Result<ContractionMap> {
    let (e1, e2) = require_neg_pos(game)?;
    Ok(ContractionMap { eta, eps1: e1, eps2: e2, r_star: e2 / e1.abs(), gamma: e1.abs() + e2 })
}

impl ContractionMap {
    fn weight(&self, u: f64) -> f64 {
        // r*eᵘ/(1+r*eᵘ)², written symmetrically to stay finite for large |u|
        let x = u + self.r_star.ln();
        let e = (-x.abs()).exp();
        e / ((1.0 + e) * (1.0 + e))
    }

    pub fn apply(&self, u: f64) -> f64 {
        let z = self.r_star * u.exp();
        if z.is_infinite() {
            return u + self.eta * self.eps1;
        }
        u + self.eta * (self.eps1 * z + self.eps2) / (1.0 + z)
    }

    pub fn derivative(&self, u: f64) -> f64 {
        1.0 - self.eta * self.gamma * self.weight(u)
    }

    /// max(|1 − ηΓ/4|, 1): the supremum of |T′| over the whole line.
    pub fn lipschitz_bound(&self) -> f64 {
        (1.0 - self.eta * self.gamma / 4.0).abs().max(1.0)
    }

    /// Supremum of |T′| over |u| ≤ radius; below 1 whenever ηΓ < 8.
    pub fn lipschitz_on(&self, radius: f64) -> f64 {
        let peak = -self.r_star.ln();
        let wmax = self.weight(peak.clamp(-radius, radius));
        let wmin = self.weight(-radius).min(self.weight(radius));
        let k = self.eta * self.gamma;
        (1.0 - k * wmax).abs().max((1.0 - k * wmin).abs())
    }

    pub fn is_contraction(&self) -> bool {
        self.eta * self.gamma < 8.0
    }
}

/// Stepwise bound ln p_{player, action}⁽ᵗ⁺¹⁾ ≤ log_coef + t·log_rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecayBound {
    pub player: usize,
    pub action: Action,
    pub log_coef: f64,
    pub log_rate: f64,
}

impl DecayBound {
    /// Bound on ln p at state index `t_state` (= t + 1).
    pub fn log_bound(&self, t_state: u64, t0: u64) -> f64 {
        self.log_coef + self.log_rate * (t_state - t0) as f64
    }

    pub fn log_prob(&self, s: &DynState) -> f64 {
        match self.action {
            Action::Theta1 => log_sigmoid(s.u[self.player]),
            Action::Theta2 => log_sigmoid(-s.u[self.player]),
        }
    }

    /// Checks the bound with relative slack `rel`.
    pub fn holds(&self, s: &DynState, t0: u64, rel: f64) -> bool {
        let b = self.log_bound(s.t, t0);
        self.log_prob(s) <= b + rel * b.abs().max(1.0)
    }
}

/// Exponential decay bounds for every regime where each Δ keeps its initial
/// sign and moves away from zero: matched strict signs, ε₁<0<ε₂ with
/// opposite-sign Δ, ε₁>0>ε₂ with same-sign Δ, and a single zero ε with the
/// other one pushing away from the mixed families.
pub fn decay_bounds(game: &SymmetricGame, init: &DynState, eta: f64) -> Result<Vec<DecayBound>> {
    game.ensure_nondegenerate()?;
    let (e1, e2) = game.eps();
    let d = init.delta;
    let applies = match game.sign_regime() {
        SignRegime::NegNeg | SignRegime::PosPos => true,
        SignRegime::NegPos => d[0] * d[1] < 0.0,
        SignRegime::PosNeg => d[0] * d[1] > 0.0,
        SignRegime::ZeroNeg | SignRegime::PosZero => true,
        _ => false,
    };
    if !applies || d[0] == 0.0 || d[1] == 0.0 {
        return Err(Error::WrongRegime(format!(
            "no exponential bound for {:?} with Delta = ({}, {})",
            game.sign_regime(),
            d[0],
            d[1]
        )));
    }
    let mut out = Vec::with_capacity(2);
    for i in 0..2 {
        let dj = d[1 - i];
        let ui = init.u[i];
        let b = if dj < 0.0 {
            let rate = if game.sign_regime() == SignRegime::NegNeg && e1.abs() >= e2.abs() { e2 } else { dj };
            DecayBound { player: i, action: Action::Theta1, log_coef: ui, log_rate: eta * rate }
        } else {
            let rate = if game.sign_regime() == SignRegime::PosPos && e2.abs() >= e1.abs() { e1 } else { dj };
            DecayBound { player: i, action: Action::Theta2, log_coef: -ui, log_rate: -eta * rate }
        };
        out.push(b);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_flip_constants() {
        let g = SymmetricGame::from_eps(-1.0, 1.0).unwrap();
        let b = two_flip_bound(&g, 1.0, 2.0).unwrap();
        assert_eq!(b.beta, 1.0);
        assert_eq!(b.n_max, 0.0);
        let e = std::f64::consts::E;
        assert!((b.c - 2.0 * e / ((1.0 + e) * (1.0 + e))).abs() < 1e-15);
        assert!((b.c - 0.393_223_866_482_963_7).abs() < 1e-15);
        assert!(two_flip_bound(&SymmetricGame::from_eps(1.0, -1.0).unwrap(), 1.0, 1.0).is_err());
        assert!(two_flip_bound(&g, 1.0, 0.0).is_err());
    }

    #[test]
    fn max_flips_rounding() {
        let mk = |n_max| TwoFlipBound { n_max, beta: 1.0, c: 1.0 };
        assert_eq!(mk(-0.3).max_two_flips(), 0);
        assert_eq!(mk(0.0).max_two_flips(), 1);
        assert_eq!(mk(2.4).max_two_flips(), 3);
    }

    #[test]
    fn contraction_examples() {
        let g = SymmetricGame::from_eps(-1.0, 1.0).unwrap();
        let t = contraction_map(&g, 2.0).unwrap();
        assert_eq!(t.apply(0.0), 0.0);
        assert_eq!(t.derivative(0.0), 0.0);
        assert!(contraction_map(&g, 7.9 / 2.0).unwrap().is_contraction());
        assert!(!contraction_map(&g, 8.1 / 2.0).unwrap().is_contraction());
        assert!(t.lipschitz_on(5.0) < 1.0);
        assert_eq!(t.lipschitz_bound(), 1.0);
        let g = SymmetricGame::from_eps(-2.0, 5.0).unwrap();
        let t = contraction_map(&g, 0.3).unwrap();
        assert!(t.apply(0.0).abs() < 1e-15);
        assert!(contraction_map(&SymmetricGame::from_eps(1.0, -1.0).unwrap(), 1.0).is_err());
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let g = SymmetricGame::from_eps(-1.5, 0.7).unwrap();
        let t = contraction_map(&g, 0.8).unwrap();
        for &u in &[-3.0, -0.4, 0.0, 0.9, 2.5] {
            let h = 1e-6;
            let fd = (t.apply(u + h) - t.apply(u - h)) / (2.0 * h);
            assert!((fd - t.derivative(u)).abs() < 1e-8);
        }
    }
}
