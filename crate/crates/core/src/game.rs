//! 2×2 symmetric games and the (ε₁, ε₂) parameterization.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Action {
    #[serde(rename = "theta1")]
    Theta1,
    #[serde(rename = "theta2")]
    Theta2,
}

impl Action {
    pub const ALL: [Action; 2] = [Action::Theta1, Action::Theta2];

    pub fn other(self) -> Action {
        match self {
            Action::Theta1 => Action::Theta2,
            Action::Theta2 => Action::Theta1,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Action::Theta1 => 0,
            Action::Theta2 => 1,
        }
    }

    pub fn pure(self) -> MixedStrategy {
        match self {
            Action::Theta1 => MixedStrategy { p1: 1.0, p2: 0.0 },
            Action::Theta2 => MixedStrategy { p1: 0.0, p2: 1.0 },
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Theta1 => write!(f, "theta1"),
            Action::Theta2 => write!(f, "theta2"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn index(self) -> usize {
        match self {
            Player::One => 0,
            Player::Two => 1,
        }
    }

    pub fn other(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixedStrategy {
    pub p1: f64,
    pub p2: f64,
}

impl MixedStrategy {
    pub fn new(p1: f64, p2: f64) -> Result<Self> {
        if !(p1 >= 0.0 && p2 >= 0.0) || !p1.is_finite() || !p2.is_finite() {
            return Err(Error::InvalidDistribution(format!("({p1}, {p2})")));
        }
        if (p1 + p2 - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDistribution(format!("({p1}, {p2}) does not sum to 1")));
        }
        Ok(MixedStrategy { p1, p2 })
    }

    /// Strategy putting `p` on θ₁.
    pub fn from_first(p: f64) -> Result<Self> {
        Self::new(p, 1.0 - p)
    }

    pub fn is_pure(&self) -> bool {
        self.p1.min(self.p2) == 0.0
    }

    pub fn prob(&self, a: Action) -> f64 {
        match a {
            Action::Theta1 => self.p1,
            Action::Theta2 => self.p2,
        }
    }

    /// Same strategy with θ₁ and θ₂ swapped.
    pub fn relabeled(&self) -> Self {
        MixedStrategy { p1: self.p2, p2: self.p1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignRegime {
    NegNeg,
    PosPos,
    NegPos,
    PosNeg,
    ZeroNeg,
    ZeroPos,
    NegZero,
    PosZero,
    Degenerate,
}

impl SignRegime {
    pub fn from_eps(e1: f64, e2: f64) -> SignRegime {
        use std::cmp::Ordering::*;
        let s = |x: f64| x.partial_cmp(&0.0).unwrap_or(Equal);
        match (s(e1), s(e2)) {
            (Less, Less) => SignRegime::NegNeg,
            (Greater, Greater) => SignRegime::PosPos,
            (Less, Greater) => SignRegime::NegPos,
            (Greater, Less) => SignRegime::PosNeg,
            (Equal, Less) => SignRegime::ZeroNeg,
            (Equal, Greater) => SignRegime::ZeroPos,
            (Less, Equal) => SignRegime::NegZero,
            (Greater, Equal) => SignRegime::PosZero,
            (Equal, Equal) => SignRegime::Degenerate,
        }
    }

    pub fn is_mixed_sign(self) -> bool {
        matches!(self, SignRegime::NegPos | SignRegime::PosNeg)
    }
}

/// Symmetric 2×2 game. Player 1 receives `payoff(own, other)`:
///
/// ```text
///            other θ₁  other θ₂
///   own θ₁      a         c
///   own θ₂      b         d
/// ```
///
/// Player 2's matrix is the transpose and is never stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymmetricGame {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl SymmetricGame {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        for x in [a, b, c, d] {
            if !x.is_finite() {
                return Err(Error::NonFinitePayoff(x));
            }
        }
        Ok(SymmetricGame { a, b, c, d })
    }

    /// Realizes (ε₁, ε₂) with b = d = 0.
    pub fn from_eps(eps1: f64, eps2: f64) -> Result<Self> {
        Self::new(eps1, 0.0, eps2, 0.0)
    }

    pub fn eps1(&self) -> f64 {
        self.a - self.b
    }

    pub fn eps2(&self) -> f64 {
        self.c - self.d
    }

    pub fn eps(&self) -> (f64, f64) {
        (self.eps1(), self.eps2())
    }

    pub fn is_degenerate(&self) -> bool {
        self.eps1() == 0.0 && self.eps2() == 0.0
    }

    pub fn sign_regime(&self) -> SignRegime {
        SignRegime::from_eps(self.eps1(), self.eps2())
    }

    pub fn ensure_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateGame)
        } else {
            Ok(())
        }
    }

    pub fn payoff(&self, own: Action, other: Action) -> f64 {
        match (own, other) {
            (Action::Theta1, Action::Theta1) => self.a,
            (Action::Theta2, Action::Theta1) => self.b,
            (Action::Theta1, Action::Theta2) => self.c,
            (Action::Theta2, Action::Theta2) => self.d,
        }
    }

    /// The same game with θ₁ and θ₂ swapped; (ε₁, ε₂) becomes (−ε₂, −ε₁).
    pub fn relabeled(&self) -> Self {
        SymmetricGame { a: self.d, b: self.c, c: self.b, d: self.a }
    }

    /// Γ = |ε₁| + |ε₂|.
    pub fn gamma(&self) -> f64 {
        self.eps1().abs() + self.eps2().abs()
    }

    /// Root r* = |ε₂|/|ε₁| of f, defined when the signs of ε differ strictly.
    pub fn ratio_root(&self) -> Option<f64> {
        let (e1, e2) = self.eps();
        if e1 * e2 < 0.0 {
            Some(e2.abs() / e1.abs())
        } else {
            None
        }
    }

    /// The symmetric strictly mixed profile p_SE.
    pub fn p_se(&self) -> Option<MixedStrategy> {
        let (e1, e2) = self.eps();
        if e1 * e2 < 0.0 {
            let g = e1.abs() + e2.abs();
            Some(MixedStrategy { p1: e2.abs() / g, p2: e1.abs() / g })
        } else {
            None
        }
    }

    /// Step-size threshold 8/(|ε₁|+|ε₂|) for mixed-sign games.
    pub fn eta_threshold(&self) -> f64 {
        8.0 / self.gamma()
    }
}

pub fn epsilon_params(game: &SymmetricGame) -> (f64, f64) {
    game.eps()
}

/// u₁(x, y) with x the first player's strategy.
fn bilinear(game: &SymmetricGame, x: &MixedStrategy, y: &MixedStrategy) -> f64 {
    let mut s = 0.0;
    for m in Action::ALL {
        for n in Action::ALL {
            s += x.prob(m) * y.prob(n) * game.payoff(m, n);
        }
    }
    s
}

/// Expected utility of `player` playing `own` against `other`.
pub fn expected_utility(
    game: &SymmetricGame,
    player: Player,
    own: &MixedStrategy,
    other: &MixedStrategy,
) -> f64 {
    match player {
        Player::One => player1_utility(game, own, other),
        Player::Two => player2_utility(game, other, own),
    }
}

pub fn player1_utility(game: &SymmetricGame, x: &MixedStrategy, y: &MixedStrategy) -> f64 {
    bilinear(game, x, y)
}

/// u₂(x, y) = u₁(y, x), where x is still player 1's strategy.
pub fn player2_utility(game: &SymmetricGame, x: &MixedStrategy, y: &MixedStrategy) -> f64 {
    bilinear(game, y, x)
}

/// Δ = p₁ε₁ + p₂ε₂: the advantage of θ₁ over θ₂ against `s`.
pub fn delta_functional(game: &SymmetricGame, s: &MixedStrategy) -> f64 {
    s.p1 * game.eps1() + s.p2 * game.eps2()
}

/// f(r) = (ε₁r + ε₂)/(1 + r).
pub fn ratio_response(game: &SymmetricGame, r: f64) -> f64 {
    (game.eps1() * r + game.eps2()) / (1.0 + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: f64, b: f64, c: f64, d: f64) -> SymmetricGame {
        SymmetricGame::new(a, b, c, d).unwrap()
    }

    #[test]
    fn eps_and_regimes() {
        assert_eq!(epsilon_params(&g(3.0, 1.0, 2.0, 5.0)), (2.0, -3.0));
        let deg = g(1.0, 1.0, 1.0, 1.0);
        assert_eq!(deg.eps(), (0.0, 0.0));
        assert_eq!(deg.sign_regime(), SignRegime::Degenerate);
        assert!(deg.is_degenerate());
        let np = g(0.0, 1.0, 1.0, 0.0);
        assert_eq!(np.eps(), (-1.0, 1.0));
        assert_eq!(np.sign_regime(), SignRegime::NegPos);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(SymmetricGame::new(f64::NAN, 0.0, 0.0, 0.0).is_err());
        assert!(SymmetricGame::new(0.0, f64::INFINITY, 0.0, 0.0).is_err());
    }

    #[test]
    fn utility_examples() {
        let game = g(3.0, 1.0, 2.0, 5.0);
        let t1 = Action::Theta1.pure();
        let t2 = Action::Theta2.pure();
        let half = MixedStrategy::new(0.5, 0.5).unwrap();
        assert_eq!(expected_utility(&game, Player::One, &t1, &t1), 3.0);
        assert_eq!(expected_utility(&game, Player::One, &half, &half), 2.75);
        // player 2 on θ₁ against θ₂ collects u₁(θ₁, θ₂) = c
        assert_eq!(expected_utility(&game, Player::Two, &t1, &t2), 2.0);
    }

    #[test]
    fn delta_examples() {
        let half = MixedStrategy::new(0.5, 0.5).unwrap();
        assert_eq!(delta_functional(&SymmetricGame::from_eps(-1.0, 1.0).unwrap(), &half), 0.0);
        let s = MixedStrategy::new(0.3, 0.7).unwrap();
        assert_eq!(delta_functional(&SymmetricGame::from_eps(2.0, 2.0).unwrap(), &s), 2.0);
        let game = SymmetricGame::from_eps(-1.0, 3.0).unwrap();
        let pse = game.p_se().unwrap();
        assert_eq!((pse.p1, pse.p2), (0.75, 0.25));
        assert_eq!(delta_functional(&game, &pse), 0.0);
    }

    #[test]
    fn relabel_swaps_eps() {
        let game = g(3.0, 1.0, 2.0, 5.0);
        let r = game.relabeled();
        assert_eq!(r.eps(), (3.0, -2.0));
        for m in Action::ALL {
            for n in Action::ALL {
                assert_eq!(r.payoff(m, n), game.payoff(m.other(), n.other()));
            }
        }
    }

    #[test]
    fn mixed_strategy_validation() {
        assert!(MixedStrategy::new(0.5, 0.6).is_err());
        assert!(MixedStrategy::new(-0.1, 1.1).is_err());
        assert!(MixedStrategy::new(1.0, 0.0).unwrap().is_pure());
        assert!(!MixedStrategy::new(0.4, 0.6).unwrap().is_pure());
    }
}
