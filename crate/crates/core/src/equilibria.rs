//! Nash landscape of a symmetric 2×2 game and correlated-equilibrium membership.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{
    delta_functional, player1_utility, player2_utility, Action, MixedStrategy, Player,
    SignRegime, SymmetricGame,
};

/// Slack for weak inequalities in pure-NE tests.
pub const NE_SLACK: f64 = 1e-12;
/// Slack for CE inequalities.
pub const CE_SLACK: f64 = 1e-9;
/// Width of the band in which the two CE routes may legitimately disagree.
pub const CE_BORDERLINE: f64 = 2e-9;

/// A continuum of equilibria in which `pure_player` plays `action` and the
/// other player mixes arbitrarily.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedFamily {
    pub pure_player: Player,
    pub action: Action,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NashSet {
    pub pure: Vec<(Action, Action)>,
    pub mixed: Option<MixedStrategy>,
    pub mixed_families: Vec<MixedFamily>,
}

pub fn nash_landscape(game: &SymmetricGame) -> Result<NashSet> {
    use Action::*;
    let set = match game.sign_regime() {
        SignRegime::Degenerate => return Err(Error::DegenerateGame),
        SignRegime::NegNeg => NashSet { pure: vec![(Theta2, Theta2)], mixed: None, mixed_families: vec![] },
        SignRegime::PosPos => NashSet { pure: vec![(Theta1, Theta1)], mixed: None, mixed_families: vec![] },
        SignRegime::NegPos => NashSet {
            pure: vec![(Theta1, Theta2), (Theta2, Theta1)],
            mixed: game.p_se(),
            mixed_families: vec![],
        },
        SignRegime::PosNeg => NashSet {
            pure: vec![(Theta1, Theta1), (Theta2, Theta2)],
            mixed: game.p_se(),
            mixed_families: vec![],
        },
        SignRegime::ZeroNeg => NashSet {
            pure: vec![(Theta1, Theta1), (Theta2, Theta2)],
            mixed: None,
            mixed_families: vec![],
        },
        SignRegime::ZeroPos => NashSet {
            pure: vec![(Theta1, Theta1), (Theta2, Theta1), (Theta1, Theta2)],
            mixed: None,
            mixed_families: vec![
                MixedFamily { pure_player: Player::One, action: Theta1 },
                MixedFamily { pure_player: Player::Two, action: Theta1 },
            ],
        },
        SignRegime::NegZero | SignRegime::PosZero => {
            let inner = nash_landscape(&game.relabeled())?;
            NashSet {
                pure: inner.pure.iter().map(|&(m, n)| (m.other(), n.other())).collect(),
                mixed: None,
                mixed_families: inner
                    .mixed_families
                    .iter()
                    .map(|f| MixedFamily { pure_player: f.pure_player, action: f.action.other() })
                    .collect(),
            }
        }
    };
    Ok(set)
}

/// Largest gain either player obtains by a unilateral pure deviation.
pub fn deviation_gain(game: &SymmetricGame, x: &MixedStrategy, y: &MixedStrategy) -> f64 {
    let u1 = player1_utility(game, x, y);
    let u2 = player2_utility(game, x, y);
    let mut gain = f64::NEG_INFINITY;
    for a in Action::ALL {
        gain = gain.max(player1_utility(game, &a.pure(), y) - u1);
        gain = gain.max(player2_utility(game, x, &a.pure()) - u2);
    }
    gain
}

pub fn is_nash_profile(game: &SymmetricGame, x: &MixedStrategy, y: &MixedStrategy, tol: f64) -> bool {
    deviation_gain(game, x, y) <= tol
}

pub fn verify_pure_ne(game: &SymmetricGame, pair: (Action, Action)) -> bool {
    let (m, n) = pair;
    let g1 = game.payoff(m.other(), n) - game.payoff(m, n);
    // player 2 receives payoff(own, other) with roles swapped
    let g2 = game.payoff(n.other(), m) - game.payoff(n, m);
    g1 <= NE_SLACK && g2 <= NE_SLACK
}

/// Joint distribution ν over (θ_m, θ_n), m for player 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JointDistribution {
    pub nu: [[f64; 2]; 2],
}

impl JointDistribution {
    pub fn new(nu11: f64, nu12: f64, nu21: f64, nu22: f64) -> Result<Self> {
        let v = [nu11, nu12, nu21, nu22];
        if v.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::InvalidDistribution(format!("{v:?}")));
        }
        if (v.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDistribution(format!("{v:?} does not sum to 1")));
        }
        Ok(JointDistribution { nu: [[nu11, nu12], [nu21, nu22]] })
    }

    pub fn product(x: &MixedStrategy, y: &MixedStrategy) -> Self {
        JointDistribution { nu: [[x.p1 * y.p1, x.p1 * y.p2], [x.p2 * y.p1, x.p2 * y.p2]] }
    }

    pub fn point_mass(pair: (Action, Action)) -> Self {
        let mut nu = [[0.0; 2]; 2];
        nu[pair.0.index()][pair.1.index()] = 1.0;
        JointDistribution { nu }
    }

    pub fn get(&self, m: Action, n: Action) -> f64 {
        self.nu[m.index()][n.index()]
    }

    fn relabeled(&self) -> Self {
        let nu = self.nu;
        JointDistribution { nu: [[nu[1][1], nu[1][0]], [nu[0][1], nu[0][0]]] }
    }
}

/// Margins (lhs − rhs, nonnegative when satisfied) of the four recommendation
/// constraints, computed from raw payoffs.
pub fn ce_margins_bruteforce(game: &SymmetricGame, nu: &JointDistribution) -> [f64; 4] {
    let mut out = [0.0; 4];
    let mut k = 0;
    for rec in Action::ALL {
        let dev = rec.other();
        let mut s = 0.0;
        for n in Action::ALL {
            s += nu.get(rec, n) * (game.payoff(rec, n) - game.payoff(dev, n));
        }
        out[k] = s;
        k += 1;
    }
    for rec in Action::ALL {
        let dev = rec.other();
        let mut s = 0.0;
        for m in Action::ALL {
            s += nu.get(m, rec) * (game.payoff(rec, m) - game.payoff(dev, m));
        }
        out[k] = s;
        k += 1;
    }
    out
}

pub fn ce_membership_bruteforce(game: &SymmetricGame, nu: &JointDistribution) -> bool {
    ce_margins_bruteforce(game, nu).iter().all(|&m| m >= -CE_SLACK)
}

/// Margins of the closed-form conditions for the game's sign regime.
pub fn ce_margins_closed_form(game: &SymmetricGame, nu: &JointDistribution) -> Result<Vec<f64>> {
    let (e1, e2) = game.eps();
    let [[n11, n12], [n21, n22]] = nu.nu;
    let m = match game.sign_regime() {
        SignRegime::Degenerate => return Err(Error::DegenerateGame),
        SignRegime::NegPos => {
            // max{(|ε₁|/ε₂)ν11, (ε₂/|ε₁|)ν22} ≤ min{ν12, ν21}
            let k = e1.abs() / e2;
            let kinv = e2 / e1.abs();
            vec![n12 - k * n11, n21 - k * n11, n12 - kinv * n22, n21 - kinv * n22]
        }
        SignRegime::PosNeg => {
            // (|ε₂|/ε₁)·max{ν12, ν21} ≤ ν11 and (ε₁/|ε₂|)·max{ν12, ν21} ≤ ν22
            let k = e2.abs() / e1;
            let kinv = e1 / e2.abs();
            vec![n11 - k * n12, n11 - k * n21, n22 - kinv * n12, n22 - kinv * n21]
        }
        SignRegime::ZeroNeg => vec![-n12, -n21],
        SignRegime::ZeroPos => vec![-n22],
        SignRegime::NegNeg => vec![-n11, -n12, -n21],
        SignRegime::PosPos => vec![-n12, -n21, -n22],
        SignRegime::NegZero | SignRegime::PosZero => {
            return ce_margins_closed_form(&game.relabeled(), &nu.relabeled());
        }
    };
    Ok(m)
}

pub fn ce_membership_closed_form(game: &SymmetricGame, nu: &JointDistribution) -> Result<bool> {
    Ok(ce_margins_closed_form(game, nu)?.iter().all(|&m| m >= -CE_SLACK))
}

/// True when some constraint of either route is within the borderline band of
/// tight without being exactly tight; the two routes may then disagree.
pub fn ce_is_borderline(game: &SymmetricGame, nu: &JointDistribution) -> Result<bool> {
    let closed = ce_margins_closed_form(game, nu)?;
    let brute = ce_margins_bruteforce(game, nu);
    Ok(closed
        .iter()
        .chain(brute.iter())
        .any(|&m| m != 0.0 && m.abs() <= CE_BORDERLINE))
}

/// Checks the strict-mixed indifference Δ(p_SE) = 0.
pub fn p_se_indifference(game: &SymmetricGame) -> Option<f64> {
    game.p_se().map(|p| delta_functional(game, &p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Action::*;

    fn eg(e1: f64, e2: f64) -> SymmetricGame {
        SymmetricGame::from_eps(e1, e2).unwrap()
    }

    #[test]
    fn landscape_examples() {
        let s = nash_landscape(&eg(-2.0, -1.0)).unwrap();
        assert_eq!(s.pure, vec![(Theta2, Theta2)]);
        assert!(s.mixed.is_none());

        let s = nash_landscape(&eg(-1.0, 3.0)).unwrap();
        assert_eq!(s.pure, vec![(Theta1, Theta2), (Theta2, Theta1)]);
        assert_eq!(s.mixed, Some(MixedStrategy { p1: 0.75, p2: 0.25 }));

        let s = nash_landscape(&eg(0.0, 2.0)).unwrap();
        assert_eq!(s.pure.len(), 3);
        assert_eq!(s.mixed_families.len(), 2);

        assert_eq!(nash_landscape(&eg(0.0, 0.0)), Err(Error::DegenerateGame));
    }

    #[test]
    fn relabeled_zero_rows() {
        let s = nash_landscape(&eg(-1.0, 0.0)).unwrap();
        assert_eq!(s.pure, vec![(Theta2, Theta2), (Theta1, Theta2), (Theta2, Theta1)]);
        assert!(s.mixed_families.iter().all(|f| f.action == Theta2));
    }

    #[test]
    fn pure_ne_examples() {
        assert!(verify_pure_ne(&eg(-2.0, -1.0), (Theta2, Theta2)));
        assert!(!verify_pure_ne(&eg(-2.0, -1.0), (Theta1, Theta1)));
        assert!(verify_pure_ne(&eg(0.0, 2.0), (Theta1, Theta2)));
    }

    #[test]
    fn ce_examples() {
        let g = eg(-1.0, 1.0);
        let unif = JointDistribution::new(0.25, 0.25, 0.25, 0.25).unwrap();
        assert!(ce_membership_closed_form(&g, &unif).unwrap());
        assert!(ce_membership_bruteforce(&g, &unif));
        let corner = JointDistribution::new(1.0, 0.0, 0.0, 0.0).unwrap();
        assert!(!ce_membership_closed_form(&g, &corner).unwrap());
        assert!(!ce_membership_bruteforce(&g, &corner));

        let g = eg(-2.0, -1.0);
        let pm = JointDistribution::point_mass((Theta2, Theta2));
        assert!(ce_membership_closed_form(&g, &pm).unwrap());
        assert!(ce_membership_bruteforce(&g, &pm));

        let g = eg(-1.0, 3.0);
        assert!(!ce_membership_bruteforce(&g, &JointDistribution::point_mass((Theta1, Theta1))));
        let p = g.p_se().unwrap();
        assert!(ce_membership_bruteforce(&g, &JointDistribution::product(&p, &p)));
        assert!(ce_membership_closed_form(&g, &JointDistribution::product(&p, &p)).unwrap());
    }

    #[test]
    fn pos_neg_closed_form() {
        // coordination game: both pure NEs and p_SE are CE
        let g = eg(2.0, -1.0);
        for pair in [(Theta1, Theta1), (Theta2, Theta2)] {
            assert!(ce_membership_closed_form(&g, &JointDistribution::point_mass(pair)).unwrap());
        }
        let p = g.p_se().unwrap();
        assert!(ce_membership_closed_form(&g, &JointDistribution::product(&p, &p)).unwrap());
        assert!(!ce_membership_closed_form(&g, &JointDistribution::point_mass((Theta1, Theta2))).unwrap());
    }

    #[test]
    fn invalid_joint() {
        assert!(JointDistribution::new(0.5, 0.5, 0.5, 0.0).is_err());
        assert!(JointDistribution::new(-0.1, 0.5, 0.6, 0.0).is_err());
    }
}
