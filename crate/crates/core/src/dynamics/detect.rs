use std::fmt;

use serde::{Deserialize, Serialize};

use super::state::DynState;
use crate::equilibria::{is_nash_profile, verify_pure_ne};
use crate::game::{Action, MixedStrategy, SymmetricGame};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// |u| beyond which a player counts as pure (p within ~1e−20 of a vertex).
    pub u_pure: f64,
    /// |u| beyond which strictly monotone outward motion over the whole
    /// window also counts as pure. Needed for the slow logarithmic drift of
    /// ε₁ = 0 games.
    pub u_drift: f64,
    pub tol_mix: f64,
    pub tol_osc: f64,
    pub window: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { u_pure: 46.0, u_drift: 10.0, tol_mix: 1e-8, tol_osc: 1e-9, window: 64 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum LimitKind {
    PureNE { pair: (Action, Action) },
    StrictMixedNE { profile: MixedStrategy },
    MixedFamilyNE { p1: MixedStrategy, p2: MixedStrategy },
    PeriodTwoOscillation,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimitVerdict {
    pub kind: LimitKind,
    pub residual: f64,
}

impl LimitVerdict {
    pub fn undecided() -> Self {
        LimitVerdict { kind: LimitKind::Undecided, residual: f64::NAN }
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self.kind, LimitKind::Undecided)
    }
}

impl fmt::Display for LimitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitKind::PureNE { pair } => write!(f, "PureNE({},{})", pair.0, pair.1),
            LimitKind::StrictMixedNE { profile } => {
                write!(f, "StrictMixedNE(({},{}))", profile.p1, profile.p2)
            }
            LimitKind::MixedFamilyNE { p1, p2 } => {
                write!(f, "MixedFamilyNE(({},{}),({},{}))", p1.p1, p1.p2, p2.p1, p2.p2)
            }
            LimitKind::PeriodTwoOscillation => write!(f, "PeriodTwoOscillation"),
            LimitKind::Undecided => write!(f, "Undecided"),
        }
    }
}

impl fmt::Display for LimitVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Status {
    Pure(Action),
    Settled,
    Moving,
}

fn player_status(tail: &[DynState], i: usize, tol: &Tolerances) -> Status {
    let last = tail[tail.len() - 1].u[i];
    let mut nondecr = true;
    let mut nonincr = true;
    let mut incr = true;
    let mut decr = true;
    let mut spread: f64 = 0.0;
    for w in tail.windows(2) {
        let d = w[1].u[i] - w[0].u[i];
        nondecr &= d >= 0.0;
        nonincr &= d <= 0.0;
        incr &= d > 0.0;
        decr &= d < 0.0;
    }
    for s in tail {
        spread = spread.max((s.u[i] - last).abs());
    }
    let settled = spread < tol.tol_mix;
    if (last >= tol.u_pure && nondecr) || (last >= tol.u_drift && incr && !settled) {
        Status::Pure(Action::Theta1)
    } else if (last <= -tol.u_pure && nonincr) || (last <= -tol.u_drift && decr && !settled) {
        Status::Pure(Action::Theta2)
    } else if settled {
        Status::Settled
    } else {
        Status::Moving
    }
}

/// Classifies the tail of a trajectory. Uses the last `tol.window` states and
/// returns Undecided when fewer are available.
pub fn detect_limit(tail: &[DynState], game: &SymmetricGame, tol: &Tolerances) -> LimitVerdict {
    if tail.len() < tol.window || tol.window < 3 {
        return LimitVerdict::undecided();
    }
    let tail = &tail[tail.len() - tol.window..];
    let last = &tail[tail.len() - 1];

    if let (Some(pse), Some(_)) = (game.p_se(), game.ratio_root()) {
        let mut worst: f64 = 0.0;
        for s in tail {
            let uh = s.u_hat(game).unwrap();
            worst = worst.max(uh[0].abs()).max(uh[1].abs());
        }
        if worst < tol.tol_mix {
            return LimitVerdict { kind: LimitKind::StrictMixedNE { profile: pse }, residual: worst };
        }
    }

    let st = [player_status(tail, 0, tol), player_status(tail, 1, tol)];
    match st {
        [Status::Pure(m), Status::Pure(n)] => {
            if verify_pure_ne(game, (m, n)) {
                let residual = last.p[0].prob(m.other()).max(last.p[1].prob(n.other()));
                return LimitVerdict { kind: LimitKind::PureNE { pair: (m, n) }, residual };
            }
            return LimitVerdict::undecided();
        }
        [Status::Pure(m), Status::Settled] | [Status::Settled, Status::Pure(m)] => {
            let (x, y) = if matches!(st[0], Status::Pure(_)) {
                (m.pure(), last.p[1])
            } else {
                (last.p[0], m.pure())
            };
            if is_nash_profile(game, &x, &y, 1e-9) {
                let k = if matches!(st[0], Status::Pure(_)) { 1 } else { 0 };
                let spread = tail.iter().map(|s| (s.u[k] - last.u[k]).abs()).fold(0.0, f64::max);
                return LimitVerdict { kind: LimitKind::MixedFamilyNE { p1: x, p2: y }, residual: spread };
            }
        }
        _ => {}
    }

    let dist = |a: &DynState, b: &DynState| (a.u[0] - b.u[0]).abs().max((a.u[1] - b.u[1]).abs());
    let two = tail.windows(3).map(|w| dist(&w[2], &w[0])).fold(0.0, f64::max);
    let one = tail.windows(2).map(|w| dist(&w[1], &w[0])).fold(f64::INFINITY, f64::min);
    if two < tol.tol_osc && one > 10.0 * tol.tol_osc {
        return LimitVerdict { kind: LimitKind::PeriodTwoOscillation, residual: two };
    }
    LimitVerdict::undecided()
}
