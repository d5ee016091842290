use serde::{Deserialize, Serialize};

use super::state::DynState;
use crate::error::{Error, Result};
use crate::game::SymmetricGame;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FlipKind {
    ZeroFlip,
    OneFlip,
    TwoFlip,
}

impl std::fmt::Display for FlipKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FlipKind::ZeroFlip => "ZeroFlip",
            FlipKind::OneFlip => "OneFlip",
            FlipKind::TwoFlip => "TwoFlip",
        };
        f.write_str(s)
    }
}

/// Flip on the step t → t+1, stored under the pre-step index t.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlipEvent {
    pub t: u64,
    pub kind: FlipKind,
}

/// W = û_j − û_i (j the player with the larger initial ratio) and V = |û₁| + |û₂|.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Potential {
    pub t: u64,
    pub w: f64,
    pub v: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FlipCounts {
    pub zero: u64,
    pub one: u64,
    pub two: u64,
}

impl FlipCounts {
    pub fn add(&mut self, k: FlipKind) {
        match k {
            FlipKind::ZeroFlip => self.zero += 1,
            FlipKind::OneFlip => self.one += 1,
            FlipKind::TwoFlip => self.two += 1,
        }
    }
}

fn sgn(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Incremental flip classifier for one run of a mixed-sign game.
#[derive(Debug, Clone)]
pub struct FlipTracker {
    ln_root: f64,
    /// (i, j) with u_j⁽¹⁾ ≥ u_i⁽¹⁾.
    order: (usize, usize),
}

impl FlipTracker {
    pub fn new(game: &SymmetricGame, init: &DynState) -> Result<Self> {
        let r = game.ratio_root().ok_or_else(|| {
            Error::WrongRegime(format!("flips need eps1*eps2 < 0, got {:?}", game.sign_regime()))
        })?;
        let order = if init.u[1] > init.u[0] { (0, 1) } else { (1, 0) };
        Ok(FlipTracker { ln_root: r.ln(), order })
    }

    pub fn u_hat(&self, s: &DynState) -> [f64; 2] {
        [s.u[0] - self.ln_root, s.u[1] - self.ln_root]
    }

    pub fn potential(&self, s: &DynState) -> Potential {
        let h = self.u_hat(s);
        Potential { t: s.t, w: h[self.order.1] - h[self.order.0], v: h[0].abs() + h[1].abs() }
    }

    pub fn classify(&self, before: &DynState, after: &DynState) -> FlipKind {
        let a = self.u_hat(before);
        let b = self.u_hat(after);
        let crossed = (0..2).filter(|&k| sgn(a[k]) * sgn(b[k]) < 0).count();
        match crossed {
            2 => FlipKind::TwoFlip,
            1 => FlipKind::OneFlip,
            _ => {
                let landed = (0..2).filter(|&k| b[k] == 0.0 && a[k] != 0.0).count();
                if landed == 1 {
                    FlipKind::OneFlip
                } else {
                    FlipKind::ZeroFlip
                }
            }
        }
    }
}

/// Per-step flip kinds and potentials for consecutive states.
pub fn flip_events(states: &[DynState], game: &SymmetricGame) -> Result<(Vec<FlipEvent>, Vec<Potential>)> {
    let Some(first) = states.first() else {
        game.ratio_root().ok_or_else(|| Error::WrongRegime("eps1*eps2 >= 0".into()))?;
        return Ok((vec![], vec![]));
    };
    let tr = FlipTracker::new(game, first)?;
    let events = states
        .windows(2)
        .map(|w| FlipEvent { t: w[0].t, kind: tr.classify(&w[0], &w[1]) })
        .collect();
    let potentials = states.iter().map(|s| tr.potential(s)).collect();
    Ok((events, potentials))
}
