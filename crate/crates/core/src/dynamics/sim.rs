use std::collections::VecDeque;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use super::detect::{detect_limit, LimitKind, LimitVerdict, Tolerances};
use super::flips::{FlipCounts, FlipEvent, FlipKind, FlipTracker, Potential};
use super::state::{step_unchecked, DynState};
use crate::equilibria::verify_pure_ne;
use crate::error::{Error, Result};
use crate::game::{Action, MixedStrategy, SymmetricGame};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Recording {
    /// Every state.
    All,
    /// Every state up to t = 1000, then every 10th, plus the last.
    Thinned,
    /// Only the final state.
    Final,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimOptions {
    pub tolerances: Tolerances,
    pub recording: Recording,
    pub record_potentials: bool,
    pub allow_degenerate_init: bool,
    pub early_stop: bool,
}

impl Default for SimOptions {
    fn default() -> Self {
        SimOptions {
            tolerances: Tolerances::default(),
            recording: Recording::Thinned,
            record_potentials: true,
            allow_degenerate_init: false,
            early_stop: true,
        }
    }
}

pub const DEFAULT_HORIZON: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub game: SymmetricGame,
    pub eta: f64,
    pub init: DynState,
    pub states: Vec<DynState>,
    /// One- and two-flip events; zero flips are only counted.
    pub events: Vec<FlipEvent>,
    pub flip_counts: FlipCounts,
    pub potentials: Vec<Potential>,
    pub verdict: LimitVerdict,
    pub final_state: DynState,
}

impl Trajectory {
    pub fn steps(&self) -> u64 {
        self.final_state.t
    }

    pub fn two_flips(&self) -> u64 {
        self.flip_counts.two
    }
}

fn keep(rec: Recording, t: u64) -> bool {
    match rec {
        Recording::All => true,
        Recording::Thinned => t <= 1000 || t.is_multiple_of(10),
        Recording::Final => false,
    }
}

pub fn simulate(
    game: &SymmetricGame,
    init: (MixedStrategy, MixedStrategy),
    eta: f64,
    horizon: u64,
    opts: &SimOptions,
) -> Result<Trajectory> {
    let s0 = DynState::from_strategies(game, &init.0, &init.1)?;
    simulate_from(game, s0, eta, horizon, opts, |_| {})
}

/// Runs from an explicit initial state until `t == horizon` or an early verdict.
/// `observe` sees every state, including the first.
pub fn simulate_from(
    game: &SymmetricGame,
    init: DynState,
    eta: f64,
    horizon: u64,
    opts: &SimOptions,
    mut observe: impl FnMut(&DynState),
) -> Result<Trajectory> {
    game.ensure_nondegenerate()?;
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::InvalidParameter(format!("eta = {eta}")));
    }
    if horizon < init.t {
        return Err(Error::InvalidParameter(format!("horizon {horizon} before start t = {}", init.t)));
    }
    if !opts.allow_degenerate_init && (init.delta[0] == 0.0 || init.delta[1] == 0.0) {
        return Err(Error::InvalidInit("a Delta vanishes at the initial state".into()));
    }
    let tol = opts.tolerances;
    let tracker = FlipTracker::new(game, &init).ok();

    let mut states = Vec::new();
    let mut events = Vec::new();
    let mut counts = FlipCounts::default();
    let mut potentials = Vec::new();
    let mut ring: VecDeque<DynState> = VecDeque::with_capacity(tol.window + 1);

    let mut cur = init;
    observe(&cur);
    if keep(opts.recording, cur.t) {
        states.push(cur);
    }
    if let (Some(tr), true) = (&tracker, opts.record_potentials) {
        potentials.push(tr.potential(&cur));
    }
    ring.push_back(cur);

    let mut verdict = LimitVerdict::undecided();
    while cur.t < horizon {
        let next = match step_unchecked(game, &cur, eta) {
            Ok(s) => s,
            Err(e) => {
                let pair = (sign_action(cur.u[0]), sign_action(cur.u[1]));
                if verify_pure_ne(game, pair) {
                    verdict = LimitVerdict { kind: LimitKind::PureNE { pair }, residual: 0.0 };
                    break;
                }
                return Err(e);
            }
        };
        if let Some(tr) = &tracker {
            let k = tr.classify(&cur, &next);
            counts.add(k);
            if k != FlipKind::ZeroFlip {
                events.push(FlipEvent { t: cur.t, kind: k });
            }
            if opts.record_potentials {
                potentials.push(tr.potential(&next));
            }
        }
        cur = next;
        observe(&cur);
        if keep(opts.recording, cur.t) {
            states.push(cur);
        }
        if ring.len() == tol.window {
            ring.pop_front();
        }
        ring.push_back(cur);

        if opts.early_stop && ring.len() == tol.window && cur.t.is_multiple_of(tol.window as u64) {
            let v = detect_limit(ring.make_contiguous(), game, &tol);
            if v.is_decided() {
                verdict = v;
                break;
            }
        }
    }
    if !verdict.is_decided() {
        verdict = detect_limit(ring.make_contiguous(), game, &tol);
    }
    if states.last().map(|s| s.t) != Some(cur.t) {
        states.push(cur);
    }
    Ok(Trajectory {
        game: *game,
        eta,
        init,
        states,
        events,
        flip_counts: counts,
        potentials,
        verdict,
        final_state: cur,
    })
}

fn sign_action(u: f64) -> Action {
    if u >= 0.0 {
        Action::Theta1
    } else {
        Action::Theta2
    }
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub const CSV_HEADER: &str = "t,p11,p12,p21,p22,u1,u2,delta1,delta2,W,V,flip";

/// Writes the recorded states as CSV. W, V and flip are empty outside mixed-sign games.
pub fn write_trajectory_csv<W: Write>(traj: &Trajectory, mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    let tracker = FlipTracker::new(&traj.game, &traj.init).ok();
    let mut ev = traj.events.iter().peekable();
    for s in &traj.states {
        while ev.peek().is_some_and(|e| e.t < s.t) {
            ev.next();
        }
        let (w, v, flip) = match &tracker {
            Some(tr) => {
                let p = tr.potential(s);
                let kind = match ev.peek() {
                    Some(e) if e.t == s.t => e.kind,
                    _ => FlipKind::ZeroFlip,
                };
                (fmt17(p.w), fmt17(p.v), kind.to_string())
            }
            None => (String::new(), String::new(), String::new()),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            s.t,
            fmt17(s.p[0].p1),
            fmt17(s.p[0].p2),
            fmt17(s.p[1].p1),
            fmt17(s.p[1].p2),
            fmt17(s.u[0]),
            fmt17(s.u[1]),
            fmt17(s.delta[0]),
            fmt17(s.delta[1]),
            w,
            v,
            flip
        )?;
    }
    Ok(())
}
