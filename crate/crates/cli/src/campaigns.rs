//! The ten acceptance campaigns, all driven from seed 0.

use std::collections::VecDeque;
use std::fmt;
use std::time::Instant;

use ewgame::bank::{monte_carlo_table, reference_scenarios, run_bank_experiment, sign_of, DEFAULT_BANK_ETA, STANDARD_INIT};
use ewgame::classifier::{check_prediction, classify, Agreement, Row};
use ewgame::dynamics::{
    construct_mixed_limit_example, construct_oscillation_identical, construct_oscillation_opposite, decay_bounds,
    ew_step, simulate_from, two_flip_bound, DynState, FlipTracker, LimitKind, Recording, SimOptions,
};
use ewgame::equilibria::{ce_is_borderline, ce_membership_bruteforce, ce_membership_closed_form, JointDistribution};
use ewgame::game::{Action, Player, SignRegime, SymmetricGame};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::sweep::{random_game, stream};

/// Seed reserved for the acceptance campaigns.
pub const ACCEPTANCE_SEED: u64 = 0;

const HORIZON: u64 = 1_000_000;
const REL_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {}: {} ({:.1} s) {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.seconds,
            self.detail
        )
    }
}

fn rng(criterion: u64, index: u64) -> ChaCha8Rng {
    stream(ACCEPTANCE_SEED, (criterion << 32) | index)
}

fn game_in(rng: &mut ChaCha8Rng, want: impl Fn(SignRegime) -> bool) -> SymmetricGame {
    loop {
        let g = random_game(rng, [-1.0, 1.0]);
        if want(g.sign_regime()) {
            return g;
        }
    }
}

fn pos_offset(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(0.01..4.0)
}

fn sign(rng: &mut ChaCha8Rng) -> f64 {
    if rng.random_bool(0.5) {
        1.0
    } else {
        -1.0
    }
}

fn opts() -> SimOptions {
    SimOptions { recording: Recording::Final, record_potentials: false, ..SimOptions::default() }
}

fn timed(id: u8, name: &'static str, f: impl FnOnce() -> (bool, String)) -> CriterionResult {
    let start = Instant::now();
    let (pass, detail) = f();
    let seconds = start.elapsed().as_secs_f64();
    let limit = time_limit(id);
    let pass = pass && limit.is_none_or(|l| seconds < l);
    CriterionResult { id, name, pass, detail, seconds }
}

/// Outcome of one run checked against exponential bounds and a target verdict.
struct Checked {
    bound_ok: bool,
    verdict: LimitKind,
    agreement: Agreement,
    row: Row,
}

fn run_with_bounds(g: &SymmetricGame, s0: DynState, eta: f64) -> Checked {
    let pred = classify(g, &s0, eta).expect("valid run");
    let bounds = decay_bounds(g, &s0, eta).expect("bound applies");
    let mut ok = true;
    let tr = simulate_from(g, s0, eta, HORIZON, &opts(), |s| {
        ok &= bounds.iter().all(|b| b.holds(s, s0.t, REL_SLACK));
    })
    .expect("simulation");
    Checked {
        bound_ok: ok,
        verdict: tr.verdict.kind,
        agreement: check_prediction(&pred, &tr.verdict),
        row: pred.effective_row(),
    }
}

/// Matched ε signs: exponential bound at every step, PureNE as the equilibrium table says.
pub fn criterion_1() -> CriterionResult {
    timed(1, "matched-sign exponential convergence", || {
        let jobs: Vec<(u64, f64)> = (0..200).flat_map(|k| [0.1, 1.0, 5.0].map(|e| (k, e))).collect();
        let res: Vec<(bool, bool)> = jobs
            .par_iter()
            .map(|&(k, eta)| {
                let mut r = rng(1, k);
                let want = if k % 2 == 0 { SignRegime::NegNeg } else { SignRegime::PosPos };
                let g = game_in(&mut r, |s| s == want);
                let s0 = DynState::from_log_ratios(&g, 1, [r.random_range(-4.0..4.0), r.random_range(-4.0..4.0)]);
                let c = run_with_bounds(&g, s0, eta);
                let pair = if want == SignRegime::NegNeg {
                    (Action::Theta2, Action::Theta2)
                } else {
                    (Action::Theta1, Action::Theta1)
                };
                (c.bound_ok, c.verdict == LimitKind::PureNE { pair } && c.agreement == Agreement::Match)
            })
            .collect();
        let bound_fail = res.iter().filter(|r| !r.0).count();
        let verdict_fail = res.iter().filter(|r| !r.1).count();
        (
            bound_fail == 0 && verdict_fail == 0,
            format!("{} runs, {bound_fail} bound violations, {verdict_fail} wrong verdicts", res.len()),
        )
    })
}

fn neg_pos(r: &mut ChaCha8Rng) -> SymmetricGame {
    game_in(r, |s| s == SignRegime::NegPos)
}

/// ε₁<0<ε₂ with opposite-sign Δ: the predicted asymmetric NE and its decay bounds.
pub fn criterion_2() -> CriterionResult {
    timed(2, "part II opposite-sign case (r3)", || {
        let jobs: Vec<(u64, f64)> = (0..200).map(|k| (k, if k % 2 == 0 { 0.5 } else { 5.0 })).collect();
        let res: Vec<(bool, bool)> = jobs
            .par_iter()
            .map(|&(k, eta)| {
                let mut r = rng(2, k);
                let g = neg_pos(&mut r);
                let l = g.ratio_root().unwrap().ln();
                let s = sign(&mut r);
                let s0 = DynState::from_log_ratios(&g, 1, [l + s * pos_offset(&mut r), l - s * pos_offset(&mut r)]);
                let c = run_with_bounds(&g, s0, eta);
                (c.bound_ok, c.row == Row::R3 && c.agreement == Agreement::Match)
            })
            .collect();
        let bound_fail = res.iter().filter(|r| !r.0).count();
        let verdict_fail = res.iter().filter(|r| !r.1).count();
        (
            bound_fail == 0 && verdict_fail == 0,
            format!("{} runs, {bound_fail} bound violations, {verdict_fail} wrong verdicts", res.len()),
        )
    })
}

/// ε₁<0<ε₂ with same-sign, distinct Δ: two-flip count within the bound.
pub fn criterion_3() -> CriterionResult {
    timed(3, "part II same-sign case (r4)", || {
        let res: Vec<(bool, Option<bool>, u64)> = (0..200u64)
            .into_par_iter()
            .map(|k| {
                let mut r = rng(3, k);
                let g = neg_pos(&mut r);
                let eta = [0.5, 2.0, 5.0][(k % 3) as usize];
                let l = g.ratio_root().unwrap().ln();
                let s = sign(&mut r);
                let x1 = pos_offset(&mut r);
                let x2 = loop {
                    let x = pos_offset(&mut r);
                    if (x - x1).abs() >= 0.01 {
                        break x;
                    }
                };
                let s0 = DynState::from_log_ratios(&g, 1, [l + s * x1, l + s * x2]);
                let row = classify(&g, &s0, eta).unwrap().effective_row();
                let w1 = FlipTracker::new(&g, &s0).unwrap().potential(&s0).w;
                let bound = two_flip_bound(&g, eta, w1).unwrap().max_two_flips();
                let tr = simulate_from(&g, s0, eta, HORIZON, &opts(), |_| {}).unwrap();
                let landed = match tr.verdict.kind {
                    LimitKind::Undecided => None,
                    LimitKind::PureNE { pair } => Some(
                        pair == (Action::Theta1, Action::Theta2) || pair == (Action::Theta2, Action::Theta1),
                    ),
                    _ => Some(false),
                };
                (row == Row::R4 && tr.two_flips() <= bound, landed, tr.two_flips())
            })
            .collect();
        let bound_fail = res.iter().filter(|r| !r.0).count();
        let wrong = res.iter().filter(|r| r.1 == Some(false)).count();
        let undecided = res.iter().filter(|r| r.1.is_none()).count();
        let with_two = res.iter().filter(|r| r.2 > 0).count();
        (
            bound_fail == 0 && wrong == 0,
            format!(
                "{} runs, {bound_fail} over the two-flip bound, {wrong} wrong limits, undecided rate {:.3}, {with_two} runs with two-flips",
                res.len(),
                undecided as f64 / res.len() as f64
            ),
        )
    })
}

/// Identical init with η = 0.9·8/Γ: contraction onto p_SE.
pub fn criterion_4() -> CriterionResult {
    timed(4, "part II identical init (r5)", || {
        let res: Vec<(bool, f64)> = (0..100u64)
            .into_par_iter()
            .map(|k| {
                let mut r = rng(4, k);
                let g = neg_pos(&mut r);
                let eta = 0.9 * 8.0 / g.gamma();
                let l = g.ratio_root().unwrap().ln();
                let x = sign(&mut r) * pos_offset(&mut r);
                let s0 = DynState::from_log_ratios(&g, 1, [l + x, l + x]);
                let mut tail: VecDeque<f64> = VecDeque::with_capacity(33);
                let tr = simulate_from(&g, s0, eta, HORIZON, &opts(), |s| {
                    if tail.len() == 32 {
                        tail.pop_front();
                    }
                    tail.push_back(s.u[0] - l);
                })
                .unwrap();
                let factor = tail
                    .iter()
                    .zip(tail.iter().skip(1))
                    .filter(|(a, _)| a.abs() > 1e-11)
                    .map(|(a, b)| (b / a).abs())
                    .fold(0.0, f64::max);
                let reached = matches!(tr.verdict.kind, LimitKind::StrictMixedNE { .. })
                    && tr.final_state.u_hat(&g).unwrap().iter().all(|v| v.abs() < 1e-8)
                    && tr.steps() <= HORIZON;
                (reached, factor)
            })
            .collect();
        let missed = res.iter().filter(|r| !r.0).count();
        let worst = res.iter().map(|r| r.1).fold(0.0, f64::max);
        (
            missed == 0 && worst < 1.0 && worst > 0.0,
            format!("{} runs, {missed} did not reach |u_hat| < 1e-8, worst tail contraction factor {worst:.4}", res.len()),
        )
    })
}

/// The two period-2 constructions for a ∈ {0.25, 1, 3}.
pub fn criterion_5() -> CriterionResult {
    timed(5, "oscillation constructions", || {
        let mut ok = true;
        let mut worst_res: f64 = 0.0;
        let mut min_move = f64::INFINITY;
        for a in [0.25, 1.0, 3.0] {
            for c in [construct_oscillation_identical(a).unwrap(), construct_oscillation_opposite(a).unwrap()] {
                let (res, mv) = oscillation_residual(&c.game, c.init, c.eta, 1000);
                ok &= c.eta * c.game.gamma() > 8.0 && res < 1e-9 && mv > 0.1;
                worst_res = worst_res.max(res);
                min_move = min_move.min(mv);
            }
        }
        (ok, format!("6 constructions, max period-2 residual {worst_res:.2e}, min step movement {min_move:.3}"))
    })
}

/// Max |u(t+2) − u(t)| and min |u(t+1) − u(t)| over `steps` steps.
pub fn oscillation_residual(g: &SymmetricGame, init: DynState, eta: f64, steps: u64) -> (f64, f64) {
    let mut states = vec![init];
    let mut s = init;
    for _ in 0..steps {
        s = ew_step(g, &s, eta).expect("step");
        states.push(s);
    }
    let mut res: f64 = 0.0;
    let mut mv = f64::INFINITY;
    for w in states.windows(3) {
        for i in 0..2 {
            res = res.max((w[2].u[i] - w[0].u[i]).abs());
            mv = mv.min((w[1].u[i] - w[0].u[i]).abs());
        }
    }
    (res, mv)
}

/// ε₁>0>ε₂: same-sign runs with bounds, opposite-sign runs with ηΓ < 4.
pub fn criterion_6() -> CriterionResult {
    timed(6, "part III (r6/r7)", || {
        let same: Vec<(bool, bool)> = (0..200u64)
            .into_par_iter()
            .map(|k| {
                let mut r = rng(6, k);
                let g = game_in(&mut r, |s| s == SignRegime::PosNeg);
                let eta = if k % 2 == 0 { 0.5 } else { 5.0 };
                let l = g.ratio_root().unwrap().ln();
                let s = sign(&mut r);
                let s0 = DynState::from_log_ratios(&g, 1, [l + s * pos_offset(&mut r), l + s * pos_offset(&mut r)]);
                let c = run_with_bounds(&g, s0, eta);
                let symmetric = matches!(c.verdict, LimitKind::PureNE { pair } if pair.0 == pair.1);
                (c.bound_ok, symmetric && c.row == Row::R6 && c.agreement == Agreement::Match)
            })
            .collect();
        let opposite: Vec<(u64, bool, bool)> = (0..200u64)
            .into_par_iter()
            .map(|k| {
                let mut r = rng(6, 1000 + k);
                let g = game_in(&mut r, |s| s == SignRegime::PosNeg);
                let eta = r.random_range(0.05..0.99) * 4.0 / g.gamma();
                let l = g.ratio_root().unwrap().ln();
                let s = sign(&mut r);
                let s0 = DynState::from_log_ratios(&g, 1, [l + s * pos_offset(&mut r), l - s * pos_offset(&mut r)]);
                let pred = classify(&g, &s0, eta).unwrap();
                let tr = simulate_from(&g, s0, eta, HORIZON, &opts(), |_| {}).unwrap();
                let a = check_prediction(&pred, &tr.verdict);
                let in_set = matches!(a, Agreement::Match | Agreement::SetMatch | Agreement::Pending);
                (tr.two_flips(), in_set && pred.effective_row() == Row::R7, tr.verdict.is_decided())
            })
            .collect();
        let bound_fail = same.iter().filter(|r| !r.0).count();
        let same_wrong = same.iter().filter(|r| !r.1).count();
        let two_flips: u64 = opposite.iter().map(|r| r.0).sum();
        let opp_wrong = opposite.iter().filter(|r| !r.1).count();
        let undecided = opposite.iter().filter(|r| !r.2).count();
        (
            bound_fail == 0 && same_wrong == 0 && two_flips == 0 && opp_wrong == 0,
            format!(
                "same-sign: 200 runs, {bound_fail} bound violations, {same_wrong} wrong verdicts; opposite-sign: 200 runs, {two_flips} two-flips, {opp_wrong} outside the predicted set, {undecided} undecided"
            ),
        )
    })
}

/// One zero ε: ε₂<0 runs, ε₂>0 identical runs, and the mixed-limit construction.
pub fn criterion_7() -> CriterionResult {
    timed(7, "part IV (one zero epsilon)", || {
        let neg: Vec<bool> = (0..100u64)
            .into_par_iter()
            .map(|k| {
                let mut r = rng(7, k);
                let g = loop {
                    let h = random_game(&mut r, [-1.0, 1.0]);
                    let z = SymmetricGame::new(h.a, h.a, h.c.min(h.d), h.c.max(h.d)).unwrap();
                    if z.eps2() <= -1e-3 {
                        break z;
                    }
                };
                let eta = [0.1, 1.0, 5.0][(k % 3) as usize];
                let s0 = DynState::from_log_ratios(&g, 1, [r.random_range(-4.0..4.0), r.random_range(-4.0..4.0)]);
                let c = run_with_bounds(&g, s0, eta);
                c.bound_ok && c.verdict == LimitKind::PureNE { pair: (Action::Theta2, Action::Theta2) }
            })
            .collect();
        let pos: Vec<bool> = (0..20u64)
            .into_par_iter()
            .map(|k| {
                let mut r = rng(7, 1000 + k);
                let a = r.random_range(-1.0..1.0);
                let d = r.random_range(-1.0..0.0);
                let g = SymmetricGame::new(a, a, d + r.random_range(0.1..1.0), d).unwrap();
                let u = r.random_range(-4.0..4.0);
                let s0 = DynState::from_log_ratios(&g, 1, [u, u]);
                let tr = simulate_from(&g, s0, 1.0, HORIZON, &opts(), |_| {}).unwrap();
                tr.verdict.kind == LimitKind::PureNE { pair: (Action::Theta1, Action::Theta1) }
            })
            .collect();
        let g = SymmetricGame::from_eps(0.0, 1.0).unwrap();
        let mut construction_ok = true;
        for who in [Player::One, Player::Two] {
            let c = construct_mixed_limit_example(&g, 1.0, std::f64::consts::E, 1.0, who).unwrap();
            let (i, j) = (who.index(), who.other().index());
            let o = SimOptions { early_stop: false, ..opts() };
            simulate_from(&g, c.init, c.eta, 100_000, &o, |s| {
                let env = c.log_envelope(s.t);
                construction_ok &= s.u[j] <= c.cap.ln();
                construction_ok &= s.u[i] >= env - REL_SLACK * env.abs().max(1.0);
            })
            .unwrap();
        }
        let neg_ok = neg.iter().filter(|x| **x).count();
        let pos_ok = pos.iter().filter(|x| **x).count();
        (
            neg_ok == neg.len() && pos_ok == pos.len() && construction_ok,
            format!(
                "eps2<0: {neg_ok}/{} PureNE(theta2,theta2) within bound; eps2>0 identical: {pos_ok}/{} PureNE(theta1,theta1); construction {}",
                neg.len(),
                pos.len(),
                if construction_ok { "holds" } else { "violated" }
            ),
        )
    })
}

const REGIMES: [SignRegime; 8] = [
    SignRegime::NegNeg,
    SignRegime::PosPos,
    SignRegime::NegPos,
    SignRegime::PosNeg,
    SignRegime::ZeroNeg,
    SignRegime::ZeroPos,
    SignRegime::NegZero,
    SignRegime::PosZero,
];

fn game_for(regime: SignRegime, r: &mut ChaCha8Rng) -> SymmetricGame {
    let mut mag = || r.random_range(1e-3..1.0);
    let (a, b) = (mag(), mag());
    let (e1, e2) = match regime {
        SignRegime::NegNeg => (-a, -b),
        SignRegime::PosPos => (a, b),
        SignRegime::NegPos => (-a, b),
        SignRegime::PosNeg => (a, -b),
        SignRegime::ZeroNeg => (0.0, -b),
        SignRegime::ZeroPos => (0.0, b),
        SignRegime::NegZero => (-a, 0.0),
        SignRegime::PosZero => (a, 0.0),
        SignRegime::Degenerate => unreachable!(),
    };
    let (k1, k2) = (r.random_range(-1.0..1.0), r.random_range(-1.0..1.0));
    let g = SymmetricGame::new(e1 + k1, k1, e2 + k2, k2).unwrap();
    debug_assert_eq!(g.sign_regime(), regime);
    g
}

fn sample_nu(r: &mut ChaCha8Rng) -> JointDistribution {
    let mut v = [0.0f64; 4];
    for x in v.iter_mut() {
        *x = -(1.0 - r.random::<f64>()).ln();
    }
    if r.random_bool(0.3) {
        for x in v.iter_mut() {
            if r.random_bool(0.5) {
                *x = 0.0;
            }
        }
        if v.iter().all(|x| *x == 0.0) {
            v[r.random_range(0..4)] = 1.0;
        }
    }
    let s: f64 = v.iter().sum();
    let v = v.map(|x| x / s);
    JointDistribution::new(v[0], v[1], v[2], v[3]).expect("normalized")
}

/// Closed-form CE membership against the brute-force inequalities.
pub fn criterion_8() -> CriterionResult {
    timed(8, "CE oracle equivalence", || {
        let mut disagreements = 0;
        let mut parts = Vec::new();
        for (ri, regime) in REGIMES.iter().enumerate() {
            let mut r = rng(8, ri as u64);
            let (mut border, mut members) = (0usize, 0usize);
            for _ in 0..10_000 {
                let g = game_for(*regime, &mut r);
                let nu = sample_nu(&mut r);
                let c = ce_membership_closed_form(&g, &nu).unwrap();
                let b = ce_membership_bruteforce(&g, &nu);
                members += b as usize;
                if ce_is_borderline(&g, &nu).unwrap() {
                    border += 1;
                } else if c != b {
                    disagreements += 1;
                }
            }
            parts.push(format!("{regime:?} {members} members, borderline {:.4}", border as f64 / 10_000.0));
        }
        (disagreements == 0, format!("{disagreements} disagreements outside the band; {}", parts.join("; ")))
    })
}

/// Bank configurations: signs, reference limits and the Monte Carlo table oracle.
pub fn criterion_9() -> CriterionResult {
    criterion_9_with(10_000_000)
}

pub fn criterion_9_with(samples: u64) -> CriterionResult {
    timed(9, "bank game sign regimes", || {
        let scen = reference_scenarios();
        let res: Vec<(String, bool)> = scen
            .par_iter()
            .enumerate()
            .map(|(k, s)| {
                let g2 = s.game.reduce_to_2x2();
                let signs = (sign_of(g2.eps1()), sign_of(g2.eps2()));
                let run = run_bank_experiment(&s.game, STANDARD_INIT.0, STANDARD_INIT.1, DEFAULT_BANK_ETA, 200_000)
                    .expect("bank run");
                let mc = monte_carlo_table(&s.game, samples, ACCEPTANCE_SEED.wrapping_add(k as u64));
                let m = s.game.utility_matrix();
                let mut worst_z: f64 = 0.0;
                let mut mc_ok = true;
                for i in 0..4 {
                    for j in 0..4 {
                        let e = mc[i][j];
                        let dev = (e.mean - m[i][j]).abs();
                        mc_ok &= dev <= 3.0 * e.std_error + 1e-15;
                        if e.std_error > 0.0 {
                            worst_z = worst_z.max(dev / e.std_error);
                        }
                    }
                }
                let dom = s.game.dominance_check().all_pass;
                let ok = signs == s.signs
                    && run.limit == s.limit
                    && run.max_non_limit_weight < 1e-10
                    && run.consistent
                    && dom
                    && mc_ok;
                (
                    format!(
                        "{} signs ({:+},{:+}) limit ({},{}) max other weight {:.1e} MC worst z {:.2}",
                        s.label,
                        signs.0,
                        signs.1,
                        run.limit.0.label(),
                        run.limit.1.label(),
                        run.max_non_limit_weight,
                        worst_z
                    ),
                    ok,
                )
            })
            .collect();
        let ok = res.iter().all(|r| r.1);
        (ok, format!("{}; {samples} MC samples each", res.iter().map(|r| r.0.as_str()).collect::<Vec<_>>().join("; ")))
    })
}

/// Equal (ε₁, ε₂), different payoffs: bit-identical log-ratio trajectories.
pub fn criterion_10() -> CriterionResult {
    timed(10, "epsilon sufficiency", || {
        let (mut identical, mut pairs, mut k) = (0, 0, 0u64);
        while pairs < 50 {
            let mut r = rng(10, k);
            k += 1;
            // dyadic payoffs keep a − b and c − d exact
            let mut q = |lo: i64, hi: i64| r.random_range(lo..=hi) as f64 / 1024.0;
            let (e1, e2) = (q(-2048, 2048), q(-2048, 2048));
            let (k1, k2, k3, k4) = (q(-4096, 4096), q(-4096, 4096), q(-4096, 4096), q(-4096, 4096));
            let g1 = SymmetricGame::new(e1 + k1, k1, e2 + k2, k2).unwrap();
            let g2 = SymmetricGame::new(e1 + k3, k3, e2 + k4, k4).unwrap();
            if g1.is_degenerate() || g1.eps() != g2.eps() || g1 == g2 {
                continue;
            }
            pairs += 1;
            let u = [r.random_range(-4.0..4.0), r.random_range(-4.0..4.0)];
            let eta = r.random_range(0.05..5.0);
            let (mut s1, mut s2) = (DynState::from_log_ratios(&g1, 1, u), DynState::from_log_ratios(&g2, 1, u));
            let mut same = true;
            for _ in 0..10_000 {
                s1 = ew_step(&g1, &s1, eta).unwrap();
                s2 = ew_step(&g2, &s2, eta).unwrap();
                same &= s1.u[0].to_bits() == s2.u[0].to_bits() && s1.u[1].to_bits() == s2.u[1].to_bits();
            }
            identical += same as usize;
        }
        (identical == 50, format!("{identical}/50 pairs bit-identical over 10000 steps"))
    })
}

pub fn run_all() -> Vec<CriterionResult> {
    let all: [fn() -> CriterionResult; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    all.iter().map(|f| f()).collect()
}

/// Wall-clock limits in seconds.
pub fn time_limit(id: u8) -> Option<f64> {
    match id {
        1 => Some(30.0),
        9 => Some(120.0),
        _ => None,
    }
}
