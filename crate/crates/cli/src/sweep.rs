//! Seeded sweeps over games, initializations and step sizes.

use std::collections::BTreeMap;
use std::fs;
use std::io::BufWriter;
use std::path::Path;

use anyhow::{Context, Result};
use ewgame::classifier::{check_prediction, classify, Agreement, RegimePrediction, Row};
use ewgame::dynamics::{
    simulate_from, two_flip_bound, write_trajectory_csv, DynState, FlipCounts, FlipTracker, SimOptions, Trajectory,
};
use ewgame::game::SymmetricGame;
use ewgame::LimitVerdict;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{GameRecord, GameSource, InitSource, SweepConfig};

pub const GENERATOR: &str = "ChaCha8 (rand_chacha 0.9): seed_from_u64(seed), set_stream(index)";

/// Smallest |ε| accepted from a random draw.
pub const MIN_ABS_EPS: f64 = 1e-3;

/// Independent stream `index` of the generator seeded with `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// I.i.d. uniform payoffs on [lo, hi), redrawn while |ε₁| or |ε₂| < 1e-3.
pub fn random_game(rng: &mut impl Rng, range: [f64; 2]) -> SymmetricGame {
    loop {
        let mut x = || rng.random_range(range[0]..range[1]);
        let (a, b, c, d) = (x(), x(), x(), x());
        if let Ok(g) = SymmetricGame::new(a, b, c, d) {
            let (e1, e2) = g.eps();
            if e1.abs() >= MIN_ABS_EPS && e2.abs() >= MIN_ABS_EPS {
                return g;
            }
        }
    }
}

/// ln r* for mixed-sign games, 0 otherwise.
pub fn center(game: &SymmetricGame) -> f64 {
    if game.sign_regime().is_mixed_sign() {
        game.ratio_root().map(f64::ln).unwrap_or(0.0)
    } else {
        0.0
    }
}

fn offset(rng: &mut impl Rng) -> f64 {
    loop {
        let x: f64 = rng.random_range(-4.0..4.0);
        if x.abs() >= 0.01 {
            return x;
        }
    }
}

/// Initial state drawn around the mixed fixed point (or around u = 0).
pub fn draw_init(source: &InitSource, game: &SymmetricGame, rng: &mut impl Rng) -> Result<DynState> {
    let l = center(game);
    let u = match source {
        InitSource::Explicit { init } => {
            let s1 = ewgame::MixedStrategy::new(init[0][0], init[0][1])?;
            let s2 = ewgame::MixedStrategy::new(init[1][0], init[1][1])?;
            return Ok(DynState::from_strategies(game, &s1, &s2)?);
        }
        InitSource::Random { .. } => [l + offset(rng), l + offset(rng)],
        InitSource::Identical { .. } => {
            let x = offset(rng);
            [l + x, l + x]
        }
        InitSource::EqualAndOpposite { .. } => {
            let x = offset(rng);
            [l + x, l - x]
        }
    };
    Ok(DynState::from_log_ratios(game, 1, u))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRow {
    pub index: usize,
    pub game_index: usize,
    pub game: GameRecord,
    pub eps: (f64, f64),
    pub eta: f64,
    pub init_u: [f64; 2],
    pub row: Row,
    pub prediction: RegimePrediction,
    pub verdict: String,
    pub verdict_detail: LimitVerdict,
    pub agreement: Agreement,
    pub steps: u64,
    pub flip_counts: FlipCounts,
    /// Two-flip bound for r4 runs.
    pub bound_n_max: Option<f64>,
    pub max_two_flips: Option<u64>,
    pub bound_ok: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowCounts {
    pub runs: usize,
    pub matched: usize,
    pub set_matched: usize,
    pub pending: usize,
    pub vacuous: usize,
    pub mismatched: usize,
}

impl RowCounts {
    fn add(&mut self, a: Agreement) {
        self.runs += 1;
        match a {
            Agreement::Match => self.matched += 1,
            Agreement::SetMatch => self.set_matched += 1,
            Agreement::Pending => self.pending += 1,
            Agreement::Vacuous => self.vacuous += 1,
            Agreement::Mismatch => self.mismatched += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub generator: String,
    pub games: GameSource,
    pub init: InitSource,
    pub etas: Vec<f64>,
    pub horizon: u64,
    pub total_runs: usize,
    pub mismatches: usize,
    pub bound_violations: usize,
    pub aggregate: BTreeMap<String, RowCounts>,
    pub runs: Vec<RunRow>,
}

impl VerificationReport {
    pub fn failed(&self) -> bool {
        self.mismatches > 0 || self.bound_violations > 0
    }
}

pub fn sweep_games(cfg: &SweepConfig) -> Result<Vec<SymmetricGame>> {
    Ok(match &cfg.games {
        GameSource::Explicit { games } => games.iter().map(|g| g.to_game()).collect::<Result<_>>()?,
        GameSource::Random { seed, count, range } => {
            (0..*count).map(|k| random_game(&mut stream(*seed, k as u64), *range)).collect()
        }
        GameSource::Bank { config } => vec![config.game()?.reduce_to_2x2()],
    })
}

fn init_seed(source: &InitSource) -> u64 {
    match source {
        InitSource::Explicit { .. } => 0,
        InitSource::Random { seed } | InitSource::Identical { seed } | InitSource::EqualAndOpposite { seed } => *seed,
    }
}

/// (n_max, largest admissible two-flip count).
pub type FlipBudget = (f64, u64);

/// Classifies, simulates and checks one run.
pub fn run_one(
    game: &SymmetricGame,
    init: DynState,
    eta: f64,
    horizon: u64,
) -> Result<(RegimePrediction, Trajectory, Option<FlipBudget>)> {
    let pred = classify(game, &init, eta)?;
    let opts = SimOptions { allow_degenerate_init: true, ..SimOptions::default() };
    let traj = simulate_from(game, init, eta, horizon, &opts, |_| {})?;
    let mut bound = None;
    if pred.effective_row() == Row::R4 {
        if let Ok(tr) = FlipTracker::new(game, &init) {
            let w1 = tr.potential(&init).w;
            if let Ok(b) = two_flip_bound(game, eta, w1) {
                bound = Some((b.n_max, b.max_two_flips()));
            }
        }
    }
    Ok((pred, traj, bound))
}

/// Runs the sweep; rows come back in config order whether or not `parallel` is set.
pub fn run_sweep(cfg: &SweepConfig, out: Option<&Path>, parallel: bool) -> Result<VerificationReport> {
    cfg.validate()?;
    let games = sweep_games(cfg)?;
    let seed = init_seed(&cfg.init);
    let inits: Vec<DynState> = games
        .iter()
        .enumerate()
        .map(|(k, g)| draw_init(&cfg.init, g, &mut stream(seed, k as u64)))
        .collect::<Result<_>>()?;
    let jobs: Vec<(usize, usize)> =
        (0..games.len()).flat_map(|g| (0..cfg.etas.len()).map(move |e| (g, e))).collect();
    if let Some(dir) = out {
        fs::create_dir_all(dir.join("runs")).with_context(|| format!("creating {}", dir.display()))?;
    }
    let work = |(index, &(gi, ei)): (usize, &(usize, usize))| -> Result<RunRow> {
        let (game, init, eta) = (&games[gi], inits[gi], cfg.etas[ei]);
        let (pred, traj, bound) = run_one(game, init, eta, cfg.horizon)
            .with_context(|| format!("run {index} (game {gi}, eta {eta})"))?;
        if let Some(dir) = out {
            let path = dir.join("runs").join(format!("run_{index:05}.csv"));
            let f = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            write_trajectory_csv(&traj, BufWriter::new(f))?;
        }
        let agreement = check_prediction(&pred, &traj.verdict);
        let bound_ok = bound.is_none_or(|(_, m)| traj.two_flips() <= m);
        Ok(RunRow {
            index,
            game_index: gi,
            game: (*game).into(),
            eps: game.eps(),
            eta,
            init_u: init.u,
            row: pred.effective_row(),
            verdict: traj.verdict.kind.to_string(),
            verdict_detail: traj.verdict,
            agreement,
            steps: traj.steps(),
            flip_counts: traj.flip_counts,
            bound_n_max: bound.map(|b| b.0),
            max_two_flips: bound.map(|b| b.1),
            bound_ok,
            prediction: pred,
        })
    };
    let runs: Vec<RunRow> = if parallel {
        jobs.par_iter().enumerate().map(work).collect::<Result<_>>()?
    } else {
        jobs.iter().enumerate().map(work).collect::<Result<_>>()?
    };

    let mut aggregate: BTreeMap<String, RowCounts> = BTreeMap::new();
    for r in &runs {
        aggregate.entry(r.row.label().to_string()).or_default().add(r.agreement);
    }
    let report = VerificationReport {
        generator: GENERATOR.to_string(),
        games: cfg.games.clone(),
        init: cfg.init.clone(),
        etas: cfg.etas.clone(),
        horizon: cfg.horizon,
        total_runs: runs.len(),
        mismatches: runs.iter().filter(|r| r.agreement == Agreement::Mismatch).count(),
        bound_violations: runs.iter().filter(|r| !r.bound_ok).count(),
        aggregate,
        runs,
    };
    if let Some(dir) = out {
        let path = dir.join("report.json");
        fs::write(&path, serde_json::to_string_pretty(&report)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_games_are_reproducible_and_nondegenerate() {
        let a: Vec<_> = (0..50).map(|k| random_game(&mut stream(3, k), [-1.0, 1.0])).collect();
        let b: Vec<_> = (0..50).map(|k| random_game(&mut stream(3, k), [-1.0, 1.0])).collect();
        assert_eq!(a, b);
        let mut rng = stream(9, 0);
        for _ in 0..10_000 {
            let g = random_game(&mut rng, [-1.0, 1.0]);
            assert!(!g.is_degenerate());
            assert!(g.eps1().abs() >= MIN_ABS_EPS && g.eps2().abs() >= MIN_ABS_EPS);
        }
    }

    #[test]
    fn forced_zero_eps() {
        let g = random_game(&mut stream(1, 0), [-1.0, 1.0]);
        let z = SymmetricGame::new(g.a, g.a, g.c, g.d).unwrap();
        assert_eq!(z.eps1(), 0.0);
    }

    #[test]
    fn init_shapes() {
        let g = SymmetricGame::from_eps(-1.0, 3.0).unwrap();
        let l = 3f64.ln();
        let s = draw_init(&InitSource::Identical { seed: 1 }, &g, &mut stream(1, 0)).unwrap();
        assert_eq!(s.u[0], s.u[1]);
        let s = draw_init(&InitSource::EqualAndOpposite { seed: 1 }, &g, &mut stream(1, 0)).unwrap();
        assert!(((s.u[0] - l) + (s.u[1] - l)).abs() < 1e-12);
    }

    #[test]
    fn aggregate_sums_to_runs() {
        let cfg = SweepConfig {
            games: GameSource::Random { seed: 5, count: 12, range: [-1.0, 1.0] },
            init: InitSource::Random { seed: 5 },
            etas: vec![0.5, 2.0],
            horizon: 20_000,
            out: None,
        };
        let r = run_sweep(&cfg, None, true).unwrap();
        assert_eq!(r.total_runs, 24);
        assert_eq!(r.aggregate.values().map(|c| c.runs).sum::<usize>(), 24);
        assert_eq!(r, run_sweep(&cfg, None, false).unwrap());
    }
}
