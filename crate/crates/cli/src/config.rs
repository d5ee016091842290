//! JSON configuration records.

use std::path::Path;

use anyhow::{bail, Context, Result};
use ewgame::bank::{BankGame, BankParams, CreditDistribution, ThresholdRule, DEFAULT_BANK_ETA, STANDARD_INIT};
use ewgame::dynamics::DEFAULT_HORIZON;
use ewgame::game::{MixedStrategy, SymmetricGame};
use ewgame::JointDistribution;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameRecord {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl GameRecord {
    pub fn to_game(self) -> Result<SymmetricGame> {
        Ok(SymmetricGame::new(self.a, self.b, self.c, self.d)?)
    }
}

impl From<SymmetricGame> for GameRecord {
    fn from(g: SymmetricGame) -> Self {
        GameRecord { a: g.a, b: g.b, c: g.c, d: g.d }
    }
}

fn strategy(p: [f64; 2]) -> Result<MixedStrategy> {
    Ok(MixedStrategy::new(p[0], p[1])?)
}

/// Input of `classify` and `simulate`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub game: GameRecord,
    /// [[p11, p12], [p21, p22]].
    pub init: [[f64; 2]; 2],
    pub eta: f64,
    #[serde(default)]
    pub horizon: Option<u64>,
}

impl RunConfig {
    pub fn strategies(&self) -> Result<(MixedStrategy, MixedStrategy)> {
        Ok((strategy(self.init[0])?, strategy(self.init[1])?))
    }

    pub fn horizon(&self) -> u64 {
        self.horizon.unwrap_or(DEFAULT_HORIZON)
    }
}

pub const RUN_SCHEMA: &str = r#"{"game": {"a": f, "b": f, "c": f, "d": f}, "init": [[p11, p12], [p21, p22]], "eta": f, "horizon": n (optional)}"#;

/// Input of `verify-ce`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CeConfig {
    pub game: GameRecord,
    /// [ν11, ν12, ν21, ν22].
    pub nu: [f64; 4],
}

impl CeConfig {
    pub fn joint(&self) -> Result<JointDistribution> {
        let [a, b, c, d] = self.nu;
        Ok(JointDistribution::new(a, b, c, d)?)
    }
}

pub const CE_SCHEMA: &str = r#"{"game": {"a": f, "b": f, "c": f, "d": f}, "nu": [nu11, nu12, nu21, nu22]}"#;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DistRecord {
    TruncGauss { mu: f64, sigma: f64 },
    PiecewiseUniform { beta1: f64, beta2: f64 },
}

fn default_bank_eta() -> f64 {
    DEFAULT_BANK_ETA
}

fn default_bank_horizon() -> u64 {
    200_000
}

/// Input of `bank`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BankConfig {
    pub dist: DistRecord,
    pub gamma_l: f64,
    pub gamma_h: f64,
    #[serde(default = "default_bank_eta")]
    pub eta: f64,
    #[serde(default = "default_init1")]
    pub init1: [f64; 4],
    #[serde(default = "default_init2")]
    pub init2: [f64; 4],
    #[serde(default = "default_bank_horizon")]
    pub horizon: u64,
    /// "break_even" (τ = 1/(2+γ), default) or "reciprocal" (τ = 1/(1+γ)).
    #[serde(default)]
    pub threshold_rule: Option<ThresholdRule>,
    /// Explicit [τ_ℓ, τ_h], overriding the rule.
    #[serde(default)]
    pub thresholds: Option<[f64; 2]>,
}

fn default_init1() -> [f64; 4] {
    STANDARD_INIT.0
}

fn default_init2() -> [f64; 4] {
    STANDARD_INIT.1
}

impl BankConfig {
    pub fn game(&self) -> Result<BankGame> {
        let params = match self.thresholds {
            Some([tl, th]) => BankParams::with_thresholds(self.gamma_l, self.gamma_h, tl, th)?,
            None => BankParams::with_rule(
                self.gamma_l,
                self.gamma_h,
                self.threshold_rule.unwrap_or(ThresholdRule::BreakEven),
            )?,
        };
        let dist = match self.dist {
            DistRecord::TruncGauss { mu, sigma } => CreditDistribution::truncated_gaussian(mu, sigma)?,
            DistRecord::PiecewiseUniform { beta1, beta2 } => {
                CreditDistribution::piecewise_uniform(beta1, beta2, params.tau_l, params.tau_h)?
            }
        };
        Ok(BankGame::new(dist, params))
    }
}

pub const BANK_SCHEMA: &str = r#"{"dist": {"kind": "trunc_gauss", "mu": f, "sigma": f} | {"kind": "piecewise_uniform", "beta1": f, "beta2": f}, "gamma_l": f, "gamma_h": f, "eta": f, "init1": [4 floats], "init2": [4 floats], "horizon": n, "threshold_rule": "break_even" | "reciprocal" (optional), "thresholds": [tau_l, tau_h] (optional)}"#;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GameSource {
    Explicit { games: Vec<GameRecord> },
    Random { seed: u64, count: usize, range: [f64; 2] },
    Bank { config: BankConfig },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitSource {
    Explicit { init: [[f64; 2]; 2] },
    Random { seed: u64 },
    Identical { seed: u64 },
    EqualAndOpposite { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub games: GameSource,
    pub init: InitSource,
    pub etas: Vec<f64>,
    #[serde(default = "default_horizon")]
    pub horizon: u64,
    #[serde(default)]
    pub out: Option<String>,
}

fn default_horizon() -> u64 {
    DEFAULT_HORIZON
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.etas.is_empty() || self.etas.iter().any(|e| !(*e > 0.0 && e.is_finite())) {
            bail!("etas must be a non-empty list of positive numbers");
        }
        if self.horizon < 1 {
            bail!("horizon must be at least 1");
        }
        match &self.games {
            GameSource::Explicit { games } if games.is_empty() => bail!("no games given"),
            GameSource::Random { count, range, .. } => {
                if *count < 1 {
                    bail!("count must be at least 1");
                }
                if !(range[0].is_finite() && range[1].is_finite() && range[0] < range[1]) {
                    bail!("payoff range must be finite and increasing");
                }
            }
            _ => {}
        }
        Ok(())
    }
}

pub const SWEEP_SCHEMA: &str = r#"{"games": {"kind": "explicit", "games": [{"a":..,"b":..,"c":..,"d":..}]} | {"kind": "random", "seed": n, "count": n, "range": [lo, hi]} | {"kind": "bank", "config": <bank config>}, "init": {"kind": "explicit", "init": [[p11,p12],[p21,p22]]} | {"kind": "random" | "identical" | "equal_and_opposite", "seed": n}, "etas": [f, ...], "horizon": n, "out": "dir" (optional)}"#;

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}
