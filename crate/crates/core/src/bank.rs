//! Two-bank lending game: credit-score densities, the h integral, the 4×4
//! utility table and its reduction to a symmetric 2×2 game.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::dynamics::{simulate_from, DynState, LimitKind, LimitVerdict, Recording, SimOptions};
use crate::error::{Error, Result};
use crate::game::{Action, SymmetricGame};
use crate::numerics::{normal_mass, normal_pdf};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CreditDistribution {
    /// N(μ, σ²) conditioned on [0, 1].
    TruncatedGaussian { mu: f64, sigma: f64 },
    /// Mass β₁ uniform on [0, τ_ℓ], β₂ on (τ_ℓ, τ_h), the rest on [τ_h, 1].
    PiecewiseUniform { beta1: f64, beta2: f64, tau_l: f64, tau_h: f64 },
}

impl CreditDistribution {
    pub fn truncated_gaussian(mu: f64, sigma: f64) -> Result<Self> {
        if !(mu.is_finite() && sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::InvalidParameter(format!("truncated gaussian ({mu}, {sigma})")));
        }
        let d = CreditDistribution::TruncatedGaussian { mu, sigma };
        if !(d.normalizer() > 0.0) {
            return Err(Error::InvalidParameter(format!("no mass on [0,1] for ({mu}, {sigma})")));
        }
        Ok(d)
    }

    pub fn piecewise_uniform(beta1: f64, beta2: f64, tau_l: f64, tau_h: f64) -> Result<Self> {
        let ok = beta1 >= 0.0 && beta2 >= 0.0 && beta1 + beta2 <= 1.0 && 0.0 < tau_l && tau_l < tau_h && tau_h < 1.0;
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "piecewise uniform beta = ({beta1}, {beta2}), tau = ({tau_l}, {tau_h})"
            )));
        }
        Ok(CreditDistribution::PiecewiseUniform { beta1, beta2, tau_l, tau_h })
    }

    fn normalizer(&self) -> f64 {
        match *self {
            CreditDistribution::TruncatedGaussian { mu, sigma } => normal_mass(-mu / sigma, (1.0 - mu) / sigma),
            CreditDistribution::PiecewiseUniform { .. } => 1.0,
        }
    }

    fn segments(beta1: f64, beta2: f64, tau_l: f64, tau_h: f64) -> [(f64, f64, f64); 3] {
        [
            (0.0, tau_l, beta1 / tau_l),
            (tau_l, tau_h, beta2 / (tau_h - tau_l)),
            (tau_h, 1.0, (1.0 - beta1 - beta2) / (1.0 - tau_h)),
        ]
    }

    pub fn density(&self, y: f64) -> f64 {
        if !(0.0..=1.0).contains(&y) {
            return 0.0;
        }
        match *self {
            CreditDistribution::TruncatedGaussian { mu, sigma } => {
                normal_pdf((y - mu) / sigma) / (sigma * self.normalizer())
            }
            CreditDistribution::PiecewiseUniform { beta1, beta2, tau_l, tau_h } => {
                let s = Self::segments(beta1, beta2, tau_l, tau_h);
                if y <= tau_l {
                    s[0].2
                } else if y < tau_h {
                    s[1].2
                } else {
                    s[2].2
                }
            }
        }
    }

    /// Draws one credit score.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match *self {
            CreditDistribution::TruncatedGaussian { mu, sigma } => {
                let n = Normal::new(mu, sigma).expect("validated sigma");
                loop {
                    let y = n.sample(rng);
                    if (0.0..=1.0).contains(&y) {
                        return y;
                    }
                }
            }
            CreditDistribution::PiecewiseUniform { beta1, beta2, tau_l, tau_h } => {
                let v: f64 = rng.random();
                let w: f64 = rng.random();
                let (lo, hi) = if v < beta1 {
                    (0.0, tau_l)
                } else if v < beta1 + beta2 {
                    (tau_l, tau_h)
                } else {
                    (tau_h, 1.0)
                };
                lo + w * (hi - lo)
            }
        }
    }
}

/// h(γ, τ_a, τ_b) = ∫_{τ_a}^{τ_b} [(2+γ)y − 1] p(y) dy.
pub fn h_integral(dist: &CreditDistribution, gamma: f64, tau_a: f64, tau_b: f64) -> Result<f64> {
    if !(0.0 <= tau_a && tau_a <= tau_b && tau_b <= 1.0) {
        return Err(Error::InvalidRange { lo: tau_a, hi: tau_b });
    }
    if tau_a == tau_b {
        return Ok(0.0);
    }
    let k = 2.0 + gamma;
    let v = match *dist {
        CreditDistribution::TruncatedGaussian { mu, sigma } => {
            let z = dist.normalizer();
            let (al, be) = ((tau_a - mu) / sigma, (tau_b - mu) / sigma);
            let mass = normal_mass(al, be);
            let m0 = mass / z;
            let m1 = (mu * mass - sigma * (normal_pdf(be) - normal_pdf(al))) / z;
            k * m1 - m0
        }
        CreditDistribution::PiecewiseUniform { beta1, beta2, tau_l, tau_h } => {
            let anti = |y: f64| k * y * y / 2.0 - y;
            let mut s = 0.0;
            for (lo, hi, c) in CreditDistribution::segments(beta1, beta2, tau_l, tau_h) {
                let (a, b) = (lo.max(tau_a), hi.min(tau_b));
                if b > a {
                    s += c * (anti(b) - anti(a));
                }
            }
            s
        }
    };
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdRule {
    /// τ = 1/(2+γ): the score at which a loan at rate γ breaks even.
    BreakEven,
    /// τ = 1/(1+γ).
    Reciprocal,
}

impl ThresholdRule {
    pub fn threshold(self, gamma: f64) -> f64 {
        match self {
            ThresholdRule::BreakEven => 1.0 / (2.0 + gamma),
            ThresholdRule::Reciprocal => 1.0 / (1.0 + gamma),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BankParams {
    pub gamma_l: f64,
    pub gamma_h: f64,
    pub tau_l: f64,
    pub tau_h: f64,
}

impl BankParams {
    /// Rates with break-even thresholds τ_ℓ = 1/(2+γ_h), τ_h = 1/(2+γ_ℓ).
    pub fn new(gamma_l: f64, gamma_h: f64) -> Result<Self> {
        Self::with_rule(gamma_l, gamma_h, ThresholdRule::BreakEven)
    }

    pub fn with_rule(gamma_l: f64, gamma_h: f64, rule: ThresholdRule) -> Result<Self> {
        Self::with_thresholds(gamma_l, gamma_h, rule.threshold(gamma_h), rule.threshold(gamma_l))
    }

    pub fn with_thresholds(gamma_l: f64, gamma_h: f64, tau_l: f64, tau_h: f64) -> Result<Self> {
        if !(0.0 < gamma_l && gamma_l < gamma_h && gamma_h < 1.0) {
            return Err(Error::InvalidParameter(format!("rates ({gamma_l}, {gamma_h})")));
        }
        if !(0.0 <= tau_l && tau_l < tau_h && tau_h <= 1.0) {
            return Err(Error::InvalidParameter(format!("thresholds ({tau_l}, {tau_h})")));
        }
        Ok(BankParams { gamma_l, gamma_h, tau_l, tau_h })
    }
}

/// The four (threshold, rate) decisions, indexed 0..4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BankAction {
    LowThresholdLowRate,
    LowThresholdHighRate,
    HighThresholdLowRate,
    HighThresholdHighRate,
}

impl BankAction {
    pub const ALL: [BankAction; 4] = [
        BankAction::LowThresholdLowRate,
        BankAction::LowThresholdHighRate,
        BankAction::HighThresholdLowRate,
        BankAction::HighThresholdHighRate,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(k: usize) -> BankAction {
        Self::ALL[k]
    }

    pub fn tau(self, p: &BankParams) -> f64 {
        match self {
            BankAction::LowThresholdLowRate | BankAction::LowThresholdHighRate => p.tau_l,
            _ => p.tau_h,
        }
    }

    pub fn gamma(self, p: &BankParams) -> f64 {
        match self {
            BankAction::LowThresholdLowRate | BankAction::HighThresholdLowRate => p.gamma_l,
            _ => p.gamma_h,
        }
    }

    /// The two undominated decisions map to θ₁ = (τ_ℓ, γ_h) and θ₂ = (τ_h, γ_ℓ).
    pub fn reduced(self) -> Option<Action> {
        match self {
            BankAction::LowThresholdHighRate => Some(Action::Theta1),
            BankAction::HighThresholdLowRate => Some(Action::Theta2),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BankAction::LowThresholdLowRate => "(tau_l,gamma_l)",
            BankAction::LowThresholdHighRate => "(tau_l,gamma_h)",
            BankAction::HighThresholdLowRate => "(tau_h,gamma_l)",
            BankAction::HighThresholdHighRate => "(tau_h,gamma_h)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BankGame {
    pub dist: CreditDistribution,
    pub params: BankParams,
}

/// `m[own][other]`: payoff of a bank playing `own` against `other`.
pub type UtilityTable = [[f64; 4]; 4];

impl BankGame {
    pub fn new(dist: CreditDistribution, params: BankParams) -> Self {
        BankGame { dist, params }
    }

    fn h(&self, gamma: f64, a: f64, b: f64) -> f64 {
        h_integral(&self.dist, gamma, a, b).expect("thresholds validated")
    }

    /// Bank 1's utility for `own` when bank 2 plays `other`.
    pub fn utility(&self, own: BankAction, other: BankAction) -> f64 {
        use BankAction::*;
        let p = &self.params;
        let (gl, gh, tl, th) = (p.gamma_l, p.gamma_h, p.tau_l, p.tau_h);
        match (own, other) {
            (LowThresholdLowRate, LowThresholdLowRate) => 0.5 * self.h(gl, tl, 1.0),
            (LowThresholdHighRate, LowThresholdLowRate) => 0.0,
            (HighThresholdLowRate, LowThresholdLowRate) => 0.5 * self.h(gl, th, 1.0),
            (HighThresholdHighRate, LowThresholdLowRate) => 0.0,

            (LowThresholdLowRate, LowThresholdHighRate) => self.h(gl, tl, 1.0),
            (LowThresholdHighRate, LowThresholdHighRate) => 0.5 * self.h(gh, tl, 1.0),
            (HighThresholdLowRate, LowThresholdHighRate) => self.h(gl, th, 1.0),
            (HighThresholdHighRate, LowThresholdHighRate) => 0.5 * self.h(gh, th, 1.0),

            (LowThresholdLowRate, HighThresholdLowRate) => self.h(gl, tl, th) + 0.5 * self.h(gl, th, 1.0),
            (LowThresholdHighRate, HighThresholdLowRate) => self.h(gh, tl, th),
            (HighThresholdLowRate, HighThresholdLowRate) => 0.5 * self.h(gl, th, 1.0),
            (HighThresholdHighRate, HighThresholdLowRate) => 0.0,

            (LowThresholdLowRate, HighThresholdHighRate) => self.h(gl, tl, 1.0),
            (LowThresholdHighRate, HighThresholdHighRate) => self.h(gh, tl, th) + 0.5 * self.h(gh, th, 1.0),
            (HighThresholdLowRate, HighThresholdHighRate) => self.h(gl, th, 1.0),
            (HighThresholdHighRate, HighThresholdHighRate) => 0.5 * self.h(gh, th, 1.0),
        }
    }

    pub fn utility_matrix(&self) -> UtilityTable {
        let mut m = [[0.0; 4]; 4];
        for own in BankAction::ALL {
            for other in BankAction::ALL {
                m[own.index()][other.index()] = self.utility(own, other);
            }
        }
        m
    }

    /// Bank 2's table indexed [bank 1 action][bank 2 action], by role swap.
    pub fn bank2_matrix(&self) -> UtilityTable {
        let mut m = [[0.0; 4]; 4];
        for x in BankAction::ALL {
            for y in BankAction::ALL {
                m[x.index()][y.index()] = self.utility(y, x);
            }
        }
        m
    }

    pub fn dominance_check(&self) -> DominanceReport {
        use BankAction::*;
        let mut checks = Vec::new();
        for against in BankAction::ALL {
            checks.push(self.dominance(HighThresholdLowRate, LowThresholdLowRate, against));
        }
        for against in [LowThresholdHighRate, HighThresholdLowRate, HighThresholdHighRate] {
            checks.push(self.dominance(LowThresholdHighRate, HighThresholdHighRate, against));
        }
        let all_pass = checks.iter().all(|c| c.pass);
        DominanceReport { checks, all_pass }
    }

    fn dominance(&self, better: BankAction, worse: BankAction, against: BankAction) -> DominanceCheck {
        let gap = self.utility(better, against) - self.utility(worse, against);
        DominanceCheck { better, worse, against, gap, pass: gap > -DOMINANCE_SLACK }
    }

    pub fn reduce_to_2x2(&self) -> SymmetricGame {
        use BankAction::*;
        SymmetricGame {
            a: self.utility(LowThresholdHighRate, LowThresholdHighRate),
            b: self.utility(HighThresholdLowRate, LowThresholdHighRate),
            c: self.utility(LowThresholdHighRate, HighThresholdLowRate),
            d: self.utility(HighThresholdLowRate, HighThresholdLowRate),
        }
    }
}

pub const DOMINANCE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DominanceCheck {
    pub better: BankAction,
    pub worse: BankAction,
    pub against: BankAction,
    pub gap: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceReport {
    pub checks: Vec<DominanceCheck>,
    pub all_pass: bool,
}

fn validate_weights(w: &[f64; 4]) -> Result<()> {
    if w.iter().any(|x| !(x.is_finite() && *x > 0.0)) || (w.iter().sum::<f64>() - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidDistribution(format!("bank weights {w:?}")));
    }
    Ok(())
}

/// Four-action exponential weights for both banks, in log-weight form.
#[derive(Debug, Clone)]
pub struct BankDynamics {
    table: UtilityTable,
    eta: f64,
    pub t: u64,
    pub log_w: [[f64; 4]; 2],
}

fn normalize(lw: &mut [f64; 4]) -> [f64; 4] {
    let m = lw.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    for x in lw.iter_mut() {
        *x -= m;
    }
    let s: f64 = lw.iter().map(|x| x.exp()).sum();
    let ls = s.ln();
    for x in lw.iter_mut() {
        *x -= ls;
    }
    [lw[0].exp(), lw[1].exp(), lw[2].exp(), lw[3].exp()]
}

impl BankDynamics {
    pub fn new(game: &BankGame, init1: [f64; 4], init2: [f64; 4], eta: f64) -> Result<Self> {
        validate_weights(&init1)?;
        validate_weights(&init2)?;
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(Error::InvalidParameter(format!("eta = {eta}")));
        }
        let lw = |w: [f64; 4]| [w[0].ln(), w[1].ln(), w[2].ln(), w[3].ln()];
        Ok(BankDynamics { table: game.utility_matrix(), eta, t: 1, log_w: [lw(init1), lw(init2)] })
    }

    pub fn weights(&self) -> [[f64; 4]; 2] {
        let mut a = self.log_w[0];
        let mut b = self.log_w[1];
        [normalize(&mut a), normalize(&mut b)]
    }

    pub fn step(&mut self) {
        let w = self.weights();
        let mut next = self.log_w;
        for (me, row) in next.iter_mut().enumerate() {
            let opp = &w[1 - me];
            for (a, lw) in row.iter_mut().enumerate() {
                let g: f64 = (0..4).map(|y| self.table[a][y] * opp[y]).sum();
                *lw += self.eta * g;
            }
            normalize(row);
        }
        self.log_w = next;
        self.t += 1;
    }

    /// Log-ratio of θ₁ = (τ_ℓ, γ_h) over θ₂ = (τ_h, γ_ℓ) for each bank.
    pub fn reduced_log_ratios(&self) -> [f64; 2] {
        [self.log_w[0][1] - self.log_w[0][2], self.log_w[1][1] - self.log_w[1][2]]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BankRecord {
    pub t: u64,
    pub bank1: [f64; 4],
    pub bank2: [f64; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BankRun {
    pub records: Vec<BankRecord>,
    pub final_weights: [[f64; 4]; 2],
    /// Highest-weight decision of each bank at the end.
    pub limit: (BankAction, BankAction),
    /// Largest final weight on a decision other than the limit one.
    pub max_non_limit_weight: f64,
    /// Largest final weight on the dominated decisions (τ_ℓ, γ_ℓ) and (τ_h, γ_h).
    pub max_dominated_weight: f64,
    pub reduced_game: SymmetricGame,
    pub reduced_verdict: LimitVerdict,
    /// The 4-action limit maps onto the 2×2 verdict.
    pub consistent: bool,
}

pub fn run_bank_experiment(
    game: &BankGame,
    init1: [f64; 4],
    init2: [f64; 4],
    eta: f64,
    horizon: u64,
) -> Result<BankRun> {
    if horizon < 1 {
        return Err(Error::InvalidParameter("horizon must be at least 1".into()));
    }
    let mut dynm = BankDynamics::new(game, init1, init2, eta)?;
    let mut records = Vec::new();
    loop {
        let t = dynm.t;
        if t <= 1000 || t % 10 == 0 || t == horizon {
            let w = dynm.weights();
            records.push(BankRecord { t, bank1: w[0], bank2: w[1] });
        }
        if t >= horizon {
            break;
        }
        dynm.step();
    }
    let w = dynm.weights();
    let argmax = |v: &[f64; 4]| {
        let mut k = 0;
        for i in 1..4 {
            if v[i] > v[k] {
                k = i;
            }
        }
        k
    };
    let (k1, k2) = (argmax(&w[0]), argmax(&w[1]));
    let mut non_limit: f64 = 0.0;
    for (b, k) in [(0, k1), (1, k2)] {
        for a in 0..4 {
            if a != k {
                non_limit = non_limit.max(w[b][a]);
            }
        }
    }
    let dominated = w[0][0].max(w[0][3]).max(w[1][0]).max(w[1][3]);

    let reduced_game = game.reduce_to_2x2();
    let u0 = [init1[1].ln() - init1[2].ln(), init2[1].ln() - init2[2].ln()];
    let s0 = DynState::from_log_ratios(&reduced_game, 1, u0);
    let opts = SimOptions { recording: Recording::Final, record_potentials: false, ..SimOptions::default() };
    let reduced = simulate_from(&reduced_game, s0, eta, horizon, &opts, |_| {})?;
    let limit = (BankAction::from_index(k1), BankAction::from_index(k2));
    let consistent = match (reduced.verdict.kind, limit.0.reduced(), limit.1.reduced()) {
        (LimitKind::PureNE { pair }, Some(a), Some(b)) => pair == (a, b),
        _ => false,
    };
    Ok(BankRun {
        records,
        final_weights: w,
        limit,
        max_non_limit_weight: non_limit,
        max_dominated_weight: dominated,
        reduced_game,
        reduced_verdict: reduced.verdict,
        consistent,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
}

/// Sampled-customer estimate of every table entry. Each customer with score y
/// applies to every bank whose threshold y meets, takes the lowest offered
/// rate and splits evenly on ties; a served customer is worth (2+γ)y − 1.
pub fn monte_carlo_table(game: &BankGame, samples: u64, seed: u64) -> [[McEstimate; 4]; 4] {
    let p = &game.params;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = [[0.0f64; 4]; 4];
    let mut sq = [[0.0f64; 4]; 4];
    for _ in 0..samples {
        let y = game.dist.sample(&mut rng);
        for own in BankAction::ALL {
            for other in BankAction::ALL {
                let v = served_share(own, other, y, p) * ((2.0 + own.gamma(p)) * y - 1.0);
                sum[own.index()][other.index()] += v;
                sq[own.index()][other.index()] += v * v;
            }
        }
    }
    let n = samples as f64;
    let mut out = [[McEstimate { mean: 0.0, std_error: 0.0 }; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mean = sum[i][j] / n;
            let var = (sq[i][j] / n - mean * mean).max(0.0) * n / (n - 1.0).max(1.0);
            out[i][j] = McEstimate { mean, std_error: (var / n).sqrt() };
        }
    }
    out
}

/// Fraction of a customer with score y that `own` serves against `other`.
pub fn served_share(own: BankAction, other: BankAction, y: f64, p: &BankParams) -> f64 {
    let me = y >= own.tau(p);
    let them = y >= other.tau(p);
    match (me, them) {
        (false, _) => 0.0,
        (true, false) => 1.0,
        (true, true) => {
            let (g1, g2) = (own.gamma(p), other.gamma(p));
            if g1 < g2 {
                1.0
            } else if g1 > g2 {
                0.0
            } else {
                0.5
            }
        }
    }
}

/// A named reference configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BankScenario {
    pub label: &'static str,
    pub game: BankGame,
    /// Expected signs of (ε₁, ε₂).
    pub signs: (i8, i8),
    /// Decisions both banks end up on with the standard initial weights.
    pub limit: (BankAction, BankAction),
}

pub const STANDARD_INIT: ([f64; 4], [f64; 4]) = ([0.1, 0.5, 0.3, 0.1], [0.1, 0.3, 0.5, 0.1]);
pub const DEFAULT_BANK_ETA: f64 = 0.1;

/// The four sign configurations used in the experiments.
pub fn reference_scenarios() -> Vec<BankScenario> {
    use BankAction::*;
    let tg = |mu, sigma| CreditDistribution::truncated_gaussian(mu, sigma).unwrap();
    let p48 = BankParams::new(0.4, 0.8).unwrap();
    let p67 = BankParams::new(0.6, 0.7).unwrap();
    let pu = CreditDistribution::piecewise_uniform(0.01, 0.95, p67.tau_l, p67.tau_h).unwrap();
    vec![
        BankScenario {
            label: "++",
            game: BankGame::new(tg(0.3, 0.1), p48),
            signs: (1, 1),
            limit: (LowThresholdHighRate, LowThresholdHighRate),
        },
        BankScenario {
            label: "--",
            game: BankGame::new(tg(0.1, 0.3), p48),
            signs: (-1, -1),
            limit: (HighThresholdLowRate, HighThresholdLowRate),
        },
        BankScenario {
            label: "+-",
            game: BankGame::new(tg(0.1, 0.2), p48),
            signs: (1, -1),
            limit: (HighThresholdLowRate, HighThresholdLowRate),
        },
        BankScenario {
            label: "-+",
            game: BankGame::new(pu, p67),
            signs: (-1, 1),
            limit: (LowThresholdHighRate, HighThresholdLowRate),
        },
    ]
}

pub fn sign_of(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform(params: &BankParams) -> CreditDistribution {
        CreditDistribution::piecewise_uniform(params.tau_l, params.tau_h - params.tau_l, params.tau_l, params.tau_h)
            .unwrap()
    }

    #[test]
    fn h_examples() {
        let p = BankParams::new(0.4, 0.8).unwrap();
        let d = uniform(&p);
        assert!((h_integral(&d, 0.4, 0.0, 1.0).unwrap() - 0.2).abs() < 1e-15);
        assert_eq!(h_integral(&d, 0.4, 0.3, 0.3).unwrap(), 0.0);
        assert!(matches!(h_integral(&d, 0.4, 0.6, 0.3), Err(Error::InvalidRange { .. })));
        let yg = 1.0 / 2.4;
        assert!(h_integral(&d, 0.4, 0.1, yg).unwrap() < 0.0);
        assert!(h_integral(&d, 0.4, yg, 0.9).unwrap() > 0.0);
    }

    #[test]
    fn thresholds() {
        let p = BankParams::new(0.4, 0.8).unwrap();
        assert_eq!((p.tau_l, p.tau_h), (1.0 / 2.8, 1.0 / 2.4));
        let q = BankParams::with_rule(0.4, 0.8, ThresholdRule::Reciprocal).unwrap();
        assert_eq!((q.tau_l, q.tau_h), (1.0 / 1.8, 1.0 / 1.4));
        assert!(BankParams::new(0.8, 0.4).is_err());
    }

    #[test]
    fn table_structure() {
        let p = BankParams::new(0.4, 0.8).unwrap();
        let g = BankGame::new(uniform(&p), p);
        let m = g.utility_matrix();
        for k in BankAction::ALL {
            let h = h_integral(&g.dist, k.gamma(&p), k.tau(&p), 1.0).unwrap();
            assert_eq!(m[k.index()][k.index()], 0.5 * h);
        }
        assert_eq!(m[1][0], 0.0);
        assert_eq!(m[3][0], 0.0);
        assert_eq!(m[3][2], 0.0);
        let m2 = g.bank2_matrix();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m2[i][j], m[j][i]);
            }
        }
        let r = g.reduce_to_2x2();
        assert_eq!((r.a, r.b, r.c, r.d), (m[1][1], m[2][1], m[1][2], m[2][2]));
        assert!(g.dominance_check().all_pass);
    }

    #[test]
    fn scenario_signs() {
        for s in reference_scenarios() {
            let (e1, e2) = s.game.reduce_to_2x2().eps();
            assert_eq!((sign_of(e1), sign_of(e2)), s.signs, "{}", s.label);
        }
    }
}
