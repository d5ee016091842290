//! Maps (game, initialization, η) to a convergence row and its predicted limit.

use serde::{Deserialize, Serialize};

use crate::dynamics::{ew_step, relabel_state, DynState, LimitKind, LimitVerdict};
use crate::equilibria::MixedFamily;
use crate::error::{Error, Result};
use crate::game::{Action, MixedStrategy, Player, SignRegime, SymmetricGame};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Row {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    Special,
}

impl Row {
    pub const ALL: [Row; 11] = [
        Row::R1,
        Row::R2,
        Row::R3,
        Row::R4,
        Row::R5,
        Row::R6,
        Row::R7,
        Row::R8,
        Row::R9,
        Row::R10,
        Row::Special,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Row::R1 => "r1",
            Row::R2 => "r2",
            Row::R3 => "r3",
            Row::R4 => "r4",
            Row::R5 => "r5",
            Row::R6 => "r6",
            Row::R7 => "r7",
            Row::R8 => "r8",
            Row::R9 => "r9",
            Row::R10 => "r10",
            Row::Special => "special",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rate {
    Exponential,
    Asymptotic,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum EtaRequirement {
    None,
    UpperBound(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Guarantee {
    Guaranteed,
    /// η violates the row's requirement; the theory says nothing.
    NoGuarantee,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecialCase {
    /// Both Δ vanish: the initial state is a fixed point.
    FixedPoint,
    /// Exactly one Δ vanishes: one step later both are nonzero.
    OneStepRepair,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Expectation {
    Pure { pair: (Action, Action) },
    StrictMixed { profile: MixedStrategy },
    Family { family: MixedFamily },
}

impl Expectation {
    fn relabeled(self) -> Self {
        match self {
            Expectation::Pure { pair } => Expectation::Pure { pair: (pair.0.other(), pair.1.other()) },
            Expectation::StrictMixed { profile } => Expectation::StrictMixed { profile: profile.relabeled() },
            Expectation::Family { family } => Expectation::Family {
                family: MixedFamily { pure_player: family.pure_player, action: family.action.other() },
            },
        }
    }

    pub fn matches(&self, verdict: &LimitKind) -> bool {
        match (self, verdict) {
            (Expectation::Pure { pair }, LimitKind::PureNE { pair: v }) => pair == v,
            (Expectation::StrictMixed { profile }, LimitKind::StrictMixedNE { profile: v }) => {
                (profile.p1 - v.p1).abs() <= 1e-9
            }
            (Expectation::Family { family }, LimitKind::MixedFamilyNE { p1, p2 }) => {
                let s = match family.pure_player {
                    Player::One => p1,
                    Player::Two => p2,
                };
                *s == family.action.pure()
            }
            (Expectation::Family { family }, LimitKind::PureNE { pair }) => {
                let a = match family.pure_player {
                    Player::One => pair.0,
                    Player::Two => pair.1,
                };
                a == family.action
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimePrediction {
    pub row: Row,
    pub special: Option<SpecialCase>,
    /// Classified through the θ₁ ↔ θ₂ relabeling (ε₂ = 0 games).
    pub mirrored: bool,
    pub predicted: Vec<Expectation>,
    pub rate: Rate,
    pub eta_requirement: EtaRequirement,
    pub guarantee: Guarantee,
    /// For one-step repair: the prediction for the state after the first step.
    pub inner: Option<Box<RegimePrediction>>,
}

impl RegimePrediction {
    /// The row that actually governs the run (the inner row after a repair step).
    pub fn effective_row(&self) -> Row {
        match &self.inner {
            Some(p) => p.effective_row(),
            None => self.row,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Agreement {
    Match,
    SetMatch,
    /// Undecided at the horizon under an asymptotic row.
    Pending,
    /// The step size violates the row's requirement; nothing to check.
    Vacuous,
    Mismatch,
}

pub fn classify_strategies(
    game: &SymmetricGame,
    init: (MixedStrategy, MixedStrategy),
    eta: f64,
) -> Result<RegimePrediction> {
    classify(game, &DynState::from_strategies(game, &init.0, &init.1)?, eta)
}

pub fn classify(game: &SymmetricGame, init: &DynState, eta: f64) -> Result<RegimePrediction> {
    game.ensure_nondegenerate()?;
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::InvalidParameter(format!("eta = {eta}")));
    }
    let d = init.delta;
    if d[0] == 0.0 && d[1] == 0.0 {
        let profile = game
            .p_se()
            .ok_or_else(|| Error::InvalidInit("both Delta vanish outside a mixed-sign game".into()))?;
        return Ok(RegimePrediction {
            row: Row::Special,
            special: Some(SpecialCase::FixedPoint),
            mirrored: false,
            predicted: vec![Expectation::StrictMixed { profile }],
            rate: Rate::None,
            eta_requirement: EtaRequirement::None,
            guarantee: Guarantee::Guaranteed,
            inner: None,
        });
    }
    if d[0] == 0.0 || d[1] == 0.0 {
        let next = ew_step(game, init, eta)?;
        if next.delta[0] == 0.0 || next.delta[1] == 0.0 {
            return Err(Error::InvalidInit("a Delta still vanishes after one step".into()));
        }
        let inner = classify(game, &next, eta)?;
        return Ok(RegimePrediction {
            row: Row::Special,
            special: Some(SpecialCase::OneStepRepair),
            mirrored: inner.mirrored,
            predicted: inner.predicted.clone(),
            rate: inner.rate,
            eta_requirement: inner.eta_requirement,
            guarantee: inner.guarantee,
            inner: Some(Box::new(inner)),
        });
    }
    match game.sign_regime() {
        SignRegime::NegZero | SignRegime::PosZero => {
            let rg = game.relabeled();
            let mut p = classify(&rg, &relabel_state(&rg, init), eta)?;
            p.mirrored = true;
            p.predicted = p.predicted.into_iter().map(Expectation::relabeled).collect();
            Ok(p)
        }
        _ => Ok(classify_generic(game, init, eta)),
    }
}

fn classify_generic(game: &SymmetricGame, init: &DynState, eta: f64) -> RegimePrediction {
    use Action::*;
    let d = init.delta;
    let pure = |m, n| Expectation::Pure { pair: (m, n) };
    let bound = EtaRequirement::UpperBound(game.eta_threshold());
    let (row, predicted, rate, req) = match game.sign_regime() {
        SignRegime::NegNeg => (Row::R1, vec![pure(Theta2, Theta2)], Rate::Exponential, EtaRequirement::None),
        SignRegime::PosPos => (Row::R2, vec![pure(Theta1, Theta1)], Rate::Exponential, EtaRequirement::None),
        SignRegime::NegPos => {
            if d[0] * d[1] < 0.0 {
                let target = if d[0] < 0.0 { pure(Theta1, Theta2) } else { pure(Theta2, Theta1) };
                (Row::R3, vec![target], Rate::Exponential, EtaRequirement::None)
            } else if d[0] == d[1] {
                let profile = game.p_se().expect("mixed-sign game has p_SE");
                (Row::R5, vec![Expectation::StrictMixed { profile }], Rate::Asymptotic, bound)
            } else {
                (
                    Row::R4,
                    vec![pure(Theta1, Theta2), pure(Theta2, Theta1)],
                    Rate::Asymptotic,
                    EtaRequirement::None,
                )
            }
        }
        SignRegime::PosNeg => {
            if d[0] * d[1] > 0.0 {
                let target = if d[0] > 0.0 { pure(Theta1, Theta1) } else { pure(Theta2, Theta2) };
                (Row::R6, vec![target], Rate::Exponential, EtaRequirement::None)
            } else {
                let profile = game.p_se().expect("mixed-sign game has p_SE");
                (
                    Row::R7,
                    vec![pure(Theta1, Theta1), pure(Theta2, Theta2), Expectation::StrictMixed { profile }],
                    Rate::Asymptotic,
                    bound,
                )
            }
        }
        SignRegime::ZeroNeg => (Row::R8, vec![pure(Theta2, Theta2)], Rate::Exponential, EtaRequirement::None),
        SignRegime::ZeroPos => {
            if d[0] == d[1] {
                (Row::R9, vec![pure(Theta1, Theta1)], Rate::Asymptotic, EtaRequirement::None)
            } else {
                let fam = |pure_player| Expectation::Family {
                    family: MixedFamily { pure_player, action: Theta1 },
                };
                (Row::R10, vec![fam(Player::One), fam(Player::Two)], Rate::Asymptotic, EtaRequirement::None)
            }
        }
        SignRegime::NegZero | SignRegime::PosZero | SignRegime::Degenerate => {
            unreachable!("handled by the caller")
        }
    };
    let guarantee = match req {
        EtaRequirement::UpperBound(b) if eta >= b => Guarantee::NoGuarantee,
        _ => Guarantee::Guaranteed,
    };
    RegimePrediction {
        row,
        special: None,
        mirrored: false,
        predicted,
        rate,
        eta_requirement: req,
        guarantee,
        inner: None,
    }
}

pub fn check_prediction(pred: &RegimePrediction, verdict: &LimitVerdict) -> Agreement {
    if pred.guarantee == Guarantee::NoGuarantee {
        return Agreement::Vacuous;
    }
    if !verdict.is_decided() {
        return if pred.rate == Rate::Asymptotic { Agreement::Pending } else { Agreement::Mismatch };
    }
    if pred.predicted.iter().any(|e| e.matches(&verdict.kind)) {
        if pred.predicted.len() == 1 {
            Agreement::Match
        } else {
            Agreement::SetMatch
        }
    } else {
        Agreement::Mismatch
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Action::*;

    fn state(g: &SymmetricGame, u: [f64; 2]) -> DynState {
        DynState::from_log_ratios(g, 1, u)
    }

    #[test]
    fn table_examples() {
        let g = SymmetricGame::from_eps(1.0, 2.0).unwrap();
        let p = classify(&g, &state(&g, [0.3, -1.0]), 1.0).unwrap();
        assert_eq!(p.row, Row::R2);
        assert_eq!(p.predicted, vec![Expectation::Pure { pair: (Theta1, Theta1) }]);
        assert_eq!((p.rate, p.eta_requirement), (Rate::Exponential, EtaRequirement::None));

        let g = SymmetricGame::from_eps(-1.0, 3.0).unwrap();
        let p = classify(&g, &state(&g, [0.2, 0.2]), 1.0).unwrap();
        assert_eq!(p.row, Row::R5);
        assert_eq!(p.eta_requirement, EtaRequirement::UpperBound(2.0));
        assert_eq!(p.guarantee, Guarantee::Guaranteed);
        let p = classify(&g, &state(&g, [0.2, 0.2]), 2.0).unwrap();
        assert_eq!(p.guarantee, Guarantee::NoGuarantee);

        let g = SymmetricGame::from_eps(0.0, -1.0).unwrap();
        let p = classify(&g, &state(&g, [0.7, 2.0]), 0.5).unwrap();
        assert_eq!(p.row, Row::R8);
        assert_eq!(p.predicted, vec![Expectation::Pure { pair: (Theta2, Theta2) }]);
    }

    #[test]
    fn agreement_rules() {
        let g = SymmetricGame::from_eps(-1.0, 1.0).unwrap();
        let r4 = classify(&g, &state(&g, [0.5, 1.0]), 1.0).unwrap();
        assert_eq!(r4.row, Row::R4);
        let v = LimitVerdict { kind: LimitKind::PureNE { pair: (Theta2, Theta1) }, residual: 0.0 };
        assert_eq!(check_prediction(&r4, &v), Agreement::SetMatch);
        assert_eq!(check_prediction(&r4, &LimitVerdict::undecided()), Agreement::Pending);

        let r5 = classify(&g, &state(&g, [0.5, 0.5]), 1.0).unwrap();
        let mixed = LimitVerdict {
            kind: LimitKind::StrictMixedNE { profile: g.p_se().unwrap() },
            residual: 0.0,
        };
        assert_eq!(check_prediction(&r5, &mixed), Agreement::Match);
        let r5_big = classify(&g, &state(&g, [0.5, 0.5]), 4.5).unwrap();
        let osc = LimitVerdict { kind: LimitKind::PeriodTwoOscillation, residual: 0.0 };
        assert_eq!(check_prediction(&r5_big, &osc), Agreement::Vacuous);
        assert_eq!(check_prediction(&r5, &osc), Agreement::Mismatch);
    }

    #[test]
    fn special_cases() {
        let g = SymmetricGame::from_eps(-1.0, 1.0).unwrap();
        let p = classify(&g, &state(&g, [0.0, 0.0]), 1.0).unwrap();
        assert_eq!(p.special, Some(SpecialCase::FixedPoint));
        let p = classify(&g, &state(&g, [0.0, 0.8]), 1.0).unwrap();
        assert_eq!(p.special, Some(SpecialCase::OneStepRepair));
        assert!(p.inner.is_some());
    }

    #[test]
    fn eps2_zero_mirrors() {
        // ε = (−1, 0) relabels to (0, 1)
        let g = SymmetricGame::from_eps(-1.0, 0.0).unwrap();
        let p = classify(&g, &state(&g, [0.4, 0.4]), 1.0).unwrap();
        assert!(p.mirrored);
        assert_eq!(p.row, Row::R9);
        assert_eq!(p.predicted, vec![Expectation::Pure { pair: (Theta2, Theta2) }]);
        let g = SymmetricGame::from_eps(2.0, 0.0).unwrap();
        let p = classify(&g, &state(&g, [0.4, -3.0]), 1.0).unwrap();
        assert_eq!(p.row, Row::R8);
        assert_eq!(p.predicted, vec![Expectation::Pure { pair: (Theta1, Theta1) }]);
    }
}
