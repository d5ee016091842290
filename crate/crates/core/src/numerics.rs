//! Small numerically careful helpers shared by the dynamics and the bank game.

use libm::erfc;

/// Logistic function, evaluated without overflow for any finite `x`.
#[inline]
pub fn sigmoid(x: f64) -> f64 {
    let e = (-x.abs()).exp();
    if x >= 0.0 {
        1.0 / (1.0 + e)
    } else {
        e / (1.0 + e)
    }
}

/// `ln(sigmoid(x))`.
#[inline]
pub fn log_sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        -(-x).exp().ln_1p()
    } else {
        x - x.exp().ln_1p()
    }
}

const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

pub fn normal_pdf(x: f64) -> f64 {
    FRAC_1_SQRT_2PI * (-0.5 * x * x).exp()
}

pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// `Φ(hi) − Φ(lo)` for `lo ≤ hi`, using the upper tail when both are positive
/// so the difference does not cancel.
pub fn normal_mass(lo: f64, hi: f64) -> f64 {
    if lo >= 0.0 {
        0.5 * (erfc(lo / std::f64::consts::SQRT_2) - erfc(hi / std::f64::consts::SQRT_2))
    } else {
        normal_cdf(hi) - normal_cdf(lo)
    }
}
