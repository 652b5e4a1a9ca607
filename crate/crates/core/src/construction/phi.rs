//! Mean-LLR evolution for the Gaussian approximation of density evolution.
//!
//! Reliabilities are tracked as `λ = ln μ`, where `μ` is the mean of the
//! consistent Gaussian N(μ, 2μ) modelling a bit-channel LLR. The variable
//! node doubles `μ`; the check node maps `φ(μ') = 1 - (1 - φ(μ))²` through
//! the function `φ(μ) = 1 - E[tanh(u/2)]`.
//!
//! `φ` is pieced together from three regimes so that it is accurate and
//! monotone everywhere:
//!  * `μ < 1.4555...` — 96-node Gauss-Hermite quadrature of the defining
//!    integral (the common curve fits misbehave as `μ -> 0`),
//!  * `1.4555... <= μ <= 14.394...` — the `exp(-0.4527 μ^0.86 + 0.0218)` fit,
//!  * above — the asymptotic `sqrt(π/μ) e^{-μ/4} (1 - 10/(7μ))`, evaluated in
//!    log scale; large check updates are solved there by Newton iteration so
//!    that nothing underflows.
//! The seams are the numerically computed crossing points of adjacent
//! branches, so the assembled `φ` is continuous.
//!
//! For `μ` below `1e-4` the check node uses the exact limit `μ' = μ²/2`
//! directly in log scale, which keeps deeply frozen channels ordered instead
//! of flushing them to zero.

use alloc::vec;
use alloc::vec::Vec;

use super::gh96::{GH_NODES, GH_WEIGHTS};

/// Seam between the quadrature branch and the curve-fit branch.
const X_LO: f64 = 1.455_527_014_525_390_7;
const PHI_X_LO: f64 = 0.546_957_539_502_848;
/// Seam between the curve-fit branch and the asymptotic branch.
const X_HI: f64 = 14.394_352_942_168_425;
const PHI_X_HI: f64 = 0.011_514_322_819_004_92;
/// Above this mean, check updates run entirely in log scale.
const MU_LOG_DOMAIN: f64 = 200.0;
/// Below this mean (in `ln` scale), the check node is `μ²/2`.
const LN_TINY: f64 = -9.210_340_371_976_182; // ln(1e-4)

const LN2: f64 = core::f64::consts::LN_2;

fn phi_quadrature(x: f64) -> f64 {
    let s = libm::sqrt(2.0 * x);
    let mut acc = 0.0;
    for (z, w) in GH_NODES.iter().zip(GH_WEIGHTS.iter()) {
        let u = x + s * z;
        // 2σ(-u) = 1 - tanh(u/2), safe against overflow: exp(u) -> inf -> 0
        acc += w * 2.0 / (1.0 + libm::exp(u));
    }
    acc
}

fn phi_fit(x: f64) -> f64 {
    libm::exp(-0.4527 * libm::pow(x, 0.86) + 0.0218)
}

fn ln_phi_asym(x: f64) -> f64 {
    0.5 * libm::log(core::f64::consts::PI / x) - 0.25 * x + libm::log1p(-10.0 / (7.0 * x))
}

fn ln_phi_asym_deriv(x: f64) -> f64 {
    -0.25 - 0.5 / x + (10.0 / (7.0 * x * x)) / (1.0 - 10.0 / (7.0 * x))
}

/// `φ(μ)`, monotone decreasing from 1 at `μ = 0`.
pub fn phi(x: f64) -> f64 {
    if x <= 0.0 {
        1.0
    } else if x < X_LO {
        phi_quadrature(x)
    } else if x <= X_HI {
        phi_fit(x)
    } else {
        libm::exp(ln_phi_asym(x))
    }
}

/// Solve `ln φ(x) = target` on the asymptotic branch by Newton iteration.
fn asym_solve(target: f64, guess: f64) -> f64 {
    let mut x = if guess > X_HI { guess } else { X_HI };
    for _ in 0..64 {
        let step = (ln_phi_asym(x) - target) / ln_phi_asym_deriv(x);
        x -= step;
        if x <= X_HI {
            x = X_HI + 1e-9;
        }
        if libm::fabs(step) < 1e-13 * if x > 1.0 { x } else { 1.0 } {
            break;
        }
    }
    x
}

/// Inverse of [`phi`].
pub fn phi_inv(y: f64) -> f64 {
    if y >= 1.0 {
        return 0.0;
    }
    if y > PHI_X_LO {
        // bisection on the quadrature branch
        let (mut lo, mut hi) = (0.0f64, X_LO);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if phi_quadrature(mid) > y {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    } else if y >= PHI_X_HI {
        libm::pow((0.0218 - libm::log(y)) / 0.4527, 1.0 / 0.86)
    } else {
        asym_solve(libm::log(y), -4.0 * libm::log(y))
    }
}

/// Check-node update `μ' = φ⁻¹(1 - (1 - φ(μ))²)` in linear scale.
pub fn check_update(mu: f64) -> f64 {
    if mu <= 0.0 {
        return 0.0;
    }
    if mu > MU_LOG_DOMAIN {
        // 1 - (1-p)² = p(2-p) ≈ 2p: solve ln φ(x) = ln 2 + ln φ(μ)
        return asym_solve(LN2 + ln_phi_asym(mu), mu - 4.0 * LN2);
    }
    let p = phi(mu);
    phi_inv(p * (2.0 - p))
}

/// Check-node update in `λ = ln μ` scale.
pub fn check_update_ln(lambda: f64) -> f64 {
    if lambda < LN_TINY {
        // μ' = μ²/2 exactly in the small-mean limit
        return 2.0 * lambda - LN2;
    }
    libm::log(check_update(libm::exp(lambda)))
}

/// Variable-node update in `λ = ln μ` scale.
pub fn var_update_ln(lambda: f64) -> f64 {
    lambda + LN2
}

/// Log-mean reliabilities of all `2^n` bit channels for a channel LLR mean
/// of `mu0`. Index bits are consumed most significant first, matching the
/// `x = u · T_N` butterfly in natural order.
pub fn ga_ln_means(n: usize, mu0: f64) -> Vec<f64> {
    let mut lams = vec![libm::log(mu0)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(lams.len() * 2);
        for &l in &lams {
            next.push(check_update_ln(l));
            next.push(var_update_ln(l));
        }
        lams = next;
    }
    lams
}

/// Channel LLR mean for a BPSK-AWGN channel at `Es/N0` given in dB:
/// `μ0 = 2/σ² = 4·Es/N0`.
pub fn channel_mean_es_n0_db(es_n0_db: f64) -> f64 {
    4.0 * libm::pow(10.0, es_n0_db / 10.0)
}

/// Tail probability `Q(x)` of the standard normal.
pub fn q_func(x: f64) -> f64 {
    0.5 * libm::erfc(x / core::f64::consts::SQRT_2)
}

/// Error probability of a bit channel with log-mean `λ`: `Q(sqrt(μ/2))`.
pub fn bit_error_prob_ln(lambda: f64) -> f64 {
    q_func(libm::sqrt(0.5 * libm::exp(lambda)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_is_continuous_at_seams() {
        for (x, _) in [(X_LO, PHI_X_LO), (X_HI, PHI_X_HI)] {
            let below = phi(x * (1.0 - 1e-9));
            let above = phi(x * (1.0 + 1e-9));
            assert!((below - above).abs() / below < 1e-6, "jump at {x}");
        }
    }

    #[test]
    fn phi_monotone_and_inverse_consistent() {
        let mut prev = 1.0;
        let mut x = 1e-6;
        while x < 300.0 {
            let p = phi(x);
            assert!(p < prev, "phi not decreasing at {x}");
            prev = p;
            let back = phi_inv(p);
            assert!((back - x).abs() / x < 1e-5, "inverse mismatch at {x}: {back}");
            x *= 1.3;
        }
    }

    #[test]
    fn check_update_limits() {
        // small mean: μ²/2
        let mu = 1e-6;
        let got = libm::exp(check_update_ln(libm::log(mu)));
        assert!((got - mu * mu / 2.0).abs() / (mu * mu / 2.0) < 1e-3);
        // large mean: roughly μ - 4 ln 2
        let mu = 5000.0;
        let got = check_update(mu);
        assert!((got - (mu - 4.0 * LN2)).abs() < 1.0, "got {got}");
        // degradation
        for mu in [0.01, 0.5, 3.0, 20.0, 100.0, 1000.0] {
            assert!(check_update(mu) < mu);
        }
    }

    #[test]
    fn exchange_inequality_along_seams() {
        // c(2a) >= 2 c(a) keeps the universal partial order intact
        let mut a = 1e-6;
        while a < 400.0 {
            let lhs = check_update_ln(libm::log(2.0 * a));
            let rhs = LN2 + check_update_ln(libm::log(a));
            assert!(lhs >= rhs - 1e-9, "exchange violated at a={a}");
            a *= 1.11;
        }
    }
}
