//! Holevo information `χ = log₂d + H(ρ̃_c) − H^min` of the 3-switch.
//!
//! All entropies are in bits.

use crate::channel::{Branch, ChannelParams};
use crate::error::Result;
use crate::linalg::{clamp_nonnegative, symmetric_eigenvalues};
use crate::scalar::Real;
use crate::spectrum::{switch_spectrum, SwitchSpectrum, NEGATIVE_TOLERANCE};
use crate::switch::{control_output, ControlMatrix, OrderConfiguration, ORDERS};

/// Negative χ within this distance of zero is reported as zero.
pub const CHI_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct HolevoResult<T> {
    pub chi: T,
    pub h_min: T,
    pub h_control: T,
    pub params: ChannelParams<T>,
    pub config: OrderConfiguration<T>,
}

/// `−x log₂ x`, with `0 log 0 = 0`.
pub fn entropy_term<T: Real>(x: T) -> T {
    if x > T::zero() {
        -x * x.log2()
    } else {
        T::zero()
    }
}

/// Shannon entropy (bits) of a probability vector; tiny negatives are clamped.
pub fn entropy_bits<T: Real>(values: &[T]) -> Result<T> {
    let mut v = values.to_vec();
    clamp_nonnegative(&mut v, T::tol(NEGATIVE_TOLERANCE))?;
    Ok(v.into_iter().map(entropy_term).sum())
}

/// Minimal output entropy from the branch spectra, each `λ_{s,0}` weighted by `d − 1`.
pub fn h_min<T: Real>(spectrum: &SwitchSpectrum<T>) -> Result<T> {
    let mut total = T::zero();
    for branch in Branch::BOTH {
        let weight = T::from_usize_lossy(branch.multiplicity(spectrum.d));
        total += weight * entropy_bits(spectrum.branch(branch))?;
    }
    Ok(total)
}

/// Von Neumann entropy of the output control state.
pub fn h_control<T: Real>(control: &ControlMatrix<T>) -> Result<T> {
    let eig = symmetric_eigenvalues(&control.entries)?;
    entropy_bits(&eig)
}

fn assemble<T: Real>(h_min: T, h_control: T, params: &ChannelParams<T>, config: OrderConfiguration<T>) -> HolevoResult<T> {
    let mut chi = params.dim().log2() + h_control - h_min;
    if chi < T::zero() && chi >= -T::tol(CHI_TOLERANCE) {
        chi = T::zero();
    }
    HolevoResult { chi, h_min, h_control, params: *params, config }
}

pub fn holevo<T: Real>(config: &OrderConfiguration<T>, params: &ChannelParams<T>) -> Result<HolevoResult<T>> {
    let hm = h_min(&switch_spectrum(config, params)?)?;
    let hc = h_control(&control_output(config, params))?;
    Ok(assemble(hm, hc, params, config.clone()))
}

/// Closed-form `H^min` for the equiprobable superposition of all six orders.
pub fn h_min_m6_closed_form<T: Real>(params: &ChannelParams<T>) -> T {
    let q = params.q();
    let d = params.dim();
    let l = |x: f64| T::lit(x);
    let one = T::one();
    let p = one - q;
    let (d2, d3) = (d * d, d * d * d);
    let dm1 = d - one;
    let s = l(2.0) * q + one;
    let t = l(5.0) * q + one;
    let u = l(3.0) * q + one;
    let wide = d2 * s * t + l(3.0) * p * p;
    let top = l(6.0) * d3 * q * q * q + d2 * s * t * p + d * (l(7.0) * q + l(2.0)) * p * p + l(3.0) * p * p * p;
    // (weight, eigenvalue) pairs; the bracket sums weight·log₂(eigenvalue)
    let terms = [
        (dm1 * p * p * (d - l(3.0) * q + l(3.0)), dm1 * p * p * (d - l(3.0) * q + l(3.0)) / (l(6.0) * d3)),
        (l(2.0) * dm1 * d * p * p * p, dm1 * p * p * p / (l(6.0) * d2)),
        (l(2.0) * dm1 * d2 * p * p * p, p * p * p / (l(6.0) * d)),
        (l(2.0) * dm1 * d * u * p * p, dm1 * p * p * u / (l(6.0) * d2)),
        (l(2.0) * dm1 * d2 * u * p * p, p * p * u / (l(6.0) * d)),
        (dm1 * p * p * (d2 + l(3.0) * q - l(3.0)), p * p * (d2 + l(3.0) * q - l(3.0)) / (l(6.0) * d3)),
        (dm1 * p * wide, p * wide / (l(6.0) * d3)),
        (top, top / (l(6.0) * d3)),
    ];
    -weighted_log_sum(&terms) / (l(6.0) * d3)
}

/// Closed-form `H(ρ̃_c)` for the equiprobable superposition of all six orders,
/// built from the control eigenvalues expressed in `q` and `d`.
pub fn h_control_m6_closed_form<T: Real>(params: &ChannelParams<T>) -> T {
    let q = params.q();
    let d = params.dim();
    let l = |x: f64| T::lit(x);
    let one = T::one();
    let p = one - q;
    let d2 = d * d;
    let scale = l(6.0) * d2;
    let g = d2 - one;
    let top = d2 * (l(-4.0) * q * q * q + l(3.0) * q * q + l(6.0) * q + one) + (l(4.0) * q + l(5.0)) * p * p;
    let terms = [
        (g * p * p, g * p * p / scale),
        (l(2.0) * g * p * p * p, g * p * p * p / scale),
        (l(2.0) * g * p * p * (l(3.0) * q + one), g * p * p * (l(3.0) * q + one) / scale),
        (top, top / scale),
    ];
    -weighted_log_sum(&terms) / scale
}

fn weighted_log_sum<T: Real>(terms: &[(T, T)]) -> T {
    terms
        .iter()
        .map(|&(w, x)| if w == T::zero() || x <= T::zero() { T::zero() } else { w * x.log2() })
        .sum()
}

/// Control-state eigenvalues of the full superposition from the entries α, β, γ, δ.
pub fn m6_control_eigenvalues<T: Real>(params: &ChannelParams<T>) -> [T; ORDERS] {
    let q = params.q();
    let d = params.dim();
    let l = |x: f64| T::lit(x);
    let p = T::one() - q;
    let d2 = d * d;
    let (q2, q3, p2, p3) = (q * q, q * q * q, p * p, p * p * p);
    let alpha = (q3 + l(3.0) * q2 * p + p3 + l(3.0) * q * p2) / l(6.0);
    let beta = (d2 * q3 + l(3.0) * d2 * q2 * p + l(2.0) * d2 * q * p2 + p3 + q * p2) / (l(6.0) * d2);
    let gamma = (d2 * q3 + l(3.0) * d2 * q2 * p + d2 * q * p2 + p3 + l(2.0) * q * p2) / (l(6.0) * d2);
    let delta = (d2 * q3 + l(3.0) * d2 * q2 * p + p3 + l(3.0) * q * p2) / (l(6.0) * d2);
    let two = l(2.0);
    let mut eig = [
        alpha + beta - gamma - delta,
        alpha + beta - gamma - delta,
        alpha - two * beta + two * gamma - delta,
        alpha - beta - gamma + delta,
        alpha - beta - gamma + delta,
        alpha + two * beta + two * gamma + delta,
    ];
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal));
    eig
}

/// χ of the equiprobable six-order superposition from closed forms only.
pub fn holevo_m6_analytic<T: Real>(params: &ChannelParams<T>) -> Result<HolevoResult<T>> {
    let config = OrderConfiguration::equiprobable(&[1, 2, 3, 4, 5, 6])?;
    Ok(assemble(h_min_m6_closed_form(params), h_control_m6_closed_form(params), params, config))
}

/// χ of the cyclic superposition `{1, 4, 5}` from its closed-form output and
/// control spectra.
pub fn holevo_cyclic_m3_analytic<T: Real>(params: &ChannelParams<T>) -> Result<HolevoResult<T>> {
    let config = OrderConfiguration::equiprobable(&[1, 4, 5])?;
    let spectrum = SwitchSpectrum {
        orthogonal: crate::spectrum::cyclic_m3_eigenvalues_in_q(params, Branch::Orthogonal),
        aligned: crate::spectrum::cyclic_m3_eigenvalues_in_q(params, Branch::Aligned),
        d: params.d(),
    };
    let q = params.q();
    let one = T::one();
    let d2 = params.dim() * params.dim();
    let three = T::lit(3.0);
    let pair = (d2 - one) * (q - one) * (q - one) * (q + one) / (three * d2);
    let top = (T::lit(2.0) * q + one - T::lit(2.0) * (q - one) * ((d2 - one) * q * q + one) / d2) / three;
    let hc = entropy_bits(&[pair, pair, top])?;
    Ok(assemble(h_min(&spectrum)?, hc, params, config))
}
