//! Brute-force validator: the switch channel assembled from explicit Kraus
//! operators and order permutations, producing the full `6d × 6d` output.
//!
//! Nothing here reuses the block-coefficient pipeline. Complex arithmetic and
//! the dense Hermitian eigensolver (nalgebra) are confined to this module.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Exp1, StandardNormal};
use rayon::prelude::*;

use crate::channel::{block_coefficients, ChannelParams};
use crate::error::{Error, Result};
use crate::holevo::{entropy_term, HolevoResult, CHI_TOLERANCE};
use crate::switch::{BlockPattern, ControlMatrix, OrderConfiguration, ORDERS};

pub type CMatrix = DMatrix<Complex64>;

/// Largest target dimension `switch_output` accepts by default (d⁶ Kraus triples).
pub const SWITCH_OUTPUT_MAX_DIM: usize = 4;
/// Largest target dimension `holevo_bruteforce` accepts by default.
pub const BRUTEFORCE_MAX_DIM: usize = 3;
/// Output eigenvalues down to this value are treated as zero.
pub const ORACLE_NEGATIVE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct KrausSet {
    pub operators: Vec<CMatrix>,
}

impl KrausSet {
    pub fn dim(&self) -> usize {
        self.operators[0].nrows()
    }

    /// `Σ K†K`.
    pub fn completeness(&self) -> CMatrix {
        let d = self.dim();
        self.operators.iter().fold(CMatrix::zeros(d, d), |acc, k| acc + k.adjoint() * k)
    }

    /// `Σ K K†`.
    pub fn completeness_dual(&self) -> CMatrix {
        let d = self.dim();
        self.operators.iter().fold(CMatrix::zeros(d, d), |acc, k| acc + k * k.adjoint())
    }

    pub fn apply(&self, rho: &CMatrix) -> CMatrix {
        let d = self.dim();
        self.operators.iter().fold(CMatrix::zeros(d, d), |acc, k| acc + k * rho * k.adjoint())
    }
}

/// Generalized Pauli operators `XᵃZᵇ`, `a, b ∈ 0..d`; index 0 is the identity.
pub fn weyl_operators(d: usize) -> Vec<CMatrix> {
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / d as f64);
    let shift = CMatrix::from_fn(d, d, |r, c| if r == (c + 1) % d { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) });
    let clock = CMatrix::from_fn(d, d, |r, c| if r == c { omega.powu(r as u32) } else { Complex64::new(0.0, 0.0) });
    let mut ops = Vec::with_capacity(d * d);
    let mut xa = CMatrix::identity(d, d);
    for _ in 0..d {
        let mut zb = CMatrix::identity(d, d);
        for _ in 0..d {
            ops.push(&xa * &zb);
            zb = &zb * &clock;
        }
        xa = &xa * &shift;
    }
    ops
}

/// Weyl-twirl decomposition of the depolarizing channel; zero-weight
/// operators are dropped.
pub fn depolarizing_kraus(params: &ChannelParams<f64>) -> KrausSet {
    let d = params.d();
    let q = params.q();
    let d2 = (d * d) as f64;
    let identity_weight = (q + (1.0 - q) / d2).sqrt();
    let other_weight = ((1.0 - q) / d2).sqrt();
    let operators = weyl_operators(d)
        .into_iter()
        .enumerate()
        .filter_map(|(i, w)| {
            let weight = if i == 0 { identity_weight } else { other_weight };
            (weight > 0.0).then(|| w * Complex64::new(weight, 0.0))
        })
        .collect();
    KrausSet { operators }
}

/// Channel application order per control label: label `n` applies
/// `N_{o[0]} ∘ N_{o[1]} ∘ N_{o[2]}`, so the operator product is
/// `K^(o[0]) K^(o[1]) K^(o[2])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationTable {
    pub orders: [[usize; 3]; ORDERS],
}

impl Default for PermutationTable {
    fn default() -> Self {
        Self { orders: [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]] }
    }
}

/// The complete switch output `S(ρ ⊗ |ψ_c⟩⟨ψ_c|)`, control-major: row
/// `n·d + i` is control label `n + 1`, target index `i`.
#[derive(Debug, Clone)]
pub struct FullOutputState {
    pub matrix: CMatrix,
    pub d: usize,
}

impl FullOutputState {
    /// Target block for 1-based control labels `(n, n')`.
    pub fn block(&self, n: usize, n_prime: usize) -> CMatrix {
        let d = self.d;
        self.matrix.view(((n - 1) * d, (n_prime - 1) * d), (d, d)).into_owned()
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    pub fn hermiticity_error(&self) -> f64 {
        (&self.matrix - self.matrix.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Control marginal: the trace of every target block.
    pub fn control_marginal(&self) -> CMatrix {
        CMatrix::from_fn(ORDERS, ORDERS, |r, c| self.block(r + 1, c + 1).trace())
    }

    /// Eigenvalues of the Hermitian output, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut e: Vec<f64> = self.matrix.clone().symmetric_eigenvalues().iter().copied().collect();
        e.sort_by(f64::total_cmp);
        e
    }
}

fn check_target(target: &CMatrix, d: usize) -> Result<()> {
    if target.nrows() != d || target.ncols() != d {
        return Err(Error::DimensionMismatch { expected: d, found: target.nrows() });
    }
    let tr = target.trace();
    if (tr.re - 1.0).abs() > 1e-10 || tr.im.abs() > 1e-10 {
        return Err(Error::InvalidTarget(format!("trace {tr} is not 1")));
    }
    if (target - target.adjoint()).iter().any(|z| z.norm() > 1e-12) {
        return Err(Error::InvalidTarget("not Hermitian".into()));
    }
    Ok(())
}

pub fn switch_output(
    config: &OrderConfiguration<f64>,
    params: &ChannelParams<f64>,
    target: &CMatrix,
) -> Result<FullOutputState> {
    switch_output_with_cap(config, params, target, SWITCH_OUTPUT_MAX_DIM)
}

/// `Σ_{ijk} K_ijk (ρ ⊗ ρ_c) K_ijk†` with `K_ijk = Σ_n π_n(K_i K_j K_k) ⊗ |n⟩⟨n|`.
pub fn switch_output_with_cap(
    config: &OrderConfiguration<f64>,
    params: &ChannelParams<f64>,
    target: &CMatrix,
    max_dim: usize,
) -> Result<FullOutputState> {
    let d = params.d();
    if d > max_dim {
        return Err(Error::OracleDimension { d, max: max_dim });
    }
    check_target(target, d)?;
    let kraus = depolarizing_kraus(params);
    let perms = PermutationTable::default();
    let amplitudes: Vec<f64> = config.probs().iter().map(|p| p.sqrt()).collect();
    let support: Vec<usize> = (0..ORDERS).filter(|&n| amplitudes[n] > 0.0).collect();
    let ops = &kraus.operators;
    let r = ops.len();

    let zero_blocks = || vec![CMatrix::zeros(d, d); ORDERS * ORDERS];
    let blocks = (0..r)
        .into_par_iter()
        .map(|i| {
            let mut acc = zero_blocks();
            let mut left = vec![CMatrix::zeros(d, d); ORDERS];
            let mut left_rho = vec![CMatrix::zeros(d, d); ORDERS];
            for j in 0..r {
                for k in 0..r {
                    let chosen = [&ops[i], &ops[j], &ops[k]];
                    for &n in &support {
                        let [a, b, c] = perms.orders[n];
                        let l = chosen[a - 1] * chosen[b - 1] * chosen[c - 1];
                        left_rho[n] = &l * target;
                        left[n] = l;
                    }
                    for &n in &support {
                        for &n2 in &support {
                            let w = Complex64::new(amplitudes[n] * amplitudes[n2], 0.0);
                            acc[n * ORDERS + n2] += (&left_rho[n] * left[n2].adjoint()) * w;
                        }
                    }
                }
            }
            acc
        })
        .reduce(zero_blocks, |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        });

    let mut matrix = CMatrix::zeros(ORDERS * d, ORDERS * d);
    for n in 0..ORDERS {
        for n2 in 0..ORDERS {
            matrix.view_mut((n * d, n2 * d), (d, d)).copy_from(&blocks[n * ORDERS + n2]);
        }
    }
    Ok(FullOutputState { matrix, d })
}

/// Location and size of the worst block disagreement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockDeviation {
    pub max_abs: f64,
    /// 1-based control labels of the worst block.
    pub worst: (usize, usize),
}

/// Compares every output block with `√(P_n P_n') · (x_ρ ρ + x_id 1/d)` for the
/// block kinds named by `pattern`.
pub fn compare_blocks(
    state: &FullOutputState,
    config: &OrderConfiguration<f64>,
    params: &ChannelParams<f64>,
    target: &CMatrix,
    pattern: &BlockPattern,
) -> BlockDeviation {
    let d = state.d;
    let identity = CMatrix::identity(d, d);
    let mut worst = BlockDeviation { max_abs: 0.0, worst: (1, 1) };
    for n in 1..=ORDERS {
        for n2 in 1..=ORDERS {
            let c = block_coefficients(pattern.kind(n, n2), params);
            let w = config.weight(n - 1, n2 - 1);
            let expected = target * Complex64::new(w * c.rho_coeff, 0.0) + &identity * Complex64::new(w * c.id_coeff / d as f64, 0.0);
            let dev = (state.block(n, n2) - expected).iter().map(|z| z.norm()).fold(0.0, f64::max);
            if dev > worst.max_abs {
                worst = BlockDeviation { max_abs: dev, worst: (n, n2) };
            }
        }
    }
    worst
}

/// Largest entrywise gap between the oracle's control marginal and a control matrix.
pub fn compare_control(state: &FullOutputState, control: &ControlMatrix<f64>) -> f64 {
    let marginal = state.control_marginal();
    let mut max = 0.0f64;
    for r in 0..ORDERS {
        for c in 0..ORDERS {
            max = max.max((marginal[(r, c)] - Complex64::new(control.entries[r][c], 0.0)).norm());
        }
    }
    max
}

fn entropy_of_hermitian(m: CMatrix) -> Result<f64> {
    let mut total = 0.0;
    for &e in m.symmetric_eigenvalues().iter() {
        if e < -ORACLE_NEGATIVE_TOLERANCE {
            return Err(Error::NegativeEigenvalue { value: e });
        }
        total += entropy_term(e.max(0.0));
    }
    Ok(total)
}

/// Computational-basis pure state `|j⟩⟨j|`.
pub fn basis_state(d: usize, j: usize) -> CMatrix {
    CMatrix::from_fn(d, d, |r, c| if r == j && c == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) })
}

pub fn holevo_bruteforce(config: &OrderConfiguration<f64>, params: &ChannelParams<f64>) -> Result<HolevoResult<f64>> {
    holevo_bruteforce_with_cap(config, params, BRUTEFORCE_MAX_DIM)
}

/// χ from full output states: `H^min` is the least output entropy over the
/// computational-basis inputs, `H(ρ̃_c)` the entropy of the control marginal.
pub fn holevo_bruteforce_with_cap(
    config: &OrderConfiguration<f64>,
    params: &ChannelParams<f64>,
    max_dim: usize,
) -> Result<HolevoResult<f64>> {
    let d = params.d();
    if d > max_dim {
        return Err(Error::OracleDimension { d, max: max_dim });
    }
    let mut h_min = f64::INFINITY;
    let mut h_control = 0.0;
    for j in 0..d {
        let state = switch_output_with_cap(config, params, &basis_state(d, j), max_dim)?;
        if j == 0 {
            h_control = entropy_of_hermitian(state.control_marginal())?;
        }
        h_min = h_min.min(entropy_of_hermitian(state.matrix)?);
    }
    let mut chi = (d as f64).log2() + h_control - h_min;
    if (-CHI_TOLERANCE..0.0).contains(&chi) {
        chi = 0.0;
    }
    Ok(HolevoResult { chi, h_min, h_control, params: *params, config: config.clone() })
}

/// Full-rank random density matrix `GG†/Tr(GG†)` with Gaussian `G`.
pub fn random_density_matrix<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMatrix {
    let g = CMatrix::from_fn(d, d, |_, _| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
    let m = &g * g.adjoint();
    let tr = m.trace();
    let mut rho = m / tr;
    // exact Hermitian symmetry
    rho = (&rho + rho.adjoint()) * Complex64::new(0.5, 0.0);
    rho
}

/// Random configuration with a random support of 1 to 6 orders and
/// exponential weights on it.
pub fn random_configuration<R: Rng + ?Sized>(rng: &mut R) -> OrderConfiguration<f64> {
    let m = rng.random_range(1..=ORDERS);
    let mut labels: Vec<usize> = (0..ORDERS).collect();
    for i in 0..m {
        let j = rng.random_range(i..ORDERS);
        labels.swap(i, j);
    }
    let mut probs = [0.0; ORDERS];
    for &l in &labels[..m] {
        probs[l] = rng.sample::<f64, _>(Exp1) + 1e-3;
    }
    let total: f64 = probs.iter().sum();
    for p in probs.iter_mut() {
        *p /= total;
    }
    OrderConfiguration::new(probs).expect("normalized weights form a valid configuration")
}
