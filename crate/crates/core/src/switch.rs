//! Switch matrix construction for arbitrary probability vectors over the six
//! causal orders.
//!
//! Order labels are 1-based in all public I/O (`1 → N₁∘N₂∘N₃` … `6 → N₃∘N₂∘N₁`);
//! storage is 0-based.

use crate::channel::{
    block_coefficients, control_trace_value, eigen_branch_value, BlockCoefficients, BlockKind, Branch,
    ChannelParams,
};
use crate::error::{Error, Result};
use crate::scalar::Real;

pub const ORDERS: usize = 6;

/// Probability vector `(P₁..P₆)` over the six causal orders.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderConfiguration<T> {
    probs: [T; ORDERS],
}

impl<T: Real> OrderConfiguration<T> {
    pub fn new(probs: [T; ORDERS]) -> Result<Self> {
        if let Some(p) = probs.iter().find(|p| !(**p >= T::zero())) {
            return Err(Error::InvalidProbabilities(format!("negative or NaN entry {p}")));
        }
        let total: T = probs.iter().copied().sum();
        if (total - T::one()).abs() > T::tol(1e-12) {
            return Err(Error::InvalidProbabilities(format!("entries sum to {total}, not 1")));
        }
        Ok(Self { probs })
    }

    /// Uniform weight `1/m` on the given 1-based order labels.
    pub fn equiprobable(support: &[usize]) -> Result<Self> {
        if support.is_empty() || support.len() > ORDERS {
            return Err(Error::InvalidOrderCount(support.len()));
        }
        let mut probs = [T::zero(); ORDERS];
        let w = T::one() / T::from_usize_lossy(support.len());
        for &label in support {
            if !(1..=ORDERS).contains(&label) {
                return Err(Error::InvalidProbabilities(format!("order label {label} outside 1..=6")));
            }
            if probs[label - 1] > T::zero() {
                return Err(Error::InvalidProbabilities(format!("order label {label} repeated")));
            }
            probs[label - 1] = w;
        }
        Ok(Self { probs })
    }

    pub fn probs(&self) -> &[T; ORDERS] {
        &self.probs
    }

    /// 1-based labels with nonzero probability, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..ORDERS).filter(|&i| self.probs[i] > T::zero()).map(|i| i + 1).collect()
    }

    /// Number of superposed orders.
    pub fn m(&self) -> usize {
        self.probs.iter().filter(|p| **p > T::zero()).count()
    }

    /// Amplitude product `√(PᵢPⱼ)` (0-based indices).
    pub fn weight(&self, i: usize, j: usize) -> T {
        if i == j {
            self.probs[i]
        } else {
            (self.probs[i] * self.probs[j]).sqrt()
        }
    }
}

/// Block symbol at each position of the 6×6 switch matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockPattern {
    kinds: [[BlockKind; ORDERS]; ORDERS],
}

impl BlockPattern {
    /// Builds a symmetric pattern with `A` on the diagonal from its strict upper
    /// triangle, given row by row with 1-based labels.
    pub fn from_upper(upper: &[((usize, usize), BlockKind)]) -> Self {
        let mut kinds = [[BlockKind::A; ORDERS]; ORDERS];
        for &((i, j), kind) in upper {
            kinds[i - 1][j - 1] = kind;
            kinds[j - 1][i - 1] = kind;
        }
        Self { kinds }
    }

    /// Kind at 1-based position `(i, j)`.
    pub fn kind(&self, i: usize, j: usize) -> BlockKind {
        self.kinds[i - 1][j - 1]
    }

    pub(crate) fn kind0(&self, i: usize, j: usize) -> BlockKind {
        self.kinds[i][j]
    }

    /// Replaces the block at 1-based `(i, j)` and its mirror.
    pub fn with_kind(mut self, i: usize, j: usize, kind: BlockKind) -> Self {
        self.kinds[i - 1][j - 1] = kind;
        self.kinds[j - 1][i - 1] = kind;
        self
    }

    pub fn is_symmetric(&self) -> bool {
        (0..ORDERS).all(|i| (0..ORDERS).all(|j| self.kinds[i][j] == self.kinds[j][i]))
    }
}

/// The pattern of the three-channel switch.
pub fn canonical_pattern() -> BlockPattern {
    use BlockKind::*;
    BlockPattern::from_upper(&[
        ((1, 2), B),
        ((1, 3), B),
        ((1, 4), D),
        ((1, 5), D),
        ((1, 6), F),
        ((2, 3), D),
        ((2, 4), F),
        ((2, 5), B),
        ((2, 6), D),
        ((3, 4), B),
        ((3, 5), F),
        ((3, 6), D),
        ((4, 5), D),
        ((4, 6), B),
        ((5, 6), B),
    ])
}

pub type Matrix6<T> = [[T; ORDERS]; ORDERS];

/// Scalar 6×6 matrix of one ρ-eigenvalue branch; its eigenvalues are the
/// switch output eigenvalues `λ_{s,k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedMatrix<T> {
    pub entries: Matrix6<T>,
    pub branch: Branch,
    pub params: ChannelParams<T>,
}

impl<T: Real> ReducedMatrix<T> {
    pub fn trace(&self) -> T {
        (0..ORDERS).map(|i| self.entries[i][i]).sum()
    }

    /// Simultaneous row/column relabeling `new[i][j] = old[perm[i]][perm[j]]` (0-based).
    pub fn permuted(&self, perm: &[usize; ORDERS]) -> Self {
        let mut entries = [[T::zero(); ORDERS]; ORDERS];
        for i in 0..ORDERS {
            for j in 0..ORDERS {
                entries[i][j] = self.entries[perm[i]][perm[j]];
            }
        }
        Self { entries, ..self.clone() }
    }
}

/// Output state of the control system after tracing out the target.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlMatrix<T> {
    pub entries: Matrix6<T>,
}

impl<T: Real> ControlMatrix<T> {
    pub fn trace(&self) -> T {
        (0..ORDERS).map(|i| self.entries[i][i]).sum()
    }
}

fn block_table<T: Real>(params: &ChannelParams<T>) -> [BlockCoefficients<T>; 4] {
    BlockKind::ALL.map(|k| block_coefficients(k, params))
}

fn coeff_of<T: Copy>(table: &[BlockCoefficients<T>; 4], kind: BlockKind) -> BlockCoefficients<T> {
    table[kind as usize]
}

pub fn reduced_matrix<T: Real>(
    config: &OrderConfiguration<T>,
    params: &ChannelParams<T>,
    branch: Branch,
) -> ReducedMatrix<T> {
    reduced_matrix_with_pattern(config, params, branch, &canonical_pattern())
}

/// Reduced matrix under an arbitrary block pattern (used for negative controls).
pub fn reduced_matrix_with_pattern<T: Real>(
    config: &OrderConfiguration<T>,
    params: &ChannelParams<T>,
    branch: Branch,
    pattern: &BlockPattern,
) -> ReducedMatrix<T> {
    let table = block_table(params);
    let values = BlockKind::ALL.map(|k| eigen_branch_value(coeff_of(&table, k), branch, params.d()));
    let mut entries = [[T::zero(); ORDERS]; ORDERS];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e = config.weight(i, j) * values[pattern.kind0(i, j) as usize];
        }
    }
    ReducedMatrix { entries, branch, params: *params }
}

pub fn control_output<T: Real>(config: &OrderConfiguration<T>, params: &ChannelParams<T>) -> ControlMatrix<T> {
    control_output_with_pattern(config, params, &canonical_pattern())
}

pub fn control_output_with_pattern<T: Real>(
    config: &OrderConfiguration<T>,
    params: &ChannelParams<T>,
    pattern: &BlockPattern,
) -> ControlMatrix<T> {
    let table = block_table(params);
    let traces = BlockKind::ALL.map(|k| control_trace_value(coeff_of(&table, k)));
    let mut entries = [[T::zero(); ORDERS]; ORDERS];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e = config.weight(i, j) * traces[pattern.kind0(i, j) as usize];
        }
    }
    ControlMatrix { entries }
}
