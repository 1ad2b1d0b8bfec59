//! Depolarizing channel model and the four block elements of the 3-switch output.
//!
//! Every block of the switch output is a linear combination `x·ρ + y·1/d`, so it
//! is stored as the coefficient pair `(x, y)` rather than as a `d × d` matrix.
//! All blocks commute and share the eigenbasis of `ρ`; spectral work therefore
//! happens per ρ-eigenvalue branch (0 or 1).

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Identical depolarizing channels `N(ρ) = qρ + (1 − q)·1/d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams<T> {
    q: T,
    d: usize,
}

impl<T: Real> ChannelParams<T> {
    pub fn new(q: T, d: usize) -> Result<Self> {
        if !(q >= T::zero() && q <= T::one()) {
            return Err(Error::InvalidStrength(q.as_f64()));
        }
        if d < 2 {
            return Err(Error::InvalidDimension(d));
        }
        Ok(Self { q, d })
    }

    pub fn q(&self) -> T {
        self.q
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The dimension as a scalar.
    pub fn dim(&self) -> T {
        T::from_usize_lossy(self.d)
    }
}

/// The four distinct block symbols of the switch matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum BlockKind {
    /// Diagonal blocks: the three channels in one definite order.
    A,
    B,
    D,
    F,
}

impl BlockKind {
    pub const ALL: [BlockKind; 4] = [BlockKind::A, BlockKind::B, BlockKind::D, BlockKind::F];

    pub fn symbol(self) -> char {
        match self {
            BlockKind::A => 'A',
            BlockKind::B => 'B',
            BlockKind::D => 'D',
            BlockKind::F => 'F',
        }
    }
}

/// A block `rho_coeff·ρ + id_coeff·1/d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockCoefficients<T> {
    pub rho_coeff: T,
    pub id_coeff: T,
}

/// Which eigenvalue of the (pure) input `ρ` a branch sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// ρ-eigenvalue 0; appears with multiplicity `d − 1`.
    Orthogonal,
    /// ρ-eigenvalue 1; appears once.
    Aligned,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Orthogonal, Branch::Aligned];

    pub fn k(self) -> usize {
        match self {
            Branch::Orthogonal => 0,
            Branch::Aligned => 1,
        }
    }

    pub fn from_k(k: usize) -> Option<Self> {
        match k {
            0 => Some(Branch::Orthogonal),
            1 => Some(Branch::Aligned),
            _ => None,
        }
    }

    /// Number of copies of this branch in the full `6d`-dimensional spectrum.
    pub fn multiplicity(self, d: usize) -> usize {
        match self {
            Branch::Orthogonal => d - 1,
            Branch::Aligned => 1,
        }
    }
}

/// Coefficient pair of one block evaluated at `(q, d)`.
pub fn block_coefficients<T: Real>(kind: BlockKind, params: &ChannelParams<T>) -> BlockCoefficients<T> {
    let q = params.q();
    let d = params.dim();
    let one = T::one();
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let d2 = d * d;
    let q2 = q * q;
    let q3 = q2 * q;
    let (rho_coeff, id_coeff) = match kind {
        BlockKind::A => (q3, one - q3),
        BlockKind::D => (
            ((d2 + one) * q3 - q2 - q + one) / d2,
            -two * q3 + q2 + q,
        ),
        BlockKind::B => (
            q * ((d2 + one) * q2 - two * q + one) / d2,
            -(q - one) * ((d2 + one) * q2 + two * (d2 - one) * q + one) / d2,
        ),
        BlockKind::F => {
            let p = one - q;
            (
                (d2 * q3 + three * p * p * q) / d2,
                (p * p * p + three * d2 * p * q2) / d2,
            )
        }
    };
    BlockCoefficients { rho_coeff, id_coeff }
}

/// Scalar contributed by a block on the ρ-eigenvector of the given branch.
pub fn eigen_branch_value<T: Real>(coeffs: BlockCoefficients<T>, branch: Branch, d: usize) -> T {
    let k = T::from_usize_lossy(branch.k());
    coeffs.rho_coeff * k + coeffs.id_coeff / T::from_usize_lossy(d)
}

/// Trace of the block over the target (`Tr ρ = Tr 1/d = 1`).
pub fn control_trace_value<T: Real>(coeffs: BlockCoefficients<T>) -> T {
    coeffs.rho_coeff + coeffs.id_coeff
}
