//! Cyclic Jacobi eigenvalue solver for small dense real symmetric matrices.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Off-diagonal convergence threshold, relative to the Frobenius norm.
pub const JACOBI_TOLERANCE: f64 = 1e-14;
pub const JACOBI_MAX_SWEEPS: usize = 64;

/// Eigenvalues of a symmetric `N × N` matrix, sorted descending.
///
/// Only the upper triangle is read. Each sweep annihilates every off-diagonal
/// pair once with a plane rotation; iteration stops when the largest remaining
/// off-diagonal magnitude drops below `JACOBI_TOLERANCE · ‖A‖_F`.
pub fn symmetric_eigenvalues<T: Real, const N: usize>(matrix: &[[T; N]; N]) -> Result<[T; N]> {
    let mut a = *matrix;
    for i in 0..N {
        for j in 0..i {
            a[i][j] = a[j][i];
        }
    }
    let norm = a.iter().flatten().map(|x| *x * *x).sum::<T>().sqrt();
    if norm == T::zero() {
        return Ok([T::zero(); N]);
    }
    let threshold = T::tol(JACOBI_TOLERANCE) * norm;
    let half = T::lit(0.5);

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off = (0..N)
            .flat_map(|p| (p + 1..N).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q].abs())
            .fold(T::zero(), T::max);
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..N {
            for q in p + 1..N {
                let apq = a[p][q];
                if apq == T::zero() {
                    continue;
                }
                // rotation angle from tan(2θ) = 2 a_pq / (a_qq − a_pp)
                let theta = half * (a[q][q] - a[p][p]) / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for r in 0..N {
                    let arp = a[r][p];
                    let arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for r in 0..N {
                    let apr = a[p][r];
                    let aqr = a[q][r];
                    a[p][r] = c * apr - s * aqr;
                    a[q][r] = s * apr + c * aqr;
                }
                a[p][q] = T::zero();
                a[q][p] = T::zero();
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: JACOBI_MAX_SWEEPS });
    }
    let mut eig = [T::zero(); N];
    for (i, e) in eig.iter_mut().enumerate() {
        *e = a[i][i];
    }
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal));
    Ok(eig)
}

/// Replaces values in `[-tolerance, 0)` with zero; anything more negative is an error.
pub fn clamp_nonnegative<T: Real>(values: &mut [T], tolerance: T) -> Result<()> {
    for v in values.iter_mut() {
        if *v < T::zero() {
            if *v < -tolerance {
                return Err(Error::NegativeEigenvalue { value: v.as_f64() });
            }
            *v = T::zero();
        }
    }
    Ok(())
}
