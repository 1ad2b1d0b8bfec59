//! Output spectra of the switch: numeric diagonalization of the reduced
//! matrices, the closed-form eigenvalue catalog per equivalence class, and
//! characteristic-polynomial invariants.

use std::fmt;

use serde::Serialize;

use crate::channel::{block_coefficients, eigen_branch_value, BlockKind, Branch, ChannelParams};
use crate::error::{Error, Result};
use crate::linalg::{clamp_nonnegative, symmetric_eigenvalues};
use crate::scalar::Real;
use crate::switch::{reduced_matrix, OrderConfiguration, ReducedMatrix, ORDERS};

/// Eigenvalues below zero but above `-NEGATIVE_TOLERANCE` are clamped to zero.
pub const NEGATIVE_TOLERANCE: f64 = 1e-12;

/// Eigenvalues `λ_{s,k}` of the switch output for a pure input, per branch.
#[derive(Debug, Clone, PartialEq)]
pub struct SwitchSpectrum<T> {
    /// `λ_{s,0}`, each with multiplicity `d − 1`; descending.
    pub orthogonal: [T; ORDERS],
    /// `λ_{s,1}`; descending.
    pub aligned: [T; ORDERS],
    pub d: usize,
}

impl<T: Real> SwitchSpectrum<T> {
    pub fn branch(&self, branch: Branch) -> &[T; ORDERS] {
        match branch {
            Branch::Orthogonal => &self.orthogonal,
            Branch::Aligned => &self.aligned,
        }
    }

    /// `Σ_s (d−1)·λ_{s,0} + λ_{s,1}`; one for a trace-preserving channel.
    pub fn total_weight(&self) -> T {
        let m0 = T::from_usize_lossy(self.d - 1);
        self.orthogonal.iter().map(|l| m0 * *l).sum::<T>() + self.aligned.iter().copied().sum::<T>()
    }
}

/// Six eigenvalues of one reduced matrix, descending.
pub fn eigenvalues_numeric<T: Real>(mat: &ReducedMatrix<T>) -> Result<[T; ORDERS]> {
    symmetric_eigenvalues(&mat.entries)
}

/// Numeric spectrum for both branches, with tiny negatives clamped to zero.
pub fn switch_spectrum<T: Real>(config: &OrderConfiguration<T>, params: &ChannelParams<T>) -> Result<SwitchSpectrum<T>> {
    let mut branches = [[T::zero(); ORDERS]; 2];
    for branch in Branch::BOTH {
        let mut eig = eigenvalues_numeric(&reduced_matrix(config, params, branch))?;
        clamp_nonnegative(&mut eig, T::tol(NEGATIVE_TOLERANCE))?;
        branches[branch.k()] = eig;
    }
    Ok(SwitchSpectrum { orthogonal: branches[0], aligned: branches[1], d: params.d() })
}

/// Equivalence class label: order count `m` and the class number within it,
/// numbered as in the reference equivalence table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassId {
    pub m: usize,
    pub class: usize,
}

impl ClassId {
    pub fn new(m: usize, class: usize) -> Result<Self> {
        let count = match m {
            1 | 5 | 6 => 1,
            2..=4 => 3,
            _ => return Err(Error::InvalidOrderCount(m)),
        };
        if class == 0 || class > count {
            return Err(Error::UnknownClass { m, class });
        }
        Ok(Self { m, class })
    }

    /// All twelve classes, in `(m, class)` order.
    pub fn all() -> Vec<ClassId> {
        [(1, 1), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3), (5, 1), (6, 1)]
            .into_iter()
            .map(|(m, class)| ClassId { m, class })
            .collect()
    }

    /// Whether a closed-form spectrum is known for this class.
    pub fn has_closed_form(&self) -> bool {
        !matches!((self.m, self.class), (3, 2) | (4, 2) | (5, _))
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} class {}", self.m, self.class)
    }
}

/// Branch values `(A_k, B_k, D_k, F_k)` of the four blocks.
#[derive(Debug, Clone, Copy)]
struct BranchBlocks<T> {
    a: T,
    b: T,
    d: T,
    f: T,
}

impl<T: Real> BranchBlocks<T> {
    fn new(params: &ChannelParams<T>, branch: Branch) -> Self {
        let v = |k| eigen_branch_value(block_coefficients(k, params), branch, params.d());
        Self { a: v(BlockKind::A), b: v(BlockKind::B), d: v(BlockKind::D), f: v(BlockKind::F) }
    }
}

fn sorted_desc<T: Real>(nonzero: &[T]) -> [T; ORDERS] {
    let mut out = [T::zero(); ORDERS];
    out[..nonzero.len()].copy_from_slice(nonzero);
    out.sort_by(|x, y| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal));
    out
}

/// Closed-form eigenvalues of a class, descending, or `None` where only the
/// characteristic polynomial is known (m=3 class 2, m=4 class 2, m=5).
pub fn eigenvalues_analytic<T: Real>(
    class: ClassId,
    params: &ChannelParams<T>,
    branch: Branch,
) -> Result<Option<[T; ORDERS]>> {
    let class = ClassId::new(class.m, class.class)?;
    let BranchBlocks { a, b, d, f } = BranchBlocks::new(params, branch);
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let four = T::lit(4.0);
    let five = T::lit(5.0);
    let six = T::lit(6.0);
    let eight = T::lit(8.0);
    let values: Vec<T> = match (class.m, class.class) {
        (1, _) => vec![a],
        (2, c) => {
            let x = [b, d, f][c - 1];
            vec![(a - x) / two, (a + x) / two]
        }
        (3, 1) => {
            let r = (d * d + eight * b * b).sqrt();
            vec![(a - d) / three, (two * a + d - r) / six, (two * a + d + r) / six]
        }
        (3, 3) => vec![(a - d) / three, (a - d) / three, (a + two * d) / three],
        (4, 1) => {
            // one radical per quadratic factor of the class polynomial
            let g_minus = (four * d * d + five * b * b - eight * d * b - two * b * f + f * f).max(T::zero()).sqrt();
            let g_plus = (four * d * d + five * b * b + eight * d * b - two * b * f + f * f).max(T::zero()).sqrt();
            vec![
                (two * a - g_minus - b - f) / eight,
                (two * a + g_minus - b - f) / eight,
                (two * a - g_plus + b + f) / eight,
                (two * a + g_plus + b + f) / eight,
            ]
        }
        (4, 3) => vec![
            (a - d + b - f) / four,
            (a + d - b - f) / four,
            (a - d - b + f) / four,
            (a + d + b + f) / four,
        ],
        (6, _) => vec![
            (a - d + b - f) / six,
            (a - d + b - f) / six,
            (a + two * d - two * b - f) / six,
            (a - d - b + f) / six,
            (a - d - b + f) / six,
            (a + two * d + two * b + f) / six,
        ],
        _ => return Ok(None),
    };
    Ok(Some(sorted_desc(&values)))
}

/// The full-superposition spectrum written directly in `q` and `d`.
pub fn m6_eigenvalues_in_q<T: Real>(params: &ChannelParams<T>, branch: Branch) -> [T; ORDERS] {
    let q = params.q();
    let d = params.dim();
    let k = T::from_usize_lossy(branch.k());
    let one = T::one();
    let l = |x: f64| T::lit(x);
    let qm1 = q - one;
    let d2 = d * d;
    let d3 = d2 * d;
    let pair_a = qm1 * qm1 * (l(3.0) * q + one) * (d - k) / (l(6.0) * d2);
    let single = qm1 * qm1 * (d2 + d * k * (l(2.0) - l(3.0) * q) + l(3.0) * qm1) / (l(6.0) * d3);
    let pair_b = -(qm1 * qm1 * qm1) * (d - k) / (l(6.0) * d2);
    let top = (l(6.0) * d3 * k * q * q * q
        + d2 * (l(-10.0) * q * q * q + l(3.0) * q * q + l(6.0) * q + one)
        + d * k * (l(7.0) * q + l(2.0)) * qm1 * qm1
        - l(3.0) * qm1 * qm1 * qm1)
        / (l(6.0) * d3);
    sorted_desc(&[pair_a, pair_a, single, pair_b, pair_b, top])
}

/// The cyclic-order (m=3 class 3) spectrum written directly in `q` and `d`.
pub fn cyclic_m3_eigenvalues_in_q<T: Real>(params: &ChannelParams<T>, branch: Branch) -> [T; ORDERS] {
    let q = params.q();
    let d = params.dim();
    let k = T::from_usize_lossy(branch.k());
    let one = T::one();
    let l = |x: f64| T::lit(x);
    let qm1 = q - one;
    let d2 = d * d;
    let pair = (d - k) * qm1 * qm1 * (q + one) / (l(3.0) * d2);
    let top = (l(3.0) * d2 * k * q * q * q
        + d * (l(-5.0) * q * q * q + l(2.0) * q * q + l(2.0) * q + one)
        + l(2.0) * k * qm1 * qm1 * (q + one))
        / (l(3.0) * d2);
    sorted_desc(&[pair, pair, top])
}

/// Characteristic polynomial of a class evaluated at `λ`, transcribed in its
/// factored form (including the leading scale factor).
pub fn class_polynomial<T: Real>(class: ClassId, params: &ChannelParams<T>, branch: Branch, lambda: T) -> Result<T> {
    let class = ClassId::new(class.m, class.class)?;
    let BranchBlocks { a, b, d, f } = BranchBlocks::new(params, branch);
    let l = lambda;
    let c = |x: f64| T::lit(x);
    let value = match (class.m, class.class) {
        (1, _) => l.powi(5) * (a - l),
        (2, k) => {
            let x = [b, d, f][k - 1];
            c(0.25) * l.powi(4) * (a - c(2.0) * l - x) * (a - c(2.0) * l + x)
        }
        (3, 1) => {
            -l.powi(3) * (a - d - c(3.0) * l) * ((a - c(3.0) * l) * (a + d - c(3.0) * l) - c(2.0) * b * b) / c(27.0)
        }
        (3, 2) => {
            let s = d * d + b * b + f * f;
            l.powi(3)
                * (-a * a * a + c(9.0) * a * a * l + a * (s - c(27.0) * l * l) + c(27.0) * l * l * l
                    - c(3.0) * l * s
                    - c(2.0) * d * b * f)
                / c(27.0)
        }
        (3, 3) => {
            let t = -a + d + c(3.0) * l;
            -l.powi(3) * (a + c(2.0) * d - c(3.0) * l) * t * t / c(27.0)
        }
        (4, 1) => {
            let first = a * a + a * (c(-8.0) * l + b + f) - d * d + c(16.0) * l * l - b * b - c(2.0) * d * b
                - c(4.0) * l * (b + f)
                + b * f;
            let second = a * a - a * (c(8.0) * l + b + f) - d * d - b * b
                + b * (c(2.0) * d + c(4.0) * l + f)
                + c(4.0) * l * (c(4.0) * l + f);
            l * l * first * second / c(256.0)
        }
        (4, 2) => {
            let cubic = a * a * a + a * a * (d - c(12.0) * l)
                - a * (c(2.0) * d * d + c(8.0) * d * l - c(48.0) * l * l + c(2.0) * b * b + f * f)
                + c(16.0) * d * l * l
                - c(64.0) * l * l * l
                + c(4.0) * l * (c(2.0) * (d * d + b * b) + f * f)
                + d * f * (c(4.0) * b - f);
            l * l * (a - d - c(4.0) * l) * cubic / c(256.0)
        }
        (4, 3) => {
            l * l
                * (a - d - c(4.0) * l + b - f)
                * (a + d - c(4.0) * l - b - f)
                * (a - d - c(4.0) * l - b + f)
                * (a + d - c(4.0) * l + b + f)
                / c(256.0)
        }
        (5, _) => {
            let s = d * d + c(3.0) * b * b + c(2.0) * b * f + f * f;
            let xi = a * a * a + c(2.0) * a * a * d - a * s + c(2.0) * d * (-d * d + b * b + c(2.0) * b * f);
            let beta = c(-15.0) * a * a - c(20.0) * a * d + c(5.0) * s;
            -l * (a - d - c(5.0) * l + b - f)
                * (a - d - c(5.0) * l - b + f)
                * (xi + l * beta + l * l * (c(75.0) * a + c(50.0) * d) - c(125.0) * l * l * l)
                / c(3125.0)
        }
        (6, _) => {
            let u = -a + d + c(6.0) * l + b - f;
            let v = -a + d + c(6.0) * l - b + f;
            (a + c(2.0) * d - c(6.0) * l - c(2.0) * b - f) * (a + c(2.0) * d - c(6.0) * l + c(2.0) * b + f) * u * u * v * v
                / c(46656.0)
        }
        _ => unreachable!("ClassId::new validated the label"),
    };
    Ok(value)
}

/// Monic characteristic polynomial coefficients, highest power first:
/// `λ⁶ + c₁λ⁵ + … + c₆`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharPolyCoeffs<T> {
    pub coeffs: [T; ORDERS + 1],
}

impl<T: Real> CharPolyCoeffs<T> {
    /// Expands `Π (λ − rᵢ)`.
    pub fn from_roots(roots: &[T; ORDERS]) -> Self {
        let mut coeffs = [T::zero(); ORDERS + 1];
        coeffs[0] = T::one();
        for (n, r) in roots.iter().enumerate() {
            for i in (1..=n + 1).rev() {
                let prev = coeffs[i - 1];
                coeffs[i] -= *r * prev;
            }
        }
        Self { coeffs }
    }

    pub fn eval(&self, lambda: T) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, c| acc * lambda + *c)
    }
}

pub fn char_poly<T: Real>(mat: &ReducedMatrix<T>) -> Result<CharPolyCoeffs<T>> {
    Ok(CharPolyCoeffs::from_roots(&eigenvalues_numeric(mat)?))
}

/// A point at which a configuration's characteristic polynomial is sampled.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SamplePoint {
    pub q: f64,
    pub d: usize,
    pub k: usize,
}

/// Twelve generic points: q ∈ {0.15, 0.45, 0.85}, d ∈ {2, 3}, k ∈ {0, 1}.
/// The endpoints q ∈ {0, 1} are avoided because distinct classes coincide there.
pub fn default_sample_points() -> Vec<SamplePoint> {
    let mut pts = Vec::with_capacity(12);
    for q in [0.15, 0.45, 0.85] {
        for d in [2, 3] {
            for k in [0, 1] {
                pts.push(SamplePoint { q, d, k });
            }
        }
    }
    pts
}

/// Spectral invariant of a configuration: concatenated characteristic
/// polynomial coefficients over a fixed list of sample points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Signature {
    pub values: Vec<f64>,
}

/// Relative tolerance used when comparing signatures.
pub const SIGNATURE_TOLERANCE: f64 = 1e-9;

impl Signature {
    /// Same invariants up to eigensolver noise.
    pub fn equivalent(&self, other: &Signature) -> bool {
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| (a - b).abs() <= SIGNATURE_TOLERANCE * 1f64.max(a.abs()).max(b.abs()))
    }

    /// Display form: tiny magnitudes flushed to zero, ten significant digits.
    pub fn rounded(&self) -> Vec<f64> {
        self.values
            .iter()
            .map(|&x| if x.abs() < 1e-12 { 0.0 } else { round_significant(x, 10) })
            .collect()
    }
}

fn round_significant(x: f64, digits: i32) -> f64 {
    let exponent = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits - 1 - exponent);
    (x * scale).round() / scale
}

pub fn invariant_signature(config: &OrderConfiguration<f64>, sample_points: &[SamplePoint]) -> Result<Signature> {
    if sample_points.is_empty() {
        return Err(Error::InvalidArgument("signature needs at least one sample point".into()));
    }
    let mut values = Vec::with_capacity(sample_points.len() * (ORDERS + 1));
    for pt in sample_points {
        let params = ChannelParams::new(pt.q, pt.d)?;
        let branch = Branch::from_k(pt.k).ok_or_else(|| Error::InvalidArgument(format!("k = {} not in {{0, 1}}", pt.k)))?;
        let poly = char_poly(&reduced_matrix(config, &params, branch))?;
        values.extend_from_slice(&poly.coeffs);
    }
    Ok(Signature { values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::switch::reduced_matrix;
    use approx::assert_abs_diff_eq;

    fn params(q: f64, d: usize) -> ChannelParams<f64> {
        ChannelParams::new(q, d).unwrap()
    }

    fn eq(support: &[usize]) -> OrderConfiguration<f64> {
        OrderConfiguration::equiprobable(support).unwrap()
    }

    fn assert_multiset(a: &[f64; 6], b: &[f64; 6], tol: f64) {
        let mut x = *a;
        let mut y = *b;
        x.sort_by(f64::total_cmp);
        y.sort_by(f64::total_cmp);
        for (u, v) in x.iter().zip(&y) {
            assert!((u - v).abs() < tol, "{x:?} vs {y:?}");
        }
    }

    #[test]
    fn transparent_full_superposition() {
        let e = eigenvalues_numeric(&reduced_matrix(&eq(&[1, 2, 3, 4, 5, 6]), &params(1.0, 2), Branch::Aligned)).unwrap();
        assert_multiset(&e, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0], 1e-14);
    }

    #[test]
    fn fully_noisy_full_superposition_qubit() {
        let expected = [11.0 / 48.0, 5.0 / 48.0, 1.0 / 24.0, 1.0 / 24.0, 1.0 / 24.0, 1.0 / 24.0];
        let p = params(0.0, 2);
        let e = eigenvalues_numeric(&reduced_matrix(&eq(&[1, 2, 3, 4, 5, 6]), &p, Branch::Aligned)).unwrap();
        assert_multiset(&e, &expected, 1e-14);
        let analytic = eigenvalues_analytic(ClassId::new(6, 1).unwrap(), &p, Branch::Aligned).unwrap().unwrap();
        assert_multiset(&analytic, &expected, 1e-15);
        assert_multiset(&m6_eigenvalues_in_q(&p, Branch::Aligned), &expected, 1e-15);
    }

    #[test]
    fn definite_order_spectrum() {
        let p = params(0.35, 3);
        for branch in Branch::BOTH {
            let a = eigen_branch_value(block_coefficients(BlockKind::A, &p), branch, 3);
            let e = eigenvalues_numeric(&reduced_matrix(&eq(&[4]), &p, branch)).unwrap();
            assert_multiset(&e, &[a, 0.0, 0.0, 0.0, 0.0, 0.0], 1e-15);
        }
    }

    #[test]
    fn m2_and_m3_closed_forms() {
        let p = params(0.3, 2);
        let blocks = BranchBlocks::new(&p, Branch::Aligned);
        let e = eigenvalues_analytic(ClassId::new(2, 1).unwrap(), &p, Branch::Aligned).unwrap().unwrap();
        assert_multiset(&e, &[(blocks.a - blocks.b) / 2.0, (blocks.a + blocks.b) / 2.0, 0.0, 0.0, 0.0, 0.0], 1e-15);
        let e3 = eigenvalues_analytic(ClassId::new(3, 3).unwrap(), &p, Branch::Aligned).unwrap().unwrap();
        let (a, d) = (blocks.a, blocks.d);
        assert_multiset(&e3, &[(a - d) / 3.0, (a - d) / 3.0, (a + 2.0 * d) / 3.0, 0.0, 0.0, 0.0], 1e-15);
    }

    #[test]
    fn uncataloged_and_unknown_classes() {
        let p = params(0.3, 2);
        for (m, c) in [(3, 2), (4, 2), (5, 1)] {
            assert_eq!(eigenvalues_analytic(ClassId { m, class: c }, &p, Branch::Aligned).unwrap(), None);
        }
        assert!(matches!(
            eigenvalues_analytic(ClassId { m: 2, class: 4 }, &p, Branch::Aligned),
            Err(Error::UnknownClass { m: 2, class: 4 })
        ));
        assert!(ClassId::new(7, 1).is_err());
    }

    #[test]
    fn cyclic_closed_form_matches_numeric() {
        for i in 0..=10 {
            let p = params(i as f64 / 10.0, 3);
            for branch in Branch::BOTH {
                let e = eigenvalues_numeric(&reduced_matrix(&eq(&[1, 4, 5]), &p, branch)).unwrap();
                assert_multiset(&e, &cyclic_m3_eigenvalues_in_q(&p, branch), 1e-12);
            }
        }
    }

    #[test]
    fn char_poly_basics() {
        let zero = CharPolyCoeffs::from_roots(&[0.0; 6]);
        assert_eq!(zero.coeffs, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

        let p = params(0.6, 2);
        let mat = reduced_matrix(&eq(&[2]), &p, Branch::Aligned);
        let poly = char_poly(&mat).unwrap();
        let a = eigen_branch_value(block_coefficients(BlockKind::A, &p), Branch::Aligned, 2);
        // λ⁵(λ − A)
        assert_abs_diff_eq!(poly.coeffs[1], -a, epsilon = 1e-15);
        assert!(poly.coeffs[2..].iter().all(|c| c.abs() < 1e-15));
        assert_abs_diff_eq!(poly.coeffs[1], -mat.trace(), epsilon = 1e-15);
    }

    /// Expand the factored m = 6 polynomial by sampling it at seven abscissae and
    /// solving the Vandermonde system; compare with the numeric coefficients.
    #[test]
    fn m6_char_poly_matches_factored_form() {
        let class = ClassId::new(6, 1).unwrap();
        for (q, d, branch) in [(0.2, 2, Branch::Aligned), (0.55, 3, Branch::Orthogonal), (0.9, 4, Branch::Aligned)] {
            let p = params(q, d);
            let numeric = char_poly(&reduced_matrix(&eq(&[1, 2, 3, 4, 5, 6]), &p, branch)).unwrap();
            let xs: Vec<f64> = (0..7).map(|i| -0.3 + 0.1 * i as f64).collect();
            // leading coefficient of the factored form is 6⁶/6⁶ = 1 (monic)
            let ys: Vec<f64> = xs.iter().map(|&x| class_polynomial(class, &p, branch, x).unwrap()).collect();
            let expanded = solve_vandermonde(&xs, &ys);
            for (u, v) in expanded.iter().zip(&numeric.coeffs) {
                assert!((u - v).abs() < 1e-9, "{expanded:?} vs {:?}", numeric.coeffs);
            }
        }
    }

    fn solve_vandermonde(xs: &[f64], ys: &[f64]) -> Vec<f64> {
        let n = xs.len();
        let mut a: Vec<Vec<f64>> = xs
            .iter()
            .zip(ys)
            .map(|(&x, &y)| {
                let mut row: Vec<f64> = (0..n).map(|j| x.powi((n - 1 - j) as i32)).collect();
                row.push(y);
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
            a.swap(c, p);
            for r in 0..n {
                if r != c {
                    let f = a[r][c] / a[c][c];
                    for k in c..=n {
                        a[r][k] -= f * a[c][k];
                    }
                }
            }
        }
        (0..n).map(|i| a[i][n] / a[i][i]).collect()
    }

    #[test]
    fn signatures_separate_m2_classes() {
        let pts = default_sample_points();
        let s1 = invariant_signature(&eq(&[1, 2]), &pts).unwrap();
        let s2 = invariant_signature(&eq(&[1, 3]), &pts).unwrap();
        let s3 = invariant_signature(&eq(&[1, 4]), &pts).unwrap();
        let s5 = invariant_signature(&eq(&[1, 6]), &pts).unwrap();
        let s7 = invariant_signature(&eq(&[2, 4]), &pts).unwrap();
        assert!(s1.equivalent(&s2));
        assert!(!s1.equivalent(&s3));
        assert!(s5.equivalent(&s7));
        assert!(invariant_signature(&eq(&[1, 2]), &[]).is_err());
        assert_eq!(s1.values.len(), 12 * 7);
    }

    #[test]
    fn rounding_helper() {
        let s = Signature { values: vec![1.23456789012345, 3e-19, -0.000123456789012345] };
        assert_eq!(s.rounded(), vec![1.234567890, 0.0, -0.0001234567890]);
    }
}
