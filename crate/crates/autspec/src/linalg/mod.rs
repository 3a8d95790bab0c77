//! Self-contained dense complex linear algebra: symmetric eigendecomposition,
//! toleranced rank via re-orthogonalized Gram-Schmidt, orthonormal subspaces,
//! and nullspaces.
//!
//! Everything is dense and double-precision; the intended scale is a few
//! hundred dimensions at most. All tolerances are relative to a natural scale
//! (Frobenius norm of the matrix, max norm of the input vectors) and are
//! threaded in as parameters rather than baked in.

mod eig;

pub use eig::{hermitian_eig, hermitian_eig_scaled, normal_eig, symmetric_eig, Eigenpair, Spectrum};

use num_complex::Complex64;
use thiserror::Error;

/// Double-precision complex scalar used throughout the crate.
pub type C64 = Complex64;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("jacobi sweep cap exceeded without convergence")]
    NoConvergence,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("non-finite entry at position {0}")]
    NonFinite(usize),
}

/// Deterministic 64-bit generator (SplitMix64, the mixer from Steele, Lea &
/// Flood's "Fast splittable pseudorandom number generators").
///
/// Every randomized decision in the crate draws from one of these, seeded
/// explicitly, so a run reproduces bit-for-bit given the same seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [-1, 1).
    pub fn next_signed(&mut self) -> f64 {
        2.0 * self.next_f64() - 1.0
    }

    pub fn next_complex(&mut self) -> C64 {
        C64::new(self.next_signed(), self.next_signed())
    }

    /// Random complex vector with entries uniform in the unit square.
    pub fn complex_vector(&mut self, n: usize) -> Vec<C64> {
        (0..n).map(|_| self.next_complex()).collect()
    }

    /// Uniform index in [0, bound).
    pub fn next_index(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    /// Builds from a closure over (row, col). Rejects non-finite entries.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> C64,
    ) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        if let Some(pos) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(LinalgError::NonFinite(pos));
        }
        Ok(CMatrix { rows, cols, data })
    }

    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        CMatrix::from_fn(rows, cols, |i, j| C64::new(entries[i * cols + j], 0.0))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn adjoint(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .sum::<C64>()
            })
            .collect()
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: C64) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Hermitian inner product `<u, v> = sum_i u_i * conj(v_i)`.
pub fn inner(u: &[C64], v: &[C64]) -> C64 {
    debug_assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a * b.conj()).sum()
}

pub fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn scale_vec(v: &[C64], s: C64) -> Vec<C64> {
    v.iter().map(|z| z * s).collect()
}

pub fn add_vec(u: &[C64], v: &[C64]) -> Vec<C64> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub_vec(u: &[C64], v: &[C64]) -> Vec<C64> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn zero_vec(n: usize) -> Vec<C64> {
    vec![C64::new(0.0, 0.0); n]
}

/// Standard basis vector `e_i` in dimension `n`.
pub fn unit_vec(n: usize, i: usize) -> Vec<C64> {
    let mut v = zero_vec(n);
    v[i] = C64::new(1.0, 0.0);
    v
}

/// A subspace of `C^n` held as an orthonormal basis together with the rank
/// tolerance used when it was constructed.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<C64>>,
    tol: f64,
}

impl Subspace {
    pub fn zero(ambient: usize, tol: f64) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            tol,
        }
    }

    /// The whole ambient space, with the standard basis.
    pub fn full(ambient: usize, tol: f64) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
            tol,
        }
    }

    /// Wraps a basis that is already orthonormal. Debug builds verify this.
    pub fn from_orthonormal(ambient: usize, basis: Vec<Vec<C64>>, tol: f64) -> Self {
        #[cfg(debug_assertions)]
        {
            for (i, u) in basis.iter().enumerate() {
                assert_eq!(u.len(), ambient);
                for (j, v) in basis.iter().enumerate() {
                    let g = inner(u, v);
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (g - C64::new(expect, 0.0)).norm() < 1e-7,
                        "basis not orthonormal: <b{i}, b{j}> = {g}"
                    );
                }
            }
        }
        Subspace {
            ambient,
            basis,
            tol,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn basis(&self) -> &[Vec<C64>] {
        &self.basis
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut out = zero_vec(self.ambient);
        for b in &self.basis {
            let c = inner(v, b);
            for i in 0..self.ambient {
                out[i] += c * b[i];
            }
        }
        out
    }

    /// Membership test: `||v - proj(v)|| <= tol * ||v||`. The zero vector is
    /// contained in every subspace.
    pub fn contains(&self, v: &[C64]) -> bool {
        let nv = norm(v);
        if nv == 0.0 {
            return true;
        }
        let r = sub_vec(v, &self.project(v));
        norm(&r) <= self.tol * nv
    }

    /// True when every basis vector of `other` lies in `self`.
    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Largest residual of the other subspace's basis against this one;
    /// this is the sine of the largest principal angle when dims agree.
    pub fn max_residual(&self, other: &Subspace) -> f64 {
        other
            .basis
            .iter()
            .map(|b| norm(&sub_vec(b, &self.project(b))))
            .fold(0.0, f64::max)
    }
}

/// Modified Gram-Schmidt with one re-orthogonalization pass. Vectors whose
/// residual after projection is at most `tol` times the largest input norm
/// are dropped; the span of the survivors equals the span of the input.
pub fn orthonormalize(vectors: &[Vec<C64>], ambient: usize, tol: f64) -> Subspace {
    let max_norm = vectors.iter().map(|v| norm(v)).fold(0.0, f64::max);
    let mut basis: Vec<Vec<C64>> = Vec::new();
    if max_norm == 0.0 {
        return Subspace {
            ambient,
            basis,
            tol,
        };
    }
    for v in vectors {
        assert_eq!(v.len(), ambient, "ambient dimension mismatch");
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = inner(&w, b);
                for i in 0..ambient {
                    w[i] -= c * b[i];
                }
            }
        }
        let nw = norm(&w);
        if nw > tol * max_norm {
            let inv = C64::new(1.0 / nw, 0.0);
            basis.push(scale_vec(&w, inv));
        }
    }
    Subspace {
        ambient,
        basis,
        tol,
    }
}

/// Grows an orthonormal basis in place. Returns true when `v` added a new
/// direction (residual above `tol`, which is absolute here: callers feed
/// unit-norm candidates).
pub fn extend_basis(basis: &mut Vec<Vec<C64>>, v: &[C64], tol: f64) -> bool {
    let mut w = v.to_vec();
    for _ in 0..2 {
        for b in basis.iter() {
            let c = inner(&w, b);
            for i in 0..w.len() {
                w[i] -= c * b[i];
            }
        }
    }
    let nw = norm(&w);
    if nw > tol {
        let inv = C64::new(1.0 / nw, 0.0);
        basis.push(scale_vec(&w, inv));
        true
    } else {
        false
    }
}

/// Orthonormal basis of `{x : ||Mx|| <= tol * ||M||_F * ||x||}`.
///
/// The kernel is computed as the orthogonal complement of the conjugated row
/// space: `(Mx)_i = <x, conj(row_i)>`, so `x` annihilates `M` exactly when it
/// is orthogonal to every conjugated row. Rows that Gram-Schmidt drops as
/// dependent contribute at most `tol * ||M||_F` residual, which is the
/// advertised bound.
pub fn nullspace(m: &CMatrix, tol: f64) -> Subspace {
    nullspace_scaled(m, tol, m.frobenius_norm())
}

/// [`nullspace`] against an explicit scale: kernel of
/// `{x : ||Mx|| <= tol * scale * ||x||}`. Needed when `M` itself may consist
/// entirely of rounding noise (a fully satisfiable constraint system), where
/// self-scaling by `||M||_F` would mistake the noise for signal.
pub fn nullspace_scaled(m: &CMatrix, tol: f64, scale: f64) -> Subspace {
    let n = m.cols();
    let eps = tol * scale;
    let mut basis: Vec<Vec<C64>> = Vec::new();
    for i in 0..m.rows() {
        let row: Vec<C64> = m.row(i).iter().map(|z| z.conj()).collect();
        extend_basis(&mut basis, &row, eps);
    }
    let rank = basis.len();
    let mut null_basis = Vec::new();
    for i in 0..n {
        if extend_basis(&mut basis, &unit_vec(n, i), eps.min(0.5)) {
            null_basis.push(basis.last().unwrap().clone());
        }
        if basis.len() == n {
            break;
        }
    }
    debug_assert_eq!(null_basis.len(), n - rank);
    Subspace {
        ambient: n,
        basis: null_basis,
        tol,
    }
}

/// Exactly Hermitian random matrix, built as `(B + B*) / 2` from a matrix of
/// uniform entries. Deterministic per seed.
pub fn random_hermitian(n: usize, seed: u64) -> CMatrix {
    random_hermitian_from(&mut SplitMix64::new(seed), n)
}

/// Random unit vector inside a subspace: random complex coordinates against
/// the stored basis, normalized.
pub fn random_vector_in(space: &Subspace, rng: &mut SplitMix64) -> Vec<C64> {
    assert!(space.dim() > 0, "cannot sample from the zero subspace");
    loop {
        let coords = rng.complex_vector(space.dim());
        let mut v = zero_vec(space.ambient_dim());
        for (c, b) in coords.iter().zip(space.basis()) {
            for i in 0..v.len() {
                v[i] += c * b[i];
            }
        }
        let nv = norm(&v);
        if nv > 1e-6 {
            return scale_vec(&v, C64::new(1.0 / nv, 0.0));
        }
    }
}

/// Same as [`random_hermitian`] but drawing from an existing generator.
pub fn random_hermitian_from(rng: &mut SplitMix64, n: usize) -> CMatrix {
    let b = CMatrix::from_fn(n, n, |_, _| rng.next_complex()).expect("finite by construction");
    let mut h = CMatrix::zeros(n, n);
    for i in 0..n {
        h.set(i, i, C64::new(b.get(i, i).re, 0.0));
        for j in (i + 1)..n {
            let v = (b.get(i, j) + b.get(j, i).conj()) * C64::new(0.5, 0.0);
            h.set(i, j, v);
            h.set(j, i, v.conj());
        }
    }
    h
}
