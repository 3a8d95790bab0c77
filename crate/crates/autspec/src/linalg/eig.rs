//! Eigendecompositions.
//!
//! The base solver is cyclic Jacobi on a real symmetric matrix: unconditional
//! convergence and near machine-precision orthogonality, entirely adequate at
//! a few hundred dimensions. Complex Hermitian problems are reduced to it by
//! the standard 2n real embedding, and normal (in practice unitary) matrices
//! are split into commuting Hermitian real/imaginary parts that are
//! diagonalized jointly.

use super::{
    inner, norm, orthonormalize, scale_vec, sub_vec, CMatrix, LinalgError, Subspace, C64,
};

const MAX_SWEEPS: usize = 100;

/// Eigenvalue clusters paired with orthonormal eigenspace bases.
pub type Clustered<T> = Vec<(T, Vec<Vec<C64>>)>;

/// One eigenvalue cluster of a real symmetric matrix together with an
/// orthonormal basis of its eigenspace.
#[derive(Debug, Clone)]
pub struct Eigenpair {
    pub value: f64,
    pub space: Subspace,
}

/// Clustered eigendecomposition, eigenvalues strictly decreasing.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pairs: Vec<Eigenpair>,
    cluster_tol: f64,
}

impl Spectrum {
    pub fn pairs(&self) -> &[Eigenpair] {
        &self.pairs
    }

    pub fn cluster_tol(&self) -> f64 {
        self.cluster_tol
    }

    pub fn total_dim(&self) -> usize {
        self.pairs.iter().map(|p| p.space.dim()).sum()
    }

    /// Eigenpair whose value is closest to `lambda`, if within `atol`.
    pub fn find(&self, lambda: f64, atol: f64) -> Option<&Eigenpair> {
        self.pairs
            .iter()
            .min_by(|a, b| {
                (a.value - lambda)
                    .abs()
                    .partial_cmp(&(b.value - lambda).abs())
                    .unwrap()
            })
            .filter(|p| (p.value - lambda).abs() <= atol)
    }
}

/// Cyclic Jacobi. Returns eigenvalues (unsorted) and the orthogonal matrix V
/// (row-major, column j is the j-th eigenvector).
fn jacobi(n: usize, a: &mut [f64]) -> Result<(Vec<f64>, Vec<f64>), LinalgError> {
    assert_eq!(a.len(), n * n);
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    if n <= 1 {
        return Ok(((0..n).map(|i| a[i * n + i]).collect(), v));
    }
    let frob = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if frob == 0.0 {
        return Ok((vec![0.0; n], v));
    }
    // entries below the rotation noise floor are snapped to zero, otherwise
    // the sweep keeps reintroducing noise of exactly that size
    let snap = f64::EPSILON * frob;
    let stop = n as f64 * f64::EPSILON * frob;

    let off_norm = |a: &[f64]| {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        (2.0 * off).sqrt()
    };

    let mut prev_off = f64::INFINITY;
    for _sweep in 0..MAX_SWEEPS {
        let off = off_norm(a);
        if off <= stop {
            let vals = (0..n).map(|i| a[i * n + i]).collect();
            return Ok((vals, v));
        }
        if off >= 0.999 * prev_off {
            // the cyclic order can cycle on matrices with a near-zero
            // diagonal (rotation angles pinned at pi/4); classical
            // largest-pivot selection decreases off monotonically and
            // cannot cycle
            break;
        }
        prev_off = off;
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                if apq.abs() <= snap {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                rotate(n, a, &mut v, p, q);
            }
        }
    }

    // classical Jacobi fallback
    let max_rotations = 40 * n * n;
    for _ in 0..max_rotations {
        let mut p = 0;
        let mut q = 1;
        let mut best = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                if a[i * n + j].abs() > best {
                    best = a[i * n + j].abs();
                    p = i;
                    q = j;
                }
            }
        }
        if off_norm(a) <= stop || best <= snap {
            let vals = (0..n).map(|i| a[i * n + i]).collect();
            return Ok((vals, v));
        }
        rotate(n, a, &mut v, p, q);
    }
    Err(LinalgError::NoConvergence)
}

/// One Jacobi rotation annihilating `a[p][q]`, accumulated into `v`.
fn rotate(n: usize, a: &mut [f64], v: &mut [f64], p: usize, q: usize) {
    let apq = a[p * n + q];
    let theta = 0.5 * (a[q * n + q] - a[p * n + p]) / apq;
    let t = if theta.abs() > 1e150 {
        // avoid overflow in theta^2; limit of the closed form
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // A <- J^t A J on rows/columns p and q
    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
    }
    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}

/// Clustered eigendecomposition of a real symmetric matrix (row-major).
///
/// Raw eigenvalues within `cluster_tol * max(1, ||A||_F)` of each other are
/// merged into a single eigenspace. Each returned basis vector `q` satisfies
/// `||A q - lambda q|| <= 1e-10 * ||A||_F`; failing that bound reports
/// `NoConvergence` rather than returning a low-quality decomposition.
/// `tol` is the membership tolerance stored on the eigenspace subspaces.
pub fn symmetric_eig(
    n: usize,
    entries: &[f64],
    cluster_tol: f64,
    tol: f64,
) -> Result<Spectrum, LinalgError> {
    assert_eq!(entries.len(), n * n, "matrix must be n x n");
    assert!(cluster_tol > 0.0, "cluster tolerance must be positive");
    for i in 0..n {
        for j in (i + 1)..n {
            assert!(
                (entries[i * n + j] - entries[j * n + i]).abs() <= 1e-12,
                "input matrix is not symmetric"
            );
        }
    }
    let mut a = entries.to_vec();
    let (vals, vecs) = jacobi(n, &mut a)?;
    let frob = entries.iter().map(|x| x * x).sum::<f64>().sqrt();
    let scale = frob.max(1.0);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap());

    let mut pairs: Vec<Eigenpair> = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (vals[order[end - 1]] - vals[order[end]]).abs() <= cluster_tol * scale {
            end += 1;
        }
        let members = &order[start..end];
        // the +0.0 folds a negative zero into plain zero
        let value = members.iter().map(|&k| vals[k]).sum::<f64>() / members.len() as f64 + 0.0;
        let basis: Vec<Vec<C64>> = members
            .iter()
            .map(|&k| (0..n).map(|i| C64::new(vecs[i * n + k], 0.0)).collect())
            .collect();
        pairs.push(Eigenpair {
            value,
            space: Subspace::from_orthonormal(n, basis, tol),
        });
        start = end;
    }

    // residual quality gate
    let bound = 1e-10 * frob;
    for p in &pairs {
        for q in p.space.basis() {
            let aq: Vec<C64> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| C64::new(entries[i * n + j], 0.0) * q[j])
                        .sum()
                })
                .collect();
            let r = sub_vec(&aq, &scale_vec(q, C64::new(p.value, 0.0)));
            if norm(&r) > bound.max(1e-14) {
                return Err(LinalgError::NoConvergence);
            }
        }
    }

    Ok(Spectrum { pairs, cluster_tol })
}

/// Clustered eigendecomposition of a complex Hermitian matrix via the 2n real
/// symmetric embedding `[[X, -Y], [Y, X]]`. Each real eigenvalue cluster of
/// dimension 2k collapses to a k-dimensional complex eigenspace.
pub fn hermitian_eig(m: &CMatrix, cluster_tol: f64) -> Result<Clustered<f64>, LinalgError> {
    hermitian_eig_scaled(m, cluster_tol, m.frobenius_norm().max(1.0))
}

/// [`hermitian_eig`] with the cluster threshold anchored at an explicit
/// scale. Needed when `m` is a restriction of a larger operator: eigenvalue
/// gaps must be judged against the parent's scale, or a noise-floor
/// restriction gets split into meaningless clusters.
pub fn hermitian_eig_scaled(
    m: &CMatrix,
    cluster_tol: f64,
    scale: f64,
) -> Result<Clustered<f64>, LinalgError> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "hermitian_eig needs a square matrix");
    if n == 0 {
        return Ok(Vec::new());
    }
    if m.frobenius_norm() <= cluster_tol * scale {
        // entirely below the cluster threshold: one cluster at the mean
        // eigenvalue, any orthonormal basis serves
        let mean = (0..n).map(|i| m.get(i, i).re).sum::<f64>() / n as f64 + 0.0;
        let basis = (0..n).map(|i| super::unit_vec(n, i)).collect();
        return Ok(vec![(mean, basis)]);
    }
    let nn = 2 * n;
    let mut z = vec![0.0f64; nn * nn];
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j);
            z[i * nn + j] = e.re;
            z[(n + i) * nn + (n + j)] = e.re;
            z[i * nn + (n + j)] = -e.im;
            z[(n + i) * nn + j] = e.im;
        }
    }
    let (vals, vecs) = jacobi(nn, &mut z)?;

    let mut order: Vec<usize> = (0..nn).collect();
    order.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap());

    let mut out = Vec::new();
    let mut start = 0;
    while start < nn {
        let mut end = start + 1;
        while end < nn && (vals[order[end - 1]] - vals[order[end]]).abs() <= cluster_tol * scale {
            end += 1;
        }
        let members = &order[start..end];
        debug_assert!(members.len().is_multiple_of(2), "embedded eigenvalues come in pairs");
        let value = members.iter().map(|&k| vals[k]).sum::<f64>() / members.len() as f64;
        let images: Vec<Vec<C64>> = members
            .iter()
            .map(|&k| {
                (0..n)
                    .map(|i| C64::new(vecs[i * nn + k], vecs[(n + i) * nn + k]))
                    .collect()
            })
            .collect();
        // The images span the complex eigenspace with each direction doubled;
        // Gram-Schmidt keeps exactly half of them.
        let basis = orthonormalize(&images, n, 1e-8);
        debug_assert_eq!(basis.dim() * 2, members.len());
        out.push((value, basis.basis().to_vec()));
        start = end;
    }
    Ok(out)
}

/// Eigendecomposition of a normal matrix (unitary in every use here) by
/// jointly diagonalizing its commuting Hermitian parts `(M + M*)/2` and
/// `(M - M*)/2i`. Returns `(eigenvalue, orthonormal eigenspace basis)` pairs.
pub fn normal_eig(m: &CMatrix, cluster_tol: f64) -> Result<Clustered<C64>, LinalgError> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "normal_eig needs a square matrix");
    let adj = m.adjoint();
    let h1 = m.add(&adj).scale(C64::new(0.5, 0.0));
    let h2 = m.sub(&adj).scale(C64::new(0.0, -0.5));
    // both Hermitian parts are judged against the scale of m itself
    let scale = m.frobenius_norm().max(1.0);

    let mut out = Vec::new();
    for (mu, q) in hermitian_eig_scaled(&h1, cluster_tol, scale)? {
        if q.len() == 1 {
            let nu = inner(&h2.mul_vec(&q[0]), &q[0]).re;
            out.push((C64::new(mu, nu), vec![q[0].clone()]));
            continue;
        }
        // restrict the imaginary part to the real-part eigenspace
        let k = q.len();
        let mut b = CMatrix::zeros(k, k);
        for (j, qj) in q.iter().enumerate() {
            let h2qj = h2.mul_vec(qj);
            for (i, qi) in q.iter().enumerate() {
                b.set(i, j, inner(&h2qj, qi));
            }
        }
        for (nu, ys) in hermitian_eig_scaled(&b, cluster_tol, scale)? {
            let lifted: Vec<Vec<C64>> = ys
                .iter()
                .map(|y| {
                    let mut x = vec![C64::new(0.0, 0.0); n];
                    for (j, qj) in q.iter().enumerate() {
                        for i in 0..n {
                            x[i] += y[j] * qj[i];
                        }
                    }
                    x
                })
                .collect();
            out.push((C64::new(mu, nu), lifted));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SplitMix64;

    fn dense_sym(n: usize, seed: u64) -> Vec<f64> {
        let mut rng = SplitMix64::new(seed);
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = rng.next_signed();
                a[i * n + j] = x;
                a[j * n + i] = x;
            }
        }
        a
    }

    #[test]
    fn complete_graph_spectrum() {
        // K3 adjacency: J - I, eigenvalues 2 and -1 (double)
        let a = vec![0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0];
        let s = symmetric_eig(3, &a, 1e-7, 1e-8).unwrap();
        assert_eq!(s.pairs().len(), 2);
        assert!((s.pairs()[0].value - 2.0).abs() < 1e-12);
        assert_eq!(s.pairs()[0].space.dim(), 1);
        assert!((s.pairs()[1].value + 1.0).abs() < 1e-12);
        assert_eq!(s.pairs()[1].space.dim(), 2);
        assert_eq!(s.total_dim(), 3);
    }

    #[test]
    fn cycle4_spectrum() {
        // C4 eigenvalues 2cos(2 pi k / 4): 2, 0, 0, -2
        #[rustfmt::skip]
        let a = vec![
            0.0, 1.0, 0.0, 1.0,
            1.0, 0.0, 1.0, 0.0,
            0.0, 1.0, 0.0, 1.0,
            1.0, 0.0, 1.0, 0.0,
        ];
        let s = symmetric_eig(4, &a, 1e-7, 1e-8).unwrap();
        let dims: Vec<(i64, usize)> = s
            .pairs()
            .iter()
            .map(|p| (p.value.round() as i64, p.space.dim()))
            .collect();
        assert_eq!(dims, vec![(2, 1), (0, 2), (-2, 1)]);
    }

    #[test]
    fn random_sym_reconstruction_n64() {
        let n = 64;
        let a = dense_sym(n, 5);
        let frob = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        let s = symmetric_eig(n, &a, 1e-7, 1e-8).unwrap();
        assert_eq!(s.total_dim(), n);
        // orthonormality across all eigenvectors within 1e-10
        let all: Vec<&Vec<C64>> = s.pairs().iter().flat_map(|p| p.space.basis()).collect();
        for (i, u) in all.iter().enumerate() {
            for (j, v) in all.iter().enumerate() {
                let g = inner(u, v);
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((g - C64::new(expect, 0.0)).norm() < 1e-10);
            }
        }
        // reconstruction residual per eigenvector implies ||A - Q L Q*|| small
        for p in s.pairs() {
            for q in p.space.basis() {
                let aq: Vec<C64> = (0..n)
                    .map(|i| (0..n).map(|j| C64::new(a[i * n + j], 0.0) * q[j]).sum())
                    .collect();
                let r = sub_vec(&aq, &scale_vec(q, C64::new(p.value, 0.0)));
                assert!(norm(&r) <= 1e-9 * frob);
            }
        }
    }

    #[test]
    fn distinct_eigenspaces_orthogonal() {
        let n = 12;
        let a = dense_sym(n, 9);
        let s = symmetric_eig(n, &a, 1e-7, 1e-8).unwrap();
        for (i, p) in s.pairs().iter().enumerate() {
            for q in s.pairs().iter().skip(i + 1) {
                for u in p.space.basis() {
                    for v in q.space.basis() {
                        assert!(inner(u, v).norm() < 1e-8);
                    }
                }
            }
        }
    }

    #[test]
    fn find_matches_nearest_value() {
        let a = vec![0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0];
        let s = symmetric_eig(3, &a, 1e-7, 1e-8).unwrap();
        assert!(s.find(2.0, 1e-6).is_some());
        assert!(s.find(-1.0, 1e-6).is_some());
        assert!(s.find(0.5, 1e-6).is_none());
    }

    #[test]
    fn hermitian_pauli_y() {
        // [[0, -i], [i, 0]] has eigenvalues +1, -1
        let mut m = CMatrix::zeros(2, 2);
        m.set(0, 1, C64::new(0.0, -1.0));
        m.set(1, 0, C64::new(0.0, 1.0));
        let eig = hermitian_eig(&m, 1e-7).unwrap();
        assert_eq!(eig.len(), 2);
        assert!((eig[0].0 - 1.0).abs() < 1e-12);
        assert!((eig[1].0 + 1.0).abs() < 1e-12);
        for (val, basis) in &eig {
            assert_eq!(basis.len(), 1);
            let x = &basis[0];
            let r = sub_vec(&m.mul_vec(x), &scale_vec(x, C64::new(*val, 0.0)));
            assert!(norm(&r) < 1e-12);
        }
    }

    #[test]
    fn hermitian_random_reconstruction() {
        let m = crate::linalg::random_hermitian(6, 2);
        let eig = hermitian_eig(&m, 1e-7).unwrap();
        let total: usize = eig.iter().map(|(_, b)| b.len()).sum();
        assert_eq!(total, 6);
        for (val, basis) in &eig {
            for x in basis {
                let r = sub_vec(&m.mul_vec(x), &scale_vec(x, C64::new(*val, 0.0)));
                assert!(norm(&r) < 1e-10, "residual {}", norm(&r));
            }
        }
    }

    #[test]
    fn normal_eig_of_cyclic_shift() {
        // 4-cycle permutation matrix: eigenvalues are the 4th roots of unity
        let mut p = CMatrix::zeros(4, 4);
        for i in 0..4 {
            p.set((i + 1) % 4, i, C64::new(1.0, 0.0));
        }
        let eig = normal_eig(&p, 1e-7).unwrap();
        let total: usize = eig.iter().map(|(_, b)| b.len()).sum();
        assert_eq!(total, 4);
        for (val, basis) in &eig {
            assert!((val.norm() - 1.0).abs() < 1e-10);
            for x in basis {
                let r = sub_vec(&p.mul_vec(x), &scale_vec(x, *val));
                assert!(norm(&r) < 1e-10);
            }
        }
        let mut found: Vec<(i64, i64)> = eig
            .iter()
            .map(|(v, _)| ((v.re * 2.0).round() as i64, (v.im * 2.0).round() as i64))
            .collect();
        found.sort_unstable();
        assert_eq!(found, vec![(-2, 0), (0, -2), (0, 2), (2, 0)]);
    }
}
