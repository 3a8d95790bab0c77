//! The permutation representation of a group of vertex permutations:
//! invariance tests, the four-way automorphism/eigenspace equivalence,
//! non-invariance witnesses, orbit spans, averaged projections, intertwiner
//! spaces, and the decomposition into irreducible and isotypic components.

use std::slice;

use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{
    hermitian_eig, inner, norm, normal_eig, random_hermitian_from, scale_vec, sub_vec,
    symmetric_eig, zero_vec, CMatrix, LinalgError, SplitMix64, Subspace, C64,
};
use crate::perm::{is_automorphism, PermError, PermGroup, Permutation};

#[derive(Debug, Error)]
pub enum RepError {
    #[error("dimension mismatch: ambient {ambient}, got {got}")]
    DimensionMismatch { ambient: usize, got: usize },
    #[error("vector does not lie in the given subspace")]
    VectorNotInSubspace,
    #[error("subspace is not invariant under the given permutations")]
    NotInvariant,
    #[error("input block failed the irreducibility certificate")]
    NotIrreducible,
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Matrix of the restriction of a permutation operator to a subspace, in the
/// subspace's orthonormal basis: `R[i][j] = <sigma b_j, b_i>`. Unitary when
/// the subspace is invariant.
pub fn restriction_matrix(
    basis: &[Vec<C64>],
    sigma: &Permutation,
) -> Result<CMatrix, PermError> {
    let d = basis.len();
    let mut r = CMatrix::zeros(d, d);
    for (j, b) in basis.iter().enumerate() {
        let sb = sigma.act(b)?;
        for (i, bi) in basis.iter().enumerate() {
            r.set(i, j, inner(&sb, bi));
        }
    }
    Ok(r)
}

/// True when `sigma b` stays inside the subspace for every basis vector and
/// every supplied permutation. For a group, the generators suffice.
pub fn is_invariant(u: &Subspace, perms: &[Permutation]) -> Result<bool, RepError> {
    for sigma in perms {
        if sigma.degree() != u.ambient_dim() {
            return Err(RepError::DimensionMismatch {
                ambient: u.ambient_dim(),
                got: sigma.degree(),
            });
        }
        for b in u.basis() {
            if !u.contains(&sigma.act(b)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For `v` in `u` and a diagonalizable operator `t`, the smallest power
/// `k <= dim u` with `t^k v` outside `u`, or `None` when every power stays
/// inside. Iterates are renormalized so operator growth cannot swamp the
/// membership test.
pub fn non_invariance_witness(
    u: &Subspace,
    t: &CMatrix,
    v: &[C64],
) -> Result<Option<usize>, RepError> {
    assert_eq!(t.rows(), t.cols(), "operator must be square");
    if v.len() != u.ambient_dim() || t.rows() != u.ambient_dim() {
        return Err(RepError::DimensionMismatch {
            ambient: u.ambient_dim(),
            got: v.len().max(t.rows()),
        });
    }
    if !u.contains(v) {
        return Err(RepError::VectorNotInSubspace);
    }
    let t_scale = t.frobenius_norm().max(1.0);
    let mut w = v.to_vec();
    for k in 1..=u.dim() {
        w = t.mul_vec(&w);
        let nw = norm(&w);
        if nw <= u.tol() * t_scale {
            // the power collapsed to numerical zero, which stays inside
            return Ok(None);
        }
        w = scale_vec(&w, C64::new(1.0 / nw, 0.0));
        if !u.contains(&w) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// The four equivalent statements checked independently for one permutation:
/// adjacency preservation, invariance of every adjacency eigenspace, the
/// existence of a common orthonormal eigenbasis, and invariance of every
/// permutation eigenspace under the adjacency operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub automorphism: bool,
    pub adjacency_eigenspaces_invariant: bool,
    pub common_eigenbasis: bool,
    pub permutation_eigenspaces_invariant: bool,
}

impl EquivalenceReport {
    pub fn flags(&self) -> [bool; 4] {
        [
            self.automorphism,
            self.adjacency_eigenspaces_invariant,
            self.common_eigenbasis,
            self.permutation_eigenspaces_invariant,
        ]
    }

    /// The four statements are equivalent, so any mixed outcome is an
    /// internal defect.
    pub fn consistent(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&b| b == f[0])
    }

    pub fn all_true(&self) -> bool {
        self.flags().iter().all(|&b| b)
    }
}

/// Checks the four statements separately. The common eigenbasis is built
/// constructively: the permutation operator restricted to each adjacency
/// eigenspace is normal, so it diagonalizes there whenever the restriction is
/// well defined.
pub fn verify_equivalence(
    g: &Graph,
    sigma: &Permutation,
    tol: f64,
    cluster_tol: f64,
) -> Result<EquivalenceReport, RepError> {
    let n = g.vertex_count();
    if sigma.degree() != n {
        return Err(RepError::DimensionMismatch {
            ambient: n,
            got: sigma.degree(),
        });
    }
    let a = g.adjacency_matrix();
    let spectrum = symmetric_eig(n, a.entries(), cluster_tol, tol)?;
    let am = CMatrix::from_real(n, n, a.entries())?;
    let a_scale = a.frobenius_norm().max(1.0);

    let s1 = is_automorphism(g, sigma)?;

    let s2 = spectrum
        .pairs()
        .iter()
        .map(|p| is_invariant(&p.space, slice::from_ref(sigma)))
        .collect::<Result<Vec<bool>, RepError>>()?
        .into_iter()
        .all(|b| b);

    let s3 = if !s2 {
        false
    } else {
        let mut ok = true;
        'outer: for pair in spectrum.pairs() {
            let r = restriction_matrix(pair.space.basis(), sigma)?;
            for (eta, ys) in normal_eig(&r, cluster_tol)? {
                for y in ys {
                    let mut x = zero_vec(n);
                    for (c, b) in y.iter().zip(pair.space.basis()) {
                        for i in 0..n {
                            x[i] += c * b[i];
                        }
                    }
                    let px = sigma.act(&x)?;
                    let perm_residual = norm(&sub_vec(&px, &scale_vec(&x, eta)));
                    let ax = am.mul_vec(&x);
                    let adj_residual =
                        norm(&sub_vec(&ax, &scale_vec(&x, C64::new(pair.value, 0.0))));
                    if perm_residual > tol || adj_residual > tol * a_scale {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        ok
    };

    let s4 = {
        let mut ok = true;
        'outer: for (_eta, basis) in normal_eig(&sigma.matrix(), cluster_tol)? {
            let u = Subspace::from_orthonormal(n, basis, tol);
            for b in u.basis() {
                // invariance residual judged against the operator scale: A b
                // can be numerically zero without being exactly zero
                let ab = am.mul_vec(b);
                let residual = norm(&sub_vec(&ab, &u.project(&ab)));
                if residual > tol * a_scale {
                    ok = false;
                    break 'outer;
                }
            }
        }
        ok
    };

    Ok(EquivalenceReport {
        automorphism: s1,
        adjacency_eigenspaces_invariant: s2,
        common_eigenbasis: s3,
        permutation_eigenspaces_invariant: s4,
    })
}

/// The least subspace containing `v` that is closed under every supplied
/// permutation: worklist closure that applies generators to the current basis
/// and adjoins anything that increases the rank.
pub fn orbit_span(v: &[C64], generators: &[Permutation], tol: f64) -> Subspace {
    let ambient = v.len();
    for g in generators {
        assert_eq!(g.degree(), ambient, "generator degree mismatch");
    }
    let nv = norm(v);
    if nv == 0.0 {
        return Subspace::zero(ambient, tol);
    }
    let mut basis: Vec<Vec<C64>> = vec![scale_vec(v, C64::new(1.0 / nv, 0.0))];
    let mut next = 0usize;
    while next < basis.len() {
        let current = basis[next].clone();
        for g in generators {
            let w = g.act(&current).expect("degree checked above");
            crate::linalg::extend_basis(&mut basis, &w, tol);
        }
        next += 1;
    }
    Subspace::from_orthonormal(ambient, basis, tol)
}

/// Group-averaged projection `(1/|G|) sum_sigma rho(sigma) p rho(sigma)^{-1}`
/// where `p` projects onto the block. The average is idempotent and commutes
/// with the whole representation.
pub fn averaged_projection(block: &Subspace, group: &PermGroup) -> Result<CMatrix, RepError> {
    let elements = group.elements()?;
    let n = block.ambient_dim();
    if group.degree() != n {
        return Err(RepError::DimensionMismatch {
            ambient: n,
            got: group.degree(),
        });
    }
    let mut p = CMatrix::zeros(n, n);
    for b in block.basis() {
        for i in 0..n {
            for j in 0..n {
                let v = p.get(i, j) + b[i] * b[j].conj();
                p.set(i, j, v);
            }
        }
    }
    let mut avg = CMatrix::zeros(n, n);
    for sigma in elements {
        for i in 0..n {
            let si = sigma.apply(i);
            for j in 0..n {
                let v = avg.get(si, sigma.apply(j)) + p.get(i, j);
                avg.set(si, sigma.apply(j), v);
            }
        }
    }
    Ok(avg.scale(C64::new(1.0 / elements.len() as f64, 0.0)))
}

/// A linear map between two invariant subspaces commuting with the group
/// action, stored as a matrix in the block bases and normalized to unit
/// Frobenius norm.
#[derive(Debug, Clone)]
pub struct Intertwiner {
    pub source: Subspace,
    pub target: Subspace,
    pub matrix: CMatrix,
}

impl Intertwiner {
    /// Applies the map to an ambient vector lying in the source block.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        let coords: Vec<C64> = self.source.basis().iter().map(|b| inner(v, b)).collect();
        let mapped = self.matrix.mul_vec(&coords);
        let mut out = zero_vec(self.target.ambient_dim());
        for (c, b) in mapped.iter().zip(self.target.basis()) {
            for i in 0..out.len() {
                out[i] += c * b[i];
            }
        }
        out
    }
}

/// Basis of all intertwiners from `w1` to `w2`: solutions `X` of the stacked
/// commutation system `X R1(sigma) - R2(sigma) X = 0` over the generators,
/// obtained as a matrix nullspace. Between non-isomorphic irreducibles this
/// is empty; between isomorphic ones it is a single map up to scale.
pub fn hom_space(
    w1: &Subspace,
    w2: &Subspace,
    generators: &[Permutation],
    tol: f64,
) -> Result<Vec<Intertwiner>, RepError> {
    if !is_invariant(w1, generators)? || !is_invariant(w2, generators)? {
        return Err(RepError::NotInvariant);
    }
    let d1 = w1.dim();
    let d2 = w2.dim();
    if d1 == 0 || d2 == 0 {
        return Ok(Vec::new());
    }
    // vec(X) stacks columns: X[r][c] sits at index c*d2 + r
    let mut m = CMatrix::zeros(generators.len() * d1 * d2, d1 * d2);
    for (k, sigma) in generators.iter().enumerate() {
        let r1 = restriction_matrix(w1.basis(), sigma)?;
        let r2 = restriction_matrix(w2.basis(), sigma)?;
        for cp in 0..d1 {
            for rp in 0..d2 {
                let row = k * d1 * d2 + cp * d2 + rp;
                for c in 0..d1 {
                    // (X R1)[rp][cp] term
                    let v = m.get(row, c * d2 + rp) + r1.get(c, cp);
                    m.set(row, c * d2 + rp, v);
                }
                for r in 0..d2 {
                    // -(R2 X)[rp][cp] term
                    let v = m.get(row, cp * d2 + r) - r2.get(rp, r);
                    m.set(row, cp * d2 + r, v);
                }
            }
        }
    }
    // a fully satisfiable system leaves M as pure rounding noise, so the
    // threshold is anchored at the O(1) scale of the unitary restrictions
    let null = crate::linalg::nullspace_scaled(&m, tol, m.frobenius_norm().max(1.0));
    let mut out = Vec::new();
    for vecx in null.basis() {
        let mut x = CMatrix::zeros(d2, d1);
        for c in 0..d1 {
            for r in 0..d2 {
                x.set(r, c, vecx[c * d2 + r]);
            }
        }
        // fix the scale ambiguity: unit Frobenius norm with the dominant
        // entry rotated onto the positive real axis
        let fro = x.frobenius_norm();
        let mut dominant = C64::new(0.0, 0.0);
        for c in 0..d1 {
            for r in 0..d2 {
                if x.get(r, c).norm() > dominant.norm() {
                    dominant = x.get(r, c);
                }
            }
        }
        let phase = dominant / C64::new(dominant.norm(), 0.0);
        let x = x.scale(phase.conj() / C64::new(fro, 0.0));
        out.push(Intertwiner {
            source: w1.clone(),
            target: w2.clone(),
            matrix: x,
        });
    }
    Ok(out)
}

/// Schur test: two irreducible blocks are isomorphic exactly when their
/// intertwiner space is one-dimensional. Rejects inputs whose self-hom space
/// is not one-dimensional, since that means they were not irreducible.
pub fn are_isomorphic(
    w1: &Subspace,
    w2: &Subspace,
    generators: &[Permutation],
    tol: f64,
) -> Result<bool, RepError> {
    if hom_space(w1, w1, generators, tol)?.len() != 1
        || hom_space(w2, w2, generators, tol)?.len() != 1
    {
        return Err(RepError::NotIrreducible);
    }
    match hom_space(w1, w2, generators, tol)?.len() {
        0 => Ok(false),
        1 => Ok(true),
        _ => Err(RepError::NotIrreducible),
    }
}

const DECOMPOSE_ATTEMPTS: usize = 5;

/// Splits an invariant subspace into irreducible blocks by commutant
/// sampling: averaging a random Hermitian operator over the group yields an
/// operator commuting with the action, whose eigenspaces are invariant.
/// Recurses until every piece certifies `dim Hom(W, W) = 1`, retrying a
/// degenerate sample with a fresh draw a bounded number of times.
pub fn decompose_irreducibles(
    u: &Subspace,
    group: &PermGroup,
    seed: u64,
    tol: f64,
    cluster_tol: f64,
) -> Result<Vec<Subspace>, RepError> {
    if !is_invariant(u, group.generators())? {
        return Err(RepError::NotInvariant);
    }
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::new();
    split_recursive(u, group, &mut rng, tol, cluster_tol, &mut out)?;
    Ok(out)
}

fn split_recursive(
    u: &Subspace,
    group: &PermGroup,
    rng: &mut SplitMix64,
    tol: f64,
    cluster_tol: f64,
    out: &mut Vec<Subspace>,
) -> Result<(), RepError> {
    let d = u.dim();
    if d == 0 {
        return Ok(());
    }
    if d == 1 {
        out.push(u.clone());
        return Ok(());
    }
    let elements = group.elements()?;
    let restrictions: Vec<CMatrix> = elements
        .iter()
        .map(|sigma| restriction_matrix(u.basis(), sigma))
        .collect::<Result<_, _>>()?;

    for _attempt in 0..DECOMPOSE_ATTEMPTS {
        let h = random_hermitian_from(rng, d);
        let mut t = CMatrix::zeros(d, d);
        for r in &restrictions {
            t = t.add(&r.mul(&h).mul(&r.adjoint()));
        }
        let t = t.scale(C64::new(1.0 / elements.len() as f64, 0.0));

        let eig = hermitian_eig(&t, cluster_tol)?;
        if eig.len() == 1 {
            // commutant sample acts as a scalar; either u is irreducible or
            // the draw was degenerate
            if hom_space(u, u, group.generators(), tol)?.len() == 1 {
                out.push(u.clone());
                return Ok(());
            }
            continue;
        }
        for (_val, ys) in eig {
            let lifted: Vec<Vec<C64>> = ys
                .iter()
                .map(|y| {
                    let mut x = zero_vec(u.ambient_dim());
                    for (c, b) in y.iter().zip(u.basis()) {
                        for i in 0..x.len() {
                            x[i] += c * b[i];
                        }
                    }
                    x
                })
                .collect();
            let piece = Subspace::from_orthonormal(u.ambient_dim(), lifted, tol);
            split_recursive(&piece, group, rng, tol, cluster_tol, out)?;
        }
        return Ok(());
    }
    Err(RepError::DecompositionFailed(format!(
        "no irreducible split of a {d}-dimensional invariant subspace after {DECOMPOSE_ATTEMPTS} samples"
    )))
}

/// One irreducible block with its isomorphism-class id.
#[derive(Debug, Clone)]
pub struct IrreducibleBlock {
    pub basis: Subspace,
    pub iso_class: usize,
}

impl IrreducibleBlock {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// All blocks of one isomorphism class: the isotypic component
/// `V_i = W_{i1} + ... + W_{im}` with irrep dimension `d` and multiplicity
/// `m`. The component subspace is unique even when the blocks are not.
#[derive(Debug, Clone)]
pub struct IsotypicComponent {
    pub iso_class: usize,
    pub irrep_dim: usize,
    pub multiplicity: usize,
    pub blocks: Vec<IrreducibleBlock>,
    pub total: Subspace,
}

/// Canonical decomposition of an invariant ambient space, components sorted
/// by (irrep dimension, discovery order of the first block).
#[derive(Debug, Clone)]
pub struct CanonicalDecomposition {
    pub ambient: Subspace,
    pub components: Vec<IsotypicComponent>,
}

impl CanonicalDecomposition {
    pub fn signature(&self) -> Vec<(usize, usize)> {
        self.components
            .iter()
            .map(|c| (c.irrep_dim, c.multiplicity))
            .collect()
    }
}

pub fn canonical_decomposition(
    ambient: &Subspace,
    group: &PermGroup,
    seed: u64,
    tol: f64,
    cluster_tol: f64,
) -> Result<CanonicalDecomposition, RepError> {
    let blocks = decompose_irreducibles(ambient, group, seed, tol, cluster_tol)?;
    let gens = group.generators();

    // classify against the first-found representative of each class
    let mut class_members: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    'blocks: for (i, b) in blocks.iter().enumerate() {
        for (k, &r) in reps.iter().enumerate() {
            if b.dim() == blocks[r].dim() && are_isomorphic(b, &blocks[r], gens, tol)? {
                class_members[k].push(i);
                continue 'blocks;
            }
        }
        reps.push(i);
        class_members.push(vec![i]);
    }

    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by_key(|&k| (blocks[reps[k]].dim(), class_members[k][0]));

    let mut components = Vec::new();
    for (iso_class, &k) in order.iter().enumerate() {
        let members = &class_members[k];
        let irrep_dim = blocks[reps[k]].dim();
        let mut total_basis = Vec::new();
        let mut comp_blocks = Vec::new();
        for &i in members {
            total_basis.extend(blocks[i].basis().to_vec());
            comp_blocks.push(IrreducibleBlock {
                basis: blocks[i].clone(),
                iso_class,
            });
        }
        components.push(IsotypicComponent {
            iso_class,
            irrep_dim,
            multiplicity: members.len(),
            blocks: comp_blocks,
            total: Subspace::from_orthonormal(ambient.ambient_dim(), total_basis, tol),
        });
    }

    let cd = CanonicalDecomposition {
        ambient: ambient.clone(),
        components,
    };
    let covered: usize = cd
        .components
        .iter()
        .map(|c| c.irrep_dim * c.multiplicity)
        .sum();
    if covered != ambient.dim() {
        return Err(RepError::DecompositionFailed(format!(
            "components cover dimension {covered} of an ambient of dimension {}",
            ambient.dim()
        )));
    }
    Ok(cd)
}

/// Whether two decompositions agree on the component signature and on the
/// component subspaces themselves, up to `angle_tol` on the sine of the
/// largest principal angle. Blocks inside a component are not compared; only
/// the components are unique.
pub fn decompositions_agree(
    a: &CanonicalDecomposition,
    b: &CanonicalDecomposition,
    angle_tol: f64,
) -> bool {
    if a.ambient.ambient_dim() != b.ambient.ambient_dim() {
        return false;
    }
    if a.signature().len() != b.signature().len() {
        return false;
    }
    let mut used = vec![false; b.components.len()];
    for ca in &a.components {
        let mut matched = false;
        for (j, cb) in b.components.iter().enumerate() {
            if used[j]
                || ca.irrep_dim != cb.irrep_dim
                || ca.multiplicity != cb.multiplicity
            {
                continue;
            }
            let fwd = ca.total.max_residual(&cb.total);
            let bwd = cb.total.max_residual(&ca.total);
            if fwd.max(bwd) <= angle_tol {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return false;
        }
    }
    true
}
