//! Orbit span dimensions `dim span(G v)` computed two independent ways — an
//! intertwiner-rank formula over the canonical decomposition and a worklist
//! closure oracle — plus the construction of vectors attaining the extremal
//! values and the line-stabilizer index bound.
//!
//! The two routes must agree on every input; a disagreement is surfaced as a
//! first-class report field, never silently reconciled.

use thiserror::Error;

use crate::linalg::{extend_basis, norm, random_vector_in, zero_vec, SplitMix64, C64};
use crate::perm::{line_stabilizer, PermError, PermGroup};
use crate::rep::{
    hom_space, orbit_span, CanonicalDecomposition, Intertwiner, IsotypicComponent, RepError,
};

/// Parts with norm at most this fraction of the full vector count as zero
/// columns, so projection noise cannot inflate an independence rank.
const NEAR_ZERO_PART: f64 = 1e-8;

const CONSTRUCT_ATTEMPTS: usize = 5;

#[derive(Debug, Error)]
pub enum SpanError {
    #[error("vector lies outside the decomposed ambient space")]
    VectorOutsideAmbient,
    #[error("missing intertwiner for component {component}, block {block}: hom dimension {got}, expected 1")]
    MissingIntertwiner {
        component: usize,
        block: usize,
        got: usize,
    },
    #[error("extremal construction failed: {0}")]
    ConstructionFailed(String),
    #[error("closure dimension {dim} exceeds the index bound {bound}; tolerances have broken down")]
    IndexBoundViolated { dim: usize, bound: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Projections of one vector onto a component and its blocks.
#[derive(Debug, Clone)]
pub struct ComponentParts {
    pub component: usize,
    pub projection: Vec<C64>,
    pub block_parts: Vec<Vec<C64>>,
}

/// The unique splitting `v = sum_i v_i = sum_i sum_j w_ij` along a fixed
/// canonical decomposition.
#[derive(Debug, Clone)]
pub struct VectorParts {
    pub per_component: Vec<ComponentParts>,
}

pub fn component_split(
    v: &[C64],
    cd: &CanonicalDecomposition,
) -> Result<VectorParts, SpanError> {
    if v.len() != cd.ambient.ambient_dim() || !cd.ambient.contains(v) {
        return Err(SpanError::VectorOutsideAmbient);
    }
    let mut per_component = Vec::new();
    let mut reconstructed = zero_vec(v.len());
    for (idx, comp) in cd.components.iter().enumerate() {
        let projection = comp.total.project(v);
        for (r, p) in reconstructed.iter_mut().zip(&projection) {
            *r += p;
        }
        let block_parts = comp.blocks.iter().map(|b| b.basis.project(v)).collect();
        per_component.push(ComponentParts {
            component: idx,
            projection,
            block_parts,
        });
    }
    let residual: f64 = norm(
        &v.iter()
            .zip(&reconstructed)
            .map(|(a, b)| a - b)
            .collect::<Vec<_>>(),
    );
    if residual > cd.ambient.tol() * norm(v).max(1e-300) {
        return Err(SpanError::VectorOutsideAmbient);
    }
    Ok(VectorParts { per_component })
}

/// Reference intertwiners of one component: the map `psi_j` from block `j`
/// into the last block, unique up to the fixed unit-Frobenius scale. The last
/// entry is the self-map of the reference block itself.
pub fn reference_maps(
    component: &IsotypicComponent,
    generators: &[crate::perm::Permutation],
    tol: f64,
) -> Result<Vec<Intertwiner>, SpanError> {
    let reference = &component.blocks[component.multiplicity - 1].basis;
    let mut maps = Vec::with_capacity(component.multiplicity);
    for (j, block) in component.blocks.iter().enumerate() {
        let hom = hom_space(&block.basis, reference, generators, tol)?;
        if hom.len() != 1 {
            return Err(SpanError::MissingIntertwiner {
                component: component.iso_class,
                block: j,
                got: hom.len(),
            });
        }
        maps.push(hom.into_iter().next().unwrap());
    }
    Ok(maps)
}

/// All reference intertwiners of a decomposition, indexed like its
/// components.
pub fn all_reference_maps(
    cd: &CanonicalDecomposition,
    generators: &[crate::perm::Permutation],
    tol: f64,
) -> Result<Vec<Vec<Intertwiner>>, SpanError> {
    cd.components
        .iter()
        .map(|c| reference_maps(c, generators, tol))
        .collect()
}

/// The size of a maximum independent group among the parts `w_1, .., w_m`:
/// the rank of the matrix whose columns are `psi_1(w_1), .., psi_{m-1}(w_{m-1}),
/// w_m` inside the reference block. Parts below the near-zero threshold
/// contribute zero columns.
pub fn independent_group_rank(
    parts: &[Vec<C64>],
    maps: &[Intertwiner],
    tol: f64,
    full_norm: f64,
) -> usize {
    assert_eq!(parts.len(), maps.len());
    let mut basis: Vec<Vec<C64>> = Vec::new();
    let mut rank = 0;
    for (w, psi) in parts.iter().zip(maps) {
        if norm(w) <= NEAR_ZERO_PART * full_norm {
            continue;
        }
        let image = psi.apply(w);
        let ni = norm(&image);
        if ni == 0.0 {
            continue;
        }
        if extend_basis(&mut basis, &image, tol * ni.max(1.0)) {
            rank += 1;
        }
    }
    rank
}

/// Per-component slice of a span report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSpan {
    pub iso_class: usize,
    pub irrep_dim: usize,
    pub multiplicity: usize,
    pub independent_rank: usize,
}

/// The two orbit-span dimensions side by side, with the per-component ranks
/// feeding the formula and the optional line-stabilizer index bound.
#[derive(Debug, Clone)]
pub struct SpanReport {
    pub dim_closure: usize,
    pub dim_formula: usize,
    pub per_component: Vec<ComponentSpan>,
    pub index_bound: Option<usize>,
    pub agrees: bool,
}

/// Computes `dim span(G v)` by the formula `sum_i n_i * d_i` and by the
/// closure oracle, always both. When the group is enumerated the report also
/// carries `[G : G[v]]`, which must upper-bound the closure dimension.
pub fn dim_span_formula(
    v: &[C64],
    cd: &CanonicalDecomposition,
    maps: &[Vec<Intertwiner>],
    group: &PermGroup,
    tol: f64,
) -> Result<SpanReport, SpanError> {
    let parts = component_split(v, cd)?;
    let full_norm = norm(v);
    let mut per_component = Vec::new();
    let mut dim_formula = 0;
    for (comp, comp_maps) in cd.components.iter().zip(maps) {
        let cp = &parts.per_component[comp.iso_class];
        let n_i = independent_group_rank(&cp.block_parts, comp_maps, tol, full_norm);
        dim_formula += n_i * comp.irrep_dim;
        per_component.push(ComponentSpan {
            iso_class: comp.iso_class,
            irrep_dim: comp.irrep_dim,
            multiplicity: comp.multiplicity,
            independent_rank: n_i,
        });
    }
    let dim_closure = orbit_span(v, group.generators(), tol).dim();
    let index_bound = if group.is_enumerated() && full_norm > 0.0 {
        Some(line_stabilizer(group, v, tol)?.1)
    } else if group.is_enumerated() {
        Some(1)
    } else {
        None
    };
    if let Some(bound) = index_bound {
        if dim_closure > bound {
            return Err(SpanError::IndexBoundViolated {
                dim: dim_closure,
                bound,
            });
        }
    }
    Ok(SpanReport {
        dim_closure,
        dim_formula,
        per_component,
        index_bound,
        agrees: dim_closure == dim_formula,
    })
}

/// `[G : G[v]]`, the number of pairwise non-collinear vectors in the orbit.
/// Always at least `dim span(G v)`.
pub fn index_bound(v: &[C64], group: &PermGroup, tol: f64) -> Result<usize, SpanError> {
    if norm(v) == 0.0 {
        group.elements()?;
        return Ok(1);
    }
    Ok(line_stabilizer(group, v, tol)?.1)
}

/// A vector of minimal nonzero orbit span: the first basis vector of a
/// minimum-dimension irreducible block (components are sorted by irrep
/// dimension, so ties resolve to the lowest component then block index).
/// Returns the vector and its span dimension.
pub fn symmetric_vector(cd: &CanonicalDecomposition) -> (Vec<C64>, usize) {
    assert!(
        !cd.components.is_empty(),
        "cannot pick a vector from an empty decomposition"
    );
    let comp = &cd.components[0];
    let block = &comp.blocks[0];
    (block.basis.basis()[0].clone(), comp.irrep_dim)
}

/// A vector of maximal orbit span, built per component as a sum of parts
/// forming an independent group of size `min(d, m)`: each new part is drawn
/// in its block until its image under the reference intertwiner leaves the
/// span of its predecessors' images. The achieved dimension is verified by
/// the closure oracle; persistent disagreement is a tolerance breakdown.
pub fn asymmetric_vector(
    cd: &CanonicalDecomposition,
    maps: &[Vec<Intertwiner>],
    group: &PermGroup,
    seed: u64,
    tol: f64,
) -> Result<(Vec<C64>, usize), SpanError> {
    let n = cd.ambient.ambient_dim();
    let target: usize = cd
        .components
        .iter()
        .map(|c| c.irrep_dim * c.irrep_dim.min(c.multiplicity))
        .sum();
    if target == 0 {
        return Ok((zero_vec(n), 0));
    }
    let mut rng = SplitMix64::new(seed);
    'attempt: for _ in 0..CONSTRUCT_ATTEMPTS {
        let mut v = zero_vec(n);
        for (comp, comp_maps) in cd.components.iter().zip(maps) {
            let k = comp.irrep_dim.min(comp.multiplicity);
            let mut image_basis: Vec<Vec<C64>> = Vec::new();
            for (block, psi) in comp.blocks.iter().zip(comp_maps).take(k) {
                let mut placed = false;
                for _ in 0..CONSTRUCT_ATTEMPTS {
                    let w = random_vector_in(&block.basis, &mut rng);
                    let image = psi.apply(&w);
                    if extend_basis(&mut image_basis, &image, tol * norm(&image).max(1.0)) {
                        for (vi, wi) in v.iter_mut().zip(&w) {
                            *vi += wi;
                        }
                        placed = true;
                        break;
                    }
                }
                if !placed {
                    continue 'attempt;
                }
            }
        }
        let achieved = orbit_span(&v, group.generators(), tol).dim();
        if achieved == target {
            return Ok((v, achieved));
        }
    }
    Err(SpanError::ConstructionFailed(format!(
        "no vector reached the target span dimension {target} after {CONSTRUCT_ATTEMPTS} attempts"
    )))
}

/// Extremal summary for one ambient space: the minimizing and maximizing
/// vectors with their span dimensions, and the formula value
/// `sum_i min(dim V_i, d_i^2)` the maximum must equal.
#[derive(Debug, Clone)]
pub struct ExtremalEntry {
    pub symmetric: Vec<C64>,
    pub symmetric_dim: usize,
    pub asymmetric: Vec<C64>,
    pub asymmetric_dim: usize,
    pub max_value: usize,
    /// Components where the square cap `d^2 < dim V` bites.
    pub capped_components: Vec<usize>,
}

pub fn extremal_vectors(
    cd: &CanonicalDecomposition,
    maps: &[Vec<Intertwiner>],
    group: &PermGroup,
    seed: u64,
    tol: f64,
) -> Result<ExtremalEntry, SpanError> {
    let (symmetric, symmetric_dim) = symmetric_vector(cd);
    let (asymmetric, asymmetric_dim) = asymmetric_vector(cd, maps, group, seed, tol)?;
    let max_value = cd
        .components
        .iter()
        .map(|c| (c.irrep_dim * c.multiplicity).min(c.irrep_dim * c.irrep_dim))
        .sum();
    let capped_components = cd
        .components
        .iter()
        .filter(|c| c.irrep_dim < c.multiplicity)
        .map(|c| c.iso_class)
        .collect();
    debug_assert_eq!(asymmetric_dim, max_value);
    Ok(ExtremalEntry {
        symmetric,
        symmetric_dim,
        asymmetric,
        asymmetric_dim,
        max_value,
        capped_components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;
    use crate::linalg::{scale_vec, symmetric_eig, unit_vec, Subspace};
    use crate::perm::automorphism_group;
    use crate::rep::canonical_decomposition;

    const TOL: f64 = 1e-8;
    const CTOL: f64 = 1e-7;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    struct Setup {
        group: PermGroup,
        cd: CanonicalDecomposition,
        maps: Vec<Vec<Intertwiner>>,
    }

    fn setup(name: &str, k: usize) -> Setup {
        let g = builtin(name, k).unwrap();
        let group = automorphism_group(&g, 1_000_000).unwrap();
        let ambient = Subspace::full(g.vertex_count(), TOL);
        let cd = canonical_decomposition(&ambient, &group, 0, TOL, CTOL).unwrap();
        let maps = all_reference_maps(&cd, group.generators(), TOL).unwrap();
        Setup { group, cd, maps }
    }

    #[test]
    fn split_of_symmetric_path_vector() {
        let s = setup("path", 3);
        let parts = component_split(&unit_vec(3, 1), &s.cd).unwrap();
        for (comp, cp) in s.cd.components.iter().zip(&parts.per_component) {
            if comp.multiplicity == 2 {
                // e2 is symmetric: both trivial-isotype parts are nonzero
                assert!(cp.block_parts.iter().all(|w| norm(w) > 1e-6));
            } else {
                // and its sign part vanishes
                assert!(norm(&cp.projection) < 1e-10);
            }
        }
    }

    #[test]
    fn split_of_fixed_vector_concentrates_in_trivial_component() {
        let s = setup("petersen", 0);
        let ones = vec![c(1.0, 0.0); 10];
        let parts = component_split(&ones, &s.cd).unwrap();
        for (comp, cp) in s.cd.components.iter().zip(&parts.per_component) {
            if comp.irrep_dim == 1 && comp.multiplicity == 1 {
                assert!((norm(&cp.projection) - norm(&ones)).abs() < 1e-9);
            } else {
                assert!(norm(&cp.projection) < 1e-9);
            }
        }
        // an eigenspace vector splits into exactly one component
        let g = builtin("petersen", 0).unwrap();
        let a = g.adjacency_matrix();
        let spec = symmetric_eig(10, a.entries(), CTOL, TOL).unwrap();
        let mut rng = SplitMix64::new(5);
        let v = random_vector_in(&spec.pairs()[1].space, &mut rng);
        let parts = component_split(&v, &s.cd).unwrap();
        let nonzero: Vec<usize> = parts
            .per_component
            .iter()
            .filter(|cp| norm(&cp.projection) > 1e-8)
            .map(|cp| cp.component)
            .collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(s.cd.components[nonzero[0]].irrep_dim, 5);
    }

    #[test]
    fn split_rejects_outside_vector() {
        let g = builtin("petersen", 0).unwrap();
        let group = automorphism_group(&g, 1_000_000).unwrap();
        let a = g.adjacency_matrix();
        let spec = symmetric_eig(10, a.entries(), CTOL, TOL).unwrap();
        let v1 = &spec.pairs()[1].space;
        let cd = canonical_decomposition(v1, &group, 0, TOL, CTOL).unwrap();
        assert!(matches!(
            component_split(&unit_vec(10, 0), &cd),
            Err(SpanError::VectorOutsideAmbient)
        ));
    }

    #[test]
    fn rank_of_single_nonzero_part_is_one() {
        let s = setup("petersen", 0);
        // every component has multiplicity 1 here
        let mut rng = SplitMix64::new(4);
        for (comp, maps) in s.cd.components.iter().zip(&s.maps) {
            let w = random_vector_in(&comp.blocks[0].basis, &mut rng);
            assert_eq!(independent_group_rank(&[w], maps, TOL, 1.0), 1);
            assert_eq!(
                independent_group_rank(&[zero_vec(10)], maps, TOL, 1.0),
                0
            );
        }
    }

    #[test]
    fn rank_capped_by_irrep_dim_on_path() {
        let s = setup("path", 3);
        let mut rng = SplitMix64::new(8);
        let v = rng.complex_vector(3);
        let parts = component_split(&v, &s.cd).unwrap();
        for (comp, maps) in s.cd.components.iter().zip(&s.maps) {
            let cp = &parts.per_component[comp.iso_class];
            let n_i = independent_group_rank(&cp.block_parts, maps, TOL, norm(&v));
            assert!(n_i <= comp.irrep_dim.min(comp.multiplicity));
            if comp.multiplicity == 2 {
                // two scalar columns in a 1-dimensional reference block
                assert_eq!(n_i, 1);
            }
        }
    }

    #[test]
    fn span_report_petersen_random_vector() {
        let s = setup("petersen", 0);
        let mut rng = SplitMix64::new(1);
        let v = rng.complex_vector(10);
        let report = dim_span_formula(&v, &s.cd, &s.maps, &s.group, TOL).unwrap();
        assert_eq!(report.dim_closure, 10);
        assert_eq!(report.dim_formula, 10);
        assert!(report.agrees);
        assert!(report.index_bound.unwrap() >= 10);
    }

    #[test]
    fn span_report_on_eigenvectors() {
        let g = builtin("petersen", 0).unwrap();
        let group = automorphism_group(&g, 1_000_000).unwrap();
        let ambient = Subspace::full(10, TOL);
        let cd = canonical_decomposition(&ambient, &group, 0, TOL, CTOL).unwrap();
        let maps = all_reference_maps(&cd, group.generators(), TOL).unwrap();

        let a = g.adjacency_matrix();
        let spec = symmetric_eig(10, a.entries(), CTOL, TOL).unwrap();
        let mut rng = SplitMix64::new(2);
        let expected = [1usize, 5, 4];
        for (pair, &dim) in spec.pairs().iter().zip(&expected) {
            let v = random_vector_in(&pair.space, &mut rng);
            let report = dim_span_formula(&v, &cd, &maps, &group, TOL).unwrap();
            assert_eq!(report.dim_formula, dim);
            assert!(report.agrees);
        }
    }

    #[test]
    fn span_report_path_endpoint() {
        let s = setup("path", 3);
        let report = dim_span_formula(&unit_vec(3, 0), &s.cd, &s.maps, &s.group, TOL).unwrap();
        assert_eq!(report.dim_closure, 2);
        assert!(report.agrees);
    }

    #[test]
    fn zero_vector_report() {
        let s = setup("path", 3);
        let report = dim_span_formula(&zero_vec(3), &s.cd, &s.maps, &s.group, TOL).unwrap();
        assert_eq!(report.dim_closure, 0);
        assert_eq!(report.dim_formula, 0);
        assert!(report.agrees);
        assert_eq!(report.index_bound, Some(1));
    }

    #[test]
    fn scale_invariance_of_span_dims() {
        let s = setup("petersen", 0);
        let mut rng = SplitMix64::new(6);
        let v = rng.complex_vector(10);
        let base = dim_span_formula(&v, &s.cd, &s.maps, &s.group, TOL).unwrap();
        for scalar in [c(3.0, 0.0), c(0.001, 0.0), c(0.0, 2.0), c(-1.5, 0.5)] {
            let scaled = scale_vec(&v, scalar);
            let rep = dim_span_formula(&scaled, &s.cd, &s.maps, &s.group, TOL).unwrap();
            assert_eq!(rep.dim_formula, base.dim_formula);
            assert_eq!(rep.dim_closure, base.dim_closure);
        }
    }

    #[test]
    fn index_bound_examples() {
        let s = setup("petersen", 0);
        let ones = vec![c(1.0, 0.0); 10];
        assert_eq!(index_bound(&ones, &s.group, TOL).unwrap(), 1);
        assert_eq!(index_bound(&zero_vec(10), &s.group, TOL).unwrap(), 1);
        let mut rng = SplitMix64::new(3);
        let v = rng.complex_vector(10);
        let b = index_bound(&v, &s.group, TOL).unwrap();
        assert_eq!(120 % b, 0);
        assert!(b >= 10);
    }

    #[test]
    fn symmetric_vector_picks_smallest_block() {
        let s = setup("petersen", 0);
        let (v, dim) = symmetric_vector(&s.cd);
        assert_eq!(dim, 1);
        assert_eq!(orbit_span(&v, s.group.generators(), TOL).dim(), 1);

        let s3 = setup("path", 3);
        let (v, dim) = symmetric_vector(&s3.cd);
        assert_eq!(dim, 1);
        assert_eq!(orbit_span(&v, s3.group.generators(), TOL).dim(), 1);
    }

    #[test]
    fn asymmetric_vector_attains_maximum() {
        let s = setup("petersen", 0);
        let (v, dim) = asymmetric_vector(&s.cd, &s.maps, &s.group, 0, TOL).unwrap();
        assert_eq!(dim, 10);
        assert_eq!(orbit_span(&v, s.group.generators(), TOL).dim(), 10);

        // P3: min{2, 1} + min{1, 1} = 2
        let s3 = setup("path", 3);
        let (_, dim) = asymmetric_vector(&s3.cd, &s3.maps, &s3.group, 0, TOL).unwrap();
        assert_eq!(dim, 2);
    }

    #[test]
    fn asymmetric_vector_under_trivial_group() {
        let trivial = PermGroup::trivial(4);
        let ambient = Subspace::full(4, TOL);
        let cd = canonical_decomposition(&ambient, &trivial, 0, TOL, CTOL).unwrap();
        let maps = all_reference_maps(&cd, trivial.generators(), TOL).unwrap();
        let (_, dim) = asymmetric_vector(&cd, &maps, &trivial, 0, TOL).unwrap();
        assert_eq!(dim, 1);
        let entry = extremal_vectors(&cd, &maps, &trivial, 0, TOL).unwrap();
        assert_eq!(entry.max_value, 1);
        assert_eq!(entry.capped_components, vec![0]);
    }

    #[test]
    fn no_single_sum_cyclic_vector_when_multiplicity_exceeds_dim() {
        // trivial isotype of P3 has d = 1 < m = 2: a one-part-per-block sum
        // never spans the component, matching the d >= m criterion
        let s = setup("path", 3);
        let comp = s
            .cd
            .components
            .iter()
            .find(|c| c.multiplicity == 2)
            .unwrap();
        let mut rng = SplitMix64::new(21);
        for _ in 0..10 {
            let w1 = random_vector_in(&comp.blocks[0].basis, &mut rng);
            let w2 = random_vector_in(&comp.blocks[1].basis, &mut rng);
            let v: Vec<C64> = w1.iter().zip(&w2).map(|(a, b)| a + b).collect();
            let dim = orbit_span(&v, s.group.generators(), TOL).dim();
            assert!(dim < comp.irrep_dim * comp.multiplicity);
            assert_eq!(dim, 1);
        }
    }

    #[test]
    fn star_graph_component_spans_two_eigenspaces() {
        // K_{1,4}: eigenvalues 2, 0, -2; the multiplicity-2 trivial isotype
        // holds one line from each of the two 1-dimensional eigenspaces
        let g = crate::graph::Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let group = automorphism_group(&g, 1_000_000).unwrap();
        assert_eq!(group.order(), Some(24));
        let ambient = Subspace::full(5, TOL);
        let cd = crate::rep::canonical_decomposition(&ambient, &group, 0, TOL, CTOL).unwrap();
        let mut sig = cd.signature();
        sig.sort_unstable();
        assert_eq!(sig, vec![(1, 2), (3, 1)]);

        let maps = all_reference_maps(&cd, group.generators(), TOL).unwrap();
        let mut rng = SplitMix64::new(40);
        for _ in 0..10 {
            let v = rng.complex_vector(5);
            let report = dim_span_formula(&v, &cd, &maps, &group, TOL).unwrap();
            assert!(report.agrees);
            assert_eq!(report.dim_formula, 4); // 1 * min(1,2) + 3 * min(3,1)
        }

        // each adjacency eigenspace still decomposes on its own
        let a = g.adjacency_matrix();
        let spec = symmetric_eig(5, a.entries(), CTOL, TOL).unwrap();
        let dims: Vec<usize> = spec.pairs().iter().map(|p| p.space.dim()).collect();
        assert_eq!(dims, vec![1, 3, 1]);
        for pair in spec.pairs() {
            let cd = crate::rep::canonical_decomposition(&pair.space, &group, 0, TOL, CTOL).unwrap();
            assert_eq!(cd.components.len(), 1);
            let v = random_vector_in(&pair.space, &mut rng);
            assert_eq!(
                orbit_span(&v, group.generators(), TOL).dim(),
                pair.space.dim()
            );
        }
    }

    #[test]
    fn multiplicity_rich_subgroup_analysis() {
        // an order-6 subgroup of the Petersen group with orbits
        // {1}, {2,5,6}, {3,9,10}, {4,7,8}: the permutation representation
        // splits as 4 trivial lines plus 3 copies of the 2-dimensional
        // irreducible, so both d > 1 and m > 1 occur
        use crate::perm::parse_cycles;
        let g = builtin("petersen", 0).unwrap();
        let t1 = parse_cycles("(2,5,6)(3,10,9)(4,8,7)", 10).unwrap();
        let t2 = parse_cycles("(4,8)(5,6)(9,10)", 10).unwrap();
        assert!(crate::perm::is_automorphism(&g, &t1).unwrap());
        assert!(crate::perm::is_automorphism(&g, &t2).unwrap());
        let group = PermGroup::closure(vec![t1, t2], 1_000_000).unwrap();
        assert_eq!(group.order(), Some(6));

        let ambient = Subspace::full(10, TOL);
        let cd = crate::rep::canonical_decomposition(&ambient, &group, 0, TOL, CTOL).unwrap();
        let mut sig = cd.signature();
        sig.sort_unstable();
        assert_eq!(sig, vec![(1, 4), (2, 3)]);

        // the intertwiner space from one block into its component has
        // dimension equal to the multiplicity
        let maps = all_reference_maps(&cd, group.generators(), TOL).unwrap();
        for comp in &cd.components {
            let w = &comp.blocks[0].basis;
            let homs = hom_space(w, &comp.total, group.generators(), TOL).unwrap();
            assert_eq!(homs.len(), comp.multiplicity);
        }

        // generic probes: n = min(d, m) per component, both routes agree
        let mut rng = SplitMix64::new(30);
        for _ in 0..20 {
            let v = rng.complex_vector(10);
            let report = dim_span_formula(&v, &cd, &maps, &group, TOL).unwrap();
            assert!(report.agrees);
            assert_eq!(report.dim_formula, 1 + 4);
            for c in &report.per_component {
                assert_eq!(c.independent_rank, c.irrep_dim.min(c.multiplicity));
            }
        }

        // max span sum_i d_i * min(d_i, m_i) = 1 + 4, achieved and verified
        let entry = extremal_vectors(&cd, &maps, &group, 0, TOL).unwrap();
        assert_eq!(entry.max_value, 5);
        assert_eq!(entry.asymmetric_dim, 5);
        assert_eq!(entry.symmetric_dim, 1);
        // the 2-dimensional class is square-capped: d^2 = 4 < dim V = 6
        assert_eq!(entry.capped_components.len(), 2);
    }

    #[test]
    fn monotone_sandwich_on_random_probes() {
        let s = setup("petersen", 0);
        let entry = extremal_vectors(&s.cd, &s.maps, &s.group, 0, TOL).unwrap();
        let mut rng = SplitMix64::new(17);
        for _ in 0..10 {
            let v = rng.complex_vector(10);
            let dim = orbit_span(&v, s.group.generators(), TOL).dim();
            assert!(entry.symmetric_dim <= dim && dim <= entry.asymmetric_dim);
        }
    }
}
