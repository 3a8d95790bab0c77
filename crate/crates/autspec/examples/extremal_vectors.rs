//! Vectors whose orbit span is extremal: the minimum lives in a smallest
//! irreducible block, the maximum is sum_i min(dim V_i, d_i^2), attained by
//! summing an independent group of parts per component. Also analyzes a
//! cyclic subgroup, where the eigenspaces split much further.

use autspec::graph::builtin;
use autspec::linalg::{symmetric_eig, Subspace};
use autspec::perm::{automorphism_group, parse_cycles, PermGroup};
use autspec::rep::canonical_decomposition;
use autspec::span::{all_reference_maps, extremal_vectors};

fn report(label: &str, space: &Subspace, group: &PermGroup) {
    let cd = canonical_decomposition(space, group, 0, 1e-8, 1e-7).unwrap();
    let maps = all_reference_maps(&cd, group.generators(), 1e-8).unwrap();
    let entry = extremal_vectors(&cd, &maps, group, 0, 1e-8).unwrap();
    println!(
        "  {label}: dim {} | min span {} | max span {} (= formula value {})",
        space.dim(),
        entry.symmetric_dim,
        entry.asymmetric_dim,
        entry.max_value
    );
}

fn main() {
    let g = builtin("petersen", 0).unwrap();
    let aut = automorphism_group(&g, 1_000_000).unwrap();
    let a = g.adjacency_matrix();
    let spectrum = symmetric_eig(10, a.entries(), 1e-7, 1e-8).unwrap();

    println!("under the full automorphism group (order 120):");
    report("whole space", &Subspace::full(10, 1e-8), &aut);
    for pair in spectrum.pairs() {
        report(&format!("eigenspace lambda = {}", pair.value.round()), &pair.space, &aut);
    }

    // relative to the cyclic group generated by one 5-cycle rotation the
    // eigenspaces fall apart into eigenlines, so minimal spans drop to 1
    let sigma1 = parse_cycles("(1,4,2,5,3)(6,9,7,10,8)", 10).unwrap();
    let cyclic = PermGroup::closure(vec![sigma1], 1_000_000).unwrap();
    println!(
        "under the cyclic subgroup of one rotation (order {}):",
        cyclic.order().unwrap()
    );
    report("whole space", &Subspace::full(10, 1e-8), &cyclic);
    for pair in spectrum.pairs() {
        report(&format!("eigenspace lambda = {}", pair.value.round()), &pair.space, &cyclic);
    }

    println!("path on 3 vertices (multiplicity caps the maximum):");
    let p3 = builtin("path", 3).unwrap();
    let aut3 = automorphism_group(&p3, 1_000_000).unwrap();
    report("whole space", &Subspace::full(3, 1e-8), &aut3);
}
