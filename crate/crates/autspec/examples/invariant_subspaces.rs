//! Invariant-subspace machinery on its own: membership-based invariance
//! tests, the power-iteration witness for non-invariance, and the
//! group-averaged projection onto a block.

use autspec::graph::builtin;
use autspec::linalg::{orthonormalize, symmetric_eig, unit_vec, C64};
use autspec::perm::{automorphism_group, parse_cycles};
use autspec::rep::{averaged_projection, is_invariant, non_invariance_witness};

fn main() {
    let c = |re: f64| C64::new(re, 0.0);

    // the endpoint swap of the 3-path
    let swap = parse_cycles("(1,3)", 3).unwrap();
    let line_e1 = orthonormalize(&[unit_vec(3, 0)], 3, 1e-8);
    let line_sym = orthonormalize(&[vec![c(1.0), c(0.0), c(1.0)]], 3, 1e-8);
    println!(
        "span(e_1) invariant under the endpoint swap: {}",
        is_invariant(&line_e1, std::slice::from_ref(&swap)).unwrap()
    );
    println!(
        "span(e_1 + e_3) invariant under the endpoint swap: {}",
        is_invariant(&line_sym, std::slice::from_ref(&swap)).unwrap()
    );

    // the witness: the smallest power of the operator that leaves the
    // subspace, or None when it is invariant
    let k = non_invariance_witness(&line_e1, &swap.matrix(), &unit_vec(3, 0)).unwrap();
    println!("escape power for e_1 under the swap operator: {k:?}");
    let k = non_invariance_witness(&line_sym, &swap.matrix(), &line_sym.basis()[0].clone()).unwrap();
    println!("escape power for the symmetric line: {k:?}");

    // averaging a projection over the whole group makes it commute with
    // every group element; for an invariant block it reproduces the plain
    // orthogonal projector
    let g = builtin("petersen", 0).unwrap();
    let aut = automorphism_group(&g, 1_000_000).unwrap();
    let a = g.adjacency_matrix();
    let spectrum = symmetric_eig(10, a.entries(), 1e-7, 1e-8).unwrap();
    let v1 = &spectrum.pairs()[1].space;
    let p = averaged_projection(v1, &aut).unwrap();
    let idem = p.mul(&p).sub(&p).frobenius_norm();
    let trace: C64 = (0..10).map(|i| p.get(i, i)).sum();
    println!("averaged projector onto the 5-dimensional eigenspace:");
    println!("  ||P^2 - P||_F = {idem:.2e}");
    println!("  trace = {:.6} (the block dimension)", trace.re);
    for gen in aut.generators() {
        let pm = gen.matrix();
        let comm = pm.mul(&p).sub(&p.mul(&pm)).frobenius_norm();
        println!("  ||[P, rho({})]||_F = {comm:.2e}", gen.to_cycles());
    }
}
