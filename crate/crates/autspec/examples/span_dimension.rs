//! dim span(G v) computed two independent ways: the per-component
//! intertwiner-rank formula and the orbit closure oracle. The two must agree
//! on every vector.

use autspec::graph::builtin;
use autspec::linalg::{random_vector_in, symmetric_eig, unit_vec, SplitMix64, Subspace, C64};
use autspec::perm::automorphism_group;
use autspec::rep::canonical_decomposition;
use autspec::span::{all_reference_maps, dim_span_formula};

fn main() {
    let g = builtin("petersen", 0).unwrap();
    let aut = automorphism_group(&g, 1_000_000).unwrap();
    let ambient = Subspace::full(10, 1e-8);
    let cd = canonical_decomposition(&ambient, &aut, 0, 1e-8, 1e-7).unwrap();
    let maps = all_reference_maps(&cd, aut.generators(), 1e-8).unwrap();

    let a = g.adjacency_matrix();
    let spectrum = symmetric_eig(10, a.entries(), 1e-7, 1e-8).unwrap();
    let mut rng = SplitMix64::new(0);

    let mut probes: Vec<(String, Vec<C64>)> = vec![
        ("all-ones (fixed by the group)".into(), vec![C64::new(1.0, 0.0); 10]),
        ("standard basis vector e_1".into(), unit_vec(10, 0)),
        ("random".into(), rng.complex_vector(10)),
    ];
    for pair in spectrum.pairs() {
        probes.push((
            format!("random vector of the lambda = {} eigenspace", pair.value.round()),
            random_vector_in(&pair.space, &mut rng),
        ));
    }

    println!("Petersen, |Aut| = 120:");
    for (label, v) in probes {
        let report = dim_span_formula(&v, &cd, &maps, &aut, 1e-8).unwrap();
        let ranks: Vec<String> = report
            .per_component
            .iter()
            .map(|c| format!("n_{} = {}", c.iso_class, c.independent_rank))
            .collect();
        println!(
            "  {label}: formula {} | closure {} | agree {} | index bound {:?} | {}",
            report.dim_formula,
            report.dim_closure,
            report.agrees,
            report.index_bound,
            ranks.join(", ")
        );
    }
}
