//! Decompose the permutation representation into irreducible blocks and
//! isotypic components, and check that independent random seeds agree on the
//! component subspaces.

use autspec::graph::builtin;
use autspec::linalg::{symmetric_eig, Subspace};
use autspec::perm::automorphism_group;
use autspec::rep::{canonical_decomposition, decompositions_agree};

fn main() {
    for (label, name, k) in [("Petersen", "petersen", 0), ("path on 3 vertices", "path", 3)] {
        let g = builtin(name, k).unwrap();
        let n = g.vertex_count();
        let aut = automorphism_group(&g, 1_000_000).unwrap();
        let ambient = Subspace::full(n, 1e-8);
        let cd = canonical_decomposition(&ambient, &aut, 0, 1e-8, 1e-7).unwrap();

        println!("{label}: |Aut| = {}", aut.order().unwrap());
        println!("  whole space C^{n}:");
        for comp in &cd.components {
            println!(
                "    class {}: irrep dimension {} with multiplicity {}",
                comp.iso_class, comp.irrep_dim, comp.multiplicity
            );
        }

        let a = g.adjacency_matrix();
        let spectrum = symmetric_eig(n, a.entries(), 1e-7, 1e-8).unwrap();
        for pair in spectrum.pairs() {
            let cd = canonical_decomposition(&pair.space, &aut, 0, 1e-8, 1e-7).unwrap();
            let parts: Vec<String> = cd
                .components
                .iter()
                .map(|c| format!("{}x{}", c.irrep_dim, c.multiplicity))
                .collect();
            println!(
                "  eigenspace lambda = {:>9.6}: components (d x m) {}",
                pair.value,
                parts.join(", ")
            );
        }

        let again = canonical_decomposition(&ambient, &aut, 1, 1e-8, 1e-7).unwrap();
        println!(
            "  seed 0 vs seed 1 component agreement: {}",
            decompositions_agree(&cd, &again, 1e-7)
        );
    }
}
