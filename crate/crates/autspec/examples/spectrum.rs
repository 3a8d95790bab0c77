//! Clustered eigendecomposition of adjacency matrices.

use autspec::graph::builtin;
use autspec::linalg::symmetric_eig;

fn main() {
    for (label, name, k) in [
        ("Petersen", "petersen", 0),
        ("4-cycle", "cycle", 4),
        ("triangle", "complete", 3),
    ] {
        let g = builtin(name, k).unwrap();
        let a = g.adjacency_matrix();
        let spectrum = symmetric_eig(g.vertex_count(), a.entries(), 1e-7, 1e-8).unwrap();
        println!("{label}:");
        for pair in spectrum.pairs() {
            println!(
                "  lambda = {:>9.6}   multiplicity {}",
                pair.value,
                pair.space.dim()
            );
        }
    }
}
