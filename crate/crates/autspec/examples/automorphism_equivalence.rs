//! Four equivalent characterizations of a graph automorphism, each checked
//! by an independent computation: they are all true or all false together.

use autspec::graph::builtin;
use autspec::rep::verify_equivalence;

fn main() {
    let g = builtin("petersen", 0).unwrap();
    for text in [
        "(1,4,2,5,3)(6,9,7,10,8)",
        "(3,7)(4,10)(8,9)",
        "(1,2)",
        "(1,2,3)(4,5,6)",
        "()",
    ] {
        let sigma = autspec::perm::parse_cycles(text, 10).unwrap();
        let rep = verify_equivalence(&g, &sigma, 1e-8, 1e-7).unwrap();
        println!("{text}");
        println!("  preserves adjacency:                 {}", rep.automorphism);
        println!("  adjacency eigenspaces invariant:     {}", rep.adjacency_eigenspaces_invariant);
        println!("  common orthonormal eigenbasis:       {}", rep.common_eigenbasis);
        println!("  permutation eigenspaces A-invariant: {}", rep.permutation_eigenspaces_invariant);
        assert!(rep.consistent(), "the four statements must agree");
    }
    println!("all quadruples consistent");
}
