//! Enumerate the automorphism group of the Petersen graph, factor its order
//! through an orbit-stabilizer chain, and rebuild it from two generators.

use autspec::graph::builtin;
use autspec::perm::{automorphism_group, default_base, orbit_stabilizer_chain, parse_cycles, PermGroup};

fn main() {
    let g = builtin("petersen", 0).unwrap();
    let aut = automorphism_group(&g, 1_000_000).unwrap();
    println!(
        "Petersen graph: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    println!("|Aut| = {}", aut.order().unwrap());
    println!("extracted generators:");
    for gen in aut.generators() {
        println!("  {}", gen.to_cycles());
    }

    let base = default_base(&aut).unwrap();
    let chain = orbit_stabilizer_chain(&aut, &base).unwrap();
    let factors: Vec<String> = chain
        .factors
        .iter()
        .map(|f| format!("{}", f.orbit_len))
        .collect();
    println!(
        "orbit-stabilizer along base {:?}: {} (x {} in the final stabilizer) = {}",
        base.iter().map(|b| b + 1).collect::<Vec<_>>(),
        factors.join(" x "),
        chain.final_order,
        chain.order
    );

    // the same group arises as the closure of one 5-cycle rotation and one
    // involution
    let s1 = parse_cycles("(1,4,2,5,3)(6,9,7,10,8)", 10).unwrap();
    let s2 = parse_cycles("(3,7)(4,10)(8,9)", 10).unwrap();
    let closed = PermGroup::closure(vec![s1, s2], 1_000_000).unwrap();
    println!(
        "closure of the two published generators: order {}",
        closed.order().unwrap()
    );
    assert_eq!(closed.elements().unwrap(), aut.elements().unwrap());
    println!("identical element sets: yes");
}
