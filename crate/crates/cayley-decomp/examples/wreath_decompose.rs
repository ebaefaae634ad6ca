//! Decompose a Cayley graph as a wreath (lexicographic) product.
//!
//! Cay(Z6, {1,2,4,5}) is the octahedron-like complete tripartite graph
//! K_{2,2,2}; it decomposes as K3 . E2 with a verified isomorphism.

use cayley_decomp::analysis::{cayley_graph, wreath_decompose, GroupAction, WreathOutcome};
use cayley_decomp::group::FiniteGroup;

fn main() {
    let group = FiniteGroup::cyclic(6).unwrap();
    let genset = group.validate_generator_set(&[1, 2, 4, 5]).unwrap();
    let graph = cayley_graph(&group, &genset);
    println!("Cay(Z6, {{1,2,4,5}}): {} vertices, {} edges", graph.n(), graph.edge_count());

    let action = GroupAction::left_translations(&group);
    match wreath_decompose(&graph, Some(&action)).unwrap() {
        WreathOutcome::Decomposition(d) => {
            println!("decomposes as outer . inner ({:?} case)", d.case);
            println!("  outer: {} vertices, {} edges", d.outer.n(), d.outer.edge_count());
            println!("  inner: {} vertices, {} edges", d.inner.n(), d.inner.edge_count());
            println!("  isomorphism (wreath index -> input vertex): {:?}", d.iso.as_slice());
        }
        WreathOutcome::Prime => println!("prime: no non-trivial wreath decomposition"),
        WreathOutcome::Degenerate => println!("degenerate (complete or cocomplete)"),
    }

    // a prime example for contrast
    let c5_group = FiniteGroup::cyclic(5).unwrap();
    let c5_gens = c5_group.validate_generator_set(&[1, 4]).unwrap();
    let c5 = cayley_graph(&c5_group, &c5_gens);
    let action5 = GroupAction::left_translations(&c5_group);
    match wreath_decompose(&c5, Some(&action5)).unwrap() {
        WreathOutcome::Prime => println!("Cay(Z5, {{1,4}}) = C5 is prime"),
        other => println!("unexpected: {other:?}"),
    }
}
