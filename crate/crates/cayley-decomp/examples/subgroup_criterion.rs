//! The subgroup criterion: Cay(G,S) has a non-trivial homogeneous set
//! exactly when some non-trivial proper subgroup H satisfies Hc ⊆ S for
//! every c in S outside H.

use cayley_decomp::analysis::{cayley_graph, subgroup_criterion};
use cayley_decomp::group::FiniteGroup;
use cayley_decomp::oracle::brute_force_homogeneous_sets;

fn demo(n: usize, s: &[usize]) {
    let group = FiniteGroup::cyclic(n).unwrap();
    let genset = group.validate_generator_set(s).unwrap();
    let witness = subgroup_criterion(&group, &genset).unwrap();
    let graph = cayley_graph(&group, &genset);
    let oracle = brute_force_homogeneous_sets(&graph).unwrap();
    match witness {
        Some(h) => println!(
            "Cay(Z{n}, {s:?}): witness subgroup {:?}; oracle sets {:?}",
            h.members(),
            oracle
                .all_homogeneous_sets
                .iter()
                .map(|x| x.members().to_vec())
                .collect::<Vec<_>>()
        ),
        None => println!(
            "Cay(Z{n}, {s:?}): no witness subgroup; oracle confirms prime = {}",
            oracle.is_prime
        ),
    }
}

fn main() {
    demo(4, &[1, 3]); // C4: H = {0,2}
    demo(6, &[1, 5]); // C6: prime
    demo(6, &[1, 2, 4, 5]); // K_{2,2,2}: H = {0,3}
    demo(8, &[1, 3, 5, 7]); // K_{4,4}: H = {0,2,4,6} or {0,4}
}
