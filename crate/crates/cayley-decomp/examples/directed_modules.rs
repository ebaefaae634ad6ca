//! Directed Cayley graphs, bihomogeneous sets, and the double-coset
//! criterion HgH ⊆ S.

use cayley_decomp::analysis::{cayley_digraph, double_coset_criterion};
use cayley_decomp::group::FiniteGroup;
use cayley_decomp::oracle::brute_force_bihomogeneous_sets;

fn demo(n: usize, s: &[usize]) {
    let group = FiniteGroup::cyclic(n).unwrap();
    match double_coset_criterion(&group, s) {
        Ok(witness) => {
            let digraph = cayley_digraph(&group, s).unwrap();
            let oracle = brute_force_bihomogeneous_sets(&digraph).unwrap();
            println!(
                "Cay(Z{n}, {s:?}) directed: witness {:?}, oracle sets {:?}",
                witness.map(|h| h.members().to_vec()),
                oracle
                    .all_homogeneous_sets
                    .iter()
                    .map(|x| x.members().to_vec())
                    .collect::<Vec<_>>()
            );
        }
        Err(e) => println!("Cay(Z{n}, {s:?}): outside the theorem hypotheses ({e})"),
    }
}

fn main() {
    demo(4, &[1]); // directed 4-cycle: prime, no witness
    demo(8, &[1, 3, 5, 7]); // symmetric S: witness {0,4}
    demo(6, &[1, 2]); // asymmetric S
    demo(5, &[1, 2, 3, 4]); // S = G \ {1}: hypotheses violated
}
