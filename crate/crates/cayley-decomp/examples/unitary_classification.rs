//! Unitary Cayley graphs X_R = Cay(R, R^x) and the classification of the
//! prime ones, cross-checked against the brute-force oracle.

use cayley_decomp::oracle::brute_force_homogeneous_sets;
use cayley_decomp::ring::FiniteCommRing;
use cayley_decomp::ring_graphs::{unitary_graph, unitary_prime_classification};

fn main() {
    println!("{:>5}  {:>6}  {:>7}  rule", "ring", "prime", "oracle");
    for n in 2..=20usize {
        let ring = FiniteCommRing::zmod(n).unwrap();
        let class = unitary_prime_classification(&ring);
        let oracle = brute_force_homogeneous_sets(&unitary_graph(&ring)).unwrap();
        println!(
            "{:>5}  {:>6}  {:>7}  {}",
            format!("Z/{n}"),
            class.prime,
            oracle.is_prime,
            class.rule
        );
        assert_eq!(class.prime, oracle.is_prime);
    }

    let f2 = FiniteCommRing::galois_field(2, 1).unwrap();
    let f4 = FiniteCommRing::galois_field(2, 2).unwrap();
    for (name, ring) in [
        ("F2xF2", FiniteCommRing::product(vec![f2.clone(), f2.clone()]).unwrap()),
        ("F2xF4", FiniteCommRing::product(vec![f2, f4]).unwrap()),
    ] {
        let class = unitary_prime_classification(&ring);
        println!("{name}: prime = {} ({})", class.prime, class.rule);
    }
}
