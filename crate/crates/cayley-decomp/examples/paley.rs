//! Generalized Paley graphs P_psi = Cay((R,+), ker psi) and their
//! primality, including the classical quadratic-residue construction and
//! the disconnected primitive counterexample on F2 x F2.

use cayley_decomp::ring::{FiniteCommRing, MultiplicativeFunction};
use cayley_decomp::ring_graphs::{paley_graph, paley_prime_test};

fn main() {
    for q in [5usize, 9, 13] {
        let (p, k) = if q == 9 { (3, 2) } else { (q, 1) };
        let field = FiniteCommRing::galois_field(p, k).unwrap();
        let chi = MultiplicativeFunction::power_residue(&field, 2).unwrap();
        if !chi.is_even() {
            println!("F{q}: quadratic character is odd (q = 3 mod 4), skipping");
            continue;
        }
        let graph = paley_graph(&chi).unwrap();
        let cert = paley_prime_test(&chi).unwrap();
        println!(
            "Paley graph over F{q}: {} vertices, degree {}, verdict {:?}",
            graph.n(),
            graph.degree(0),
            cert.verdict
        );
    }

    // a non-primitive function: the principal function on Z/4
    let z4 = FiniteCommRing::zmod(4).unwrap();
    let one = MultiplicativeFunction::principal(&z4);
    let cert = paley_prime_test(&one).unwrap();
    println!(
        "principal function on Z/4: verdict {:?}, witness ideal {:?}",
        cert.verdict,
        cert.witness_ideal.map(|i| i.members().to_vec())
    );

    // primitive psi does not guarantee primality when P_psi is disconnected
    let f2 = FiniteCommRing::galois_field(2, 1).unwrap();
    let r = FiniteCommRing::product(vec![f2.clone(), f2]).unwrap();
    let psi = MultiplicativeFunction::principal(&r);
    let g = paley_graph(&psi).unwrap();
    println!(
        "F2 x F2 principal function: primitive = {}, components {:?}, verdict {:?}",
        psi.is_primitive().unwrap(),
        g.connected_components(),
        paley_prime_test(&psi).unwrap().verdict
    );
}
