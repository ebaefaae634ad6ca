//! Adjacency spectra and the wreath-product spectrum identity: the
//! spectrum of G . E_n is r + n*Spec(G) together with |G| copies of the
//! inner zeros, and a decomposed Cay(R,S) has eigenvalue 0 with
//! multiplicity at least |R|/2.

use cayley_decomp::graph::Graph;
use cayley_decomp::ring::FiniteCommRing;
use cayley_decomp::ring_graphs::{ring_cayley, ring_prime_test};
use cayley_decomp::spectral::{adjacency_spectrum, wreath_spectrum, zero_multiplicity_check};

fn main() {
    let z9 = FiniteCommRing::zmod(9).unwrap();
    let units = z9.units();
    let graph = ring_cayley(&z9, &units).unwrap();
    let spectrum = adjacency_spectrum(&graph).unwrap();
    println!("Spec(Cay(Z/9, units)):");
    for e in &spectrum.eigenvalues {
        println!("  {:8.4} x{}", e.value, e.multiplicity);
    }

    let cert = ring_prime_test(&z9, &units).unwrap();
    println!(
        "zero-multiplicity bound (>= |R|/2 = 4.5) holds: {}",
        zero_multiplicity_check(&z9, &units, &cert).unwrap()
    );

    // rebuild the spectrum from the wreath factors
    let form = cert.wreath_form.unwrap();
    let spec_q = adjacency_spectrum(&form.quotient).unwrap();
    let inner = Graph::cocomplete(form.cocomplete).unwrap();
    let spec_inner = adjacency_spectrum(&inner).unwrap();
    let rebuilt = wreath_spectrum(&spec_q, form.quotient.n(), &spec_inner, form.cocomplete, 0.0)
        .unwrap();
    println!(
        "spectrum from the K3 . E3 presentation matches: {}",
        rebuilt.approx_eq(&spectrum, 1e-6)
    );
}
