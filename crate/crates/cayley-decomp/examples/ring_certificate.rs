//! Full ring-level primality certificates: witness ideal, quotient wreath
//! presentation, and the structural refusal when the connectivity
//! hypotheses fail.

use cayley_decomp::ring::FiniteCommRing;
use cayley_decomp::ring_graphs::{ring_prime_test, CertVerdict};

fn show(name: &str, ring: &FiniteCommRing, s: &[usize]) {
    let cert = ring_prime_test(ring, s).unwrap();
    print!("{name}: {:?} ({:?})", cert.verdict, cert.reason);
    if let Some(i) = &cert.witness_ideal {
        print!(", witness ideal {:?}", i.members());
    }
    if let Some(w) = &cert.wreath_form {
        print!(
            ", wreath form: {}-vertex quotient . E{}",
            w.quotient.n(),
            w.cocomplete
        );
    }
    println!();
    if cert.verdict == CertVerdict::HypothesesNotMet {
        println!("  (run the generic graph-level analysis for a verdict)");
    }
}

fn main() {
    let z5 = FiniteCommRing::zmod(5).unwrap();
    show("Cay(Z/5, {1,4})", &z5, &[1, 4]);

    let z9 = FiniteCommRing::zmod(9).unwrap();
    show("Cay(Z/9, units)", &z9, &z9.units());

    let z8 = FiniteCommRing::zmod(8).unwrap();
    show("Cay(Z/8, units)", &z8, &z8.units());

    let z4 = FiniteCommRing::zmod(4).unwrap();
    show("Cay(Z/4, {1,3})", &z4, &[1, 3]); // C4 = K2 . E2, witness {0,2}

    let f2 = FiniteCommRing::galois_field(2, 1).unwrap();
    let f3 = FiniteCommRing::galois_field(3, 1).unwrap();
    let r = FiniteCommRing::product(vec![f2.clone(), f3]).unwrap();
    show("Cay(F2xF3, units)", &r, &r.units());

    // primitive pair but disconnected graph: structural refusal
    let f2f2 = FiniteCommRing::product(vec![f2.clone(), f2]).unwrap();
    show("Cay(F2xF2, units)", &f2f2, &f2f2.units());
}
