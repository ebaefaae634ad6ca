//! Sweep every symmetric connection set of a small group and compare the
//! subgroup criterion against the brute-force oracle.

use cayley_decomp::group::FiniteGroup;
use cayley_decomp::oracle::{sweep_generator_sets, SweepMode};

fn main() {
    for (name, group) in [
        ("Z6", FiniteGroup::cyclic(6).unwrap()),
        ("Z8", FiniteGroup::cyclic(8).unwrap()),
        ("D4", FiniteGroup::dihedral(4).unwrap()),
    ] {
        let report = sweep_generator_sets(&group, SweepMode::Exhaustive).unwrap();
        println!(
            "{name}: {} connection sets, {} disagreements ({:?})",
            report.cases,
            report.disagreements.len(),
            report.elapsed
        );
        for c in &report.disagreements {
            println!("  counterexample: {c:?}");
        }
    }
}
