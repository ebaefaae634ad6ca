//! Brute-force reference implementations. Everything here is deliberately
//! naive: enumerate candidate subsets in size-then-lexicographic order and
//! apply the definitions literally. The fast paths elsewhere are tested
//! against these at small sizes.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::analysis::{cayley_graph, is_bihomogeneous, is_homogeneous, subgroup_criterion};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, VertexSet};
use crate::group::FiniteGroup;

/// Vertex cap for the undirected subset sweep (2^20 subsets).
pub const MAX_ORACLE_UNDIRECTED: usize = 20;

/// Vertex cap for the directed subset sweep.
pub const MAX_ORACLE_DIRECTED: usize = 16;

/// Group-order cap for exhaustive generator-set sweeps.
pub const MAX_SWEEP_ORDER: usize = 16;

#[derive(Debug, Clone)]
pub struct OracleReport {
    /// every non-trivial homogeneous set, in size-then-lexicographic order
    pub all_homogeneous_sets: Vec<VertexSet>,
    pub is_prime: bool,
    pub elapsed: Duration,
}

/// All subsets of {0..n-1} with size in [2, n-1], in size-then-lex order
/// (lexicographic on the sorted member vector within each size).
fn candidate_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (2..n).flat_map(move |k| Combinations::new(n, k))
}

/// Plain lexicographic k-combinations of 0..n-1.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let current = if k <= n {
            Some((0..k).collect())
        } else {
            None
        };
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - (k - i) {
                next[i] += 1;
                for j in (i + 1)..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|u| {
            (0..g.n())
                .filter(|&v| g.has_edge(u, v))
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect()
}

fn mask_of(members: &[usize]) -> u32 {
    members.iter().fold(0u32, |m, &v| m | 1 << v)
}

/// X is homogeneous iff every outside vertex sees all of X or none of it.
fn mask_homogeneous(adj: &[u32], n: usize, x: u32) -> bool {
    (0..n).all(|y| {
        if x >> y & 1 == 1 {
            return true;
        }
        let seen = adj[y] & x;
        seen == 0 || seen == x
    })
}

/// Complete enumeration of the non-trivial homogeneous sets of `g`.
pub fn brute_force_homogeneous_sets(g: &Graph) -> Result<OracleReport> {
    let start = Instant::now();
    let n = g.n();
    if n > MAX_ORACLE_UNDIRECTED {
        return Err(Error::CapExceeded {
            what: "oracle vertex count",
            size: n,
            cap: MAX_ORACLE_UNDIRECTED,
        });
    }
    let adj = adjacency_masks(g);
    let mut all = Vec::new();
    for members in candidate_subsets(n) {
        if mask_homogeneous(&adj, n, mask_of(&members)) {
            let set = VertexSet::new(members);
            debug_assert!(is_homogeneous(g, &set));
            all.push(set);
        }
    }
    Ok(OracleReport {
        is_prime: all.is_empty(),
        all_homogeneous_sets: all,
        elapsed: start.elapsed(),
    })
}

/// Early-exit primality query: the first witness in size-then-lex order,
/// or None when prime.
pub fn brute_force_first_witness(g: &Graph) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n > MAX_ORACLE_UNDIRECTED {
        return Err(Error::CapExceeded {
            what: "oracle vertex count",
            size: n,
            cap: MAX_ORACLE_UNDIRECTED,
        });
    }
    let adj = adjacency_masks(g);
    for members in candidate_subsets(n) {
        if mask_homogeneous(&adj, n, mask_of(&members)) {
            return Ok(Some(VertexSet::new(members)));
        }
    }
    Ok(None)
}

/// Exact primality for graphs beyond the subset-enumeration cap: a graph
/// has a non-trivial homogeneous set iff some vertex pair has a proper
/// splitter closure (every set with at least two members contains a pair,
/// and the closure of that pair stays inside it). Returns the first proper
/// pair closure in pair order. O(n^4)-ish but exact at any size.
pub fn pair_closure_witness(g: &Graph) -> Option<VertexSet> {
    use crate::analysis::minimal_module;
    let n = g.n();
    for u in 0..n {
        for v in (u + 1)..n {
            let m = minimal_module(g, &VertexSet::new(vec![u, v]));
            if m.len() < n {
                return Some(m);
            }
        }
    }
    None
}

/// Complete enumeration of the non-trivial bihomogeneous sets of `d`
/// (simultaneously in-homogeneous and out-homogeneous).
pub fn brute_force_bihomogeneous_sets(d: &Digraph) -> Result<OracleReport> {
    let start = Instant::now();
    let n = d.n();
    if n > MAX_ORACLE_DIRECTED {
        return Err(Error::CapExceeded {
            what: "oracle digraph vertex count",
            size: n,
            cap: MAX_ORACLE_DIRECTED,
        });
    }
    let out_masks: Vec<u32> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| d.has_arc(u, v))
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect();
    let in_masks: Vec<u32> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| d.has_arc(v, u))
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect();
    let mut all = Vec::new();
    for members in candidate_subsets(n) {
        let x = mask_of(&members);
        if mask_homogeneous(&out_masks, n, x) && mask_homogeneous(&in_masks, n, x) {
            let set = VertexSet::new(members);
            debug_assert!(is_bihomogeneous(d, &set));
            all.push(set);
        }
    }
    Ok(OracleReport {
        is_prime: all.is_empty(),
        all_homogeneous_sets: all,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Every symmetric identity-free S with ∅ ≠ S ≠ G∖{1}; order ≤ 16.
    Exhaustive,
    /// A deterministic seeded sample of that family.
    Sample { count: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct SweepCounterexample {
    pub s: Vec<usize>,
    pub criterion_witness: Option<Vec<usize>>,
    pub oracle_sets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub cases: usize,
    pub disagreements: Vec<SweepCounterexample>,
    pub elapsed: Duration,
}

/// All valid connection sets for the sweep: symmetric, identity-free,
/// neither empty nor all of G∖{1}. Generated by toggling involutions and
/// inverse pairs, in ascending mask order (deterministic).
pub fn symmetric_connection_sets(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let e = g.identity();
    let mut atoms: Vec<Vec<usize>> = Vec::new();
    for a in 0..g.order() {
        if a == e {
            continue;
        }
        let inv = g.inverse(a);
        if inv == a {
            atoms.push(vec![a]);
        } else if a < inv {
            atoms.push(vec![a, inv]);
        }
    }
    let total = 1usize << atoms.len();
    let mut out = Vec::new();
    for mask in 1..total.saturating_sub(1) {
        let mut s: Vec<usize> = Vec::new();
        for (i, atom) in atoms.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.extend_from_slice(atom);
            }
        }
        s.sort_unstable();
        out.push(s);
    }
    out
}

/// Compare the subgroup criterion against the oracle over connection sets
/// of `g`: a criterion witness must exist exactly when the Cayley graph has
/// a non-trivial homogeneous set.
pub fn sweep_generator_sets(g: &FiniteGroup, mode: SweepMode) -> Result<SweepReport> {
    let start = Instant::now();
    if g.order() > MAX_SWEEP_ORDER {
        return Err(Error::CapExceeded {
            what: "sweep group order",
            size: g.order(),
            cap: MAX_SWEEP_ORDER,
        });
    }
    let mut sets = symmetric_connection_sets(g);
    if let SweepMode::Sample { count, seed } = mode {
        sets = sample_without_replacement(sets, count, seed);
    }
    let cases = sets.len();
    let disagreements: Vec<SweepCounterexample> = sets
        .into_par_iter()
        .filter_map(|s| {
            let genset = g.validate_generator_set(&s).expect("sets are valid by construction");
            let graph = cayley_graph(g, &genset);
            let witness = subgroup_criterion(g, &genset)
                .expect("sweep sets satisfy the criterion hypotheses");
            let oracle = brute_force_homogeneous_sets(&graph)
                .expect("group order cap implies the oracle cap");
            if witness.is_some() == oracle.is_prime {
                Some(SweepCounterexample {
                    s,
                    criterion_witness: witness.map(|h| h.members().to_vec()),
                    oracle_sets: oracle
                        .all_homogeneous_sets
                        .iter()
                        .map(|v| v.members().to_vec())
                        .collect(),
                })
            } else {
                None
            }
        })
        .collect();
    Ok(SweepReport {
        cases,
        disagreements,
        elapsed: start.elapsed(),
    })
}

/// Deterministic seeded subsample preserving the original order.
fn sample_without_replacement<T>(items: Vec<T>, count: usize, seed: u64) -> Vec<T> {
    if count >= items.len() {
        return items;
    }
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    // partial Fisher-Yates, then restore order among the chosen prefix
    let len = items.len();
    let mut picked: Vec<usize> = (0..len).collect();
    for i in 0..count {
        let j = i + (next() as usize) % (len - i);
        picked.swap(i, j);
    }
    let mut keep: Vec<usize> = picked[..count].to_vec();
    keep.sort_unstable();
    items
        .into_iter()
        .enumerate()
        .filter(|(i, _)| keep.binary_search(i).is_ok())
        .map(|(_, item)| item)
        .collect()
}
