//! Finite groups as multiplication tables, with the subgroup and coset
//! machinery the homogeneous-set criteria need.
//!
//! Groups are stored as raw tables even when built from a structured family;
//! the structured constructors exist only for convenient input. User-supplied
//! tables are validated at construction: exhaustively up to order 64,
//! by random triple sampling above that.

use serde::Deserialize;

use crate::error::{Error, Result};

/// Order cap for exhaustive subgroup enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

/// A symmetric, identity-free generating set for a Cayley graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    members: Vec<usize>,
}

impl GeneratorSet {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A subgroup given by its sorted member list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

impl FiniteGroup {
    /// Addition mod n.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = (a + b) % n;
            }
        }
        Ok(FiniteGroup {
            n,
            inverse: (0..n).map(|a| (n - a) % n).collect(),
            table,
            identity: 0,
        })
    }

    /// Direct product on lexicographic pairs, first factor major.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let n = a.n * b.n;
        let mut table = vec![0; n * n];
        for x1 in 0..a.n {
            for y1 in 0..b.n {
                for x2 in 0..a.n {
                    for y2 in 0..b.n {
                        let i = x1 * b.n + y1;
                        let j = x2 * b.n + y2;
                        table[i * n + j] = a.op(x1, x2) * b.n + b.op(y1, y2);
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|i| a.inverse[i / b.n] * b.n + b.inverse[i % b.n])
            .collect();
        FiniteGroup {
            n,
            table,
            identity: a.identity * b.n + b.identity,
            inverse,
        }
    }

    /// Dihedral group of order 2n: elements r^i s^j with index 2i + j, where
    /// r^n = s^2 = 1 and s r s = r^-1.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGroup(format!(
                "dihedral group needs n >= 3, got {n}"
            )));
        }
        let order = 2 * n;
        let idx = |i: usize, j: usize| 2 * (i % n) + j;
        let mut table = vec![0; order * order];
        for i in 0..n {
            for j in 0..2 {
                for k in 0..n {
                    for l in 0..2 {
                        // (r^i s^j)(r^k s^l): s r^k = r^(n-k) s
                        let prod = if j == 0 {
                            idx((i + k) % n, l)
                        } else {
                            idx((i + n - k % n) % n, (1 + l) % 2)
                        };
                        table[idx(i, j) * order + idx(k, l)] = prod;
                    }
                }
            }
        }
        let mut g = FiniteGroup {
            n: order,
            table,
            identity: 0,
            inverse: vec![0; order],
        };
        g.compute_inverses()?;
        Ok(g)
    }

    /// Build from a raw table, distrusting it: identity, inverses, closure,
    /// and associativity are all checked.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::InvalidGroup(format!(
                        "table entry {v} out of range for order {n}"
                    )));
                }
                flat.push(v);
            }
        }
        let mut g = FiniteGroup {
            n,
            table: flat,
            identity: 0,
            inverse: vec![0; n],
        };
        g.find_identity()?;
        g.compute_inverses()?;
        g.check_associativity()?;
        Ok(g)
    }

    fn find_identity(&mut self) -> Result<()> {
        for e in 0..self.n {
            if (0..self.n).all(|a| self.op(e, a) == a && self.op(a, e) == a) {
                self.identity = e;
                return Ok(());
            }
        }
        Err(Error::InvalidGroup("no identity element".into()))
    }

    fn compute_inverses(&mut self) -> Result<()> {
        for a in 0..self.n {
            match (0..self.n).find(|&b| self.op(a, b) == self.identity && self.op(b, a) == self.identity)
            {
                Some(b) => self.inverse[a] = b,
                None => {
                    return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
                }
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<()> {
        if self.n <= MAX_ENUMERATION_ORDER {
            for a in 0..self.n {
                for b in 0..self.n {
                    for c in 0..self.n {
                        if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // sampled check for large user tables
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % self.n as u64) as usize
            };
            for _ in 0..1_000_000 {
                let (a, b, c) = (next(), next(), next());
                if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                    return Err(Error::InvalidGroup(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Smallest subgroup containing `seed`, by closure iteration. An empty
    /// seed yields the trivial subgroup.
    pub fn subgroup_generated(&self, seed: &[usize]) -> Subgroup {
        let mut in_set = vec![false; self.n];
        in_set[self.identity] = true;
        let mut members = vec![self.identity];
        let mut frontier: Vec<usize> = Vec::new();
        for &g in seed {
            if !in_set[g] {
                in_set[g] = true;
                frontier.push(g);
            }
        }
        members.extend(frontier.iter().copied());
        while let Some(g) = frontier.pop() {
            let candidates: Vec<usize> = members
                .iter()
                .flat_map(|&h| [self.op(g, h), self.op(h, g), self.inverse(g)])
                .collect();
            for c in candidates {
                if !in_set[c] {
                    in_set[c] = true;
                    members.push(c);
                    frontier.push(c);
                }
            }
        }
        members.sort_unstable();
        Subgroup { members }
    }

    /// All subgroups, by closing the cyclic subgroups under pairwise join
    /// until fixpoint. Sorted lexicographically by member list.
    pub fn enumerate_subgroups(&self) -> Result<Vec<Subgroup>> {
        if self.n > MAX_ENUMERATION_ORDER {
            return Err(Error::CapExceeded {
                what: "subgroup enumeration",
                size: self.n,
                cap: MAX_ENUMERATION_ORDER,
            });
        }
        let mut found: std::collections::BTreeSet<Subgroup> = std::collections::BTreeSet::new();
        found.insert(self.subgroup_generated(&[]));
        for g in 0..self.n {
            found.insert(self.subgroup_generated(&[g]));
        }
        loop {
            let snapshot: Vec<Subgroup> = found.iter().cloned().collect();
            let before = found.len();
            for i in 0..snapshot.len() {
                for j in (i + 1)..snapshot.len() {
                    let mut seed = snapshot[i].members.clone();
                    seed.extend_from_slice(&snapshot[j].members);
                    found.insert(self.subgroup_generated(&seed));
                }
            }
            if found.len() == before {
                break;
            }
        }
        Ok(found.into_iter().collect())
    }

    /// Right coset Hc = {x∘c : x in H}.
    pub fn right_coset(&self, h: &Subgroup, c: usize) -> Vec<usize> {
        let mut coset: Vec<usize> = h.members.iter().map(|&x| self.op(x, c)).collect();
        coset.sort_unstable();
        coset
    }

    /// Double coset HcH = {x∘c∘y : x, y in H}.
    pub fn double_coset(&self, h: &Subgroup, c: usize) -> Vec<usize> {
        let mut out: Vec<usize> = h
            .members
            .iter()
            .flat_map(|&x| h.members.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.op(self.op(x, c), y))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Accepts iff the identity is absent and the set is closed under
    /// inversion.
    pub fn validate_generator_set(&self, s: &[usize]) -> Result<GeneratorSet> {
        let mut members: Vec<usize> = s.to_vec();
        members.sort_unstable();
        members.dedup();
        for &g in &members {
            if g >= self.n {
                return Err(Error::InvalidGroup(format!(
                    "generator {g} out of range for order {}",
                    self.n
                )));
            }
            if g == self.identity {
                return Err(Error::GeneratorContainsIdentity { identity: g });
            }
            let inv = self.inverse(g);
            if members.binary_search(&inv).is_err() {
                return Err(Error::GeneratorNotSymmetric {
                    element: g,
                    inverse: inv,
                });
            }
        }
        Ok(GeneratorSet { members })
    }
}

/// Group JSON: `{"kind":"cyclic","n":6}` | `{"kind":"dihedral","n":4}` |
/// `{"kind":"product","factors":[...]}` | `{"kind":"table","n":k,"table":[[..]]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Dihedral { n: usize },
    Product { factors: Vec<GroupSpec> },
    Table { n: usize, table: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic { n } => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral { n } => FiniteGroup::dihedral(*n),
            GroupSpec::Product { factors } => {
                let mut it = factors.iter();
                let first = it
                    .next()
                    .ok_or_else(|| Error::InvalidGroup("empty product".into()))?;
                let mut g = first.build()?;
                for f in it {
                    g = FiniteGroup::product(&g, &f.build()?);
                }
                Ok(g)
            }
            GroupSpec::Table { n, table } => {
                if table.len() != *n {
                    return Err(Error::InvalidGroup(format!(
                        "declared order {n} does not match table size {}",
                        table.len()
                    )));
                }
                FiniteGroup::from_table(table.clone())
            }
        }
    }
}
