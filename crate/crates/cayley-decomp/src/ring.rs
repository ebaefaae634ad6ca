//! Finite commutative rings: Z/n, Galois fields GF(p^k), and finite products
//! thereof, with units, ideals, quotients, the Jacobson radical, and exact
//! multiplicative functions.
//!
//! Elements are indexed 0..size-1 with canonical encodings: residues for
//! Z/n, base-p coefficient vectors for GF(p^k) (digit j = coefficient of
//! x^j), and mixed-radix tuples with the first factor major for products.
//! Operation tables are materialized at construction and the ring axioms are
//! checked exhaustively (sizes are capped at 64, so this is instant).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Element-count cap for every constructed ring.
pub const MAX_RING_SIZE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingStructure {
    Zmod { n: usize },
    /// Monic modulus x^k + c_{k-1} x^{k-1} + ... + c_0, stored as the lower
    /// coefficients c_0..c_{k-1}.
    GaloisField { p: usize, k: usize, modulus: Vec<usize> },
    Product { factors: Vec<FiniteCommRing> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCommRing {
    structure: RingStructure,
    size: usize,
    one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    unit: Vec<bool>,
}

/// An ideal given by its sorted member list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    members: Vec<usize>,
}

impl Ideal {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.members == [0]
    }

    /// Non-trivial means different from both {0} and R.
    pub fn is_nontrivial(&self, ring: &FiniteCommRing) -> bool {
        !self.is_zero() && self.members.len() != ring.size()
    }
}

/// A validated ring homomorphism (preserves 0, 1, + and ×).
#[derive(Debug, Clone)]
pub struct RingHom {
    domain: FiniteCommRing,
    codomain: FiniteCommRing,
    map: Vec<usize>,
}

impl RingHom {
    pub fn new(domain: FiniteCommRing, codomain: FiniteCommRing, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.size() {
            return Err(Error::InvalidRing("homomorphism map has wrong length".into()));
        }
        if map.iter().any(|&v| v >= codomain.size()) {
            return Err(Error::InvalidRing("homomorphism image out of range".into()));
        }
        if map[0] != 0 || map[domain.one()] != codomain.one() {
            return Err(Error::InvalidRing("homomorphism must preserve 0 and 1".into()));
        }
        for a in 0..domain.size() {
            for b in 0..domain.size() {
                if map[domain.add(a, b)] != codomain.add(map[a], map[b])
                    || map[domain.mul(a, b)] != codomain.mul(map[a], map[b])
                {
                    return Err(Error::InvalidRing(format!(
                        "map does not respect ring operations at ({a},{b})"
                    )));
                }
            }
        }
        Ok(RingHom {
            domain,
            codomain,
            map,
        })
    }

    pub fn domain(&self) -> &FiniteCommRing {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteCommRing {
        &self.codomain
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn image_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&a| self.map[a]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn preimage_of_set(&self, set: &[usize]) -> Vec<usize> {
        (0..self.domain.size())
            .filter(|&a| set.contains(&self.map[a]))
            .collect()
    }
}

impl FiniteCommRing {
    /// Integers mod n.
    pub fn zmod(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Z/{n} is not a ring with 1 != 0")));
        }
        check_cap(n)?;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = (a + b) % n;
                mul[a * n + b] = (a * b) % n;
            }
        }
        let ring = FiniteCommRing {
            structure: RingStructure::Zmod { n },
            size: n,
            one: 1,
            add,
            mul,
            neg: (0..n).map(|a| (n - a) % n).collect(),
            unit: (0..n).map(|a| gcd(a, n) == 1).collect(),
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    /// GF(p^k) with the lexicographically least monic irreducible modulus of
    /// degree k over Z/p (deterministic; degree 1 yields the modulus x, i.e.
    /// the prime field itself).
    pub fn galois_field(p: usize, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidRing("extension degree must be >= 1".into()));
        }
        let size = p
            .checked_pow(k as u32)
            .ok_or_else(|| Error::InvalidRing("field size overflow".into()))?;
        check_cap(size)?;
        for t in 0..size {
            let modulus: Vec<usize> = digits(t, p, k);
            if let Some(ring) = Self::try_field_with_modulus(p, k, modulus)? {
                return Ok(ring);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over every prime field")
    }

    /// Build F_p[x]/(f) for monic f and return it iff it is a field, i.e.
    /// iff f is irreducible.
    fn try_field_with_modulus(p: usize, k: usize, modulus: Vec<usize>) -> Result<Option<Self>> {
        let size = p.pow(k as u32);
        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for a in 0..size {
            let da = digits(a, p, k);
            for b in 0..size {
                let db = digits(b, p, k);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * size + b] = undigits(&sum, p);
                mul[a * size + b] = undigits(&poly_mul_mod(&da, &db, &modulus, p), p);
            }
        }
        // field iff every nonzero element has a multiplicative inverse
        let one = 1usize; // constant polynomial 1
        for a in 1..size {
            if !(0..size).any(|b| mul[a * size + b] == one) {
                return Ok(None);
            }
        }
        let ring = FiniteCommRing {
            structure: RingStructure::GaloisField { p, k, modulus },
            size,
            one,
            neg: (0..size)
                .map(|a| {
                    let d: Vec<usize> = digits(a, p, k).iter().map(|&x| (p - x) % p).collect();
                    undigits(&d, p)
                })
                .collect(),
            unit: (0..size).map(|a| a != 0).collect(),
            add,
            mul,
        };
        ring.check_axioms()?;
        Ok(Some(ring))
    }

    /// Direct product on mixed-radix tuples, first factor major.
    pub fn product(factors: Vec<FiniteCommRing>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidRing("empty product".into()));
        }
        if factors.len() == 1 {
            return Ok(factors.into_iter().next().unwrap());
        }
        let size: usize = factors.iter().map(|f| f.size()).product();
        check_cap(size)?;
        let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
        let decode = |i: usize| -> Vec<usize> { mixed_radix_decode(i, &sizes) };
        let encode = |t: &[usize]| -> usize { mixed_radix_encode(t, &sizes) };
        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for a in 0..size {
            let ta = decode(a);
            for b in 0..size {
                let tb = decode(b);
                let s: Vec<usize> = factors
                    .iter()
                    .enumerate()
                    .map(|(j, f)| f.add(ta[j], tb[j]))
                    .collect();
                let m: Vec<usize> = factors
                    .iter()
                    .enumerate()
                    .map(|(j, f)| f.mul(ta[j], tb[j]))
                    .collect();
                add[a * size + b] = encode(&s);
                mul[a * size + b] = encode(&m);
            }
        }
        let one = encode(&factors.iter().map(|f| f.one()).collect::<Vec<_>>());
        let neg = (0..size)
            .map(|a| {
                let t: Vec<usize> = decode(a)
                    .iter()
                    .enumerate()
                    .map(|(j, &x)| factors[j].neg(x))
                    .collect();
                encode(&t)
            })
            .collect();
        // a tuple is a unit iff every component is
        let unit = (0..size)
            .map(|a| {
                decode(a)
                    .iter()
                    .enumerate()
                    .all(|(j, &x)| factors[j].is_unit(x))
            })
            .collect();
        let ring = FiniteCommRing {
            structure: RingStructure::Product { factors },
            size,
            one,
            add,
            mul,
            neg,
            unit,
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        if self.one == 0 {
            return Err(Error::InvalidRing("1 = 0".into()));
        }
        for a in 0..n {
            if self.add(a, 0) != a || self.mul(a, self.one) != a || self.add(a, self.neg(a)) != 0 {
                return Err(Error::InvalidRing(format!("identity/negation fails at {a}")));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::InvalidRing(format!("commutativity fails at ({a},{b})")));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return Err(Error::InvalidRing(format!(
                            "ring axioms fail at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn structure(&self) -> &RingStructure {
        &self.structure
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn minus_one(&self) -> usize {
        self.neg(self.one)
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.unit[a]
    }

    /// All invertible elements, ascending.
    pub fn units(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.unit[a]).collect()
    }

    pub fn is_field(&self) -> bool {
        (1..self.size).all(|a| self.unit[a])
    }

    /// The additive group (R, +) as a multiplication-table group, sharing
    /// element indices with the ring.
    pub fn additive_group(&self) -> FiniteGroup {
        let n = self.size;
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| self.add(a, b)).collect())
            .collect();
        FiniteGroup::from_table(table).expect("additive group axioms follow from ring axioms")
    }

    /// Check the Ideal invariants for an arbitrary subset.
    pub fn is_ideal(&self, members: &[usize]) -> bool {
        let set: std::collections::BTreeSet<usize> = members.iter().copied().collect();
        if !set.contains(&0) {
            return false;
        }
        set.iter().all(|&m| {
            set.iter().all(|&m2| set.contains(&self.add(m, m2)))
                && (0..self.size).all(|r| set.contains(&self.mul(r, m)))
        })
    }

    pub fn ideal_from_members(&self, members: Vec<usize>) -> Result<Ideal> {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        if !self.is_ideal(&members) {
            return Err(Error::InvalidRing(format!(
                "{members:?} is not an ideal"
            )));
        }
        Ok(Ideal { members })
    }

    pub fn full_ideal(&self) -> Ideal {
        Ideal {
            members: (0..self.size).collect(),
        }
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal { members: vec![0] }
    }

    /// All ideals, sorted lexicographically by member list. Structural:
    /// one per divisor for Z/n, {0} and R for fields, componentwise products
    /// for product rings.
    pub fn enumerate_ideals(&self) -> Result<Vec<Ideal>> {
        check_cap(self.size)?;
        let mut out: Vec<Ideal> = match &self.structure {
            RingStructure::Zmod { n } => (1..=*n)
                .filter(|d| n % d == 0)
                .map(|d| Ideal {
                    members: (0..*n).step_by(d).collect::<Vec<_>>(),
                })
                .map(|mut i| {
                    i.members.sort_unstable();
                    i
                })
                .collect(),
            RingStructure::GaloisField { .. } => {
                vec![self.zero_ideal(), self.full_ideal()]
            }
            RingStructure::Product { factors } => {
                let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
                let component_ideals: Vec<Vec<Ideal>> = factors
                    .iter()
                    .map(|f| f.enumerate_ideals())
                    .collect::<Result<_>>()?;
                let mut ideals = vec![Ideal { members: vec![] }];
                // cartesian product of component choices
                let mut choices: Vec<Vec<&Ideal>> = vec![vec![]];
                for comp in &component_ideals {
                    let mut next = Vec::new();
                    for partial in &choices {
                        for ideal in comp {
                            let mut p = partial.clone();
                            p.push(ideal);
                            next.push(p);
                        }
                    }
                    choices = next;
                }
                ideals.clear();
                for choice in choices {
                    let mut members = vec![vec![]];
                    for (j, ideal) in choice.iter().enumerate() {
                        let mut next = Vec::new();
                        for partial in &members {
                            for &m in ideal.members() {
                                let mut p: Vec<usize> = partial.clone();
                                p.push(m);
                                next.push(p);
                            }
                        }
                        members = next;
                        let _ = j;
                    }
                    let mut idx: Vec<usize> = members
                        .iter()
                        .map(|t| mixed_radix_encode(t, &sizes))
                        .collect();
                    idx.sort_unstable();
                    ideals.push(Ideal { members: idx });
                }
                ideals
            }
        };
        out.sort();
        out.dedup();
        debug_assert!(out.iter().all(|i| self.is_ideal(i.members())));
        Ok(out)
    }

    /// Jacobson radical: the nilpotent elements, cross-checked against the
    /// intersection of the maximal ideals (the two agree for finite
    /// commutative rings, and we assert it).
    pub fn jacobson_radical(&self) -> Ideal {
        let nilpotents: Vec<usize> = (0..self.size)
            .filter(|&a| {
                let mut x = a;
                for _ in 0..self.size {
                    if x == 0 {
                        return true;
                    }
                    x = self.mul(x, a);
                }
                x == 0
            })
            .collect();
        let ideals = self
            .enumerate_ideals()
            .expect("ring size is within the enumeration cap");
        let proper: Vec<&Ideal> = ideals.iter().filter(|i| i.len() < self.size).collect();
        let maximal: Vec<&Ideal> = proper
            .iter()
            .filter(|i| {
                !proper
                    .iter()
                    .any(|j| j.len() > i.len() && i.members().iter().all(|m| j.contains(*m)))
            })
            .copied()
            .collect();
        let intersection: Vec<usize> = (0..self.size)
            .filter(|&a| maximal.iter().all(|m| m.contains(a)))
            .collect();
        assert_eq!(
            nilpotents, intersection,
            "nilradical and intersection of maximal ideals must agree"
        );
        Ideal {
            members: nilpotents,
        }
    }

    pub fn is_semisimple(&self) -> bool {
        self.jacobson_radical().is_zero()
    }

    /// Quotient by a proper ideal, with the canonical projection. The
    /// quotient is again a structured ring of this crate's ring class.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(FiniteCommRing, RingHom)> {
        if !self.is_ideal(ideal.members()) {
            return Err(Error::InvalidRing("not an ideal of this ring".into()));
        }
        if ideal.len() == self.size {
            return Err(Error::InvalidRing("cannot quotient by the full ring".into()));
        }
        match &self.structure {
            RingStructure::Zmod { n } => {
                if ideal.is_zero() {
                    let hom =
                        RingHom::new(self.clone(), self.clone(), (0..self.size).collect())?;
                    return Ok((self.clone(), hom));
                }
                // ideal = multiples of its least nonzero member
                let d = ideal.members()[1];
                debug_assert_eq!(n % d, 0);
                let q = FiniteCommRing::zmod(d)?;
                let map: Vec<usize> = (0..*n).map(|x| x % d).collect();
                let hom = RingHom::new(self.clone(), q.clone(), map)?;
                Ok((q, hom))
            }
            RingStructure::GaloisField { .. } => {
                // fields only have the zero ideal below R
                let hom = RingHom::new(self.clone(), self.clone(), (0..self.size).collect())?;
                Ok((self.clone(), hom))
            }
            RingStructure::Product { factors } => {
                let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
                // project the ideal onto each component
                let mut comp_members: Vec<Vec<usize>> = vec![Vec::new(); factors.len()];
                for &m in ideal.members() {
                    let t = mixed_radix_decode(m, &sizes);
                    for (j, &x) in t.iter().enumerate() {
                        comp_members[j].push(x);
                    }
                }
                let mut kept: Vec<usize> = Vec::new();
                let mut comp_quots: Vec<(FiniteCommRing, RingHom)> = Vec::new();
                for (j, f) in factors.iter().enumerate() {
                    let comp_ideal = f.ideal_from_members(comp_members[j].clone())?;
                    if comp_ideal.len() == f.size() {
                        continue; // component collapses to the zero ring
                    }
                    kept.push(j);
                    comp_quots.push(f.quotient(&comp_ideal)?);
                }
                if kept.is_empty() {
                    return Err(Error::InvalidRing("cannot quotient by the full ring".into()));
                }
                let q = if comp_quots.len() == 1 {
                    comp_quots[0].0.clone()
                } else {
                    FiniteCommRing::product(comp_quots.iter().map(|(r, _)| r.clone()).collect())?
                };
                let q_sizes: Vec<usize> = comp_quots.iter().map(|(r, _)| r.size()).collect();
                let map: Vec<usize> = (0..self.size)
                    .map(|x| {
                        let t = mixed_radix_decode(x, &sizes);
                        let imgs: Vec<usize> = kept
                            .iter()
                            .enumerate()
                            .map(|(pos, &j)| comp_quots[pos].1.apply(t[j]))
                            .collect();
                        if imgs.len() == 1 {
                            imgs[0]
                        } else {
                            mixed_radix_encode(&imgs, &q_sizes)
                        }
                    })
                    .collect();
                let hom = RingHom::new(self.clone(), q.clone(), map)?;
                Ok((q, hom))
            }
        }
    }

    /// R^ss = R / Rad(R), with the canonical projection. Units correspond
    /// exactly under the projection, and this is asserted exhaustively.
    pub fn semisimplify(&self) -> Result<(FiniteCommRing, RingHom)> {
        let rad = self.jacobson_radical();
        let (ss, hom) = self.quotient(&rad)?;
        for a in 0..self.size {
            assert_eq!(
                self.is_unit(a),
                ss.is_unit(hom.apply(a)),
                "units must correspond under semisimplification"
            );
        }
        Ok((ss, hom))
    }

    /// Validate a subgroup of the unit group containing -1, sorted.
    pub fn validate_unit_subgroup(&self, s: &[usize]) -> Result<Vec<usize>> {
        let mut set: Vec<usize> = s.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.is_empty() {
            return Err(Error::InvalidRing("S must be nonempty".into()));
        }
        for &a in &set {
            if a >= self.size {
                return Err(Error::InvalidRing(format!("element {a} out of range")));
            }
            if !self.is_unit(a) {
                return Err(Error::InvalidRing(format!("{a} is not a unit")));
            }
        }
        if set.binary_search(&self.one).is_err() {
            return Err(Error::InvalidRing("S must contain 1".into()));
        }
        for &a in &set {
            for &b in &set {
                if set.binary_search(&self.mul(a, b)).is_err() {
                    return Err(Error::InvalidRing(format!(
                        "S is not multiplicatively closed: {a}*{b} escapes"
                    )));
                }
            }
        }
        if set.binary_search(&self.minus_one()).is_err() {
            return Err(Error::InvalidRing("S must contain -1".into()));
        }
        Ok(set)
    }

    /// All subgroups of the unit group that contain -1, as sorted element
    /// lists, ordered lexicographically. Reuses the group-table subgroup
    /// enumeration on R^×.
    pub fn unit_subgroups_containing_minus_one(&self) -> Result<Vec<Vec<usize>>> {
        let units = self.units();
        let pos: std::collections::HashMap<usize, usize> =
            units.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let table: Vec<Vec<usize>> = units
            .iter()
            .map(|&a| units.iter().map(|&b| pos[&self.mul(a, b)]).collect())
            .collect();
        let unit_group = FiniteGroup::from_table(table)?;
        let minus_one = pos[&self.minus_one()];
        let mut out: Vec<Vec<usize>> = unit_group
            .enumerate_subgroups()?
            .into_iter()
            .filter(|h| h.contains(minus_one))
            .map(|h| h.members().iter().map(|&i| units[i]).collect())
            .collect();
        out.sort();
        Ok(out)
    }
}

/// A multiplicative function R → {0} ∪ ⟨ζ_d⟩, stored exactly: each value is
/// ZERO or an exponent e meaning ζ_d^e. ψ(0) = 0, ψ(1) = 1 and
/// ψ(ab) = ψ(a)ψ(b) are enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeFunction {
    ring: FiniteCommRing,
    order: usize,
    /// `None` encodes the value 0; `Some(e)` encodes ζ_d^e.
    values: Vec<Option<usize>>,
}

impl MultiplicativeFunction {
    pub fn new(ring: FiniteCommRing, order: usize, values: Vec<Option<usize>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidCharacter("order d must be >= 1".into()));
        }
        if values.len() != ring.size() {
            return Err(Error::InvalidCharacter(format!(
                "expected {} values, got {}",
                ring.size(),
                values.len()
            )));
        }
        if values.iter().flatten().any(|&e| e >= order) {
            return Err(Error::InvalidCharacter("exponent out of range".into()));
        }
        if values[0].is_some() {
            return Err(Error::InvalidCharacter("ψ(0) must be 0".into()));
        }
        if values[ring.one()] != Some(0) {
            return Err(Error::InvalidCharacter("ψ(1) must be 1".into()));
        }
        for a in 0..ring.size() {
            for b in 0..ring.size() {
                let expect = match (values[a], values[b]) {
                    (Some(x), Some(y)) => Some((x + y) % order),
                    _ => None,
                };
                if values[ring.mul(a, b)] != expect {
                    return Err(Error::InvalidCharacter(format!(
                        "multiplicativity fails at ({a},{b})"
                    )));
                }
            }
        }
        Ok(MultiplicativeFunction {
            ring,
            order,
            values,
        })
    }

    /// 𝟙: 1 on units, 0 elsewhere.
    pub fn principal(ring: &FiniteCommRing) -> Self {
        let values = (0..ring.size())
            .map(|a| if ring.is_unit(a) { Some(0) } else { None })
            .collect();
        MultiplicativeFunction::new(ring.clone(), 1, values)
            .expect("the principal function is multiplicative")
    }

    /// Power-residue character of order d on a finite field: fix the least
    /// generator γ of the unit group and send γ^j to ζ_d^j.
    pub fn power_residue(field: &FiniteCommRing, d: usize) -> Result<Self> {
        if !field.is_field() {
            return Err(Error::InvalidCharacter(
                "power-residue characters need a field".into(),
            ));
        }
        let q = field.size();
        if d == 0 || (q - 1) % d != 0 {
            return Err(Error::InvalidCharacter(format!(
                "order {d} does not divide q - 1 = {}",
                q - 1
            )));
        }
        let generator = (1..q)
            .find(|&g| multiplicative_order(field, g) == q - 1)
            .expect("finite field unit groups are cyclic");
        let mut values: Vec<Option<usize>> = vec![None; q];
        let mut x = field.one();
        for j in 0..(q - 1) {
            values[x] = Some(j % d);
            x = field.mul(x, generator);
        }
        MultiplicativeFunction::new(field.clone(), d, values)
    }

    pub fn ring(&self) -> &FiniteCommRing {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn value(&self, a: usize) -> Option<usize> {
        self.values[a]
    }

    /// ker(ψ) = {a | ψ(a) = 1}.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.ring.size())
            .filter(|&a| self.values[a] == Some(0))
            .collect()
    }

    /// Support {a | ψ(a) ≠ 0}.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.size())
            .filter(|&a| self.values[a].is_some())
            .collect()
    }

    /// ψ(-1) = 1.
    pub fn is_even(&self) -> bool {
        self.values[self.ring.minus_one()] == Some(0)
    }

    /// Primitive iff ψ does not factor through any non-trivial quotient
    /// R/I; a non-primitive verdict carries the least witness ideal on whose
    /// cosets ψ is constant.
    pub fn primitivity(&self) -> Result<Option<Ideal>> {
        for ideal in self.ring.enumerate_ideals()? {
            if !ideal.is_nontrivial(&self.ring) {
                continue;
            }
            let constant_on_cosets = (0..self.ring.size()).all(|x| {
                ideal
                    .members()
                    .iter()
                    .all(|&m| self.values[self.ring.add(x, m)] == self.values[x])
            });
            if constant_on_cosets {
                return Ok(Some(ideal));
            }
        }
        Ok(None)
    }

    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.primitivity()?.is_none())
    }
}

/// The pair (R, S) is primitive iff no non-trivial ideal I satisfies
/// S + I = S; a non-primitive verdict carries the least witness ideal.
pub fn pair_primitivity(ring: &FiniteCommRing, s: &[usize]) -> Result<Option<Ideal>> {
    let s = ring.validate_unit_subgroup(s)?;
    for ideal in ring.enumerate_ideals()? {
        if !ideal.is_nontrivial(ring) {
            continue;
        }
        if set_plus_ideal_fixed(ring, &s, &ideal) {
            return Ok(Some(ideal));
        }
    }
    Ok(None)
}

/// S + I = S, computed literally.
pub fn set_plus_ideal_fixed(ring: &FiniteCommRing, s: &[usize], ideal: &Ideal) -> bool {
    s.iter().all(|&x| {
        ideal
            .members()
            .iter()
            .all(|&m| s.binary_search(&ring.add(x, m)).is_ok())
    })
}

fn multiplicative_order(ring: &FiniteCommRing, a: usize) -> usize {
    let mut x = a;
    let mut k = 1;
    while x != ring.one() {
        x = ring.mul(x, a);
        k += 1;
        assert!(k <= ring.size(), "element is not a unit");
    }
    k
}

fn check_cap(size: usize) -> Result<()> {
    if size > MAX_RING_SIZE {
        return Err(Error::CapExceeded {
            what: "ring size",
            size,
            cap: MAX_RING_SIZE,
        });
    }
    Ok(())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Base-p digits of `t`, little-endian, padded to length `k`.
fn digits(t: usize, p: usize, k: usize) -> Vec<usize> {
    let mut t = t;
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(t % p);
        t /= p;
    }
    out
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Multiply two polynomials of degree < k and reduce modulo the monic
/// modulus x^k + m, coefficients in Z/p.
fn poly_mul_mod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let k = modulus.len();
    let mut prod = vec![0usize; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // x^k = -m, so fold high coefficients down
    for i in (k..2 * k).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &m) in modulus.iter().enumerate() {
            let idx = i - k + j;
            prod[idx] = (prod[idx] + c * (p - m) % p) % p;
        }
    }
    prod.truncate(k);
    prod
}

/// Mixed-radix tuple for index `i`, first coordinate major.
pub fn mixed_radix_decode(i: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize; sizes.len()];
    let mut rem = i;
    for j in (0..sizes.len()).rev() {
        out[j] = rem % sizes[j];
        rem /= sizes[j];
    }
    out
}

pub fn mixed_radix_encode(t: &[usize], sizes: &[usize]) -> usize {
    t.iter()
        .zip(sizes)
        .fold(0usize, |acc, (&x, &s)| acc * s + x)
}

/// Ring JSON: `{"kind":"zmod","n":12}` | `{"kind":"gf","p":3,"k":2}` |
/// `{"kind":"product","factors":[...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    Zmod { n: usize },
    Gf { p: usize, k: usize },
    Product { factors: Vec<RingSpec> },
}

impl RingSpec {
    pub fn build(&self) -> Result<FiniteCommRing> {
        match self {
            RingSpec::Zmod { n } => FiniteCommRing::zmod(*n),
            RingSpec::Gf { p, k } => FiniteCommRing::galois_field(*p, *k),
            RingSpec::Product { factors } => {
                let built: Vec<FiniteCommRing> =
                    factors.iter().map(|f| f.build()).collect::<Result<_>>()?;
                FiniteCommRing::product(built)
            }
        }
    }

    pub fn of(ring: &FiniteCommRing) -> RingSpec {
        match ring.structure() {
            RingStructure::Zmod { n } => RingSpec::Zmod { n: *n },
            RingStructure::GaloisField { p, k, .. } => RingSpec::Gf { p: *p, k: *k },
            RingStructure::Product { factors } => RingSpec::Product {
                factors: factors.iter().map(RingSpec::of).collect(),
            },
        }
    }
}

/// Character JSON: `{"kind":"principal"}` | `{"kind":"power_residue","d":2}`
/// | `{"kind":"table","d":...,"values":[...]}` with `null` for the value 0.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CharacterSpec {
    Principal,
    PowerResidue { d: usize },
    Table { d: usize, values: Vec<Option<usize>> },
}

impl CharacterSpec {
    pub fn build(&self, ring: &FiniteCommRing) -> Result<MultiplicativeFunction> {
        match self {
            CharacterSpec::Principal => Ok(MultiplicativeFunction::principal(ring)),
            CharacterSpec::PowerResidue { d } => MultiplicativeFunction::power_residue(ring, *d),
            CharacterSpec::Table { d, values } => {
                MultiplicativeFunction::new(ring.clone(), *d, values.clone())
            }
        }
    }
}
