//! Finite simple graphs and digraphs on vertices `0..n-1`.
//!
//! All constructions fix a canonical labeling (pairs ordered
//! lexicographically with the first coordinate major), so composed graphs
//! can be compared by equality before falling back to isomorphism search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of the vertices of some host graph, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet { members: vec![v] }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            members: (0..n).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut m = self.members.clone();
        m.extend_from_slice(&other.members);
        VertexSet::new(m)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.members.iter().any(|&v| other.contains(v))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

/// A total function on vertex indices, used to assert isomorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    map: Vec<usize>,
}

impl VertexMap {
    pub fn new(map: Vec<usize>) -> Self {
        VertexMap { map }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            map: (0..n).collect(),
        }
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

/// Dense simple undirected graph.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    // Provenance flag: set by Cayley-style constructors whose output is
    // vertex-transitive by construction. Not part of structural equality.
    vertex_transitive: bool,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}
impl Eq for Graph {}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be >= 1".into()));
        }
        Ok(Graph {
            n,
            adj: vec![false; n * n],
            vertex_transitive: false,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.set(u, v, true);
            }
        }
        g.vertex_transitive = true;
        Ok(g)
    }

    /// Cocomplete (edgeless) graph E_n.
    pub fn cocomplete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        g.vertex_transitive = true;
        Ok(g)
    }

    /// Cycle C_n (for n = 1, 2 this degenerates to K_1, K_2).
    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            let w = (v + 1) % n;
            if v != w {
                g.set(v, w, true);
            }
        }
        g.vertex_transitive = true;
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        self.set(u, v, true);
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize, val: bool) {
        self.adj[u * self.n + v] = val;
        self.adj[v * self.n + u] = val;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges listed once, `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_vertex_transitive_by_construction(&self) -> bool {
        self.vertex_transitive
    }

    pub fn assert_vertex_transitive(&mut self) {
        self.vertex_transitive = true;
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_cocomplete(&self) -> bool {
        self.edge_count() == 0
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: vec![false; self.n * self.n],
            vertex_transitive: self.vertex_transitive,
        };
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                g.set(u, v, !self.has_edge(u, v));
            }
        }
        g
    }

    /// Subgraph induced by `h`, relabeled to `0..|h|-1` in sorted order.
    pub fn induced_subgraph(&self, h: &VertexSet) -> Result<Graph> {
        if h.is_empty() {
            return Err(Error::InvalidGraph(
                "induced subgraph of empty vertex set".into(),
            ));
        }
        let members = h.members();
        let mut g = Graph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Connected components as sorted vertex lists, ordered by least member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        components_of(self.n, |u, v| self.has_edge(u, v))
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// True iff the complement graph is connected. The single-vertex graph
    /// counts as both connected and anti-connected.
    pub fn is_anti_connected(&self) -> bool {
        self.complement().is_connected()
    }

    /// Wreath (lexicographic) product. Vertex `(x, y)` gets index
    /// `x * |V(b)| + y`.
    pub fn wreath_product(&self, inner: &Graph) -> Graph {
        let n = self.n * inner.n;
        let mut g = Graph {
            n,
            adj: vec![false; n * n],
            vertex_transitive: self.vertex_transitive && inner.vertex_transitive,
        };
        for x in 0..self.n {
            for y in 0..inner.n {
                for x2 in 0..self.n {
                    for y2 in 0..inner.n {
                        let a = x * inner.n + y;
                        let b = x2 * inner.n + y2;
                        if a >= b {
                            continue;
                        }
                        let edge = if x != x2 {
                            self.has_edge(x, x2)
                        } else {
                            inner.has_edge(y, y2)
                        };
                        if edge {
                            g.set(a, b, true);
                        }
                    }
                }
            }
        }
        g
    }

    /// Joined union `self[parts...]`: disjoint union of `parts` plus complete
    /// joins across pairs whose indices are adjacent in `self`. Part `i`'s
    /// vertices occupy a contiguous block, in order.
    pub fn joined_union(&self, parts: &[Graph]) -> Result<Graph> {
        if parts.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "joined union needs one part per vertex: {} parts for {} vertices",
                parts.len(),
                self.n
            )));
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut total = 0usize;
        for p in parts {
            offsets.push(total);
            total += p.n;
        }
        let mut g = Graph::empty(total)?;
        for (i, p) in parts.iter().enumerate() {
            for (u, v) in p.edges() {
                g.set(offsets[i] + u, offsets[i] + v, true);
            }
        }
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(i, j) {
                    for u in 0..parts[i].n {
                        for v in 0..parts[j].n {
                            g.set(offsets[i] + u, offsets[j] + v, true);
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    /// Tensor (direct) product: pairs adjacent iff adjacent in both
    /// coordinates. Same pair indexing as `wreath_product`.
    pub fn tensor_product(&self, other: &Graph) -> Graph {
        let n = self.n * other.n;
        let mut g = Graph {
            n,
            adj: vec![false; n * n],
            vertex_transitive: self.vertex_transitive && other.vertex_transitive,
        };
        for x in 0..self.n {
            for y in 0..other.n {
                for x2 in 0..self.n {
                    for y2 in 0..other.n {
                        let a = x * other.n + y;
                        let b = x2 * other.n + y2;
                        if a < b && self.has_edge(x, x2) && other.has_edge(y, y2) {
                            g.set(a, b, true);
                        }
                    }
                }
            }
        }
        g
    }

    /// Text format: first line `n`, then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::InvalidGraph("empty graph text".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::InvalidGraph("first line must be the vertex count".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::InvalidGraph(format!("bad edge line: {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::InvalidGraph(format!("bad edge line: {line:?}")))?;
            if it.next().is_some() {
                return Err(Error::InvalidGraph(format!("bad edge line: {line:?}")));
            }
            edges.push((u, v));
        }
        Graph::from_edges(n, &edges)
    }
}

/// JSON schema: `{"n": int, "edges": [[u,v],...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(de)?;
        Graph::from_edges(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

/// Dense simple digraph: irreflexive, not necessarily symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
}

impl Digraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be >= 1".into()));
        }
        Ok(Digraph {
            n,
            adj: vec![false; n * n],
        })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::empty(n)?;
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "arc ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            d.adj[u * n + v] = true;
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_arc(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn out_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_arc(v, u)).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_arc(u, v)).count()
    }

    pub fn complement(&self) -> Digraph {
        let mut d = Digraph {
            n: self.n,
            adj: vec![false; self.n * self.n],
        };
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.has_arc(u, v) {
                    d.adj[u * self.n + v] = true;
                }
            }
        }
        d
    }

    /// Symmetrization S(Γ): edge uv iff arc u→v or v→u.
    pub fn underlying_undirected(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("n >= 1");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_arc(u, v) || self.has_arc(v, u) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    /// Connected means S(Γ) is connected.
    pub fn is_connected(&self) -> bool {
        self.underlying_undirected().is_connected()
    }

    /// Anti-connected means S(Γ*) is connected.
    pub fn is_anti_connected(&self) -> bool {
        self.complement().underlying_undirected().is_connected()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.arcs() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DigraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        DigraphJson {
            n: self.n,
            edges: self.arcs(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = DigraphJson::deserialize(de)?;
        Digraph::from_arcs(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

fn components_of(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if !seen[v] && adjacent(u, v) {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// True iff `m` is a bijection from `V(a)` onto `V(b)` preserving edges in
/// both directions.
pub fn verify_isomorphism(a: &Graph, b: &Graph, m: &VertexMap) -> bool {
    if m.len() != a.n || a.n != b.n {
        return false;
    }
    let mut hit = vec![false; b.n];
    for v in 0..a.n {
        let w = m.apply(v);
        if w >= b.n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    for u in 0..a.n {
        for v in (u + 1)..a.n {
            if a.has_edge(u, v) != b.has_edge(m.apply(u), m.apply(v)) {
                return false;
            }
        }
    }
    true
}

/// Brute-force isomorphism search with degree-sequence pruning. Test/oracle
/// use only; capped at 10 vertices.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<VertexMap>> {
    const CAP: usize = 10;
    if a.n > CAP || b.n > CAP {
        return Err(Error::CapExceeded {
            what: "isomorphism search",
            size: a.n.max(b.n),
            cap: CAP,
        });
    }
    if a.n != b.n || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let deg_a: Vec<usize> = (0..a.n).map(|v| a.degree(v)).collect();
    let deg_b: Vec<usize> = (0..b.n).map(|v| b.degree(v)).collect();
    {
        let mut sa = deg_a.clone();
        let mut sb = deg_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(None);
        }
    }
    let mut map = vec![usize::MAX; a.n];
    let mut used = vec![false; b.n];
    fn extend(
        a: &Graph,
        b: &Graph,
        deg_a: &[usize],
        deg_b: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if used[w] || deg_a[v] != deg_b[w] {
                continue;
            }
            if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(a, b, deg_a, deg_b, map, used, v + 1) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
    if extend(a, b, &deg_a, &deg_b, &mut map, &mut used, 0) {
        Ok(Some(VertexMap::new(map)))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_1_23() -> Graph {
        // vertex 1 adjacent to 2 and 3, labeled 0,1,2 here
        Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap()
    }

    #[test]
    fn complement_of_complete_is_cocomplete() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.complement(), Graph::cocomplete(3).unwrap());
    }

    #[test]
    fn complement_of_star_is_single_edge() {
        let g = path_1_23();
        let c = g.complement();
        assert_eq!(c.edges(), vec![(1, 2)]);
    }

    #[test]
    fn complement_c5_is_isomorphic_to_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let comp = c5.complement();
        let iso = find_isomorphism(&c5, &comp).unwrap();
        assert!(iso.is_some());
        assert!(verify_isomorphism(&c5, &comp, &iso.unwrap()));
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_subgraph_cases() {
        let c4 = Graph::cycle(4).unwrap();
        let adjacent = c4.induced_subgraph(&VertexSet::new(vec![0, 1])).unwrap();
        assert_eq!(adjacent, Graph::complete(2).unwrap());
        let antipodal = c4.induced_subgraph(&VertexSet::new(vec![0, 2])).unwrap();
        assert_eq!(antipodal, Graph::cocomplete(2).unwrap());

        let c5 = Graph::cycle(5).unwrap();
        let path = c5.induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap();
        assert_eq!(path, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn induced_subgraph_empty_set_rejected() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(c4.induced_subgraph(&VertexSet::new(vec![])).is_err());
    }

    #[test]
    fn connected_components_cases() {
        assert_eq!(
            Graph::cocomplete(3).unwrap().connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        let k2k2 = Graph::complete(2)
            .unwrap()
            .tensor_product(&Graph::complete(2).unwrap());
        // K2 x K2 splits into two edges under pair indexing (x major):
        // {(0,0),(1,1)} = {0,3}, {(0,1),(1,0)} = {1,2}
        assert_eq!(k2k2.connected_components(), vec![vec![0, 3], vec![1, 2]]);
        assert!(Graph::cycle(6).unwrap().is_connected());
    }

    #[test]
    fn anti_connected_cases() {
        assert!(!Graph::complete(4).unwrap().is_anti_connected());
        assert!(Graph::cycle(5).unwrap().is_anti_connected());
        assert!(!Graph::cycle(4).unwrap().is_anti_connected());
        // single vertex: connected and anti-connected by convention
        let k1 = Graph::empty(1).unwrap();
        assert!(k1.is_connected());
        assert!(k1.is_anti_connected());
    }

    #[test]
    fn wreath_product_cases() {
        let k2 = Graph::complete(2).unwrap();
        let e2 = Graph::cocomplete(2).unwrap();
        let w = k2.wreath_product(&e2);
        // K2 . E2 = C4 labeled 0-2-1-3-0
        let c4_relab = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(w, c4_relab);
        let iso = find_isomorphism(&w, &Graph::cycle(4).unwrap()).unwrap();
        assert!(iso.is_some());

        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let star = Graph::empty(1).unwrap().wreath_product(&g);
        assert_eq!(star, g);

        let two_k2 = e2.wreath_product(&k2);
        assert_eq!(two_k2, Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
    }

    #[test]
    fn joined_union_cases() {
        let k2 = Graph::complete(2).unwrap();
        let e1 = Graph::empty(1).unwrap();
        assert_eq!(k2.joined_union(&[e1.clone(), e1.clone()]).unwrap(), k2);

        let e2 = Graph::cocomplete(2).unwrap();
        assert_eq!(
            k2.joined_union(&[e2.clone(), e2.clone()]).unwrap(),
            k2.wreath_product(&e2)
        );

        let k3 = Graph::complete(3).unwrap();
        let du = e2.joined_union(&[k2.clone(), k3.clone()]).unwrap();
        assert_eq!(
            du,
            Graph::from_edges(5, &[(0, 1), (2, 3), (2, 4), (3, 4)]).unwrap()
        );

        assert!(k2.joined_union(&[e2.clone()]).is_err());
    }

    #[test]
    fn joined_union_with_equal_parts_is_wreath() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let delta = Graph::from_edges(3, &[(0, 2)]).unwrap();
        let parts = vec![delta.clone(); 4];
        assert_eq!(g.joined_union(&parts).unwrap(), g.wreath_product(&delta));
    }

    #[test]
    fn tensor_product_cases() {
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let t22 = k2.tensor_product(&k2);
        assert!(!t22.is_connected());
        assert_eq!(t22.edge_count(), 2);

        let t23 = k2.tensor_product(&k3);
        let iso = find_isomorphism(&t23, &Graph::cycle(6).unwrap()).unwrap();
        assert!(iso.is_some());

        let t33 = k3.tensor_product(&k3);
        assert!(t33.is_connected());
        assert!((0..9).all(|v| t33.degree(v) == 4));
    }

    #[test]
    fn underlying_undirected_cases() {
        let cyc = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(cyc.underlying_undirected(), Graph::cycle(3).unwrap());

        let single = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert_eq!(single.underlying_undirected(), Graph::complete(2).unwrap());

        let empty = Digraph::empty(4).unwrap();
        assert_eq!(empty.underlying_undirected(), Graph::cocomplete(4).unwrap());
    }

    #[test]
    fn verify_isomorphism_cases() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(verify_isomorphism(&c4, &c4, &VertexMap::identity(4)));
        let rot = VertexMap::new(vec![1, 2, 3, 0]);
        assert!(verify_isomorphism(&c4, &c4, &rot));
        // K2.E2 pair (x,y) -> index 2x+y against C4 labeled 0-2-1-3-0
        let w = Graph::complete(2)
            .unwrap()
            .wreath_product(&Graph::cocomplete(2).unwrap());
        let c4_relab = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(verify_isomorphism(&w, &c4_relab, &VertexMap::identity(4)));
        // non-bijective map fails
        assert!(!verify_isomorphism(&c4, &c4, &VertexMap::new(vec![0, 0, 1, 2])));
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::from_edges(5, &[(0, 3), (1, 2), (3, 4)]).unwrap();
        assert_eq!(Graph::from_text(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = Graph::cycle(5).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<Graph>(&s).unwrap(), g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":3,"edges":[[0,0]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"n":3,"edges":[],"x":1}"#).is_err());
    }
}
