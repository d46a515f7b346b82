//! Loopless multigraphs with stable edge identities.
//!
//! A [`Multigraph`] is an immutable value. Vertices are dense indices in
//! `0..n`, edges are dense indices in `0..m` and carry their own identity, so
//! two parallel edges are distinguishable. Every operation that changes the
//! vertex or edge set returns a fresh graph together with an id mapping.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// A subset of the vertex set of some graph on `universe()` vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(n))
    }

    pub fn full(n: usize) -> Self {
        let mut s = FixedBitSet::with_capacity(n);
        s.insert_range(..);
        VertexSet(s)
    }

    pub fn singleton(n: usize, v: VertexId) -> Self {
        let mut s = Self::new(n);
        s.insert(v);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(n: usize, vs: I) -> Self {
        let mut s = Self::new(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Builds a set from the low `n` bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64);
        Self::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
    }

    /// Size of the ground set.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(v)
    }

    pub fn insert(&mut self, v: VertexId) {
        self.0.insert(v);
    }

    pub fn remove(&mut self, v: VertexId) {
        self.0.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut s = self.0.clone();
        s.toggle_range(..);
        VertexSet(s)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        let mut s = self.0.clone();
        s.union_with(&other.0);
        VertexSet(s)
    }

    fn check_in(&self, n: usize) -> Result<()> {
        if self.universe() != n {
            return Err(Error::Invalid(format!(
                "vertex set over {} vertices used with a graph on {n}",
                self.universe()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// The boundary `∂_G(X)` together with its defining set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub set: VertexSet,
    /// Sorted edge ids with exactly one endpoint in `set`.
    pub edges: Vec<EdgeId>,
}

impl EdgeCut {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// How surviving vertices and edges of an input graph are renumbered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reindex {
    pub vertices: Vec<Option<VertexId>>,
    pub edges: Vec<Option<EdgeId>>,
}

/// Result of identifying a vertex set into a single new vertex.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Multigraph,
    /// The new vertex `w_X`; it is always the last vertex of `graph`.
    pub merged: VertexId,
    pub map: Reindex,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<[VertexId; 2]>,
    incidence: Vec<Vec<EdgeId>>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Multigraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Multigraph { n, edges: Vec::new(), incidence: vec![Vec::new(); n] }
    }

    /// Builds a graph whose `i`-th edge is the `i`-th pair.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            edges.push([u.min(v), u.max(v)]);
        }
        Ok(Self::from_normalized(n, edges))
    }

    fn from_normalized(n: usize, edges: Vec<[VertexId; 2]>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (e, &[u, v]) in edges.iter().enumerate() {
            incidence[u].push(e);
            incidence[v].push(e);
        }
        Multigraph { n, edges, incidence }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [u, v] = self.edges[e];
        (u, v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().enumerate().map(|(e, &[u, v])| (e, u, v))
    }

    /// Incident edge ids of `v`, ascending.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn shares_vertex(&self, e: EdgeId, f: EdgeId) -> bool {
        let [a, b] = self.edges[e];
        let [c, d] = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.incidence[u].iter().filter(|&&e| self.other(e, u) == v).count()
    }

    /// Edge ids joining `u` and `v`, ascending.
    pub fn parallel_class(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.incidence[u].iter().copied().filter(|&e| self.other(e, u) == v && u != v).collect()
    }

    /// Distinct neighbours of `v`, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut ns: Vec<_> = self.incidence[v].iter().map(|&e| self.other(e, v)).collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    /// `(neighbour, multiplicity)` pairs of `v`, ascending by neighbour.
    pub fn weighted_neighbors(&self, v: VertexId) -> Vec<(VertexId, usize)> {
        let mut ns: Vec<_> = self.incidence[v].iter().map(|&e| self.other(e, v)).collect();
        ns.sort_unstable();
        let mut out: Vec<(VertexId, usize)> = Vec::new();
        for u in ns {
            match out.last_mut() {
                Some((w, c)) if *w == u => *c += 1,
                _ => out.push((u, 1)),
            }
        }
        out
    }

    /// Dense `n × n` multiplicity matrix.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let mut a = vec![vec![0; self.n]; self.n];
        for &[u, v] in &self.edges {
            a[u][v] += 1;
            a[v][u] += 1;
        }
        a
    }

    /// `Some(r)` when every vertex has degree `r`. The graph on zero vertices
    /// reports `Some(0)`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.incidence.first().map_or(0, Vec::len);
        self.incidence.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_regular(&self, r: usize) -> bool {
        self.incidence.iter().all(|l| l.len() == r)
    }

    pub fn is_simple(&self) -> bool {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    pub fn max_multiplicity(&self) -> usize {
        (0..self.n)
            .flat_map(|v| self.weighted_neighbors(v).into_iter().map(|(_, c)| c))
            .max()
            .unwrap_or(0)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e >= self.m() {
            return Err(Error::EdgeOutOfRange { edge: e, m: self.m() });
        }
        Ok(())
    }

    fn check_proper(&self, x: &VertexSet) -> Result<()> {
        x.check_in(self.n)?;
        if x.is_empty() || x.is_full() {
            return Err(Error::ImproperSubset);
        }
        Ok(())
    }

    /// Size of `∂(X)` without materializing it. `X` may be empty or full.
    pub fn boundary_size(&self, x: &VertexSet) -> usize {
        self.edges.iter().filter(|&&[u, v]| x.contains(u) != x.contains(v)).count()
    }

    /// `∂_G(X)` for a non-empty proper subset `X`.
    pub fn boundary(&self, x: &VertexSet) -> Result<EdgeCut> {
        self.check_proper(x)?;
        let edges =
            self.edges().filter(|&(_, u, v)| x.contains(u) != x.contains(v)).map(|(e, ..)| e).collect();
        Ok(EdgeCut { set: x.clone(), edges })
    }

    /// `[X, Y]_G`, the edges with one end in `X` and the other in `Y`.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> Result<Vec<EdgeId>> {
        x.check_in(self.n)?;
        y.check_in(self.n)?;
        if !x.is_disjoint(y) {
            return Err(Error::NotDisjoint);
        }
        Ok(self
            .edges()
            .filter(|&(_, u, v)| (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u)))
            .map(|(e, ..)| e)
            .collect())
    }

    /// `G/X`: identify `X` into a new last vertex and drop the loops.
    pub fn contract(&self, x: &VertexSet) -> Result<Contraction> {
        self.check_proper(x)?;
        let mut vmap = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !x.contains(v) {
                vmap[v] = Some(next);
                next += 1;
            }
        }
        let merged = next;
        for v in x.iter() {
            vmap[v] = Some(merged);
        }
        let mut emap = vec![None; self.m()];
        let mut edges = Vec::new();
        for (e, u, v) in self.edges() {
            let (a, b) = (vmap[u].unwrap(), vmap[v].unwrap());
            if a != b {
                emap[e] = Some(edges.len());
                edges.push([a.min(b), a.max(b)]);
            }
        }
        let graph = Self::from_normalized(merged + 1, edges);
        Ok(Contraction { graph, merged, map: Reindex { vertices: vmap, edges: emap } })
    }

    /// `G - X`.
    pub fn delete_vertices(&self, x: &VertexSet) -> Result<(Multigraph, Reindex)> {
        x.check_in(self.n)?;
        self.induced_with_map(&x.complement())
    }

    /// `G[X]`.
    pub fn induced(&self, x: &VertexSet) -> Result<Multigraph> {
        x.check_in(self.n)?;
        Ok(self.induced_with_map(x)?.0)
    }

    pub fn induced_with_map(&self, x: &VertexSet) -> Result<(Multigraph, Reindex)> {
        x.check_in(self.n)?;
        let mut vmap = vec![None; self.n];
        for (i, v) in x.iter().enumerate() {
            vmap[v] = Some(i);
        }
        let mut emap = vec![None; self.m()];
        let mut edges = Vec::new();
        for (e, u, v) in self.edges() {
            if let (Some(a), Some(b)) = (vmap[u], vmap[v]) {
                emap[e] = Some(edges.len());
                edges.push([a, b]);
            }
        }
        let g = Self::from_normalized(x.len(), edges);
        Ok((g, Reindex { vertices: vmap, edges: emap }))
    }

    /// `G - F`; vertex ids are unchanged.
    pub fn delete_edges(&self, f: &[EdgeId]) -> Result<(Multigraph, Vec<Option<EdgeId>>)> {
        let mut gone = vec![false; self.m()];
        for &e in f {
            self.check_edge(e)?;
            gone[e] = true;
        }
        let mut emap = vec![None; self.m()];
        let mut edges = Vec::new();
        for (e, &uv) in self.edges.iter().enumerate() {
            if !gone[e] {
                emap[e] = Some(edges.len());
                edges.push(uv);
            }
        }
        Ok((Self::from_normalized(self.n, edges), emap))
    }

    /// `G + F`: new edges get ids `m, m+1, ...` in the given order.
    pub fn add_edges(&self, pairs: &[(VertexId, VertexId)]) -> Result<Multigraph> {
        let all = self.edges().map(|(_, u, v)| (u, v)).chain(pairs.iter().copied());
        Self::from_edges(self.n, all)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()` and
    /// its edges by `self.m()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&[u, v]| [u + off, v + off]));
        Self::from_normalized(self.n + other.n, edges)
    }

    /// Vertex `v` becomes `perm[v]`; edge ids are kept.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Multigraph> {
        if perm.len() != self.n {
            return Err(Error::Invalid("permutation length differs from order".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::Invalid("not a permutation".into()));
            }
        }
        Self::from_edges(self.n, self.edges().map(|(_, u, v)| (perm[u], perm[v])))
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut set = VertexSet::new(self.n);
            let mut queue = VecDeque::from([s]);
            comp[s] = id;
            while let Some(v) = queue.pop_front() {
                set.insert(v);
                for &e in &self.incidence[v] {
                    let w = self.other(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        queue.push_back(w);
                    }
                }
            }
            out.push(set);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connectivity of the spanning subgraph that keeps only edges where
    /// `keep(e)` holds.
    pub fn is_connected_without(&self, keep: impl Fn(EdgeId) -> bool) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &e in &self.incidence[v] {
                if !keep(e) {
                    continue;
                }
                let w = self.other(e, v);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{petersen, petersen_pms};

    fn outer() -> VertexSet {
        VertexSet::from_vertices(10, 0..5)
    }

    #[test]
    fn boundary_examples() {
        let p = petersen();
        assert_eq!(p.boundary(&VertexSet::singleton(10, 3)).unwrap().len(), 3);
        let spokes = p.boundary(&outer()).unwrap();
        assert_eq!(spokes.edges, vec![5, 6, 7, 8, 9]);
        let m = &petersen_pms()[0];
        let pm = p.add_edges(&m.pairs(&p)).unwrap();
        assert_eq!(pm.boundary(&VertexSet::singleton(10, 0)).unwrap().len(), 4);
    }

    #[test]
    fn boundary_rejects_empty_and_full() {
        let p = petersen();
        assert_eq!(p.boundary(&VertexSet::new(10)), Err(Error::ImproperSubset));
        assert_eq!(p.boundary(&VertexSet::full(10)), Err(Error::ImproperSubset));
        assert!(p.contract(&VertexSet::new(10)).is_err());
    }

    #[test]
    fn contract_outer_cycle() {
        let p = petersen();
        let c = p.contract(&outer()).unwrap();
        assert_eq!(c.graph.n(), 6);
        assert_eq!(c.merged, 5);
        assert_eq!(c.graph.degree(5), 5);
        // the inner 5-cycle survives on the first five vertices
        for v in 0..5 {
            assert_eq!(c.graph.degree(v), 3);
            assert_eq!(c.graph.multiplicity(v, 5), 1);
        }
        assert_eq!(c.graph.m(), 10);
    }

    #[test]
    fn contract_all_but_one() {
        let p = petersen();
        let x = VertexSet::singleton(10, 7).complement();
        let c = p.contract(&x).unwrap();
        assert_eq!(c.graph.n(), 2);
        assert_eq!(c.graph.multiplicity(0, 1), 3);
    }

    #[test]
    fn delete_perfect_matching_leaves_two_pentagons() {
        let p = petersen();
        let m = &petersen_pms()[0];
        let (g, emap) = p.delete_edges(&m.edges).unwrap();
        assert!(g.is_regular(2));
        assert_eq!(g.m(), 10);
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 5));
        assert_eq!(emap.iter().filter(|e| e.is_none()).count(), 5);
    }

    #[test]
    fn induced_on_nothing_is_empty() {
        let g = petersen().induced(&VertexSet::new(10)).unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
        assert!(g.is_connected());
        assert!(Multigraph::empty(0).is_connected());
    }

    #[test]
    fn add_matching_gives_four_regular() {
        let p = petersen();
        let m = &petersen_pms()[2];
        let g = p.add_edges(&m.pairs(&p)).unwrap();
        assert!(g.is_regular(4));
        assert_eq!(g.m(), 20);
    }

    #[test]
    fn edges_between_and_errors() {
        let p = petersen();
        let x = outer();
        let y = x.complement();
        assert_eq!(p.edges_between(&x, &y).unwrap(), vec![5, 6, 7, 8, 9]);
        assert_eq!(p.edges_between(&x, &x), Err(Error::NotDisjoint));
        assert!(matches!(p.delete_edges(&[15]), Err(Error::EdgeOutOfRange { .. })));
        assert!(matches!(p.add_edges(&[(0, 10)]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(p.add_edges(&[(4, 4)]), Err(Error::Loop(4)));
    }

    #[test]
    fn components_count_isolated_vertices() {
        let g = Multigraph::from_edges(5, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.components().len(), 4);
        assert!(!g.is_connected());
    }
}
