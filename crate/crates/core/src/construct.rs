//! Fixed graphs and the operations that build new r-graphs from old ones.
//!
//! Petersen labelling: outer cycle `(i, i+1 mod 5)` is edges 0..5, spokes
//! `(i, i+5)` are edges 5..10, inner edges `(5+i, 5+(i+2 mod 5))` are edges
//! 10..15. Its perfect matchings `M1..M6` are indexed 0..6 in lexicographic
//! order of their sorted edge-id lists.

use serde::Serialize;

use crate::cuts::{is_r_graph, min_odd_cut_within, BRUTE_FORCE_MAX};
use crate::error::{Error, Result};
use crate::factors::{class1_decomposition, perfect_matchings, PerfectMatching, Search};
use crate::graph::{EdgeId, Multigraph, VertexId, VertexSet};
use crate::hcoloring::{verify_hcoloring, HColoring};

pub fn petersen() -> Multigraph {
    let mut pairs = Vec::with_capacity(15);
    pairs.extend((0..5).map(|i| (i, (i + 1) % 5)));
    pairs.extend((0..5).map(|i| (i, i + 5)));
    pairs.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Multigraph::from_edges(10, pairs).expect("fixed graph")
}

/// The six perfect matchings of [`petersen`], in the fixed order.
pub fn petersen_pms() -> Vec<PerfectMatching> {
    let p = petersen();
    let mut pms: Vec<PerfectMatching> = perfect_matchings(&p).collect();
    pms.sort();
    pms
}

pub fn complete_graph(n: usize) -> Multigraph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Multigraph::from_edges(n, pairs).expect("valid")
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let pairs = (0..a).flat_map(|u| (0..b).map(move |j| (u, a + j)));
    Multigraph::from_edges(a + b, pairs).expect("valid")
}

/// Cycle of length `n ≥ 3`, edge `i` joining `i` and `i+1 mod n`.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid")
}

/// Two vertices joined by `r` parallel edges.
pub fn dipole(r: usize) -> Multigraph {
    Multigraph::from_edges(2, std::iter::repeat_n((0, 1), r)).expect("valid")
}

/// A partition into six parts, compared as a multiset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition6([u32; 6]);

impl Partition6 {
    /// Sorts the parts decreasingly.
    pub fn new(mut parts: [u32; 6]) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition6(parts)
    }

    pub fn parts(&self) -> [u32; 6] {
        self.0
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// `P` plus `counts[i]` parallel copies of `M_{i+1}`; regular of degree
/// `3 + Σ counts`. The extra edges follow `E(P)` grouped by matching.
pub fn p_power(counts: &[u32; 6]) -> Result<Multigraph> {
    let p = petersen();
    let pms = petersen_pms();
    let mut extra = Vec::new();
    for (m, &c) in pms.iter().zip(counts) {
        for _ in 0..c {
            extra.extend(m.pairs(&p));
        }
    }
    p.add_edges(&extra)
}

/// Every composition of `total` into six non-negative parts, in
/// lexicographic order.
pub fn compositions6(total: u32) -> Vec<[u32; 6]> {
    fn rec(i: usize, left: u32, cur: &mut [u32; 6], out: &mut Vec<[u32; 6]>) {
        if i == 5 {
            cur[5] = left;
            out.push(*cur);
            return;
        }
        for x in 0..=left {
            cur[i] = x;
            rec(i + 1, left - x, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, total, &mut [0; 6], &mut out);
    out
}

/// `G + M` for a perfect matching `M` of the complete graph on `V(G)`.
pub fn add_one_factor(g: &Multigraph, m: &[(VertexId, VertexId)]) -> Result<Multigraph> {
    let mut hit = vec![0; g.n()];
    for &(u, v) in m {
        if u >= g.n() || v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n: g.n() });
        }
        hit[u] += 1;
        hit[v] += 1;
    }
    if hit.iter().any(|&h| h != 1) {
        return Err(Error::Invalid("pairs do not form a perfect matching of the vertex set".into()));
    }
    g.add_edges(m)
}

/// All perfect matchings of `K_n`, each as pairs `(u, v)` with `u < v`.
pub fn one_factors(n: usize) -> Vec<Vec<(VertexId, VertexId)>> {
    fn rec(free: &mut Vec<VertexId>, cur: &mut Vec<(VertexId, VertexId)>, out: &mut Vec<Vec<(VertexId, VertexId)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let u = free.remove(0);
        for i in 0..free.len() {
            let v = free.remove(i);
            cur.push((u, v));
            rec(free, cur, out);
            cur.pop();
            free.insert(i, v);
        }
        free.insert(0, u);
    }
    let mut out = Vec::new();
    if n % 2 == 0 {
        rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    }
    out
}

/// One lifting: edges `e1 = xy` and `e2 = xz` replaced by `created = yz`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftingStep {
    pub x: VertexId,
    pub e1: EdgeId,
    pub e2: EdgeId,
    /// Endpoints of the new edge.
    pub y: VertexId,
    pub z: VertexId,
    /// Id of the new edge in the resulting graph.
    pub created: EdgeId,
    /// `x` was removed because its degree dropped to 0.
    pub removed_x: bool,
}

/// `G(e1, e2)`. The new edge takes the last id; remaining edges keep their
/// relative order. If `x` becomes isolated it is deleted and later vertices
/// shift down by one.
pub fn lift(g: &Multigraph, e1: EdgeId, e2: EdgeId) -> Result<(Multigraph, LiftingStep)> {
    for e in [e1, e2] {
        if e >= g.m() {
            return Err(Error::EdgeOutOfRange { edge: e, m: g.m() });
        }
    }
    if e1 == e2 {
        return Err(Error::Invalid("lifted edges must be distinct".into()));
    }
    let (a, b) = g.endpoints(e1);
    let (c, d) = g.endpoints(e2);
    let shared: Vec<VertexId> = [a, b].into_iter().filter(|&v| v == c || v == d).collect();
    if shared.len() != 1 {
        return Err(Error::Invalid("lifted edges must share exactly one vertex".into()));
    }
    let x = shared[0];
    let y = g.other(e1, x);
    let z = g.other(e2, x);
    let (rest, _) = g.delete_edges(&[e1, e2])?;
    let mut h = rest.add_edges(&[(y, z)])?;
    let created = h.m() - 1;
    let removed_x = h.degree(x) == 0;
    let (mut y2, mut z2) = (y, z);
    if removed_x {
        let (without, map) = h.delete_vertices(&VertexSet::singleton(h.n(), x))?;
        h = without;
        y2 = map.vertices[y].expect("kept");
        z2 = map.vertices[z].expect("kept");
    }
    Ok((h, LiftingStep { x, e1, e2, y: y2, z: z2, created, removed_x }))
}

/// Contracts `X` to a vertex `w` and lifts pairs of consecutive edges at `w`
/// until the result is an `r`-graph: `(|∂X| - r) / 2` lifts when `|X|` is
/// odd and `|∂X| / 2` when it is even, in which case `w` disappears.
///
/// Each step fixes the incidence order `e_0..e_{d-1}` at `w` and takes the
/// first `i` such that lifting `e_i, e_{i+1 mod d}` keeps the graph
/// connected and every odd set avoiding `w` keeps at least `r` boundary
/// edges.
pub fn lift_to_rgraph(g: &Multigraph, x: &VertexSet, r: usize) -> Result<(Multigraph, Vec<LiftingStep>)> {
    if x.universe() != g.n() || x.is_empty() || x.is_full() {
        return Err(Error::ImproperSubset);
    }
    if !g.is_connected() || !is_r_graph(g, r) {
        return Err(Error::Hypothesis(format!("input must be a connected {r}-graph")));
    }
    let c = g.contract(x)?;
    let mut h = c.graph;
    if h.n() - 1 > BRUTE_FORCE_MAX {
        return Err(Error::OrderBound { n: h.n() - 1, max: BRUTE_FORCE_MAX, what: "lifting verification" });
    }
    let w = c.merged;
    let target = if x.len() % 2 == 1 { r } else { 0 };
    let mut steps = Vec::new();
    while w < h.n() && h.degree(w) > target {
        let star = h.incident(w).to_vec();
        let d = star.len();
        let mut next = None;
        for i in 0..d {
            let (e1, e2) = (star[i], star[(i + 1) % d]);
            if h.other(e1, w) == h.other(e2, w) {
                continue;
            }
            let (cand, step) = lift(&h, e1, e2)?;
            if !cand.is_connected() {
                continue;
            }
            // w is the last vertex, so the others keep their ids
            let rest = if step.removed_x {
                VertexSet::full(cand.n())
            } else {
                VertexSet::singleton(cand.n(), w).complement()
            };
            let ok = match min_odd_cut_within(&cand, &rest)? {
                None => true,
                Some(cert) => cert.value >= r,
            };
            if ok {
                next = Some((cand, step));
                break;
            }
        }
        let Some((cand, step)) = next else {
            return Err(Error::Invalid("no admissible lifting pair".into()));
        };
        h = cand;
        steps.push(step);
    }
    Ok((h, steps))
}

/// Bookkeeping for one vertex expanded into a `K_{r,r-1}` gadget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeredithStep {
    /// The expanded vertex; its id is reused by `a[0]`.
    pub vertex: VertexId,
    /// Former star of `vertex`, in incidence order; these edges keep their ids.
    pub star: Vec<EdgeId>,
    /// `pairing[k]` is the gadget side vertex receiving `star[k]`.
    pub pairing: Vec<usize>,
    /// The `r` side of the gadget.
    pub a: Vec<VertexId>,
    /// The `r - 1` side of the gadget.
    pub b: Vec<VertexId>,
    /// `gadget_edges[i * (r - 1) + j]` joins `a[i]` and `b[j]`.
    pub gadget_edges: Vec<EdgeId>,
}

/// Replaces `v` by a `K_{r,r-1}` gadget whose `r`-side receives the former
/// star of `v` according to `pairing`. Edge ids of `g` are preserved and the
/// gadget edges are appended. Vertex `v` becomes `a[0]`; the other gadget
/// vertices are appended.
pub fn meredith_extension(g: &Multigraph, v: VertexId, pairing: &[usize]) -> Result<(Multigraph, MeredithStep)> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let r = g.regular_degree().ok_or(Error::Invalid("graph is not regular".into()))?;
    if r < 2 {
        return Err(Error::Invalid("degree must be at least 2".into()));
    }
    let mut seen = vec![false; r];
    if pairing.len() != r || pairing.iter().any(|&p| p >= r || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::Invalid("pairing must be a permutation of the gadget side".into()));
    }
    let n = g.n();
    let a: Vec<VertexId> = std::iter::once(v).chain(n..n + r - 1).collect();
    let b: Vec<VertexId> = (n + r - 1..n + 2 * r - 2).collect();
    let star = g.incident(v).to_vec();
    let mut pairs: Vec<(VertexId, VertexId)> = g.edges().map(|(_, x, y)| (x, y)).collect();
    for (k, &e) in star.iter().enumerate() {
        let w = g.other(e, v);
        pairs[e] = (w, a[pairing[k]]);
    }
    let m = pairs.len();
    for &ai in &a {
        for &bj in &b {
            pairs.push((ai, bj));
        }
    }
    let h = Multigraph::from_edges(n + 2 * r - 2, pairs)?;
    let gadget_edges = (m..h.m()).collect();
    Ok((h, MeredithStep { vertex: v, star, pairing: pairing.to_vec(), a, b, gadget_edges }))
}

/// Expands every vertex of `g` in turn with the identity pairing.
pub fn meredith_all(g: &Multigraph) -> Result<(Multigraph, Vec<MeredithStep>)> {
    let r = g.regular_degree().ok_or(Error::Invalid("graph is not regular".into()))?;
    let identity: Vec<usize> = (0..r).collect();
    let mut h = g.clone();
    let mut log = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let (next, step) = meredith_extension(&h, v, &identity)?;
        h = next;
        log.push(step);
    }
    Ok((h, log))
}

/// The `g`-colouring of a Meredith expansion of `g`: original edges map to
/// themselves, every gadget vertex maps to the vertex it replaced, and
/// the gadget edge `a_i b_j` takes `star[(c_i + j + 1) mod r]` where
/// `c_i` is the star position paired with `a_i`.
pub fn meredith_natural_coloring(g: &Multigraph, expanded: &Multigraph, log: &[MeredithStep]) -> Result<HColoring> {
    let r = g.regular_degree().ok_or(Error::Invalid("graph is not regular".into()))?;
    let mut edge_map: Vec<EdgeId> = (0..expanded.m()).collect();
    let mut vertex_map: Vec<VertexId> = (0..expanded.n()).collect();
    for step in log {
        if step.star.len() != r || step.a.len() != r || step.b.len() + 1 != r {
            return Err(Error::Invalid("log does not match the degree".into()));
        }
        let mut c = vec![0; r];
        for (k, &p) in step.pairing.iter().enumerate() {
            c[p] = k;
        }
        for &x in step.a.iter().chain(&step.b) {
            vertex_map[x] = step.vertex;
        }
        for i in 0..r {
            for j in 0..r - 1 {
                edge_map[step.gadget_edges[i * (r - 1) + j]] = step.star[(c[i] + j + 1) % r];
            }
        }
    }
    let coloring = HColoring { edge_map, vertex_map };
    verify_hcoloring(expanded, g, &coloring).map_err(|e| Error::Invalid(format!("natural colouring rejected: {e}")))?;
    Ok(coloring)
}

/// Which new edges an edge replacement adds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Wiring {
    /// Lower endpoints together and upper endpoints together.
    Straight,
    /// Lower endpoint of `e` to upper endpoint of `e2` and vice versa.
    Crossed,
}

/// `(G, e) | (G2, e2)`: delete `e` and `e2`, then join their endpoints with
/// two new edges. Vertices of `g2` follow those of `g`. Edge order: `g`
/// without `e`, `g2` without `e2`, then the two new edges.
pub fn replace_edge(g: &Multigraph, e: EdgeId, g2: &Multigraph, e2: EdgeId, wiring: Wiring) -> Result<Multigraph> {
    let r = g.regular_degree().ok_or(Error::Invalid("first graph is not regular".into()))?;
    if g2.regular_degree() != Some(r) {
        return Err(Error::DegreeMismatch(r, g2.regular_degree().unwrap_or(usize::MAX)));
    }
    if e >= g.m() {
        return Err(Error::EdgeOutOfRange { edge: e, m: g.m() });
    }
    if e2 >= g2.m() {
        return Err(Error::EdgeOutOfRange { edge: e2, m: g2.m() });
    }
    let n = g.n();
    let (a, b) = g.endpoints(e);
    let (c, d) = g2.endpoints(e2);
    let mut pairs: Vec<(VertexId, VertexId)> = g.edges().filter(|&(f, _, _)| f != e).map(|(_, x, y)| (x, y)).collect();
    pairs.extend(g2.edges().filter(|&(f, _, _)| f != e2).map(|(_, x, y)| (x + n, y + n)));
    match wiring {
        Wiring::Straight => pairs.extend([(a, c + n), (b, d + n)]),
        Wiring::Crossed => pairs.extend([(a, d + n), (b, c + n)]),
    }
    Multigraph::from_edges(n + g2.n(), pairs)
}

/// `G | (G2, e2)`: every edge of `g` replaced by its own copy of
/// `(G2, e2)`. Copy `k` occupies vertices `n + k·|V(G2)|..`.
pub fn replace_all(g: &Multigraph, g2: &Multigraph, e2: EdgeId, wirings: &[Wiring]) -> Result<Multigraph> {
    let r = g.regular_degree().ok_or(Error::Invalid("first graph is not regular".into()))?;
    if g2.regular_degree() != Some(r) {
        return Err(Error::DegreeMismatch(r, g2.regular_degree().unwrap_or(usize::MAX)));
    }
    if e2 >= g2.m() {
        return Err(Error::EdgeOutOfRange { edge: e2, m: g2.m() });
    }
    if wirings.len() != g.m() {
        return Err(Error::Invalid("one wiring per edge required".into()));
    }
    let (c, d) = g2.endpoints(e2);
    let mut pairs = Vec::new();
    for (k, (_, a, b)) in g.edges().enumerate() {
        let off = g.n() + k * g2.n();
        pairs.extend(g2.edges().filter(|&(f, _, _)| f != e2).map(|(_, x, y)| (x + off, y + off)));
        match wirings[k] {
            Wiring::Straight => pairs.extend([(a, c + off), (b, d + off)]),
            Wiring::Crossed => pairs.extend([(a, d + off), (b, c + off)]),
        }
    }
    Multigraph::from_edges(g.n() + g.m() * g2.n(), pairs)
}

/// Colours a class 1 graph with the star of `u` in `h`: the `i`-th colour
/// class goes to the `i`-th edge at `u`.
pub fn class1_coloring(g: &Multigraph, h: &Multigraph, u: VertexId) -> Result<HColoring> {
    let r = g.regular_degree().ok_or(Error::Invalid("graph is not regular".into()))?;
    if u >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: h.n() });
    }
    if h.degree(u) != r {
        return Err(Error::DegreeMismatch(r, h.degree(u)));
    }
    let classes = match class1_decomposition(g, r, None)? {
        Search::Found(c) => c,
        _ => return Err(Error::Class2),
    };
    let star = h.incident(u);
    let mut edge_map = vec![0; g.m()];
    for (i, m) in classes.iter().enumerate() {
        for &e in &m.edges {
            edge_map[e] = star[i];
        }
    }
    let coloring = HColoring { edge_map, vertex_map: vec![u; g.n()] };
    verify_hcoloring(g, h, &coloring).map_err(|e| Error::Invalid(format!("colouring rejected: {e}")))?;
    Ok(coloring)
}

/// The smallest simple class 1 `r`-graph used as a building block:
/// `K_{r+1}` for odd `r`, `K_{r+2}` minus the matching `{2i, 2i+1}` for even `r`.
pub fn smallest_simple_class1(r: usize) -> Multigraph {
    if r % 2 == 1 {
        complete_graph(r + 1)
    } else {
        let n = r + 2;
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !(u % 2 == 0 && v == u + 1));
        Multigraph::from_edges(n, pairs).expect("valid")
    }
}

/// Simple `r`-graph with `r - 2` disjoint perfect matchings: start from
/// `P + (r-3) M1`, then replace the lower endpoint of each `M1` edge by
/// `H - v` with `H` from [`smallest_simple_class1`] and `v = 0`. The
/// former edges of a replaced vertex are attached, in id order, to the
/// neighbours of `v` in increasing order.
pub fn simple_class2(r: usize) -> Result<Multigraph> {
    if r < 4 {
        return Err(Error::Invalid("construction needs r >= 4".into()));
    }
    let mut counts = [0u32; 6];
    counts[0] = (r - 3) as u32;
    let g = p_power(&counts)?;
    let m1 = &petersen_pms()[0];
    let h = smallest_simple_class1(r);
    let (hv, map) = h.delete_vertices(&VertexSet::singleton(h.n(), 0))?;
    let ports: Vec<VertexId> = h.neighbors(0).into_iter().map(|x| map.vertices[x].expect("kept")).collect();
    debug_assert_eq!(ports.len(), r);

    let replaced: Vec<VertexId> = m1.pairs(&petersen()).into_iter().map(|(u, v)| u.min(v)).collect();
    // new ids: kept vertices of g first, then one copy of H - v per replaced vertex
    let mut new_id = vec![usize::MAX; g.n()];
    let mut next = 0;
    for (v, id) in new_id.iter_mut().enumerate() {
        if !replaced.contains(&v) {
            *id = next;
            next += 1;
        }
    }
    let base: Vec<usize> = (0..replaced.len()).map(|k| next + k * hv.n()).collect();
    let total = next + replaced.len() * hv.n();
    // which port each endpoint of an edge of g uses at a replaced vertex
    let mut port_of = vec![[usize::MAX; 2]; g.m()];
    for (k, &x) in replaced.iter().enumerate() {
        for (i, &e) in g.incident(x).iter().enumerate() {
            let side = usize::from(g.endpoints(e).1 == x);
            port_of[e][side] = base[k] + ports[i];
        }
    }
    let mut pairs = Vec::new();
    for (e, u, v) in g.edges() {
        let a = if port_of[e][0] != usize::MAX { port_of[e][0] } else { new_id[u] };
        let b = if port_of[e][1] != usize::MAX { port_of[e][1] } else { new_id[v] };
        pairs.push((a, b));
    }
    for &b in &base {
        pairs.extend(hv.edges().map(|(_, x, y)| (x + b, y + b)));
    }
    Multigraph::from_edges(total, pairs)
}

/// Number of partitions of `n` into at most `k` parts.
pub fn partitions_count(n: usize, k: usize) -> u64 {
    // table[j][i]: partitions of i into parts of size at most j
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for j in 1..=k {
        for i in j..=n {
            table[i] += table[i - j];
        }
    }
    table[n]
}

/// The partitions of `n` into at most `k` parts, each padded with zeros to
/// length `k` and sorted decreasingly.
pub fn partitions_list(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            let mut p = cur.clone();
            p.resize(cur.len() + slots, 0);
            out.push(p);
            return;
        }
        if slots == 0 {
            return;
        }
        for x in (1..=max.min(left)).rev() {
            cur.push(x);
            rec(left - x, x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, k, &mut Vec::new(), &mut out);
    out
}

/// A same-partition pair `P + t N1 + 2 N2 + N3 + N4` and
/// `P + t N1 + 2 N2 + N3 + N5` where the edge of `N1 ∩ N2` meets the edge
/// of `N3 ∩ N4` but not the edge of `N3 ∩ N5`.
#[derive(Clone, Debug, Serialize)]
pub struct SamePartitionPair {
    /// Indices of `N1..N5` into [`petersen_pms`].
    pub matchings: [usize; 5],
    pub counts1: [u32; 6],
    pub counts2: [u32; 6],
    #[serde(skip)]
    pub first: Multigraph,
    #[serde(skip)]
    pub second: Multigraph,
}

/// Finds the first admissible `(N1, ..., N5)` in lexicographic order.
pub fn same_partition_pair(t: u32) -> Result<Option<SamePartitionPair>> {
    let p = petersen();
    let pms = petersen_pms();
    let common = |i: usize, j: usize| -> EdgeId {
        let e: Vec<EdgeId> = pms[i].edges.iter().copied().filter(|e| pms[j].contains(*e)).collect();
        debug_assert_eq!(e.len(), 1);
        e[0]
    };
    let meet = |e: EdgeId, f: EdgeId| e != f && p.shares_vertex(e, f);
    for n1 in 0..6 {
        for n2 in 0..6 {
            for n3 in 0..6 {
                for n4 in 0..6 {
                    for n5 in 0..6 {
                        let idx = [n1, n2, n3, n4, n5];
                        if (0..5).any(|i| (i + 1..5).any(|j| idx[i] == idx[j])) {
                            continue;
                        }
                        let uv = common(n1, n2);
                        if !meet(uv, common(n3, n4)) || meet(uv, common(n3, n5)) {
                            continue;
                        }
                        let mut c1 = [0u32; 6];
                        c1[n1] += t;
                        c1[n2] += 2;
                        c1[n3] += 1;
                        let mut c2 = c1;
                        c1[n4] += 1;
                        c2[n5] += 1;
                        return Ok(Some(SamePartitionPair {
                            matchings: idx,
                            counts1: c1,
                            counts2: c2,
                            first: p_power(&c1)?,
                            second: p_power(&c2)?,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}
