//! H-colourings: maps `f: E(G) → E(H)` sending every vertex star of `G`
//! bijectively onto a vertex star of `H`.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cuts::{as_edge_cut, tight_cuts, two_edge_cuts, BRUTE_FORCE_MAX};
use crate::error::{Error, Result};
use crate::factors::{perfect_2_matching, perfect_matchings};
use crate::graph::{EdgeId, Multigraph, VertexId, VertexSet};
use crate::iso::automorphisms;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HColoring {
    /// `f`, indexed by edges of `G`.
    pub edge_map: Vec<EdgeId>,
    /// `f_V`, indexed by vertices of `G`.
    pub vertex_map: Vec<VertexId>,
}

impl HColoring {
    /// `self` followed by `outer`: colours `G` by `K` when `self` colours
    /// `G` by `H` and `outer` colours `H` by `K`.
    pub fn then(&self, outer: &HColoring) -> HColoring {
        HColoring {
            edge_map: self.edge_map.iter().map(|&e| outer.edge_map[e]).collect(),
            vertex_map: self.vertex_map.iter().map(|&v| outer.vertex_map[v]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    WrongLength,
    OutOfRange,
    AdjacentCollision { e: EdgeId, f: EdgeId },
    VertexMismatch { v: VertexId },
    VertexMapInconsistent { v: VertexId },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::WrongLength => "wrong-length",
            Violation::OutOfRange => "out-of-range",
            Violation::AdjacentCollision { .. } => "adjacent-collision",
            Violation::VertexMismatch { .. } => "vertex-mismatch",
            Violation::VertexMapInconsistent { .. } => "vertex-map-inconsistent",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AdjacentCollision { e, f: e2 } => write!(f, "adjacent-collision at edges {e} and {e2}"),
            Violation::VertexMismatch { v } => write!(f, "vertex-mismatch at vertex {v}"),
            Violation::VertexMapInconsistent { v } => write!(f, "vertex-map-inconsistent at vertex {v}"),
            other => f.write_str(other.code()),
        }
    }
}

fn sorted_star(h: &Multigraph, u: VertexId) -> Vec<EdgeId> {
    h.incident(u).to_vec()
}

/// Checks properness, the star condition and the recorded `f_V`.
pub fn verify_hcoloring(g: &Multigraph, h: &Multigraph, c: &HColoring) -> std::result::Result<(), Violation> {
    if c.edge_map.len() != g.m() || c.vertex_map.len() != g.n() {
        return Err(Violation::WrongLength);
    }
    if c.edge_map.iter().any(|&e| e >= h.m()) || c.vertex_map.iter().any(|&u| u >= h.n()) {
        return Err(Violation::OutOfRange);
    }
    for v in 0..g.n() {
        let inc = g.incident(v);
        for (i, &e) in inc.iter().enumerate() {
            if let Some(&f) = inc[i + 1..].iter().find(|&&f| c.edge_map[f] == c.edge_map[e]) {
                return Err(Violation::AdjacentCollision { e, f });
            }
        }
    }
    for v in 0..g.n() {
        let mut images: Vec<EdgeId> = g.incident(v).iter().map(|&e| c.edge_map[e]).collect();
        images.sort_unstable();
        if images == sorted_star(h, c.vertex_map[v]) {
            continue;
        }
        if (0..h.n()).any(|u| images == sorted_star(h, u)) {
            return Err(Violation::VertexMapInconsistent { v });
        }
        return Err(Violation::VertexMismatch { v });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// Stop at the first colouring.
    First,
    /// Count all edge maps.
    Count,
    /// One colouring per orbit of `Aut(H)` acting on edge maps.
    AllModAut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HSearchOutcome {
    pub mode: Mode,
    /// First mode: at most one; AllModAut: the representatives.
    pub colorings: Vec<HColoring>,
    /// Edge maps found (every one in Count mode).
    pub count: u64,
    /// `false` when the node cap ran out; nothing is then decided.
    pub complete: bool,
    pub nodes: u64,
}

impl HSearchOutcome {
    /// `Some(found)` for a decided First search.
    pub fn decided(&self) -> Option<bool> {
        if !self.colorings.is_empty() {
            Some(true)
        } else if self.complete {
            Some(false)
        } else {
            None
        }
    }
}

/// Default node cap for colouring searches.
pub const DEFAULT_NODE_CAP: u64 = 100_000_000;

struct Finder<'a> {
    g: &'a Multigraph,
    h: &'a Multigraph,
    mode: Mode,
    cap: u64,
    f: Vec<Option<EdgeId>>,
    fv: Vec<Option<VertexId>>,
    /// `u` is the least vertex with its star (parallel-only `H` has twins).
    star_rep: Vec<bool>,
    first_choices: Option<Vec<VertexId>>,
    found: Vec<HColoring>,
    count: u64,
    nodes: u64,
    capped: bool,
}

impl Finder<'_> {
    fn next_vertex(&self) -> Option<VertexId> {
        (0..self.g.n())
            .filter(|&v| self.fv[v].is_none())
            .max_by_key(|&v| (self.g.incident(v).iter().filter(|&&e| self.f[e].is_some()).count(), usize::MAX - v))
    }

    /// Assigned images at `w` are distinct and share an endpoint.
    fn consistent_at(&self, w: VertexId) -> bool {
        let mut imgs: Vec<EdgeId> = self.g.incident(w).iter().filter_map(|&e| self.f[e]).collect();
        let k = imgs.len();
        imgs.sort_unstable();
        imgs.dedup();
        if imgs.len() != k {
            return false;
        }
        let Some(&first) = imgs.first() else { return true };
        let (a, b) = self.h.endpoints(first);
        [a, b].iter().any(|&u| imgs.iter().all(|&e| {
            let (x, y) = self.h.endpoints(e);
            x == u || y == u
        }))
    }

    /// Returns `true` to stop.
    fn search(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.cap {
            self.capped = true;
            return true;
        }
        let Some(v) = self.next_vertex() else {
            let c = HColoring {
                edge_map: self.f.iter().map(|e| e.expect("complete")).collect(),
                vertex_map: self.fv.iter().map(|u| u.expect("complete")).collect(),
            };
            self.count += 1;
            match self.mode {
                Mode::First => {
                    self.found.push(c);
                    return true;
                }
                Mode::AllModAut => self.found.push(c),
                Mode::Count => {}
            }
            return false;
        };
        let inc = self.g.incident(v).to_vec();
        let assigned: Vec<EdgeId> = inc.iter().filter_map(|&e| self.f[e]).collect();
        let free: Vec<EdgeId> = inc.iter().copied().filter(|&e| self.f[e].is_none()).collect();
        let candidates: Vec<VertexId> = if let Some(&img) = assigned.first() {
            let (a, b) = self.h.endpoints(img);
            if a == b { vec![a] } else { vec![a.min(b), a.max(b)] }
        } else if let Some(choices) = self.first_choices.take() {
            choices
        } else {
            (0..self.h.n()).collect()
        };
        for u in candidates {
            if !self.star_rep[u] {
                continue;
            }
            let star = self.h.incident(u);
            if star.len() != inc.len() || !assigned.iter().all(|e| star.contains(e)) {
                continue;
            }
            let rest: Vec<EdgeId> = star.iter().copied().filter(|e| !assigned.contains(e)).collect();
            if rest.len() != free.len() {
                continue;
            }
            self.fv[v] = Some(u);
            if self.biject(&free, &rest, 0, &mut vec![false; rest.len()]) {
                return true;
            }
            self.fv[v] = None;
        }
        false
    }

    /// Assigns `free[k..]` to unused edges of `rest`, lexicographically.
    fn biject(&mut self, free: &[EdgeId], rest: &[EdgeId], k: usize, used: &mut Vec<bool>) -> bool {
        if k == free.len() {
            return self.search();
        }
        let e = free[k];
        for i in 0..rest.len() {
            if used[i] {
                continue;
            }
            self.f[e] = Some(rest[i]);
            let (x, y) = self.g.endpoints(e);
            // forward check at the far endpoint unless it is already mapped
            let ok = [x, y].iter().all(|&w| self.fv[w].is_some() || self.consistent_at(w));
            if ok {
                used[i] = true;
                let stop = self.biject(free, rest, k + 1, used);
                used[i] = false;
                if stop {
                    self.f[e] = None;
                    return true;
                }
            }
            self.f[e] = None;
        }
        false
    }
}

fn orbit_representatives(h: &Multigraph) -> Option<Vec<VertexId>> {
    let auts = automorphisms(h).ok()?;
    let mut reps = Vec::new();
    let mut seen = vec![false; h.n()];
    for u in 0..h.n() {
        if seen[u] {
            continue;
        }
        reps.push(u);
        for a in &auts {
            seen[a.vertices[u]] = true;
        }
    }
    Some(reps)
}

/// Searches `H`-colourings of `G`. Both graphs must be `r`-regular for the
/// same `r` and `H` connected.
pub fn find_hcoloring(g: &Multigraph, h: &Multigraph, mode: Mode, node_cap: u64) -> Result<HSearchOutcome> {
    let rg = g.regular_degree().ok_or(Error::Invalid("guest graph is not regular".into()))?;
    let rh = h.regular_degree().ok_or(Error::Invalid("host graph is not regular".into()))?;
    if g.n() > 0 && rg != rh {
        return Err(Error::DegreeMismatch(rg, rh));
    }
    if !h.is_connected() || h.n() == 0 {
        return Err(Error::Hypothesis("host graph must be connected and non-empty".into()));
    }
    let star_rep: Vec<bool> = (0..h.n()).map(|u| (0..u).all(|w| h.incident(w) != h.incident(u))).collect();
    let first_choices = if mode == Mode::Count { None } else { orbit_representatives(h) };
    let mut s = Finder {
        g,
        h,
        mode,
        cap: node_cap,
        f: vec![None; g.m()],
        fv: vec![None; g.n()],
        star_rep,
        first_choices,
        found: Vec::new(),
        count: 0,
        nodes: 0,
        capped: false,
    };
    s.search();
    let mut colorings = s.found;
    if mode == Mode::AllModAut && !colorings.is_empty() {
        let auts = automorphisms(h)?;
        let mut reps = BTreeSet::new();
        for c in colorings {
            let canon = auts
                .iter()
                .map(|a| relabel_parallels(h, c.edge_map.iter().map(|&e| a.edges[e])))
                .min()
                .expect("identity present");
            reps.insert((canon, c));
        }
        let mut seen = BTreeSet::new();
        colorings = reps.into_iter().filter(|(k, _)| seen.insert(k.clone())).map(|(_, c)| c).collect();
    }
    Ok(HSearchOutcome { mode, colorings, count: s.count, complete: !s.capped, nodes: s.nodes })
}

/// `(f_V, f)` is an isomorphism: both maps are bijections and every edge
/// `uv` goes to an edge joining `f_V(u)` and `f_V(v)`.
pub fn is_isomorphism(g: &Multigraph, h: &Multigraph, c: &HColoring) -> bool {
    let bijective = |map: &[usize], size: usize| {
        let mut seen = vec![false; size];
        map.len() == size && map.iter().all(|&x| x < size && !std::mem::replace(&mut seen[x], true))
    };
    if g.n() != h.n() || g.m() != h.m() || !bijective(&c.vertex_map, h.n()) || !bijective(&c.edge_map, h.m()) {
        return false;
    }
    g.edges().all(|(e, u, v)| {
        let (a, b) = h.endpoints(c.edge_map[e]);
        let (x, y) = (c.vertex_map[u], c.vertex_map[v]);
        (a, b) == (x.min(y), x.max(y))
    })
}

/// Parallel edges of `H` are interchangeable: within each parallel class,
/// rename edges in order of first appearance along the map.
fn relabel_parallels(h: &Multigraph, map: impl Iterator<Item = EdgeId>) -> Vec<EdgeId> {
    let mut rename = vec![usize::MAX; h.m()];
    let mut next_in_class = std::collections::HashMap::new();
    map.map(|e| {
        if rename[e] == usize::MAX {
            let (u, v) = h.endpoints(e);
            let class = h.parallel_class(u, v);
            let k = next_in_class.entry((u, v)).or_insert(0usize);
            rename[e] = class[*k];
            *k += 1;
        }
        rename[e]
    })
    .collect()
}

/// `H_f`: the subgraph of `H` formed by the edges in `Im(f)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageSubgraph {
    #[serde(skip)]
    pub graph: Multigraph,
    /// Vertices of `H`, in the order used by `graph`.
    pub vertices: Vec<VertexId>,
    /// Edges of `H`, in the order used by `graph`.
    pub edges: Vec<EdgeId>,
}

fn require_valid(g: &Multigraph, h: &Multigraph, c: &HColoring) -> Result<()> {
    verify_hcoloring(g, h, c).map_err(|v| Error::Invalid(format!("not an H-colouring: {v}")))
}

pub fn image_subgraph(g: &Multigraph, h: &Multigraph, c: &HColoring) -> Result<ImageSubgraph> {
    require_valid(g, h, c)?;
    let edges: Vec<EdgeId> = c.edge_map.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let vertices: Vec<VertexId> =
        edges.iter().flat_map(|&e| { let (u, v) = h.endpoints(e); [u, v] }).collect::<BTreeSet<_>>().into_iter().collect();
    let pos = |x: VertexId| vertices.binary_search(&x).expect("endpoint listed");
    let graph = Multigraph::from_edges(vertices.len(), edges.iter().map(|&e| {
        let (u, v) = h.endpoints(e);
        (pos(u), pos(v))
    }))?;
    Ok(ImageSubgraph { graph, vertices, edges })
}

/// `V(H) \ Im(f_V)`.
pub fn unused_vertices(g: &Multigraph, h: &Multigraph, c: &HColoring) -> Result<VertexSet> {
    require_valid(g, h, c)?;
    let used = VertexSet::from_vertices(h.n(), c.vertex_map.iter().copied());
    Ok(used.complement())
}

#[derive(Clone, Debug, Serialize)]
pub struct TransportOptions {
    /// Longest host cycle whose preimage is checked.
    pub max_cycle_len: usize,
    /// Upper bound on the number of host cycles and matchings examined.
    pub max_structures: usize,
    /// Random unions of disjoint host cycles to check.
    pub random_unions: usize,
    pub seed: u64,
    /// Odd vertex sets of `G` with `r` boundary edges checked in addition
    /// to singletons and, when `|V(G)| ≤ 22`, every tight cut.
    pub extra_tight_cuts: Vec<VertexSet>,
}

impl Default for TransportOptions {
    fn default() -> Self {
        TransportOptions { max_cycle_len: 12, max_structures: 20_000, random_unions: 200, seed: 0, extra_tight_cuts: Vec::new() }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TransportReport {
    pub matchings_checked: usize,
    pub two_regular_checked: usize,
    pub factor_checked: bool,
    /// Components of the pulled-back factor that are two parallel edges.
    /// Each becomes a `K_{1,1}` in the factor of `G`.
    pub factor_digons: usize,
    pub two_cuts_checked: usize,
    pub tight_cuts_checked: usize,
    pub violations: Vec<String>,
}

impl TransportReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Simple cycles of `h` (including pairs of parallel edges) with at most
/// `max_len` edges, each as a sorted edge list; at most `limit` of them.
pub fn short_cycles(h: &Multigraph, max_len: usize, limit: usize) -> Vec<Vec<EdgeId>> {
    let mut out = Vec::new();
    // cycles are rooted at their least vertex; each is found twice, once per direction
    let mut seen = BTreeSet::new();
    for s in 0..h.n() {
        let mut on_path = vec![false; h.n()];
        on_path[s] = true;
        let mut path = Vec::new();
        cycle_dfs(h, s, s, max_len, &mut on_path, &mut path, &mut seen, &mut out, limit);
        if out.len() >= limit {
            break;
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn cycle_dfs(
    h: &Multigraph,
    s: VertexId,
    v: VertexId,
    max_len: usize,
    on_path: &mut Vec<bool>,
    path: &mut Vec<EdgeId>,
    seen: &mut BTreeSet<Vec<EdgeId>>,
    out: &mut Vec<Vec<EdgeId>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    for &e in h.incident(v) {
        if path.last() == Some(&e) {
            continue;
        }
        let w = h.other(e, v);
        if w == s && !path.is_empty() {
            let mut c = path.clone();
            c.push(e);
            c.sort_unstable();
            if seen.insert(c.clone()) {
                out.push(c);
            }
            continue;
        }
        if w < s || on_path[w] || path.len() + 1 >= max_len {
            continue;
        }
        on_path[w] = true;
        path.push(e);
        cycle_dfs(h, s, w, max_len, on_path, path, seen, out, limit);
        path.pop();
        on_path[w] = false;
    }
}

fn preimage(c: &HColoring, set: &[EdgeId], hm: usize) -> Vec<EdgeId> {
    let mut mark = vec![false; hm];
    for &e in set {
        mark[e] = true;
    }
    (0..c.edge_map.len()).filter(|&e| mark[c.edge_map[e]]).collect()
}

fn degrees_in(g: &Multigraph, edges: &[EdgeId]) -> Vec<usize> {
    let mut d = vec![0; g.n()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// Checks, for one colouring, that perfect matchings, 2-regular subgraphs
/// and the perfect 2-matching of `H` pull back to structures of the same
/// kind, that 2-edge-cuts of `G` map to one edge or a 2-edge-cut, and that
/// tight cuts of `G` map to tight cuts of `H`.
pub fn check_structure_transport(
    g: &Multigraph,
    h: &Multigraph,
    c: &HColoring,
    opts: &TransportOptions,
) -> Result<TransportReport> {
    require_valid(g, h, c)?;
    let r = g.regular_degree().ok_or(Error::Invalid("guest graph is not regular".into()))?;
    let mut rep = TransportReport::default();

    for m in perfect_matchings(h).take(opts.max_structures) {
        rep.matchings_checked += 1;
        let pre = preimage(c, &m.edges, h.m());
        if degrees_in(g, &pre).iter().any(|&d| d != 1) {
            rep.violations.push(format!("matching {:?} of H does not pull back to a perfect matching", m.edges));
        }
    }

    let cycles = short_cycles(h, opts.max_cycle_len, opts.max_structures);
    let check_two_regular = |edges: &[EdgeId], rep: &mut TransportReport| {
        rep.two_regular_checked += 1;
        let pre = preimage(c, edges, h.m());
        if degrees_in(g, &pre).iter().any(|&d| d != 0 && d != 2) {
            rep.violations.push(format!("2-regular subgraph {edges:?} of H pulls back irregular"));
        }
    };
    for cyc in &cycles {
        check_two_regular(cyc, &mut rep);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_unions.min(cycles.len()) {
        let mut order: Vec<usize> = (0..cycles.len()).collect();
        order.shuffle(&mut rng);
        let mut covered = vec![false; h.n()];
        let mut union = Vec::new();
        for i in order {
            let verts: Vec<VertexId> = cycles[i].iter().flat_map(|&e| { let (a, b) = h.endpoints(e); [a, b] }).collect();
            if verts.iter().all(|&v| !covered[v]) {
                verts.iter().for_each(|&v| covered[v] = true);
                union.extend(&cycles[i]);
            }
        }
        union.sort_unstable();
        check_two_regular(&union, &mut rep);
    }

    if let Some(fac) = perfect_2_matching(h) {
        rep.factor_checked = true;
        let pre = preimage(c, &fac.edges(), h.m());
        let d = degrees_in(g, &pre);
        let sub = Multigraph::from_edges(g.n(), pre.iter().map(|&e| g.endpoints(e)))?;
        let mut shape_ok = d.iter().all(|&x| x == 1 || x == 2);
        for comp in sub.components() {
            let deg: Vec<usize> = comp.iter().map(|v| d[v]).collect();
            match (comp.len(), deg.as_slice()) {
                (2, [1, 1]) => {}
                (2, [2, 2]) => rep.factor_digons += 1,
                (k, _) => shape_ok &= k >= 3 && deg.iter().all(|&x| x == 2),
            }
        }
        if !shape_ok {
            rep.violations.push("perfect 2-matching of H does not pull back to one of G".into());
        }
    }

    for [e1, e2] in two_edge_cuts(g) {
        rep.two_cuts_checked += 1;
        let (a, b) = (c.edge_map[e1], c.edge_map[e2]);
        if a != b && as_edge_cut(h, &[a, b]).is_none() {
            rep.violations.push(format!("2-edge-cut {{{e1}, {e2}}} maps to {{{a}, {b}}}, not a 2-edge-cut"));
        }
    }

    let mut sets: Vec<VertexSet> = (0..g.n()).map(|v| VertexSet::singleton(g.n(), v)).collect();
    if g.n() <= BRUTE_FORCE_MAX && g.n() % 2 == 0 && g.n() > 0 {
        sets.extend(tight_cuts(g, r, true)?.into_iter().map(|t| t.set));
    }
    sets.extend(opts.extra_tight_cuts.iter().cloned());
    for x in sets {
        let cut = g.boundary(&x)?;
        if cut.len() != r || x.len() % 2 == 0 {
            continue;
        }
        rep.tight_cuts_checked += 1;
        let img: BTreeSet<EdgeId> = cut.edges.iter().map(|&e| c.edge_map[e]).collect();
        let img: Vec<EdgeId> = img.into_iter().collect();
        let tight = img.len() == r && as_edge_cut(h, &img).is_some_and(|y| y.len() % 2 == 1);
        if !tight {
            rep.violations.push(format!("tight cut at {:?} maps to {img:?}, not a tight cut", x.to_vec()));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{class1_coloring, complete_bipartite, complete_graph, dipole, petersen};

    fn identity(g: &Multigraph) -> HColoring {
        HColoring { edge_map: (0..g.m()).collect(), vertex_map: (0..g.n()).collect() }
    }

    #[test]
    fn identity_verifies_and_transports() {
        let p = petersen();
        let c = identity(&p);
        assert_eq!(verify_hcoloring(&p, &p, &c), Ok(()));
        let rep = check_structure_transport(&p, &p, &c, &TransportOptions::default()).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(rep.matchings_checked, 6);
        assert_eq!(image_subgraph(&p, &p, &c).unwrap().graph, p);
        assert!(unused_vertices(&p, &p, &c).unwrap().is_empty());
    }

    #[test]
    fn reason_codes() {
        let p = petersen();
        let mut c = identity(&p);
        c.edge_map[1] = 0;
        assert_eq!(verify_hcoloring(&p, &p, &c).unwrap_err().code(), "adjacent-collision");
        let mut c = identity(&p);
        c.vertex_map[3] = 4;
        assert_eq!(verify_hcoloring(&p, &p, &c).unwrap_err().code(), "vertex-map-inconsistent");
        let mut c = identity(&p);
        c.edge_map.swap(0, 14);
        assert_eq!(verify_hcoloring(&p, &p, &c).unwrap_err().code(), "vertex-mismatch");
        let mut c = identity(&p);
        c.edge_map.pop();
        assert_eq!(verify_hcoloring(&p, &p, &c).unwrap_err().code(), "wrong-length");
    }

    #[test]
    fn petersen_by_petersen_is_an_isomorphism() {
        let p = petersen();
        let out = find_hcoloring(&p, &p, Mode::First, DEFAULT_NODE_CAP).unwrap();
        let c = &out.colorings[0];
        assert_eq!(verify_hcoloring(&p, &p, c), Ok(()));
        assert!(is_isomorphism(&p, &p, c));
        let reps = find_hcoloring(&p, &p, Mode::AllModAut, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(reps.colorings.len(), 1);
        let all = find_hcoloring(&p, &p, Mode::Count, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(all.count, 120);
    }

    #[test]
    fn class_obstructions() {
        let p = petersen();
        let k4 = complete_graph(4);
        assert_eq!(find_hcoloring(&k4, &p, Mode::First, DEFAULT_NODE_CAP).unwrap().decided(), Some(true));
        assert_eq!(find_hcoloring(&p, &k4, Mode::First, DEFAULT_NODE_CAP).unwrap().decided(), Some(false));
        assert_eq!(find_hcoloring(&p, &dipole(3), Mode::First, DEFAULT_NODE_CAP).unwrap().decided(), Some(false));
        assert!(matches!(find_hcoloring(&p, &complete_graph(5), Mode::First, 10), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn counting_modes() {
        // K4 coloured by the dipole: every proper 3-edge-colouring is one edge map
        let k4 = complete_graph(4);
        let out = find_hcoloring(&k4, &dipole(3), Mode::Count, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(out.count, 6);
        let reps = find_hcoloring(&k4, &dipole(3), Mode::AllModAut, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(reps.colorings.len(), 1);
        let capped = find_hcoloring(&k4, &petersen(), Mode::Count, 5).unwrap();
        assert!(!capped.complete);
        assert_eq!(capped.decided(), None);
    }

    #[test]
    fn class1_image() {
        let p = petersen();
        let k33 = complete_bipartite(3, 3);
        let c = class1_coloring(&k33, &p, 0).unwrap();
        let img = image_subgraph(&k33, &p, &c).unwrap();
        assert_eq!(img.edges, p.incident(0).to_vec());
        assert_eq!(unused_vertices(&k33, &p, &c).unwrap().len(), 9);
        let rep = check_structure_transport(&k33, &p, &c, &TransportOptions::default()).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn composition() {
        let p = petersen();
        let k4 = complete_graph(4);
        let inner = class1_coloring(&k4, &p, 2).unwrap();
        let outer = identity(&p);
        assert_eq!(verify_hcoloring(&k4, &p, &inner.then(&outer)), Ok(()));
    }

    #[test]
    fn cycles_of_petersen() {
        let p = petersen();
        // 12 five-cycles, 10 six-cycles, 15 eight-cycles, 20 nine-cycles
        let cyc = short_cycles(&p, 12, usize::MAX);
        let count = |k: usize| cyc.iter().filter(|c| c.len() == k).count();
        assert_eq!((count(5), count(6), count(8), count(9)), (12, 10, 15, 20));
        assert_eq!(short_cycles(&dipole(3), 12, usize::MAX).len(), 3);
    }
}
