//! Odd edge cuts: exhaustive sweeps, a Gomory–Hu based minimum odd cut,
//! r-graph recognition and tight cut enumeration.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId, VertexSet};

/// Largest order accepted by the exhaustive sweeps.
pub const BRUTE_FORCE_MAX: usize = 22;

/// A minimum odd cut and one odd set realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCutCertificate {
    pub value: usize,
    pub witness: VertexSet,
}

/// An odd set whose boundary has exactly `r` edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightCut {
    pub set: VertexSet,
    pub trivial: bool,
}

fn check_even_order(g: &Multigraph) -> Result<()> {
    if g.n() % 2 == 1 {
        return Err(Error::OddOrder(g.n()));
    }
    if g.n() == 0 {
        return Err(Error::Invalid("the graph on zero vertices has no odd sets".into()));
    }
    Ok(())
}

/// Gray-code walk over all subsets of `universe`, calling `visit(mask,
/// size, boundary)` for every non-empty subset. Masks are over `0..n`.
fn sweep_subsets(g: &Multigraph, universe: &[VertexId], mut visit: impl FnMut(u64, usize, usize)) {
    debug_assert!(g.n() <= 64);
    let nbrs: Vec<Vec<(VertexId, usize)>> = (0..g.n()).map(|v| g.weighted_neighbors(v)).collect();
    let k = universe.len();
    let mut mask = 0u64;
    let mut size = 0usize;
    let mut cut = 0isize;
    for i in 1u64..(1u64 << k) {
        let v = universe[i.trailing_zeros() as usize];
        let inside: isize = nbrs[v].iter().filter(|(u, _)| mask >> u & 1 == 1).map(|&(_, c)| c as isize).sum();
        let deg = g.degree(v) as isize;
        if mask >> v & 1 == 1 {
            mask &= !(1 << v);
            size -= 1;
            cut -= deg - 2 * inside;
        } else {
            mask |= 1 << v;
            size += 1;
            cut += deg - 2 * inside;
        }
        visit(mask, size, cut as usize);
    }
}

/// Minimum of `|∂(S)|` over odd `S ⊆ universe`. `None` when the universe is
/// empty.
pub fn min_odd_cut_within(g: &Multigraph, universe: &VertexSet) -> Result<Option<OddCutCertificate>> {
    if universe.universe() != g.n() {
        return Err(Error::Invalid("universe does not match the graph".into()));
    }
    if universe.len() > BRUTE_FORCE_MAX || g.n() > 64 {
        return Err(Error::OrderBound { n: universe.len(), max: BRUTE_FORCE_MAX, what: "odd cut sweep" });
    }
    let verts = universe.to_vec();
    let mut best: Option<(usize, u64)> = None;
    sweep_subsets(g, &verts, |mask, size, cut| {
        if size % 2 == 1 && best.is_none_or(|(b, _)| cut < b) {
            best = Some((cut, mask));
        }
    });
    Ok(best.map(|(value, mask)| OddCutCertificate { value, witness: VertexSet::from_mask(g.n(), mask) }))
}

/// Exact minimum odd cut by sweeping every odd set up to complementation.
pub fn min_odd_cut_bruteforce(g: &Multigraph) -> Result<OddCutCertificate> {
    check_even_order(g)?;
    if g.n() > BRUTE_FORCE_MAX {
        return Err(Error::OrderBound { n: g.n(), max: BRUTE_FORCE_MAX, what: "odd cut sweep" });
    }
    // n is even, so every odd set or its (odd) complement avoids the last vertex
    let universe = VertexSet::singleton(g.n(), g.n() - 1).complement();
    Ok(min_odd_cut_within(g, &universe)?.expect("non-empty universe"))
}

/// Max-flow network over the aggregated undirected capacities of a multigraph.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap0: Vec<i64>,
    cap: Vec<i64>,
    level: Vec<i32>,
    it: Vec<usize>,
}

impl FlowNetwork {
    fn new(g: &Multigraph) -> Self {
        let n = g.n();
        let mut net = FlowNetwork {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap0: Vec::new(),
            cap: Vec::new(),
            level: vec![0; n],
            it: vec![0; n],
        };
        for u in 0..n {
            for (v, c) in g.weighted_neighbors(u) {
                if u < v {
                    // an undirected edge is a pair of arcs with full capacity each way
                    net.head[u].push(net.to.len());
                    net.to.push(v);
                    net.cap0.push(c as i64);
                    net.head[v].push(net.to.len());
                    net.to.push(u);
                    net.cap0.push(c as i64);
                }
            }
        }
        net.cap = net.cap0.clone();
        net
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &a in &self.head[v] {
                let w = self.to[a];
                if self.cap[a] > 0 && self.level[w] < 0 {
                    self.level[w] = self.level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, f: i64) -> i64 {
        if v == t {
            return f;
        }
        while self.it[v] < self.head[v].len() {
            let a = self.head[v][self.it[v]];
            let w = self.to[a];
            if self.cap[a] > 0 && self.level[w] == self.level[v] + 1 {
                let d = self.dfs(w, t, f.min(self.cap[a]));
                if d > 0 {
                    self.cap[a] -= d;
                    self.cap[a ^ 1] += d;
                    return d;
                }
            }
            self.it[v] += 1;
        }
        0
    }

    /// Minimum s-t cut value and the source side.
    fn min_cut(&mut self, s: usize, t: usize) -> (i64, Vec<bool>) {
        self.cap.copy_from_slice(&self.cap0);
        let mut flow = 0;
        while self.bfs(s, t) {
            self.it.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        let side = self.level.iter().map(|&l| l >= 0).collect();
        (flow, side)
    }
}

/// Gomory–Hu cut tree as a parent array rooted at 0 with edge weights.
pub fn gomory_hu_tree(g: &Multigraph) -> (Vec<VertexId>, Vec<i64>) {
    let n = g.n();
    let mut parent = vec![0; n];
    let mut weight = vec![0i64; n];
    let mut net = FlowNetwork::new(g);
    for s in 1..n {
        let t = parent[s];
        let (value, side) = net.min_cut(s, t);
        weight[s] = value;
        for i in 0..n {
            if i != s && side[i] && parent[i] == t {
                parent[i] = s;
            }
        }
        if side[parent[t]] {
            parent[s] = parent[t];
            parent[t] = s;
            weight[s] = weight[t];
            weight[t] = value;
        }
    }
    (parent, weight)
}

/// Minimum odd cut via the fundamental cuts of a Gomory–Hu tree whose sides
/// have odd cardinality.
pub fn min_odd_cut_flow(g: &Multigraph) -> Result<OddCutCertificate> {
    check_even_order(g)?;
    let n = g.n();
    let (parent, _) = gomory_hu_tree(g);
    let mut children = vec![Vec::new(); n];
    for v in 1..n {
        children[parent[v]].push(v);
    }
    // post-order subtree sizes from root 0
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        order.push(v);
        stack.extend(children[v].iter().copied());
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if v != 0 {
            size[parent[v]] += size[v];
        }
    }
    let mut best: Option<OddCutCertificate> = None;
    for v in 1..n {
        if size[v] % 2 == 0 {
            continue;
        }
        let mut side = VertexSet::new(n);
        let mut stack = vec![v];
        while let Some(w) = stack.pop() {
            side.insert(w);
            stack.extend(children[w].iter().copied());
        }
        let value = g.boundary_size(&side);
        if best.as_ref().is_none_or(|b| value < b.value) {
            best = Some(OddCutCertificate { value, witness: side });
        }
    }
    Ok(best.expect("an even order tree has an odd fundamental cut"))
}

/// Minimum odd cut, exhaustive up to [`BRUTE_FORCE_MAX`] vertices and via
/// the flow tree above.
pub fn min_odd_cut(g: &Multigraph) -> Result<OddCutCertificate> {
    if g.n() <= BRUTE_FORCE_MAX {
        min_odd_cut_bruteforce(g)
    } else {
        min_odd_cut_flow(g)
    }
}

/// `true` iff `g` is `r`-regular and every odd vertex set has at least `r`
/// boundary edges.
pub fn is_r_graph(g: &Multigraph, r: usize) -> bool {
    if !g.is_regular(r) {
        return false;
    }
    if g.n() == 0 {
        return true;
    }
    if g.n() % 2 == 1 {
        // X = V(G) is odd with an empty boundary
        return false;
    }
    min_odd_cut(g).map(|c| c.value >= r).unwrap_or(false)
}

/// All odd sets (up to complementation) with exactly `r` boundary edges.
/// Each set is reported as its smaller side.
pub fn tight_cuts(g: &Multigraph, r: usize, nontrivial_only: bool) -> Result<Vec<TightCut>> {
    check_even_order(g)?;
    if g.n() > BRUTE_FORCE_MAX {
        return Err(Error::OrderBound { n: g.n(), max: BRUTE_FORCE_MAX, what: "tight cut enumeration" });
    }
    let n = g.n();
    let verts: Vec<VertexId> = (0..n - 1).collect();
    let mut masks = Vec::new();
    sweep_subsets(g, &verts, |mask, size, cut| {
        if size % 2 == 1 && cut == r {
            masks.push((mask, size));
        }
    });
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out: Vec<TightCut> = masks
        .into_iter()
        .filter_map(|(mask, size)| {
            let trivial = size == 1 || size == n - 1;
            if nontrivial_only && trivial {
                return None;
            }
            let mask = if size > n - size { full & !mask } else { mask };
            Some(TightCut { set: VertexSet::from_mask(n, mask), trivial })
        })
        .collect();
    out.sort_by_key(|t| (t.set.len(), t.set.to_vec()));
    Ok(out)
}

/// Decides whether the edge set `f` is exactly `∂_G(Y)` for some `Y`, and
/// returns such a `Y` (the side containing the smallest vertex of the first
/// component touched). Intended for connected graphs.
pub fn as_edge_cut(g: &Multigraph, f: &[EdgeId]) -> Option<VertexSet> {
    if f.is_empty() {
        return None;
    }
    let mut in_f = vec![false; g.m()];
    for &e in f {
        if e >= g.m() || in_f[e] {
            return None;
        }
        in_f[e] = true;
    }
    let (rest, _) = g.delete_edges(f).ok()?;
    let comps = rest.components();
    let mut comp_of = vec![0; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for v in c.iter() {
            comp_of[v] = i;
        }
    }
    // 2-colour the quotient graph whose edges are f
    let mut color = vec![None; comps.len()];
    let mut adj = vec![Vec::new(); comps.len()];
    for &e in f {
        let (u, v) = g.endpoints(e);
        let (a, b) = (comp_of[u], comp_of[v]);
        if a == b {
            return None;
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    for s in 0..comps.len() {
        if color[s].is_some() || adj[s].is_empty() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            let ca = color[a].unwrap();
            for &b in &adj[a] {
                match color[b] {
                    None => {
                        color[b] = Some(!ca);
                        stack.push(b);
                    }
                    Some(cb) if cb == ca => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut y = VertexSet::new(g.n());
    for v in 0..g.n() {
        if color[comp_of[v]] == Some(true) {
            y.insert(v);
        }
    }
    Some(y)
}

/// Every 2-edge-cut `{e1, e2}` of `g` with `e1 < e2`.
pub fn two_edge_cuts(g: &Multigraph) -> Vec<[EdgeId; 2]> {
    let mut out = Vec::new();
    for e1 in 0..g.m() {
        for e2 in e1 + 1..g.m() {
            if !g.is_connected_without(|e| e != e1 && e != e2) && as_edge_cut(g, &[e1, e2]).is_some() {
                out.push([e1, e2]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{petersen, petersen_pms};

    fn k4_pair_with_two_cut() -> Multigraph {
        // two copies of K4 minus an edge, joined across the missing edges
        let mut pairs = Vec::new();
        for off in [0, 4] {
            for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
                pairs.push((u + off, v + off));
            }
        }
        pairs.push((2, 6));
        pairs.push((3, 7));
        Multigraph::from_edges(8, pairs).unwrap()
    }

    #[test]
    fn petersen_min_odd_cut() {
        let p = petersen();
        let c = min_odd_cut_bruteforce(&p).unwrap();
        assert_eq!(c.value, 3);
        assert_eq!(c.witness.len() % 2, 1);
        assert_eq!(p.boundary_size(&c.witness), 3);
        assert_eq!(min_odd_cut_flow(&p).unwrap().value, 3);
        assert!(is_r_graph(&p, 3));
    }

    #[test]
    fn petersen_plus_matching_has_min_odd_cut_four() {
        let p = petersen();
        let g = p.add_edges(&petersen_pms()[0].pairs(&p)).unwrap();
        assert_eq!(min_odd_cut_bruteforce(&g).unwrap().value, 4);
        assert!(is_r_graph(&g, 4));
    }

    #[test]
    fn irregular_multigraph_is_still_answered() {
        // K4 minus edge 23, with 01 doubled
        let g = Multigraph::from_edges(4, [(0, 1), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        // singletons: deg 2 and 3 ... vertex 2 has degree 2
        let c = min_odd_cut_bruteforce(&g).unwrap();
        assert_eq!(c.value, 2);
        assert_eq!(min_odd_cut_flow(&g).unwrap().value, 2);
    }

    #[test]
    fn two_cut_between_even_halves_is_allowed() {
        let g = k4_pair_with_two_cut();
        assert!(g.is_regular(3));
        // the 2-cut separates two even halves, so no odd set sees it
        assert_eq!(min_odd_cut_bruteforce(&g).unwrap().value, 3);
        assert!(is_r_graph(&g, 3));
        assert_eq!(two_edge_cuts(&g), vec![[10, 11]]);
    }

    #[test]
    fn bridge_is_not_a_three_graph() {
        // two K4s with edge 13 subdivided by vertex 4, the subdivision vertices joined
        let mut pairs = Vec::new();
        for off in [0, 5] {
            for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4), (3, 4)] {
                pairs.push((u + off, v + off));
            }
        }
        pairs.push((4, 9));
        let g = Multigraph::from_edges(10, pairs).unwrap();
        assert!(g.is_regular(3), "{g:?}");
        let c = min_odd_cut_bruteforce(&g).unwrap();
        assert_eq!(c.value, 1);
        assert_eq!(min_odd_cut_flow(&g).unwrap().value, 1);
        assert!(!is_r_graph(&g, 3));
    }

    #[test]
    fn odd_order_rejected() {
        let g = Multigraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(min_odd_cut_bruteforce(&g), Err(Error::OddOrder(3)));
        assert_eq!(min_odd_cut_flow(&g), Err(Error::OddOrder(3)));
        assert!(!is_r_graph(&g, 2));
    }

    #[test]
    fn order_bound_enforced() {
        let g = Multigraph::empty(24);
        assert!(matches!(min_odd_cut_bruteforce(&g), Err(Error::OrderBound { .. })));
        assert_eq!(min_odd_cut_flow(&g).unwrap().value, 0);
    }

    #[test]
    fn petersen_has_only_trivial_tight_cuts() {
        let p = petersen();
        assert!(tight_cuts(&p, 3, true).unwrap().is_empty());
        let all = tight_cuts(&p, 3, false).unwrap();
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|t| t.trivial && t.set.len() == 1));
    }

    #[test]
    fn edge_cut_recognition() {
        let p = petersen();
        let y = as_edge_cut(&p, &[5, 6, 7, 8, 9]).unwrap();
        assert!(y == VertexSet::from_vertices(10, 0..5) || y == VertexSet::from_vertices(10, 5..10));
        assert!(as_edge_cut(&p, &[0, 1]).is_none());
        assert!(as_edge_cut(&p, p.incident(4)).is_some());
        assert!(two_edge_cuts(&p).is_empty());
    }
}
