//! Perfect matchings, disjoint matching packings, class determination and
//! perfect 2-matchings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// Outcome of a capped exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The whole space was explored without success.
    Exhausted,
    /// The node cap ran out first.
    Capped,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_capped(&self) -> bool {
        matches!(self, Search::Capped)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PerfectMatching {
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
}

impl PerfectMatching {
    /// Validates that `edges` cover every vertex of `g` exactly once.
    pub fn new(g: &Multigraph, mut edges: Vec<EdgeId>) -> Result<Self> {
        edges.sort_unstable();
        if !covers_exactly_once(g, &edges) {
            return Err(Error::Invalid("edge set is not a perfect matching".into()));
        }
        Ok(PerfectMatching { edges })
    }

    /// Endpoint pairs, in edge order.
    pub fn pairs(&self, g: &Multigraph) -> Vec<(VertexId, VertexId)> {
        self.edges.iter().map(|&e| g.endpoints(e)).collect()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// `true` iff every vertex is incident with exactly one edge of `edges`.
pub fn covers_exactly_once(g: &Multigraph, edges: &[EdgeId]) -> bool {
    let mut hit = vec![0u32; g.n()];
    for &e in edges {
        if e >= g.m() {
            return false;
        }
        let (u, v) = g.endpoints(e);
        hit[u] += 1;
        hit[v] += 1;
    }
    hit.iter().all(|&h| h == 1)
}

struct Frame {
    v: VertexId,
    pos: usize,
    active: Option<EdgeId>,
}

/// Resumable depth-first stream of the perfect matchings of a graph,
/// optionally restricted to an allowed edge subset. Matchings come in
/// lexicographic order of (lowest uncovered vertex, incident edge id).
pub struct PerfectMatchings<'g> {
    g: &'g Multigraph,
    allowed: Option<Vec<bool>>,
    covered: Vec<bool>,
    chosen: Vec<EdgeId>,
    frames: Vec<Frame>,
    started: bool,
    done: bool,
}

impl<'g> PerfectMatchings<'g> {
    pub fn new(g: &'g Multigraph) -> Self {
        Self::build(g, None)
    }

    /// Only edges with `allowed[e]` may be used.
    pub fn within(g: &'g Multigraph, allowed: Vec<bool>) -> Self {
        assert_eq!(allowed.len(), g.m());
        Self::build(g, Some(allowed))
    }

    fn build(g: &'g Multigraph, allowed: Option<Vec<bool>>) -> Self {
        PerfectMatchings {
            g,
            allowed,
            covered: vec![false; g.n()],
            chosen: Vec::new(),
            frames: Vec::new(),
            started: false,
            done: g.n() % 2 == 1,
        }
    }

    fn usable(&self, e: EdgeId) -> bool {
        self.allowed.as_ref().is_none_or(|a| a[e])
    }

    fn first_uncovered(&self, from: VertexId) -> Option<VertexId> {
        (from..self.g.n()).find(|&v| !self.covered[v])
    }

    /// Some uncovered vertex has no usable edge to another uncovered vertex.
    fn stranded(&self) -> bool {
        (0..self.g.n()).any(|v| {
            !self.covered[v]
                && !self.g.incident(v).iter().any(|&e| self.usable(e) && !self.covered[self.g.other(e, v)])
        })
    }

    fn current(&self) -> PerfectMatching {
        let mut edges = self.chosen.clone();
        edges.sort_unstable();
        PerfectMatching { edges }
    }
}

impl Iterator for PerfectMatchings<'_> {
    type Item = PerfectMatching;

    fn next(&mut self) -> Option<PerfectMatching> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            match self.first_uncovered(0) {
                None => {
                    self.done = true;
                    return Some(self.current());
                }
                Some(v) => {
                    if self.stranded() {
                        self.done = true;
                        return None;
                    }
                    self.frames.push(Frame { v, pos: 0, active: None });
                }
            }
        }
        loop {
            let Some(top) = self.frames.len().checked_sub(1) else {
                self.done = true;
                return None;
            };
            let v = self.frames[top].v;
            if let Some(e) = self.frames[top].active.take() {
                let w = self.g.other(e, v);
                self.covered[v] = false;
                self.covered[w] = false;
                self.chosen.pop();
            }
            let inc = self.g.incident(v);
            let mut advanced = false;
            while self.frames[top].pos < inc.len() {
                let e = inc[self.frames[top].pos];
                self.frames[top].pos += 1;
                let w = self.g.other(e, v);
                if !self.usable(e) || self.covered[w] {
                    continue;
                }
                self.covered[v] = true;
                self.covered[w] = true;
                self.chosen.push(e);
                if self.stranded() {
                    self.covered[v] = false;
                    self.covered[w] = false;
                    self.chosen.pop();
                    continue;
                }
                self.frames[top].active = Some(e);
                advanced = true;
                break;
            }
            if !advanced {
                self.frames.pop();
                continue;
            }
            match self.first_uncovered(v + 1) {
                Some(u) => self.frames.push(Frame { v: u, pos: 0, active: None }),
                None => return Some(self.current()),
            }
        }
    }
}

pub fn perfect_matchings(g: &Multigraph) -> PerfectMatchings<'_> {
    PerfectMatchings::new(g)
}

/// A perfect matching of `G - F`, if one exists.
///
/// For an `r`-graph and `|F| < r` one always exists; larger `F` is allowed
/// and simply searched.
pub fn has_pm_avoiding(g: &Multigraph, r: usize, f: &[EdgeId]) -> Result<Option<PerfectMatching>> {
    if !g.is_regular(r) {
        return Err(Error::NotRegular(r));
    }
    let mut allowed = vec![true; g.m()];
    for &e in f {
        if e >= g.m() {
            return Err(Error::EdgeOutOfRange { edge: e, m: g.m() });
        }
        allowed[e] = false;
    }
    Ok(PerfectMatchings::within(g, allowed).next())
}

/// Searches a proper `r`-edge-colouring of an `r`-regular graph, i.e. a
/// decomposition into `r` perfect matchings. `cap` bounds the number of
/// search nodes.
pub fn class1_decomposition(g: &Multigraph, r: usize, cap: Option<u64>) -> Result<Search<Vec<PerfectMatching>>> {
    if !g.is_regular(r) {
        return Err(Error::NotRegular(r));
    }
    if r > 32 {
        return Err(Error::Invalid("degree above 32 not supported".into()));
    }
    if g.n() % 2 == 1 {
        return Ok(Search::Exhausted);
    }
    if !g.is_simple() {
        let sup = Support::new(g);
        let mut x = SupportSearch::new(&sup, cap);
        let mut rem = sup.mult.clone();
        let mut chosen = Vec::new();
        return Ok(match x.exact(&mut rem, r, &mut chosen) {
            Some(true) => Search::Found(sup.to_edge_level(&chosen)),
            Some(false) => Search::Exhausted,
            None => Search::Capped,
        });
    }
    let mut s = EdgeColoring {
        g,
        r,
        color: vec![u8::MAX; g.m()],
        used: vec![0u32; g.n()],
        nodes: 0,
        cap,
    };
    let full = if r == 32 { u32::MAX } else { (1u32 << r) - 1 };
    match s.solve(0, full) {
        Some(true) => {
            let mut classes = vec![Vec::new(); r];
            for (e, &c) in s.color.iter().enumerate() {
                classes[c as usize].push(e);
            }
            let pms = classes.into_iter().map(|edges| PerfectMatching { edges }).collect();
            Ok(Search::Found(pms))
        }
        Some(false) => Ok(Search::Exhausted),
        None => Ok(Search::Capped),
    }
}

struct EdgeColoring<'g> {
    g: &'g Multigraph,
    r: usize,
    color: Vec<u8>,
    used: Vec<u32>,
    nodes: u64,
    cap: Option<u64>,
}

impl EdgeColoring<'_> {
    /// `Some(true)` coloured, `Some(false)` impossible, `None` capped.
    /// `opened` is the number of colours used so far; unopened colours are
    /// interchangeable, so only the next one is tried.
    fn solve(&mut self, opened: usize, full: u32) -> Option<bool> {
        self.nodes += 1;
        if self.cap.is_some_and(|c| self.nodes > c) {
            return None;
        }
        // most constrained uncoloured edge
        let mut pick: Option<(EdgeId, u32)> = None;
        for (e, u, v) in self.g.edges() {
            if self.color[e] != u8::MAX {
                continue;
            }
            let avail = full & !(self.used[u] | self.used[v]);
            if avail == 0 {
                return Some(false);
            }
            if pick.is_none_or(|(_, a)| avail.count_ones() < a.count_ones()) {
                pick = Some((e, avail));
                if avail.count_ones() == 1 {
                    break;
                }
            }
        }
        let Some((e, avail)) = pick else { return Some(true) };
        let (u, v) = self.g.endpoints(e);
        let limit = (opened + 1).min(self.r);
        for c in 0..limit {
            if avail >> c & 1 == 0 {
                continue;
            }
            self.color[e] = c as u8;
            self.used[u] |= 1 << c;
            self.used[v] |= 1 << c;
            let res = self.solve(opened.max(c + 1), full);
            if res != Some(false) {
                return res;
            }
            self.color[e] = u8::MAX;
            self.used[u] &= !(1 << c);
            self.used[v] &= !(1 << c);
        }
        Some(false)
    }
}

/// `Some(decomposition)` when the `r`-regular graph `g` is class 1.
pub fn is_class1(g: &Multigraph, r: usize) -> Result<Option<Vec<PerfectMatching>>> {
    Ok(class1_decomposition(g, r, None)?.found())
}

/// Searches `k` pairwise disjoint perfect matchings.
pub fn find_disjoint_pms(g: &Multigraph, k: usize, cap: Option<u64>) -> Search<Vec<PerfectMatching>> {
    let mut p = Packing::new(g, k, cap);
    p.run();
    if p.best.len() >= k {
        Search::Found(p.best)
    } else if p.capped {
        Search::Capped
    } else {
        Search::Exhausted
    }
}

/// Maximum number of pairwise disjoint perfect matchings.
pub fn pi(g: &Multigraph) -> Result<usize> {
    Ok(max_disjoint_pms(g)?.len())
}

/// A maximum packing of pairwise disjoint perfect matchings.
pub fn max_disjoint_pms(g: &Multigraph) -> Result<Vec<PerfectMatching>> {
    if g.n() % 2 == 1 {
        return Err(Error::OddOrder(g.n()));
    }
    if g.n() == 0 {
        return Err(Error::Invalid("the graph on zero vertices has no finite packing".into()));
    }
    let mut upper = (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0);
    if let Some(r) = g.regular_degree() {
        if r > 0 {
            if let Some(d) = is_class1(g, r)? {
                return Ok(d);
            }
            // r - 1 disjoint perfect matchings leave a 1-factor behind
            upper = r.saturating_sub(2);
        }
    }
    if !g.is_simple() {
        let sup = Support::new(g);
        let mut x = SupportSearch::new(&sup, None);
        let mut rem = sup.mult.clone();
        x.pack(&mut rem, 0, &mut Vec::new(), upper);
        return Ok(sup.to_edge_level(&x.best));
    }
    let mut p = Packing::new(g, upper, None);
    p.run();
    Ok(p.best)
}

/// The underlying simple graph with edge multiplicities; support edge `c`
/// stands for the parallel class `parallels[c]`.
struct Support {
    mult: Vec<usize>,
    parallels: Vec<Vec<EdgeId>>,
    /// Perfect matchings of the support, as support edge ids.
    pms: Vec<Vec<usize>>,
    /// `at[c]`: indices into `pms` of matchings using `c`.
    at: Vec<Vec<usize>>,
    /// Support edges at each vertex.
    star: Vec<Vec<usize>>,
}

impl Support {
    fn new(g: &Multigraph) -> Self {
        let mut index = std::collections::BTreeMap::new();
        let mut parallels: Vec<Vec<EdgeId>> = Vec::new();
        let mut pairs = Vec::new();
        for (e, u, v) in g.edges() {
            let c = *index.entry((u, v)).or_insert_with(|| {
                parallels.push(Vec::new());
                pairs.push((u, v));
                parallels.len() - 1
            });
            parallels[c].push(e);
        }
        let simple = Multigraph::from_edges(g.n(), pairs).expect("support of a valid graph");
        let pms: Vec<Vec<usize>> = PerfectMatchings::new(&simple).map(|m| m.edges).collect();
        let mut at = vec![Vec::new(); parallels.len()];
        for (i, m) in pms.iter().enumerate() {
            for &c in m {
                at[c].push(i);
            }
        }
        let star = (0..g.n()).map(|v| simple.incident(v).to_vec()).collect();
        Support { mult: parallels.iter().map(Vec::len).collect(), parallels, pms, at, star }
    }

    /// Distinct parallels go to distinct matchings, in id order.
    fn to_edge_level(&self, chosen: &[usize]) -> Vec<PerfectMatching> {
        let mut used = vec![0; self.mult.len()];
        chosen
            .iter()
            .map(|&i| {
                let mut edges: Vec<EdgeId> = self.pms[i]
                    .iter()
                    .map(|&c| {
                        used[c] += 1;
                        self.parallels[c][used[c] - 1]
                    })
                    .collect();
                edges.sort_unstable();
                PerfectMatching { edges }
            })
            .collect()
    }
}

struct SupportSearch<'s> {
    s: &'s Support,
    failed: std::collections::HashSet<Vec<usize>>,
    best: Vec<usize>,
    nodes: u64,
    cap: Option<u64>,
}

impl<'s> SupportSearch<'s> {
    fn new(s: &'s Support, cap: Option<u64>) -> Self {
        SupportSearch { s, failed: Default::default(), best: Vec::new(), nodes: 0, cap }
    }

    fn fits(&self, rem: &[usize], i: usize) -> bool {
        self.s.pms[i].iter().all(|&c| rem[c] > 0)
    }

    /// Writes `rem` as a sum of `k` support matchings. `None` when capped.
    fn exact(&mut self, rem: &mut Vec<usize>, k: usize, chosen: &mut Vec<usize>) -> Option<bool> {
        if k == 0 {
            return Some(rem.iter().all(|&x| x == 0));
        }
        self.nodes += 1;
        if self.cap.is_some_and(|c| self.nodes > c) {
            return None;
        }
        if self.failed.contains(rem) {
            return Some(false);
        }
        // the positive class with the fewest fitting matchings
        let mut pick: Option<(usize, usize)> = None;
        for c in 0..rem.len() {
            if rem[c] == 0 {
                continue;
            }
            let options = self.s.at[c].iter().filter(|&&i| self.fits(rem, i)).count();
            if pick.is_none_or(|(_, o)| options < o) {
                pick = Some((c, options));
            }
        }
        let Some((c, options)) = pick else { return Some(false) };
        if options > 0 {
            for idx in 0..self.s.at[c].len() {
                let i = self.s.at[c][idx];
                if !self.fits(rem, i) {
                    continue;
                }
                for &d in &self.s.pms[i] {
                    rem[d] -= 1;
                }
                chosen.push(i);
                let res = self.exact(rem, k - 1, chosen);
                for &d in &self.s.pms[i] {
                    rem[d] += 1;
                }
                match res {
                    Some(false) => {
                        chosen.pop();
                    }
                    other => return other,
                }
            }
        }
        self.failed.insert(rem.clone());
        Some(false)
    }

    /// Largest multiset of support matchings (indices nondecreasing from
    /// `from`) fitting under `rem`; stops at `goal`.
    fn pack(&mut self, rem: &mut Vec<usize>, from: usize, chosen: &mut Vec<usize>, goal: usize) -> bool {
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
            if self.best.len() >= goal {
                return true;
            }
        }
        let room = self.s.star.iter().map(|st| st.iter().map(|&c| rem[c]).sum::<usize>()).min().unwrap_or(0);
        if chosen.len() + room <= self.best.len() {
            return false;
        }
        for i in from..self.s.pms.len() {
            if !self.fits(rem, i) {
                continue;
            }
            for &d in &self.s.pms[i] {
                rem[d] -= 1;
            }
            chosen.push(i);
            let stop = self.pack(rem, i, chosen, goal);
            chosen.pop();
            for &d in &self.s.pms[i] {
                rem[d] += 1;
            }
            if stop {
                return true;
            }
        }
        false
    }
}

struct Packing<'g> {
    g: &'g Multigraph,
    goal: usize,
    anchor: VertexId,
    avail: Vec<bool>,
    current: Vec<PerfectMatching>,
    best: Vec<PerfectMatching>,
    nodes: u64,
    cap: Option<u64>,
    capped: bool,
}

impl<'g> Packing<'g> {
    fn new(g: &'g Multigraph, goal: usize, cap: Option<u64>) -> Self {
        let anchor = (0..g.n()).min_by_key(|&v| g.degree(v)).unwrap_or(0);
        Packing {
            g,
            goal,
            anchor,
            avail: vec![true; g.m()],
            current: Vec::new(),
            best: Vec::new(),
            nodes: 0,
            cap,
            capped: false,
        }
    }

    fn run(&mut self) {
        if self.g.n() == 0 || self.goal == 0 {
            return;
        }
        self.step(0);
    }

    /// Returns `true` once the goal is reached or the cap hit.
    fn step(&mut self, min_pos: usize) -> bool {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
            if self.best.len() >= self.goal {
                return true;
            }
        }
        let inc = self.g.incident(self.anchor);
        // every further matching uses a distinct, later anchor edge
        let room = inc[min_pos.min(inc.len())..].iter().filter(|&&e| self.avail[e]).count();
        let degree_room = (0..self.g.n())
            .map(|v| self.g.incident(v).iter().filter(|&&e| self.avail[e]).count())
            .min()
            .unwrap_or(0);
        if self.current.len() + room.min(degree_room) <= self.best.len() {
            return false;
        }
        let mut allowed = self.avail.clone();
        for &e in &inc[..min_pos.min(inc.len())] {
            allowed[e] = false;
        }
        let pms: Vec<PerfectMatching> = PerfectMatchings::within(self.g, allowed).collect();
        for pm in pms {
            self.nodes += 1;
            if self.cap.is_some_and(|c| self.nodes > c) {
                self.capped = true;
                return true;
            }
            let a = pm.edges.iter().copied().find(|&e| inc.contains(&e)).expect("matching covers the anchor");
            let pos = inc.iter().position(|&e| e == a).unwrap();
            for &e in &pm.edges {
                self.avail[e] = false;
            }
            self.current.push(pm);
            let stop = self.step(pos + 1);
            let pm = self.current.pop().unwrap();
            for &e in &pm.edges {
                self.avail[e] = true;
            }
            if stop {
                return true;
            }
        }
        false
    }
}

/// A component of a perfect 2-matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FactorComponent {
    /// A single edge, `K_{1,1}`.
    Edge(EdgeId),
    /// A cycle of length at least 3, as edges in cyclic order.
    Cycle(Vec<EdgeId>),
}

/// Spanning subgraph whose components are single edges or cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoMatchingFactor {
    pub components: Vec<FactorComponent>,
}

impl TwoMatchingFactor {
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out = Vec::new();
        for c in &self.components {
            match c {
                FactorComponent::Edge(e) => out.push(*e),
                FactorComponent::Cycle(es) => out.extend(es),
            }
        }
        out.sort_unstable();
        out
    }

    /// Checks the defining properties against `g`.
    pub fn is_valid_for(&self, g: &Multigraph) -> bool {
        let mut seen = vec![false; g.n()];
        for c in &self.components {
            let verts: Vec<VertexId> = match c {
                FactorComponent::Edge(e) => {
                    if *e >= g.m() {
                        return false;
                    }
                    let (u, v) = g.endpoints(*e);
                    vec![u, v]
                }
                FactorComponent::Cycle(es) => {
                    if es.len() < 3 || es.iter().any(|&e| e >= g.m()) {
                        return false;
                    }
                    // walk the cycle: consecutive edges share exactly the next vertex
                    let (a, b) = g.endpoints(es[0]);
                    let (c0, d0) = g.endpoints(es[es.len() - 1]);
                    let start = if a == c0 || a == d0 { a } else { b };
                    let mut cur = start;
                    let mut vs = Vec::new();
                    for &e in es {
                        let (x, y) = g.endpoints(e);
                        if x != cur && y != cur {
                            return false;
                        }
                        vs.push(cur);
                        cur = g.other(e, cur);
                    }
                    if cur != start {
                        return false;
                    }
                    vs
                }
            };
            for v in verts {
                if std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Perfect matching of the bipartite double cover of `g` (left copy `v`,
/// right copy `w`, an arc for each ordered adjacent pair), optionally
/// forced to use the arc `u -> v`. Returns `succ` with `v -> succ[v]`.
fn double_cover_matching(g: &Multigraph, forced: Option<(VertexId, VertexId)>) -> Option<Vec<VertexId>> {
    let n = g.n();
    let mut match_right: Vec<Option<VertexId>> = vec![None; n];
    let mut adj: Vec<Vec<VertexId>> = (0..n).map(|v| g.neighbors(v)).collect();
    if let Some((u, v)) = forced {
        match_right[v] = Some(u);
        adj[u].clear();
        for a in adj.iter_mut() {
            a.retain(|&w| w != v);
        }
    }
    for v in 0..n {
        if forced.is_some_and(|(u, _)| u == v) {
            continue;
        }
        let mut visited = vec![false; n];
        if !augment(v, &adj, &mut match_right, &mut visited) {
            return None;
        }
    }
    let mut succ = vec![0; n];
    for (r, l) in match_right.iter().enumerate() {
        succ[l.expect("perfect")] = r;
    }
    Some(succ)
}

/// Perfect 2-matching via a perfect matching of the bipartite double cover.
/// The matching is a permutation of `V`; its 2-cycles become single edges
/// and its longer cycles become cycles.
pub fn perfect_2_matching(g: &Multigraph) -> Option<TwoMatchingFactor> {
    let n = g.n();
    let succ = double_cover_matching(g, None)?;
    let edge_of = |u: VertexId, v: VertexId| g.parallel_class(u, v)[0];
    let mut done = vec![false; n];
    let mut components = Vec::new();
    for s in 0..n {
        if done[s] {
            continue;
        }
        let mut cycle = vec![s];
        done[s] = true;
        let mut v = succ[s];
        while v != s {
            done[v] = true;
            cycle.push(v);
            v = succ[v];
        }
        if cycle.len() == 2 {
            components.push(FactorComponent::Edge(edge_of(cycle[0], cycle[1])));
        } else {
            let k = cycle.len();
            components.push(FactorComponent::Cycle((0..k).map(|i| edge_of(cycle[i], cycle[(i + 1) % k])).collect()));
        }
    }
    Some(TwoMatchingFactor { components })
}

/// Regularizability by its definition: positive integer edge weights with
/// equal weighted degrees exist iff every edge lies in some perfect
/// 2-matching, i.e. some double cover perfect matching uses the arc `u -> v`.
pub fn has_positive_regular_weighting(g: &Multigraph) -> bool {
    g.n() > 0 && g.edges().all(|(_, u, v)| double_cover_matching(g, Some((u, v))).is_some())
}

/// Every vertex-deleted subgraph and the graph itself have perfect
/// 2-matchings.
pub fn has_2_matching_everywhere(g: &Multigraph) -> bool {
    perfect_2_matching(g).is_some()
        && (0..g.n()).all(|v| {
            let (h, _) = g.delete_vertices(&crate::graph::VertexSet::singleton(g.n(), v)).expect("valid vertex");
            perfect_2_matching(&h).is_some()
        })
}

fn augment(v: VertexId, adj: &[Vec<VertexId>], match_right: &mut [Option<VertexId>], visited: &mut [bool]) -> bool {
    for &w in &adj[v] {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        if match_right[w].is_none_or(|u| augment(u, adj, match_right, visited)) {
            match_right[w] = Some(v);
            return true;
        }
    }
    false
}

/// Sizes of the two colour classes of a connected bipartite graph.
pub fn bipartition_sizes(g: &Multigraph) -> Option<(usize, usize)> {
    let mut side = vec![None; g.n()];
    let mut counts = (0, 0);
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            if sv {
                counts.1 += 1;
            } else {
                counts.0 += 1;
            }
            for w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        stack.push(w);
                    }
                    Some(sw) if sw == sv => return None,
                    _ => {}
                }
            }
        }
    }
    Some(counts)
}

/// Largest order accepted by [`is_regularizable`].
pub const REGULARIZABLE_MAX: usize = 16;

/// `iso(G - S) < |S|` for every non-empty `S`, checked by sweeping subsets.
///
/// Requires a simple connected graph on at least 2 vertices which is not
/// bipartite with equal sides.
pub fn is_regularizable(g: &Multigraph) -> Result<bool> {
    if g.n() > REGULARIZABLE_MAX {
        return Err(Error::OrderBound { n: g.n(), max: REGULARIZABLE_MAX, what: "regularizability sweep" });
    }
    check_regularizable_hypothesis(g)?;
    let n = g.n();
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    for s in 1u32..(1 << n) {
        let isolated = (0..n).filter(|&v| s >> v & 1 == 0 && nbr[v] & !s == 0).count();
        if isolated >= s.count_ones() as usize {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn check_regularizable_hypothesis(g: &Multigraph) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::Hypothesis("graph must be simple".into()));
    }
    if g.n() < 2 {
        return Err(Error::Hypothesis("graph must have at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Hypothesis("graph must be connected".into()));
    }
    if let Some((a, b)) = bipartition_sizes(g) {
        if a == b {
            return Err(Error::Hypothesis("graph is bipartite with equal sides".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_bipartite, complete_graph, cycle, petersen, petersen_pms};

    #[test]
    fn matching_counts() {
        assert_eq!(perfect_matchings(&petersen()).count(), 6);
        assert_eq!(perfect_matchings(&complete_graph(10)).count(), 945);
        assert_eq!(perfect_matchings(&cycle(6)).count(), 2);
        assert_eq!(perfect_matchings(&cycle(5)).count(), 0);
        assert_eq!(perfect_matchings(&Multigraph::empty(0)).count(), 1);
        let theta = Multigraph::from_edges(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(perfect_matchings(&theta).count(), 3);
    }

    #[test]
    fn matchings_are_distinct_and_valid() {
        let g = complete_graph(8);
        let all: Vec<_> = perfect_matchings(&g).collect();
        assert_eq!(all.len(), 105);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        assert!(all.iter().all(|m| covers_exactly_once(&g, &m.edges)));
    }

    #[test]
    fn avoiding_matchings() {
        let p = petersen();
        for a in 0..15 {
            for b in a + 1..15 {
                let m = has_pm_avoiding(&p, 3, &[a, b]).unwrap().unwrap();
                assert!(!m.contains(a) && !m.contains(b));
            }
        }
        let m1 = &petersen_pms()[0];
        assert_eq!(has_pm_avoiding(&p, 3, &m1.edges).unwrap(), None);
        assert_eq!(has_pm_avoiding(&cycle(4), 3, &[]), Err(Error::NotRegular(3)));
    }

    #[test]
    fn class_determination() {
        assert!(is_class1(&petersen(), 3).unwrap().is_none());
        let k33 = complete_bipartite(3, 3);
        let d = is_class1(&k33, 3).unwrap().unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.iter().all(|m| covers_exactly_once(&k33, &m.edges)));
        let p = petersen();
        for m in petersen_pms() {
            let g = p.add_edges(&m.pairs(&p)).unwrap();
            assert!(is_class1(&g, 4).unwrap().is_none());
        }
        assert_eq!(is_class1(&cycle(5), 3), Err(Error::NotRegular(3)));
        assert!(is_class1(&cycle(5), 2).unwrap().is_none());
    }

    #[test]
    fn capped_search_reports_capped() {
        let s = class1_decomposition(&petersen(), 3, Some(2)).unwrap();
        assert!(s.is_capped());
    }

    #[test]
    fn packing_numbers() {
        assert_eq!(pi(&petersen()).unwrap(), 1);
        assert_eq!(pi(&complete_graph(4)).unwrap(), 3);
        let p = petersen();
        let g = p.add_edges(&petersen_pms()[1].pairs(&p)).unwrap();
        assert_eq!(pi(&g).unwrap(), 2);
        // irregular: a 6-cycle with one chord has two disjoint matchings
        let g = cycle(6).add_edges(&[(0, 3)]).unwrap();
        assert_eq!(pi(&g).unwrap(), 2);
        assert_eq!(pi(&cycle(5)), Err(Error::OddOrder(5)));
        match find_disjoint_pms(&complete_graph(6), 5, None) {
            Search::Found(pms) => assert_eq!(pms.len(), 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_matchings() {
        let c5 = cycle(5);
        let f = perfect_2_matching(&c5).unwrap();
        assert!(f.is_valid_for(&c5));
        assert!(matches!(&f.components[..], [FactorComponent::Cycle(c)] if c.len() == 5));
        assert!(perfect_2_matching(&complete_bipartite(1, 3)).is_none());
        assert!(perfect_2_matching(&complete_bipartite(3, 2)).is_none());
        let k4 = complete_graph(4);
        assert!(perfect_2_matching(&k4).unwrap().is_valid_for(&k4));
    }

    #[test]
    fn regularizable_examples() {
        assert!(is_regularizable(&cycle(5)).unwrap());
        assert!(!is_regularizable(&complete_bipartite(1, 3)).unwrap());
        assert!(is_regularizable(&petersen()).unwrap());
        assert!(matches!(is_regularizable(&cycle(6)), Err(Error::Hypothesis(_))));
        let two = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert!(matches!(is_regularizable(&two), Err(Error::Hypothesis(_))));
    }
}
