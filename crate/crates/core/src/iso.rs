//! Canonical forms, isomorphism and automorphisms of multigraphs.
//!
//! Canonical labelling is individualisation-refinement: colour refinement
//! where edge multiplicity acts as a weight, branching on the first
//! non-singleton cell, keeping the lexicographically least adjacency
//! certificate. Subtrees equivalent under already discovered automorphisms
//! that fix the branch prefix are skipped.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factors::PerfectMatching;
use crate::graph::{EdgeId, Multigraph, VertexId};

/// Largest order accepted by canonical labelling.
pub const CANON_MAX: usize = 64;

/// Default bound on the number of automorphisms listed.
pub const AUTOMORPHISM_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    /// Order, then the upper triangle of the relabelled multiplicity
    /// matrix row by row, each entry as a big-endian `u16`.
    pub certificate: Vec<u8>,
    /// `labeling[v]` is the canonical label of `v`.
    pub labeling: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Automorphism {
    /// Vertex permutation `θ`.
    pub vertices: Vec<VertexId>,
    /// Edge permutation `φ`; parallels are paired in id order.
    pub edges: Vec<EdgeId>,
}

impl Automorphism {
    /// Extends a multiplicity-preserving vertex permutation to edges.
    pub fn from_vertex_map(g: &Multigraph, theta: Vec<VertexId>) -> Self {
        let mut edges = vec![usize::MAX; g.m()];
        for (e, u, v) in g.edges() {
            if edges[e] != usize::MAX {
                continue;
            }
            let src = g.parallel_class(u, v);
            let dst = g.parallel_class(theta[u], theta[v]);
            debug_assert_eq!(src.len(), dst.len());
            for (a, b) in src.into_iter().zip(dst) {
                edges[a] = b;
            }
        }
        Automorphism { vertices: theta, edges }
    }
}

fn check_order(g: &Multigraph) -> Result<()> {
    if g.n() > CANON_MAX {
        return Err(Error::OrderBound { n: g.n(), max: CANON_MAX, what: "canonical labelling" });
    }
    Ok(())
}

/// Refines `color` (ranks `0..k`) to the coarsest equitable partition
/// below it. Cell order depends only on the graph and the input colouring.
fn refine(w: &[Vec<(VertexId, usize)>], color: &mut [usize]) {
    let n = color.len();
    let mut cells = count_cells(color);
    loop {
        let sigs: Vec<(usize, Vec<(usize, usize)>)> = (0..n)
            .map(|v| {
                let mut s: Vec<(usize, usize)> = w[v].iter().map(|&(x, k)| (color[x], k)).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        rank_into(&sigs, color);
        let now = count_cells(color);
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn count_cells(color: &[usize]) -> usize {
    color.iter().max().map_or(0, |&c| c + 1)
}

fn rank_into<T: Ord>(keys: &[T], color: &mut [usize]) {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut rank = 0;
    for (i, &v) in order.iter().enumerate() {
        if i > 0 && keys[order[i - 1]] != keys[v] {
            rank += 1;
        }
        color[v] = rank;
    }
}

fn initial_coloring(g: &Multigraph, w: &[Vec<(VertexId, usize)>]) -> Vec<usize> {
    let keys: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut k: Vec<usize> = w[v].iter().map(|&(_, m)| m).collect();
            k.sort_unstable();
            k
        })
        .collect();
    let mut color = vec![0; g.n()];
    rank_into(&keys, &mut color);
    color
}

fn certificate(matrix: &[Vec<usize>], labeling: &[VertexId]) -> Vec<u8> {
    let n = labeling.len();
    let mut inv = vec![0; n];
    for (v, &l) in labeling.iter().enumerate() {
        inv[l] = v;
    }
    let mut out = Vec::with_capacity(1 + n * n);
    out.push(n as u8);
    for i in 0..n {
        for j in i + 1..n {
            let m = matrix[inv[i]][inv[j]].min(u16::MAX as usize) as u16;
            out.extend_from_slice(&m.to_be_bytes());
        }
    }
    out
}

struct Canon<'a> {
    w: &'a [Vec<(VertexId, usize)>],
    matrix: Vec<Vec<usize>>,
    best: Option<(Vec<u8>, Vec<VertexId>)>,
    generators: Vec<Vec<VertexId>>,
}

impl Canon<'_> {
    fn search(&mut self, color: Vec<usize>, prefix: &mut Vec<VertexId>) {
        let n = color.len();
        let k = count_cells(&color);
        if k == n {
            let cert = certificate(&self.matrix, &color);
            match &self.best {
                None => self.best = Some((cert, color)),
                Some((b, lab)) => match cert.cmp(b) {
                    std::cmp::Ordering::Less => self.best = Some((cert, color)),
                    std::cmp::Ordering::Equal => {
                        // θ maps v to the vertex with the same label in the best leaf
                        let mut inv = vec![0; n];
                        for (v, &l) in lab.iter().enumerate() {
                            inv[l] = v;
                        }
                        let theta: Vec<VertexId> = color.iter().map(|&l| inv[l]).collect();
                        if theta.iter().enumerate().any(|(v, &t)| v != t) {
                            self.generators.push(theta);
                        }
                    }
                    std::cmp::Ordering::Greater => {}
                },
            }
            return;
        }
        let mut size = vec![0usize; k];
        for &c in &color {
            size[c] += 1;
        }
        let target = (0..k).find(|&c| size[c] > 1).expect("not discrete");
        let cell: Vec<VertexId> = (0..n).filter(|&v| color[v] == target).collect();
        let mut explored: Vec<VertexId> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let keys: Vec<(usize, bool)> = (0..n).map(|x| (color[x], x != v)).collect();
            let mut child = vec![0; n];
            rank_into(&keys, &mut child);
            refine(self.w, &mut child);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// `v` lies in the orbit of an explored sibling under the group
    /// generated by known automorphisms fixing the prefix pointwise.
    fn equivalent_to_explored(&self, v: VertexId, explored: &[VertexId], prefix: &[VertexId]) -> bool {
        let gens: Vec<&Vec<VertexId>> =
            self.generators.iter().filter(|g| prefix.iter().all(|&p| g[p] == p)).collect();
        if gens.is_empty() {
            return false;
        }
        let n = gens[0].len();
        let mut seen = vec![false; n];
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(x) = stack.pop() {
            if explored.contains(&x) {
                return true;
            }
            for g in &gens {
                let y = g[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

pub fn canonical_form(g: &Multigraph) -> Result<CanonicalForm> {
    check_order(g)?;
    let w: Vec<Vec<(VertexId, usize)>> = (0..g.n()).map(|v| g.weighted_neighbors(v)).collect();
    let mut color = initial_coloring(g, &w);
    refine(&w, &mut color);
    let mut c = Canon { w: &w, matrix: g.multiplicity_matrix(), best: None, generators: Vec::new() };
    c.search(color, &mut Vec::new());
    let (certificate, labeling) = c.best.unwrap_or_else(|| (vec![0], Vec::new()));
    Ok(CanonicalForm { certificate, labeling })
}

pub fn are_isomorphic(g: &Multigraph, h: &Multigraph) -> Result<bool> {
    check_order(g)?;
    check_order(h)?;
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    let degrees = |x: &Multigraph| {
        let mut d: Vec<usize> = (0..x.n()).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return Ok(false);
    }
    Ok(canonical_form(g)?.certificate == canonical_form(h)?.certificate)
}

/// All automorphisms, identity first, by backtracking over vertex images
/// constrained to the stable colouring. Errors once more than `cap` exist.
pub fn automorphisms_capped(g: &Multigraph, cap: usize) -> Result<Vec<Automorphism>> {
    check_order(g)?;
    let n = g.n();
    let w: Vec<Vec<(VertexId, usize)>> = (0..n).map(|v| g.weighted_neighbors(v)).collect();
    let mut color = initial_coloring(g, &w);
    refine(&w, &mut color);
    let matrix = g.multiplicity_matrix();
    // BFS order keeps each new vertex adjacent to mapped ones where possible
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for s in 0..n {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &(x, _) in &w[v] {
                if !placed[x] {
                    placed[x] = true;
                    order.push(x);
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut theta = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let ok = extend_auto(&order, 0, &color, &matrix, &mut theta, &mut used, &mut out, cap);
    if !ok {
        return Err(Error::CapExceeded(cap as u64));
    }
    Ok(out.into_iter().map(|t| Automorphism::from_vertex_map(g, t)).collect())
}

pub fn automorphisms(g: &Multigraph) -> Result<Vec<Automorphism>> {
    automorphisms_capped(g, AUTOMORPHISM_CAP)
}

#[allow(clippy::too_many_arguments)]
fn extend_auto(
    order: &[VertexId],
    depth: usize,
    color: &[usize],
    matrix: &[Vec<usize>],
    theta: &mut [VertexId],
    used: &mut [bool],
    out: &mut Vec<Vec<VertexId>>,
    cap: usize,
) -> bool {
    if depth == order.len() {
        if out.len() >= cap {
            return false;
        }
        out.push(theta.to_vec());
        return true;
    }
    let v = order[depth];
    // identity image first so the identity is listed first
    let candidates = std::iter::once(v).chain((0..theta.len()).filter(|&x| x != v));
    for x in candidates {
        if used[x] || color[x] != color[v] {
            continue;
        }
        if order[..depth].iter().any(|&u| matrix[u][v] != matrix[theta[u]][x]) {
            continue;
        }
        theta[v] = x;
        used[x] = true;
        let ok = extend_auto(order, depth + 1, color, matrix, theta, used, out, cap);
        used[x] = false;
        theta[v] = usize::MAX;
        if !ok {
            return false;
        }
    }
    true
}

/// Permutations induced on an `Aut`-invariant list of perfect matchings:
/// `p[i] = j` when the automorphism maps `pms[i]` onto `pms[j]`.
pub fn pm_action(g: &Multigraph, pms: &[PerfectMatching]) -> Result<BTreeSet<Vec<usize>>> {
    let mut out = BTreeSet::new();
    for a in automorphisms(g)? {
        let mut perm = Vec::with_capacity(pms.len());
        for m in pms {
            let mut img: Vec<EdgeId> = m.edges.iter().map(|&e| a.edges[e]).collect();
            img.sort_unstable();
            let j = pms
                .iter()
                .position(|p| p.edges == img)
                .ok_or_else(|| Error::Invalid("matching list is not invariant under automorphisms".into()))?;
            perm.push(j);
        }
        out.insert(perm);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_graph, cycle, p_power, petersen, petersen_pms};

    fn shuffled(g: &Multigraph, seed: u64) -> Multigraph {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        g.relabel(&perm).unwrap()
    }

    #[test]
    fn canonical_form_is_relabel_invariant() {
        let p = petersen();
        let c = canonical_form(&p).unwrap();
        for seed in 0..20 {
            assert_eq!(canonical_form(&shuffled(&p, seed)).unwrap().certificate, c.certificate);
        }
    }

    #[test]
    fn distinguishes_small_graphs() {
        let two_triangles = cycle(3).disjoint_union(&cycle(3));
        assert!(!are_isomorphic(&cycle(6), &two_triangles).unwrap());
        assert!(are_isomorphic(&complete_graph(4), &shuffled(&complete_graph(4), 3)).unwrap());
    }

    #[test]
    fn partitions_separate_powers() {
        let a = p_power(&[2, 0, 0, 0, 0, 0]).unwrap();
        let b = p_power(&[1, 1, 0, 0, 0, 0]).unwrap();
        let c = p_power(&[0, 0, 1, 0, 1, 0]).unwrap();
        assert!(!are_isomorphic(&a, &b).unwrap());
        assert!(are_isomorphic(&b, &c).unwrap());
    }

    #[test]
    fn petersen_group() {
        let auts = automorphisms(&petersen()).unwrap();
        assert_eq!(auts.len(), 120);
        assert!(auts[0].vertices.iter().enumerate().all(|(i, &v)| i == v));
        let action = pm_action(&petersen(), &petersen_pms()).unwrap();
        assert_eq!(action.len(), 120);
        assert!(action.contains(&vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn automorphism_cap() {
        let g = Multigraph::empty(9);
        assert_eq!(automorphisms_capped(&g, 1000), Err(Error::CapExceeded(1000)));
    }

    #[test]
    fn order_bound() {
        assert!(matches!(canonical_form(&Multigraph::empty(65)), Err(Error::OrderBound { .. })));
    }
}
