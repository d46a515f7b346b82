//! Exhaustive generation of small regular multigraphs and simple graphs,
//! one representative per isomorphism class.
//!
//! Regular multigraphs of even order `n ≤ r + 1` come from direct
//! enumeration of multiplicity matrices. Larger orders are built from
//! every graph of order `n - 2`: remove `r` edges and attach their `2r`
//! endpoints to two new vertices `x`, `y`, `r` endpoints each. Every
//! regular graph of order `n ≥ r + 2` has two non-adjacent vertices, and
//! deleting them and re-pairing their former edges without loops inverts
//! this step, so each level is complete. Levels keep disconnected graphs;
//! filters apply only to the output.

use std::collections::BTreeMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::cuts::is_r_graph;
use crate::error::{Error, Result};
use crate::factors::is_class1;
use crate::graph::{Multigraph, VertexId};
use crate::iso::canonical_form;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Filters {
    pub connected: bool,
    pub r_graph: bool,
    pub simple: bool,
    /// Keep only class 1 or only class 2 graphs.
    pub class: Option<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenSpec {
    pub r: usize,
    pub n_max: usize,
    pub filters: Filters,
}

/// Largest order generated for degree `r`.
pub fn max_order(r: usize) -> usize {
    match r {
        0..=3 => 12,
        4 => 10,
        _ => 8,
    }
}

fn check_spec(r: usize, n: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::Invalid("degree must be at least 2".into()));
    }
    if n % 2 == 1 {
        return Err(Error::Invalid("only even orders are generated".into()));
    }
    if n > max_order(r) {
        return Err(Error::OrderBound { n, max: max_order(r), what: "regular graph generation" });
    }
    Ok(())
}

/// Rebuilds `g` with canonical vertex labels and edges in lexicographic
/// order, so equal classes give equal values.
pub fn canonical_graph(g: &Multigraph) -> Result<(Vec<u8>, Multigraph)> {
    let c = canonical_form(g)?;
    let mut pairs: Vec<(VertexId, VertexId)> = g
        .edges()
        .map(|(_, u, v)| {
            let (a, b) = (c.labeling[u], c.labeling[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    Ok((c.certificate, Multigraph::from_edges(g.n(), pairs)?))
}

type Level = BTreeMap<Vec<u8>, Multigraph>;

fn insert_all(level: &mut Level, graphs: impl IntoIterator<Item = Multigraph>) -> Result<()> {
    for g in graphs {
        let (cert, canon) = canonical_graph(&g)?;
        level.entry(cert).or_insert(canon);
    }
    Ok(())
}

/// Symmetric multiplicity matrices with zero diagonal and row sums `r`.
fn direct_level(r: usize, n: usize) -> Result<Level> {
    fn rec(
        n: usize,
        i: usize,
        j: usize,
        left: &mut Vec<usize>,
        pairs: &mut Vec<(usize, usize)>,
        out: &mut Vec<Multigraph>,
    ) {
        if i == n {
            out.push(Multigraph::from_edges(n, pairs.iter().copied()).expect("valid"));
            return;
        }
        if j == n {
            if left[i] == 0 {
                rec(n, i + 1, i + 2, left, pairs, out);
            }
            return;
        }
        let most = left[i].min(left[j]);
        for k in 0..=most {
            left[i] -= k;
            left[j] -= k;
            pairs.extend(std::iter::repeat_n((i, j), k));
            rec(n, i, j + 1, left, pairs, out);
            pairs.truncate(pairs.len() - k);
            left[i] += k;
            left[j] += k;
        }
    }
    let mut graphs = Vec::new();
    if n == 0 {
        graphs.push(Multigraph::empty(0));
    } else {
        rec(n, 0, 1, &mut vec![r; n], &mut Vec::new(), &mut graphs);
    }
    let mut level = Level::new();
    insert_all(&mut level, graphs)?;
    Ok(level)
}

/// Every way to remove `r` edges from `base` and hang their endpoints on
/// two new vertices, canonicalised and deduplicated.
fn augment(base: &Multigraph, r: usize) -> Result<Level> {
    let n = base.n();
    let (x, y) = (n, n + 1);
    // parallel classes with their multiplicities
    let classes: Vec<((VertexId, VertexId), usize)> = {
        let mut c: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
        for (_, u, v) in base.edges() {
            *c.entry((u, v)).or_default() += 1;
        }
        c.into_iter().collect()
    };
    let mut level = Level::new();
    let mut take = vec![0usize; classes.len()];
    choose_edges(&classes, 0, r, &mut take, &mut |take| {
        let mut removed = Vec::new();
        for (k, &t) in take.iter().enumerate() {
            removed.extend(std::iter::repeat_n(classes[k].0, t));
        }
        let mut remaining: Vec<(VertexId, VertexId)> = Vec::new();
        for (k, &((u, v), m)) in classes.iter().enumerate() {
            remaining.extend(std::iter::repeat_n((u, v), m - take[k]));
        }
        let ends: Vec<VertexId> = removed.iter().flat_map(|&(u, v)| [u, v]).collect();
        // choose which r of the 2r endpoints go to x; the first always does
        let total = ends.len();
        for mask in 0u32..(1 << total) {
            if mask & 1 == 0 || mask.count_ones() as usize != r {
                continue;
            }
            let mut pairs = remaining.clone();
            for (i, &a) in ends.iter().enumerate() {
                pairs.push((a, if mask >> i & 1 == 1 { x } else { y }));
            }
            let g = Multigraph::from_edges(n + 2, pairs).expect("valid");
            if let Ok((cert, canon)) = canonical_graph(&g) {
                level.entry(cert).or_insert(canon);
            }
        }
    });
    Ok(level)
}

fn choose_edges(
    classes: &[((VertexId, VertexId), usize)],
    k: usize,
    left: usize,
    take: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if left == 0 {
        visit(take);
        return;
    }
    if k == classes.len() {
        return;
    }
    for t in (0..=classes[k].1.min(left)).rev() {
        take[k] = t;
        choose_edges(classes, k + 1, left - t, take, visit);
    }
    take[k] = 0;
}

fn merge(levels: Vec<Level>) -> Level {
    let mut out = Level::new();
    for l in levels {
        for (k, v) in l {
            out.entry(k).or_insert(v);
        }
    }
    out
}

/// All `r`-regular loopless multigraphs of even order `n`, connected or
/// not, one per isomorphism class, ordered by certificate.
pub fn regular_multigraphs(r: usize, n: usize) -> Result<Vec<Multigraph>> {
    check_spec(r, n)?;
    Ok(regular_level(r, n)?.into_values().collect())
}

fn regular_level(r: usize, n: usize) -> Result<Level> {
    if n <= r + 1 {
        return direct_level(r, n);
    }
    let prev: Vec<Multigraph> = regular_level(r, n - 2)?.into_values().collect();
    #[cfg(feature = "parallel")]
    let parts: Vec<Level> = prev.par_iter().map(|b| augment(b, r)).collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Level> = prev.iter().map(|b| augment(b, r)).collect::<Result<_>>()?;
    Ok(merge(parts))
}

fn passes(g: &Multigraph, r: usize, f: &Filters) -> Result<bool> {
    if f.connected && !g.is_connected() {
        return Ok(false);
    }
    if f.simple && !g.is_simple() {
        return Ok(false);
    }
    if f.r_graph && !is_r_graph(g, r) {
        return Ok(false);
    }
    if let Some(class) = f.class {
        let c1 = is_class1(g, r)?.is_some();
        if c1 != (class == 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Representatives of every class passing the filters with even order
/// `2..=n_max`, by order and then certificate.
pub fn generate(spec: &GenSpec) -> Result<Vec<Multigraph>> {
    check_spec(spec.r, spec.n_max)?;
    let mut out = Vec::new();
    for n in (2..=spec.n_max).step_by(2) {
        for g in regular_level(spec.r, n)?.into_values() {
            if passes(&g, spec.r, &spec.filters)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// Largest order of [`simple_graphs`].
pub const SIMPLE_MAX: usize = 9;

/// All simple graphs of order `n`, one per isomorphism class, ordered by
/// certificate. Built by adding a vertex joined to every subset of the
/// vertices of each graph of order `n - 1`.
pub fn simple_graphs(n: usize) -> Result<Vec<Multigraph>> {
    if n > SIMPLE_MAX {
        return Err(Error::OrderBound { n, max: SIMPLE_MAX, what: "simple graph generation" });
    }
    Ok(simple_level(n)?.into_values().collect())
}

fn simple_level(n: usize) -> Result<Level> {
    if n == 0 {
        return direct_level(0, 0);
    }
    let prev: Vec<Multigraph> = simple_level(n - 1)?.into_values().collect();
    let extend = |b: &Multigraph| -> Result<Level> {
        let k = b.n();
        let base: Vec<(VertexId, VertexId)> = b.edges().map(|(_, u, v)| (u, v)).collect();
        let mut graphs = Vec::with_capacity(1 << k);
        for mask in 0u32..(1 << k) {
            let mut pairs = base.clone();
            pairs.extend((0..k).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k)));
            graphs.push(Multigraph::from_edges(k + 1, pairs)?);
        }
        let mut level = Level::new();
        insert_all(&mut level, graphs)?;
        Ok(level)
    };
    #[cfg(feature = "parallel")]
    let parts: Vec<Level> = prev.par_iter().map(extend).collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Level> = prev.iter().map(extend).collect::<Result<_>>()?;
    Ok(merge(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{dipole, petersen};
    use crate::iso::are_isomorphic;

    fn cubic(filters: Filters, n: usize) -> Vec<Multigraph> {
        generate(&GenSpec { r: 3, n_max: n, filters }).unwrap().into_iter().filter(|g| g.n() == n).collect()
    }

    #[test]
    fn simple_cubic_counts() {
        let f = Filters { connected: true, simple: true, ..Default::default() };
        let counts: Vec<usize> = [4, 6, 8, 10].iter().map(|&n| cubic(f, n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19]);
    }

    #[test]
    fn tiny_orders() {
        let two = regular_multigraphs(3, 2).unwrap();
        assert_eq!(two.len(), 1);
        assert!(are_isomorphic(&two[0], &dipole(3)).unwrap());
        assert!(is_r_graph(&two[0], 3));
    }

    #[test]
    fn petersen_is_generated() {
        let f = Filters { connected: true, r_graph: true, ..Default::default() };
        let tens = cubic(f, 10);
        assert_eq!(tens.iter().filter(|g| are_isomorphic(g, &petersen()).unwrap()).count(), 1);
    }

    #[test]
    fn bounds() {
        assert!(matches!(regular_multigraphs(4, 12), Err(Error::OrderBound { .. })));
        assert!(regular_multigraphs(3, 5).is_err());
    }

    #[test]
    fn small_simple_graph_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| simple_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }
}
