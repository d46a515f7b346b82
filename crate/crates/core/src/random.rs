//! Seeded instance sampling. Every sampler draws from a [`ChaCha8Rng`], so
//! a seed fixes the whole stream on every platform.
//!
//! Random `r`-graphs are not uniform: a random cubic base (configuration
//! pairing, loops rejected) plus `r - 3` random perfect matchings of it,
//! rejected until connected and an `r`-graph.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

use crate::cuts::is_r_graph;
use crate::error::{Error, Result};
use crate::factors::perfect_matchings;
use crate::graph::{EdgeId, Multigraph, VertexId, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for instance `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r
}

const MAX_ATTEMPTS: usize = 10_000;

/// Loopless cubic multigraph from a random pairing of `3n` half-edges.
pub fn random_cubic(n: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    random_regular_pairing(n, 3, rng)
}

/// Loopless `d`-regular multigraph from a random pairing of half-edges.
pub fn random_regular_pairing(n: usize, d: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    if (n * d) % 2 == 1 || (n < 2 && d > 0) {
        return Err(Error::Invalid(format!("no loopless {d}-regular graph of order {n}")));
    }
    let mut points: Vec<VertexId> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    for _ in 0..MAX_ATTEMPTS {
        points.shuffle(rng);
        if points.chunks(2).all(|p| p[0] != p[1]) {
            return Multigraph::from_edges(n, points.chunks(2).map(|p| (p[0], p[1])));
        }
    }
    Err(Error::Invalid("pairing kept producing loops".into()))
}

/// A perfect matching of `g` found after a random relabelling, so repeated
/// calls spread over the matchings.
pub fn random_perfect_matching(g: &Multigraph, rng: &mut impl Rng) -> Option<Vec<EdgeId>> {
    let mut perm: Vec<VertexId> = (0..g.n()).collect();
    perm.shuffle(rng);
    let h = g.relabel(&perm).ok()?;
    // relabel keeps edge ids
    let m = perfect_matchings(&h).next()?;
    Some(m.edges)
}

/// Connected `r`-graph of even order `n ≥ 2`, `r ≥ 3`.
pub fn random_r_graph(r: usize, n: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    if r < 3 || n < 2 || n % 2 == 1 {
        return Err(Error::Invalid("need r >= 3 and even n >= 2".into()));
    }
    for _ in 0..MAX_ATTEMPTS {
        let base = random_cubic(n, rng)?;
        let mut extra = Vec::new();
        let mut ok = true;
        for _ in 0..r - 3 {
            match random_perfect_matching(&base, rng) {
                Some(m) => extra.extend(m.iter().map(|&e| base.endpoints(e))),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let g = base.add_edges(&extra)?;
        if g.is_connected() && is_r_graph(&g, r) {
            return Ok(g);
        }
    }
    Err(Error::Invalid(format!("no {r}-graph of order {n} sampled")))
}

/// Loopless multigraph on `n` vertices with `m` uniformly drawn edges.
pub fn random_multigraph(n: usize, m: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    if n < 2 && m > 0 {
        return Err(Error::Invalid("edges need two vertices".into()));
    }
    let pairs: Vec<(VertexId, VertexId)> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    Multigraph::from_edges(n, pairs)
}

/// Uniform non-empty proper subset of `0..n` with at least `min_size`
/// elements.
pub fn random_proper_subset(n: usize, min_size: usize, rng: &mut impl Rng) -> VertexSet {
    assert!(n >= 2 && min_size < n);
    let size = rng.gen_range(min_size.max(1)..n);
    let mut vs: Vec<VertexId> = (0..n).collect();
    vs.shuffle(rng);
    VertexSet::from_vertices(n, vs[..size].iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samplers_are_reproducible() {
        let a = random_r_graph(4, 10, &mut rng(7)).unwrap();
        let b = random_r_graph(4, 10, &mut rng(7)).unwrap();
        assert_eq!(a, b);
        assert!(is_r_graph(&a, 4) && a.is_connected());
    }

    #[test]
    fn streams_differ() {
        let a = random_cubic(12, &mut instance_rng(1, 0)).unwrap();
        let b = random_cubic(12, &mut instance_rng(1, 1)).unwrap();
        assert_ne!(a, b);
        assert!(a.is_regular(3));
    }

    #[test]
    fn matchings_and_subsets() {
        let g = random_r_graph(3, 8, &mut rng(3)).unwrap();
        let m = random_perfect_matching(&g, &mut rng(4)).unwrap();
        assert!(crate::factors::covers_exactly_once(&g, &m));
        let x = random_proper_subset(8, 5, &mut rng(5));
        assert!(x.len() >= 5 && x.len() < 8);
        let h = random_multigraph(6, 20, &mut rng(6)).unwrap();
        assert_eq!(h.m(), 20);
    }
}
