//! Library routines against brute-force oracles written independently here.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;
use regraph::construct::{partitions_count, partitions_list, petersen};
use regraph::cuts::is_r_graph;
use regraph::enumerate::{generate, regular_multigraphs, simple_graphs, Filters, GenSpec};
use regraph::factors::{is_class1, perfect_matchings, pi};
use regraph::hcoloring::{find_hcoloring, verify_hcoloring, Mode, DEFAULT_NODE_CAP};
use regraph::iso::{are_isomorphic, automorphisms, canonical_form};
use regraph::random::{instance_rng, random_multigraph, random_r_graph};
use regraph::Multigraph;

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism by trying every vertex bijection on multiplicity matrices.
fn brute_isomorphic(a: &Multigraph, b: &Multigraph, perms: &[Vec<usize>]) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let (ma, mb) = (a.multiplicity_matrix(), b.multiplicity_matrix());
    let n = a.n();
    perms.iter().any(|p| (0..n).all(|u| (0..n).all(|v| ma[u][v] == mb[p[u]][p[v]])))
}

#[test]
fn isomorphism_matches_permutation_search() {
    for n in 2..=7 {
        let perms = permutations(n);
        let mut rng = instance_rng(1, n as u64);
        for t in 0..40 {
            let m = rng.gen_range(n / 2..=2 * n);
            let a = random_multigraph(n, m, &mut rng).unwrap();
            // half the time a relabelled copy, otherwise a fresh graph
            let b = if t % 2 == 0 {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(&mut rng);
                a.relabel(&p).unwrap()
            } else {
                random_multigraph(n, m, &mut rng).unwrap()
            };
            let brute = brute_isomorphic(&a, &b, &perms);
            assert_eq!(are_isomorphic(&a, &b).unwrap(), brute, "n = {n}");
            let same_cert = canonical_form(&a).unwrap().certificate == canonical_form(&b).unwrap().certificate;
            assert_eq!(same_cert, brute);
        }
    }
}

#[test]
fn automorphism_counts_match_labeled_graph_totals() {
    // every labeled simple graph appears n!/|Aut| times among 2^C(n,2)
    for n in 1..=6 {
        let total: u64 = simple_graphs(n)
            .unwrap()
            .iter()
            .map(|g| factorial(n) / automorphisms(g).unwrap().len() as u64)
            .sum();
        assert_eq!(total, 1 << (n * (n - 1) / 2), "n = {n}");
    }
}

/// Labeled loopless `r`-regular multigraphs on `n` vertices with
/// multiplicities at most `max_mult`, counted as symmetric matrices with
/// zero diagonal.
fn labeled_regular_count(r: usize, n: usize, max_mult: usize) -> u64 {
    type Memo = HashMap<(usize, usize, Vec<usize>), u64>;
    fn rec(i: usize, j: usize, cap: usize, left: &mut Vec<usize>, memo: &mut Memo) -> u64 {
        let n = left.len();
        if i == n {
            return 1;
        }
        if j == n {
            return if left[i] == 0 { rec(i + 1, i + 2, cap, left, memo) } else { 0 };
        }
        let key = (i, j, left.clone());
        if let Some(&c) = memo.get(&key) {
            return c;
        }
        let mut total = 0;
        for k in 0..=left[i].min(left[j]).min(cap) {
            left[i] -= k;
            left[j] -= k;
            total += rec(i, j + 1, cap, left, memo);
            left[i] += k;
            left[j] += k;
        }
        memo.insert(key, total);
        total
    }
    rec(0, 1, max_mult, &mut vec![r; n], &mut HashMap::new())
}

#[test]
fn regular_multigraph_classes_cover_every_labeled_graph() {
    for (r, n) in [(3, 4), (3, 6), (3, 8), (4, 6), (4, 8), (5, 6)] {
        let total: u64 = regular_multigraphs(r, n)
            .unwrap()
            .iter()
            .map(|g| factorial(n) / automorphisms(g).unwrap().len() as u64)
            .sum();
        assert_eq!(total, labeled_regular_count(r, n, r), "r = {r}, n = {n}");
    }
}

#[test]
fn simple_cubic_classes_cover_every_labeled_graph() {
    for n in [4, 6, 8, 10] {
        let total: u64 = regular_multigraphs(3, n)
            .unwrap()
            .iter()
            .filter(|g| g.is_simple())
            .map(|g| factorial(n) / automorphisms(g).unwrap().len() as u64)
            .sum();
        assert_eq!(total, labeled_regular_count(3, n, 1), "n = {n}");
    }
}

#[test]
fn emitted_graphs_are_pairwise_non_isomorphic_and_filtered() {
    let filters = Filters { connected: true, r_graph: true, ..Default::default() };
    let graphs = generate(&GenSpec { r: 4, n_max: 6, filters }).unwrap();
    let certs: BTreeSet<Vec<u8>> = graphs.iter().map(|g| canonical_form(g).unwrap().certificate).collect();
    assert_eq!(certs.len(), graphs.len());
    assert!(graphs.iter().all(|g| g.is_connected() && is_r_graph(g, 4)));
}

#[test]
fn removing_two_vertices_lands_in_the_previous_level() {
    let mut rng = instance_rng(4, 0);
    let prev: BTreeSet<Vec<u8>> =
        regular_multigraphs(3, 6).unwrap().iter().map(|g| canonical_form(g).unwrap().certificate).collect();
    for g in regular_multigraphs(3, 8).unwrap() {
        let Some((x, y)) = (0..8).flat_map(|x| (x + 1..8).map(move |y| (x, y))).find(|&(x, y)| g.multiplicity(x, y) == 0)
        else {
            continue;
        };
        let keep: Vec<usize> = (0..8).filter(|&v| v != x && v != y).collect();
        let idx = |v: usize| keep.iter().position(|&k| k == v).unwrap();
        let mut pairs = Vec::new();
        let mut loose = Vec::new();
        for (_, u, v) in g.edges() {
            match (keep.contains(&u), keep.contains(&v)) {
                (true, true) => pairs.push((idx(u), idx(v))),
                (true, false) => loose.push(idx(u)),
                (false, true) => loose.push(idx(v)),
                _ => unreachable!("x and y are not adjacent"),
            }
        }
        // re-pair the loose ends without loops
        let h = loop {
            loose.shuffle(&mut rng);
            if loose.chunks(2).all(|c| c[0] != c[1]) {
                let mut all = pairs.clone();
                all.extend(loose.chunks(2).map(|c| (c[0], c[1])));
                break Multigraph::from_edges(6, all).unwrap();
            }
        };
        assert!(prev.contains(&canonical_form(&h).unwrap().certificate));
    }
}

/// Perfect matchings as edge subsets of size n/2 covering every vertex.
fn brute_pm_count(g: &Multigraph) -> usize {
    fn rec(g: &Multigraph, e: usize, left: usize, covered: &mut [bool]) -> usize {
        if left == 0 {
            return 1;
        }
        if e == g.m() {
            return 0;
        }
        let mut count = rec(g, e + 1, left, covered);
        let (u, v) = g.endpoints(e);
        if !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            count += rec(g, e + 1, left - 1, covered);
            covered[u] = false;
            covered[v] = false;
        }
        count
    }
    rec(g, 0, g.n() / 2, &mut vec![false; g.n()])
}

#[test]
fn perfect_matching_counts() {
    for i in 0..60 {
        let mut rng = instance_rng(2, i);
        let n = 2 * rng.gen_range(1..=5);
        let m = rng.gen_range(n / 2..=2 * n);
        let g = random_multigraph(n, m, &mut rng).unwrap();
        let found: Vec<_> = perfect_matchings(&g).collect();
        let distinct: BTreeSet<_> = found.iter().map(|pm| pm.edges.clone()).collect();
        assert_eq!(distinct.len(), found.len());
        assert_eq!(found.len(), brute_pm_count(&g));
    }
}

/// Proper `k`-edge-colouring by trying colours edge by edge.
fn brute_colourable(g: &Multigraph, k: usize) -> bool {
    fn rec(g: &Multigraph, e: usize, k: usize, col: &mut Vec<usize>) -> bool {
        if e == g.m() {
            return true;
        }
        for c in 0..k {
            let clash = (0..e).any(|f| col[f] == c && g.shares_vertex(e, f));
            if !clash {
                col[e] = c;
                if rec(g, e + 1, k, col) {
                    return true;
                }
            }
        }
        false
    }
    rec(g, 0, k, &mut vec![usize::MAX; g.m()])
}

/// Largest family of pairwise disjoint perfect matchings, by search over
/// the full matching list.
fn brute_pi(g: &Multigraph) -> usize {
    let pms: Vec<BTreeSet<usize>> = perfect_matchings(g).map(|pm| pm.edges.into_iter().collect()).collect();
    fn rec(pms: &[BTreeSet<usize>], start: usize, used: &BTreeSet<usize>) -> usize {
        let mut best = 0;
        for i in start..pms.len() {
            if pms[i].is_disjoint(used) {
                let next: BTreeSet<usize> = used.union(&pms[i]).copied().collect();
                best = best.max(1 + rec(pms, i + 1, &next));
            }
        }
        best
    }
    rec(&pms, 0, &BTreeSet::new())
}

#[test]
fn class_and_packing_number() {
    for i in 0..40 {
        let mut rng = instance_rng(3, i);
        let r = [3, 4][i as usize % 2];
        let n = [2, 4, 6][rng.gen_range(0..3)];
        let g = random_r_graph(r, n, &mut rng).unwrap();
        let class1 = is_class1(&g, r).unwrap().is_some();
        assert_eq!(class1, brute_colourable(&g, r));
        let p = pi(&g).unwrap();
        assert_eq!(p, brute_pi(&g));
        assert!(if class1 { p == r } else { p + 2 <= r });
    }
    let p = petersen();
    assert_eq!(brute_pi(&p), 1);
    assert_eq!(pi(&p).unwrap(), 1);
}

#[test]
fn colourings_compose_and_respect_class() {
    let filters = Filters { connected: true, r_graph: true, ..Default::default() };
    let guests = generate(&GenSpec { r: 3, n_max: 8, filters }).unwrap();
    let hosts = generate(&GenSpec { r: 3, n_max: 6, filters }).unwrap();
    let mut composed = 0;
    for g in &guests {
        for h in &hosts {
            let out = find_hcoloring(g, h, Mode::First, DEFAULT_NODE_CAP).unwrap();
            let Some(f) = out.colorings.first() else { continue };
            assert!(verify_hcoloring(g, h, f).is_ok());
            if is_class1(h, 3).unwrap().is_some() {
                assert!(is_class1(g, 3).unwrap().is_some());
            }
            for k in &hosts {
                let inner = find_hcoloring(h, k, Mode::First, DEFAULT_NODE_CAP).unwrap();
                if let Some(f2) = inner.colorings.first() {
                    assert!(verify_hcoloring(g, k, &f.then(f2)).is_ok());
                    composed += 1;
                }
            }
        }
    }
    assert!(composed > 0);
}

#[test]
fn partition_counts_match_lists() {
    for n in 0..=12 {
        for k in 0..=8 {
            assert_eq!(partitions_count(n, k) as usize, partitions_list(n, k).len(), "n = {n}, k = {k}");
        }
    }
    assert_eq!(partitions_count(6, 6), 11);
}
