//! Browser bindings. Every export takes plain strings and returns a JSON
//! string, either a result object or `{"error": ...}`.

use regraph::construct::{lift_to_rgraph, p_power};
use regraph::cuts::{is_r_graph, min_odd_cut, tight_cuts, BRUTE_FORCE_MAX};
use regraph::factors::{class1_decomposition, max_disjoint_pms, Search};
use regraph::io::{parse_mgf, write_mgf};
use regraph::iso::canonical_form;
use regraph::{Multigraph, VertexSet};
use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Search budget for the class test; the page stays responsive.
const NODE_CAP: u64 = 2_000_000;

/// Largest order analysed in the browser.
const MAX_ORDER: usize = 64;

#[derive(Serialize)]
struct Drawing {
    n: usize,
    /// `[u, v, multiplicity]`, one entry per parallel class.
    edges: Vec<[usize; 3]>,
}

fn drawing(g: &Multigraph) -> Drawing {
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let k = g.multiplicity(u, v);
            if k > 0 {
                edges.push([u, v, k]);
            }
        }
    }
    Drawing { n: g.n(), edges }
}

fn parse_list(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| format!("`{s}` is not a non-negative integer")))
        .collect()
}

fn summary(g: &Multigraph) -> Result<Value, String> {
    if g.n() > MAX_ORDER {
        return Err(format!("order {} exceeds {MAX_ORDER}", g.n()));
    }
    let r = g.regular_degree();
    let even = g.n() % 2 == 0 && g.n() > 0;
    let cut = if even { Some(min_odd_cut(g).map_err(|e| e.to_string())?) } else { None };
    let rg = r.is_some_and(|r| is_r_graph(g, r));
    let mut class = Value::Null;
    let mut pi = Value::Null;
    let mut matchings = Value::Null;
    let mut tight = Value::Null;
    if let (Some(r), true) = (r, rg) {
        match class1_decomposition(g, r, Some(NODE_CAP)).map_err(|e| e.to_string())? {
            Search::Found(pms) => {
                class = json!(1);
                pi = json!(r);
                matchings = json!(pms.iter().map(|m| &m.edges).collect::<Vec<_>>());
            }
            Search::Exhausted => {
                class = json!(2);
                if let Ok(pms) = max_disjoint_pms(g) {
                    pi = json!(pms.len());
                    matchings = json!(pms.iter().map(|m| &m.edges).collect::<Vec<_>>());
                }
            }
            Search::Capped => class = json!("undecided"),
        }
        if g.n() <= BRUTE_FORCE_MAX {
            let cuts = tight_cuts(g, r, true).map_err(|e| e.to_string())?;
            tight = json!(cuts.iter().map(|t| t.set.to_vec()).collect::<Vec<_>>());
        }
    }
    let cert = canonical_form(g).map_err(|e| e.to_string())?.certificate;
    Ok(json!({
        "n": g.n(),
        "m": g.m(),
        "r": r,
        "min_odd_cut": cut.as_ref().map(|c| c.value),
        "witness": cut.as_ref().map(|c| c.witness.to_vec()),
        "is_r_graph": rg,
        "class": class,
        "pi": pi,
        "matchings": matchings,
        "tight_cuts": tight,
        "certificate": cert.iter().map(|b| format!("{b:02x}")).collect::<String>(),
        "drawing": drawing(g),
        "mgf": write_mgf(g),
    }))
}

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn petersen_power_impl(counts: &str) -> Result<Value, String> {
    let counts = parse_list(counts)?;
    let counts: [u32; 6] = counts
        .iter()
        .map(|&c| u32::try_from(c).map_err(|_| "count too large".to_string()))
        .collect::<Result<Vec<_>, _>>()?
        .try_into()
        .map_err(|_| "give six counts, one per perfect matching".to_string())?;
    if counts.iter().sum::<u32>() > 6 {
        return Err("at most six extra matchings in the browser".into());
    }
    summary(&p_power(&counts).map_err(|e| e.to_string())?)
}

fn lift_impl(mgf: &str, contract: &str, r: usize) -> Result<Value, String> {
    let g = parse_mgf(mgf).map_err(|e| e.to_string())?;
    if g.n() > BRUTE_FORCE_MAX {
        return Err(format!("order {} exceeds {BRUTE_FORCE_MAX}", g.n()));
    }
    let set = parse_list(contract)?;
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return Err(format!("vertex {v} out of range"));
    }
    let x = VertexSet::from_vertices(g.n(), set);
    let (h, steps) = lift_to_rgraph(&g, &x, r).map_err(|e| e.to_string())?;
    Ok(json!({
        "lifts": steps.len(),
        "steps": steps,
        "before": drawing(&g),
        "after": summary(&h)?,
    }))
}

/// `P` plus `counts[i]` copies of its `i`-th perfect matching.
#[wasm_bindgen]
pub fn petersen_power(counts: &str) -> String {
    respond(petersen_power_impl(counts))
}

/// Contracts `contract` (comma-separated vertices) and lifts the result
/// back to a connected `r`-graph.
#[wasm_bindgen]
pub fn lift_demo(mgf: &str, contract: &str, r: usize) -> String {
    respond(lift_impl(mgf, contract, r))
}

/// Odd cuts, class, π and tight cuts of an MGF graph.
#[wasm_bindgen]
pub fn analyze(mgf: &str) -> String {
    respond(parse_mgf(mgf).map_err(|e| e.to_string()).and_then(|g| summary(&g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn petersen_power_reports_class_2() {
        let v = parse(&petersen_power("1,0,0,0,0,0"));
        assert_eq!(v["r"], 4);
        assert_eq!(v["class"], 2);
        assert_eq!(v["pi"], 2);
        assert_eq!(v["is_r_graph"], true);
        assert_eq!(v["drawing"]["edges"].as_array().unwrap().len(), 15);
    }

    #[test]
    fn bad_input_becomes_an_error_object() {
        assert!(parse(&petersen_power("1,2")).get("error").is_some());
        assert!(parse(&analyze("nonsense")).get("error").is_some());
        assert!(parse(&lift_demo("mgf 2\ne 0 1\n", "5", 1)).get("error").is_some());
    }

    #[test]
    fn lifting_restores_an_r_graph() {
        let p = parse(&petersen_power("0,0,0,0,0,0"));
        let v = parse(&lift_demo(p["mgf"].as_str().unwrap(), "0,1,2", 3));
        assert_eq!(v["after"]["is_r_graph"], true);
        assert_eq!(v["after"]["n"], 8);
    }

    #[test]
    fn analyze_k4() {
        let v = parse(&analyze("mgf 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n"));
        assert_eq!(v["class"], 1);
        assert_eq!(v["min_odd_cut"], 3);
        assert_eq!(v["tight_cuts"].as_array().unwrap().len(), 0);
    }
}
