//! Content-addressed ids and DOT output.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::homology::hom_dim;
use crate::module::{injective, projective, simple, FDModule};

/// Iso-class fingerprint of a module: `dim Hom(E, M)` and `dim Hom(M, E)`
/// for every simple, projective and injective `E`, preceded by the total
/// dimension.
pub fn fingerprint(m: &FDModule) -> Result<Vec<usize>> {
    let alg = m.algebra();
    let mut out = vec![m.dim()];
    for v in 0..alg.vertex_count() {
        for e in [simple(alg, v), projective(alg, v), injective(alg, v)] {
            out.push(hom_dim(&e, m)?);
            out.push(hom_dim(m, &e)?);
        }
    }
    Ok(out)
}

/// Hash of a sorted list of summand fingerprints.
pub fn id_from_fingerprints(parts: &[Vec<usize>]) -> String {
    let mut sorted = parts.to_vec();
    sorted.sort();
    let mut h = Sha256::new();
    for fp in &sorted {
        for x in fp {
            h.update((*x as u64).to_le_bytes());
        }
        h.update([0xff]);
    }
    hex::encode(&h.finalize()[..8])
}

/// Undirected graph in DOT syntax; node labels and edge labels are given.
pub fn dot_graph(name: &str, nodes: &[String], edges: &[(usize, usize, String)]) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{name}\" {{").unwrap();
    for (i, label) in nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
    }
    for (a, b, label) in edges {
        if label.is_empty() {
            writeln!(out, "  n{a} -- n{b};").unwrap();
        } else {
            writeln!(out, "  n{a} -- n{b} [label=\"{label}\"];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// True when the graph on `n` nodes is connected (the empty graph counts).
pub fn is_connected(n: usize, edges: &[(usize, usize, String)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for (a, b, _) in edges {
        adj[*a].push(*b);
        adj[*b].push(*a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
