//! Planarity for small graphs: Euler prefilter, then an exhaustive
//! K5/K3,3-minor search by edge contraction with memoization.
//!
//! By Wagner's theorem a graph is planar iff it has neither a K5 nor a K3,3
//! minor, and since both obstructions have minimum degree 3, vertices of
//! degree <= 2 can be deleted or suppressed before branching. Contraction
//! branching is complete: a minor model either is a subgraph (checked
//! directly) or contains a contractible edge inside some branch set.

use std::collections::HashSet;

use crate::error::Error;
use crate::graph::SimpleGraph;
use crate::Result;

/// Largest vertex count accepted; beyond this the exponential search is not
/// worth running and the caller gets an error.
pub const PLANARITY_VERTEX_BOUND: usize = 24;

/// Exact planarity test for graphs on at most 24 vertices.
pub fn is_planar(g: &SimpleGraph) -> Result<bool> {
    let n = g.vertex_count();
    if n > PLANARITY_VERTEX_BOUND {
        return Err(Error::SizeBound {
            what: "planarity vertex count",
            got: n,
            bound: PLANARITY_VERTEX_BOUND,
        });
    }
    if n <= 4 {
        return Ok(true);
    }
    let e = g.edge_count();
    if e > 3 * n - 6 {
        return Ok(false);
    }
    let mut rows: Vec<u32> = vec![0; n];
    for u in 0..n {
        for v in 0..n {
            if g.has_edge(u, v) {
                rows[u] |= 1 << v;
            }
        }
    }
    let mut known_clean: HashSet<Vec<u32>> = HashSet::new();
    Ok(!has_forbidden_minor(rows, &mut known_clean))
}

fn has_forbidden_minor(rows: Vec<u32>, known_clean: &mut HashSet<Vec<u32>>) -> bool {
    let rows = reduce(rows);
    let n = rows.len();
    let e: u32 = rows.iter().map(|r| r.count_ones()).sum::<u32>() / 2;
    if n < 5 || e < 9 {
        return false;
    }
    // Too many edges for planarity forces an obstruction (Wagner).
    if e as usize > 3 * n - 6 {
        return true;
    }
    if known_clean.contains(&rows) {
        return false;
    }
    if has_k5_subgraph(&rows) || has_k33_subgraph(&rows) {
        return true;
    }
    for u in 0..n {
        let mut nb = rows[u] & !((1u32 << (u + 1)) - 1); // v > u
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if has_forbidden_minor(contract(&rows, u, v), known_clean) {
                return true;
            }
        }
    }
    known_clean.insert(rows);
    false
}

/// Delete isolated and degree-1 vertices, suppress degree-2 vertices, and
/// compact the vertex set; both obstructions have minimum degree 3.
fn reduce(mut rows: Vec<u32>) -> Vec<u32> {
    loop {
        let n = rows.len();
        let mut changed = false;
        for u in 0..n {
            let deg = rows[u].count_ones();
            if deg == 2 {
                let a = rows[u].trailing_zeros() as usize;
                let b = (31 - rows[u].leading_zeros()) as usize;
                rows[a] |= 1 << b;
                rows[b] |= 1 << a;
                rows = delete_vertex(&rows, u);
                changed = true;
                break;
            }
            if deg <= 1 {
                rows = delete_vertex(&rows, u);
                changed = true;
                break;
            }
        }
        if !changed {
            return rows;
        }
    }
}

fn delete_vertex(rows: &[u32], dead: usize) -> Vec<u32> {
    let n = rows.len();
    let mut out = Vec::with_capacity(n - 1);
    for u in 0..n {
        if u == dead {
            continue;
        }
        let r = rows[u];
        let low = r & ((1u32 << dead) - 1);
        let high = (r >> (dead + 1)) << dead;
        out.push(low | high);
    }
    out
}

/// Merge v into u (requires u < v), dropping the self-loop and compacting.
fn contract(rows: &[u32], u: usize, v: usize) -> Vec<u32> {
    let n = rows.len();
    let mut merged: Vec<u32> = rows.to_vec();
    merged[u] |= merged[v];
    for w in 0..n {
        if merged[w] & (1 << v) != 0 {
            merged[w] |= 1 << u;
        }
    }
    merged[u] &= !(1 << u);
    let out = delete_vertex(&merged, v);
    debug_assert!((0..out.len()).all(|a| {
        (0..out.len()).all(|b| (out[a] >> b & 1) == (out[b] >> a & 1) && out[a] >> a & 1 == 0)
    }));
    out
}

fn has_k5_subgraph(rows: &[u32]) -> bool {
    find_clique(rows, 0, u32::MAX >> (32 - rows.len()), 5)
}

fn find_clique(rows: &[u32], start: usize, candidates: u32, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    let n = rows.len();
    if (candidates >> start).count_ones() < need as u32 {
        return false;
    }
    for v in start..n {
        if candidates & (1 << v) == 0 {
            continue;
        }
        if find_clique(rows, v + 1, candidates & rows[v], need - 1) {
            return true;
        }
    }
    false
}

fn has_k33_subgraph(rows: &[u32]) -> bool {
    let n = rows.len();
    // Choose one side {a < b < c}; the other side needs three common
    // neighbors distinct from them.
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let common = rows[a] & rows[b] & rows[c] & !(1 << a) & !(1 << b) & !(1 << c);
                if common.count_ones() >= 3 {
                    return true;
                }
            }
        }
    }
    false
}
