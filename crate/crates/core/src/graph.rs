//! Simple graphs, non-commuting graphs, and clique-union detection.

use crate::error::Error;
use crate::group::GroupTable;
use crate::Result;

/// Undirected simple graph with labeled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<bool>,
    labels: Vec<String>,
}

impl SimpleGraph {
    pub fn new(n: usize, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), n, "one label per vertex");
        SimpleGraph {
            n,
            adj: vec![false; n * n],
            labels,
        }
    }

    pub fn with_numbered_vertices(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| i.to_string()).collect())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops in a simple graph");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let mut e = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    e += 1;
                }
            }
        }
        e
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.has_edge(u, v)).count()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edge-complement on the same vertex set; labels preserved.
    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n, self.labels.clone());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in 0..self.n {
                    if self.has_edge(u, v) && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Relabeled copy with vertex `i` moved to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n);
        let mut labels = vec![String::new(); self.n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        let mut g = SimpleGraph::new(self.n, labels);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    g.add_edge(perm[u], perm[v]);
                }
            }
        }
        g
    }
}

/// Non-commuting graph: vertices are the non-central elements in table
/// order, adjacent iff they do not commute. Abelian input is rejected.
pub fn non_commuting_graph(g: &GroupTable) -> Result<SimpleGraph> {
    let center = g.center();
    if center.len() == g.order() {
        return Err(Error::AbelianGroup);
    }
    let mut central = vec![false; g.order()];
    for &z in &center {
        central[z] = true;
    }
    let vertices: Vec<usize> = (0..g.order()).filter(|&x| !central[x]).collect();
    let labels = vertices.iter().map(|&x| g.label(x).to_string()).collect();
    let mut graph = SimpleGraph::new(vertices.len(), labels);
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            if g.mul(x, y) != g.mul(y, x) {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(graph)
}

/// Commuting graph: the complement of the non-commuting graph.
pub fn commuting_graph(g: &GroupTable) -> Result<SimpleGraph> {
    Ok(non_commuting_graph(g)?.complement())
}

/// A partition of a graph into disjoint cliques, recorded by size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueDecomposition {
    /// Clique sizes, descending.
    sizes: Vec<usize>,
}

impl CliqueDecomposition {
    pub fn new(mut sizes: Vec<usize>) -> Self {
        assert!(sizes.iter().all(|&s| s > 0), "clique sizes are positive");
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        CliqueDecomposition { sizes }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn clique_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }
}

impl std::fmt::Display for CliqueDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// Detect whether `g` is a disjoint union of cliques; absence is a value,
/// not an error.
pub fn clique_decomposition(g: &SimpleGraph) -> Option<CliqueDecomposition> {
    let components = g.connected_components();
    let mut sizes = Vec::with_capacity(components.len());
    for comp in components {
        for (i, &u) in comp.iter().enumerate() {
            for &v in comp.iter().skip(i + 1) {
                if !g.has_edge(u, v) {
                    return None;
                }
            }
        }
        sizes.push(comp.len());
    }
    Some(CliqueDecomposition::new(sizes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build, GroupSpec};

    #[test]
    fn dihedral4_graph_counts() {
        let g = build(&GroupSpec::Dihedral { m: 4 }).unwrap();
        let a = non_commuting_graph(&g).unwrap();
        assert_eq!(a.vertex_count(), 6);
        assert_eq!(a.edge_count(), 12);
    }

    #[test]
    fn suzuki_graph_counts_and_cliques() {
        let g = build(&GroupSpec::SuzukiSz2).unwrap();
        let a = non_commuting_graph(&g).unwrap();
        assert_eq!(a.vertex_count(), 19);
        assert_eq!(a.edge_count(), 150);
        let d = clique_decomposition(&a.complement()).unwrap();
        assert_eq!(d.sizes(), &[4, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn quasidihedral_graph_counts() {
        let g = build(&GroupSpec::Quasidihedral { n: 4 }).unwrap();
        let a = non_commuting_graph(&g).unwrap();
        assert_eq!(a.vertex_count(), 14);
        assert_eq!(a.edge_count(), 72);
    }

    #[test]
    fn abelian_groups_are_rejected() {
        let z6 = build(&GroupSpec::Cyclic { k: 6 }).unwrap();
        assert!(matches!(non_commuting_graph(&z6), Err(Error::AbelianGroup)));
    }

    #[test]
    fn complement_is_an_involution() {
        let g = build(&GroupSpec::Dihedral { m: 5 }).unwrap();
        let a = non_commuting_graph(&g).unwrap();
        assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn complement_of_three_k2() {
        // 3K2 on 6 vertices -> complete tripartite, 12 edges.
        let mut g = SimpleGraph::with_numbered_vertices(6);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.add_edge(4, 5);
        let c = g.complement();
        assert_eq!(c.edge_count(), 12);
        assert!(c.is_connected());
    }

    #[test]
    fn gl2_3_commuting_graph_cliques() {
        let g = build(&GroupSpec::Gl2 { q: 3 }).unwrap();
        let commuting = commuting_graph(&g).unwrap();
        let d = clique_decomposition(&commuting).unwrap();
        // six 2-cliques, three 6-cliques, four 4-cliques
        assert_eq!(d.sizes(), &[6, 6, 6, 4, 4, 4, 4, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn path_is_not_a_clique_union() {
        let mut p3 = SimpleGraph::with_numbered_vertices(3);
        p3.add_edge(0, 1);
        p3.add_edge(1, 2);
        assert!(clique_decomposition(&p3).is_none());
    }

    #[test]
    fn edgeless_graph_is_all_singletons() {
        let g = SimpleGraph::with_numbered_vertices(4);
        let d = clique_decomposition(&g).unwrap();
        assert_eq!(d.sizes(), &[1, 1, 1, 1]);
    }
}
