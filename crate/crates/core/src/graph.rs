//! Simple undirected graphs over dense vertex ids `0..n`.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type EdgeId = usize;

/// A simple undirected graph. Vertices are `0..n`; edges get ids in insertion order.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    adj: Vec<Vec<(u32, u32)>>,
    edges: Vec<(u32, u32)>,
    index: HashMap<(u32, u32), u32>,
}

fn key(u: usize, v: usize) -> (u32, u32) {
    if u < v {
        (u as u32, v as u32)
    } else {
        (v as u32, u as u32)
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Inserts `uv`. Self-loops and duplicates are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let k = key(u, v);
        if self.index.contains_key(&k) {
            return Err(Error::DuplicateEdge(k.0 as usize, k.1 as usize));
        }
        let id = self.edges.len() as u32;
        self.edges.push(k);
        self.index.insert(k, id);
        self.adj[u].push((v as u32, id));
        self.adj[v].push((u as u32, id));
        Ok(id as EdgeId)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w as usize)
    }

    /// `(neighbor, edge id)` pairs at `v`.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        self.adj[v].iter().map(|&(w, e)| (w as usize, e as EdgeId))
    }

    /// Endpoints of `e` with the smaller id first.
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        let (u, v) = self.edges[e];
        (u as usize, v as usize)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.adj.len() || v >= self.adj.len() {
            return None;
        }
        self.index.get(&key(u, v)).map(|&e| e as EdgeId)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Largest vertex degree, 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d)
    }

    /// The edges from `v` to members of `targets`, each listed once.
    pub fn edges_incident_to_set(&self, v: usize, targets: &[usize]) -> Result<Vec<EdgeId>> {
        self.check_vertex(v)?;
        let mut seen = vec![false; self.adj.len()];
        for &w in targets {
            self.check_vertex(w)?;
            seen[w] = true;
        }
        Ok(self.adj[v]
            .iter()
            .filter(|&&(w, _)| seen[w as usize])
            .map(|&(_, e)| e as EdgeId)
            .collect())
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    ///
    /// Also returns, for each local edge id, the id of the edge in `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<EdgeId>) {
        let mut local = vec![u32::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i as u32;
        }
        let mut edge_ids: Vec<EdgeId> = vertices
            .iter()
            .flat_map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(move |&&(w, _)| (w as usize) > v)
                    .map(|&(_, e)| e as EdgeId)
            })
            .filter(|&e| {
                let (a, b) = self.edges[e];
                local[a as usize] != u32::MAX && local[b as usize] != u32::MAX
            })
            .collect();
        edge_ids.sort_unstable();
        let mut sub = Graph::new(vertices.len());
        for &e in &edge_ids {
            let (a, b) = self.edges[e];
            sub.add_edge(local[a as usize] as usize, local[b as usize] as usize)
                .expect("induced subgraph of a simple graph is simple");
        }
        (sub, edge_ids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::new(0).max_degree(), 0);
        assert_eq!(path(4).max_degree(), 2);
        assert_eq!(star(6).max_degree(), 6);
    }

    #[test]
    fn rejects_loops_duplicates_and_unknown_vertices() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(g.add_edge(0, 3), Err(Error::UnknownVertex(3)));
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn edges_to_set() {
        let s = star(4);
        let all = s.edges_incident_to_set(0, &[1, 2, 3, 4]).unwrap();
        assert_eq!(all.len(), 4);
        assert!(s.edges_incident_to_set(2, &[]).unwrap().is_empty());

        let p3 = path(3);
        let e = p3.edges_incident_to_set(1, &[0]).unwrap();
        assert_eq!(e, vec![p3.edge_id(0, 1).unwrap()]);
        assert_eq!(
            p3.edges_incident_to_set(7, &[0]),
            Err(Error::UnknownVertex(7))
        );
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(path(5).connected_components().len(), 1);
        assert_eq!(
            Graph::new(3).connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn induced_subgraph_keeps_edge_map() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (2, 0)]).unwrap();
        let (sub, map) = g.induced_subgraph(&[2, 0, 1]);
        assert_eq!(sub.num_edges(), 3);
        for (le, &ge) in map.iter().enumerate() {
            let (a, b) = sub.endpoints(le);
            let back = [2usize, 0, 1];
            let (x, y) = g.endpoints(ge);
            let mut got = [back[a], back[b]];
            got.sort();
            assert_eq!(got, [x, y]);
        }
    }

    proptest::proptest! {
        #[test]
        fn degree_sum_is_twice_edges(n in 1usize..30, pairs in proptest::collection::vec((0usize..30, 0usize..30), 0..80)) {
            let mut g = Graph::new(n);
            for (u, v) in pairs {
                let _ = g.add_edge(u % n, v % n);
            }
            let sum: usize = (0..n).map(|v| g.degree(v)).sum();
            proptest::prop_assert_eq!(sum, 2 * g.num_edges());
            for v in 0..n {
                let count = g.edges().filter(|&(a, b)| a == v || b == v).count();
                proptest::prop_assert_eq!(g.degree(v), count);
            }
            let comps = g.connected_components();
            let mut all: Vec<usize> = comps.concat();
            all.sort();
            proptest::prop_assert_eq!(all, (0..n).collect::<Vec<_>>());
        }
    }
}
