//! Independent validation of edge-to-class maps.
//!
//! Shares nothing with [`crate::coloring`]: degrees are recounted from the
//! assignment list and cycles are found with a fresh DFS per class.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationKind {
    UncoloredEdge,
    DegreeOverflow,
    MonochromaticCycle,
    UnknownEdge,
    /// Class index outside `1..=t`.
    ClassOutOfRange,
    /// The same edge listed more than once.
    DuplicateAssignment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<usize>,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub class_count: usize,
    pub violations: Vec<Violation>,
    /// Valid and `class_count == ceil(Δ/2)`.
    pub optimal: bool,
}

impl VerificationReport {
    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }
}

fn violation(kind: ViolationKind, class: Option<usize>, vertices: Vec<usize>, edges: Vec<(usize, usize)>) -> Violation {
    Violation {
        kind,
        class,
        vertices,
        edges,
    }
}

/// Checks that `coloring`, a list of `(u, v, class)` triples with classes in
/// `1..=t`, partitions `E(g)` into `t` linear forests. Every violation is
/// reported.
pub fn verify_partition(g: &Graph, coloring: &[(usize, usize, usize)], t: usize) -> VerificationReport {
    use ViolationKind::*;
    let n = g.num_vertices();
    let mut violations = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::with_capacity(coloring.len());
    let mut per_class: Vec<Vec<(usize, usize)>> = vec![Vec::new(); t];

    for &(a, b, c) in coloring {
        let key = (a.min(b), a.max(b));
        if a >= n || b >= n || a == b || !g.has_edge(a, b) {
            violations.push(violation(UnknownEdge, Some(c), vec![key.0, key.1], vec![key]));
            continue;
        }
        if seen.contains_key(&key) {
            violations.push(violation(DuplicateAssignment, Some(c), vec![key.0, key.1], vec![key]));
            continue;
        }
        seen.insert(key, c);
        if c == 0 || c > t {
            violations.push(violation(ClassOutOfRange, Some(c), vec![key.0, key.1], vec![key]));
            continue;
        }
        per_class[c - 1].push(key);
    }

    for (u, v) in g.edges() {
        let key = (u.min(v), u.max(v));
        if !seen.contains_key(&key) {
            violations.push(violation(UncoloredEdge, None, vec![key.0, key.1], vec![key]));
        }
    }

    let mut deg = vec![0usize; n];
    let mut local = vec![usize::MAX; n];
    for (ci, edges) in per_class.iter().enumerate() {
        let class = ci + 1;
        for &(u, v) in edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut over: Vec<usize> = edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .filter(|&x| deg[x] > 2)
            .collect();
        over.sort_unstable();
        over.dedup();
        for x in over {
            let incident: Vec<(usize, usize)> =
                edges.iter().copied().filter(|&(u, v)| u == x || v == x).collect();
            violations.push(violation(DegreeOverflow, Some(class), vec![x], incident));
        }
        for &(u, v) in edges {
            deg[u] = 0;
            deg[v] = 0;
        }
        for cycle in find_cycles(&mut local, edges) {
            let mut cyc_edges: Vec<(usize, usize)> = cycle
                .iter()
                .zip(cycle.iter().cycle().skip(1))
                .map(|(&a, &b)| (a.min(b), a.max(b)))
                .collect();
            cyc_edges.sort_unstable();
            violations.push(violation(MonochromaticCycle, Some(class), cycle, cyc_edges));
        }
    }

    let valid = violations.is_empty();
    VerificationReport {
        valid,
        class_count: t,
        violations,
        optimal: valid && t == g.max_degree().div_ceil(2),
    }
}

// One cycle (as a vertex sequence) per connected component that has one.
// `local` is scratch space of length n filled with usize::MAX; it is restored.
fn find_cycles(local: &mut [usize], edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    const NONE: usize = usize::MAX;
    let mut verts = Vec::new();
    for &(u, v) in edges {
        for x in [u, v] {
            if local[x] == NONE {
                local[x] = verts.len();
                verts.push(x);
            }
        }
    }
    let m = verts.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[local[u]].push((local[v], i));
        adj[local[v]].push((local[u], i));
    }
    for &x in &verts {
        local[x] = NONE;
    }

    let mut state = vec![0u8; m];
    let mut parent = vec![NONE; m];
    let mut parent_edge = vec![NONE; m];
    let mut cycles = Vec::new();
    for root in 0..m {
        if state[root] != 0 {
            continue;
        }
        let mut found = false;
        state[root] = 1;
        let mut stack = vec![(root, 0usize)];
        while let Some(top) = stack.last_mut() {
            let x = top.0;
            if top.1 == adj[x].len() {
                state[x] = 2;
                stack.pop();
                continue;
            }
            let (y, e) = adj[x][top.1];
            top.1 += 1;
            if e == parent_edge[x] {
                continue;
            }
            match state[y] {
                0 => {
                    state[y] = 1;
                    parent[y] = x;
                    parent_edge[y] = e;
                    stack.push((y, 0));
                }
                1 if !found => {
                    found = true;
                    let mut cycle = vec![verts[x]];
                    let mut z = x;
                    while z != y {
                        z = parent[z];
                        cycle.push(verts[z]);
                    }
                    cycles.push(cycle);
                }
                _ => {}
            }
        }
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;
    use ViolationKind::*;

    #[test]
    fn triangle_in_one_class() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = verify_partition(&g, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)], 1);
        assert!(!r.valid);
        assert_eq!(r.violations.len(), 1);
        let v = &r.violations[0];
        assert_eq!(v.kind, MonochromaticCycle);
        let mut vs = v.vertices.clone();
        vs.sort();
        assert_eq!(vs, vec![0, 1, 2]);
        assert_eq!(v.edges, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn star_overflow() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = verify_partition(&g, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)], 1);
        assert_eq!(r.count(DegreeOverflow), 1);
        assert_eq!(r.violations[0].vertices, vec![0]);
        assert_eq!(r.count(MonochromaticCycle), 0);
    }

    #[test]
    fn every_violation_is_reported() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let r = verify_partition(
            &g,
            &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (1, 3, 1), (0, 1, 2), (2, 3, 5)],
            2,
        );
        assert_eq!(r.count(MonochromaticCycle), 1);
        assert_eq!(r.count(UnknownEdge), 1);
        assert_eq!(r.count(DuplicateAssignment), 1);
        assert_eq!(r.count(ClassOutOfRange), 1);
        assert_eq!(r.count(UncoloredEdge), 0);
        let r = verify_partition(&g, &[(0, 1, 1)], 2);
        assert_eq!(r.count(UncoloredEdge), 3);
    }

    #[test]
    fn valid_partition_of_k4() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 2), (0, 3), (1, 3)]).unwrap();
        let coloring = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 2, 2), (0, 3, 2), (1, 3, 2)];
        let r = verify_partition(&g, &coloring, 2);
        assert!(r.valid, "{r:?}");
        assert!(r.optimal);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"valid":true,"class_count":2,"violations":[],"optimal":true}"#);
    }

    #[test]
    fn one_cycle_per_component() {
        // two disjoint squares plus a chord
        let edges = [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7), (4, 6)];
        let g = Graph::from_edges(8, &edges).unwrap();
        let coloring: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        let r = verify_partition(&g, &coloring, 1);
        assert_eq!(r.count(MonochromaticCycle), 2);
        assert_eq!(r.count(DegreeOverflow), 2);
    }

    #[test]
    fn edgeless_is_optimal() {
        let r = verify_partition(&Graph::new(3), &[], 0);
        assert!(r.valid && r.optimal);
    }
}
