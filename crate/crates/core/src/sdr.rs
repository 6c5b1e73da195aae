//! Systems of distinct representatives for right-neighbourhoods of
//! high-degree vertices.
//!
//! Every vertex `u` lies in at most `k` of the sets `N_R(v)` (they are its left
//! neighbours), so for `d(v) >= d` the family `{N_R(v)}` satisfies the Hall-type
//! condition `|U N_R(S)| >= floor((d-k)/k) |S|` and an r-SDR always exists.
//! It is found as a flow: source -> owner (cap r) -> right neighbour (cap 1) -> sink (cap 1).

use crate::degeneracy::DegeneracyOrdering;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;

const NO_OWNER: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdrAssignment {
    r: usize,
    high_set: Vec<usize>,
    /// `R*(v)` is `reps[start[v]..start[v + 1]]`.
    start: Vec<usize>,
    reps: Vec<usize>,
    owner: Vec<u32>,
}

impl SdrAssignment {
    /// Representatives per high-degree vertex.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Vertices of degree at least `d`, sorted by id.
    pub fn high_set(&self) -> &[usize] {
        &self.high_set
    }

    pub fn is_high(&self, v: usize) -> bool {
        self.high_set.binary_search(&v).is_ok()
    }

    /// `R*(v)`, sorted by id; empty for vertices outside the high set.
    pub fn reps(&self, v: usize) -> &[usize] {
        &self.reps[self.start[v]..self.start[v + 1]]
    }

    fn from_lists(r: usize, high_set: Vec<usize>, lists: impl Iterator<Item = Vec<usize>>, n: usize) -> Self {
        let mut start = Vec::with_capacity(n + 1);
        let mut reps = Vec::new();
        let mut owner = vec![NO_OWNER; n];
        start.push(0);
        for (v, list) in lists.enumerate() {
            for &u in &list {
                assert_eq!(owner[u], NO_OWNER, "representative {u} shared");
                owner[u] = v as u32;
            }
            reps.extend(list);
            start.push(reps.len());
        }
        SdrAssignment {
            r,
            high_set,
            start,
            reps,
            owner,
        }
    }

    /// The high-degree vertex that `u` represents, if any.
    pub fn owner(&self, u: usize) -> Option<usize> {
        match self.owner[u] {
            NO_OWNER => None,
            o => Some(o as usize),
        }
    }
}

impl SdrAssignment {
    /// Builds an assignment from explicit sets, for fixtures. `reps[v]` must
    /// be sorted and the sets disjoint.
    #[cfg(test)]
    pub(crate) fn from_sets(r: usize, reps: Vec<Vec<usize>>) -> Self {
        let high_set = (0..reps.len()).filter(|&v| !reps[v].is_empty()).collect();
        let n = reps.len();
        Self::from_lists(r, high_set, reps.into_iter(), n)
    }
}

fn representative_count(k: usize, d: usize) -> usize {
    (d - k) / k
}

fn check_range(g: &Graph, ord: &DegeneracyOrdering, d: usize) -> Result<usize> {
    let k = ord.k();
    if ord.len() != g.num_vertices() {
        return Err(Error::Precondition(
            "ordering does not cover the graph".into(),
        ));
    }
    if k == 0 {
        return Err(Error::Precondition(
            "representative sets need k >= 1".into(),
        ));
    }
    let delta = g.max_degree();
    if d < k || d > delta {
        return Err(Error::Precondition(format!(
            "need k <= d <= max degree, got k={k}, d={d}, max degree={delta}"
        )));
    }
    Ok(representative_count(k, d))
}

fn high_vertices(g: &Graph, d: usize) -> Vec<usize> {
    (0..g.num_vertices()).filter(|&v| g.degree(v) >= d).collect()
}

/// Disjoint sets `R*(v) ⊆ N_R(v)` of size exactly `floor((d-k)/k)` for every
/// vertex of degree at least `d`, where `k = ord.k()`.
pub fn compute_sdr(g: &Graph, ord: &DegeneracyOrdering, d: usize) -> Result<SdrAssignment> {
    let r = check_range(g, ord, d)?;
    let n = g.num_vertices();
    let high_set = high_vertices(g, d);

    let source = 0;
    let sink = 1;
    let owner_node = |i: usize| 2 + i;
    let vertex_node = |u: usize| 2 + high_set.len() + u;
    let mut net = FlowNetwork::new(2 + high_set.len() + n);

    let mut candidate = vec![false; n];
    let mut arcs: Vec<Vec<(usize, usize)>> = Vec::with_capacity(high_set.len());
    for (i, &v) in high_set.iter().enumerate() {
        net.add_arc(source, owner_node(i), r as u32);
        let mut mine = Vec::new();
        for u in ord.right_neighbors(g, v) {
            mine.push((u, net.add_arc(owner_node(i), vertex_node(u), 1)));
            candidate[u] = true;
        }
        arcs.push(mine);
    }
    for u in (0..n).filter(|&u| candidate[u]) {
        net.add_arc(vertex_node(u), sink, 1);
    }

    let need = (r * high_set.len()) as u64;
    let got = net.max_flow(source, sink);
    if got != need {
        return Err(Error::Contradiction(format!(
            "no {r}-SDR: flow {got} < {need}; the ordering does not certify k={}",
            ord.k()
        )));
    }

    let mut slot = vec![usize::MAX; n];
    for (i, &v) in high_set.iter().enumerate() {
        slot[v] = i;
    }
    let lists = (0..n).map(|v| match slot[v] {
        usize::MAX => Vec::new(),
        i => {
            let mut chosen: Vec<usize> = arcs[i]
                .iter()
                .filter(|&&(_, a)| net.flow(a) == 1)
                .map(|&(u, _)| u)
                .collect();
            chosen.sort_unstable();
            chosen
        }
    });
    Ok(SdrAssignment::from_lists(r, high_set.clone(), lists, n))
}

/// Checks `|U_{v in S} N_R(v)| >= r |S|` for each sampled `S ⊆ V_d`.
pub fn hall_certificate_check(
    g: &Graph,
    ord: &DegeneracyOrdering,
    d: usize,
    sample_sets: &[Vec<usize>],
) -> bool {
    let Ok(r) = check_range(g, ord, d) else {
        return false;
    };
    let mut mark = vec![false; g.num_vertices()];
    sample_sets.iter().all(|set| {
        mark.fill(false);
        let mut union = 0;
        for &v in set {
            for u in ord.right_neighbors(g, v) {
                if !mark[u] {
                    mark[u] = true;
                    union += 1;
                }
            }
        }
        union >= r * set.len()
    })
}

/// The Hall condition over every subset of `V_d`; `None` when `|V_d| > 20`.
pub fn hall_condition_exhaustive(g: &Graph, ord: &DegeneracyOrdering, d: usize) -> Option<bool> {
    let high = high_vertices(g, d);
    if high.len() > 20 {
        return None;
    }
    let sets: Vec<Vec<usize>> = (0u32..(1 << high.len()))
        .map(|mask| {
            high.iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    Some(hall_certificate_check(g, ord, d, &sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::{degeneracy_ordering, verify_ordering};

    fn check_invariants(g: &Graph, ord: &DegeneracyOrdering, sdr: &SdrAssignment) {
        let mut seen = vec![false; g.num_vertices()];
        let mut total = 0;
        for v in 0..g.num_vertices() {
            if !sdr.is_high(v) {
                assert!(sdr.reps(v).is_empty());
                continue;
            }
            assert_eq!(sdr.reps(v).len(), sdr.r());
            for &u in sdr.reps(v) {
                assert!(g.has_edge(u, v));
                assert!(ord.position(u) > ord.position(v));
                assert!(!seen[u], "representative {u} reused");
                seen[u] = true;
                assert_eq!(sdr.owner(u), Some(v));
                total += 1;
            }
        }
        assert_eq!(total, sdr.r() * sdr.high_set().len());
    }

    #[test]
    fn r_for_k2_delta6() {
        // wheel-like: hub 0 joined to a path 1..6, plus leaves to reach degree 6
        let mut g = Graph::new(7);
        for i in 1..=6 {
            g.add_edge(0, i).unwrap();
        }
        for i in 1..6 {
            g.add_edge(i, i + 1).unwrap();
        }
        let ord = degeneracy_ordering(&g);
        assert_eq!(ord.k(), 2);
        let sdr = compute_sdr(&g, &ord, 6).unwrap();
        assert_eq!(sdr.r(), 2);
        assert_eq!(sdr.high_set(), &[0]);
        check_invariants(&g, &ord, &sdr);
    }

    #[test]
    fn single_high_vertex_takes_smallest_flow_choice() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let ord = DegeneracyOrdering::from_order(vec![0, 1, 2, 3, 4], 1).unwrap();
        let sdr = compute_sdr(&g, &ord, 4).unwrap();
        assert_eq!(sdr.r(), 3);
        assert_eq!(sdr.reps(0).len(), 3);
        assert!(sdr.reps(0).iter().all(|&u| (1..=4).contains(&u)));
        check_invariants(&g, &ord, &sdr);
    }

    // Two hubs a=0, b=1 sharing right neighbours; brute force over pairs of
    // disjoint 2-subsets confirms a 2-SDR exists and the flow returns one.
    #[test]
    fn two_hubs_match_brute_force() {
        let edges = [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (1, 2),
            (1, 3),
            (1, 7),
            (1, 8),
            (1, 9),
        ];
        let g = Graph::from_edges(10, &edges).unwrap();
        let ord = DegeneracyOrdering::from_order((0..10).collect(), 2).unwrap();
        assert!(verify_ordering(&g, &ord, 2));
        let d = 6;
        let na = ord.right_neighbors(&g, 0);
        let nb = ord.right_neighbors(&g, 1);
        let mut found = Vec::new();
        for i in 0..na.len() {
            for j in i + 1..na.len() {
                for p in 0..nb.len() {
                    for q in p + 1..nb.len() {
                        let a = [na[i], na[j]];
                        let b = [nb[p], nb[q]];
                        if a.iter().all(|x| !b.contains(x)) {
                            found.push((a.to_vec(), b.to_vec()));
                        }
                    }
                }
            }
        }
        assert!(!found.is_empty());
        let sdr = compute_sdr(&g, &ord, d).unwrap();
        assert_eq!(sdr.r(), 2);
        check_invariants(&g, &ord, &sdr);
        let got = (sdr.reps(0).to_vec(), sdr.reps(1).to_vec());
        assert!(found.contains(&got));
        assert_eq!(hall_condition_exhaustive(&g, &ord, d), Some(true));
    }

    #[test]
    fn hall_spot_checks() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let ord = DegeneracyOrdering::from_order(vec![0, 1, 2, 3, 4], 1).unwrap();
        assert!(hall_certificate_check(&g, &ord, 4, &[vec![]]));
        assert!(hall_certificate_check(&g, &ord, 4, &[vec![0]]));
    }

    #[test]
    fn infeasible_when_ordering_lies_about_k() {
        // Claiming k=1 for a graph where vertex 3 has two left neighbours
        // lets both hubs compete for too few right neighbours.
        let g = Graph::from_edges(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        let ord = DegeneracyOrdering::from_order(vec![0, 1, 2, 3, 4], 1).unwrap();
        assert!(!hall_certificate_check(&g, &ord, 3, &[vec![0, 1]]));
        assert!(matches!(
            compute_sdr(&g, &ord, 3),
            Err(Error::Contradiction(_))
        ));
    }

    #[test]
    fn rejects_out_of_range_d() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let ord = degeneracy_ordering(&g);
        assert!(matches!(compute_sdr(&g, &ord, 3), Err(Error::Precondition(_))));
        assert!(matches!(compute_sdr(&g, &ord, 0), Err(Error::Precondition(_))));
    }
}
