//! Exact linear arboricity by backtracking, for small graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::is_planar_bounded;

pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Graphs above this size are not tested for planarity by [`la_bounds`].
pub const PLANARITY_LIMIT: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub la: usize,
    /// Class (`0..la`) of every edge, indexed by edge id.
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundStatus {
    Proven,
    Conjectured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LaBounds {
    pub lower: usize,
    pub upper: usize,
    /// Whether `upper` is a theorem for this graph or only the conjecture.
    pub upper_status: BoundStatus,
}

/// `ceil(Δ/2) <= la <= ceil((Δ+1)/2)`, the lower bound raised for regular
/// graphs of even degree. The upper bound counts as proven for `Δ <= 6`,
/// `Δ ∈ {8, 10}` and planar graphs.
pub fn la_bounds(g: &Graph) -> LaBounds {
    let delta = g.max_degree();
    if delta == 0 {
        return LaBounds {
            lower: 0,
            upper: 0,
            upper_status: BoundStatus::Proven,
        };
    }
    let mut lower = delta.div_ceil(2);
    let upper = (delta + 1).div_ceil(2);
    if delta.is_multiple_of(2) && g.is_regular() {
        lower = upper;
    }
    let proven = delta <= 6
        || delta == 8
        || delta == 10
        || is_planar_bounded(g, PLANARITY_LIMIT) == Some(true);
    LaBounds {
        lower,
        upper,
        upper_status: if proven {
            BoundStatus::Proven
        } else {
            BoundStatus::Conjectured
        },
    }
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    t: usize,
    deg: Vec<u8>,
    parent: Vec<usize>,
    size: Vec<usize>,
    undo: Vec<(usize, usize)>,
    class: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, order: Vec<usize>, t: usize, nodes: u64, budget: u64) -> Self {
        let n = g.num_vertices();
        Search {
            g,
            order,
            t,
            deg: vec![0; n * t],
            parent: (0..n * t).map(|i| i % n.max(1)).collect(),
            size: vec![1; n * t],
            undo: Vec::new(),
            class: vec![usize::MAX; g.num_edges()],
            nodes,
            budget,
        }
    }

    fn slot(&self, c: usize, v: usize) -> usize {
        c * self.g.num_vertices() + v
    }

    fn find(&self, c: usize, mut v: usize) -> usize {
        loop {
            let p = self.parent[self.slot(c, v)];
            if p == v {
                return v;
            }
            v = p;
        }
    }

    /// `None` when the budget runs out.
    fn solve(&mut self, idx: usize, max_used: usize) -> Option<bool> {
        if idx == self.order.len() {
            return Some(true);
        }
        let e = self.order[idx];
        let (u, v) = self.g.endpoints(e);
        let limit = self.t.min(max_used + 1);
        for c in 0..limit {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let (su, sv) = (self.slot(c, u), self.slot(c, v));
            if self.deg[su] >= 2 || self.deg[sv] >= 2 {
                continue;
            }
            let (ru, rv) = (self.find(c, u), self.find(c, v));
            if ru == rv {
                continue;
            }
            let (big, small) = if self.size[self.slot(c, ru)] >= self.size[self.slot(c, rv)] {
                (ru, rv)
            } else {
                (rv, ru)
            };
            let (sb, ss) = (self.slot(c, big), self.slot(c, small));
            self.parent[ss] = big;
            self.size[sb] += self.size[ss];
            self.undo.push((c, small));
            self.deg[su] += 1;
            self.deg[sv] += 1;
            self.class[e] = c;

            let found = self.solve(idx + 1, max_used.max(c + 1))?;
            if found {
                return Some(true);
            }

            self.class[e] = usize::MAX;
            self.deg[su] -= 1;
            self.deg[sv] -= 1;
            let (c2, small) = self.undo.pop().expect("undo entry");
            let ss = self.slot(c2, small);
            let sb = self.slot(c2, self.parent[ss]);
            self.size[sb] -= self.size[ss];
            self.parent[ss] = small;
        }
        Some(false)
    }
}

/// Smallest `t >= ceil(Δ/2)` admitting a partition into `t` linear forests.
///
/// Edges are tried in order of non-increasing endpoint degree sum, and an edge
/// may only open the lowest unused class, which removes class relabelings.
/// Each class keeps a union-find with an undo log for the cycle test.
/// Fails with [`Error::BudgetExceeded`] after `budget` class trials in total.
pub fn exact_la(g: &Graph, budget: u64) -> Result<OracleResult> {
    let mut order: Vec<usize> = (0..g.num_edges()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    let mut t = g.max_degree().div_ceil(2);
    let mut nodes = 0;
    loop {
        let mut s = Search::new(g, order.clone(), t, nodes, budget);
        let found = s.solve(0, 0);
        nodes = s.nodes;
        match found {
            Some(true) => {
                return Ok(OracleResult {
                    la: t,
                    witness: s.class,
                    nodes_explored: nodes,
                })
            }
            Some(false) => t += 1,
            None => {
                return Err(Error::BudgetExceeded {
                    budget,
                    proven_lower: t,
                })
            }
        }
    }
}
