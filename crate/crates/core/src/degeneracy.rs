//! Degeneracy and smallest-last vertex orderings.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex ordering `v_1..v_n` in which every vertex has at most `k`
/// neighbours earlier in the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
    k: usize,
}

impl DegeneracyOrdering {
    /// Wraps an explicit order. `order` must be a permutation of `0..order.len()`;
    /// `k` is not checked here, see [`verify_ordering`].
    pub fn from_order(order: Vec<usize>, k: usize) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if position[v] != usize::MAX {
                return Err(Error::Precondition(format!(
                    "vertex {v} appears twice in ordering"
                )));
            }
            position[v] = i;
        }
        Ok(DegeneracyOrdering { order, position, k })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn left_degree(&self, g: &Graph, v: usize) -> usize {
        let p = self.position[v];
        g.neighbors(v).filter(|&w| self.position[w] < p).count()
    }

    /// Neighbours strictly after `v` in the order, sorted by id.
    pub fn right_neighbors(&self, g: &Graph, v: usize) -> Vec<usize> {
        let p = self.position[v];
        let mut r: Vec<usize> = g.neighbors(v).filter(|&w| self.position[w] > p).collect();
        r.sort_unstable();
        r
    }

    /// `(N_L(v), N_R(v))`, each sorted by id.
    pub fn left_right_neighbors(&self, g: &Graph, v: usize) -> (Vec<usize>, Vec<usize>) {
        let p = self.position[v];
        let (mut l, mut r): (Vec<usize>, Vec<usize>) =
            g.neighbors(v).partition(|&w| self.position[w] < p);
        l.sort_unstable();
        r.sort_unstable();
        (l, r)
    }
}

/// Smallest-last ordering: repeatedly delete a vertex of minimum remaining
/// degree (smallest id on ties) and reverse the deletion sequence.
/// The returned `k` is the exact degeneracy.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.num_vertices();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut sequence = Vec::with_capacity(n);
    let mut k = 0;
    while let Some((d, v)) = queue.pop_first() {
        k = k.max(d);
        removed[v] = true;
        sequence.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    sequence.reverse();
    DegeneracyOrdering::from_order(sequence, k).expect("peeling visits every vertex once")
}

/// Exact degeneracy of `g`.
pub fn degeneracy(g: &Graph) -> usize {
    degeneracy_ordering(g).k
}

/// True iff every vertex has at most `k` neighbours before it in `ord`.
pub fn verify_ordering(g: &Graph, ord: &DegeneracyOrdering, k: usize) -> bool {
    ord.len() == g.num_vertices() && (0..g.num_vertices()).all(|v| ord.left_degree(g, v) <= k)
}
