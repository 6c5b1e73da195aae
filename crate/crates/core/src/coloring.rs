//! Edge colorings whose classes are (transiently, nearly) linear forests.
//!
//! Every class stores, per vertex, its degree and its at most two class
//! neighbours, so each class is a disjoint union of paths and cycles. For a
//! vertex of class degree at most one the structure keeps the opposite end of
//! its path (`tip`), which answers connectivity between path ends in O(1).
//! Insertions keep tips exact in O(1); removals re-walk the two affected paths.
//! Classes may hold cycles; tips are simply absent on them.
//!
//! Vertices of degree at most one in the graph get a single slot, owned by
//! the class of their edge, instead of one slot per class.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

const NONE: u32 = u32::MAX;
const WIDE: u32 = u32::MAX - 1;

/// `C_0(v)`, `C_1(v)`, `C_2(v)`: the classes in which `v` has degree 0, 1 and 2.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColorSets {
    pub zero: Vec<usize>,
    pub one: Vec<usize>,
    pub two: Vec<usize>,
}

/// Components of one class: per-vertex component id and path endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClassView {
    pub class: usize,
    pub component: Vec<usize>,
    /// `(a, b)` ends of each component's path (`a == b` for isolated
    /// vertices); `None` marks a cycle.
    pub endpoints: Vec<Option<(usize, usize)>>,
}

impl ColorClassView {
    pub fn is_linear_forest(&self) -> bool {
        self.endpoints.iter().all(Option::is_some)
    }
}

#[derive(Clone, Debug)]
pub struct ForestColoring {
    t: usize,
    ends: Vec<(u32, u32)>,
    color: Vec<u32>,
    base: Vec<u32>,
    /// `WIDE`, or the class owning a narrow vertex's slot (`NONE` if free).
    owner: Vec<u32>,
    deg: Vec<u8>,
    nbr: Vec<[u32; 2]>,
    tip: Vec<u32>,
}

impl ForestColoring {
    /// An empty coloring of `g`'s edges with classes `0..t`.
    pub fn new(g: &Graph, t: usize) -> Self {
        let n = g.num_vertices();
        let mut base = Vec::with_capacity(n);
        let mut owner = Vec::with_capacity(n);
        let mut tip = Vec::new();
        for v in 0..n {
            base.push(tip.len() as u32);
            let wide = g.degree(v) > 1;
            owner.push(if wide { WIDE } else { NONE });
            tip.extend(std::iter::repeat_n(v as u32, if wide { t } else { 1 }));
        }
        ForestColoring {
            t,
            ends: g.edges().map(|(u, v)| (u as u32, v as u32)).collect(),
            color: vec![NONE; g.num_edges()],
            base,
            owner,
            deg: vec![0; tip.len()],
            nbr: vec![[NONE; 2]; tip.len()],
            tip,
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn num_vertices(&self) -> usize {
        self.base.len()
    }

    #[inline]
    fn slot(&self, v: usize, j: usize) -> Option<usize> {
        match self.owner[v] {
            WIDE => Some(self.base[v] as usize + j),
            o if o == j as u32 => Some(self.base[v] as usize),
            _ => None,
        }
    }

    // The slot of `v` in class `j`, claiming a narrow vertex's free slot.
    fn slot_mut(&mut self, v: usize, j: usize) -> usize {
        if let Some(s) = self.slot(v, j) {
            return s;
        }
        assert_eq!(self.owner[v], NONE, "vertex {v} has a single slot");
        self.owner[v] = j as u32;
        let s = self.base[v] as usize;
        self.deg[s] = 0;
        self.nbr[s] = [NONE; 2];
        self.tip[s] = v as u32;
        s
    }

    fn set_tip(&mut self, v: u32, j: usize, end: u32) {
        if let Some(s) = self.slot(v as usize, j) {
            self.tip[s] = end;
        }
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        let (a, b) = self.ends[e];
        (a as usize, b as usize)
    }

    pub fn color_of(&self, e: EdgeId) -> Option<usize> {
        match self.color[e] {
            NONE => None,
            c => Some(c as usize),
        }
    }

    /// Classes indexed by edge id, `None` for uncolored edges.
    pub fn colors(&self) -> Vec<Option<usize>> {
        (0..self.color.len()).map(|e| self.color_of(e)).collect()
    }

    #[inline]
    pub fn class_degree(&self, v: usize, j: usize) -> usize {
        self.slot(v, j).map_or(0, |s| self.deg[s] as usize)
    }

    pub fn colored_degree(&self, v: usize) -> usize {
        (0..self.t).map(|j| self.class_degree(v, j)).sum()
    }

    pub fn color_sets(&self, v: usize) -> ColorSets {
        let mut s = ColorSets::default();
        for j in 0..self.t {
            match self.class_degree(v, j) {
                0 => s.zero.push(j),
                1 => s.one.push(j),
                _ => s.two.push(j),
            }
        }
        s
    }

    /// The opposite end of `v`'s path in class `j` (`v` itself when isolated);
    /// `None` when `v` is internal to a path or on a cycle.
    #[inline]
    pub fn path_end(&self, v: usize, j: usize) -> Option<usize> {
        match self.slot(v, j) {
            None => Some(v),
            Some(s) => (self.deg[s] <= 1).then_some(self.tip[s] as usize),
        }
    }

    fn step(&self, j: usize, prev: u32, cur: u32) -> Option<u32> {
        let [x, y] = self.slot(cur as usize, j).map_or([NONE; 2], |s| self.nbr[s]);
        if x != NONE && x != prev {
            Some(x)
        } else if y != NONE && y != prev {
            Some(y)
        } else {
            None
        }
    }

    // Follows class j from `start`, leaving through a neighbour other than
    // `prev`, and returns the vertices met after `start`. The walk stops at a
    // path end or just before returning to `start`.
    fn walk(&self, j: usize, prev: u32, start: u32) -> (Vec<u32>, bool) {
        let mut seen = Vec::new();
        let mut prev = prev;
        let mut cur = start;
        while let Some(next) = self.step(j, prev, cur) {
            if next == start {
                return (seen, true);
            }
            seen.push(next);
            prev = cur;
            cur = next;
        }
        (seen, false)
    }

    fn walk_to_end(&self, j: usize, start: u32) -> u32 {
        let mut prev = NONE;
        let mut cur = start;
        while let Some(next) = self.step(j, prev, cur) {
            if next == start {
                break;
            }
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Ordered vertices of the component of `v` in class `j`: a path from one
    /// end to the other, or a cycle starting at `v`. The flag marks cycles.
    fn component_sequence(&self, j: usize, v: usize) -> (Vec<usize>, bool) {
        let v32 = v as u32;
        let (forward, cyclic) = self.walk(j, NONE, v32);
        if cyclic {
            let mut seq = vec![v];
            seq.extend(forward.iter().map(|&x| x as usize));
            return (seq, true);
        }
        let first = forward.first().copied().unwrap_or(NONE);
        let (backward, _) = self.walk(j, first, v32);
        let seq = backward
            .iter()
            .rev()
            .chain(std::iter::once(&v32))
            .chain(forward.iter())
            .map(|&x| x as usize)
            .collect();
        (seq, false)
    }

    /// True iff `u` and `v` are already connected in class `j`.
    pub fn would_close_cycle(&self, j: usize, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        if let (Some(tu), Some(_)) = (self.path_end(u, j), self.path_end(v, j)) {
            return tu == v;
        }
        self.component_sequence(j, u).0.contains(&v)
    }

    /// The maximal path (or cycle) of class `j` through `v`.
    pub fn path_through(&self, j: usize, v: usize) -> Result<Vec<usize>> {
        if self.class_degree(v, j) == 0 {
            return Err(Error::IsolatedInClass { vertex: v, class: j });
        }
        Ok(self.component_sequence(j, v).0)
    }

    /// True iff colored edge `e` lies on a cycle of its class.
    pub fn edge_on_cycle(&self, e: EdgeId) -> bool {
        let Some(j) = self.color_of(e) else {
            return false;
        };
        let (a, b) = self.ends[e];
        let mut prev = b;
        let mut cur = a;
        while let Some(next) = self.step(j, prev, cur) {
            if next == b {
                return true;
            }
            if next == a {
                return false;
            }
            prev = cur;
            cur = next;
        }
        false
    }

    fn link(&mut self, a: u32, b: u32, j: usize) {
        let (sa, sb) = (self.slot_mut(a as usize, j), self.slot_mut(b as usize, j));
        let ta = if self.deg[sa] == 0 { a } else { self.tip[sa] };
        let tb = if self.deg[sb] == 0 { b } else { self.tip[sb] };
        let ia = self.deg[sa] as usize;
        let ib = self.deg[sb] as usize;
        self.nbr[sa][ia] = b;
        self.nbr[sb][ib] = a;
        self.deg[sa] += 1;
        self.deg[sb] += 1;
        if ta != b {
            self.set_tip(ta, j, tb);
            self.set_tip(tb, j, ta);
        }
    }

    fn unlink(&mut self, a: u32, b: u32, j: usize) {
        for (x, y) in [(a, b), (b, a)] {
            let s = self.slot(x as usize, j).expect("linked vertex has a slot");
            let slot = &mut self.nbr[s];
            if slot[0] == y {
                slot[0] = slot[1];
            }
            slot[1] = NONE;
            self.deg[s] -= 1;
        }
        for x in [a, b] {
            let end = self.walk_to_end(j, x);
            self.set_tip(x, j, end);
            self.set_tip(end, j, x);
        }
        for x in [a, b] {
            if self.owner[x as usize] == j as u32 && self.deg[self.base[x as usize] as usize] == 0 {
                self.owner[x as usize] = NONE;
            }
        }
    }

    fn check_room(&self, e: EdgeId, j: usize) -> Result<()> {
        if j >= self.t {
            return Err(Error::Precondition(format!(
                "class {j} out of range 0..{}",
                self.t
            )));
        }
        let (a, b) = self.endpoints(e);
        for v in [a, b] {
            if self.class_degree(v, j) >= 2 {
                return Err(Error::DegreeOverflow { vertex: v, class: j });
            }
        }
        Ok(())
    }

    /// Colors uncolored edge `e` with class `j`. May close a cycle in `j`.
    pub fn assign(&mut self, e: EdgeId, j: usize) -> Result<()> {
        if self.color[e] != NONE {
            return Err(Error::AlreadyColored(e));
        }
        self.check_room(e, j)?;
        let (a, b) = self.ends[e];
        self.link(a, b, j);
        self.color[e] = j as u32;
        Ok(())
    }

    /// Removes the color of `e` and returns it.
    pub fn unassign(&mut self, e: EdgeId) -> Result<usize> {
        let j = self.color_of(e).ok_or(Error::Uncolored(e))?;
        let (a, b) = self.ends[e];
        self.unlink(a, b, j);
        self.color[e] = NONE;
        Ok(j)
    }

    /// Moves colored edge `e` into class `j`.
    pub fn recolor(&mut self, e: EdgeId, j: usize) -> Result<()> {
        let old = self.color_of(e).ok_or(Error::Uncolored(e))?;
        if old == j {
            return Ok(());
        }
        self.check_room(e, j)?;
        self.unassign(e)?;
        self.assign(e, j)
    }

    /// Exchanges the colors of two colored edges.
    pub fn swap_colors(&mut self, e1: EdgeId, e2: EdgeId) -> Result<()> {
        let c1 = self.color_of(e1).ok_or(Error::Uncolored(e1))?;
        let c2 = self.color_of(e2).ok_or(Error::Uncolored(e2))?;
        if c1 == c2 {
            return Ok(());
        }
        let (a1, b1) = self.endpoints(e1);
        let (a2, b2) = self.endpoints(e2);
        for (moving, leaving, target) in [((a1, b1), (a2, b2), c2), ((a2, b2), (a1, b1), c1)] {
            for v in [moving.0, moving.1] {
                let freed = usize::from(v == leaving.0 || v == leaving.1);
                if self.class_degree(v, target) - freed >= 2 {
                    return Err(Error::DegreeOverflow { vertex: v, class: target });
                }
            }
        }
        self.unassign(e1)?;
        self.unassign(e2)?;
        self.assign(e1, c2)?;
        self.assign(e2, c1)
    }

    /// Edge ids currently in class `j`.
    pub fn class_edges(&self, j: usize) -> Vec<EdgeId> {
        (0..self.color.len())
            .filter(|&e| self.color[e] == j as u32)
            .collect()
    }

    pub fn class_view(&self, j: usize) -> ColorClassView {
        let n = self.num_vertices();
        let mut component = vec![usize::MAX; n];
        let mut endpoints = Vec::new();
        for v in 0..n {
            if component[v] != usize::MAX {
                continue;
            }
            let id = endpoints.len();
            let (seq, cyclic) = self.component_sequence(j, v);
            for &x in &seq {
                component[x] = id;
            }
            endpoints.push((!cyclic).then(|| (seq[0], seq[seq.len() - 1])));
        }
        ColorClassView {
            class: j,
            component,
            endpoints,
        }
    }

    /// No class has a cycle (degrees are bounded by construction).
    pub fn is_acyclic(&self) -> bool {
        (0..self.t).all(|j| self.class_view(j).is_linear_forest())
    }
}
