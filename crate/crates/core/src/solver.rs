//! Linear forest partitions of k-degenerate graphs with `ceil(Δ/2)` classes
//! (when `Δ >= 2k²-k`) or `ceil((Δ+1)/2)` classes (when `Δ >= 2k²-2k`).
//!
//! Pipeline per connected component:
//!
//! 1. pad every vertex of degree in `2..Δ` with pendant vertices, so all
//!    degrees are `Δ` or 1;
//! 2. order the vertices k-degenerately with all degree-`Δ` vertices first;
//! 3. give each degree-`Δ` vertex `v` a private set `R*(v)` of `r = floor((Δ-k)/k)`
//!    right neighbours (the representatives);
//! 4. walk the order. At a degree-`Δ` vertex `v`, the edges to the other right
//!    neighbours `W` are inserted one at a time into a class where the
//!    `W`-end is isolated (phase A). The `r` representative edges are then
//!    colored from `C_0(v)` (twice each) and `C_1(v)` (once each) (phase B).
//!    Monochromatic cycles through them are removed by local recolorings
//!    (repair) before the edges are committed.
//!
//! Representatives never become internal path vertices before their owner is
//! processed, which is what keeps phase B feasible.

use serde::Serialize;

use crate::coloring::ForestColoring;
use crate::degeneracy::{degeneracy, degeneracy_ordering, verify_ordering, DegeneracyOrdering};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::sdr::{compute_sdr, SdrAssignment};

pub const DEBUG_ENV: &str = "LINARB_DEBUG_ASSERT";

/// Full-scan state checks above this vertex count are limited to touched vertices.
const FULL_SCAN_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `ceil(Δ/2)` classes, guaranteed for `Δ >= 2k²-k`.
    Minimum,
    /// `ceil((Δ+1)/2)` classes, guaranteed for `Δ >= 2k²-2k`.
    Lac,
}

impl Mode {
    pub fn classes(self, delta: usize) -> usize {
        match self {
            Mode::Minimum => delta.div_ceil(2),
            Mode::Lac => (delta + 1).div_ceil(2),
        }
    }

    /// Smallest maximum degree for which the construction is guaranteed.
    pub fn threshold(self, k: usize) -> usize {
        match self {
            Mode::Minimum => (2 * k * k).saturating_sub(k),
            Mode::Lac => (2 * k * k).saturating_sub(2 * k),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Minimum => "minimum",
            Mode::Lac => "lac",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolverOptions {
    /// Re-verify the representative invariant and the color-count bounds by
    /// independent scans after every step.
    pub debug_checks: bool,
}

impl SolverOptions {
    pub fn from_env() -> Self {
        SolverOptions {
            debug_checks: std::env::var(DEBUG_ENV).is_ok_and(|v| v == "1"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolverStats {
    pub components: usize,
    pub isolated_vertices: usize,
    pub added_vertices: usize,
    pub lemma1_insertions: usize,
    pub repair_iterations: usize,
    /// Repair steps per case (1, 2, 3).
    pub case_counts: [usize; 3],
    pub max_repairs_per_vertex: usize,
}

impl SolverStats {
    fn absorb(&mut self, other: &SolverStats) {
        self.components += other.components;
        self.added_vertices += other.added_vertices;
        self.lemma1_insertions += other.lemma1_insertions;
        self.repair_iterations += other.repair_iterations;
        for (a, b) in self.case_counts.iter_mut().zip(other.case_counts) {
            *a += b;
        }
        self.max_repairs_per_vertex = self.max_repairs_per_vertex.max(other.max_repairs_per_vertex);
    }
}

/// A complete linear forest partition of an input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub t: usize,
    pub k: usize,
    pub delta: usize,
    pub mode: Mode,
    /// Class (`0..t`) of every edge, indexed by edge id.
    pub colors: Vec<usize>,
    pub stats: SolverStats,
}

impl Decomposition {
    /// `(u, v, class)` triples with `u < v` and classes numbered from 1.
    pub fn assignments(&self, g: &Graph) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<_> = g
            .edges()
            .zip(&self.colors)
            .map(|((u, v), &c)| (u, v, c + 1))
            .collect();
        out.sort_unstable();
        out
    }

    /// Edge lists of the classes, each sorted.
    pub fn classes(&self, g: &Graph) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.t];
        for ((u, v), &c) in g.edges().zip(&self.colors) {
            out[c].push((u, v));
        }
        for class in &mut out {
            class.sort_unstable();
        }
        out
    }
}

/// `g` padded with pendant vertices until every degree is `Δ` or 1.
#[derive(Clone, Debug)]
pub struct Regularized {
    pub graph: Graph,
    pub original_vertices: usize,
    pub original_edges: usize,
}

impl Regularized {
    /// Edges of the input keep their ids; pendant edges come after them.
    pub fn is_original_edge(&self, e: EdgeId) -> bool {
        e < self.original_edges
    }

    pub fn added_vertices(&self) -> usize {
        self.graph.num_vertices() - self.original_vertices
    }
}

pub fn regularize(g: &Graph) -> Result<Regularized> {
    regularize_to(g, g.max_degree())
}

/// Attaches `delta - d(v)` pendants to each `v` with `1 < d(v) < delta`.
pub fn regularize_to(g: &Graph, delta: usize) -> Result<Regularized> {
    if delta < 2 || delta < g.max_degree() {
        return Err(Error::Precondition(format!(
            "cannot regularize to degree {delta} (max degree {})",
            g.max_degree()
        )));
    }
    if let Some(v) = (0..g.num_vertices()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    let mut graph = g.clone();
    for v in 0..g.num_vertices() {
        let d = g.degree(v);
        if d > 1 && d < delta {
            for _ in d..delta {
                let p = graph.add_vertex();
                graph.add_edge(v, p)?;
            }
        }
    }
    Ok(Regularized {
        graph,
        original_vertices: g.num_vertices(),
        original_edges: g.num_edges(),
    })
}

/// Orders the regularized graph: the degeneracy order of the original
/// vertices with degree-1 vertices moved (stably) behind the rest, then the
/// pendants. Left degrees never grow, so `k` still bounds them.
pub fn solver_ordering(
    base: &DegeneracyOrdering,
    reg: &Regularized,
    k: usize,
) -> Result<DegeneracyOrdering> {
    let g = &reg.graph;
    let (high, low): (Vec<usize>, Vec<usize>) =
        base.order().iter().partition(|&&v| g.degree(v) > 1);
    let order: Vec<usize> = high
        .into_iter()
        .chain(low)
        .chain(reg.original_vertices..g.num_vertices())
        .collect();
    DegeneracyOrdering::from_order(order, k)
}

/// Adds uncolored edge `e = xy` to a class in which `x` is isolated and `y`
/// has degree at most 1, choosing the smallest such class.
///
/// Requires `2 d(x) + d(y) <= 2t + 2`, degrees counted over the colored
/// edges plus `e`; under that bound such a class exists by averaging. Only
/// `y` can become internal to a path.
pub fn lemma1_insert(fc: &mut ForestColoring, e: EdgeId, x: usize) -> Result<usize> {
    let (a, b) = fc.endpoints(e);
    let y = if x == a {
        b
    } else if x == b {
        a
    } else {
        return Err(Error::Precondition(format!("vertex {x} is not on edge {e}")));
    };
    if fc.color_of(e).is_some() {
        return Err(Error::AlreadyColored(e));
    }
    let t = fc.t();
    let dx = fc.colored_degree(x) + 1;
    let dy = fc.colored_degree(y) + 1;
    if 2 * dx + dy > 2 * t + 2 {
        return Err(Error::Precondition(format!(
            "2d(x)+d(y) = {} exceeds 2t+2 = {}",
            2 * dx + dy,
            2 * t + 2
        )));
    }
    let class = (0..t)
        .find(|&j| 2 * fc.class_degree(x, j) + fc.class_degree(y, j) <= 1)
        .ok_or_else(|| {
            Error::Contradiction(format!("no class admits edge {x}-{y} despite degree bound"))
        })?;
    fc.assign(e, class)?;
    Ok(class)
}

/// One local recoloring made by the repair loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepairStep {
    pub case: u8,
    pub w: usize,
    pub xi: usize,
    pub eta: Option<usize>,
    /// Partner whose edge exchanged colors with `v w`, if any.
    pub u: Option<usize>,
    /// Second representative on the cycle, if any.
    pub w_prime: Option<usize>,
    pub bad_before: usize,
    pub bad_after: usize,
}

/// The representative edges of the current vertex and their tentative
/// colors. They are kept out of the forest coloring until no
/// monochromatic cycle passes through them.
#[derive(Clone, Debug)]
pub struct RepairContext {
    pub v: usize,
    pub reps: Vec<usize>,
    pub edges: Vec<EdgeId>,
    pub colors: Vec<usize>,
    pub w_set: Vec<usize>,
    pub steps: Vec<RepairStep>,
}

impl RepairContext {
    fn partner(&self, a: usize, c: usize) -> Option<usize> {
        (0..self.reps.len()).find(|&b| b != a && self.colors[b] == c)
    }
}

fn contradiction(what: impl Into<String>) -> Error {
    Error::Contradiction(what.into())
}

fn internal(e: Error) -> Error {
    match e {
        Error::Contradiction(_) => e,
        other => Error::Contradiction(other.to_string()),
    }
}

/// Incremental construction over one `(Δ,1)`-regular component.
pub struct SolverState {
    g: Graph,
    ord: DegeneracyOrdering,
    sdr: SdrAssignment,
    fc: ForestColoring,
    frontier: usize,
    mode: Mode,
    delta: usize,
    k: usize,
    opts: SolverOptions,
    stats: SolverStats,
}

impl SolverState {
    /// `g` must be `(delta,1)`-regular and `ord` must list every degree-`delta`
    /// vertex before every degree-1 vertex with left degrees at most `ord.k()`.
    pub fn new(g: Graph, ord: DegeneracyOrdering, delta: usize, mode: Mode, opts: SolverOptions) -> Result<Self> {
        let k = ord.k();
        if k < 2 {
            return Err(Error::Precondition("the incremental construction needs k >= 2".into()));
        }
        if delta < mode.threshold(k) {
            return Err(Error::Precondition(format!(
                "{} mode requires max degree >= {} for k = {k}, got {delta}",
                mode.name(),
                mode.threshold(k)
            )));
        }
        let n = g.num_vertices();
        if let Some(v) = (0..n).find(|&v| g.degree(v) != delta && g.degree(v) != 1) {
            return Err(Error::Precondition(format!(
                "vertex {v} has degree {} (need {delta} or 1)",
                g.degree(v)
            )));
        }
        let mut seen_low = false;
        for &v in ord.order() {
            if g.degree(v) == 1 {
                seen_low = true;
            } else if seen_low {
                return Err(Error::Precondition(format!(
                    "degree-{delta} vertex {v} comes after a degree-1 vertex"
                )));
            }
        }
        if opts.debug_checks && !verify_ordering(&g, &ord, k) {
            return Err(contradiction("ordering does not certify k"));
        }
        let sdr = compute_sdr(&g, &ord, delta)?;
        Ok(Self::with_sdr(g, ord, sdr, delta, mode, opts))
    }

    fn with_sdr(
        g: Graph,
        ord: DegeneracyOrdering,
        sdr: SdrAssignment,
        delta: usize,
        mode: Mode,
        opts: SolverOptions,
    ) -> Self {
        let k = ord.k();
        let fc = ForestColoring::new(&g, mode.classes(delta));
        SolverState {
            g,
            ord,
            sdr,
            fc,
            frontier: 0,
            mode,
            delta,
            k,
            opts,
            stats: SolverStats::default(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn ordering(&self) -> &DegeneracyOrdering {
        &self.ord
    }

    pub fn sdr(&self) -> &SdrAssignment {
        &self.sdr
    }

    pub fn coloring(&self) -> &ForestColoring {
        &self.fc
    }

    pub fn stats(&self) -> &SolverStats {
        &self.stats
    }

    /// Number of vertices processed so far.
    pub fn frontier(&self) -> usize {
        self.frontier
    }

    pub fn r(&self) -> usize {
        self.sdr.r()
    }

    pub fn t(&self) -> usize {
        self.fc.t()
    }

    pub fn run(&mut self) -> Result<()> {
        for i in self.frontier..self.g.num_vertices() {
            self.process_vertex(i)?;
        }
        Ok(())
    }

    /// Colors every edge from `v_i` to its right neighbours.
    pub fn process_vertex(&mut self, i: usize) -> Result<()> {
        if i != self.frontier {
            return Err(Error::Precondition(format!(
                "vertex {i} processed out of order (next is {})",
                self.frontier
            )));
        }
        let v = self.ord.order()[i];
        if self.g.degree(v) == 1 {
            if !self.ord.right_neighbors(&self.g, v).is_empty() {
                return Err(contradiction(format!("degree-1 vertex {v} has a right neighbour")));
            }
        } else {
            self.phase_a_add_w_edges(i)?;
            let mut ctx = self.phase_b_saturated_extension(i)?;
            self.repair_monochromatic_cycles(&mut ctx)?;
            self.commit(&ctx)?;
            if self.opts.debug_checks {
                self.check_after_vertex(i, &ctx)?;
            }
        }
        self.frontier += 1;
        Ok(())
    }

    fn right_split(&self, v: usize) -> (Vec<usize>, Vec<usize>) {
        let reps = self.sdr.reps(v);
        self.ord
            .right_neighbors(&self.g, v)
            .into_iter()
            .partition(|u| reps.binary_search(u).is_ok())
    }

    /// Inserts the edges to `W = N_R(v_i) \ R*(v_i)` in increasing id order.
    pub fn phase_a_add_w_edges(&mut self, i: usize) -> Result<()> {
        let v = self.ord.order()[i];
        let (_, w_set) = self.right_split(v);
        for &u in &w_set {
            let e = self.g.edge_id(v, u).expect("right neighbour is adjacent");
            lemma1_insert(&mut self.fc, e, u).map_err(internal)?;
            self.stats.lemma1_insertions += 1;
        }
        let dv = self.fc.colored_degree(v);
        if dv + self.sdr.r() != self.delta {
            return Err(contradiction(format!(
                "vertex {v} has {dv} colored edges after phase A, expected {}",
                self.delta - self.sdr.r()
            )));
        }
        Ok(())
    }

    /// Colors the representative edges of `v_i` greedily: each class of
    /// `C_0(v_i)` twice, then each class of `C_1(v_i)` once, in class order.
    pub fn phase_b_saturated_extension(&mut self, i: usize) -> Result<RepairContext> {
        let v = self.ord.order()[i];
        let (reps, w_set) = self.right_split(v);
        let r = self.sdr.r();
        if reps.len() != r {
            return Err(contradiction(format!("vertex {v} has {} representatives, expected {r}", reps.len())));
        }
        let sets = self.fc.color_sets(v);
        let slack = 2 * sets.zero.len() + sets.one.len();
        let upper_ok = self.mode != Mode::Minimum || slack <= r + 1;
        if slack < r || !upper_ok {
            return Err(contradiction(format!(
                "color-count bound violated at vertex {v}: 2|C0|+|C1| = {slack}, r = {r}"
            )));
        }
        if self.opts.debug_checks {
            self.recount_color_sets(v, slack)?;
        }
        for &w in &reps {
            if let Some(j) = (0..self.t()).find(|&j| self.fc.class_degree(w, j) >= 2) {
                return Err(contradiction(format!(
                    "representative {w} of {v} is internal in class {j}"
                )));
            }
        }
        let palette = sets
            .zero
            .iter()
            .flat_map(|&j| [j, j])
            .chain(sets.one.iter().copied());
        let colors: Vec<usize> = palette.take(r).collect();
        let edges = reps
            .iter()
            .map(|&w| self.g.edge_id(v, w).expect("representative is adjacent"))
            .collect();
        Ok(RepairContext {
            v,
            reps,
            edges,
            colors,
            w_set,
            steps: Vec::new(),
        })
    }

    fn recount_color_sets(&self, v: usize, slack: usize) -> Result<()> {
        let mut per_class = vec![0usize; self.t()];
        for (_, e) in self.g.incident(v) {
            if let Some(c) = self.fc.color_of(e) {
                per_class[c] += 1;
            }
        }
        let recount: usize = per_class
            .iter()
            .map(|&d| match d {
                0 => 2,
                1 => 1,
                _ => 0,
            })
            .sum();
        if recount != slack || per_class.iter().any(|&d| d > 2) {
            return Err(contradiction(format!(
                "class degrees at {v} disagree with a direct recount"
            )));
        }
        Ok(())
    }

    /// Indices (into `ctx.reps`) of representatives whose edge to `v` closes
    /// a monochromatic cycle. With the committed classes acyclic, such a cycle
    /// is `v w` plus a path from `w` back to `v` (when `v` already has an edge
    /// of that class) or to the other representative sharing the class.
    pub fn bad_set(&self, ctx: &RepairContext) -> Result<Vec<usize>> {
        let mut bad = Vec::new();
        for (a, (&w, &c)) in ctx.reps.iter().zip(&ctx.colors).enumerate() {
            let target = match self.fc.class_degree(ctx.v, c) {
                1 => Some(ctx.v),
                0 => ctx.partner(a, c).map(|b| ctx.reps[b]),
                _ => return Err(contradiction(format!("class {c} is full at {}", ctx.v))),
            };
            let end = self
                .fc
                .path_end(w, c)
                .ok_or_else(|| contradiction(format!("representative {w} internal in class {c}")))?;
            if target == Some(end) {
                bad.push(a);
            }
        }
        Ok(bad)
    }

    fn check_saturated(&self, ctx: &RepairContext) -> Result<()> {
        for c in 0..self.t() {
            let used = ctx.colors.iter().filter(|&&x| x == c).count();
            if self.fc.class_degree(ctx.v, c) + used > 2 {
                return Err(contradiction(format!("class {c} overfull at {}", ctx.v)));
            }
        }
        Ok(())
    }

    /// Recolors representative edges until none lies on a monochromatic
    /// cycle. Every step must shrink the set of such edges.
    pub fn repair_monochromatic_cycles(&mut self, ctx: &mut RepairContext) -> Result<()> {
        let v = ctx.v;
        let t = self.t();
        let r = self.sdr.r();
        let mut bad = self.bad_set(ctx)?;
        let mut iterations = 0;
        while let Some(&a) = bad.first() {
            iterations += 1;
            if iterations > r + 1 {
                return Err(contradiction(format!(
                    "repair at {v} exceeded {} iterations: {ctx:?}",
                    r + 1
                )));
            }
            let w = ctx.reps[a];
            let xi = ctx.colors[a];
            let w_prime = match self.fc.class_degree(v, xi) {
                0 => ctx.partner(a, xi).map(|b| ctx.reps[b]),
                _ => None,
            };
            if self.opts.debug_checks {
                self.check_cycle_shape(ctx, w, xi, w_prime)?;
            }

            let case1 = (0..t).find(|&j| self.fc.class_degree(w, j) == 0 && self.fc.class_degree(v, j) != 2);
            let case2 = (0..t).find(|&j| self.fc.class_degree(v, j) == 0 && j != xi);
            let (case, eta, u) = if let Some(eta) = case1 {
                let partner = ctx.partner(a, eta);
                if let Some(b) = partner {
                    ctx.colors[b] = xi;
                }
                ctx.colors[a] = eta;
                (1, eta, partner.map(|b| ctx.reps[b]))
            } else if let Some(eta) = case2 {
                // Prefer the representative whose eta-path leads to w.
                let on_path = self
                    .fc
                    .path_end(w, eta)
                    .and_then(|end| ctx.reps.iter().position(|&x| x == end))
                    .filter(|&b| ctx.colors[b] == eta);
                let partner = on_path.or_else(|| ctx.partner(a, eta));
                if let Some(b) = partner {
                    ctx.colors[b] = xi;
                }
                ctx.colors[a] = eta;
                (2, eta, partner.map(|b| ctx.reps[b]))
            } else {
                if self.k != 2 {
                    return Err(contradiction(format!(
                        "third repair case reached at {v} with k = {}",
                        self.k
                    )));
                }
                let &u = ctx
                    .w_set
                    .first()
                    .ok_or_else(|| contradiction(format!("third repair case at {v} with empty W")))?;
                let e = self.g.edge_id(v, u).expect("W vertex is adjacent");
                let eta = self.fc.color_of(e).ok_or_else(|| contradiction("W edge uncolored"))?;
                if eta == xi {
                    return Err(contradiction(format!("W edge {v}-{u} already has class {xi}")));
                }
                self.fc.recolor(e, xi).map_err(internal)?;
                ctx.colors[a] = eta;
                (3, eta, Some(u))
            };
            self.stats.case_counts[case - 1] += 1;
            self.stats.repair_iterations += 1;
            self.check_saturated(ctx)?;

            let next = self.bad_set(ctx)?;
            ctx.steps.push(RepairStep {
                case: case as u8,
                w,
                xi,
                eta: Some(eta),
                u,
                w_prime,
                bad_before: bad.len(),
                bad_after: next.len(),
            });
            if next.len() >= bad.len() {
                return Err(contradiction(format!(
                    "repair step did not shrink the cycle set at {v}: {:?}",
                    ctx.steps.last()
                )));
            }
            bad = next;
        }
        self.stats.max_repairs_per_vertex = self.stats.max_repairs_per_vertex.max(iterations);
        Ok(())
    }

    // The cycle through v w minus v is a path whose only representatives are
    // its ends.
    fn check_cycle_shape(&self, ctx: &RepairContext, w: usize, xi: usize, w_prime: Option<usize>) -> Result<()> {
        let path = self.fc.path_through(xi, w).map_err(internal)?;
        let path: Vec<usize> = path.into_iter().filter(|&x| x != ctx.v).collect();
        let first = path.first().copied();
        let last = path.last().copied();
        if first != Some(w) && last != Some(w) {
            return Err(contradiction(format!("{w} is not an end of its cycle path")));
        }
        let on_path: Vec<usize> = path.iter().copied().filter(|x| ctx.reps.contains(x)).collect();
        if on_path.len() > 2 || on_path.iter().any(|&x| x != w && Some(x) != w_prime) {
            return Err(contradiction(format!(
                "cycle path through {w} meets representatives {on_path:?}"
            )));
        }
        Ok(())
    }

    fn commit(&mut self, ctx: &RepairContext) -> Result<()> {
        for ((&w, &e), &c) in ctx.reps.iter().zip(&ctx.edges).zip(&ctx.colors) {
            if self.fc.would_close_cycle(c, ctx.v, w) {
                return Err(contradiction(format!("edge {}-{w} closes a cycle in class {c}", ctx.v)));
            }
            self.fc.assign(e, c).map_err(internal)?;
        }
        Ok(())
    }

    fn check_after_vertex(&self, i: usize, ctx: &RepairContext) -> Result<()> {
        let v = ctx.v;
        if let Some((u, _)) = self.g.incident(v).find(|&(_, e)| self.fc.color_of(e).is_none()) {
            return Err(contradiction(format!("edge {v}-{u} uncolored after processing {v}")));
        }
        let mut touched: Vec<usize> = vec![v];
        touched.extend(self.g.neighbors(v));
        if self.g.num_vertices() <= FULL_SCAN_LIMIT {
            touched = (0..self.g.num_vertices()).collect();
        }
        self.check_future_representatives(i, &touched)?;
        if self.g.num_vertices() <= FULL_SCAN_LIMIT && !self.fc.is_acyclic() {
            return Err(contradiction(format!("cycle present after processing {v}")));
        }
        Ok(())
    }

    /// No representative of a vertex after position `i` is internal to a path.
    pub fn check_future_representatives(&self, i: usize, vertices: &[usize]) -> Result<()> {
        for &x in vertices {
            let Some(owner) = self.sdr.owner(x) else {
                continue;
            };
            if self.ord.position(owner) <= i {
                continue;
            }
            if let Some(j) = (0..self.t()).find(|&j| self.fc.class_degree(x, j) >= 2) {
                return Err(contradiction(format!(
                    "future representative {x} (of {owner}) is internal in class {j}"
                )));
            }
        }
        Ok(())
    }
}

/// Splits each star of a forest into pairs; edges into a child start a new
/// pair away from the class of the parent edge.
fn forest_pairing(g: &Graph, t: usize) -> Result<Vec<usize>> {
    let n = g.num_vertices();
    let mut colors = vec![usize::MAX; g.num_edges()];
    let mut parent_class = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut load = vec![0u8; t];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            load.fill(0);
            if parent_class[v] != usize::MAX {
                load[parent_class[v]] = 1;
            }
            let mut j = 0;
            for (w, e) in g.incident(v) {
                if colors[e] != usize::MAX {
                    continue;
                }
                if seen[w] {
                    return Err(Error::Precondition("forest pairing on a graph with a cycle".into()));
                }
                while j < t && load[j] == 2 {
                    j += 1;
                }
                if j == t {
                    return Err(contradiction(format!("vertex {v} needs more than {t} classes")));
                }
                colors[e] = j;
                load[j] += 1;
                parent_class[w] = j;
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    Ok(colors)
}

fn solve_component(
    c: &Graph,
    delta: usize,
    k: usize,
    mode: Mode,
    opts: SolverOptions,
) -> Result<(Vec<usize>, SolverStats)> {
    if c.num_edges() == 1 {
        return Ok((vec![0], SolverStats::default()));
    }
    let reg = regularize_to(c, delta)?;
    let base = degeneracy_ordering(c);
    let ord = solver_ordering(&base, &reg, k)?;
    let added = reg.added_vertices();
    let original_edges = reg.original_edges;
    let mut state = SolverState::new(reg.graph, ord, delta, mode, opts)?;
    state.run()?;
    let colors = (0..original_edges)
        .map(|e| state.fc.color_of(e).ok_or_else(|| contradiction(format!("edge {e} left uncolored"))))
        .collect::<Result<Vec<_>>>()?;
    let mut stats = state.stats;
    stats.added_vertices = added;
    Ok((colors, stats))
}

/// Partitions `E(g)` into `mode.classes(Δ)` linear forests.
///
/// Fails with [`Error::Precondition`] when `Δ` is below the mode's threshold
/// for the degeneracy `k` of `g`.
pub fn decompose(g: &Graph, mode: Mode) -> Result<Decomposition> {
    decompose_with(g, mode, SolverOptions::from_env())
}

pub fn decompose_with(g: &Graph, mode: Mode, opts: SolverOptions) -> Result<Decomposition> {
    let delta = g.max_degree();
    let k = degeneracy(g);
    let t = mode.classes(delta);
    let required = mode.threshold(k);
    if delta < required {
        return Err(Error::Precondition(format!(
            "{} mode requires max degree >= {required} for a {k}-degenerate graph (got {delta})",
            mode.name()
        )));
    }
    let mut stats = SolverStats {
        isolated_vertices: (0..g.num_vertices()).filter(|&v| g.degree(v) == 0).count(),
        ..SolverStats::default()
    };
    let mut colors = vec![usize::MAX; g.num_edges()];
    if k <= 1 {
        colors = forest_pairing(g, t)?;
        stats.components = g.connected_components().iter().filter(|c| c.len() > 1).count();
    } else {
        for comp in g.connected_components() {
            if comp.len() < 2 {
                continue;
            }
            let (sub, edge_map) = g.induced_subgraph(&comp);
            let (local, s) = solve_component(&sub, delta, k, mode, opts)?;
            for (le, c) in local.into_iter().enumerate() {
                colors[edge_map[le]] = c;
            }
            stats.absorb(&s);
            stats.components += 1;
        }
    }
    Ok(Decomposition {
        t,
        k,
        delta,
        mode,
        colors,
        stats,
    })
}
