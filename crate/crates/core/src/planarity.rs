//! Planarity testing by path addition over faces (Demoucron, Malgrange and
//! Pertuiset), applied to each biconnected block.
//!
//! Quadratic per block; meant for the bound certificates, not for huge inputs.

use std::collections::HashSet;

use crate::graph::Graph;

/// Exact planarity test.
pub fn is_planar(g: &Graph) -> bool {
    blocks(g).iter().all(|edges| block_is_planar(edges))
}

/// Like [`is_planar`], but gives up (`None`) on graphs with more than
/// `max_vertices` vertices unless edge counting already rules planarity out.
pub fn is_planar_bounded(g: &Graph, max_vertices: usize) -> Option<bool> {
    let n = g.num_vertices();
    if n >= 3 && g.num_edges() > 3 * n - 6 {
        return Some(false);
    }
    if n > max_vertices {
        return None;
    }
    Some(is_planar(g))
}

// Edge lists of the biconnected blocks (iterative Hopcroft-Tarjan).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.num_vertices();
    const NONE: usize = usize::MAX;
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    let adj: Vec<Vec<(usize, usize)>> = (0..n).map(|v| g.incident(v).collect()).collect();
    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent edge, next index)
        let mut stack = vec![(root, NONE, 0usize)];
        while let Some(&mut (v, pe, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let (w, e) = adj[v][*i];
                *i += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == NONE {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(edge) = edge_stack.pop() {
                            block.push(edge);
                            if edge == (p, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

enum Fragment {
    Chord(usize, usize),
    Component { vertices: Vec<usize>, attachments: Vec<usize> },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Component { attachments, .. } => attachments.clone(),
        }
    }
}

fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    let mut ids: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let n = ids.len();
    let m = edges.len();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let local = |x: usize| ids.binary_search(&x).unwrap();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        let (a, b) = (local(u), local(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    Dmp::new(adj).run()
}

struct Dmp {
    adj: Vec<Vec<usize>>,
    in_h: Vec<bool>,
    h_edges: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl Dmp {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        Dmp {
            adj,
            in_h: vec![false; n],
            h_edges: HashSet::new(),
            faces: Vec::new(),
        }
    }

    // Any cycle; a block with at least 3 vertices has one through vertex 0.
    fn find_cycle(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        let mut stack = vec![(0usize, 0usize)];
        depth[0] = 0;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i == self.adj[v].len() {
                stack.pop();
                continue;
            }
            let w = self.adj[v][*i];
            *i += 1;
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        }
        unreachable!("biconnected block without a cycle")
    }

    fn embed_cycle(&mut self, cycle: &[usize]) {
        for (i, &v) in cycle.iter().enumerate() {
            self.in_h[v] = true;
            self.h_edges.insert(key(v, cycle[(i + 1) % cycle.len()]));
        }
        self.faces = vec![cycle.to_vec(), cycle.to_vec()];
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for u in 0..n {
            if !self.in_h[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if u < v && self.in_h[v] && !self.h_edges.contains(&key(u, v)) {
                    out.push(Fragment::Chord(u, v));
                }
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.in_h[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut vertices = vec![s];
            let mut attachments = Vec::new();
            let mut i = 0;
            while i < vertices.len() {
                let v = vertices[i];
                i += 1;
                for &w in &self.adj[v] {
                    if self.in_h[w] {
                        attachments.push(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        vertices.push(w);
                    }
                }
            }
            attachments.sort_unstable();
            attachments.dedup();
            out.push(Fragment::Component { vertices, attachments });
        }
        out
    }

    fn path(&self, frag: &Fragment) -> Vec<usize> {
        match frag {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Component { vertices, attachments } => {
                let a = attachments[0];
                let b = attachments[1];
                let inside: HashSet<usize> = vertices.iter().copied().collect();
                let n = self.adj.len();
                let mut parent = vec![usize::MAX; n];
                let mut queue = std::collections::VecDeque::new();
                for &w in &self.adj[a] {
                    if inside.contains(&w) && parent[w] == usize::MAX {
                        parent[w] = a;
                        queue.push_back(w);
                    }
                }
                while let Some(v) = queue.pop_front() {
                    for &w in &self.adj[v] {
                        if w == b {
                            let mut path = vec![b, v];
                            let mut x = v;
                            while parent[x] != a {
                                x = parent[x];
                                path.push(x);
                            }
                            path.push(a);
                            path.reverse();
                            return path;
                        }
                        if inside.contains(&w) && parent[w] == usize::MAX {
                            parent[w] = v;
                            queue.push_back(w);
                        }
                    }
                }
                unreachable!("fragment attachments are connected through the fragment")
            }
        }
    }

    fn admissible(&self, frag: &Fragment, mark: &mut [bool]) -> Vec<usize> {
        let att = frag.attachments();
        let mut out = Vec::new();
        for (fi, face) in self.faces.iter().enumerate() {
            for &x in face {
                mark[x] = true;
            }
            if att.iter().all(|&x| mark[x]) {
                out.push(fi);
            }
            for &x in face {
                mark[x] = false;
            }
        }
        out
    }

    fn split_face(&mut self, fi: usize, path: &[usize]) {
        let face = std::mem::take(&mut self.faces[fi]);
        let a = path[0];
        let b = *path.last().unwrap();
        let len = face.len();
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let inner = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut k = i;
        loop {
            f1.push(face[k]);
            if k == j {
                break;
            }
            k = (k + 1) % len;
        }
        f1.extend(inner.iter().rev());
        let mut f2 = Vec::new();
        let mut k = j;
        loop {
            f2.push(face[k]);
            if k == i {
                break;
            }
            k = (k + 1) % len;
        }
        f2.extend(inner.iter());
        self.faces[fi] = f1;
        self.faces.push(f2);
        for w in path.windows(2) {
            self.h_edges.insert(key(w[0], w[1]));
        }
        for &x in path {
            self.in_h[x] = true;
        }
    }

    fn run(mut self) -> bool {
        let cycle = self.find_cycle();
        self.embed_cycle(&cycle);
        let mut mark = vec![false; self.adj.len()];
        loop {
            let frags = self.fragments();
            if frags.is_empty() {
                return true;
            }
            let mut choice = None;
            for (idx, frag) in frags.iter().enumerate() {
                let adm = self.admissible(frag, &mut mark);
                match adm.len() {
                    0 => return false,
                    1 => {
                        choice = Some((idx, adm[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((idx, adm[0]));
                        }
                    }
                }
            }
            let (idx, fi) = choice.expect("at least one fragment");
            let path = self.path(&frags[idx]);
            self.split_face(fi, &path);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn grid(w: usize, h: usize) -> Graph {
        let mut g = Graph::new(w * h);
        for y in 0..h {
            for x in 0..w {
                let v = y * w + x;
                if x + 1 < w {
                    g.add_edge(v, v + 1).unwrap();
                }
                if y + 1 < h {
                    g.add_edge(v, v + w).unwrap();
                }
            }
        }
        g
    }

    fn wheel(rim: usize) -> Graph {
        let mut g = Graph::new(rim + 1);
        for i in 0..rim {
            g.add_edge(rim, i).unwrap();
            g.add_edge(i, (i + 1) % rim).unwrap();
        }
        g
    }

    fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        }
        g
    }

    fn k33() -> Graph {
        let mut g = Graph::new(6);
        for a in 0..3 {
            for b in 3..6 {
                g.add_edge(a, b).unwrap();
            }
        }
        g
    }

    // Replaces every edge by a path of length 2.
    fn subdivide(g: &Graph) -> Graph {
        let mut s = Graph::new(g.num_vertices());
        for (u, v) in g.edges() {
            let m = s.add_vertex();
            s.add_edge(u, m).unwrap();
            s.add_edge(m, v).unwrap();
        }
        s
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&k33()));
        assert!(!is_planar(&petersen()));
        assert!(!is_planar(&subdivide(&complete(5))));
        assert!(!is_planar(&subdivide(&k33())));
        assert!(is_planar(&complete(4)));
    }

    #[test]
    fn planar_families() {
        assert!(is_planar(&grid(6, 5)));
        for rim in 3..12 {
            assert!(is_planar(&wheel(rim)));
        }
        assert!(is_planar(&Graph::new(0)));
        assert!(is_planar(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()));
    }

    #[test]
    fn stacked_triangulations_are_planar() {
        // Repeatedly insert a vertex into a triangular face: maximal planar.
        let mut g = complete(3);
        let mut faces = vec![[0, 1, 2], [0, 1, 2]];
        let mut x: u64 = 11;
        for _ in 0..40 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1);
            let f = faces.swap_remove((x >> 33) as usize % faces.len());
            let v = g.add_vertex();
            for &u in &f {
                g.add_edge(u, v).unwrap();
            }
            faces.push([f[0], f[1], v]);
            faces.push([f[1], f[2], v]);
            faces.push([f[0], f[2], v]);
        }
        assert_eq!(g.num_edges(), 3 * g.num_vertices() - 6);
        assert!(is_planar(&g));
        // one more edge breaks the Euler bound
        let a = (0..g.num_vertices())
            .find_map(|u| (u + 1..g.num_vertices()).find(|&v| !g.has_edge(u, v)).map(|v| (u, v)))
            .unwrap();
        g.add_edge(a.0, a.1).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn blocks_joined_at_cut_vertices() {
        // K4 and a wheel sharing a vertex, plus a pendant path: planar.
        let mut g = complete(4);
        let base = g.num_vertices();
        for _ in 0..6 {
            g.add_vertex();
        }
        for i in 0..5 {
            g.add_edge(base + i, base + (i + 1) % 5).unwrap();
            g.add_edge(0, base + i).unwrap();
        }
        g.add_edge(base + 5, 1).unwrap();
        assert!(is_planar(&g));
        // glue a K5 at vertex 2: not planar
        let start = g.num_vertices();
        for _ in 0..4 {
            g.add_vertex();
        }
        let k5: Vec<usize> = std::iter::once(2).chain(start..start + 4).collect();
        for i in 0..5 {
            for j in i + 1..5 {
                g.add_edge(k5[i], k5[j]).unwrap();
            }
        }
        assert!(!is_planar(&g));
        assert_eq!(is_planar_bounded(&g, 3), None);
        assert_eq!(is_planar_bounded(&complete(6), 3), Some(false));
    }
}
