//! Dinic max-flow with iterative augmentation.

use std::collections::VecDeque;

const NIL: u32 = u32::MAX;

// Arcs live in one array; each node's outgoing arcs form a linked list
// threaded through `next_arc`.
#[derive(Clone, Debug)]
pub(crate) struct FlowNetwork {
    to: Vec<u32>,
    cap: Vec<u32>,
    next_arc: Vec<u32>,
    head: Vec<u32>,
    level: Vec<u32>,
    cursor: Vec<u32>,
}

impl FlowNetwork {
    pub(crate) fn new(n: usize) -> Self {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            next_arc: Vec::new(),
            head: vec![NIL; n],
            level: vec![NIL; n],
            cursor: vec![NIL; n],
        }
    }

    fn push_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.to.push(to as u32);
        self.cap.push(cap);
        self.next_arc.push(self.head[from]);
        self.head[from] = (self.to.len() - 1) as u32;
    }

    /// Adds `from -> to` and returns its arc id; the residual twin is `id ^ 1`.
    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: u32) -> usize {
        let id = self.to.len();
        self.push_arc(from, to, cap);
        self.push_arc(to, from, 0);
        id
    }

    /// Flow currently pushed through a forward arc.
    pub(crate) fn flow(&self, id: usize) -> u32 {
        self.cap[id ^ 1]
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(NIL);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s as u32]);
        while let Some(v) = queue.pop_front() {
            let mut a = self.head[v as usize];
            while a != NIL {
                let w = self.to[a as usize] as usize;
                if self.cap[a as usize] > 0 && self.level[w] == NIL {
                    self.level[w] = self.level[v as usize] + 1;
                    queue.push_back(w as u32);
                }
                a = self.next_arc[a as usize];
            }
        }
        self.level[t] != NIL
    }

    fn blocking_flow(&mut self, s: usize, t: usize) -> u64 {
        self.cursor.copy_from_slice(&self.head);
        let mut total = 0;
        let mut path: Vec<u32> = Vec::new();
        let mut v = s;
        loop {
            if v == t {
                let push = path.iter().map(|&a| self.cap[a as usize]).min().unwrap_or(0);
                for &a in &path {
                    self.cap[a as usize] -= push;
                    self.cap[(a ^ 1) as usize] += push;
                }
                total += u64::from(push);
                path.clear();
                v = s;
                continue;
            }
            let mut advanced = false;
            while self.cursor[v] != NIL {
                let a = self.cursor[v];
                let w = self.to[a as usize] as usize;
                if self.cap[a as usize] > 0 && self.level[w] != NIL && self.level[w] == self.level[v] + 1 {
                    path.push(a);
                    v = w;
                    advanced = true;
                    break;
                }
                self.cursor[v] = self.next_arc[a as usize];
            }
            if advanced {
                continue;
            }
            // dead end
            self.level[v] = NIL;
            match path.pop() {
                Some(a) => {
                    v = self.to[(a ^ 1) as usize] as usize;
                    self.cursor[v] = self.next_arc[self.cursor[v] as usize];
                }
                None => return total,
            }
        }
    }

    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0;
        while self.bfs(s, t) {
            total += self.blocking_flow(s, t);
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_network() {
        let mut f = FlowNetwork::new(6);
        f.add_arc(0, 1, 10);
        f.add_arc(0, 2, 10);
        f.add_arc(1, 3, 4);
        f.add_arc(1, 4, 8);
        f.add_arc(2, 4, 9);
        f.add_arc(3, 5, 10);
        f.add_arc(4, 3, 6);
        f.add_arc(4, 5, 10);
        assert_eq!(f.max_flow(0, 5), 19);
    }

    #[test]
    fn disconnected() {
        let mut f = FlowNetwork::new(4);
        f.add_arc(0, 1, 3);
        f.add_arc(2, 3, 3);
        assert_eq!(f.max_flow(0, 3), 0);
    }

    #[test]
    fn needs_rerouting() {
        // Greedy first path 0-1-3 blocks; max flow routes around it.
        let mut f = FlowNetwork::new(6);
        let s = 0;
        let t = 5;
        f.add_arc(s, 1, 1);
        f.add_arc(s, 2, 1);
        f.add_arc(1, 3, 1);
        f.add_arc(1, 4, 1);
        f.add_arc(2, 3, 1);
        let a = f.add_arc(3, t, 1);
        let b = f.add_arc(4, t, 1);
        assert_eq!(f.max_flow(s, t), 2);
        assert_eq!(f.flow(a) + f.flow(b), 2);
    }
}
