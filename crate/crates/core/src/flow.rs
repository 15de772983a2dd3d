//! Unit-augmenting min-cost flow used by the disjoint-path routines.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

pub(crate) const INF_CAP: i64 = i64::MAX / 4;
const INF_DIST: i64 = i64::MAX / 4;

/// Residual network with successive-shortest-path augmentation.
///
/// Arcs are stored in pairs: arc `2i` and its reverse `2i + 1`. Costs must be
/// nonnegative, so zero potentials are feasible initially and Dijkstra with
/// reduced costs stays exact across augmentations.
pub(crate) struct MinCostFlow {
    out: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i64>,
    potential: Vec<i64>,
}

impl MinCostFlow {
    pub fn new(nodes: usize) -> Self {
        MinCostFlow {
            out: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
            potential: vec![0; nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> usize {
        debug_assert!(cost >= 0);
        let id = self.to.len();
        self.out[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.cost.push(cost);
        self.out[to].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
        self.cost.push(-cost);
        id
    }

    pub fn head(&self, arc: usize) -> usize {
        self.to[arc]
    }

    /// Units currently pushed along a forward arc.
    pub fn flow(&self, arc: usize) -> i64 {
        self.cap[arc ^ 1]
    }

    pub fn arcs_from(&self, node: usize) -> &[usize] {
        &self.out[node]
    }

    /// Pushes one unit along a cheapest residual `s`-`t` path. Returns the
    /// path cost, or `None` when `t` is unreachable.
    pub fn augment(&mut self, s: usize, t: usize) -> Option<i64> {
        let n = self.out.len();
        let mut dist = vec![INF_DIST; n];
        let mut via = vec![usize::MAX; n];
        let mut heap = BinaryHeap::new();
        dist[s] = 0;
        heap.push(Reverse((0i64, s)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &a in &self.out[u] {
                if self.cap[a] <= 0 {
                    continue;
                }
                let w = self.to[a];
                let nd = d + self.cost[a] + self.potential[u] - self.potential[w];
                if nd < dist[w] {
                    dist[w] = nd;
                    via[w] = a;
                    heap.push(Reverse((nd, w)));
                }
            }
        }
        if dist[t] >= INF_DIST {
            return None;
        }
        for v in 0..n {
            if dist[v] < INF_DIST {
                self.potential[v] += dist[v];
            }
        }
        let mut v = t;
        let mut total = 0;
        while v != s {
            let a = via[v];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            total += self.cost[a];
            v = self.to[a ^ 1];
        }
        Some(total)
    }

    /// Nodes reachable from `s` through arcs with residual capacity.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let w = self.to[a];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Removes one unit of flow from a forward arc (used during path
    /// decomposition).
    pub fn take_unit(&mut self, arc: usize) {
        self.cap[arc] += 1;
        self.cap[arc ^ 1] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_routes_pick_cheapest_first() {
        // s=0, t=3; route via 1 costs 2, via 2 costs 5.
        let mut f = MinCostFlow::new(4);
        f.add_arc(0, 1, 1, 1);
        f.add_arc(1, 3, 1, 1);
        f.add_arc(0, 2, 1, 2);
        f.add_arc(2, 3, 1, 3);
        assert_eq!(f.augment(0, 3), Some(2));
        assert_eq!(f.augment(0, 3), Some(5));
        assert_eq!(f.augment(0, 3), None);
    }

    #[test]
    fn reroutes_through_negative_residual() {
        // Classic instance where the second augmentation cancels flow.
        let mut f = MinCostFlow::new(4);
        f.add_arc(0, 1, 1, 1);
        f.add_arc(0, 2, 1, 2);
        f.add_arc(1, 2, 1, 0);
        f.add_arc(1, 3, 1, 2);
        f.add_arc(2, 3, 1, 1);
        assert_eq!(f.augment(0, 3), Some(2));
        assert_eq!(f.augment(0, 3), Some(4));
        assert_eq!(f.augment(0, 3), None);
    }
}
