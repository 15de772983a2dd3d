//! Vertex-disjoint `X`-`Y` paths, minimum separators and minimum-total-length
//! path collections.
//!
//! Every routine reduces to a unit-capacity flow on the vertex-split network:
//! vertex `v` becomes `v_in -> v_out` with capacity one and cost zero, each
//! edge `uv` becomes `u_out -> v_in` and `v_out -> u_in` with unbounded
//! capacity and cost one. Vertices of `X ∩ Y` are length-zero paths on their
//! own; they are withdrawn from the network and put in front of the output.
//! Because edge arcs never saturate, a minimum cut consists of vertex arcs
//! only and the residual cut nearest `X` is the canonical separator.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::flow::{MinCostFlow, INF_CAP};
use crate::graph::{Graph, PathCollection, ProblemInstance, Vertex};

/// Outcome of [`menger`]: enough paths, or a small separator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MengerResult {
    Paths(PathCollection),
    Separator(Vec<Vertex>),
}

struct SplitNetwork<'a> {
    g: &'a Graph,
    flow: MinCostFlow,
    source: usize,
    sink: usize,
    vertex_arc: Vec<usize>,
    singletons: Vec<Vertex>,
    value: usize,
}

impl<'a> SplitNetwork<'a> {
    fn build(g: &'a Graph, x: &[Vertex], y: &[Vertex], blocked: Option<&[bool]>) -> Self {
        let n = g.n();
        let is_blocked = |v: Vertex| blocked.is_some_and(|b| b[v]);
        let in_x = crate::graph::mask_of(n, x);
        let in_y = crate::graph::mask_of(n, y);
        let mut removed = vec![false; n];
        let mut singletons = Vec::new();
        for v in 0..n {
            if is_blocked(v) {
                removed[v] = true;
            } else if in_x[v] && in_y[v] {
                removed[v] = true;
                singletons.push(v);
            }
        }
        let source = 2 * n;
        let sink = 2 * n + 1;
        let mut flow = MinCostFlow::new(2 * n + 2);
        let mut vertex_arc = vec![usize::MAX; n];
        for v in 0..n {
            if removed[v] {
                continue;
            }
            vertex_arc[v] = flow.add_arc(2 * v, 2 * v + 1, 1, 0);
            if in_x[v] {
                flow.add_arc(source, 2 * v, INF_CAP, 0);
            }
            if in_y[v] {
                flow.add_arc(2 * v + 1, sink, INF_CAP, 0);
            }
        }
        for (u, v) in g.edges() {
            if removed[u] || removed[v] {
                continue;
            }
            flow.add_arc(2 * u + 1, 2 * v, INF_CAP, 1);
            flow.add_arc(2 * v + 1, 2 * u, INF_CAP, 1);
        }
        SplitNetwork {
            g,
            flow,
            source,
            sink,
            vertex_arc,
            singletons,
            value: 0,
        }
    }

    /// Augments until `limit` paths (singletons included) exist or no
    /// augmenting path remains.
    fn run(&mut self, limit: usize) {
        while self.singletons.len() + self.value < limit {
            if self.flow.augment(self.source, self.sink).is_none() {
                break;
            }
            self.value += 1;
        }
    }

    fn count(&self) -> usize {
        self.singletons.len() + self.value
    }

    /// Decomposes the current flow into vertex sequences. Consumes the flow.
    fn paths(mut self) -> Vec<Vec<Vertex>> {
        let mut out: Vec<Vec<Vertex>> = self.singletons.iter().map(|&v| vec![v]).collect();
        let n = self.g.n();
        let starts: Vec<usize> = self.flow.arcs_from(self.source).to_vec();
        for a in starts {
            if a % 2 == 1 {
                continue;
            }
            while self.flow.flow(a) > 0 {
                self.flow.take_unit(a);
                let mut node = self.flow.head(a);
                let mut path = Vec::new();
                loop {
                    let v = node / 2;
                    path.push(v);
                    let va = self.vertex_arc[v];
                    self.flow.take_unit(va);
                    let out_node = 2 * v + 1;
                    let next = self
                        .flow
                        .arcs_from(out_node)
                        .iter()
                        .copied()
                        .find(|&b| b % 2 == 0 && self.flow.flow(b) > 0)
                        .expect("flow conservation");
                    self.flow.take_unit(next);
                    node = self.flow.head(next);
                    if node == self.sink {
                        break;
                    }
                    debug_assert!(node < 2 * n);
                }
                out.push(path);
            }
        }
        out
    }

    /// Vertices cut by the residual-reachability cut nearest the source,
    /// plus the withdrawn `X ∩ Y` vertices.
    fn separator(&self) -> Vec<Vertex> {
        let reach = self.flow.residual_reachable(self.source);
        let mut sep: Vec<Vertex> = self.singletons.clone();
        for v in 0..self.g.n() {
            if self.vertex_arc[v] != usize::MAX && reach[2 * v] && !reach[2 * v + 1] {
                sep.push(v);
            }
        }
        sep.sort_unstable();
        sep
    }
}

/// Restricts a path to its segment from the last `X` vertex preceding the
/// first `Y` vertex, so that it meets `X ∪ Y` only at its ends.
pub fn trim_to_xy_segment(path: &[Vertex], in_x: &[bool], in_y: &[bool]) -> Vec<Vertex> {
    let end = path.iter().position(|&v| in_y[v]).unwrap_or(path.len() - 1);
    let start = path[..=end].iter().rposition(|&v| in_x[v]).unwrap_or(0);
    path[start..=end].to_vec()
}

fn finish(inst: &ProblemInstance, paths: Vec<Vec<Vertex>>) -> PathCollection {
    let (in_x, in_y) = (inst.x_mask(), inst.y_mask());
    PathCollection::new(
        paths
            .iter()
            .map(|p| trim_to_xy_segment(p, &in_x, &in_y))
            .collect(),
    )
}

/// A maximum collection of pairwise vertex-disjoint `X`-`Y` paths.
///
/// The flow is augmented along cheapest paths, so the collection also has
/// minimum total length among maximum collections.
pub fn max_disjoint_paths(inst: &ProblemInstance) -> PathCollection {
    let mut net = SplitNetwork::build(&inst.graph, &inst.x, &inst.y, None);
    net.run(usize::MAX);
    finish(inst, net.paths())
}

/// Size of a maximum disjoint `X`-`Y` path collection avoiding `blocked`.
pub fn max_disjoint_count(g: &Graph, x: &[Vertex], y: &[Vertex], blocked: Option<&[bool]>) -> usize {
    let mut net = SplitNetwork::build(g, x, y, blocked);
    net.run(usize::MAX);
    net.count()
}

/// Like [`max_disjoint_count`] but stops as soon as `limit` paths exist and
/// returns them.
pub fn disjoint_paths_up_to(
    g: &Graph,
    x: &[Vertex],
    y: &[Vertex],
    blocked: Option<&[bool]>,
    limit: usize,
) -> Vec<Vec<Vertex>> {
    let mut net = SplitNetwork::build(g, x, y, blocked);
    net.run(limit);
    net.paths()
}

/// A minimum vertex set meeting every `X`-`Y` path (the cut nearest `X`).
pub fn min_separator(inst: &ProblemInstance) -> Vec<Vertex> {
    let mut net = SplitNetwork::build(&inst.graph, &inst.x, &inst.y, None);
    net.run(usize::MAX);
    net.separator()
}

/// Whether deleting `sep` leaves no `X`-`Y` path.
pub fn separates(g: &Graph, x: &[Vertex], y: &[Vertex], sep: &[Vertex]) -> bool {
    let blocked = crate::graph::mask_of(g.n(), sep);
    let reach = g.reachable_avoiding(x, &blocked);
    y.iter().all(|&v| !reach[v])
}

/// Menger's dichotomy: at least `k` disjoint `X`-`Y` paths (exactly `k` are
/// returned), or a separator with fewer than `k` vertices.
pub fn menger(inst: &ProblemInstance, k: usize) -> Result<MengerResult> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let mut net = SplitNetwork::build(&inst.graph, &inst.x, &inst.y, None);
    net.run(k);
    if net.count() >= k {
        let mut pc = finish(inst, net.paths());
        pc.paths.truncate(k);
        Ok(MengerResult::Paths(pc))
    } else {
        Ok(MengerResult::Separator(net.separator()))
    }
}

/// Exactly `k` pairwise disjoint `X`-`Y` paths of minimum total edge count.
///
/// Length-zero paths on `X ∩ Y` are used first (smallest ids), the rest come
/// from `k` successive cheapest augmentations. Minimality forces every path
/// to be induced and to meet `X ∪ Y` only at its ends; both are checked.
pub fn min_total_length_disjoint_paths(inst: &ProblemInstance, k: usize) -> Result<PathCollection> {
    if k == 0 {
        return Ok(PathCollection::default());
    }
    let mut net = SplitNetwork::build(&inst.graph, &inst.x, &inst.y, None);
    if net.singletons.len() > k {
        net.singletons.truncate(k);
    }
    net.run(k);
    if net.count() < k {
        let mut full = SplitNetwork::build(&inst.graph, &inst.x, &inst.y, None);
        full.run(usize::MAX);
        return Err(Error::NotEnoughPaths {
            found: full.count(),
            required: k,
            separator: full.separator(),
        });
    }
    let pc = PathCollection::new(net.paths());
    let (in_x, in_y) = (inst.x_mask(), inst.y_mask());
    for p in &pc.paths {
        if !inst.graph.is_induced_path(p) {
            return Err(Error::invariant(format!("minimum-length path {p:?} has a chord")));
        }
        let interior = p.get(1..p.len().saturating_sub(1)).unwrap_or(&[]);
        if p.len() > 1 && (!in_x[p[0]] || !in_y[p[p.len() - 1]] || interior.iter().any(|&v| in_x[v] || in_y[v]))
        {
            return Err(Error::invariant(format!(
                "minimum-length path {p:?} meets X ∪ Y inside"
            )));
        }
    }
    Ok(pc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;

    fn inst(n: usize, edges: &[(usize, usize)], x: &[usize], y: &[usize]) -> ProblemInstance {
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
        ProblemInstance::new(g, x.to_vec(), y.to_vec()).unwrap()
    }

    fn petersen_like() -> ProblemInstance {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, i + 5));
            edges.push(edge(i, (i + 1) % 5));
            edges.push(edge(5 + i, 5 + (i + 2) % 5));
        }
        inst(10, &edges, &[0, 1, 2, 3, 4], &[5, 6, 7, 8, 9])
    }

    #[test]
    fn single_vertex_in_both_sets() {
        let i = inst(1, &[], &[0], &[0]);
        let pc = max_disjoint_paths(&i);
        assert_eq!(pc.paths, vec![vec![0]]);
    }

    #[test]
    fn five_paths_and_separator_of_five() {
        let i = petersen_like();
        let pc = max_disjoint_paths(&i);
        assert_eq!(pc.len(), 5);
        pc.validate_for(&i).unwrap();
        match menger(&i, 6).unwrap() {
            MengerResult::Separator(s) => {
                assert_eq!(s.len(), 5);
                assert!(separates(&i.graph, &i.x, &i.y, &s));
            }
            other => panic!("expected separator, got {other:?}"),
        }
        match menger(&i, 5).unwrap() {
            MengerResult::Paths(pc) => assert_eq!(pc.len(), 5),
            other => panic!("expected paths, got {other:?}"),
        }
        let best = min_total_length_disjoint_paths(&i, 5).unwrap();
        assert_eq!(best.total_length(), 5);
    }

    #[test]
    fn disconnected_sets_have_empty_separator() {
        let i = inst(4, &[(0, 1), (2, 3)], &[0], &[3]);
        assert_eq!(menger(&i, 1).unwrap(), MengerResult::Separator(vec![]));
        assert!(menger(&i, 0).is_err());
    }

    #[test]
    fn shortest_single_path() {
        // Two routes 0-1-2-5 and 0-3-5.
        let i = inst(6, &[(0, 1), (1, 2), (2, 5), (0, 3), (3, 5), (4, 5)], &[0], &[5]);
        let pc = min_total_length_disjoint_paths(&i, 1).unwrap();
        assert_eq!(pc.paths, vec![vec![0, 3, 5]]);
        match min_total_length_disjoint_paths(&i, 2) {
            Err(Error::NotEnoughPaths { found, required, separator }) => {
                assert_eq!((found, required), (1, 2));
                assert_eq!(separator.len(), 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trimming_keeps_last_x_before_first_y() {
        let in_x = [true, false, true, false, false];
        let in_y = [false, false, false, true, true];
        assert_eq!(trim_to_xy_segment(&[0, 1, 2, 3, 4], &in_x, &in_y), vec![2, 3]);
    }
}
