use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{PathSystem, PATHS};
use crate::colouring::one_outside_edge_violation;
use crate::disjoint::{disjoint_paths_up_to, trim_to_xy_segment};
use crate::error::{Error, Result};
use crate::graph::{edge, mask_of, Edge, Graph, PathCollection, ProblemInstance, Vertex};

/// How a normalized system sits in the original instance.
///
/// Pendant vertices added in front of `X` have no original. An edge of the
/// system may stand for a path through suppressed degree-two vertices, and a
/// `B` vertex may have lost a tail of vertices towards `Y`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    /// System vertex to original vertex.
    pub vertex: Vec<Option<Vertex>>,
    /// Original vertices hidden inside a system edge `(u, v)`, `u < v`,
    /// listed from the `u` side.
    pub expansions: BTreeMap<Edge, Vec<Vertex>>,
    /// Original vertices to append after a system `B` vertex.
    pub tails: BTreeMap<Vertex, Vec<Vertex>>,
}

impl Provenance {
    /// Maps a system path to a walk in the original graph. Pendants are
    /// dropped, hidden vertices restored and `B` tails appended.
    pub fn map_path(&self, path: &[Vertex]) -> Vec<Vertex> {
        let mut out = Vec::new();
        for (p, &v) in path.iter().enumerate() {
            if p > 0 {
                let u = path[p - 1];
                if let Some(mid) = self.expansions.get(&edge(u, v)) {
                    if u < v {
                        out.extend(mid.iter().copied());
                    } else {
                        out.extend(mid.iter().rev().copied());
                    }
                }
            }
            if let Some(o) = self.vertex[v] {
                out.push(o);
            }
        }
        if let Some(&last) = path.last() {
            if let Some(t) = self.tails.get(&last) {
                out.extend(t.iter().copied());
            }
        }
        out
    }
}

/// Mutable working copy. Ids are those of the input graph, pendants appended.
struct Work {
    g: Graph,
    alive: Vec<bool>,
    /// Original vertex of each working id; `None` for pendants.
    orig: Vec<Option<Vertex>>,
    paths: Vec<Vec<Vertex>>,
    expansions: BTreeMap<Edge, Vec<Vertex>>,
    tails: BTreeMap<Vertex, Vec<Vertex>>,
}

impl Work {
    fn path_edge_owner(&self) -> BTreeMap<Edge, usize> {
        let mut m = BTreeMap::new();
        for (i, p) in self.paths.iter().enumerate() {
            for w in p.windows(2) {
                m.insert(edge(w[0], w[1]), i);
            }
        }
        m
    }

    fn outside_degree(&self, v: Vertex, path_edges: &BTreeMap<Edge, usize>) -> usize {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&w| self.alive[w] && !path_edges.contains_key(&edge(v, w)))
            .count()
    }

    /// Original vertices strictly between `u` and `w` along edge `uw`, from `u`.
    fn hidden(&self, u: Vertex, w: Vertex) -> Vec<Vertex> {
        match self.expansions.get(&edge(u, w)) {
            Some(mid) if u < w => mid.clone(),
            Some(mid) => mid.iter().rev().copied().collect(),
            None => Vec::new(),
        }
    }

    fn set_hidden(&mut self, u: Vertex, w: Vertex, mut mid: Vec<Vertex>) {
        if mid.is_empty() {
            self.expansions.remove(&edge(u, w));
            return;
        }
        if u > w {
            mid.reverse();
        }
        self.expansions.insert(edge(u, w), mid);
    }

    fn kill(&mut self, v: Vertex) {
        self.alive[v] = false;
        for w in self.g.neighbors(v).to_vec() {
            self.g.remove_edge(v, w);
            self.expansions.remove(&edge(v, w));
        }
    }

    /// Keeps only vertices on the paths.
    fn restrict(&mut self) {
        let mut on = vec![false; self.g.n()];
        for p in &self.paths {
            for &v in p {
                on[v] = true;
            }
        }
        for v in 0..self.g.n() {
            if self.alive[v] && !on[v] {
                self.kill(v);
            }
        }
    }

    /// Condition (2): a pendant in front of every `A` end with an outside edge.
    fn add_pendants(&mut self) -> bool {
        let pe = self.path_edge_owner();
        let mut changed = false;
        for i in 0..PATHS {
            let x = self.paths[i][0];
            if self.outside_degree(x, &pe) > 0 {
                let p = self.g.add_vertex();
                self.alive.push(true);
                self.orig.push(None);
                self.g.add_edge(p, x).unwrap();
                self.paths[i].insert(0, p);
                changed = true;
            }
        }
        changed
    }

    /// Condition (3) inside the paths: undo subdivisions.
    fn suppress(&mut self) -> bool {
        let mut changed = false;
        'again: loop {
            let pe = self.path_edge_owner();
            for i in 0..PATHS {
                let p = &self.paths[i];
                for pos in 1..p.len().saturating_sub(1) {
                    let v = p[pos];
                    if self.outside_degree(v, &pe) > 0 {
                        continue;
                    }
                    let (u, w) = (p[pos - 1], p[pos + 1]);
                    if self.g.has_edge(u, w) {
                        // A chord; the path just skips v.
                        self.paths[i].remove(pos);
                        self.kill(v);
                    } else {
                        let mut mid = self.hidden(u, v);
                        mid.extend(self.orig[v]);
                        mid.extend(self.hidden(v, w));
                        self.paths[i].remove(pos);
                        self.kill(v);
                        self.g.add_edge(u, w).unwrap();
                        self.set_hidden(u, w, mid);
                    }
                    changed = true;
                    continue 'again;
                }
            }
            return changed;
        }
    }

    /// Condition (3) at `B`: slide ends without an outside edge inwards.
    fn slide_ends(&mut self) -> bool {
        let mut changed = false;
        'again: loop {
            let pe = self.path_edge_owner();
            for i in 0..PATHS {
                let p = &self.paths[i];
                if p.len() < 2 {
                    continue;
                }
                let y = *p.last().unwrap();
                if self.outside_degree(y, &pe) > 0 {
                    continue;
                }
                let y2 = p[p.len() - 2];
                let mut tail = self.hidden(y2, y);
                tail.extend(self.orig[y]);
                tail.extend(self.tails.remove(&y).unwrap_or_default());
                self.paths[i].pop();
                self.kill(y);
                self.tails.insert(y2, tail);
                changed = true;
                continue 'again;
            }
            return changed;
        }
    }

    /// Condition (4): adopt five disjoint `A`-`B` paths avoiding some vertex.
    fn shrink_support(&mut self) -> bool {
        let a: Vec<Vertex> = self.paths.iter().map(|p| p[0]).collect();
        let b: Vec<Vertex> = self.paths.iter().map(|p| *p.last().unwrap()).collect();
        let n = self.g.n();
        let in_a = mask_of(n, &a);
        let in_b = mask_of(n, &b);
        let mut blocked: Vec<bool> = self.alive.iter().map(|&l| !l).collect();
        for v in 0..n {
            if !self.alive[v] || in_a[v] || in_b[v] {
                continue;
            }
            blocked[v] = true;
            let found = disjoint_paths_up_to(&self.g, &a, &b, Some(&blocked), PATHS);
            blocked[v] = false;
            if found.len() < PATHS {
                continue;
            }
            let mut by_start = vec![Vec::new(); PATHS];
            for p in found {
                let p = trim_to_xy_segment(&p, &in_a, &in_b);
                let i = a.iter().position(|&x| x == p[0]).unwrap();
                by_start[i] = p;
            }
            self.paths = by_start;
            self.restrict();
            return true;
        }
        false
    }
}

/// Reduces five disjoint `X`-`Y` paths, each vertex of which meets at most one
/// other edge, to a path system.
///
/// Steps, repeated until nothing changes: restrict to the paths, add pendants
/// in front of `X` ends with an outside edge, suppress internal vertices
/// without one, slide `Y` ends without one inwards, then replace the paths by
/// five disjoint paths of smaller support when some exist. System vertices
/// are numbered path by path from the `A` end.
pub fn normalize(inst: &ProblemInstance, pc: &PathCollection) -> Result<(PathSystem, Provenance)> {
    if pc.len() != PATHS {
        return Err(Error::input(format!("expected 5 disjoint X-Y paths, got {}", pc.len())));
    }
    pc.validate_for(inst)?;
    let g = &inst.graph;
    if let Some(v) = one_outside_edge_violation(g, pc) {
        return Err(Error::input(format!(
            "vertex {} is incident to more than one edge off the paths",
            g.name(v)
        )));
    }
    let (in_x, in_y) = (inst.x_mask(), inst.y_mask());
    let mut work = Work {
        g: g.clone(),
        alive: vec![true; g.n()],
        orig: (0..g.n()).map(Some).collect(),
        paths: pc.paths.iter().map(|p| trim_to_xy_segment(p, &in_x, &in_y)).collect(),
        expansions: BTreeMap::new(),
        tails: BTreeMap::new(),
    };
    work.restrict();
    work.add_pendants();
    loop {
        let mut changed = work.suppress();
        changed |= work.slide_ends();
        if !changed && !work.shrink_support() {
            break;
        }
    }

    let mut new_id = vec![usize::MAX; work.g.n()];
    let mut order = Vec::new();
    for p in &work.paths {
        for &v in p {
            new_id[v] = order.len();
            order.push(v);
        }
    }
    let mut h = Graph::new(order.len());
    for (u, v) in work.g.edges() {
        if work.alive[u] && work.alive[v] {
            h.add_edge(new_id[u], new_id[v])?;
        }
    }
    for (i, &v) in order.iter().enumerate() {
        if let Some(o) = work.orig[v] {
            if let Some(l) = g.label(o) {
                h.set_label(i, l);
            }
        }
    }
    let q: Vec<Vec<Vertex>> = work.paths.iter().map(|p| p.iter().map(|&v| new_id[v]).collect()).collect();
    let ps = PathSystem::from_paths(h, q)?;
    let prov = Provenance {
        vertex: order.iter().map(|&v| work.orig[v]).collect(),
        expansions: work
            .expansions
            .iter()
            .filter(|((u, v), _)| work.alive[*u] && work.alive[*v])
            .map(|(&(u, v), mid)| {
                let (a, b) = (new_id[u], new_id[v]);
                let mid = if a < b { mid.clone() } else { mid.iter().rev().copied().collect() };
                (edge(a, b), mid)
            })
            .collect(),
        tails: work
            .tails
            .iter()
            .filter(|(v, _)| work.alive[**v])
            .map(|(&v, t)| (new_id[v], t.clone()))
            .collect(),
    };
    ps.validate()
        .map_err(|e| Error::invariant(format!("normalization left an invalid system: {e}")))?;
    Ok((ps, prov))
}
