//! Simple undirected graphs and the operations every other module builds on.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

/// Normalizes an edge so that the smaller endpoint comes first.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, which makes the adjacency itself a
/// canonical form: two graphs compare equal iff they have the same vertex
/// count and the same edge set. Labels are carried along for IO but ignored
/// by equality.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: BTreeMap::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Inserts `uv`. Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::input(format!(
                "vertex {v} out of range for graph on {} vertices",
                self.n()
            )))
        }
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    /// Human readable name of a vertex: its label if present, else its id.
    pub fn name(&self, v: Vertex) -> String {
        match self.label(v) {
            Some(l) => String::from(l),
            None => format!("{v}"),
        }
    }

    /// `true` if consecutive vertices are adjacent and no vertex repeats.
    pub fn is_path(&self, seq: &[Vertex]) -> bool {
        if seq.is_empty() || seq.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let mut seen = vec![false; self.n()];
        for &v in seq {
            if core::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// A path with no chord between non-consecutive vertices.
    pub fn is_induced_path(&self, seq: &[Vertex]) -> bool {
        if !self.is_path(seq) {
            return false;
        }
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in seq.iter().enumerate() {
            pos[v] = i;
        }
        seq.iter().enumerate().all(|(i, &v)| {
            self.adj[v]
                .iter()
                .all(|&w| pos[w] == usize::MAX || pos[w] + 1 == i || i + 1 == pos[w])
        })
    }

    /// Breadth-first shortest path from any vertex of `sources` to any vertex
    /// of `targets`, staying inside `allowed` (all vertices when `None`).
    ///
    /// Sources and neighbors are scanned in increasing id order, so the
    /// result is the lexicographically earliest shortest path discovered.
    pub fn shortest_path_within(
        &self,
        sources: &[Vertex],
        targets: &[bool],
        allowed: Option<&[bool]>,
    ) -> Option<Vec<Vertex>> {
        let ok = |v: Vertex| allowed.is_none_or(|a| a[v]);
        let mut parent = vec![usize::MAX; self.n()];
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::new();
        let mut srcs: Vec<Vertex> = sources.iter().copied().filter(|&s| ok(s)).collect();
        srcs.sort_unstable();
        srcs.dedup();
        for s in srcs {
            seen[s] = true;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            if targets[u] {
                let mut path = vec![u];
                let mut cur = u;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[u] {
                if !seen[w] && ok(w) {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Vertices reachable from `sources` without entering `blocked`.
    pub fn reachable_avoiding(&self, sources: &[Vertex], blocked: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut stack: Vec<Vertex> = Vec::new();
        for &s in sources {
            if !blocked[s] && !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !blocked[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected (and nonempty).
    pub fn is_connected_set(&self, set: &[Vertex]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let blocked: Vec<bool> = inside.iter().map(|b| !b).collect();
        let seen = self.reachable_avoiding(&[start], &blocked);
        set.iter().all(|&v| seen[v])
    }
}

/// Builds a membership mask over `0..n`.
pub fn mask_of(n: usize, set: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// A graph together with terminal sets `X` and `Y`.
///
/// `X` and `Y` may intersect; a vertex of `X ∩ Y` is an `X`-`Y` path of
/// length zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    pub graph: Graph,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
}

impl ProblemInstance {
    pub fn new(graph: Graph, mut x: Vec<Vertex>, mut y: Vec<Vertex>) -> Result<Self> {
        x.sort_unstable();
        x.dedup();
        y.sort_unstable();
        y.dedup();
        for &v in x.iter().chain(&y) {
            graph.check_vertex(v)?;
        }
        Ok(ProblemInstance { graph, x, y })
    }

    pub fn x_mask(&self) -> Vec<bool> {
        mask_of(self.graph.n(), &self.x)
    }

    pub fn y_mask(&self) -> Vec<bool> {
        mask_of(self.graph.n(), &self.y)
    }

    /// Whether `seq` is an `X`-`Y` path in the instance graph.
    pub fn is_xy_path(&self, seq: &[Vertex]) -> bool {
        self.graph.is_path(seq)
            && self.x.binary_search(&seq[0]).is_ok()
            && self.y.binary_search(seq.last().unwrap()).is_ok()
    }
}

/// An ordered list of vertex sequences, intended to be pairwise disjoint paths.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathCollection {
    pub paths: Vec<Vec<Vertex>>,
}

impl PathCollection {
    pub fn new(paths: Vec<Vec<Vertex>>) -> Self {
        PathCollection { paths }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Total number of edges over all paths.
    pub fn total_length(&self) -> usize {
        self.paths.iter().map(|p| p.len().saturating_sub(1)).sum()
    }

    /// `V(𝒫)` in increasing order.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.paths.iter().flatten().copied().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// `E(𝒫)` as a set of normalized edges.
    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| edge(w[0], w[1])))
            .collect()
    }

    /// Index of the path containing each vertex.
    pub fn owner_map(&self, n: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; n];
        for (i, p) in self.paths.iter().enumerate() {
            for &v in p {
                owner[v] = Some(i);
            }
        }
        owner
    }

    /// Checks that every member is a path of `g` and that they are pairwise
    /// vertex-disjoint.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut owner: Vec<Option<usize>> = vec![None; g.n()];
        for (i, p) in self.paths.iter().enumerate() {
            if !g.is_path(p) {
                return Err(Error::input(format!("sequence {i} is not a path: {p:?}")));
            }
            for &v in p {
                if let Some(j) = owner[v].replace(i) {
                    return Err(Error::input(format!(
                        "paths {j} and {i} share vertex {}",
                        g.name(v)
                    )));
                }
            }
        }
        Ok(())
    }

    /// [`PathCollection::validate`] plus the `X`-`Y` endpoint conditions.
    pub fn validate_for(&self, inst: &ProblemInstance) -> Result<()> {
        self.validate(&inst.graph)?;
        for (i, p) in self.paths.iter().enumerate() {
            if !inst.is_xy_path(p) {
                return Err(Error::input(format!("path {i} is not an X-Y path: {p:?}")));
            }
        }
        Ok(())
    }
}

/// Whether two vertex sets are disjoint with no edge of `g` between them.
pub fn are_nonadjacent(g: &Graph, a: &[Vertex], b: &[Vertex]) -> bool {
    let mut in_a = vec![false; g.n()];
    for &v in a {
        in_a[v] = true;
    }
    b.iter()
        .all(|&v| !in_a[v] && g.neighbors(v).iter().all(|&w| !in_a[w]))
}

/// Whether every pair of paths in `paths` is non-adjacent in `g`.
pub fn pairwise_nonadjacent(g: &Graph, paths: &[Vec<Vertex>]) -> bool {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, p) in paths.iter().enumerate() {
        for &v in p {
            if owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
    }
    paths.iter().enumerate().all(|(i, p)| {
        p.iter().all(|&v| {
            g.neighbors(v)
                .iter()
                .all(|&w| owner[w] == usize::MAX || owner[w] == i)
        })
    })
}

/// The subgraph induced by `set`, with vertices renumbered in increasing
/// order of their original ids. The returned vector maps new ids to old ids.
pub fn induced_subgraph(g: &Graph, set: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
    let mut old: Vec<Vertex> = set.to_vec();
    old.sort_unstable();
    old.dedup();
    for &v in &old {
        g.check_vertex(v)?;
    }
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in old.iter().enumerate() {
        new_id[v] = i;
    }
    let mut h = Graph::new(old.len());
    for (i, &v) in old.iter().enumerate() {
        h.adj[i] = g.adj[v]
            .iter()
            .filter(|&&w| new_id[w] != usize::MAX)
            .map(|&w| new_id[w])
            .collect();
        if let Some(l) = g.label(v) {
            h.set_label(i, l);
        }
    }
    Ok((h, old))
}

/// Vertex map of a contraction by a matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMap {
    /// Image of every original vertex.
    pub forward: Vec<Vertex>,
    /// Preimage of every contracted vertex (one or two original vertices).
    pub preimages: Vec<Vec<Vertex>>,
}

impl ContractionMap {
    pub fn image_of(&self, set: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = set.iter().map(|&v| self.forward[v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn preimage_of(&self, set: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = set
            .iter()
            .flat_map(|&v| self.preimages[v].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}

/// Contracts every edge of the matching `m`, dropping loops and parallel
/// edges. A merged pair takes the position of its smaller endpoint in the
/// new numbering.
pub fn contract_matching(g: &Graph, m: &[Edge]) -> Result<(Graph, ContractionMap)> {
    let n = g.n();
    let mut partner = vec![usize::MAX; n];
    for &(u, v) in m {
        if !g.has_edge(u, v) {
            return Err(Error::input(format!("{u}-{v} is not an edge")));
        }
        if partner[u] != usize::MAX || partner[v] != usize::MAX {
            return Err(Error::input(format!(
                "edge {u}-{v} shares an endpoint with another edge; not a matching"
            )));
        }
        partner[u] = v;
        partner[v] = u;
    }
    let mut forward = vec![usize::MAX; n];
    let mut preimages: Vec<Vec<Vertex>> = Vec::new();
    for v in 0..n {
        if forward[v] != usize::MAX {
            continue;
        }
        let id = preimages.len();
        forward[v] = id;
        if partner[v] != usize::MAX {
            forward[partner[v]] = id;
            preimages.push(vec![v, partner[v]]);
        } else {
            preimages.push(vec![v]);
        }
    }
    let mut h = Graph::new(preimages.len());
    for (u, v) in g.edges() {
        let (a, b) = (forward[u], forward[v]);
        if a != b {
            h.add_edge(a, b)?;
        }
    }
    Ok((h, ContractionMap { forward, preimages }))
}

/// `dist_G(e1, e2)`: the least vertex distance between an endpoint of `e1`
/// and an endpoint of `e2`. `None` when no endpoint pair is connected.
pub fn edge_distance(g: &Graph, e1: Edge, e2: Edge) -> Result<Option<usize>> {
    for &(u, v) in &[e1, e2] {
        if !g.has_edge(u, v) {
            return Err(Error::input(format!("{u}-{v} is not an edge")));
        }
    }
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for v in [e1.0, e1.1] {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        if u == e2.0 || u == e2.1 {
            return Ok(Some(dist[u]));
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(None)
}

/// Whether `e1` and `e2` are within distance one, i.e. may not share a class
/// of an induced matching. Cheaper than [`edge_distance`].
pub fn edges_close(g: &Graph, e1: Edge, e2: Edge) -> bool {
    let (a, b) = e1;
    let (c, d) = e2;
    a == c
        || a == d
        || b == c
        || b == d
        || g.has_edge(a, c)
        || g.has_edge(a, d)
        || g.has_edge(b, c)
        || g.has_edge(b, d)
}

/// Min-degree elimination order and the degeneracy it certifies.
///
/// Ties are broken by the smallest vertex id.
pub fn degeneracy_order(g: &Graph) -> (Vec<Vertex>, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    while let Some((dv, v)) = queue.pop_first() {
        d = d.max(dv);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    (order, d)
}

/// Greedy proper colouring visiting vertices in `order`; each vertex takes
/// the least colour unused by its already-coloured neighbors.
pub fn greedy_colouring(g: &Graph, order: &[Vertex]) -> Vec<usize> {
    let mut colour = vec![usize::MAX; g.n()];
    let mut used: Vec<bool> = Vec::new();
    for &v in order {
        used.clear();
        used.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            if colour[w] < used.len() {
                used[colour[w]] = true;
            }
        }
        colour[v] = used.iter().position(|&u| !u).unwrap();
    }
    colour
}

/// Colours `g` greedily along the reverse of its degeneracy order, which uses
/// at most `degeneracy + 1` colours. Returns the colours and the degeneracy.
pub fn degeneracy_colouring(g: &Graph) -> (Vec<usize>, usize) {
    let (mut order, d) = degeneracy_order(g);
    order.reverse();
    (greedy_colouring(g, &order), d)
}

/// Turns a walk into an induced path between its first and last vertex whose
/// vertices all lie on the walk.
///
/// Repeated vertices are dropped by first occurrence; the result is the
/// shortest path inside the subgraph induced by the walk's vertex set.
pub fn shortcut_to_induced_path(g: &Graph, walk: &[Vertex]) -> Result<Vec<Vertex>> {
    let (&first, &last) = match (walk.first(), walk.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(Error::input("empty walk")),
    };
    for &v in walk {
        g.check_vertex(v)?;
    }
    for w in walk.windows(2) {
        if w[0] != w[1] && !g.has_edge(w[0], w[1]) {
            return Err(Error::input(format!(
                "walk is not connected: {}-{} is not an edge",
                w[0], w[1]
            )));
        }
    }
    let allowed = mask_of(g.n(), walk);
    let mut target = vec![false; g.n()];
    target[last] = true;
    g.shortest_path_within(&[first], &target, Some(&allowed))
        .ok_or_else(|| Error::invariant("walk vertex set does not connect its ends"))
}
