//! Strong edge colourings and partitions of outside edges into induced
//! matchings.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, edges_close, greedy_colouring, Edge, Graph, PathCollection, Vertex};

/// A partition of a designated edge set into induced matchings of `host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMatchingPartition {
    pub classes: Vec<Vec<Edge>>,
}

impl InducedMatchingPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Checks that the classes are disjoint, cover exactly `edges`, and that
    /// every class is an induced matching of `host`.
    pub fn validate(&self, host: &Graph, edges: &BTreeSet<Edge>) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (ci, class) in self.classes.iter().enumerate() {
            for &e in class {
                if !edges.contains(&e) {
                    return Err(Error::input(format!("class {ci} contains {e:?}, not a designated edge")));
                }
                if !seen.insert(e) {
                    return Err(Error::input(format!("edge {e:?} appears in two classes")));
                }
            }
            if let Some((a, b)) = first_close_pair(host, class) {
                return Err(Error::input(format!(
                    "class {ci} is not an induced matching: {a:?} and {b:?} are within distance 1"
                )));
            }
        }
        if seen.len() != edges.len() {
            return Err(Error::input("classes do not cover every designated edge"));
        }
        Ok(())
    }
}

fn first_close_pair(host: &Graph, class: &[Edge]) -> Option<(Edge, Edge)> {
    for (i, &a) in class.iter().enumerate() {
        for &b in &class[i + 1..] {
            if edges_close(host, a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Whether `class` is an induced matching of `host` (all pairs at distance ≥ 2).
pub fn is_induced_matching(host: &Graph, class: &[Edge]) -> bool {
    first_close_pair(host, class).is_none()
}

/// Greedily partitions `edges` (in the given order) into induced matchings
/// of `host`: each edge joins the first class that stays induced.
pub fn greedy_partition(host: &Graph, edges: &[Edge]) -> InducedMatchingPartition {
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    for &e in edges {
        match classes
            .iter_mut()
            .find(|c| c.iter().all(|&f| !edges_close(host, e, f)))
        {
            Some(c) => c.push(e),
            None => classes.push(vec![e]),
        }
    }
    InducedMatchingPartition { classes }
}

/// Strong edge colouring of the whole graph, edges in lexicographic order.
/// Uses at most `2Δ(Δ-1)+1` classes.
pub fn greedy_strong_colouring(g: &Graph) -> InducedMatchingPartition {
    greedy_partition(g, &g.edges())
}

/// `2Δ(Δ-1)+1`.
pub fn greedy_bound(max_degree: usize) -> usize {
    2 * max_degree * max_degree.saturating_sub(1) + 1
}

/// `E(G[V(𝒫)]) ∖ E(𝒫)` in lexicographic order.
pub fn outside_edges(g: &Graph, pc: &PathCollection) -> Vec<Edge> {
    let on_path = crate::graph::mask_of(g.n(), &pc.vertices());
    let path_edges = pc.edge_set();
    g.edges()
        .into_iter()
        .filter(|&(u, v)| on_path[u] && on_path[v] && !path_edges.contains(&(u, v)))
        .collect()
}

/// Checks that every vertex of `V(𝒫)` meets at most one edge of `E(G) ∖ E(𝒫)`.
/// Returns the first offending vertex otherwise.
pub fn one_outside_edge_violation(g: &Graph, pc: &PathCollection) -> Option<Vertex> {
    let path_edges = pc.edge_set();
    pc.vertices().into_iter().find(|&v| {
        g.neighbors(v)
            .iter()
            .filter(|&&w| !path_edges.contains(&crate::graph::edge(v, w)))
            .count()
            > 1
    })
}

/// Auxiliary graph on the outside edges: two are adjacent iff they are at
/// distance exactly one in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    pub graph: Graph,
    pub backmap: Vec<Edge>,
}

/// Builds the conflict graph of the outside edges of `pc`.
///
/// Requires every vertex of `V(𝒫)` to meet at most one outside edge; the
/// result then has maximum degree at most four, which is asserted.
pub fn conflict_graph(g: &Graph, pc: &PathCollection) -> Result<ConflictGraph> {
    let f = outside_edges(g, pc);
    let mut incident = vec![usize::MAX; g.n()];
    for (i, &(u, v)) in f.iter().enumerate() {
        for w in [u, v] {
            if incident[w] != usize::MAX {
                return Err(Error::input(format!(
                    "vertex {} is incident to more than one outside edge",
                    g.name(w)
                )));
            }
            incident[w] = i;
        }
    }
    let mut h = Graph::new(f.len());
    // Outside edges are disjoint, so distance one means some path edge joins
    // an end of one to an end of the other.
    for p in &pc.paths {
        for w in p.windows(2) {
            let (a, b) = (incident[w[0]], incident[w[1]]);
            if a != usize::MAX && b != usize::MAX && a != b {
                h.add_edge(a, b)?;
            }
        }
    }
    // Any non-path edge between the ends of two outside edges would give one
    // vertex two outside edges, so path edges witness every distance-one pair.
    if h.max_degree() > 4 {
        return Err(Error::invariant(format!(
            "conflict graph has maximum degree {} > 4",
            h.max_degree()
        )));
    }
    Ok(ConflictGraph { graph: h, backmap: f })
}

/// Partitions the outside edges of `pc` into at most four induced matchings
/// by colouring the conflict graph greedily along its reversed degeneracy
/// order. The conflict graph is asserted to be 3-degenerate.
pub fn partition_outside_edges(g: &Graph, pc: &PathCollection) -> Result<InducedMatchingPartition> {
    let cg = conflict_graph(g, pc)?;
    let (mut order, d) = degeneracy_order(&cg.graph);
    if d > 3 {
        return Err(Error::invariant(format!("conflict graph is {d}-degenerate, expected at most 3")));
    }
    order.reverse();
    let colour = greedy_colouring(&cg.graph, &order);
    let k = colour.iter().map(|c| c + 1).max().unwrap_or(0);
    let mut classes = vec![Vec::new(); k];
    for (i, &c) in colour.iter().enumerate() {
        classes[c].push(cg.backmap[i]);
    }
    let part = InducedMatchingPartition { classes };
    debug_assert!(part.classes.iter().all(|c| is_induced_matching(g, c)));
    Ok(part)
}

/// Largest vertex count accepted by [`chromatic_number_exact`].
pub const CHROMATIC_MAX_VERTICES: usize = 20;

/// Exact chromatic number by backtracking over colour classes with DSATUR
/// ordering, trying `k = 1, 2, ...`.
pub fn chromatic_number_exact(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_MAX_VERTICES {
        return Err(Error::budget(format!(
            "chromatic number search limited to {CHROMATIC_MAX_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let lower = if g.edge_count() == 0 { 1 } else { 2 };
    let upper = crate::graph::degeneracy_colouring(g).0.iter().max().unwrap() + 1;
    for k in lower..upper {
        let mut colour = vec![usize::MAX; n];
        if colourable(g, k, &mut colour) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn colourable(g: &Graph, k: usize, colour: &mut [usize]) -> bool {
    // Pick the uncoloured vertex with most distinct neighbor colours.
    let mut best: Option<(usize, usize, Vertex)> = None;
    for v in 0..g.n() {
        if colour[v] != usize::MAX {
            continue;
        }
        let mut mask = 0u32;
        for &w in g.neighbors(v) {
            if colour[w] != usize::MAX {
                mask |= 1 << colour[w];
            }
        }
        let key = (mask.count_ones() as usize, g.degree(v), v);
        if best.is_none_or(|b| (key.0, key.1) > (b.0, b.1)) {
            best = Some(key);
        }
    }
    let Some((_, _, v)) = best else {
        return true;
    };
    let used_max = colour.iter().filter(|&&c| c != usize::MAX).max().copied();
    // Symmetry: never open more than one new colour at a time.
    let limit = used_max.map_or(1, |m| (m + 2).min(k));
    for c in 0..limit {
        if g.neighbors(v).iter().all(|&w| colour[w] != c) {
            colour[v] = c;
            if colourable(g, k, colour) {
                return true;
            }
            colour[v] = usize::MAX;
        }
    }
    false
}
