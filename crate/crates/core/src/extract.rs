//! Extraction of pairwise non-adjacent `X`-`Y` paths from large collections
//! of disjoint ones.
//!
//! [`extract_nonadjacent`] handles one induced-matching class per level:
//! delete the edges of the other classes, contract the chosen class, find
//! half as many disjoint paths in the contracted graph and lift them back.
//! After all classes are consumed no outside edge is left between the lifted
//! paths, so any `k` of them are pairwise non-adjacent.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::colouring::{one_outside_edge_violation, outside_edges, partition_outside_edges, InducedMatchingPartition};
use crate::disjoint::{max_disjoint_count, min_total_length_disjoint_paths, trim_to_xy_segment};
use crate::error::{Error, Result};
use crate::graph::{
    contract_matching, induced_subgraph, mask_of, pairwise_nonadjacent, Edge, Graph, PathCollection, ProblemInstance,
    Vertex,
};
use crate::mis::{greedy_independent_set, maximum_independent_set};

/// What happened at one level of the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelRecord {
    /// Index of the consumed class in the partition as given.
    pub class_index: usize,
    pub class_size: usize,
    pub contracted_vertices: usize,
    pub contracted_edges: usize,
    /// Maximum number of disjoint paths in the contracted graph.
    pub flow_value: usize,
    /// Number of paths the level has to deliver, `2^(m-i-1)·k`.
    pub required: usize,
    pub lifted: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtractionTrace {
    pub levels: Vec<LevelRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub paths: PathCollection,
    pub trace: ExtractionTrace,
}

/// Working state of one level, in local vertex ids.
struct Level {
    g: Graph,
    /// Local id to id in the caller's graph.
    orig: Vec<Vertex>,
    in_x: Vec<bool>,
    in_y: Vec<bool>,
    paths: Vec<Vec<Vertex>>,
    classes: Vec<Vec<Edge>>,
}

impl Level {
    /// Restricts the level graph to the vertices of `paths` (local ids),
    /// keeping only class edges that survive.
    fn restrict(&self, paths: Vec<Vec<Vertex>>, classes: &[Vec<Edge>]) -> Level {
        let keep: Vec<Vertex> = PathCollection::new(paths.clone()).vertices();
        let (g, map) = induced_subgraph(&self.g, &keep).expect("path vertices are in range");
        let mut new_id = vec![usize::MAX; self.g.n()];
        for (i, &v) in map.iter().enumerate() {
            new_id[v] = i;
        }
        let relabel = |p: &Vec<Vertex>| p.iter().map(|&v| new_id[v]).collect::<Vec<_>>();
        let classes = classes
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
                    .map(|&(u, v)| crate::graph::edge(new_id[u], new_id[v]))
                    .collect()
            })
            .collect();
        Level {
            orig: map.iter().map(|&v| self.orig[v]).collect(),
            in_x: map.iter().map(|&v| self.in_x[v]).collect(),
            in_y: map.iter().map(|&v| self.in_y[v]).collect(),
            paths: paths.iter().map(relabel).collect(),
            classes,
            g,
        }
    }

    fn x(&self) -> Vec<Vertex> {
        (0..self.g.n()).filter(|&v| self.in_x[v]).collect()
    }

    fn y(&self) -> Vec<Vertex> {
        (0..self.g.n()).filter(|&v| self.in_y[v]).collect()
    }

    /// The classes must partition exactly the outside edges of the paths.
    fn check_partition(&self) -> core::result::Result<(), String> {
        let pc = PathCollection::new(self.paths.clone());
        let mut outside = outside_edges(&self.g, &pc);
        let mut covered: Vec<Edge> = self.classes.iter().flatten().copied().collect();
        outside.sort_unstable();
        covered.sort_unstable();
        if outside == covered {
            Ok(())
        } else {
            Err(format!(
                "remaining classes do not partition the outside edges: outside {outside:?}, classes {covered:?}"
            ))
        }
    }
}

fn shortfall(trace: &ExtractionTrace, msg: String) -> Error {
    Error::Invariant(format!("{msg}; trace: {trace:?}"))
}

/// Finds `k` pairwise non-adjacent `X`-`Y` paths from `2^m·k` disjoint ones,
/// where `mp` partitions the outside edges `E(G[V(𝒫)]) ∖ E(𝒫)` into `m`
/// induced matchings of `G`.
///
/// Classes are consumed in the given order. Each input path is first cut
/// down to its segment meeting `X ∪ Y` only at the ends; lifts are shortest
/// paths inside the preimage, so the property persists at every level. The
/// recursion continues in the full level graph (class edges included) on the
/// lifted paths.
pub fn extract_nonadjacent(
    inst: &ProblemInstance,
    pc: &PathCollection,
    mp: &InducedMatchingPartition,
    k: usize,
) -> Result<Extraction> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let g = &inst.graph;
    pc.validate_for(inst)?;
    let m = mp.class_count();
    let needed = 1usize
        .checked_shl(m as u32)
        .and_then(|p| p.checked_mul(k))
        .ok_or_else(|| Error::input("2^m·k overflows"))?;
    if pc.len() < needed {
        return Err(Error::input(format!(
            "need at least 2^{m}·{k} = {needed} disjoint paths, got {}",
            pc.len()
        )));
    }
    let designated = outside_edges(g, pc).into_iter().collect();
    mp.validate(g, &designated)?;

    let n = g.n();
    let root = Level {
        g: g.clone(),
        orig: (0..n).collect(),
        in_x: inst.x_mask(),
        in_y: inst.y_mask(),
        paths: Vec::new(),
        classes: Vec::new(),
    };
    let trimmed: Vec<Vec<Vertex>> = pc
        .paths
        .iter()
        .map(|p| trim_to_xy_segment(p, &root.in_x, &root.in_y))
        .take(needed)
        .collect();
    let mut level = root.restrict(trimmed, &mp.classes);
    let mut trace = ExtractionTrace::default();
    level.check_partition().map_err(|e| shortfall(&trace, e))?;

    for depth in 0..m {
        let required = needed >> (depth + 1);
        let chosen = level.classes[0].clone();
        let rest: Vec<Vec<Edge>> = level.classes[1..].to_vec();

        let mut g1 = level.g.clone();
        for &(u, v) in rest.iter().flatten() {
            g1.remove_edge(u, v);
        }
        let (g2, cmap) = contract_matching(&g1, &chosen)?;
        let contracted = ProblemInstance::new(g2, cmap.image_of(&level.x()), cmap.image_of(&level.y()))?;
        let flow_value = max_disjoint_count(&contracted.graph, &contracted.x, &contracted.y, None);
        let mut record = LevelRecord {
            class_index: depth,
            class_size: chosen.len(),
            contracted_vertices: contracted.graph.n(),
            contracted_edges: contracted.graph.edge_count(),
            flow_value,
            required,
            lifted: 0,
        };
        if flow_value < required {
            trace.levels.push(record);
            return Err(shortfall(
                &trace,
                format!("contracted graph has only {flow_value} disjoint paths, {required} required"),
            ));
        }
        let images = min_total_length_disjoint_paths(&contracted, required)?;

        let mut lifts = Vec::with_capacity(images.len());
        for image in &images.paths {
            let pre = cmap.preimage_of(image);
            let allowed = mask_of(g1.n(), &pre);
            let sources: Vec<Vertex> = pre.iter().copied().filter(|&v| level.in_x[v]).collect();
            let lift = g1
                .shortest_path_within(&sources, &level.in_y, Some(&allowed))
                .ok_or_else(|| shortfall(&trace, format!("no lift inside preimage {pre:?}")))?;
            if !g1.is_induced_path(&lift) {
                return Err(shortfall(&trace, format!("lift {lift:?} is not induced")));
            }
            lifts.push(lift);
        }
        record.lifted = lifts.len();
        trace.levels.push(record);

        level = level.restrict(lifts, &rest);
        level.check_partition().map_err(|e| shortfall(&trace, e))?;
    }

    let chosen: Vec<Vec<Vertex>> = level.paths.iter().take(k).cloned().collect();
    if chosen.len() < k {
        return Err(shortfall(&trace, format!("only {} paths left", chosen.len())));
    }
    let out: Vec<Vec<Vertex>> = chosen
        .iter()
        .map(|p| p.iter().map(|&v| level.orig[v]).collect())
        .collect();
    if !pairwise_nonadjacent(g, &out) {
        return Err(shortfall(&trace, format!("output paths are adjacent: {out:?}")));
    }
    for p in &out {
        if !inst.is_xy_path(p) || !g.is_induced_path(p) {
            return Err(shortfall(&trace, format!("output {p:?} is not an induced X-Y path")));
        }
    }
    Ok(Extraction {
        paths: PathCollection::new(out),
        trace,
    })
}

/// Result of [`extract_subcubic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcubicExtraction {
    pub extraction: Extraction,
    pub partition: InducedMatchingPartition,
}

/// `k` non-adjacent paths from at least `16k` disjoint ones when every path
/// vertex meets at most one edge off the paths.
///
/// The outside edges are split into at most four induced matchings via the
/// conflict graph (padded with empty classes to exactly four) and handed to
/// [`extract_nonadjacent`].
pub fn extract_subcubic(inst: &ProblemInstance, pc: &PathCollection, k: usize) -> Result<SubcubicExtraction> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    if pc.len() < 16 * k {
        return Err(Error::input(format!("need at least {} disjoint paths, got {}", 16 * k, pc.len())));
    }
    pc.validate_for(inst)?;
    if let Some(v) = one_outside_edge_violation(&inst.graph, pc) {
        return Err(Error::input(format!(
            "vertex {} is incident to more than one edge off the paths",
            inst.graph.name(v)
        )));
    }
    let partition = partition_outside_edges(&inst.graph, pc)?;
    let mut padded = partition.clone();
    while padded.classes.len() < 4 {
        padded.classes.push(Vec::new());
    }
    let extraction = extract_nonadjacent(inst, pc, &padded, k)?;
    Ok(SubcubicExtraction { extraction, partition })
}

/// One vertex per path; adjacent iff the paths intersect or an edge joins them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathConflictGraph {
    pub graph: Graph,
    pub backmap: Vec<usize>,
}

pub fn path_conflict_graph(g: &Graph, pc: &PathCollection) -> PathConflictGraph {
    let k = pc.len();
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, p) in pc.paths.iter().enumerate() {
        for &v in p {
            owners[v].push(i);
        }
    }
    let mut h = Graph::new(k);
    for (i, p) in pc.paths.iter().enumerate() {
        for &v in p {
            let touching = owners[v]
                .iter()
                .chain(g.neighbors(v).iter().flat_map(|&w| owners[w].iter()));
            for &j in touching {
                if j != i {
                    h.add_edge(i, j).expect("path indices are in range");
                }
            }
        }
    }
    PathConflictGraph {
        graph: h,
        backmap: (0..k).collect(),
    }
}

/// Largest path conflict graph solved exactly by [`select_nonadjacent_minorfree`].
pub const MINORFREE_EXACT_LIMIT: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorFreeSelection {
    pub paths: PathCollection,
    /// Whether the exact independent-set solver ran (and the bound was checked).
    pub exact: bool,
    /// `⌈k / (2(h-1))⌉`.
    pub bound: usize,
}

/// Selects pairwise non-adjacent paths out of disjoint ones by a maximum
/// independent set of the path conflict graph.
///
/// For a `K_h`-minor-free host at least `⌈k/(2(h-1))⌉` paths survive; this is
/// asserted when the conflict graph is small enough to be solved exactly.
/// Larger inputs fall back to a greedy minimum-degree choice and report
/// `exact = false`. Minor-freeness itself is the caller's promise.
pub fn select_nonadjacent_minorfree(g: &Graph, pc: &PathCollection, h: usize) -> Result<MinorFreeSelection> {
    if h < 2 {
        return Err(Error::input("h must be at least 2"));
    }
    pc.validate(g)?;
    let k = pc.len();
    let bound = k.div_ceil(2 * (h - 1));
    let cg = path_conflict_graph(g, pc);
    let (set, exact) = if k <= MINORFREE_EXACT_LIMIT {
        (maximum_independent_set(&cg.graph).expect("within solver limit"), true)
    } else {
        (greedy_independent_set(&cg.graph), false)
    };
    if exact && set.len() < bound {
        return Err(Error::invariant(format!(
            "independence number {} of the path conflict graph is below {bound}",
            set.len()
        )));
    }
    let paths = set.iter().map(|&i| pc.paths[cg.backmap[i]].clone()).collect();
    Ok(MinorFreeSelection {
        paths: PathCollection::new(paths),
        exact,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::greedy_partition;
    use crate::graph::edge;

    fn parallel_paths(count: usize, len: usize) -> (Graph, Vec<Vec<Vertex>>) {
        let mut g = Graph::new(count * len);
        let mut paths = Vec::new();
        for p in 0..count {
            let vs: Vec<Vertex> = (0..len).map(|i| p * len + i).collect();
            for w in vs.windows(2) {
                g.add_edge(w[0], w[1]).unwrap();
            }
            paths.push(vs);
        }
        (g, paths)
    }

    fn instance(g: Graph, paths: &[Vec<Vertex>]) -> ProblemInstance {
        let x = paths.iter().map(|p| p[0]).collect();
        let y = paths.iter().map(|p| *p.last().unwrap()).collect();
        ProblemInstance::new(g, x, y).unwrap()
    }

    #[test]
    fn base_case_returns_paths_unchanged() {
        let (g, paths) = parallel_paths(3, 4);
        let inst = instance(g, &paths);
        let pc = PathCollection::new(paths.clone());
        let mp = InducedMatchingPartition { classes: vec![] };
        let out = extract_nonadjacent(&inst, &pc, &mp, 3).unwrap();
        assert_eq!(out.paths.paths, paths);
        assert!(out.trace.levels.is_empty());
    }

    #[test]
    fn one_class_halves_the_collection() {
        // Four parallel paths of length 3, rungs between paths 0-1 and 2-3.
        let (mut g, paths) = parallel_paths(4, 4);
        g.add_edge(1, 5).unwrap();
        g.add_edge(10, 14).unwrap();
        let inst = instance(g.clone(), &paths);
        let pc = PathCollection::new(paths);
        let mp = greedy_partition(&g, &outside_edges(&g, &pc));
        assert_eq!(mp.class_count(), 1);
        let out = extract_nonadjacent(&inst, &pc, &mp, 2).unwrap();
        assert_eq!(out.paths.len(), 2);
        assert!(pairwise_nonadjacent(&g, &out.paths.paths));
        assert_eq!(out.trace.levels.len(), 1);
        assert!(out.trace.levels[0].flow_value >= 2);
    }

    #[test]
    fn rejects_too_few_paths_and_bad_partitions() {
        let (mut g, paths) = parallel_paths(2, 3);
        g.add_edge(1, 4).unwrap();
        let inst = instance(g.clone(), &paths);
        let pc = PathCollection::new(paths);
        let one = InducedMatchingPartition { classes: vec![vec![(1, 4)]] };
        assert!(extract_nonadjacent(&inst, &pc, &one, 2).is_err());
        let wrong = InducedMatchingPartition { classes: vec![vec![]] };
        assert!(extract_nonadjacent(&inst, &pc, &wrong, 1).is_err());
        assert!(extract_nonadjacent(&inst, &pc, &one, 1).is_ok());
    }

    #[test]
    fn subcubic_without_outside_edges() {
        let (g, paths) = parallel_paths(16, 3);
        let inst = instance(g, &paths);
        let pc = PathCollection::new(paths);
        let out = extract_subcubic(&inst, &pc, 1).unwrap();
        assert_eq!(out.extraction.paths.len(), 1);
        assert_eq!(out.partition.class_count(), 0);
    }

    #[test]
    fn path_conflict_graph_examples() {
        let (g, paths) = parallel_paths(3, 2);
        let pc = PathCollection::new(paths.clone());
        assert_eq!(path_conflict_graph(&g, &pc).graph.edge_count(), 0);
        let sel = select_nonadjacent_minorfree(&g, &pc, 5).unwrap();
        assert_eq!(sel.paths.len(), 3);

        let mut g2 = g.clone();
        g2.add_edge(1, 2).unwrap();
        let two = PathCollection::new(paths[..2].to_vec());
        let cg = path_conflict_graph(&g2, &two);
        assert_eq!(cg.graph.edges(), vec![(0, 1)]);
    }

    #[test]
    fn minorfree_on_five_cycle_conflicts() {
        // Five single-vertex paths arranged in a 5-cycle.
        let g = Graph::from_edges(5, (0..5).map(|i| edge(i, (i + 1) % 5))).unwrap();
        let pc = PathCollection::new((0..5).map(|i| vec![i]).collect());
        let sel = select_nonadjacent_minorfree(&g, &pc, 5).unwrap();
        assert_eq!(sel.paths.len(), 2);
        assert!(sel.exact);
        assert_eq!(sel.bound, 1);
        assert!(select_nonadjacent_minorfree(&g, &pc, 1).is_err());
    }
}
