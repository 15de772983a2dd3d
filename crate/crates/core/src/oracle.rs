//! Exhaustive ground truth for small instances: maximum numbers of
//! non-adjacent and of disjoint `X`-`Y` paths, minimum separators, and the
//! support-minimality condition of path systems.
//!
//! Nothing here uses flows. Paths are enumerated directly and packed by
//! branch and bound, so these routines can check the flow-based ones.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, ProblemInstance, Vertex};
use crate::pathsys::{PathSystem, PATHS};

type Bits = u128;

/// Limits checked before and during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// At most 128.
    pub max_vertices: usize,
    pub max_paths: usize,
    /// Deterministic stand-in for a time cap: search-tree nodes visited.
    pub max_search_nodes: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 128,
            max_paths: 1_000_000,
            max_search_nodes: 200_000_000,
        }
    }
}

impl OracleBudget {
    fn check(&self, n: usize) -> Result<()> {
        if self.max_vertices == 0 || self.max_paths == 0 || self.max_search_nodes == 0 {
            return Err(Error::input("oracle budget limits must be positive"));
        }
        if n > self.max_vertices.min(128) {
            return Err(Error::budget(format!(
                "{n} vertices exceed the oracle limit of {}",
                self.max_vertices.min(128)
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPacking {
    pub count: usize,
    pub witness: Vec<Vec<Vertex>>,
}

struct Enumerated {
    paths: Vec<Vec<Vertex>>,
    verts: Vec<Bits>,
    closed: Vec<Bits>,
}

fn adjacency(g: &Graph) -> Vec<Bits> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect()
}

fn bits_of(set: &[Vertex]) -> Bits {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

/// Induced paths from `X` to `Y` meeting `X ∪ Y` only at their ends and
/// avoiding `blocked`. A vertex of `X ∩ Y` yields only its length-zero path.
fn induced_xy_paths(
    g: &Graph,
    x: &[Vertex],
    y: &[Vertex],
    blocked: Bits,
    budget: &OracleBudget,
) -> Result<Enumerated> {
    let adj = adjacency(g);
    let (xb, yb) = (bits_of(x), bits_of(y));
    let mut out = Enumerated {
        paths: Vec::new(),
        verts: Vec::new(),
        closed: Vec::new(),
    };
    let push = |p: &[Vertex], out: &mut Enumerated| -> Result<()> {
        if out.paths.len() >= budget.max_paths {
            return Err(Error::budget(format!("more than {} induced paths", budget.max_paths)));
        }
        let vb = bits_of(p);
        let closed = p.iter().fold(vb, |m, &v| m | adj[v]);
        out.paths.push(p.to_vec());
        out.verts.push(vb);
        out.closed.push(closed);
        Ok(())
    };
    for &s in x {
        if blocked >> s & 1 == 1 {
            continue;
        }
        if yb >> s & 1 == 1 {
            push(&[s], &mut out)?;
            continue;
        }
        let mut path = vec![s];
        extend(&adj, xb | blocked, yb, &mut path, 1 << s, 0, &mut |p| push(p, &mut out))?;
    }
    Ok(out)
}

/// Extends `path` by every vertex adjacent to its last vertex only, recording
/// the path whenever it reaches `Y`.
fn extend(
    adj: &[Bits],
    avoid: Bits,
    yb: Bits,
    path: &mut Vec<Vertex>,
    on_path: Bits,
    near_prefix: Bits,
    record: &mut dyn FnMut(&[Vertex]) -> Result<()>,
) -> Result<()> {
    let last = *path.last().unwrap();
    let mut cands = adj[last] & !avoid & !on_path & !near_prefix;
    while cands != 0 {
        let w = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        path.push(w);
        if yb >> w & 1 == 1 {
            record(path)?;
        } else {
            extend(adj, avoid, yb, path, on_path | 1 << w, near_prefix | adj[last], record)?;
        }
        path.pop();
    }
    Ok(())
}

struct Packer<'a> {
    e: &'a Enumerated,
    /// Per path, the set another chosen path must avoid.
    conflict: &'a [Bits],
    starts: Vec<Vertex>,
    ends: Vec<Vertex>,
    best: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl Packer<'_> {
    fn run(&mut self, from: usize, used: Bits, chosen: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::budget(format!("oracle search exceeded {} nodes", self.limit)));
        }
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        let cands: Vec<usize> = (from..self.e.paths.len())
            .filter(|&j| self.e.verts[j] & used == 0)
            .collect();
        let distinct = |v: &[Vertex]| {
            let mut b: Bits = 0;
            for &j in &cands {
                b |= 1 << v[j];
            }
            b.count_ones() as usize
        };
        let bound = distinct(&self.starts).min(distinct(&self.ends));
        if chosen.len() + bound <= self.best.len() {
            return Ok(());
        }
        for (pos, &j) in cands.iter().enumerate() {
            let remaining = cands.len() - pos;
            if chosen.len() + remaining.min(bound) <= self.best.len() {
                break;
            }
            chosen.push(j);
            self.run(j + 1, used | self.conflict[j], chosen)?;
            chosen.pop();
        }
        Ok(())
    }
}

fn pack(e: &Enumerated, nonadjacent: bool, budget: &OracleBudget) -> Result<PathPacking> {
    let conflict: Vec<Bits> = if nonadjacent { e.closed.clone() } else { e.verts.clone() };
    let mut packer = Packer {
        e,
        conflict: &conflict,
        starts: e.paths.iter().map(|p| p[0]).collect(),
        ends: e.paths.iter().map(|p| *p.last().unwrap()).collect(),
        best: Vec::new(),
        nodes: 0,
        limit: budget.max_search_nodes,
    };
    packer.run(0, 0, &mut Vec::new())?;
    Ok(PathPacking {
        count: packer.best.len(),
        witness: packer.best.iter().map(|&j| e.paths[j].clone()).collect(),
    })
}

/// Largest number of pairwise non-adjacent `X`-`Y` paths, with a witness.
pub fn max_nonadjacent_paths(inst: &ProblemInstance, budget: &OracleBudget) -> Result<PathPacking> {
    budget.check(inst.graph.n())?;
    let e = induced_xy_paths(&inst.graph, &inst.x, &inst.y, 0, budget)?;
    pack(&e, true, budget)
}

/// Largest number of pairwise disjoint `X`-`Y` paths, by exhaustive packing.
pub fn max_disjoint_paths_bruteforce(inst: &ProblemInstance, budget: &OracleBudget) -> Result<usize> {
    budget.check(inst.graph.n())?;
    let e = induced_xy_paths(&inst.graph, &inst.x, &inst.y, 0, budget)?;
    Ok(pack(&e, false, budget)?.count)
}

/// A smallest vertex set meeting every `X`-`Y` path, by trying all subsets
/// in increasing size (lexicographically within a size).
pub fn min_separator_bruteforce(inst: &ProblemInstance, budget: &OracleBudget) -> Result<Vec<Vertex>> {
    let g = &inst.graph;
    let n = g.n();
    budget.check(n)?;
    let adj = adjacency(g);
    let (xb, yb) = (bits_of(&inst.x), bits_of(&inst.y));
    let separated = |sep: Bits| {
        let mut seen = xb & !sep;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & !sep & !seen;
            seen |= new;
            frontier |= new;
        }
        seen & yb == 0
    };
    let mut nodes = 0u64;
    for size in 0..=n {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            nodes += 1;
            if nodes > budget.max_search_nodes {
                return Err(Error::budget(format!("separator search exceeded {} subsets", budget.max_search_nodes)));
            }
            let sep = bits_of(&comb);
            if separated(sep) {
                return Ok(comb);
            }
            // next combination
            let Some(i) = (0..size).rev().find(|&i| comb[i] < n - size + i) else { break };
            comb[i] += 1;
            for j in i + 1..size {
                comb[j] = comb[j - 1] + 1;
            }
        }
    }
    unreachable!("the whole vertex set separates")
}

/// Whether five disjoint `A`-`B` paths fit on a proper subset of the
/// system's vertices, checked by excluding each vertex outside `A ∪ B` in
/// turn and packing paths exhaustively.
pub fn has_smaller_support_collection(ps: &PathSystem, budget: &OracleBudget) -> Result<bool> {
    let g = &ps.h;
    budget.check(g.n())?;
    let ab = bits_of(&ps.a) | bits_of(&ps.b);
    for v in 0..g.n() {
        if ab >> v & 1 == 1 {
            continue;
        }
        let e = induced_xy_paths(g, &ps.a, &ps.b, 1 << v, budget)?;
        if pack(&e, false, budget)?.count >= PATHS {
            return Ok(true);
        }
    }
    Ok(false)
}
