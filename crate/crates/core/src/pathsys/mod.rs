//! Five-path systems `(H, A, B, Q)` and the two gluing moves that build them.
//!
//! A path system is a graph covered by five disjoint `A`-`B` paths where every
//! vertex outside `A` meets exactly one edge off the paths, `A` meets none, and
//! no five disjoint `A`-`B` paths use a proper subset of the vertices. Paths
//! are stored from their `A` end to their `B` end.
//!
//! Path indices are `0..5` in code; the textual form of a move is one-based,
//! `{1,2}` for a pair and `(1 3 4 5)` for a cycle.

mod decompose;
mod normalize;

pub use decompose::decompose;
pub use normalize::{normalize, Provenance};

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::disjoint::max_disjoint_count;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};

pub const PATHS: usize = 5;

/// A gluing move: `Pair(i, j)` with `i < j`, or a cycle stored with its
/// minimum element first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    Pair(u8, u8),
    Cycle(Vec<u8>),
}

impl Move {
    pub fn pair(i: usize, j: usize) -> Result<Move> {
        if i >= PATHS || j >= PATHS || i == j {
            return Err(Error::input(format!("invalid pair {{{i}, {j}}}")));
        }
        Ok(Move::Pair(i.min(j) as u8, i.max(j) as u8))
    }

    pub fn cycle(seq: &[usize]) -> Result<Move> {
        if seq.len() < 2 || seq.len() > PATHS {
            return Err(Error::input(format!("cycle {seq:?} must have length 2 to 5")));
        }
        let mut seen = [false; PATHS];
        for &i in seq {
            if i >= PATHS || seen[i] {
                return Err(Error::input(format!("cycle {seq:?} repeats or exceeds an index")));
            }
            seen[i] = true;
        }
        let start = (0..seq.len()).min_by_key(|&p| seq[p]).unwrap();
        let rotated = (0..seq.len()).map(|p| seq[(start + p) % seq.len()] as u8).collect();
        Ok(Move::Cycle(rotated))
    }

    /// Path indices the move extends, in move order.
    pub fn indices(&self) -> Vec<usize> {
        match self {
            Move::Pair(i, j) => vec![*i as usize, *j as usize],
            Move::Cycle(c) => c.iter().map(|&i| i as usize).collect(),
        }
    }

    /// Number of vertices the move adds.
    pub fn added_vertices(&self) -> usize {
        match self {
            Move::Pair(..) => 2,
            Move::Cycle(c) => 2 * c.len(),
        }
    }

    /// Image under a permutation of the path indices, in canonical form.
    pub fn permuted(&self, sigma: &[u8; PATHS]) -> Move {
        match self {
            Move::Pair(i, j) => Move::pair(sigma[*i as usize] as usize, sigma[*j as usize] as usize).unwrap(),
            Move::Cycle(c) => {
                let img: Vec<usize> = c.iter().map(|&i| sigma[i as usize] as usize).collect();
                Move::cycle(&img).unwrap()
            }
        }
    }

    /// All 94 moves: the 10 pairs, then cycles by length and lexicographically.
    pub fn all() -> Vec<Move> {
        let mut out = Vec::new();
        for i in 0..PATHS {
            for j in i + 1..PATHS {
                out.push(Move::Pair(i as u8, j as u8));
            }
        }
        for len in 2..=PATHS {
            let mut cycles = BTreeSet::new();
            let mut seq = Vec::with_capacity(len);
            arrangements(len, &mut seq, &mut cycles);
            out.extend(cycles);
        }
        out
    }
}

fn arrangements(len: usize, seq: &mut Vec<usize>, out: &mut BTreeSet<Move>) {
    if seq.len() == len {
        out.insert(Move::cycle(seq).unwrap());
        return;
    }
    for i in 0..PATHS {
        if !seq.contains(&i) {
            seq.push(i);
            arrangements(len, seq, out);
            seq.pop();
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Pair(i, j) => write!(f, "{{{},{}}}", i + 1, j + 1),
            Move::Cycle(c) => {
                write!(f, "(")?;
                for (p, i) in c.iter().enumerate() {
                    if p > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", i + 1)?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub h: Graph,
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub q: Vec<Vec<Vertex>>,
}

/// Five isolated vertices, each its own path.
pub fn base_system() -> PathSystem {
    PathSystem {
        h: Graph::new(PATHS),
        a: (0..PATHS).collect(),
        b: (0..PATHS).collect(),
        q: (0..PATHS).map(|v| vec![v]).collect(),
    }
}

impl PathSystem {
    /// Builds a system from its paths; `A` and `B` are read off the path ends.
    pub fn from_paths(h: Graph, q: Vec<Vec<Vertex>>) -> Result<PathSystem> {
        if q.len() != PATHS || q.iter().any(|p| p.is_empty()) {
            return Err(Error::input("a path system needs five nonempty paths"));
        }
        let mut a: Vec<Vertex> = q.iter().map(|p| p[0]).collect();
        let mut b: Vec<Vertex> = q.iter().map(|p| *p.last().unwrap()).collect();
        a.sort_unstable();
        b.sort_unstable();
        Ok(PathSystem { h, a, b, q })
    }

    /// The `B` end of path `i`.
    pub fn b_of(&self, i: usize) -> Vertex {
        *self.q[i].last().unwrap()
    }

    pub fn path_edges(&self) -> BTreeSet<Edge> {
        self.q
            .iter()
            .flat_map(|p| p.windows(2).map(|w| edge(w[0], w[1])))
            .collect()
    }

    /// `E(H) ∖ E(Q)` in lexicographic order.
    pub fn outside_edges(&self) -> Vec<Edge> {
        let on_paths = self.path_edges();
        self.h.edges().into_iter().filter(|e| !on_paths.contains(e)).collect()
    }

    /// Index of the path through each vertex.
    pub fn owner(&self) -> Vec<Option<usize>> {
        let mut owner = vec![None; self.h.n()];
        for (i, p) in self.q.iter().enumerate() {
            for &v in p {
                if v < owner.len() {
                    owner[v] = Some(i);
                }
            }
        }
        owner
    }

    /// Conditions (1)–(3) plus the path shape; the error names what fails.
    pub fn validate_structure(&self) -> Result<()> {
        let g = &self.h;
        if self.q.len() != PATHS {
            return Err(Error::input(format!("expected 5 paths, got {}", self.q.len())));
        }
        let mut seen = vec![false; g.n()];
        for (i, p) in self.q.iter().enumerate() {
            if p.is_empty() || !g.is_path(p) {
                return Err(Error::input(format!("Q{} is not a path of H", i + 1)));
            }
            for &v in p {
                if core::mem::replace(&mut seen[v], true) {
                    return Err(Error::input(format!("vertex {} lies on two paths", g.name(v))));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::input(format!("vertex {} is on no path (1)", g.name(v))));
        }
        let mut a: Vec<Vertex> = self.q.iter().map(|p| p[0]).collect();
        let mut b: Vec<Vertex> = self.q.iter().map(|p| *p.last().unwrap()).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != self.a || b != self.b {
            return Err(Error::input("A and B must be the first and last vertices of the paths"));
        }
        let in_a = crate::graph::mask_of(g.n(), &self.a);
        let in_b = crate::graph::mask_of(g.n(), &self.b);
        for p in &self.q {
            for &v in p.iter().skip(1).take(p.len().saturating_sub(2)) {
                if in_a[v] || in_b[v] {
                    return Err(Error::input(format!("vertex {} of A ∪ B is inside a path", g.name(v))));
                }
            }
        }
        let mut outside = vec![0usize; g.n()];
        for (u, v) in self.outside_edges() {
            outside[u] += 1;
            outside[v] += 1;
        }
        for v in 0..g.n() {
            if in_a[v] && outside[v] > 0 {
                return Err(Error::input(format!("A-vertex {} meets an edge off the paths (2)", g.name(v))));
            }
            if !in_a[v] && outside[v] != 1 {
                return Err(Error::input(format!(
                    "vertex {} meets {} edges off the paths, expected exactly one (3)",
                    g.name(v),
                    outside[v]
                )));
            }
        }
        Ok(())
    }

    /// A vertex whose removal still leaves five disjoint `A`-`B` paths, if any.
    /// Such a vertex exists exactly when condition (4) fails.
    pub fn support_reducing_vertex(&self) -> Option<Vertex> {
        let n = self.h.n();
        let in_ab = {
            let mut m = crate::graph::mask_of(n, &self.a);
            for &v in &self.b {
                m[v] = true;
            }
            m
        };
        let mut blocked = vec![false; n];
        (0..n).filter(|&v| !in_ab[v]).find(|&v| {
            blocked[v] = true;
            let found = max_disjoint_count(&self.h, &self.a, &self.b, Some(&blocked)) >= PATHS;
            blocked[v] = false;
            found
        })
    }

    /// All four defining conditions.
    pub fn validate(&self) -> Result<()> {
        self.validate_structure()?;
        if let Some(v) = self.support_reducing_vertex() {
            return Err(Error::input(format!(
                "five disjoint A-B paths avoid vertex {} (4)",
                self.h.name(v)
            )));
        }
        Ok(())
    }
}

/// Glues the gadget of `m` onto the `B` ends.
///
/// New vertices are numbered from `|V(H)|`: a pair adds `b'_i` then `b'_j`;
/// a cycle `(i_1 … i_k)` adds `c_{i_1} … c_{i_k}` then `b'_{i_1} … b'_{i_k}`,
/// with cross edges `c_{i_j} b'_{i_{j+1}}`.
pub fn apply_move(ps: &PathSystem, m: &Move) -> Result<PathSystem> {
    let idx = m.indices();
    if idx.iter().any(|&i| i >= PATHS) {
        return Err(Error::input(format!("move {m:?} uses an index outside 1..5")));
    }
    ps.validate_structure()?;
    let mut out = ps.clone();
    let base = ps.h.n();
    let ends: Vec<Vertex> = idx.iter().map(|&i| ps.b_of(i)).collect();
    for _ in 0..m.added_vertices() {
        out.h.add_vertex();
    }
    match m {
        Move::Pair(..) => {
            let (bi, bj) = (base, base + 1);
            out.h.add_edge(ends[0], bi)?;
            out.h.add_edge(ends[1], bj)?;
            out.h.add_edge(bi, bj)?;
            out.q[idx[0]].push(bi);
            out.q[idx[1]].push(bj);
        }
        Move::Cycle(_) => {
            let k = idx.len();
            for j in 0..k {
                let (c, b_new) = (base + j, base + k + j);
                out.h.add_edge(ends[j], c)?;
                out.h.add_edge(c, b_new)?;
                out.h.add_edge(c, base + k + (j + 1) % k)?;
                out.q[idx[j]].push(c);
                out.q[idx[j]].push(b_new);
            }
        }
    }
    out.b = out.q.iter().map(|p| *p.last().unwrap()).collect();
    out.b.sort_unstable();
    out.validate()
        .map_err(|e| Error::invariant(format!("move {m} produced an invalid system: {e}")))?;
    Ok(out)
}

/// `base_system() ⊕ m_1 ⊕ … ⊕ m_k`.
pub fn replay(moves: &[Move]) -> Result<PathSystem> {
    let mut ps = base_system();
    for m in moves {
        ps = apply_move(&ps, m)?;
    }
    Ok(ps)
}

/// Isomorphism mapping `A`, `B` and each `Q_i` to their counterparts, path
/// order preserved. Aligning the paths position by position fixes the only
/// candidate bijection.
pub fn is_isomorphic(p1: &PathSystem, p2: &PathSystem) -> bool {
    if p1.q.len() != p2.q.len() || p1.h.n() != p2.h.n() || p1.h.edge_count() != p2.h.edge_count() {
        return false;
    }
    let mut map = vec![usize::MAX; p1.h.n()];
    for (a, b) in p1.q.iter().zip(&p2.q) {
        if a.len() != b.len() {
            return false;
        }
        for (&u, &v) in a.iter().zip(b) {
            if u >= map.len() || map[u] != usize::MAX {
                return false;
            }
            map[u] = v;
        }
    }
    if map.contains(&usize::MAX) {
        return false;
    }
    p1.h.edges().iter().all(|&(u, v)| p2.h.has_edge(map[u], map[v]))
}
