//! Independent brute-force checks shared by the integration tests. Nothing
//! here calls into the algorithms it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use induced_menger_core::graph::{Graph, ProblemInstance, Vertex};
use induced_menger_core::pathsys::PathSystem;

pub fn adjacency_sets(g: &Graph) -> Vec<BTreeSet<Vertex>> {
    let mut adj = vec![BTreeSet::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}

/// A simple path of `g` from `X` to `Y`, checked edge by edge.
pub fn check_xy_path(inst: &ProblemInstance, p: &[Vertex]) -> Result<(), String> {
    let adj = adjacency_sets(&inst.graph);
    if p.is_empty() {
        return Err("empty path".into());
    }
    if !inst.x.contains(&p[0]) || !inst.y.contains(p.last().unwrap()) {
        return Err(format!("{p:?} does not run from X to Y"));
    }
    let distinct: HashSet<_> = p.iter().collect();
    if distinct.len() != p.len() {
        return Err(format!("{p:?} repeats a vertex"));
    }
    if p.windows(2).any(|w| !adj[w[0]].contains(&w[1])) {
        return Err(format!("{p:?} uses a non-edge"));
    }
    Ok(())
}

/// Every pair of the given paths shares no vertex and no edge joins them.
pub fn check_pairwise_nonadjacent(inst: &ProblemInstance, paths: &[Vec<Vertex>]) -> Result<(), String> {
    let adj = adjacency_sets(&inst.graph);
    for p in paths {
        check_xy_path(inst, p)?;
    }
    for (i, p) in paths.iter().enumerate() {
        for q in &paths[i + 1..] {
            for &u in p {
                for &v in q {
                    if u == v {
                        return Err(format!("{p:?} and {q:?} share {u}"));
                    }
                    if adj[u].contains(&v) {
                        return Err(format!("edge {u}-{v} joins {p:?} and {q:?}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Whether deleting `sep` leaves no path from `X` to `Y`.
fn separates(adj: &[BTreeSet<Vertex>], x: &[Vertex], y: &[Vertex], sep: u64) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack: Vec<Vertex> = x.iter().copied().filter(|&v| sep >> v & 1 == 0).collect();
    for &v in &stack {
        seen[v] = true;
    }
    while let Some(v) = stack.pop() {
        if y.contains(&v) {
            return false;
        }
        for &w in &adj[v] {
            if !seen[w] && sep >> w & 1 == 0 {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    true
}

/// Size of a smallest `X`-`Y` separator, by scanning all vertex subsets.
pub fn min_separator_size(inst: &ProblemInstance) -> usize {
    let n = inst.graph.n();
    assert!(n <= 20);
    let adj = adjacency_sets(&inst.graph);
    (0u64..1 << n)
        .filter(|&s| separates(&adj, &inst.x, &inst.y, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Graphs on `n` vertices up to isomorphism, as adjacency bitmasks, built by
/// adding one vertex at a time and keeping one representative per class.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Vec<u8>> {
    assert!((1..=8).contains(&n));
    let mut level: Vec<Vec<u8>> = vec![vec![0]];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nb in 0u16..1 << (size - 1) {
                let mut h = g.clone();
                h.push(nb as u8);
                for (v, row) in h.iter_mut().enumerate().take(size - 1) {
                    if nb >> v & 1 == 1 {
                        *row |= 1 << (size - 1);
                    }
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Smallest adjacency code over all vertex orders compatible with an
/// isomorphism-invariant colour refinement.
fn canonical_code(adj: &[u8]) -> u32 {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sig.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let stable = distinct.len() == colour.iter().collect::<BTreeSet<_>>().len();
        colour = next;
        if stable {
            break;
        }
    }
    let ncol = colour.iter().max().map_or(0, |c| c + 1);
    let cells: Vec<Vec<usize>> = (0..ncol).map(|c| (0..n).filter(|&v| colour[v] == c).collect()).collect();
    let mut best = u32::MAX;
    let mut order = Vec::with_capacity(n);
    orders(&cells, 0, &mut vec![false; n], &mut order, &mut |ord| {
        let mut code = 0u32;
        for i in 0..n {
            for j in i + 1..n {
                code = code << 1 | u32::from(adj[ord[i]] >> ord[j] & 1);
            }
        }
        best = best.min(code);
    });
    best
}

fn orders(cells: &[Vec<usize>], cell: usize, used: &mut Vec<bool>, order: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let Some(c) = cells.get(cell) else {
        f(order);
        return;
    };
    let placed = c.iter().filter(|&&v| used[v]).count();
    if placed == c.len() {
        return orders(cells, cell + 1, used, order, f);
    }
    for &v in c {
        if !used[v] {
            used[v] = true;
            order.push(v);
            orders(cells, cell, used, order, f);
            order.pop();
            used[v] = false;
        }
    }
}

pub fn graph_of(adj: &[u8]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::from_edges(n, edges).unwrap()
}

/// Whether some bijection maps the edges of `a` onto those of `b`.
pub fn isomorphic_bruteforce(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let eb: HashSet<(usize, usize)> = b.edges().into_iter().collect();
    let ea = a.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if ea.iter().all(|&(u, v)| {
            let (x, y) = (perm[u], perm[v]);
            eb.contains(&(x.min(y), x.max(y)))
        }) {
            return true;
        }
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

pub fn moser_spindle() -> Graph {
    // two rhombi of triangles sharing a tip, far tips joined
    Graph::from_edges(7, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5), (4, 6), (5, 6), (3, 6)]).unwrap()
}

/// Smallest number of colours of a proper colouring, by trying every
/// assignment with `k = 1, 2, ...` colours.
pub fn chromatic_number_bruteforce(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    for k in 1..=n.max(1) {
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colour: Vec<u64> = (0..n)
                .map(|_| {
                    let d = c % k as u64;
                    c /= k as u64;
                    d
                })
                .collect();
            if edges.iter().all(|&(u, v)| colour[u] != colour[v]) {
                return k;
            }
        }
    }
    0
}

/// Largest minimum degree over all subgraphs, by repeated deletion of a
/// vertex of minimum degree.
pub fn degeneracy(g: &Graph) -> usize {
    let mut adj = adjacency_sets(g);
    let mut alive: BTreeSet<Vertex> = (0..g.n()).collect();
    let mut best = 0;
    while let Some(&v) = alive.iter().min_by_key(|&&v| adj[v].len()) {
        best = best.max(adj[v].len());
        alive.remove(&v);
        for w in std::mem::take(&mut adj[v]) {
            adj[w].remove(&v);
        }
    }
    best
}

/// Graph on the edges of `G[V(P)]` outside the paths; two are adjacent when
/// they share an end or an edge of `G` joins their ends.
pub fn outside_conflict_graph(g: &Graph, paths: &[Vec<Vertex>]) -> Graph {
    let on: HashSet<Vertex> = paths.iter().flatten().copied().collect();
    let path_edges: HashSet<(Vertex, Vertex)> = paths
        .iter()
        .flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
        .collect();
    let f: Vec<(Vertex, Vertex)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| on.contains(&u) && on.contains(&v) && !path_edges.contains(&(u, v)))
        .collect();
    let adj = adjacency_sets(g);
    let mut h = Graph::new(f.len());
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let (a, b) = f[i];
            let (c, d) = f[j];
            let close = [a, b].iter().any(|&s| [c, d].iter().any(|&t| s == t || adj[s].contains(&t)));
            if close {
                h.add_edge(i, j).unwrap();
            }
        }
    }
    h
}

/// Path systems equal up to renaming vertices position by position along
/// the five paths.
pub fn same_system_up_to_renaming(p: &PathSystem, q: &PathSystem) -> bool {
    if p.h.n() != q.h.n() || p.q.len() != q.q.len() {
        return false;
    }
    let mut map = vec![usize::MAX; p.h.n()];
    for (a, b) in p.q.iter().zip(&q.q) {
        if a.len() != b.len() {
            return false;
        }
        for (&u, &v) in a.iter().zip(b) {
            map[u] = v;
        }
    }
    if map.contains(&usize::MAX) {
        return false;
    }
    let eq: HashSet<(usize, usize)> = q.h.edges().into_iter().collect();
    p.h.edge_count() == q.h.edge_count()
        && p.h.edges().into_iter().all(|(u, v)| {
            let (x, y) = (map[u], map[v]);
            eq.contains(&(x.min(y), x.max(y)))
        })
}
