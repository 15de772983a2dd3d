//! Exact maximum independent set on small graphs (at most 64 vertices),
//! branch and bound over bitmasks with a greedy clique-cover bound.

use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

/// Largest graph accepted by [`maximum_independent_set`].
pub const MIS_MAX_VERTICES: usize = 64;

/// Returns a maximum independent set in increasing vertex order, or `None`
/// when the graph has more than [`MIS_MAX_VERTICES`] vertices.
pub fn maximum_independent_set(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    if n > MIS_MAX_VERTICES {
        return None;
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0u64;
    branch(&adj, all, 0, &mut best);
    Some((0..n).filter(|&v| best >> v & 1 == 1).collect())
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the independence number of `cand`.
fn clique_cover_bound(adj: &[u64], mut cand: u64) -> u32 {
    let mut count = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut clique_cand = cand & adj[v];
        cand &= !(1 << v);
        while clique_cand != 0 {
            let w = clique_cand.trailing_zeros() as usize;
            cand &= !(1 << w);
            clique_cand &= adj[w];
        }
        count += 1;
    }
    count
}

fn branch(adj: &[u64], cand: u64, chosen: u64, best: &mut u64) {
    if cand == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + clique_cover_bound(adj, cand) <= best.count_ones() {
        return;
    }
    // Branch on a maximum-degree vertex of the candidate set: take it, or drop it.
    let mut pick = cand.trailing_zeros() as usize;
    let mut pick_deg = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d > pick_deg {
            pick_deg = d;
            pick = v;
        }
    }
    if pick_deg == 0 {
        let all = chosen | cand;
        if all.count_ones() > best.count_ones() {
            *best = all;
        }
        return;
    }
    let bit = 1u64 << pick;
    branch(adj, cand & !bit & !adj[pick], chosen | bit, best);
    branch(adj, cand & !bit, chosen, best);
}

/// Greedy minimum-degree independent set; used when the exact solver does
/// not apply.
pub fn greedy_independent_set(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut alive = alloc::vec![true; n];
    let mut out = Vec::new();
    loop {
        let pick = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (g.neighbors(v).iter().filter(|&&w| alive[w]).count(), v));
        let Some(v) = pick else { break };
        out.push(v);
        alive[v] = false;
        for &w in g.neighbors(v) {
            alive[w] = false;
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;
    use proptest::prelude::*;

    fn bruteforce_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn cycle_five_has_alpha_two() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| edge(i, (i + 1) % 5))).unwrap();
        assert_eq!(maximum_independent_set(&c5).unwrap().len(), 2);
        assert_eq!(maximum_independent_set(&Graph::new(4)).unwrap(), alloc::vec![0, 1, 2, 3]);
    }

    proptest! {
        #[test]
        fn matches_bruteforce(n in 1usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k % bits.len()] { g.add_edge(u, v).unwrap(); }
                    k += 1;
                }
            }
            let set = maximum_independent_set(&g).unwrap();
            prop_assert!(set.iter().all(|&u| set.iter().all(|&v| !g.has_edge(u, v))));
            prop_assert_eq!(set.len(), bruteforce_alpha(&g));
            let greedy = greedy_independent_set(&g);
            prop_assert!(greedy.len() <= set.len());
        }
    }
}
