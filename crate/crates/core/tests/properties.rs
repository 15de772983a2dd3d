use std::collections::{BTreeSet, VecDeque};

use induced_menger_core::colouring::{greedy_strong_colouring, is_induced_matching};
use induced_menger_core::disjoint::{max_disjoint_paths, menger, min_separator, min_total_length_disjoint_paths, separates, MengerResult};
use induced_menger_core::graph::{degeneracy_colouring, edge_distance, shortcut_to_induced_path, Graph, ProblemInstance};
use induced_menger_core::oracle::{max_disjoint_paths_bruteforce, max_nonadjacent_paths, OracleBudget};
use induced_menger_core::pathsys::{decompose, is_isomorphic, replay, Move};
use induced_menger_core::search::{canonical, permute_collection, PERM_COUNT};
use induced_menger_core::Error;
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * (n - 1) / 2).prop_map(move |b| graph_from_bits(n, &b))
    })
}

fn arb_instance(max_n: usize) -> impl Strategy<Value = ProblemInstance> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (
            Just(g),
            proptest::collection::btree_set(0..n, 1..=n.min(4)),
            proptest::collection::btree_set(0..n, 1..=n.min(4)),
        )
            .prop_map(|(g, x, y)| ProblemInstance::new(g, x.into_iter().collect(), y.into_iter().collect()).unwrap())
    })
}

/// Smallest separator size over all vertex subsets.
fn brute_separator(inst: &ProblemInstance) -> usize {
    let n = inst.graph.n();
    (0u32..1 << n)
        .filter(|&s| {
            let sep: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            let mut seen = vec![false; n];
            let mut queue: VecDeque<usize> = inst.x.iter().copied().filter(|v| !sep.contains(v)).collect();
            for &v in &queue {
                seen[v] = true;
            }
            while let Some(v) = queue.pop_front() {
                if inst.y.contains(&v) {
                    return false;
                }
                for &w in inst.graph.neighbors(v) {
                    if !seen[w] && !sep.contains(&w) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            true
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn bfs_edge_distance(g: &Graph, e1: (usize, usize), e2: (usize, usize)) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for v in [e1.0, e1.1] {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let d = dist[e2.0].min(dist[e2.1]);
    (d != usize::MAX).then_some(d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn flow_value_equals_smallest_separator(inst in arb_instance(10)) {
        let pc = max_disjoint_paths(&inst);
        pc.validate_for(&inst).unwrap();
        let sep = min_separator(&inst);
        prop_assert!(separates(&inst.graph, &inst.x, &inst.y, &sep));
        prop_assert_eq!(sep.len(), pc.len());
        prop_assert_eq!(brute_separator(&inst), pc.len());
    }

    #[test]
    fn menger_answers_either_way(inst in arb_instance(10), k in 1usize..5) {
        match menger(&inst, k).unwrap() {
            MengerResult::Paths(pc) => {
                prop_assert_eq!(pc.len(), k);
                pc.validate_for(&inst).unwrap();
            }
            MengerResult::Separator(s) => {
                prop_assert!(s.len() < k);
                prop_assert!(separates(&inst.graph, &inst.x, &inst.y, &s));
            }
        }
    }

    #[test]
    fn min_length_paths_are_no_longer_than_flow_paths(inst in arb_instance(9)) {
        let pc = max_disjoint_paths(&inst);
        let k = pc.len();
        if k > 0 {
            let short = min_total_length_disjoint_paths(&inst, k).unwrap();
            short.validate_for(&inst).unwrap();
            prop_assert!(short.total_length() <= pc.total_length());
        } else {
            let refused = matches!(min_total_length_disjoint_paths(&inst, 1), Err(Error::NotEnoughPaths { .. }));
            prop_assert!(refused);
        }
    }

    #[test]
    fn oracle_agrees_with_flow(inst in arb_instance(9)) {
        let budget = OracleBudget::default();
        let flow = max_disjoint_paths(&inst).len();
        prop_assert_eq!(max_disjoint_paths_bruteforce(&inst, &budget).unwrap(), flow);
        prop_assert!(max_nonadjacent_paths(&inst, &budget).unwrap().count <= flow);
    }

    #[test]
    fn shortcut_gives_induced_paths(g in arb_graph(10), seed in any::<u64>()) {
        // a random walk from vertex 0
        let mut walk = vec![0];
        let mut s = seed;
        for _ in 0..12 {
            let nb = g.neighbors(*walk.last().unwrap());
            if nb.is_empty() {
                break;
            }
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            walk.push(nb[(s >> 33) as usize % nb.len()]);
        }
        let p = shortcut_to_induced_path(&g, &walk).unwrap();
        prop_assert_eq!(p[0], walk[0]);
        prop_assert_eq!(p.last(), walk.last());
        prop_assert!(g.is_induced_path(&p));
    }

    #[test]
    fn degeneracy_colouring_is_proper(g in arb_graph(30)) {
        let (colour, d) = degeneracy_colouring(&g);
        for (u, v) in g.edges() {
            prop_assert_ne!(colour[u], colour[v]);
        }
        prop_assert!(colour.iter().all(|&c| c <= d));
    }

    #[test]
    fn strong_colouring_classes_are_induced_matchings(g in arb_graph(12)) {
        let part = greedy_strong_colouring(&g);
        let all: BTreeSet<_> = g.edges().into_iter().collect();
        part.validate(&g, &all).unwrap();
        prop_assert!(part.classes.iter().all(|c| is_induced_matching(&g, c)));
    }

    #[test]
    fn edge_distance_matches_bfs(g in arb_graph(12), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let edges = g.edges();
        if !edges.is_empty() {
            let (e1, e2) = (edges[i.index(edges.len())], edges[j.index(edges.len())]);
            let d = edge_distance(&g, e1, e2).unwrap();
            prop_assert_eq!(d, edge_distance(&g, e2, e1).unwrap());
            prop_assert_eq!(d, bfs_edge_distance(&g, e1, e2));
        }
    }

    #[test]
    fn canonical_form_is_a_class_invariant(c in any::<u128>(), p in 0usize..PERM_COUNT) {
        let c = c & ((1u128 << 90) - 1);
        let k = canonical(c);
        prop_assert_eq!(canonical(k), k);
        prop_assert_eq!(canonical(permute_collection(c, p)), k);
        prop_assert_eq!(k.count_ones(), c.count_ones());
    }

    #[test]
    fn decompose_inverts_replay(picks in proptest::collection::vec(0usize..94, 0..8)) {
        let all = Move::all();
        let seq: Vec<Move> = picks.iter().map(|&i| all[i].clone()).collect();
        let ps = replay(&seq).unwrap();
        let again = replay(&decompose(&ps).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&again, &ps));
    }
}
