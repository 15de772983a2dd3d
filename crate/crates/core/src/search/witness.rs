use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::transition::gadget_extensions;
use super::{tables, State};
use crate::disjoint::trim_to_xy_segment;
use crate::error::{Error, Result};
use crate::graph::{are_nonadjacent, mask_of, shortcut_to_induced_path, PathCollection, ProblemInstance, Vertex};
use crate::pathsys::{apply_move, base_system, decompose, is_isomorphic, normalize, PathSystem, PATHS};

/// Two vertex sets certifying a state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub c1: Vec<Vertex>,
    pub c2: Vec<Vertex>,
}

/// Checks disjointness, non-adjacency, connectivity, contact with `A` and
/// agreement of the `B` traces with the parts of `state` (in order).
pub fn validate_witness(ps: &PathSystem, state: State, w: &WitnessPair) -> Result<()> {
    let g = &ps.h;
    let in_a = mask_of(g.n(), &ps.a);
    let fail = |what: &str| Err(Error::invariant(format!("witness for {state}: {what}")));
    let m1 = mask_of(g.n(), &w.c1);
    if w.c2.iter().any(|&v| m1[v]) {
        return fail("sets intersect");
    }
    if !are_nonadjacent(g, &w.c1, &w.c2) {
        return fail("sets are adjacent");
    }
    for (name, c, part) in [("C1", &w.c1, state.s1), ("C2", &w.c2, state.s2)] {
        if !g.is_connected_set(c) {
            return fail(&format!("{name} is not connected"));
        }
        if !c.iter().any(|&v| in_a[v]) {
            return fail(&format!("{name} misses A"));
        }
        let mask = mask_of(g.n(), c);
        let trace = (0..PATHS).filter(|&i| mask[ps.b_of(i)]).fold(0u8, |acc, i| acc | 1 << i);
        if trace != part {
            return fail(&format!("{name} meets B on the wrong paths"));
        }
    }
    Ok(())
}

/// Every reachable state of the system with one witness each, in state order.
///
/// The system is decomposed into moves and rebuilt from the base system; the
/// witnesses of each state are carried across every move by gluing gadget
/// extensions onto the `B` ends.
pub fn reachable_witnesses(ps: &PathSystem) -> Result<Vec<(State, WitnessPair)>> {
    ps.validate()?;
    let moves = decompose(ps)?;
    let t = tables();
    let mut r = base_system();
    let mut current: BTreeMap<State, WitnessPair> = BTreeMap::new();
    for x in 0..PATHS {
        for y in x + 1..PATHS {
            let s = State::new(1 << x, 1 << y).unwrap();
            current.insert(s, WitnessPair { c1: vec![x], c2: vec![y] });
        }
    }
    for m in &moves {
        let mi = t.move_index(m).expect("decompose yields canonical moves");
        let ends: Vec<Vertex> = (0..PATHS).map(|i| r.b_of(i)).collect();
        let base = r.h.n();
        let to_r = |gv: usize| if gv < PATHS { ends[gv] } else { base + gv - PATHS };
        let mut next: BTreeMap<State, WitnessPair> = BTreeMap::new();
        for w in current.values() {
            let trace = |c: &[Vertex]| (0..PATHS).filter(|&i| c.contains(&ends[i])).fold(0u8, |acc, i| acc | 1 << i);
            let (t1, t2) = (trace(&w.c1), trace(&w.c2));
            for e in gadget_extensions(t1, t2, mi) {
                let Some(s) = State::new(e.b1, e.b2) else { continue };
                if next.contains_key(&s) {
                    continue;
                }
                let grow = |c: &[Vertex], bits: u16| {
                    let mut out = c.to_vec();
                    out.extend((PATHS..16).filter(|&v| bits >> v & 1 == 1).map(to_r));
                    out.sort_unstable();
                    out
                };
                let (n1, n2) = (grow(&w.c1, e.c1), grow(&w.c2, e.c2));
                let pair = if s.s1 == e.b1 {
                    WitnessPair { c1: n1, c2: n2 }
                } else {
                    WitnessPair { c1: n2, c2: n1 }
                };
                next.insert(s, pair);
            }
        }
        r = apply_move(&r, m)?;
        if next.is_empty() {
            return Err(Error::invariant(format!("no state survives move {m}")));
        }
        current = next;
    }
    if !is_isomorphic(&r, ps) {
        return Err(Error::invariant("replayed decomposition is not isomorphic to the system"));
    }
    let mut to_ps = vec![0; r.h.n()];
    for (a, b) in r.q.iter().zip(&ps.q) {
        for (&u, &v) in a.iter().zip(b) {
            to_ps[u] = v;
        }
    }
    let mut out = Vec::new();
    for (s, w) in current {
        let map = |c: &[Vertex]| {
            let mut m: Vec<Vertex> = c.iter().map(|&v| to_ps[v]).collect();
            m.sort_unstable();
            m
        };
        let w = WitnessPair { c1: map(&w.c1), c2: map(&w.c2) };
        validate_witness(ps, s, &w)?;
        out.push((s, w));
    }
    Ok(out)
}

/// The first reachable state (in state order) with its witness.
pub fn reachable_state_witness(ps: &PathSystem) -> Result<(State, WitnessPair)> {
    reachable_witnesses(ps)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::invariant("no reachable state"))
}

/// Two disjoint non-adjacent `X`-`Y` paths from five disjoint `X`-`Y` paths
/// whose vertices meet at most one further edge each.
///
/// The instance is normalized to a path system, a reachable state is
/// replayed, an `A`-`B` path is taken inside each witness set, mapped back to
/// the instance and shortcut to an induced path.
pub fn two_nonadjacent_paths(inst: &ProblemInstance, pc: &PathCollection) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    let (ps, prov) = normalize(inst, pc)?;
    let (_, w) = reachable_state_witness(&ps)?;
    let h = &ps.h;
    let in_b = mask_of(h.n(), &ps.b);
    let (in_x, in_y) = (inst.x_mask(), inst.y_mask());
    let mut out = Vec::new();
    for c in [&w.c1, &w.c2] {
        let allowed = mask_of(h.n(), c);
        let sources: Vec<Vertex> = c.iter().copied().filter(|v| ps.a.contains(v)).collect();
        let inner = h
            .shortest_path_within(&sources, &in_b, Some(&allowed))
            .ok_or_else(|| Error::invariant("witness set has no A-B path"))?;
        let walk = prov.map_path(&inner);
        let path = shortcut_to_induced_path(&inst.graph, &walk)?;
        out.push(trim_to_xy_segment(&path, &in_x, &in_y));
    }
    let (p1, p2) = (out.swap_remove(0), out.swap_remove(0));
    let g = &inst.graph;
    let ok = inst.is_xy_path(&p1)
        && inst.is_xy_path(&p2)
        && g.is_induced_path(&p1)
        && g.is_induced_path(&p2)
        && !p1.iter().any(|v| p2.contains(v))
        && are_nonadjacent(g, &p1, &p2);
    if !ok {
        return Err(Error::invariant(format!("extracted paths {p1:?} and {p2:?} are not non-adjacent X-Y paths")));
    }
    Ok((p1, p2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::pathsys::{replay, Move};

    #[test]
    fn base_system_states() {
        let all = reachable_witnesses(&base_system()).unwrap();
        assert_eq!(all.len(), 10);
        let (s, w) = &all[0];
        assert_eq!(*s, State::from_sets(&[0], &[1]).unwrap());
        assert_eq!((w.c1.clone(), w.c2.clone()), (vec![0], vec![1]));
    }

    #[test]
    fn pair_witness() {
        let ps = apply_move(&base_system(), &Move::Pair(0, 1)).unwrap();
        let all = reachable_witnesses(&ps).unwrap();
        let s = State::from_sets(&[0], &[2]).unwrap();
        let (_, w) = all.iter().find(|(t, _)| *t == s).unwrap();
        assert_eq!(w.c1, vec![0, 5]);
        assert_eq!(w.c2, vec![2]);
    }

    #[test]
    fn longer_sequences_have_witnesses() {
        let seq = vec![
            Move::cycle(&[0, 1, 2, 3, 4]).unwrap(),
            Move::Pair(0, 2),
            Move::cycle(&[1, 3]).unwrap(),
            Move::Pair(3, 4),
        ];
        let ps = replay(&seq).unwrap();
        let (s, w) = reachable_state_witness(&ps).unwrap();
        validate_witness(&ps, s, &w).unwrap();
    }

    #[test]
    fn parallel_edges_give_first_two_paths() {
        let g = Graph::from_edges(10, (0..5).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let inst = ProblemInstance::new(g, vec![0, 2, 4, 6, 8], vec![1, 3, 5, 7, 9]).unwrap();
        let pc = PathCollection::new((0..5).map(|i| vec![2 * i, 2 * i + 1]).collect());
        let (p1, p2) = two_nonadjacent_paths(&inst, &pc).unwrap();
        assert_eq!((p1, p2), (vec![0, 1], vec![2, 3]));
    }
}
