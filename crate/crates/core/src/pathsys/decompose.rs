use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Move, PathSystem, PATHS};
use crate::error::{Error, Result};
use crate::graph::{mask_of, Vertex};

/// Writes a path system as `base_system() ⊕ m_1 ⊕ … ⊕ m_k`.
///
/// Moves are stripped from the `B` side: a pair whenever an outside edge has
/// both ends in `B`, otherwise a cycle of the digraph on the outside edges at
/// `B` where `c b'` points to `c' b''` when `b'` and `c'` share a path.
pub fn decompose(ps: &PathSystem) -> Result<Vec<Move>> {
    ps.validate_structure()?;
    let g = &ps.h;
    let mut paths = ps.q.clone();
    let mut alive = vec![true; g.n()];
    let mut stripped = Vec::new();
    loop {
        let owner = {
            let mut o = vec![usize::MAX; g.n()];
            for (i, p) in paths.iter().enumerate() {
                for &v in p {
                    o[v] = i;
                }
            }
            o
        };
        let on_path = |u: Vertex, v: Vertex| {
            owner[u] == owner[v]
                && paths[owner[u]]
                    .windows(2)
                    .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
        };
        let b: Vec<Vertex> = paths.iter().map(|p| *p.last().unwrap()).collect();
        let in_b = mask_of(g.n(), &b);
        // The single outside edge at each B vertex that is not in A.
        let mut at_b: Vec<Option<Vertex>> = vec![None; PATHS];
        let mut remaining = 0usize;
        for u in 0..g.n() {
            if !alive[u] {
                continue;
            }
            for &v in g.neighbors(u) {
                if alive[v] && u < v && !on_path(u, v) {
                    remaining += 1;
                }
            }
        }
        if remaining == 0 {
            if paths.iter().any(|p| p.len() != 1) {
                return Err(Error::invariant("no outside edges left but some path is not a single vertex"));
            }
            break;
        }
        for i in 0..PATHS {
            let bi = b[i];
            let outs: Vec<Vertex> = g
                .neighbors(bi)
                .iter()
                .copied()
                .filter(|&w| alive[w] && !on_path(bi, w))
                .collect();
            if outs.len() > 1 {
                return Err(Error::invariant(format!("B-vertex {} has two outside edges", g.name(bi))));
            }
            at_b[i] = outs.first().copied();
        }

        if let Some(i) = (0..PATHS).find(|&i| at_b[i].is_some_and(|w| in_b[w])) {
            let j = owner[at_b[i].unwrap()];
            for &t in &[i, j] {
                let v = paths[t].pop().unwrap();
                alive[v] = false;
            }
            stripped.push(Move::pair(i, j)?);
            continue;
        }

        // pred of the edge c b'_t is the outside edge at the B end of c's path.
        let c_path = |t: usize| at_b[t].map(|c| owner[c]);
        let start = (0..PATHS)
            .find(|&t| at_b[t].is_some())
            .ok_or_else(|| Error::invariant("outside edges remain but none meets B"))?;
        let mut walk = vec![start];
        let cycle = loop {
            let cur = *walk.last().unwrap();
            let prev = c_path(cur).ok_or_else(|| Error::invariant("edge of F without predecessor"))?;
            if at_b[prev].is_none() {
                return Err(Error::invariant(format!(
                    "B-vertex of path {} has no outside edge",
                    prev + 1
                )));
            }
            if let Some(pos) = walk.iter().position(|&t| t == prev) {
                break walk[pos..].to_vec();
            }
            walk.push(prev);
        };
        // `cycle` lists b-path indices backwards along J; the edge at b'_t
        // starts at path c_path(t), so the forward order of c-paths is the
        // reverse.
        let mut order: Vec<usize> = cycle.iter().map(|&t| c_path(t).unwrap()).collect();
        order.reverse();
        for (j, &i) in order.iter().enumerate() {
            let c = at_b[order[(j + 1) % order.len()]].unwrap();
            let p = &paths[i];
            if p.len() < 3 || p[p.len() - 2] != c {
                return Err(Error::invariant(format!(
                    "cycle vertex {} is not next to the B end of path {}",
                    g.name(c),
                    i + 1
                )));
            }
        }
        for &i in &order {
            for _ in 0..2 {
                let v = paths[i].pop().unwrap();
                alive[v] = false;
            }
        }
        stripped.push(Move::cycle(&order)?);
    }
    stripped.reverse();
    Ok(stripped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathsys::{apply_move, base_system, is_isomorphic, replay};

    #[test]
    fn base_has_empty_decomposition() {
        assert!(decompose(&base_system()).unwrap().is_empty());
    }

    #[test]
    fn single_moves_round_trip() {
        for m in Move::all() {
            let ps = apply_move(&base_system(), &m).unwrap();
            assert_eq!(decompose(&ps).unwrap(), vec![m]);
        }
    }

    #[test]
    fn sequences_round_trip() {
        let seq = vec![
            Move::Pair(1, 2),
            Move::cycle(&[0, 2, 3, 4]).unwrap(),
            Move::Pair(0, 4),
            Move::cycle(&[3, 1]).unwrap(),
        ];
        let ps = replay(&seq).unwrap();
        let back = decompose(&ps).unwrap();
        assert!(is_isomorphic(&replay(&back).unwrap(), &ps));
    }
}
