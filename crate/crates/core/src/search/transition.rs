use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use super::{canonical, permute_collection, tables, Collection, State, PERM_COUNT, STATE_COUNT};
use crate::pathsys::{apply_move, base_system, Move, PATHS};

/// `base_system() ⊕ m` as bitmasks. Vertices `0..5` are the `A` side, the
/// rest are numbered as [`apply_move`] numbers them.
pub(crate) struct Gadget {
    pub n: usize,
    pub adj: Vec<u16>,
    /// `B` vertex of each path.
    pub b: [usize; PATHS],
}

impl Gadget {
    fn new(m: &Move) -> Gadget {
        let ps = apply_move(&base_system(), m).expect("moves on the base system are valid");
        let n = ps.h.n();
        let adj = (0..n)
            .map(|v| ps.h.neighbors(v).iter().fold(0u16, |acc, &w| acc | 1 << w))
            .collect();
        let mut b = [0; PATHS];
        for (i, bi) in b.iter_mut().enumerate() {
            *bi = ps.b_of(i);
        }
        Gadget { n, adj, b }
    }

    /// Vertices of `set` connected inside `set` to one of its `A` vertices.
    fn reached_from_a(&self, set: u16) -> u16 {
        let mut reached = set & 0b11111;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & set & !reached;
            reached |= new;
            frontier |= new;
        }
        reached
    }

    fn b_trace(&self, set: u16) -> u8 {
        (0..PATHS).filter(|&i| set >> self.b[i] & 1 == 1).fold(0, |acc, i| acc | 1 << i)
    }
}

fn gadgets() -> &'static [Gadget] {
    static G: OnceBox<Vec<Gadget>> = OnceBox::new();
    G.get_or_init(|| Box::new(tables().moves.iter().map(Gadget::new).collect()))
}

pub(crate) fn gadget(m: usize) -> &'static Gadget {
    &gadgets()[m]
}

/// One way to extend a pair of sets across a gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extension {
    /// Gadget vertices (bitmask) joining each set, `A` side included. Vertices
    /// not connected to the `A` side are left out.
    pub c1: u16,
    pub c2: u16,
    /// `B`-side traces.
    pub b1: u8,
    pub b2: u8,
}

/// All extensions of sets whose `A`-side traces are `a1` and `a2`: pairs of
/// disjoint non-adjacent gadget vertex sets where every `B` vertex is joined
/// to the `A` side within its set. Outputs with an empty `B` trace are kept;
/// callers filter them.
pub fn gadget_extensions(a1: u8, a2: u8, m: usize) -> Vec<Extension> {
    let g = gadget(m);
    let mut out = Vec::new();
    let fixed1 = a1 as u16;
    let fixed2 = a2 as u16;
    if fixed1 & fixed2 != 0 {
        return out;
    }
    for v in 0..PATHS {
        if fixed1 >> v & 1 == 1 && g.adj[v] & fixed2 != 0 {
            return out;
        }
    }
    let mut seen = BTreeMap::new();
    assign(g, PATHS, fixed1, fixed2, &mut |c1, c2| {
        let r1 = g.reached_from_a(c1);
        let r2 = g.reached_from_a(c2);
        let (bm1, bm2) = (b_mask(g), b_mask(g));
        if c1 & bm1 & !r1 != 0 || c2 & bm2 & !r2 != 0 {
            return;
        }
        let e = Extension {
            c1: r1,
            c2: r2,
            b1: g.b_trace(r1),
            b2: g.b_trace(r2),
        };
        seen.entry((r1, r2)).or_insert(e);
    });
    out.extend(seen.into_values());
    out
}

fn b_mask(g: &Gadget) -> u16 {
    g.b.iter().fold(0, |acc, &v| acc | 1 << v)
}

fn assign(g: &Gadget, v: usize, c1: u16, c2: u16, leaf: &mut dyn FnMut(u16, u16)) {
    if v == g.n {
        leaf(c1, c2);
        return;
    }
    assign(g, v + 1, c1, c2, leaf);
    if g.adj[v] & c2 == 0 {
        assign(g, v + 1, c1 | 1 << v, c2, leaf);
    }
    if g.adj[v] & c1 == 0 {
        assign(g, v + 1, c1, c2 | 1 << v, leaf);
    }
}

/// `f(s, m)` straight from the definition: both pairings of the parts of `s`
/// with the two sets are tried.
pub fn transition_direct(s: State, m: usize) -> Collection {
    let mut out = 0;
    for (a1, a2) in [(s.s1, s.s2), (s.s2, s.s1)] {
        for e in gadget_extensions(a1, a2, m) {
            if let Some(st) = State::new(e.b1, e.b2) {
                out |= 1u128 << st.index();
            }
        }
    }
    out
}

/// `f` for every state and move, computed once per symmetry class of
/// `(state, move)` and transported to the rest of the class.
pub(crate) fn transition_table() -> &'static [Collection] {
    static T: OnceBox<Vec<Collection>> = OnceBox::new();
    T.get_or_init(|| {
        let t = tables();
        let moves = t.moves.len();
        let mut memo: BTreeMap<(u8, u8), Collection> = BTreeMap::new();
        let mut table = vec![0u128; STATE_COUNT * moves];
        for s in 0..STATE_COUNT {
            for m in 0..moves {
                let (p, key) = (0..PERM_COUNT)
                    .map(|p| (p, (t.perm_move[p][m], t.perm_state[p][s])))
                    .min_by_key(|&(_, k)| k)
                    .unwrap();
                let rep = *memo
                    .entry(key)
                    .or_insert_with(|| transition_direct(State::from_index(key.1 as usize), key.0 as usize));
                table[s * moves + m] = permute_collection(rep, t.inverse[p]);
            }
        }
        Box::new(table)
    })
}

/// Number of distinct `(state, move)` symmetry classes evaluated directly.
pub fn transition_classes() -> usize {
    let t = tables();
    let mut keys = alloc::collections::BTreeSet::new();
    for s in 0..STATE_COUNT {
        for m in 0..t.moves.len() {
            let key = (0..PERM_COUNT).map(|p| (t.perm_move[p][m], t.perm_state[p][s])).min().unwrap();
            keys.insert(key);
        }
    }
    keys.len()
}

/// `f(s, m)` from the memoized table.
pub fn transition(s: State, m: usize) -> Collection {
    transition_table()[s.index() * tables().moves.len() + m]
}

/// `g(c, m)`: union of `f(s, m)` over the states of `c`, not canonicalized.
pub fn step_raw(c: Collection, m: usize) -> Collection {
    let table = transition_table();
    let moves = tables().moves.len();
    let mut out = 0;
    let mut rest = c;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= table[s * moves + m];
    }
    out
}

/// `g(c, m)` in canonical form.
pub fn collection_step(c: Collection, m: usize) -> Collection {
    canonical(step_raw(c, m))
}
