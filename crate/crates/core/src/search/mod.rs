//! States, the transition map on states and the closure search over state
//! collections, plus the constructive witness replay on concrete systems.
//!
//! A state is an unordered pair of disjoint nonempty subsets of the five path
//! indices. The 90 states are numbered once and a collection of states is a
//! `u128` bitmask over those numbers.

mod closure;
mod tables;
mod transition;
mod witness;

pub use closure::{closure_from_s0, resume, Executor, LevelSnapshot, SearchConfig, SearchReport, SerialExecutor};
pub use tables::{tables, Tables};
pub use transition::{collection_step, gadget_extensions, step_raw, transition, transition_classes, transition_direct, Extension};
pub use witness::{reachable_state_witness, reachable_witnesses, two_nonadjacent_paths, validate_witness, WitnessPair};

use alloc::vec::Vec;
use core::fmt;

use crate::pathsys::PATHS;

pub const STATE_COUNT: usize = 90;
pub const PERM_COUNT: usize = 120;

pub type Perm = [u8; PATHS];
pub type Collection = u128;

/// Two disjoint nonempty index masks; the part holding the smallest index
/// comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State {
    pub s1: u8,
    pub s2: u8,
}

impl State {
    /// Normalizes the order of the parts; `None` unless both are nonempty
    /// and disjoint subsets of the five indices.
    pub fn new(a: u8, b: u8) -> Option<State> {
        if a == 0 || b == 0 || a & b != 0 || (a | b) >> PATHS != 0 {
            return None;
        }
        if a.trailing_zeros() < b.trailing_zeros() {
            Some(State { s1: a, s2: b })
        } else {
            Some(State { s1: b, s2: a })
        }
    }

    pub fn permuted(self, sigma: &Perm) -> State {
        State::new(permute_mask(self.s1, sigma), permute_mask(self.s2, sigma)).unwrap()
    }

    pub fn index(self) -> usize {
        all_states().binary_search(&self).expect("valid state")
    }

    pub fn from_index(i: usize) -> State {
        all_states()[i]
    }

    pub fn from_sets(a: &[usize], b: &[usize]) -> Option<State> {
        let m = |s: &[usize]| s.iter().fold(0u8, |acc, &i| acc | 1 << i);
        if a.iter().chain(b).any(|&i| i >= PATHS) {
            return None;
        }
        State::new(m(a), m(b))
    }
}

fn write_mask(f: &mut fmt::Formatter<'_>, m: u8) -> fmt::Result {
    write!(f, "{{")?;
    let mut first = true;
    for i in 0..PATHS {
        if m >> i & 1 == 1 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
            first = false;
        }
    }
    write!(f, "}}")
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        write_mask(f, self.s1)?;
        write!(f, ",")?;
        write_mask(f, self.s2)?;
        write!(f, "}}")
    }
}

pub fn permute_mask(m: u8, sigma: &Perm) -> u8 {
    (0..PATHS).filter(|&i| m >> i & 1 == 1).fold(0, |acc, i| acc | 1 << sigma[i])
}

/// All states in increasing order; there are exactly [`STATE_COUNT`].
pub fn all_states() -> &'static [State] {
    &tables().states
}

pub fn enumerate_states() -> Vec<State> {
    let mut out = Vec::new();
    for a in 1u8..32 {
        for b in 1u8..32 {
            if let Some(s) = State::new(a, b) {
                if s.s1 == a {
                    out.push(s);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// The 120 permutations of the indices in lexicographic order; the first is
/// the identity.
pub fn enumerate_perms() -> Vec<Perm> {
    let mut out = Vec::with_capacity(PERM_COUNT);
    let mut p: Perm = [0, 1, 2, 3, 4];
    loop {
        out.push(p);
        // next lexicographic permutation
        let Some(i) = (0..PATHS - 1).rev().find(|&i| p[i] < p[i + 1]) else { break };
        let j = (i + 1..PATHS).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

pub fn invert(sigma: &Perm) -> Perm {
    let mut inv = [0u8; PATHS];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s as usize] = i as u8;
    }
    inv
}

/// `{{x},{y}}` for all `x ≠ y`.
pub fn s0() -> Collection {
    let mut c = 0;
    for x in 0..PATHS {
        for y in x + 1..PATHS {
            c |= 1u128 << State::new(1 << x, 1 << y).unwrap().index();
        }
    }
    c
}

pub fn states_of(c: Collection) -> Vec<State> {
    (0..STATE_COUNT).filter(|&i| c >> i & 1 == 1).map(State::from_index).collect()
}

pub fn collection_of(states: &[State]) -> Collection {
    states.iter().fold(0, |c, s| c | 1u128 << s.index())
}

/// Image of a collection under permutation number `p`.
pub fn permute_collection(c: Collection, p: usize) -> Collection {
    let t = tables();
    let bytes = c.to_le_bytes();
    let mut out = 0;
    for (k, &byte) in bytes.iter().enumerate().take(12) {
        if byte != 0 {
            out |= t.byte_images[(p * 12 + k) * 256 + byte as usize];
        }
    }
    out
}

/// Minimum image over all permutations.
pub fn canonical(c: Collection) -> Collection {
    (0..PERM_COUNT).map(|p| permute_collection(c, p)).min().unwrap()
}

/// Whether some permutation maps `a` into a subset of `c`.
pub fn dominates(a: Collection, c: Collection) -> bool {
    if a.count_ones() > c.count_ones() {
        return false;
    }
    let t = tables();
    let (ta, tc) = (t.type_counts(a), t.type_counts(c));
    if ta.iter().zip(&tc).any(|(x, y)| x > y) {
        return false;
    }
    (0..PERM_COUNT).any(|p| permute_collection(a, p) & !c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn state_and_perm_counts() {
        assert_eq!(enumerate_states().len(), STATE_COUNT);
        assert_eq!(enumerate_perms().len(), PERM_COUNT);
        assert_eq!(s0().count_ones(), 10);
    }

    #[test]
    fn state_order_and_display() {
        let s = State::new(0b100, 0b011).unwrap();
        assert_eq!((s.s1, s.s2), (0b011, 0b100));
        assert_eq!(s.to_string(), "{{1,2},{3}}");
        assert!(State::new(1, 1).is_none());
        assert!(State::new(0, 1).is_none());
        for (i, st) in all_states().iter().enumerate() {
            assert_eq!(st.index(), i);
        }
    }

    #[test]
    fn canonical_is_invariant() {
        let c = collection_of(&[State::from_sets(&[0], &[1]).unwrap(), State::from_sets(&[2, 3], &[4]).unwrap()]);
        let k = canonical(c);
        assert_eq!(canonical(k), k);
        for p in 0..PERM_COUNT {
            assert_eq!(canonical(permute_collection(c, p)), k);
        }
        assert_eq!(canonical(s0()), s0());
    }

    #[test]
    fn domination() {
        let a = collection_of(&[State::from_sets(&[0], &[1]).unwrap()]);
        let c = collection_of(&[State::from_sets(&[3], &[4]).unwrap(), State::from_sets(&[0, 1], &[2]).unwrap()]);
        assert!(dominates(a, c));
        assert!(!dominates(c, a));
        assert!(dominates(0, c));
    }
}
