use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use super::{enumerate_perms, enumerate_states, Collection, Perm, State, PERM_COUNT, STATE_COUNT};
use crate::pathsys::Move;

/// Precomputed symmetry data shared by the search.
pub struct Tables {
    pub states: Vec<State>,
    pub perms: Vec<Perm>,
    /// `perm_state[p][s]`: index of the image of state `s` under permutation `p`.
    pub perm_state: Vec<[u8; STATE_COUNT]>,
    pub moves: Vec<Move>,
    /// `perm_move[p][m]`: index of the image of move `m` under permutation `p`.
    pub perm_move: Vec<Vec<u8>>,
    pub inverse: Vec<usize>,
    /// Orbit type of each state: the unordered pair of part sizes.
    pub state_type: [u8; STATE_COUNT],
    /// Image of byte `k` of a collection under permutation `p`, at
    /// `(p * 12 + k) * 256 + byte`.
    pub(crate) byte_images: Vec<Collection>,
}

pub const TYPES: usize = 6;

impl Tables {
    fn build() -> Tables {
        let states = enumerate_states();
        assert_eq!(states.len(), STATE_COUNT, "state enumeration");
        let perms = enumerate_perms();
        assert_eq!(perms.len(), PERM_COUNT, "permutation enumeration");
        let moves = Move::all();
        assert_eq!(moves.len(), 94, "move enumeration");

        let state_index = |s: State| states.binary_search(&s).unwrap();
        let perm_state: Vec<[u8; STATE_COUNT]> = perms
            .iter()
            .map(|sigma| {
                let mut row = [0u8; STATE_COUNT];
                for (i, s) in states.iter().enumerate() {
                    row[i] = state_index(s.permuted(sigma)) as u8;
                }
                row
            })
            .collect();
        let perm_move = perms
            .iter()
            .map(|sigma| {
                moves
                    .iter()
                    .map(|m| {
                        let img = m.permuted(sigma);
                        moves.iter().position(|x| *x == img).unwrap() as u8
                    })
                    .collect()
            })
            .collect();
        let inverse = perms
            .iter()
            .map(|sigma| perms.iter().position(|p| *p == super::invert(sigma)).unwrap())
            .collect();
        let mut state_type = [0u8; STATE_COUNT];
        for (i, s) in states.iter().enumerate() {
            let (a, b) = (s.s1.count_ones(), s.s2.count_ones());
            let (lo, hi) = (a.min(b), a.max(b));
            // (1,1) (1,2) (1,3) (1,4) (2,2) (2,3)
            state_type[i] = match (lo, hi) {
                (1, h) => (h - 1) as u8,
                (2, 2) => 4,
                _ => 5,
            };
        }
        let mut byte_images = vec![0u128; PERM_COUNT * 12 * 256];
        for p in 0..PERM_COUNT {
            for k in 0..12 {
                for byte in 1..256usize {
                    let mut img = 0u128;
                    for bit in 0..8 {
                        let s = k * 8 + bit;
                        if byte >> bit & 1 == 1 && s < STATE_COUNT {
                            img |= 1u128 << perm_state[p][s];
                        }
                    }
                    byte_images[(p * 12 + k) * 256 + byte] = img;
                }
            }
        }
        Tables {
            states,
            perms,
            perm_state,
            moves,
            perm_move,
            inverse,
            state_type,
            byte_images,
        }
    }

    /// Number of states of each orbit type in `c`; invariant under permutation.
    pub fn type_counts(&self, mut c: Collection) -> [u8; TYPES] {
        let mut out = [0u8; TYPES];
        while c != 0 {
            let s = c.trailing_zeros() as usize;
            c &= c - 1;
            out[self.state_type[s] as usize] += 1;
        }
        out
    }

    pub fn move_index(&self, m: &Move) -> Option<usize> {
        self.moves.iter().position(|x| x == m)
    }
}

static TABLES: OnceBox<Tables> = OnceBox::new();

pub fn tables() -> &'static Tables {
    TABLES.get_or_init(|| Box::new(Tables::build()))
}
