use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use sha2::{Digest, Sha256};

use super::{canonical, collection_step, dominates, s0, tables, Collection};
use crate::error::{Error, Result};

/// Runs independent jobs, possibly in parallel; results come back in job
/// order so the search stays deterministic.
pub trait Executor: Sync {
    fn run<R, F>(&self, jobs: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send;
}

pub struct SerialExecutor;

impl Executor for SerialExecutor {
    fn run<R, F>(&self, jobs: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        (0..jobs).map(f).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Move indices to close under; `None` means all 94.
    pub moves: Option<Vec<usize>>,
    /// Drop collections that contain a permuted copy of a kept one.
    pub trim_minimal: bool,
    /// Abort with a budget error once more collections would be expanded.
    pub max_processed: Option<u64>,
    /// Snapshot at the first level boundary after this many expansions.
    pub checkpoint_every: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            moves: None,
            trim_minimal: true,
            max_processed: None,
            checkpoint_every: 10_000,
        }
    }
}

/// Everything needed to continue a search from a level boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSnapshot {
    pub level: u32,
    pub frontier: Vec<Collection>,
    pub kept: Vec<Collection>,
    pub known: Vec<Collection>,
    pub processed: Vec<Collection>,
    pub frontier_peak: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub processed: u64,
    pub frontier_peak: usize,
    pub empty_collection_reached: bool,
    pub levels: u32,
    /// Size of the final antichain of kept collections.
    pub kept: usize,
    pub move_count: usize,
    pub trim_minimal: bool,
    /// Filled in by callers that keep a clock.
    pub wall_time_ms: u64,
    /// SHA-256 over the sorted processed collections, hex.
    pub fingerprint: String,
}

fn fingerprint(processed: &[Collection]) -> String {
    let mut sorted = processed.to_vec();
    sorted.sort_unstable();
    let mut h = Sha256::new();
    for c in &sorted {
        h.update(c.to_le_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Closes `canonical(S0)` under `g(·, m)` for the configured moves, keeping
/// one canonical representative per permutation class and, with
/// `trim_minimal`, only collections not containing a permuted copy of
/// another kept one.
///
/// The search is level-synchronous: a level's children are generated and
/// screened in parallel against the state at the start of the level, then
/// merged in `(size, value)` order. The outcome does not depend on the
/// executor. `observer` sees a snapshot at level boundaries every
/// `checkpoint_every` expansions.
pub fn closure_from_s0<E: Executor>(
    config: &SearchConfig,
    exec: &E,
    observer: &mut dyn FnMut(&LevelSnapshot),
) -> Result<SearchReport> {
    let start = canonical(s0());
    let snapshot = LevelSnapshot {
        level: 0,
        frontier: alloc::vec![start],
        kept: alloc::vec![start],
        known: alloc::vec![start],
        processed: Vec::new(),
        frontier_peak: 1,
    };
    resume(snapshot, config, exec, observer)
}

/// Continues a search from a snapshot taken by [`closure_from_s0`].
pub fn resume<E: Executor>(
    snapshot: LevelSnapshot,
    config: &SearchConfig,
    exec: &E,
    observer: &mut dyn FnMut(&LevelSnapshot),
) -> Result<SearchReport> {
    let moves: Vec<usize> = config
        .moves
        .clone()
        .unwrap_or_else(|| (0..tables().moves.len()).collect());
    let LevelSnapshot {
        mut level,
        mut frontier,
        mut kept,
        known,
        mut processed,
        mut frontier_peak,
    } = snapshot;
    let mut known: BTreeSet<Collection> = known.into_iter().collect();
    let mut since_checkpoint = 0u64;
    let mut empty = false;

    while !frontier.is_empty() {
        if let Some(max) = config.max_processed {
            if (processed.len() + frontier.len()) as u64 > max {
                return Err(Error::budget(format!(
                    "expanding level {level} would exceed {max} processed collections"
                )));
            }
        }
        let children: Vec<Vec<Collection>> =
            exec.run(frontier.len(), |i| moves.iter().map(|&m| collection_step(frontier[i], m)).collect());
        processed.extend(frontier.iter().copied());
        since_checkpoint += frontier.len() as u64;

        let mut fresh: Vec<Collection> = children.into_iter().flatten().filter(|c| !known.contains(c)).collect();
        fresh.sort_unstable_by_key(|&c| (c.count_ones(), c));
        fresh.dedup();
        if fresh.first() == Some(&0) {
            empty = true;
            level += 1;
            break;
        }
        known.extend(fresh.iter().copied());

        let next = if config.trim_minimal {
            let snapshot_kept = &kept;
            let survives = exec.run(fresh.len(), |i| !snapshot_kept.iter().any(|&a| dominates(a, fresh[i])));
            let mut added: Vec<Collection> = Vec::new();
            for (c, ok) in fresh.iter().zip(survives) {
                if ok && !added.iter().any(|&a| dominates(a, *c)) {
                    added.push(*c);
                }
            }
            let added_ref = &added;
            let stays = exec.run(kept.len(), |i| !added_ref.iter().any(|&c| dominates(c, kept[i])));
            kept = kept.iter().zip(stays).filter(|(_, s)| *s).map(|(&a, _)| a).collect();
            kept.extend(added.iter().copied());
            added
        } else {
            kept.extend(fresh.iter().copied());
            fresh
        };
        frontier = next;
        frontier_peak = frontier_peak.max(frontier.len());
        level += 1;

        if since_checkpoint >= config.checkpoint_every && !frontier.is_empty() {
            since_checkpoint = 0;
            observer(&LevelSnapshot {
                level,
                frontier: frontier.clone(),
                kept: kept.clone(),
                known: known.iter().copied().collect(),
                processed: processed.clone(),
                frontier_peak,
            });
        }
    }

    Ok(SearchReport {
        processed: processed.len() as u64,
        frontier_peak,
        empty_collection_reached: empty,
        levels: level,
        kept: kept.len(),
        move_count: moves.len(),
        trim_minimal: config.trim_minimal,
        wall_time_ms: 0,
        fingerprint: fingerprint(&processed),
    })
}
