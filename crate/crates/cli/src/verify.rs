//! The threaded closure run behind `verify-claim`, with on-disk checkpoints.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use induced_menger_core::pathsys::Move;
use induced_menger_core::search::{closure_from_s0, resume, tables, LevelSnapshot, SearchConfig, SearchReport};
use induced_menger_core::{Error, Result};
use serde::{Deserialize, Serialize};

use crate::io::{parse, to_canonical, CheckpointDoc};
use crate::par::RayonExecutor;

pub const CHECKPOINT_FILE: &str = "checkpoint.json";

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub threads: usize,
    pub checkpoint_dir: Option<PathBuf>,
    /// Continue from `checkpoint_dir` when it holds a checkpoint.
    pub resume: bool,
    pub pairs_only: bool,
    pub trim_minimal: bool,
    pub max_processed: Option<u64>,
    pub checkpoint_every: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            threads: 1,
            checkpoint_dir: None,
            resume: false,
            pairs_only: false,
            trim_minimal: true,
            max_processed: None,
            checkpoint_every: SearchConfig::default().checkpoint_every,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub empty_collection_reached: bool,
    pub processed: u64,
    pub frontier_peak: usize,
    pub levels: u32,
    pub kept: usize,
    pub move_count: usize,
    pub trim_minimal: bool,
    pub threads: usize,
    pub wall_time_ms: u64,
    pub fingerprint: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resumed_from_level: Option<u32>,
    pub version: String,
}

impl Certificate {
    fn new(r: SearchReport, threads: usize, resumed_from_level: Option<u32>) -> Certificate {
        Certificate {
            empty_collection_reached: r.empty_collection_reached,
            processed: r.processed,
            frontier_peak: r.frontier_peak,
            levels: r.levels,
            kept: r.kept,
            move_count: r.move_count,
            trim_minimal: r.trim_minimal,
            threads,
            wall_time_ms: r.wall_time_ms,
            fingerprint: r.fingerprint,
            resumed_from_level,
            version: crate::VERSION.to_string(),
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Input(format!("{}: {e}", path.display()))
}

fn save_checkpoint(dir: &Path, doc: &CheckpointDoc) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    let tmp = dir.join(format!("{CHECKPOINT_FILE}.tmp"));
    fs::write(&tmp, to_canonical(doc)).map_err(|e| io_error(&tmp, e))?;
    let dst = dir.join(CHECKPOINT_FILE);
    fs::rename(&tmp, &dst).map_err(|e| io_error(&dst, e))
}

fn load_checkpoint(dir: &Path, move_count: usize, trim_minimal: bool) -> Result<Option<LevelSnapshot>> {
    let path = dir.join(CHECKPOINT_FILE);
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&path).map_err(|e| io_error(&path, e))?;
    let doc: CheckpointDoc = parse(&text, "checkpoint")?;
    if doc.move_count != move_count || doc.trim_minimal != trim_minimal {
        return Err(Error::Input(format!(
            "{} was written for {} moves with trim_minimal = {}",
            path.display(),
            doc.move_count,
            doc.trim_minimal
        )));
    }
    doc.snapshot().map(Some)
}

pub fn run_verify(opts: &VerifyOptions) -> Result<Certificate> {
    let moves: Option<Vec<usize>> = opts.pairs_only.then(|| {
        let t = tables();
        (0..t.moves.len()).filter(|&i| matches!(t.moves[i], Move::Pair(..))).collect()
    });
    let move_count = moves.as_ref().map_or(tables().moves.len(), Vec::len);
    let config = SearchConfig {
        moves,
        trim_minimal: opts.trim_minimal,
        max_processed: opts.max_processed,
        checkpoint_every: opts.checkpoint_every,
    };
    let exec = RayonExecutor::new(opts.threads).map_err(|e| Error::Input(format!("thread pool: {e}")))?;
    let start = Instant::now();
    let mut write_error = None;
    let mut observer = |s: &LevelSnapshot| {
        if let (Some(dir), None) = (&opts.checkpoint_dir, &write_error) {
            if let Err(e) = save_checkpoint(dir, &CheckpointDoc::new(s, move_count, opts.trim_minimal)) {
                write_error = Some(e);
            }
        }
    };
    let snapshot = match (&opts.checkpoint_dir, opts.resume) {
        (Some(dir), true) => load_checkpoint(dir, move_count, opts.trim_minimal)?,
        _ => None,
    };
    let resumed_from_level = snapshot.as_ref().map(|s| s.level);
    let mut report = match snapshot {
        Some(s) => resume(s, &config, &exec, &mut observer)?,
        None => closure_from_s0(&config, &exec, &mut observer)?,
    };
    if let Some(e) = write_error {
        return Err(e);
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(Certificate::new(report, exec.threads(), resumed_from_level))
}
