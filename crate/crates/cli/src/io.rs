//! JSON documents shared by every subcommand.
//!
//! Writers are canonical: top-level keys in a fixed order, one per line,
//! values compact, edges sorted. Loading and saving a canonical file gives
//! the same bytes back.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use induced_menger_core::graph::{Graph, PathCollection, ProblemInstance, Vertex};
use induced_menger_core::pathsys::{Move, PathSystem, PATHS};
use induced_menger_core::search::LevelSnapshot;
use induced_menger_core::{Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The graph format: `{"n", "edges", "labels"?, "X"?, "Y"?, "paths"?}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<Vertex, String>>,
    #[serde(rename = "X", default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<Vertex>>,
    #[serde(rename = "Y", default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths: Option<Vec<Vec<Vertex>>>,
}

impl GraphDoc {
    pub fn graph(&self) -> Result<Graph> {
        let mut g = Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        for (&v, name) in self.labels.iter().flatten() {
            g.check_vertex(v)?;
            g.set_label(v, name.clone());
        }
        Ok(g)
    }

    pub fn instance(&self) -> Result<ProblemInstance> {
        let (Some(x), Some(y)) = (&self.x, &self.y) else {
            return Err(Error::Input("the input needs both \"X\" and \"Y\"".into()));
        };
        ProblemInstance::new(self.graph()?, x.clone(), y.clone())
    }

    pub fn paths(&self) -> Result<PathCollection> {
        self.paths
            .clone()
            .map(PathCollection::new)
            .ok_or_else(|| Error::Input("the input needs \"paths\"".into()))
    }

    pub fn from_graph(g: &Graph) -> GraphDoc {
        GraphDoc {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: (!g.labels().is_empty()).then(|| g.labels().clone()),
            ..GraphDoc::default()
        }
    }

    pub fn from_instance(inst: &ProblemInstance, pc: Option<&PathCollection>) -> GraphDoc {
        GraphDoc {
            x: Some(inst.x.clone()),
            y: Some(inst.y.clone()),
            paths: pc.map(|pc| pc.paths.clone()),
            ..GraphDoc::from_graph(&inst.graph)
        }
    }
}

/// `{"graph", "A", "B", "Q"}`; `A` and `B` must be the path ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathSystemDoc {
    pub graph: GraphDoc,
    #[serde(rename = "A")]
    pub a: Vec<Vertex>,
    #[serde(rename = "B")]
    pub b: Vec<Vertex>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<Vertex>>,
}

impl PathSystemDoc {
    pub fn from_system(ps: &PathSystem) -> PathSystemDoc {
        PathSystemDoc {
            graph: GraphDoc::from_graph(&ps.h),
            a: ps.a.clone(),
            b: ps.b.clone(),
            q: ps.q.clone(),
        }
    }

    pub fn system(&self) -> Result<PathSystem> {
        let ps = PathSystem::from_paths(self.graph.graph()?, self.q.clone())?;
        let sorted = |v: &[Vertex]| {
            let mut v = v.to_vec();
            v.sort_unstable();
            v
        };
        if sorted(&self.a) != ps.a || sorted(&self.b) != ps.b {
            return Err(Error::Input("\"A\" and \"B\" must be the first and last vertices of \"Q\"".into()));
        }
        ps.validate()?;
        Ok(ps)
    }
}

/// A move with 1-based path numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum MoveDoc {
    Pair([usize; 2]),
    Cycle(Vec<usize>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MovesDoc {
    pub moves: Vec<MoveDoc>,
}

fn zero_based(ix: &[usize]) -> Result<Vec<usize>> {
    ix.iter()
        .map(|&i| match i {
            1..=PATHS => Ok(i - 1),
            _ => Err(Error::Input(format!("path number {i} is outside 1..={PATHS}"))),
        })
        .collect()
}

impl MovesDoc {
    pub fn from_moves(moves: &[Move]) -> MovesDoc {
        let moves = moves
            .iter()
            .map(|m| {
                let ix: Vec<usize> = m.indices().iter().map(|i| i + 1).collect();
                match m {
                    Move::Pair(..) => MoveDoc::Pair([ix[0], ix[1]]),
                    Move::Cycle(_) => MoveDoc::Cycle(ix),
                }
            })
            .collect();
        MovesDoc { moves }
    }

    pub fn moves(&self) -> Result<Vec<Move>> {
        self.moves
            .iter()
            .map(|m| match m {
                MoveDoc::Pair(p) => {
                    let ix = zero_based(p)?;
                    Move::pair(ix[0], ix[1])
                }
                MoveDoc::Cycle(c) => Move::cycle(&zero_based(c)?),
            })
            .collect()
    }
}

/// A search snapshot with collections written as 32-digit hex strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckpointDoc {
    pub version: String,
    pub move_count: usize,
    pub trim_minimal: bool,
    pub level: u32,
    pub frontier_peak: usize,
    pub frontier: Vec<String>,
    pub kept: Vec<String>,
    pub known: Vec<String>,
    pub processed: Vec<String>,
}

fn hex_all(cs: &[u128]) -> Vec<String> {
    cs.iter().map(|c| format!("{c:032x}")).collect()
}

fn unhex_all(cs: &[String]) -> Result<Vec<u128>> {
    cs.iter()
        .map(|s| u128::from_str_radix(s, 16).map_err(|e| Error::Input(format!("bad collection {s:?}: {e}"))))
        .collect()
}

impl CheckpointDoc {
    pub fn new(s: &LevelSnapshot, move_count: usize, trim_minimal: bool) -> CheckpointDoc {
        CheckpointDoc {
            version: crate::VERSION.to_string(),
            move_count,
            trim_minimal,
            level: s.level,
            frontier_peak: s.frontier_peak,
            frontier: hex_all(&s.frontier),
            kept: hex_all(&s.kept),
            known: hex_all(&s.known),
            processed: hex_all(&s.processed),
        }
    }

    pub fn snapshot(&self) -> Result<LevelSnapshot> {
        Ok(LevelSnapshot {
            level: self.level,
            frontier: unhex_all(&self.frontier)?,
            kept: unhex_all(&self.kept)?,
            known: unhex_all(&self.known)?,
            processed: unhex_all(&self.processed)?,
            frontier_peak: self.frontier_peak,
        })
    }
}

/// Pretty-prints an object with one top-level key per line and compact
/// values; anything else is written compactly.
pub fn to_canonical<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents serialize");
    let Value::Object(map) = v else {
        return format!("{v}\n");
    };
    if map.is_empty() {
        return "{}\n".into();
    }
    let mut out = String::from("{\n");
    for (i, (k, v)) in map.iter().enumerate() {
        let sep = if i + 1 < map.len() { "," } else { "" };
        writeln!(out, "  {}: {}{sep}", Value::String(k.clone()), v).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("cannot parse {what}: {e}")))
}

/// Loads a graph file and writes it back canonically, as a check.
pub fn normalize_graph_text(text: &str) -> Result<String> {
    let doc: GraphDoc = parse(text, "graph JSON")?;
    let inst_doc = match (&doc.x, &doc.y) {
        (Some(_), Some(_)) => {
            let inst = doc.instance()?;
            let pc = doc.paths.as_ref().map(|p| PathCollection::new(p.clone()));
            GraphDoc::from_instance(&inst, pc.as_ref())
        }
        _ => GraphDoc {
            x: doc.x.clone(),
            y: doc.y.clone(),
            paths: doc.paths.clone(),
            ..GraphDoc::from_graph(&doc.graph()?)
        },
    };
    Ok(to_canonical(&inst_doc))
}
