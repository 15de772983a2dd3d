//! The three figure fixtures and the checks run by `check-figures`.

use induced_menger_core::colouring::{chromatic_number_exact, conflict_graph, one_outside_edge_violation, outside_edges, partition_outside_edges};
use induced_menger_core::disjoint::max_disjoint_count;
use induced_menger_core::graph::{PathCollection, ProblemInstance};
use induced_menger_core::oracle::{max_nonadjacent_paths, min_separator_bruteforce, OracleBudget};
use induced_menger_core::Result;
use serde::Serialize;

use crate::io::{parse, GraphDoc};

pub const FIG2: &str = include_str!("../fixtures/fig2.json");
pub const FIG4: &str = include_str!("../fixtures/fig4.json");
pub const FIG5: &str = include_str!("../fixtures/fig5.json");

pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub instance: ProblemInstance,
    pub paths: PathCollection,
}

fn load(name: &'static str, text: &'static str) -> Result<Fixture> {
    let doc: GraphDoc = parse(text, name)?;
    let instance = doc.instance()?;
    let paths = doc.paths()?;
    paths.validate_for(&instance)?;
    Ok(Fixture { name, text, instance, paths })
}

pub fn fixtures() -> Result<[Fixture; 3]> {
    Ok([load("fig2", FIG2)?, load("fig4", FIG4)?, load("fig5", FIG5)?])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FigureCheck {
    pub figure: &'static str,
    pub property: &'static str,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

struct Checks {
    figure: &'static str,
    out: Vec<FigureCheck>,
}

impl Checks {
    fn eq<T: ToString + PartialEq>(&mut self, property: &'static str, expected: T, observed: Result<T>) {
        let (observed, pass) = match observed {
            Ok(v) => (v.to_string(), v == expected),
            Err(e) => (format!("error: {e}"), false),
        };
        self.out.push(FigureCheck {
            figure: self.figure,
            property,
            expected: expected.to_string(),
            observed,
            pass,
        });
    }
}

fn separator_size(inst: &ProblemInstance, budget: &OracleBudget) -> Result<usize> {
    min_separator_bruteforce(inst, budget).map(|s| s.len())
}

/// Every claimed property of the figures, each recomputed from the fixture.
pub fn check_figures(budget: &OracleBudget) -> Result<Vec<FigureCheck>> {
    let [f2, f4, f5] = fixtures()?;
    let mut out = Vec::new();

    let mut c = Checks { figure: f2.name, out: Vec::new() };
    let g = &f2.instance.graph;
    c.eq("one outside edge per path vertex", true, Ok(one_outside_edge_violation(g, &f2.paths).is_none()));
    let cg = conflict_graph(g, &f2.paths);
    c.eq("conflict graph vertices", 7, cg.as_ref().map(|h| h.graph.n()).map_err(Clone::clone));
    c.eq("conflict graph edges", 11, cg.as_ref().map(|h| h.graph.edge_count()).map_err(Clone::clone));
    c.eq("conflict graph chromatic number", 4, cg.and_then(|h| chromatic_number_exact(&h.graph)));
    let part = partition_outside_edges(g, &f2.paths);
    c.eq("outside-edge classes", 4, part.as_ref().map(|p| p.class_count()).map_err(Clone::clone));
    let edges = outside_edges(g, &f2.paths).into_iter().collect();
    c.eq("classes are induced matchings", true, part.and_then(|p| p.validate(g, &edges)).map(|_| true));
    out.extend(c.out);

    let mut c = Checks { figure: f4.name, out: Vec::new() };
    let inst = &f4.instance;
    c.eq("given paths", 4, Ok(f4.paths.len()));
    c.eq("one outside edge per path vertex", true, Ok(one_outside_edge_violation(&inst.graph, &f4.paths).is_none()));
    c.eq("disjoint optimum", 4, Ok(max_disjoint_count(&inst.graph, &inst.x, &inst.y, None)));
    c.eq("minimum separator", 4, separator_size(inst, budget));
    c.eq("non-adjacent optimum", 1, max_nonadjacent_paths(inst, budget).map(|p| p.count));
    out.extend(c.out);

    let mut c = Checks { figure: f5.name, out: Vec::new() };
    let inst = &f5.instance;
    c.eq("maximum degree", 3, Ok(inst.graph.max_degree()));
    let off_path = outside_edges(&inst.graph, &f5.paths);
    let x_outside_edges = inst
        .x
        .iter()
        .map(|&v| off_path.iter().filter(|&&(a, b)| a == v || b == v).count())
        .min()
        .unwrap_or(0);
    c.eq("outside edges at every X vertex", 2, Ok(x_outside_edges));
    c.eq("disjoint optimum", 5, Ok(max_disjoint_count(&inst.graph, &inst.x, &inst.y, None)));
    c.eq("minimum separator", 5, separator_size(inst, budget));
    c.eq("non-adjacent optimum", 1, max_nonadjacent_paths(inst, budget).map(|p| p.count));
    out.extend(c.out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::normalize_graph_text;

    #[test]
    fn fixtures_round_trip_byte_identically() {
        for f in fixtures().unwrap() {
            assert_eq!(normalize_graph_text(f.text).unwrap(), f.text, "{}", f.name);
        }
    }

    #[test]
    fn fig2_labels_name_the_rows() {
        let [f2, _, _] = fixtures().unwrap();
        let g = &f2.instance.graph;
        let names: Vec<String> = f2.paths.paths.iter().map(|p| g.name(p[0])).collect();
        assert_eq!(names, ["A0", "B0", "C0"]);
    }
}
