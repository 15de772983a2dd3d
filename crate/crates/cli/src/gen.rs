//! Seeded random instances for `pathsys random` and the test suites.

use induced_menger_core::disjoint::max_disjoint_paths;
use induced_menger_core::graph::{edge, Graph, PathCollection, ProblemInstance, Vertex};
use induced_menger_core::pathsys::{Move, PathSystem};
use rand::seq::SliceRandom;
use rand::Rng;

/// Between zero and `max_len` moves drawn uniformly from all 94.
pub fn random_moves<R: Rng>(rng: &mut R, max_len: usize) -> Vec<Move> {
    let all = Move::all();
    let len = rng.random_range(0..=max_len);
    (0..len).map(|_| all[rng.random_range(0..all.len())].clone()).collect()
}

fn shuffled_ids<R: Rng>(rng: &mut R, n: usize) -> Vec<Vertex> {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

fn relabel(g: &Graph, perm: &[Vertex]) -> Graph {
    Graph::from_edges(g.n(), g.edges().into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

fn map_paths(paths: &[Vec<Vertex>], perm: &[Vertex]) -> Vec<Vec<Vertex>> {
    paths.iter().map(|p| p.iter().map(|&v| perm[v]).collect()).collect()
}

/// The same system under a random renaming of its vertices.
pub fn relabel_system<R: Rng>(rng: &mut R, ps: &PathSystem) -> PathSystem {
    let perm = shuffled_ids(rng, ps.h.n());
    PathSystem::from_paths(relabel(&ps.h, &perm), map_paths(&ps.q, &perm)).unwrap()
}

/// An instance from a system (`X = A`, `Y = B`), with `subdivisions` random
/// path or outside edges subdivided and the vertices renamed at random.
pub fn instance_from_system<R: Rng>(
    rng: &mut R,
    ps: &PathSystem,
    subdivisions: usize,
) -> (ProblemInstance, PathCollection) {
    let mut g = ps.h.clone();
    let mut paths = ps.q.clone();
    for _ in 0..subdivisions {
        let edges = g.edges();
        if edges.is_empty() {
            break;
        }
        let (u, v) = edges[rng.random_range(0..edges.len())];
        g.remove_edge(u, v);
        let w = g.add_vertex();
        g.add_edge(u, w).unwrap();
        g.add_edge(w, v).unwrap();
        for p in &mut paths {
            if let Some(i) = p.windows(2).position(|s| edge(s[0], s[1]) == (u, v)) {
                p.insert(i + 1, w);
            }
        }
    }
    let perm = shuffled_ids(rng, g.n());
    let paths = map_paths(&paths, &perm);
    let x = paths.iter().map(|p| p[0]).collect();
    let y = paths.iter().map(|p| *p.last().unwrap()).collect();
    let inst = ProblemInstance::new(relabel(&g, &perm), x, y).unwrap();
    (inst, PathCollection::new(paths))
}

/// Shape of [`random_path_instance`].
#[derive(Clone, Copy, Debug)]
pub struct PathInstanceShape {
    pub paths: usize,
    /// Inclusive bounds on the vertex count of each path.
    pub min_len: usize,
    pub max_len: usize,
    /// Attempts at adding an outside edge between path vertices.
    pub outside_attempts: usize,
    /// Cap on the outside edges at one path vertex.
    pub max_outside_per_vertex: usize,
    /// Extra vertices off the paths, each joined to a few random vertices.
    pub extra_vertices: usize,
}

/// Disjoint `X`-`Y` paths with random edges added between and off them.
pub fn random_path_instance<R: Rng>(rng: &mut R, shape: &PathInstanceShape) -> (ProblemInstance, PathCollection) {
    let mut g = Graph::new(0);
    let mut paths = Vec::new();
    for _ in 0..shape.paths {
        let len = rng.random_range(shape.min_len..=shape.max_len);
        let p: Vec<Vertex> = (0..len).map(|_| g.add_vertex()).collect();
        for w in p.windows(2) {
            g.add_edge(w[0], w[1]).unwrap();
        }
        paths.push(p);
    }
    let on_paths = g.n();
    let mut outside = vec![0usize; on_paths];
    for _ in 0..shape.outside_attempts {
        let (u, v) = (rng.random_range(0..on_paths), rng.random_range(0..on_paths));
        if u == v || g.has_edge(u, v) || outside[u] >= shape.max_outside_per_vertex || outside[v] >= shape.max_outside_per_vertex {
            continue;
        }
        g.add_edge(u, v).unwrap();
        outside[u] += 1;
        outside[v] += 1;
    }
    for _ in 0..shape.extra_vertices {
        let w = g.add_vertex();
        for _ in 0..rng.random_range(1..=3) {
            let u = rng.random_range(0..w);
            g.add_edge(u, w).unwrap();
        }
    }
    let perm = shuffled_ids(rng, g.n());
    let paths = map_paths(&paths, &perm);
    let x = paths.iter().map(|p| p[0]).collect();
    let y = paths.iter().map(|p| *p.last().unwrap()).collect();
    (ProblemInstance::new(relabel(&g, &perm), x, y).unwrap(), PathCollection::new(paths))
}

/// Vertex-disjoint union; the parts' vertices are numbered consecutively.
pub fn disjoint_union(parts: &[(ProblemInstance, PathCollection)]) -> (ProblemInstance, PathCollection) {
    let mut g = Graph::new(0);
    let (mut x, mut y, mut paths) = (Vec::new(), Vec::new(), Vec::new());
    for (inst, pc) in parts {
        let off = g.n();
        for _ in 0..inst.graph.n() {
            g.add_vertex();
        }
        for (u, v) in inst.graph.edges() {
            g.add_edge(u + off, v + off).unwrap();
        }
        x.extend(inst.x.iter().map(|v| v + off));
        y.extend(inst.y.iter().map(|v| v + off));
        paths.extend(pc.paths.iter().map(|p| p.iter().map(|v| v + off).collect::<Vec<_>>()));
    }
    (ProblemInstance::new(g, x, y).unwrap(), PathCollection::new(paths))
}

/// A `rows × cols` grid with at most one diagonal per cell and some edges
/// deleted, so planar by construction; `X` is the left column, `Y` the
/// right one, and the paths are a maximum disjoint family between them.
pub fn random_planar_instance<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    diagonal_p: f64,
    delete_p: f64,
) -> (ProblemInstance, PathCollection) {
    let id = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if i + 1 < rows && j + 1 < cols && rng.random_bool(diagonal_p) {
                if rng.random_bool(0.5) {
                    edges.push((id(i, j), id(i + 1, j + 1)));
                } else {
                    edges.push((id(i, j + 1), id(i + 1, j)));
                }
            }
        }
    }
    edges.retain(|_| !rng.random_bool(delete_p));
    let g = Graph::from_edges(rows * cols, edges).unwrap();
    let x = (0..rows).map(|i| id(i, 0)).collect();
    let y = (0..rows).map(|i| id(i, cols - 1)).collect();
    let inst = ProblemInstance::new(g, x, y).unwrap();
    let pc = max_disjoint_paths(&inst);
    (inst, pc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use induced_menger_core::colouring::one_outside_edge_violation;
    use induced_menger_core::pathsys::replay;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn system_instances_are_legal() {
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..20 {
            let ps = replay(&random_moves(&mut rng, 6)).unwrap();
            let (inst, pc) = instance_from_system(&mut rng, &ps, 4);
            pc.validate_for(&inst).unwrap();
            assert_eq!(pc.len(), 5);
            assert!(one_outside_edge_violation(&inst.graph, &pc).is_none());
        }
    }

    #[test]
    fn path_instances_respect_the_cap() {
        let mut rng = StdRng::seed_from_u64(2);
        let shape = PathInstanceShape {
            paths: 16,
            min_len: 2,
            max_len: 6,
            outside_attempts: 80,
            max_outside_per_vertex: 1,
            extra_vertices: 0,
        };
        let (inst, pc) = random_path_instance(&mut rng, &shape);
        pc.validate_for(&inst).unwrap();
        assert!(one_outside_edge_violation(&inst.graph, &pc).is_none());
        let (u, upc) = disjoint_union(&[(inst.clone(), pc.clone()), (inst, pc)]);
        upc.validate_for(&u).unwrap();
        assert_eq!(upc.len(), 32);
    }

    #[test]
    fn planar_paths_are_disjoint() {
        let mut rng = StdRng::seed_from_u64(3);
        let (inst, pc) = random_planar_instance(&mut rng, 8, 5, 0.5, 0.1);
        pc.validate_for(&inst).unwrap();
        assert!(pc.len() <= 8);
    }
}
