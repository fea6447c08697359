//! Joining plane bipartite graphs into a chain with one new edge between
//! consecutive parts, drawn in their exteriors.

use crate::error::{Error, Result};
use crate::plane_graph::{trace, PlaneBipartiteGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkedGraph {
    pub graph: PlaneBipartiteGraph,
    /// First vertex id of each part.
    pub vertex_offsets: Vec<usize>,
    /// First edge id of each part.
    pub edge_offsets: Vec<usize>,
    /// The connecting edges, `link_edges[i]` joining part `i` to part `i + 1`.
    pub link_edges: Vec<usize>,
}

/// Links `parts[i]` to `parts[i + 1]` by an edge between the
/// lexicographically first opposite-color pair of outer vertices.
pub fn link_components(parts: &[PlaneBipartiteGraph]) -> Result<LinkedGraph> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidInput("nothing to link".into()));
    };
    let mut graph = first.clone();
    let mut vertex_offsets = vec![0];
    let mut edge_offsets = vec![0];
    let mut link_edges = Vec::new();
    for (i, next) in parts.iter().enumerate().skip(1) {
        let lo = vertex_offsets[i - 1];
        let hi = graph.vertex_count();
        let left = outer_vertices(&graph)
            .into_iter()
            .filter(|&v| v >= lo && v < hi);
        let right = outer_vertices(next);
        let (u, w) = left
            .flat_map(|u| right.iter().map(move |&w| (u, w)))
            .find(|&(u, w)| graph.color(u) != next.color(w))
            .ok_or(Error::ColorClash {
                left: i - 1,
                right: i,
            })?;
        vertex_offsets.push(hi);
        edge_offsets.push(graph.edge_count());
        let (g, link) = join(&graph, next, u, w)?;
        graph = g;
        link_edges.push(link);
    }
    Ok(LinkedGraph {
        graph,
        vertex_offsets,
        edge_offsets,
        link_edges,
    })
}

fn outer_vertices(g: &PlaneBipartiteGraph) -> Vec<usize> {
    let mut vs: Vec<usize> = g
        .face(g.outer_face())
        .boundary
        .iter()
        .map(|d| d.from)
        .collect();
    if vs.is_empty() {
        // a single vertex has an empty outer walk
        vs = (0..g.vertex_count()).collect();
    }
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Position in the rotation at `v` where a new edge enters the outer face.
fn outer_corner(g: &PlaneBipartiteGraph, v: usize) -> usize {
    let rot = g.rotation(v);
    let walk = &g.face(g.outer_face()).boundary;
    match walk.iter().find(|d| d.to == v) {
        // the walk leaves along the predecessor of the arriving edge; slot in between
        Some(d) => rot
            .iter()
            .position(|&e| e == d.edge)
            .expect("arriving edge is incident"),
        None => rot.len(),
    }
}

fn join(
    a: &PlaneBipartiteGraph,
    b: &PlaneBipartiteGraph,
    u: usize,
    w: usize,
) -> Result<(PlaneBipartiteGraph, usize)> {
    let nv = a.vertex_count();
    let ne = a.edge_count();
    let link = ne + b.edge_count();
    let w_new = w + nv;

    let mut colors = a.colors().to_vec();
    colors.extend_from_slice(b.colors());
    let mut edges = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(x, y)| (x + nv, y + nv)));
    edges.push((u, w_new));

    let mut rotation = a.rotations().to_vec();
    rotation.extend(
        b.rotations()
            .iter()
            .map(|r| r.iter().map(|&e| e + ne).collect::<Vec<_>>()),
    );
    rotation[u].insert(outer_corner(a, u), link);
    rotation[w_new].insert(outer_corner(b, w), link);

    // both sides of the new bridge belong to the merged outer face
    let (_, dart_face) = trace(&edges, &rotation);
    let outer = dart_face[2 * link];
    let g = PlaneBipartiteGraph::new(colors, edges, rotation, Some(outer))
        .map_err(|e| Error::EmbeddingConflict(format!("linking {u} to {w}: {e}")))?;
    Ok((g, link))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::fixtures;
    use crate::matching;

    #[test]
    fn two_hexagons() {
        let h = fixtures::hexagon();
        let l = link_components(&[h.clone(), h]).unwrap();
        assert_eq!(l.graph.vertex_count(), 12);
        assert_eq!(l.graph.inner_face_count(), 2);
        let ms = matching::enumerate_perfect_matchings(&l.graph, &Caps::default()).unwrap();
        assert_eq!(ms.len(), 4);
        assert_eq!(matching::forbidden_edges(&l.graph, &ms), l.link_edges);
    }

    #[test]
    fn single_part_is_unchanged() {
        let h = fixtures::ladder();
        let l = link_components(std::slice::from_ref(&h)).unwrap();
        assert_eq!(l.graph, h);
        assert!(l.link_edges.is_empty());
    }

    #[test]
    fn three_parts_keep_every_face() {
        let parts = [fixtures::hexagon(), fixtures::ladder(), fixtures::hexagon()];
        let l = link_components(&parts).unwrap();
        assert_eq!(l.graph.inner_face_count(), 4);
        assert_eq!(l.link_edges.len(), 2);
        let ms = matching::enumerate_perfect_matchings(&l.graph, &Caps::default()).unwrap();
        assert_eq!(ms.len(), 2 * 3 * 2);
    }
}
