//! Small hand-built graphs shared by unit tests.

use crate::plane_graph::{Color, PlaneBipartiteGraph};

fn alternating(n: usize) -> Vec<Color> {
    (0..n)
        .map(|i| {
            if i % 2 == 0 {
                Color::White
            } else {
                Color::Black
            }
        })
        .collect()
}

/// Regular hexagon, vertex 0 at the top and white, numbered clockwise.
pub(crate) fn hexagon() -> PlaneBipartiteGraph {
    let points = [(0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1)];
    let edges = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    PlaneBipartiteGraph::from_straight_line(alternating(6), edges, &points).unwrap()
}

/// Two unit squares side by side (the 2x3 grid graph).
pub(crate) fn ladder() -> PlaneBipartiteGraph {
    // 0 1 2 on top, 5 4 3 below
    let points = [(0, 1), (1, 1), (2, 1), (2, 0), (1, 0), (0, 0)];
    let edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)];
    PlaneBipartiteGraph::from_straight_line(alternating(6), edges, &points).unwrap()
}

/// A square inside an octagon, joined by two forbidden edges. Not weakly
/// elementary: the octagon is alternating but its interior is not elementary.
pub(crate) fn square_in_octagon() -> PlaneBipartiteGraph {
    let points = [
        (-3, 0),
        (-3, 3),
        (0, 3),
        (3, 3),
        (3, 0),
        (3, -3),
        (0, -3),
        (-3, -3),
        (-1, 0),
        (0, 1),
        (1, 0),
        (0, -1),
    ];
    let mut colors: Vec<Color> = (0..8)
        .map(|i| {
            if i % 2 == 0 {
                Color::Black
            } else {
                Color::White
            }
        })
        .collect();
    colors.extend(alternating(4));
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend((0..4).map(|i| (8 + i, 8 + (i + 1) % 4)));
    edges.push((8, 0));
    edges.push((10, 4));
    PlaneBipartiteGraph::from_straight_line(colors, edges, &points).unwrap()
}
