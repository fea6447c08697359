//! Truncated parallelograms: rows of hexagons stacked upward, each row
//! starting half a cell to the left of the one below.
//!
//! Hexagons are pointy-topped on integer coordinates; hexagon `(i, j)`
//! (1-based, row 1 at the bottom) is centred at `(2(j-1) - (i-1), 3(i-1))`.
//! Valleys (bottom, upper-left and upper-right corners) are white.

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::lattice::{order_ideal_lattice, FinitePoset, IdealLattice};
use crate::matching::{self, Matching, Orientation};
use crate::plane_graph::{Color, PlaneBipartiteGraph};
use crate::ztransform::{extremal_matchings, MatchingPoset, ZDigraph};

// corner offsets in clockwise order from the top
const CORNERS: [(i64, i64); 6] = [(0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1)];
const LOWER_RIGHT: usize = 2;
const BOTTOM: usize = 3;
const LOWER_LEFT: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeDirection {
    Vertical,
    /// Left-low to right-up.
    Rising,
    /// Left-up to right-low.
    Falling,
}

/// A truncated parallelogram together with its drawing data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexSystem {
    pub rows: Vec<usize>,
    pub graph: PlaneBipartiteGraph,
    /// `(row, column)` of each hexagon, 1-based, row by row.
    pub hexagons: Vec<(usize, usize)>,
    /// Inner face of each hexagon.
    pub face_of_hex: Vec<usize>,
    pub edge_direction: Vec<EdgeDirection>,
    /// Vertical left edges of the first column and the slanted edges joining them.
    pub left_perimeter: Vec<usize>,
    /// Lower edges of the first row.
    pub bottom_perimeter: Vec<usize>,
    /// Left vertical edge of hexagon `(1, 1)`; lies only in the root matching.
    pub forcing_edge: usize,
    hex_edges: Vec<[usize; 6]>,
}

pub fn validate_rows(rows: &[usize]) -> Result<()> {
    let monotone = rows.windows(2).all(|w| w[0] >= w[1]);
    if rows.is_empty() || rows.contains(&0) || !monotone {
        return Err(Error::InvalidRowLengths(rows.to_vec()));
    }
    Ok(())
}

/// `L(r_1, ..., r_m)`; the first row is the longest.
pub fn truncated_parallelogram(rows: &[usize], caps: &Caps) -> Result<HexSystem> {
    validate_rows(rows)?;
    let hexagons: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (1..=r).map(move |j| (i + 1, j)))
        .collect();
    caps::check("inner faces", hexagons.len(), caps.max_inner_faces)?;

    let mut vertex_at: HashMap<(i64, i64), usize> = HashMap::new();
    let mut points = Vec::new();
    let mut colors = Vec::new();
    let mut edge_at: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut edge_direction = Vec::new();
    let mut hex_edges = Vec::new();
    for &(i, j) in &hexagons {
        let cx = 2 * (j as i64 - 1) - (i as i64 - 1);
        let cy = 3 * (i as i64 - 1);
        let corner: Vec<usize> = CORNERS
            .iter()
            .enumerate()
            .map(|(k, &(dx, dy))| {
                let p = (cx + dx, cy + dy);
                *vertex_at.entry(p).or_insert_with(|| {
                    points.push(p);
                    colors.push(if k % 2 == 1 {
                        Color::White
                    } else {
                        Color::Black
                    });
                    points.len() - 1
                })
            })
            .collect();
        let mut ids = [0; 6];
        for k in 0..6 {
            let (a, b) = (corner[k], corner[(k + 1) % 6]);
            let key = (a.min(b), a.max(b));
            ids[k] = *edge_at.entry(key).or_insert_with(|| {
                edges.push(key);
                let (pa, pb) = (points[a], points[b]);
                edge_direction.push(if pa.0 == pb.0 {
                    EdgeDirection::Vertical
                } else if (pa.0 < pb.0) == (pa.1 < pb.1) {
                    EdgeDirection::Rising
                } else {
                    EdgeDirection::Falling
                });
                edges.len() - 1
            });
        }
        hex_edges.push(ids);
    }
    caps::check("vertices", points.len(), caps.max_vertices)?;
    let graph = PlaneBipartiteGraph::from_straight_line(colors, edges, &points)?;

    // edge k of a hexagon runs from corner k to corner k+1 clockwise
    let face_of_hex = hex_edges
        .iter()
        .map(|ids| {
            let e = ids[LOWER_LEFT];
            let from = graph.edges()[e];
            let lower_left = if points[from.0].1 < points[from.1].1 {
                from.0
            } else {
                from.1
            };
            graph.face_right_of(e, lower_left)
        })
        .collect();
    let mut left_perimeter = Vec::new();
    let mut bottom_perimeter = Vec::new();
    for (h, &(i, j)) in hexagons.iter().enumerate() {
        if j == 1 {
            left_perimeter.push(hex_edges[h][LOWER_LEFT]);
            if i > 1 {
                left_perimeter.push(hex_edges[h][BOTTOM]);
            }
        }
        if i == 1 {
            bottom_perimeter.push(hex_edges[h][BOTTOM]);
            bottom_perimeter.push(hex_edges[h][LOWER_RIGHT]);
        }
    }
    left_perimeter.sort_unstable();
    bottom_perimeter.sort_unstable();
    let forcing_edge = hex_edges[0][LOWER_LEFT];
    Ok(HexSystem {
        rows: rows.to_vec(),
        graph,
        hexagons,
        face_of_hex,
        edge_direction,
        left_perimeter,
        bottom_perimeter,
        forcing_edge,
        hex_edges,
    })
}

/// Every valid row profile with at most `max_hexagons` hexagons in total,
/// in lexicographic order.
pub fn row_profiles(max_hexagons: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, budget: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
        for r in 1..=cap.min(budget) {
            prefix.push(r);
            out.push(prefix.clone());
            extend(prefix, budget - r, r, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_hexagons, max_hexagons, &mut out);
    out.sort();
    out
}

/// `L(m; n)`: `m` rows of `n` hexagons.
pub fn parallelogram(m: usize, n: usize, caps: &Caps) -> Result<HexSystem> {
    truncated_parallelogram(&vec![n; m], caps)
}

/// `T_m = L(m, m-1, ..., 1)`.
pub fn prolate_triangle(m: usize, caps: &Caps) -> Result<HexSystem> {
    truncated_parallelogram(&(1..=m).rev().collect::<Vec<_>>(), caps)
}

/// Hexagon poset: `h_ij ⪯ h_kl` iff `i ≤ k` and `j ≤ l`. Elements follow
/// the row-by-row hexagon order.
pub fn hexagon_poset(rows: &[usize]) -> Result<FinitePoset> {
    validate_rows(rows)?;
    let hexes: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (1..=r).map(move |j| (i + 1, j)))
        .collect();
    let labels = hexes.iter().map(|(i, j)| format!("h({i},{j})")).collect();
    FinitePoset::from_leq(labels, |a, b| {
        hexes[a].0 <= hexes[b].0 && hexes[a].1 <= hexes[b].1
    })
}

impl HexSystem {
    pub fn hexagon_count(&self) -> usize {
        self.hexagons.len()
    }

    pub fn hex_of_face(&self, face: usize) -> Option<usize> {
        self.face_of_hex.iter().position(|&f| f == face)
    }

    /// Edges of hexagon `h` clockwise from the top-right edge.
    pub fn hexagon_edges(&self, h: usize) -> &[usize; 6] {
        &self.hex_edges[h]
    }

    /// The root matching as drawn: vertical edges of the left perimeter,
    /// rising edges of the bottom perimeter, falling edges elsewhere.
    pub fn drawn_root(&self) -> Result<Matching> {
        let on_lb: BTreeSet<usize> = self
            .left_perimeter
            .iter()
            .chain(&self.bottom_perimeter)
            .copied()
            .collect();
        let mut chosen: Vec<usize> = self
            .left_perimeter
            .iter()
            .filter(|&&e| self.edge_direction[e] == EdgeDirection::Vertical)
            .chain(
                self.bottom_perimeter
                    .iter()
                    .filter(|&&e| self.edge_direction[e] == EdgeDirection::Rising),
            )
            .copied()
            .collect();
        let mut covered: BTreeSet<usize> = chosen
            .iter()
            .flat_map(|&e| {
                let (a, b) = self.graph.edge(e);
                [a, b]
            })
            .collect();
        for e in 0..self.graph.edge_count() {
            let (a, b) = self.graph.edge(e);
            if !on_lb.contains(&e)
                && self.edge_direction[e] == EdgeDirection::Falling
                && !covered.contains(&a)
                && !covered.contains(&b)
            {
                chosen.push(e);
                covered.insert(a);
                covered.insert(b);
            }
        }
        Matching::new(&self.graph, chosen)
    }

    /// Bitset over hexagon indices of the faces in `faces`.
    fn hex_set(&self, faces: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.hexagons.len());
        for f in faces {
            if let Some(h) = self.hex_of_face(f) {
                set.insert(h);
            }
        }
        set
    }
}

/// `C_M`, `H_M` and `P_M` of a matching relative to the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubparallelogramView {
    /// Edges of `M ⊕ root`: empty or a single cycle.
    pub cycle: Vec<usize>,
    /// Hexagons enclosed by `cycle`, as hexagon indices.
    pub hexagons: FixedBitSet,
    /// `(left ∪ bottom perimeter) ⊕ cycle`.
    pub path: Vec<usize>,
}

/// Computes the view of `m` and checks its geometry: the cycle passes the
/// forcing edge, the enclosed hexagons form a truncated parallelogram, the
/// path alternates with both end edges in `m`, the matching edges off the
/// path all fall, and every `m`-alternating hexagon meets the path in three
/// consecutive edges and is proper exactly when it is enclosed.
pub fn matching_geometry(
    h: &HexSystem,
    root: &Matching,
    m: &Matching,
) -> Result<SubparallelogramView> {
    let g = &h.graph;
    Matching::new(g, m.edges().to_vec())?;
    let cycle = m.symmetric_difference(root);
    let hexagons = if cycle.is_empty() {
        FixedBitSet::with_capacity(h.hexagon_count())
    } else {
        if !cycle.contains(&h.forcing_edge) {
            return violation(format!("cycle of {m:?} misses the forcing edge"));
        }
        h.hex_set(g.faces_inside_cycle(&cycle)?)
    };
    let poset = hexagon_poset(&h.rows)?;
    if !poset.is_order_ideal(&hexagons) {
        return violation(format!(
            "enclosed hexagons of {m:?} are not a truncated parallelogram"
        ));
    }

    let lb: BTreeSet<usize> = h
        .left_perimeter
        .iter()
        .chain(&h.bottom_perimeter)
        .copied()
        .collect();
    let cyc: BTreeSet<usize> = cycle.iter().copied().collect();
    let path: Vec<usize> = lb.symmetric_difference(&cyc).copied().collect();
    check_alternating_path(g, m, &path)?;

    let on_path: BTreeSet<usize> = path.iter().copied().collect();
    if let Some(&e) = m
        .edges()
        .iter()
        .find(|e| !on_path.contains(e) && h.edge_direction[**e] != EdgeDirection::Falling)
    {
        return violation(format!("matching edge {e} off the path does not fall"));
    }

    for (f, orientation) in matching::classify_alternating_faces(g, m)? {
        let Some(hex) = h.hex_of_face(f) else {
            continue;
        };
        let shared: Vec<bool> = h.hex_edges[hex]
            .iter()
            .map(|e| on_path.contains(e))
            .collect();
        let count = shared.iter().filter(|&&s| s).count();
        let consecutive = (0..6).any(|k| shared[k] && shared[(k + 1) % 6] && shared[(k + 2) % 6]);
        if count != 3 || !consecutive {
            return violation(format!(
                "alternating hexagon {:?} meets the path in {count} edges",
                h.hexagons[hex]
            ));
        }
        if (orientation == Orientation::Proper) != hexagons.contains(hex) {
            return violation(format!(
                "hexagon {:?} is {orientation:?} but enclosure disagrees",
                h.hexagons[hex]
            ));
        }
    }
    Ok(SubparallelogramView {
        cycle,
        hexagons,
        path,
    })
}

fn violation<T>(msg: String) -> Result<T> {
    Err(Error::StructureViolation(msg))
}

/// `path` must be a simple path alternating in and out of `m`, starting and
/// ending with edges of `m`.
fn check_alternating_path(g: &PlaneBipartiteGraph, m: &Matching, path: &[usize]) -> Result<()> {
    let mut degree: HashMap<usize, Vec<usize>> = HashMap::new();
    for &e in path {
        let (a, b) = g.edge(e);
        degree.entry(a).or_default().push(e);
        degree.entry(b).or_default().push(e);
    }
    let ends: Vec<usize> = degree
        .iter()
        .filter(|(_, es)| es.len() == 1)
        .map(|(&v, _)| v)
        .collect();
    if ends.len() != 2 || degree.values().any(|es| es.len() > 2) {
        return violation("path edges do not form a simple path".into());
    }
    let start = *ends.iter().min().expect("two ends");
    let (mut at, mut last) = (start, usize::MAX);
    let mut walked = Vec::new();
    while let Some(&e) = degree[&at].iter().find(|&&e| e != last) {
        walked.push(e);
        at = g.other_end(e, at);
        last = e;
        if walked.len() > path.len() {
            break;
        }
    }
    if walked.len() != path.len() {
        return violation("path edges do not form a simple path".into());
    }
    for (k, &e) in walked.iter().enumerate() {
        if m.contains(e) != (k % 2 == 0) {
            return violation(format!("path does not alternate at edge {e}"));
        }
    }
    if walked.len() % 2 == 0 {
        return violation("path ends with an edge outside the matching".into());
    }
    Ok(())
}

/// Certificate for the lattice isomorphism between the matchings and the
/// order ideals of the hexagon poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelogramCertificate {
    pub zdigraph: ZDigraph,
    pub poset: MatchingPoset,
    pub root: usize,
    pub ideals: IdealLattice,
    /// Ideal-lattice element of every matching (`M ↦ H_M`).
    pub map: Vec<usize>,
    /// `(join-irreducible matching, its right-up-most hexagon)`.
    pub psi: Vec<(usize, usize)>,
}

pub fn verify_iso_parallelogram(h: &HexSystem, caps: &Caps) -> Result<ParallelogramCertificate> {
    let g = &h.graph;
    let z = ZDigraph::build(g, caps)?;
    let poset = z.poset()?;
    let ext = extremal_matchings(g, &z, &poset)?;
    let [ext] = ext[..] else {
        return Err(Error::IsoFailure(format!(
            "{} lattice components",
            ext.len()
        )));
    };
    let root = z.matching(ext.root).clone();
    if h.drawn_root()? != root {
        return Err(Error::IsoFailure(
            "root matching differs from the drawn one".into(),
        ));
    }
    let hex_poset = hexagon_poset(&h.rows)?;
    let ideals = order_ideal_lattice(&hex_poset, caps)?;

    let mut views = Vec::with_capacity(z.len());
    let mut map = Vec::with_capacity(z.len());
    for (i, m) in z.matchings().iter().enumerate() {
        let view = matching_geometry(h, &root, m)?;
        let x = ideals
            .index_of(&view.hexagons)
            .ok_or_else(|| Error::IsoFailure(format!("hexagons of M{i} are not an order ideal")))?;
        map.push(x);
        views.push(view);
    }
    if z.len() != ideals.lattice.len() {
        return Err(Error::IsoFailure(format!(
            "{} matchings, {} ideals",
            z.len(),
            ideals.lattice.len()
        )));
    }
    let distinct: BTreeSet<usize> = map.iter().copied().collect();
    if distinct.len() != map.len() {
        return Err(Error::IsoFailure("two matchings share an ideal".into()));
    }
    for a in 0..z.len() {
        for b in 0..z.len() {
            if poset.le(a, b) != views[a].hexagons.is_subset(&views[b].hexagons) {
                return Err(Error::IsoFailure(format!("order differs on M{a}, M{b}")));
            }
        }
    }

    let lattice = poset.lattice(caps)?;
    let irreducibles = lattice.join_irreducibles();
    let mut psi = Vec::new();
    for &m in &irreducibles.elements {
        let proper: Vec<usize> = matching::classify_alternating_faces(g, z.matching(m))?
            .into_iter()
            .filter(|&(_, o)| o == Orientation::Proper)
            .filter_map(|(f, _)| h.hex_of_face(f))
            .filter(|&hx| views[m].hexagons.contains(hx))
            .collect();
        let [hex] = proper[..] else {
            return Err(Error::IsoFailure(format!(
                "M{m} has {} proper enclosed hexagons",
                proper.len()
            )));
        };
        let top: Vec<usize> = views[m]
            .hexagons
            .ones()
            .filter(|&a| views[m].hexagons.ones().all(|b| hex_poset.le(b, a)))
            .collect();
        if top != [hex] {
            return Err(Error::IsoFailure(format!(
                "proper hexagon of M{m} is not the right-up-most one"
            )));
        }
        psi.push((m, hex));
    }
    let images: BTreeSet<usize> = psi.iter().map(|&(_, hx)| hx).collect();
    if images.len() != h.hexagon_count() || psi.len() != h.hexagon_count() {
        return Err(Error::IsoFailure(
            "psi is not a bijection onto the hexagons".into(),
        ));
    }
    for &(a, ha) in &psi {
        for &(b, hb) in &psi {
            if lattice.le(a, b) != hex_poset.le(ha, hb) {
                return Err(Error::IsoFailure(format!(
                    "psi does not preserve order on M{a}, M{b}"
                )));
            }
        }
    }
    if !lattice.is_isomorphic(&ideals.lattice) {
        return Err(Error::IsoFailure(
            "generic lattice isomorphism test disagrees".into(),
        ));
    }
    Ok(ParallelogramCertificate {
        zdigraph: z,
        poset,
        root: ext.root,
        ideals,
        map,
        psi,
    })
}
