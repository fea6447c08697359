//! The Z-transformation digraph, the matching poset it generates, and the
//! face bookkeeping that ties matchings to order ideals of faces.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::{self, order_ideal_lattice, FiniteLattice, FinitePoset, IdealLattice};
use crate::matching::{self, alternating_orientation, Matching, Orientation};
use crate::plane_graph::PlaneBipartiteGraph;

/// Arc `from -> to` of the digraph: `to = from ⊕ ∂face`, with `face`
/// proper with respect to `from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZArc {
    pub from: usize,
    pub to: usize,
    pub face: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZDigraph {
    matchings: Vec<Matching>,
    arcs: Vec<ZArc>,
    index: HashMap<Matching, usize>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl ZDigraph {
    /// Enumerates the perfect matchings of `g` and every face twist between them.
    pub fn build(g: &PlaneBipartiteGraph, caps: &Caps) -> Result<Self> {
        g.check_caps(caps)?;
        let matchings = matching::enumerate_perfect_matchings(g, caps)?;
        Self::from_matchings(g, matchings)
    }

    /// Builds the digraph over an already enumerated matching set.
    pub fn from_matchings(g: &PlaneBipartiteGraph, matchings: Vec<Matching>) -> Result<Self> {
        if matchings.is_empty() {
            return Err(Error::NoPerfectMatching);
        }
        let index: HashMap<Matching, usize> = matchings
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let faces: Vec<usize> = g
            .inner_faces()
            .filter(|&f| g.face(f).is_simple_cycle())
            .collect();
        let mut arcs = Vec::new();
        for (i, m) in matchings.iter().enumerate() {
            for &f in &faces {
                let walk = &g.face(f).boundary;
                if alternating_orientation(g, m, walk) == Some(Orientation::Proper) {
                    let twisted = m.flip(walk.iter().map(|d| d.edge));
                    let j = *index.get(&twisted).ok_or_else(|| {
                        Error::NotAMatching("face twist left the matching set".into())
                    })?;
                    arcs.push(ZArc {
                        from: i,
                        to: j,
                        face: f,
                    });
                }
            }
        }
        let n = matchings.len();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (k, a) in arcs.iter().enumerate() {
            out[a.from].push(k);
            inn[a.to].push(k);
        }
        if let Some(v) = lattice::node_on_cycle(&successors(n, &arcs)) {
            return Err(Error::CycleDetected { matching: v });
        }
        Ok(ZDigraph {
            matchings,
            arcs,
            index,
            out,
            inn,
        })
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn matching(&self, i: usize) -> &Matching {
        &self.matchings[i]
    }

    pub fn index_of(&self, m: &Matching) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn arcs(&self) -> &[ZArc] {
        &self.arcs
    }

    pub fn out_arcs(&self, v: usize) -> impl Iterator<Item = &ZArc> + '_ {
        self.out[v].iter().map(|&k| &self.arcs[k])
    }

    pub fn in_arcs(&self, v: usize) -> impl Iterator<Item = &ZArc> + '_ {
        self.inn[v].iter().map(|&k| &self.arcs[k])
    }

    /// The arc from `a` to `b`, if any.
    pub fn arc_between(&self, a: usize, b: usize) -> Option<&ZArc> {
        self.out_arcs(a).find(|arc| arc.to == b)
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.inn[v].is_empty())
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.out[v].is_empty())
            .collect()
    }

    /// Vertices in topological order (smallest index first among ready ones).
    pub fn topological_order(&self) -> Vec<usize> {
        lattice::topological_order(&successors(self.len(), &self.arcs))
            .expect("acyclic by construction")
    }

    /// Labels `M0, M1, ...` in matching order.
    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|i| format!("M{i}")).collect()
    }

    /// The matching poset: `b ⪯ a` iff there is a directed path from `a` to
    /// `b`. The cover relation is certified to be exactly the arc set.
    pub fn poset(&self) -> Result<MatchingPoset> {
        let pairs: Vec<(usize, usize)> = self.arcs.iter().map(|a| (a.to, a.from)).collect();
        let poset = FinitePoset::from_arcs(self.labels(), pairs.clone())?;
        let mut sorted = pairs;
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.arcs.len() {
            let dup = self.arcs.iter().find(|a| {
                self.arcs
                    .iter()
                    .filter(|b| b.from == a.from && b.to == a.to)
                    .count()
                    > 1
            });
            let a = dup.expect("a repeated pair exists");
            return Err(Error::HasseMismatch {
                from: a.from,
                to: a.to,
            });
        }
        if let Some(&(lo, hi)) = sorted
            .iter()
            .find(|c| poset.covers().binary_search(c).is_err())
        {
            return Err(Error::HasseMismatch { from: hi, to: lo });
        }
        debug_assert_eq!(poset.covers().len(), sorted.len());
        let components = poset.components();
        Ok(MatchingPoset { poset, components })
    }
}

fn successors(n: usize, arcs: &[ZArc]) -> Vec<Vec<usize>> {
    let mut succ = vec![Vec::new(); n];
    for a in arcs {
        succ[a.from].push(a.to);
    }
    succ
}

/// `M(G)`, possibly a disjoint union of lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingPoset {
    pub poset: FinitePoset,
    /// Matching indices of each connected component, ordered by smallest index.
    pub components: Vec<Vec<usize>>,
}

impl MatchingPoset {
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.poset.le(a, b)
    }

    /// One lattice per component; element `k` of lattice `c` is matching
    /// `components[c][k]`.
    pub fn component_lattices(&self, caps: &Caps) -> Result<Vec<FiniteLattice>> {
        self.components
            .iter()
            .map(|c| FiniteLattice::from_poset(self.poset.subposet(c), caps))
            .collect()
    }

    /// The lattice of a single-component poset.
    pub fn lattice(&self, caps: &Caps) -> Result<FiniteLattice> {
        if self.components.len() != 1 {
            return Err(Error::Precondition(format!(
                "matching poset has {} components, not a single lattice",
                self.components.len()
            )));
        }
        FiniteLattice::from_poset(self.poset.clone(), caps)
    }
}

/// Top (`source`) and bottom (`root`) matching of one lattice component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalMatchings {
    pub component: usize,
    pub source: usize,
    pub root: usize,
}

/// Source and root of every component. For a single component the cycle
/// characterization is verified against every alternating cycle of `g`:
/// the source has no improper one, the root no proper one.
pub fn extremal_matchings(
    g: &PlaneBipartiteGraph,
    z: &ZDigraph,
    p: &MatchingPoset,
) -> Result<Vec<ExtremalMatchings>> {
    let sources = z.sources();
    let sinks = z.sinks();
    let k = p.components.len();
    let mut out = Vec::with_capacity(k);
    for (c, members) in p.components.iter().enumerate() {
        let s: Vec<usize> = sources
            .iter()
            .copied()
            .filter(|v| members.binary_search(v).is_ok())
            .collect();
        let r: Vec<usize> = sinks
            .iter()
            .copied()
            .filter(|v| members.binary_search(v).is_ok())
            .collect();
        if s.len() != 1 {
            return Err(Error::MultipleSources {
                count: sources.len(),
                components: k,
            });
        }
        if r.len() != 1 {
            return Err(Error::MultipleSinks {
                count: sinks.len(),
                components: k,
            });
        }
        out.push(ExtremalMatchings {
            component: c,
            source: s[0],
            root: r[0],
        });
    }
    if let [only] = out[..] {
        check_no_cycle(g, z, only.source, Orientation::Improper)?;
        check_no_cycle(g, z, only.root, Orientation::Proper)?;
    }
    Ok(out)
}

fn check_no_cycle(
    g: &PlaneBipartiteGraph,
    z: &ZDigraph,
    m: usize,
    forbidden: Orientation,
) -> Result<()> {
    let cycles = matching::all_alternating_cycles(g, z.matching(m), z.matchings())?;
    if let Some(c) = cycles.iter().find(|c| c.orientation == forbidden) {
        let orientation = match forbidden {
            Orientation::Proper => "proper",
            Orientation::Improper => "improper",
        };
        return Err(Error::ExtremalViolation {
            matching: m,
            orientation,
            length: c.cycle.len(),
        });
    }
    Ok(())
}

/// Signed count, per inner face, of the cycles of `upper ⊕ lower` enclosing
/// it: +1 for a proper, -1 for an improper cycle with respect to `upper`.
/// Faces enclosed by no cycle are absent from the map.
pub fn delta_cycle_counts(
    g: &PlaneBipartiteGraph,
    z: &ZDigraph,
    p: &MatchingPoset,
    upper: usize,
    lower: usize,
) -> Result<BTreeMap<usize, i64>> {
    if !p.le(lower, upper) {
        return Err(Error::NotComparable { upper, lower });
    }
    let mut counts = BTreeMap::new();
    for c in matching::symmetric_difference_cycles(g, z.matching(upper), z.matching(lower))? {
        let sign = if c.orientation == Orientation::Proper {
            1
        } else {
            -1
        };
        for &f in &c.enclosed_faces {
            *counts.entry(f).or_insert(0) += sign;
        }
    }
    Ok(counts)
}

pub fn delta_cycle_count(
    g: &PlaneBipartiteGraph,
    z: &ZDigraph,
    p: &MatchingPoset,
    upper: usize,
    lower: usize,
    face: usize,
) -> Result<i64> {
    Ok(delta_cycle_counts(g, z, p, upper, lower)?
        .get(&face)
        .copied()
        .unwrap_or(0))
}

/// Face labels along a directed path given as its matching sequence.
pub fn path_faces(z: &ZDigraph, path: &[usize]) -> Result<Vec<usize>> {
    if let Some(&v) = path.iter().find(|&&v| v >= z.len()) {
        return Err(Error::NotAPath(format!("unknown matching {v}")));
    }
    path.windows(2)
        .map(|w| {
            z.arc_between(w[0], w[1])
                .map(|a| a.face)
                .ok_or_else(|| Error::NotAPath(format!("no arc from {} to {}", w[0], w[1])))
        })
        .collect()
}

/// Number of times `face` is twisted along `path`.
pub fn path_face_multiplicity(z: &ZDigraph, path: &[usize], face: usize) -> Result<usize> {
    Ok(path_faces(z, path)?.iter().filter(|&&f| f == face).count())
}

/// Poset on the inner faces of a 2-connected outerplane graph: `f1 ≤ f2` iff
/// the directed inner dual has a path from `f2` to `f1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePoset {
    pub poset: FinitePoset,
    /// Face id of each poset element.
    pub faces: Vec<usize>,
}

impl FacePoset {
    pub fn element_of(&self, face: usize) -> Option<usize> {
        self.faces.iter().position(|&f| f == face)
    }
}

pub fn face_poset_outerplane(g: &PlaneBipartiteGraph) -> Result<FacePoset> {
    g.check_outerplane_2connected()?;
    let faces: Vec<usize> = g.inner_faces().collect();
    let pos: HashMap<usize, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let dual = g.oriented_dual(false);
    let mut succ = vec![Vec::new(); faces.len()];
    for a in &dual.arcs {
        succ[pos[&a.from]].push(pos[&a.to]);
    }
    if let Some(v) = lattice::node_on_cycle(&succ) {
        return Err(Error::DirectedCycleInInnerDual { face: faces[v] });
    }
    let arcs = dual
        .arcs
        .iter()
        .map(|a| (pos[&a.to], pos[&a.from]))
        .collect();
    let labels = faces.iter().map(|f| format!("f{f}")).collect();
    Ok(FacePoset {
        poset: FinitePoset::from_arcs(labels, arcs)?,
        faces,
    })
}

/// Inner faces enclosed by the cycles of `m ⊕ root`.
pub fn sigma(g: &PlaneBipartiteGraph, root: &Matching, m: &Matching) -> Result<BTreeSet<usize>> {
    g.check_outerplane_2connected()?;
    let mut faces = BTreeSet::new();
    for c in matching::symmetric_difference_cycles(g, m, root)? {
        faces.extend(c.enclosed_faces);
    }
    Ok(faces)
}

/// Certified isomorphism between the matching lattice and the ideal lattice
/// of the face poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaCertificate {
    pub face_poset: FacePoset,
    pub ideals: IdealLattice,
    /// Ideal-lattice element of every matching.
    pub map: Vec<usize>,
}

pub fn verify_iso_matchings_ideals(
    g: &PlaneBipartiteGraph,
    caps: &Caps,
) -> Result<SigmaCertificate> {
    let face_poset = face_poset_outerplane(g)?;
    let z = ZDigraph::build(g, caps)?;
    let p = z.poset()?;
    let ext = extremal_matchings(g, &z, &p)?;
    if ext.len() != 1 {
        return Err(Error::IsoFailure(format!(
            "matching poset has {} components",
            ext.len()
        )));
    }
    let root = z.matching(ext[0].root).clone();
    let ideals = order_ideal_lattice(&face_poset.poset, caps)?;

    let k = face_poset.faces.len();
    let mut sets = Vec::with_capacity(z.len());
    let mut map = Vec::with_capacity(z.len());
    for (i, m) in z.matchings().iter().enumerate() {
        let mut set = FixedBitSet::with_capacity(k);
        for f in sigma(g, &root, m)? {
            let e = face_poset.element_of(f).expect("sigma returns inner faces");
            set.insert(e);
        }
        let idx = ideals
            .index_of(&set)
            .ok_or_else(|| Error::IsoFailure(format!("image of M{i} is not an order ideal")))?;
        sets.push(set);
        map.push(idx);
    }
    if z.len() != ideals.lattice.len() {
        return Err(Error::IsoFailure(format!(
            "{} matchings but {} order ideals",
            z.len(),
            ideals.lattice.len()
        )));
    }
    let mut seen = vec![usize::MAX; ideals.lattice.len()];
    for (i, &x) in map.iter().enumerate() {
        if seen[x] != usize::MAX {
            return Err(Error::IsoFailure(format!(
                "M{} and M{i} share an image",
                seen[x]
            )));
        }
        seen[x] = i;
    }
    for a in 0..z.len() {
        for b in 0..z.len() {
            if p.le(a, b) != sets[a].is_subset(&sets[b]) {
                return Err(Error::IsoFailure(format!("order differs on M{a}, M{b}")));
            }
        }
    }
    for arc in z.arcs() {
        let mut expected = sets[arc.from].clone();
        let e = face_poset
            .element_of(arc.face)
            .expect("arc labels are inner faces");
        if !expected.contains(e) {
            return Err(Error::IsoFailure(format!(
                "twisted face f{} missing from image of M{}",
                arc.face, arc.from
            )));
        }
        expected.set(e, false);
        if expected != sets[arc.to] {
            return Err(Error::IsoFailure(format!(
                "twist M{} -> M{} removes more than f{}",
                arc.from, arc.to, arc.face
            )));
        }
    }
    Ok(SigmaCertificate {
        face_poset,
        ideals,
        map,
    })
}

/// Summary of a successful path-invariance check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PathInvariance {
    pub comparable_pairs: usize,
    pub intervals_arcs: usize,
}

/// Checks that every directed path from `upper` to `lower` twists each
/// face exactly `Δ(upper, lower)` times, for every comparable pair.
///
/// Face counts are propagated through each interval in topological order;
/// two in-arcs of one vertex that disagree give a witness of two paths with
/// different counts, so agreement everywhere certifies all paths at once.
pub fn verify_path_invariance(
    g: &PlaneBipartiteGraph,
    z: &ZDigraph,
    p: &MatchingPoset,
) -> Result<PathInvariance> {
    let faces: Vec<usize> = g.inner_faces().collect();
    let slot: HashMap<usize, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let order = z.topological_order();
    let mut stats = PathInvariance::default();
    let mut counts: Vec<Option<Vec<i64>>> = vec![None; z.len()];
    for upper in 0..z.len() {
        counts.iter_mut().for_each(|c| *c = None);
        counts[upper] = Some(vec![0; faces.len()]);
        for &v in &order {
            if v == upper || !p.le(v, upper) {
                continue;
            }
            let mut here: Option<Vec<i64>> = None;
            for a in z.in_arcs(v) {
                let Some(base) = &counts[a.from] else {
                    continue;
                };
                stats.intervals_arcs += 1;
                let mut c = base.clone();
                c[slot[&a.face]] += 1;
                match &here {
                    None => here = Some(c),
                    Some(h) if *h != c => {
                        return Err(Error::IsoFailure(format!(
                            "paths from M{upper} to M{v} twist faces differently"
                        )))
                    }
                    Some(_) => {}
                }
            }
            counts[v] = here;
        }
        for lower in (0..z.len()).filter(|&l| p.le(l, upper)) {
            stats.comparable_pairs += 1;
            let along = counts[lower]
                .as_ref()
                .expect("every element below is reachable");
            let delta = delta_cycle_counts(g, z, p, upper, lower)?;
            for (i, &f) in faces.iter().enumerate() {
                let d = delta.get(&f).copied().unwrap_or(0);
                if along[i] != d {
                    return Err(Error::IsoFailure(format!(
                        "M{upper} to M{lower}: face f{f} twisted {} times, cycle count {d}",
                        along[i]
                    )));
                }
            }
        }
    }
    Ok(stats)
}
