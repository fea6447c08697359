//! Self-verification suites. Every check re-derives one structural claim on
//! a generated instance; a failing check carries the error that refuted it.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::generators::matching_geometry;
use crate::generators::{
    hexagon_poset, link_components, orientations, row_profiles, tree_shapes, tree_to_outerplane,
    truncated_parallelogram, verify_iso_parallelogram, GraphSpec, HexSystem, OrientedTree,
};
use crate::lattice::{digraph_isomorphism, order_ideal_lattice, FiniteLattice};
use crate::matching::{self, Matching};
use crate::plane_graph::PlaneBipartiteGraph;
use crate::ztransform::{
    delta_cycle_counts, extremal_matchings, verify_iso_matchings_ideals, verify_path_invariance,
    ZDigraph,
};

/// Largest truncated parallelogram, in hexagons, covered by the suite.
pub const MAX_SUITE_HEXAGONS: usize = 10;
/// Largest tree, in nodes, covered by the outerplane suite.
pub const MAX_SUITE_TREE_NODES: usize = 6;
/// Orientations tried per tree shape.
pub const ORIENTATIONS_PER_SHAPE: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub case: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub totals: Totals,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            checks: Vec::new(),
            totals: Totals::default(),
        }
    }

    /// Records the outcome of one check. Cap overruns are not verdicts on
    /// the claim and are passed back to the caller instead.
    pub fn record(&mut self, claim: &str, case: &str, outcome: Result<()>) -> Result<()> {
        let witness = match outcome {
            Ok(()) => None,
            Err(e @ Error::SizeCapExceeded { .. }) => return Err(e),
            Err(e) => Some(e.to_string()),
        };
        let status = if witness.is_none() {
            self.totals.pass += 1;
            Status::Pass
        } else {
            self.totals.fail += 1;
            Status::Fail
        };
        self.checks.push(Check {
            claim: claim.to_string(),
            case: case.to_string(),
            status,
            witness,
        });
        Ok(())
    }

    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.totals.pass += other.totals.pass;
        self.totals.fail += other.totals.fail;
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match &c.witness {
                None => writeln!(out, "PASS {} [{}]", c.claim, c.case),
                Some(w) => writeln!(out, "FAIL {} [{}]: {w}", c.claim, c.case),
            }
            .unwrap();
        }
        writeln!(
            out,
            "{}: {} passed, {} failed",
            self.suite, self.totals.pass, self.totals.fail
        )
        .unwrap();
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Core,
    Parallelogram,
    Outerplane,
    Decomposition,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Parallelogram => "parallelogram",
            Suite::Outerplane => "outerplane",
            Suite::Decomposition => "decomposition",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::Core,
            Suite::Parallelogram,
            Suite::Outerplane,
            Suite::Decomposition,
            Suite::All,
        ]
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Graphs the core suite runs on when no graph is supplied.
pub const CORE_CASES: [&str; 6] = [
    "L(1)",
    "L(1,1)",
    "L(2,2)",
    "T(2)",
    "tree:a>b,c>b",
    "link:L(1)+L(1,1)",
];

pub fn run_suite(suite: Suite, caps: &Caps) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(suite.name());
    match suite {
        Suite::Core => {
            for spec in CORE_CASES {
                let g = spec.parse::<GraphSpec>()?.build(caps)?;
                core_checks(&mut report, spec, &g, caps)?;
            }
        }
        Suite::Parallelogram => parallelogram_suite(&mut report, caps)?,
        Suite::Outerplane => outerplane_suite(&mut report, caps)?,
        Suite::Decomposition => decomposition_suite(&mut report, caps)?,
        Suite::All => {
            for s in [
                Suite::Core,
                Suite::Parallelogram,
                Suite::Outerplane,
                Suite::Decomposition,
            ] {
                report.extend(run_suite(s, caps)?);
            }
        }
    }
    Ok(report)
}

fn fail(msg: String) -> Result<()> {
    Err(Error::IsoFailure(msg))
}

/// Checks that hold for every plane bipartite graph with a perfect matching.
pub fn core_checks(
    report: &mut VerificationReport,
    case: &str,
    g: &PlaneBipartiteGraph,
    caps: &Caps,
) -> Result<()> {
    let z = match ZDigraph::build(g, caps) {
        Ok(z) => z,
        Err(e) => return report.record("zdigraph.build", case, Err(e)),
    };
    let poset = z.poset();
    report.record(
        "zdigraph.acyclic_hasse",
        case,
        poset.as_ref().map(|_| ()).map_err(Clone::clone),
    )?;
    let Ok(p) = poset else { return Ok(()) };

    let lattices = p.component_lattices(caps);
    report.record(
        "lattice.distributive_graded",
        case,
        lattices.as_ref().map_err(Clone::clone).and_then(|ls| {
            for l in ls {
                if let Some((a, b, c)) = l.distributivity_witness() {
                    return fail(format!("distributivity fails at ({a}, {b}, {c})"));
                }
                l.rank_check()?;
            }
            Ok(())
        }),
    )?;
    if let Ok(ls) = &lattices {
        let round_trip = ls.iter().try_for_each(|l| birkhoff_round_trip(l, caps));
        report.record("lattice.birkhoff_round_trip", case, round_trip)?;
    }

    report.record(
        "ztransform.extremal",
        case,
        extremal_matchings(g, &z, &p).map(|_| ()),
    )?;
    report.record(
        "ztransform.path_invariance",
        case,
        verify_path_invariance(g, &z, &p).map(|_| ()),
    )?;

    let structure = g.elementary_structure(caps);
    report.record(
        "ztransform.weakly_elementary_connected",
        case,
        structure.clone().and_then(|s| {
            if s.is_weakly_elementary && p.components.len() != 1 {
                return fail(format!(
                    "weakly elementary but {} components",
                    p.components.len()
                ));
            }
            Ok(())
        }),
    )?;
    if let (Ok(s), Ok(ls)) = (&structure, &lattices) {
        if s.is_elementary {
            let irreducible = irreducible_checks(&ls[0], caps);
            report.record("lattice.elementary_irreducible", case, irreducible)?;
        }
    }
    Ok(())
}

/// `x ↦ {join-irreducibles below x}` is an order isomorphism onto the ideal
/// lattice of the join-irreducibles.
pub fn birkhoff_round_trip(l: &FiniteLattice, caps: &Caps) -> Result<()> {
    let ji = l.join_irreducibles();
    let ideals = order_ideal_lattice(&ji.poset, caps)?;
    if ideals.lattice.len() != l.len() {
        return fail(format!(
            "{} elements but {} ideals of join-irreducibles",
            l.len(),
            ideals.lattice.len()
        ));
    }
    let below: Vec<FixedBitSet> = (0..l.len())
        .map(|x| {
            let mut s = FixedBitSet::with_capacity(ji.elements.len());
            for (i, &j) in ji.elements.iter().enumerate() {
                s.set(i, l.le(j, x));
            }
            s
        })
        .collect();
    let mut hit = FixedBitSet::with_capacity(l.len());
    for (x, s) in below.iter().enumerate() {
        match ideals.index_of(s) {
            Some(i) if !hit.put(i) => {}
            _ => return fail(format!("element {x} does not map to a fresh ideal")),
        }
    }
    for x in 0..l.len() {
        for y in 0..l.len() {
            if l.le(x, y) != below[x].is_subset(&below[y]) {
                return fail(format!("order between {x} and {y} not preserved"));
            }
        }
    }
    Ok(())
}

/// No central elements, and only the bounds have complements.
fn irreducible_checks(l: &FiniteLattice, caps: &Caps) -> Result<()> {
    let central = l.central_elements(caps)?;
    if !central.is_empty() {
        return fail(format!("central elements {central:?}"));
    }
    for (x, c) in l.complements()?.iter().enumerate() {
        if c.is_some() && x != l.bottom() && x != l.top() {
            return fail(format!("element {x} has a complement"));
        }
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn parallelogram_suite(report: &mut VerificationReport, caps: &Caps) -> Result<()> {
    for m in 1..=3usize {
        for n in 1..=3usize {
            let case = format!("P({m},{n})");
            let h = truncated_parallelogram(&vec![n; m], caps)?;
            let expected = binomial((m + n) as u64, m as u64) as usize;
            let count = count_check(&h.graph, expected, caps);
            report.record("parallelogram.count", &case, count)?;
        }
    }
    for m in 1..=3usize {
        let rows: Vec<usize> = (1..=m).rev().collect();
        let h = truncated_parallelogram(&rows, caps)?;
        let k = m as u64 + 1;
        let catalan = (binomial(2 * k, k) / (k + 1)) as usize;
        let count = count_check(&h.graph, catalan, caps);
        report.record("parallelogram.count", &format!("T({m})"), count)?;
    }
    for rows in row_profiles(MAX_SUITE_HEXAGONS) {
        let case = GraphSpec::Hexagonal(rows.clone()).to_string();
        let h = truncated_parallelogram(&rows, caps)?;
        report.record(
            "parallelogram.hexagon_poset",
            &case,
            hexagon_poset_check(&h),
        )?;
        report.record(
            "parallelogram.iso",
            &case,
            verify_iso_parallelogram(&h, caps).map(|_| ()),
        )?;
        report.record("parallelogram.geometry", &case, geometry_checks(&h, caps))?;
        core_checks(report, &case, &h.graph, caps)?;
    }
    Ok(())
}

fn count_check(g: &PlaneBipartiteGraph, expected: usize, caps: &Caps) -> Result<()> {
    let found = matching::enumerate_perfect_matchings(g, caps)?.len();
    if found != expected {
        return fail(format!("{found} perfect matchings, expected {expected}"));
    }
    Ok(())
}

/// The hexagon poset is the product order restricted to a down-set of the grid.
fn hexagon_poset_check(h: &HexSystem) -> Result<()> {
    let p = hexagon_poset(&h.rows)?;
    for (a, &(i, j)) in h.hexagons.iter().enumerate() {
        for (b, &(k, l)) in h.hexagons.iter().enumerate() {
            if p.le(a, b) != (i <= k && j <= l) {
                return fail(format!("h({i},{j}) vs h({k},{l}) misordered"));
            }
        }
        let below = (1..=i).flat_map(|k| (1..=j).map(move |l| (k, l)));
        if let Some(missing) = below.into_iter().find(|c| !h.hexagons.contains(c)) {
            return fail(format!("h({i},{j}) present but {missing:?} missing"));
        }
    }
    Ok(())
}

/// Geometry of every matching, and `M' ⪯ M` iff its hexagon set is smaller.
fn geometry_checks(h: &HexSystem, caps: &Caps) -> Result<()> {
    let z = ZDigraph::build(&h.graph, caps)?;
    let p = z.poset()?;
    let root = h.drawn_root()?;
    let views = z
        .matchings()
        .iter()
        .map(|m| matching_geometry(h, &root, m))
        .collect::<Result<Vec<_>>>()?;
    for a in 0..z.len() {
        for b in 0..z.len() {
            if p.le(a, b) != views[a].hexagons.is_subset(&views[b].hexagons) {
                return fail(format!("M{a} vs M{b}: order and hexagon sets disagree"));
            }
        }
    }
    Ok(())
}

/// Evenly spaced picks, all of them when there are few enough.
fn sample<T: Clone>(items: &[T], k: usize) -> Vec<T> {
    if items.len() <= k {
        return items.to_vec();
    }
    (0..k).map(|i| items[i * items.len() / k].clone()).collect()
}

pub fn tree_spec(tree: &OrientedTree) -> String {
    if tree.arcs().is_empty() {
        return tree.labels()[0].clone();
    }
    let arcs: Vec<String> = tree
        .arcs()
        .iter()
        .map(|&(a, b)| format!("{}>{}", tree.labels()[a], tree.labels()[b]))
        .collect();
    arcs.join(",")
}

fn outerplane_suite(report: &mut VerificationReport, caps: &Caps) -> Result<()> {
    for n in 1..=MAX_SUITE_TREE_NODES {
        for shape in tree_shapes(n) {
            for tree in sample(&orientations(n, &shape), ORIENTATIONS_PER_SHAPE) {
                for optimize in [false, true] {
                    let prefix = if optimize { "tree-opt" } else { "tree" };
                    let case = format!("{prefix}:{}", tree_spec(&tree));
                    outerplane_checks(report, &case, &tree, optimize, caps)?;
                }
            }
        }
    }
    Ok(())
}

pub fn outerplane_checks(
    report: &mut VerificationReport,
    case: &str,
    tree: &OrientedTree,
    optimize: bool,
    caps: &Caps,
) -> Result<()> {
    let r = match tree_to_outerplane(tree, optimize) {
        Ok(r) => r,
        Err(e) => return report.record("outerplane.build", case, Err(e)),
    };
    let g = &r.graph;
    report.record("outerplane.dual_round_trip", case, dual_round_trip(g, tree))?;
    report.record(
        "outerplane.face_degrees",
        case,
        face_degrees(g, tree, &r.face_of_node, optimize),
    )?;
    report.record("outerplane.e_cuts", case, e_cut_check(g, caps))?;
    report.record(
        "outerplane.maximal_paths",
        case,
        maximal_path_check(g, caps),
    )?;
    report.record(
        "outerplane.sigma_iso",
        case,
        verify_iso_matchings_ideals(g, caps).map(|_| ()),
    )?;
    core_checks(report, case, g, caps)
}

fn dual_round_trip(g: &PlaneBipartiteGraph, tree: &OrientedTree) -> Result<()> {
    let dual = g.oriented_dual(false);
    let slot = |f: usize| dual.nodes.iter().position(|&x| x == f).expect("inner face");
    let arcs: Vec<(usize, usize)> = dual
        .arcs
        .iter()
        .map(|a| (slot(a.from), slot(a.to)))
        .collect();
    match digraph_isomorphism(dual.nodes.len(), &arcs, tree.len(), tree.arcs()) {
        Some(_) => Ok(()),
        None => fail("directed inner dual is not the tree".into()),
    }
}

fn face_degrees(
    g: &PlaneBipartiteGraph,
    tree: &OrientedTree,
    face_of_node: &[usize],
    optimize: bool,
) -> Result<()> {
    for (v, &f) in face_of_node.iter().enumerate() {
        let half = if optimize {
            tree.in_degree(v).max(tree.out_degree(v))
        } else {
            tree.max_degree()
        }
        .max(2);
        let len = g.face(f).len();
        if len != 2 * half {
            return fail(format!(
                "node {v} has a face of length {len}, expected {}",
                2 * half
            ));
        }
    }
    Ok(())
}

fn e_cut_check(g: &PlaneBipartiteGraph, caps: &Caps) -> Result<()> {
    let search = g.find_e_cuts();
    if !search.in_class_g {
        return fail("realization is not 2-connected outerplane".into());
    }
    let ms = matching::enumerate_perfect_matchings(g, caps)?;
    for cut in &search.cuts {
        for (i, m) in ms.iter().enumerate() {
            let hits = cut.edges.iter().filter(|&&e| m.contains(e)).count();
            if hits != 1 {
                return fail(format!(
                    "e-cut {:?} meets matching {i} in {hits} edges",
                    cut.edges
                ));
            }
        }
    }
    Ok(())
}

/// Every source-to-root path twists each inner face once: all paths agree
/// by path invariance, and the cycle count between the extremes is one.
fn maximal_path_check(g: &PlaneBipartiteGraph, caps: &Caps) -> Result<()> {
    let z = ZDigraph::build(g, caps)?;
    let p = z.poset()?;
    verify_path_invariance(g, &z, &p)?;
    let ext = extremal_matchings(g, &z, &p)?;
    let [e] = ext[..] else {
        return fail(format!("{} components", ext.len()));
    };
    let counts = delta_cycle_counts(g, &z, &p, e.source, e.root)?;
    for f in g.inner_faces() {
        let c = counts.get(&f).copied().unwrap_or(0);
        if c != 1 {
            return fail(format!("face f{f} twisted {c} times between the extremes"));
        }
    }
    Ok(())
}

/// Parts joined by the decomposition suite.
pub const DECOMPOSITION_PARTS: [&str; 3] = ["L(1)", "L(1,1)", "L(2,2)"];

/// Multisets of `k` indices below `n`, in lexicographic order.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in multisets(n, k - 1) {
        let start = rest.last().copied().unwrap_or(0);
        for i in start..n {
            let mut v = rest.clone();
            v.push(i);
            out.push(v);
        }
    }
    out
}

fn decomposition_suite(report: &mut VerificationReport, caps: &Caps) -> Result<()> {
    for k in [2, 3] {
        for pick in multisets(DECOMPOSITION_PARTS.len(), k) {
            let specs: Vec<&str> = pick.iter().map(|&i| DECOMPOSITION_PARTS[i]).collect();
            let case = format!("link:{}", specs.join("+"));
            let parts = specs
                .iter()
                .map(|s| s.parse::<GraphSpec>()?.build(caps))
                .collect::<Result<Vec<_>>>()?;
            decomposition_checks(report, &case, &parts, caps)?;
        }
    }
    Ok(())
}

fn lattice_of(g: &PlaneBipartiteGraph, caps: &Caps) -> Result<(Vec<Matching>, FiniteLattice)> {
    let z = ZDigraph::build(g, caps)?;
    let l = z.poset()?.lattice(caps)?;
    Ok((z.matchings().to_vec(), l))
}

pub fn decomposition_checks(
    report: &mut VerificationReport,
    case: &str,
    parts: &[PlaneBipartiteGraph],
    caps: &Caps,
) -> Result<()> {
    let linked = match link_components(parts) {
        Ok(l) => l,
        Err(e) => return report.record("decomposition.link", case, Err(e)),
    };
    let g = &linked.graph;
    let built = lattice_of(g, caps).and_then(|(ms, l)| {
        let factors = parts
            .iter()
            .map(|p| lattice_of(p, caps).map(|x| x.1))
            .collect::<Result<Vec<_>>>()?;
        Ok((ms, l, factors))
    });
    let (ms, l, factors) = match built {
        Ok(x) => x,
        Err(e) => return report.record("decomposition.lattice", case, Err(e)),
    };

    let forbidden = matching::forbidden_edges(g, &ms);
    report.record(
        "decomposition.link_edges_forbidden",
        case,
        match linked.link_edges.iter().find(|e| !forbidden.contains(e)) {
            Some(e) => fail(format!("link edge {e} lies in a perfect matching")),
            None => Ok(()),
        },
    )?;

    let product = factors[1..]
        .iter()
        .try_fold(factors[0].clone(), |acc, f| acc.direct_product(f, caps));
    report.record(
        "decomposition.product_iso",
        case,
        product.and_then(|prod| {
            if prod.is_isomorphic(&l) {
                Ok(())
            } else {
                fail("lattice is not the product of the parts".into())
            }
        }),
    )?;

    let decomposition = l.irreducible_decomposition(caps);
    report.record(
        "decomposition.factor_multiset",
        case,
        decomposition.clone().and_then(|d| {
            let mut expected: Vec<usize> = factors.iter().map(FiniteLattice::len).collect();
            expected.sort_unstable();
            let mut found = d.factor_sizes();
            found.sort_unstable();
            if found != expected {
                return fail(format!("factor sizes {found:?}, expected {expected:?}"));
            }
            Ok(())
        }),
    )?;
    report.record(
        "decomposition.central_elements",
        case,
        decomposition.and_then(|d| {
            let mut central = d.central_elements();
            central.sort_unstable();
            let mut atoms = l.complemented_atoms()?;
            atoms.sort_unstable();
            if central != atoms {
                return fail(format!(
                    "central elements {central:?}, complemented atoms {atoms:?}"
                ));
            }
            let nontrivial = factors.iter().filter(|f| f.len() > 1).count();
            if nontrivial >= 2 && central.len() != nontrivial {
                return fail(format!(
                    "{} central elements for {nontrivial} factors",
                    central.len()
                ));
            }
            Ok(())
        }),
    )?;
    report.record("decomposition.grid_sublattice", case, grid_checks(&l))?;
    Ok(())
}

/// Every complementary pair off the bounds spans a certified grid of shape
/// `(ρ(x) + 1) × (ρ(1̂) - ρ(x) + 1)`.
pub fn grid_checks(l: &FiniteLattice) -> Result<()> {
    let rho = l.rank_check()?;
    let top_rank = rho[l.top()];
    for (x, y) in l.complements()?.iter().enumerate() {
        let Some(y) = *y else { continue };
        if x == l.bottom() || x == l.top() {
            continue;
        }
        let cx = l.saturated_chain(l.bottom(), x)?;
        let cy = l.saturated_chain(l.bottom(), y)?;
        let grid = l.grid_sublattice(x, y, &cx, &cy)?;
        let expected = (rho[x] + 1, top_rank - rho[x] + 1);
        if grid.shape() != expected {
            return fail(format!(
                "pair ({x}, {y}) spans a {:?} grid, expected {expected:?}",
                grid.shape()
            ));
        }
    }
    Ok(())
}
