//! Python bindings: graphs, matchings, Z-digraphs, lattices and the
//! verification suites.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use matchlat::generators::{link_components, GraphSpec};
use matchlat::io::{
    graph_from_json, graph_to_dot, graph_to_json, hasse_to_dot, zdigraph_to_dot, PosetJson,
    ZDigraphJson,
};
use matchlat::lattice::{order_ideal_lattice, FiniteLattice, FinitePoset};
use matchlat::matching::enumerate_perfect_matchings;
use matchlat::verify::{run_suite, Suite};
use matchlat::ztransform::{extremal_matchings, face_poset_outerplane};
use matchlat::{Caps, Error, PlaneBipartiteGraph};

create_exception!(matchlat_py, MatchlatError, PyException);
create_exception!(matchlat_py, InputError, MatchlatError);
create_exception!(matchlat_py, VerificationError, MatchlatError);
create_exception!(matchlat_py, CapExceededError, MatchlatError);

fn py_err(e: Error) -> PyErr {
    let msg = e.to_string();
    match e.exit_code() {
        1 => VerificationError::new_err(msg),
        3 => CapExceededError::new_err(msg),
        _ => InputError::new_err(msg),
    }
}

trait OrRaise<T> {
    fn or_raise(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for matchlat::Result<T> {
    fn or_raise(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

fn caps(max_matchings: Option<usize>) -> Caps {
    let mut caps = Caps::default();
    if let Some(m) = max_matchings {
        caps.max_matchings = m;
    }
    caps
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializes")
}

/// A plane bipartite graph with a fixed embedding.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: PlaneBipartiteGraph,
}

#[pymethods]
impl PyGraph {
    /// Builds a graph from a spec string such as `P(2,2)` or `tree:a>b`.
    #[staticmethod]
    fn from_spec(spec: &str) -> PyResult<Self> {
        let g = spec
            .parse::<GraphSpec>()
            .and_then(|s| s.build(&Caps::default()))
            .or_raise()?;
        Ok(PyGraph { inner: g })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph_from_json(text).or_raise()?,
        })
    }

    /// Joins graphs in a chain by one new edge between consecutive parts.
    #[staticmethod]
    fn link(parts: Vec<PyRef<'_, PyGraph>>) -> PyResult<Self> {
        let graphs: Vec<PlaneBipartiteGraph> = parts.iter().map(|p| p.inner.clone()).collect();
        Ok(PyGraph {
            inner: link_components(&graphs).or_raise()?.graph,
        })
    }

    fn to_json(&self) -> String {
        graph_to_json(&self.inner)
    }

    fn to_dot(&self) -> String {
        graph_to_dot(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn inner_face_count(&self) -> usize {
        self.inner.inner_face_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    /// Perfect matchings as sorted edge-id lists.
    #[pyo3(signature = (max_matchings=None))]
    fn matchings(&self, max_matchings: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
        let ms = enumerate_perfect_matchings(&self.inner, &caps(max_matchings)).or_raise()?;
        Ok(ms.iter().map(|m| m.edges().to_vec()).collect())
    }

    #[pyo3(signature = (max_matchings=None))]
    fn zdigraph(&self, max_matchings: Option<usize>) -> PyResult<PyZDigraph> {
        let z = matchlat::ZDigraph::build(&self.inner, &caps(max_matchings)).or_raise()?;
        z.poset().or_raise()?;
        Ok(PyZDigraph { inner: z })
    }

    /// The distributive lattice of perfect matchings. Element `i` is
    /// matching `i` of `matchings()`.
    #[pyo3(signature = (max_matchings=None))]
    fn lattice(&self, max_matchings: Option<usize>) -> PyResult<PyLattice> {
        let caps = caps(max_matchings);
        let z = matchlat::ZDigraph::build(&self.inner, &caps).or_raise()?;
        let l = z.poset().and_then(|p| p.lattice(&caps)).or_raise()?;
        Ok(PyLattice { inner: l })
    }

    /// Indices of the top and bottom matchings of each lattice component.
    fn extremal_matchings(&self) -> PyResult<Vec<(usize, usize)>> {
        let z = matchlat::ZDigraph::build(&self.inner, &Caps::default()).or_raise()?;
        let p = z.poset().or_raise()?;
        let ext = extremal_matchings(&self.inner, &z, &p).or_raise()?;
        Ok(ext.iter().map(|e| (e.source, e.root)).collect())
    }

    fn elementary_structure<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = self
            .inner
            .elementary_structure(&Caps::default())
            .or_raise()?;
        let d = PyDict::new(py);
        d.set_item("forbidden_edges", s.forbidden_edges)?;
        d.set_item("elementary_components", s.elementary_components)?;
        d.set_item("is_elementary", s.is_elementary)?;
        d.set_item("is_weakly_elementary", s.is_weakly_elementary)?;
        Ok(d)
    }

    /// Edge sets of the e-cuts.
    fn e_cuts(&self) -> Vec<Vec<usize>> {
        self.inner
            .find_e_cuts()
            .cuts
            .into_iter()
            .map(|c| c.edges)
            .collect()
    }

    /// Face poset of a 2-connected outerplane graph.
    fn face_poset(&self) -> PyResult<PyPoset> {
        Ok(PyPoset {
            inner: face_poset_outerplane(&self.inner).or_raise()?.poset,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertices={}, edges={}, inner_faces={})",
            self.inner.vertex_count(),
            self.inner.edge_count(),
            self.inner.inner_face_count()
        )
    }
}

/// The Z-transformation digraph; arcs point from higher to lower matchings.
#[pyclass(name = "ZDigraph", frozen)]
struct PyZDigraph {
    inner: matchlat::ZDigraph,
}

#[pymethods]
impl PyZDigraph {
    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// `(from, to, face)` triples.
    #[getter]
    fn arcs(&self) -> Vec<(usize, usize, usize)> {
        self.inner
            .arcs()
            .iter()
            .map(|a| (a.from, a.to, a.face))
            .collect()
    }

    fn sources(&self) -> Vec<usize> {
        self.inner.sources()
    }

    fn sinks(&self) -> Vec<usize> {
        self.inner.sinks()
    }

    fn to_json(&self) -> String {
        to_json(&ZDigraphJson::from_digraph(&self.inner))
    }

    fn to_dot(&self) -> String {
        zdigraph_to_dot(&self.inner)
    }
}

#[pyclass(name = "Poset", frozen)]
struct PyPoset {
    inner: FinitePoset,
}

#[pymethods]
impl PyPoset {
    /// Builds a poset from labels and `(lower, upper)` cover pairs.
    #[new]
    fn new(labels: Vec<String>, covers: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyPoset {
            inner: FinitePoset::from_covers(labels, covers).or_raise()?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn le(&self, a: usize, b: usize) -> bool {
        self.inner.le(a, b)
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    #[getter]
    fn covers(&self) -> Vec<(usize, usize)> {
        self.inner.covers().to_vec()
    }

    /// Lattice of order ideals.
    fn ideal_lattice(&self) -> PyResult<PyLattice> {
        let il = order_ideal_lattice(&self.inner, &Caps::default()).or_raise()?;
        Ok(PyLattice { inner: il.lattice })
    }

    fn to_json(&self) -> String {
        to_json(&PosetJson::from_poset(&self.inner))
    }
}

#[pyclass(name = "Lattice", frozen)]
struct PyLattice {
    inner: FiniteLattice,
}

#[pymethods]
impl PyLattice {
    fn __len__(&self) -> usize {
        self.inner.len()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.poset().labels().to_vec()
    }

    #[getter]
    fn covers(&self) -> Vec<(usize, usize)> {
        self.inner.poset().covers().to_vec()
    }

    #[getter]
    fn bottom(&self) -> usize {
        self.inner.bottom()
    }

    #[getter]
    fn top(&self) -> usize {
        self.inner.top()
    }

    fn le(&self, a: usize, b: usize) -> bool {
        self.inner.le(a, b)
    }

    fn meet(&self, a: usize, b: usize) -> usize {
        self.inner.meet(a, b)
    }

    fn join(&self, a: usize, b: usize) -> usize {
        self.inner.join(a, b)
    }

    fn is_distributive(&self) -> bool {
        self.inner.is_distributive()
    }

    /// Rank of every element.
    fn ranks(&self) -> PyResult<Vec<usize>> {
        self.inner.rank_check().or_raise()
    }

    fn complements(&self) -> PyResult<Vec<Option<usize>>> {
        self.inner.complements().or_raise()
    }

    fn join_irreducibles(&self) -> PyPoset {
        PyPoset {
            inner: self.inner.join_irreducibles().poset,
        }
    }

    /// Factor sizes and central elements of the irreducible decomposition.
    fn decompose<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = self
            .inner
            .irreducible_decomposition(&Caps::default())
            .or_raise()?;
        let out = PyDict::new(py);
        out.set_item("factor_sizes", d.factor_sizes())?;
        out.set_item("central_elements", d.central_elements())?;
        out.set_item("coordinates", d.product_iso)?;
        Ok(out)
    }

    fn is_isomorphic(&self, other: &PyLattice) -> bool {
        self.inner.is_isomorphic(&other.inner)
    }

    fn direct_product(&self, other: &PyLattice) -> PyResult<PyLattice> {
        Ok(PyLattice {
            inner: self
                .inner
                .direct_product(&other.inner, &Caps::default())
                .or_raise()?,
        })
    }

    fn to_json(&self) -> String {
        to_json(&PosetJson::from_lattice(&self.inner, true))
    }

    fn to_dot(&self) -> PyResult<String> {
        let rank = self.inner.rank_check().or_raise()?;
        Ok(hasse_to_dot(self.inner.poset(), &rank))
    }
}

/// Runs a verification suite and returns its report as a dict.
#[pyfunction]
fn verify<'py>(py: Python<'py>, suite: &str) -> PyResult<Bound<'py, PyDict>> {
    let suite: Suite = suite.parse().or_raise()?;
    let report = run_suite(suite, &Caps::default()).or_raise()?;
    let out = PyDict::new(py);
    out.set_item("suite", &report.suite)?;
    out.set_item("passed", report.passed())?;
    out.set_item("pass", report.totals.pass)?;
    out.set_item("fail", report.totals.fail)?;
    out.set_item("text", report.to_text())?;
    Ok(out)
}

#[pymodule]
fn matchlat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyGraph>()?;
    m.add_class::<PyZDigraph>()?;
    m.add_class::<PyPoset>()?;
    m.add_class::<PyLattice>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("MatchlatError", py.get_type::<MatchlatError>())?;
    m.add("InputError", py.get_type::<InputError>())?;
    m.add("VerificationError", py.get_type::<VerificationError>())?;
    m.add("CapExceededError", py.get_type::<CapExceededError>())?;
    Ok(())
}
