"""Smoke test for the Python bindings; exits nonzero on the first failure."""

import json

import matchlat_py as ml


def main():
    hexagon = ml.Graph.from_spec("L(1)")
    assert hexagon.vertex_count == 6
    assert len(hexagon.matchings()) == 2

    p22 = ml.Graph.from_spec("P(2,2)")
    lattice = p22.lattice()
    assert len(lattice) == 6
    assert lattice.is_distributive()
    assert lattice.decompose()["factor_sizes"] == [6]
    grid = ml.Poset(["a", "b", "c", "d"], [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert lattice.is_isomorphic(grid.ideal_lattice())

    z = p22.zdigraph()
    assert len(z.sources()) == 1 and len(z.sinks()) == 1
    assert len(z.arcs) == len(lattice.covers)

    linked = ml.Graph.link([hexagon, ml.Graph.from_spec("L(1,1)")])
    d = linked.lattice().decompose()
    assert d["factor_sizes"] == [2, 3]
    assert len(d["central_elements"]) == 2

    tree = ml.Graph.from_spec("tree:a>b,c>b")
    assert len(tree.face_poset()) == 3
    assert tree.e_cuts()
    assert tree.elementary_structure()["is_elementary"]

    again = ml.Graph.from_json(p22.to_json())
    assert again.to_json() == p22.to_json()
    assert json.loads(lattice.to_json())["rank"][lattice.top] == 4

    try:
        ml.Graph.from_spec("L(1,2)")
    except ml.InputError:
        pass
    else:
        raise AssertionError("bad rows accepted")
    try:
        ml.Graph.from_spec("P(3,3)").matchings(max_matchings=5)
    except ml.CapExceededError:
        pass
    else:
        raise AssertionError("cap ignored")

    report = ml.verify("core")
    assert report["passed"], report["text"]
    print(f"smoke test ok ({report['pass']} core checks)")


if __name__ == "__main__":
    main()
