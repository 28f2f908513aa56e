"""Smoke test for the mixcage Python extension.

Uses an installed ``mixcage`` if there is one, otherwise the library built by
``cargo build -p mixcage-py --release`` (or the debug build).
"""

import importlib.util
import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parents[1]


def load():
    try:
        import mixcage
        return mixcage
    except ImportError:
        pass
    for profile in ("release", "debug"):
        built = ROOT / "target" / profile / "libmixcage_py.so"
        if built.exists():
            target = pathlib.Path(tempfile.mkdtemp()) / "mixcage.so"
            shutil.copy(built, target)
            spec = importlib.util.spec_from_file_location("mixcage", target)
            module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(module)
            return module
    sys.exit("mixcage extension not found; run: cargo build -p mixcage-py --release")


def main():
    mc = load()

    cage = mc.cage_136()
    assert cage.order == 30 and len(cage) == 30
    assert set(cage.degree_profile()) == {(1, 1, 3)}
    assert cage.girth() == 6
    assert mc.is_valid_cycle(cage, cage.girth_witness())
    report = cage.verify(1, 3, 6)
    assert report and report.passed and report.girth == 6
    assert not cage.verify(1, 3, 5)

    pg = mc.projective_incidence(4)
    assert (pg.order, pg.regularity(), pg.girth(), pg.diameter()) == (42, (0, 5), 6, 3)
    assert mc.biaffine(2).girth() == 8

    for q in (3, 5, 7):
        p, z, r, order = mc.family_params(q)
        g = mc.family(q)
        assert g.order == order == 4 * q * q
        assert g.verify(z, r, 6).passed
        assert g.is_strongly_connected()

    cycle = mc.family_six_cycle(7, 2, 3, 1, 5, 2)
    assert len(cycle) == 6 and mc.is_valid_cycle(mc.family(7), cycle)

    bc = mc.bipartite_circulant(11, "line", 0)
    assert bc.regularity() == (3, 0) and bc.girth() == 6
    assert mc.is_valid_cycle(bc, ["[0,0]", "[0',2']", "[0,5]", "[0',7']", "[0,10]", "[0',10']"])

    assert mc.circulant(7, [1, 2]).girth() == 4
    assert mc.moore_bound(3, 6) == 14
    assert mc.ahm_bound(5, 6) == 66
    assert mc.mixed_lower_bound(2, 5, 6) == (71, False)
    assert mc.moore_tree(5, 6).order == 66
    assert mc.moore_tree(5, 6).girth() is None
    witness = mc.lower_bound_witness(2, 5, 6)
    assert witness.order == 71 and witness.girth() == 6

    doc = cage.to_json()
    assert json.loads(doc)["format"] == "mixed-graph/v1"
    assert mc.MixedGraph.from_json(doc) == cage
    assert cage.to_dot().startswith("digraph G {")

    g = mc.MixedGraph(["n0", "n1", "n2"], edges=[("n0", "n1")], arcs=[("n1", "n2")])
    assert g.girth() is None
    g = g.add_arc("n2", "n0")
    assert g.girth() == 3 and g.has_arc("n2", "n0")
    assert g.orient_edge("n0", "n1").has_arc("n0", "n1")

    for bad in (
        lambda: mc.projective_incidence(6),
        lambda: mc.family(9),
        lambda: mc.MixedGraph(["n0"], arcs=[("n0", "n0")]),
        lambda: mc.MixedGraph(["n0", "n1"], edges=[("n0", "n1")], arcs=[("n0", "n1")]),
        lambda: mc.MixedGraph.from_json("{}"),
        lambda: mc.ahm_bound(3, 3),
    ):
        try:
            bad()
        except ValueError:
            continue
        raise AssertionError("expected ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
