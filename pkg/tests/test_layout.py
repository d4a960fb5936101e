import json

import pytest

from hexsynth.circuit import Circuit, Gate, GateKind
from hexsynth.layout import (CouplingMap, IShape, LayoutError, Placement,
                             ishape_brisbane, load_map, place, verify_no_swap)
from hexsynth.library import FAMILY_GATES, build_gate
from hexsynth.transpiler import NativeBasis, lower_and_optimize

K = GateKind


class TestCouplingMap:
    def test_tiny_line(self):
        cmap = load_map({"name": "line", "num_qubits": 2, "edges": [[0, 1]]})
        assert cmap.num_qubits == 2 and cmap.has_edge(1, 0)

    def test_self_loop_rejected(self):
        with pytest.raises(LayoutError):
            load_map({"name": "bad", "num_qubits": 2, "edges": [[0, 0]]})

    def test_dangling_index_rejected(self):
        with pytest.raises(LayoutError):
            load_map({"name": "bad", "num_qubits": 2, "edges": [[0, 5]]})

    def test_malformed_json(self):
        with pytest.raises(LayoutError):
            load_map({"nope": 1})

    def test_shortest_path(self, brisbane):
        assert brisbane.shortest_path(61, 61) == [61]
        assert brisbane.shortest_path(61, 63) == [61, 62, 63]
        path = brisbane.shortest_path(62, 81)
        assert path == [62, 72, 81]

    def test_bundled_map_round_trips(self, brisbane, tmp_path):
        f = tmp_path / "map.json"
        f.write_text(json.dumps(brisbane.as_dict()))
        loaded = load_map(str(f))
        assert loaded.num_qubits == 127
        assert loaded.edges == brisbane.edges

    def test_packaged_brisbane_file(self, brisbane):
        from importlib import resources

        with resources.files("hexsynth.data").joinpath("brisbane.json").open("r") as fh:
            loaded = load_map(fh)
        assert loaded.num_qubits == 127
        assert loaded.edges == brisbane.edges


class TestHeavyHex:
    def test_basic_shape(self, brisbane):
        assert brisbane.num_qubits == 127
        assert len(brisbane.edges) == 144
        assert max(len(brisbane.neighbors(q)) for q in range(127)) == 3

    def test_documented_region_edges(self, brisbane):
        for a, b in ((61, 62), (62, 63), (80, 81), (81, 82), (62, 72), (72, 81)):
            assert brisbane.has_edge(a, b)
        assert not brisbane.has_edge(61, 63)
        assert not brisbane.has_edge(61, 72)

    def test_known_connector(self, brisbane):
        # the connector column used by the 2-qubit transpilation examples
        assert brisbane.has_edge(79, 91) and brisbane.has_edge(91, 98)


class TestIShape:
    def test_brisbane_ishape(self, brisbane):
        shape = ishape_brisbane(brisbane)
        assert set(shape.all_qubits()) == {61, 62, 63, 72, 80, 81, 82}
        assert shape.bridge == 72
        assert brisbane.has_edge(shape.row_a[1], shape.bridge)

    def test_invalid_shape_rejected(self, brisbane):
        with pytest.raises(LayoutError):
            IShape((61, 62, 63), (80, 81, 82), bridge=61).validate(brisbane)
        with pytest.raises(LayoutError):
            IShape((61, 62, 64), (80, 81, 82), bridge=72).validate(brisbane)


class TestPlacement:
    def test_injective(self):
        with pytest.raises(LayoutError):
            Placement({"a": 1, "b": 1})

    def test_json_round_trip(self):
        p = Placement({"c1": 61, "t": 62, "c2": 63})
        assert Placement.from_dict(p.as_dict()).assignment == p.assignment

    def test_and3_placement(self, brisbane):
        p = place("and3", ishape_brisbane(brisbane))
        assert p.assignment == {"c1": 61, "t": 62, "c2": 63}

    def test_and4_and5_placements(self, brisbane):
        shape = ishape_brisbane(brisbane)
        p4 = place("and4", shape).assignment
        assert p4 == {"c1": 61, "anc": 62, "c2": 63, "t": 72, "c3": 81}
        p5 = place("and5", shape).assignment
        assert p5["t"] == 72
        assert {p5["c1"], p5["c2"], p5["c3"], p5["c4"]} == {61, 63, 80, 82}
        assert {p5["anc1"], p5["anc2"]} == {62, 81}

    def test_placement_deterministic(self, brisbane):
        shape = ishape_brisbane(brisbane)
        assert place("fredkin4", shape).assignment == place("fredkin4", shape).assignment

    def test_unplaceable_gate(self, brisbane):
        with pytest.raises(LayoutError, match="does not fit"):
            place("toffoli5", ishape_brisbane(brisbane))


class TestVerifyNoSwap:
    def test_empty_circuit(self, brisbane):
        c = Circuit(1, (), wire_names=("t",))
        ok, violations = verify_no_swap(c, brisbane, Placement({"t": 0}))
        assert ok and violations == []

    @pytest.mark.parametrize("name", FAMILY_GATES)
    @pytest.mark.parametrize("basis", list(NativeBasis), ids=lambda b: b.value)
    def test_family_canonical_placements(self, brisbane, name, basis):
        circuit = lower_and_optimize(build_gate(name), basis)
        placement = place(name, ishape_brisbane(brisbane))
        ok, violations = verify_no_swap(circuit, brisbane, placement)
        assert ok, (name, basis, violations)

    def test_displaced_target_violates(self, brisbane):
        bad = Placement({"c1": 62, "t": 61, "c2": 63})
        ok, violations = verify_no_swap(build_gate("and3"), brisbane, bad)
        assert not ok
        assert any(v["physical"] == [63, 61] for v in violations)

    def test_uncovered_wire_errors(self, brisbane):
        with pytest.raises(LayoutError, match="cover"):
            verify_no_swap(build_gate("and3"), brisbane, Placement({"c1": 61, "t": 62}))

    def test_works_on_any_map(self):
        # square-lattice style map: no heavy-hex assumption in the checker
        square = CouplingMap("square4", 4, frozenset({(0, 1), (1, 2), (2, 3), (3, 0)}))
        c = Circuit(2, (Gate(K.CX, (0, 1)),), wire_names=("a", "b"))
        ok, _ = verify_no_swap(c, square, Placement({"a": 0, "b": 1}))
        assert ok
        ok, violations = verify_no_swap(c, square, Placement({"a": 0, "b": 2}))
        assert not ok and violations[0]["physical"] == [0, 2]
