"""Heavy-hex coupling-map model, I-shape placements, and adjacency checking.

The 127-qubit map is generated from the heavy-hex construction: seven
horizontal rows of qubits joined by four-qubit connector columns, giving a
maximum vertex degree of three.  The I-shape is the seven-qubit subgraph of
two parallel row triples bridged through a connector qubit; one triple hosts
one 3-qubit core with its target on the middle qubit, so the whole gate
family maps without SWAP insertion.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .circuit import Circuit, CircuitError


class LayoutError(CircuitError):
    pass


@dataclass(frozen=True)
class CouplingMap:
    """Physical-qubit adjacency graph (undirected, no self-loops)."""

    name: str
    num_qubits: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            a, b = int(e[0]), int(e[1])
            if a == b:
                raise LayoutError(f"self-loop edge [{a}, {b}]")
            if not (0 <= a < self.num_qubits and 0 <= b < self.num_qubits):
                raise LayoutError(f"edge [{a}, {b}] outside 0..{self.num_qubits - 1}")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, q: int) -> tuple[int, ...]:
        return tuple(sorted(b if a == q else a for a, b in self.edges if q in (a, b)))

    def shortest_path(self, src: int, dst: int):
        """BFS path [src, ..., dst], or None if disconnected."""
        if src == dst:
            return [src]
        prev = {src: None}
        queue = deque([src])
        while queue:
            cur = queue.popleft()
            for nxt in self.neighbors(cur):
                if nxt in prev:
                    continue
                prev[nxt] = cur
                if nxt == dst:
                    path = [dst]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                queue.append(nxt)
        return None

    def as_dict(self) -> dict:
        return {"name": self.name, "num_qubits": self.num_qubits,
                "edges": sorted([a, b] for a, b in self.edges)}


def load_map(source) -> CouplingMap:
    """Read a coupling map from a JSON file path, file object, or dict."""
    if isinstance(source, dict):
        data = source
    elif hasattr(source, "read"):
        data = json.load(source)
    else:
        with open(source, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    try:
        return CouplingMap(name=str(data.get("name", "unnamed")),
                           num_qubits=int(data["num_qubits"]),
                           edges=frozenset(tuple(e) for e in data["edges"]))
    except (KeyError, TypeError, ValueError) as e:
        raise LayoutError(f"malformed coupling-map JSON: {e}") from None


def heavy_hex_127(name: str = "brisbane") -> CouplingMap:
    """The 127-qubit heavy-hex lattice used by IBM Eagle-class devices.

    Rows of 14/15 qubits with horizontal edges, joined by connector qubits
    at alternating column offsets (0,4,8,12) and (2,6,10,14).
    """
    row_start = [0, 18, 37, 56, 75, 94, 113]
    edges = []

    def row_id(r: int, col: int) -> int:
        if r == 0:
            if not 0 <= col <= 13:
                raise LayoutError(f"row 0 has no column {col}")
            return col
        if r == 6:
            if not 1 <= col <= 14:
                raise LayoutError(f"row 6 has no column {col}")
            return row_start[6] + col - 1
        return row_start[r] + col

    # horizontal edges
    for r, start in enumerate(row_start):
        length = 14 if r in (0, 6) else 15
        for i in range(length - 1):
            edges.append((start + i, start + i + 1))
    # connector columns between consecutive rows
    conn = 14
    for r in range(6):
        cols = (0, 4, 8, 12) if r % 2 == 0 else (2, 6, 10, 14)
        for col in cols:
            edges.append((row_id(r, col), conn))
            edges.append((conn, row_id(r + 1, col)))
            conn += 1
        conn += 15  # skip over the next row's ids
    return CouplingMap(name=name, num_qubits=127, edges=frozenset(edges))


@dataclass(frozen=True)
class IShape:
    """Two linear qubit triples bridged by a middle qubit."""

    row_a: tuple[int, int, int]
    row_b: tuple[int, int, int]
    bridge: int

    def all_qubits(self) -> tuple[int, ...]:
        return self.row_a + (self.bridge,) + self.row_b

    def validate(self, cmap: CouplingMap):
        qubits = self.all_qubits()
        if len(set(qubits)) != 7:
            raise LayoutError("I-shape qubits must be distinct")
        required = [
            (self.row_a[0], self.row_a[1]), (self.row_a[1], self.row_a[2]),
            (self.row_b[0], self.row_b[1]), (self.row_b[1], self.row_b[2]),
            (self.row_a[1], self.bridge), (self.bridge, self.row_b[1]),
        ]
        for a, b in required:
            if not cmap.has_edge(a, b):
                raise LayoutError(f"I-shape edge ({a}, {b}) missing from map {cmap.name!r}")


def ishape_brisbane(cmap: CouplingMap | None = None) -> IShape:
    """The documented I-shape region {61, 62, 63, 72, 80, 81, 82}."""
    shape = IShape(row_a=(61, 62, 63), row_b=(80, 81, 82), bridge=72)
    shape.validate(cmap if cmap is not None else heavy_hex_127())
    return shape


@dataclass(frozen=True)
class Placement:
    """Injective assignment of wire names to physical qubit indices."""

    assignment: dict

    def __post_init__(self):
        vals = list(self.assignment.values())
        if len(set(vals)) != len(vals):
            raise LayoutError(f"placement is not injective: {self.assignment}")

    def as_dict(self) -> dict:
        return {"assignment": dict(self.assignment)}

    @staticmethod
    def from_dict(data: dict) -> "Placement":
        return Placement(assignment=dict(data["assignment"]))


# wire-name -> I-shape slot, per gate family member; slots are
# a0,a1,a2 (first triple), g (bridge), b0,b1,b2 (second triple)
_PLACEMENT_SLOTS = {
    "and3": {"c1": "a0", "t": "a1", "c2": "a2"},
    "miller3": {"c1": "a0", "t": "a1", "c2": "a2"},
    "fredkin3": {"c": "a0", "b": "a1", "a": "a2"},
    "csx2": {"c": "a0", "t": "a1"},
    "csxdg2": {"c": "a0", "t": "a1"},
    "swap2": {"a": "a0", "b": "a1"},
    "and4": {"c1": "a0", "anc": "a1", "c2": "a2", "t": "g", "c3": "b1"},
    "and5": {"c1": "a0", "anc1": "a1", "c2": "a2", "t": "g",
             "c3": "b0", "anc2": "b1", "c4": "b2"},
    "fredkin4": {"c1": "a0", "anc": "a1", "c2": "a2", "b": "g", "a": "b1"},
    "csx3": {"c1": "a0", "anc": "a1", "c2": "a2", "t": "g"},
}
for _alias, _base in (("nand3", "and3"), ("or3", "and3"), ("nor3", "and3"),
                      ("imp3", "and3"), ("inh3", "and3"),
                      ("pos5", "and5"), ("sop5", "and5"), ("csxdg3", "csx3")):
    _PLACEMENT_SLOTS[_alias] = _PLACEMENT_SLOTS[_base]


def place(gate_name: str, shape: IShape) -> Placement:
    """Canonical no-SWAP placement of a family gate onto an I-shape.

    Every core's target lands on the middle qubit of its triple (or on the
    bridge, whose two neighbors are the triple middles).
    """
    slots = _PLACEMENT_SLOTS.get(gate_name)
    if slots is None:
        raise LayoutError(f"gate {gate_name!r} does not fit an I-shape placement")
    phys = {"a0": shape.row_a[0], "a1": shape.row_a[1], "a2": shape.row_a[2],
            "b0": shape.row_b[0], "b1": shape.row_b[1], "b2": shape.row_b[2],
            "g": shape.bridge}
    return Placement(assignment={wire: phys[slot] for wire, slot in slots.items()})


def verify_no_swap(circuit: Circuit, cmap: CouplingMap, placement: Placement):
    """Check that every two-qubit gate acts on a coupling-map edge.

    Returns (ok, violations); each violation is a dict naming the offending
    gate and the non-adjacent physical pair.
    """
    if circuit.wire_names is None:
        raise LayoutError("circuit has no wire names to match the placement")
    try:
        log2phys = [placement.assignment[w] for w in circuit.wire_names]
    except KeyError as e:
        raise LayoutError(f"placement does not cover wire {e.args[0]!r}") from None
    violations = []
    for g in circuit.gates:
        if len(g.qubits) != 2:
            continue
        pa, pb = log2phys[g.qubits[0]], log2phys[g.qubits[1]]
        if not cmap.has_edge(pa, pb):
            violations.append({
                "gate": g.kind.value,
                "wires": [circuit.wire_names[q] for q in g.qubits],
                "physical": [pa, pb],
            })
    return (not violations), violations
