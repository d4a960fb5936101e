"""Gate and circuit intermediate representation with cost and depth metrics.

Conventions used throughout the package:
  - Qubit 0 is the least significant qubit: basis index b encodes
    |q_{n-1} ... q_1 q_0> with bit i of b holding the state of qubit i.
  - For two-qubit gates, qubits[0] is the control and qubits[1] the target
    (SWAP is symmetric).
  - Rotation angles are exact rational multiples of pi whenever possible so
    that adjacent rotations merge losslessly; a float fallback exists for
    angles that are not rational multiples of pi.

Circuits are immutable values; builders and transforms return new circuits.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class GateKind(Enum):
    I = "i"
    X = "x"
    Y = "y"
    Z = "z"
    H = "h"
    SX = "sx"
    SXDG = "sxdg"
    S = "s"
    SDG = "sdg"
    T = "t"
    TDG = "tdg"
    RZ = "rz"
    RY = "ry"
    CX = "cx"
    CY = "cy"
    CZ = "cz"
    SWAP = "swap"
    ECR = "ecr"

    @property
    def arity(self) -> int:
        return 2 if self in _TWO_QUBIT else 1

    @property
    def takes_angle(self) -> bool:
        return self in (GateKind.RZ, GateKind.RY)


_TWO_QUBIT = frozenset({GateKind.CX, GateKind.CY, GateKind.CZ, GateKind.SWAP, GateKind.ECR})

CLIFFORD_T_KINDS = (
    GateKind.I, GateKind.X, GateKind.Y, GateKind.Z, GateKind.H,
    GateKind.SX, GateKind.SXDG, GateKind.S, GateKind.SDG,
    GateKind.T, GateKind.TDG, GateKind.CX, GateKind.CY, GateKind.CZ, GateKind.SWAP,
)


class CircuitError(ValueError):
    """Raised for structurally invalid gates, circuits, or circuit text."""


@dataclass(frozen=True)
class Angle:
    """A rotation angle, stored as a rational multiple of pi when exact.

    `frac` is the multiple of pi (e.g. Fraction(1, 4) for pi/4); `value`
    carries plain radians only when `frac` is None.  Angles normalize to
    the half-open interval (-2*pi, 2*pi].
    """

    frac: Fraction | None = None
    value: float = 0.0

    @staticmethod
    def pi_frac(num: int, den: int = 1) -> "Angle":
        return Angle(frac=Fraction(num, den))._normalized()

    @staticmethod
    def from_radians(radians: float) -> "Angle":
        return Angle(frac=None, value=float(radians))._normalized()

    @property
    def rational(self) -> bool:
        return self.frac is not None

    @property
    def radians(self) -> float:
        return float(self.frac) * math.pi if self.frac is not None else self.value

    def _normalized(self) -> "Angle":
        if self.frac is not None:
            r = self.frac % 4
            if r > 2:
                r -= 4
            return Angle(frac=r)
        r = math.fmod(self.value, 4 * math.pi)
        if r <= -2 * math.pi:
            r += 4 * math.pi
        elif r > 2 * math.pi:
            r -= 4 * math.pi
        return Angle(frac=None, value=r)

    def plus(self, other: "Angle") -> "Angle":
        if self.frac is not None and other.frac is not None:
            return Angle(frac=self.frac + other.frac)._normalized()
        return Angle.from_radians(self.radians + other.radians)

    def negated(self) -> "Angle":
        if self.frac is not None:
            return Angle(frac=-self.frac)._normalized()
        return Angle.from_radians(-self.value)

    def is_zero_mod_2pi(self) -> bool:
        """True when the rotation is the identity up to global phase."""
        if self.frac is not None:
            return self.frac % 2 == 0
        r = math.fmod(self.value, 2 * math.pi)
        return min(abs(r), abs(abs(r) - 2 * math.pi)) < 1e-12

    def text(self) -> str:
        if self.frac is None:
            return repr(self.value)
        num, den = self.frac.numerator, self.frac.denominator
        if num == 0:
            return "0"
        sign = "-" if num < 0 else ""
        num = abs(num)
        head = "pi" if num == 1 else f"{num}*pi"
        tail = "" if den == 1 else f"/{den}"
        return sign + head + tail


_ANGLE_RE = re.compile(r"^(?P<sign>-)?(?:(?P<num>\d+)\*)?pi(?:/(?P<den>\d+))?$")


def parse_angle(expr: str) -> Angle:
    expr = expr.strip()
    if expr == "0":
        return Angle.pi_frac(0)
    m = _ANGLE_RE.match(expr)
    if m:
        num = int(m.group("num") or 1)
        den = int(m.group("den") or 1)
        if m.group("sign"):
            num = -num
        return Angle.pi_frac(num, den)
    try:
        return Angle.from_radians(float(expr))
    except ValueError:
        raise CircuitError(f"bad angle expression: {expr!r}") from None


@dataclass(frozen=True)
class Gate:
    """One gate instance: a kind, its qubits, and an angle for RZ/RY."""

    kind: GateKind
    qubits: tuple[int, ...]
    angle: Angle | None = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(self.qubits))
        if len(self.qubits) != self.kind.arity:
            raise CircuitError(f"{self.kind.value} expects {self.kind.arity} qubit(s), got {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise CircuitError(f"repeated qubit in {self.kind.value} {self.qubits}")
        if self.kind.takes_angle:
            if self.angle is None:
                raise CircuitError(f"{self.kind.value} requires an angle")
            object.__setattr__(self, "angle", self.angle._normalized())
        elif self.angle is not None:
            raise CircuitError(f"{self.kind.value} takes no angle")

    def text(self) -> str:
        args = ", ".join(f"q[{q}]" for q in self.qubits)
        if self.angle is not None:
            return f"{self.kind.value}({self.angle.text()}) {args}"
        return f"{self.kind.value} {args}"


ROLE_CONTROL = "control"
ROLE_TARGET = "target"
ROLE_ANCILLA = "ancilla"


@dataclass(frozen=True)
class Circuit:
    """An ordered gate sequence over `width` qubits.

    `roles` optionally tags each qubit as control/target/ancilla; ancilla
    qubits are assumed initialized to |0>.  `wire_names` optionally labels
    wires (c1, t, anc, ...) for layout placement and reporting.
    """

    width: int
    gates: tuple[Gate, ...] = ()
    roles: tuple[str, ...] | None = None
    name: str = ""
    wire_names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.width < 1:
            raise CircuitError("circuit width must be >= 1")
        for g in self.gates:
            if any(q < 0 or q >= self.width for q in g.qubits):
                raise CircuitError(f"gate {g.kind.value} {g.qubits} outside width {self.width}")
        for attr in ("roles", "wire_names"):
            v = getattr(self, attr)
            if v is not None:
                object.__setattr__(self, attr, tuple(v))
                if len(v) != self.width:
                    raise CircuitError(f"{attr} length {len(v)} != width {self.width}")

    def with_gates(self, gates, name: str | None = None) -> "Circuit":
        return Circuit(self.width, tuple(gates), self.roles, self.name if name is None else name,
                       self.wire_names)

    def relabeled(self, mapping) -> "Circuit":
        """Apply a qubit permutation: old index i moves to mapping[i]."""
        if not isinstance(mapping, dict):
            mapping = {i: m for i, m in enumerate(mapping)}
        if sorted(mapping) != list(range(self.width)) or sorted(mapping.values()) != list(range(self.width)):
            raise CircuitError(f"not a permutation of 0..{self.width - 1}: {mapping}")
        gates = tuple(Gate(g.kind, tuple(mapping[q] for q in g.qubits), g.angle) for g in self.gates)
        roles = wire_names = None
        if self.roles is not None:
            roles = tuple(self.roles[i] for i in sorted(mapping, key=mapping.get))
        if self.wire_names is not None:
            wire_names = tuple(self.wire_names[i] for i in sorted(mapping, key=mapping.get))
        return Circuit(self.width, gates, roles, self.name, wire_names)

    def control_qubits(self) -> tuple[int, ...]:
        return self._role_qubits(ROLE_CONTROL)

    def target_qubits(self) -> tuple[int, ...]:
        return self._role_qubits(ROLE_TARGET)

    def ancilla_qubits(self) -> tuple[int, ...]:
        return self._role_qubits(ROLE_ANCILLA)

    def _role_qubits(self, role: str) -> tuple[int, ...]:
        if self.roles is None:
            return ()
        return tuple(i for i, r in enumerate(self.roles) if r == role)


@dataclass(frozen=True)
class CostReport:
    """Per-gate-tag counts plus total quantum cost and circuit depth."""

    counts: dict
    qc: int
    depth: int

    def __post_init__(self):
        if self.qc != sum(self.counts.values()):
            raise CircuitError("qc must equal the sum of counts")

    def as_dict(self) -> dict:
        return {"counts": dict(self.counts), "qc": self.qc, "depth": self.depth}


def depth(circuit: Circuit) -> int:
    """Greedy layering depth; every gate occupies all its qubits for one step."""
    level = [0] * circuit.width
    for g in circuit.gates:
        layer = 1 + max(level[q] for q in g.qubits)
        for q in g.qubits:
            level[q] = layer
    return max(level)


def count_gates(circuit: Circuit) -> CostReport:
    """Count gates by tag (RZ counts once per instance regardless of angle)."""
    counts = Counter(g.kind.value for g in circuit.gates)
    return CostReport(counts=dict(counts), qc=len(circuit.gates), depth=depth(circuit))


def emit_text(circuit: Circuit) -> str:
    """Render the line-oriented circuit text format (round-trips via parse_text)."""
    lines = [f"qubits {circuit.width}"]
    lines.extend(g.text() for g in circuit.gates)
    return "\n".join(lines) + "\n"


_LINE_RE = re.compile(
    r"^(?P<tag>[a-z]+)(?:\((?P<angle>[^)]*)\))?\s+q\[(?P<q0>\d+)\](?:\s*,\s*q\[(?P<q1>\d+)\])?$"
)
_KIND_BY_TAG = {k.value: k for k in GateKind}


def parse_text(text: str) -> Circuit:
    """Parse the circuit text format; inverse of emit_text.

    The `qubits N` header is optional; without it the width is inferred
    from the largest qubit index.
    """
    width: int | None = None
    gates: list[Gate] = []
    max_q = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0].strip()
        if not line:
            continue
        if line.startswith("qubits"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise CircuitError(f"line {lineno}: bad header {line!r}")
            width = int(parts[1])
            continue
        m = _LINE_RE.match(line)
        if not m:
            raise CircuitError(f"line {lineno}: cannot parse {line!r}")
        tag = m.group("tag")
        kind = _KIND_BY_TAG.get(tag)
        if kind is None:
            raise CircuitError(f"line {lineno}: unknown gate tag {tag!r}")
        qubits = [int(m.group("q0"))]
        if m.group("q1") is not None:
            qubits.append(int(m.group("q1")))
        if len(qubits) != kind.arity:
            raise CircuitError(f"line {lineno}: {tag} expects {kind.arity} qubit(s)")
        angle = None
        if m.group("angle") is not None:
            if not kind.takes_angle:
                raise CircuitError(f"line {lineno}: {tag} takes no angle")
            try:
                angle = parse_angle(m.group("angle"))
            except CircuitError as e:
                raise CircuitError(f"line {lineno}: {e}") from None
        elif kind.takes_angle:
            raise CircuitError(f"line {lineno}: {tag} requires an angle")
        if width is not None and any(q >= width for q in qubits):
            raise CircuitError(f"line {lineno}: qubit index beyond declared width {width}")
        max_q = max(max_q, *qubits)
        gates.append(Gate(kind, tuple(qubits), angle))
    if width is None:
        width = max_q + 1 if max_q >= 0 else 1
    return Circuit(width=width, gates=tuple(gates))
