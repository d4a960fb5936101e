"""Exact dense statevector and unitary simulation for small circuits.

All verification in the package funnels through here: unitary equivalence at
three strengths (global phase, relative phase, classical), Boolean truth
tables with deterministic-target checking, stage-by-stage phase traces of the
symmetric 3-bit cores, Pauli conjugation by Clifford gates, and q-sphere
point extraction.

Matrix conventions:
  - basis index bit i corresponds to qubit i (qubit 0 least significant);
  - two-qubit matrices are indexed (control_bit << 1) | target_bit;
  - RZ(g) = diag(e^{-ig/2}, e^{+ig/2}), while Z/S/T are the phase-form
    diag(1, e^{i phi}) gates, so Z and RZ(pi) differ by a global phase;
  - ECR = (IX - XY)/sqrt(2) in control (x) target ordering.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .circuit import Circuit, GateKind

ATOL_NORM = 1e-10
ATOL_UNITARY = 1e-12
ATOL_EQUIV = 1e-9
MAX_UNITARY_QUBITS = 12


class SimulationError(ValueError):
    """Raised for width mismatches, resource-guard violations, and
    circuits that fail a determinism or equatorial-form requirement."""


# ---------------------------------------------------------------------------
# gate matrices

_SQ2 = 1.0 / math.sqrt(2.0)
_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.diag([1, -1]).astype(complex)

_FIXED_1Q = {
    GateKind.I: _I2,
    GateKind.X: _X,
    GateKind.Y: _Y,
    GateKind.Z: _Z,
    GateKind.H: _SQ2 * np.array([[1, 1], [1, -1]], dtype=complex),
    GateKind.SX: 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=complex),
    GateKind.SXDG: 0.5 * np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]], dtype=complex),
    GateKind.S: np.diag([1, 1j]).astype(complex),
    GateKind.SDG: np.diag([1, -1j]).astype(complex),
    GateKind.T: np.diag([1, cmath.exp(1j * math.pi / 4)]).astype(complex),
    GateKind.TDG: np.diag([1, cmath.exp(-1j * math.pi / 4)]).astype(complex),
}

_FIXED_2Q = {
    GateKind.CX: np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex),
    GateKind.CY: np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1j], [0, 0, 1j, 0]], dtype=complex),
    GateKind.CZ: np.diag([1, 1, 1, -1]).astype(complex),
    GateKind.SWAP: np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex),
    GateKind.ECR: _SQ2 * (np.kron(_I2, _X) - np.kron(_X, _Y)),
}


def gate_matrix(kind: GateKind, angle=None) -> np.ndarray:
    """The unitary matrix of a gate kind under the package conventions."""
    if kind in _FIXED_1Q:
        return _FIXED_1Q[kind].copy()
    if kind in _FIXED_2Q:
        return _FIXED_2Q[kind].copy()
    if angle is None:
        raise SimulationError(f"{kind.value} requires an angle")
    g = angle.radians if hasattr(angle, "radians") else float(angle)
    if kind is GateKind.RZ:
        return np.diag([cmath.exp(-1j * g / 2), cmath.exp(1j * g / 2)]).astype(complex)
    if kind is GateKind.RY:
        c, s = math.cos(g / 2), math.sin(g / 2)
        return np.array([[c, -s], [s, c]], dtype=complex)
    raise SimulationError(f"no matrix for {kind.value}")


# ---------------------------------------------------------------------------
# states

@dataclass(frozen=True)
class Statevector:
    """n-qubit pure state; amps[b] is the amplitude of |q_{n-1} ... q_0> = b."""

    n: int
    amps: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=complex)
        object.__setattr__(self, "amps", amps)
        if amps.shape != (2 ** self.n,):
            raise SimulationError(f"expected {2 ** self.n} amplitudes, got {amps.shape}")
        if abs(np.linalg.norm(amps) - 1.0) > ATOL_NORM:
            raise SimulationError("state is not normalized")

    @staticmethod
    def zeros(n: int) -> "Statevector":
        amps = np.zeros(2 ** n, dtype=complex)
        amps[0] = 1.0
        return Statevector(n, amps)

    @staticmethod
    def basis(n: int, bits: dict[int, int]) -> "Statevector":
        """Computational basis state with the given {qubit: bit} values (others 0)."""
        index = sum((bit & 1) << q for q, bit in bits.items())
        amps = np.zeros(2 ** n, dtype=complex)
        amps[index] = 1.0
        return Statevector(n, amps)

    def probability_of_one(self, qubit: int) -> float:
        idx = np.arange(2 ** self.n)
        mask = (idx >> qubit) & 1 == 1
        return float(np.sum(np.abs(self.amps[mask]) ** 2))


def _apply_matrix(amps: np.ndarray, mat: np.ndarray, qubits: tuple[int, ...], n: int) -> np.ndarray:
    """Embed a k-qubit matrix at the given qubit positions (qubits[0] = MSB
    of the local index) and apply it; `amps` may carry trailing batch axes."""
    k = len(qubits)
    batch = amps.shape[1:] if amps.ndim > 1 else ()
    t = amps.reshape((2,) * n + batch)
    axes = [n - 1 - q for q in qubits]
    t = np.moveaxis(t, axes, range(k))
    shape = t.shape
    t = mat @ t.reshape(2 ** k, -1)
    t = np.moveaxis(t.reshape(shape), range(k), axes)
    return t.reshape((2 ** n,) + batch)


def apply(circuit: Circuit, state: Statevector) -> Statevector:
    """Left-to-right application of the circuit's gates to a state."""
    if state.n != circuit.width:
        raise SimulationError(f"state has {state.n} qubits, circuit has {circuit.width}")
    amps = state.amps.copy()
    for g in circuit.gates:
        amps = _apply_matrix(amps, gate_matrix(g.kind, g.angle), g.qubits, circuit.width)
    return Statevector(circuit.width, amps)


def unitary_of(circuit: Circuit) -> np.ndarray:
    """Dense unitary of the whole circuit (guarded to 12 qubits)."""
    if circuit.width > MAX_UNITARY_QUBITS:
        raise SimulationError(f"unitary_of supports at most {MAX_UNITARY_QUBITS} qubits")
    u = np.eye(2 ** circuit.width, dtype=complex)
    for g in circuit.gates:
        u = _apply_matrix(u, gate_matrix(g.kind, g.angle), g.qubits, circuit.width)
    return u


def is_unitary(mat: np.ndarray, atol: float = ATOL_UNITARY) -> bool:
    return bool(np.allclose(mat.conj().T @ mat, np.eye(mat.shape[0]), atol=atol))


# ---------------------------------------------------------------------------
# Clifford conjugation of Pauli gates

_CLIFFORD_1Q = (GateKind.I, GateKind.X, GateKind.Y, GateKind.Z, GateKind.H,
                GateKind.SX, GateKind.SXDG, GateKind.S, GateKind.SDG)
_PAULIS = (GateKind.X, GateKind.Y, GateKind.Z)


def pauli_conjugate(c: GateKind, p: GateKind) -> tuple[GateKind, int]:
    """Resolve C . P . C^dagger to a signed Pauli, by matrix comparison."""
    if c not in _CLIFFORD_1Q:
        raise SimulationError(f"{c.value} is not a single-qubit Clifford gate")
    if p not in _PAULIS:
        raise SimulationError(f"{p.value} is not a Pauli gate")
    cm = gate_matrix(c)
    m = cm @ gate_matrix(p) @ cm.conj().T
    for cand in _PAULIS:
        pm = gate_matrix(cand)
        if np.allclose(m, pm, atol=ATOL_UNITARY):
            return cand, +1
        if np.allclose(m, -pm, atol=ATOL_UNITARY):
            return cand, -1
    raise SimulationError(f"{c.value} . {p.value} . {c.value}^dagger is not a signed Pauli")


# ---------------------------------------------------------------------------
# equivalence checking

class EquivalenceLevel(Enum):
    L1_GLOBAL_PHASE = 3
    L2_RELATIVE_PHASE = 2
    L3_CLASSICAL = 1
    NONE = 0

    def at_least(self, other: "EquivalenceLevel") -> bool:
        return self.value >= other.value


def equivalence_of_unitaries(ua: np.ndarray, ub: np.ndarray) -> EquivalenceLevel:
    """Strongest equivalence level satisfied by two equal-size unitaries."""
    if ua.shape != ub.shape:
        raise SimulationError(f"shape mismatch {ua.shape} vs {ub.shape}")
    dim = ua.shape[0]
    if abs(np.trace(ua.conj().T @ ub)) / dim >= 1 - ATOL_EQUIV:
        return EquivalenceLevel.L1_GLOBAL_PHASE
    if np.max(np.abs(np.abs(ua) - np.abs(ub))) <= ATOL_EQUIV:
        return EquivalenceLevel.L2_RELATIVE_PHASE
    # column j of |U|^2 is the output distribution for basis input j
    if np.max(np.abs(np.abs(ua) ** 2 - np.abs(ub) ** 2)) <= ATOL_EQUIV:
        return EquivalenceLevel.L3_CLASSICAL
    return EquivalenceLevel.NONE


def equivalence(a: Circuit, b: Circuit) -> EquivalenceLevel:
    if a.width != b.width:
        raise SimulationError(f"width mismatch: {a.width} vs {b.width}")
    return equivalence_of_unitaries(unitary_of(a), unitary_of(b))


# ---------------------------------------------------------------------------
# truth tables

def truth_table(circuit: Circuit, target: int, controls, ancillas=()) -> dict[str, int]:
    """Measure the Boolean function on `target` over all control assignments.

    `controls` lists control qubits least-significant first, so the key for
    an assignment is the bit string 'c_k ... c_2 c_1'.  Target and ancillas
    start in |0>; ancillas may end dirty.  Raises if any assignment leaves
    the target non-deterministic.
    """
    controls = tuple(controls)
    wires = (target,) + controls + tuple(ancillas)
    if len(set(wires)) != len(wires):
        raise SimulationError("target, controls, and ancillas must be distinct wires")
    table: dict[str, int] = {}
    k = len(controls)
    for m in range(2 ** k):
        bits = {q: (m >> j) & 1 for j, q in enumerate(controls)}
        out = apply(circuit, Statevector.basis(circuit.width, bits))
        p1 = out.probability_of_one(target)
        if p1 >= 1 - ATOL_NORM:
            bit = 1
        elif p1 <= ATOL_NORM:
            bit = 0
        else:
            raise SimulationError(f"non-deterministic target for controls {m:0{k}b}: p(1)={p1:.6f}")
        table[format(m, f"0{k}b")] = bit
    return table


def truth_string(table: dict[str, int]) -> str:
    """Flatten a truth table to a string over ascending assignments (00,01,...)."""
    return "".join(str(table[k]) for k in sorted(table))


# ---------------------------------------------------------------------------
# phase trace of the symmetric 3-bit core

PHASE_STEP_LABELS = {0: "|+>", 1: "pi/4", 2: "|+i>", 3: "3pi/4",
                     4: "|->", 5: "5pi/4", 6: "|-i>", 7: "7pi/4"}
TRACE_SKIP = "-"
STAGE_NAMES = ("SP1", "theta1", "CX_c2", "theta2", "CX_c1", "theta3", "CX_c2", "theta4", "SP2")


def _equatorial_label(psi: np.ndarray) -> str:
    a0, a1 = psi
    if not (abs(abs(a0) - _SQ2) < 1e-9 and abs(abs(a1) - _SQ2) < 1e-9):
        raise SimulationError("target is not in equatorial form")
    phi = cmath.phase(a1 / a0) % (2 * math.pi)
    k = round(phi / (math.pi / 4)) % 8
    if abs(phi - k * (math.pi / 4)) > 1e-9 and abs(phi - 2 * math.pi) > 1e-9:
        raise SimulationError(f"phase {phi} is not a multiple of pi/4")
    return PHASE_STEP_LABELS[k]


def phase_trace(core, control_state: str) -> list[str]:
    """Target-qubit label after each of the core's nine stages.

    `control_state` is the two-bit string 'c2 c1' (control 1 rightmost).
    CX stages whose control is |0> do not fire and report '-'.
    """
    from .library import core_stage_gates  # deferred: the library sits a layer above

    if len(control_state) != 2 or any(ch not in "01" for ch in control_state):
        raise SimulationError(f"control_state must be two bits, got {control_state!r}")
    c2, c1 = int(control_state[0]), int(control_state[1])
    n = 3
    state = Statevector.basis(n, {0: c1, 2: c2})
    labels: list[str] = []
    stages = core_stage_gates(core, c1=0, t=1, c2=2)
    for idx, (name, gates) in enumerate(stages):
        fires = True
        if name == "CX_c2" and c2 == 0:
            fires = False
        if name == "CX_c1" and c1 == 0:
            fires = False
        amps = state.amps
        for g in gates:
            amps = _apply_matrix(amps, gate_matrix(g.kind, g.angle), g.qubits, n)
        state = Statevector(n, amps)
        if not fires:
            labels.append(TRACE_SKIP)
            continue
        base = (c2 << 2) | c1
        psi = np.array([state.amps[base], state.amps[base | 0b010]])
        if idx == len(stages) - 1:
            if abs(psi[0]) > 1 - 1e-9:
                labels.append("|0>")
            elif abs(psi[1]) > 1 - 1e-9:
                labels.append("|1>")
            else:
                labels.append(_equatorial_label(psi))
        else:
            labels.append(_equatorial_label(psi))
    return labels


# ---------------------------------------------------------------------------
# q-sphere data

@dataclass(frozen=True)
class QSpherePoint:
    basis_label: str
    magnitude: float
    phase: float  # radians in [0, 2*pi), relative to the first nonzero amplitude

    def as_dict(self) -> dict:
        return {"basis": self.basis_label, "magnitude": self.magnitude, "phase": self.phase}


def qsphere(state: Statevector, display_order=None, atol: float = 1e-12) -> list[QSpherePoint]:
    """Nonzero basis amplitudes as (label, magnitude, relative phase) points.

    `display_order` lists qubit indices from most to least significant in the
    printed label; the default is |q_{n-1} ... q_0>.
    """
    order = tuple(display_order) if display_order is not None else tuple(range(state.n - 1, -1, -1))
    if sorted(order) != list(range(state.n)):
        raise SimulationError(f"display_order must permute 0..{state.n - 1}")
    ref = None
    points = []
    for b, amp in enumerate(state.amps):
        if abs(amp) <= atol:
            continue
        if ref is None:
            ref = cmath.phase(amp)
        label = "".join(str((b >> q) & 1) for q in order)
        phase = (cmath.phase(amp) - ref) % (2 * math.pi)
        if abs(phase - 2 * math.pi) < 1e-12:
            phase = 0.0
        points.append(QSpherePoint(label, float(abs(amp)), phase))
    return points
