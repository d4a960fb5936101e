"""Lowering to device-native bases with peephole rotation merging.

Two native bases are supported: {I, X, sqrt(X), RZ, CX} and
{I, X, sqrt(X), RZ, ECR}.  Single-qubit rewrites follow the usual
phase-gate-to-RZ table; CX maps to a single ECR dressed by fixed native
single-qubit sequences (derived once by solving the conjugation algebra and
verified to global-phase accuracy by the test suite).

The peephole pass is strictly adjacent-gate: it merges adjacent RZ with exact
rational-pi arithmetic, removes rotations that are the identity up to global
phase, cancels self-inverse two-qubit pairs, and normalizes same-wire runs of
{sqrt(X), X} using sqrt(X)^2 = X.  Rewrites never increase any gate count.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .circuit import Angle, Circuit, CircuitError, CostReport, Gate, GateKind, count_gates

K = GateKind


class NativeBasis(Enum):
    CX_BASIS = "cx"
    ECR_BASIS = "ecr"

    @property
    def two_qubit_kind(self) -> GateKind:
        return K.CX if self is NativeBasis.CX_BASIS else K.ECR

    @property
    def allowed(self) -> frozenset:
        return frozenset({K.I, K.X, K.SX, K.RZ, self.two_qubit_kind})


class TranspileError(CircuitError):
    pass


def _rz(q: int, num: int, den: int = 1) -> Gate:
    return Gate(K.RZ, (q,), Angle.pi_frac(num, den))


# --- single-qubit rewrite table ------------------------------------------------

def _rule_h(q, angle):
    return [_rz(q, 1, 2), Gate(K.SX, (q,)), _rz(q, 1, 2)]


_SINGLE_QUBIT_RULES = {
    K.I: lambda q, a: [],
    K.X: lambda q, a: [Gate(K.X, (q,))],
    K.SX: lambda q, a: [Gate(K.SX, (q,))],
    K.RZ: lambda q, a: [] if a.is_zero_mod_2pi() else [Gate(K.RZ, (q,), a)],
    K.Y: lambda q, a: [_rz(q, 1), Gate(K.X, (q,))],
    K.Z: lambda q, a: [_rz(q, 1)],
    K.H: _rule_h,
    K.SXDG: lambda q, a: [Gate(K.SX, (q,)), Gate(K.X, (q,))],
    K.S: lambda q, a: [_rz(q, 1, 2)],
    K.SDG: lambda q, a: [_rz(q, -1, 2)],
    K.T: lambda q, a: [_rz(q, 1, 4)],
    K.TDG: lambda q, a: [_rz(q, -1, 4)],
    K.RY: lambda q, a: [Gate(K.SX, (q,)), Gate(K.RZ, (q,), a.plus(Angle.pi_frac(1))),
                        Gate(K.SX, (q,)), _rz(q, 1)],
}


# --- the frozen CX <-> ECR dressing --------------------------------------------
# CX(c,t) equals (up to global phase) the ECR conjugated by:
#   control: pre  [SX, RZ(pi/2)]      post [RZ(pi/2), SX, RZ(pi/2)]
#   target:  pre  [RZ(pi/2), SX, RZ(pi/2)]   post [RZ(pi), SX, RZ(-pi/2)]
# All sequences are in temporal order and use native gates only (no X).

def _cx_to_ecr(c: int, t: int) -> list[Gate]:
    return [
        Gate(K.SX, (c,)), _rz(c, 1, 2),
        _rz(t, 1, 2), Gate(K.SX, (t,)), _rz(t, 1, 2),
        Gate(K.ECR, (c, t)),
        _rz(c, 1, 2), Gate(K.SX, (c,)), _rz(c, 1, 2),
        _rz(t, 1), Gate(K.SX, (t,)), _rz(t, -1, 2),
    ]


def _ecr_to_cx(c: int, t: int) -> list[Gate]:
    # inverse of the dressing above (daggered sequences, rewritten X-free)
    return [
        _rz(c, 1, 2), Gate(K.SX, (c,)), _rz(c, 1),
        _rz(t, 1, 2), Gate(K.SX, (t,)), _rz(t, 1, 2),
        Gate(K.CX, (c, t)),
        _rz(c, 1, 2), Gate(K.SX, (c,)), _rz(c, 1, 2),
        _rz(t, -1, 2), Gate(K.SX, (t,)),
    ]


def _two_qubit_rules(basis: NativeBasis) -> dict:
    rules = {
        K.CY: lambda c, t: [Gate(K.SDG, (t,)), Gate(K.CX, (c, t)), Gate(K.S, (t,))],
        K.CZ: lambda c, t: [Gate(K.H, (t,)), Gate(K.CX, (c, t)), Gate(K.H, (t,))],
        K.SWAP: lambda a, b: [Gate(K.CX, (a, b)), Gate(K.CX, (b, a)), Gate(K.CX, (a, b))],
    }
    if basis is NativeBasis.ECR_BASIS:
        rules[K.CX] = _cx_to_ecr
    else:
        rules[K.ECR] = _ecr_to_cx
    return rules


@dataclass(frozen=True)
class RewriteRule:
    """A lowering rule: source gate kind and its native-gate template."""

    lhs: GateKind
    rhs_text: str


def rule_table(basis: NativeBasis) -> list[RewriteRule]:
    """Human-readable dump of every rewrite used for a basis (for audit)."""
    rules = []
    for kind, fn in _SINGLE_QUBIT_RULES.items():
        angle = Angle.pi_frac(1, 4) if kind.takes_angle else None
        rhs = fn(0, angle)
        text = " ".join(g.text() for g in rhs) or "(removed)"
        if kind.takes_angle:
            text += "   [shown for angle pi/4]"
        rules.append(RewriteRule(kind, text))
    for kind, fn in _two_qubit_rules(basis).items():
        rules.append(RewriteRule(kind, " ".join(g.text() for g in fn(0, 1))))
    return rules


def rule_table_text(basis: NativeBasis) -> str:
    width = max(len(r.lhs.value) for r in rule_table(basis))
    return "\n".join(f"{r.lhs.value:<{width}} -> {r.rhs_text}" for r in rule_table(basis))


def lower(circuit: Circuit, basis: NativeBasis) -> Circuit:
    """Rewrite to the native basis; equivalent to the input up to global phase."""
    two_q = _two_qubit_rules(basis)
    allowed = basis.allowed
    gates = list(circuit.gates)
    changed = True
    while changed:
        changed = False
        out = []
        for g in gates:
            if g.kind in allowed:
                if g.kind is K.I:
                    changed = True  # identity contributes nothing in either basis
                    continue
                if g.kind is K.RZ and g.angle.is_zero_mod_2pi():
                    changed = True
                    continue
                out.append(g)
            elif g.kind in _SINGLE_QUBIT_RULES:
                out.extend(_SINGLE_QUBIT_RULES[g.kind](g.qubits[0], g.angle))
                changed = True
            elif g.kind in two_q:
                out.extend(two_q[g.kind](*g.qubits))
                changed = True
            else:
                raise TranspileError(f"no rewrite for {g.kind.value} in {basis.value} basis")
        gates = out
    return circuit.with_gates(gates)


# --- peephole ------------------------------------------------------------------

_SELF_INVERSE_2Q = (K.CX, K.ECR)


def _try_pair(a: Gate, b: Gate):
    """Rewrite for two adjacent gates on identical qubits, or None."""
    if a.qubits != b.qubits:
        return None
    if a.kind is K.RZ and b.kind is K.RZ:
        merged = a.angle.plus(b.angle)
        return [] if merged.is_zero_mod_2pi() else [Gate(K.RZ, a.qubits, merged)]
    if a.kind in _SELF_INVERSE_2Q and b.kind is a.kind:
        return []
    return None


def _pair_pass(gates: list[Gate]):
    for i, g in enumerate(gates):
        qubits = set(g.qubits)
        for j in range(i + 1, len(gates)):
            other = gates[j]
            if qubits.isdisjoint(other.qubits):
                continue
            replacement = _try_pair(g, other)
            if replacement is not None:
                return gates[:i] + replacement + gates[i + 1:j] + gates[j + 1:], True
            break  # blocked by the first gate sharing a qubit
    return gates, False


def _sx_run_pass(gates: list[Gate]):
    """Collapse one maximal adjacent run of {SX, X} on a single wire.

    SX and X commute and satisfy SX^2 = X and X^2 = I exactly, so a run of
    a SX and b X gates reduces to SX^(a mod 2) X^((b + (a mod 4)//2) mod 2).
    The rewrite is skipped when it would raise the X count (a lone SX pair),
    keeping the pass non-increasing for every gate tag.
    """
    runs: dict[int, list[int]] = {}
    for idx, g in enumerate(gates):
        if len(g.qubits) == 1 and g.kind in (K.SX, K.X):
            runs.setdefault(g.qubits[0], []).append(idx)
            continue
        for q in g.qubits:
            run = runs.pop(q, None)
            if run is not None:
                collapsed = _collapse_run(gates, run)
                if collapsed is not None:
                    return collapsed, True
    for run in runs.values():
        collapsed = _collapse_run(gates, run)
        if collapsed is not None:
            return collapsed, True
    return gates, False


def _collapse_run(gates: list[Gate], run: list[int]):
    if len(run) < 2:
        return None
    a = sum(1 for idx in run if gates[idx].kind is K.SX)
    b = len(run) - a
    sx_out = a % 2
    x_out = (b + (a % 4) // 2) % 2
    if x_out > b or sx_out + x_out >= len(run):
        return None
    qubit = gates[run[0]].qubits
    replacement = [Gate(K.SX, qubit)] * sx_out + [Gate(K.X, qubit)] * x_out
    # the first run slots carry the replacement, the remaining slots drop
    out = []
    consumed = set(run)
    emitted = 0
    for idx, g in enumerate(gates):
        if idx in consumed:
            if emitted < len(replacement):
                out.append(replacement[emitted])
                emitted += 1
            continue
        out.append(g)
    return out


def peephole(circuit: Circuit) -> Circuit:
    """Adjacent-gate cleanup on a native-basis circuit (no resynthesis)."""
    gates = [g for g in circuit.gates if g.kind is not K.I
             and not (g.kind is K.RZ and g.angle.is_zero_mod_2pi())]
    changed = True
    while changed:
        gates, changed = _pair_pass(gates)
        if not changed:
            gates, changed = _sx_run_pass(gates)
    return circuit.with_gates(gates)


def lower_and_optimize(circuit: Circuit, basis: NativeBasis) -> Circuit:
    return peephole(lower(circuit, basis))


def cost_report(circuit: Circuit, basis: NativeBasis) -> CostReport:
    """Counts, quantum cost, and depth of the lowered and peepholed circuit."""
    lowered = lower_and_optimize(circuit, basis)
    report = count_gates(lowered)
    counts = {k.value: 0 for k in (K.X, K.SX, K.RZ, basis.two_qubit_kind)}
    counts.update(report.counts)
    return CostReport(counts=counts, qc=report.qc, depth=report.depth)


# --- naive baseline routing ------------------------------------------------------

@dataclass(frozen=True)
class RouteResult:
    """Routed circuit over physical qubits plus the final logical placement."""

    circuit: Circuit
    final_assignment: dict
    swaps_added: int


def route_naive(circuit: Circuit, cmap, placement, restore: bool = False) -> RouteResult:
    """Greedy shortest-path SWAP insertion for non-adjacent two-qubit gates.

    `placement` maps logical index -> physical index (a dict, or a Placement
    whose roles align with the circuit's wire names).  The output circuit is
    indexed by physical qubits; unless `restore` is set the final qubit
    permutation is left in place and reported.
    """
    log2phys = _as_logical_map(circuit, placement)
    if sorted(log2phys) != list(range(circuit.width)):
        raise TranspileError("placement must cover every circuit qubit")
    if len(set(log2phys.values())) != circuit.width:
        raise TranspileError("placement collision: physical qubits must be distinct")
    initial = dict(log2phys)
    out: list[Gate] = []
    swaps = 0

    def swap_physical(p: int, q: int):
        nonlocal swaps
        out.append(Gate(K.SWAP, (p, q)))
        swaps += 1
        phys2log = {phys: logical for logical, phys in log2phys.items()}
        if p in phys2log:
            log2phys[phys2log[p]] = q
        if q in phys2log:
            log2phys[phys2log[q]] = p

    def walk(src: int, dst_exclusive_path: list[int]):
        cur = src
        for step in dst_exclusive_path:
            swap_physical(cur, step)
            cur = step

    for g in circuit.gates:
        if len(g.qubits) == 1:
            out.append(Gate(g.kind, (log2phys[g.qubits[0]],), g.angle))
            continue
        a, b = (log2phys[q] for q in g.qubits)
        path = cmap.shortest_path(a, b)
        if path is None:
            raise TranspileError(f"coupling map is disconnected between {a} and {b}")
        walk(a, path[1:-1])
        out.append(Gate(g.kind, (log2phys[g.qubits[0]], log2phys[g.qubits[1]]), g.angle))
    if restore:
        for logical in sorted(initial):
            want, have = initial[logical], log2phys[logical]
            if want != have:
                walk(have, cmap.shortest_path(have, want)[1:])
    routed = Circuit(width=cmap.num_qubits, gates=tuple(out), name=circuit.name + "@routed")
    return RouteResult(routed, dict(log2phys), swaps)


def _as_logical_map(circuit: Circuit, placement) -> dict:
    if isinstance(placement, dict):
        return dict(placement)
    assignment = placement.assignment
    if circuit.wire_names is None:
        raise TranspileError("circuit has no wire names; pass a logical->physical dict")
    try:
        return {i: assignment[name] for i, name in enumerate(circuit.wire_names)}
    except KeyError as e:
        raise TranspileError(f"placement is missing wire {e.args[0]!r}") from None


# --- seeded random circuits for soundness checks ---------------------------------

_RANDOM_1Q = (K.X, K.Y, K.Z, K.H, K.SX, K.SXDG, K.S, K.SDG, K.T, K.TDG)
_RANDOM_2Q = (K.CX, K.CY, K.CZ, K.SWAP)


def random_clifford_t_circuit(rng: random.Random, width: int, length: int) -> Circuit:
    """A random Clifford+T circuit (with occasional k*pi/4 rotations)."""
    gates = []
    for _ in range(length):
        roll = rng.random()
        if width >= 2 and roll < 0.35:
            kind = rng.choice(_RANDOM_2Q)
            a, b = rng.sample(range(width), 2)
            gates.append(Gate(kind, (a, b)))
        elif roll < 0.85:
            gates.append(Gate(rng.choice(_RANDOM_1Q), (rng.randrange(width),)))
        else:
            kind = rng.choice((K.RZ, K.RY))
            gates.append(Gate(kind, (rng.randrange(width),), Angle.pi_frac(rng.randrange(-7, 8), 4)))
    return Circuit(width=width, gates=tuple(gates), name="random")
