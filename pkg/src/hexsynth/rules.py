"""Geometrical design rules as an executable search over core configurations.

The circle of equatorial target states splits into semicircles (Z), quadrants
(S, S-dagger), and octants (T, T-dagger).  Six successive restriction rules
shrink the candidate gate set for the four rotation slots of the symmetric
core down to {T, T-dagger} on octants; the final rule is realized here as a
brute-force simulation over the remaining configuration space, with every
surviving configuration re-verified and graded against a phase-exact oracle.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .circuit import CircuitError, GateKind
from .library import AX_ENTRIES, CoreSpec, ax_name, build_core
from .simulator import (EquivalenceLevel, SimulationError, equivalence_of_unitaries,
                        truth_string, truth_table, unitary_of)

K = GateKind

SEG_SEMICIRCLES = "semicircles"
SEG_QUADRANTS = "quadrants"
SEG_OCTANTS = "octants"

SEARCH_SPACE_GUARD = 10 ** 7


@dataclass(frozen=True)
class GateSetStage:
    """Gate set and segment set after one restriction stage."""

    stage: int
    ctg: tuple[str, ...]
    seg: tuple[str, ...]


def apply_rules() -> list[GateSetStage]:
    """The five successive restriction stages of the design rules."""
    all_gates = ("i", "x", "y", "z", "h", "sx", "sxdg", "s", "sdg", "t", "tdg",
                 "cx", "cy", "cz", "swap")
    single = all_gates[:11]
    all_segs = (SEG_SEMICIRCLES, SEG_QUADRANTS, SEG_OCTANTS)
    return [
        GateSetStage(0, all_gates, all_segs),
        GateSetStage(1, single, all_segs),                                  # target controls nothing
        GateSetStage(2, ("z", "s", "sdg", "t", "tdg"), all_segs),           # Z-axis rotations only
        GateSetStage(3, ("s", "sdg", "t", "tdg"), (SEG_QUADRANTS, SEG_OCTANTS)),
        GateSetStage(4, ("t", "tdg"), (SEG_OCTANTS,)),
    ]


def count_space(sp_set_size: int, ax_set_size: int, theta_set_size: int) -> int:
    """Number of core configurations: ||SP||^2 * ||AX||^2 * ||theta_set||^4."""
    if min(sp_set_size, ax_set_size, theta_set_size) < 1:
        raise CircuitError("set sizes must be >= 1")
    return sp_set_size ** 2 * ax_set_size ** 2 * theta_set_size ** 4


DEFAULT_SP = (K.H,)
DEFAULT_AX = ((),)
DEFAULT_THETA = (K.T, K.TDG)


@dataclass(frozen=True)
class SearchQuery:
    """Target truth table plus the allowed gate sets for each core slot.

    `target` is the 4-character outcome string over ascending control
    assignments 00, 01, 10, 11 (control 1 is the low bit), e.g. and='0001'.
    """

    target: str
    sp_set: tuple = DEFAULT_SP
    ax1_set: tuple = DEFAULT_AX
    ax2_set: tuple = DEFAULT_AX
    theta_set: tuple = DEFAULT_THETA
    symmetric: bool = False

    def __post_init__(self):
        if len(self.target) != 4 or any(ch not in "01" for ch in self.target):
            raise CircuitError("target must be 4 bits over assignments 00,01,10,11")
        for name in ("sp_set", "ax1_set", "ax2_set", "theta_set"):
            vals = tuple(getattr(self, name))
            if not vals:
                raise CircuitError(f"{name} must not be empty")
            object.__setattr__(self, name, vals)


@dataclass(frozen=True)
class SearchHit:
    spec: CoreSpec
    level: EquivalenceLevel

    def as_dict(self) -> dict:
        return {"spec": self.spec.describe(), "level": self.level.name}


def iter_specs(query: SearchQuery):
    """Deterministic (sorted) enumeration of the query's configuration space."""
    sp = sorted(query.sp_set, key=lambda g: g.value)
    ax1 = sorted((tuple(a) for a in query.ax1_set), key=ax_name)
    ax2 = sorted((tuple(a) for a in query.ax2_set), key=ax_name)
    thetas = sorted(query.theta_set, key=lambda g: g.value)
    for sp1, a1, th, a2, sp2 in itertools.product(
            sp, ax1, itertools.product(thetas, repeat=4), ax2, sp):
        spec = CoreSpec(sp1=sp1, ax1=a1, theta=th, ax2=a2, sp2=sp2)
        if query.symmetric and not spec.symmetric:
            continue
        yield spec


def _space_size(query: SearchQuery) -> int:
    return (len(query.sp_set) ** 2 * len(query.ax1_set) * len(query.ax2_set)
            * len(query.theta_set) ** 4)


def _oracle_unitary(target: str) -> np.ndarray:
    """Phase-exact unitary flipping the target wire exactly where f=1.

    Wires follow the core layout (c1=0, t=1, c2=2)."""
    u = np.zeros((8, 8), dtype=complex)
    for c1 in (0, 1):
        for c2 in (0, 1):
            f = int(target[(c2 << 1) | c1])
            for t in (0, 1):
                src = (c2 << 2) | (t << 1) | c1
                dst = (c2 << 2) | ((t ^ f) << 1) | c1
                u[dst, src] = 1.0
    return u


def search(query: SearchQuery) -> list[SearchHit]:
    """All configurations in the query space realizing the target function.

    Every hit is found by exact simulation (deterministic target outcome on
    all four control assignments) and graded against the phase-exact oracle.
    Results are sorted by configuration for determinism.
    """
    if _space_size(query) > SEARCH_SPACE_GUARD:
        raise CircuitError(f"search space exceeds {SEARCH_SPACE_GUARD} configurations")
    oracle = _oracle_unitary(query.target)
    hits = []
    for spec in iter_specs(query):
        circuit = build_core(spec)
        try:
            table = truth_table(circuit, target=1, controls=(0, 2))
        except SimulationError:
            continue
        if truth_string(table) != query.target:
            continue
        level = equivalence_of_unitaries(unitary_of(circuit), oracle)
        hits.append(SearchHit(spec, level))
    hits.sort(key=lambda h: h.spec.sort_key())
    return hits


def query_from_names(target: str, sp=("h",), ax1=("i",), ax2=("i",),
                     theta=("t", "tdg"), symmetric: bool = False) -> SearchQuery:
    """Build a query from CLI-style gate-name tokens."""
    kind = {k.value: k for k in GateKind}
    try:
        return SearchQuery(
            target=target,
            sp_set=tuple(kind[s] for s in sp),
            ax1_set=tuple(AX_ENTRIES[a] for a in ax1),
            ax2_set=tuple(AX_ENTRIES[a] for a in ax2),
            theta_set=tuple(kind[t] for t in theta),
            symmetric=symmetric,
        )
    except KeyError as e:
        raise CircuitError(f"unknown gate name {e.args[0]!r}") from None
