import random

import numpy as np
import pytest

from hexsynth.circuit import Angle, Circuit, Gate, GateKind, count_gates
from hexsynth.library import StandardKind, build_gate, build_standard
from hexsynth.layout import CouplingMap
from hexsynth.simulator import unitary_of
from hexsynth.transpiler import (NativeBasis, TranspileError, cost_report, lower,
                                 lower_and_optimize, peephole, random_clifford_t_circuit,
                                 route_naive, rule_table, rule_table_text)

K = GateKind


def G(kind, *qubits, angle=None):
    return Gate(kind, tuple(qubits), angle)


def fidelity(a, b):
    ua, ub = unitary_of(a), unitary_of(b)
    return abs(np.trace(ua.conj().T @ ub)) / ua.shape[0]


def rz(q, num, den=1):
    return G(K.RZ, q, angle=Angle.pi_frac(num, den))


class TestSingleQubitRules:
    # every rewrite row must hold as a global-phase identity
    ROWS = [
        Circuit(1, (G(k, 0),)) for k in
        (K.I, K.X, K.Y, K.Z, K.H, K.SX, K.SXDG, K.S, K.SDG, K.T, K.TDG)
    ] + [
        Circuit(1, (G(K.RZ, 0, angle=Angle.pi_frac(3, 4)),)),
        Circuit(1, (G(K.RY, 0, angle=Angle.pi_frac(-5, 4)),)),
    ]

    @pytest.mark.parametrize("circuit", ROWS, ids=lambda c: c.gates[0].kind.value)
    def test_row_is_l1_identity(self, circuit):
        for basis in NativeBasis:
            assert fidelity(circuit, lower(circuit, basis)) >= 1 - 1e-9

    def test_h_row_shape(self):
        lowered = lower(Circuit(1, (G(K.H, 0),)), NativeBasis.CX_BASIS)
        assert [g.kind for g in lowered.gates] == [K.RZ, K.SX, K.RZ]
        assert [g.angle.frac for g in lowered.gates if g.angle] == \
               [Angle.pi_frac(1, 2).frac] * 2

    def test_t_row_shape(self):
        lowered = lower(Circuit(1, (G(K.T, 0),)), NativeBasis.CX_BASIS)
        assert [g.kind for g in lowered.gates] == [K.RZ]
        assert lowered.gates[0].angle.frac == Angle.pi_frac(1, 4).frac

    def test_output_is_native_only(self):
        rng = random.Random(0)
        for basis in NativeBasis:
            for _ in range(10):
                c = random_clifford_t_circuit(rng, 3, 20)
                lowered = lower(c, basis)
                assert all(g.kind in basis.allowed for g in lowered.gates)


class TestCxEcrDressing:
    def test_cx_lowered_to_single_ecr(self):
        c = Circuit(2, (G(K.CX, 0, 1),))
        lowered = lower(c, NativeBasis.ECR_BASIS)
        counts = count_gates(lowered).counts
        assert counts.get("ecr") == 1
        assert counts.get("x", 0) == 0
        assert fidelity(c, lowered) >= 1 - 1e-9

    def test_ecr_lowered_back_to_cx(self):
        c = Circuit(2, (G(K.ECR, 0, 1),))
        lowered = lower(c, NativeBasis.CX_BASIS)
        assert count_gates(lowered).counts.get("cx") == 1
        assert fidelity(c, lowered) >= 1 - 1e-9

    def test_two_qubit_gates_via_cx(self):
        for kind in (K.CY, K.CZ, K.SWAP):
            c = Circuit(2, (G(kind, 0, 1),))
            for basis in NativeBasis:
                assert fidelity(c, lower(c, basis)) >= 1 - 1e-9

    def test_rule_table_dump(self):
        text = rule_table_text(NativeBasis.ECR_BASIS)
        assert "ecr" in text and "h " in text
        assert any(r.lhs is K.CX for r in rule_table(NativeBasis.ECR_BASIS))


class TestPeephole:
    def test_rz_merge(self):
        c = Circuit(1, (rz(0, 1, 4), rz(0, 1)))
        out = peephole(c)
        assert len(out.gates) == 1
        assert out.gates[0].angle.frac == Angle.pi_frac(5, 4).frac

    def test_inverse_pair_cancels(self):
        out = peephole(Circuit(1, (rz(0, 1, 4), rz(0, -1, 4))))
        assert out.gates == ()

    def test_x_pair_cancels(self):
        out = peephole(Circuit(1, (G(K.X, 0), G(K.X, 0))))
        assert out.gates == ()

    def test_lone_sx_pair_left_alone(self):
        # collapsing [sx, sx] to [x] would raise the x count, so it stays
        out = peephole(Circuit(1, (G(K.SX, 0), G(K.SX, 0))))
        assert [g.kind for g in out.gates] == [K.SX, K.SX]

    def test_sxdg_image_cancels_sx(self):
        # sxdg lowers to [sx, x]; preceded by sx the whole run collapses
        c = lower(Circuit(1, (G(K.SX, 0), G(K.SXDG, 0))), NativeBasis.CX_BASIS)
        assert peephole(c).gates == ()

    def test_sx_quadruple_cancels(self):
        out = peephole(Circuit(1, (G(K.SX, 0),) * 4))
        assert out.gates == ()

    def test_sx_run_interleaved_with_other_wires(self):
        c = Circuit(2, (G(K.SX, 0), G(K.RZ, 1, angle=Angle.pi_frac(1)), G(K.SX, 0), G(K.X, 0)))
        out = peephole(c)
        assert [g.kind for g in out.gates] == [K.RZ]

    def test_cx_pair_cancels(self):
        out = peephole(Circuit(2, (G(K.CX, 0, 1), G(K.CX, 0, 1))))
        assert out.gates == ()

    def test_blocked_by_intervening_gate(self):
        c = Circuit(2, (G(K.CX, 0, 1), G(K.SX, 1), G(K.CX, 0, 1)))
        assert len(peephole(c).gates) == 3

    def test_never_increases_counts(self):
        rng = random.Random(9)
        for _ in range(30):
            c = lower(random_clifford_t_circuit(rng, 3, 30), NativeBasis.CX_BASIS)
            before = count_gates(c).counts
            after = count_gates(peephole(c)).counts
            for tag, n in after.items():
                assert n <= before.get(tag, 0)

    def test_preserves_l1(self):
        rng = random.Random(10)
        for _ in range(20):
            c = lower(random_clifford_t_circuit(rng, 3, 30), NativeBasis.ECR_BASIS)
            assert fidelity(c, peephole(c)) >= 1 - 1e-9


class TestCostReport:
    def test_csx2_table_values(self):
        rep = cost_report(build_gate("csx2"), NativeBasis.CX_BASIS)
        assert rep.counts == {"x": 0, "sx": 2, "rz": 4, "cx": 1}
        assert rep.qc == 7 and rep.depth == 7

    def test_and3_ecr_count(self):
        rep = cost_report(build_gate("and3"), NativeBasis.ECR_BASIS)
        assert rep.counts["ecr"] == 3
        assert rep.counts["x"] == 0

    def test_fredkin4_ecr_count(self):
        rep = cost_report(build_gate("fredkin4"), NativeBasis.ECR_BASIS)
        assert rep.counts["ecr"] == 8

    def test_zero_filled_basis_keys(self):
        rep = cost_report(Circuit(1), NativeBasis.ECR_BASIS)
        assert rep.counts == {"x": 0, "sx": 0, "rz": 0, "ecr": 0}
        assert rep.qc == 0 and rep.depth == 0


class TestSoundnessSweep:
    def test_200_random_circuits_both_bases(self):
        rng = random.Random(20240814)
        worst = 1.0
        for _ in range(200):
            width = rng.randint(1, 4)
            c = random_clifford_t_circuit(rng, width, rng.randint(0, 40))
            for basis in NativeBasis:
                worst = min(worst, fidelity(c, lower_and_optimize(c, basis)))
        assert worst >= 1 - 1e-9


class TestRouteNaive:
    LINE3 = CouplingMap("line3", 3, frozenset({(0, 1), (1, 2)}))

    def test_adjacent_circuit_unchanged(self):
        c = Circuit(2, (G(K.CX, 0, 1),))
        res = route_naive(c, self.LINE3, {0: 0, 1: 1})
        assert res.swaps_added == 0
        assert [g.kind for g in res.circuit.gates] == [K.CX]

    def test_distance_two_inserts_one_swap(self):
        c = Circuit(2, (G(K.CX, 0, 1),))
        res = route_naive(c, self.LINE3, {0: 0, 1: 2})
        assert res.swaps_added == 1
        kinds = [g.kind for g in res.circuit.gates]
        assert kinds == [K.SWAP, K.CX]

    def test_restore_flag_restores_placement(self):
        c = Circuit(2, (G(K.CX, 0, 1),))
        res = route_naive(c, self.LINE3, {0: 0, 1: 2}, restore=True)
        assert res.final_assignment == {0: 0, 1: 2}

    def test_l3_under_final_permutation(self):
        c = Circuit(3, (G(K.CX, 0, 2), G(K.H, 1), G(K.CX, 1, 0)))
        res = route_naive(c, self.LINE3, {0: 0, 1: 1, 2: 2})
        # for every basis input, the routed distribution equals the original
        # one with basis bits re-read through the final logical placement
        pr = np.abs(unitary_of(res.circuit)) ** 2
        po = np.abs(unitary_of(c)) ** 2

        def to_phys(b):
            return sum(((b >> logical) & 1) << phys
                       for logical, phys in res.final_assignment.items())

        for col in range(8):
            for b in range(8):
                assert pr[to_phys(b), col] == pytest.approx(po[b, col], abs=1e-9)

    def test_placement_errors(self):
        c = Circuit(2, (G(K.CX, 0, 1),))
        with pytest.raises(TranspileError):
            route_naive(c, self.LINE3, {0: 0})
        with pytest.raises(TranspileError):
            route_naive(c, self.LINE3, {0: 0, 1: 0})

    def test_end_placed_toffoli_costs_more_than_middle_target_core(self):
        # standard Toffoli with its target forced to a line end needs routing
        # SWAPs; the middle-target core needs none
        tof = build_standard(StandardKind.TOFFOLI)  # wires c1, c2, t
        routed = route_naive(tof, self.LINE3, {0: 1, 1: 2, 2: 0})
        lowered_tof = lower_and_optimize(routed.circuit, NativeBasis.CX_BASIS)
        tof_2q = count_gates(lowered_tof).counts.get("cx", 0)

        and3 = build_gate("and3")  # target already between its controls
        res = route_naive(and3, self.LINE3, {0: 0, 1: 1, 2: 2})
        assert res.swaps_added == 0
        and3_2q = count_gates(lower_and_optimize(res.circuit, NativeBasis.CX_BASIS)).counts.get("cx", 0)
        assert routed.swaps_added >= 1
        assert tof_2q > and3_2q
