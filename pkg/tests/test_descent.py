import json
import random
from pathlib import Path

import pytest

from zerocycles.descent import (
    BASIS_H,
    BASIS_X4,
    Certificate,
    CertificateNotFound,
    CycleState,
    DelPezzo,
    GOALS,
    Goal,
    Move,
    PreconditionFailed,
    apply_move,
    default_goal,
    effectivity_threshold_report,
    entry_certificate,
    find_certificate,
    genus,
    genus_by_recurrence,
    h0,
    h0_by_recurrence,
    induction_step_moves,
    prove_bound_suite,
    verify_certificate,
)

CUBIC = DelPezzo(3)
CUBIC_X4 = DelPezzo(3, with_x4=True)
DP2 = DelPezzo(2)
DP1 = DelPezzo(1)


class TestSectionCounts:
    def test_pinned_values(self):
        assert h0(3, 3) == 19
        assert h0(2, 3) == 13
        assert h0(1, 5) == 16

    def test_recurrence_agrees_with_closed_form(self):
        for d_S in (1, 2, 3):
            for l in range(0, 30):
                assert h0_by_recurrence(d_S, l) == h0(d_S, l)
                if l >= 1:
                    assert genus_by_recurrence(d_S, l) == genus(d_S, l)

    def test_genus_values(self):
        assert genus(3, 2) == 4
        assert genus(2, 3) == 7
        for d_S in (1, 2, 3):
            assert genus(d_S, 1) == 1  # anticanonical curves are elliptic

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            h0(4, 1)
        with pytest.raises(ValueError):
            h0(3, -1)
        with pytest.raises(ValueError):
            genus(3, 0)


def state(sign, degree, coeffs=None):
    return CycleState.make(sign, degree, coeffs or {})


class TestApplyMove:
    def test_complement_on_degree_28(self):
        # effective degree 28 = h0(3,4) - 3 rewrites to 16h - z' of degree 20
        st = state(1, 28, {BASIS_H: -3})
        new, witness = apply_move(CUBIC, st, Move.complement(3))
        assert witness == {"h0_m": 31}
        assert new == state(-1, 20, {BASIS_H: 13})

    def test_vb_subtract_on_degree_11(self):
        st = state(-1, 11, {BASIS_H: 7})
        new, witness = apply_move(CUBIC, st, Move.vb_subtract(2, {BASIS_H: 1}))
        assert witness == {"h0_l": 10, "h0_l1": 19}
        assert new == state(-1, 8, {BASIS_H: 6})

    def test_vb_subtract_requires_strict_inequality(self):
        st = state(1, 10)
        with pytest.raises(PreconditionFailed):
            apply_move(CUBIC, st, Move.vb_subtract(2, {BASIS_H: 1}))

    def test_involution_flip(self):
        st = state(1, 9, {BASIS_H: 2})
        new, _ = apply_move(DP2, st, Move.involution_flip())
        assert new == state(-1, 9, {BASIS_H: 11})
        back, _ = apply_move(DP2, new, Move.involution_flip())
        assert back == st  # self-inverse

    def test_involution_only_on_dp2(self):
        with pytest.raises(PreconditionFailed):
            apply_move(CUBIC, state(1, 5), Move.involution_flip())

    def test_add_basis_bookkeeping(self):
        st = state(-1, 4, {BASIS_H: 1})
        new, _ = apply_move(CUBIC_X4, st, Move.add_basis({BASIS_X4: 1}))
        assert new == state(-1, 8, {BASIS_H: 1, BASIS_X4: 1})

    def test_curve_rr_sign_resolution(self):
        # -z' of degree 4 rewrites through 4h - x4 - z' on a genus-4 curve
        st = state(-1, 4, {BASIS_H: 2, BASIS_X4: 1})
        move = Move.curve_rr(2, {BASIS_H: 4, BASIS_X4: -1})
        new, witness = apply_move(CUBIC_X4, st, move)
        assert witness == {"h0_l": 10, "genus_l": 4}
        assert new.sign == 1 and new.unknown_degree == 4
        assert new.coeff_dict() == {BASIS_H: -2, BASIS_X4: 2}

    def test_curve_rr_support_bound(self):
        st = state(-1, 5, {})
        with pytest.raises(PreconditionFailed):
            apply_move(CUBIC_X4, st, Move.curve_rr(2, {BASIS_H: 4, BASIS_X4: -1}))

    def test_entry_rr_only_first(self):
        st = state(1, 9)
        new, _ = apply_move(CUBIC, st, Move.entry_rr(2), is_entry=True)
        assert new == state(1, 15, {BASIS_H: -2})
        with pytest.raises(PreconditionFailed):
            apply_move(CUBIC, st, Move.entry_rr(2))

    def test_dp1_subtraction_restricted_to_h(self):
        st = state(1, 8)
        with pytest.raises(PreconditionFailed):
            apply_move(DP1, st, Move.vb_subtract(3, {BASIS_X4: 1}))

    def test_degree_conservation_random_chains(self):
        rng = random.Random(24)
        for _ in range(200):
            surface = rng.choice([CUBIC, CUBIC_X4, DP2, DP1])
            degree = rng.randint(0, 40)
            st = CycleState.entry(degree)
            total = st.total_degree(surface)
            for _ in range(rng.randint(1, 8)):
                moves = []
                for l in range(0, 8):
                    moves.extend(
                        [
                            Move.complement(l),
                            Move.variant_complement(l),
                            Move.vb_subtract(l, {BASIS_H: 1}),
                        ]
                    )
                moves.extend([Move.add_basis({BASIS_H: 1}), Move.involution_flip()])
                move = rng.choice(moves)
                try:
                    st, _ = apply_move(surface, st, move)
                except PreconditionFailed:
                    continue
                assert st.total_degree(surface) == total


class TestCertificates:
    def test_coray_chain_from_degree_10(self):
        cert = find_certificate(CUBIC, 10, GOALS["coray"])
        kinds = [(m.kind, m.l, m.combo_dict()) for m in cert.moves]
        assert kinds == [
            ("AddBasis", None, {BASIS_H: 2}),
            ("Complement", 2, {}),
            ("VBSubtract", 2, {BASIS_H: 1}),
            ("Complement", 1, {}),
        ]
        degrees = [cert.initial.unknown_degree]
        st = cert.initial
        for idx, move in enumerate(cert.moves):
            st, _ = apply_move(CUBIC, st, move, is_entry=(idx == 0))
            degrees.append(st.unknown_degree)
        assert degrees == [10, 16, 11, 8, 4]
        assert verify_certificate(cert).ok

    def test_degree_19_chain_matches_proof(self):
        cert = find_certificate(CUBIC, 19, Goal("le17neg", max_degree=17, sign=-1))
        kinds = [(m.kind, m.l) for m in cert.moves]
        assert kinds == [("AddBasis", None), ("Complement", 3), ("VBSubtract", 3)]
        assert cert.moves[0].combo_dict() == {BASIS_H: 3}
        assert cert.final.unknown_degree == 17
        # final identity: z = -z'' + 12h with z'' effective of degree 17
        assert cert.final.sign == -1 and cert.final.coeff_dict() == {BASIS_H: 12}

    def test_dp2_degree_9_single_subtraction(self):
        cert = find_certificate(DP2, 9, Goal("le7", max_degree=7))
        assert [(m.kind, m.l) for m in cert.moves] == [("VBSubtract", 2)]
        assert cert.final.unknown_degree == 7

    def test_empty_chain_verifies(self):
        cert = Certificate(
            surface=CUBIC,
            initial=state(1, 4),
            moves=[],
            witnesses=[],
            final=state(1, 4),
        )
        assert verify_certificate(cert).ok

    def test_corrupted_witness_named(self):
        cert = find_certificate(CUBIC, 10, GOALS["coray"])
        payload = cert.to_json()
        payload["moves"][2]["witness"]["h0_l1"] = 18
        report = verify_certificate(Certificate.from_json(payload))
        assert not report.ok
        assert "witness" in report.failure

    def test_corrupted_precondition_named(self):
        cert = find_certificate(CUBIC, 10, GOALS["coray"])
        payload = cert.to_json()
        payload["moves"][2]["l"] = 1  # h0(3,2)-based inequality now fails
        report = verify_certificate(Certificate.from_json(payload))
        assert not report.ok
        assert "h0" in report.failure

    def test_unavailable_basis_reported_not_crashed(self):
        cert = find_certificate(CUBIC, 10, GOALS["coray"])
        payload = cert.to_json()
        payload["moves"][2]["target"] = {BASIS_X4: 1}
        report = verify_certificate(Certificate.from_json(payload))
        assert not report.ok and "x4" in report.failure

    def test_malformed_move_reported_not_crashed(self):
        cert = find_certificate(CUBIC, 10, GOALS["coray"])
        payload = cert.to_json()
        payload["moves"][1] = {"kind": "Complement"}  # missing l
        report = verify_certificate(Certificate.from_json(payload))
        assert not report.ok

    def test_corrupted_final_state(self):
        cert = find_certificate(CUBIC, 10, GOALS["coray"])
        payload = cert.to_json()
        payload["final"]["unknown_degree"] = 1
        report = verify_certificate(Certificate.from_json(payload))
        assert not report.ok and "final" in report.failure

    def test_json_roundtrip(self):
        cert = find_certificate(CUBIC_X4, 18, GOALS["cubic-x4"])
        payload = json.loads(json.dumps(cert.to_json()))
        again = Certificate.from_json(payload)
        assert verify_certificate(again).ok
        assert again.to_json() == cert.to_json()

    def test_golden_coray_chain(self):
        golden_path = Path(__file__).parent / "golden" / "coray_d10.json"
        cert = find_certificate(CUBIC, 10, GOALS["coray"])
        got = json.dumps(cert.to_json(), indent=2, sort_keys=True) + "\n"
        assert got == golden_path.read_text()

    def test_unreachable_goal_reports_not_found(self):
        with pytest.raises(CertificateNotFound):
            find_certificate(CUBIC, 3, Goal("impossible", degrees=(2,)))
            # degree 3 only moves by multiples of 3 without x4


class TestSuites:
    def test_cubic_suite_small(self):
        report = prove_bound_suite(CUBIC, GOALS["cubic"], ceiling=60)
        assert report.all_verified and report.max_final_degree <= 18

    def test_exceptional_degrees_covered(self):
        report = prove_bound_suite(CUBIC, GOALS["cubic"], ceiling=120)
        starts = {r.start_degree for r in report.rows}
        l = 1
        while h0(3, l + 1) <= 120:
            assert h0(3, l + 1) in starts and h0(3, l + 1) - 1 in starts
            l += 1
        by_start = {r.start_degree: r for r in report.rows}
        for row in by_start.values():
            assert row.verified

    def test_dp2_refined_finals(self):
        report = prove_bound_suite(DP2, GOALS["dp2-refined"], ceiling=60)
        finals = {r.final_degree for r in report.rows}
        assert finals <= set(range(0, 8)) | {12, 13}

    def test_dp1_refined_finals(self):
        report = prove_bound_suite(DP1, GOALS["dp1-refined"], ceiling=60)
        finals = {r.final_degree for r in report.rows}
        assert finals <= set(range(0, 5)) | {7, 15}

    def test_both_signs_reachable_on_cubic(self):
        # both signs of the residual decomposition are achievable
        for degree in range(1, 61):
            for goal_name in ("cubic-pos", "cubic-neg"):
                cert = find_certificate(CUBIC, degree, GOALS[goal_name])
                assert verify_certificate(cert).ok

    def test_monotone_induction_step(self):
        for degree in range(20, 201):
            moves = induction_step_moves(degree)
            assert len(moves) <= 3
            st = CycleState.entry(degree)
            for idx, move in enumerate(moves):
                st, _ = apply_move(CUBIC, st, move, is_entry=(idx == 0))
            assert st.unknown_degree < degree


class TestThresholds:
    def test_entry_certificate_structure(self):
        cert = entry_certificate(CUBIC, 25, 2, GOALS["cubic-pos"])
        assert cert.abstract_entry
        assert cert.moves[0].kind == "EntryRR" and cert.moves[0].gamma == 2
        assert verify_certificate(cert).ok
        assert cert.initial.unknown_degree == 25
        assert cert.final.total_degree(CUBIC) == 25

    def test_cubic_threshold_18(self):
        report = effectivity_threshold_report(CUBIC, 18, ceiling=80)
        assert report["all_effective"]

    def test_cubic_x4_threshold_8(self):
        report = effectivity_threshold_report(CUBIC_X4, 8, ceiling=80)
        assert report["all_effective"]
        assert "genus" in report["rule"]

    def test_dp2_thresholds(self):
        assert effectivity_threshold_report(DP2, 13, ceiling=80)["all_effective"]
        even = effectivity_threshold_report(DP2, 12, ceiling=80, even_only=True)
        assert even["all_effective"]
        assert all(row["degree"] % 2 == 0 for row in even["rows"])

    def test_dp1_threshold_15(self):
        assert effectivity_threshold_report(DP1, 15, ceiling=80)["all_effective"]


class TestSurfaceModel:
    def test_basis(self):
        assert CUBIC.basis == {BASIS_H: 3}
        assert CUBIC_X4.basis == {BASIS_H: 3, BASIS_X4: 4}
        assert DP2.basis == {BASIS_H: 2}
        with pytest.raises(ValueError):
            DelPezzo(2, with_x4=True)

    def test_default_goals(self):
        assert default_goal(CUBIC).name == "cubic"
        assert default_goal(CUBIC_X4).name == "cubic-x4"
        assert default_goal(DP2, refined=True).name == "dp2-refined"
        assert default_goal(DP1).name == "dp1"
