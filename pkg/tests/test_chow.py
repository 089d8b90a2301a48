import random
from fractions import Fraction

import pytest

from zerocycles.chow import (
    ALPHA,
    BETA,
    GAMMA,
    CurveDegrees,
    LinesIntersect,
    NotInStandardPosition,
    STANDARD_LINES,
    TriClass,
    collinearity_report,
    degree_wrt_first,
    diagonal_locus_degree,
    diagonal_triple,
    matrix_rank,
    pencil_condition_solve,
    pencil_rank,
    segre_s2,
    standardize_skew_lines,
    total_segre,
)


class TestTriClass:
    def test_products(self):
        assert ALPHA * BETA == TriClass({frozenset({"x", "y"}): 1})
        assert (ALPHA * ALPHA).is_zero
        full = total_segre()
        expected = (
            TriClass.one()
            + ALPHA
            + BETA
            + GAMMA
            + ALPHA * BETA
            + ALPHA * GAMMA
            + BETA * GAMMA
            + ALPHA * BETA * GAMMA
        )
        assert full == expected

    def test_ring_axioms_randomized(self):
        rng = random.Random(20)

        def random_class():
            subsets = [frozenset(s) for s in ({}, {"x"}, {"y"}, {"z"}, {"x", "y"}, {"y", "z"})]
            return TriClass({s: rng.randint(-4, 4) for s in rng.sample(subsets, 3)})

        for _ in range(300):
            a, b, c = random_class(), random_class(), random_class()
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a


class TestSegreDegrees:
    def test_s2_is_sum_of_pairwise_products(self):
        assert segre_s2() == ALPHA * BETA + ALPHA * GAMMA + BETA * GAMMA

    def test_zero_summands_give_zero(self):
        zero = TriClass.zero()
        assert segre_s2(zero, zero, zero).is_zero

    def test_whitney_truncation_consistency(self):
        full = total_segre()
        assert full.codimension_part(0) == TriClass.one()
        assert full.codimension_part(1) == ALPHA + BETA + GAMMA
        assert full.codimension_part(2) == segre_s2()

    def test_degree_216(self):
        assert degree_wrt_first(segre_s2(), CurveDegrees(6, 6, 6)) == 216

    def test_square_zero_kills_x_terms(self):
        degs = CurveDegrees(6, 6, 6)
        assert degree_wrt_first(BETA * GAMMA, degs) == 216
        assert degree_wrt_first(ALPHA * BETA, degs) == 0
        assert degree_wrt_first(ALPHA * GAMMA, degs) == 0

    def test_diagonal_locus_72(self):
        assert diagonal_locus_degree(12, CurveDegrees(6, 6, 6)) == 72

    def test_strict_inequality_report(self):
        report = collinearity_report()
        assert report["deg_D2"] == 216
        assert report["deg_D2_prime"] == 72
        assert report["strict_inequality"] is True

    def test_parametric_degrees(self):
        # perturbing the degrees moves both counts by the expected formulas
        degs = CurveDegrees(5, 7, 2)
        assert degree_wrt_first(segre_s2(), degs) == 5 * 7 * 2
        assert diagonal_locus_degree(9, degs) == 45

    def test_homogeneity_required(self):
        with pytest.raises(ValueError):
            degree_wrt_first(ALPHA + ALPHA * BETA)


class TestPencilCondition:
    def test_visible_dependency(self):
        assert pencil_rank((1, 0), (1, 0), (1, 0)) == 2

    def test_diagonal_one_one(self):
        assert pencil_rank((1, 1), (1, 1), (1, 1)) == 2

    def test_off_diagonal(self):
        assert pencil_rank((1, 0), (0, 1), (1, 0)) == 3

    def test_randomized_ranks(self):
        rng = random.Random(21)
        for _ in range(200):
            a, b = rng.randint(-9, 9), rng.randint(-9, 9)
            if (a, b) == (0, 0):
                a = 1
            assert pencil_rank(*diagonal_triple((a, b))) == 2
        done = 0
        while done < 200:
            u = (rng.randint(-9, 9), rng.randint(-9, 9))
            v = (rng.randint(-9, 9), rng.randint(-9, 9))
            w = (rng.randint(-9, 9), rng.randint(-9, 9))
            if any(p == (0, 0) for p in (u, v, w)):
                continue
            # off the diagonal: some pair of parameters independent
            if matrix_rank([list(u), list(v)]) < 2 and matrix_rank([list(u), list(w)]) < 2:
                continue
            assert pencil_rank(u, v, w) == 3
            done += 1

    def test_solver_description(self):
        out = pencil_condition_solve()
        assert out["family"] == "diagonal"
        assert all(sample["rank"] == 2 for sample in out["diagonal_samples"])
        assert out["off_diagonal_example_rank"] == 3

    def test_nonstandard_position_rejected(self):
        skew = [
            ((0, 0, 1, 0), (0, 0, 0, 1)),
            ((1, 0, 0, 0), (0, 1, 0, 0)),
            ((1, 0, 2, 0), (0, 1, 0, 1)),  # not the diagonal line
        ]
        with pytest.raises(NotInStandardPosition):
            pencil_condition_solve(skew)


class TestStandardization:
    def test_standard_triple_fixed(self):
        transform = standardize_skew_lines(STANDARD_LINES)
        assert len(transform) == 4

    def test_random_skew_triples(self):
        rng = random.Random(22)
        done = 0
        while done < 25:
            lines = [
                (
                    tuple(rng.randint(-4, 4) for _ in range(4)),
                    tuple(rng.randint(-4, 4) for _ in range(4)),
                )
                for _ in range(3)
            ]
            try:
                standardize_skew_lines(lines)
            except (LinesIntersect, ValueError):
                continue
            done += 1  # internal assertion already checks the image spans

    def test_intersecting_lines_rejected(self):
        lines = [
            ((0, 0, 1, 0), (0, 0, 0, 1)),
            ((1, 0, 0, 0), (0, 0, 1, 0)),  # meets the first line at (0,0,1,0)
            ((1, 0, 1, 0), (0, 1, 0, 1)),
        ]
        with pytest.raises(LinesIntersect):
            standardize_skew_lines(lines)

    def test_standardized_pencil_condition_holds(self):
        rng = random.Random(23)
        done = 0
        while done < 10:
            lines = [
                (
                    tuple(rng.randint(-3, 3) for _ in range(4)),
                    tuple(rng.randint(-3, 3) for _ in range(4)),
                )
                for _ in range(3)
            ]
            try:
                transform = standardize_skew_lines(lines)
            except (LinesIntersect, ValueError):
                continue
            images = []
            for line in lines:
                images.append(
                    tuple(
                        tuple(
                            sum(transform[r][c] * Fraction(p[c]) for c in range(4))
                            for r in range(4)
                        )
                        for p in line
                    )
                )
            out = pencil_condition_solve(images)
            assert out["family"] == "diagonal"
            done += 1
