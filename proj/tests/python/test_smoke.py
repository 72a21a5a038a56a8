from fractions import Fraction

import pytest

import expc

SMALL = expc.Ideal(2, [[3, 1], [2, 2]])
RADCM = expc.Ideal(5, [[1, 0, 0, 1, 0], [0, 1, 0, 1, 0], [0, 1, 1, 0, 0], [1, 0, 1, 0, 1], [0, 0, 0, 0, 2]])


def test_ideal_minimalizes_and_parses():
    assert expc.Ideal(2, [[3, 1], [2, 2], [3, 2]]) == SMALL
    assert expc.Ideal.parse("vars: 2\ngens:\nx1^3*x2\nx1^2*x2^2\n") == SMALL
    assert SMALL.num_vars == 2
    assert sorted(SMALL.generators) == [[2, 2], [3, 1]]


def test_components_and_degree():
    comps = expc.components(SMALL)
    assert sorted(comps) == sorted([([1], [0, 0]), ([2], [0, 0]), ([2], [1, 0]), ([], [2, 1])])
    assert expc.degree(SMALL) == 3
    assert expc.krull_dimension(SMALL) == 1
    assert not expc.is_unmixed(SMALL)
    assert expc.exponent_complex(SMALL, [1, 0]) == [[1], [2]]


def test_rank_matches_oracle():
    a = [[1, 1]]
    assert expc.rank(SMALL, a, [3]) == 4
    assert expc.rank_oracle(SMALL, a, [3]) == 4
    assert expc.rank(SMALL, a, [Fraction(1, 2)]) == 3
    assert expc.rank(SMALL, a, ["1/2"]) == 3
    assert expc.exponents(SMALL, a, [3]) == [["0", "3"], ["1", "2"], ["2", "1"], ["3", "0"]]


def test_cohen_macaulay_report():
    report = expc.is_cohen_macaulay(RADCM)
    assert report["verdict"] is False
    assert report["witness_b"] == [0, 0, 0, 0, 1]
    assert report["witnesses"][0]["complex"] == [[1, 2], [3, 4]]
    assert expc.is_cohen_macaulay(expc.Ideal(2, [[1, 1]]))["verdict"] is True


def test_complexes():
    assert expc.reduced_homology(4, [[1, 2], [3, 4]]) == [0, 1, 0]
    assert not expc.is_cohen_macaulay_complex(4, [[1, 2], [3, 4]])
    assert expc.rank_squarefree(4, [[1, 2], [3, 4]], 2) == 3


def test_grading_and_errors():
    assert expc.generate_generic(2, 1, 5) == [[1, 1]]
    assert expc.validate([[1, 1]]) == []
    assert any("pointed" in v for v in expc.validate([[1, -1]]))
    with pytest.raises(ValueError):
        expc.rank(SMALL, [[1, -1]], [3])
    with pytest.raises(ValueError):
        expc.Ideal(2, [[0, 0]])
    with pytest.raises(ValueError):
        expc.exponent_complex(SMALL, [3, 3])


def test_polarize_and_verify():
    pol, names = expc.polarize(expc.Ideal(1, [[2]]))
    assert pol == expc.Ideal(2, [[1, 1]])
    assert names == [(1, 1), (1, 2)]
    report = expc.verify("3,2,3,5", seed=2, jobs=2)
    assert report["instances"] == 5
    assert report["checks"] == 15
    assert report["mismatches"] == sum(not r["agree"] for r in report["records"])
