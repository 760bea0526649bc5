from collections import Counter

import pytest

from macmahon.partitions import (
    DiagramTuple,
    PlanePartition,
    YoungDiagram,
    chi,
    enumerate_diagram_tuples,
    partition_of_tuple,
)
from macmahon.torus import (
    TangentCharacter,
    attracting_dimension,
    positive_weight_count,
    tangent_character,
)


def test_single_box_character():
    ch = tangent_character(DiagramTuple([YoungDiagram([1])]))
    assert ch.terms == Counter({(1, 1, 0, 1): 1, (1, 1, 1, 0): 1})


def test_row_of_two_character():
    # hand evaluation: boxes (0,0) and (0,1) of the single diagram (2)
    ch = tangent_character(DiagramTuple([YoungDiagram([2])]))
    assert ch.terms == Counter(
        {(1, 1, 0, 2): 1, (1, 1, 0, 1): 1, (1, 1, 1, -1): 1, (1, 1, 1, 0): 1}
    )


def test_rank_two_cross_terms():
    ch = tangent_character(DiagramTuple([YoungDiagram([1]), YoungDiagram()]))
    assert ch.terms == Counter(
        {(1, 1, 0, 1): 1, (1, 1, 1, 0): 1, (1, 2, 1, 1): 1, (2, 1, 0, 0): 1}
    )
    assert ch.size() == 4


def test_character_size_is_2rn():
    for r in (1, 2, 3):
        for n in range(6):
            for tup in enumerate_diagram_tuples(r, n):
                assert tangent_character(tup).size() == 2 * r * n


def test_trivial_weights_rejected():
    with pytest.raises(ValueError):
        TangentCharacter(Counter({(1, 1, 0, 0): 1}))


def test_positive_count_single_box():
    assert positive_weight_count(DiagramTuple([YoungDiagram([1])]), 3) == 2


def test_positive_count_matches_closed_form():
    for r in (1, 2, 3):
        for n in range(6):
            for tup in enumerate_diagram_tuples(r, n):
                pi = partition_of_tuple(tup)
                expected = r * n + chi(pi)
                assert positive_weight_count(tup, n + 2) == expected
                assert expected == attracting_dimension(pi, r)


def test_alpha_stability():
    for r in (1, 2):
        for n in range(5):
            for tup in enumerate_diagram_tuples(r, n):
                counts = {positive_weight_count(tup, a) for a in range(n + 2, 2 * n + 5)}
                assert len(counts) == 1


def test_no_nontrivial_zero_pairings():
    # terms with (k1, k2) = (0, 0) do occur across framing indices; all
    # others must pair strictly away from zero for stable alpha
    for r in (1, 2, 3):
        for n in range(5):
            for tup in enumerate_diagram_tuples(r, n):
                ch = tangent_character(tup)
                for a in range(n + 2, 2 * n + 5):
                    for (_, _, k1, k2) in ch.terms:
                        if (k1, k2) != (0, 0):
                            assert k1 + a * k2 != 0


def test_attracting_dimension_examples():
    assert attracting_dimension(PlanePartition([[1]]), 1) == 2
    assert attracting_dimension(PlanePartition([[1]]), 2) == 3
    # row of two: chi = 1; column of two: chi = 2
    assert attracting_dimension(PlanePartition([[1, 1]]), 1) == 3
    assert attracting_dimension(PlanePartition([[1], [1]]), 1) == 4


def test_attracting_dimension_validation():
    with pytest.raises(ValueError):
        attracting_dimension(PlanePartition([[2]]), 1)
    with pytest.raises(ValueError):
        attracting_dimension(PlanePartition([[1]]), 0)
    with pytest.raises(ValueError):
        positive_weight_count(DiagramTuple([YoungDiagram([1])]), 0)
