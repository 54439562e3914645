from fractions import Fraction as F

import pytest

from ternary_leibniz import catalog
from ternary_leibniz.catalog import PATTERN_ALIASES, TABLE_QCENT_PATTERNS, THEOREM_QCENT_PATTERNS
from ternary_leibniz.patterns import pattern_parameters, pattern_space, render_pattern, transpose
from ternary_leibniz.spaces import LinearMap, centroid, contains, quasi_centroid, subspace_equal


def test_pattern_space_linear_forms():
    S = pattern_space("a11 a12; a12-a11 2*a11")
    assert S.dimension() == 2
    assert contains(S, LinearMap.from_rows([[1, 0], [-1, 2]]))
    assert contains(S, LinearMap.from_rows([[0, 1], [1, 0]]))
    assert not contains(S, LinearMap.from_rows([[1, 0], [0, 0]]))


def test_pattern_aliases_merge_symbols():
    assert pattern_parameters("a11 c12; 0 a12", {"c12": "a12"}) == ["a11", "a12"]
    assert pattern_space("a11 c12; 0 a12", {"c12": "a12"}).dimension() == 2


@pytest.mark.parametrize("bad", ["a11 0; 0", "a11 1; 0 0", "a11 *; 0 0"])
def test_bad_patterns(bad):
    with pytest.raises(ValueError):
        pattern_space(bad)


def test_render_round_trips_through_pattern_space():
    for key in ("L1", "L2", "L16", "L11"):
        for S in (centroid(catalog.builtin(key)), quasi_centroid(catalog.builtin(key))):
            text = "; ".join(" ".join(row) for row in render_pattern(S))
            assert subspace_equal(pattern_space(text), S)


def test_render_names_parameters_after_pivots():
    grid = render_pattern(quasi_centroid(catalog.builtin("L1")))
    assert grid == [
        ["a11", "0", "0", "0"],
        ["a21", "a22", "a23", "a24"],
        ["0", "0", "a11", "0"],
        ["a41", "a42", "a43", "a44"],
    ]


def test_L1_quasi_centroid_against_printed_patterns():
    q = quasi_centroid(catalog.builtin("L1"))
    theorem = pattern_space(THEOREM_QCENT_PATTERNS["L1"])
    table_row = pattern_space(TABLE_QCENT_PATTERNS["L1"])
    assert theorem.dimension() == 9 and table_row.dimension() == 7
    assert not subspace_equal(q, theorem)
    assert not subspace_equal(q, table_row)
    # the theorem matrix misplaces one parameter: a24 at (3,4) instead of (2,4)
    assert contains(q, LinearMap.elementary(4, 2, 4))
    assert not contains(q, LinearMap.elementary(4, 3, 4))
    assert subspace_equal(q, pattern_space(TABLE_QCENT_PATTERNS["L2"]))


def test_L3_table_row_is_scalar():
    assert pattern_space(TABLE_QCENT_PATTERNS["L3"]).dimension() == 1


def test_transpose_involution():
    S = pattern_space(catalog.TABLE_CENT_PATTERNS["L16"], PATTERN_ALIASES)
    assert subspace_equal(transpose(transpose(S)), S)
    assert F(1) in (S.basis[0].entries[0][0], S.basis[0].entries[3][0], -S.basis[0].entries[3][0])
