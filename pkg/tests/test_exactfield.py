from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcyclic.errors import FieldMismatch, NotPreserved, NotWellDefined, ShapeMismatch, Singular
from hopfcyclic.exactfield import (
    GF,
    QQ,
    Matrix,
    Subspace,
    field_from_tag,
    inverse,
    kernel_basis,
    quotient_data,
    rank,
    solve,
)


def small_int_matrices(max_side=5, lo=-4, hi=4):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rationals_are_canonical():
    assert QQ.format(Fraction(6, -4)) == "-3/2"
    assert QQ.parse("-3/2") == Fraction(-3, 2)
    assert QQ.parse(" 7 ") == 7
    assert QQ.format(Fraction(4, 2)) == "2"


def test_floats_are_refused():
    with pytest.raises(TypeError):
        QQ.scalar(0.5)


def test_prime_field_arithmetic():
    F = GF(7)
    assert F.parse("1/3") == 5  # 3 * 5 = 15 = 1 mod 7
    assert F.inv(3) == 5
    assert F.format(-1) == "6"
    with pytest.raises(ValueError):
        GF(8)


def test_field_tags_round_trip():
    assert field_from_tag("Q") is QQ
    assert field_from_tag({"Fp": 5}) == GF(5)
    assert field_from_tag("Fp:11").p == 11
    assert field_from_tag(GF(3).to_json()) == GF(3)
    with pytest.raises(ValueError):
        field_from_tag("R")


def test_matrix_equality_ignores_representation():
    a = Matrix.from_rows(QQ, [["1/2", "1"], ["0", "3/4"]])
    b = Matrix.from_rows(QQ, [[Fraction(2, 4), 1], [0, Fraction(6, 8)]])
    assert a == b
    assert a.scale(4) == Matrix.from_rows(QQ, [[2, 4], [0, 3]])


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatch):
        Matrix.identity(QQ, 2) @ Matrix.identity(GF(5), 2)


def test_ragged_rows_rejected():
    with pytest.raises(ShapeMismatch):
        Matrix.from_rows(QQ, [[1, 2], [3]])


def test_hilbert_inverse_is_exact():
    n = 5
    hilbert = Matrix.from_rows(QQ, [[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)])
    inv = inverse(hilbert)
    assert (hilbert @ inv).is_identity()
    # the inverse of a Hilbert matrix has integer entries; its corner is n^2
    assert inv[0, 0] == n * n


def test_singular_inverse_raises():
    with pytest.raises(Singular):
        inverse(Matrix.from_rows(QQ, [[1, 2], [2, 4]]))


def test_rank_depends_on_characteristic():
    m = Matrix.from_rows(QQ, [[1, 1], [1, -1]])
    assert rank(m) == 2
    assert rank(Matrix.from_rows(GF(2), [[1, 1], [1, -1]])) == 1


@settings(max_examples=60, deadline=None)
@given(small_int_matrices())
def test_rank_agrees_with_floating_point_on_small_integers(rows):
    m = Matrix.from_rows(QQ, rows)
    assert rank(m) == np.linalg.matrix_rank(np.array(rows, dtype=float))
    assert rank(m) == rank(m.T)


@settings(max_examples=60, deadline=None)
@given(small_int_matrices())
def test_kernel_is_a_complement_of_the_row_space(rows):
    m = Matrix.from_rows(QQ, rows)
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert k.cols == m.cols - rank(m)
    assert rank(k) == k.cols


@settings(max_examples=60, deadline=None)
@given(small_int_matrices(), st.sampled_from([QQ, GF(5), GF(7)]))
def test_solve_returns_a_solution_when_one_exists(rows, field):
    a = Matrix.from_rows(field, rows)
    x0 = Matrix.from_rows(field, [[i - 1] for i in range(a.cols)])
    b = a @ x0
    x = solve(a, b)
    assert x is not None and a @ x == b


def test_solve_detects_inconsistency():
    a = Matrix.from_rows(QQ, [[1, 1], [1, 1]])
    b = Matrix.from_rows(QQ, [[1], [2]])
    assert solve(a, b) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.data())
def test_inverse_of_unitriangular_products(n, data):
    entries = data.draw(st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n))
    lower = Matrix.from_dict(QQ, n, n, {(i, j): entries[i * n + j] for i in range(n) for j in range(i)})
    lower = lower + Matrix.identity(QQ, n)
    upper = lower.T
    m = lower @ upper.scale(Fraction(1, 2))
    assert (inverse(m) @ m).is_identity()


def test_quotient_projection_and_section():
    span = Matrix.from_rows(QQ, [[1], [1], [0]])
    q = quotient_data(span, 3)
    assert q.dim == 2
    assert (q.projection @ span).is_zero()
    assert (q.projection @ q.section).is_identity()


def test_induced_map_checks_well_definedness():
    swap = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    q = quotient_data(Matrix.from_rows(QQ, [[1], [0]]), 2)
    with pytest.raises(NotWellDefined):
        q.induced(swap, q)
    sym = quotient_data(Matrix.from_rows(QQ, [[1], [-1]]), 2)
    assert sym.induced(swap, sym).is_identity()


def test_subspace_coordinates():
    sub = Subspace(Matrix.from_rows(QQ, [[1, 0], [1, 0], [0, 1]]))
    v = Matrix.from_rows(QQ, [[2], [2], [5]])
    assert sub.coordinates(v) == Matrix.from_rows(QQ, [[2], [5]])
    with pytest.raises(NotPreserved):
        sub.coordinates(Matrix.from_rows(QQ, [[1], [0], [0]]))


def test_kron_matches_numpy_ordering():
    a = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    b = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    expected = np.kron(np.array([[1, 2], [3, 4]]), np.array([[0, 1], [1, 0]]))
    assert a.kron(b) == Matrix.from_rows(QQ, expected.tolist())


def test_large_entries_do_not_overflow():
    big = 10 ** 40
    m = Matrix.from_rows(QQ, [[big, 1], [1, Fraction(1, big)]])
    assert rank(m) == 1
    m2 = Matrix.from_rows(QQ, [[big, 1], [1, 1]])
    assert (inverse(m2) @ m2).is_identity()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 2**20, 2**26 + 1, 2**31, 2**40]), st.integers(1, 4), st.data())
def test_products_are_exact_for_every_entry_size(scale, k, data):
    # sizes straddle the float, int64 and big-integer code paths
    ints = st.integers(-scale, scale)
    a = data.draw(st.lists(st.lists(ints, min_size=k, max_size=k), min_size=2, max_size=2))
    b = data.draw(st.lists(st.lists(ints, min_size=2, max_size=2), min_size=k, max_size=k))
    expected = [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(2)] for i in range(2)]
    got = Matrix.from_rows(QQ, a) @ Matrix.from_rows(QQ, b)
    assert got == Matrix.from_rows(QQ, expected)
