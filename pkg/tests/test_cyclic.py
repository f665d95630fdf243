import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcyclic.constructions import algebra_cyclic, coalgebra_cocyclic
from hopfcyclic.cyclic import (
    GradedMap,
    ParaCocyclicModule,
    ParaCyclicModule,
    check_dual,
    check_relations,
    compare_modules,
    constant_cocyclic,
    constant_cyclic,
    cyclic_order,
    hat_dual,
    is_cyclic,
    transpose_module,
    verify_morphism,
)
from hopfcyclic.errors import ShapeMismatch
from hopfcyclic.exactfield import GF, QQ, Matrix, inverse

CYCLIC_NAMES = {"face-face", "degen-degen", "face-degen", "face-cyclic", "face0-cyclic", "degen-cyclic", "degen0-cyclic"}
COCYCLIC_NAMES = {"coface-coface", "codegen-codegen", "codegen-coface", "coface-cyclic", "coface0-cyclic",
                  "codegen-cyclic", "codegen0-cyclic"}


def test_constant_cyclic_module_passes_everything():
    rep = check_relations(constant_cyclic(QQ, 4), require_cyclic=True)
    assert rep.ok
    assert CYCLIC_NAMES | {"cyclic-invertible", "cyclic-order"} == rep.names()
    assert rep.meta["orders"] == {n: 1 for n in range(5)}


def test_constant_cocyclic_module_passes_everything():
    rep = check_relations(constant_cocyclic(GF(3), 4), require_cyclic=True)
    assert rep.ok
    assert COCYCLIC_NAMES <= rep.names()


def _with_tau(X, n, c):
    cyc = list(X.cyclic)
    cyc[n] = cyc[n].scale(c)
    return ParaCyclicModule(X.field, X.dims, X.faces, X.degeneracies, cyc)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(-5, 5).filter(lambda c: c not in (0, 1)))
def test_rescaled_cyclic_operator_is_detected(n, c):
    rep = check_relations(_with_tau(constant_cyclic(QQ, 3), n, c))
    assert not rep.ok
    assert {f.name for f in rep.failures()} <= {"face-cyclic", "face0-cyclic", "degen-cyclic", "degen0-cyclic"}


def test_zero_cyclic_operator_is_not_invertible():
    rep = check_relations(_with_tau(constant_cyclic(QQ, 2), 1, 0))
    assert not rep.passed("cyclic-invertible")


def test_sabotaged_face_names_the_simplicial_identity():
    X = constant_cyclic(QQ, 3)
    faces = [list(f) for f in X.faces]
    faces[2][1] = faces[2][1].scale(2)
    rep = check_relations(ParaCyclicModule(QQ, X.dims, faces, X.degeneracies, X.cyclic))
    failed = {f.name for f in rep.failures()}
    assert "face-face" in failed and "face-degen" in failed


def test_wrong_operator_counts_rejected():
    one = Matrix.identity(QQ, 1)
    with pytest.raises(ShapeMismatch):
        ParaCyclicModule(QQ, [1, 1], [[], [one]], [[one], []], [one, one])
    with pytest.raises(ShapeMismatch):
        ParaCocyclicModule(QQ, [1, 1], [[one, one], []], [[], [one, one]], [one, one])


def test_cyclic_order():
    rot = Matrix.from_rows(QQ, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert cyclic_order(rot, 3) == 3
    assert cyclic_order(rot, 2) is None
    assert cyclic_order(Matrix.identity(QQ, 2), 5) == 1


def test_hat_of_constant_is_constant():
    assert compare_modules(hat_dual(constant_cocyclic(QQ, 3)), constant_cyclic(QQ, 3)).ok


def test_check_of_constant_is_constant():
    assert compare_modules(check_dual(constant_cyclic(QQ, 3)), constant_cocyclic(QQ, 3)).ok


def test_hat_dual_of_coalgebra_module_is_cyclic(c2):
    X = coalgebra_cocyclic(c2, 3)
    assert check_relations(X, require_cyclic=True).ok
    Y = hat_dual(X)
    rep = check_relations(Y, require_cyclic=True)
    assert rep.ok, [(f.name, f.degree, f.index) for f in rep.failures()]


def test_check_dual_of_algebra_module_is_cocyclic(c2):
    rep = check_relations(check_dual(algebra_cyclic(c2, 3)), require_cyclic=True)
    assert rep.ok


def test_check_of_hat_is_paracocyclic(c2):
    Z = check_dual(hat_dual(coalgebra_cocyclic(c2, 3)))
    assert check_relations(Z).ok


def test_duals_invert_the_cyclic_operator(h4):
    X = coalgebra_cocyclic(h4, 2)
    Y = hat_dual(X)
    for n in range(3):
        assert Y.tau(n) == inverse(X.t(n))
    Z = check_dual(Y)
    for n in range(3):
        assert Z.t(n) == X.t(n)


def test_transpose_swaps_kinds_and_keeps_relations(c2):
    X = coalgebra_cocyclic(c2, 3)
    T = transpose_module(X)
    assert isinstance(T, ParaCyclicModule)
    assert check_relations(T, require_cyclic=True).ok
    assert compare_modules(transpose_module(T), X).ok


def test_identity_is_a_morphism(c2):
    X = algebra_cyclic(c2, 3)
    ident = GradedMap([Matrix.identity(QQ, d) for d in X.dims])
    assert verify_morphism(ident, X, X).ok
    assert ident.is_invertible()


def test_non_equivariant_map_is_caught(c2):
    X = algebra_cyclic(c2, 2)
    bad = GradedMap([Matrix.identity(QQ, d) for d in X.dims])
    bad.matrices[1] = Matrix.from_dict(QQ, 4, 4, {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 2})
    rep = verify_morphism(bad, X, X)
    # gg is fixed by the rotation, so only faces and degeneracies notice
    assert {"face", "degeneracy"} == {f.name for f in rep.failures()}


def test_morphism_kinds_must_match():
    with pytest.raises(ShapeMismatch):
        verify_morphism(GradedMap([Matrix.identity(QQ, 1)]), constant_cyclic(QQ, 0), constant_cocyclic(QQ, 0))


def test_truncation():
    X = constant_cyclic(QQ, 4).truncate(2)
    assert X.N == 2 and check_relations(X).ok
    with pytest.raises(ValueError):
        X.truncate(3)


def test_is_cyclic_on_algebra_module(h4):
    assert is_cyclic(algebra_cyclic(h4, 2))
