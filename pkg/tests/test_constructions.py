import pytest

from hopfcyclic.constructions import (
    CONSTRUCTIONS,
    alg_with_coefficients,
    algebra_cyclic,
    coalg_with_coefficients,
    coalgebra_cocyclic,
    coinvariant_cocyclic,
    connes_moscovici_cocyclic,
    invariant_cyclic,
    invariant_k,
    k_dual_module,
    k_closed_form,
    kr_cyclic,
)
from hopfcyclic.cyclic import (
    ParaCyclicModule,
    check_relations,
    compare_modules,
    constant_cocyclic,
    constant_cyclic,
    hat_dual,
)
from hopfcyclic.errors import MismatchWithHatDual, NotInInvolution, SAYDViolation, ShapeMismatch
from hopfcyclic.exactfield import GF, QQ
from hopfcyclic.hopfcore import builtin_hopf, involution_pairs, one_dim_module, sayd_from_modular_pair, trivial_pair


def _failures(rep):
    return [(c.name, c.degree, c.index) for c in rep.failures()]


def test_ground_field_gives_constant_modules():
    k = builtin_hopf("k")
    assert compare_modules(algebra_cyclic(k, 3), constant_cyclic(QQ, 3)).ok
    assert compare_modules(coalgebra_cocyclic(k, 3), constant_cocyclic(QQ, 3)).ok


@pytest.mark.parametrize("name,N", [("c2", 4), ("h4", 3), ("s3", 2)])
def test_algebra_module_is_cyclic(name, N):
    X = algebra_cyclic(builtin_hopf(name), N)
    rep = check_relations(X, require_cyclic=True)
    assert rep.ok, _failures(rep)
    assert X.dims == [X.dims[0] ** (n + 1) for n in range(N + 1)]


@pytest.mark.parametrize("name,N", [("c2", 4), ("h4", 3)])
def test_coalgebra_module_is_cocyclic(name, N):
    rep = check_relations(coalgebra_cocyclic(builtin_hopf(name), N), require_cyclic=True)
    assert rep.ok, _failures(rep)


def test_connes_moscovici_is_cocyclic_for_every_involution_pair(c2, c2_pairs, h4, h4_pairs):
    for H, pairs, N in ((c2, c2_pairs, 4), (h4, h4_pairs, 3)):
        for p in pairs:
            X = connes_moscovici_cocyclic(H, p, N)
            assert X.dims == [H.dim ** n for n in range(N + 1)]
            rep = check_relations(X, require_cyclic=True)
            assert rep.ok, (p.label(H), _failures(rep))


def test_kr_is_cyclic_for_every_involution_pair(c2, c2_pairs, h4, h4_pairs):
    for H, pairs, N in ((c2, c2_pairs, 4), (h4, h4_pairs, 3)):
        for p in pairs:
            rep = check_relations(kr_cyclic(H, p, N), require_cyclic=True)
            assert rep.ok, (p.label(H), _failures(rep))


def test_pair_not_in_involution_is_refused(h4):
    with pytest.raises(NotInInvolution):
        connes_moscovici_cocyclic(h4, trivial_pair(h4), 2)
    with pytest.raises(NotInInvolution):
        kr_cyclic(h4, trivial_pair(h4), 2)


def test_kr_with_the_other_pairs_cyclic_operator_fails(h4, h4_pairs):
    # faces of one pair with the cyclic operator of the other: the sabotage must show
    a, b = (kr_cyclic(h4, p, 3) for p in h4_pairs)
    mixed = ParaCyclicModule(QQ, a.dims, a.faces, a.degeneracies, b.cyclic)
    rep = check_relations(mixed)
    assert not rep.ok
    assert {c.name for c in rep.failures()} & {"face-cyclic", "face0-cyclic", "degen-cyclic", "degen0-cyclic"}


def test_coefficient_modules_on_h4(h4, h4_pairs):
    for p in h4_pairs:
        M = sayd_from_modular_pair(h4, p)
        trivial_delta = p.delta == h4.counit
        trivial_sigma = p.sigma == h4.unit
        for build, cyclic_when in (
            (alg_with_coefficients, trivial_delta),
            (coalg_with_coefficients, trivial_sigma),
            (k_dual_module, trivial_sigma),
            (invariant_cyclic, True),
            (coinvariant_cocyclic, True),
            (invariant_k, True),
        ):
            rep = check_relations(build(h4, M, 3))
            assert rep.ok, (build.__name__, _failures(rep))
            assert rep.meta["cyclic"] == cyclic_when, build.__name__


def test_coefficient_modules_on_c2(c2, c2_pairs):
    for p in c2_pairs:
        M = sayd_from_modular_pair(c2, p)
        for build in (alg_with_coefficients, coalg_with_coefficients, k_dual_module):
            assert check_relations(build(c2, M, 4)).ok
        for build in (invariant_cyclic, coinvariant_cocyclic, invariant_k):
            assert check_relations(build(c2, M, 4), require_cyclic=True).ok


def test_closed_form_k_equals_hat_of_coalgebra_side(h4, h4_pairs):
    for p in h4_pairs:
        M = sayd_from_modular_pair(h4, p)
        rep = compare_modules(k_closed_form(h4, M, 3), hat_dual(coalg_with_coefficients(h4, M, 3)))
        assert rep.ok, _failures(rep)


def test_closed_form_k_against_the_wrong_coefficients_differs(h4, h4_pairs):
    M1, M2 = (sayd_from_modular_pair(h4, p) for p in h4_pairs)
    assert not compare_modules(k_closed_form(h4, M1, 2), hat_dual(coalg_with_coefficients(h4, M2, 2))).ok


def test_k_dual_module_raises_on_mismatch(h4, h4_pairs, monkeypatch):
    import hopfcyclic.constructions as cons

    M1, M2 = (sayd_from_modular_pair(h4, p) for p in h4_pairs)
    real = cons.coalg_with_coefficients
    monkeypatch.setattr(cons, "coalg_with_coefficients", lambda H, M, N: real(H, M2, N))
    with pytest.raises(MismatchWithHatDual):
        cons.k_dual_module(h4, M1, 2)


def test_coefficients_must_be_sayd(h4):
    bad = one_dim_module(h4, h4.counit, h4.unit)
    with pytest.raises(SAYDViolation):
        alg_with_coefficients(h4, bad, 2)


def test_coefficients_must_have_the_right_sides(c2):
    with pytest.raises(ShapeMismatch):
        alg_with_coefficients(c2, one_dim_module(c2, c2.counit, c2.unit, "RL"), 2)


def test_prime_field_constructions():
    H = builtin_hopf("h4", GF(5))
    for p in involution_pairs(H):
        M = sayd_from_modular_pair(H, p)
        assert check_relations(coinvariant_cocyclic(H, M, 2), require_cyclic=True).ok


def test_construction_names():
    assert len(CONSTRUCTIONS) == 9
