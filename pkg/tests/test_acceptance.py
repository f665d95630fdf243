"""End-to-end acceptance: one test per criterion, each printed as a PASS/FAIL
line in the terminal summary (see conftest.py)."""

import subprocess
import sys

import pytest

from hopfcyclic.constructions import (
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
from hopfcyclic.cyclic import check_dual, check_relations, compare_modules, hat_dual, is_cyclic
from hopfcyclic.exactfield import QQ, Matrix
from hopfcyclic.homology import connes_dims, cyclic_dims, hochschild_dims
from hopfcyclic.hopfcore import (
    BUILTIN_NAMES,
    HopfAlgebra,
    builtin_hopf,
    dual_hopf,
    one_dim_module,
    sayd_from_modular_pair,
    trivial_pair,
)
from hopfcyclic.theorems import (
    contracting_homotopy_algebra,
    contracting_homotopy_coalgebra,
    dual_pair,
    evaluation_pairing,
    verify_identifications,
    verify_invariant_duality,
    verify_pairing,
    verify_theta_descent,
    verify_theta_morphism,
)

SIMPLICIAL = {"face-face", "degen-degen", "face-degen"}
COSIMPLICIAL = {"coface-coface", "codegen-codegen", "codegen-coface"}
CYCLIC_EXTRA = {"face-cyclic", "face0-cyclic", "degen-cyclic", "degen0-cyclic"}
COCYCLIC_EXTRA = {"coface-cyclic", "coface0-cyclic", "codegen-cyclic", "codegen0-cyclic"}


def _failures(rep):
    return sorted({(c.name, c.degree, c.index) for c in rep.failures()})


def _assert_relations(X, cyclic):
    rep = check_relations(X, require_cyclic=cyclic)
    names = rep.names()
    wanted = SIMPLICIAL | CYCLIC_EXTRA if "cocyclic" not in X.kind else COSIMPLICIAL | COCYCLIC_EXTRA
    for name in sorted(wanted):
        assert name in names, (X.name, name)
        assert rep.passed(name), (X.name, name, _failures(rep))
    assert rep.ok, (X.name, _failures(rep))
    assert rep.meta["cyclic"] == cyclic, X.name
    return rep


def _swap(H, **kw):
    parts = dict(mult=H.mult, unit=H.unit, comult=H.comult, counit=H.counit, antipode=H.antipode)
    parts.update(kw)
    return HopfAlgebra(H.space, name="sabotaged", **parts)


def test_criterion_01_axiom_suites(stopwatch):
    from hopfcyclic.hopfcore import verify_hopf_axioms

    for name in BUILTIN_NAMES:
        H = builtin_hopf(name)
        for X in (H, dual_hopf(H)):
            rep = verify_hopf_axioms(X)
            assert rep.ok, (X.name, _failures(rep))
            assert len(rep.names()) == 10

    h4, c3 = builtin_hopf("h4"), builtin_hopf("c3")
    # each sabotage breaks the named axioms, and the antipode ones because they use unit and counit
    sabotage = [
        (_swap(h4, antipode=Matrix.zeros(QQ, 4, 4)), {"antipode-left", "antipode-right"}),
        (_swap(c3, antipode=Matrix.identity(QQ, 3)), {"antipode-left", "antipode-right"}),
        (_swap(c3, counit=c3.counit.scale(2)),
         {"counitality", "counit-unital", "counit-multiplicative", "antipode-left", "antipode-right"}),
        (_swap(c3, unit=c3.unit.scale(2)),
         {"unitality", "comult-unital", "counit-unital", "antipode-left", "antipode-right"}),
    ]
    for X, named in sabotage:
        assert {c.name for c in verify_hopf_axioms(X).failures()} == named
    assert stopwatch() < 5


def test_criterion_02_relation_suites(c2, c2_trivial, h4, h4_pairs, stopwatch):
    for H, pair, N in ((c2, trivial_pair(c2), 4), (h4, h4_pairs[0], 3)):
        _assert_relations(algebra_cyclic(H, N), cyclic=True)
        _assert_relations(coalgebra_cocyclic(H, N), cyclic=True)
        _assert_relations(connes_moscovici_cocyclic(H, pair, N), cyclic=True)
        _assert_relations(kr_cyclic(H, pair, N), cyclic=True)
    for p in h4_pairs:
        M = sayd_from_modular_pair(h4, p)
        delta_trivial = p.delta == h4.counit
        sigma_trivial = p.sigma == h4.unit
        _assert_relations(connes_moscovici_cocyclic(h4, p, 3), cyclic=True)
        _assert_relations(kr_cyclic(h4, p, 3), cyclic=True)
        _assert_relations(alg_with_coefficients(h4, M, 3), cyclic=delta_trivial)
        _assert_relations(coalg_with_coefficients(h4, M, 3), cyclic=sigma_trivial)
        _assert_relations(k_dual_module(h4, M, 3), cyclic=sigma_trivial)
        _assert_relations(invariant_cyclic(h4, M, 3), cyclic=True)
        _assert_relations(coinvariant_cocyclic(h4, M, 3), cyclic=True)
    assert stopwatch() < 120


def test_criterion_03_duality_functors(c2, c2_pairs, h4, h4_pairs):
    fixtures = [algebra_cyclic(c2, 4), coalgebra_cocyclic(c2, 4), algebra_cyclic(h4, 3), coalgebra_cocyclic(h4, 3)]
    for H, pairs, N in ((c2, c2_pairs, 4), (h4, h4_pairs, 3)):
        for p in pairs:
            M = sayd_from_modular_pair(H, p)
            fixtures += [kr_cyclic(H, p, N), connes_moscovici_cocyclic(H, p, N),
                         alg_with_coefficients(H, M, N), coalg_with_coefficients(H, M, N),
                         invariant_cyclic(H, M, N), coinvariant_cocyclic(H, M, N)]
    for X in fixtures:
        D = hat_dual(X) if "cocyclic" in X.kind else check_dual(X)
        rep = check_relations(D)
        assert rep.ok, (X.name, _failures(rep))
        assert rep.meta["cyclic"] == is_cyclic(X)
    for H, pairs, N in ((c2, c2_pairs, 4), (h4, h4_pairs, 3)):
        for p in pairs:
            M = sayd_from_modular_pair(H, p)
            rep = compare_modules(k_closed_form(H, M, N), hat_dual(coalg_with_coefficients(H, M, N)))
            assert rep.ok, _failures(rep)


def test_criterion_04_contracting_homotopies(c2, h4):
    for H in (c2, h4):
        phi = Matrix.from_dict(QQ, 1, H.dim, {(0, 0): 1})
        alg = contracting_homotopy_algebra(H, phi, 4)
        assert alg.ok, _failures(alg)
        coalg = contracting_homotopy_coalgebra(H, H.unit, 4)
        assert coalg.ok, _failures(coalg)
        for rep in (alg, coalg):
            assert rep.meta["HH"][1:4] == [0, 0, 0]
        assert hochschild_dims(check_dual(algebra_cyclic(H, 4))).as_list()[1:4] == [0, 0, 0]
        assert hochschild_dims(hat_dual(coalgebra_cocyclic(H, 4))).as_list()[1:4] == [0, 0, 0]


def test_criterion_05_theta_morphism_and_descent(c2, c2_trivial, h4, h4_pairs):
    cases = [(c2, c2_trivial, 4)] + [(h4, sayd_from_modular_pair(h4, p), 3) for p in h4_pairs]
    for H, M, N in cases:
        for verify in (verify_theta_morphism, verify_theta_descent):
            rep = verify(H, M, N)
            assert rep.ok, (verify.__name__, _failures(rep))


def test_criterion_06_invariant_duality(c2, c2_pairs, h4, h4_pairs):
    for H, pairs, N in ((c2, c2_pairs, 4), (h4, h4_pairs, 3)):
        for p in pairs:
            rep = verify_invariant_duality(H, sayd_from_modular_pair(H, p), N)
            for name in ("phi-bar-psi-inverse", "phi-prime-psi-prime-inverse", "theta-bar-invertible",
                         "transported-face", "transported-degeneracy", "transported-cyclic", "cyclic-dims-agree"):
                assert rep.passed(name), (H.name, p.label(H), name, _failures(rep))
            assert rep.ok, _failures(rep)


def test_criterion_07_identifications_with_trivial_coefficients(c2, c2_pairs, h4, h4_pairs):
    for H, pairs, N in ((c2, c2_pairs, 4), (h4, h4_pairs, 3)):
        for p in pairs:
            rep = verify_identifications(H, p, N)
            for name in ("psi-prime-invertible", "kr-face", "kr-degeneracy", "kr-cyclic",
                         "cm-map-invertible", "cm-coface", "cm-codegeneracy", "cm-cyclic"):
                assert rep.passed(name), (H.name, p.label(H), name, _failures(rep))
            assert rep.ok


def test_criterion_08_pairing(c2):
    G = dual_hopf(c2)
    P = evaluation_pairing(c2)
    p = trivial_pair(c2)
    q = dual_pair(c2, G, P, p)
    M = one_dim_module(c2, p.delta, p.sigma, "LR")
    Nm = one_dim_module(G, q.delta, q.sigma, "RL")
    rep = verify_pairing(c2, G, M, Nm, P, Matrix.identity(QQ, 1), 3)
    assert rep.ok, _failures(rep)
    for name in ("morphism-coface", "morphism-codegeneracy", "morphism-cyclic"):
        assert rep.passed(name)
    assert rep.meta["invertible"] == {0: True, 1: True, 2: True, 3: True}


def test_criterion_09_homology_oracles(c2, c2_pairs, h4, h4_pairs):
    k = builtin_hopf("k")
    ground = algebra_cyclic(k, 4)
    assert cyclic_dims(ground).as_list() == [1, 0, 1, 0]
    assert connes_dims(ground).as_list() == [1, 0, 1, 0]
    assert hochschild_dims(algebra_cyclic(c2, 4)).as_list() == [2, 0, 0, 0]

    fixtures = [algebra_cyclic(c2, 4), coalgebra_cocyclic(c2, 4), algebra_cyclic(h4, 3), coalgebra_cocyclic(h4, 3)]
    for H, pairs, N in ((c2, c2_pairs, 4), (h4, h4_pairs, 3)):
        for p in pairs:
            M = sayd_from_modular_pair(H, p)
            fixtures += [kr_cyclic(H, p, N), connes_moscovici_cocyclic(H, p, N), invariant_cyclic(H, M, N),
                         coinvariant_cocyclic(H, M, N), invariant_k(H, M, N)]
    for X in fixtures:
        assert is_cyclic(X)
        assert cyclic_dims(X).dims == connes_dims(X).dims, X.name


@pytest.mark.parametrize("argv", [
    ["verify-hopf", "--hopf", "h4"],
    ["homology", "--kind", "cyclic", "--construction", "kr", "--hopf", "h4", "--pair", "auto", "--N", "3"],
    ["check-theorem31", "--hopf", "c2", "--pair", "trivial", "--N", "3"],
    ["check-identifications", "--hopf", "h4", "--N", "2", "--format", "text"],
])
def test_criterion_10_determinism(argv):
    cmd = [sys.executable, "-m", "hopfcyclic"] + argv
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0, first.stderr.decode()
    assert first.stdout and first.stdout == second.stdout
