"""Homology dimensions against values known independently of this code:
Morita invariance for semisimple algebras, the group-homology decomposition
of HH of a group algebra, and the cyclic homology of the ground field."""

import pytest

from hopfcyclic.constructions import (
    algebra_cyclic,
    alg_with_coefficients,
    coalgebra_cocyclic,
    coinvariant_cocyclic,
    connes_moscovici_cocyclic,
    invariant_cyclic,
    invariant_k,
    kr_cyclic,
)
from hopfcyclic.cyclic import constant_cyclic, is_cyclic
from hopfcyclic.errors import NotCyclic
from hopfcyclic.exactfield import GF, QQ
from hopfcyclic.homology import (
    bicomplex_checks,
    bprime_exactness,
    cohomology_variants,
    connes_dims,
    cyclic_dims,
    hochschild_dims,
    total_differentials,
)
from hopfcyclic.hopfcore import builtin_hopf, involution_pairs, sayd_from_modular_pair, trivial_pair


def test_cyclic_homology_of_the_ground_field_both_pipelines():
    X = algebra_cyclic(builtin_hopf("k"), 4)
    assert cyclic_dims(X).as_list() == [1, 0, 1, 0]
    assert connes_dims(X).as_list() == [1, 0, 1, 0]


def test_constant_module_is_the_ground_field():
    assert cyclic_dims(constant_cyclic(QQ, 4)).as_list() == [1, 0, 1, 0]
    assert hochschild_dims(constant_cyclic(QQ, 4)).as_list() == [1, 0, 0, 0]


@pytest.mark.parametrize("name,classes", [("c2", 2), ("c3", 3), ("s3", 3)])
def test_semisimple_group_algebras(name, classes):
    # Morita invariance: HH = k^classes in degree 0, HC = HH_0 (x) HC(k)
    X = algebra_cyclic(builtin_hopf(name), 3)
    assert hochschild_dims(X).as_list() == [classes, 0, 0]
    assert cyclic_dims(X).as_list() == [classes, 0, classes]


@pytest.mark.parametrize("name,p,classes", [("c2", 2, 2), ("c3", 3, 3)])
def test_modular_group_algebras(name, p, classes):
    # HH_n(k[C_p]) over F_p: one copy of H_n(C_p, F_p) = F_p per conjugacy class
    X = algebra_cyclic(builtin_hopf(name, GF(p)), 3)
    assert hochschild_dims(X).as_list() == [classes] * 3


def test_kr_of_a_group_algebra_is_group_homology():
    c2 = builtin_hopf("c2")
    X = kr_cyclic(c2, trivial_pair(c2), 4)
    assert hochschild_dims(X).as_list() == [1, 0, 0, 0]
    assert cyclic_dims(X).as_list() == [1, 0, 1, 0]
    F2 = builtin_hopf("c2", GF(2))
    assert hochschild_dims(kr_cyclic(F2, trivial_pair(F2), 4)).as_list() == [1, 1, 1, 1]


def test_cm_of_a_group_algebra():
    c2 = builtin_hopf("c2")
    X = connes_moscovici_cocyclic(c2, trivial_pair(c2), 4)
    rep = hochschild_dims(X)
    assert rep.direction == "cohomology"
    assert rep.as_list() == [1, 0, 0, 0]
    assert cyclic_dims(X).as_list() == [1, 0, 1, 0]


def test_cocyclic_ground_field():
    X = coalgebra_cocyclic(builtin_hopf("k"), 4)
    out = cohomology_variants(X)
    assert out["cyclic"].as_list() == [1, 0, 1, 0]
    assert out["hochschild"].as_list() == [1, 0, 0, 0]


def test_bprime_is_acyclic_for_unital_algebras():
    assert set(bprime_exactness(algebra_cyclic(builtin_hopf("h4"), 3)).values()) == {0}


def test_bicomplex_identities_hold(h4):
    assert bicomplex_checks(algebra_cyclic(h4, 3)).ok


def test_total_complex_squares_to_zero(c2):
    D = total_differentials(algebra_cyclic(c2, 4), 4)
    for n in range(2, 5):
        assert (D[n - 1] @ D[n]).is_zero()


def test_paracyclic_input_refused(h4, h4_pairs):
    p = next(p for p in h4_pairs if p.delta != h4.counit)
    X = alg_with_coefficients(h4, sayd_from_modular_pair(h4, p), 2)
    assert not is_cyclic(X)
    with pytest.raises(NotCyclic):
        cyclic_dims(X)
    with pytest.raises(NotCyclic):
        connes_dims(X)
    # Hochschild homology only needs the simplicial structure
    assert hochschild_dims(X).guaranteed == 1


def test_degrees_beyond_the_truncation_refused(c2):
    with pytest.raises(ValueError):
        hochschild_dims(algebra_cyclic(c2, 3), up_to=3)


def test_connes_pipeline_needs_large_characteristic():
    X = algebra_cyclic(builtin_hopf("k", GF(2)), 3)
    with pytest.raises(ValueError):
        connes_dims(X)
    assert connes_dims(algebra_cyclic(builtin_hopf("k", GF(5)), 3)).as_list() == [1, 0, 1]


def test_pipelines_agree_on_every_cyclic_fixture(c2, c2_pairs, h4, h4_pairs):
    fixtures = [algebra_cyclic(c2, 4), coalgebra_cocyclic(c2, 4), algebra_cyclic(h4, 3)]
    for H, pairs, N in ((c2, c2_pairs, 4), (h4, h4_pairs, 3)):
        for p in pairs:
            M = sayd_from_modular_pair(H, p)
            fixtures += [kr_cyclic(H, p, N), connes_moscovici_cocyclic(H, p, N),
                         invariant_cyclic(H, M, N), coinvariant_cocyclic(H, M, N), invariant_k(H, M, N)]
    for X in fixtures:
        assert cyclic_dims(X).dims == connes_dims(X).dims, X.name


def test_invariant_side_matches_kr(h4, h4_pairs):
    for p in h4_pairs:
        M = sayd_from_modular_pair(h4, p)
        assert cyclic_dims(invariant_cyclic(h4, M, 3)).dims == cyclic_dims(kr_cyclic(h4, p, 3)).dims


def test_report_serialises_with_exactness_flags(c2):
    d = hochschild_dims(algebra_cyclic(c2, 4), up_to=2).to_dict()
    assert [x["guaranteed"] for x in d["dims"]] == [True, True, True]
    assert d["N"] == 4 and d["field"] == "Q"


def test_table_rendering(c2):
    text = cyclic_dims(algebra_cyclic(c2, 3)).table()
    assert text.splitlines()[0].split() == ["degree", "HC_n", "exact"]


def test_h4_involution_pairs_are_used(h4):
    assert len(involution_pairs(h4)) == 2
