import pytest

from geotypes.core import GeometricType, alpha, incidence_matrix, is_binary, validate
from geotypes.errors import InvalidLabel
from geotypes.refinement import binary_refinement, lex_index, refine_if_needed

from corpus import B0, B1, T0, T1, corpus


def test_lex_index_examples():
    assert lex_index(T0, (1, 1)) == 1
    assert lex_index(T0, (1, 2)) == 2
    T = GeometricType(2, [(2, 3), (3, 2)], [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)], [1] * 5)
    assert lex_index(T, (2, 1)) == 3
    assert lex_index(T, (1, 1)) == 1


def test_lex_index_bad_label():
    with pytest.raises(InvalidLabel):
        lex_index(T0, (2, 1))


def test_lex_index_is_monotone_bijection():
    for T in corpus()[:100]:
        ranks = [lex_index(T, lbl) for lbl in T.horizontal_labels()]
        assert ranks == list(range(1, alpha(T) + 1))


def test_refinement_of_t0():
    assert binary_refinement(T0) == B0
    assert B0.rho_at(1, 2) == (2, 1)
    assert B0.rho_at(2, 1) == (1, 2)


def test_refinement_of_t1():
    B = binary_refinement(T1)
    assert B == B1
    assert [B.rho_at(*lbl) for lbl in B.horizontal_labels()] == [(1, 2), (2, 2), (2, 1), (1, 1)]
    assert [B.eps_at(*lbl) for lbl in B.horizontal_labels()] == [1, 1, -1, -1]


def test_refine_if_needed():
    trivial = GeometricType(1, [(1, 1)], [(1, 1)], [1])
    assert refine_if_needed(trivial) == (trivial, False)
    assert refine_if_needed(T0) == (B0, True)
    assert refine_if_needed(B0) == (B0, False)


def test_refinement_on_corpus():
    for T in corpus():
        B = binary_refinement(T)
        assert validate(B).ok
        assert is_binary(incidence_matrix(B))
        assert alpha(B) == sum(h for h, _ in B.hv) == sum(v for _, v in B.hv)
        assert binary_refinement(T) == B


def test_refined_incidence_oracle():
    # entry (r(i,j), r(k,j')) is 1 exactly when rho(i,j) lands in rectangle k
    for T in corpus()[:200]:
        A = binary_refinement(T).incidence
        for i, j in T.horizontal_labels():
            k = T.rho_at(i, j).k
            for k2, j2 in T.horizontal_labels():
                assert A[lex_index(T, (i, j)), lex_index(T, (k2, j2))] == int(k2 == k)


def test_refined_row_column_counts():
    for T in corpus()[:200]:
        B = binary_refinement(T)
        for i, j in T.horizontal_labels():
            r = lex_index(T, (i, j))
            assert B.h(r) == T.h(T.rho_at(i, j).k)
            assert B.v(r) == T.v(i)
