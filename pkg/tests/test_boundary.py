import pytest

from geotypes.boundary import (
    BoundaryLabel,
    S,
    U,
    check_injectivity,
    eta,
    gamma,
    orbit,
    parse_label,
    s_boundary_code,
    s_code_table,
    s_labels,
    step,
    theta,
    u_boundary_code,
    u_code_table,
    u_labels,
    upsilon,
)
from geotypes.codes import NEGATIVE, OneSidedCode
from geotypes.core import GeometricType
from geotypes.errors import FlavorError, InvalidLabel

from corpus import B0, T0, binary_corpus


def s(i, d):
    return BoundaryLabel(i, d, S)


def u(k, d):
    return BoundaryLabel(k, d, U)


def test_parse_label():
    assert parse_label("s:+1") == s(1, 1)
    assert parse_label("u:-2") == u(2, -1)
    assert str(u(2, -1)) == "u:-2"
    for bad in ("s1", "x:+1", "s:1", "s:+a"):
        with pytest.raises(InvalidLabel):
            parse_label(bad)


def test_theta_eta():
    assert theta(T0, s(1, -1)) == (1, 1)
    assert theta(T0, s(1, 1)) == (1, 2)
    assert eta(T0, u(1, -1)) == (1, 1)
    assert eta(T0, u(1, 1)) == (1, 2)
    thin = GeometricType(2, [(1, 2), (2, 1)], [(1, 1), (1, 2), (2, 1)], [1, 1, 1])
    assert theta(thin, s(1, 1)) == theta(thin, s(1, -1)) == (1, 1)
    assert eta(thin, u(2, 1)) == eta(thin, u(2, -1)) == (2, 1)


def test_flavor_and_range_errors():
    with pytest.raises(FlavorError):
        theta(T0, u(1, 1))
    with pytest.raises(FlavorError):
        eta(T0, s(1, 1))
    with pytest.raises(InvalidLabel):
        gamma(T0, s(2, 1))


def test_gamma_on_b0():
    assert gamma(B0, s(1, 1)) == s(2, 1)
    assert gamma(B0, s(2, 1)) == s(2, 1)
    assert gamma(B0, s(1, -1)) == s(1, -1)


def test_upsilon_on_b0():
    assert upsilon(B0, u(1, -1)) == u(1, -1)
    assert upsilon(B0, u(2, 1)) == u(2, 1)
    assert upsilon(B0, u(1, 1)) == u(2, 1)


def test_orbit_on_b0():
    orb = orbit(B0, s(1, 1))
    assert orb.transient == (s(1, 1),)
    assert orb.cycle == (s(2, 1),)
    orb = orbit(B0, s(1, -1))
    assert orb.transient == ()
    assert orb.cycle == (s(1, -1),)


def test_boundary_codes_on_b0():
    assert s_boundary_code(B0, s(1, 1)) == OneSidedCode((1,), (2,))
    assert s_boundary_code(B0, s(1, -1)) == OneSidedCode((), (1,))
    assert s_boundary_code(B0, s(2, 1)) == OneSidedCode((), (2,))
    assert u_boundary_code(B0, u(1, -1)) == OneSidedCode((), (1,), NEGATIVE)
    assert u_boundary_code(B0, u(2, 1)) == OneSidedCode((), (2,), NEGATIVE)
    assert u_boundary_code(B0, u(1, 1)) == OneSidedCode((1,), (2,), NEGATIVE)


def test_injectivity_examples():
    assert check_injectivity(B0)
    assert not check_injectivity(T0)
    assert not check_injectivity(GeometricType(1, [(1, 1)], [(1, 1)], [1]))


def test_orbit_structure_on_corpus():
    for T in binary_corpus()[:300]:
        for lbl in s_labels(T) + u_labels(T):
            orb = orbit(T, lbl)
            assert len(orb.transient) + len(orb.cycle) <= 2 * T.n
            assert not set(orb.transient) & set(orb.cycle)
            if orb.transient:
                assert step(T, orb.transient[-1]) == orb.cycle[0]
            assert step(T, orb.cycle[-1]) == orb.cycle[0]


def test_codes_match_orbit_walk():
    # brute force: iterate the generating function and read indices
    for T in binary_corpus()[:200]:
        for lbl in s_labels(T):
            x, symbols = lbl, []
            for _ in range(6 * T.n):
                symbols.append(x.idx)
                x = gamma(T, x)
            assert s_code_table(T)[lbl].prefix(len(symbols)) == tuple(symbols)
        for lbl in u_labels(T):
            x, symbols = lbl, []
            for _ in range(6 * T.n):
                symbols.append(x.idx)
                x = upsilon(T, x)
            assert u_code_table(T)[lbl].prefix(len(symbols)) == tuple(symbols)


def test_codes_are_admissible():
    for T in binary_corpus()[:200]:
        A = T.incidence
        for code in s_code_table(T).values():
            p = code.prefix(4 * T.n)
            assert all(A[a, b] for a, b in zip(p, p[1:]))
        for code in u_code_table(T).values():
            p = code.prefix(4 * T.n)
            assert all(A[b, a] for a, b in zip(p, p[1:]))


def test_every_s_orbit_meets_a_thick_rectangle():
    for T in binary_corpus():
        if not T.mixing or T.n < 2:
            continue
        for lbl in s_labels(T):
            orb = orbit(T, lbl)
            assert any(T.h(x.idx) > 1 for x in orb.cycle)
