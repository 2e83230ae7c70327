"""Binary (horizontal) refinement of a geometric type.

The refined partition has one rectangle per horizontal sub-rectangle
``H^i_j`` of the original, numbered by the lexicographic rank of ``(i, j)``.
Its incidence matrix is always binary.
"""

from __future__ import annotations

from .core import GeometricType, alpha, is_binary


def lex_index(T: GeometricType, label) -> int:
    """Lexicographic rank ``r(i, j) = sum(h_1 .. h_{i-1}) + j`` in ``1..alpha(T)``."""
    i, j = label
    return T._position(i, j) + 1


def binary_refinement(T: GeometricType) -> GeometricType:
    n_new = alpha(T)
    hv = [None] * n_new
    rho = [None] * n_new
    eps = [None] * n_new
    for i, j in T.horizontal_labels():
        r = lex_index(T, (i, j))
        k, l = T.rho_at(i, j)
        e = T.eps_at(i, j)
        hk = T.h(k)
        hv[r - 1] = (hk, T.v(i))
        if e == 1:
            targets = [(lex_index(T, (k, j0)), l) for j0 in range(1, hk + 1)]
        else:
            targets = [(lex_index(T, (k, hk - (j0 - 1))), l) for j0 in range(1, hk + 1)]
        rho[r - 1] = targets
        eps[r - 1] = [e] * hk
    return GeometricType(
        n_new,
        hv,
        [t for row in rho for t in row],
        [e for row in eps for e in row],
    )


def refine_if_needed(T: GeometricType) -> tuple[GeometricType, bool]:
    if is_binary(T.incidence):
        return T, False
    return binary_refinement(T), True

