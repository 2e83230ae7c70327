"""The s-, u- and T-relations on eventually periodic codes.

Two codes are s-related when they describe the same point seen from the two
horizontal sub-rectangles sharing a stable side; u-related is the mirror
statement for unstable sides.  The T-relation is the closure of both.

The u-side is computed through the *dual* type (swap h and v, replace rho by
its inverse) acting on reversed codes: the dual's s-generating function is
the original u-generating function, and reversing a code exchanges positive
and negative parts, so every u-condition becomes the matching s-condition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .boundary import BoundaryLabel, S, gamma, s_boundary_code, s_labels_of
from .codes import BiCode
from .core import GeometricType
from .errors import DomainError, GeoTypeError, IndeterminateError, PreconditionError
from .refinement import binary_refinement
from .shift import classify, is_admissible, is_s_boundary_code, positive_boundary_codes

DEFAULT_CAP = 16


@lru_cache(maxsize=256)
def dual_type(T: GeometricType) -> GeometricType:
    """Type whose s-dynamics is the u-dynamics of ``T``."""
    vlabels = T.vertical_labels()
    back = [T.rho_inv(*vl) for vl in vlabels]
    return GeometricType(
        T.n,
        [(v, h) for h, v in T.hv],
        back,
        [T.eps_at(*hl) for hl in back],
    )


@dataclass(frozen=True)
class PartnerCertificate:
    """Witness data for ``w ~ v``, stated from ``w``'s side.

    For the s-relation ``k`` is the pivot index and ``j`` the horizontal
    position; for the u-relation ``k`` is the index ``z`` and ``j`` the
    vertical position ``l``.
    """

    k: int
    i: int
    j: int
    orientation_case: int
    signs: tuple[int, int]
    side: str = S

    def as_dict(self):
        return {
            "side": self.side,
            "k": self.k,
            "i": self.i,
            "j": self.j,
            "orientation_case": self.orientation_case,
            "signs": list(self.signs),
        }


def _require(T: GeometricType, w: BiCode):
    T.require_binary_mixing()
    if not is_admissible(T, w):
        raise PreconditionError(f"code {w} is not admissible")


# -- s-side primitives; the u-side calls them on (dual_type(T), w.reverse()) --

def _pivot(T: GeometricType, w: BiCode) -> int:
    if w.is_periodic:
        raise DomainError(f"{w} is periodic; the pivot is undefined")
    top = w.right_start
    if not is_s_boundary_code(T, w.shift(top)):
        raise DomainError(f"{w} is not an s-boundary leaf code")
    # the canonical transient of sigma^z(w)_+ has length top - z, and
    # boundary codes have transients shorter than 2n
    for z in range(top - 1, top - 2 * T.n - 2, -1):
        if not is_s_boundary_code(T, w.shift(z)):
            return z
    raise DomainError(f"no pivot found for {w}")


def _adjacent_options(T: GeometricType, i: int, nxt: int, delta: int):
    """Solve the option/sign system at rectangle ``i`` for the next symbol
    ``nxt`` with tail sign ``delta``.  Yields ``(j, case, next_v, delta_v)``."""
    if T.h(i) <= 1:
        return
    for j in range(1, T.h(i)):
        k_lo, k_hi = T.rho_at(i, j).k, T.rho_at(i, j + 1).k
        e_lo, e_hi = T.eps_at(i, j), T.eps_at(i, j + 1)
        if k_lo == nxt and delta == e_lo:
            yield j, 1, k_hi, -e_hi
        if k_hi == nxt and delta == -e_hi:
            yield j, 2, k_lo, e_lo


def _partner(T: GeometricType, w: BiCode, side: str):
    k = _pivot(T, w)
    i, nxt = w[k], w[k + 1]
    head = w.shift(k).negative_part()
    found = {}
    for lbl in s_labels_of(T, w.shift(k + 1).positive_part()):
        for j, case, nv, dv in _adjacent_options(T, i, nxt, lbl.sign):
            v = BiCode.glue(head, s_boundary_code(T, BoundaryLabel(nv, dv, S)), at=k)
            if v == w or v.is_periodic or is_s_boundary_code(T, v.shift(k)):
                continue
            found.setdefault(v, PartnerCertificate(k, i, j, case, (lbl.sign, dv), side))
    if len(found) > 1:
        raise GeoTypeError(f"partner of {w} is not unique: {sorted(found)}")
    return next(iter(found.items()), None)


def _certify(T: GeometricType, w: BiCode, v: BiCode, side: str):
    """Check conditions (i)-(v) of the relation directly on the pair."""
    k = _pivot(T, w)
    if _pivot(T, v) != k:
        return None
    i = w[k]
    if v[k] != i or T.h(i) <= 1:
        return None
    if w.shift(k).negative_part() != v.shift(k).negative_part():
        return None
    w_signs = [l.sign for l in s_labels_of(T, w.shift(k + 1).positive_part())]
    v_signs = [l.sign for l in s_labels_of(T, v.shift(k + 1).positive_part())]
    for j in range(1, T.h(i)):
        lo, hi = T.rho_at(i, j).k, T.rho_at(i, j + 1).k
        opt1 = lo == w[k + 1] and hi == v[k + 1]
        opt2 = lo == v[k + 1] and hi == w[k + 1]
        if opt1 == opt2:
            continue
        if opt1:
            dw, dv = T.eps_at(i, j), -T.eps_at(i, j + 1)
        else:
            dv, dw = T.eps_at(i, j), -T.eps_at(i, j + 1)
        if dw in w_signs and dv in v_signs:
            return PartnerCertificate(k, i, j, 1 if opt1 else 2, (dw, dv), side)
    return None


def _adjacent_pairs(T: GeometricType):
    """Boundary label pairs ``(a, b)`` sitting on the two sides of a shared
    stable segment between ``H^i_j`` and ``H^i_{j+1}``."""
    for i in range(1, T.n + 1):
        for j in range(1, T.h(i)):
            a = BoundaryLabel(T.rho_at(i, j).k, T.eps_at(i, j), S)
            b = BoundaryLabel(T.rho_at(i, j + 1).k, -T.eps_at(i, j + 1), S)
            yield i, a, b


@lru_cache(maxsize=256)
def _periodic_links(T: GeometricType) -> frozenset[tuple[BiCode, BiCode]]:
    """All pairs of distinct periodic codes joined by an adjacent-pair witness."""
    links = set()
    for i, a, b in _adjacent_pairs(T):
        # the witnesses' pivot words i.I+(a), i.I+(b) must leave the boundary
        if any(s_boundary_code(T, x).prepend(i) in positive_boundary_codes(T) for x in (a, b)):
            continue
        for _ in range(4 * T.n):
            ca, cb = s_boundary_code(T, a), s_boundary_code(T, b)
            if ca.is_periodic and cb.is_periodic and ca != cb:
                alpha, beta = BiCode.periodic(ca.period), BiCode.periodic(cb.period)
                links.add((alpha, beta))
                links.add((beta, alpha))
            a, b = gamma(T, a), gamma(T, b)
    return frozenset(links)


def _periodic_neighbours(T: GeometricType, alpha: BiCode) -> list[BiCode]:
    return sorted(beta for a, beta in _periodic_links(T) if a == alpha)


def _relation_side(T: GeometricType, side: str):
    return (T, lambda w: w) if side == S else (dual_type(T), BiCode.reverse)


def _in_stratum(T, w, side):
    flags = classify(T, w)
    return flags.in_S if side == S else flags.in_U


# -- public API --------------------------------------------------------------

def pivot_k(T: GeometricType, w: BiCode) -> int:
    """The index ``k`` with ``sigma^k(w)`` off the s-boundary codes and
    ``sigma^(k+1)(w)`` on them."""
    _require(T, w)
    return _pivot(T, w)


def pivot_z(T: GeometricType, w: BiCode) -> int:
    """The index ``z`` with ``sigma^z(w)`` off the u-boundary codes and
    ``sigma^(z-1)(w)`` on them."""
    _require(T, w)
    return -_pivot(dual_type(T), w.reverse())


def s_partner(T: GeometricType, w: BiCode):
    """The unique ``v != w`` with ``w ~s v`` and its certificate, or ``None``."""
    _require(T, w)
    return _partner(T, w, S)


def u_partner(T: GeometricType, w: BiCode):
    _require(T, w)
    hit = _partner(dual_type(T), w.reverse(), "u")
    if hit is None:
        return None
    v, cert = hit
    return v.reverse(), PartnerCertificate(
        -cert.k, cert.i, cert.j, cert.orientation_case, cert.signs, "u"
    )


def _sim(T: GeometricType, w: BiCode, v: BiCode, side: str) -> bool:
    _require(T, w)
    _require(T, v)
    for x in (w, v):
        if not _in_stratum(T, x, side):
            raise PreconditionError(f"{x} is not a {side}-boundary leaf code")
    if w == v:
        return True
    if w.is_periodic != v.is_periodic:
        return False
    U, tr = _relation_side(T, side)
    if w.is_periodic:
        return (tr(w), tr(v)) in _periodic_links(U)
    return _certify(U, tr(w), tr(v), side) is not None


def sim_s(T: GeometricType, w: BiCode, v: BiCode) -> bool:
    return _sim(T, w, v, S)


def sim_u(T: GeometricType, w: BiCode, v: BiCode) -> bool:
    return _sim(T, w, v, "u")


def neighbours(T: GeometricType, w: BiCode, side: str) -> list[BiCode]:
    """Codes related to ``w`` by one ``~s`` (side ``"s"``) or ``~u`` step."""
    if not _in_stratum(T, w, side):
        return []
    U, tr = _relation_side(T, side)
    if w.is_periodic:
        return [tr(b) for b in _periodic_neighbours(U, tr(w))]
    hit = _partner(U, tr(w), side)
    return [] if hit is None else [tr(hit[0])]


@dataclass(frozen=True)
class ClassReport:
    members: tuple[BiCode, ...]
    chain: tuple[tuple[BiCode, str, BiCode], ...] = ()
    truncated: bool = False
    member_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "member_set", frozenset(self.members))

    def __contains__(self, w):
        return w in self.member_set

    def as_dict(self):
        return {
            "members": [str(m) for m in self.members],
            "chain": [[str(a), rel, str(b)] for a, rel, b in self.chain],
            "truncated": self.truncated,
        }


def class_of(T: GeometricType, w: BiCode, cap: int = DEFAULT_CAP) -> ClassReport:
    """Breadth-first closure of ``w`` under the s- and u-relations.

    Totally interior codes form singleton classes.  If the closure would
    exceed ``cap`` members the report comes back with ``truncated=True``.
    """
    _require(T, w)
    if classify(T, w).interior:
        return ClassReport((w,))
    seen = {w}
    order = [w]
    chain = []
    queue = deque([w])
    truncated = False
    while queue and not truncated:
        x = queue.popleft()
        for side in (S, "u"):
            for y in neighbours(T, x, side):
                if y in seen:
                    continue
                if len(seen) >= cap:
                    truncated = True
                    break
                seen.add(y)
                order.append(y)
                chain.append((x, side, y))
                queue.append(y)
            if truncated:
                break
    return ClassReport(tuple(order), tuple(chain), truncated)


def sim_T(T: GeometricType, w: BiCode, v: BiCode, cap: int = DEFAULT_CAP) -> bool:
    _require(T, v)
    report = class_of(T, w, cap)
    if v in report:
        return True
    if report.truncated:
        raise IndeterminateError(f"class of {w} exceeds cap={cap}; cannot decide")
    return False


SAME = "same-invariant"
DISTINCT = "invariant-distinct"


@dataclass(frozen=True)
class CompareReport:
    structurally_equal: bool
    refined: tuple[GeometricType, GeometricType]
    refined_equal: bool

    @property
    def verdict(self) -> str:
        return SAME if self.refined_equal else DISTINCT


def compare_types(T1: GeometricType, T2: GeometricType) -> CompareReport:
    """Compare the binary refinements of two types.

    Equal refinements mean any two realizations are conjugate.  Unequal ones
    say nothing about non-conjugacy.
    """
    B1, B2 = binary_refinement(T1), binary_refinement(T2)
    return CompareReport(T1 == T2, (B1, B2), B1 == B2)
