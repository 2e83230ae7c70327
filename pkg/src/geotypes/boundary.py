"""Boundary labels and the s/u generating functions.

An s-label ``(i, -1)`` / ``(i, +1)`` names the lower / upper stable side of
rectangle ``i``; a u-label ``(k, -1)`` / ``(k, +1)`` names the left / right
unstable side.  ``gamma`` follows a stable side forward, ``upsilon`` follows
an unstable side backward.  Reading off rectangle indices along those orbits
gives the positive s-boundary codes and the negative u-boundary codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .codes import NEGATIVE, POSITIVE, OneSidedCode
from .core import GeometricType, HLabel, VLabel
from .errors import FlavorError, InvalidLabel

S, U = "s", "u"


class BoundaryLabel(NamedTuple):
    idx: int
    sign: int
    flavor: str = S

    def __str__(self):
        return f"{self.flavor}:{'+' if self.sign > 0 else '-'}{self.idx}"


def parse_label(text: str) -> BoundaryLabel:
    """Parse ``s:+i``, ``s:-i``, ``u:+k`` or ``u:-k``."""
    flavor, sep, rest = text.strip().partition(":")
    if not sep or flavor not in (S, U) or not rest or rest[0] not in "+-":
        raise InvalidLabel(f"bad boundary label {text!r}; expected e.g. s:+1 or u:-2")
    try:
        idx = int(rest[1:])
    except ValueError:
        raise InvalidLabel(f"bad boundary label {text!r}") from None
    return BoundaryLabel(idx, 1 if rest[0] == "+" else -1, flavor)


def _check(T: GeometricType, lbl: BoundaryLabel, flavor: str):
    if lbl.flavor != flavor:
        raise FlavorError(f"expected a {flavor}-label, got {lbl}")
    if not 1 <= lbl.idx <= T.n or lbl.sign not in (-1, 1):
        raise InvalidLabel(f"label {lbl} out of range for n={T.n}")


def s_labels(T: GeometricType) -> list[BoundaryLabel]:
    return [BoundaryLabel(i, d, S) for i in range(1, T.n + 1) for d in (-1, 1)]


def u_labels(T: GeometricType) -> list[BoundaryLabel]:
    return [BoundaryLabel(k, d, U) for k in range(1, T.n + 1) for d in (-1, 1)]


def theta(T: GeometricType, lbl: BoundaryLabel) -> HLabel:
    _check(T, lbl, S)
    return HLabel(lbl.idx, 1 if lbl.sign < 0 else T.h(lbl.idx))


def eta(T: GeometricType, lbl: BoundaryLabel) -> VLabel:
    _check(T, lbl, U)
    return VLabel(lbl.idx, 1 if lbl.sign < 0 else T.v(lbl.idx))


def gamma(T: GeometricType, lbl: BoundaryLabel) -> BoundaryLabel:
    hl = theta(T, lbl)
    return BoundaryLabel(T.rho_at(*hl).k, lbl.sign * T.eps_at(*hl), S)


def upsilon(T: GeometricType, lbl: BoundaryLabel) -> BoundaryLabel:
    # rho^{-1} is applied to the full vertical label (k, eta(k, d)).
    hl = T.rho_inv(*eta(T, lbl))
    return BoundaryLabel(hl.i, lbl.sign * T.eps_at(*hl), U)


def step(T: GeometricType, lbl: BoundaryLabel) -> BoundaryLabel:
    return gamma(T, lbl) if lbl.flavor == S else upsilon(T, lbl)


@dataclass(frozen=True)
class OrbitDecomposition:
    transient: tuple[BoundaryLabel, ...]
    cycle: tuple[BoundaryLabel, ...]

    def as_dict(self):
        return {
            "transient": [str(x) for x in self.transient],
            "cycle": [str(x) for x in self.cycle],
        }


def orbit(T: GeometricType, lbl: BoundaryLabel) -> OrbitDecomposition:
    _check(T, lbl, lbl.flavor)
    seen: dict[BoundaryLabel, int] = {}
    path: list[BoundaryLabel] = []
    x = lbl
    while x not in seen:
        seen[x] = len(path)
        path.append(x)
        x = step(T, x)
    mu = seen[x]
    return OrbitDecomposition(tuple(path[:mu]), tuple(path[mu:]))


def _code(T: GeometricType, lbl: BoundaryLabel, direction: str) -> OneSidedCode:
    orb = orbit(T, lbl)
    return OneSidedCode(
        tuple(x.idx for x in orb.transient),
        tuple(x.idx for x in orb.cycle),
        direction,
    )


def s_boundary_code(T: GeometricType, lbl: BoundaryLabel) -> OneSidedCode:
    """The positive code ``I+(i, d)``: rectangle indices along the gamma-orbit."""
    _check(T, lbl, S)
    return _code(T, lbl, POSITIVE)


def u_boundary_code(T: GeometricType, lbl: BoundaryLabel) -> OneSidedCode:
    """The negative code ``J-(k, d)``, listed from index 0 leftward."""
    _check(T, lbl, U)
    return _code(T, lbl, NEGATIVE)


@lru_cache(maxsize=512)
def s_code_table(T: GeometricType) -> dict[BoundaryLabel, OneSidedCode]:
    return {lbl: s_boundary_code(T, lbl) for lbl in s_labels(T)}


@lru_cache(maxsize=512)
def u_code_table(T: GeometricType) -> dict[BoundaryLabel, OneSidedCode]:
    return {lbl: u_boundary_code(T, lbl) for lbl in u_labels(T)}


def s_labels_of(T: GeometricType, code: OneSidedCode) -> list[BoundaryLabel]:
    """Every s-label whose positive code equals ``code``."""
    code = OneSidedCode(code.transient, code.period, POSITIVE)
    return [lbl for lbl, c in s_code_table(T).items() if c == code]


def u_labels_of(T: GeometricType, code: OneSidedCode) -> list[BoundaryLabel]:
    code = OneSidedCode(code.transient, code.period, NEGATIVE)
    return [lbl for lbl, c in u_code_table(T).items() if c == code]


def check_injectivity(T: GeometricType) -> bool:
    s_codes = list(s_code_table(T).values())
    u_codes = list(u_code_table(T).values())
    return len(set(s_codes)) == len(s_codes) and len(set(u_codes)) == len(u_codes)
