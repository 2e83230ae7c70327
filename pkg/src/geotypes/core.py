"""Geometric types, their axioms, and incidence matrices.

A geometric type is the quadruple ``(n, {(h_i, v_i)}, rho, eps)``: ``n`` base
rectangles, rectangle ``i`` cut into ``h_i`` horizontal and ``v_i`` vertical
sub-rectangles, a bijection ``rho`` from horizontal labels ``(i, j)`` to
vertical labels ``(k, l)``, and an orientation sign ``eps`` on every
horizontal label.  All indices are 1-based.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import InvalidGeometricType, InvalidLabel, PreconditionError


class HLabel(NamedTuple):
    i: int
    j: int


class VLabel(NamedTuple):
    k: int
    l: int


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self):
        return {
            "ok": self.ok,
            "violations": [{"axiom": a, "detail": d} for a, d in self.violations],
        }


@dataclass(frozen=True)
class GeometricType:
    """An abstract geometric type.

    ``rho`` and ``eps`` are listed over the horizontal labels in
    lexicographic ``(i, j)`` order.  Use :meth:`from_maps` to build one from
    dictionaries keyed by horizontal label.  Construction validates the
    axioms and raises :class:`InvalidGeometricType` on failure.
    """

    n: int
    hv: tuple[tuple[int, int], ...]
    rho: tuple[VLabel, ...]
    eps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "hv", tuple((int(h), int(v)) for h, v in self.hv))
        object.__setattr__(self, "rho", tuple(VLabel(int(k), int(l)) for k, l in self.rho))
        object.__setattr__(self, "eps", tuple(int(e) for e in self.eps))
        report = validate(
            {"n": self.n, "hv": self.hv, "rho": self.rho, "eps": self.eps}
        )
        if not report.ok:
            raise InvalidGeometricType(report)

    @classmethod
    def from_maps(cls, n, hv, rho, eps):
        """Build a type from ``{(i, j): (k, l)}`` and ``{(i, j): +-1}`` maps."""
        labels = [(i, j) for i in range(1, n + 1) for j in range(1, hv[i - 1][0] + 1)]
        report = validate({"n": n, "hv": hv, "rho": rho, "eps": eps})
        if not report.ok:
            raise InvalidGeometricType(report)
        return cls(n, hv, [rho[lbl] for lbl in labels], [eps[lbl] for lbl in labels])

    def h(self, i: int) -> int:
        return self.hv[i - 1][0]

    def v(self, k: int) -> int:
        return self.hv[k - 1][1]

    @cached_property
    def _offsets(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate((h for h, _ in self.hv), initial=0))

    def horizontal_labels(self) -> list[HLabel]:
        return [HLabel(i, j) for i in range(1, self.n + 1) for j in range(1, self.h(i) + 1)]

    def vertical_labels(self) -> list[VLabel]:
        return [VLabel(k, l) for k in range(1, self.n + 1) for l in range(1, self.v(k) + 1)]

    def _position(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.h(i)):
            raise InvalidLabel(f"horizontal label ({i},{j}) out of range")
        return self._offsets[i - 1] + j - 1

    def rho_at(self, i: int, j: int) -> VLabel:
        return self.rho[self._position(i, j)]

    def eps_at(self, i: int, j: int) -> int:
        return self.eps[self._position(i, j)]

    @cached_property
    def _rho_inverse(self) -> dict[VLabel, HLabel]:
        return {self.rho_at(*lbl): lbl for lbl in self.horizontal_labels()}

    def rho_inv(self, k: int, l: int) -> HLabel:
        try:
            return self._rho_inverse[VLabel(k, l)]
        except KeyError:
            raise InvalidLabel(f"vertical label ({k},{l}) out of range") from None

    @cached_property
    def incidence(self) -> "IncidenceMatrix":
        return incidence_matrix(self)

    @cached_property
    def binary(self) -> bool:
        return is_binary(self.incidence)

    @cached_property
    def mixing(self) -> bool:
        return is_mixing(self.incidence)

    def require_binary(self):
        if not self.binary:
            raise PreconditionError(
                "incidence matrix is not binary; apply refine_if_needed first"
            )

    def require_binary_mixing(self):
        self.require_binary()
        if not self.mixing:
            raise PreconditionError("incidence matrix is not mixing")


def _as_pair(x):
    if isinstance(x, (str, bytes)) or len(x) != 2:
        raise TypeError
    return int(x[0]), int(x[1])


def validate(raw) -> ValidationReport:
    """Check the geometric type axioms on a candidate quadruple.

    ``raw`` is a :class:`GeometricType` or a mapping with keys ``n``, ``hv``,
    ``rho`` and ``eps`` (``epsilon`` is accepted too).  ``rho``/``eps`` may be
    sequences in lexicographic label order or mappings keyed by ``(i, j)``.
    Every violated axiom is reported; nothing is raised.
    """
    if isinstance(raw, GeometricType):
        raw = {"n": raw.n, "hv": raw.hv, "rho": raw.rho, "eps": raw.eps}
    out: list[tuple[str, str]] = []

    try:
        n = raw["n"]
        hv = [_as_pair(p) for p in raw["hv"]]
        rho = raw["rho"]
        eps = raw["eps"] if "eps" in raw else raw["epsilon"]
    except (KeyError, TypeError, ValueError) as exc:
        return ValidationReport((("shape", f"malformed quadruple: {exc!r}"),))
    if not isinstance(n, int) or isinstance(n, bool):
        return ValidationReport((("shape", f"n must be an integer, got {n!r}"),))

    if n < 1:
        out.append(("positivity", f"n={n} must be >= 1"))
    if len(hv) != n:
        out.append(("shape", f"hv has {len(hv)} pairs, expected n={n}"))
        return ValidationReport(tuple(out))
    for idx, (h, v) in enumerate(hv, 1):
        if h < 1 or v < 1:
            out.append(("positivity", f"(h_{idx}, v_{idx})=({h},{v}) must be positive"))
    if out:
        return ValidationReport(tuple(out))

    sh, sv = sum(h for h, _ in hv), sum(v for _, v in hv)
    if sh != sv:
        out.append(("balance", f"Σh={sh} ≠ Σv={sv}"))

    hlabels = [(i, j) for i in range(1, n + 1) for j in range(1, hv[i - 1][0] + 1)]
    vlabels = {(k, l) for k in range(1, n + 1) for l in range(1, hv[k - 1][1] + 1)}

    def as_map(obj, name, conv):
        if isinstance(obj, Mapping):
            result = {}
            for key, val in obj.items():
                try:
                    key = _as_pair(key)
                except (TypeError, ValueError):
                    out.append(("labels", f"{name} key {key!r} is not a label"))
                    continue
                if key not in set(hlabels):
                    out.append(("labels", f"{name} defined on non-label {key}"))
                    continue
                result[key] = conv(val)
            return result
        seq = list(obj)
        if len(seq) != len(hlabels):
            out.append(("labels", f"{name} lists {len(seq)} values for {len(hlabels)} horizontal labels"))
        return {lbl: conv(val) for lbl, val in zip(hlabels, seq)}

    try:
        rho_map = as_map(rho, "rho", _as_pair)
        eps_map = as_map(eps, "eps", int)
    except (TypeError, ValueError) as exc:
        out.append(("shape", f"malformed rho/eps entry: {exc!r}"))
        return ValidationReport(tuple(out))

    missing = [lbl for lbl in hlabels if lbl not in rho_map]
    if missing:
        out.append(("totality", f"rho undefined on {missing}"))
    bad_targets = sorted({t for t in rho_map.values() if t not in vlabels})
    if bad_targets:
        out.append(("labels", f"rho targets outside V(T): {bad_targets}"))
    targets = list(rho_map.values())
    if len(set(targets)) != len(targets):
        out.append(("bijectivity", "rho not injective"))
    elif not missing and not bad_targets and len(targets) != len(vlabels):
        out.append(("bijectivity", f"rho not surjective: |H|={len(targets)} ≠ |V|={len(vlabels)}"))

    missing = [lbl for lbl in hlabels if lbl not in eps_map]
    if missing:
        out.append(("totality", f"eps undefined on {missing}"))
    wrong = sorted({e for e in eps_map.values() if e not in (-1, 1)})
    if wrong:
        out.append(("eps-values", f"eps takes values {wrong} outside {{-1, +1}}"))

    return ValidationReport(tuple(out))


def alpha(T: GeometricType) -> int:
    """Number of sub-rectangles, ``sum(h_i) == sum(v_i)``."""
    return sum(h for h, _ in T.hv)


@dataclass(frozen=True)
class IncidenceMatrix:
    entries: tuple[tuple[int, ...], ...]
    n: int = field(init=False)

    def __post_init__(self):
        rows = tuple(tuple(int(a) for a in row) for row in self.entries)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("incidence matrix must be square")
        if any(a < 0 for row in rows for a in row):
            raise ValueError("incidence matrix must be nonnegative")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "n", len(rows))

    def __getitem__(self, ik):
        i, k = ik
        return self.entries[i - 1][k - 1]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.n, self.n)


def _coerce(A) -> IncidenceMatrix:
    return A if isinstance(A, IncidenceMatrix) else IncidenceMatrix(A)


def incidence_matrix(T: GeometricType) -> IncidenceMatrix:
    rows = [[0] * T.n for _ in range(T.n)]
    for (i, _), (k, _) in zip(T.horizontal_labels(), T.rho):
        rows[i - 1][k - 1] += 1
    return IncidenceMatrix(rows)


def is_binary(A) -> bool:
    return all(a in (0, 1) for row in _coerce(A).entries for a in row)


def _bool_power(M: np.ndarray, e: int) -> np.ndarray:
    result = np.eye(M.shape[0], dtype=bool)
    base = M.copy()
    while e:
        if e & 1:
            result = (result.astype(np.int64) @ base.astype(np.int64)) > 0
        base = (base.astype(np.int64) @ base.astype(np.int64)) > 0
        e >>= 1
    return result


def is_mixing(A) -> bool:
    """True iff some power of ``A`` is entrywise positive.

    A primitive matrix stays positive for all powers past its exponent, and
    the exponent never exceeds Wielandt's bound ``(n-1)**2 + 1``, so one
    boolean power at that bound decides the question.
    """
    A = _coerce(A)
    M = A.to_array() > 0
    return bool(_bool_power(M, (A.n - 1) ** 2 + 1).all())


def word_count(A, m: int) -> int:
    """Number of admissible words of length ``m`` for a binary matrix ``A``.

    Exact integer arithmetic: the sum of the entries of ``A**(m-1)``.
    """
    A = _coerce(A)
    if not is_binary(A):
        raise PreconditionError("word_count needs a binary matrix")
    if m < 1:
        raise ValueError(f"word length must be >= 1, got {m}")
    counts = [1] * A.n
    for _ in range(m - 1):
        counts = [sum(c for c, a in zip(counts, col) if a) for col in zip(*A.entries)]
    return sum(counts)


def admissible_words(A, m: int):
    """Yield the admissible words of length ``m`` in lexicographic order."""
    A = _coerce(A)
    if not is_binary(A):
        raise PreconditionError("admissible_words needs a binary matrix")
    succ = {i: [k for k in range(1, A.n + 1) if A[i, k]] for i in range(1, A.n + 1)}

    def extend(word):
        if len(word) == m:
            yield tuple(word)
            return
        for k in succ[word[-1]]:
            word.append(k)
            yield from extend(word)
            word.pop()

    for start in range(1, A.n + 1):
        yield from extend([start])


def realizability_warnings(T: GeometricType) -> list[str]:
    """Advisory checks that do not belong to the type axioms."""
    warnings = []
    if not is_mixing(incidence_matrix(T)):
        warnings.append("incidence matrix is not mixing; T is not in the pseudo-Anosov class")
    return warnings
