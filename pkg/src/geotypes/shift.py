"""Eventually periodic points of the subshift of a binary geometric type."""

from __future__ import annotations

from dataclasses import dataclass

from .boundary import s_code_table, u_code_table
from .codes import BiCode, OneSidedCode, primitive_root
from .core import GeometricType, admissible_words
from .errors import BudgetExceeded

DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class ClassificationFlags:
    in_S: bool
    in_U: bool

    @property
    def interior(self) -> bool:
        return not (self.in_S or self.in_U)

    def as_dict(self):
        return {"in_S": self.in_S, "in_U": self.in_U, "interior": self.interior}


def _pairs(w: BiCode):
    L, C, R = w.left, w.core, w.right
    if w.is_periodic:
        yield from zip(R, R[1:] + R[:1])
        return
    yield from zip(L, L[1:] + L[:1])
    yield from zip(R, R[1:] + R[:1])
    middle = (L[-1],) + C + (R[0],)
    yield from zip(middle, middle[1:])


def is_admissible(T: GeometricType, w: BiCode) -> bool:
    T.require_binary()
    A = T.incidence
    symbols = set(w.left) | set(w.core) | set(w.right)
    if not all(1 <= s <= T.n for s in symbols):
        return False
    return all(A[a, b] == 1 for a, b in _pairs(w))


def shift(w: BiCode, steps: int = 1) -> BiCode:
    return w.shift(steps)


def positive_part(w: BiCode) -> OneSidedCode:
    return w.positive_part()


def negative_part(w: BiCode) -> OneSidedCode:
    return w.negative_part()


def positive_boundary_codes(T: GeometricType) -> frozenset[OneSidedCode]:
    return frozenset(s_code_table(T).values())


def negative_boundary_codes(T: GeometricType) -> frozenset[OneSidedCode]:
    return frozenset(u_code_table(T).values())


def is_s_boundary_code(T: GeometricType, w: BiCode) -> bool:
    """``w_+`` is one of the positive s-boundary codes."""
    return w.positive_part() in positive_boundary_codes(T)


def is_u_boundary_code(T: GeometricType, w: BiCode) -> bool:
    """``w_-`` is one of the negative u-boundary codes."""
    return w.negative_part() in negative_boundary_codes(T)


def classify(T: GeometricType, w: BiCode) -> ClassificationFlags:
    """Decide membership of ``w`` in the s- and u-boundary leaf code sets.

    The set of forward shifts landing on s-boundary codes is closed upward,
    so one test deep inside the right periodic tail decides it; the u side
    is the mirror image on the left tail.
    """
    T.require_binary()
    in_S = is_s_boundary_code(T, w.shift(max(0, w.right_start)))
    in_U = is_u_boundary_code(T, w.shift(min(0, w.left_end)))
    return ClassificationFlags(in_S, in_U)


def enumerate_periodic(T: GeometricType, p: int, budget: int = DEFAULT_BUDGET) -> list[BiCode]:
    """All purely periodic admissible codes with primitive period length <= p.

    Different anchorings of the same cycle are different codes.
    """
    T.require_binary()
    if p < 1:
        return []
    cost = p * T.n ** p
    if cost > budget:
        raise BudgetExceeded(f"p*n^p = {cost} exceeds budget {budget}")
    A = T.incidence
    out = []
    for d in range(1, p + 1):
        for word in admissible_words(A, d):
            if A[word[-1], word[0]] and primitive_root(word) == word:
                out.append(BiCode.periodic(word))
    return sorted(out)

