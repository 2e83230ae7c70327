"""Eventually periodic one-sided and bi-infinite symbol sequences.

Both types keep a canonical form (primitive periods, shortest transient or
core) so that two objects are equal exactly when they represent the same
sequence.  Symbols are positive integers.

Textual forms::

    one-sided:   TRANSIENT.(PERIOD)*        e.g.  1.(2)*   or   (1)*
    bi-infinite: (LEFT)* . CORE . (RIGHT)* @ ANCHOR

Words are written as digit runs when every symbol is below 10 and as
comma-separated integers otherwise, e.g. ``(1,12)*``.  ``ANCHOR`` is the
position of index 0 counted from the first core symbol (or the first
right-period symbol when the core is empty).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

POSITIVE = "positive"
NEGATIVE = "negative"


def primitive_root(word: tuple) -> tuple:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def rotate(word: tuple, m: int) -> tuple:
    """Rotate left by ``m``: ``rotate((1, 2, 3), 1) == (2, 3, 1)``."""
    if not word:
        return word
    m %= len(word)
    return word[m:] + word[:m]


def format_word(word) -> str:
    if all(s < 10 for s in word):
        return "".join(str(s) for s in word)
    return ",".join(str(s) for s in word)


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        if "," in text:
            word = tuple(int(t) for t in text.split(","))
        else:
            word = tuple(int(c) for c in text)
    except ValueError:
        raise ParseError(f"bad word {text!r}") from None
    if any(s < 1 for s in word):
        raise ParseError(f"symbols must be positive in {text!r}")
    return word


_PERIOD_RE = re.compile(r"^\(\s*([0-9,\s]+)\s*\)\*$")


def _parse_period(text: str) -> tuple[int, ...]:
    m = _PERIOD_RE.match(text.strip())
    if not m:
        raise ParseError(f"expected (WORD)* but got {text!r}")
    word = parse_word(m.group(1).replace(" ", ""))
    if not word:
        raise ParseError("empty period")
    return word


@dataclass(frozen=True, order=True)
class OneSidedCode:
    """``transient`` followed by ``period`` repeated forever.

    For a negative code the symbols are listed by distance from index 0, so
    ``transient[0]`` sits at index 0, ``transient[1]`` at index -1, and so on.
    """

    transient: tuple[int, ...]
    period: tuple[int, ...]
    direction: str = POSITIVE

    def __post_init__(self):
        t, p = tuple(self.transient), primitive_root(tuple(self.period))
        if not p:
            raise ValueError("period must be nonempty")
        if self.direction not in (POSITIVE, NEGATIVE):
            raise ValueError(f"unknown direction {self.direction!r}")
        while t and t[-1] == p[-1]:
            t, p = t[:-1], p[-1:] + p[:-1]
        object.__setattr__(self, "transient", t)
        object.__setattr__(self, "period", p)

    def __getitem__(self, m: int) -> int:
        if m < len(self.transient):
            return self.transient[m]
        return self.period[(m - len(self.transient)) % len(self.period)]

    def prefix(self, length: int) -> tuple[int, ...]:
        return tuple(self[m] for m in range(length))

    def drop(self, m: int = 1) -> "OneSidedCode":
        """The code with its first ``m`` symbols removed (one shift toward the tail)."""
        t = len(self.transient)
        if m <= t:
            return OneSidedCode(self.transient[m:], self.period, self.direction)
        return OneSidedCode((), rotate(self.period, m - t), self.direction)

    def prepend(self, *symbols: int) -> "OneSidedCode":
        return OneSidedCode(tuple(symbols) + self.transient, self.period, self.direction)

    @property
    def is_periodic(self) -> bool:
        return not self.transient

    def __str__(self):
        tail = f"({format_word(self.period)})*"
        if self.transient:
            return f"{format_word(self.transient)}.{tail}"
        return tail


def parse_onesided(text: str, direction: str = POSITIVE) -> OneSidedCode:
    text = text.strip()
    if text.startswith("("):
        return OneSidedCode((), _parse_period(text), direction)
    head, sep, tail = text.partition(".")
    if not sep:
        raise ParseError(f"expected TRANSIENT.(PERIOD)* but got {text!r}")
    return OneSidedCode(parse_word(head), _parse_period(tail), direction)


@dataclass(frozen=True)
class BiCode:
    """An eventually periodic bi-infinite sequence ``...LLL CORE RRR...``.

    ``anchor`` is the layout position of index 0, where layout position 0 is
    the first core symbol (first right symbol when the core is empty).  A
    purely periodic sequence is stored as ``left == right == w_0 ... w_{p-1}``
    with an empty core and anchor 0.
    """

    left: tuple[int, ...]
    core: tuple[int, ...]
    right: tuple[int, ...]
    anchor: int = 0

    def __post_init__(self):
        L = primitive_root(tuple(self.left))
        C = tuple(self.core)
        R = primitive_root(tuple(self.right))
        if not L or not R:
            raise ValueError("left and right periods must be nonempty")
        start = -int(self.anchor)  # index of layout position 0

        if len(L) == len(R) and _is_pure(L, C, R):
            P = tuple(_symbol_at(L, C, R, start, z) for z in range(len(R)))
            object.__setattr__(self, "left", P)
            object.__setattr__(self, "core", ())
            object.__setattr__(self, "right", P)
            object.__setattr__(self, "anchor", 0)
            return

        while C and C[-1] == R[-1]:
            C, R = C[:-1], R[-1:] + R[:-1]
        if not C:
            while L[-1] == R[-1]:
                L, R = L[-1:] + L[:-1], R[-1:] + R[:-1]
                start -= 1
        while C and C[0] == L[0]:
            C, L = C[1:], L[1:] + L[:1]
            start += 1
        object.__setattr__(self, "left", L)
        object.__setattr__(self, "core", C)
        object.__setattr__(self, "right", R)
        object.__setattr__(self, "anchor", -start)

    @classmethod
    def periodic(cls, word) -> "BiCode":
        """The purely periodic code with ``w_0 .. w_{p-1} == word``."""
        word = tuple(word)
        return cls(word, (), word, 0)

    @classmethod
    def glue(cls, negative: OneSidedCode, positive: OneSidedCode, at: int = 0) -> "BiCode":
        """Join a negative code read leftward from index ``at`` with a
        positive code read rightward from index ``at + 1``."""
        nt = negative.transient
        core = tuple(reversed(nt)) + positive.transient
        start = at - len(nt) + 1
        return cls(tuple(reversed(negative.period)), core, positive.period, -start)

    @property
    def start(self) -> int:
        return -self.anchor

    @property
    def is_periodic(self) -> bool:
        return not self.core and self.left == self.right

    def __getitem__(self, z: int) -> int:
        t = z - self.start
        if self.is_periodic:
            return self.right[t % len(self.right)]
        if 0 <= t < len(self.core):
            return self.core[t]
        if t >= len(self.core):
            return self.right[(t - len(self.core)) % len(self.right)]
        return self.left[t % len(self.left)]

    def window(self, lo: int, hi: int) -> tuple[int, ...]:
        """Symbols at indices ``lo .. hi-1``."""
        return tuple(self[z] for z in range(lo, hi))

    def shift(self, steps: int = 1) -> "BiCode":
        """``sigma**steps``: the result has ``w'_z == w_{z + steps}``."""
        if self.is_periodic:
            return BiCode.periodic(rotate(self.right, steps))
        return BiCode(self.left, self.core, self.right, self.anchor + steps)

    def reverse(self) -> "BiCode":
        """The sequence ``u_z = w_{-z}``."""
        if self.is_periodic:
            p = len(self.right)
            return BiCode.periodic(tuple(self[-t] for t in range(p)))
        new_start = 1 - self.start - len(self.core)
        return BiCode(
            tuple(reversed(self.right)),
            tuple(reversed(self.core)),
            tuple(reversed(self.left)),
            -new_start,
        )

    def positive_part(self) -> OneSidedCode:
        """``(w_0, w_1, ...)``."""
        if self.is_periodic:
            return OneSidedCode((), self.right)
        t0 = -self.start
        if t0 < 0:
            lead = tuple(self.left[t % len(self.left)] for t in range(t0, 0))
            return OneSidedCode(lead + self.core, self.right)
        if t0 < len(self.core):
            return OneSidedCode(self.core[t0:], self.right)
        return OneSidedCode((), rotate(self.right, t0 - len(self.core)))

    def negative_part(self) -> OneSidedCode:
        """``(w_0, w_{-1}, w_{-2}, ...)``."""
        pos = self.reverse().positive_part()
        return OneSidedCode(pos.transient, pos.period, NEGATIVE)

    @property
    def right_start(self) -> int:
        """Smallest index from which the sequence is periodic to the right."""
        return self.start + len(self.core)

    @property
    def left_end(self) -> int:
        """Largest index up to which the sequence is periodic to the left."""
        return self.start - 1

    def sort_key(self):
        return (len(self.right), self.right, len(self.left), self.left, len(self.core), self.core, self.anchor)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return (
            f"({format_word(self.left)})* . {format_word(self.core)} . "
            f"({format_word(self.right)})* @ {self.anchor}"
        )


def _is_pure(L, C, R) -> bool:
    p = len(R)
    word = L + C + R
    return all(word[t] == word[t + p] for t in range(len(word) - p))


def _symbol_at(L, C, R, start, z):
    layout = z - start
    if 0 <= layout < len(C):
        return C[layout]
    if layout >= len(C):
        return R[(layout - len(C)) % len(R)]
    return L[layout % len(L)]


def parse_bicode(text: str) -> BiCode:
    body, sep, anchor = text.partition("@")
    anchor = anchor.strip() if sep else "0"
    parts = body.split(".")
    if len(parts) != 3:
        raise ParseError(f"expected (L)* . CORE . (R)* @ ANCHOR but got {text!r}")
    try:
        a = int(anchor)
    except ValueError:
        raise ParseError(f"bad anchor {anchor!r}") from None
    return BiCode(_parse_period(parts[0]), parse_word(parts[1]), _parse_period(parts[2]), a)
