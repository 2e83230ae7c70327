"""Fixtures and random generators shared by the test modules."""

import random
from functools import lru_cache

from geotypes.boundary import s_code_table, u_code_table
from geotypes.codes import BiCode
from geotypes.core import GeometricType
from geotypes.refinement import binary_refinement

T0 = GeometricType(1, [(2, 2)], [(1, 1), (1, 2)], [1, 1])
T1 = GeometricType(1, [(2, 2)], [(1, 2), (1, 1)], [1, -1])
B0 = GeometricType(2, [(2, 2), (2, 2)], [(1, 1), (2, 1), (1, 2), (2, 2)], [1, 1, 1, 1])
B1 = GeometricType(2, [(2, 2), (2, 2)], [(1, 2), (2, 2), (2, 1), (1, 1)], [1, 1, -1, -1])

CORPUS_SIZE = 520


def random_type(rng, max_n=6, max_hv=4):
    """A uniformly-ish random valid type with alpha > 1."""
    while True:
        n = rng.randint(1, max_n)
        h = [rng.randint(1, max_hv) for _ in range(n)]
        total = sum(h)
        if total < 2 or total > max_hv * n:
            continue
        v = [1] * n
        for _ in range(total - n):
            v[rng.choice([k for k in range(n) if v[k] < max_hv])] += 1
        vlabels = [(k + 1, l) for k in range(n) for l in range(1, v[k] + 1)]
        rng.shuffle(vlabels)
        eps = [rng.choice((-1, 1)) for _ in range(total)]
        return GeometricType(n, list(zip(h, v)), vlabels, eps)


@lru_cache(maxsize=None)
def corpus(size=CORPUS_SIZE, seed=20240601):
    rng = random.Random(seed)
    return tuple(random_type(rng) for _ in range(size))


@lru_cache(maxsize=None)
def binary_corpus():
    """Refinements of the corpus (binary by construction)."""
    return tuple(binary_refinement(T) for T in corpus())


def brute_word_count(A, m):
    n = len(A)
    count = 0

    def walk(last, length):
        nonlocal count
        if length == m:
            count += 1
            return
        for k in range(n):
            if A[last][k]:
                walk(k, length + 1)

    for start in range(n):
        walk(start, 1)
    return count


def brute_mixing(A):
    """Look for an entrywise positive power among A^1 .. A^(2 n^2)."""
    n = len(A)
    P = [row[:] for row in A]
    for _ in range(2 * n * n):
        if all(x > 0 for row in P for x in row):
            return True
        P = [[int(any(P[i][t] and A[t][k] for t in range(n))) for k in range(n)] for i in range(n)]
    return False


def _walk(rng, A, start, length):
    n = len(A)
    path = [start]
    for _ in range(length - 1):
        succ = [k for k in range(1, n + 1) if A[path[-1] - 1][k - 1]]
        path.append(rng.choice(succ))
    return path


def _first_cycle(path, begin=0):
    seen = {}
    for t in range(begin, len(path)):
        if path[t] in seen:
            return seen[path[t]], t
        seen[path[t]] = t
    return None


def random_code(rng, T):
    """A random eventually periodic admissible code for a binary mixing type."""
    A = T.incidence.tolist()
    n = T.n
    path = _walk(rng, A, rng.randint(1, n), 4 * n + 8)
    a, b = _first_cycle(path)
    c, d = _first_cycle(path, rng.randint(b, b + n))
    left = path[a:b]
    core = path[b:c]
    right = path[c:d]
    return BiCode(left, core, right, rng.randint(-len(core) - 3, 3))


def random_s_tail(rng, T):
    """A random code whose forward tail is an s-boundary code."""
    A = T.incidence
    w = random_code(rng, T)
    z = rng.randint(-3, 3)
    options = [c for c in s_code_table(T).values() if A[w[z], c[0]]]
    return BiCode.glue(w.shift(z).negative_part(), rng.choice(options), at=z)


def random_u_tail(rng, T):
    A = T.incidence
    w = random_code(rng, T)
    z = rng.randint(-3, 3)
    options = [c for c in u_code_table(T).values() if A[c[0], w[z + 1]]]
    return BiCode.glue(rng.choice(options), w.shift(z + 1).positive_part(), at=z)


def random_codes(rng, T, count):
    out = []
    for t in range(count):
        pick = t % 3
        if pick == 0:
            out.append(random_code(rng, T))
        elif pick == 1:
            out.append(random_s_tail(rng, T))
        else:
            out.append(random_u_tail(rng, T))
    return out
