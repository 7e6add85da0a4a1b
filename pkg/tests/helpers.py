"""Random valid objects for property and round-trip tests."""

from __future__ import annotations

import random
from functools import lru_cache

from dendrikit.dendriform import DendriformAlgebra, direct_sum, ex_b, ex_d, transport
from dendrikit.extension import Extension
from dendrikit.field import gf
from dendrikit.flag import enumerate_flags, flag_to_extension
from dendrikit.linalg import LinMap

# one line per acceptance criterion, printed in the terminal summary
VERDICTS: list[str] = []


def one_dim_algebras(F) -> list:
    return [ex_d(F), ex_b(F), DendriformAlgebra.zero(F, 1)]


@lru_cache(maxsize=None)
def flag_pool(p: int) -> tuple:
    """Every valid flag datum over the 1-dim algebras, GF(p)."""
    F = gf(p)
    return tuple(fd for D in one_dim_algebras(F) for fd in enumerate_flags(D))


def random_nonzero(rng: random.Random, F):
    return rng.choice([a for a in F.elements() if a != F.zero])


def random_invertible(rng: random.Random, F, n: int) -> LinMap:
    while True:
        M = LinMap.from_rows(F, [[rng.choice(F.elements()) for _ in range(n)] for _ in range(n)], n)
        if M.is_invertible():
            return M


def random_triangular(rng: random.Random, F, n: int, m: int) -> LinMap:
    """An invertible change of basis keeping span(e_1..e_n) in place."""
    top = random_invertible(rng, F, n)
    bottom = random_invertible(rng, F, m)
    rows = []
    for i in range(n):
        rows.append(list(top.m[i]) + [rng.choice(F.elements()) for _ in range(m)])
    for i in range(m):
        rows.append([F.zero] * n + list(bottom.m[i]))
    return LinMap.from_rows(F, rows, n + m)


def random_extension(rng: random.Random, p: int, subdim: int) -> Extension:
    """A random extension of a ``subdim``-dim algebra by a 1-dim space over GF(p).

    Built from a random flag extension (plus a 1-dim summand joined to
    D when subdim is 2), a random basis change fixing D, and a random
    retraction.
    """
    F = gf(p)
    E = flag_to_extension(rng.choice(flag_pool(p))).total
    if subdim == 2:
        C = rng.choice(one_dim_algebras(F))
        E = direct_sum(E, C)
        # reorder (e, x, c) -> (e, c, x) so that D = span(e, c)
        perm = LinMap.from_columns(F, [(1, 0, 0), (0, 0, 1), (0, 1, 0)], 3)
        E = transport(E, perm)
    elif subdim != 1:
        raise ValueError("subdim must be 1 or 2")
    E = transport(E, random_triangular(rng, F, subdim, 1))
    rho = LinMap.from_rows(F, [[int(i == j) for j in range(subdim)] + [rng.choice(F.elements())]
                               for i in range(subdim)], subdim + 1)
    return Extension(E, subdim, rho)
