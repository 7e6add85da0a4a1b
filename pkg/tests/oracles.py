"""Brute-force oracles written without the library, on plain ints mod p.

An algebra is a pair (S, P) of structure-constant tables: S[i][j] is the
coordinate list of e_i ≻ e_j, P[i][j] that of e_i ≺ e_j.
"""

from __future__ import annotations

from itertools import product


def mul(T, u, v, p):
    n = len(u)
    out = [0] * n
    for i in range(n):
        if u[i]:
            for j in range(n):
                if v[j]:
                    c = u[i] * v[j]
                    for k, t in enumerate(T[i][j]):
                        out[k] += c * t
    return [a % p for a in out]


def add(u, v, p):
    return [(a + b) % p for a, b in zip(u, v)]


def is_dendriform(S, P, p, triples=None) -> bool:
    n = len(S)
    e = [[int(i == k) for k in range(n)] for i in range(n)]
    for i, j, k in triples or product(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        xy = add(mul(S, x, y, p), mul(P, x, y, p), p)
        yz = add(mul(S, y, z, p), mul(P, y, z, p), p)
        if mul(S, xy, z, p) != mul(S, x, mul(S, y, z, p), p):
            return False
        if mul(P, mul(P, x, y, p), z, p) != mul(P, x, yz, p):
            return False
        if mul(P, mul(S, x, y, p), z, p) != mul(S, x, mul(P, y, z, p), p):
            return False
    return True


def freeze(S, P) -> tuple:
    return (tuple(tuple(tuple(v) for v in r) for r in S), tuple(tuple(tuple(v) for v in r) for r in P))


def one_dim_extensions(s: int, t: int, p: int) -> set:
    """All 2-dim dendriform algebras on (e, x) with e≻e = s e, e≺e = t e.

    Returned as frozen structure-constant pairs; e is basis vector 0.
    """
    R = range(p)
    one_x = [(i, j, k) for i, j, k in product(range(2), repeat=3) if (i, j, k).count(1) == 1]
    found = set()
    for es, xs, ep, xp in product(product(R, R), repeat=4):
        S = [[[s, 0], list(es)], [list(xs), [0, 0]]]
        P = [[[t, 0], list(ep)], [list(xp), [0, 0]]]
        # triples with exactly one x never reach x·x
        if not is_dendriform(S, P, p, one_x):
            continue
        for xxs, xxp in product(product(R, R), repeat=2):
            S[1][1], P[1][1] = list(xxs), list(xxp)
            if is_dendriform(S, P, p):
                found.add(freeze(S, P))
    return found


def bimodules(s: int, t: int, p: int) -> set:
    """(l1, l2, r1, r2) making e≻x = l1 x, e≺x = l2 x, x≻e = r1 x, x≺e = r2 x, x·x = 0 dendriform."""
    out = set()
    for l1, l2, r1, r2 in product(range(p), repeat=4):
        S = [[[s, 0], [0, l1]], [[0, r1], [0, 0]]]
        P = [[[t, 0], [0, l2]], [[0, r2], [0, 0]]]
        if is_dendriform(S, P, p):
            out.add((l1, l2, r1, r2))
    return out


def transport(A, g0: int, h0: int, p: int):
    """The algebra in the basis (e, g0 e + h0 x)."""
    S, P = A
    hinv = pow(h0, p - 2, p)
    basis = [[1, 0], [g0 % p, h0 % p]]

    def coords(v):  # v = a e + b x  ->  a' e + b' (g0 e + h0 x)
        b = v[1] * hinv % p
        return [(v[0] - b * g0) % p, b]

    def table(T):
        return [[coords(mul(T, basis[i], basis[j], p)) for j in range(2)] for i in range(2)]

    return freeze(table(S), table(P))


def orbits(algebras: set, p: int, cohomologous: bool = False) -> set:
    """Classes under base changes fixing e (h0 = 1 when cohomologous)."""
    parent = {a: a for a in algebras}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    hs = [1] if cohomologous else range(1, p)
    for a in algebras:
        for g0, h0 in product(range(p), hs):
            b = transport(a, g0, h0, p)
            assert b in parent, "base change left the solution set"
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups: dict = {}
    for a in algebras:
        groups.setdefault(find(a), set()).add(a)
    return {frozenset(g) for g in groups.values()}


def complement_index(A, p: int) -> tuple[list, int]:
    """Complements span(d e + x) of span(e) and their isomorphism classes.

    Returns the sorted list of valid d and the number of classes; a
    1-dim algebra v≻v = αv, v≺v = βv is determined by (α, β) up to scaling.
    """
    S, P = A
    ds, classes = [], set()
    for d in range(p):
        v = [d, 1]
        vs, vp = mul(S, v, v, p), mul(P, v, v, p)
        # closed iff each product is a multiple of v
        if vs[0] != d * vs[1] % p or vp[0] != d * vp[1] % p:
            continue
        ds.append(d)
        a, b = vs[1], vp[1]
        classes.add(frozenset(((a * c) % p, (b * c) % p) for c in range(1, p)))
    return ds, len(classes)


def algebra_tables(alg) -> tuple:
    """Structure constants of a library algebra as plain ints."""
    def conv(B):
        return tuple(tuple(tuple(int(a) for a in v) for v in row) for row in B.c)
    return conv(alg.succ), conv(alg.prec)
