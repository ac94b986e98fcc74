"""Independent brute-force oracles shared by the test modules.

Everything here counts or searches by direct enumeration, with no code
under test in the loop.
"""
from __future__ import annotations

import itertools

# GF(4) as {0, 1, w, w+1} encoded 0..3; addition is xor.
_MUL4 = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))
_CONJ4 = (0, 1, 3, 2)


def sl2_count(q: int) -> int:
    """|SL(2, F_q)| by scanning all q^4 matrices, prime q only."""
    count = 0
    for a, b, c, d in itertools.product(range(q), repeat=4):
        if (a * d - b * c) % q == 1:
            count += 1
    return count


def sl3_count(q: int) -> int:
    """|SL(3, F_q)| by scanning all q^9 matrices, prime q only."""
    count = 0
    for entries in itertools.product(range(q), repeat=9):
        a, b, c, d, e, f, g, h, i = entries
        det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        if det % q == 1:
            count += 1
    return count


def su3_count_q2() -> int:
    """|SU(3, F_4)| by orthonormal-column enumeration over GF(4)."""
    vecs = list(itertools.product(range(4), repeat=3))

    def herm(u: tuple[int, ...], v: tuple[int, ...]) -> int:
        out = 0
        for x, y in zip(u, v):
            out ^= _MUL4[_CONJ4[x]][y]
        return out

    norm1 = [i for i, v in enumerate(vecs) if herm(v, v) == 1]
    pair = {(i, j): herm(vecs[i], vecs[j]) for i in norm1 for j in norm1}

    def det3(c1, c2, c3) -> int:
        (a, d, g), (b, e, h), (c, f, i) = c1, c2, c3
        m = _MUL4
        return (m[a][m[e][i] ^ m[f][h]] ^ m[b][m[d][i] ^ m[f][g]]
                ^ m[c][m[d][h] ^ m[e][g]])

    count = 0
    for i in norm1:
        for j in norm1:
            if pair[(i, j)] != 0:
                continue
            for k in norm1:
                if pair[(i, k)] != 0 or pair[(j, k)] != 0:
                    continue
                if det3(vecs[i], vecs[j], vecs[k]) == 1:
                    count += 1
    return count


def sp4_count_q2() -> int:
    """|Sp(4, F_2)| by scanning all 2^16 matrices against the form."""
    jmat = ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0))
    rows_all = list(itertools.product(range(2), repeat=4))
    count = 0
    for mat in itertools.product(rows_all, repeat=4):
        ok = True
        for i in range(4):
            for j in range(i, 4):
                v = 0
                for k in range(4):
                    for l in range(4):
                        v ^= mat[k][i] & jmat[k][l] & mat[l][j]
                if v != jmat[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def _mul2(a, b):
    return ((a[0][0] * b[0][0] + a[0][1] * b[1][0],
             a[0][0] * b[0][1] + a[0][1] * b[1][1]),
            (a[1][0] * b[0][0] + a[1][1] * b[1][0],
             a[1][0] * b[0][1] + a[1][1] * b[1][1]))


def sl2z_ball(depth: int) -> set:
    """All products of at most `depth` generators S, T and inverses."""
    gens = (((0, -1), (1, 0)), ((1, 1), (0, 1)),
            ((0, 1), (-1, 0)), ((1, -1), (0, 1)))
    identity = ((1, 0), (0, 1))
    seen = {identity}
    frontier = [identity]
    for _ in range(depth):
        nxt = []
        for m in frontier:
            for g in gens:
                w = _mul2(m, g)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def min_hyperbolic_trace_in_ball(ball: set, level: int) -> int | None:
    """Least |trace| > 2 among ball elements congruent to 1 mod level."""
    best = None
    for (a, b), (c, d) in ball:
        if (a - 1) % level or (d - 1) % level or b % level or c % level:
            continue
        t = abs(a + d)
        if t > 2 and (best is None or t < best):
            best = t
    return best
