"""Exact integer linear algebra: sparse rank, small determinants, GF(2) rank.

Everything here works over Python ints, so there is no overflow and no
floating point anywhere.  The rank routine is fraction-free Gaussian
elimination on rows stored as {column: value} dicts; boundary matrices are
almost entirely +-1 so pivots stay units and entries stay tiny.
"""

from math import gcd


def rank_int(rows):
    """Rank over the rationals of a sparse integer matrix.

    `rows` is an iterable of {column_key: nonzero int} dicts.  The input
    dicts are not modified.
    """
    work = [dict(r) for r in rows if r]
    rank = 0
    while work:
        # Prefer a unit pivot in a short row; this keeps growth near zero.
        best = min(
            range(len(work)),
            key=lambda i: (
                0 if any(abs(v) == 1 for v in work[i].values()) else 1,
                len(work[i]),
            ),
        )
        row = work.pop(best)
        col, pv = min(
            row.items(), key=lambda item: (abs(item[1]) != 1, abs(item[1]), item[0])
        )
        rank += 1
        reduced = []
        for other in work:
            f = other.get(col)
            if f is not None:
                merged = {}
                for k, v in other.items():
                    merged[k] = pv * v
                for k, v in row.items():
                    newv = merged.get(k, 0) - f * v
                    if newv:
                        merged[k] = newv
                    else:
                        merged.pop(k, None)
                if merged:
                    g = 0
                    for v in merged.values():
                        g = gcd(g, v)
                        if g == 1:
                            break
                    if g > 1:
                        merged = {k: v // g for k, v in merged.items()}
                    reduced.append(merged)
            else:
                reduced.append(other)
        work = reduced
    return rank


def det_bareiss(matrix):
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def gf2_basis(rows):
    """GF(2) basis for the row span, as a {pivot_bit: row} dict.

    Rows are ints used as bit vectors.  Each stored row owns a distinct
    pivot (its lowest set bit at insertion time), which is all that
    membership reduction needs.
    """
    pivots = {}
    for row in rows:
        while row:
            p = row & -row
            owner = pivots.get(p)
            if owner is None:
                pivots[p] = row
                break
            row ^= owner
    return pivots


def gf2_rank(rows):
    """Rank over GF(2); rows are ints used as bit vectors."""
    return len(gf2_basis(rows))


def gf2_in_span(basis, vector):
    """Whether `vector` lies in the span of a gf2_basis() result."""
    while vector:
        owner = basis.get(vector & -vector)
        if owner is None:
            return False
        vector ^= owner
    return True
