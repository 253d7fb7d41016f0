"""Exact integer linear algebra on plain Python ints.

Small dense matrices only (the package never sees more than ~8 variables),
so clarity wins over asymptotics: rank and determinant run fraction-based
Gaussian elimination, integer kernels come from unimodular column
elimination, and lattices are compared through the row-style Hermite form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y == g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _copy_fractions(rows: IntMatrix) -> list[list[Fraction]]:
    out = [[Fraction(x) for x in r] for r in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def rank(rows: IntMatrix) -> int:
    a = _copy_fractions(rows)
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def det(rows: IntMatrix) -> int:
    a = _copy_fractions(rows)
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    d = Fraction(sign)
    for i in range(n):
        d *= a[i][i]
    if d.denominator != 1:
        raise ArithmeticError("integer determinant came out fractional")
    return int(d)


def kernel_basis(rows: IntMatrix) -> tuple[tuple[int, ...], ...]:
    """Basis of the integer kernel {u : rows @ u == 0}; Z^n mod it is torsion free.

    Unimodular column elimination: columns of an identity matrix are combined
    alongside the input columns, so the surviving combination columns form a
    kernel basis.  The basis is then size-reduced to keep entries small.
    """
    rows = [list(r) for r in rows]
    if not rows:
        raise ValueError("kernel_basis needs at least one row")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    work = [list(r) for r in rows]
    combo = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # columns of I

    def col_axpy(dst: int, src: int, x_dst: int, y_src: int, x2: int, y2: int) -> None:
        # (col dst, col src) <- (x*dst + y*src, x2*dst + y2*src) on work and combo
        for mat in (work, combo):
            for row in mat:
                d, s = row[dst], row[src]
                row[dst] = x_dst * d + y_src * s
                row[src] = x2 * d + y2 * s

    active = list(range(n))
    for r in range(len(work)):
        hit = [c for c in active if work[r][c] != 0]
        if not hit:
            continue
        pivot = hit[0]
        for c in hit[1:]:
            a, b = work[r][pivot], work[r][c]
            g, x, y = xgcd(a, b)
            col_axpy(pivot, c, x, y, -(b // g), a // g)
        active.remove(pivot)
    basis = [tuple(combo[i][c] for i in range(n)) for c in active]
    return tuple(size_reduce(basis))


def _norm2(v: Sequence[int]) -> int:
    return sum(x * x for x in v)


def _sign_normal(v: Sequence[int]) -> tuple[int, ...]:
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


def size_reduce(vectors: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Pairwise Lagrange reduction; returns sign-normalized vectors sorted by size.

    Unimodular row operations only, so the spanned lattice is unchanged.  Not
    a full LLL, but on the small kernels handled here it brings entries down
    to the scale of the lattice determinant root, which is all Buchberger
    input preparation needs.
    """
    vs = [list(v) for v in vectors if any(v)]
    for _ in range(1000):
        vs.sort(key=lambda v: (_norm2(v), v))
        changed = False
        for i in range(len(vs)):
            for j in range(len(vs)):
                if i == j:
                    continue
                denom = _norm2(vs[j])
                if denom == 0:
                    continue  # dependent input can reduce a vector to zero
                num = sum(x * y for x, y in zip(vs[i], vs[j]))
                t = (2 * num + denom) // (2 * denom)  # nearest integer of num/denom
                if t:
                    cand = [x - t * y for x, y in zip(vs[i], vs[j])]
                    if _norm2(cand) < _norm2(vs[i]):
                        vs[i] = cand
                        changed = True
        if not changed:
            break
    out = sorted(_sign_normal(v) for v in vs if any(v))
    return out


def row_hnf(rows: IntMatrix) -> tuple[tuple[int, ...], ...]:
    """Canonical row Hermite form of the lattice spanned by the rows.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot), zero rows are dropped; two row sets span the same lattice
    exactly when their forms are equal.
    """
    a = [list(r) for r in rows]
    if not a:
        return ()
    n = len(a[0])
    if any(len(r) != n for r in a):
        raise ValueError("ragged matrix")
    m = len(a)
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m):
            while a[i][c]:
                g, x, y = xgcd(a[r][c], a[i][c])
                pr = [x * p + y * q for p, q in zip(a[r], a[i])]
                qr = [(-(a[i][c] // g)) * p + (a[r][c] // g) * q for p, q in zip(a[r], a[i])]
                a[r], a[i] = pr, qr
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [p - q * s for p, s in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return tuple(tuple(row) for row in a[:r] if any(row))


def maximal_minors(rows: IntMatrix) -> tuple[int, ...]:
    """Determinants obtained by deleting one column of an m x (m+1) matrix.

    Entry c is the minor that deletes column c (0-based).
    """
    m = len(rows)
    if m == 0 or len(rows[0]) != m + 1:
        raise ValueError("maximal_minors expects an m x (m+1) matrix")
    out = []
    for c in range(m + 1):
        sub = [[row[j] for j in range(m + 1) if j != c] for row in rows]
        out.append(det(sub))
    return tuple(out)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return sum(a * b for a, b in zip(u, v))
