"""Linear algebra over the prime field F_p.

Vectors are tuples of ints in [0, p), matrices are tuples of row tuples.
Everything returns canonical immutable data so results can be hashed,
compared, and used as cache keys.  Row spaces are always canonicalized
via reduced row echelon form.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def vec(entries: Iterable[int], p: int) -> Vec:
    return tuple(x % p for x in entries)


def mat(rows: Iterable[Iterable[int]], p: int) -> Mat:
    return tuple(vec(r, p) for r in rows)


def zeros(n: int) -> Vec:
    return (0,) * n


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def add(u: Vec, v: Vec, p: int) -> Vec:
    return tuple((a + b) % p for a, b in zip(u, v))


def sub(u: Vec, v: Vec, p: int) -> Vec:
    return tuple((a - b) % p for a, b in zip(u, v))


def neg(u: Vec, p: int) -> Vec:
    return tuple((-a) % p for a in u)


def scale(c: int, u: Vec, p: int) -> Vec:
    c %= p
    return tuple((c * a) % p for a in u)


def dot(u: Vec, v: Vec, p: int) -> int:
    return sum(a * b for a, b in zip(u, v)) % p


def mat_vec(m: Mat, v: Vec, p: int) -> Vec:
    return tuple(dot(row, v, p) for row in m)


def mat_mul(a: Mat, b: Mat, p: int) -> Mat:
    bt = transpose(b)
    return tuple(tuple(dot(ra, cb, p) for cb in bt) for ra in a)


def transpose(m: Mat) -> Mat:
    if not m:
        return ()
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0])))


def rref(m: Mat, p: int) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns; zero rows dropped."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] % p != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p != 0:
                f = rows[i][c] % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(x % p for x in row) for row in rows[:r]), tuple(pivots)


def row_space(m: Mat, p: int) -> Mat:
    return rref(m, p)[0]


def rank(m: Mat, p: int) -> int:
    return len(rref(m, p)[0])


def det(m: Mat, p: int) -> int:
    n = len(m)
    if n == 0:
        return 1  # empty matrix: determinant of the identity on the zero space
    rows = [list(r) for r in m]
    d = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if rows[i][c] % p != 0:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = (-d) % p
        d = (d * rows[c][c]) % p
        inv = pow(rows[c][c], p - 2, p)
        for i in range(c + 1, n):
            if rows[i][c] % p != 0:
                f = (rows[i][c] * inv) % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[c])]
    return d % p


def solve(a: Mat, b: Vec, p: int) -> Vec | None:
    """One solution x of a^T-free convention: sum_j x_j * a[j] = b (row combination).

    Returns None when b is not in the row space of a.
    """
    if not a:
        return () if all(x % p == 0 for x in b) else None
    ncols = len(a[0])
    aug = tuple(tuple(a[i][j] for i in range(len(a))) + (b[j] % p,) for j in range(ncols))
    red, pivots = rref(aug, p)
    nvars = len(a)
    x = [0] * nvars
    for row, c in zip(red, pivots):
        if c == nvars:
            return None  # inconsistent: pivot in the augmented column
        x[c] = row[nvars]
    return tuple(x)


def solve_matrix(a: Mat, targets: Mat, p: int) -> Mat | None:
    """Coefficient rows c_i with c_i * a = targets[i]; None if any target escapes."""
    out = []
    for t in targets:
        s = solve(a, t, p)
        if s is None:
            return None
        out.append(s)
    return tuple(out)


def null_space(m: Mat, p: int) -> Mat:
    """Basis (RREF rows) of {x : m x = 0} (x a column vector)."""
    if not m:
        return ()
    ncols = len(m[0])
    red, pivots = rref(m, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, c in zip(red, pivots):
            v[c] = (-row[f]) % p
        basis.append(tuple(v))
    return row_space(tuple(basis), p)


def intersect(a: Mat, b: Mat, p: int) -> Mat:
    """Basis of row_space(a) ∩ row_space(b), canonicalized."""
    if not a or not b:
        return ()
    # x*a = y*b  <=>  (x, -y) in null space of stacked generators, read columns.
    stacked = tuple(tuple(a[i][c] for i in range(len(a))) + tuple(b[j][c] for j in range(len(b))) for c in range(len(a[0])))
    ker = null_space(stacked, p)
    vecs = []
    for k in ker:
        x = k[: len(a)]
        v = zeros(len(a[0]))
        for xi, row in zip(x, a):
            v = add(v, scale(xi, row, p), p)
        vecs.append(v)
    return row_space(tuple(vecs), p)


def sum_space(a: Mat, b: Mat, p: int) -> Mat:
    return row_space(a + b, p)


def in_row_space(v: Vec, m: Mat, p: int) -> bool:
    return solve(m, v, p) is not None


def complement_pivot_basis(m: Mat, p: int, ncols: int) -> Mat:
    """Standard basis vectors at the non-pivot columns: a complement of row_space(m)."""
    _, pivots = rref(m, p)
    rows = []
    for c in range(ncols):
        if c not in pivots:
            v = [0] * ncols
            v[c] = 1
            rows.append(tuple(v))
    return tuple(rows)


def span_vectors(m: Mat, p: int) -> Iterator[Vec]:
    """All p^rank vectors of the row space, in lexicographic coefficient order."""
    k = len(m)
    n = len(m[0]) if m else 0
    coeffs = [0] * k
    while True:
        v = zeros(n)
        for c, row in zip(coeffs, m):
            if c:
                v = add(v, scale(c, row, p), p)
        yield v
        i = k - 1
        while i >= 0 and coeffs[i] == p - 1:
            coeffs[i] = 0
            i -= 1
        if i < 0:
            return
        coeffs[i] += 1


def change_of_basis_det(rows: Mat, canonical: Mat, p: int) -> int:
    """det C where C * canonical = rows; both must span the same space."""
    c = solve_matrix(canonical, rows, p)
    if c is None:
        raise ValueError("rows do not lie in the span of the canonical basis")
    return det(c, p)
