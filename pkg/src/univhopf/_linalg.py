"""Exact linear algebra over the rationals (tuples of tuples of Fraction)."""

from fractions import Fraction

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(xs) -> Vec:
    return tuple(frac(x) for x in xs)


def mat(rows) -> Mat:
    return tuple(vec(r) for r in rows)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def identity(n: int) -> Mat:
    return tuple(unit_vec(n, i) for i in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a and b:
        assert len(a[0]) == len(b)
    bt = tuple(zip(*b)) if b else ()
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt)
        for row in a
    )


def mat_vec(a: Mat, v: Vec) -> Vec:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(x + y for x, y in zip(u, v))


def vec_scale(c: Fraction, v: Vec) -> Vec:
    return tuple(c * x for x in v)


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product; index (i*rows(b)+k, j*cols(b)+l)."""
    if not a:
        return ()
    if not b:
        return tuple(() for _ in range(0))
    return tuple(
        tuple(a[i][j] * b[k][l] for j in range(len(a[0])) for l in range(len(b[0])))
        for i in range(len(a))
        for k in range(len(b))
    )


def rref(rows) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(vec(r)) for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(vec(m[i]) for i in range(r)), tuple(pivots)


def row_space_basis(vectors) -> Mat:
    """Canonical (RREF) basis of the span of the given vectors."""
    basis, _ = rref(vectors)
    return basis


def rank(vectors) -> int:
    return len(row_space_basis(vectors))


def solve(a: Mat, b: Vec) -> Vec | None:
    """One exact solution x of a·x = b, or None if inconsistent."""
    if not a:
        return () if all(x == 0 for x in b) else None
    ncols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    reduced, pivots = rref(aug)
    for row in reduced:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for row, p in zip(reduced, pivots):
        if p == ncols:
            return None
        x[p] = row[-1]
    return tuple(x)


def coords_in_span(basis: Mat, v: Vec) -> Vec | None:
    """Coordinates of v in the given (independent) basis rows, or None."""
    if not basis:
        return () if all(x == 0 for x in v) else None
    cols = tuple(zip(*basis))
    return solve(tuple(vec(c) for c in cols), v)


def nullspace(a: Mat, ncols: int) -> Mat:
    """Basis of {x : a·x = 0} for a matrix with ncols columns."""
    reduced, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return tuple(basis)
