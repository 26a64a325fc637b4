"""Shared fixture builders for the test suite."""

from fractions import Fraction

from univhopf.coact import TensorValuedMap, group_algebra, tensor_valued_map
from univhopf.finmonoid import FinMonoid, monoid_from_rows
from univhopf.grading import Grading
from univhopf.lio import FiniteCategory, FunctorData
from univhopf.signature import (
    FinSetMagma,
    FinVectMagma,
    make_vect_magma,
    set_magma_from_monoid_table,
    unital_signature,
)

F = Fraction


def cyclic_monoid(n: int) -> FinMonoid:
    return monoid_from_rows([[(i + j) % n for j in range(n)] for i in range(n)], 0)


def klein_four() -> FinMonoid:
    return monoid_from_rows(
        [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]], 0
    )


def chain_monoid_a3_eq_a() -> FinMonoid:
    # {1, a, a^2} with a^3 = a
    return monoid_from_rows([[0, 1, 2], [1, 2, 1], [2, 1, 2]], 0)


def cyclic_set_magma(n: int) -> FinSetMagma:
    return set_magma_from_monoid_table(
        [[(i + j) % n for j in range(n)] for i in range(n)], 0
    )


def klein_set_magma() -> FinSetMagma:
    return set_magma_from_monoid_table(
        [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]], 0
    )


def dual_numbers() -> FinVectMagma:
    """Q[x]/(x^2) with basis (1, x)."""
    return make_vect_magma(
        unital_signature(),
        2,
        ("1", "x"),
        {
            "mu": [((0,), (0, 0), 1), ((1,), (0, 1), 1), ((1,), (1, 0), 1)],
            "unit": [((0,), (), 1)],
        },
    )


def split_quadratic() -> FinVectMagma:
    """Q[x]/(x^2 - 1) with basis (1, x); x^2 = 1."""
    return make_vect_magma(
        unital_signature(),
        2,
        ("1", "x"),
        {
            "mu": [
                ((0,), (0, 0), 1),
                ((1,), (0, 1), 1),
                ((1,), (1, 0), 1),
                ((0,), (1, 1), 1),
            ],
            "unit": [((0,), (), 1)],
        },
    )


def rational_line() -> FinVectMagma:
    """Q itself as a one-dimensional unital algebra."""
    return make_vect_magma(
        unital_signature(),
        1,
        ("1",),
        {"mu": [((0,), (0, 0), 1)], "unit": [((0,), (), 1)]},
    )


def pauli_algebra() -> FinVectMagma:
    """2x2 matrices over Q with the basis I, X, Y = XZ, Z.

    X^2 = Z^2 = I, Y^2 = -I, ZX = -XZ; each basis line is one component of
    the Z2 x Z2 grading.
    """
    prods = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, 1), (1, 2): (3, 1), (1, 3): (2, 1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, -1), (3, 2): (1, -1), (3, 3): (0, 1),
    }
    mu = [((out,), pair, F(c)) for pair, (out, c) in prods.items()]
    return make_vect_magma(
        unital_signature(),
        4,
        ("I", "X", "Y", "Z"),
        {"mu": mu, "unit": [((0,), (), 1)]},
    )


def pauli_grading() -> Grading:
    return Grading(pauli_algebra(), ("e", "x", "y", "z"), (0, 1, 2, 3))


def dual_numbers_grading() -> Grading:
    """deg 1 = 0, deg x = 1."""
    return Grading(dual_numbers(), ("0", "1"), (0, 1))


def trivial_grading(algebra: FinVectMagma) -> Grading:
    return Grading(algebra, ("t",), (0,) * algebra.dim)


def grading_coaction(grading: Grading, elems) -> TensorValuedMap:
    """The coaction a |-> a (x) e_{deg a} into a space with the given label
    positions: elems[label position] = coefficient-space basis index."""
    n = grading.algebra.dim
    dim_q = max(elems) + 1
    entries = [[[0] * dim_q for _ in range(n)] for _ in range(n)]
    for i in range(n):
        entries[i][i][elems[grading.assignment[i]]] = 1
    return tensor_valued_map(n, n, dim_q, entries)


def pauli_coaction() -> TensorValuedMap:
    """Pauli grading coaction into the group algebra of Z2 x Z2."""
    return grading_coaction(pauli_grading(), (0, 1, 2, 3))


def thin_chain_category(n: int) -> FiniteCategory:
    morphs = [(a, b) for a in range(n) for b in range(n) if a <= b]
    idx = {m: i for i, m in enumerate(morphs)}
    comp = {}
    for gi, (ga, gb) in enumerate(morphs):
        for fi, (fa, fb) in enumerate(morphs):
            if fb == ga:
                comp[(gi, fi)] = idx[(fa, gb)]
    return FiniteCategory(
        n,
        tuple(a for a, _ in morphs),
        tuple(b for _, b in morphs),
        tuple(idx[(x, x)] for x in range(n)),
        comp,
    )


def complex_norm_category():
    """Finite truncation of the norm category on exact Gaussian rationals.

    Objects are complex numbers; a nonnegative real a has one arrow to every
    b with |b| <= a; other objects carry one extra idempotent endomorphism.
    Returns (category, objects) with objects as (re, im) pairs.
    """
    objs = [(0, 0), (1, 0), (2, 0), (-1, 0), (0, 1), (0, 2)]

    def in_r_plus(o):
        return o[1] == 0 and o[0] >= 0

    def norm2(o):
        return o[0] * o[0] + o[1] * o[1]

    morphs = []
    for a_i, a in enumerate(objs):
        for b_i, b in enumerate(objs):
            if in_r_plus(a) and norm2(b) <= a[0] * a[0]:
                morphs.append(("f", a_i, b_i))
    for a_i, a in enumerate(objs):
        if not in_r_plus(a):
            morphs.append(("1", a_i, a_i))
            morphs.append(("e", a_i, a_i))
    idx = {m: i for i, m in enumerate(morphs)}
    dom = tuple(m[1] for m in morphs)
    cod = tuple(m[2] for m in morphs)
    identity = tuple(
        idx[("f", o_i, o_i)] if in_r_plus(o) else idx[("1", o_i, o_i)]
        for o_i, o in enumerate(objs)
    )
    comp = {}
    for g_i, g in enumerate(morphs):
        for f_i, f in enumerate(morphs):
            if dom[g_i] != cod[f_i]:
                continue
            if f[0] == "f" and g[0] == "f":
                comp[(g_i, f_i)] = idx[("f", f[1], g[2])]
            elif f[0] == "f":
                comp[(g_i, f_i)] = f_i
            elif g[0] == "f":
                comp[(g_i, f_i)] = g_i
            else:
                kind = "e" if "e" in (f[0], g[0]) else "1"
                comp[(g_i, f_i)] = idx[(kind, f[1], f[1])]
    return FiniteCategory(len(objs), dom, cod, identity, comp), objs


def two_incomparable_lio_category() -> FiniteCategory:
    """Objects 0, 1 are locally initial, both map into 2, which carries an
    extra idempotent so it is not locally initial itself."""
    return FiniteCategory(
        3,
        (0, 1, 2, 0, 1, 2),
        (0, 1, 2, 2, 2, 2),
        (0, 1, 2),
        {
            (0, 0): 0, (1, 1): 1, (2, 2): 2,
            (3, 0): 3, (2, 3): 3,
            (4, 1): 4, (2, 4): 4,
            (5, 5): 5, (2, 5): 5, (5, 2): 5,
            (5, 3): 3, (5, 4): 4,
        },
    )


def reflective_subchain_functor():
    """Y = {0, 2} inside the chain X = 0 -> 1 -> 2, as a functor Y -> X.

    The inclusion has the left adjoint F(0) = 0, F(1) = F(2) = 2; returned as
    (functor, F on objects measured in Y's indexing).
    """
    x = thin_chain_category(3)
    y_morphs = [(0, 0), (0, 1), (1, 1)]
    yidx = {m: i for i, m in enumerate(y_morphs)}
    ycomp = {}
    for gi, (ga, gb) in enumerate(y_morphs):
        for fi, (fa, fb) in enumerate(y_morphs):
            if fb == ga:
                ycomp[(gi, fi)] = yidx[(fa, gb)]
    y = FiniteCategory(
        2,
        tuple(a for a, _ in y_morphs),
        tuple(b for _, b in y_morphs),
        (yidx[(0, 0)], yidx[(1, 1)]),
        ycomp,
    )
    obj_map = (0, 2)
    x_morphs = [(p, q) for p in range(3) for q in range(3) if p <= q]
    xidx = {m: i for i, m in enumerate(x_morphs)}
    mor_map = tuple(xidx[(obj_map[a], obj_map[b])] for a, b in y_morphs)
    functor = FunctorData(y, x, obj_map, mor_map)
    left_adjoint_objects = (0, 1, 1)
    return functor, left_adjoint_objects


def random_q_algebra(rng):
    """A random pick from a pool of small associative unital algebras."""
    from univhopf.coact import fd_algebra as _fd_algebra
    from univhopf.coact import group_algebra as _group_algebra
    from univhopf.finmonoid import monoid_from_rows as _monoid_from_rows

    pool = [
        _fd_algebra([[[1]]], [1]),
        _group_algebra(_monoid_from_rows([[0, 1], [1, 0]], 0)),
        _group_algebra(
            _monoid_from_rows([[(i + j) % 3 for j in range(3)] for i in range(3)], 0)
        ),
        _fd_algebra([[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1]),
        _fd_algebra(  # truncated polynomials of length three
            [
                [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
                [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
            ],
            [1, 0, 0],
        ),
    ]
    return pool[rng.randrange(len(pool))]


def random_unital_magma(rng, dim):
    """Random structure tensors on the mu/unit signature (no laws imposed)."""
    entries = {"mu": [], "unit": [((0,), (), 1)]}
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                c = rng.randrange(-1, 2)
                if c:
                    entries["mu"].append(((k,), (i, j), c))
    return make_vect_magma(
        unital_signature(), dim, tuple(f"e{i}" for i in range(dim)), entries
    )
