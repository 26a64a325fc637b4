"""Finite monoids given by multiplication tables: congruences, quotients,
unit groups, and group completions (as presentations)."""

from dataclasses import dataclass

from .errors import InputError, PreconditionError


@dataclass(frozen=True)
class FinMonoid:
    table: tuple[tuple[int, ...], ...]
    unit: int

    def __post_init__(self):
        n = len(self.table)
        rng = range(n)
        if any(len(row) != n for row in self.table):
            raise InputError("multiplication table is not square")
        if any(x not in rng for row in self.table for x in row):
            raise InputError("table entry out of range")
        if self.unit not in rng and n > 0:
            raise InputError("unit index out of range")
        e = self.unit
        if any(self.table[e][x] != x or self.table[x][e] != x for x in rng):
            raise PreconditionError("unit element is not a two-sided identity")
        for a in rng:
            for b in rng:
                ab = self.table[a][b]
                for c in rng:
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise PreconditionError(
                            f"table is not associative at ({a}, {b}, {c})"
                        )

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]


def monoid_from_rows(rows, unit: int) -> FinMonoid:
    return FinMonoid(tuple(tuple(r) for r in rows), unit)


@dataclass(frozen=True)
class Congruence:
    """A translation-closed equivalence, stored as a class index per element."""

    class_of: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def classes(self):
        out = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out


def _normalize_partition(parent, n):
    # relabel representatives by first appearance
    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    label = {}
    out = []
    for x in range(n):
        r = find(x)
        if r not in label:
            label[r] = len(label)
        out.append(label[r])
    return tuple(out)


def congruence_closure(m: FinMonoid, pairs) -> Congruence:
    """Least translation-closed equivalence on m containing the given pairs.

    Union-find plus a worklist: every newly merged pair is saturated by all
    left and right translations.
    """
    n = m.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = []

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra
        work.append((ra, rb))

    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"pair ({a}, {b}) out of range")
        union(a, b)
    while work:
        a, b = work.pop()
        for c in range(n):
            union(m.mul(c, a), m.mul(c, b))
            union(m.mul(a, c), m.mul(b, c))
    return Congruence(_normalize_partition(parent, n))


def is_congruence(m: FinMonoid, c: Congruence) -> bool:
    cls = c.class_of
    n = m.size
    return all(
        cls[m.mul(a, x)] == cls[m.mul(b, x)] and cls[m.mul(x, a)] == cls[m.mul(x, b)]
        for a in range(n)
        for b in range(n)
        if cls[a] == cls[b]
        for x in range(n)
    )


def quotient_monoid(m: FinMonoid, c: Congruence):
    """Quotient table on congruence classes; returns (monoid, projection)."""
    if len(c.class_of) != m.size:
        raise InputError("congruence size does not match the monoid")
    assert is_congruence(m, c), "partition is not translation-closed"
    k = c.num_classes
    reps = [None] * k
    for x in range(m.size):
        if reps[c.class_of[x]] is None:
            reps[c.class_of[x]] = x
    table = tuple(
        tuple(c.class_of[m.mul(reps[i], reps[j])] for j in range(k)) for i in range(k)
    )
    q = FinMonoid(table, c.class_of[m.unit])
    return q, tuple(c.class_of)


def is_group(m: FinMonoid) -> bool:
    e = m.unit
    return all(
        any(m.mul(x, y) == e and m.mul(y, x) == e for y in range(m.size))
        for x in range(m.size)
    )


def unit_group(m: FinMonoid):
    """The group of two-sided invertible elements; returns (group, inclusion)."""
    e = m.unit
    members = [
        x
        for x in range(m.size)
        if any(m.mul(x, y) == e and m.mul(y, x) == e for y in range(m.size))
    ]
    pos = {x: i for i, x in enumerate(members)}
    table = tuple(tuple(pos[m.mul(x, y)] for y in members) for x in members)
    g = FinMonoid(table, pos[e])
    assert is_group(g)
    return g, tuple(members)


def grothendieck_group(m: FinMonoid):
    """Group completion: one generator per element, one relator per product.

    Returns a presentation with generators g_0..g_{n-1}, relators
    g_i g_j g_{ij}^{-1} for every product and the relator g_e.
    """
    from .grouppres import GroupPresentation, free_reduce_word

    n = m.size
    relators = [(m.unit + 1,)]
    for i in range(n):
        for j in range(n):
            w = free_reduce_word((i + 1, j + 1, -(m.mul(i, j) + 1)))
            if w:
                relators.append(w)
    return GroupPresentation(n, tuple(relators))


def full_transformation_monoid(k: int) -> FinMonoid:
    """All maps {0..k-1} -> {0..k-1} under composition (f.g)(x) = f(g(x))."""
    from itertools import product as iproduct

    maps = sorted(iproduct(range(k), repeat=k))
    pos = {f: i for i, f in enumerate(maps)}
    table = tuple(
        tuple(pos[tuple(f[g[x]] for x in range(k))] for g in maps) for f in maps
    )
    return FinMonoid(table, pos[tuple(range(k))])
