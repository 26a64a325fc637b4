"""Brute-force engine for locally initial objects in explicit finite
categories: the preorder they form, absolute values, comparison through a
functor, and the lifting of an initial object along a functor.

Everything is decided by exhaustive scans over the finite hom data; results
are up to isomorphism with the lowest object id as the deterministic
representative.
"""

from dataclasses import dataclass
from random import Random

from .errors import InputError, PreconditionError


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    """Objects 0..n-1; morphism m has dom[m], cod[m]; identity[x] is the
    identity morphism of x; compose[(g, f)] = g after f, defined exactly for
    cod[f] == dom[g].  Associativity and the identity laws are validated
    exhaustively."""

    num_objects: int
    dom: tuple
    cod: tuple
    identity: tuple
    compose: dict

    def __post_init__(self):
        n = self.num_objects
        m = len(self.dom)
        if len(self.cod) != m or len(self.identity) != n:
            raise InputError("morphism data shapes do not match")
        if any(not 0 <= x < n for x in self.dom + self.cod):
            raise InputError("morphism endpoint out of range")
        for x in range(n):
            i = self.identity[x]
            if not 0 <= i < m or self.dom[i] != x or self.cod[i] != x:
                raise InputError(f"identity of object {x} is not an endomorphism")
        for g in range(m):
            for f in range(m):
                defined = (g, f) in self.compose
                if defined != (self.cod[f] == self.dom[g]):
                    raise InputError(
                        f"composition of {g} after {f} defined iff composable"
                    )
                if defined:
                    h = self.compose[(g, f)]
                    if (
                        not 0 <= h < m
                        or self.dom[h] != self.dom[f]
                        or self.cod[h] != self.cod[g]
                    ):
                        raise InputError(f"composite of ({g}, {f}) has wrong type")
        for x in range(n):
            i = self.identity[x]
            for f in range(m):
                if self.dom[f] == x and self.compose[(f, i)] != f:
                    raise PreconditionError("right identity law fails")
                if self.cod[f] == x and self.compose[(i, f)] != f:
                    raise PreconditionError("left identity law fails")
        for h in range(m):
            for g in range(m):
                if self.cod[g] != self.dom[h]:
                    continue
                hg = self.compose[(h, g)]
                for f in range(m):
                    if self.cod[f] != self.dom[g]:
                        continue
                    if self.compose[(hg, f)] != self.compose[(h, self.compose[(g, f)])]:
                        raise PreconditionError("composition is not associative")

    @property
    def num_morphisms(self) -> int:
        return len(self.dom)

    def hom(self, x: int, y: int):
        return [
            f
            for f in range(self.num_morphisms)
            if self.dom[f] == x and self.cod[f] == y
        ]


def category_from_parts(num_objects, morphisms, identity, compose):
    """morphisms: list of (dom, cod); compose: {(g, f): h} dict or list."""
    dom = tuple(d for d, _ in morphisms)
    cod = tuple(c for _, c in morphisms)
    comp = dict(compose) if not isinstance(compose, dict) else compose
    return FiniteCategory(num_objects, dom, cod, tuple(identity), comp)


@dataclass(frozen=True, eq=False)
class FunctorData:
    source: FiniteCategory
    target: FiniteCategory
    object_map: tuple
    morphism_map: tuple

    def __post_init__(self):
        y, x = self.source, self.target
        if len(self.object_map) != y.num_objects:
            raise InputError("object map is not total")
        if len(self.morphism_map) != y.num_morphisms:
            raise InputError("morphism map is not total")
        if any(not 0 <= o < x.num_objects for o in self.object_map):
            raise InputError("object image out of range")
        for f in range(y.num_morphisms):
            mf = self.morphism_map[f]
            if not 0 <= mf < x.num_morphisms:
                raise InputError("morphism image out of range")
            if (
                x.dom[mf] != self.object_map[y.dom[f]]
                or x.cod[mf] != self.object_map[y.cod[f]]
            ):
                raise InputError(f"functor breaks the typing of morphism {f}")
        for obj in range(y.num_objects):
            if self.morphism_map[y.identity[obj]] != x.identity[self.object_map[obj]]:
                raise PreconditionError("functor does not preserve identities")
        for g in range(y.num_morphisms):
            for f in range(y.num_morphisms):
                if y.cod[f] != y.dom[g]:
                    continue
                lhs = self.morphism_map[y.compose[(g, f)]]
                rhs = x.compose[(self.morphism_map[g], self.morphism_map[f])]
                if lhs != rhs:
                    raise PreconditionError("functor does not preserve composition")


def identity_functor(c: FiniteCategory) -> FunctorData:
    return FunctorData(
        c, c, tuple(range(c.num_objects)), tuple(range(c.num_morphisms))
    )


def locally_initial_objects(cat: FiniteCategory):
    """Objects with at most one arrow to every object, plus the preorder.

    Returns (objects, edges) where edges[(a, b)] holds iff hom(a, b) is
    nonempty for locally initial a, b.
    """
    lio = [
        x
        for x in range(cat.num_objects)
        if all(len(cat.hom(x, y)) <= 1 for y in range(cat.num_objects))
    ]
    edges = {
        (a, b): bool(cat.hom(a, b)) for a in lio for b in lio
    }
    return lio, edges


def absolute_value(cat: FiniteCategory, x: int) -> int | None:
    """The terminal arrow-into-x among locally initial objects, or None.

    Candidates are locally initial objects with an arrow to x; the result m
    must receive an arrow from every candidate making the triangle commute.
    """
    lio, _ = locally_initial_objects(cat)
    candidates = [(c, cat.hom(c, x)[0]) for c in lio if cat.hom(c, x)]
    for m, f_m in candidates:
        if all(
            any(cat.compose[(f_m, g)] == f_c for g in cat.hom(c, m))
            for c, f_c in candidates
        ):
            return m
    return None


def compare_by_absolute_value(functor: FunctorData, y1: int, y2: int) -> str:
    """Relation of y1 to y2 through the functor's absolute values.

    'finer' means y1 dominates y2 (an arrow |y1| -> G y2 exists), 'coarser'
    the reverse, 'equivalent' both, 'incomparable' neither, 'undefined' when
    an absolute value is missing.
    """
    x = functor.target
    a1 = absolute_value(x, functor.object_map[y1])
    a2 = absolute_value(x, functor.object_map[y2])
    if a1 is None or a2 is None:
        return "undefined"
    ge = bool(x.hom(a1, functor.object_map[y2]))
    le = bool(x.hom(a2, functor.object_map[y1]))
    if ge and le:
        return "equivalent"
    if ge:
        return "finer"
    if le:
        return "coarser"
    return "incomparable"


def _initial_in_subcategory(cat: FiniteCategory, objects) -> int | None:
    """Initial object of the full subcategory on the given objects (lowest id)."""
    for y0 in objects:
        if all(len(cat.hom(y0, y)) == 1 for y in objects):
            return y0
    return None


def lift_initial_object(functor: FunctorData, x0: int) -> int | None:
    """Initial object of {y : hom(x0, G y) nonempty}, or None.

    x0 must be locally initial in the target category.
    """
    x = functor.target
    lio, _ = locally_initial_objects(x)
    if x0 not in lio:
        raise PreconditionError(f"object {x0} is not locally initial")
    members = [
        y
        for y in range(functor.source.num_objects)
        if x.hom(x0, functor.object_map[y])
    ]
    return _initial_in_subcategory(functor.source, members)


def universal_object_of(functor: FunctorData, y: int) -> int | None:
    """Lift at the absolute value of G y; the result's absolute value agrees."""
    x = functor.target
    x0 = absolute_value(x, functor.object_map[y])
    if x0 is None:
        raise PreconditionError(f"object {y} has no absolute value under the functor")
    y0 = lift_initial_object(functor, x0)
    if y0 is not None:
        a = absolute_value(x, functor.object_map[y0])
        assert a is not None and (
            bool(x.hom(a, x0)) and bool(x.hom(x0, a))
        ), "lifted object's absolute value must agree up to isomorphism"
    return y0


# ---------------------------------------------------------------------------
# random validated categories for the brute-force checks


def random_category(rng: Random, max_objects: int = 6, max_morphisms: int = 25):
    """A random valid finite category, by one of three recipes.

    Free categories on random acyclic quivers and random preorders are valid
    by construction; the third recipe adjoins a random idempotent
    endomorphism and is validated (the constructor rejects bad tables, so
    sampling retries until a table passes).
    """
    while True:
        cat = _try_random_category(rng, max_objects, max_morphisms)
        if cat is not None and cat.num_morphisms <= max_morphisms:
            return cat


def _free_category_on_dag(rng: Random, n: int, max_morphisms: int):
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            for _ in range(rng.randrange(3)):
                edges.append((a, b))
    # morphisms are paths: (start object, tuple of edge indices)
    morphs = [(x, ()) for x in range(n)]

    def endpoint(m):
        start, seq = m
        return edges[seq[-1]][1] if seq else start

    grow = True
    while grow:
        grow = False
        for start, seq in list(morphs):
            end = edges[seq[-1]][1] if seq else start
            for i, (c, _) in enumerate(edges):
                if c == end and (start, seq + (i,)) not in morphs:
                    morphs.append((start, seq + (i,)))
                    grow = True
        if len(morphs) > max_morphisms:
            return None
    index = {m: i for i, m in enumerate(morphs)}
    dom = tuple(m[0] for m in morphs)
    cod = tuple(endpoint(m) for m in morphs)
    identity = tuple(index[(x, ())] for x in range(n))
    compose = {}
    for gi, g in enumerate(morphs):
        for fi, f in enumerate(morphs):
            if endpoint(f) == g[0]:
                compose[(gi, fi)] = index[(f[0], f[1] + g[1])]
    return FiniteCategory(n, dom, cod, identity, compose)


def _thin_category_on_preorder(rng: Random, n: int, max_morphisms: int):
    reach = [[a == b for b in range(n)] for a in range(n)]
    for a in range(n):
        for b in range(n):
            if a != b and rng.random() < 0.3:
                reach[a][b] = True
    for k in range(n):
        for a in range(n):
            for b in range(n):
                reach[a][b] = reach[a][b] or (reach[a][k] and reach[k][b])
    morphs = [(a, b) for a in range(n) for b in range(n) if reach[a][b]]
    if len(morphs) > max_morphisms:
        return None
    index = {ab: i for i, ab in enumerate(morphs)}
    dom = tuple(a for a, _ in morphs)
    cod = tuple(b for _, b in morphs)
    identity = tuple(index[(x, x)] for x in range(n))
    compose = {}
    for gi, (_, gb) in enumerate(morphs):
        for fi, (fa, fb) in enumerate(morphs):
            if fb == morphs[gi][0]:
                compose[(gi, fi)] = index[(fa, gb)]
    return FiniteCategory(n, dom, cod, identity, compose)


def _try_random_category(rng: Random, max_objects: int, max_morphisms: int):
    recipe = rng.randrange(3)
    n = rng.randrange(1, max_objects + 1)
    if recipe == 0:
        return _free_category_on_dag(rng, n, max_morphisms)
    if recipe == 1:
        return _thin_category_on_preorder(rng, n, max_morphisms)
    # recipe 2: adjoin an absorbing idempotent endomorphism to a thin base
    base = _thin_category_on_preorder(rng, n, max_morphisms - 1)
    if base is None or base.num_morphisms + 1 > max_morphisms:
        return None
    target = rng.randrange(base.num_objects)
    m = base.num_morphisms
    dom = base.dom + (target,)
    cod = base.cod + (target,)
    compose = dict(base.compose)
    compose[(m, m)] = m
    ident = base.identity[target]
    compose[(m, ident)] = m
    compose[(ident, m)] = m
    for f in range(m):
        if f == ident:
            continue
        if base.cod[f] == target:
            compose[(m, f)] = f
        if base.dom[f] == target:
            compose[(f, m)] = f
    try:
        return FiniteCategory(base.num_objects, dom, cod, base.identity, compose)
    except (InputError, PreconditionError):
        return None
