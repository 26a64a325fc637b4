"""Finitely presented groups.

Words are tuples of nonzero ints: letter ``+(g+1)`` is generator ``g``,
``-(g+1)`` its inverse.  All group-level questions here are bounded
semi-decisions; ``todd_coxeter_order`` answers ``None`` (Unknown) when the
coset enumeration does not close within its limit.
"""

from dataclasses import dataclass

from .errors import InputError

DEFAULT_COSET_LIMIT = 100_000
DEFAULT_TIETZE_EFFORT = 50

Word = tuple[int, ...]


def free_reduce_word(w) -> Word:
    """Cancel adjacent x x^-1 pairs; idempotent."""
    out: list[int] = []
    for letter in w:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def invert_word(w) -> Word:
    return tuple(-x for x in reversed(w))


@dataclass(frozen=True)
class GroupPresentation:
    num_gens: int
    relators: tuple[Word, ...]
    gen_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.gen_labels is not None and len(self.gen_labels) != self.num_gens:
            raise InputError("generator label count does not match")
        for w in self.relators:
            for x in w:
                if x == 0 or abs(x) > self.num_gens:
                    raise InputError(f"letter {x} out of range in relator {w}")
            if free_reduce_word(w) != tuple(w):
                raise InputError(f"relator {w} is not freely reduced")


def presentation(num_gens, relators, gen_labels=None) -> GroupPresentation:
    """Build a presentation, freely reducing relators and dropping trivial ones."""
    reduced = []
    for w in relators:
        r = free_reduce_word(w)
        if r and r not in reduced:
            reduced.append(r)
    return GroupPresentation(
        num_gens, tuple(reduced), tuple(gen_labels) if gen_labels else None
    )


# ---------------------------------------------------------------------------
# abelian invariants via the Smith normal form of the exponent matrix


def _smith_diagonal(rows, ncols):
    """Diagonal of the Smith normal form of an integer matrix (list of rows)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    diag = []
    t = 0
    while t < nrows and t < ncols:
        # pick the entry of least absolute value as pivot
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(pivot[2])):
                    pivot = (i, j, m[i][j])
        if pivot is None:
            break
        pi, pj, _ = pivot
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear the pivot column
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    m[i] = [a - q * b for a, b in zip(m[i], m[t])]
            if any(m[i][t] for i in range(t + 1, nrows)):
                # a remainder became the new smallest entry; re-pivot on it
                i = min(
                    (i for i in range(t + 1, nrows) if m[i][t]),
                    key=lambda i: abs(m[i][t]),
                )
                m[t], m[i] = m[i], m[t]
                continue
            # clear the pivot row
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    for row in m:
                        row[j] -= q * row[t]
            if any(m[t][j] for j in range(t + 1, ncols)):
                j = min(
                    (j for j in range(t + 1, ncols) if m[t][j]),
                    key=lambda j: abs(m[t][j]),
                )
                for row in m:
                    row[t], row[j] = row[j], row[t]
                continue
            # enforce divisibility of the remaining block
            bad = next(
                (
                    (i, j)
                    for i in range(t + 1, nrows)
                    for j in range(t + 1, ncols)
                    if m[i][j] % m[t][t]
                ),
                None,
            )
            if bad is None:
                break
            m[t] = [a + b for a, b in zip(m[t], m[bad[0]])]
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def abelian_invariants(pres: GroupPresentation) -> list[int]:
    """Invariant factors of the abelianization; 0 marks a free factor.

    Finite factors come first in their divisibility chain, then one 0 per
    infinite cyclic factor.
    """
    rows = []
    for w in pres.relators:
        exps = [0] * pres.num_gens
        for x in w:
            exps[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(exps)
    diag = _smith_diagonal(rows, pres.num_gens)
    nonzero = [d for d in diag if d != 0]
    return [d for d in nonzero if d != 1] + [0] * (pres.num_gens - len(nonzero))


# ---------------------------------------------------------------------------
# Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy)


def todd_coxeter_order(
    pres: GroupPresentation, coset_limit: int = DEFAULT_COSET_LIMIT
) -> int | None:
    """Exact group order, or None if enumeration does not close within the limit.

    Deterministic: cosets are processed in creation order, relators in
    presentation order, and every generator column of a processed coset is
    filled so that free factors run into the limit instead of closing.
    """
    if coset_limit < 1:
        raise InputError("coset limit must be at least 1")
    if pres.num_gens == 0:
        return 1
    ncols = 2 * pres.num_gens

    def col(letter: int) -> int:
        g = abs(letter) - 1
        return 2 * g if letter > 0 else 2 * g + 1

    labels = [0]
    neighbors = [[None] * ncols]

    def find(c: int) -> int:
        while labels[c] != c:
            labels[c] = labels[labels[c]]
            c = labels[c]
        return c

    def unify(c1: int, c2: int) -> None:
        stack = [(c1, c2)]
        while stack:
            a, b = stack.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            labels[b] = a
            for d in range(ncols):
                n2 = neighbors[b][d]
                if n2 is None:
                    continue
                n1 = neighbors[a][d]
                if n1 is None:
                    neighbors[a][d] = n2
                else:
                    stack.append((n1, n2))

    class _Overflow(Exception):
        pass

    def follow(c: int, d: int) -> int:
        c = find(c)
        if neighbors[c][d] is None:
            if len(neighbors) >= coset_limit:
                raise _Overflow
            new = len(neighbors)
            neighbors.append([None] * ncols)
            labels.append(new)
            neighbors[c][d] = new
            neighbors[new][d ^ 1] = c
        return find(neighbors[c][d])

    try:
        v = 0
        while v < len(neighbors):
            if find(v) != v:
                v += 1
                continue
            for w in pres.relators:
                c = v
                for letter in w:
                    c = follow(c, col(letter))
                unify(c, v)
                if find(v) != v:
                    break
            if find(v) == v:
                for d in range(ncols):
                    follow(v, d)
            v += 1
    except _Overflow:
        return None

    live = [c for c in range(len(neighbors)) if find(c) == c]
    # closed-table sanity sweep
    for c in live:
        assert all(n is not None for n in neighbors[c])
        for w in pres.relators:
            x = c
            for letter in w:
                x = find(neighbors[x][col(letter)])
            assert x == c
    return len(live)


# ---------------------------------------------------------------------------
# Tietze simplification


def _shift_letter(x: int, removed: int) -> int:
    g = abs(x) - 1
    assert g != removed
    shifted = g - 1 if g > removed else g
    return (shifted + 1) if x > 0 else -(shifted + 1)


def _substitute(word: Word, gen: int, image: Word) -> Word:
    """Replace generator ``gen`` by ``image`` (given in the old indexing, not
    mentioning ``gen``) and renumber the generators above ``gen`` down."""
    shifted_image = tuple(_shift_letter(x, gen) for x in image)
    out: list[int] = []
    for x in word:
        if abs(x) - 1 == gen:
            out.extend(shifted_image if x > 0 else invert_word(shifted_image))
        else:
            out.append(_shift_letter(x, gen))
    return free_reduce_word(out)


def _rotations(w: Word):
    for i in range(len(w)):
        yield w[i:] + w[:i]


def _shorten_with(rel: Word, other: Word) -> Word | None:
    """Rewrite ``other`` using ``rel``: replace a majority subword of a cyclic
    conjugate of rel (or its inverse) by the inverse of the complement."""
    n = len(rel)
    if n < 2:
        return None
    for base in (rel, invert_word(rel)):
        for rot in _rotations(base):
            piece_len = n // 2 + 1
            piece = rot[:piece_len]
            rest = rot[piece_len:]
            replacement = invert_word(rest)
            for start in range(len(other) - piece_len + 1):
                if other[start : start + piece_len] == piece:
                    cand = free_reduce_word(
                        other[:start] + replacement + other[start + piece_len :]
                    )
                    if len(cand) < len(other):
                        return cand
    return None


def tietze_simplify(
    pres: GroupPresentation, effort: int = DEFAULT_TIETZE_EFFORT
) -> tuple[GroupPresentation, tuple[Word, ...]]:
    """Best-effort simplification to a presentation of an isomorphic group.

    Removes trivial relators, eliminates generators defined by length-1 and
    length-2 relators, and does bounded relator-on-relator rewriting.  Returns
    the new presentation together with the image of each original generator
    as a word in the new generators.
    """
    num = pres.num_gens
    relators = [free_reduce_word(w) for w in pres.relators]
    images: list[Word] = [((g + 1),) for g in range(num)]

    def apply_subst(gen: int, image: Word) -> None:
        nonlocal num, relators, images
        relators = [_substitute(w, gen, image) for w in relators]
        images = [_substitute(w, gen, image) for w in images]
        num -= 1

    for _ in range(max(effort, 1)):
        changed = False
        relators = [w for w in dict.fromkeys(relators) if w]
        # length-1 relators kill a generator outright
        unit = next((w for w in relators if len(w) == 1), None)
        if unit is not None:
            apply_subst(abs(unit[0]) - 1, ())
            changed = True
            continue
        # length-2 relators on distinct generators express one by the other
        pair = next(
            (w for w in relators if len(w) == 2 and abs(w[0]) != abs(w[1])), None
        )
        if pair is not None:
            x, y = pair
            g = abs(y) - 1
            # x * y = 1: if y = g then g = x^-1, if y = g^-1 then g = x
            apply_subst(g, (-x,) if y > 0 else (x,))
            changed = True
            continue
        # bounded rewriting: shorten relators against each other
        by_len = sorted(range(len(relators)), key=lambda i: (len(relators[i]), i))
        done = False
        for i in by_len:
            for j in range(len(relators)):
                if i == j:
                    continue
                cand = _shorten_with(relators[i], relators[j])
                if cand is not None:
                    relators[j] = cand
                    changed = True
                    done = True
                    break
            if done:
                break
        if not changed:
            break
    relators = [w for w in dict.fromkeys(relators) if w]
    return GroupPresentation(num, tuple(relators)), tuple(images)
