"""Free associative algebras over Q on finitely many generators, finitely
presented quotients, and degree-bounded rewriting.

Monomials are tuples of generator indices ordered by deglex (length first,
then lexicographically by declaration order).  Completion closes overlap
ambiguities among leading words up to a degree bound only; ideal membership
beyond the bound is reported as uncertain unless the bounded system is
confluent.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import frac
from .errors import InputError

DEFAULT_DEGREE_BOUND = 6
_COMPLETION_PASS_CAP = 50

Word = tuple[int, ...]


def deglex_key(w: Word):
    return (len(w), w)


class NCPoly:
    """A noncommutative polynomial: finite map from words to nonzero rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            c = frac(c)
            if c != 0:
                clean[tuple(w)] = c
        self.terms = clean

    @staticmethod
    def zero() -> "NCPoly":
        return NCPoly()

    @staticmethod
    def one() -> "NCPoly":
        return NCPoly({(): Fraction(1)})

    @staticmethod
    def gen(i: int) -> "NCPoly":
        return NCPoly({(i,): Fraction(1)})

    @staticmethod
    def monomial(w, c=1) -> "NCPoly":
        return NCPoly({tuple(w): frac(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return NCPoly(out)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) - c
        return NCPoly(out)

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "NCPoly":
        c = frac(c)
        return NCPoly({w: c * x for w, x in self.terms.items()})

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, Fraction(0)) + c1 * c2
        return NCPoly(out)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=deglex_key)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def reversed_words(self) -> "NCPoly":
        """Reverse every monomial (the opposite-multiplication image)."""
        out = {}
        for w, c in self.terms.items():
            rw = tuple(reversed(w))
            out[rw] = out.get(rw, Fraction(0)) + c
        return NCPoly(out)

    def __repr__(self):
        if not self.terms:
            return "NCPoly(0)"
        bits = [f"{c}*{'.'.join(map(str, w)) or '1'}" for w, c in self.sorted_terms()]
        return "NCPoly(" + " + ".join(bits) + ")"


def nc_evaluate(p: NCPoly, images) -> NCPoly:
    """Evaluate p by substituting images[g] (an NCPoly) for each generator g."""
    out = NCPoly.zero()
    for w, c in p.sorted_terms():
        term = NCPoly.one()
        for g in w:
            term = term * images[g]
        out = out + term.scale(c)
    return out


@dataclass(frozen=True, eq=False)
class AlgebraPresentation:
    num_gens: int
    gen_labels: tuple[str, ...]
    relations: tuple[NCPoly, ...]

    def __post_init__(self):
        if len(self.gen_labels) != self.num_gens:
            raise InputError("generator label count does not match")
        for rel in self.relations:
            if rel.is_zero():
                raise InputError("zero relation")
            for w in rel.terms:
                if any(g < 0 or g >= self.num_gens for g in w):
                    raise InputError("generator index out of range in relation")

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraPresentation)
            and self.num_gens == other.num_gens
            and self.gen_labels == other.gen_labels
            and self.relations == other.relations
        )


@dataclass(frozen=True, eq=False)
class RewriteSystem:
    num_gens: int
    rules: tuple[tuple[Word, NCPoly], ...]  # leading word -> lower remainder
    degree_bound: int
    confluent_up_to: bool

    def __post_init__(self):
        seen = set()
        for lw, rhs in self.rules:
            if lw in seen:
                raise InputError("duplicate leading word")
            seen.add(lw)
            for w in rhs.terms:
                if deglex_key(w) >= deglex_key(lw):
                    raise InputError("rule right side is not deglex-smaller")


def _find_redex(word: Word, rules):
    """First (position, rule index) whose leading word occurs in word."""
    for pos in range(len(word)):
        for ri, (lw, _) in enumerate(rules):
            n = len(lw)
            if word[pos : pos + n] == lw:
                return pos, ri
    return None


def _reduce_by_rules(p: NCPoly, rules) -> NCPoly:
    work = NCPoly(p.terms)
    while True:
        hit = None
        for w, c in work.sorted_terms():
            found = _find_redex(w, rules)
            if found is not None:
                hit = (w, c, found)
                break
        if hit is None:
            return work
        w, c, (pos, ri) = hit
        lw, rhs = rules[ri]
        prefix, suffix = w[:pos], w[pos + len(lw) :]
        replacement = NCPoly.monomial(prefix) * rhs * NCPoly.monomial(suffix)
        work = work - NCPoly.monomial(w, c) + replacement.scale(c)


def reduce_normal_form(p: NCPoly, system: RewriteSystem) -> NCPoly:
    """Rewrite until no term contains a rule's leading word; terminates since
    every step is deglex-decreasing."""
    return _reduce_by_rules(p, system.rules)


def _orient(p: NCPoly) -> tuple[Word, NCPoly]:
    lw = p.leading_word()
    lc = p.terms[lw]
    rest = NCPoly({w: c for w, c in p.terms.items() if w != lw})
    return lw, rest.scale(Fraction(-1) / lc)


def _rule_poly(lw: Word, rhs: NCPoly) -> NCPoly:
    return NCPoly.monomial(lw) - rhs


def _contains(word: Word, factor: Word) -> bool:
    n = len(factor)
    return any(word[i : i + n] == factor for i in range(len(word) - n + 1))


def _add_and_interreduce(rules: list, pending: list) -> None:
    """Drain pending polynomials into the rule list, keeping it inter-reduced."""
    while pending:
        p = _reduce_by_rules(pending.pop(0), rules)
        if p.is_zero():
            continue
        lw, rhs = _orient(p)
        keep = []
        for old_lw, old_rhs in rules:
            reducible = _contains(old_lw, lw) or _reduce_by_rules(
                old_rhs, [(lw, rhs)]
            ) != old_rhs
            if reducible:
                pending.append(_rule_poly(old_lw, old_rhs))
            else:
                keep.append((old_lw, old_rhs))
        keep.append((lw, rhs))
        rules[:] = keep


def complete_rules_up_to(
    pres: AlgebraPresentation, degree_bound: int = DEFAULT_DEGREE_BOUND
) -> RewriteSystem:
    """Close overlap ambiguities among leading words up to the degree bound.

    Deterministic for a fixed generator order.  The result is flagged
    confluent when a full overlap pass produced no new rule.
    """
    max_rel_deg = max((r.degree() for r in pres.relations), default=0)
    if degree_bound < max_rel_deg:
        raise InputError(
            f"degree bound {degree_bound} is below the maximal relation degree {max_rel_deg}"
        )
    rules: list[tuple[Word, NCPoly]] = []
    pending = [NCPoly(r.terms) for r in pres.relations]
    _add_and_interreduce(rules, pending)
    confluent = False
    for _ in range(_COMPLETION_PASS_CAP):
        rules.sort(key=lambda r: deglex_key(r[0]))
        new_polys = []
        for lw1, rhs1 in list(rules):
            for lw2, rhs2 in list(rules):
                for k in range(1, min(len(lw1), len(lw2))):
                    if lw1[len(lw1) - k :] != lw2[:k]:
                        continue
                    if len(lw1) + len(lw2) - k > degree_bound:
                        continue
                    # superposition lw1 . lw2[k:] = lw1[:-k] . lw2
                    left = rhs1 * NCPoly.monomial(lw2[k:])
                    right = NCPoly.monomial(lw1[: len(lw1) - k]) * rhs2
                    s = _reduce_by_rules(left - right, rules)
                    if not s.is_zero():
                        new_polys.append(s)
        if not new_polys:
            confluent = True
            break
        _add_and_interreduce(rules, new_polys)
    rules.sort(key=lambda r: deglex_key(r[0]))
    return RewriteSystem(pres.num_gens, tuple(rules), degree_bound, confluent)


@dataclass(frozen=True)
class IdealMembership:
    member: bool
    certain: bool  # a "no" is definite only for a confluent bounded system


def ideal_member_up_to(p: NCPoly, system: RewriteSystem) -> IdealMembership:
    if p.degree() > system.degree_bound:
        raise InputError("polynomial degree exceeds the rewrite system's bound")
    nf = reduce_normal_form(p, system)
    if nf.is_zero():
        return IdealMembership(True, True)
    return IdealMembership(False, system.confluent_up_to)


def dim_normal_words(system: RewriteSystem, degree: int) -> int:
    """Number of degree-d words containing no leading word as a factor."""
    if degree > system.degree_bound:
        raise InputError("degree exceeds the rewrite system's bound")
    leads = [lw for lw, _ in system.rules]

    def ends_reducible(word):
        return any(word[len(word) - len(lw) :] == lw for lw in leads if len(lw) <= len(word))

    count = 0
    stack = [()]
    while stack:
        w = stack.pop()
        if len(w) == degree:
            count += 1
            continue
        for g in range(system.num_gens):
            nxt = w + (g,)
            if not ends_reducible(nxt):
                stack.append(nxt)
    return count


def tensor_square_presentation(pres: AlgebraPresentation) -> AlgebraPresentation:
    """Two commuting copies of the presentation: left generators first, then
    right; cross commutators make the copies commute elementwise."""
    k = pres.num_gens
    labels = tuple(f"{x}.l" for x in pres.gen_labels) + tuple(
        f"{x}.r" for x in pres.gen_labels
    )
    relations = []
    for rel in pres.relations:
        relations.append(NCPoly(dict(rel.terms)))  # left copy
    for rel in pres.relations:
        relations.append(
            NCPoly({tuple(g + k for g in w): c for w, c in rel.terms.items()})
        )
    for i in range(k):
        for j in range(k):
            relations.append(
                NCPoly.monomial((i, k + j)) - NCPoly.monomial((k + j, i))
            )
    return AlgebraPresentation(2 * k, labels, tuple(relations))


def embed_tensor(left: NCPoly, right: NCPoly, k: int) -> NCPoly:
    """Represent left (x) right inside the 2k-generator tensor-square algebra."""
    shifted = NCPoly({tuple(g + k for g in w): c for w, c in right.terms.items()})
    return left * shifted
