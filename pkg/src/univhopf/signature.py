"""Operation signatures and their realizations on finite sets and on exact
rational vector spaces.

A signature is a list of named operations, each with an input arity ``s`` and
an output arity ``t``; a realization equips a carrier with one total map
(carrier^s -> carrier^t, componentwise on basis tensors in the linear case)
per operation.  No identities such as associativity are imposed here; callers
that need monoid laws validate them separately.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from ._linalg import frac
from .errors import InputError, ResourceLimitError

DEFAULT_ENUM_CAP = 10_000_000


@dataclass(frozen=True)
class OmegaSignature:
    ops: tuple[tuple[str, int, int], ...]  # (name, arity_in, arity_out)

    def __post_init__(self):
        names = [name for name, _, _ in self.ops]
        if len(set(names)) != len(names):
            raise InputError("duplicate operation names in signature")
        for name, s, t in self.ops:
            if s < 0 or t < 0:
                raise InputError(f"operation {name!r} has negative arity")
            if s == 0 and t == 0:
                raise InputError(
                    f"operation {name!r} has arity (0, 0); a map 1 -> 1 carries no data"
                )

    def arity(self, name: str) -> tuple[int, int]:
        for n, s, t in self.ops:
            if n == name:
                return s, t
        raise KeyError(name)


def unital_signature() -> OmegaSignature:
    """The signature of a unital binary product: mu (2 -> 1) and unit (0 -> 1)."""
    return OmegaSignature((("mu", 2, 1), ("unit", 0, 1)))


@dataclass(frozen=True, eq=False)
class FinSetMagma:
    signature: OmegaSignature
    size: int
    tables: dict  # op name -> {input tuple: output tuple}

    def __eq__(self, other):
        return (
            isinstance(other, FinSetMagma)
            and self.signature == other.signature
            and self.size == other.size
            and self.tables == other.tables
        )

    def __post_init__(self):
        if self.size < 0:
            raise InputError("negative carrier size")
        rng = range(self.size)
        for name, s, t in self.signature.ops:
            if name not in self.tables:
                raise InputError(f"missing table for operation {name!r}")
            table = self.tables[name]
            expected = self.size**s
            if len(table) != expected:
                raise InputError(
                    f"table for {name!r} has {len(table)} entries, expected {expected}"
                )
            for key, out in table.items():
                if len(key) != s or any(x not in rng for x in key):
                    raise InputError(f"bad input tuple {key} for {name!r}")
                if len(out) != t or any(x not in rng for x in out):
                    raise InputError(f"bad output tuple {out} for {name!r}")

    def apply(self, name: str, args: tuple[int, ...]) -> tuple[int, ...]:
        return self.tables[name][args]


def set_magma_from_monoid_table(table, unit: int) -> FinSetMagma:
    """Wrap a raw multiplication table (list of rows) as a mu/unit magma."""
    n = len(table)
    mu = {(i, j): (table[i][j],) for i in range(n) for j in range(n)}
    return FinSetMagma(unital_signature(), n, {"mu": mu, "unit": {(): (unit,)}})


def is_set_homomorphism(f, a: FinSetMagma, b: FinSetMagma) -> bool:
    """True iff f (a total index map) commutes with every operation table."""
    if a.signature != b.signature:
        raise InputError("magmas do not share a signature")
    if len(f) != a.size:
        raise InputError("map is not total on the source carrier")
    for name, s, t in a.signature.ops:
        for args, out in a.tables[name].items():
            mapped_args = tuple(f[x] for x in args)
            if b.tables[name][mapped_args] != tuple(f[x] for x in out):
                return False
    return True


def enumerate_set_homs(a: FinSetMagma, b: FinSetMagma, cap: int = DEFAULT_ENUM_CAP):
    """All homomorphisms a -> b as index tuples, in lexicographic order."""
    total = b.size**a.size
    if total > cap:
        raise ResourceLimitError(
            f"{total} candidate maps exceed the enumeration cap {cap}"
        )
    return [
        f
        for f in product(range(b.size), repeat=a.size)
        if is_set_homomorphism(f, a, b)
    ]


def omega_automorphisms(a: FinSetMagma, cap: int = DEFAULT_ENUM_CAP):
    """Bijective self-homomorphisms with their composition table.

    Returns (perms, table) where perms[0] is the identity and
    table[i][j] indexes perms[i] after perms[j].
    """
    import math

    if math.factorial(a.size) > cap:
        raise ResourceLimitError("factorial search space exceeds the enumeration cap")
    ident = tuple(range(a.size))
    perms = [ident] + [
        p
        for p in permutations(range(a.size))
        if p != ident and is_set_homomorphism(p, a, a)
    ]
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[x]] for x in range(a.size))] for q in perms] for p in perms
    ]
    return perms, table


@dataclass(frozen=True, eq=False)
class FinVectMagma:
    """An operation-equipped space over Q, by sparse structure tensors.

    ``tensors[name]`` maps (out multi-index, in multi-index) to a nonzero
    rational: the coefficient of the out basis tensor in the image of the in
    basis tensor.
    """

    signature: OmegaSignature
    dim: int
    basis_labels: tuple[str, ...]
    tensors: dict  # name -> {(out idx, in idx): Fraction}

    def __eq__(self, other):
        return (
            isinstance(other, FinVectMagma)
            and self.signature == other.signature
            and self.dim == other.dim
            and self.basis_labels == other.basis_labels
            and self.tensors == other.tensors
        )

    def __post_init__(self):
        if self.dim < 0:
            raise InputError("negative dimension")
        if len(self.basis_labels) != self.dim:
            raise InputError("basis label count does not match the dimension")
        rng = range(self.dim)
        for name, s, t in self.signature.ops:
            if name not in self.tensors:
                raise InputError(f"missing structure tensor for {name!r}")
            for (out, inp), c in self.tensors[name].items():
                if len(out) != t or len(inp) != s:
                    raise InputError(f"bad multi-index arity in tensor {name!r}")
                if any(i not in rng for i in out + inp):
                    raise InputError(f"index out of range in tensor {name!r}")
                if not isinstance(c, Fraction):
                    raise InputError(f"non-exact coefficient in tensor {name!r}")

    def op_entry(self, name, out, inp) -> Fraction:
        return self.tensors[name].get((tuple(out), tuple(inp)), Fraction(0))


def make_vect_magma(signature, dim, basis_labels, entries) -> FinVectMagma:
    """Build a FinVectMagma from per-op lists of (out, in, coefficient).

    Duplicate (out, in) pairs within one operation are rejected; zero
    coefficients are dropped.
    """
    tensors = {}
    for name, triples in entries.items():
        table = {}
        for out, inp, c in triples:
            key = (tuple(out), tuple(inp))
            if key in table:
                raise InputError(f"duplicate tensor entry {key} for {name!r}")
            c = frac(c)
            if c != 0:
                table[key] = c
        tensors[name] = table
    return FinVectMagma(signature, dim, tuple(basis_labels), tensors)


def is_linear_omega_morphism(m, a: FinVectMagma, b: FinVectMagma) -> bool:
    """True iff the matrix m: a -> b intertwines every structure tensor.

    Checked entrywise as the exact identity omega_b . m^{tensor s} =
    m^{tensor t} . omega_a for each operation.
    """
    if a.signature != b.signature:
        raise InputError("magmas do not share a signature")
    if len(m) != b.dim or any(len(row) != a.dim for row in m):
        raise InputError("matrix shape does not match the dimensions")
    for name, s, t in a.signature.ops:
        for big_i in product(range(b.dim), repeat=t):
            for big_j in product(range(a.dim), repeat=s):
                lhs = Fraction(0)
                for (out, inp), c in b.tensors[name].items():
                    if out != big_i:
                        continue
                    w = c
                    for p, j in zip(inp, big_j):
                        w *= m[p][j]
                        if w == 0:
                            break
                    lhs += w
                rhs = Fraction(0)
                for (out, inp), c in a.tensors[name].items():
                    if inp != big_j:
                        continue
                    w = c
                    for i, k in zip(big_i, out):
                        w *= m[i][k]
                        if w == 0:
                            break
                    rhs += w
                if lhs != rhs:
                    return False
    return True
