"""Supports and cosupports of linear maps, comodule support extraction,
comeasuring verification, and the Tambara / Manin universal presentations.

A map rho: A -> B (x) Q is stored by its coefficient vectors q[beta][alpha]
in Q, meaning rho(a_alpha) = sum_beta b_beta (x) q[beta][alpha].  Its support
is the row space of the q's; rho is a tensor epimorphism exactly when that
row space is all of Q.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ._linalg import (
    Vec,
    coords_in_span,
    frac,
    rank,
    row_space_basis,
    unit_vec,
    vec,
    zero_vec,
)
from .errors import InputError, PreconditionError
from .finmonoid import FinMonoid
from .grading import Grading, grading_support, validate_grading
from .ncalg import AlgebraPresentation, NCPoly
from .signature import FinVectMagma


@dataclass(frozen=True, eq=False)
class TensorValuedMap:
    dim_in: int  # dim A
    dim_out: int  # dim B
    dim_coeff: int  # dim Q
    entries: tuple  # entries[beta][alpha] is a Q-vector

    def __post_init__(self):
        if len(self.entries) != self.dim_out:
            raise InputError("entry rows do not match the target dimension")
        for row in self.entries:
            if len(row) != self.dim_in:
                raise InputError("entry columns do not match the source dimension")
            for q in row:
                if len(q) != self.dim_coeff:
                    raise InputError("coefficient vector length does not match Q")

    def q(self, beta: int, alpha: int) -> Vec:
        return self.entries[beta][alpha]


def tensor_valued_map(dim_in, dim_out, dim_coeff, entries) -> TensorValuedMap:
    return TensorValuedMap(
        dim_in,
        dim_out,
        dim_coeff,
        tuple(tuple(vec(q) for q in row) for row in entries),
    )


def _all_coefficients(rho: TensorValuedMap):
    return [
        rho.entries[beta][alpha]
        for beta in range(rho.dim_out)
        for alpha in range(rho.dim_in)
    ]


def support_of_map(rho: TensorValuedMap):
    """Row-reduced basis of span{q[beta][alpha]} plus the corestriction.

    Returns (basis, corestricted) where basis rows are vectors in Q and the
    corestricted map has coefficients written in that basis.
    """
    basis = row_space_basis(_all_coefficients(rho))
    new_entries = []
    for beta in range(rho.dim_out):
        row = []
        for alpha in range(rho.dim_in):
            coords = coords_in_span(basis, rho.entries[beta][alpha])
            assert coords is not None
            row.append(coords)
        new_entries.append(tuple(row))
    return basis, TensorValuedMap(
        rho.dim_in, rho.dim_out, len(basis), tuple(new_entries)
    )


def is_tensor_epimorphism(rho: TensorValuedMap) -> bool:
    """True iff the q-coefficients span all of Q."""
    return rank(_all_coefficients(rho)) == rho.dim_coeff


def compose_with_matrix(rho: TensorValuedMap, tau) -> TensorValuedMap:
    """(id_B (x) tau) . rho for a matrix tau from Q to another space."""
    rows = len(tau)
    return TensorValuedMap(
        rho.dim_in,
        rho.dim_out,
        rows,
        tuple(
            tuple(
                tuple(
                    sum(
                        (tau[r][c] * q[c] for c in range(rho.dim_coeff)), Fraction(0)
                    )
                    for r in range(rows)
                )
                for q in row
            )
            for row in rho.entries
        ),
    )


# ---------------------------------------------------------------------------
# finite-dimensional algebras / coalgebras


@dataclass(frozen=True, eq=False)
class FDAlgebra:
    dim: int
    mult: tuple  # mult[i][j] is the product vector e_i e_j
    unit: Vec

    def __post_init__(self):
        n = self.dim
        if len(self.mult) != n or any(len(r) != n for r in self.mult):
            raise InputError("multiplication table shape mismatch")
        if any(len(self.mult[i][j]) != n for i in range(n) for j in range(n)):
            raise InputError("product vector length mismatch")
        if len(self.unit) != n:
            raise InputError("unit vector length mismatch")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.multiply(self.mult[i][j], unit_vec(n, k))
                    rhs = self.multiply(unit_vec(n, i), self.mult[j][k])
                    if lhs != rhs:
                        raise PreconditionError(
                            f"algebra is not associative at ({i},{j},{k})"
                        )
        for i in range(n):
            e = unit_vec(n, i)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                raise PreconditionError("unit laws fail")

    def multiply(self, x: Vec, y: Vec) -> Vec:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                c = x[i] * y[j]
                for k, m in enumerate(self.mult[i][j]):
                    if m != 0:
                        out[k] += c * m
        return tuple(out)

    def product_of(self, vectors) -> Vec:
        out = self.unit
        for v in vectors:
            out = self.multiply(out, v)
        return out


def fd_algebra(mult_rows, unit) -> FDAlgebra:
    m = tuple(tuple(vec(p) for p in row) for row in mult_rows)
    return FDAlgebra(len(m), m, vec(unit))


def group_algebra(g: FinMonoid) -> FDAlgebra:
    """The monoid algebra of a finite monoid: e_x e_y = e_{xy}."""
    n = g.size
    mult = tuple(
        tuple(unit_vec(n, g.mul(x, y)) for y in range(n)) for x in range(n)
    )
    return FDAlgebra(n, mult, unit_vec(n, g.unit))


@dataclass(frozen=True, eq=False)
class FDCoalgebra:
    dim: int
    delta: tuple  # delta[i] is a dict {(j, k): coefficient}
    counit: Vec

    def __post_init__(self):
        n = self.dim
        if len(self.delta) != n or len(self.counit) != n:
            raise InputError("coalgebra data shape mismatch")
        for i in range(n):
            for (j, k), c in self.delta[i].items():
                if not (0 <= j < n and 0 <= k < n):
                    raise InputError("comultiplication index out of range")
                if not isinstance(c, Fraction):
                    raise InputError("non-exact comultiplication coefficient")
        for i in range(n):
            left: dict = {}
            right: dict = {}
            for (j, k), c in self.delta[i].items():
                for (a, b), d in self.delta[j].items():
                    key = (a, b, k)
                    left[key] = left.get(key, Fraction(0)) + c * d
                for (a, b), d in self.delta[k].items():
                    key = (j, a, b)
                    right[key] = right.get(key, Fraction(0)) + c * d
            if {k: v for k, v in left.items() if v} != {
                k: v for k, v in right.items() if v
            }:
                raise PreconditionError(
                    f"comultiplication is not coassociative at {i}"
                )
            lcounit = [Fraction(0)] * n
            rcounit = [Fraction(0)] * n
            for (j, k), c in self.delta[i].items():
                lcounit[k] += c * self.counit[j]
                rcounit[j] += c * self.counit[k]
            if tuple(lcounit) != unit_vec(n, i) or tuple(rcounit) != unit_vec(n, i):
                raise PreconditionError(f"counit laws fail at basis vector {i}")

    def comultiply(self, x: Vec) -> dict:
        out: dict = {}
        for i, c in enumerate(x):
            if c == 0:
                continue
            for key, d in self.delta[i].items():
                out[key] = out.get(key, Fraction(0)) + c * d
        return {k: v for k, v in out.items() if v != 0}

    def counit_of(self, x: Vec) -> Fraction:
        return sum((c * e for c, e in zip(x, self.counit)), Fraction(0))


def fd_coalgebra(delta_entries, counit) -> FDCoalgebra:
    """Build from per-basis lists of ((j, k), coefficient)."""
    delta = tuple(
        {tuple(jk): frac(c) for jk, c in row if frac(c) != 0} for row in delta_entries
    )
    return FDCoalgebra(len(delta), delta, vec(counit))


def group_like_coalgebra(n: int) -> FDCoalgebra:
    """Every basis vector group-like: Delta e_i = e_i (x) e_i, eps = 1."""
    return FDCoalgebra(
        n,
        tuple({(i, i): Fraction(1)} for i in range(n)),
        tuple(Fraction(1) for _ in range(n)),
    )


# ---------------------------------------------------------------------------
# comodules and their supports


def comodule_axiom_failures(rho: TensorValuedMap, c: FDCoalgebra):
    """Exact check of the counit and coassociativity comodule axioms."""
    if rho.dim_in != rho.dim_out:
        raise InputError("a comodule structure needs a square map")
    if rho.dim_coeff != c.dim:
        raise InputError("coefficient space does not match the coalgebra")
    n = rho.dim_in
    failures = []
    for alpha in range(n):
        for beta in range(n):
            want = Fraction(1 if alpha == beta else 0)
            if c.counit_of(rho.q(beta, alpha)) != want:
                failures.append(("counit", beta, alpha))
    for alpha in range(n):
        for gamma in range(n):
            lhs: dict = {}
            for beta in range(n):
                qgb = rho.q(gamma, beta)
                qba = rho.q(beta, alpha)
                for j in range(c.dim):
                    if qgb[j] == 0:
                        continue
                    for k in range(c.dim):
                        if qba[k] == 0:
                            continue
                        lhs[(j, k)] = lhs.get((j, k), Fraction(0)) + qgb[j] * qba[k]
            rhs = c.comultiply(rho.q(gamma, alpha))
            if {k: v for k, v in lhs.items() if v} != rhs:
                failures.append(("coassociativity", gamma, alpha))
    return failures


def support_of_comodule(rho: TensorValuedMap, c: FDCoalgebra):
    """Support subcoalgebra of a comodule structure.

    Returns (basis, coalgebra on the support, corestricted map).  The
    comodule axioms are verified first; failure of the Delta-closure of the
    support afterwards would contradict the supporting theorem, so it raises
    RuntimeError (corrupted input) rather than returning a verdict.
    """
    failures = comodule_axiom_failures(rho, c)
    if failures:
        raise PreconditionError(f"not a comodule structure: {failures[:3]}")
    basis, corestricted = support_of_map(rho)
    pair_basis = [
        tuple(bi[j] * bk[k] for j in range(c.dim) for k in range(c.dim))
        for bi in basis
        for bk in basis
    ]
    delta0 = []
    for b in basis:
        image = c.comultiply(b)
        flat = [Fraction(0)] * (c.dim * c.dim)
        for (j, k), v in image.items():
            flat[j * c.dim + k] = v
        coords = coords_in_span(tuple(pair_basis), tuple(flat))
        if coords is None:
            raise RuntimeError(
                "support is not closed under comultiplication; input data corrupt"
            )
        m = len(basis)
        delta0.append(
            {
                (i, k): coords[i * m + k]
                for i in range(m)
                for k in range(m)
                if coords[i * m + k] != 0
            }
        )
    eps0 = tuple(c.counit_of(b) for b in basis)
    support_coalg = FDCoalgebra(len(basis), tuple(delta0), eps0)
    assert not comodule_axiom_failures(corestricted, support_coalg)
    return basis, support_coalg, corestricted


# ---------------------------------------------------------------------------
# cosupports


@dataclass(frozen=True, eq=False)
class FamilyMap:
    """A map P (x) A -> B as a dim(P)-indexed family of matrices A -> B."""

    dim_p: int
    dim_in: int
    dim_out: int
    matrices: tuple  # one dim_out x dim_in matrix per P basis vector

    def __post_init__(self):
        if len(self.matrices) != self.dim_p:
            raise InputError("family size does not match dim P")
        for m in self.matrices:
            if len(m) != self.dim_out or any(len(r) != self.dim_in for r in m):
                raise InputError("family matrix shape mismatch")


def family_map(dim_in, dim_out, matrices) -> FamilyMap:
    ms = tuple(tuple(vec(r) for r in m) for m in matrices)
    return FamilyMap(len(ms), dim_in, dim_out, ms)


def cosupport_of_map(psi: FamilyMap):
    """Row-reduced basis of the span of the acting matrices, as matrices."""
    flat = [
        tuple(x for row in m for x in row) for m in psi.matrices
    ]
    basis = row_space_basis(flat)
    return tuple(
        tuple(
            b[r * psi.dim_in : (r + 1) * psi.dim_in] for r in range(psi.dim_out)
        )
        for b in basis
    )


# ---------------------------------------------------------------------------
# comeasurings in coordinates


def _lhs_rhs(rho, q_alg, a, b, name, s, t, big_i, big_j):
    lhs = zero_vec(q_alg.dim)
    for (out, inp), c in b.tensors[name].items():
        if out != big_i:
            continue
        prod = q_alg.product_of(rho.q(p, j) for p, j in zip(inp, big_j))
        lhs = tuple(x + c * y for x, y in zip(lhs, prod))
    rhs = zero_vec(q_alg.dim)
    for (out, inp), c in a.tensors[name].items():
        if inp != big_j:
            continue
        prod = q_alg.product_of(rho.q(i, m) for i, m in zip(big_i, out))
        rhs = tuple(x + c * y for x, y in zip(rhs, prod))
    return lhs, rhs


def is_comeasuring(
    rho: TensorValuedMap, q_alg: FDAlgebra, a: FinVectMagma, b: FinVectMagma
):
    """Coordinate identity for a comeasuring; returns (ok, witness or None).

    For each operation and each pair of output/input multi-indices (I, J) the
    identity sum_P omega_B[I,P] q_{p1 j1} ... q_{ps js} =
    sum_M omega_A[M,J] q_{i1 m1} ... q_{it mt} must hold in Q (empty products
    are the unit of Q).
    """
    if a.signature != b.signature:
        raise InputError("magmas do not share a signature")
    if rho.dim_in != a.dim or rho.dim_out != b.dim or rho.dim_coeff != q_alg.dim:
        raise InputError("dimension mismatch between the map and its spaces")
    for name, s, t in a.signature.ops:
        for big_i in product(range(b.dim), repeat=t):
            for big_j in product(range(a.dim), repeat=s):
                lhs, rhs = _lhs_rhs(rho, q_alg, a, b, name, s, t, big_i, big_j)
                if lhs != rhs:
                    return False, (name, big_i, big_j)
    return True, None


# ---------------------------------------------------------------------------
# generic-matrix universal presentations


@dataclass(frozen=True, eq=False)
class MatrixPresentation:
    """An algebra presentation whose generators carry matrix indices.

    ``gen_index[g] = (block, i, j)`` with i over the target basis and j over
    the source basis; the single-block case uses block "".  ``blocks`` lists
    the basis indices of each block, in generator declaration order.
    """

    algebra: AlgebraPresentation
    gen_index: tuple  # (block label, i, j) per generator
    blocks: tuple  # (block label, (basis indices...)) pairs

    def generator_of(self, i: int, j: int) -> int | None:
        for g, (_, gi, gj) in enumerate(self.gen_index):
            if (gi, gj) == (i, j):
                return g
        return None


def _coordinate_relations(a, b, gen_of):
    """Relation polynomials of the universal comeasuring presentation.

    gen_of(i, j) gives the generator index of u_{ij} or None when that
    coefficient is forced to zero (off-block pairs); terms containing a
    forced zero vanish.
    """
    relations = []
    for name, s, t in a.signature.ops:
        for big_i in product(range(b.dim), repeat=t):
            for big_j in product(range(a.dim), repeat=s):
                poly = NCPoly.zero()
                for (out, inp), c in sorted(b.tensors[name].items()):
                    if out != big_i:
                        continue
                    gens = [gen_of(p, j) for p, j in zip(inp, big_j)]
                    if any(g is None for g in gens):
                        continue
                    poly = poly + NCPoly.monomial(tuple(gens), c)
                for (out, inp), c in sorted(a.tensors[name].items()):
                    if inp != big_j:
                        continue
                    gens = [gen_of(i, m) for i, m in zip(big_i, out)]
                    if any(g is None for g in gens):
                        continue
                    poly = poly - NCPoly.monomial(tuple(gens), c)
                if not poly.is_zero():
                    relations.append(poly)
    # deduplicate, preserving first occurrence
    seen = []
    for r in relations:
        if r not in seen:
            seen.append(r)
    return seen


def tambara_presentation(a: FinVectMagma, b: FinVectMagma) -> MatrixPresentation:
    """Universal comeasuring algebra from A to B on generic-matrix generators."""
    if a.signature != b.signature:
        raise InputError("magmas do not share a signature")
    if a.dim < 1 or b.dim < 1:
        raise PreconditionError("zero-dimensional inputs are rejected")
    gen_index = tuple(("", i, j) for i in range(b.dim) for j in range(a.dim))
    labels = tuple(f"u[{i},{j}]" for _, i, j in gen_index)
    pos = {(i, j): g for g, (_, i, j) in enumerate(gen_index)}

    relations = _coordinate_relations(a, b, lambda i, j: pos[(i, j)])
    algebra = AlgebraPresentation(len(gen_index), labels, tuple(relations))
    # matrix comultiplication needs a square frame; leave blocks empty otherwise
    blocks = (("", tuple(range(a.dim))),) if a.dim == b.dim else ()
    return MatrixPresentation(algebra, gen_index, blocks)


def manin_end_presentation(grading: Grading) -> MatrixPresentation:
    """Block-diagonal Tambara presentation of a graded algebra.

    Generators exist only for basis pairs inside one grading component; the
    relations are the Tambara relations of the grading-preserving coaction.
    """
    ok, witness = validate_grading(grading)
    if not ok:
        raise PreconditionError(f"invalid grading: {witness}")
    a = grading.algebra
    if a.dim < 1:
        raise PreconditionError("zero-dimensional inputs are rejected")
    supp = grading_support(grading)
    members = {
        label: tuple(
            i for i in range(a.dim) if grading.label_of_basis(i) == label
        )
        for label in supp
    }
    gen_index = []
    for label in supp:
        for i in members[label]:
            for j in members[label]:
                gen_index.append((label, i, j))
    gen_index = tuple(gen_index)
    labels = tuple(f"u({k})[{i},{j}]" for k, i, j in gen_index)
    pos = {(i, j): g for g, (_, i, j) in enumerate(gen_index)}
    relations = _coordinate_relations(a, a, lambda i, j: pos.get((i, j)))
    algebra = AlgebraPresentation(len(gen_index), labels, tuple(relations))
    blocks = tuple((label, members[label]) for label in supp)
    return MatrixPresentation(algebra, gen_index, blocks)


@dataclass(frozen=True)
class FactorizationReport:
    ok: bool
    assignment: tuple  # generator -> Q vector
    failures: tuple  # (relation index, nonzero value) pairs


def factor_through_universal(
    mp: MatrixPresentation, rho: TensorValuedMap, q_alg: FDAlgebra
) -> FactorizationReport:
    """Evaluate the presentation's relations at the q-coefficients of rho.

    All relations vanishing is the computational content of the factorization
    through the universal object; the generator assignment u_{ij} -> q_{ij}
    is unique by construction.
    """
    if rho.dim_coeff != q_alg.dim:
        raise InputError("coefficient space does not match the algebra")
    covered = {(i, j) for _, i, j in mp.gen_index}
    for beta in range(rho.dim_out):
        for alpha in range(rho.dim_in):
            if (beta, alpha) not in covered and any(
                x != 0 for x in rho.q(beta, alpha)
            ):
                raise PreconditionError(
                    f"frame mismatch: coefficient ({beta},{alpha}) must vanish"
                )
    assignment = tuple(rho.q(i, j) for _, i, j in mp.gen_index)
    failures = []
    for idx, rel in enumerate(mp.algebra.relations):
        value = zero_vec(q_alg.dim)
        for w, c in rel.sorted_terms():
            prod = q_alg.product_of(assignment[g] for g in w)
            value = tuple(x + c * y for x, y in zip(value, prod))
        if any(x != 0 for x in value):
            failures.append((idx, value))
    return FactorizationReport(not failures, assignment, tuple(failures))
