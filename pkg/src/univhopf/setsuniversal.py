"""Set-based universal objects: the universal coacting quotient of a monoid
along a labelling, its group completion, and the measuring/acting sides cut
out of explicit map sets."""

from itertools import product

from .errors import InputError, PreconditionError, ResourceLimitError
from .finmonoid import FinMonoid, monoid_from_rows
from .grouppres import GroupPresentation
from .signature import (
    DEFAULT_ENUM_CAP,
    FinSetMagma,
    is_set_homomorphism,
)


def _monoid_of(magma: FinSetMagma) -> FinMonoid:
    """Extract and validate the monoid carried by a mu/unit-style magma."""
    mu_name = next(
        (name for name, s, t in magma.signature.ops if (s, t) == (2, 1)), None
    )
    unit_name = next(
        (name for name, s, t in magma.signature.ops if (s, t) == (0, 1)), None
    )
    if mu_name is None or unit_name is None:
        raise PreconditionError(
            "the signature does not include a binary product and a unit"
        )
    n = magma.size
    rows = [[magma.apply(mu_name, (i, j))[0] for j in range(n)] for i in range(n)]
    unit = magma.apply(unit_name, ())[0]
    try:
        return monoid_from_rows(rows, unit)
    except InputError as exc:
        raise PreconditionError(f"the carrier is not a monoid: {exc}") from exc


def omega_congruence_closure(magma: FinSetMagma, pairs):
    """Least equivalence containing the pairs and respected by every
    operation: equivalent input tuples get componentwise equivalent outputs."""
    n = magma.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b) -> bool:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra
        return True

    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"pair ({a}, {b}) out of range")
        union(a, b)
    changed = True
    while changed:
        changed = False
        for name, s, t in magma.signature.ops:
            if s == 0:
                continue
            for args1 in product(range(n), repeat=s):
                canon1 = tuple(find(x) for x in args1)
                for args2 in product(range(n), repeat=s):
                    if tuple(find(x) for x in args2) != canon1 or args2 <= args1:
                        continue
                    out1 = magma.apply(name, args1)
                    out2 = magma.apply(name, args2)
                    for o1, o2 in zip(out1, out2):
                        if union(o1, o2):
                            changed = True
    label = {}
    out = []
    for x in range(n):
        r = find(x)
        if r not in label:
            label[r] = len(label)
        out.append(label[r])
    return tuple(out)


class SetComodFrame:
    """A monoid-like magma together with a labelling map psi: A -> U; the
    coaction it frames is a |-> (a, psi(a))."""

    def __init__(self, magma: FinSetMagma, psi):
        if len(psi) != magma.size:
            raise InputError("labelling is not total on the carrier")
        self.magma = magma
        self.psi = tuple(psi)
        _monoid_of(magma)  # validates the precondition


def universal_coacting_sets(frame: SetComodFrame):
    """Quotient by the operation-respecting closure of the kernel of psi.

    Returns (quotient magma, projection).  The projection composed with any
    further collapse identifying the kernel pairs factors through uniquely.
    """
    magma = frame.magma
    kernel_pairs = [
        (a, b)
        for a in range(magma.size)
        for b in range(a + 1, magma.size)
        if frame.psi[a] == frame.psi[b]
    ]
    class_of = omega_congruence_closure(magma, kernel_pairs)
    k = max(class_of) + 1 if class_of else 0
    reps = [None] * k
    for x in range(magma.size):
        if reps[class_of[x]] is None:
            reps[class_of[x]] = x
    tables = {}
    for name, s, t in magma.signature.ops:
        table = {}
        for args in product(range(k), repeat=s):
            lifted = tuple(reps[c] for c in args)
            out = magma.apply(name, lifted)
            table[args] = tuple(class_of[o] for o in out)
        tables[name] = table
    quotient = FinSetMagma(magma.signature, k, tables)
    return quotient, class_of


def universal_coacting_group_sets(frame: SetComodFrame) -> GroupPresentation:
    """Group completion of the universal coacting quotient."""
    quotient, _ = universal_coacting_sets(frame)
    return _grothendieck_of_magma(quotient)


def _grothendieck_of_magma(magma: FinSetMagma) -> GroupPresentation:
    from .finmonoid import grothendieck_group

    return grothendieck_group(_monoid_of(magma))


def universal_measuring_comonoid_sets(
    a: FinSetMagma, b: FinSetMagma, maps="all", cap: int = DEFAULT_ENUM_CAP
):
    """The members of the given map set that are operation-preserving."""
    if maps == "all":
        total = b.size**a.size
        if total > cap:
            raise ResourceLimitError(
                f"{total} candidate maps exceed the enumeration cap {cap}"
            )
        candidates = [f for f in product(range(b.size), repeat=a.size)]
    else:
        candidates = [tuple(f) for f in maps]
        for f in candidates:
            if len(f) != a.size or any(not 0 <= x < b.size for x in f):
                raise InputError(f"map {f} is not a map between the carriers")
    return [f for f in candidates if is_set_homomorphism(f, a, b)]


def universal_acting_group_sets(
    a: FinSetMagma, maps="all", cap: int = DEFAULT_ENUM_CAP
):
    """Invertible-in-V operation-preserving self-maps, with composition table.

    V must contain the identity and be closed under composition.  Returns
    (members, group) where group is a FinMonoid on the member list and
    members[i] is the underlying map of element i.
    """
    ident = tuple(range(a.size))
    if maps == "all":
        total = a.size**a.size
        if total > cap:
            raise ResourceLimitError(
                f"{total} candidate maps exceed the enumeration cap {cap}"
            )
        # the set of all self-maps is a submonoid by construction
        v = [f for f in product(range(a.size), repeat=a.size)]
    else:
        v = [tuple(f) for f in maps]
        for f in v:
            if len(f) != a.size or any(not 0 <= x < a.size for x in f):
                raise InputError(f"map {f} is not a self-map of the carrier")
        vset = set(v)
        if ident not in vset:
            raise PreconditionError("the map set does not contain the identity")
        for f in v:
            for g in v:
                if tuple(f[g[x]] for x in range(a.size)) not in vset:
                    raise PreconditionError(
                        "the map set is not closed under composition"
                    )
    members = []
    for f in v:
        has_inverse = any(
            tuple(f[g[x]] for x in range(a.size)) == ident
            and tuple(g[f[x]] for x in range(a.size)) == ident
            for g in v
        )
        if has_inverse and is_set_homomorphism(f, a, a):
            members.append(f)
    members.sort()
    # identity first for a tidy table
    members.remove(ident)
    members.insert(0, ident)
    pos = {f: i for i, f in enumerate(members)}
    rows = [
        [pos[tuple(f[g[x]] for x in range(a.size))] for g in members] for f in members
    ]
    group = monoid_from_rows(rows, 0)
    from .finmonoid import is_group

    assert is_group(group)
    return members, group


def sets_support_of_map(psi, u_size: int):
    """Second-projection image: the labels actually hit, with the
    corestriction of the labelling onto them."""
    used = sorted(set(psi))
    if any(not 0 <= x < u_size for x in psi):
        raise InputError("label out of range")
    pos = {x: i for i, x in enumerate(used)}
    return used, tuple(pos[x] for x in psi)


def is_tensor_epimorphism_sets(psi, u_size: int) -> bool:
    """A pair-valued coaction is a tensor epimorphism iff the labelling is onto."""
    return set(psi) == set(range(u_size))
