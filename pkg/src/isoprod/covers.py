"""Generating vectors and branched G-covers of curves.

A generating vector (b; m_1,...,m_r) is a tuple (alpha_j, beta_j; gamma_i)
whose 2b+r entries generate G and satisfy the long relation
prod [alpha_j, beta_j] prod gamma_i = 1; it encodes a branched G-cover of
a genus-b curve whose covering genus comes from Riemann-Hurwitz.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BranchOrderError,
    ConsistencyError,
    DomainError,
    GenerationError,
    GenusError,
    RelationError,
)
from .groups import (
    GroupTable,
    automorphisms,
    conjugacy_classes,
    class_index,
    cyclic_subgroup,
    subgroup_registry,
)

AUTOMORPHISM_DEDUP_LIMIT = 32


@dataclass(frozen=True, eq=False)
class GeneratingVector:
    group: GroupTable
    base_genus: int
    alphas: tuple
    betas: tuple
    gammas: tuple

    @property
    def branch_orders(self):
        return tuple(self.group.element_order[g] for g in self.gammas)

    def key(self):
        return (self.base_genus, self.alphas, self.betas, self.gammas)

    def __eq__(self, other):
        return (
            isinstance(other, GeneratingVector)
            and self.group is other.group
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash(self.key())

    def to_json(self):
        return {
            "group": self.group.spec,
            "b": self.base_genus,
            "alphas": list(self.alphas),
            "betas": list(self.betas),
            "gammas": list(self.gammas),
        }


@dataclass(frozen=True, eq=False)
class BranchedCover:
    vector: GeneratingVector
    genus: int


def hurwitz_genus(order: int, b: int, branch_orders) -> int:
    """g from 2g-2 = |G|(2b-2 + sum(1 - 1/m_i)); raises if not an integer
    >= 0."""
    rhs = Fraction(order * (2 * b - 2))
    for m in branch_orders:
        rhs += Fraction(order * (m - 1), m)
    if rhs.denominator != 1:
        raise GenusError(f"Riemann-Hurwitz value {rhs} is not an integer")
    rhs = int(rhs)
    if rhs % 2 != 0:
        raise GenusError(f"2g-2 = {rhs} is odd")
    g = (rhs + 2) // 2
    if g < 0:
        raise GenusError(f"negative genus g = {g}")
    return g


def validate_vector(v: GeneratingVector) -> BranchedCover:
    G = v.group
    n = G.order
    b, alphas, betas, gammas = v.base_genus, v.alphas, v.betas, v.gammas
    if b < 0:
        raise DomainError("base genus must be >= 0")
    if len(alphas) != b or len(betas) != b:
        raise DomainError(f"need exactly {b} alphas and betas")
    for g in alphas + betas + gammas:
        if not 0 <= g < n:
            raise DomainError(f"element index {g} out of range")
    for g in gammas:
        if g == 0:
            raise BranchOrderError("branch elements must have order >= 2")
    prod = 0
    for a, bb in zip(alphas, betas):
        prod = G.mult[prod][G.commutator(a, bb)]
    for g in gammas:
        prod = G.mult[prod][g]
    if prod != 0:
        raise RelationError(
            f"long relation fails: product is {G.labels[prod]}, not identity"
        )
    reg = subgroup_registry(G)
    sid = reg.extend_many(0, alphas + betas + gammas)
    if len(reg.sets[sid]) != n:
        raise GenerationError(
            f"elements generate a subgroup of order {len(reg.sets[sid])}, not G"
        )
    g = hurwitz_genus(n, b, v.branch_orders)
    return BranchedCover(v, g)


def _conj_cyclic(G: GroupTable, x) -> frozenset:
    """Union over g of <g x g^-1>; cached per conjugacy class."""
    cache = G._cache.setdefault("conj_cyclic", {})
    ci = class_index(G)[x]
    if ci not in cache:
        acc = set()
        for y in conjugacy_classes(G)[ci].members:
            acc |= cyclic_subgroup(G, y)
        cache[ci] = frozenset(acc)
    return cache[ci]


def stabilizer_union(v: GeneratingVector) -> frozenset:
    """All elements lying in a conjugate of some <gamma_i> (the union of
    point stabilizers of the cover); always contains the identity."""
    acc = {0}
    for g in v.gammas:
        acc |= _conj_cyclic(v.group, g)
    return frozenset(acc)


def broughton_multiplicity(cover: BranchedCover, table, chi) -> int:
    """Multiplicity of chi in H^1(C, CC): chi(1)(2b-2+r) - sum_j
    l_{gamma_j}(chi) for nontrivial chi, 2b for the trivial character."""
    v = cover.vector
    b = v.base_genus
    i = table.index_of(chi)
    if i == table.trivial_index:
        return 2 * b
    c = table.characters[i]
    m = c.degree * (2 * b - 2 + len(v.gammas))
    for g in v.gammas:
        m -= table.trivial_multiplicity(i, g)
    if m < 0:
        raise ConsistencyError(f"negative isotypic multiplicity {m}")
    return m


def broughton_dimension(cover: BranchedCover, table, chi) -> int:
    """Dimension of the chi-isotypic component of H^1(C, CC), i.e.
    chi(1) times the multiplicity."""
    i = table.index_of(chi)
    return table.characters[i].degree * broughton_multiplicity(cover, table, i)


def isotypic_dimensions(cover: BranchedCover, table) -> tuple:
    """Per-irreducible dimensions of H^1(C, CC); they sum to 2 g(C)."""
    dims = tuple(
        broughton_dimension(cover, table, i)
        for i in range(len(table.characters))
    )
    if sum(dims) != 2 * cover.genus:
        raise ConsistencyError(
            f"isotypic dimensions sum to {sum(dims)}, expected {2 * cover.genus}"
        )
    return dims


# -- enumeration -------------------------------------------------------


class CoverStream:
    """Iterator over BranchedCover with a truncation flag: ``truncated``
    becomes True if any otherwise-valid vector was dropped because its
    genus exceeded the cap."""

    def __init__(self, gen):
        self._gen = gen
        self.truncated = False
        self.count = 0

    def __iter__(self):
        for item in self._gen(self):
            self.count += 1
            yield item


def _genus_memo(G):
    return G._cache.setdefault("genus_memo", {})


def _raw_tuples(G, b, r, allowed_gamma):
    """All (alphas+betas, gammas) with the long relation satisfied and
    the generated subgroup full.  gamma tuples are lexicographic; the
    alpha/beta loops are outermost.  Yields (ab, gammas, sid)."""
    n = G.order
    mult = G.mult
    inv = G.inverse
    reg = subgroup_registry(G)
    extend = reg.extend
    sets = reg.sets

    for ab in itertools.product(range(n), repeat=2 * b):
        c = 0
        for j in range(b):
            c = mult[c][G.commutator(ab[j], ab[b + j])]
        sid0 = 0
        for g in ab:
            sid0 = extend(sid0, g)
        if r == 0:
            if c == 0 and len(sets[sid0]) == n:
                yield ab, (), sid0
            continue
        if r == 1:
            last = inv[c]
            if last in allowed_gamma:
                sid = extend(sid0, last)
                if len(sets[sid]) == n:
                    yield ab, (last,), sid
            continue

        # depth-first over gamma_1..gamma_{r-1}; the last one is forced
        stack_g = [None] * (r - 1)

        def rec(depth, prod, sid):
            if depth == r - 1:
                last = inv[prod]
                if last in allowed_gamma:
                    fsid = extend(sid, last)
                    if len(sets[fsid]) == n:
                        yield ab, tuple(stack_g) + (last,), fsid
                return
            for g in allowed_gamma:
                stack_g[depth] = g
                yield from rec(depth + 1, mult[prod][g], extend(sid, g))

        yield from rec(0, c, sid0)


def _vector_code(G, ab, gammas):
    code = 0
    for g in ab + gammas:
        code = code * G.order + g
    return code


def enumerate_vectors(
    G: GroupTable,
    b: int,
    max_r: int,
    genus_cap: int = 65,
    dedup: bool = True,
    min_genus: int = 2,
    branch_order_cap: int | None = None,
    exact_branch_orders=None,
):
    """Stream of valid BranchedCover with r <= max_r branch points and
    min_genus <= g <= genus_cap.

    With ``dedup`` one representative per orbit of simultaneous
    relabeling by group automorphisms is emitted (|G| <= 32; above that
    dedup degrades to a fingerprint on (branch-order multiset, genus)).
    """
    if b not in (0, 1, 2):
        raise DomainError("base genus must be 0, 1 or 2")
    if max_r < 0 or genus_cap <= 0:
        raise DomainError("caps must be positive")
    n = G.order
    orders = G.element_order
    gmemo = _genus_memo(G)
    exact = tuple(sorted(exact_branch_orders)) if exact_branch_orders else None

    allowed = [
        g
        for g in range(1, n)
        if (branch_order_cap is None or orders[g] <= branch_order_cap)
        and (exact is None or orders[g] in exact)
    ]

    r_values = range(max_r + 1)
    if exact is not None:
        r_values = [len(exact)] if len(exact) <= max_r else []

    use_auts = dedup and n <= AUTOMORPHISM_DEDUP_LIMIT
    auts = automorphisms(G) if use_auts else None

    def genus_of(gammas):
        key = (b, tuple(sorted(orders[g] for g in gammas)))
        if key not in gmemo:
            try:
                gmemo[key] = hurwitz_genus(n, b, key[1])
            except GenusError:
                gmemo[key] = None
        return gmemo[key]

    def gen(stream):
        fingerprints = set()
        for r in r_values:
            seen = set()
            for ab, gammas, _sid in _raw_tuples(G, b, r, allowed):
                if exact is not None and tuple(sorted(orders[g] for g in gammas)) != exact:
                    continue
                g = genus_of(gammas)
                if g is None:
                    continue
                if g > genus_cap:
                    stream.truncated = True
                    continue
                if g < min_genus:
                    continue
                if use_auts:
                    code = _vector_code(G, ab, gammas)
                    if code in seen:
                        continue
                    for phi in auts:
                        seen.add(
                            _vector_code(
                                G,
                                tuple(phi[x] for x in ab),
                                tuple(phi[x] for x in gammas),
                            )
                        )
                elif dedup:
                    fp = (tuple(sorted(orders[x] for x in gammas)), g)
                    if fp in fingerprints:
                        continue
                    fingerprints.add(fp)
                v = GeneratingVector(G, b, ab[:b], ab[b:], gammas)
                yield BranchedCover(v, g)

    return CoverStream(gen)
