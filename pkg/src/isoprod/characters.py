"""Exact irreducible character tables.

Characters are stored per conjugacy class as eigenvalue-multiplicity
vectors over e-th roots of unity (e = group exponent): the value at g is
Sum_k m_k zeta_e^k with non-negative integer m_k summing to the degree.
This makes the two predicates the classification needs -- chi(g) = chi(1)
and the trivial multiplicity l_sigma(chi) -- plain integer tests.

Abelian groups get a direct fast path; everything else goes through
Dixon's method: simultaneous diagonalization of the class-sum matrices
over a prime field F_p with p = 1 (mod e), followed by discrete Fourier
sums that recover the multiplicity vectors exactly.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from . import __version__
from .cyclotomic import Cyc, cyclotomic_poly, multvec_to_cyc
from .errors import (
    ConsistencyError,
    DecompositionError,
    DomainError,
    IsoprodError,
)
from .groups import (
    GroupTable,
    _generating_sequence,
    class_index,
    conjugacy_classes,
    subgroup_table,
)

_DIXON_PRIME_BOUND = 1 << 20


@dataclass(frozen=True)
class Character:
    """One irreducible character: degree and per-class multiplicity
    vectors (length e each)."""

    degree: int
    values: tuple  # tuple of tuples of ints


class CharacterTable:
    def __init__(self, group: GroupTable, characters, check=True):
        self.group = group
        self.classes = conjugacy_classes(group)
        self.class_of = class_index(group)
        self.exponent = group.exponent
        self.characters = tuple(
            sorted(characters, key=lambda c: (c.degree, c.values))
        )
        self._index = {c.values: i for i, c in enumerate(self.characters)}
        self._cyc_cache = {}
        n = group.order
        if len(self.characters) != len(self.classes):
            raise ConsistencyError(
                f"{len(self.characters)} characters for {len(self.classes)} classes"
            )
        self.trivial_index = next(
            i
            for i, c in enumerate(self.characters)
            if c.degree == 1 and all(v[0] == 1 for v in c.values)
        )
        self.conj_index = tuple(
            self._index[_conj_values(c.values, self.exponent)]
            for c in self.characters
        )
        if check:
            self.check()

    # -- lookups -------------------------------------------------------

    def index_of(self, chi) -> int:
        if isinstance(chi, int):
            return chi
        return self._index[chi.values]

    def conjugate(self, chi) -> Character:
        return self.characters[self.conj_index[self.index_of(chi)]]

    def value(self, chi, g) -> Cyc:
        """Exact value chi(g) for a group element g."""
        chi = self.characters[self.index_of(chi)]
        return multvec_to_cyc(self.exponent, chi.values[self.class_of[g]])

    def class_values(self, chi):
        i = self.index_of(chi)
        if i not in self._cyc_cache:
            chi = self.characters[i]
            self._cyc_cache[i] = tuple(
                multvec_to_cyc(self.exponent, v) for v in chi.values
            )
        return self._cyc_cache[i]

    def kernel(self, chi) -> frozenset:
        """{g : chi(g) = chi(1)}, i.e. all eigenvalues are 1."""
        chi = self.characters[self.index_of(chi)]
        good = {
            ci
            for ci, v in enumerate(chi.values)
            if v[0] == chi.degree
        }
        return frozenset(
            g for g in range(self.group.order) if self.class_of[g] in good
        )

    def trivial_multiplicity(self, chi, sigma) -> int:
        """l_sigma(chi): multiplicity of the trivial character in the
        restriction of chi to <sigma> = count of eigenvalue-1 entries."""
        chi = self.characters[self.index_of(chi)]
        return chi.values[self.class_of[sigma]][0]

    # -- verification --------------------------------------------------

    def inner(self, f_values, g_values) -> Fraction:
        """Class-function inner product <f, g> from per-class Cyc values."""
        n = self.group.order
        acc = Cyc.zero(self.exponent)
        for cl, fv, gv in zip(self.classes, f_values, g_values):
            acc = acc + fv * gv.conj() * len(cl.members)
        return (acc / n).as_fraction()

    def check(self):
        n = self.group.order
        if sum(c.degree * c.degree for c in self.characters) != n:
            raise ConsistencyError("Burnside identity sum chi(1)^2 = |G| fails")
        e = self.exponent
        sizes = np.array([len(c.members) for c in self.classes], dtype=np.int64)
        vals = np.array([c.values for c in self.characters], dtype=np.int64)
        conj_vals = np.array(
            [[_conj_vec(v, e) for v in c.values] for c in self.characters],
            dtype=np.int64,
        )
        for i, ci in enumerate(self.characters):
            for j in range(i, len(self.characters)):
                s = np.zeros(2 * e - 1 if e > 1 else 1, dtype=np.int64)
                for r in range(len(self.classes)):
                    s += sizes[r] * np.convolve(vals[i][r], conj_vals[j][r])
                want = n if i == j else 0
                if not _int_poly_is_constant(s.tolist(), e, want):
                    raise ConsistencyError(
                        f"row orthogonality fails for characters {i}, {j}"
                    )
        for r in range(len(self.classes)):
            for s_ in range(r, len(self.classes)):
                acc = np.zeros(2 * e - 1 if e > 1 else 1, dtype=np.int64)
                for i in range(len(self.characters)):
                    acc += np.convolve(vals[i][r], conj_vals[i][s_])
                want = n // int(sizes[r]) if r == s_ else 0
                if not _int_poly_is_constant(acc.tolist(), e, want):
                    raise ConsistencyError(
                        f"column orthogonality fails for classes {r}, {s_}"
                    )

    # -- serialization -------------------------------------------------

    def to_json(self):
        return {
            "group": self.group.spec,
            "exponent": self.exponent,
            "classes": [len(c.members) for c in self.classes],
            "characters": [
                {"degree": c.degree, "values": [list(v) for v in c.values]}
                for c in self.characters
            ],
        }

    @classmethod
    def from_json(cls, group: GroupTable, data, check=False):
        classes = conjugacy_classes(group)
        if data["exponent"] != group.exponent or data["classes"] != [
            len(c.members) for c in classes
        ]:
            raise IsoprodError("cached character table does not match group")
        chars = [
            Character(d["degree"], tuple(tuple(v) for v in d["values"]))
            for d in data["characters"]
        ]
        return cls(group, chars, check=check)


def _conj_vec(v, e):
    return tuple(v[(-k) % e] for k in range(e))


def _conj_values(values, e):
    return tuple(_conj_vec(v, e) for v in values)


def _int_poly_is_constant(coeffs, e, want):
    """True iff Sum_k coeffs[k] zeta_e^k equals the integer ``want``."""
    folded = [0] * e
    for k, c in enumerate(coeffs):
        folded[k % e] += int(c)
    folded[0] -= want
    phi = cyclotomic_poly(e)
    deg = len(phi) - 1
    for i in range(e - 1 - deg, -1, -1):
        c = folded[i + deg]
        if c:
            for j, d in enumerate(phi):
                folded[i + j] -= c * d
    return all(c == 0 for c in folded[:deg])


# -- abelian fast path -------------------------------------------------


def _abelian_characters(G: GroupTable):
    n = G.order
    e = G.exponent
    classes = conjugacy_classes(G)
    gens = _generating_sequence(G)
    mult = G.mult
    # BFS tree for evaluating a homomorphism from generator images
    parent = [None] * n
    parent[0] = (0, None)
    frontier = [0]
    bfs = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = mult[x][g]
                if parent[y] is None:
                    parent[y] = (x, gi)
                    nxt.append(y)
                    bfs.append(y)
        frontier = nxt

    import itertools

    choice_sets = [
        range(0, e, e // G.element_order[g]) for g in gens
    ]
    homs = []
    for exps in itertools.product(*choice_sets):
        val = [0] * n
        for x in bfs[1:]:
            px, gi = parent[x]
            val[x] = (val[px] + exps[gi]) % e
        ok = True
        for x in range(n):
            for gi, g in enumerate(gens):
                if val[mult[x][g]] != (val[x] + exps[gi]) % e:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            homs.append(tuple(val))
    if len(set(homs)) != n:
        raise ConsistencyError(
            f"abelian character search found {len(set(homs))} characters, expected {n}"
        )
    chars = []
    for val in homs:
        values = []
        for c in classes:
            v = [0] * e
            v[val[c.representative]] = 1
            values.append(tuple(v))
        chars.append(Character(1, tuple(values)))
    return chars


# -- Dixon's algorithm -------------------------------------------------


def _is_prime(m):
    if m < 2:
        return False
    for q in range(2, isqrt(m) + 1):
        if m % q == 0:
            return False
    return True


def _dixon_prime(order, exponent):
    p = 2 * order + 1
    while p < _DIXON_PRIME_BOUND:
        if p % exponent == 1 and _is_prime(p):
            return p
        p += 1
    raise ConsistencyError("no suitable Dixon prime below bound")


def _primitive_root(p):
    fac = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise ConsistencyError("no primitive root found")


def _rref_mod(rows, p):
    rows = [list(r) for r in rows]
    cols = len(rows[0]) if rows else 0
    piv = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
        if r == len(rows):
            break
    return [rows[i] for i in range(r)], piv


def _nullspace_mod(mat, p):
    """Basis (rows) of {x : mat @ x = 0} over F_p."""
    d = len(mat)
    rr, piv = _rref_mod(mat, p)
    free = [c for c in range(d) if c not in piv]
    basis = []
    for fc in free:
        x = [0] * d
        x[fc] = 1
        for i, pc in enumerate(piv):
            x[pc] = (-rr[i][fc]) % p
        basis.append(x)
    return basis


def _matvec(M, v, p):
    return [sum(Mr[t] * v[t] for t in range(len(v))) % p for Mr in M]


def _dixon_characters(G: GroupTable):
    n = G.order
    classes = conjugacy_classes(G)
    class_of = class_index(G)
    k = len(classes)
    reps = [c.representative for c in classes]
    sizes = [len(c.members) for c in classes]
    e = G.exponent
    p = _dixon_prime(n, e)
    mult = G.mult
    inv = G.inverse

    # class-sum multiplication constants: K_r K_s = sum_t a[r][s][t] K_t
    M = []
    for r in range(k):
        Mr = [[0] * k for _ in range(k)]
        for t in range(k):
            zt = reps[t]
            for x in classes[r].members:
                Mr[class_of[mult[inv[x]][zt]]][t] += 1
        M.append(Mr)

    # simultaneous diagonalization over F_p (right eigenvectors)
    ident = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    spaces = [(ident, list(range(k)))]
    for r in range(1, k):
        if all(len(B) == 1 for B, _ in spaces):
            break
        spaces = _refine_spaces(spaces, M[r], p)
    if not all(len(B) == 1 for B, _ in spaces) or len(spaces) != k:
        raise ConsistencyError("class-sum matrices failed to split into lines")

    inv_class = [class_of[inv[reps[s]]] for s in range(k)]
    size_inv = [pow(h, p - 2, p) for h in sizes]
    g0 = _primitive_root(p)
    z = pow(g0, (p - 1) // e, p)
    zinv = pow(z, p - 2, p)
    e_inv = pow(e, p - 2, p)

    # power-map classes: pw[r][j] = class of reps[r]^j, j = 0..|reps[r]|-1
    pw = []
    for r in range(k):
        row = []
        y = 0
        d = G.element_order[reps[r]]
        for _ in range(d):
            row.append(class_of[y])
            y = mult[y][reps[r]]
        pw.append(row)

    chars = []
    for B, _ in spaces:
        v = B[0]
        v0_inv = pow(v[0], p - 2, p)
        omega = [(x * v0_inv) % p for x in v]
        t = sum(omega[s] * omega[inv_class[s]] * size_inv[s] for s in range(k)) % p
        c = (n * pow(t, p - 2, p)) % p
        degree = next(
            (d for d in range(1, isqrt(n) + 1) if (d * d) % p == c), None
        )
        if degree is None:
            raise ConsistencyError("could not identify character degree")
        chi_p = [(degree * omega[s] * size_inv[s]) % p for s in range(k)]
        values = []
        for r in range(k):
            d = len(pw[r])
            vec = []
            for kk in range(e):
                acc = 0
                for j in range(e):
                    acc += chi_p[pw[r][j % d]] * pow(zinv, (j * kk) % (p - 1), p)
                m = (acc * e_inv) % p
                if m > degree:
                    raise ConsistencyError(
                        "negative or oversized multiplicity in Dixon lift"
                    )
                vec.append(m)
            if sum(vec) != degree:
                raise ConsistencyError("multiplicity vector does not sum to degree")
            values.append(tuple(vec))
        if values[0][0] != degree:
            raise ConsistencyError("identity class value must equal the degree")
        chars.append(Character(degree, tuple(values)))
    return chars


def _refine_spaces(spaces, M, p):
    new = []
    for B, piv in spaces:
        d = len(B)
        if d == 1:
            new.append((B, piv))
            continue
        W = [_matvec(M, b, p) for b in B]
        A = [[W[i][piv[j]] for j in range(d)] for i in range(d)]
        # invariance check (the class algebra is closed, so this must hold)
        for i in range(d):
            recon = [0] * len(B[0])
            for j in range(d):
                if A[i][j]:
                    for cidx in range(len(B[0])):
                        recon[cidx] = (recon[cidx] + A[i][j] * B[j][cidx]) % p
            if recon != W[i]:
                raise ConsistencyError("eigenspace not invariant under class sum")
        At = [[A[j][i] % p for j in range(d)] for i in range(d)]
        used = 0
        for lam in range(p):
            N = [
                [(At[i][j] - (lam if i == j else 0)) % p for j in range(d)]
                for i in range(d)
            ]
            ns = _nullspace_mod(N, p)
            if not ns:
                continue
            rows = []
            for u in ns:
                row = [0] * len(B[0])
                for i, ui in enumerate(u):
                    if ui:
                        for cidx in range(len(B[0])):
                            row[cidx] = (row[cidx] + ui * B[i][cidx]) % p
                rows.append(row)
            rr, rpiv = _rref_mod(rows, p)
            new.append((rr, rpiv))
            used += len(rr)
            if used == d:
                break
        if used != d:
            raise ConsistencyError("class-sum matrix not diagonalizable over F_p")
    return new


# -- public construction with caching ---------------------------------

_TABLE_CACHE = {}


def character_table(
    G: GroupTable, method: str = "auto", cache_dir: str | None = None
) -> CharacterTable:
    """Complete exact character table of G.

    ``method`` is "auto" (abelian fast path when applicable), "abelian",
    or "dixon".  With ``cache_dir`` the table is persisted as JSON keyed
    by the group fingerprint.
    """
    if method not in ("auto", "abelian", "dixon"):
        raise DomainError(f"unknown character table method {method!r}")
    if method == "abelian" and not G.is_abelian():
        raise DomainError("abelian method requires an abelian group")
    key = (G.fingerprint(), method if method == "dixon" else "auto")
    path = None
    if cache_dir:
        path = os.path.join(cache_dir, f"chartab-{key[0]}-{key[1]}-v{__version__}.json")
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        if cached.group is not G:
            # same Cayley table, different GroupTable instance: rebind
            cached = CharacterTable(G, cached.characters, check=False)
            _TABLE_CACHE[key] = cached
        if path and not os.path.exists(path):
            _write_cache(cache_dir, path, cached)
        return cached
    if path and os.path.exists(path):
        with open(path) as fh:
            table = CharacterTable.from_json(G, json.load(fh), check=False)
        _TABLE_CACHE[key] = table
        return table
    if method == "abelian" or (method == "auto" and G.is_abelian()):
        chars = _abelian_characters(G)
    else:
        chars = _dixon_characters(G)
    table = CharacterTable(G, chars, check=True)
    _TABLE_CACHE[key] = table
    if path:
        _write_cache(cache_dir, path, table)
    return table


def _write_cache(cache_dir, path, table):
    os.makedirs(cache_dir, exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(table.to_json(), fh, sort_keys=True)
    os.replace(tmp, path)


# -- subgroups, induction, decomposition ------------------------------


class SubgroupChars:
    """A subgroup re-indexed as its own group plus its character table
    and the embedding data needed for induction/restriction."""

    def __init__(self, G: GroupTable, elements, parent_table=None):
        self.parent = G
        self.parent_table = parent_table or character_table(G)
        self.H, self.embed = subgroup_table(G, elements)
        self.table = character_table(self.H)
        self.elements = frozenset(self.embed)

    def kernel_in_parent(self, chi) -> frozenset:
        ker = self.table.kernel(chi)
        return frozenset(self.embed[h] for h in ker)


def induced_character(
    tableG: CharacterTable, sub: SubgroupChars, chi
) -> tuple:
    """chi^G as exact per-class Cyc values:
    chi^G(g) = (1/|H|) sum_{t in G} chi°(t g t^-1)."""
    G = tableG.group
    eG = tableG.exponent
    eH = sub.table.exponent
    assert eG % eH == 0
    scale = eG // eH
    chi = sub.table.characters[sub.table.index_of(chi)]
    hsize = sub.H.order
    pos = {g: i for i, g in enumerate(sub.embed)}
    out = []
    for cl in tableG.classes:
        acc = Cyc.zero(eG)
        for x in cl.members:
            hi = pos.get(x)
            if hi is None:
                continue
            mvec = chi.values[sub.table.class_of[hi]]
            lifted = [0] * eG
            for kk, m in enumerate(mvec):
                lifted[kk * scale] += m
            acc = acc + Cyc.from_exponent_vector(eG, lifted)
        centralizer = Fraction(G.order, len(cl.members))
        out.append(acc * centralizer / hsize)
    return tuple(out)


def decompose(tableG: CharacterTable, values) -> tuple:
    """Multiplicities <f, chi> for every irreducible chi; the exact
    reconstruction Sum m_chi chi = f is verified."""
    mults = []
    for i, chi in enumerate(tableG.characters):
        m = tableG.inner(values, tableG.class_values(i))
        if m.denominator != 1 or m < 0:
            raise DecompositionError(
                f"class function is not a character: <f, chi_{i}> = {m}"
            )
        mults.append(int(m))
    for ci in range(len(tableG.classes)):
        acc = Cyc.zero(tableG.exponent)
        for i, m in enumerate(mults):
            if m:
                acc = acc + tableG.class_values(i)[ci] * m
        if acc != values[ci]:
            raise DecompositionError("reconstruction from multiplicities failed")
    return tuple(mults)


def restriction_multiplicity(
    tableG: CharacterTable, sub: SubgroupChars, phi, chi
) -> int:
    """<phi|_H, chi>_H via exact cyclotomic arithmetic (equals
    <phi, chi^G>_G by Frobenius reciprocity)."""
    eG = tableG.exponent
    eH = sub.table.exponent
    scale = eG // eH
    phi = tableG.characters[tableG.index_of(phi)]
    chi = sub.table.characters[sub.table.index_of(chi)]
    acc = Cyc.zero(eG)
    for hi, g in enumerate(sub.embed):
        pv = multvec_to_cyc(eG, phi.values[tableG.class_of[g]])
        cvec = chi.values[sub.table.class_of[hi]]
        lifted = [0] * eG
        for kk, m in enumerate(cvec):
            lifted[kk * scale] += m
        acc = acc + pv * Cyc.from_exponent_vector(eG, lifted).conj()
    m = (acc / sub.H.order).as_fraction()
    if m.denominator != 1 or m < 0:
        raise ConsistencyError("restriction multiplicity not a non-negative integer")
    return int(m)


def find_constituent_avoiding(
    tableG: CharacterTable,
    sub: SubgroupChars,
    chi,
    avoid,
    extra: int | None = None,
) -> Character:
    """An irreducible constituent phi of chi^G with Ker(phi) disjoint
    from ``avoid`` (and, when given, with ``extra`` outside Ker(phi))."""
    avoid = frozenset(avoid)
    ker_par = sub.kernel_in_parent(chi)
    if avoid & ker_par:
        raise DomainError("avoid set meets Ker(chi)")
    if not avoid <= sub.elements:
        raise DomainError("avoid set must lie inside the subgroup")
    if extra is not None:
        vals = induced_character(tableG, sub, chi)
        if not vals[tableG.class_of[extra]].is_zero():
            raise DomainError("induced character does not vanish at extra")
    for i, phi in enumerate(tableG.characters):
        if restriction_multiplicity(tableG, sub, phi, chi) == 0:
            continue
        ker = tableG.kernel(i)
        if avoid & ker:
            continue
        if extra is not None and extra in ker:
            continue
        return phi
    raise ConsistencyError(
        "no constituent avoiding the kernel condition exists; this "
        "contradicts the induced-character lemma"
    )
