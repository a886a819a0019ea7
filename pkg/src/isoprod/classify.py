"""Aut_0 detection and exhaustive classification sweeps.

The kernel criterion: a central sigma fails to act trivially on H^2 iff
some irreducible chi has sigma outside Ker(chi) while both H^1(C)^chi and
H^1(D)^conj(chi) are nonzero.  Candidates for Aut_0 live in the center of
G, identified with automorphisms of S via sigma -> (sigma, 1) mod the
diagonal.

The sweep driver buckets generating vectors by the data the criterion
actually consumes (branch-class multiset, stabilizer union, uniform
branch element), so each emitted record stands for ``weight`` many
vector pairs with identical Aut_0 and conformance outcome.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import character_table
from .covers import (
    GeneratingVector,
    _conj_cyclic,
    _raw_tuples,
    hurwitz_genus,
    isotypic_dimensions,
)
from .errors import DomainError, IsoprodError
from .groups import GroupTable, abelian_invariants, build_group, center, class_index
from .surfaces import UnmixedSurface, build_surface

DEFAULT_BASE_GENERA = ((1, 1),)
ALL_BASE_GENERA = ((1, 1), (1, 2), (2, 1), (2, 2))


@dataclass
class SearchBounds:
    max_group_order: int = 16
    max_branch_points_r: int = 4
    max_branch_points_s: int = 4
    genus_cap: int = 33
    base_genera: tuple = DEFAULT_BASE_GENERA
    branch_order_cap: int | None = 8

    def validate(self):
        if self.max_group_order < 1:
            raise DomainError("max_group_order must be positive")
        if self.max_branch_points_r < 0 or self.max_branch_points_s < 0:
            raise DomainError("branch point bounds must be >= 0")
        if self.genus_cap < 2:
            raise DomainError("genus_cap must be >= 2")
        for pair in self.base_genera:
            if tuple(pair) not in ALL_BASE_GENERA:
                raise DomainError(f"unsupported base genus pair {pair}")
        return self

    def to_json(self):
        return {
            "max_group_order": self.max_group_order,
            "max_branch_points_r": self.max_branch_points_r,
            "max_branch_points_s": self.max_branch_points_s,
            "genus_cap": self.genus_cap,
            "base_genera": [list(p) for p in self.base_genera],
            "branch_order_cap": self.branch_order_cap,
        }


@dataclass
class ClassificationRecord:
    surface: UnmixedSurface
    aut0: frozenset
    conforms: bool | None = None
    reason: str = ""
    weight: int = 1


# -- the kernel criterion ---------------------------------------------


def _kernel_masks(table):
    cache = table.group._cache.setdefault("ker_masks", None)
    if cache is None:
        masks = []
        for i in range(len(table.characters)):
            m = 0
            for g in table.kernel(i):
                m |= 1 << g
            masks.append(m)
        cmask = 0
        for g in center(table.group):
            cmask |= 1 << g
        cache = (tuple(masks), cmask)
        table.group._cache["ker_masks"] = cache
    return cache


def _aut0_mask(table, dimsC_positive_mask, dimsD_conj_positive_mask):
    ker_masks, center_mask = _kernel_masks(table)
    relevant = dimsC_positive_mask & dimsD_conj_positive_mask
    out = center_mask
    i = 0
    m = relevant
    while m and out != 1:
        if m & 1:
            out &= ker_masks[i]
        m >>= 1
        i += 1
    return out


def _mask_to_set(mask):
    out = set()
    g = 0
    while mask:
        if mask & 1:
            out.add(g)
        mask >>= 1
        g += 1
    return frozenset(out)


def acts_trivially(S: UnmixedSurface, sigma: int) -> bool:
    """True iff the central element sigma acts trivially on H^2(S, QQ)
    (and then on all of H^*), by the kernel criterion."""
    G = S.group
    if sigma not in center(G):
        raise DomainError(f"element {sigma} is not central")
    table = character_table(G)
    dimsC = isotypic_dimensions(S.cover_C, table)
    dimsD = isotypic_dimensions(S.cover_D, table)
    for i in range(len(table.characters)):
        if dimsC[i] > 0 and dimsD[table.conj_index[i]] > 0:
            if sigma not in table.kernel(i):
                return False
    return True


def compute_aut0(S: UnmixedSurface) -> frozenset:
    """{sigma in Z_G : sigma acts trivially on H^*(S, QQ)}; always a
    subgroup containing the identity."""
    table = character_table(S.group)
    dimsC = isotypic_dimensions(S.cover_C, table)
    dimsD = isotypic_dimensions(S.cover_D, table)
    maskC = sum(1 << i for i, d in enumerate(dimsC) if d > 0)
    maskDc = sum(
        1 << i
        for i in range(len(dimsD))
        if dimsD[table.conj_index[i]] > 0
    )
    return _mask_to_set(_aut0_mask(table, maskC, maskDc))


# -- conformance with the classification shape ------------------------


def _uniform_gamma(G, gammas):
    if gammas and all(g == gammas[0] for g in gammas):
        return gammas[0]
    return None


def check_conformance(rec: ClassificationRecord):
    """Does a nontrivial-Aut_0 surface have the classified shape?

    Shape: abelian group with invariant factors (2m, 2mn) or
    (2, 2m, 2mn); both base genera 1; each vector's branch elements all
    equal to a single order-2 element, distinct between the two factors;
    even branch-point counts; Aut_0 = {1, sigma_1 tau_1}.
    Returns (bool, reason).
    """
    if len(rec.aut0) <= 1:
        raise DomainError("conformance check applies to nontrivial Aut_0 only")
    S = rec.surface
    G = S.group
    if not G.is_abelian():
        return False, "group is not abelian"
    f = abelian_invariants(G)
    if len(f) == 2:
        if f[0] % 2 != 0:
            return False, f"invariant factors {f} not of shape (2m, 2mn)"
    elif len(f) == 3:
        if f[0] != 2 or f[1] % 2 != 0:
            return False, f"invariant factors {f} not of shape (2, 2m, 2mn)"
    else:
        return False, f"invariant factors {f} have length {len(f)}"
    vC, vD = S.cover_C.vector, S.cover_D.vector
    if vC.base_genus != 1 or vD.base_genus != 1:
        return False, "base genera are not both 1"
    s1 = _uniform_gamma(G, vC.gammas)
    t1 = _uniform_gamma(G, vD.gammas)
    if s1 is None or t1 is None:
        return False, "branch elements are not all equal on each factor"
    if G.element_order[s1] != 2 or G.element_order[t1] != 2:
        return False, "uniform branch elements are not involutions"
    if s1 == t1:
        return False, "the two branch involutions coincide"
    if len(vC.gammas) % 2 != 0 or len(vD.gammas) % 2 != 0:
        return False, "branch point counts are not both even"
    expected = frozenset([0, G.mult[s1][t1]])
    if rec.aut0 != expected:
        return False, "Aut_0 is not generated by sigma_1 tau_1"
    return True, ""


# -- sweep driver ------------------------------------------------------


def _cover_buckets(G, table, b, max_r, genus_cap, branch_order_cap):
    """Bucket every valid generating vector by the classification
    signature.  Key: (b, r, genus, dims-positivity mask, conj-dims mask,
    stabilizer-union mask, uniform gamma or -1)."""
    n = G.order
    orders = G.element_order
    cls_of = class_index(G)
    nchars = len(table.characters)
    trivial = table.trivial_index
    degrees = [c.degree for c in table.characters]
    # l[class][char]
    class_reps = [c.representative for c in conjugacy_from(table)]
    ltab = [
        [table.trivial_multiplicity(i, rep) for i in range(nchars)]
        for rep in class_reps
    ]
    sig_of_class = {}

    def class_data(cls_key, r, genus_cap):
        """(status, genus, maskpos, maskconj, sig); status is "ok",
        "small", "big" (genus over the cap) or "bad"."""
        key = (cls_key, r)
        out = sig_of_class.get(key)
        if out is not None:
            return out
        try:
            genus = hurwitz_genus(
                n, b, tuple(orders[class_reps[c]] for c in cls_key)
            )
        except IsoprodError:
            genus = None
        if genus is None:
            out = ("bad", None, 0, 0, 0)
        elif genus < 2:
            out = ("small", genus, 0, 0, 0)
        elif genus > genus_cap:
            out = ("big", genus, 0, 0, 0)
        else:
            dims = []
            for i in range(nchars):
                if i == trivial:
                    dims.append(2 * b)
                else:
                    d = degrees[i] * (2 * b - 2 + r) - sum(
                        ltab[c][i] for c in cls_key
                    )
                    dims.append(d)
            maskpos = sum(1 << i for i, d in enumerate(dims) if d > 0)
            maskconj = sum(
                1 << i
                for i in range(nchars)
                if dims[table.conj_index[i]] > 0
            )
            sig = 1
            for c in cls_key:
                for x in _conj_cyclic(G, class_reps[c]):
                    sig |= 1 << x
            out = ("ok", genus, maskpos, maskconj, sig)
        sig_of_class[key] = out
        return out

    allowed = [
        g
        for g in range(1, n)
        if branch_order_cap is None or orders[g] <= branch_order_cap
    ]
    buckets = {}
    truncated = 0
    for r in range(max_r + 1):
        for ab, gammas, _sid in _raw_tuples(G, b, r, allowed):
            cls_key = tuple(sorted(cls_of[g] for g in gammas))
            status, genus, maskpos, maskconj, sig = class_data(
                cls_key, r, genus_cap
            )
            if status == "big":
                truncated += 1
                continue
            if status != "ok":
                continue
            u = gammas[0] if gammas and all(g == gammas[0] for g in gammas) else -1
            key = (r, genus, maskpos, maskconj, sig, u)
            slot = buckets.get(key)
            if slot is None:
                buckets[key] = [1, (ab, gammas)]
            else:
                slot[0] += 1
    return buckets, truncated


def conjugacy_from(table):
    return table.classes


def _classify_group(spec, bounds: SearchBounds, cache_dir=None, detail="nontrivial"):
    """All classification records for one group.  Returns
    (records, summary_counts); records are JSON-ready dicts."""
    counts = {
        "surfaces": 0,
        "nontrivial_aut0": 0,
        "conformance_failures": 0,
        "errors": 0,
    }
    records = []
    try:
        G = build_group(spec, order_cap=max(bounds.max_group_order, 128))
    except IsoprodError:
        counts["errors"] += 1
        return records, counts
    if G.order > bounds.max_group_order:
        return records, counts
    table = character_table(G, cache_dir=cache_dir)
    bucket_cache = {}

    def buckets_for(b, max_r):
        key = (b, max_r)
        if key not in bucket_cache:
            bucket_cache[key] = _cover_buckets(
                G, table, b, max_r, bounds.genus_cap, bounds.branch_order_cap
            )[0]
        return bucket_cache[key]

    for bC, bD in bounds.base_genera:
        bks_C = buckets_for(bC, bounds.max_branch_points_r)
        bks_D = buckets_for(bD, bounds.max_branch_points_s)
        for keyC in sorted(bks_C):
            cntC, exC = bks_C[keyC]
            rC, gC, maskC, _mcC, sigC, uC = keyC
            for keyD in sorted(bks_D):
                cntD, exD = bks_D[keyD]
                rD, gD, _mD, maskDc, sigD, uD = keyD
                if sigC & sigD != 1:
                    continue
                weight = cntC * cntD
                counts["surfaces"] += weight
                a_mask = _aut0_mask(table, maskC, maskDc)
                if a_mask == 1 and detail != "full":
                    continue
                try:
                    rec = _build_record(
                        G, table, bC, bD, exC, exD, a_mask, weight
                    )
                except IsoprodError as exc:
                    counts["errors"] += 1
                    records.append(
                        {
                            "group": spec,
                            "error": str(exc),
                            "vC": _vec_json(spec, bC, exC),
                            "vD": _vec_json(spec, bD, exD),
                        }
                    )
                    continue
                if len(rec.aut0) > 1:
                    counts["nontrivial_aut0"] += weight
                    if not rec.conforms:
                        counts["conformance_failures"] += weight
                records.append(_record_json(spec, rec))
    records.sort(key=_record_sort_key)
    return records, counts


def _vec_json(spec, b, ex):
    ab, gammas = ex
    return {
        "group": spec,
        "b": b,
        "alphas": list(ab[:b]),
        "betas": list(ab[b:]),
        "gammas": list(gammas),
    }


def _build_record(G, table, bC, bD, exC, exD, a_mask, weight):
    abC, gammasC = exC
    abD, gammasD = exD
    vC = GeneratingVector(G, bC, abC[:bC], abC[bC:], gammasC)
    vD = GeneratingVector(G, bD, abD[:bD], abD[bD:], gammasD)
    S = build_surface(vC, vD)
    aut0 = compute_aut0(S)
    if aut0 != _mask_to_set(a_mask):
        raise IsoprodError(
            "bucketed Aut_0 disagrees with the per-surface computation"
        )
    rec = ClassificationRecord(S, aut0, weight=weight)
    if len(aut0) > 1:
        rec.conforms, rec.reason = check_conformance(rec)
    return rec


def _record_json(spec, rec: ClassificationRecord):
    S = rec.surface
    inv = S.invariants
    return {
        "group": spec,
        "vC": S.cover_C.vector.to_json(),
        "vD": S.cover_D.vector.to_json(),
        "genus_C": S.cover_C.genus,
        "genus_D": S.cover_D.genus,
        "q": inv.q,
        "pg": inv.pg,
        "chi": inv.chi,
        "K2": inv.K2,
        "b2": inv.b2,
        "aut0": sorted(rec.aut0),
        "aut0_labels": [S.group.labels[g] for g in sorted(rec.aut0)],
        "aut0_order": len(rec.aut0),
        "conforms": rec.conforms,
        "reason": rec.reason,
        "weight": rec.weight,
    }


def _record_sort_key(r):
    if "error" in r:
        return (r["group"], 1, str(sorted(r.items())))
    return (
        r["group"],
        0,
        r["vC"]["b"],
        r["vD"]["b"],
        len(r["vC"]["gammas"]),
        len(r["vD"]["gammas"]),
        r["vC"]["gammas"],
        r["vD"]["gammas"],
        r["vC"]["alphas"],
        r["vD"]["alphas"],
    )


def _worker(args):
    spec, bounds_json, cache_dir, detail = args
    bounds = SearchBounds(
        max_group_order=bounds_json["max_group_order"],
        max_branch_points_r=bounds_json["max_branch_points_r"],
        max_branch_points_s=bounds_json["max_branch_points_s"],
        genus_cap=bounds_json["genus_cap"],
        base_genera=tuple(tuple(p) for p in bounds_json["base_genera"]),
        branch_order_cap=bounds_json["branch_order_cap"],
    )
    return spec, _classify_group(spec, bounds, cache_dir, detail)


def classify_all(
    bounds: SearchBounds,
    groups,
    workers: int = 1,
    cache_dir=None,
    detail: str = "nontrivial",
):
    """Classify every admissible surface over the given group specs.

    Returns (records, summary).  With ``detail="nontrivial"`` (default)
    per-pair records are emitted only for nontrivial Aut_0; every pair is
    still counted in the summary.  Deterministic for a fixed input.
    """
    bounds.validate()
    groups = list(groups)
    summary = {
        "surfaces": 0,
        "nontrivial_aut0": 0,
        "conformance_failures": 0,
        "errors": 0,
    }
    all_records = []
    jobs = [(spec, bounds.to_json(), cache_dir, detail) for spec in groups]
    if workers > 1 and len(jobs) > 1:
        import multiprocessing as mp

        ctx = mp.get_context("fork")
        with ctx.Pool(workers) as pool:
            results = pool.map(_worker, jobs)
    else:
        results = [_worker(j) for j in jobs]
    for _spec, (records, counts) in results:
        all_records.extend(records)
        for k in summary:
            summary[k] += counts[k]
    return all_records, summary
