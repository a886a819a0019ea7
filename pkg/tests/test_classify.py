import pytest

from isoprod.classify import (
    ClassificationRecord,
    SearchBounds,
    acts_trivially,
    check_conformance,
    classify_all,
    compute_aut0,
)
from isoprod.covers import GeneratingVector
from isoprod.errors import DomainError
from isoprod.groups import abelian_element, build_group
from isoprod.surfaces import build_surface, example46_construct


def _klein_surface():
    G = build_group("ab:2,2")
    a = abelian_element(G, (1, 0))
    b = abelian_element(G, (0, 1))
    vC = GeneratingVector(G, 1, (a,), (b,), (a, a))
    vD = GeneratingVector(G, 1, (a,), (b,), (b, b))
    return G, a, b, build_surface(vC, vD)


def test_acts_trivially():
    G, a, b, S = _klein_surface()
    sigma = G.mult[a][b]
    assert acts_trivially(S, sigma)
    assert not acts_trivially(S, a)
    assert not acts_trivially(S, b)
    assert acts_trivially(S, 0)


def test_acts_trivially_requires_central():
    G = build_group("sym:3")
    t = next(g for g in range(6) if G.element_order[g] == 2)
    c = next(g for g in range(6) if G.element_order[g] == 3)
    vC = GeneratingVector(G, 1, (c,), (c,), (t, t))
    vD = GeneratingVector(G, 1, (t,), (t,), (c, c, c))
    S = build_surface(vC, vD)
    with pytest.raises(DomainError):
        acts_trivially(S, t)


def test_compute_aut0_klein():
    G, a, b, S = _klein_surface()
    assert compute_aut0(S) == frozenset([0, G.mult[a][b]])


def test_compute_aut0_trivial_for_s3():
    G = build_group("sym:3")
    t = next(g for g in range(6) if G.element_order[g] == 2)
    c = next(g for g in range(6) if G.element_order[g] == 3)
    vC = GeneratingVector(G, 1, (c,), (c,), (t, t))
    vD = GeneratingVector(G, 1, (t,), (t,), (c, c, c))
    S = build_surface(vC, vD)
    assert compute_aut0(S) == frozenset([0])


def test_conformance_positive():
    G, a, b, S = _klein_surface()
    rec = ClassificationRecord(S, compute_aut0(S))
    ok, reason = check_conformance(rec)
    assert ok and reason == ""


def test_conformance_needs_nontrivial():
    G = build_group("sym:3")
    t = next(g for g in range(6) if G.element_order[g] == 2)
    c = next(g for g in range(6) if G.element_order[g] == 3)
    S = build_surface(
        GeneratingVector(G, 1, (c,), (c,), (t, t)),
        GeneratingVector(G, 1, (t,), (t,), (c, c, c)),
    )
    with pytest.raises(DomainError):
        check_conformance(ClassificationRecord(S, compute_aut0(S)))


def test_conformance_example_families():
    for fam in (1, 2):
        S = example46_construct(fam, 1, 2, 1, 2)
        rec = ClassificationRecord(S, compute_aut0(S))
        ok, reason = check_conformance(rec)
        assert ok, (fam, reason)


def test_bounds_validation():
    with pytest.raises(DomainError):
        SearchBounds(max_group_order=0).validate()
    with pytest.raises(DomainError):
        SearchBounds(genus_cap=1).validate()
    with pytest.raises(DomainError):
        SearchBounds(base_genera=((0, 1),)).validate()
    SearchBounds().validate()


def test_classify_small_sweep():
    bounds = SearchBounds(
        max_group_order=4,
        max_branch_points_r=4,
        max_branch_points_s=4,
        genus_cap=33,
    )
    records, summary = classify_all(bounds, ["ab:2", "ab:3", "ab:4", "ab:2,2"])
    assert summary["errors"] == 0
    assert summary["conformance_failures"] == 0
    assert summary["nontrivial_aut0"] > 0
    assert all(r["group"] == "ab:2,2" for r in records)
    assert all(r["conforms"] for r in records)
    # weights add up to the summary count
    assert sum(r["weight"] for r in records) == summary["nontrivial_aut0"]


def test_classify_weights_against_bruteforce():
    """The bucketed sweep's surface count matches a direct pairing of
    individually enumerated vectors for one small group."""
    from isoprod.covers import enumerate_vectors, stabilizer_union

    G = build_group("ab:2,2")
    covers = [
        c
        for c in enumerate_vectors(
            G, 1, 4, genus_cap=33, dedup=False, branch_order_cap=8
        )
    ]
    sigma = {i: stabilizer_union(c.vector) for i, c in enumerate(covers)}
    total = 0
    nontrivial = 0
    from isoprod.classify import compute_aut0 as aut0_of
    from isoprod.surfaces import build_surface as build

    pairs = 0
    for i, cC in enumerate(covers):
        for j, cD in enumerate(covers):
            if sigma[i] & sigma[j] != frozenset([0]):
                continue
            total += 1
            pairs += 1
            if pairs <= 200:  # spot-check aut0 on a prefix
                S = build(cC, cD)
                if len(aut0_of(S)) > 1:
                    nontrivial += 1
    bounds = SearchBounds(
        max_group_order=4,
        max_branch_points_r=4,
        max_branch_points_s=4,
        genus_cap=33,
    )
    _, summary = classify_all(bounds, ["ab:2,2"])
    assert summary["surfaces"] == total


def test_classify_deterministic_and_parallel():
    bounds = SearchBounds(
        max_group_order=8,
        max_branch_points_r=2,
        max_branch_points_s=2,
        genus_cap=33,
    )
    groups = ["ab:2,2", "ab:2,4", "dih:4", "quat:8"]
    r1, s1 = classify_all(bounds, groups, workers=1)
    r2, s2 = classify_all(bounds, groups, workers=2)
    assert r1 == r2
    assert s1 == s2


def test_classify_full_detail():
    bounds = SearchBounds(
        max_group_order=8,
        max_branch_points_r=3,
        max_branch_points_s=3,
        genus_cap=33,
    )
    records, summary = classify_all(bounds, ["sym:3"], detail="full")
    assert records and all(r["aut0_order"] == 1 for r in records)
    assert sum(r["weight"] for r in records) == summary["surfaces"]


def test_classify_skips_oversized_groups():
    bounds = SearchBounds(max_group_order=4)
    records, summary = classify_all(bounds, ["sym:4"])
    assert records == [] and summary["surfaces"] == 0
