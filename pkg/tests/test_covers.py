import pytest

from isoprod.characters import character_table
from isoprod.covers import (
    GeneratingVector,
    broughton_dimension,
    broughton_multiplicity,
    enumerate_vectors,
    hurwitz_genus,
    isotypic_dimensions,
    stabilizer_union,
    validate_vector,
)
from isoprod.errors import (
    BranchOrderError,
    GenerationError,
    GenusError,
    RelationError,
)
from isoprod.groups import abelian_element, build_group

from oracles import broughton_complex, brute_vectors, genus_float


def test_hurwitz_known_values():
    # |G|=4, b=1, two branch points of order 2: 2g-2 = 4(0+1) -> g=3
    assert hurwitz_genus(4, 1, (2, 2)) == 3
    # |G|=6, b=1, two branch points of order 2: g = 4
    assert hurwitz_genus(6, 1, (2, 2)) == 4
    # unramified: g-1 = |G|(b-1)
    assert hurwitz_genus(5, 2, ()) == 6
    # classical: |G|=2, b=0, six order-2 points -> genus 2
    assert hurwitz_genus(2, 0, (2,) * 6) == 2


def test_hurwitz_against_float_oracle():
    for order in (2, 4, 6, 8, 12):
        for b in (0, 1, 2):
            for orders in [(), (2, 2), (2, 3, 6), (4, 4), (2, 2, 2, 2)]:
                if any(order % m for m in orders):
                    continue
                try:
                    got = hurwitz_genus(order, b, orders)
                except GenusError:
                    continue
                assert got == genus_float(order, b, orders)


def test_hurwitz_rejects_nonintegral():
    with pytest.raises(GenusError):
        hurwitz_genus(2, 0, (2,))  # 2g-2 = -4+1 not integral
    with pytest.raises(GenusError):
        hurwitz_genus(3, 0, (3,))  # 2g-2 = -4, negative genus
    assert hurwitz_genus(3, 0, (3, 3)) == 0  # the sphere is fine


def test_validate_vector():
    G = build_group("ab:2,2")
    a = abelian_element(G, (1, 0))
    b = abelian_element(G, (0, 1))
    v = GeneratingVector(G, 1, (a,), (b,), (a, a))
    cover = validate_vector(v)
    assert cover.genus == 3
    # relation violated
    with pytest.raises(RelationError):
        validate_vector(GeneratingVector(G, 1, (a,), (b,), (a,)))
    # identity as branch element
    with pytest.raises(BranchOrderError):
        validate_vector(GeneratingVector(G, 1, (a,), (b,), (0, 0)))
    # fails to generate
    with pytest.raises(GenerationError):
        validate_vector(GeneratingVector(G, 1, (a,), (a,), (a, a)))


def test_stabilizer_union_abelian():
    G = build_group("ab:2,2")
    a = abelian_element(G, (1, 0))
    b = abelian_element(G, (0, 1))
    v = GeneratingVector(G, 1, (a,), (b,), (a, a))
    assert stabilizer_union(v) == frozenset([0, a])


def test_stabilizer_union_conjugates():
    """In S3 the stabilizer union of a transposition-branched cover
    contains all three transpositions."""
    G = build_group("sym:3")
    transpositions = [g for g in range(6) if G.element_order[g] == 2]
    t = transpositions[0]
    threecycle = next(g for g in range(6) if G.element_order[g] == 3)
    v = GeneratingVector(G, 1, (threecycle,), (t,), (t, t))
    assert stabilizer_union(v) == frozenset([0] + transpositions)


def test_raw_count_matches_bruteforce():
    """Enumeration without dedup agrees with an independent nested-loop
    search on tiny groups."""
    for spec in ["ab:2", "ab:3", "ab:2,2", "sym:3"]:
        G = build_group(spec)
        for r in (0, 1, 2):
            brute = [
                (ab, gam)
                for ab, gam in brute_vectors(G, 1, r)
            ]
            stream = enumerate_vectors(
                G, 1, r, genus_cap=1000, dedup=False, min_genus=0
            )
            got = [
                (c.vector.alphas + c.vector.betas, c.vector.gammas)
                for c in stream
                if len(c.vector.gammas) == r
            ]
            assert sorted(got) == sorted(brute), (spec, r)


def test_raw_count_z2():
    """(alpha, beta; gamma, gamma) over Z2: gamma is forced to the
    involution, alpha and beta free -- 4 raw tuples."""
    G = build_group("ab:2")
    assert len(brute_vectors(G, 1, 2)) == 4
    stream = enumerate_vectors(G, 1, 2, dedup=False, min_genus=0)
    assert sum(1 for c in stream if c.vector.gammas) == 4


def test_genus_cap_sets_truncated():
    G = build_group("ab:2,2")
    stream = enumerate_vectors(G, 1, 4, genus_cap=3, dedup=False)
    covers = list(stream)
    assert stream.truncated  # r=4 vectors have genus 5
    assert all(c.genus <= 3 for c in covers)


def test_dedup_orbits():
    """Dedup emits exactly one representative per automorphism orbit."""
    G = build_group("ab:2,2")
    full = {
        (c.vector.alphas + c.vector.betas, c.vector.gammas)
        for c in enumerate_vectors(G, 1, 2, dedup=False)
    }
    reps = list(enumerate_vectors(G, 1, 2, dedup=True))
    from isoprod.groups import automorphisms

    auts = automorphisms(G)
    covered = set()
    for c in reps:
        ab = c.vector.alphas + c.vector.betas
        for phi in auts:
            covered.add(
                (
                    tuple(phi[x] for x in ab),
                    tuple(phi[x] for x in c.vector.gammas),
                )
            )
    assert covered == full
    # orbits are free, so the count divides evenly
    assert len(full) == len(reps) * len(auts) or len(full) < len(reps) * len(auts)


def test_exact_branch_orders():
    G = build_group("ab:2,2")
    covers = list(
        enumerate_vectors(G, 1, 4, dedup=False, exact_branch_orders=[2, 2])
    )
    assert covers and all(c.vector.branch_orders == (2, 2) for c in covers)
    assert all(c.genus == 3 for c in covers)


def test_broughton_dimensions_sum():
    G = build_group("ab:2,2")
    t = character_table(G)
    a = abelian_element(G, (1, 0))
    b = abelian_element(G, (0, 1))
    cover = validate_vector(GeneratingVector(G, 1, (a,), (b,), (a, a)))
    dims = isotypic_dimensions(cover, t)
    assert sum(dims) == 2 * cover.genus == 6
    assert dims[t.trivial_index] == 2


def test_broughton_against_complex_oracle():
    for spec in ["ab:2,2", "sym:3", "dih:4", "quat:8"]:
        G = build_group(spec)
        t = character_table(G)
        count = 0
        for cover in enumerate_vectors(G, 1, 3, genus_cap=20, dedup=True):
            for i in range(len(t.characters)):
                m = broughton_multiplicity(cover, t, i)
                assert m == broughton_complex(G, t, cover, i)
                assert broughton_dimension(cover, t, i) == (
                    t.characters[i].degree * m
                )
            count += 1
            if count >= 12:
                break


def test_unramified_genus_one_quotient():
    """b=1, r=0 forces commuting generators; for Z4 the covering curve is
    elliptic (g=1), below the surface-construction threshold."""
    G = build_group("ab:4")
    covers = list(enumerate_vectors(G, 1, 0, dedup=False, min_genus=0))
    assert covers and all(c.genus == 1 for c in covers)
