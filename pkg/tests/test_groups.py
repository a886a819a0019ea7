import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isoprod.errors import GroupSpecError, SizeError, TableError
from isoprod.groups import (
    abelian_element,
    abelian_invariants,
    all_subgroups,
    automorphisms,
    build_group,
    builtin_groups_upto,
    center,
    commutator_subgroup,
    conjugacy_classes,
    cyclic_subgroup,
    subgroup_table,
)


def test_cyclic_group_basics():
    G = build_group("ab:6")
    assert G.order == 6
    assert G.identity == 0
    assert G.exponent == 6
    assert G.is_abelian()
    assert sorted(G.element_order) == [1, 2, 3, 3, 6, 6]


def test_symmetric_group():
    G = build_group("sym:3")
    assert G.order == 6
    assert not G.is_abelian()
    assert sorted(len(c.members) for c in conjugacy_classes(G)) == [1, 2, 3]
    assert center(G) == frozenset([0])
    assert len(commutator_subgroup(G)) == 3


def test_dihedral_vs_perm():
    """dih:4 should match its permutation-group presentation up to the
    isomorphism-invariant signature."""
    D = build_group("dih:4")
    P = build_group("perm:(1 2 3 4);(1 3)")
    assert D.invariant_signature() == P.invariant_signature()


def test_quat8_structure():
    Q = build_group("quat:8")
    assert Q.order == 8
    assert sorted(Q.element_order) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert len(center(Q)) == 2
    # every subgroup of Q8 is normal; here just count them: 1,1,3,1 of
    # orders 1,2,4,8 respectively
    sizes = sorted(len(s) for s in all_subgroups(Q))
    assert sizes == [1, 2, 4, 4, 4, 8]


def test_alt4():
    G = build_group("alt:4")
    assert G.order == 12
    assert [len(c.members) for c in conjugacy_classes(G)] == [1, 3, 4, 4]


def test_identity_must_be_zero():
    # a valid Z2 table with the identity at index 1
    from isoprod.groups import GroupTable

    with pytest.raises(TableError):
        GroupTable([[1, 0], [0, 1]])


def test_non_latin_rejected():
    from isoprod.groups import GroupTable

    with pytest.raises(TableError):
        GroupTable([[0, 1], [1, 1]])


def test_non_associative_rejected():
    from isoprod.groups import GroupTable

    # a quasigroup of order 5 that is not associative
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(TableError):
        GroupTable(t)


def test_order_cap():
    with pytest.raises(SizeError):
        build_group("ab:200", order_cap=128)


def test_bad_specs():
    for spec in ["", "foo", "xyz:3", "ab:", "ab:0", "dih:x", "sym:9", "alt:2"]:
        with pytest.raises(GroupSpecError):
            build_group(spec)


def test_cayley_roundtrip(tmp_path):
    G = build_group("sym:3")
    path = tmp_path / "s3.json"
    path.write_text(
        json.dumps({"order": 6, "table": [list(r) for r in G.mult]})
    )
    H = build_group(f"cayley:{path}")
    assert H.mult == G.mult


def test_cayley_identity_relabel(tmp_path):
    G = build_group("ab:3")
    n = G.order
    perm = [1, 0, 2]  # move the identity to index 1
    table = [
        [perm.index(G.mult[perm[i]][perm[j]]) for j in range(n)]
        for i in range(n)
    ]
    path = tmp_path / "c3.json"
    path.write_text(json.dumps({"table": table}))
    H = build_group(f"cayley:{path}")
    assert H.identity == 0
    assert H.invariant_signature() == G.invariant_signature()


def test_cayley_missing_file():
    with pytest.raises(GroupSpecError):
        build_group("cayley:/nonexistent/file.json")


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=2, max_value=6), min_size=1, max_size=3))
def test_abelian_invariants_roundtrip(factors):
    order = 1
    for d in factors:
        order *= d
    if order > 64:
        return
    G = build_group("ab:" + ",".join(map(str, factors)))
    inv = abelian_invariants(G)
    # invariant factors form a divisibility chain with the right product
    prod = 1
    for a, b in zip(inv, inv[1:]):
        assert b % a == 0
    for d in inv:
        prod *= d
    assert prod == order
    # and the exponent is the last factor
    assert G.exponent == inv[-1]


def test_abelian_invariants_canonicalize():
    # Z2 x Z6 and Z2 x Z2 x Z3 are the same group
    a = abelian_invariants(build_group("ab:2,6"))
    b = abelian_invariants(build_group("ab:2,2,3"))
    assert a == b == (2, 6)
    assert abelian_invariants(build_group("ab:3,4")) == (12,)


def test_abelian_element():
    G = build_group("ab:2,4")
    g = abelian_element(G, (1, 2))
    assert G.element_order[g] == 2
    assert G.mult[abelian_element(G, (1, 0))][abelian_element(G, (0, 2))] == g


def test_conjugacy_class_order():
    """Classes come sorted by (size, representative); identity first."""
    for spec in ["sym:4", "dih:6", "quat:8"]:
        G = build_group(spec)
        cls = conjugacy_classes(G)
        assert cls[0].members == (0,)
        keys = [(len(c.members), c.representative) for c in cls]
        assert keys == sorted(keys)


def test_cyclic_subgroup():
    G = build_group("ab:8")
    g = next(x for x in range(8) if G.element_order[x] == 8)
    assert cyclic_subgroup(G, g) == frozenset(range(8))
    h = G.mult[g][g]
    assert len(cyclic_subgroup(G, h)) == 4


def test_subgroup_table_reindex():
    G = build_group("sym:4")
    H3 = next(s for s in all_subgroups(G) if len(s) == 3)
    H, embed = subgroup_table(G, H3)
    assert H.order == 3
    assert embed[0] == 0
    for i in range(3):
        for j in range(3):
            assert embed[H.mult[i][j]] == G.mult[embed[i]][embed[j]]


def test_automorphism_counts():
    # |Aut| for well-known small groups
    expected = {
        "ab:2": 1,
        "ab:3": 2,
        "ab:2,2": 6,
        "ab:4": 2,
        "ab:2,2,2": 168,
        "sym:3": 6,
        "quat:8": 24,
        "dih:4": 8,
    }
    for spec, count in expected.items():
        G = build_group(spec)
        auts = automorphisms(G)
        assert len(auts) == count, spec
        # each is a bijection fixing the identity and respecting products
        for phi in auts:
            assert phi[0] == 0
            assert sorted(phi) == list(range(G.order))


def test_builtin_groups_upto():
    specs = builtin_groups_upto(16)
    assert "ab:2,8" in specs and "dih:8" in specs and "quat:8" in specs
    seen = set()
    for spec in specs:
        G = build_group(spec)
        assert G.order <= 16
        key = (spec.split(":")[0], G.invariant_signature())
        assert key not in seen  # no duplicates within a family
        seen.add(key)


def test_fingerprint_stability():
    a = build_group("dih:5").fingerprint()
    b = build_group("dih:5").fingerprint()
    c = build_group("dih:6").fingerprint()
    assert a == b != c
