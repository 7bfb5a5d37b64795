import json

from schur.automorphic import orbit_partition, unit_group, UnitSubgroup
from schur.brute_force import brute_force_schur_rings
from schur.constructions import discrete_ring, is_wedge_decomposable, trivial_ring
from schur.core import canonical_encode, is_schur_partition
from schur.enumeration import (
    core_census,
    enumerate_rings,
    indecomposable_count,
    ring_count,
)
from schur.formulas import count_semiprime


def test_ring_count_examples():
    assert ring_count(3) == 2
    assert ring_count(7) == 4
    assert ring_count(21) == 27
    assert ring_count(12) == 32
    assert ring_count(6) == 7
    assert ring_count(91) == 97
    assert ring_count(1) == 1


def test_every_enumerated_ring_is_schur():
    for n in (8, 12, 18, 21):
        for ring in enumerate_rings(n).rings:
            assert is_schur_partition(ring)


def test_rings_are_distinct_and_sorted():
    result = enumerate_rings(12)
    codes = [canonical_encode(r) for r in result.rings]
    assert len(set(codes)) == len(codes)
    keys = [r.sort_key() for r in result.rings]
    assert keys == sorted(keys)


def test_contains_trivial_and_discrete():
    for n in range(1, 31):
        rings = set(enumerate_rings(n).rings)
        assert trivial_ring(n) in rings
        assert discrete_ring(n) in rings


def test_family_tags_for_semiprime():
    result = enumerate_rings(21)
    tags = result.tags
    assert sum("automorphic" in t for t in tags) == 10
    assert sum("wedge" in t and "automorphic" not in t for t in tags) == 16
    assert sum("trivial" in t for t in tags) == 1
    # direct products over Z_21 are all automorphic
    for t in tags:
        if "direct" in t:
            assert "automorphic" in t


def test_wedge_tag_equals_decomposability():
    # the wedge loop is complete: a ring carries the wedge tag exactly when
    # the independent section detector splits it
    for n in (12, 21, 30):
        result = enumerate_rings(n)
        for ring, tags in zip(result.rings, result.tags):
            assert ("wedge" in tags) == is_wedge_decomposable(ring), (n, ring)


def test_direct_tag_equals_product_reconstruction():
    from math import gcd

    from schur.constructions import direct_product
    from schur.core import restrict, s_subgroups

    for n in (12, 21, 30):
        result = enumerate_rings(n)
        for ring, tags in zip(result.rings, result.tags):
            splittable = False
            subs = s_subgroups(ring)
            for a in subs:
                b = n // a
                if 1 < a < n and gcd(a, b) == 1 and b in subs:
                    if direct_product(restrict(ring, a), restrict(ring, b)) == ring:
                        splittable = True
                        break
            assert ("direct" in tags) == splittable, (n, ring)


def test_known_named_rings_present():
    rings21 = set(enumerate_rings(21).rings)
    five = UnitSubgroup(21, (1, 4, 5, 16, 17, 20))
    assert orbit_partition(five) in rings21
    assert orbit_partition(UnitSubgroup(21, (1, 20))) in rings21
    assert trivial_ring(21) in rings21


def test_core_census_12():
    totals: dict[int, int] = {}
    for core, count in core_census(12).items():
        totals[core.n] = totals.get(core.n, 0) + count
    assert totals == {2: 7, 3: 6, 4: 6, 6: 7, 12: 6}
    assert sum(totals.values()) == 32


def test_census_counts_sum_to_omega():
    for n in (6, 10, 12, 20, 21):
        assert sum(core_census(n).values()) == ring_count(n)


def test_indecomposable_counts():
    assert indecomposable_count(6) == 3
    assert indecomposable_count(12) == 6
    for p in (5, 7, 11, 13):
        assert indecomposable_count(p) == ring_count(p)


def test_indecomposable_matches_direct_scan():
    for n in (6, 12, 20):
        direct = sum(
            not is_wedge_decomposable(r) for r in enumerate_rings(n).rings
        )
        assert indecomposable_count(n) == direct


def test_oracle_agreement_small():
    for n in range(1, 11):
        assert set(brute_force_schur_rings(n)) == set(enumerate_rings(n).rings)


def test_formula_agreement_spot():
    assert ring_count(15) == count_semiprime(3, 5) == 21
    assert ring_count(35) == count_semiprime(5, 7) == 41


def test_enumeration_scales_past_acceptance_range():
    # no closed form applies at n = 64; the count is a regression pin from
    # this generator, the rest is structural sanity
    result = enumerate_rings(64)
    assert result.omega == 657
    assert all(is_schur_partition(r) for r in result.rings[:20])
    assert sum(cnt for _, cnt in result.core_census) == result.omega


def test_json_output_schema():
    blob = json.dumps(enumerate_rings(6).to_json_dict())
    data = json.loads(blob)
    assert data["n"] == 6
    assert data["omega"] == 7
    assert len(data["rings"]) == 7
    assert len(data["tags"]) == 7
    for entry in data["core_census"]:
        assert set(entry) == {"core", "order", "count"}
        assert entry["order"] == entry["core"]["n"]
    assert sum(e["count"] for e in data["core_census"]) == 7
    for ring in data["rings"]:
        assert set(ring) == {"n", "classes"}
