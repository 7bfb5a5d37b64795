"""Independent brute-force verifiers.

brute_force_schur_rings finds every Schur partition of Z_n by backtracking
over classes, with no knowledge of the structure theory the enumerator uses,
so agreement between the two is a real end-to-end check.

brute_force_subgroup_count enumerates subgroups of Z_{r^k} x Z_{r^ell}
directly, as an oracle for the closed-form lattice size.
"""

from __future__ import annotations

import random

from schur.core import SchurPartition, check_schur_axioms
from schur.formulas import is_prime

__all__ = [
    "DEFAULT_SEARCH_LIMIT",
    "brute_force_schur_rings",
    "brute_force_subgroup_count",
]

DEFAULT_SEARCH_LIMIT = 14


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def brute_force_schur_rings(
    n: int,
    *,
    limit: int = DEFAULT_SEARCH_LIMIT,
    force: bool = False,
    rng: random.Random | None = None,
) -> tuple[SchurPartition, ...]:
    """All Schur partitions of Z_n by exhaustive backtracking.

    The search assigns the class of the smallest unassigned element, trying
    every candidate subset of its constraint block. Pruning rests on two
    facts: the star of a class is a class, so star partners are committed
    together; and the coefficient vector of any product of completed classes
    must be constant on every class, so its level sets confine all future
    classes. The running common refinement of those level sets is kept as a
    block partition of the unassigned elements, and candidates are drawn
    from single blocks only.

    Search cost grows roughly like a pruned Bell number, so moduli above
    `limit` (default 14) are refused unless force=True. An optional rng
    shuffles candidate order; the result set does not depend on it.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n > limit and not force:
        raise ValueError(
            f"n={n} exceeds the brute-force limit {limit}; pass force=True "
            "to run anyway (expect a long search beyond n=16)"
        )
    if n == 1:
        return (SchurPartition.from_sets(1, [{0}]),)

    full = (1 << n) - 1
    results: list[SchurPartition] = []

    def extend(assigned: int, classes: list[tuple[int, ...]], blocks: list[int]) -> None:
        if assigned == full:
            part = SchurPartition.from_sets(n, [set(c) for c in classes])
            if check_schur_axioms(part) is None:
                results.append(part)
            return
        remaining = ~assigned & full
        x = (remaining & -remaining).bit_length() - 1
        block = next(b for b in blocks if (b >> x) & 1)
        others = _bits(block & ~(1 << x))
        candidates = list(range(1 << len(others)))
        if rng is not None:
            rng.shuffle(candidates)
        for pick in candidates:
            cmask = 1 << x
            members = [x]
            for i, g in enumerate(others):
                if (pick >> i) & 1:
                    cmask |= 1 << g
                    members.append(g)
            smask = 0
            for g in members:
                smask |= 1 << ((n - g) % n)
            if smask == cmask:
                new_classes = [tuple(sorted(members))]
            else:
                if smask & (assigned | cmask):
                    continue
                # the star partner is itself a class, so it must sit inside
                # a single constraint block
                if not any(smask & ~b == 0 for b in blocks):
                    continue
                star_members = sorted((n - g) % n for g in members)
                new_classes = [tuple(sorted(members)), tuple(star_members)]
            new_assigned = assigned | cmask | smask
            all_classes = classes + new_classes
            base = len(classes)
            vectors: list[list[int]] = []
            ok = True
            for i, fresh in enumerate(new_classes):
                for j in range(base + i + 1):
                    other = all_classes[j]
                    vec = [0] * n
                    for a in fresh:
                        for b in other:
                            vec[(a + b) % n] += 1
                    for cls in all_classes:
                        v0 = vec[cls[0]]
                        for g in cls:
                            if vec[g] != v0:
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
                    vectors.append(vec)
                if not ok:
                    break
            if not ok:
                continue
            new_blocks: list[int] = []
            for b in blocks:
                b &= ~new_assigned
                if not b:
                    continue
                groups: dict[tuple[int, ...], int] = {}
                for g in _bits(b):
                    sig = tuple(vec[g] for vec in vectors)
                    groups[sig] = groups.get(sig, 0) | (1 << g)
                new_blocks.extend(groups.values())
            extend(new_assigned, all_classes, new_blocks)

    extend(1, [(0,)], [full & ~1])
    results.sort(key=SchurPartition.sort_key)
    return tuple(results)


def brute_force_subgroup_count(r: int, k: int, ell: int) -> int:
    """Count subgroups of Z_{r^k} x Z_{r^ell} by explicit enumeration.

    Every subgroup of a rank-two abelian group needs at most two generators,
    so joining pairs of cyclic subgroups reaches everything; the collection
    is still closed under pairwise join afterwards, which the final loop
    certifies. Group order is capped at 1024.
    """
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")
    if k < 0 or ell < 0:
        raise ValueError("exponents must be non-negative")
    order = r ** (k + ell)
    if order > 1024:
        raise ValueError(f"group order {order} exceeds the oracle bound 1024")
    a_mod = r**k
    b_mod = r**ell

    def add(x: int, y: int) -> int:
        return ((x // b_mod + y // b_mod) % a_mod) * b_mod + (x % b_mod + y % b_mod) % b_mod

    def span(gens: tuple[int, ...]) -> frozenset[int]:
        out = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = add(x, g)
                    if y not in out:
                        out.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(out)

    found: dict[frozenset[int], tuple[int, ...]] = {}
    cyclic: dict[frozenset[int], tuple[int, ...]] = {}
    for g in range(order):
        sub = span((g,))
        if sub not in cyclic:
            cyclic[sub] = (g,)
    found.update(cyclic)
    cyc = list(cyclic.items())
    for i in range(len(cyc)):
        for j in range(i + 1, len(cyc)):
            gens = cyc[i][1] + cyc[j][1]
            sub = span(gens)
            if sub not in found:
                found[sub] = gens
    # certify join-closure: no pair of subgroups may generate anything new
    work = list(found.items())
    while work:
        s1, g1 = work.pop()
        for s2, g2 in list(found.items()):
            if s1 <= s2 or s2 <= s1:
                continue
            joined = span(g1 + g2)
            if joined not in found:
                found[joined] = g1 + g2
                work.append((joined, g1 + g2))
    return len(found)
