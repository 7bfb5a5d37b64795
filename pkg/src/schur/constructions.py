"""Constructors for Schur rings over Z_n and wedge decomposition.

The wedge product glues a ring S on the order-h subgroup H to a ring T on the
quotient Z_n / K (K the order-k subgroup, k | h): inside H the classes are
those of S, outside H they are the full preimages of T's classes under
x -> x mod n/k. Gluing is legal only when both sides agree on the overlap,
i.e. the pushforward of S along K equals the restriction of T to H/K.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from schur.core import SchurPartition, quotient, restrict, s_subgroups

__all__ = [
    "Section",
    "trivial_ring",
    "discrete_ring",
    "direct_product",
    "wedge_compatible",
    "wedge_product",
    "find_wedge_section",
    "is_wedge_decomposable",
    "wedge_core",
]


@dataclass(frozen=True)
class Section:
    """A pair of nested subgroups of Z_n, named by their orders k | h."""

    k: int
    h: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.h % self.k != 0:
            raise ValueError(f"section requires k | h, got k={self.k}, h={self.h}")

    def is_proper_in(self, n: int) -> bool:
        return 1 < self.k <= self.h < n and n % self.h == 0

    @property
    def is_trivial(self) -> bool:
        return self.k == self.h


def trivial_ring(n: int) -> SchurPartition:
    """The span of the identity and everything else: classes {0} and Z_n - {0}."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n == 1:
        return SchurPartition.from_sets(1, [{0}])
    return SchurPartition.from_sets(n, [{0}, set(range(1, n))])


def discrete_ring(n: int) -> SchurPartition:
    """The full group algebra: every residue is its own class."""
    return SchurPartition.from_sets(n, [{x} for x in range(n)])


def direct_product(s: SchurPartition, t: SchurPartition) -> SchurPartition:
    """Tensor product of rings over coprime moduli, realized on Z_{s.n * t.n}.

    Classes are CRT images of pairs of classes; restricting the result to
    either factor's subgroup recovers that factor.
    """
    a, b = s.n, t.n
    if gcd(a, b) != 1:
        raise ValueError(f"moduli must be coprime, got {a} and {b}")
    n = a * b
    # x = crt(c, d) is the unique residue with x = c mod a and x = d mod b
    ca = b * pow(b, -1, a) if a > 1 else 0
    cb = a * pow(a, -1, b) if b > 1 else 0
    sets = [
        frozenset((x * ca + y * cb) % n for x in c.members for y in d.members)
        for c in s.classes
        for d in t.classes
    ]
    return SchurPartition.from_sets(n, sets)


def wedge_compatible(s: SchurPartition, t: SchurPartition, u: Section, n: int) -> bool:
    """True when S over Z_h and T over Z_{n/k} agree on the shared section.

    Needs the order-k subgroup to be an S-subgroup of S, the order-(h/k)
    subgroup to be an S-subgroup of T, and the pushforward of S by k to equal
    the restriction of T to h/k. Trivial sections (k = h) always pass.
    """
    k, h = u.k, u.h
    if k not in s_subgroups(s):
        return False
    if h // k not in s_subgroups(t):
        return False
    return quotient(s, k) == restrict(t, h // k)


def wedge_product(s: SchurPartition, t: SchurPartition, u: Section, n: int) -> SchurPartition:
    """Wedge of S over Z_h with T over Z_{n/k} along the section U = (k, h)."""
    k, h = u.k, u.h
    if not u.is_proper_in(n):
        raise ValueError(f"section ({k},{h}) is not proper in Z_{n}")
    if s.n != h:
        raise ValueError(f"left factor lives on Z_{s.n}, expected Z_{h}")
    if t.n != n // k:
        raise ValueError(f"right factor lives on Z_{t.n}, expected Z_{n // k}")
    if not wedge_compatible(s, t, u, n):
        raise ValueError(
            f"incompatible wedge: pushforward of the Z_{h} factor by {k} must "
            f"equal the restriction of the Z_{n // k} factor to {h // k}"
        )
    m = n // k
    step_h = n // h
    sets = [frozenset(x * step_h for x in c.members) for c in s.classes]
    # inside Z_m, the image of H is the order-(h/k) subgroup: multiples of n/h
    image_of_h = frozenset(range(0, m, step_h))
    for d in t.classes:
        if d.members <= image_of_h:
            continue
        sets.append(frozenset(x + j * m for x in d.members for j in range(k)))
    built = SchurPartition.from_sets(n, sets)
    assert built == _wedge_by_refinement(s, t, u, n)
    return built


def _wedge_by_refinement(s: SchurPartition, t: SchurPartition, u: Section, n: int) -> SchurPartition:
    """Common refinement of (S extended by one off-H block) and pulled-back T."""
    m = n // u.k
    step_h = n // u.h
    groups: dict[tuple[int, int], set[int]] = {}
    for x in range(n):
        inside = x % step_h == 0
        left = s.labels[x // step_h] if inside else -1
        right = t.labels[x % m]
        groups.setdefault((left, right), set()).add(x)
    return SchurPartition.from_sets(n, groups.values())


def find_wedge_section(p: SchurPartition) -> Section | None:
    """Smallest proper section along which p splits as a wedge, if any.

    A section (k, h) works when every class outside the order-h subgroup is a
    union of cosets of the order-k subgroup; the ring is then the wedge of its
    restriction to h with its pushforward by k. Sections are scanned with k
    ascending, then h ascending.
    """
    n = p.n
    subs = s_subgroups(p)
    for k in subs:
        if k == 1 or k == n:
            continue
        step = n // k
        for h in subs:
            if h < k or h >= n or h % k != 0:
                continue
            step_h = n // h
            splits = True
            for c in p.classes:
                if min(c.members) % step_h == 0:
                    continue  # class lies inside the order-h subgroup
                if any((x + step) % n not in c.members for x in c.members):
                    splits = False
                    break
            if splits:
                return Section(k, h)
    return None


def is_wedge_decomposable(p: SchurPartition) -> bool:
    return find_wedge_section(p) is not None


def wedge_core(p: SchurPartition) -> SchurPartition:
    """Maximal wedge-indecomposable subring, reached by repeated splitting.

    Peels off the wedge with smallest k (then smallest h) and keeps the
    restriction to the order-h subgroup until nothing splits. The order of
    the core is the modulus of the returned partition.
    """
    current = p
    while True:
        section = find_wedge_section(current)
        if section is None:
            return current
        current = restrict(current, section.h)
