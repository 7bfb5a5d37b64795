"""Exact arithmetic in the integer group ring of Z_n and Schur partitions.

The cyclic group of order n is written additively as the residues
{0, ..., n-1}. A partition of those residues determines a candidate Schur
ring; check_schur_axioms decides whether it really is one and, if not, names
the first axiom it breaks. Subgroups of Z_n are identified with their orders
throughout: the subgroup of order d is the set of multiples of n/d.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from schur.formulas import divisors

__all__ = [
    "GroupSubset",
    "AlgebraElement",
    "SchurPartition",
    "AxiomViolation",
    "multiply",
    "check_schur_axioms",
    "is_schur_partition",
    "s_subgroups",
    "restrict",
    "quotient",
    "canonical_encode",
    "canonical_decode",
]


@dataclass(frozen=True)
class GroupSubset:
    """A subset of Z_n; stands in for the simple quantity it spans."""

    n: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        members = frozenset(int(x) for x in self.members)
        object.__setattr__(self, "members", members)
        if any(x < 0 or x >= self.n for x in members):
            raise ValueError(f"members out of range for Z_{self.n}: {sorted(members)}")

    def star(self) -> "GroupSubset":
        """The set of additive inverses {-x mod n : x in self}."""
        return GroupSubset(self.n, frozenset((self.n - x) % self.n for x in self.members))

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.sorted_members())

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.sorted_members()) + "}"


@dataclass(frozen=True)
class AlgebraElement:
    """A group-ring element with non-negative integer coefficients."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        if any(c < 0 for c in coeffs):
            raise ValueError("coefficients must be non-negative")

    def __getitem__(self, g: int) -> int:
        return self.coeffs[g % self.n]

    def mass(self) -> int:
        return sum(self.coeffs)


def multiply(c: GroupSubset, d: GroupSubset) -> AlgebraElement:
    """Product of two simple quantities: the additive convolution of C and D.

    coefficient[g] counts pairs (x, y) in C x D with x + y = g mod n, so the
    total coefficient mass is |C| * |D|.
    """
    if c.n != d.n:
        raise ValueError(f"modulus mismatch: {c.n} vs {d.n}")
    n = c.n
    acc = [0] * n
    for x in c.members:
        for y in d.members:
            acc[(x + y) % n] += 1
    return AlgebraElement(n, tuple(acc))


@dataclass(frozen=True)
class SchurPartition:
    """An ordered partition of Z_n, the datum that pins down a Schur ring.

    Classes are stored canonically: members ascending inside a class, classes
    ordered by least member, so equal partitions compare and hash equal.
    """

    n: int
    classes: tuple[GroupSubset, ...]

    def __post_init__(self) -> None:
        n = self.n
        cls: list[GroupSubset] = []
        for c in self.classes:
            if isinstance(c, GroupSubset):
                if c.n != n:
                    raise ValueError(f"class modulus {c.n} differs from partition modulus {n}")
                cls.append(c)
            else:
                cls.append(GroupSubset(n, frozenset(c)))
        if any(not c.members for c in cls):
            raise ValueError("empty class")
        cls.sort(key=lambda c: min(c.members))
        seen = 0
        count = 0
        for c in cls:
            for x in c.members:
                bit = 1 << x
                if seen & bit:
                    raise ValueError(f"classes overlap at {x}")
                seen |= bit
                count += 1
        if count != n:
            raise ValueError(f"classes cover {count} of {n} residues")
        object.__setattr__(self, "classes", tuple(cls))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SchurPartition":
        return cls(n, tuple(GroupSubset(n, frozenset(s)) for s in sets))

    @cached_property
    def labels(self) -> tuple[int, ...]:
        """labels[x] is the index of the class containing x."""
        lab = [0] * self.n
        for i, c in enumerate(self.classes):
            for x in c.members:
                lab[x] = i
        return tuple(lab)

    def class_of(self, x: int) -> GroupSubset:
        return self.classes[self.labels[x % self.n]]

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.sorted_members() for c in self.classes)

    def to_text(self) -> str:
        return "{" + ",".join(str(c) for c in self.classes) + "}"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "classes": [list(c.sorted_members()) for c in self.classes]}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "SchurPartition":
        return cls.from_sets(int(obj["n"]), obj["classes"])

    def __str__(self) -> str:
        return self.to_text()


def canonical_encode(p: SchurPartition) -> bytes:
    """Deterministic byte encoding, injective on partitions."""
    body = ";".join(",".join(str(x) for x in c.sorted_members()) for c in p.classes)
    return f"{p.n}|{body}".encode("ascii")


def canonical_decode(data: bytes) -> SchurPartition:
    """Inverse of canonical_encode."""
    head, _, body = data.decode("ascii").partition("|")
    sets = [
        frozenset(int(x) for x in chunk.split(","))
        for chunk in body.split(";")
    ]
    return SchurPartition.from_sets(int(head), sets)


@dataclass(frozen=True)
class AxiomViolation:
    """First broken Schur axiom: 1 identity class, 2 star closure, 3 products."""

    axiom: int
    message: str

    def __str__(self) -> str:
        return f"axiom {self.axiom}: {self.message}"


def check_schur_axioms(p: SchurPartition) -> AxiomViolation | None:
    """Return None when p defines a Schur ring, else the first violation.

    Axiom 3 is checked as: for every pair of classes, the convolution of
    their indicator vectors is constant on each class. Only the support of
    each product is scanned, so a full check costs O(n^2) regardless of how
    many classes there are.
    """
    n = p.n
    if p.class_of(0).members != frozenset({0}):
        return AxiomViolation(1, f"class containing 0 is {p.class_of(0)}, not {{0}}")
    class_sets = {c.members for c in p.classes}
    for c in p.classes:
        star = frozenset((n - x) % n for x in c.members)
        if star not in class_sets:
            return AxiomViolation(2, f"{c}* = {GroupSubset(n, star)} is not a class")
    labels = p.labels
    classes = [c.sorted_members() for c in p.classes]
    sizes = [len(c) for c in classes]
    for i in range(len(classes)):
        for j in range(i, len(classes)):
            acc: dict[int, int] = {}
            for a in classes[i]:
                for b in classes[j]:
                    g = (a + b) % n
                    acc[g] = acc.get(g, 0) + 1
            hits: dict[int, list[int]] = {}
            bad = -1
            for g, v in acc.items():
                cid = labels[g]
                rec = hits.get(cid)
                if rec is None:
                    hits[cid] = [v, 1]
                elif rec[0] != v:
                    bad = cid
                    break
                else:
                    rec[1] += 1
            if bad < 0:
                # a class only partially covered by the support mixes a zero
                # coefficient with a positive one
                for cid, (v, cnt) in hits.items():
                    if cnt != sizes[cid]:
                        bad = cid
                        break
            if bad >= 0:
                return AxiomViolation(
                    3,
                    f"coefficients of {p.classes[i]}*{p.classes[j]} are not constant "
                    f"on class {p.classes[bad]}",
                )
    return None


def is_schur_partition(p: SchurPartition) -> bool:
    return check_schur_axioms(p) is None


def s_subgroups(p: SchurPartition) -> tuple[int, ...]:
    """Orders d of subgroups of Z_n that are unions of classes of p.

    Always contains 1 and n for a partition satisfying axiom 1.
    """
    n = p.n
    labels = p.labels
    out = []
    for d in divisors(n):
        step = n // d
        subgroup = frozenset(range(0, n, step))
        if all(p.classes[labels[x]].members <= subgroup for x in subgroup):
            out.append(d)
    return tuple(out)


def restrict(p: SchurPartition, d: int) -> SchurPartition:
    """The subring partition living on the order-d subgroup, relabelled to Z_d."""
    if d not in s_subgroups(p):
        raise ValueError(f"order-{d} subgroup is not an S-subgroup of the partition")
    step = p.n // d
    sets = [
        frozenset(x // step for x in c.members)
        for c in p.classes
        if min(c.members) % step == 0
    ]
    return SchurPartition.from_sets(d, sets)


def quotient(p: SchurPartition, k: int) -> SchurPartition:
    """Push the partition forward along Z_n -> Z_{n/k}, x -> x mod n/k.

    Requires the order-k subgroup (the kernel) to be an S-subgroup, and the
    class images to be pairwise equal or disjoint.
    """
    if k not in s_subgroups(p):
        raise ValueError(f"order-{k} subgroup is not an S-subgroup of the partition")
    m = p.n // k
    images: dict[frozenset[int], None] = {}
    for c in p.classes:
        images[frozenset(x % m for x in c.members)] = None
    if sum(len(img) for img in images) != m:
        raise ValueError(f"class images under x -> x mod {m} are not equal-or-disjoint")
    return SchurPartition.from_sets(m, images)
