"""Permutations and subgroups of the symmetric group on the three edge colors.

Composition is rightmost-first throughout: ``compose(p, q)`` applies ``q``
first, then ``p``.  The six elements are enumerated in lexicographic order of
their image tuples; that order fixes every deterministic scan used elsewhere
in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

__all__ = [
    "S3Perm",
    "Subgroup",
    "ReducibilityRow",
    "IDENTITY",
    "ALL_PERMS",
    "TRIVIAL_SUBGROUP",
    "FULL_SUBGROUP",
    "compose",
    "inverse",
    "commutator",
    "commutes",
    "elementwise_commute",
    "noncommuting_witness",
    "subgroup_generated",
    "enumerate_subgroups",
    "reducibility_table",
]


@dataclass(frozen=True, order=True)
class S3Perm:
    """A permutation of the color set {1, 2, 3}, stored as (p(1), p(2), p(3))."""

    image: tuple[int, int, int]

    def __post_init__(self) -> None:
        if tuple(sorted(self.image)) != (1, 2, 3):
            raise ValueError(f"not a permutation of {{1, 2, 3}}: {self.image!r}")

    def __call__(self, color: int) -> int:
        if color not in (1, 2, 3):
            raise ValueError(f"color out of range: {color!r}")
        return self.image[color - 1]

    def is_identity(self) -> bool:
        return self.image == (1, 2, 3)

    def cycle_string(self) -> str:
        """Serialize in cycle notation: "()", "(ab)" with a<b, "(1bc)"."""
        return _CYCLE_BY_IMAGE[self.image]

    @staticmethod
    def from_cycle_string(text: str) -> "S3Perm":
        try:
            return S3Perm(_IMAGE_BY_CYCLE[text.strip()])
        except KeyError:
            raise ValueError(f"unknown cycle string: {text!r}") from None

    def __repr__(self) -> str:
        return f"S3Perm{self.cycle_string()!r}"


_CYCLE_BY_IMAGE: dict[tuple[int, int, int], str] = {
    (1, 2, 3): "()",
    (2, 1, 3): "(12)",
    (3, 2, 1): "(13)",
    (1, 3, 2): "(23)",
    (2, 3, 1): "(123)",
    (3, 1, 2): "(132)",
}
_IMAGE_BY_CYCLE = {s: img for img, s in _CYCLE_BY_IMAGE.items()}

IDENTITY = S3Perm((1, 2, 3))

#: All six permutations in canonical (lexicographic image) order.
ALL_PERMS: tuple[S3Perm, ...] = tuple(
    S3Perm(img) for img in sorted(itertools.permutations((1, 2, 3)))
)


def compose(p: S3Perm, q: S3Perm) -> S3Perm:
    """Rightmost-first product: ``compose(p, q)(x) == p(q(x))``."""
    return S3Perm((p(q(1)), p(q(2)), p(q(3))))


def inverse(p: S3Perm) -> S3Perm:
    img = [0, 0, 0]
    for c in (1, 2, 3):
        img[p(c) - 1] = c
    return S3Perm((img[0], img[1], img[2]))


def commutator(f: S3Perm, g: S3Perm) -> S3Perm:
    """g^-1 . f^-1 . g . f under the rightmost-first convention.

    Identity exactly when ``f`` and ``g`` commute.
    """
    return compose(compose(inverse(g), inverse(f)), compose(g, f))


def commutes(f: S3Perm, g: S3Perm) -> bool:
    return compose(f, g) == compose(g, f)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of the color permutation group (order 1, 2, 3 or 6)."""

    elements: frozenset[S3Perm]

    def __post_init__(self) -> None:
        if IDENTITY not in self.elements:
            raise ValueError("subgroup must contain the identity")
        for p, q in itertools.product(self.elements, repeat=2):
            if compose(p, q) not in self.elements:
                raise ValueError("element set is not closed under composition")
        if len(self.elements) not in (1, 2, 3, 6):
            raise ValueError(f"impossible subgroup order: {len(self.elements)}")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def label(self) -> str:
        """Canonical name: "1" for trivial, a generator cycle, or "S3"."""
        if self.order == 1:
            return "1"
        if self.order == 6:
            return "S3"
        gen = min(p for p in self.elements if not p.is_identity())
        return gen.cycle_string()

    def __contains__(self, perm: S3Perm) -> bool:
        return perm in self.elements

    def __iter__(self):
        return iter(self.sorted_elements())

    def sorted_elements(self) -> tuple[S3Perm, ...]:
        return tuple(sorted(self.elements))

    def generators(self) -> tuple[S3Perm, ...]:
        """A canonical minimal generating set."""
        if self.order == 1:
            return ()
        if self.order == 6:
            return (S3Perm.from_cycle_string("(12)"), S3Perm.from_cycle_string("(123)"))
        return (min(p for p in self.elements if not p.is_identity()),)

    def sort_key(self) -> tuple:
        return (self.order, self.label)

    def __repr__(self) -> str:
        return f"Subgroup<{self.label}>"


TRIVIAL_SUBGROUP = Subgroup(frozenset({IDENTITY}))
FULL_SUBGROUP = Subgroup(frozenset(ALL_PERMS))


def subgroup_generated(gens) -> Subgroup:
    """Closure of ``gens`` under composition (inverses follow by finiteness)."""
    closure = {IDENTITY} | set(gens)
    while True:
        new = {compose(p, q) for p in closure for q in closure} - closure
        if not new:
            return Subgroup(frozenset(closure))
        closure |= new


def enumerate_subgroups() -> tuple[Subgroup, ...]:
    """All six subgroups, ordered by (order, canonical label).

    Found by brute force over element subsets containing the identity.
    """
    found = []
    others = [p for p in ALL_PERMS if not p.is_identity()]
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            elems = frozenset({IDENTITY, *extra})
            try:
                found.append(Subgroup(elems))
            except ValueError:
                continue
    found.sort(key=Subgroup.sort_key)
    return tuple(found)


def elementwise_commute(h1: Subgroup, h2: Subgroup) -> bool:
    """True iff every f in h1 commutes with every g in h2."""
    return all(commutes(f, g) for f in h1 for g in h2)


def noncommuting_witness(h1: Subgroup, h2: Subgroup) -> tuple[S3Perm, S3Perm] | None:
    """First (f, g) in canonical scan order with f.g != g.f, if any."""
    for f in h1:
        for g in h2:
            if not commutes(f, g):
                return (f, g)
    return None


@dataclass(frozen=True)
class ReducibilityRow:
    """A pair of subgroups that cannot drive switches on opposite sides
    simultaneously, with a non-commuting witness pair and both products."""

    h1: Subgroup
    h2: Subgroup
    f: S3Perm
    g: S3Perm
    fg: S3Perm
    gf: S3Perm


def reducibility_table() -> tuple[ReducibilityRow, ...]:
    """The six pairs of distinct nontrivial proper subgroups, each with a
    witness (f, g), f in h1, g in h2, such that f.g != g.f."""
    proper = [h for h in enumerate_subgroups() if h.order in (2, 3)]
    rows = []
    for h1, h2 in itertools.combinations(proper, 2):
        witness = noncommuting_witness(h1, h2)
        if witness is None:
            continue
        f, g = witness
        rows.append(ReducibilityRow(h1, h2, f, g, compose(f, g), compose(g, f)))
    return tuple(rows)
