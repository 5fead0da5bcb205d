"""Switch operators: recoloring actions on the cross edges of K_{m,n}.

A switch carries a support set of vertices and a color permutation sigma.
An edge is recolored by sigma once per endpoint inside the support, so by
sigma for one endpoint and sigma^2 for two.  Words compose switches first to
last.  Operators never mutate their input graph.

Word JSON format: ``[{"support": [{"side": "L", "i": 0}, ...], "sigma": "(12)"},
...]``, applied first to last.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import ColoredBipartiteGraph, Side, VertexRef
from .s3 import ALL_PERMS, S3Perm, commutator, commutes, compose, inverse

__all__ = [
    "SwitchOp",
    "SwitchWord",
    "IDENTICAL",
    "left_switch",
    "right_switch",
    "apply_switch",
    "apply_word",
    "inverse_word",
    "edge_kill_word",
    "monochromatize",
    "MONO_F",
    "MONO_G",
    "detect_vertex_switch",
    "is_switch_on_set",
    "word_to_json",
    "word_from_json",
]


@dataclass(frozen=True)
class SwitchOp:
    """Recolor every cross edge once per endpoint lying in ``support``."""

    support: frozenset[VertexRef]
    sigma: S3Perm


@dataclass(frozen=True)
class SwitchWord:
    """An ordered composition of switches, applied first to last."""

    ops: tuple[SwitchOp, ...]

    def __len__(self) -> int:
        return len(self.ops)


def left_switch(index: int, sigma: S3Perm) -> SwitchOp:
    return SwitchOp(frozenset({VertexRef(Side.LEFT, index)}), sigma)


def right_switch(index: int, sigma: S3Perm) -> SwitchOp:
    return SwitchOp(frozenset({VertexRef(Side.RIGHT, index)}), sigma)


def apply_switch(g: ColoredBipartiteGraph, op: SwitchOp) -> ColoredBipartiteGraph:
    """Edge (i, j) gets sigma^t of its color, t = endpoints inside support."""
    for v in op.support:
        if not g.has_vertex(v):
            raise ValueError(f"support vertex {v} not in K_{{{g.m},{g.n}}}")
    left = {v.index for v in op.support if v.side is Side.LEFT}
    right = {v.index for v in op.support if v.side is Side.RIGHT}
    img = op.sigma.image
    if not right:
        rows = tuple(
            tuple(img[c - 1] for c in row) if i in left else row
            for i, row in enumerate(g.colors)
        )
    elif not left:
        rows = tuple(
            tuple(img[c - 1] if j in right else c for j, c in enumerate(row))
            for row in g.colors
        )
    else:
        tables = ((1, 2, 3), img, compose(op.sigma, op.sigma).image)
        rows = tuple(
            tuple(
                tables[(i in left) + (j in right)][c - 1] for j, c in enumerate(row)
            )
            for i, row in enumerate(g.colors)
        )
    return ColoredBipartiteGraph(g.m, g.n, rows)


def apply_word(g: ColoredBipartiteGraph, word: SwitchWord) -> ColoredBipartiteGraph:
    for op in word.ops:
        g = apply_switch(g, op)
    return g


def inverse_word(word: SwitchWord) -> SwitchWord:
    """Reversed word with inverted permutations; undoes ``word`` on any graph."""
    return SwitchWord(
        tuple(SwitchOp(op.support, inverse(op.sigma)) for op in reversed(word.ops))
    )


def edge_kill_word(x: int, y: int, f: S3Perm, gp: S3Perm) -> SwitchWord:
    """The four-switch word that recolors exactly edge (x, y).

    Switching left x by f, right y by gp, left x by f^-1 and right y by gp^-1
    cancels everywhere except on (x, y), whose color moves by the commutator
    of (f, gp).  Requires a non-commuting pair, else the word is globally
    trivial.
    """
    if commutes(f, gp):
        raise ValueError("permutations commute; the word would recolor nothing")
    return SwitchWord(
        (
            left_switch(x, f),
            right_switch(y, gp),
            left_switch(x, inverse(f)),
            right_switch(y, inverse(gp)),
        )
    )


#: Non-commuting pair driving monochromatization; its commutator is a 3-cycle,
#: so one or two edge kills reach any target color.
MONO_F = S3Perm.from_cycle_string("(123)")
MONO_G = S3Perm.from_cycle_string("(12)")


def monochromatize(g: ColoredBipartiteGraph, target: int) -> SwitchWord:
    """A word whose application recolors every edge to ``target``.

    Edges are processed in row-major order; each off-target edge costs at most
    two edge kills (8 switches), since edge kills touch no other edge.
    """
    if target not in (1, 2, 3):
        raise ValueError(f"color out of range: {target!r}")
    gamma = commutator(MONO_F, MONO_G)
    ops: list[SwitchOp] = []
    for i in range(g.m):
        for j in range(g.n):
            c = g.colors[i][j]
            if c == target:
                continue
            hops = 1 if gamma(c) == target else 2
            for _ in range(hops):
                ops.extend(edge_kill_word(i, j, MONO_F, MONO_G).ops)
    return SwitchWord(tuple(ops))


#: Marker returned by detect_vertex_switch when the graphs are equal.
IDENTICAL = "identical"


def detect_vertex_switch(g1: ColoredBipartiteGraph, g2: ColoredBipartiteGraph):
    """Find (v, sigma), sigma != identity, with g2 = that single-vertex switch
    of g1; returns IDENTICAL for equal graphs, None when nothing fits.

    Scan order is deterministic: left vertices by index, then right, trying
    sigma in canonical order, so non-unique witnesses resolve stably.
    """
    if (g1.m, g1.n) != (g2.m, g2.n):
        raise ValueError("dimension mismatch")
    if g1.colors == g2.colors:
        return IDENTICAL
    bad_rows = [i for i in range(g1.m) if g1.colors[i] != g2.colors[i]]
    if len(bad_rows) == 1:
        v = bad_rows[0]
        for sigma in ALL_PERMS:
            if sigma.is_identity():
                continue
            if all(sigma(c) == g2.colors[v][j] for j, c in enumerate(g1.colors[v])):
                return (VertexRef(Side.LEFT, v), sigma)
    cols1 = [tuple(g1.colors[i][j] for i in range(g1.m)) for j in range(g1.n)]
    cols2 = [tuple(g2.colors[i][j] for i in range(g1.m)) for j in range(g1.n)]
    bad_cols = [j for j in range(g1.n) if cols1[j] != cols2[j]]
    if len(bad_cols) == 1:
        w = bad_cols[0]
        for sigma in ALL_PERMS:
            if sigma.is_identity():
                continue
            if all(sigma(c) == cols2[w][i] for i, c in enumerate(cols1[w])):
                return (VertexRef(Side.RIGHT, w), sigma)
    return None


def is_switch_on_set(
    g1: ColoredBipartiteGraph, g2: ColoredBipartiteGraph, support
) -> S3Perm | None:
    """The sigma (first in canonical order) realizing g2 as a switch of g1 on
    the given support set, if any."""
    if (g1.m, g1.n) != (g2.m, g2.n):
        raise ValueError("dimension mismatch")
    support = frozenset(support)
    for sigma in ALL_PERMS:
        if apply_switch(g1, SwitchOp(support, sigma)) == g2:
            return sigma
    return None


def word_to_json(word: SwitchWord) -> list:
    return [
        {
            "support": [{"side": v.side.value, "i": v.index} for v in sorted(op.support)],
            "sigma": op.sigma.cycle_string(),
        }
        for op in word.ops
    ]


def word_from_json(data) -> SwitchWord:
    if not isinstance(data, list):
        raise ValueError("word JSON must be a list of switch objects")
    ops = []
    for entry in data:
        try:
            raw_support = entry["support"]
            sigma = S3Perm.from_cycle_string(entry["sigma"])
        except (KeyError, TypeError):
            raise ValueError('each switch needs keys "support" and "sigma"') from None
        support = set()
        for item in raw_support:
            try:
                side = Side(item["side"])
                index = item["i"]
            except (KeyError, TypeError, ValueError):
                raise ValueError(f"malformed support entry: {item!r}") from None
            if not isinstance(index, int):
                raise ValueError(f"malformed support entry: {item!r}")
            support.add(VertexRef(side, index))
        ops.append(SwitchOp(frozenset(support), sigma))
    return SwitchWord(tuple(ops))
