"""Candidate groups realized as permutation actions on the coloring space.

The colorings of K_{m,n} are indexed by base-3 integers (row-major, first
edge most significant).  A candidate group is realized by a finite generator
list acting on that id space: adjacent vertex transpositions, single-vertex
switches driven by subgroup generators, and optionally the side swap.  Orbit
partitions are computed by min-label propagation to a fixpoint, which yields
the same components as a closure BFS and numbers orbits by least member id,
so results are bit-identical regardless of evaluation order.

Equality of orbit partitions is the finite surrogate for two candidate
groups having the same invariant structure: the groups differ exactly in
which colorings they can interconvert.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graphs import ColoredBipartiteGraph
from .s3 import (
    FULL_SUBGROUP,
    S3Perm,
    Subgroup,
    TRIVIAL_SUBGROUP,
    commutator,
    elementwise_commute,
    enumerate_subgroups,
    noncommuting_witness,
)

__all__ = [
    "DEFAULT_ORBIT_BUDGET",
    "BudgetExceededError",
    "GroupSpec",
    "Action",
    "OrbitPartition",
    "CandidateGroup",
    "coloring_id",
    "id_to_coloring",
    "vertex_perm_actions",
    "switch_actions",
    "transpose_action",
    "single_edge_action",
    "generators_for",
    "partition_from_actions",
    "orbit_partition",
    "partitions_equal",
    "refines",
    "enumerate_candidate_groups",
    "candidate_by_name",
    "closure_equals",
    "distinguish_candidates",
    "redu_saturation_check",
]

#: Default cap on m*n; 3^12 = 531441 colorings is still desk-scale.
DEFAULT_ORBIT_BUDGET = 12


class BudgetExceededError(Exception):
    """The coloring space 3^(m*n) exceeds the configured budget."""


def _check_budget(m: int, n: int, budget: int) -> None:
    if m * n > budget:
        raise BudgetExceededError(
            f"coloring space 3^{m * n} exceeds budget m*n <= {budget}"
        )


def coloring_id(g: ColoredBipartiteGraph) -> int:
    """Base-3 row-major id in [0, 3^(m*n)); the first edge is the most
    significant digit."""
    value = 0
    for i in range(g.m):
        for j in range(g.n):
            value = value * 3 + (g.colors[i][j] - 1)
    return value


def id_to_coloring(m: int, n: int, cid: int) -> ColoredBipartiteGraph:
    if not (0 <= cid < 3 ** (m * n)):
        raise ValueError(f"coloring id {cid} out of range for K_{{{m},{n}}}")
    digits = []
    v = cid
    for _ in range(m * n):
        digits.append(v % 3)
        v //= 3
    digits.reverse()
    rows = tuple(
        tuple(digits[i * n + j] + 1 for j in range(n)) for i in range(m)
    )
    return ColoredBipartiteGraph(m, n, rows)


def _digit_matrix(m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(N, m*n) base-3 digit matrix for all ids, plus the place-value vector."""
    k = m * n
    count = 3**k
    places = 3 ** np.arange(k - 1, -1, -1, dtype=np.int64)
    ids = np.arange(count, dtype=np.int64)
    digits = ((ids[:, None] // places[None, :]) % 3).astype(np.int8)
    return digits, places


def _encode(digits: np.ndarray, places: np.ndarray) -> np.ndarray:
    return digits.astype(np.int64) @ places


@dataclass(frozen=True, eq=False)
class Action:
    """A bijection of the coloring id space, tabulated as ``table[i] -> image``."""

    name: str
    table: np.ndarray

    def __call__(self, cid: int) -> int:
        return int(self.table[cid])


def _position_action(name: str, m: int, n: int, posmap) -> Action:
    digits, places = _digit_matrix(m, n)
    gathered = digits[:, posmap] if m * n else digits
    return Action(name, _encode(gathered, places))


def _sigma_lut(sigma: S3Perm) -> np.ndarray:
    return np.array([sigma(c) - 1 for c in (1, 2, 3)], dtype=np.int8)


def _columns_action(name: str, m: int, n: int, positions, sigma: S3Perm) -> Action:
    digits, places = _digit_matrix(m, n)
    out = digits.copy()
    lut = _sigma_lut(sigma)
    if positions:
        out[:, positions] = lut[out[:, positions]]
    return Action(name, _encode(out, places))


def vertex_perm_actions(m: int, n: int) -> list[Action]:
    """Adjacent transpositions on each side; they generate all side-preserving
    vertex permutations."""
    actions = []
    for t in range(m - 1):
        posmap = list(range(m * n))
        for j in range(n):
            posmap[t * n + j], posmap[(t + 1) * n + j] = (
                posmap[(t + 1) * n + j],
                posmap[t * n + j],
            )
        actions.append(_position_action(f"swapL({t},{t + 1})", m, n, posmap))
    for t in range(n - 1):
        posmap = list(range(m * n))
        for i in range(m):
            posmap[i * n + t], posmap[i * n + t + 1] = (
                posmap[i * n + t + 1],
                posmap[i * n + t],
            )
        actions.append(_position_action(f"swapR({t},{t + 1})", m, n, posmap))
    return actions


def switch_actions(side_left: bool, sigmas, m: int, n: int) -> list[Action]:
    """One single-vertex switch action per (vertex, sigma)."""
    actions = []
    tag = "L" if side_left else "R"
    count = m if side_left else n
    for v in range(count):
        if side_left:
            positions = [v * n + j for j in range(n)]
        else:
            positions = [i * n + v for i in range(m)]
        for sigma in sigmas:
            actions.append(
                _columns_action(
                    f"switch{tag}({v},{sigma.cycle_string()})", m, n, positions, sigma
                )
            )
    return actions


def transpose_action(m: int, n: int) -> Action:
    """The side swap; defined only on square dimensions."""
    if m != n:
        raise ValueError("side swap needs square dimensions")
    posmap = [j * n + i for i in range(m) for j in range(n)]
    return _position_action("swapSides", m, n, posmap)


def single_edge_action(m: int, n: int, i: int, j: int, sigma: S3Perm) -> Action:
    """Recolor exactly edge (i, j) by sigma."""
    if not (0 <= i < m and 0 <= j < n):
        raise ValueError(f"edge ({i}, {j}) out of range")
    return _columns_action(
        f"edge({i},{j},{sigma.cycle_string()})", m, n, [i * n + j], sigma
    )


@dataclass(frozen=True)
class GroupSpec:
    """A candidate group: switch subgroups per side, plus optional vertex
    permutations and the side swap (square dimensions only)."""

    h_left: Subgroup
    h_right: Subgroup
    vertex_perms: bool = True
    allow_swap: bool = False


def generators_for(spec: GroupSpec, m: int, n: int, budget: int = DEFAULT_ORBIT_BUDGET) -> list[Action]:
    _check_budget(m, n, budget)
    actions: list[Action] = []
    if spec.vertex_perms:
        actions.extend(vertex_perm_actions(m, n))
    actions.extend(switch_actions(True, spec.h_left.generators(), m, n))
    actions.extend(switch_actions(False, spec.h_right.generators(), m, n))
    if spec.allow_swap:
        actions.append(transpose_action(m, n))
    return actions


@dataclass(eq=False)
class OrbitPartition:
    """Dense orbit ids over the whole coloring space, numbered by least
    member id."""

    m: int
    n: int
    labels: np.ndarray
    orbit_count: int

    def orbit_of(self, cid: int) -> int:
        return int(self.labels[cid])


def partition_from_actions(actions, m: int, n: int, budget: int = DEFAULT_ORBIT_BUDGET) -> OrbitPartition:
    """Connected components of the id space under the generator actions."""
    _check_budget(m, n, budget)
    count = 3 ** (m * n)
    labels = np.arange(count, dtype=np.int64)
    tables = [a.table for a in actions]
    for table in tables:
        if table.shape != (count,):
            raise ValueError("action table does not match the coloring space")
    while True:
        before = labels
        labels = labels.copy()
        for table in tables:
            np.minimum(labels, labels[table], out=labels)
        while True:
            jumped = labels[labels]
            if np.array_equal(jumped, labels):
                break
            labels = jumped
        if np.array_equal(labels, before):
            break
    uniq, dense = np.unique(labels, return_inverse=True)
    return OrbitPartition(m, n, dense.astype(np.int64), len(uniq))


def orbit_partition(spec: GroupSpec, m: int, n: int, budget: int = DEFAULT_ORBIT_BUDGET) -> OrbitPartition:
    return partition_from_actions(generators_for(spec, m, n, budget), m, n, budget)


def partitions_equal(p1: OrbitPartition, p2: OrbitPartition) -> bool:
    """Set equality of the partitions (canonical labels make it array
    equality)."""
    if (p1.m, p1.n) != (p2.m, p2.n):
        raise ValueError("dimension mismatch")
    return bool(np.array_equal(p1.labels, p2.labels))


def refines(p1: OrbitPartition, p2: OrbitPartition) -> bool:
    """True iff every p1-orbit lies inside a single p2-orbit."""
    if (p1.m, p1.n) != (p2.m, p2.n):
        raise ValueError("dimension mismatch")
    _, first = np.unique(p1.labels, return_index=True)
    return bool(np.all(p2.labels == p2.labels[first[p1.labels]]))


@dataclass(frozen=True)
class CandidateGroup:
    name: str
    spec: GroupSpec


def enumerate_candidate_groups(with_swap: bool = False) -> list[CandidateGroup]:
    """The sixteen candidate groups: the automorphism bookend, three switch
    variants (left, right, both) per nontrivial proper subgroup, left/right
    full-subgroup switches, and the full symmetric bookend.

    Pairs of distinct nontrivial subgroups on opposite sides are excluded;
    their elementwise products disagree, which collapses the pair (see
    ``reducibility_table``).  With ``with_swap``, side-symmetric candidates
    get a variant with the side-swap generator appended; adjoining the swap
    to an asymmetric candidate would also adjoin the mirrored switches, which
    lands in a symmetric variant anyway.
    """
    proper = [h for h in enumerate_subgroups() if h.order in (2, 3)]
    groups = [CandidateGroup("Aut", GroupSpec(TRIVIAL_SUBGROUP, TRIVIAL_SUBGROUP))]
    for h in proper:
        groups.append(CandidateGroup(f"S_l^{h.label}", GroupSpec(h, TRIVIAL_SUBGROUP)))
        groups.append(CandidateGroup(f"S_r^{h.label}", GroupSpec(TRIVIAL_SUBGROUP, h)))
        groups.append(CandidateGroup(f"S_lr^{h.label}", GroupSpec(h, h)))
    groups.append(CandidateGroup("S_l^S3", GroupSpec(FULL_SUBGROUP, TRIVIAL_SUBGROUP)))
    groups.append(CandidateGroup("S_r^S3", GroupSpec(TRIVIAL_SUBGROUP, FULL_SUBGROUP)))
    groups.append(CandidateGroup("Sym_lr", GroupSpec(FULL_SUBGROUP, FULL_SUBGROUP)))
    if with_swap:
        for cand in list(groups):
            if cand.spec.h_left == cand.spec.h_right:
                spec = GroupSpec(cand.spec.h_left, cand.spec.h_right, True, True)
                groups.append(CandidateGroup(f"ol_{cand.name}", spec))
    return groups


def candidate_by_name(name: str) -> CandidateGroup:
    for cand in enumerate_candidate_groups(with_swap=True):
        if cand.name == name:
            return cand
    known = ", ".join(c.name for c in enumerate_candidate_groups(with_swap=True))
    raise ValueError(f"unknown group {name!r}; known groups: {known}")


def closure_equals(gen_a, gen_b, m: int, n: int, budget: int = DEFAULT_ORBIT_BUDGET) -> bool:
    """True iff both generator lists induce the same orbit partition, the
    finite proxy for equal group closures."""
    pa = partition_from_actions(gen_a, m, n, budget)
    pb = partition_from_actions(gen_b, m, n, budget)
    return partitions_equal(pa, pb)


def distinguish_candidates(
    m: int, n: int, with_swap: bool = False, budget: int = DEFAULT_ORBIT_BUDGET
) -> dict:
    """Pairwise comparison of all candidate orbit partitions at (m, n).

    Colliding pairs are reported, not treated as failures: whether a fixed
    finite size separates every candidate pair is an empirical question, and
    the caller escalates size on collisions.
    """
    candidates = enumerate_candidate_groups(with_swap)
    parts = {c.name: orbit_partition(c.spec, m, n, budget) for c in candidates}
    groups = [
        {"name": c.name, "orbit_count": parts[c.name].orbit_count} for c in candidates
    ]
    collisions = [
        [a.name, b.name]
        for a, b in itertools.combinations(candidates, 2)
        if partitions_equal(parts[a.name], parts[b.name])
    ]
    return {"m": m, "n": n, "groups": groups, "collisions": collisions}


def redu_saturation_check(
    h1: Subgroup, h2: Subgroup, m: int, n: int, budget: int = DEFAULT_ORBIT_BUDGET
) -> bool:
    """Check that single-edge recolorings by the commutator add nothing to the
    group generated by (h1 left, h2 right) switches plus vertex permutations.

    Equality is forced because the four-switch edge-kill words realize those
    recolorings inside the generated group; the check recomputes both orbit
    partitions and compares.  Undefined for elementwise-commuting pairs.
    """
    if elementwise_commute(h1, h2):
        raise ValueError("subgroup pair commutes elementwise; no edge kill exists")
    f, g = noncommuting_witness(h1, h2)
    gamma = commutator(f, g)
    base = generators_for(GroupSpec(h1, h2, vertex_perms=True), m, n, budget)
    extra = [
        single_edge_action(m, n, i, j, gamma)
        for i in range(m)
        for j in range(n)
    ]
    return closure_equals(base, base + extra, m, n, budget)
