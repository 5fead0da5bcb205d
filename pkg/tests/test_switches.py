import itertools

import pytest
from hypothesis import given
import hypothesis.strategies as st

from switchlab.graphs import Side, VertexRef, constant_graph, new_graph
from switchlab.randomlab import random_graph
from switchlab.s3 import ALL_PERMS, IDENTITY, S3Perm, commutator, commutes
from switchlab.switches import (
    IDENTICAL,
    SwitchOp,
    SwitchWord,
    apply_switch,
    apply_word,
    detect_vertex_switch,
    edge_kill_word,
    inverse_word,
    is_switch_on_set,
    left_switch,
    monochromatize,
    right_switch,
    word_from_json,
    word_to_json,
)

from conftest import graphs, perms


def c(s):
    return S3Perm.from_cycle_string(s)


def test_apply_switch_basic():
    k11 = new_graph(1, 1, [[1]])
    assert apply_switch(k11, left_switch(0, c("(12)"))).colors == ((2,),)
    both = SwitchOp(
        frozenset({VertexRef(Side.LEFT, 0), VertexRef(Side.RIGHT, 0)}), c("(123)")
    )
    assert apply_switch(k11, both).colors == ((3,),)
    g = random_graph(3, 3, 5)
    assert apply_switch(g, left_switch(1, IDENTITY)) == g
    with pytest.raises(ValueError):
        apply_switch(k11, left_switch(1, c("(12)")))


@given(graphs(min_m=1, min_n=1), perms, st.data())
def test_apply_switch_per_edge_law(g, sigma, data):
    lset = data.draw(st.sets(st.integers(0, g.m - 1)))
    rset = data.draw(st.sets(st.integers(0, g.n - 1)))
    support = {VertexRef(Side.LEFT, i) for i in lset} | {
        VertexRef(Side.RIGHT, j) for j in rset
    }
    out = apply_switch(g, SwitchOp(frozenset(support), sigma))
    for i, j in g.edges():
        t = (i in lset) + (j in rset)
        want = g.colors[i][j]
        for _ in range(t):
            want = sigma(want)
        assert out.colors[i][j] == want


def test_apply_word_cancellation():
    g = random_graph(2, 3, 9)
    op = left_switch(0, c("(123)"))
    undo = left_switch(0, c("(132)"))
    assert apply_word(g, SwitchWord((op, undo))) == g
    assert apply_word(g, SwitchWord(())) == g


def test_disjoint_single_vertex_switches_commute():
    # same-side switches with disjoint supports act on disjoint edge sets
    for seed in range(20):
        g = random_graph(3, 3, seed)
        a = left_switch(0, c("(123)"))
        b = left_switch(2, c("(12)"))
        assert apply_word(g, SwitchWord((a, b))) == apply_word(g, SwitchWord((b, a)))


@given(graphs(min_m=1, min_n=1), st.data())
def test_inverse_word_round_trip(g, data):
    n_ops = data.draw(st.integers(0, 4))
    ops = []
    for _ in range(n_ops):
        side = data.draw(st.sampled_from([Side.LEFT, Side.RIGHT]))
        limit = g.m if side is Side.LEFT else g.n
        idx = data.draw(st.integers(0, limit - 1))
        ops.append(SwitchOp(frozenset({VertexRef(side, idx)}), data.draw(perms)))
    word = SwitchWord(tuple(ops))
    assert apply_word(apply_word(g, word), inverse_word(word)) == g


def test_edge_kill_word_contents():
    w = edge_kill_word(0, 1, c("(123)"), c("(12)"))
    assert w.ops == (
        left_switch(0, c("(123)")),
        right_switch(1, c("(12)")),
        left_switch(0, c("(132)")),
        right_switch(1, c("(12)")),
    )
    with pytest.raises(ValueError):
        edge_kill_word(0, 0, c("(123)"), c("(132)"))
    with pytest.raises(ValueError):
        edge_kill_word(0, 0, IDENTITY, c("(12)"))


def test_edge_kill_example():
    g = constant_graph(2, 2, 1)
    out = apply_word(g, edge_kill_word(0, 0, c("(123)"), c("(12)")))
    assert out.colors == ((3, 1), (1, 1))
    # row-only and column-only edges cancel
    assert out.colors[0][1] == 1
    assert out.colors[1][0] == 1


def test_edge_kill_locality_all_noncommuting_pairs():
    g = random_graph(2, 2, 3)
    pairs = [
        (f, gp)
        for f, gp in itertools.product(ALL_PERMS, repeat=2)
        if not commutes(f, gp)
    ]
    assert len(pairs) == 18
    for x, y in g.edges():
        for f, gp in pairs:
            out = apply_word(g, edge_kill_word(x, y, f, gp))
            gamma = commutator(f, gp)
            for i, j in g.edges():
                expected = gamma(g.colors[i][j]) if (i, j) == (x, y) else g.colors[i][j]
                assert out.colors[i][j] == expected


def test_monochromatize_examples():
    assert monochromatize(constant_graph(2, 3, 2), 2) == SwitchWord(())
    g = new_graph(1, 1, [[2]])
    word = monochromatize(g, 1)
    assert apply_word(g, word).colors == ((1,),)
    g = random_graph(3, 3, 7)
    word = monochromatize(g, 1)
    out = apply_word(g, word)
    assert out == constant_graph(3, 3, 1)
    off = sum(1 for i, j in g.edges() if g.colors[i][j] != 1)
    assert len(word) <= 8 * off
    with pytest.raises(ValueError):
        monochromatize(g, 4)


@given(graphs(min_m=1, min_n=1), st.integers(1, 3))
def test_monochromatize_property(g, target):
    word = monochromatize(g, target)
    assert apply_word(g, word) == constant_graph(g.m, g.n, target)
    off = sum(1 for i, j in g.edges() if g.colors[i][j] != target)
    assert len(word) <= 8 * off


def test_detect_vertex_switch_examples():
    g1 = new_graph(2, 2, [[1, 2], [3, 1]])
    assert detect_vertex_switch(g1, new_graph(2, 2, [[2, 1], [3, 1]])) == (
        VertexRef(Side.LEFT, 0),
        c("(12)"),
    )
    assert detect_vertex_switch(g1, g1) == IDENTICAL
    # single changed edge that no row or column switch explains
    g2 = new_graph(2, 2, [[1, 1], [3, 1]])
    assert detect_vertex_switch(g1, g2) is None
    # oracle: no (v, sigma) reproduces g2
    for side, count in ((Side.LEFT, 2), (Side.RIGHT, 2)):
        for v in range(count):
            for sigma in ALL_PERMS:
                if sigma.is_identity():
                    continue
                op = SwitchOp(frozenset({VertexRef(side, v)}), sigma)
                assert apply_switch(g1, op) != g2
    with pytest.raises(ValueError):
        detect_vertex_switch(g1, new_graph(1, 1, [[1]]))


@given(graphs(min_m=1, min_n=1), st.data())
def test_detect_vertex_switch_round_trip(g, data):
    side = data.draw(st.sampled_from([Side.LEFT, Side.RIGHT]))
    limit = g.m if side is Side.LEFT else g.n
    v = VertexRef(side, data.draw(st.integers(0, limit - 1)))
    sigma = data.draw(st.sampled_from([p for p in ALL_PERMS if not p.is_identity()]))
    g2 = apply_switch(g, SwitchOp(frozenset({v}), sigma))
    found = detect_vertex_switch(g, g2)
    assert found is not None
    if found == IDENTICAL:
        assert g == g2  # sigma fixed every color in play
    else:
        fv, fsigma = found
        assert apply_switch(g, SwitchOp(frozenset({fv}), fsigma)) == g2


def test_is_switch_on_set():
    g = random_graph(2, 3, 11)
    assert is_switch_on_set(g, g, frozenset()) == IDENTITY
    assert is_switch_on_set(g, random_graph(2, 3, 12), frozenset()) is None
    a = frozenset({VertexRef(Side.LEFT, 0)})
    g2 = apply_switch(g, SwitchOp(a, c("(23)")))
    assert is_switch_on_set(g, g2, a) == c("(23)")
    spanning = frozenset({VertexRef(Side.LEFT, 0), VertexRef(Side.RIGHT, 1)})
    g3 = apply_switch(g, SwitchOp(spanning, c("(123)")))
    assert is_switch_on_set(g, g3, spanning) == c("(123)")


def test_word_json_round_trip():
    word = SwitchWord(
        (
            left_switch(0, c("(12)")),
            SwitchOp(
                frozenset({VertexRef(Side.LEFT, 1), VertexRef(Side.RIGHT, 0)}),
                c("(123)"),
            ),
        )
    )
    data = word_to_json(word)
    assert data[0] == {"support": [{"side": "L", "i": 0}], "sigma": "(12)"}
    assert word_from_json(data) == word
    with pytest.raises(ValueError):
        word_from_json({"not": "a list"})
    with pytest.raises(ValueError):
        word_from_json([{"support": [{"side": "X", "i": 0}], "sigma": "(12)"}])
