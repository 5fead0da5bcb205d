import itertools

import pytest

from switchlab.s3 import (
    ALL_PERMS,
    FULL_SUBGROUP,
    IDENTITY,
    TRIVIAL_SUBGROUP,
    ReducibilityRow,
    S3Perm,
    Subgroup,
    commutator,
    commutes,
    compose,
    elementwise_commute,
    enumerate_subgroups,
    inverse,
    noncommuting_witness,
    reducibility_table,
    subgroup_generated,
)


def c(s):
    return S3Perm.from_cycle_string(s)


def brute_compose(p, q):
    # independent oracle: apply q, then p, via dict lookups
    qm = {x: q.image[x - 1] for x in (1, 2, 3)}
    pm = {x: p.image[x - 1] for x in (1, 2, 3)}
    return tuple(pm[qm[x]] for x in (1, 2, 3))


def test_compose_matches_oracle_exhaustively():
    for p, q in itertools.product(ALL_PERMS, repeat=2):
        assert compose(p, q).image == brute_compose(p, q)


# the twelve products displayed for the six non-commuting subgroup pairs
DISPLAYED_PRODUCTS = [
    ("(12)", "(123)", "(23)"),
    ("(123)", "(12)", "(13)"),
    ("(13)", "(123)", "(12)"),
    ("(123)", "(13)", "(23)"),
    ("(23)", "(123)", "(13)"),
    ("(123)", "(23)", "(12)"),
    ("(12)", "(13)", "(132)"),
    ("(13)", "(12)", "(123)"),
    ("(12)", "(23)", "(123)"),
    ("(23)", "(12)", "(132)"),
    ("(23)", "(13)", "(123)"),
    ("(13)", "(23)", "(132)"),
]


@pytest.mark.parametrize("a,b,expected", DISPLAYED_PRODUCTS)
def test_product_table(a, b, expected):
    assert compose(c(a), c(b)) == c(expected)


def test_identity_neutral_and_inverses():
    for p in ALL_PERMS:
        assert compose(p, IDENTITY) == p
        assert compose(IDENTITY, p) == p
        assert compose(p, inverse(p)) == IDENTITY
    assert inverse(c("(123)")) == c("(132)")
    assert inverse(c("(12)")) == c("(12)")
    assert inverse(IDENTITY) == IDENTITY


def test_associativity_exhaustive():
    for p, q, r in itertools.product(ALL_PERMS, repeat=3):
        assert compose(compose(p, q), r) == compose(p, compose(q, r))


def test_commutator_iff_commutes():
    for f, g in itertools.product(ALL_PERMS, repeat=2):
        assert (commutator(f, g) == IDENTITY) == commutes(f, g)


def test_commutator_values():
    assert commutator(c("(12)"), c("(12)")) == IDENTITY
    assert commutator(c("(123)"), c("(132)")) == IDENTITY

    # oracle: evaluate g^-1(f^-1(g(f(x)))) pointwise
    def oracle(f, g):
        fi, gi = inverse(f), inverse(g)
        return tuple(gi(fi(g(f(x)))) for x in (1, 2, 3))

    got = commutator(c("(123)"), c("(12)"))
    assert got.image == oracle(c("(123)"), c("(12)"))
    assert got == c("(132)")


def test_perm_validation():
    with pytest.raises(ValueError):
        S3Perm((1, 1, 3))
    with pytest.raises(ValueError):
        c("(1234)")
    with pytest.raises(ValueError):
        IDENTITY(0)


def test_cycle_string_round_trip():
    for p in ALL_PERMS:
        assert S3Perm.from_cycle_string(p.cycle_string()) == p
    assert {p.cycle_string() for p in ALL_PERMS} == {
        "()",
        "(12)",
        "(13)",
        "(23)",
        "(123)",
        "(132)",
    }


def test_enumerate_subgroups():
    subs = enumerate_subgroups()
    assert len(subs) == 6
    assert tuple(h.order for h in subs) == (1, 2, 2, 2, 3, 6)
    assert [h.label for h in subs] == ["1", "(12)", "(13)", "(23)", "(123)", "S3"]
    for h in subs:
        for p, q in itertools.product(h.elements, repeat=2):
            assert compose(p, q) in h
            assert inverse(p) in h


def test_subgroup_validation():
    with pytest.raises(ValueError):
        Subgroup(frozenset({c("(12)")}))  # no identity
    with pytest.raises(ValueError):
        Subgroup(frozenset({IDENTITY, c("(12)"), c("(13)")}))  # not closed


def test_subgroup_generated():
    assert subgroup_generated({c("(12)")}).order == 2
    assert subgroup_generated({c("(12)"), c("(13)")}) == FULL_SUBGROUP
    assert subgroup_generated(set()) == TRIVIAL_SUBGROUP
    nontrivial = [h for h in enumerate_subgroups() if h.order > 1]
    for h1, h2 in itertools.combinations(nontrivial, 2):
        assert subgroup_generated(h1.elements | h2.elements) == FULL_SUBGROUP


def test_elementwise_commute():
    by_label = {h.label: h for h in enumerate_subgroups()}
    assert elementwise_commute(by_label["(12)"], by_label["(12)"])
    assert not elementwise_commute(by_label["(12)"], by_label["(123)"])
    assert not elementwise_commute(by_label["(13)"], by_label["(23)"])
    # no two distinct nontrivial proper subgroups commute elementwise
    proper = [h for h in enumerate_subgroups() if h.order in (2, 3)]
    for h1, h2 in itertools.combinations(proper, 2):
        assert not elementwise_commute(h1, h2)
        assert noncommuting_witness(h1, h2) is not None


def test_reducibility_table():
    table = reducibility_table()
    assert len(table) == 6
    for row in table:
        assert isinstance(row, ReducibilityRow)
        assert row.f in row.h1 and row.g in row.h2
        assert not commutes(row.f, row.g)
        assert row.fg == compose(row.f, row.g)
        assert row.gf == compose(row.g, row.f)
        assert row.fg != row.gf
    entries = {
        (r.f.cycle_string(), r.g.cycle_string()): (
            r.fg.cycle_string(),
            r.gf.cycle_string(),
        )
        for r in table
    }
    assert entries[("(12)", "(123)")] == ("(23)", "(13)")
    assert entries[("(12)", "(23)")] == ("(123)", "(132)")
