import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle_utils
from conftest import CHAIN3_GAPS, CHAIN3_MIN_GENS, ELEVEN_GAP_GENERATORS, ELEVEN_GAPS, NINE_GAPS
from gns import core, enumeration
from gns.errors import DimensionError, InvalidGap, NotAMonoid, NotGns, Undetermined
from gns.lattice import graded_key


def test_validate_gapset_examples():
    assert core.validate_gapset(2, NINE_GAPS)
    assert core.validate_gapset(2, [(0, 1)])
    assert not core.validate_gapset(2, [(1, 1)])


def test_validate_gapset_rejects_zero_and_negative():
    with pytest.raises(InvalidGap):
        core.validate_gapset(2, [(0, 0)])
    with pytest.raises(InvalidGap):
        core.validate_gapset(2, [(0, -1)])
    with pytest.raises(InvalidGap):
        core.validate_gapset(3, [(0, 1)])


def test_from_gaps_examples():
    s = core.from_gaps(2, NINE_GAPS)
    assert s.genus == 9
    assert s.conductor == (4, 5)
    t = core.from_gaps(2, [])
    assert t.genus == 0 and t.minimal_generators == {(1, 0), (0, 1)}
    chain = core.from_gaps(2, CHAIN3_GAPS)
    assert chain.genus == 3


def test_from_gaps_rejects_non_monoid_complement():
    with pytest.raises(NotAMonoid):
        core.from_gaps(2, [(1, 1)])


def test_membership():
    s = core.from_gaps(2, NINE_GAPS)
    assert not core.membership(s, (1, 3))
    assert core.membership(s, (2, 2))
    assert core.membership(s, (0, 0))
    with pytest.raises(DimensionError):
        core.membership(s, (1, 2, 3))


def test_minimal_generators_examples():
    chain = core.from_gaps(2, CHAIN3_GAPS)
    assert chain.minimal_generators == set(CHAIN3_MIN_GENS)
    assert core.from_gaps(2, []).minimal_generators == {(1, 0), (0, 1)}
    nine = core.from_gaps(2, NINE_GAPS)
    assert nine.minimal_generators == oracle_utils.brute_minimal_generators(2, NINE_GAPS)


def test_from_generators_examples():
    s = core.from_generators(2, ELEVEN_GAP_GENERATORS)
    assert s.gaps == frozenset(ELEVEN_GAPS)
    assert core.embedding_dimension(s) == 6
    assert core.from_generators(2, [(1, 0), (0, 1)]).gaps == frozenset()


def test_from_generators_matches_dp_oracle():
    gens = [(2, 0), (3, 0), (0, 3), (0, 4), (0, 5), (1, 1)]
    s = core.from_generators(2, gens)
    oracle = oracle_utils.gaps_from_generators(gens, (12, 12))
    assert s.gaps == {p for p in oracle}


def test_from_generators_undetermined_slab():
    with pytest.raises(Undetermined) as exc:
        core.from_generators(2, [(2, 0), (3, 0), (0, 2), (0, 3)])
    failures = exc.value.failures
    assert failures, "diagnostics should carry shell failures"
    assert any(p[0] == 1 or p[1] == 1 for p in failures)


def test_from_generators_not_gns_axis_gcd():
    with pytest.raises(NotGns):
        core.from_generators(2, [(2, 0), (4, 0), (0, 1), (1, 1)])
    with pytest.raises(NotGns):
        core.from_generators(2, [(1, 0)])  # nothing ever lands on the second axis


def test_from_generators_rejects_zero():
    with pytest.raises(InvalidGap):
        core.from_generators(2, [(0, 0), (1, 0)])


def test_from_generators_explicit_bound_single_shot():
    # an explicit bound is tried once, no growth
    with pytest.raises(Undetermined):
        core.from_generators(2, [(2, 0), (3, 0), (0, 2), (0, 3)], (10, 10))
    s = core.from_generators(2, ELEVEN_GAP_GENERATORS, (40, 20))
    assert s.gaps == frozenset(ELEVEN_GAPS)
    with pytest.raises(InvalidGap):
        core.from_generators(2, ELEVEN_GAP_GENERATORS, (3, 3))


def test_embedding_dimension_lower_bound(d2_nodes):
    assert all(
        len(s.minimal_generators) >= 4 for s in d2_nodes if s.gaps and s.genus <= 4
    )


def test_conductor_membership():
    s = core.from_gaps(2, NINE_GAPS)
    c = s.conductor
    for p in itertools.product(range(c[0], c[0] + 3), range(c[1], c[1] + 3)):
        assert core.membership(s, p)


def test_round_trip_small(d2_nodes):
    for s in d2_nodes:
        if s.genus > 5:
            continue
        rebuilt = core.from_generators(2, s.minimal_generators)
        assert rebuilt.gaps == s.gaps


def test_permute_gns():
    s = core.from_gaps(2, CHAIN3_GAPS)
    t = core.permute_gns(s, (1, 0))
    assert t.gaps == {(1, 0), (2, 0), (4, 0)}
    assert t.minimal_generators == {tuple(reversed(p)) for p in s.minimal_generators}


def test_documents_round_trip():
    s = core.from_gaps(2, NINE_GAPS)
    doc = core.to_document(s)
    assert doc["genus"] == 9 and doc["embedding_dimension"] == 8
    assert core.from_document({"dim": 2, "gaps": doc["gaps"]}) == s
    built = core.from_document({"dim": 2, "generators": [list(g) for g in ELEVEN_GAP_GENERATORS]})
    assert built.gaps == frozenset(ELEVEN_GAPS)
    with pytest.raises(InvalidGap):
        core.from_document({"dim": 2})


@st.composite
def tree_semigroup(draw):
    dim = draw(st.integers(1, 3))
    depth = draw(st.integers(0, 5))
    s = core.trivial_gns(dim)
    for _ in range(depth):
        kids = enumeration.children(s)
        if not kids:
            break
        s = kids[draw(st.integers(0, len(kids) - 1))]
    return s


@settings(max_examples=40, deadline=None)
@given(tree_semigroup())
def test_random_semigroup_round_trips(s):
    assert core.validate_gapset(s.dim, s.gaps) or not s.gaps
    if s.gaps:
        rebuilt = core.from_generators(s.dim, s.minimal_generators)
        assert rebuilt.gaps == s.gaps
        assert core.from_gaps(s.dim, s.gaps).minimal_generators == s.minimal_generators


@settings(max_examples=30, deadline=None)
@given(tree_semigroup())
def test_random_semigroup_generators_match_brute_force(s):
    assert s.minimal_generators == oracle_utils.brute_minimal_generators(s.dim, s.gaps)
