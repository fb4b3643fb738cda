import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gns import invariants, numsgp
from gns.errors import LemmaViolation, NotMinimalTriple, NotNumericalSemigroup


def test_sieve_examples():
    ns = numsgp.ns_from_generators({3, 4, 5})
    assert ns.gaps == {1, 2} and ns.frobenius == 2
    ns = numsgp.ns_from_generators({1})
    assert ns.gaps == frozenset() and ns.frobenius == -1
    ns = numsgp.ns_from_generators({3, 4})
    assert ns.gaps == {1, 2, 5} and ns.frobenius == 5


def test_gcd_rejected():
    with pytest.raises(NotNumericalSemigroup):
        numsgp.ns_from_generators({4, 6})
    with pytest.raises(NotNumericalSemigroup):
        numsgp.ns_from_generators({0, 3})


def test_pair_genus_check_examples():
    assert numsgp.pair_genus_check(3, 4) == (5, 3)
    assert numsgp.pair_genus_check(2, 3) == (1, 1)
    for k in range(1, 11):
        assert numsgp.pair_genus_check(2, 2 * k + 1) == (2 * k - 1, k)


def _brute_multiplier(a, others):
    lam = 1
    while True:
        n = lam * a
        x, y = others
        if any((n - b * y) % x == 0 for b in range(n // y + 1)):
            return lam
        lam += 1


@pytest.mark.parametrize(
    "triple,expected_c,expected_sym",
    [((4, 5, 6), (3, 2, 2), True), ((3, 4, 5), (3, 2, 2), False), ((3, 5, 7), (4, 2, 2), False)],
)
def test_three_gen_symmetry_examples(triple, expected_c, expected_sym):
    c, sym = numsgp.three_gen_symmetry(*triple)
    assert c == expected_c and sym == expected_sym
    # agreement with an in-test brute-force multiplier search
    a1, a2, a3 = triple
    assert c == (
        _brute_multiplier(a1, (a2, a3)),
        _brute_multiplier(a2, (a1, a3)),
        _brute_multiplier(a3, (a1, a2)),
    )


def test_non_minimal_triple_rejected():
    with pytest.raises(NotMinimalTriple):
        numsgp.three_gen_symmetry(2, 3, 5)  # 5 = 2 + 3
    with pytest.raises(NotMinimalTriple):
        numsgp.three_gen_type_bound(2, 4, 7)  # gcd(2, 4) blocks minimality of 4


def test_type_bound_examples():
    assert numsgp.three_gen_type_bound(3, 4, 5) == 2
    assert numsgp.three_gen_type_bound(4, 5, 6) == 1
    assert numsgp.three_gen_type_bound(5, 6, 7) == 2


def test_bridges_round_trip():
    ns = numsgp.ns_from_generators({3, 7, 8})
    g = numsgp.ns_to_gns(ns)
    assert g.dim == 1 and g.genus == len(ns.gaps)
    back = numsgp.gns_to_ns(g)
    assert back.gaps == ns.gaps and back.frobenius == ns.frobenius
    assert back.generators == numsgp.ns_minimal_generators(ns)


def test_bridge_trivial():
    ns = numsgp.ns_from_generators({1})
    g = numsgp.ns_to_gns(ns)
    assert g.genus == 0 and g.minimal_generators == {(1,)}
    assert numsgp.gns_to_ns(g).frobenius == -1


def test_type_via_bridge_matches_sieve():
    for triple in [(3, 4, 5), (4, 5, 6), (5, 7, 9), (3, 7, 8)]:
        ns = numsgp.ns_from_generators(triple)
        assert numsgp.ns_type(ns) == invariants.semigroup_type(numsgp.ns_to_gns(ns))


@given(st.integers(2, 25), st.integers(2, 25))
def test_pair_closed_forms(a, b):
    if math.gcd(a, b) != 1:
        return
    lo, hi = min(a, b), max(a, b)
    frob, genus = numsgp.pair_genus_check(lo, hi)
    assert frob == lo * hi - lo - hi
    assert genus == (frob + 1) // 2


def test_pair_genus_identity_is_asserted():
    # identity failures raise rather than return; exercise the guard wiring
    with pytest.raises(NotNumericalSemigroup):
        numsgp.pair_genus_check(2, 4)
    with pytest.raises((NotNumericalSemigroup, LemmaViolation)):
        numsgp.pair_genus_check(1, 5)
