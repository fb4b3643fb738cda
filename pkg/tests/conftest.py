import pytest

from gns import enumeration

# the running examples used across the suite
NINE_GAPS = [(0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (3, 0), (3, 2)]
ELEVEN_GAP_GENERATORS = [(0, 3), (0, 4), (0, 5), (1, 0), (4, 1), (7, 2)]
ELEVEN_GAPS = [
    (0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2),
    (3, 1), (3, 2), (4, 2), (5, 2), (6, 2),
]
CHAIN3_GAPS = [(0, 1), (0, 2), (0, 4)]  # genus-3, pseudo-symmetric
CHAIN3_MIN_GENS = [(1, 0), (0, 3), (1, 1), (1, 2), (0, 5), (0, 7)]
TRIAD_GAPS = [(0, 1), (1, 0), (1, 2)]  # genus-3, symmetric
TRIAD_MIN_GENS = [(0, 3), (1, 1), (0, 2), (3, 0), (2, 0), (2, 1)]

# required census values (almost symmetric / symmetric / pseudo-symmetric)
TABLE_D2_E6 = {
    1: (0, 0, 0), 2: (2, 0, 2), 3: (4, 2, 2), 4: (0, 0, 0), 5: (8, 4, 4),
    6: (8, 6, 2), 7: (4, 4, 0), 8: (10, 4, 6), 9: (10, 8, 2), 10: (4, 4, 0),
}
TABLE_D2_E6_STRETCH = {11: (10, 6, 4), 12: (12, 10, 2), 13: (6, 4, 2), 14: (8, 4, 4)}
TABLE_D3_E8 = {
    1: (0, 0, 0), 2: (0, 0, 0), 3: (9, 9, 0), 4: (3, 3, 0), 5: (0, 0, 0),
    6: (27, 27, 0), 7: (3, 3, 0),
}
TABLE_D3_E8_STRETCH = {8: (6, 6, 0), 9: (27, 27, 0), 10: (3, 3, 0), 11: (0, 0, 0)}


@pytest.fixture(scope="session")
def d2_nodes():
    """Every GNS in the plane with genus <= 9 (full tree walk)."""
    return list(enumeration.iter_tree(2, 9))


@pytest.fixture(scope="session")
def d3_nodes():
    """Every GNS in N^3 with genus <= 6."""
    return list(enumeration.iter_tree(3, 6))
