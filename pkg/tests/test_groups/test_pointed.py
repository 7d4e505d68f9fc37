from __future__ import annotations

import time

import pytest

from ckmarkov.config import settings
from ckmarkov.core.errors import BoundExceededError
from ckmarkov.core.verdict import Verdict
from ckmarkov.groups.abelian import FgAbelianGroup, PointedGroup, abelian_groups_up_to
from ckmarkov.groups.pointed import (
    automorphism_orbit,
    decide_pointed,
    in_p_power_subgroup,
    pointed_isomorphic,
    ulm_sequence,
)


def _pg(torsion: tuple[int, ...], t: list[int], free: list[int] | None = None) -> PointedGroup:
    free = free or []
    g = FgAbelianGroup.from_factors(torsion, free_rank=len(free))
    return PointedGroup(g, g.element(t, free))


# ---------------------------------------------------------------------------
# Orbits and heights
# ---------------------------------------------------------------------------


def test_orbit_in_cyclic_group_is_units() -> None:
    g = FgAbelianGroup.from_factors((6,))
    orbit = automorphism_orbit(g, g.element([1]))
    assert {e.torsion_coords for e in orbit} == {(1,), (5,)}


def test_orbit_in_klein_group_is_all_nonzero() -> None:
    g = FgAbelianGroup.from_factors((2, 2))
    orbit = automorphism_orbit(g, g.element([1, 0]))
    assert {e.torsion_coords for e in orbit} == {(1, 0), (0, 1), (1, 1)}


def test_orbit_in_elementary_abelian_group() -> None:
    g = FgAbelianGroup.from_factors((2, 2, 2))
    assert len(automorphism_orbit(g, g.element([1, 1, 0]))) == 7


def test_orbit_respects_heights_in_mixed_exponents() -> None:
    g = FgAbelianGroup.from_factors((2, 4))
    orbit = automorphism_orbit(g, g.element([0, 1]))
    assert {e.torsion_coords for e in orbit} == {(0, 1), (0, 3), (1, 1), (1, 3)}


def test_orbit_in_large_cyclic_group() -> None:
    g = FgAbelianGroup.from_factors((4999,))
    assert len(automorphism_orbit(g, g.element([1]))) == 4998


def test_orbit_of_zero_is_zero() -> None:
    g = FgAbelianGroup.from_factors((2, 4))
    assert automorphism_orbit(g, g.zero()) == frozenset({g.zero()})


def test_orbit_refuses_infinite_or_large_groups() -> None:
    z = FgAbelianGroup.from_factors((), free_rank=1)
    with pytest.raises(BoundExceededError):
        automorphism_orbit(z, z.zero())
    g = FgAbelianGroup.from_factors((8,))
    with pytest.raises(BoundExceededError):
        automorphism_orbit(g, g.zero(), max_order=4)


def test_p_power_membership() -> None:
    g = FgAbelianGroup.from_factors((2, 4))
    assert in_p_power_subgroup(g, g.element([0, 2]), 2, 1)
    assert not in_p_power_subgroup(g, g.element([1, 0]), 2, 1)
    assert not in_p_power_subgroup(g, g.element([0, 2]), 2, 2)


def test_ulm_sequence_in_z4() -> None:
    assert ulm_sequence((4,), (1,), 2) == (0, 1, float("inf"))
    assert ulm_sequence((4,), (2,), 2) == (1, float("inf"), float("inf"))


# ---------------------------------------------------------------------------
# Decision procedure
# ---------------------------------------------------------------------------


def test_different_group_types() -> None:
    decision = decide_pointed(_pg((4,), [1]), _pg((2, 2), [1, 0]))
    assert decision.verdict is Verdict.FALSE
    assert decision.path == "group_type"


def test_different_orders() -> None:
    decision = decide_pointed(_pg((4,), [1]), _pg((4,), [2]))
    assert decision.verdict is Verdict.FALSE
    assert decision.path == "element_order"


def test_same_order_different_height() -> None:
    decision = decide_pointed(_pg((2, 4), [1, 0]), _pg((2, 4), [0, 2]))
    assert decision.verdict is Verdict.FALSE
    assert decision.path == "divisibility"


def test_units_of_cyclic_group_by_brute_force() -> None:
    decision = decide_pointed(_pg((4,), [1]), _pg((4,), [3]))
    assert decision.verdict is Verdict.TRUE
    assert decision.path == "brute_force"


def test_large_cyclic_group_within_time_budget() -> None:
    start = time.perf_counter()
    decision = decide_pointed(_pg((4999,), [1]), _pg((4999,), [2]))
    elapsed = time.perf_counter() - start
    assert decision.verdict is Verdict.TRUE
    assert decision.path == "brute_force"
    assert elapsed < 10


def test_large_cyclic_group_with_free_summand() -> None:
    # (t, f) = (1, 2) against (4, 2) in Z/2457 + Z: 2457 is odd, so 2·T = T
    decision = decide_pointed(_pg((2457,), [1], [2]), _pg((2457,), [4], [2]))
    assert decision.verdict is Verdict.TRUE
    assert decision.path == "shear_orbit"


def test_height_sequence_when_over_bound() -> None:
    decision = decide_pointed(_pg((4,), [1]), _pg((4,), [3]), max_order=1)
    assert decision.verdict is Verdict.TRUE
    assert decision.path == "height_sequence"


def test_free_points_compared_by_gcd() -> None:
    assert pointed_isomorphic(_pg((), [], [2]), _pg((), [], [-2])) is Verdict.TRUE
    assert pointed_isomorphic(_pg((), [], [1]), _pg((), [], [2])) is Verdict.FALSE
    assert pointed_isomorphic(_pg((), [], [2, 4]), _pg((), [], [0, 2])) is Verdict.TRUE
    assert pointed_isomorphic(_pg((), [], [1]), _pg((), [], [0])) is Verdict.FALSE


def test_torsion_point_in_mixed_group() -> None:
    decision = decide_pointed(_pg((3,), [1], [0]), _pg((3,), [2], [0]))
    assert decision.verdict is Verdict.TRUE
    assert decision.path == "brute_force"


def test_shear_moves_torsion_part() -> None:
    # (t, f) -> (t + f, f) is an automorphism of Z/2 + Z
    decision = decide_pointed(_pg((2,), [1], [1]), _pg((2,), [0], [1]))
    assert decision.verdict is Verdict.TRUE
    assert decision.path == "shear_orbit"


def test_shear_orbit_uses_torsion_automorphisms() -> None:
    decision = decide_pointed(_pg((3,), [1], [3]), _pg((3,), [2], [3]))
    assert decision.verdict is Verdict.TRUE
    assert decision.path == "shear_orbit"


def test_shear_heights_when_enumeration_is_cut(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(settings, "max_automorphism_nodes", 1)
    decision = decide_pointed(_pg((3,), [1], [3]), _pg((3,), [2], [3]))
    assert decision.verdict is Verdict.TRUE
    assert decision.path == "shear_heights"


def test_mixed_group_over_bound_is_undecided() -> None:
    decision = decide_pointed(_pg((2,), [1], [1]), _pg((2,), [0], [1]), max_order=1)
    assert decision.verdict is Verdict.UNDECIDED
    assert pointed_isomorphic(_pg((2,), [1], [1]), _pg((2,), [0], [1]), max_order=1) is Verdict.UNDECIDED


# ---------------------------------------------------------------------------
# Oracle agreement
# ---------------------------------------------------------------------------


@pytest.mark.slow
def test_agrees_with_orbit_oracle_on_small_groups() -> None:
    mismatches = []
    for group in abelian_groups_up_to(16):
        elements = list(group.elements())
        for x in elements:
            orbit = automorphism_orbit(group, x)
            for y in elements:
                truth = Verdict.of(y in orbit)
                p, q = PointedGroup(group, x), PointedGroup(group, y)
                if pointed_isomorphic(p, q) is not truth:
                    mismatches.append((group.torsion, x, y, "brute_force"))
                if pointed_isomorphic(p, q, max_order=1) is not truth:
                    mismatches.append((group.torsion, x, y, "height_sequence"))
    assert mismatches == []
