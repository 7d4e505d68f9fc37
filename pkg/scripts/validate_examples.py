"""validate_examples.py: run the acceptance battery against the library.

Checks the worked examples (zeta denominators, 1̄ versus 1₋, compare(2, 2̄))
and the randomized properties over a seeded sample of irreducible,
non-permutation 0/1 matrices.

Usage:
    python scripts/validate_examples.py
    python scripts/validate_examples.py --seed 7 --sample-size 50 --max-n 5

Defaults come from RANDOM_SEED, SAMPLE_SIZE and MAX_SAMPLE_N.
"""

from __future__ import annotations

import argparse
import random
import sys
from collections.abc import Callable

from ckmarkov.classify.compare import compare
from ckmarkov.classify.invariants import invariant_triple
from ckmarkov.config import settings
from ckmarkov.core.verdict import Verdict
from ckmarkov.dynamics.graph import is_irreducible, is_permutation_matrix
from ckmarkov.dynamics.zeta import zeta_consistency
from ckmarkov.groups.abelian import PointedGroup, abelian_groups_up_to
from ckmarkov.groups.pointed import automorphism_orbit, pointed_isomorphic
from ckmarkov.linalg.determinant import char_denominator, det_one_minus
from ckmarkov.linalg.polynomial import Polynomial
from ckmarkov.surgery.binary import BinaryMatrix
from ckmarkov.surgery.constructions import (
    bar_construction,
    cuntz_splice,
    permutation_conjugate,
    primitive_transfer_bar_to_tilde,
    ps_expansion,
    tilde_construction,
)
from ckmarkov.surgery.maps import phi_check

# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

FULL_2_SHIFT = BinaryMatrix.from_rows([[1, 1], [1, 1]])
ONE = BinaryMatrix.from_rows([[1]])
ONE_BAR = BinaryMatrix.from_rows([[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 1, 1], [0, 0, 1, 1]])
ONE_MINUS = BinaryMatrix.from_rows([[1, 1, 0], [1, 1, 1], [0, 1, 1]])

SPLICE_2_DENOMINATOR = Polynomial.from_coefficients([1, -4, 3, 2, -1])
BAR_2_DENOMINATOR = Polynomial.from_coefficients([1, -3, 0, 4, -1])
# computed from the tilde matrix itself; the printed 1 - 3z + z^2 + z^3 + z^4 has the wrong trace
TILDE_2_DENOMINATOR = Polynomial.from_coefficients([1, -2, -2, 4])


def random_classifiable(rng: random.Random, max_n: int) -> BinaryMatrix:
    """Rejection-sample an irreducible, non-permutation 0/1 matrix with 2 <= N <= max_n."""
    while True:
        n = rng.randint(2, max(2, max_n))
        density = rng.uniform(0.3, 0.7)
        a = BinaryMatrix.from_rows([[int(rng.random() < density) for _ in range(n)] for _ in range(n)])
        if is_irreducible(a) and not is_permutation_matrix(a):
            return a


# ---------------------------------------------------------------------------
# Criteria
# ---------------------------------------------------------------------------


def check_zeta_denominators(sample: list[BinaryMatrix]) -> str | None:
    got = {
        "2-": char_denominator(cuntz_splice(FULL_2_SHIFT)),
        "bar(2)": char_denominator(bar_construction(FULL_2_SHIFT)),
        "tilde(2)": char_denominator(tilde_construction(FULL_2_SHIFT)),
    }
    expected = {"2-": SPLICE_2_DENOMINATOR, "bar(2)": BAR_2_DENOMINATOR, "tilde(2)": TILDE_2_DENOMINATOR}
    for name, poly in got.items():
        if poly != expected[name]:
            return f"det(1 - z·{name}) = {poly}, expected {expected[name]}"
    if len(set(got.values())) != 3:
        return "denominators are not pairwise distinct"
    return None


def check_one_bar(sample: list[BinaryMatrix]) -> str | None:
    if bar_construction(ONE) != ONE_BAR:
        return f"bar([1]) =\n{bar_construction(ONE)}"
    bar, minus = invariant_triple(ONE_BAR), invariant_triple(ONE_MINUS)
    if (bar.group.torsion, bar.group.free_rank, bar.u.free_coords, bar.sign) not in {
        ((), 1, (1,), 0),
        ((), 1, (-1,), 0),
    }:
        return f"triple of 1̄ is ({bar.group}, {bar.u}, {bar.sign})"
    if (minus.group.torsion, minus.group.free_rank, minus.u.free_coords, minus.sign) != ((), 1, (0,), 0):
        return f"triple of 1₋ is ({minus.group}, {minus.u}, {minus.sign})"
    if pointed_isomorphic(bar.pointed, minus.pointed) is not Verdict.FALSE:
        return "(G(1̄), u) and (G(1₋), u) were not told apart"
    return None


def check_sign_flip(sample: list[BinaryMatrix]) -> str | None:
    for a in sample:
        d = det_one_minus(a)
        checks = {
            "bar": det_one_minus(bar_construction(a)) == -d,
            "expansion": det_one_minus(ps_expansion(a)) == d,
            "splice": det_one_minus(cuntz_splice(a)) == -d,
            "tilde": det_one_minus(tilde_construction(a)) == det_one_minus(bar_construction(a)),
        }
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            return f"{failed} for\n{a}"
    return None


def check_group_preservation(sample: list[BinaryMatrix]) -> str | None:
    for a in sample:
        g, g_bar = invariant_triple(a).group, invariant_triple(bar_construction(a)).group
        if (g.torsion, g.free_rank) != (g_bar.torsion, g_bar.free_rank):
            return f"G(A) = {g} but G(Ā) = {g_bar} for\n{a}"
        if not phi_check(a):
            return f"Φ does not carry u_A to u_Ā for\n{a}"
    return None


def check_structure(sample: list[BinaryMatrix]) -> str | None:
    for a in sample:
        bar = bar_construction(a)
        if not is_irreducible(bar) or is_permutation_matrix(bar):
            return f"Ā is not irreducible non-permutation for\n{a}"
    return None


def check_determinant_product(sample: list[BinaryMatrix]) -> str | None:
    for a in sample:
        triple = invariant_triple(a)
        d = triple.determinant
        if (d == 0) != (triple.group.free_rank >= 1):
            return f"det(1-A) = {d} with G(A) = {triple.group}"
        if d and abs(d) != triple.group.order:
            return f"|det(1-A)| = {abs(d)} but |G(A)| = {triple.group.order}"
    return None


def check_zeta_consistency(sample: list[BinaryMatrix]) -> str | None:
    small = [a for a in sample if a.size <= 5][:100]
    for a in small:
        if not zeta_consistency(a, 8):
            return f"zeta series and 1/det(1 - zA) disagree for\n{a}"
    return None


def check_pointed_oracle(sample: list[BinaryMatrix]) -> str | None:
    mismatches = 0
    for group in abelian_groups_up_to(16):
        elements = list(group.elements())
        for x in elements:
            orbit = automorphism_orbit(group, x)
            for y in elements:
                truth = Verdict.of(y in orbit)
                p, q = PointedGroup(group, x), PointedGroup(group, y)
                # max_order=1 forces the height-sequence path
                if pointed_isomorphic(p, q) is not truth or pointed_isomorphic(p, q, max_order=1) is not truth:
                    mismatches += 1
    return f"{mismatches} mismatches" if mismatches else None


def check_classification(sample: list[BinaryMatrix], rng: random.Random) -> str | None:
    report = compare(FULL_2_SHIFT, bar_construction(FULL_2_SHIFT))
    expected = {
        "stable_isomorphic": Verdict.TRUE,
        "isomorphic": Verdict.TRUE,
        "coe": Verdict.FALSE,
        "flip_coe": Verdict.TRUE,
        "flip_flow_equivalent": Verdict.TRUE,
    }
    got = report.verdicts()
    for name, verdict in expected.items():
        if got[name] is not verdict:
            return f"compare(2, 2̄).{name} = {got[name].value}"
    for a in sample[:50]:
        perm = list(range(1, a.size + 1))
        rng.shuffle(perm)
        report = compare(a, permutation_conjugate(a, perm))
        if not report.implications_hold():
            return f"report implications violated for\n{a}"
        if any(v is not Verdict.TRUE for v in report.verdicts().values()):
            return f"compare(A, PAP⁻¹) not all true for perm {perm} and\n{a}"
    return None


def check_primitive_transfer(sample: list[BinaryMatrix]) -> str | None:
    for a in sample:
        n = a.size
        bar, tilde = bar_construction(a), tilde_construction(a)
        if primitive_transfer_bar_to_tilde(bar, n) != tilde:
            return f"transfer(Ā) != Ã for\n{a}"
        diff = [(i, j) for i in range(n + 3) for j in range(n + 3) if bar[i, j] != tilde[i, j]]
        if diff != [(n + 1, n + 1)]:
            return f"Ā and Ã differ at {[(i + 1, j + 1) for i, j in diff]}"
    return None


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=settings.random_seed)
    parser.add_argument("--sample-size", type=int, default=settings.sample_size)
    parser.add_argument("--max-n", type=int, default=settings.max_sample_n)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    sample = [random_classifiable(rng, args.max_n) for _ in range(args.sample_size)]

    criteria: list[tuple[str, Callable[[], str | None]]] = [
        ("zeta denominators", lambda: check_zeta_denominators(sample)),
        ("1̄ versus 1₋", lambda: check_one_bar(sample)),
        ("determinant signs", lambda: check_sign_flip(sample)),
        ("group preservation and Φ", lambda: check_group_preservation(sample)),
        ("irreducibility of Ā", lambda: check_structure(sample)),
        ("|det(1-A)| = |G(A)|", lambda: check_determinant_product(sample)),
        ("zeta consistency", lambda: check_zeta_consistency(sample)),
        ("pointed oracle (order <= 16)", lambda: check_pointed_oracle(sample)),
        ("classification battery", lambda: check_classification(sample, rng)),
        ("primitive transfer", lambda: check_primitive_transfer(sample)),
    ]

    print("=" * 70)
    print("  ckmarkov acceptance battery")
    print(f"  seed={args.seed} sample={args.sample_size} max_n={args.max_n}")
    print("=" * 70)

    failed = 0
    for number, (name, check) in enumerate(criteria, start=1):
        try:
            problem = check()
        except Exception as exc:  # noqa: BLE001
            problem = f"raised {type(exc).__name__}: {exc}"
        status = "PASS" if problem is None else "FAIL"
        print(f"[{number:>2}] {status}  {name}")
        if problem is not None:
            failed += 1
            for line in problem.splitlines():
                print(f"       {line}")

    print("=" * 70)
    print(f"  Results: {len(criteria) - failed}/{len(criteria)} passed")
    print("=" * 70)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
