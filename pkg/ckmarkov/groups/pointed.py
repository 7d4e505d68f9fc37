from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint

from ckmarkov.config import settings
from ckmarkov.core.errors import BoundExceededError
from ckmarkov.core.verdict import Verdict
from ckmarkov.groups.abelian import (
    FgAbelianGroup,
    GroupElement,
    PointedGroup,
    element_order,
    groups_isomorphic,
)
from ckmarkov.linalg.matrix import IntMatrix
from ckmarkov.linalg.smith import SNFDecomposition, smith_normal_form

logger = logging.getLogger(__name__)

_Coords = tuple[int, ...]


@dataclass(frozen=True)
class PointedDecision:
    verdict: Verdict
    path: str  # which stage of the procedure settled it
    detail: str = ""


# ---------------------------------------------------------------------------
# Divisibility helpers
# ---------------------------------------------------------------------------


def _primes(n: int) -> list[int]:
    return sorted(factorint(n)) if n > 1 else []


def _valuation(n: int, p: int) -> int:
    k = 0
    while n and n % p == 0:
        n //= p
        k += 1
    return k


def in_p_power_subgroup(group: FgAbelianGroup, g: GroupElement, p: int, k: int) -> bool:
    """Whether g lies in p**k · G."""
    q = p**k
    return all(c % math.gcd(q, d) == 0 for c, d in zip(g.torsion_coords, group.torsion)) and all(
        f % q == 0 for f in g.free_coords
    )


def p_height(torsion: tuple[int, ...], coords: _Coords, p: int) -> float:
    """Height of the p-primary component of a torsion element; inf when that component is 0."""
    height = math.inf
    for c, d in zip(coords, torsion):
        pa = p ** _valuation(d, p)
        r = c % pa
        if r:
            height = min(height, _valuation(r, p))
    return height


def ulm_sequence(torsion: tuple[int, ...], coords: _Coords, p: int) -> tuple[float, ...]:
    """Heights of x, p·x, p²·x, ... in the p-primary part, up to the p-exponent."""
    top = max((_valuation(d, p) for d in torsion), default=0)
    seq = []
    for j in range(top + 1):
        scaled = tuple((p**j * c) % d for c, d in zip(coords, torsion))
        seq.append(p_height(torsion, scaled, p))
    return tuple(seq)


# ---------------------------------------------------------------------------
# Brute-force automorphism search
# ---------------------------------------------------------------------------


def _add(a: _Coords, b: _Coords, torsion: tuple[int, ...]) -> _Coords:
    return tuple((x + y) % d for x, y, d in zip(a, b, torsion))


def _times(n: int, a: _Coords, torsion: tuple[int, ...]) -> _Coords:
    return tuple((n * x) % d for x, d in zip(a, torsion))


def _killed_by(d: int, torsion: tuple[int, ...]) -> list[_Coords]:
    """Elements h with d·h = 0, in lexicographic order."""
    steps = [t // math.gcd(t, d) for t in torsion]
    return [tuple(c) for c in itertools.product(*(range(0, t, s) for t, s in zip(torsion, steps)))]


def _span_of(chosen: tuple[_Coords, ...], torsion: tuple[int, ...]) -> SNFDecomposition:
    """Smith form of the relations diag(torsion) with the chosen images appended as columns."""
    k = len(torsion)
    rows = [
        [torsion[i] if j == i else 0 for j in range(k)] + [h[i] for h in chosen]
        for i in range(k)
    ]
    return smith_normal_form(IntMatrix.from_rows(rows))


def _extends_injectively(h: _Coords, d: int, span: SNFDecomposition, torsion: tuple[int, ...]) -> bool:
    """Whether h has order exactly d modulo the span of the images chosen so far."""
    return all(span.solve(_times(d // p, h, torsion)) is None for p in _primes(d))


@lru_cache(maxsize=4)
def _automorphisms(torsion: tuple[int, ...], node_limit: int) -> tuple[tuple[_Coords, ...], ...]:
    """All automorphisms of Z/d1 + ... + Z/dk as tuples of generator images.

    Images are chosen generator by generator; a partial choice survives only
    if it is injective on the summands chosen so far, which for the full
    choice means bijective.
    """
    candidates = [_killed_by(d, torsion) for d in torsion]
    found: list[tuple[_Coords, ...]] = []
    nodes = 0

    def extend(chosen: tuple[_Coords, ...]) -> None:
        nonlocal nodes
        j = len(chosen)
        if j == len(torsion):
            found.append(chosen)
            return
        span = _span_of(chosen, torsion)
        for h in candidates[j]:
            nodes += 1
            if nodes > node_limit:
                raise BoundExceededError(
                    f"automorphism search for {torsion} exceeded {node_limit} nodes"
                )
            if _extends_injectively(h, torsion[j], span, torsion):
                extend(chosen + (h,))

    extend(())
    logger.debug("pointed.automorphisms", extra={"torsion": torsion, "automorphisms": len(found)})
    return tuple(found)


def _image(images: tuple[_Coords, ...], coords: _Coords, torsion: tuple[int, ...]) -> _Coords:
    out = tuple(0 for _ in torsion)
    for c, h in zip(coords, images):
        out = _add(out, _times(c, h, torsion), torsion)
    return out


def _orbit_images(torsion: tuple[int, ...], x: _Coords) -> Iterator[_Coords]:
    """φ(x) for every automorphism φ; raises BoundExceededError before yielding anything."""
    automorphisms = _automorphisms(torsion, settings.max_automorphism_nodes)
    return (_image(images, x, torsion) for images in automorphisms)


def automorphism_orbit(
    group: FgAbelianGroup,
    g: GroupElement,
    max_order: int | None = None,
) -> frozenset[GroupElement]:
    """{φ(g) : φ ∈ Aut(G)} for a finite group, by exhaustive enumeration of Aut(G)."""
    bound = settings.max_group_order if max_order is None else max_order
    if not group.is_finite or group.order > bound:
        raise BoundExceededError(f"group {group} exceeds the brute-force bound {bound}")
    return frozenset(GroupElement(c, ()) for c in _orbit_images(group.torsion, g.torsion_coords))


# ---------------------------------------------------------------------------
# Decision procedure
# ---------------------------------------------------------------------------


def _height_mismatch(torsion: tuple[int, ...], x: _Coords, y: _Coords) -> int | None:
    """First prime whose height sequences differ; None when x and y are automorphic."""
    # exact for finite abelian groups (Kaplansky–Mackey)
    for p in _primes(torsion[-1] if torsion else 1):
        if ulm_sequence(torsion, x, p) != ulm_sequence(torsion, y, p):
            return p
    return None


def _decide_finite(torsion: tuple[int, ...], x: _Coords, y: _Coords, bound: int) -> PointedDecision:
    group = FgAbelianGroup.from_factors(torsion)
    if group.order <= bound:
        try:
            images = _orbit_images(torsion, x)
        except BoundExceededError as exc:
            logger.info("pointed.enumeration_skipped", extra={"reason": str(exc)})
        else:
            return PointedDecision(Verdict.of(y in images), "brute_force", f"searched Aut({group})")
    prime = _height_mismatch(torsion, x, y)
    if prime is not None:
        return PointedDecision(Verdict.FALSE, "height_sequence", f"p={prime}")
    return PointedDecision(Verdict.TRUE, "height_sequence", "all p-height sequences agree")


def _decide_mixed(g: FgAbelianGroup, x: GroupElement, y: GroupElement, bound: int) -> PointedDecision:
    """Infinite-order points of T + Z^r.

    Automorphisms are (t, f) -> (a(t) + h(f), b(f)) with a in Aut(T), b in
    GL(r, Z) and h: Z^r -> T arbitrary, so (t, f) ~ (t', f') iff
    gcd(f) = gcd(f') = n and some a(t) lies in t' + n·T.
    """
    n, m = math.gcd(*x.free_coords), math.gcd(*y.free_coords)
    if n != m:
        return PointedDecision(Verdict.FALSE, "free_gcd", f"gcd {n} vs {m}")
    torsion = g.torsion
    torsion_part = FgAbelianGroup.from_factors(torsion)
    if torsion_part.order > bound:
        logger.warning(
            "pointed.undecided",
            extra={"group": str(g), "x": str(x), "y": str(y)},
        )
        return PointedDecision(
            Verdict.UNDECIDED, "undecided", f"torsion part {torsion_part} exceeds the bound {bound}"
        )
    moduli = [math.gcd(n, d) for d in torsion]
    try:
        images = _orbit_images(torsion, x.torsion_coords)
    except BoundExceededError as exc:
        logger.info("pointed.enumeration_skipped", extra={"reason": str(exc)})
    else:
        hit = any(
            all((c - t) % q == 0 for c, t, q in zip(image, y.torsion_coords, moduli))
            for image in images
        )
        return PointedDecision(Verdict.of(hit), "shear_orbit", f"torsion parts compared modulo {n}·T")
    # no enumeration: try every representative of t' + n·T against t by heights
    shifts = {_times(n, e.torsion_coords, torsion) for e in torsion_part.elements()}
    hit = any(
        _height_mismatch(torsion, x.torsion_coords, _add(y.torsion_coords, s, torsion)) is None
        for s in shifts
    )
    return PointedDecision(Verdict.of(hit), "shear_heights", f"torsion parts compared modulo {n}·T")


def decide_pointed(
    p: PointedGroup,
    q: PointedGroup,
    max_order: int | None = None,
) -> PointedDecision:
    """Decide whether some isomorphism G_p → G_q carries p.point to q.point."""
    bound = settings.max_group_order if max_order is None else max_order
    g, h = p.group, q.group
    x, y = p.point, q.point

    if not groups_isomorphic(g, h):
        return PointedDecision(Verdict.FALSE, "group_type", f"{g} vs {h}")

    ox, oy = element_order(g, x), element_order(h, y)
    if ox != oy:
        return PointedDecision(Verdict.FALSE, "element_order", f"{ox} vs {oy}")

    for prime in _primes(g.exponent):
        top = max(_valuation(d, prime) for d in g.torsion)
        for k in range(1, top + 2):
            if in_p_power_subgroup(g, x, prime, k) != in_p_power_subgroup(h, y, prime, k):
                return PointedDecision(Verdict.FALSE, "divisibility", f"{prime}^{k}·G membership differs")

    if not g.torsion:
        # pure Z^r: GL(r, Z) orbits are classified by the gcd of the coordinates
        gx, gy = math.gcd(*x.free_coords), math.gcd(*y.free_coords)
        return PointedDecision(Verdict.of(gx == gy), "free_gcd", f"gcd {gx} vs {gy}")

    if g.is_finite or (not any(x.free_coords) and not any(y.free_coords)):
        # torsion points of T + Z^r: the torsion subgroup is characteristic and
        # every automorphism of it extends, so decide inside T.
        return _decide_finite(g.torsion, x.torsion_coords, y.torsion_coords, bound)

    return _decide_mixed(g, x, y, bound)


def pointed_isomorphic(
    p: PointedGroup,
    q: PointedGroup,
    max_order: int | None = None,
) -> Verdict:
    decision = decide_pointed(p, q, max_order)
    logger.info("pointed.decided", extra={"path": decision.path, "result": decision.verdict.value})
    return decision.verdict
