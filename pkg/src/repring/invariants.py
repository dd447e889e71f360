"""Weyl-invariant elements of the character ring and basis probes.

The invariant ring is handled through two computational bases: orbit
sums (one per dominant weight) and products of the characters attached
to the standard basis weights.  Characters come from the alternating-sum
quotient evaluated in an index-doubled lattice, so the half-sum of
positive roots never leaves the integers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .lattice import det
from .laurent import LaurentPoly, augmentation, exact_divide, weyl_act
from .linalg import RowSpace, solve_coordinates
from .rootdata import (RootDatum, dominant_representative, is_dominant,
                       simple_reflections, two_rho, vector_orbit, weyl_group)


@dataclass(frozen=True)
class InvariantElement:
    """A Laurent polynomial together with its parent datum.

    certified_invariant records that invariance under all simple
    reflections was verified at construction time.
    """

    datum: RootDatum
    poly: LaurentPoly
    certified_invariant: bool

    def __post_init__(self) -> None:
        if self.poly.rank != self.datum.rank:
            raise ValueError("polynomial rank does not match datum rank")


def _check_invariant(d: RootDatum, f: LaurentPoly) -> bool:
    return all(weyl_act([list(r) for r in s], f) == f for s in simple_reflections(d))


def orbit_sum(d: RootDatum, weight) -> InvariantElement:
    """Sum of e^mu over the Weyl orbit of a dominant weight."""
    lam = tuple(map(int, weight))
    if not is_dominant(d, lam):
        raise ValueError(f"weight {lam} is not dominant")
    terms = {mu: Fraction(1) for mu in vector_orbit(d, lam)}
    poly = LaurentPoly(d.rank, terms)
    return InvariantElement(d, poly, certified_invariant=_check_invariant(d, poly))


def weyl_character(d: RootDatum, weight) -> InvariantElement:
    """The character with a given dominant highest weight.

    Both alternating sums are formed with doubled exponents (so the Weyl
    vector appears as the integral sum of positive roots), divided
    exactly, and the quotient is halved back.  The result is verified
    invariant before being certified.
    """
    lam = tuple(map(int, weight))
    if not is_dominant(d, lam):
        raise ValueError(f"weight {lam} is not dominant")
    w = weyl_group(d)
    rho2 = two_rho(d)
    top = tuple(2 * x + y for x, y in zip(lam, rho2))

    def alternating(mu) -> LaurentPoly:
        terms: dict[tuple[int, ...], Fraction] = {}
        for m in w.elements:
            ex = tuple(sum(m[i][j] * mu[j] for j in range(d.rank)) for i in range(d.rank))
            s = Fraction(det([list(r) for r in m]))
            terms[ex] = terms.get(ex, Fraction(0)) + s
        return LaurentPoly(d.rank, terms)

    numerator = alternating(top)
    denominator = alternating(rho2)
    doubled = exact_divide(numerator, denominator)
    halved: dict[tuple[int, ...], Fraction] = {}
    for e, c in doubled.terms.items():
        if any(x % 2 for x in e):
            raise AssertionError("character quotient left the doubled lattice")
        halved[tuple(x // 2 for x in e)] = c
    poly = LaurentPoly(d.rank, halved)
    if not _check_invariant(d, poly):
        raise AssertionError("character failed the invariance check")
    return InvariantElement(d, poly, certified_invariant=True)


def character_dimension(d: RootDatum, weight) -> Fraction:
    return augmentation(weyl_character(d, weight).poly)


def dominant_weights_in_box(d: RootDatum, height_bound: int) -> list[tuple[int, ...]]:
    """All dominant weights whose coordinates have absolute value at most
    the bound, in sorted order."""
    if height_bound < 0:
        raise ValueError("height bound must be nonnegative")
    out = []
    span = range(-height_bound, height_bound + 1)

    def rec(prefix: list[int]) -> None:
        if len(prefix) == d.rank:
            if is_dominant(d, prefix):
                out.append(tuple(prefix))
            return
        for x in span:
            rec(prefix + [x])

    rec([])
    return sorted(out)


def decompose_into_orbit_sums(d: RootDatum, f: LaurentPoly) -> dict[tuple[int, ...], Fraction]:
    """Write an invariant polynomial as a combination of orbit sums.

    Greedy: repeatedly strip the full orbit of the lexicographically
    largest remaining exponent.  Raises if the input was not invariant
    (the residue fails to clear).
    """
    if f.rank != d.rank:
        raise ValueError("rank mismatch")
    rem = f
    out: dict[tuple[int, ...], Fraction] = {}
    steps = 0
    cap = 10 * len(f.terms) + 100
    while not rem.is_zero():
        steps += 1
        if steps > cap:
            raise ValueError("orbit-sum decomposition did not terminate; "
                             "input is not Weyl-invariant")
        mu = max(rem.terms)
        c = rem.terms[mu]
        lam = dominant_representative(d, mu)
        out[lam] = out.get(lam, Fraction(0)) + c
        rem = rem - orbit_sum(d, lam).poly * c
    return {k: v for k, v in out.items() if v != 0}


def invariants_basis_probe(d: RootDatum, height_bound: int) -> list[tuple[int, ...]]:
    """Dominant weights indexing the orbit-sum basis below a height bound.

    Before returning, the list is sanity-checked: a pseudorandom
    polynomial supported in the box is symmetrized and must decompose
    exactly into orbit sums from the returned list.
    """
    weights = dominant_weights_in_box(d, height_bound)
    rng = random.Random(99173)
    box = []
    span = range(-height_bound, height_bound + 1)

    def rec(prefix: list[int]) -> None:
        if len(prefix) == d.rank:
            box.append(tuple(prefix))
            return
        for x in span:
            rec(prefix + [x])

    rec([])
    support_size = min(len(box), 6)
    chosen = rng.sample(box, support_size)
    f = LaurentPoly(d.rank, {e: Fraction(rng.randint(1, 9)) for e in chosen})
    w = weyl_group(d)
    g = LaurentPoly.zero(d.rank)
    for m in w.elements:
        g = g + weyl_act([list(r) for r in m], f)
    dec = decompose_into_orbit_sums(d, g)
    allowed = set(weights)
    for lam in dec:
        if lam not in allowed:
            raise AssertionError(
                f"symmetrized box polynomial needed orbit sum {lam} outside the box")
    return weights


def _poly_row(f: LaurentPoly, index: dict[tuple[int, ...], int], width: int) -> list[Fraction]:
    row = [Fraction(0)] * width
    for e, c in f.terms.items():
        row[index[e]] = c
    return row


@dataclass(frozen=True)
class CharacterBasisReport:
    """Outcome of the fundamental-character probe.

    transition[i][j] is the coefficient of the orbit sum at
    column_weights[j] in the expansion of the character monomial indexed
    by weights[i].  column_weights extends weights when an expansion
    reaches outside the enumerated box.
    """

    independent: bool
    spanning: bool
    weights: tuple[tuple[int, ...], ...]
    column_weights: tuple[tuple[int, ...], ...]
    transition: tuple[tuple[Fraction, ...], ...]
    all_passed: bool


def fundamental_character_probe(d: RootDatum, degree_bound: int) -> CharacterBasisReport:
    """Probe that the characters of the standard basis weights generate
    the invariant ring freely up to a degree bound.

    Requires a built-in simply connected datum, where the basis weights
    are the fundamental weights.  Checks exact linear independence of
    the character monomials, expresses every orbit sum below the bound
    through them, and returns the transition matrix from character
    monomials to orbit sums (rows and columns share an index set of
    dominant weights, sorted).
    """
    if d.variant != "simply_connected":
        raise ValueError("fundamental-character probe needs a built-in "
                         "simply connected datum")
    fundamentals = []
    for i in range(d.rank):
        e = [0] * d.rank
        e[i] = 1
        fundamentals.append(weyl_character(d, e).poly)

    weights = []

    def rec(prefix: list[int], remaining: int) -> None:
        if len(prefix) == d.rank:
            weights.append(tuple(prefix))
            return
        for k in range(remaining + 1):
            rec(prefix + [k], remaining - k)

    rec([], degree_bound)
    weights.sort()

    monomials = {}
    for k in weights:
        f = LaurentPoly.one(d.rank)
        for chi, e in zip(fundamentals, k):
            if e:
                f = f * chi ** e
        monomials[k] = f

    supports = sorted({e for f in monomials.values() for e in f.terms})
    index = {e: i for i, e in enumerate(supports)}
    width = len(supports)
    space = RowSpace(width)
    independent = all(space.add(_poly_row(monomials[k], index, width)) for k in weights)

    spanning = True
    rows = [_poly_row(monomials[k], index, width) for k in weights]
    for lam in weights:
        os_poly = orbit_sum(d, lam).poly
        if any(e not in index for e in os_poly.terms):
            spanning = False
            break
        if solve_coordinates(rows, _poly_row(os_poly, index, width)) is None:
            spanning = False
            break

    decs = {k: decompose_into_orbit_sums(d, monomials[k]) for k in weights}
    columns = sorted(set(weights) | {lam for dec in decs.values() for lam in dec})
    transition = tuple(tuple(decs[k].get(lam, Fraction(0)) for lam in columns)
                       for k in weights)
    return CharacterBasisReport(
        independent=independent,
        spanning=spanning,
        weights=tuple(weights),
        column_weights=tuple(columns),
        transition=transition,
        all_passed=independent and spanning,
    )


def dominance_leq(d: RootDatum, lower, upper) -> bool:
    """Whether upper - lower is a nonnegative rational combination of the
    simple roots."""
    diff = [u - l for u, l in zip(upper, lower)]
    from .rootdata import root_coefficients
    try:
        coeffs = root_coefficients(d, diff)
    except ValueError:
        return False
    recomposed = [Fraction(0)] * d.rank
    for c, a in zip(coeffs, d.simple_roots):
        recomposed = [x + c * y for x, y in zip(recomposed, a)]
    if recomposed != [Fraction(x) for x in diff]:
        return False
    return all(c >= 0 for c in coeffs)


def finiteness_probe(d: RootDatum, module_gens: list[LaurentPoly], height_bound: int) -> bool:
    """Whether every monomial of height <= bound lies in the span of
    invariant multiples of the given module generators.

    The invariant side is truncated to orbit sums of dominant weights of
    height at most bound + max generator height, which suffices for a
    generating set and keeps the computation finite.
    """
    if not module_gens:
        return height_bound < 0
    for g in module_gens:
        if g.rank != d.rank:
            raise ValueError("generator rank mismatch")
    extra = max(g.height() for g in module_gens)
    inv_weights = dominant_weights_in_box(d, height_bound + extra)
    products = []
    for lam in inv_weights:
        os_poly = orbit_sum(d, lam).poly
        for g in module_gens:
            products.append(os_poly * g)
    supports = sorted({e for f in products for e in f.terms})
    index = {e: i for i, e in enumerate(supports)}
    width = len(supports)
    space = RowSpace(width)
    for f in products:
        space.add(_poly_row(f, index, width))

    targets = []
    span = range(-height_bound, height_bound + 1)

    def rec(prefix: list[int]) -> None:
        if len(prefix) == d.rank:
            targets.append(tuple(prefix))
            return
        for x in span:
            rec(prefix + [x])

    rec([])
    for e in targets:
        if e not in index:
            return False
        row = [Fraction(0)] * width
        row[index[e]] = Fraction(1)
        if not space.contains(row):
            return False
    return True
