"""Buchberger's algorithm with exact rational arithmetic.

Produces reduced, monic Groebner bases for a chosen monomial order
(graded reverse lexicographic unless a different key is supplied) and
enumerates standard monomials of zero-dimensional quotients.  All loops
are capped and raise ResourceCapError rather than running open-ended.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceCapError
from .poly import Monomial, Poly, grevlex_key

DEFAULT_PAIR_CAP = 20_000
DEFAULT_MONOMIAL_CAP = 200_000


def leading_term(f: Poly, key=grevlex_key) -> tuple[Monomial, Fraction]:
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    e = max(f.terms, key=key)
    return e, f.terms[e]


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def reduce_poly(f: Poly, basis: list[Poly], key=grevlex_key) -> Poly:
    """Full normal form of f against the basis (every term reduced)."""
    if not basis:
        return f
    lts = [leading_term(g, key) for g in basis]
    rem: dict[Monomial, Fraction] = {}
    work = dict(f.terms)
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        if not c:
            continue
        hit = next((i for i, (lt, _) in enumerate(lts) if _divides(lt, e)), None)
        if hit is None:
            rem[e] = rem.get(e, Fraction(0)) + c
            continue
        g = basis[hit]
        lt, lc = lts[hit]
        factor = c / lc
        shift = tuple(a - b for a, b in zip(e, lt))
        for eg, cg in g.terms.items():
            if eg == lt:
                continue
            e2 = tuple(a + b for a, b in zip(shift, eg))
            s = work.get(e2, Fraction(0)) - factor * cg
            if s:
                work[e2] = s
            else:
                work.pop(e2, None)
    return Poly(f.nvars, rem)


def s_polynomial(f: Poly, g: Poly, key=grevlex_key) -> Poly:
    ef, cf = leading_term(f, key)
    eg, cg = leading_term(g, key)
    lcm_e = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = tuple(a - b for a, b in zip(lcm_e, ef))
    mg = tuple(a - b for a, b in zip(lcm_e, eg))
    tf = Poly(f.nvars, {mf: 1 / cf})
    tg = Poly(g.nvars, {mg: 1 / cg})
    return tf * f - tg * g


def groebner_basis(gens: list[Poly], key=grevlex_key,
                   pair_cap: int = DEFAULT_PAIR_CAP) -> list[Poly]:
    """Reduced monic Groebner basis of the ideal generated by gens."""
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        return []
    nvars = basis[0].nvars
    for g in basis:
        if g.nvars != nvars:
            raise ValueError("generators live in different polynomial rings")
    basis = [g * (1 / leading_term(g, key)[1]) for g in basis]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    processed = 0
    while pairs:
        # Normal selection: smallest lcm of leading terms first.
        pairs.sort(key=lambda ij: key(tuple(
            max(a, b) for a, b in zip(leading_term(basis[ij[0]], key)[0],
                                      leading_term(basis[ij[1]], key)[0]))),
            reverse=True)
        i, j = pairs.pop()
        processed += 1
        if processed > pair_cap:
            raise ResourceCapError(f"Groebner pair processing exceeded cap {pair_cap}")
        ei = leading_term(basis[i], key)[0]
        ej = leading_term(basis[j], key)[0]
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue  # coprime leading terms reduce to zero
        s = s_polynomial(basis[i], basis[j], key)
        r = reduce_poly(s, basis, key)
        if r.is_zero():
            continue
        r = r * (1 / leading_term(r, key)[1])
        basis.append(r)
        pairs.extend((len(basis) - 1, k) for k in range(len(basis) - 1))
    return _interreduce(basis, key)


def _interreduce(basis: list[Poly], key=grevlex_key) -> list[Poly]:
    # Minimalize: drop elements whose leading term another divides.
    lts = [leading_term(g, key)[0] for g in basis]
    keep = []
    for i, lt in enumerate(lts):
        if any(j != i and _divides(lts[j], lt) and
               (lts[j] != lt or j < i) for j in range(len(basis))):
            continue
        keep.append(i)
    minimal = [basis[i] for i in keep]
    # Fully reduce each against the others.
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = reduce_poly(g, others, key) if others else g
        if not r.is_zero():
            reduced.append(r * (1 / leading_term(r, key)[1]))
    reduced.sort(key=lambda g: key(leading_term(g, key)[0]))
    return reduced


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced basis together with the order it was computed in."""

    nvars: int
    polys: tuple[Poly, ...]
    order_name: str = "grevlex"

    def leading_terms(self, key=grevlex_key) -> list[Monomial]:
        return [leading_term(g, key)[0] for g in self.polys]


def groebner(gens: list[Poly], key=grevlex_key,
             pair_cap: int = DEFAULT_PAIR_CAP,
             order_name: str = "grevlex") -> GroebnerBasis:
    basis = groebner_basis(gens, key, pair_cap)
    nvars = gens[0].nvars if gens else 0
    return GroebnerBasis(nvars=nvars, polys=tuple(basis), order_name=order_name)


def ideal_membership(f: Poly, gb: GroebnerBasis, key=grevlex_key) -> bool:
    return reduce_poly(f, list(gb.polys), key).is_zero()


def standard_monomials(gb: GroebnerBasis, key=grevlex_key,
                       cap: int = DEFAULT_MONOMIAL_CAP) -> list[Monomial]:
    """Monomials outside the leading-term ideal, for zero-dimensional ideals.

    Finiteness requires a pure power of every variable among the leading
    terms; otherwise the quotient is infinite-dimensional and a
    ValueError explains which variable escapes.
    """
    if any(g.is_zero() for g in gb.polys):
        raise ValueError("zero polynomial in a Groebner basis")
    lts = gb.leading_terms(key)
    nvars = gb.nvars
    if not lts:
        raise ValueError("the zero ideal has infinitely many standard monomials")
    if any(sum(lt) == 0 for lt in lts):
        return []  # ideal contains a unit
    bounds = []
    for v in range(nvars):
        pure = [lt[v] for lt in lts if all(x == 0 for i, x in enumerate(lt) if i != v)]
        if not pure:
            raise ValueError(f"quotient is not finite-dimensional: no pure power "
                             f"of variable {v} in the leading-term ideal")
        bounds.append(min(pure))
    out: list[Monomial] = []

    def rec(prefix: list[int]) -> None:
        if len(out) > cap:
            raise ResourceCapError(f"standard monomial enumeration exceeded cap {cap}")
        if len(prefix) == nvars:
            e = tuple(prefix)
            if not any(_divides(lt, e) for lt in lts):
                out.append(e)
            return
        for k in range(bounds[len(prefix)]):
            rec(prefix + [k])

    rec([])
    return sorted(out, key=key)
