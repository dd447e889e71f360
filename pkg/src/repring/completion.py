"""Finite presentations of invariant rings and their local truncations.

A presentation names a few invariant Laurent polynomials as generators,
possibly inverting some of them, and records polynomial relations among
them.  Around an evaluation point this data supports exact computation
of the quotients by powers of the point's maximal ideal, and therefore
a finite certificate that restriction to a centralizer subsystem is an
isomorphism on each truncation level.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .cyclotomic import Cyclo, cyclotomic_polynomial
from .groebner import (GroebnerBasis, groebner, reduce_poly,
                       standard_monomials)
from .laurent import LaurentPoly, inverse_monomial, weyl_act
from .linalg import RowSpace, rank as matrix_rank, solve_coordinates
from .poly import Monomial, Poly, make_elim_key, parse_poly
from .rootdata import (LeviDatum, RootDatum, WeylGroup, centralizer_subsystem,
                       orbit, standard_datum, weyl_group)
from .spectrum import EvalPoint, evaluate_poly, parse_point, support


@dataclass(frozen=True)
class Presentation:
    """Invariant generators with relations, some generators inverted.

    Polynomial variables are y1..yg for the generators, followed by u{i}
    for each inverted generator i (1-based), in increasing order of i.
    The inversion relations u{i}*y{i} - 1 are stored alongside any
    user-supplied relations.  Inverted generators must have monomial
    images, so their Laurent inverses exist termwise.
    """

    rank: int
    images: tuple[LaurentPoly, ...]
    inverted: tuple[int, ...]
    relations: tuple[Poly, ...]

    def __post_init__(self) -> None:
        g = len(self.images)
        if g == 0:
            raise ValueError("a presentation needs at least one generator")
        for f in self.images:
            if f.rank != self.rank:
                raise ValueError("generator image rank mismatch")
        if list(self.inverted) != sorted(set(self.inverted)):
            raise ValueError("inverted indices must be strictly increasing")
        for i in self.inverted:
            if not 1 <= i <= g:
                raise ValueError(f"inverted index {i} out of range 1..{g}")
            if len(self.images[i - 1].terms) != 1:
                raise ValueError(f"inverted generator {i} must have a monomial image")
        nv = self.num_vars
        for rel in self.relations:
            if rel.nvars != nv:
                raise ValueError("relation variable count mismatch")

    @property
    def num_gens(self) -> int:
        return len(self.images)

    @property
    def num_vars(self) -> int:
        return len(self.images) + len(self.inverted)

    @property
    def var_names(self) -> list[str]:
        return ([f"y{i + 1}" for i in range(self.num_gens)]
                + [f"u{i}" for i in self.inverted])

    def laurent_values(self) -> list[LaurentPoly]:
        """Image of every polynomial variable in the Laurent ring."""
        vals = list(self.images)
        vals.extend(inverse_monomial(self.images[i - 1]) for i in self.inverted)
        return vals

    def to_laurent(self, f: Poly) -> LaurentPoly:
        """Substitute generator images into a polynomial in the variables."""
        if f.nvars != self.num_vars:
            raise ValueError("polynomial variable count mismatch")
        value = f.substitute(self.laurent_values())
        if isinstance(value, (int, Fraction)):
            return LaurentPoly(self.rank, {(0,) * self.rank: value})
        return value

    def parse(self, text: str) -> Poly:
        return parse_poly(text, self.var_names)


def inversion_relations(num_gens: int, inverted: tuple[int, ...]) -> list[Poly]:
    nv = num_gens + len(inverted)
    rels = []
    for pos, i in enumerate(inverted):
        e = [0] * nv
        e[i - 1] += 1
        e[num_gens + pos] += 1
        rels.append(Poly(nv, {tuple(e): Fraction(1)}) - Poly.constant(nv, 1))
    return rels


def _image_from_spec(spec: dict, rank: int, group: WeylGroup | None) -> LaurentPoly:
    if not isinstance(spec, dict) or len(spec) != 1:
        raise ValueError(f"image spec must be a one-key object, got {spec!r}")
    key, value = next(iter(spec.items()))
    if key == "monomial":
        return LaurentPoly.monomial(value, rank=rank)
    if key == "terms":
        terms: dict[tuple[int, ...], Fraction] = {}
        for coeff_text, exps in value:
            e = tuple(map(int, exps))
            terms[e] = terms.get(e, Fraction(0)) + Fraction(str(coeff_text))
        return LaurentPoly(rank, terms)
    if key == "orbit_sum":
        if group is None:
            raise ValueError("orbit_sum image spec needs a Weyl group")
        pts = orbit(group, value)
        return LaurentPoly(rank, {e: Fraction(1) for e in pts})
    raise ValueError(f"unknown image spec kind {key!r}")


def presentation_from_config(cfg: dict, rank: int,
                             group: WeylGroup | None = None) -> Presentation:
    """Build a presentation from a plain-data description.

    The config holds "images" (a list of one-key specs: "monomial",
    "terms", or "orbit_sum"), an optional "inverted" list of 1-based
    generator indices, and optional "relations" strings over y1..yg and
    the u-variables.  Orbit sums are taken over the supplied group.
    """
    images = tuple(_image_from_spec(s, rank, group) for s in cfg["images"])
    inverted = tuple(sorted(int(i) for i in cfg.get("inverted", [])))
    names = ([f"y{i + 1}" for i in range(len(images))]
             + [f"u{i}" for i in inverted])
    rels = [parse_poly(t, names) for t in cfg.get("relations", [])]
    rels.extend(inversion_relations(len(images), inverted))
    return Presentation(rank=rank, images=images, inverted=inverted,
                        relations=tuple(rels))


@dataclass(frozen=True)
class PresentationReport:
    """Validation outcome for a presentation against a reflection group."""

    images_invariant: bool
    relations_vanish: bool
    spans_orbit_sums: bool
    degree_bound: int
    all_passed: bool


def validate_presentation(pres: Presentation, group: WeylGroup,
                          height_bound: int) -> PresentationReport:
    """Check a presentation really presents the invariant subring.

    Three independent checks: every generator image is fixed by the
    group's generators, every relation maps to zero in the Laurent ring,
    and every orbit sum of height up to the bound is a rational linear
    combination of variable monomials of bounded total degree.  The
    internal degree bound grows with the requested height and the
    largest generator height; failing the span check therefore means
    the generators are inadequate at that degree, not merely that the
    search stopped early.
    """
    invariant = all(weyl_act([list(r) for r in g], img) == img
                    for img in pres.images for g in group.generators)
    vanish = all(pres.to_laurent(rel).is_zero() for rel in pres.relations)

    max_h = max(img.height() for img in pres.images)
    bound = height_bound * (1 + max_h)
    values = pres.laurent_values()

    products: list[LaurentPoly] = []

    def rec(i: int, left: int, prod: LaurentPoly) -> None:
        if i == len(values):
            products.append(prod)
            return
        cur = prod
        for k in range(left + 1):
            rec(i + 1, left - k, cur)
            if k < left:
                cur = cur * values[i]

    rec(0, bound, LaurentPoly.one(pres.rank))

    # Orbit sums of height at most the bound, one per orbit.  Every such
    # orbit meets the coordinate box, so scanning the box finds them all;
    # orbits that leave the box are filtered out by their actual height.
    reps: set[tuple[int, ...]] = set()

    def gen_box(prefix: list[int]) -> None:
        if len(prefix) == pres.rank:
            pts = orbit(group, prefix)
            if max((abs(x) for e in pts for x in e), default=0) <= height_bound:
                reps.add(pts[0])
            return
        for v in range(-height_bound, height_bound + 1):
            gen_box(prefix + [v])

    gen_box([])
    targets = [LaurentPoly(pres.rank, {e: Fraction(1) for e in orbit(group, rep)})
               for rep in sorted(reps)]

    index: dict[tuple[int, ...], int] = {}
    for f in products + targets:
        for e in f.terms:
            if e not in index:
                index[e] = len(index)

    def coords(f: LaurentPoly) -> list[Fraction]:
        row = [Fraction(0)] * len(index)
        for e, c in f.terms.items():
            row[index[e]] = c
        return row

    space = RowSpace(len(index))
    for f in products:
        space.add(coords(f))
    spans = all(space.contains(coords(t)) for t in targets)

    ok = invariant and vanish and spans
    return PresentationReport(images_invariant=invariant,
                              relations_vanish=vanish,
                              spans_orbit_sums=spans,
                              degree_bound=bound,
                              all_passed=ok)


def _value_to_z_poly(value, nvars: int, order: int) -> Poly:
    """Rewrite a scalar as a polynomial in the first variable z.

    Rational scalars become constants; cyclotomic scalars of compatible
    order become polynomials in z of degree below phi(order).
    """
    if isinstance(value, (int, Fraction)):
        return Poly.constant(nvars, Fraction(value))
    assert isinstance(value, Cyclo)
    c = value.promote(order)
    out = Poly.zero(nvars)
    for k, q in enumerate(c.coords):
        if q:
            e = [0] * nvars
            e[0] = k
            out = out + Poly(nvars, {tuple(e): q})
    return out


def point_ideal(pres: Presentation, p: EvalPoint) -> list[Poly]:
    """Generators of the maximal ideal of evaluation at the point.

    Each presentation variable is pinned to its value at the point.  For
    rational values the ideal is generated by the obvious differences.
    Cyclotomic values are handled by adjoining one auxiliary variable z
    satisfying the relevant cyclotomic polynomial and eliminating it,
    which yields the kernel of evaluation as an ideal over the
    rationals.
    """
    if p.rank != pres.rank:
        raise ValueError("point rank does not match presentation rank")
    values = [evaluate_poly(p, img) for img in pres.laurent_values()]
    nv = pres.num_vars
    if all(isinstance(v, (int, Fraction)) for v in values):
        return [Poly.variable(nv, i) - Poly.constant(nv, Fraction(v))
                for i, v in enumerate(values)]
    order = 1
    for v in values:
        if isinstance(v, Cyclo):
            order = order * v.order // math.gcd(order, v.order)
    total = nv + 1
    cyc = cyclotomic_polynomial(order)
    gens = [Poly(total, {
        tuple([k] + [0] * nv): Fraction(c) for k, c in enumerate(cyc) if c
    })]
    for i, v in enumerate(values):
        var = Poly.variable(total, i + 1)
        gens.append(var - _value_to_z_poly(v, total, order))
    gb = groebner(gens, key=make_elim_key(1), order_name="eliminate-z")
    out = []
    for g in gb.polys:
        if any(e[0] != 0 for e in g.terms):
            continue
        out.append(Poly(nv, {e[1:]: c for e, c in g.terms.items()}))
    if not out:
        raise AssertionError("elimination produced no rational relations")
    return out


@dataclass(frozen=True)
class TruncationReport:
    """Dimension data for one quotient by a power of the maximal ideal."""

    level: int
    dimension: int
    monomials: tuple[Monomial, ...]
    basis: GroebnerBasis


def truncated_quotient(pres: Presentation, ideal_gens: list[Poly],
                       level: int) -> TruncationReport:
    """The quotient of the presented ring by the level-th ideal power.

    Generators are the presentation relations together with all products
    of `level` ideal generators; the dimension is the count of standard
    monomials of the resulting Groebner basis.
    """
    if level < 1:
        raise ValueError("truncation level must be at least 1")
    nv = pres.num_vars
    for g in ideal_gens:
        if g.nvars != nv:
            raise ValueError("ideal generator variable count mismatch")
    gens = list(pres.relations)
    for combo in combinations_with_replacement(ideal_gens, level):
        prod = Poly.constant(nv, 1)
        for f in combo:
            prod = prod * f
        gens.append(prod)
    gb = groebner(gens)
    monos = standard_monomials(gb)
    return TruncationReport(level=level, dimension=len(monos),
                            monomials=tuple(monos), basis=gb)


def _quotient_coords(f: Poly, gb: GroebnerBasis,
                     monos: tuple[Monomial, ...]) -> list[Fraction]:
    r = reduce_poly(f, list(gb.polys))
    pos = {e: i for i, e in enumerate(monos)}
    row = [Fraction(0)] * len(monos)
    for e, c in r.terms.items():
        if e not in pos:
            raise AssertionError("normal form left the standard monomial basis")
        row[pos[e]] = c
    return row


def _quotient_inverse(f: Poly, gb: GroebnerBasis,
                      monos: tuple[Monomial, ...]) -> Poly:
    """Inverse of f in the finite-dimensional quotient, if one exists."""
    nv = f.nvars
    rows = [_quotient_coords(f * Poly(nv, {e: Fraction(1)}), gb, monos)
            for e in monos]
    one = _quotient_coords(Poly.constant(nv, 1), gb, monos)
    sol = solve_coordinates(rows, one)
    if sol is None:
        raise ValueError("element is not invertible in the truncated quotient")
    out = Poly.zero(nv)
    for c, e in zip(sol, monos):
        if c:
            out = out + Poly(nv, {e: Fraction(c)})
    return out


@dataclass(frozen=True)
class LevelReport:
    """Comparison of one truncation level on both sides of restriction."""

    level: int
    dim_source: int
    dim_target: int
    surjective: bool

    @property
    def isomorphic(self) -> bool:
        return self.surjective and self.dim_source == self.dim_target


@dataclass(frozen=True)
class LocalIsoReport:
    """Outcome of the truncated local comparison at an evaluation point."""

    point: EvalPoint
    levi: LeviDatum
    restriction_valid: bool
    levels: tuple[LevelReport, ...]

    @property
    def all_passed(self) -> bool:
        return self.restriction_valid and all(l.isomorphic for l in self.levels)


def local_isomorphism_check(d: RootDatum, p: EvalPoint,
                            source: Presentation, target: Presentation,
                            restriction: list, j_max: int) -> LocalIsoReport:
    """Compare completions of the two presented rings at the point.

    The source presents the full invariant ring, the target presents the
    invariants of the centralizer subsystem of the point's support, and
    the restriction list gives the image of each source generator as a
    polynomial (or string) in the target's variables.  For each level j
    up to j_max, both sides are truncated by the j-th power of the
    point's maximal ideal and the induced map is checked to be a
    surjection between spaces of equal dimension, hence an isomorphism.
    The support must be connected, otherwise no subtorus centralizer
    controls the point and the comparison is refused.
    """
    if j_max < 1:
        raise ValueError("need at least one truncation level")
    sup = support(p)
    if not sup.connected:
        raise ValueError("point support is disconnected; "
                         "no centralizer comparison is available")
    levi = centralizer_subsystem(d, sup.kernel_lattice)
    rest = [target.parse(t) if isinstance(t, str) else t for t in restriction]
    if len(rest) != source.num_gens:
        raise ValueError("need one restriction image per source generator")
    # The restriction must reproduce each source generator exactly once
    # the target generators are substituted in.
    valid = all(target.to_laurent(r) == img
                for r, img in zip(rest, source.images))

    m_source = point_ideal(source, p)
    m_target = point_ideal(target, p)
    levels = []
    for j in range(1, j_max + 1):
        trunc_s = truncated_quotient(source, m_source, j)
        trunc_t = truncated_quotient(target, m_target, j)
        # Variable images in the target quotient: restriction images for
        # the y-variables, their quotient inverses for the u-variables.
        var_images = list(rest)
        for i in source.inverted:
            var_images.append(_quotient_inverse(rest[i - 1], trunc_t.basis,
                                                trunc_t.monomials))
        rows = []
        for e in trunc_s.monomials:
            mono = Poly(source.num_vars, {e: Fraction(1)})
            mapped = mono.substitute(var_images)
            if isinstance(mapped, (int, Fraction)):
                mapped = Poly.constant(target.num_vars, Fraction(mapped))
            rows.append(_quotient_coords(mapped, trunc_t.basis, trunc_t.monomials))
        surj = matrix_rank(rows) == trunc_t.dimension
        levels.append(LevelReport(level=j, dim_source=trunc_s.dimension,
                                  dim_target=trunc_t.dimension,
                                  surjective=surj))
    return LocalIsoReport(point=p, levi=levi, restriction_valid=valid,
                          levels=tuple(levels))


def load_case_config(path: str) -> dict:
    """Load a comparison case: datum, point, both presentations, map.

    The JSON object needs "datum" ({"type","rank","variant"}), "point"
    (list of coordinate literals), "source_presentation" and
    "target_presentation" (see presentation_from_config), "restriction"
    (list of polynomial strings in the target variables), and "j_max".
    """
    with open(path, encoding="utf-8") as fh:
        cfg = json.load(fh)
    dd = cfg["datum"]
    d = standard_datum(dd["type"], int(dd["rank"]), dd.get("variant", "simply_connected"))
    p = parse_point(",".join(cfg["point"]), d.rank)
    big = weyl_group(d)
    source = presentation_from_config(cfg["source_presentation"], d.rank, big)
    sup = support(p)
    if not sup.connected:
        raise ValueError("case point has disconnected support")
    levi = centralizer_subsystem(d, sup.kernel_lattice)
    target = presentation_from_config(cfg["target_presentation"], d.rank,
                                      levi.weyl_subgroup)
    return {
        "datum": d,
        "point": p,
        "source": source,
        "target": target,
        "levi": levi,
        "restriction": list(cfg["restriction"]),
        "j_max": int(cfg["j_max"]),
    }
