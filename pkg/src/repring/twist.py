"""The evaluation twist of the character ring and isotypic splitting.

Twisting by a point rescales every monomial by the point's value on it:
e^n -> p(n) e^n.  It is a ring automorphism of the group algebra over a
large enough cyclotomic field, interchanges evaluation at the point with
the augmentation, and respects the splitting of a polynomial into coset
classes modulo a sublattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclo
from .lattice import Sublattice, coset_representative
from .laurent import LaurentPoly, augmentation
from .spectrum import EvalPoint, evaluate_char, evaluate_poly


@dataclass(frozen=True)
class IsotypicDecomposition:
    """A polynomial split by exponent classes modulo a sublattice."""

    kernel_lattice: Sublattice
    pieces: dict[tuple[int, ...], LaurentPoly]

    def total(self) -> LaurentPoly:
        rank = self.kernel_lattice.ambient_rank
        acc = LaurentPoly.zero(rank)
        for piece in self.pieces.values():
            acc = acc + piece
        return acc


def isotypic_decompose(f: LaurentPoly, k: Sublattice) -> IsotypicDecomposition:
    """Group the terms of f by their coset modulo k.

    Keys are canonical coset representatives, so two decompositions
    against the same sublattice are directly comparable.
    """
    if f.rank != k.ambient_rank:
        raise ValueError("polynomial rank does not match sublattice rank")
    pieces: dict[tuple[int, ...], dict] = {}
    for e, c in f.terms.items():
        key = coset_representative(k, e)
        pieces.setdefault(key, {})[e] = c
    return IsotypicDecomposition(
        kernel_lattice=k,
        pieces={key: LaurentPoly(f.rank, terms) for key, terms in sorted(pieces.items())},
    )


@dataclass(frozen=True)
class TwistedElement:
    """Result of twisting: coefficients live in a cyclotomic field."""

    point: EvalPoint
    poly: LaurentPoly


def twist_element(f: LaurentPoly, p: EvalPoint) -> TwistedElement:
    """Rescale each term of f by the point's value on its exponent."""
    if f.rank != p.rank:
        raise ValueError("polynomial rank does not match point rank")
    out: dict[tuple[int, ...], object] = {}
    for e, c in f.terms.items():
        out[e] = c * evaluate_char(p, e)
    return TwistedElement(point=p, poly=LaurentPoly(f.rank, out))


def _eq_values(a, b) -> bool:
    diff = a - b
    if isinstance(diff, Cyclo):
        return diff.is_zero()
    return diff == 0


def twist_augmentation_check(f: LaurentPoly, p: EvalPoint) -> bool:
    """Augmentation after twisting must equal direct evaluation at p.

    Both sides are computed exactly and independently: the left through
    twist_element plus coefficient summation, the right through
    term-by-term evaluation.
    """
    left = augmentation(twist_element(f, p).poly)
    right = evaluate_poly(p, f)
    return _eq_values(left, right)


def twist_multiplicativity_check(f: LaurentPoly, g: LaurentPoly, p: EvalPoint) -> bool:
    """twist(f * g) must equal twist(f) * twist(g), exactly."""
    lhs = twist_element(f * g, p).poly
    rhs = twist_element(f, p).poly * twist_element(g, p).poly
    return lhs == rhs


def inverse_point(p: EvalPoint) -> EvalPoint:
    """The pointwise inverse: negated torsion and negated exponents."""
    torsion = [(-t) % 1 for t in p.torsion]
    maps = [{prime: -e for prime, e in coord} for coord in p.rational]
    return EvalPoint.from_parts(torsion, maps)
