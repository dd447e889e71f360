"""Multivariate polynomials over Q with pluggable monomial orders.

These are ordinary (nonnegative-exponent) polynomials used by the
Groebner-basis machinery.  Monomial orders are key functions mapping an
exponent tuple to a sortable value; graded reverse lexicographic is the
default everywhere, and a block order eliminating a leading variable
group supports the point-ideal computation.
"""

from __future__ import annotations

import re
from fractions import Fraction

Monomial = tuple[int, ...]


class Poly:
    """A polynomial in nvars variables with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None) -> None:
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        for exps, c in (terms or {}).items():
            e = tuple(map(int, exps))
            if len(e) != nvars:
                raise ValueError("exponent length mismatch")
            if any(x < 0 for x in e):
                raise ValueError("negative exponent in a polynomial")
            c = Fraction(c)
            if c:
                acc = clean.get(e)
                s = c if acc is None else acc + c
                if s:
                    clean[e] = s
                else:
                    clean.pop(e, None)
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            return Poly(self.nvars, {e: c * c0 for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Poly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def substitute(self, values: list) -> object:
        """Evaluate with arbitrary ring elements (anything with + and *)."""
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        total = None
        for e, c in sorted(self.terms.items()):
            term = None
            for v, k in zip(values, e):
                for _ in range(k):
                    term = v if term is None else term * v
            contrib = c if term is None else term * c
            total = contrib if total is None else total + contrib
        if total is None:
            return Fraction(0)
        return total

    def render(self, names: list[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i]
                            for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.terms!r})"


def grevlex_key(e: Monomial):
    """Graded reverse lexicographic order as a sort key (larger sorts last)."""
    return (sum(e), tuple(-x for x in reversed(e)))


def make_elim_key(block: int):
    """Block order eliminating the first `block` variables.

    Any monomial involving an eliminated variable beats any that does
    not, so basis elements free of the block generate the elimination
    ideal.
    """
    def key(e: Monomial):
        head = e[:block]
        tail = e[block:]
        return (sum(head), tuple(-x for x in reversed(head)),
                sum(tail), tuple(-x for x in reversed(tail)))
    return key


_TOKEN_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def parse_poly(text: str, names: list[str]) -> Poly:
    """Parse a polynomial string over the given variable names.

    Grammar: terms joined by + and -, each term a '*'-separated product
    of an optional rational coefficient (like 3 or 5/2) and variable
    powers (like y1^2).  No parentheses.
    """
    nvars = len(names)
    idx = {n: i for i, n in enumerate(names)}
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    # Split into signed terms.
    chunks: list[tuple[int, str]] = []
    sign = 1
    cur = ""
    for ch in s:
        if ch in "+-" and cur:
            chunks.append((sign, cur))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif ch in "+-" and not cur:
            if ch == "-":
                sign = -sign
        else:
            cur += ch
    if not cur:
        raise ValueError(f"dangling sign in {text!r}")
    chunks.append((sign, cur))

    result = Poly.zero(nvars)
    for sgn, chunk in chunks:
        coeff = Fraction(sgn)
        exps = [0] * nvars
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            m = _TOKEN_RE.match(factor)
            if not m or m.group(1) not in idx:
                raise ValueError(f"unknown factor {factor!r} in {text!r}")
            exps[idx[m.group(1)]] += int(m.group(2) or 1)
        result = result + Poly(nvars, {tuple(exps): coeff})
    return result
