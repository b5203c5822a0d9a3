"""Exact sparse polynomial arithmetic in two variables u and v.

A polynomial is stored as a map from exponent pairs (a, b) to integer
coefficients, with zero coefficients never stored, so two polynomials are
equal exactly when their term maps are equal.  Coefficients are Python ints
and therefore arbitrary precision; nothing here ever rounds.

Most polynomials of interest in this package are *balanced*: every stored
exponent pair has equal u- and v-exponents.  Those are conventionally written
in the single variable q, which abbreviates the monomial u*v, and the parser
and printer speak that dialect ("q^3 - q" means (uv)^3 - uv).  The arithmetic
core is always bivariate; q is a surface convention.

Values are immutable after construction and every operation is a pure
function, so they can be shared freely between threads and used as cache
keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping


class PolyParseError(ValueError):
    """Malformed polynomial text; carries the offset of the first problem."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class BivarPoly:
    """Integer polynomial in u and v, kept in canonical zero-free form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for key, coeff in terms.items():
                a, b = key
                if not (isinstance(a, int) and isinstance(b, int)) or a < 0 or b < 0:
                    raise ValueError(f"invalid exponent pair {key!r}")
                if not isinstance(coeff, int) or isinstance(coeff, bool):
                    raise TypeError(f"coefficient {coeff!r} is not an integer")
                if coeff:
                    clean[(a, b)] = coeff
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def one(cls) -> "BivarPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> "BivarPoly":
        return cls({(a, b): coeff})

    @classmethod
    def q(cls, k: int = 1) -> "BivarPoly":
        """The balanced monomial q^k = (uv)^k."""
        return cls({(k, k): 1})

    @classmethod
    def parse(cls, text: str) -> "BivarPoly":
        return parse_poly(text)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[tuple[int, int], int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_balanced(self) -> bool:
        """True when every exponent pair is of the form (a, a)."""
        return all(a == b for a, b in self._terms)

    def total_degree(self) -> int:
        """Max of a+b over stored terms; -1 for the zero polynomial."""
        return max((a + b for a, b in self._terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "BivarPoly | int") -> "BivarPoly":
        other = _coerce(other)
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            s = out.get(key, 0) + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return _raw({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: "BivarPoly | int") -> "BivarPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "BivarPoly | int") -> "BivarPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "BivarPoly | int") -> "BivarPoly":
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                return BivarPoly.zero()
            return _raw({key: coeff * other for key, coeff in self._terms.items()})
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BivarPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BivarPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- substitutions and evaluation ---------------------------------------

    def adams(self, d: int) -> "BivarPoly":
        """Substitute u -> u^d, v -> v^d (coefficients unchanged)."""
        if not isinstance(d, int) or d < 1:
            raise ValueError("adams degree must be a positive integer")
        if d == 1:
            return self
        return _raw({(a * d, b * d): c for (a, b), c in self._terms.items()})

    def eval_int(self, u0: int, v0: int) -> int:
        """Exact integer value at u = u0, v = v0."""
        return sum(c * u0**a * v0**b for (a, b), c in self._terms.items())

    def eval_balanced(self, q0: int) -> int:
        """Value at q = q0 for a balanced polynomial (q stands for uv)."""
        if not self.is_balanced():
            raise ValueError("polynomial is not balanced; cannot evaluate in q")
        return sum(c * q0**a for (a, _), c in self._terms.items())

    # -- identity ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == BivarPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"BivarPoly.parse({format_poly(self)!r})"


def _raw(terms: dict[tuple[int, int], int]) -> BivarPoly:
    """Wrap an already-canonical term dict without revalidating."""
    p = BivarPoly.__new__(BivarPoly)
    p._terms = terms
    p._hash = None
    return p


def _coerce(x: "BivarPoly | int") -> BivarPoly:
    if isinstance(x, BivarPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return BivarPoly.const(x)
    raise TypeError(f"cannot coerce {x!r} to BivarPoly")


def div_exact(p: BivarPoly, m: int) -> BivarPoly:
    """Divide every coefficient by m, failing hard on any nonzero remainder.

    A remainder here signals an integrality bug upstream, never a rounding
    opportunity, so this raises instead of truncating.
    """
    if m == 0:
        raise ZeroDivisionError("division of polynomial by zero")
    out = {}
    for key, coeff in p.terms.items():
        quot, rem = divmod(coeff, m)
        if rem:
            raise ArithmeticError(
                f"non-exact division of coefficient {coeff} at {key} by {m}"
            )
        out[key] = quot
    return _raw(out)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def _monomial_str(a: int, b: int, balanced: bool) -> str:
    if a == 0 and b == 0:
        return ""
    if balanced:
        return "q" if a == 1 else f"q^{a}"
    out = ""
    if a:
        out += "u" if a == 1 else f"u^{a}"
    if b:
        out += "v" if b == 1 else f"v^{b}"
    return out


def format_poly(p: BivarPoly) -> str:
    """Render with terms in descending total degree, then descending u-degree.

    Balanced polynomials are printed in q (q = uv); anything else is printed
    in u and v.  The output parses back to an equal polynomial.
    """
    if p.is_zero():
        return "0"
    balanced = p.is_balanced()
    items = sorted(p.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
    pieces: list[str] = []
    for (a, b), coeff in items:
        mono = _monomial_str(a, b, balanced)
        mag = abs(coeff)
        body = (str(mag) if (mag != 1 or not mono) else "") + mono
        if not pieces:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append((" - " if coeff < 0 else " + ") + body)
    return "".join(pieces)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------
#
# Grammar: integer literals; variables q, u, v; ^ for nonnegative integer
# powers; + and -; parentheses; '*' is optional before a variable or an
# opening parenthesis.  q^k is the monomial (uv)^k.

_VARS = {"q": (1, 1), "u": (1, 0), "v": (0, 1)}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
        elif ch in _VARS:
            toks.append(("var", ch, i))
            i += 1
        elif ch in "+-*^()":
            toks.append((ch, ch, i))
            i += 1
        else:
            raise PolyParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse(self) -> BivarPoly:
        p = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise PolyParseError("unexpected trailing input", pos)
        return p

    def expr(self) -> BivarPoly:
        total = BivarPoly.zero()
        sign = 1
        kind, _, _ = self.peek()
        if kind in ("+", "-"):
            sign = -1 if kind == "-" else 1
            self.take()
        while True:
            total = total + sign * self.term()
            kind, _, _ = self.peek()
            if kind == "+":
                sign = 1
                self.take()
            elif kind == "-":
                sign = -1
                self.take()
            else:
                return total

    def term(self) -> BivarPoly:
        p = self.factor()
        while True:
            kind, _, _ = self.peek()
            if kind == "*":
                self.take()
                p = p * self.factor()
            elif kind in ("var", "("):
                # implicit multiplication, as in 3q^2 or 2(q-1)
                p = p * self.factor()
            else:
                return p

    def factor(self) -> BivarPoly:
        p = self.atom()
        kind, _, _ = self.peek()
        if kind == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "int":
                raise PolyParseError("exponent must be a nonnegative integer", pos)
            p = p ** int(value)
        return p

    def atom(self) -> BivarPoly:
        kind, value, pos = self.take()
        if kind == "int":
            return BivarPoly.const(int(value))
        if kind == "var":
            a, b = _VARS[value]
            return BivarPoly.monomial(a, b)
        if kind == "(":
            p = self.expr()
            kind, _, pos = self.take()
            if kind != ")":
                raise PolyParseError("expected ')'", pos)
            return p
        raise PolyParseError("expected a number, variable, or '('", pos)


def parse_poly(text: str) -> BivarPoly:
    """Parse polynomial text in the q/u/v grammar."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# truncated power series and the plethystic exponential
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series in t, truncated at t^order, with BivarPoly coefficients."""

    order: int
    coeffs: tuple[BivarPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order+1 coefficients")

    @classmethod
    def from_polys(cls, polys: Iterable[BivarPoly]) -> "TruncatedSeries":
        coeffs = tuple(polys)
        return cls(len(coeffs) - 1, coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            order, tuple(self.coeffs[k] + other.coeffs[k] for k in range(order + 1))
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        coeffs = []
        for k in range(order + 1):
            acc = BivarPoly.zero()
            for j in range(k + 1):
                if self.coeffs[j] and other.coeffs[k - j]:
                    acc = acc + self.coeffs[j] * other.coeffs[k - j]
            coeffs.append(acc)
        return TruncatedSeries(order, tuple(coeffs))


def pexp_sym(p: BivarPoly, n: int) -> list[BivarPoly]:
    """First n+1 coefficients of the plethystic exponential PExp(p*t).

    Coefficient m is the symmetric-power value Sym^m attached to p.  Uses the
    logarithmic-derivative recursion

        m * s_m = sum_{d=1}^{m} adams(p, d) * s_{m-d},    s_0 = 1,

    which stays in integer arithmetic for arbitrary (including negative)
    coefficients.  The division by m must be exact; a nonzero remainder is an
    implementation bug and raises.
    """
    if n < 0:
        raise ValueError("truncation order must be nonnegative")
    psis = {d: p.adams(d) for d in range(1, n + 1)}
    series = [BivarPoly.one()]
    for m in range(1, n + 1):
        acc = BivarPoly.zero()
        for d in range(1, m + 1):
            if psis[d] and series[m - d]:
                acc = acc + psis[d] * series[m - d]
        series.append(div_exact(acc, m))
    return series


def pexp_series(p: BivarPoly, n: int) -> TruncatedSeries:
    """pexp_sym packaged as a TruncatedSeries."""
    return TruncatedSeries.from_polys(pexp_sym(p, n))
