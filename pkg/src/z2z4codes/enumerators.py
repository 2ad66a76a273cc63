"""Exact weight-enumerator algebra over the rationals.

All polynomials are homogeneous of degree n in (x, y) and stored as the
coefficient vector indexed by the y-exponent.  Transform matrices are
kept integral; the 1/sqrt(2) normalisations are recovered through
homogeneity, so no irrational arithmetic ever occurs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .classify import SelfDualClass
from .codes import AdditiveCode
from .errors import InconsistentEnumerator, NotInRing, PreconditionError
from .vectors import weight

# Integral part of the MacWilliams substitution; the actual transform is
# this matrix divided by sqrt(2), which squares to the identity.
MACWILLIAMS_MATRIX = ((1, 1), (1, -1))


@dataclass(frozen=True)
class WeightEnumerator:
    """Homogeneous bivariate polynomial with exact rational coefficients."""

    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("coefficient vector must have degree + 1 entries")

    @classmethod
    def from_coefficients(cls, degree: int, coeffs) -> "WeightEnumerator":
        return cls(degree, tuple(Fraction(c) for c in coeffs))

    @classmethod
    def from_weights(cls, degree: int, weights) -> "WeightEnumerator":
        counts = [0] * (degree + 1)
        for w in weights:
            counts[w] += 1
        return cls.from_coefficients(degree, counts)

    @classmethod
    def monomial(cls, degree: int, y_exponent: int, coeff=1) -> "WeightEnumerator":
        coeffs = [Fraction(0)] * (degree + 1)
        coeffs[y_exponent] = Fraction(coeff)
        return cls(degree, tuple(coeffs))

    def __add__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        if self.degree != other.degree:
            raise ValueError("cannot add enumerators of different degrees")
        return WeightEnumerator(
            self.degree, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        if self.degree != other.degree:
            raise ValueError("cannot subtract enumerators of different degrees")
        return WeightEnumerator(
            self.degree, tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __mul__(self, other) -> "WeightEnumerator":
        if isinstance(other, WeightEnumerator):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coefficients):
                if a:
                    for j, b in enumerate(other.coefficients):
                        if b:
                            out[i + j] += a * b
            return WeightEnumerator(self.degree + other.degree, tuple(out))
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "WeightEnumerator":
        c = Fraction(c)
        return WeightEnumerator(self.degree, tuple(a * c for a in self.coefficients))

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        n = self.degree
        return sum(
            (c * x ** (n - w) * y**w for w, c in enumerate(self.coefficients)),
            start=Fraction(0),
        )

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def substitute(self, a: int, b: int, c: int, d: int) -> "WeightEnumerator":
        """Exact expansion of W(a*x + b*y, c*x + d*y)."""
        n = self.degree
        out = [Fraction(0)] * (n + 1)
        for w, coeff in enumerate(self.coefficients):
            if not coeff:
                continue
            first = _binomial_power(a, b, n - w)
            second = _binomial_power(c, d, w)
            for i, fi in enumerate(first):
                if fi:
                    for j, sj in enumerate(second):
                        if sj:
                            out[i + j] += coeff * fi * sj
        return WeightEnumerator(n, tuple(out))


def _binomial_power(a: int, b: int, k: int) -> list[int]:
    """Coefficients of (a*x + b*y)^k by y-exponent."""
    return [comb(k, i) * a ** (k - i) * b**i for i in range(k + 1)]


def weight_enumerator(code: AdditiveCode) -> WeightEnumerator:
    """Exact enumerator from full codeword enumeration."""
    n = code.ambient.n
    return WeightEnumerator.from_weights(n, (weight(w) for w in code.codewords))


def macwilliams(w: WeightEnumerator, size: int) -> WeightEnumerator:
    """Transform W(x+y, x-y)/size; the dual enumerator when size = W(1,1)."""
    if size <= 0:
        raise PreconditionError("code size must be positive")
    out = w.substitute(1, 1, 1, -1).scale(Fraction(1, size))
    if not out.is_integral():
        raise InconsistentEnumerator(
            f"transform of the given enumerator by size {size} is not integral"
        )
    return out


def even_subcode_we(w: WeightEnumerator) -> WeightEnumerator:
    """Enumerator of the even-weight words: (W(x, y) + W(x, -y)) / 2."""
    return (w + w.substitute(1, 0, 0, -1)).scale(Fraction(1, 2))


def shadow_we(w: WeightEnumerator) -> WeightEnumerator:
    """Shadow enumerator 2^(-n/2) * W(x+y, -(x-y)); requires even degree."""
    n = w.degree
    if n % 2:
        raise PreconditionError("shadow enumerator needs an even degree")
    return w.substitute(1, 1, -1, 1).scale(Fraction(1, 1 << (n // 2)))


def _type_ii_g2() -> tuple[int, tuple[int, ...]]:
    # x^4 y^4 (x^4 - y^4)^4: y-exponents 4..20 in steps of 4
    coeffs = [0] * 25
    for i in range(5):
        coeffs[4 + 4 * i] = comb(4, i) * (-1) ** i
    return (24, tuple(coeffs))


# Generator polynomials of the invariant ring for each class, stored as
# (degree, coefficient vector by y-exponent).  Type 0: x^2+y^2 and
# y(x-y); Type I: x^2+y^2 and x^2 y^2 (x^2-y^2)^2; Type II:
# x^8 + 14 x^4 y^4 + y^8 and x^4 y^4 (x^4-y^4)^4.
_RING_GENERATORS = {
    SelfDualClass.TYPE_0: ((2, (1, 0, 1)), (2, (0, 1, -1))),
    SelfDualClass.TYPE_I: ((2, (1, 0, 1)), (8, (0, 0, 1, 0, -2, 0, 1, 0, 0))),
    SelfDualClass.TYPE_II: ((8, (1, 0, 0, 0, 14, 0, 0, 0, 1)), _type_ii_g2()),
}


def ring_generators(cls: SelfDualClass) -> tuple[WeightEnumerator, WeightEnumerator]:
    """The two free generators of the invariant ring for a class."""
    if cls not in _RING_GENERATORS:
        raise PreconditionError(f"no invariant ring for class {cls.value!r}")
    (d1, c1), (d2, c2) = _RING_GENERATORS[cls]
    return (
        WeightEnumerator.from_coefficients(d1, c1),
        WeightEnumerator.from_coefficients(d2, c2),
    )


@dataclass(frozen=True)
class GleasonDecomposition:
    """Exact coordinates of an enumerator in the invariant ring of a class.

    ``coefficients[(a, b)]`` multiplies g1^a * g2^b; re-expanding the
    combination reproduces the decomposed enumerator exactly.
    """

    cls: SelfDualClass
    degree: int
    coefficients: tuple[tuple[tuple[int, int], Fraction], ...]

    def reconstruct(self) -> WeightEnumerator:
        g1, g2 = ring_generators(self.cls)
        total = WeightEnumerator.from_coefficients(self.degree, [0] * (self.degree + 1))
        for (a, b), c in self.coefficients:
            term = WeightEnumerator.from_coefficients(0, [1])
            for _ in range(a):
                term = term * g1
            for _ in range(b):
                term = term * g2
            total = total + term.scale(c)
        return total


def _solve_exact(columns: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Solve the overdetermined system columns * c = target exactly.

    Returns None when the system is inconsistent.  The basis polynomials
    of a free ring are linearly independent, so a consistent system has
    exactly one solution.
    """
    rows = len(target)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(rows)]
    pivot_rows: list[int] = []
    r = 0
    for col in range(k):
        pr = next((i for i in range(r, rows) if aug[i][col] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [v - f * p for v, p in zip(aug[i], aug[r])]
        pivot_rows.append(col)
        r += 1
    if len(pivot_rows) < k:
        return None
    for i in range(r, rows):
        if aug[i][k] != 0:
            return None
    solution = [Fraction(0)] * k
    for i, col in enumerate(pivot_rows):
        solution[col] = aug[i][k]
    return solution


def gleason_decompose(w: WeightEnumerator, cls: SelfDualClass) -> GleasonDecomposition:
    """Express w exactly in the invariant ring of the given class.

    Raises NotInRing when the degree is incompatible or no exact rational
    combination of the basis monomials g1^a * g2^b reproduces w.
    """
    g1, g2 = ring_generators(cls)
    n = w.degree
    pairs = [
        ((n - b * g2.degree) // g1.degree, b)
        for b in range(n // g2.degree + 1)
        if (n - b * g2.degree) % g1.degree == 0
    ]
    if not pairs:
        raise NotInRing(f"degree {n} is not reachable in the {cls.value} ring")
    basis: list[WeightEnumerator] = []
    for a, b in pairs:
        term = WeightEnumerator.from_coefficients(0, [1])
        for _ in range(a):
            term = term * g1
        for _ in range(b):
            term = term * g2
        basis.append(term)
    solution = _solve_exact(
        [list(p.coefficients) for p in basis], list(w.coefficients)
    )
    if solution is None:
        raise NotInRing(f"enumerator is not in the {cls.value} invariant ring")
    decomposition = GleasonDecomposition(cls, n, tuple(zip(pairs, solution)))
    if decomposition.reconstruct() != w:
        raise NotInRing("exact reconstruction failed")  # pragma: no cover
    return decomposition


def format_enumerator(w: WeightEnumerator) -> str:
    """Render with decreasing x-exponent, e.g. ``x^6 + 4*x^3*y^3 + 3*x^2*y^4``."""
    n = w.degree
    terms: list[tuple[Fraction, str]] = []
    for yexp, c in enumerate(w.coefficients):
        if c == 0:
            continue
        pieces = []
        xexp = n - yexp
        if xexp > 0:
            pieces.append("x" if xexp == 1 else f"x^{xexp}")
        if yexp > 0:
            pieces.append("y" if yexp == 1 else f"y^{yexp}")
        mag = abs(c)
        body = "*".join(pieces)
        if not pieces:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}*{body}"
        terms.append((c, body))
    if not terms:
        return "0"
    out = []
    for i, (c, body) in enumerate(terms):
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(out)


def format_coefficients(w: WeightEnumerator) -> str:
    """Machine format ``n: c_0 c_1 ... c_n`` by y-exponent."""
    return f"{w.degree}: " + " ".join(str(c) for c in w.coefficients)


def format_gleason(d: GleasonDecomposition) -> str:
    """Render e.g. ``g1^3 - 3*g1*g2^2 - 2*g2^3`` (zero terms skipped)."""
    parts: list[tuple[Fraction, str]] = []
    for (a, b), c in d.coefficients:
        if c == 0:
            continue
        pieces = []
        if a > 0:
            pieces.append("g1" if a == 1 else f"g1^{a}")
        if b > 0:
            pieces.append("g2" if b == 1 else f"g2^{b}")
        body = "*".join(pieces) if pieces else "1"
        mag = abs(c)
        if mag != 1 or not pieces:
            body = f"{mag}*{body}"
        parts.append((c, body))
    if not parts:
        return "0"
    out = []
    for i, (c, body) in enumerate(parts):
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(out)
