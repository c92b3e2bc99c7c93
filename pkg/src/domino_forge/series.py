"""Exact polynomial, power-series and linear-recurrence arithmetic.

Everything here is integer or rational; no floating point is involved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, NotExpandable, SeedTooShort
from .transfer import BigMatrix


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> IntPolynomial:
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coefficients or not other.coefficients:
            return IntPolynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def exact_divide(self, divisor: IntPolynomial) -> IntPolynomial:
        """Quotient of a division that must leave no remainder.

        The divisor's leading coefficient has to be a unit (+1 or -1) so the
        quotient stays integral.
        """
        lead = divisor.coefficients[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +1 or -1")
        rem = list(self.coefficients)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            q = rem[k + dd] * lead
            quot[k] = q
            for i, c in enumerate(divisor.coefficients):
                rem[k + i] -= q * c
        if any(rem):
            raise ValueError("division leaves a remainder")
        return IntPolynomial(tuple(quot))

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coefficients])

    @classmethod
    def from_json(cls, text: str) -> IntPolynomial:
        return cls(tuple(int(c) for c in json.loads(text)))


def is_palindromic(p: IntPolynomial | Sequence[int]) -> bool:
    coeffs = tuple(p.coefficients if isinstance(p, IntPolynomial) else p)
    return coeffs == coeffs[::-1]


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        if self.denominator.degree < 0:
            raise ValueError("denominator is the zero polynomial")

    @property
    def expandable(self) -> bool:
        return self.denominator[0] == 1


@dataclass(frozen=True)
class LinearRecurrence:
    """``a[n] = sum(coefficients[k-1] * a[n-k] for k in 1..order)``.

    ``valid_from`` is the first index at which the relation is known to
    hold for the sequence it was derived from.
    """

    coefficients: tuple[int, ...]
    valid_from: int | None = None

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if not coeffs or coeffs[-1] == 0:
            raise ValueError("last recurrence coefficient must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)
        if self.valid_from is None:
            object.__setattr__(self, "valid_from", len(coeffs))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def step(self, window: Sequence[int]) -> int:
        """Next term after ``window``, whose last ``order`` entries are used."""
        tail = window[len(window) - self.order:]
        return sum(c * a for c, a in zip(self.coefficients, reversed(tail)))

    def step_back(self, window: Sequence[int]) -> int:
        """The term preceding ``window`` (its first ``order`` entries)."""
        head = window[: self.order]
        # head[-1] = sum_{k<order} c_k head[-1-k] + c_order * (previous term)
        rest = head[-1] - sum(c * a for c, a in zip(self.coefficients[:-1], reversed(head[:-1])))
        q, r = divmod(rest, self.coefficients[-1])
        if r:
            raise ArithmeticError("backward step is not integral")
        return q


def gf6() -> RationalGF:
    """Generating function of the 6 x 2n tiling counts."""
    numerator = IntPolynomial.of(1, -27, 177, -328, 177, -27, 1)
    sextic = IntPolynomial.of(1, -39, 377, -847, 377, -39, 1)
    return RationalGF(numerator, IntPolynomial.of(1, -1) * sextic)


def series_expand(gf: RationalGF, N: int) -> list[int]:
    """First ``N + 1`` power-series coefficients of ``gf``."""
    if not gf.expandable:
        raise NotExpandable("denominator must have constant term 1")
    den = gf.denominator.coefficients
    out: list[int] = []
    for n in range(N + 1):
        acc = gf.numerator[n]
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc)
    return out


def recurrence_from_gf(gf: RationalGF) -> LinearRecurrence:
    if not gf.expandable:
        raise NotExpandable("denominator must have constant term 1")
    tail = gf.denominator.coefficients[1:]
    order = len(tail)
    return LinearRecurrence(tuple(-d for d in tail), valid_from=max(gf.numerator.degree + 1, order))


def extend(rec: LinearRecurrence, seed: Sequence[int], length: int) -> list[int]:
    """``seed`` extended by the recurrence to ``length`` terms."""
    if len(seed) < rec.order:
        raise SeedTooShort(f"need at least {rec.order} seed terms, got {len(seed)}")
    out = list(seed)
    while len(out) < length:
        out.append(rec.step(out))
    return out[:length] if length < len(out) else out


def extend_backward(rec: LinearRecurrence, window: Sequence[int], count: int) -> list[int]:
    """Prepend ``count`` terms to ``window`` by running the recurrence in reverse."""
    if len(window) < rec.order:
        raise SeedTooShort(f"need at least {rec.order} terms, got {len(window)}")
    out = list(window)
    for _ in range(count):
        out.insert(0, rec.step_back(out))
    return out


def apply_recurrence(rec: LinearRecurrence, seed: Sequence[int], n: int) -> int:
    """Term ``n`` of the sequence starting with ``seed``."""
    if len(seed) < rec.order:
        raise SeedTooShort(f"need at least {rec.order} seed terms, got {len(seed)}")
    if n < len(seed):
        return seed[n]
    window = list(seed[-rec.order:])
    for _ in range(n - len(seed) + 1):
        window.append(rec.step(window))
        window.pop(0)
    return window[-1]


# 6 x 2n tiling counts c_0 .. c_17 as published alongside the compact matrix
PUBLISHED_C = (
    1,
    13,
    281,
    6728,
    167089,
    4213133,
    106912793,
    2720246633,
    69289288909,
    1765722581057,
    45005025662792,
    1147185247901449,
    29242880940226381,
    745439797095329713,
    19002353776441540177,
    484398978524471931341,
    12348080425980866090537,
    314771823879840325570888,
)

# c_{n+10} = -c_{n-10} + sum_k (-1)^(k+1) PAIR[k] (c_{n-10+k} + c_{n+10-k}) - CENTER c_n
PAIR_COEFFICIENTS = (63, 1561, 21023, 176393, 992383, 3912609, 11117602, 23182782, 35879970)
CENTER_COEFFICIENT = 41475390


def symmetric_recurrence_order20() -> LinearRecurrence:
    """Order-20 recurrence with mirror-symmetric coefficients.

    Term ``m`` depends on terms ``m-1 .. m-20``; the coefficient of
    ``m-k`` equals that of ``m-20+k`` for ``k = 1..9``.
    """
    coeffs = [0] * 20
    for k, c in enumerate(PAIR_COEFFICIENTS, start=1):
        signed = c if k % 2 else -c
        coeffs[k - 1] = signed
        coeffs[19 - k] = signed
    coeffs[9] = -CENTER_COEFFICIENT
    coeffs[19] = -1
    return LinearRecurrence(tuple(coeffs), valid_from=20)


def printed_recurrence_order20() -> LinearRecurrence:
    """The order-20 relation taken literally, with ``(c_{n-1} + c_n)`` in
    place of ``(c_{n-1} + c_{n+1})``. Kept to show that it does not fit the
    data."""
    coeffs = list(symmetric_recurrence_order20().coefficients)
    last_pair = PAIR_COEFFICIENTS[-1]
    coeffs[8] = 0  # c_{n+1} loses its term
    coeffs[9] += last_pair  # ... which lands on c_n instead
    return LinearRecurrence(tuple(coeffs), valid_from=20)


def recurrence_from_char_poly(p: IntPolynomial) -> LinearRecurrence:
    """Cayley-Hamilton recurrence of a monic characteristic polynomial."""
    if not p.is_monic():
        raise ValueError("polynomial must be monic")
    d = p.degree
    return LinearRecurrence(tuple(-p[d - k] for k in range(1, d + 1)), valid_from=d)


def char_poly(m: BigMatrix) -> IntPolynomial:
    """``det(x I - M)`` by the Faddeev-LeVerrier recursion.

    Every division in the recursion is exact over the integers, so the
    computation never leaves ``int``.
    """
    n = m.dim
    ident = BigMatrix.identity(n)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    aux = BigMatrix(((0,) * n,) * n)
    for k in range(1, n + 1):
        aux = m @ aux + ident.scale(coeffs[n - k + 1])
        q, r = divmod(-(m @ aux).trace(), k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = q
    return IntPolynomial(tuple(coeffs))


def evaluate_at_matrix(p: IntPolynomial, m: BigMatrix) -> BigMatrix:
    """``p(M)`` by Horner's rule in exact integers."""
    ident = BigMatrix.identity(m.dim)
    acc = BigMatrix(((0,) * m.dim,) * m.dim)
    for c in reversed(p.coefficients):
        acc = acc @ m + ident.scale(c)
    return acc


U_NUMERATOR = IntPolynomial.of(-274, 174, -27, 1)
U_DENOMINATOR = IntPolynomial.of(-769, 374, -39, 1)


def u_identity_sides(x) -> tuple[Fraction, Fraction]:
    """Both sides of ``(1-x) g6(x) = N(u) / D(u)`` with ``u = x + 1/x``.

    The left side cancels the ``(1 - x)`` factor of g6's denominator
    symbolically, so ``x = 1`` is evaluated as the limit.
    """
    x = Fraction(x)
    if x == 0:
        raise DomainError("u = x + 1/x is undefined at x = 0")
    gf = gf6()
    reduced = gf.denominator.exact_divide(IntPolynomial.of(1, -1))
    lhs_den = reduced(x)
    u = x + 1 / x
    rhs_den = U_DENOMINATOR(u)
    if lhs_den == 0 or rhs_den == 0:
        raise DomainError(f"x = {x} is a pole")
    return Fraction(gf.numerator(x)) / lhs_den, Fraction(U_NUMERATOR(u)) / rhs_den


def check_u_identity(x) -> bool:
    lhs, rhs = u_identity_sides(x)
    return lhs == rhs


def random_rationals(rng, count: int, bound: int = 1000) -> Iterable[Fraction]:
    """``count`` nonzero rationals with numerator and denominator up to ``bound``."""
    produced = 0
    while produced < count:
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        if num:
            produced += 1
            yield Fraction(num, den)
