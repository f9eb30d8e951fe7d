"""Polynomials and characteristic polynomials (Faddeev-LeVerrier)."""
from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from ..errors import ExactOverflow

#: bit budget for numerators/denominators in exact characteristic polynomials
EXACT_BIT_BUDGET = 1 << 16


class Polynomial:
    """Univariate polynomial, coefficients in ascending degree order.

    Coefficients are kept as given (Fraction, int or float); trailing zeros
    are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """``self(inner(x))`` by Horner's rule."""
        acc = Polynomial(())
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def vanishing_order(self, x=0) -> int:
        """Multiplicity of ``x`` as a root (exact for rational coefficients).

        The zero polynomial reports 0.
        """
        if x == 0:
            k = 0
            while k < len(self.coeffs) and self.coeffs[k] == 0:
                k += 1
            return k
        order = 0
        p = self
        while p.coeffs:
            q, rem = p.deflate(x)
            if rem != 0:
                break
            order += 1
            p = q
        return order

    def deflate(self, x) -> tuple["Polynomial", object]:
        """Quotient and remainder of division by ``(t - x)``."""
        c = self.coeffs
        if not c:
            return Polynomial(()), 0
        q = [0] * (len(c) - 1)
        acc = 0
        for i in range(len(c) - 1, 0, -1):
            acc = acc * x + c[i]
            q[i - 1] = acc
        return Polynomial(q), acc * x + c[0]

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            terms.append(f"{c}*x^{k}" if k else f"{c}")
        return " + ".join(terms)


X = Polynomial((0, 1))


def _lift(p):
    return p if isinstance(p, Polynomial) else Polynomial((p,))


def is_exact_matrix(m) -> bool:
    a = np.asarray(m)
    return a.dtype == object and all(
        isinstance(x, (int, Fraction)) and not isinstance(x, bool) for x in a.flat
    )


def to_exact(m) -> np.ndarray:
    """Object array of Fractions; floats are converted without rounding."""
    if getattr(m, "exact", None) is not None:
        m = m.exact
    a = np.asarray(getattr(m, "matrix", m), dtype=object)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = x if isinstance(x, Fraction) else Fraction(x)
    return out


def _integer_scaling(a: np.ndarray) -> tuple[np.ndarray, int]:
    """``(D a, D)`` with ``D`` the lcm of the denominators of ``a``."""
    flat = [x if isinstance(x, (int, Fraction)) else Fraction(x) for x in a.flat]
    den = lcm(*(x.denominator for x in flat)) if flat else 1
    ints = np.empty(a.shape, dtype=object)
    ints.flat[:] = [x.numerator * (den // x.denominator) for x in flat]
    return ints, den


def _check_budget(value: int, budget: int):
    if abs(value).bit_length() > budget:
        raise ExactOverflow(f"exact coefficient exceeds {budget} bits")


def char_poly(m, exact: bool | None = None, bit_budget: int = EXACT_BIT_BUDGET) -> Polynomial:
    """Characteristic polynomial ``det(x I - M)`` by Faddeev-LeVerrier.

    With ``exact=True`` (default when ``m`` holds only ints/Fractions) the
    matrix is scaled to integers by the lcm ``D`` of its denominators and the
    recurrence runs in Python integers, where every division by ``k`` is
    exact; the coefficient of ``x^(n-k)`` is then divided by ``D^k``.
    Float mode is limited to ``n <= 64``.
    """
    if exact is not False and getattr(m, "exact", None) is not None:
        m = m.exact
    else:
        m = getattr(m, "matrix", m)
    if exact is None:
        exact = is_exact_matrix(m)
    a = np.asarray(m, dtype=object if exact else np.float64)
    n = a.shape[0]
    if exact:
        b, den = _integer_scaling(to_exact(a))
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        ident = np.zeros((n, n), dtype=object)
        for i in range(n):
            ident[i, i] = 1
        mk = ident.copy()
        for k in range(1, n + 1):
            am = b.dot(mk)
            tr = sum(am[i, i] for i in range(n))
            c, r = divmod(-tr, k)
            if r:
                raise ArithmeticError("Faddeev-LeVerrier trace not divisible by k")
            _check_budget(c, bit_budget)
            coeffs[n - k] = c
            mk = am + c * ident
        return Polynomial(Fraction(coeffs[j], den ** (n - j)) for j in range(n + 1))
    if n > 64:
        raise ValueError("float Faddeev-LeVerrier is limited to n <= 64")
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    mk = np.eye(n)
    for k in range(1, n + 1):
        am = a @ mk
        c = -np.trace(am) / k
        coeffs[n - k] = c
        mk = am + c * np.eye(n)
    return Polynomial(coeffs.tolist())
