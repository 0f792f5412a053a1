"""Univariate polynomials over Q(i), stored as coefficient lists in ascending powers."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalar import Scalar

Poly = list


def trim(p: Sequence[Scalar]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence[Scalar]) -> int:
    return len(trim(p)) - 1


def evaluate(p: Sequence[Scalar], x) -> Scalar:
    acc: Scalar = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence[Scalar]) -> Poly:
    return trim([k * c for k, c in enumerate(p)][1:])


def monic(p: Sequence[Scalar]) -> Poly:
    p = trim(p)
    lead = p[-1]
    return [c / lead for c in p]


def divmod_poly(a: Sequence[Scalar], b: Sequence[Scalar]) -> tuple[Poly, Poly]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            r[shift + i] = r[shift + i] - f * c
        r = trim(r)
    return trim(q), r


def gcd(a: Sequence[Scalar], b: Sequence[Scalar]) -> Poly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a) if a else []


def squarefree_factors(p: Sequence[Scalar]) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = lead * prod(f_k ** k)`` with squarefree, pairwise coprime ``f_k``.

    Returns ``[(f_k, k), ...]`` skipping constant factors.
    """
    p = monic(p)
    out: list[tuple[Poly, int]] = []
    if len(p) <= 1:
        return out
    dp = derivative(p)
    g = gcd(p, dp)
    b = divmod_poly(p, g)[0]
    c = divmod_poly(dp, g)[0]
    d = trim([x - y for x, y in _zip_pad(c, derivative(b))])
    k = 1
    while len(b) > 1:
        a = gcd(b, d)
        if len(a) > 1:
            out.append((a, k))
        b = divmod_poly(b, a)[0]
        c = divmod_poly(d, a)[0]
        d = trim([x - y for x, y in _zip_pad(c, derivative(b))])
        k += 1
    return out


def _zip_pad(a: Sequence[Scalar], b: Sequence[Scalar]):
    n = max(len(a), len(b))
    zero = Fraction(0)
    for i in range(n):
        yield (a[i] if i < len(a) else zero), (b[i] if i < len(b) else zero)
