"""Generic univariate polynomial kernels over an exact coefficient domain.

Polynomials are lists of coefficients, lowest degree first, with a nonzero
last entry (the empty list is zero).  Coefficients must support +, -, *,
**, bool (zero test) and ==; exact division is supplied by the caller, so
the same code runs over the rational field and over the Laurent ring.
"""

from __future__ import annotations

from typing import Callable, Sequence, TypeVar

C = TypeVar("C")
Div = Callable[[C, C], C]


def trim(coeffs: Sequence[C]) -> list[C]:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out


def degree(coeffs: Sequence[C]) -> int:
    return len(coeffs) - 1


def add(f: Sequence[C], g: Sequence[C]) -> list[C]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = out[i] + c
    return trim(out)


def neg(f: Sequence[C]) -> list[C]:
    return [-c for c in f]


def sub(f: Sequence[C], g: Sequence[C]) -> list[C]:
    return add(f, neg(g))


def mul(f: Sequence[C], g: Sequence[C], zero: C) -> list[C]:
    if not f or not g:
        return []
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = out[i + j] + a * b
    return trim(out)


def scale(f: Sequence[C], c: C) -> list[C]:
    if not c:
        return []
    return trim([a * c for a in f])


def div_exact(f: Sequence[C], g: Sequence[C], div: Div, zero: C, exc: type) -> list[C]:
    """Long division asserting a zero remainder.

    Each step divides leading coefficients via ``div``; when g | f every
    such division is exact (the step quotients are coefficients of f/g).
    """
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return []
    if len(f) < len(g):
        raise exc("degree of divisor exceeds degree of dividend")
    rem = list(f)
    dg = degree(g)
    lc_g = g[-1]
    quot = [zero] * (len(f) - len(g) + 1)
    for shift in range(len(f) - len(g), -1, -1):
        c = rem[shift + dg]
        if not c:
            continue
        q = div(c, lc_g)
        quot[shift] = q
        for j, b in enumerate(g):
            rem[shift + j] = rem[shift + j] - q * b
    if any(rem):
        raise exc("polynomial division left a remainder")
    return trim(quot)


def prem(f: Sequence[C], g: Sequence[C]) -> list[C]:
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f modulo g."""
    if not g:
        raise ZeroDivisionError("pseudo-division by zero")
    rem = list(f)
    dg = degree(g)
    lc_g = g[-1]
    steps = degree(f) - dg + 1
    while rem and degree(rem) >= dg:
        lead = rem[-1]
        rem = [c * lc_g for c in rem[:-1]]
        for j in range(dg):
            rem[len(rem) - dg + j] = rem[len(rem) - dg + j] - lead * g[j]
        rem = trim(rem)
        steps -= 1
    for _ in range(steps):
        rem = [c * lc_g for c in rem]
    return trim(rem)


def resultant_prs(
    f: Sequence[C], g: Sequence[C], one: C, zero: C, div: Div
) -> C:
    """Resultant via the subresultant PRS (Brown / Cohen Algorithm 3.3.7).

    Convention: res(f, g) = lc(f)^deg(g) * prod g(root of f), the
    determinant of the Sylvester matrix with f rows on top.
    """
    f, g = trim(f), trim(g)
    if not f or not g:
        return zero
    n, m = degree(f), degree(g)
    sign = one
    if n < m:
        f, g, n, m = g, f, m, n
        if n % 2 and m % 2:
            sign = -sign
    if n == 0:
        return one
    if m == 0:
        return sign * g[0] ** n
    a, b = list(f), list(g)
    gg = one
    hh = one
    while True:
        da, db = degree(a), degree(b)
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        rem = prem(a, b)
        a = b
        if not rem:
            return zero
        denom = [gg * hh ** delta]
        b = div_exact(rem, denom, div, zero, ZeroDivisionError)
        gg = a[-1]
        if delta > 1:
            hh = div(gg ** delta, hh ** (delta - 1))
        elif delta == 1:
            hh = gg
        if degree(b) == 0:
            break
    da = degree(a)
    if da > 1:
        res = div(b[0] ** da, hh ** (da - 1))
    elif da == 1:
        res = b[0]
    else:  # pragma: no cover - loop invariant keeps deg(a) >= 1
        res = one
    return sign * res


def sylvester_matrix(f: Sequence[C], g: Sequence[C], zero: C) -> list[list[C]]:
    n, m = degree(f), degree(g)
    size = n + m
    rows = []
    fd = list(reversed(f))
    gd = list(reversed(g))
    for i in range(m):
        rows.append([zero] * i + fd + [zero] * (m - 1 - i))
    for i in range(n):
        rows.append([zero] * i + gd + [zero] * (n - 1 - i))
    return rows


def bareiss_det(matrix: list[list[C]], one: C, zero: C, div: Div) -> C:
    """Fraction-free determinant; divisions are exact over a domain."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return one
    sign_flip = False
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign_flip = not sign_flip
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
            m[i][k] = zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign_flip else det


def resultant_sylvester(
    f: Sequence[C], g: Sequence[C], one: C, zero: C, div: Div
) -> C:
    """Resultant as the Bareiss determinant of the Sylvester matrix."""
    f, g = trim(f), trim(g)
    if not f or not g:
        return zero
    if degree(f) == 0 and degree(g) == 0:
        return one
    if degree(f) == 0:
        return f[0] ** degree(g)
    if degree(g) == 0:
        return g[0] ** degree(f)
    return bareiss_det(sylvester_matrix(f, g, zero), one, zero, div)
