"""Exact characteristic polynomials and rigorous smallest-root isolation.

This is the independent cross-check for the iterative eigensolver: integer
matrices get exact integer coefficients of det(lambda I - M) through the
Faddeev-LeVerrier recurrence, and the smallest real root is bisected to
1e-12 width using Sturm-chain sign-change counts in exact rational
arithmetic (a bare sign-change test would skip even-multiplicity roots,
e.g. the doubled smallest eigenvalue of a triangle's Q-matrix).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import InvalidParameterError

ROOT_WIDTH = 1e-12


def _as_int_matrix(m) -> list[list[int]]:
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidParameterError(f"expected a square matrix, got shape {arr.shape}")
    out = []
    for row in arr.tolist():
        ints = []
        for x in row:
            if x != int(x):
                raise InvalidParameterError(f"non-integer entry {x!r}")
            ints.append(int(x))
        out.append(ints)
    return out


def _mat_mul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)
    ]


def charpoly_coeffs(m) -> list[int]:
    """Integer coefficients of det(lambda I - M), descending powers.

    Faddeev-LeVerrier: M_1 = A, c_1 = -tr M_1, then
    M_k = A (M_{k-1} + c_{k-1} I), c_k = -tr(M_k) / k (division exact).
    """
    a = _as_int_matrix(m)
    n = len(a)
    coeffs = [1]
    mk = [row[:] for row in a]
    for k in range(1, n + 1):
        if k > 1:
            prev = [row[:] for row in mk]
            for i in range(n):
                prev[i][i] += coeffs[-1]
            mk = _mat_mul(a, prev)
        trace = sum(mk[i][i] for i in range(n))
        ck, rem = divmod(-trace, k)
        assert rem == 0, "Faddeev-LeVerrier division must be exact"
        coeffs.append(ck)
    return coeffs


# -- exact polynomial helpers (coefficient lists, descending powers) ---------


def _poly_trim(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _poly_eval(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in p:
        acc = acc * x + c
    return acc


def _poly_deriv(p):
    n = len(p) - 1
    return [c * (n - i) for i, c in enumerate(p[:-1])] or [0]


def _poly_divmod(num, den):
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    if len(num) < len(den):
        return [Fraction(0)], _poly_trim(num)
    quot = []
    for _ in range(len(num) - len(den) + 1):
        lead = num[0] / den[0]
        quot.append(lead)
        for i in range(len(den)):
            num[i] -= lead * den[i]
        num.pop(0)
    return quot, _poly_trim(num or [Fraction(0)])


def _poly_gcd(a, b):
    a = _poly_trim([Fraction(c) for c in a])
    b = _poly_trim([Fraction(c) for c in b])
    while b != [0] and any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, _poly_trim(r)
    return [c / a[0] for c in a]  # monic


def _squarefree(p):
    g = _poly_gcd(p, _poly_deriv(p))
    if len(g) == 1:
        return [Fraction(c) for c in p]
    q, r = _poly_divmod(p, g)
    assert not any(r), "square-free division must be exact"
    return q


def _sturm_chain(p):
    chain = [_poly_trim(list(p)), _poly_trim(_poly_deriv(p))]
    while len(chain[-1]) > 1 or chain[-1][0] != 0:
        _, r = _poly_divmod(chain[-2], chain[-1])
        r = _poly_trim(r)
        if not any(r):
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def smallest_real_root(coeffs, width: float = ROOT_WIDTH) -> float:
    """Smallest real root of a polynomial with all-real roots, to ``width``.

    Counts distinct roots in (lo, mid] via the Sturm chain of the square-free
    part and bisects toward the leftmost one.  The Cauchy bound frames the
    initial interval.
    """
    p = _poly_trim(list(coeffs))
    if len(p) < 2:
        raise InvalidParameterError("constant polynomial has no roots")
    bound = 1 + max(abs(Fraction(c) / p[0]) for c in p[1:])
    q = _squarefree(p)
    chain = _sturm_chain(q)
    lo, hi = -bound, bound
    v_lo = _sign_changes(chain, lo)
    if v_lo - _sign_changes(chain, hi) == 0:
        raise InvalidParameterError("polynomial has no real roots in the Cauchy bound")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if v_lo - _sign_changes(chain, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return float((lo + hi) / 2)


def charpoly_oracle(m) -> tuple[list[int], float]:
    """Exact charpoly coefficients plus the smallest real root.

    Intended for integer symmetric matrices of modest dimension; the root
    isolation assumes all roots are real (true for any symmetric input).
    """
    coeffs = charpoly_coeffs(m)
    return coeffs, smallest_real_root(coeffs)
