"""Closed-form upper bounds on the least Q-eigenvalue.

Three formulas are evaluated, all driven by order n, pendant count k, and
minimum degree delta:

* ``bound_pendant(n, k)``: the pendant-count bound derived from the
  balanced clique-with-pendants maximizer.
* ``bound_submatrix(n, k)``: the sharper intermediate from the 2x2-block
  principal-submatrix step of the same derivation, with t = ceil(k/(n-k)).
* ``bound_lima(n, delta)``: the minimum-degree bound from the literature.

``compare_bounds`` tabulates the k-free variants side by side.  It reports
which is smaller and deliberately asserts no direction between the general
pendant bound and the delta = 1 bound: evaluated head to head, the delta = 1
bound is the smaller one throughout, so any claim of the opposite ordering
is surfaced as data rather than encoded as a check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidParameterError


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameterError(msg)


def bound_pendant(n: int, k: int) -> float:
    """Upper bound on the least Q-eigenvalue from k pendant vertices."""
    _require(k >= 1, f"need k >= 1, got {k}")
    _require(n - k >= 3, f"need n - k >= 3, got n={n}, k={k}")
    c = n - k
    return (c + k / c - math.sqrt((c - 2) ** 2 + 2 * k + k * k / (c * c))) / 2


def bound_pendant_general(n: int) -> float:
    """The k-free pendant bound; algebraically equal to bound_pendant(n, 1)."""
    _require(n >= 4, f"need n >= 4, got {n}")
    return (
        n - 1 + 1 / (n - 1) - math.sqrt(n * n - 6 * n + 11 + 1 / (n - 1) ** 2)
    ) / 2


def bound_submatrix(n: int, k: int) -> float:
    """Least eigenvalue of the star-center principal block with
    t = ceil(k/(n-k)) pendants; at most bound_pendant(n, k)."""
    _require(k >= 1, f"need k >= 1, got {k}")
    _require(n - k >= 3, f"need n - k >= 3, got n={n}, k={k}")
    c = n - k
    t = -(-k // c)
    return (c + t - math.sqrt((c + t) ** 2 - 4 * (c - 1))) / 2


def bound_lima(n: int, delta: int) -> float:
    """Minimum-degree upper bound; always strictly below delta itself."""
    _require(n >= 2, f"need n >= 2, got {n}")
    _require(1 <= delta <= n - 1, f"need 1 <= delta <= n-1, got {delta}")
    value = (n - 1 + delta - math.sqrt((n - 1 - delta) ** 2 + 4)) / 2
    assert value < delta
    return value


@dataclass(frozen=True)
class BoundRow:
    """One line of the k-free comparison table."""

    n: int
    cor_pendant_general: float
    lima_delta1: float
    submatrix_k1: float

    @property
    def diff(self) -> float:
        return self.cor_pendant_general - self.lima_delta1

    @property
    def smaller(self) -> str:
        return "lima" if self.lima_delta1 < self.cor_pendant_general else "pendant"


@dataclass(frozen=True)
class BoundReport:
    """Named bound values plus bookkeeping from a soundness sweep.

    ``max_violation <= 0`` means every checked graph satisfied every
    applicable bound.
    """

    n: int
    k: int | None
    delta: int
    values: dict[str, float] = field(default_factory=dict)
    witnesses_checked: int = 0
    max_violation: float = -math.inf


def bound_report(n: int, k: int | None = None, delta: int = 1) -> BoundReport:
    """Evaluate every applicable bound for the given parameters."""
    values = {"lima": bound_lima(n, delta)}
    if n >= 4:
        values["pendant_general"] = bound_pendant_general(n)
    if k is not None:
        values["pendant"] = bound_pendant(n, k)
        values["submatrix"] = bound_submatrix(n, k)
    return BoundReport(n=n, k=k, delta=delta, values=values)


def soundness_report(n: int, k: int, max_qmin: float, count: int) -> BoundReport:
    """Fold an exhaustive class maximum into a violation figure: positive
    ``max_violation`` would mean some graph beat a bound."""
    rep = bound_report(n, k, delta=1)
    worst = max(max_qmin - v for v in rep.values.values())
    return BoundReport(
        n=n,
        k=k,
        delta=1,
        values=rep.values,
        witnesses_checked=count,
        max_violation=worst,
    )


def compare_bounds(ns) -> list[BoundRow]:
    """Tabulate the k-free bounds for each order in ``ns``."""
    rows = []
    for n in ns:
        _require(n >= 4, f"comparison needs n >= 4, got {n}")
        rows.append(
            BoundRow(
                n=n,
                cor_pendant_general=bound_pendant_general(n),
                lima_delta1=bound_lima(n, 1),
                submatrix_k1=bound_submatrix(n, 1),
            )
        )
    return rows
