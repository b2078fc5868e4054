"""Closed-form bound formulas and the reference bounds table.

Collects everything that can be computed without touching a concrete
curve: the extremal average ratio, the simple and refined worst-case
ratios, the transcendental-equation root behind the optimized
construction, the recursive chord-cutting table in the plane, and the
patrolling idle-time floor.
"""

import math
from dataclasses import dataclass

from .errors import EmptyInput, KTooSmall, NoBracket, NonPositiveSpeed, OutOfRange


def beta_extremal(k: int) -> float:
    """Worst-case average piece-to-curve ratio: 1/k + sin(pi/k)/pi.

    Also the circle lower bound for the max-ratio problem.
    """
    if k < 1:
        raise KTooSmall("k must be >= 1")
    return 1.0 / k + math.sin(math.pi / k) / math.pi


def gamma_upper_simple(k: int) -> float:
    """Upper bound 2/k from the equal-arc partition, k >= 2."""
    if k < 2:
        raise KTooSmall("k must be >= 2")
    return 2.0 / k


def gamma_upper_refined(k: int) -> float:
    """Upper bound 2/k - 1/(4 k^4) from the non-uniform partition, k >= 3."""
    if k < 3:
        raise KTooSmall("k must be >= 3")
    return 2.0 / k - 1.0 / (4.0 * k**4)


def solve_sk(k: int, tol: float = 1e-14):
    """Root s_k in (0, 1/2) of s + sin(pi s)/pi = 2(1-s)/(k-1), by bisection.

    The left side is increasing and the right side decreasing in s, so
    the root is unique.  Returns (s_k, bound) with
    bound = 2(1-s_k)/(k-1).
    """
    if k < 3:
        raise KTooSmall("k must be >= 3")
    if tol <= 0:
        raise OutOfRange("tol must be positive")
    f = lambda s: s + math.sin(math.pi * s) / math.pi - 2.0 * (1.0 - s) / (k - 1)
    a, b = 0.0, 0.5
    if not (f(a) < 0.0 < f(b)):
        raise NoBracket(f"no sign change on [0, 1/2] for k={k}")
    while b - a > tol:
        m = 0.5 * (a + b)
        if f(m) < 0.0:
            a = m
        else:
            b = m
    s = 0.5 * (a + b)
    return s, 2.0 * (1.0 - s) / (k - 1)


def bkk_table(k_max: int) -> dict[int, float]:
    """Recursive chord-cutting upper bounds in the plane.

    Base values g(1) = 1 and g(2) = 1/2 + 1/pi; for larger k, the best
    of g(a)g(b) over factorizations k = a*b and
    (1 + 2/pi) g(a)g(b)/(g(a)+g(b)) over sums k = a+b.
    """
    if k_max < 1:
        raise KTooSmall("k_max must be >= 1")
    g = {1: 1.0}
    if k_max >= 2:
        g[2] = 0.5 + 1.0 / math.pi
    c = 1.0 + 2.0 / math.pi
    for k in range(3, k_max + 1):
        best = math.inf
        for a in range(2, int(math.isqrt(k)) + 1):
            if k % a == 0:
                best = min(best, g[a] * g[k // a])
        for a in range(1, k // 2 + 1):
            b = k - a
            best = min(best, c * g[a] * g[b] / (g[a] + g[b]))
        g[k] = best
    return g


def sin_taylor_upper(x: float) -> float:
    """Majorant x - x^3/12 of sin(x) on [0, pi]."""
    if not (0.0 <= x <= math.pi):
        raise OutOfRange(f"x must lie in [0, pi], got {x}")
    return x - x**3 / 12.0


def idle_time_lower(speeds) -> float:
    """Idle-time floor 1/sum(v_i) for patrolling a unit-length fence."""
    speeds = list(speeds)
    if not speeds:
        raise EmptyInput("need at least one speed")
    if any(v <= 0 for v in speeds):
        raise NonPositiveSpeed("all speeds must be > 0")
    return 1.0 / sum(speeds)


@dataclass(frozen=True)
class BoundsRow:
    """Per-k bounds: circle lower bound, recursive planar upper bound,
    and the optimized-construction upper bound (with its root s_k)."""

    k: int
    lower: float
    bkk_upper: float
    new_upper: float
    s_k: float | None = None


def table1(k_max: int) -> list[BoundsRow]:
    """Assemble the bounds table for k = 1..k_max."""
    if k_max < 1:
        raise KTooSmall("k_max must be >= 1")
    bkk = bkk_table(k_max)
    rows = []
    for k in range(1, k_max + 1):
        if k == 1:
            new, sk = 1.0, None
        elif k == 2:
            new, sk = gamma_upper_simple(2), None
        else:
            sk, new = solve_sk(k)
        rows.append(BoundsRow(k, beta_extremal(k), bkk[k], new, sk))
    return rows


def round_nearest3(x: float) -> float:
    """Round half-up to 3 decimals (rendering of reference upper bounds)."""
    return math.floor(x * 1000.0 + 0.5) / 1000.0


def round_down3(x: float) -> float:
    """Floor at 3 decimals after snapping to 4, so a value within half a
    4th-decimal ulp of a boundary is not under-printed."""
    return math.floor(round(x * 10000.0) / 10.0 + 1e-9) / 1000.0


def round_up3(x: float) -> float:
    """Ceiling at 3 decimals (conservative rendering of our upper bounds)."""
    return math.ceil(x * 1000.0 - 1e-9) / 1000.0


def rendered_rows(rows: list[BoundsRow]):
    """The three display rows at 3 decimals.

    Lower bounds are rounded down (with the 4-decimal snap), the
    recursive reference upper bounds to nearest, and the optimized upper
    bound up so the printed number is still a valid bound.  Entries with
    no optimized bound (k <= 2) render as None.
    """
    lower = [round_down3(r.lower) for r in rows]
    bkk = [round_nearest3(r.bkk_upper) for r in rows]
    new = [round_up3(r.new_upper) if r.k >= 3 else None for r in rows]
    return lower, bkk, new
