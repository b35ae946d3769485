"""Extremal integer profiles behind the waste arguments.

Problem: minimize ``g(x) = sum(x_i - 2)`` over ``x in {3..domain_max}^t``
subject to ``f(x) = sum(C(x_i - 1, 2)) >= D``.  Solved exactly by dynamic
programming over (position, coverage reached so far, capped at ``D``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb


class InfeasibleProfileError(ValueError):
    pass


@dataclass(frozen=True)
class ProfileProblem:
    D: int
    domain_max: int
    t: int

    def __post_init__(self):
        if self.domain_max < 3:
            raise ValueError("domain_max must be at least 3")
        if self.t < 1:
            raise ValueError("t must be positive")

    @property
    def values(self) -> range:
        return range(3, self.domain_max + 1)

    def f(self, x) -> int:
        return sum(comb(xi - 1, 2) for xi in x)

    @staticmethod
    def g(x) -> int:
        return sum(xi - 2 for xi in x)


@dataclass(frozen=True)
class ProfileSolution:
    value: int
    witness: tuple[int, ...]


def _check_feasible(p: ProfileProblem) -> None:
    if p.D >= p.t * comb(p.domain_max, 2):
        raise InfeasibleProfileError(f"D={p.D} violates D < t*C(domain_max, 2)")
    if p.D > p.t * comb(p.domain_max - 1, 2):
        raise InfeasibleProfileError(f"D={p.D} is unreachable even with every entry at {p.domain_max}")


def _cost_table(p: ProfileProblem):
    D = max(p.D, 0)

    @lru_cache(maxsize=None)
    def best(pos: int, need: int) -> float:
        # minimum g over positions pos..t-1 that still gathers `need` coverage
        if pos == p.t:
            return 0 if need <= 0 else float("inf")
        return min((x - 2) + best(pos + 1, max(need - comb(x - 1, 2), 0)) for x in p.values)

    return best, D


def extremal_profile(p: ProfileProblem) -> ProfileSolution:
    """Optimal ``g`` and the lexicographically largest optimal profile.

    The witness is non-increasing and has at most one entry strictly
    between 3 and ``domain_max``: ``(domain_max,)*(r-1) + (x,) + (3,)*(t-r)``.
    """
    _check_feasible(p)
    best, need = _cost_table(p)
    value = best(0, need)
    witness = []
    spent = 0
    for pos in range(p.t):
        for x in reversed(p.values):
            rest = max(need - comb(x - 1, 2), 0)
            if spent + (x - 2) + best(pos + 1, rest) == value:
                witness.append(x)
                spent += x - 2
                need = rest
                break
    return ProfileSolution(int(value), tuple(witness))


def has_extremal_shape(x: tuple[int, ...], domain_max: int) -> bool:
    if any(a < b for a, b in zip(x, x[1:])):
        return False
    return sum(1 for xi in x if 3 < xi < domain_max) <= 1


def profile_monotone_check(D: int, domain_max: int, t: int, r: int) -> bool:
    """Optimal ``g`` at length ``r`` never exceeds that at length ``t >= r``."""
    if t < r:
        raise ValueError("need t >= r")
    short = extremal_profile(ProfileProblem(D, domain_max, r))
    long = extremal_profile(ProfileProblem(D, domain_max, t))
    return short.value <= long.value


def binomial_gap_check(a: int, b: int, c: int) -> bool:
    """``C(c, 2) - C(a, 2) >= b`` for positive ``a + b = c`` with ``c + a - 1 >= 2``."""
    if min(a, b, c) < 1 or a + b != c or c + a - 1 < 2:
        raise ValueError("need positive a, b, c with a + b = c and c + a - 1 >= 2")
    return comb(c, 2) - comb(a, 2) >= b
