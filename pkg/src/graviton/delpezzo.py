"""Singularities of cyclic quotients of CP^1 x CP^1 by diagonal actions.

The generator acts by ``([u1:v1], [u2:v2]) -> ([xi^w1 u1 : v1], [xi^w2 u2 : v2])`` with
``xi = exp(2 pi i / r)``.  Only the four torus-fixed points can have
nontrivial stabilizers, and each is fixed by the whole group; the tangent
weights there are ``(+-w1, +-w2)`` (the sign flips in the chart at infinity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .cartan import TSingularity, classify_T_singularity
from .errors import InvalidInputError

_CHARTS = (("[0:1]", 1), ("[1:0]", -1))


@dataclass(frozen=True)
class CyclicAction:
    r: int
    w1: int
    w2: int

    def __post_init__(self):
        if self.r < 1:
            raise InvalidInputError("order r must be positive")
        if not (0 <= self.w1 < self.r and 0 <= self.w2 < self.r):
            raise InvalidInputError("weights must satisfy 0 <= w_i < r")

    @property
    def kernel_order(self) -> int:
        """Order of the subgroup acting trivially on the surface."""
        return math.gcd(self.r, math.gcd(self.w1, self.w2))

    @property
    def effective_order(self) -> int:
        return self.r // self.kernel_order


@dataclass(frozen=True)
class SingularPoint:
    point: tuple
    stabilizer_order: int
    weights: tuple
    isolated: bool
    q: Optional[int]
    singularity: Optional[TSingularity]

    @property
    def label(self) -> str:
        if not self.isolated:
            return "non-isolated"
        return self.singularity.label

    def to_json(self) -> dict:
        return {
            "point": list(self.point),
            "stabilizer_order": self.stabilizer_order,
            "weights": list(self.weights),
            "isolated": self.isolated,
            "q": self.q,
            "type": self.label,
            "classification": None if self.singularity is None else self.singularity.to_json(),
        }


def normalized_type(r: int, a: int, b: int) -> int:
    """``q`` with ``1/r(a, b) = 1/r(1, q)``, choosing the smaller of ``q`` and ``q^-1``."""
    q = b * pow(a, -1, r) % r
    return min(q, pow(q, -1, r))


def singularity_inventory(act: CyclicAction) -> list:
    """The four fixed points with their local types ``1/r'(1, q')``."""
    g = act.kernel_order
    rr = act.effective_order
    if rr == 1:
        raise InvalidInputError("the action is trivial")
    out = []
    for p1, s1 in _CHARTS:
        for p2, s2 in _CHARTS:
            a = (s1 * act.w1 // g) % rr
            b = (s2 * act.w2 // g) % rr
            isolated = math.gcd(a, rr) == 1 and math.gcd(b, rr) == 1
            if isolated:
                q = normalized_type(rr, a, b)
                out.append(SingularPoint((p1, p2), rr, (a, b), True, q, classify_T_singularity(rr, q)))
            else:
                out.append(SingularPoint((p1, p2), rr, (a, b), False, None, None))
    return out
