"""ADE root systems, Weyl walls, primitivity and class-T arithmetic.

Roots live in an ambient rational coordinate space:

* ``A(d)``: the hyperplane ``sum(x) = 0`` in Q^(d+1), roots ``e_a - e_b``;
* ``D(d)``: Q^d, roots ``+-e_i +- e_j``;
* ``E(6|7|8)``: Q^8 with the Bourbaki simple roots, E6/E7 spanning a
  sub-space cut out by linear constraints.

Pairings of roots with Cartan vectors use the ambient dot product.  Only
vanishing versus non-vanishing of a pairing is ever used downstream, so the
normalisation of the identification h = h* is immaterial.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Integral, Rational
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidInputError

Root = tuple  # tuple of Fractions in ambient coordinates

DEFAULT_WALL_TOL = 1e-9
_HALF = Fraction(1, 2)


def _unit(n: int, i: int, s: int = 1) -> list:
    v = [Fraction(0)] * n
    v[i] = Fraction(s)
    return v


def _simple_roots(kind: str, rank: int) -> list:
    if kind == "A":
        n = rank + 1
        out = []
        for i in range(rank):
            v = _unit(n, i)
            v[i + 1] = Fraction(-1)
            out.append(v)
        return out
    if kind == "D":
        out = []
        for i in range(rank - 1):
            v = _unit(rank, i)
            v[i + 1] = Fraction(-1)
            out.append(v)
        v = _unit(rank, rank - 2)
        v[rank - 1] = Fraction(1)
        out.append(v)
        return out
    # Bourbaki labelling; E6 and E7 use the first 6 / 7 simple roots of E8.
    e8 = [[_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, _HALF]]
    v = _unit(8, 0)
    v[1] = Fraction(1)
    e8.append(v)
    for i in range(6):
        v = _unit(8, i, -1)
        v[i + 1] = Fraction(1)
        e8.append(v)
    return e8[:rank]


def _nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list:
    """Exact basis of ``{x : rows @ x = 0}`` by Gauss-Jordan elimination."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -m[i][fc]
        basis.append(x)
    return basis


def _dot(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


def _is_exact(v) -> bool:
    if isinstance(v, np.ndarray):
        return v.dtype.kind in "iu"
    return all(isinstance(x, (Integral, Rational)) for x in v)


@dataclass(frozen=True)
class RootSystem:
    """An ADE root system with its positive roots in ambient coordinates.

    Build instances with :func:`build_root_system`.
    """

    kind: str
    rank: int
    simple_roots: tuple
    positive_roots: tuple
    coefficients: tuple  # coefficients of each positive root over simple roots
    constraints: tuple  # ambient linear constraints v . c = 0

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    @property
    def ambient_dim(self) -> int:
        return len(self.simple_roots[0])

    @cached_property
    def positive_array(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.positive_roots])

    @cached_property
    def simple_array(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.simple_roots])

    @cached_property
    def _index(self) -> dict:
        return {c: i for i, c in enumerate(self.coefficients)}

    def root_index(self, theta: Sequence) -> int:
        key = tuple(Fraction(x) for x in theta)
        try:
            return self.positive_roots.index(key)
        except ValueError:
            raise InvalidInputError(f"{list(theta)} is not a positive root of {self.name}") from None

    def root_label(self, theta: Sequence) -> str:
        """Human readable label, ``e1-e3`` style for type A."""
        if self.kind == "A":
            a = next(i for i, x in enumerate(theta) if x == 1)
            b = next(i for i, x in enumerate(theta) if x == -1)
            return f"e{a + 1}-e{b + 1}"
        c = self.coefficients[self.root_index(theta)]
        return "a[" + ",".join(str(x) for x in c) + "]"

    def check_vector(self, v: Sequence, tol: float = 1e-9) -> None:
        """Raise unless ``v`` lies in the ambient model (dimension and constraints)."""
        if len(v) != self.ambient_dim:
            raise InvalidInputError(
                f"dimension mismatch: {self.name} expects {self.ambient_dim} coordinates, got {len(v)}"
            )
        if _is_exact(v):
            vv = [Fraction(int(x)) if isinstance(x, np.integer) else Fraction(x) for x in v]
            bad = any(_dot(c, vv) != 0 for c in self.constraints)
        else:
            arr = np.asarray(v, dtype=complex)
            scale = max(float(np.linalg.norm(arr)), 1.0)
            bad = any(
                abs(np.dot(np.array([float(x) for x in c]), arr)) > tol * scale * math.sqrt(float(_dot(c, c)))
                for c in self.constraints
            )
        if bad:
            raise InvalidInputError(f"vector {list(v)} violates the ambient constraints of {self.name}")

    def project(self, v: Sequence) -> np.ndarray:
        """Orthogonal projection of a float/complex vector onto the ambient model."""
        arr = np.asarray(v, dtype=complex if np.iscomplexobj(v) else float).copy()
        for c in self.constraints:
            cc = np.array([float(x) for x in c])
            arr = arr - np.dot(cc, arr) / np.dot(cc, cc) * cc
        return arr

    def pair(self, theta: Sequence, v: Sequence):
        """Ambient pairing; exact ``Fraction`` for rational ``v``."""
        if _is_exact(v):
            return _dot(theta, [Fraction(int(x)) if isinstance(x, np.integer) else Fraction(x) for x in v])
        return np.dot(np.array([float(x) for x in theta]), np.asarray(v))

    def reflect(self, alpha: Sequence, v: Sequence) -> tuple:
        """Reflection of ``v`` in the wall of ``alpha`` (all roots have norm^2 = 2)."""
        c = self.pair(alpha, v)
        if _is_exact(v):
            return tuple(Fraction(x) - c * a for x, a in zip(v, alpha))
        return tuple(np.asarray(v) - c * np.array([float(a) for a in alpha]))


def _closure_coefficients(gram: list) -> list:
    """All roots as integer coefficient vectors, by closure under simple reflections."""
    r = len(gram)
    start = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    seen = set(start)
    queue = deque(start)
    while queue:
        c = queue.popleft()
        for i in range(r):
            k = sum(c[j] * gram[j][i] for j in range(r))
            if k == 0:
                continue
            new = list(c)
            new[i] -= k
            new = tuple(new)
            if new not in seen:
                seen.add(new)
                queue.append(new)
    return sorted(seen)


def build_root_system(kind: str, rank: Optional[int] = None) -> RootSystem:
    """Construct the root system ``A(d)``, ``D(d)`` or ``E(6|7|8)``.

    ``kind`` may also be a combined label such as ``"A3"``.  Positive roots are
    ordered lexicographically (descending) by their coefficient vectors over the
    simple roots, which puts ``e1-e2`` before ``e2-e3`` in type A.
    """
    if rank is None:
        kind, rank = str(kind)[0], str(kind)[1:]
        try:
            rank = int(rank)
        except ValueError:
            raise InvalidInputError(f"cannot parse root system label {kind}{rank}") from None
    kind = str(kind).upper()
    if not isinstance(rank, Integral):
        raise InvalidInputError(f"rank must be an integer, got {rank!r}")
    rank = int(rank)
    valid = (kind == "A" and rank >= 1) or (kind == "D" and rank >= 4) or (kind == "E" and rank in (6, 7, 8))
    if not valid:
        raise InvalidInputError(f"invalid root system {kind}({rank}); need A d>=1, D d>=4 or E 6/7/8")
    simple = _simple_roots(kind, rank)
    gram = [[int(_dot(a, b)) for b in simple] for a in simple]
    coeffs = [c for c in _closure_coefficients(gram) if all(x >= 0 for x in c)]
    coeffs.sort(reverse=True)
    dim = len(simple[0])
    positive = []
    for c in coeffs:
        v = [Fraction(0)] * dim
        for k, s in zip(c, simple):
            if k:
                v = [a + k * b for a, b in zip(v, s)]
        positive.append(tuple(v))
    constraints = _nullspace(simple, dim)
    return RootSystem(
        kind=kind,
        rank=rank,
        simple_roots=tuple(tuple(s) for s in simple),
        positive_roots=tuple(positive),
        coefficients=tuple(coeffs),
        constraints=tuple(tuple(c) for c in constraints),
    )


def expected_positive_count(kind: str, rank: int) -> int:
    if kind == "A":
        return rank * (rank + 1) // 2
    if kind == "D":
        return rank * (rank - 1)
    return {6: 36, 7: 63, 8: 120}[rank]


# -- walls ----------------------------------------------------------------


def _wall_hits(rs: RootSystem, v: Sequence, tol: Optional[float]) -> list:
    rs.check_vector(v)
    if _is_exact(v):
        vals = [abs(rs.pair(th, v)) for th in rs.positive_roots]
        if tol is None:
            return [i for i, x in enumerate(vals) if x == 0]
        return [i for i, x in enumerate(vals) if x <= tol]
    arr = np.asarray(v)
    vals = np.abs(rs.positive_array @ arr)
    if tol is None:
        # relative default: 1e-9 |theta| |v|, with |theta| = sqrt(2)
        thresh = DEFAULT_WALL_TOL * math.sqrt(2.0) * float(np.linalg.norm(arr))
    else:
        thresh = tol
    return [int(i) for i in np.nonzero(vals <= thresh)[0]]


def wall_test(rs: RootSystem, v: Sequence, tol: Optional[float] = None) -> list:
    """Positive roots whose kernel contains ``v`` (within ``tol``).

    ``tol=None`` selects the default relative threshold ``1e-9 |theta||v|``
    for floating input and exact vanishing for rational input; an explicit
    ``tol`` is an absolute bound on ``|<theta, v>|``.
    """
    return [rs.positive_roots[i] for i in _wall_hits(rs, v, tol)]


@dataclass(frozen=True)
class Decomposition:
    primitive: bool
    witness: Optional[tuple] = None


def primitive_decomposition(rs: RootSystem, theta: Sequence, predicate: Callable[[tuple], bool]) -> Decomposition:
    """Decide whether ``theta`` splits as ``theta1 + theta2`` with both summands satisfying ``predicate``."""
    idx = rs.root_index(theta)
    target = rs.coefficients[idx]
    lookup = rs._index
    for i, c1 in enumerate(rs.coefficients):
        c2 = tuple(a - b for a, b in zip(target, c1))
        j = lookup.get(c2)
        if j is None:
            continue
        t1, t2 = rs.positive_roots[i], rs.positive_roots[j]
        if predicate(t1) and predicate(t2):
            return Decomposition(False, (t1, t2))
    return Decomposition(True, None)


# -- Weyl group -------------------------------------------------------------


def weyl_orbit(rs: RootSystem, v: Sequence, max_size: int = 200_000, digits: int = 10) -> set:
    """Orbit of ``v`` under the Weyl group, as a set of tuples.

    Rational input is handled exactly; floating input is deduplicated after
    rounding to ``digits`` decimals.
    """
    rs.check_vector(v)
    exact = _is_exact(v)
    if exact:
        start = tuple(Fraction(int(x)) if isinstance(x, np.integer) else Fraction(x) for x in v)
        key = lambda w: w  # noqa: E731
    else:
        start = tuple(float(x) for x in v)
        key = lambda w: tuple(round(x, digits) + 0.0 for x in w)  # noqa: E731
    seen = {key(start): start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for alpha in rs.simple_roots:
            u = rs.reflect(alpha, w)
            if not exact:
                u = tuple(float(x) for x in u)
            ku = key(u)
            if ku not in seen:
                if len(seen) >= max_size:
                    raise InvalidInputError(f"Weyl orbit exceeds max_size={max_size}")
                seen[ku] = u
                queue.append(u)
    return set(seen.values())


def permutation_order(perm: Sequence[int]) -> int:
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise InvalidInputError(f"{list(perm)} is not a permutation of 0..{n - 1}")
    seen = [False] * n
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def reflection_matrix(rs: RootSystem, i: int) -> list:
    alpha = rs.simple_roots[i]
    n = rs.ambient_dim
    return [[Fraction(int(r == c)) - alpha[r] * alpha[c] for c in range(n)] for r in range(n)]


def weyl_element_order(
    rs: RootSystem, *, permutation: Optional[Sequence[int]] = None, word: Optional[Iterable[int]] = None,
    max_order: int = 10_000,
) -> int:
    """Order of a Weyl group element given as a permutation (type A) or a word in simple reflections."""
    if (permutation is None) == (word is None):
        raise InvalidInputError("give exactly one of permutation= or word=")
    if permutation is not None:
        if rs.kind != "A" or len(permutation) != rs.rank + 1:
            raise InvalidInputError(f"permutations describe Weyl elements of A{len(permutation) - 1} only")
        return permutation_order(permutation)
    n = rs.ambient_dim
    ident = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    m = ident
    for i in word:
        if not 0 <= i < rs.rank:
            raise InvalidInputError(f"simple reflection index {i} out of range for {rs.name}")
        s = reflection_matrix(rs, i)
        m = [[sum(m[r][k] * s[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
    p = m
    for k in range(1, max_order + 1):
        if p == ident:
            return k
        p = [[sum(p[r][j] * m[j][c] for j in range(n)) for c in range(n)] for r in range(n)]
    raise InvalidInputError(f"order exceeds {max_order}")


# -- cyclic quotient singularities --------------------------------------------


@dataclass(frozen=True)
class TSingularity:
    """Classification of the cyclic quotient singularity 1/r(1, q)."""

    r: int
    q: int
    classification: str  # "RDP_A" | "ClassT" | "NotClassT"
    d: Optional[int] = None
    n: Optional[int] = None
    a: Optional[int] = None

    @property
    def label(self) -> str:
        if self.classification == "RDP_A":
            return f"A{self.r - 1}"
        return f"1/{self.r}(1,{self.q})"

    def to_json(self) -> dict:
        out = {"r": self.r, "q": self.q, "classification": self.classification, "label": self.label}
        if self.classification == "ClassT":
            out.update(d=self.d, n=self.n, a=self.a)
        if self.classification == "RDP_A":
            out["rdp_rank"] = self.r - 1
        return out


def classify_T_singularity(r: int, q: int) -> TSingularity:
    """Classify 1/r(1, q) as an A-type RDP, a class-T quotient 1/(dn^2)(1, dna-1) or neither.

    Among class-T solutions the smallest ``n > 1`` and then the smallest ``a`` is reported.
    """
    if not (isinstance(r, Integral) and isinstance(q, Integral)) or not 0 < q < r:
        raise InvalidInputError(f"need integers 0 < q < r, got r={r}, q={q}")
    if math.gcd(q, r) != 1:
        raise InvalidInputError(f"gcd(q, r) = {math.gcd(q, r)} != 1: 1/{r}(1,{q}) is not an isolated cyclic quotient")
    r, q = int(r), int(q)
    if (q + 1) % r == 0:
        return TSingularity(r, q, "RDP_A")
    n = 2
    while n * n <= r:
        if r % (n * n) == 0:
            d = r // (n * n)
            for a in range(1, n):
                if math.gcd(a, n) == 1 and (d * n * a - 1 - q) % r == 0:
                    return TSingularity(r, q, "ClassT", d=d, n=n, a=a)
        n += 1
    return TSingularity(r, q, "NotClassT")


# -- deformation parameters -----------------------------------------------------


@dataclass(frozen=True)
class DeformationParameter:
    """The joint Kaehler/complex parameter ``zeta = (zeta_r, zeta_c)``.

    ``zeta_c = zeta_2 + i zeta_3``; :meth:`triple` returns ``(zeta_1, zeta_2, zeta_3)``.
    """

    zeta_r: np.ndarray
    zeta_c: np.ndarray

    def __post_init__(self):
        zr = np.asarray(self.zeta_r, dtype=float)
        zc = np.asarray(self.zeta_c, dtype=complex)
        if zr.shape != zc.shape or zr.ndim != 1:
            raise InvalidInputError(f"zeta_r and zeta_c must be vectors of equal length, got {zr.shape}, {zc.shape}")
        object.__setattr__(self, "zeta_r", zr)
        object.__setattr__(self, "zeta_c", zc)

    @classmethod
    def from_triple(cls, z1, z2, z3) -> "DeformationParameter":
        return cls(np.asarray(z1, float), np.asarray(z2, float) + 1j * np.asarray(z3, float))

    def triple(self) -> tuple:
        return self.zeta_r, self.zeta_c.real.copy(), self.zeta_c.imag.copy()

    @property
    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.zeta_r ** 2) + np.sum(np.abs(self.zeta_c) ** 2)))

    def check(self, rs: RootSystem) -> None:
        rs.check_vector(self.zeta_r)
        rs.check_vector(self.zeta_c)
