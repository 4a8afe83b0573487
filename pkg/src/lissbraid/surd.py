"""Exact quadratic irrationals and periodic continued fractions.

A surd is (P + sqrt(D)) / Q with integer P, Q != 0 and nonsquare D > 0,
kept in the classical normalized form Q | D - P*P so the continued
fraction recurrence stays in integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .algebra import Psl2Mat, trace_class
from .errors import NotHyperbolic, TranslationForm

_MAX_CF_STEPS = 100_000


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _split_square(d: int) -> tuple[int, int]:
    """d = c*c * rest with rest free of small square factors.

    Peels squares of primes up to 1000 and a final perfect-square check;
    used for display and canonical equality only.
    """
    c = 1
    if _is_square(d):
        return isqrt(d), 1
    f = 2
    while f <= 1000:
        f2 = f * f
        while d % f2 == 0:
            d //= f2
            c *= f
        f += 1 if f == 2 else 2
    if _is_square(d):
        c, d = c * isqrt(d), 1
    return c, d


def _floor_surd(p: int, q: int, d: int) -> int:
    """Exact floor((p + sqrt(d)) / q) for nonsquare d > 0."""
    s = isqrt(d)  # sqrt(d) is irrational, so floor(p + sqrt(d)) = p + s
    if q > 0:
        return (p + s) // q
    return -((p + s) // (-q) + 1)


@dataclass(frozen=True)
class QuadSurd:
    """The real quadratic irrational (P + sqrt(D)) / Q."""

    P: int
    Q: int
    D: int

    def __post_init__(self):
        if self.Q == 0:
            raise ValueError("Q must be nonzero")
        if self.D <= 0 or _is_square(self.D):
            raise ValueError(f"D must be a positive nonsquare, got {self.D}")
        if (self.D - self.P * self.P) % self.Q != 0:
            # scale P, Q by |Q| and D by Q^2 to restore divisibility
            q = abs(self.Q)
            object.__setattr__(self, "P", self.P * q)
            object.__setattr__(self, "D", self.D * q * q)
            object.__setattr__(self, "Q", self.Q * q)

    def approx(self) -> float:
        # sqrt via a 64-bit-shifted integer root so huge D (beyond float
        # range) still yields a correctly rounded quotient
        root = Fraction(isqrt(self.D << 128), 1 << 64)
        return float((self.P + root) / self.Q)

    def conjugate(self) -> "QuadSurd":
        """The Galois conjugate (P - sqrt(D)) / Q."""
        return QuadSurd(-self.P, -self.Q, self.D)

    def floor(self) -> int:
        return _floor_surd(self.P, self.Q, self.D)

    def _canonical(self) -> tuple[int, int, int, int]:
        """(P, c, d, Q) with value (P + c*sqrt(d))/Q, Q > 0, gcd(P,c,Q) = 1."""
        c, d = _split_square(self.D)
        p, q = self.P, self.Q
        if q < 0:
            p, c, q = -p, -c, -q
        g = gcd(gcd(abs(p), abs(c)), q)
        return (p // g, c // g, d, q // g)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadSurd):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __str__(self) -> str:
        p, c, d, q = self._canonical()
        root = f"{abs(c)}√{d}" if abs(c) != 1 else f"√{d}"
        sign = "+" if c > 0 else "-"
        if p == 0:
            head = root if c > 0 else f"-{root}"
            return head if q == 1 else f"{head}/{q}"
        body = f"{p}{sign}{root}"
        return body if q == 1 else f"({body})/{q}"

    def __repr__(self) -> str:
        return f"QuadSurd(P={self.P}, Q={self.Q}, D={self.D})"


def approx(x: QuadSurd) -> float:
    """Floating approximation (plots and tie-free comparisons only)."""
    return x.approx()


def _abs_cmp(x: QuadSurd, y: QuadSurd) -> int:
    """Sign of |x| - |y| for surds over the same sqrt(D), exactly.

    Compares x^2 with y^2: both are (P^2+D + 2P sqrt(D))/Q^2, and the sign
    of u + v*sqrt(D) is decided by integer arithmetic.
    """
    if x.D != y.D:
        raise ValueError("comparison requires a common D")
    d = x.D
    u = (x.P * x.P + d) * y.Q * y.Q - (y.P * y.P + d) * x.Q * x.Q
    v = 2 * (x.P * y.Q * y.Q - y.P * x.Q * x.Q)
    # sign of u + v*sqrt(d)
    if v == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return (v > 0) - (v < 0)
    if (u > 0) == (v > 0):
        return 1 if u > 0 else -1
    lhs, rhs = u * u, v * v * d
    if u > 0:  # u > 0 > v: sign is that of u^2 - v^2 d
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


@dataclass(frozen=True)
class CfExpansion:
    """Eventually periodic continued fraction: preperiod then minimal cycle."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"preperiod": list(self.preperiod), "period": list(self.period)}

    def __str__(self) -> str:
        pre = ",".join(map(str, self.preperiod))
        per = ",".join(map(str, self.period))
        return f"[{pre};({per})]" if pre else f"[({per})]"


def cf_expand(x: QuadSurd) -> CfExpansion:
    """Regular continued fraction of a quadratic surd, split at the first
    repeated exact (P, Q) state."""
    p, q, d = x.P, x.Q, x.D
    terms: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    for _ in range(_MAX_CF_STEPS):
        state = (p, q)
        if state in seen:
            start = seen[state]
            return CfExpansion(tuple(terms[:start]), tuple(terms[start:]))
        seen[state] = len(terms)
        a = _floor_surd(p, q, d)
        terms.append(a)
        p = a * q - p
        assert (d - p * p) % q == 0
        q = (d - p * p) // q
    raise RuntimeError("continued fraction failed to cycle")


def cf_evaluate(cf: CfExpansion, nterms: int = 60) -> float:
    """Float value of the expansion truncated to nterms partial quotients."""
    quots = list(cf.preperiod)
    while len(quots) < nterms:
        quots.extend(cf.period)
    quots = quots[:nterms]
    value = float(quots[-1])
    for a in reversed(quots[:-1]):
        value = a + 1.0 / value
    return value


def _primitive_cycle(seq: tuple[int, ...]) -> tuple[int, ...]:
    n = len(seq)
    for length in range(1, n + 1):
        if n % length == 0 and seq == seq[:length] * (n // length):
            return seq[:length]
    return seq


def matches_cluster_period(cf: CfExpansion, radii) -> bool:
    """Whether the CF period and (2r-1 for r in radii) generate the same
    bi-infinite sequence (equal primitive cycles up to rotation)."""
    u = _primitive_cycle(tuple(cf.period))
    v = _primitive_cycle(tuple(2 * r - 1 for r in radii))
    if len(u) != len(v):
        return False
    return any(v[i:] + v[:i] == u for i in range(len(v)))


def _check_hyperbolic(mat: Psl2Mat) -> None:
    if trace_class(mat) != "hyperbolic":
        raise NotHyperbolic(f"{mat} has |trace| <= 2")


def fixed_points(mat: Psl2Mat) -> tuple[QuadSurd, QuadSurd]:
    """The two real fixed points of a hyperbolic matrix, as exact surds.

    Roots of c x^2 + (d - a) x - b = 0 with the content divided out.
    """
    _check_hyperbolic(mat)
    if mat.c == 0:
        raise TranslationForm(f"{mat} fixes infinity")
    ca, cb, cc = mat.c, mat.d - mat.a, -mat.b
    g = gcd(gcd(abs(ca), abs(cb)), abs(cc))
    ca, cb, cc = ca // g, cb // g, cc // g
    disc = cb * cb - 4 * ca * cc
    return QuadSurd(-cb, 2 * ca, disc), QuadSurd(cb, -2 * ca, disc)


def far_endpoint(mat: Psl2Mat) -> QuadSurd:
    """The fixed point of larger absolute value (+sqrt branch on ties)."""
    plus, minus = fixed_points(mat)
    return minus if _abs_cmp(plus, minus) < 0 else plus


def dilatation(mat: Psl2Mat) -> QuadSurd:
    """Larger eigenvalue (|t| + sqrt(t^2 - 4)) / 2 of a hyperbolic matrix."""
    _check_hyperbolic(mat)
    t = abs(mat.trace())
    return QuadSurd(t, 2, t * t - 4)
