"""Floating-point oracle and plot emitter for the shape curve.

Everything here re-derives data from the geometry of

    psi(t) = rho * exp(-4 pi i m t) * (1 + i r e^{6 pi i l t}) / (1 + i r e^{-6 pi i l t})

with rho = exp(i pi/3), l = ell and a small amplitude ratio r = B/A,
independently of the exact integer formulas, so the two routes can be
checked against each other.  SVG and CSV emission for the shape sphere
and the upper half plane live here as well.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .algebra import Psl2Mat
from .errors import BorderHit, CollisionType, OnBorder, Unstable
from .lissajous import NormalizedType
from .surd import far_endpoint, fixed_points

RHO = cmath.exp(1j * math.pi / 3)

DEFAULT_RATIO = 0.05
BORDER_TOL = 1e-12          # region borders and the equator
CROSSING_GUARD = 1e-9       # min distance of a crossing from a collision point
EQ_PERIOD_TOL = 1e-9        # psi(t + 1/3) = omega psi(t) check
COLLISION_EPS = 1e-6        # refined minimum below this means collision
SEPARATION_EPS = 1e-3       # refined minimum above this means collision-free

_THIRD = 2 * math.pi / 3


@dataclass(frozen=True)
class ShapeSample:
    t: float
    psi: complex


@dataclass(frozen=True)
class Region:
    """One of the six regions: hemisphere sign and angular third.

    label is I/II/III plus '-' (outside the unit circle) or '+' (inside);
    the third k covers angles (2 pi k/3, 2 pi (k+1)/3), whose borders
    pass through the collision points 1, omega, omega^2.
    """

    label: str
    hemisphere: str
    third: int


def _check_free(nt: NormalizedType) -> None:
    if nt.ell % 2 == 0:
        raise CollisionType(f"type {(nt.m, nt.n)} has even ell")


def start_offset(nt: NormalizedType) -> float:
    """Start time just before (ell > 0) or after (ell < 0) zero."""
    sgn_l = 1 if nt.ell > 0 else -1
    return -sgn_l / (600.0 * abs(nt.m * nt.ell))


def psi_values(nt: NormalizedType, ratio: float, ts: np.ndarray) -> np.ndarray:
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"ratio must lie in (0,1), got {ratio}")
    ts = np.asarray(ts, dtype=float)
    osc = np.exp(6j * math.pi * nt.ell * ts)
    return RHO * np.exp(-4j * math.pi * nt.m * ts) * (1 + 1j * ratio * osc) / (1 + 1j * ratio / osc)


def sample_curve(nt: NormalizedType, ratio: float = DEFAULT_RATIO, steps: int = 2000) -> list[ShapeSample]:
    """steps samples of the shape curve over one third of a period."""
    _check_free(nt)
    delta = start_offset(nt)
    ts = np.linspace(delta, 1.0 / 3.0 + delta, steps)
    psis = psi_values(nt, ratio, ts)
    return [ShapeSample(float(t), complex(p)) for t, p in zip(ts, psis)]


def epsilon_oracle(nt: NormalizedType, ratio: float = DEFAULT_RATIO, max_halvings: int = 20) -> tuple[int, ...]:
    """Bits from geometry: bit k is 0 iff sign(1 - |psi(t_k)|) = sign(ell),
    at the collision-passage times t_k = 1/(12|m|) + (k-1)/(6|m|).

    The amplitude ratio is halved until two consecutive ratios agree.
    """
    _check_free(nt)
    am = abs(nt.m)
    sgn_l = 1 if nt.ell > 0 else -1
    ts = np.array([1.0 / (12 * am) + (k - 1) / (6.0 * am) for k in range(1, 2 * am + 1)])

    def bits_at(r: float) -> tuple[int, ...]:
        radii = np.abs(psi_values(nt, r, ts))
        return tuple(0 if (1.0 - rad) * sgn_l > 0 else 1 for rad in radii)

    prev = bits_at(ratio)
    for _ in range(max_halvings):
        ratio /= 2.0
        cur = bits_at(ratio)
        if cur == prev:
            return cur
        prev = cur
    raise Unstable(f"epsilon bits did not stabilise for {(nt.m, nt.n)}")


def _pairwise_min(m: int, n: int, ts: np.ndarray) -> np.ndarray:
    pos = np.sin(2 * math.pi * m * ts) + 1j * np.sin(2 * math.pi * n * ts)
    a = np.sin(2 * math.pi * m * (ts - 1 / 3)) + 1j * np.sin(2 * math.pi * n * (ts - 1 / 3))
    c = np.sin(2 * math.pi * m * (ts + 1 / 3)) + 1j * np.sin(2 * math.pi * n * (ts + 1 / 3))
    return np.minimum(np.abs(a - pos), np.minimum(np.abs(pos - c), np.abs(c - a)))


def collision_scan(m: int, n: int, steps: int | None = None) -> float:
    """Minimum pairwise distance of the three bodies over one period.

    Coarse grid minimum refined by golden-section search around the
    argmin (the distance is V-shaped near a genuine collision).
    """
    if gcd(m, n) != 1:
        raise ValueError(f"gcd{(m, n)} != 1")
    if steps is None:
        steps = max(2048, 512 * max(abs(m), abs(n)))
    ts = np.linspace(0.0, 1.0, steps, endpoint=False)
    dist = _pairwise_min(m, n, ts)
    i = int(np.argmin(dist))
    h = 1.0 / steps
    lo, hi = ts[i] - h, ts[i] + h

    def g(t: float) -> float:
        return float(_pairwise_min(m, n, np.array([t]))[0])

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = g(x1), g(x2)
    for _ in range(200):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = g(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = g(x2)
    return min(float(dist[i]), f1, f2)


def region_of(psi: complex, tol: float = BORDER_TOL) -> Region:
    """Region of a point off the equator and off the border rays."""
    r = abs(psi)
    if abs(r - 1.0) < tol or r == 0.0:
        raise OnBorder(f"|psi| = {r} is on the equator (tol {tol})")
    theta = cmath.phase(psi) % (2 * math.pi)
    k = int(theta // _THIRD)
    if min(theta - k * _THIRD, (k + 1) * _THIRD - theta) < tol:
        raise OnBorder(f"arg(psi) = {theta} lies on a border ray (tol {tol})")
    k = min(k, 2)
    hemi = "-" if r > 1.0 else "+"
    return Region(label=("I", "II", "III")[k] + hemi, hemisphere=hemi, third=k)


def region_itinerary(nt: NormalizedType, ratio: float = DEFAULT_RATIO, steps: int = 30000) -> list[str]:
    """Regions visited over one third of a period, duplicates compressed.

    Samples on or too near a border are skipped.
    """
    labels: list[str] = []
    for sample in sample_curve(nt, ratio, steps):
        try:
            label = region_of(sample.psi, tol=1e-7).label
        except OnBorder:
            continue
        if not labels or labels[-1] != label:
            labels.append(label)
    return labels


def _crossings(nt: NormalizedType, ratio: float, steps: int) -> list[tuple[float, float]]:
    """(time, angle) of each equator crossing over one full period.

    The closed interval [delta, 1 + delta] brackets all 6|ell| crossings;
    its endpoints sit strictly between crossings by the choice of delta.
    """
    delta = start_offset(nt)
    ts = np.linspace(delta, 1.0 + delta, steps + 1)
    f = np.abs(psi_values(nt, ratio, ts)) - 1.0
    out = []
    for i in np.nonzero(f[:-1] * f[1:] < 0)[0]:
        lo, hi = ts[i], ts[i + 1]
        flo = f[i]
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            fmid = float(abs(psi_values(nt, ratio, np.array([mid]))[0])) - 1.0
            if flo * fmid <= 0:
                hi = mid
            else:
                lo, flo = mid, fmid
        t = 0.5 * (lo + hi)
        theta = cmath.phase(complex(psi_values(nt, ratio, np.array([t]))[0])) % (2 * math.pi)
        out.append((float(t), theta))
    return out


def syzygy_oracle(nt: NormalizedType, ratio: float = DEFAULT_RATIO) -> str:
    """Arc labels of the equator crossings of one period, from geometry.

    Arc 1 is arg in (0, 2pi/3), arc 2 (2pi/3, 4pi/3), arc 3 (4pi/3, 2pi).
    A crossing within the guard distance of a collision point triggers a
    retry with a smaller amplitude ratio.
    """
    _check_free(nt)
    expected = 6 * abs(nt.ell)
    last_err: BorderHit | None = None
    for attempt in range(6):
        r = ratio / 2**attempt
        crossings = _crossings(nt, r, steps=max(4096, 256 * expected))
        if len(crossings) != expected:
            continue
        try:
            labels = []
            for t, theta in crossings:
                if min(theta % _THIRD, _THIRD - theta % _THIRD) < CROSSING_GUARD:
                    raise BorderHit(f"crossing at angle {theta} grazes a collision point")
                labels.append(1 + int(theta // _THIRD))
        except BorderHit as err:
            last_err = err
            continue
        # rotate so the crossing nearest an integer time comes first
        times = [t for t, _ in crossings]
        first = min(range(len(times)), key=lambda i: abs(times[i] - round(times[i])))
        labels = labels[first:] + labels[:first]
        return "".join(map(str, labels))
    raise last_err or Unstable(f"could not isolate {expected} crossings for {(nt.m, nt.n)}")


# ---------------------------------------------------------------------------
# figure emission

_SVG_SIZE = 1000
_SVG_SCALE = 450.0


def _sphere_xy(z: complex) -> tuple[float, float]:
    # radial compression r -> r/(1+r) maps the whole plane into the unit disk
    r = abs(z)
    w = z / (1.0 + r) if r > 0 else 0j
    return (_SVG_SIZE / 2 + _SVG_SCALE * w.real, _SVG_SIZE / 2 - _SVG_SCALE * w.imag)


def svg_shape(nt: NormalizedType, ratio: float = DEFAULT_RATIO, steps: int = 6000,
              path: str = "shape.svg") -> str:
    """Shape-sphere figure: compressed equator, border rays, collision
    points, and the full-period curve.  Returns the path written."""
    from .classify import level_slope_of
    from .lissajous import reduce_to_p0

    _check_free(nt)
    label = level_slope_of(*reduce_to_p0(nt))
    meta = f"type=({nt.m},{nt.n}) level={label.level} slope={label.slope_str}"
    delta = start_offset(nt)
    ts = np.linspace(delta, 1.0 + delta, steps)
    psis = psi_values(nt, ratio, ts)
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in (_sphere_xy(complex(z)) for z in psis))
    cx = cy = _SVG_SIZE / 2
    req = _SVG_SCALE / 2  # compressed radius of the equator
    rays = []
    for k in range(6):
        ang = k * math.pi / 3
        rays.append(
            f'<line x1="{cx:.1f}" y1="{cy:.1f}" '
            f'x2="{cx + _SVG_SCALE * math.cos(ang):.1f}" y2="{cy - _SVG_SCALE * math.sin(ang):.1f}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
    marks = []
    for k in range(3):
        ang = k * _THIRD
        marks.append(
            f'<circle cx="{cx + req * math.cos(ang):.2f}" cy="{cy - req * math.sin(ang):.2f}" '
            f'r="6" fill="#cc0000"/>'
        )
    body = "\n".join(
        [
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_SVG_SIZE} {_SVG_SIZE}">',
            f"<!-- {meta} -->",
            f'<rect width="{_SVG_SIZE}" height="{_SVG_SIZE}" fill="white"/>',
            *rays,
            f'<circle cx="{cx}" cy="{cy}" r="{req}" fill="none" stroke="#444444" stroke-width="1.5"/>',
            f'<polyline points="{pts}" fill="none" stroke="#1f3f9f" stroke-width="1.2"/>',
            *marks,
            "</svg>",
        ]
    )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(body)
    return path


def csv_shape(nt: NormalizedType, ratio: float = DEFAULT_RATIO, steps: int = 2000,
              path: str = "shape.csv") -> str:
    """CSV of one third of a period: header t,re_psi,im_psi, 12 significant digits."""
    samples = sample_curve(nt, ratio, steps)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("t,re_psi,im_psi\n")
        for s in samples:
            fh.write(f"{s.t:.12g},{s.psi.real:.12g},{s.psi.imag:.12g}\n")
    return path


def farey_edges(x0: int, x1: int, max_denominator: int) -> list[tuple[Fraction, Fraction]]:
    """Geodesic edges of the Farey tessellation over [x0, x1]: all pairs of
    reduced fractions with denominators <= max_denominator and |ad - bc| = 1."""
    fracs = sorted(
        {
            Fraction(p, q)
            for q in range(1, max_denominator + 1)
            for p in range(x0 * q, x1 * q + 1)
            if gcd(abs(p), q) == 1
        }
    )
    out = []
    for i, u in enumerate(fracs):
        for v in fracs[i + 1:]:
            if abs(u.numerator * v.denominator - u.denominator * v.numerator) == 1:
                out.append((u, v))
    return out


def svg_halfplane(mat: Psl2Mat, max_denominator: int = 8, path: str = "halfplane.svg") -> str:
    """Upper-half-plane figure: Farey tessellation (uncolored) and the axis
    of a hyperbolic matrix between its two fixed points."""
    far = far_endpoint(mat)
    near = [fp for fp in fixed_points(mat) if fp != far][0]
    e0, e1 = sorted((far.approx(), near.approx()))
    x0, x1 = math.floor(e0) - 1, math.ceil(e1) + 1
    width = x1 - x0
    scale = (_SVG_SIZE - 100) / width
    height = int(scale * width * 0.6) + 60

    def xpix(x: float) -> float:
        return 50 + (x - x0) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_SVG_SIZE} {height}">',
        f"<!-- axis endpoints {e0:.6f}, {e1:.6f} -->",
        f'<rect width="{_SVG_SIZE}" height="{height}" fill="white"/>',
        f'<line x1="{xpix(x0)}" y1="{height - 40}" x2="{xpix(x1)}" y2="{height - 40}" stroke="black"/>',
    ]

    def arc(a: float, b: float, stroke: str, swidth: float) -> str:
        r = (b - a) / 2 * scale
        return (
            f'<path d="M {xpix(a):.2f} {height - 40} A {r:.2f} {r:.2f} 0 0 1 '
            f'{xpix(b):.2f} {height - 40}" fill="none" stroke="{stroke}" stroke-width="{swidth}"/>'
        )

    for u, v in farey_edges(x0, x1, max_denominator):
        parts.append(arc(float(u), float(v), "#999999", 0.8))
    for k in range(x0, x1 + 1):
        parts.append(
            f'<line x1="{xpix(k):.2f}" y1="20" x2="{xpix(k):.2f}" y2="{height - 40}" '
            f'stroke="#999999" stroke-width="0.8"/>'
        )
    parts.append(arc(e0, e1, "#cc2200", 2.0))
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts))
    return path


def periodicity_defect(nt: NormalizedType, ratio: float = DEFAULT_RATIO, steps: int = 500) -> float:
    """max |psi(t + 1/3) - omega psi(t)| over sampled t; near 0 by symmetry."""
    delta = start_offset(nt)
    ts = np.linspace(delta, 1.0 / 3.0 + delta, steps)
    omega_c = cmath.exp(2j * math.pi / 3)
    left = psi_values(nt, ratio, ts + 1.0 / 3.0)
    right = omega_c * psi_values(nt, ratio, ts)
    return float(np.max(np.abs(left - right)))
