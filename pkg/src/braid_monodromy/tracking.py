"""Numerical braid extraction by root continuation along parameter loops.

Roots are followed with warm-started Aberth iterations.  Braid letters are
read off in the plane rotated by ``exp(i*theta)``: strands are positions in
the order of increasing real part, and whenever two neighbouring roots swap
real-part order a letter is emitted.  The letter is positive when the root
moving right passes below the other one, i.e. the exchange is
counterclockwise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .braids import BraidWord, permutation_image
from .config import RunConfig
from .permutations import Permutation
from .polynomials import (
    BivariatePolynomial,
    ComplexPolynomial,
    PolynomialFamily,
    RootFindingError,
    roots,
)


class TrackingError(RuntimeError):
    pass


class RootCollisionError(TrackingError):
    """The loop passes (numerically) through the degeneracy set."""


class AmbiguousMatchError(TrackingError):
    """Root matching stayed ambiguous at the minimum step size."""


class DegreeDropError(TrackingError):
    """The leading coefficient vanished: roots escaped to infinity."""


@dataclass(frozen=True)
class Segment:
    kind: str
    start: tuple[complex, ...]
    end: tuple[complex, ...]
    fn: Callable[[float], Sequence[complex]]
    min_steps: int = 64

    def point(self, t: float) -> np.ndarray:
        if t <= 0:
            return np.array(self.start, dtype=complex)
        if t >= 1:
            return np.array(self.end, dtype=complex)
        return np.asarray(self.fn(t), dtype=complex)

    def reversed(self) -> Segment:
        fn = self.fn
        return Segment(self.kind, self.end, self.start, lambda t: fn(1 - t), self.min_steps)


def line_segment(a: Sequence[complex], b: Sequence[complex], kind: str = "line", min_steps: int = 64) -> Segment:
    a_arr = np.asarray(a, dtype=complex)
    b_arr = np.asarray(b, dtype=complex)
    return Segment(kind, tuple(complex(x) for x in a), tuple(complex(x) for x in b),
                   lambda t: a_arr + t * (b_arr - a_arr), min_steps)


def circle_segment(
    base: Sequence[complex], index: int, center: complex, start_angle: float,
    radius: float, turns: float = 1.0, min_steps: int = 64,
) -> Segment:
    """Coordinate ``index`` runs counterclockwise around ``center``."""
    base_arr = np.asarray(base, dtype=complex)

    def at(t: float) -> np.ndarray:
        out = base_arr.copy()
        out[index] = center + radius * cmath.exp(1j * (start_angle + 2 * math.pi * turns * t))
        return out

    start = tuple(complex(x) for x in at(0.0))
    if float(turns).is_integer():
        end = start
    else:
        end = tuple(complex(x) for x in at(1.0))
    steps = max(min_steps, int(math.ceil(abs(turns) * min_steps)))
    return Segment("arc", start, end, at, steps)


@dataclass(frozen=True)
class LoopPath:
    arity: int
    segments: tuple[Segment, ...]
    label: str = ""

    def __post_init__(self) -> None:
        for a, b in zip(self.segments, self.segments[1:]):
            if a.end != b.start:
                raise ValueError(f"loop {self.label!r}: segments do not join")

    @property
    def closed(self) -> bool:
        return bool(self.segments) and self.segments[-1].end == self.segments[0].start

    @property
    def base(self) -> tuple[complex, ...]:
        return self.segments[0].start

    def point(self, s: float) -> np.ndarray:
        n = len(self.segments)
        idx = min(int(s * n), n - 1)
        return self.segments[idx].point(s * n - idx)

    def reversed(self) -> LoopPath:
        return LoopPath(self.arity, tuple(seg.reversed() for seg in reversed(self.segments)), self.label + "^-1")

    def __add__(self, other: LoopPath) -> LoopPath:
        return LoopPath(self.arity, self.segments + other.segments, f"{self.label}*{other.label}")

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "arity": self.arity,
            "base": [[z.real, z.imag] for z in self.base],
            "segments": [s.kind for s in self.segments],
        }


def excursion_loop(
    base: Sequence[complex], index: int, target: complex, r: float, label: str,
    min_steps: int = 64, origin: complex | None = None,
) -> LoopPath:
    """Radial approach from ``base[index]`` toward ``target``, ccw circle of radius r, return."""
    start = complex(base[index]) if origin is None else origin
    direction = (target - start) / abs(target - start)
    near = target - r * direction
    mid = list(base)
    mid[index] = near
    angle = cmath.phase(-direction)
    out = line_segment(base, mid, "radial", min_steps)
    circ = circle_segment(mid, index, target, angle, r, 1.0, min_steps)
    # snap the circle onto the exact radial endpoint
    circ = Segment(circ.kind, tuple(mid), tuple(mid), circ.fn, circ.min_steps)
    back = out.reversed()
    return LoopPath(len(base), (out, circ, back), label)


@dataclass
class TrackedBraid:
    braid: BraidWord
    basepoint_roots: list[complex]
    min_separation: float
    steps: int
    max_residual: float
    endpoint_permutation: Permutation
    label: str = ""
    trajectory: list[tuple[float, int, float, float]] | None = None
    rejected_steps: int = 0

    @property
    def consistent(self) -> bool:
        return permutation_image(self.braid) == self.endpoint_permutation

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "strands": self.braid.strands,
            "word": list(self.braid.letters),
            "min_sep": self.min_separation,
            "steps": self.steps,
            "max_residual": self.max_residual,
            "perm": self.endpoint_permutation.images,
        }


def _rotated_order(z: np.ndarray, rot: complex) -> list[int]:
    w = z * rot
    return sorted(range(len(z)), key=lambda i: (w[i].real, w[i].imag))


class _Continuation:
    def __init__(self, family: PolynomialFamily, cfg: RunConfig) -> None:
        self.family = family
        self.cfg = cfg
        self.rot = cmath.exp(1j * cfg.theta)

    def solve(self, params: np.ndarray, init: np.ndarray | None) -> tuple[np.ndarray, float]:
        c = self.family.coeffs(params)
        if abs(c[-1]) <= 1e-13 * np.max(np.abs(c)):
            raise DegreeDropError(f"leading coefficient vanishes at parameters {params}")
        try:
            res = roots(ComplexPolynomial(c), tol=self.cfg.root_tol, init=init)
        except RootFindingError as exc:
            raise TrackingError(str(exc)) from exc
        return res.roots, res.residual

    def check_collision(self, z: np.ndarray, params) -> float:
        if len(z) < 2:
            return float("inf")
        D = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(D, np.inf)
        sep = float(D.min())
        scale = max(1.0, float(np.max(np.abs(z))))
        if sep < self.cfg.collision * scale:
            raise RootCollisionError(f"roots collide (separation {sep:.3g}) at parameters {params}")
        return sep

    def match(self, old: np.ndarray, new: np.ndarray) -> np.ndarray | None:
        """Permutation ``idx`` with new[idx[i]] continuing old[i], or None."""
        n = len(old)
        if n == 1:
            return np.array([0])
        D = np.abs(old[:, None] - new[None, :])
        idx = np.argmin(D, axis=1)
        if len(set(idx.tolist())) != n:
            return None
        Ds = np.sort(D, axis=1)
        d1, d2 = Ds[:, 0], Ds[:, 1]
        if np.any(d2 <= self.cfg.gap_ratio * d1):
            return None
        Do = np.abs(old[:, None] - old[None, :])
        np.fill_diagonal(Do, np.inf)
        if np.any(d1 > self.cfg.move_fraction * Do.min(axis=1)):
            return None
        return idx

    def crossings(self, old: np.ndarray, new: np.ndarray, order: list[int]) -> list[int] | None:
        """Letters for the straight-line motion old -> new, updating ``order``.

        Returns None (and leaves ``order`` untouched) when the events cannot be
        resolved unambiguously.
        """
        w0, w1 = old * self.rot, new * self.rot
        n = len(old)
        events = []
        for a in range(n):
            for b in range(a + 1, n):
                f0 = w0[a].real - w0[b].real
                f1 = w1[a].real - w1[b].real
                if f0 == 0 or f1 == 0:
                    if f0 != f1:
                        return None
                    continue
                if (f0 > 0) != (f1 > 0):
                    events.append((f0 / (f0 - f1), a, b))
        if not events:
            return []
        events.sort()
        for (t1, a1, b1), (t2, a2, b2) in zip(events, events[1:]):
            if t2 - t1 < 1e-9 and {a1, b1} & {a2, b2}:
                return None
        trial = list(order)
        pos = {s: p for p, s in enumerate(trial)}
        letters = []
        for t, a, b in events:
            pa, pb = pos[a], pos[b]
            if abs(pa - pb) != 1:
                return None
            left, right = (a, b) if pa < pb else (b, a)
            p = min(pa, pb)
            wl = w0[left] + t * (w1[left] - w0[left])
            wr = w0[right] + t * (w1[right] - w0[right])
            dim = wl.imag - wr.imag
            if abs(dim) <= 1e-12 * max(1.0, abs(wl)):
                return None
            letters.append(p + 1 if dim < 0 else -(p + 1))
            trial[p], trial[p + 1] = right, left
            pos[left], pos[right] = p + 1, p
        order[:] = trial
        return letters


def track_loop(
    family: PolynomialFamily,
    loop: LoopPath,
    cfg: RunConfig | None = None,
    record: bool = False,
) -> TrackedBraid:
    """Follow the roots of ``family`` around ``loop`` and return their braid."""
    cfg = cfg or RunConfig()
    if loop.arity != family.arity:
        raise ValueError(f"loop has arity {loop.arity}, family {family.name} needs {family.arity}")
    if not loop.closed:
        raise ValueError(f"loop {loop.label!r} is not closed")
    cont = _Continuation(family, cfg)
    base_params = np.array(loop.base, dtype=complex)
    z0, resid = cont.solve(base_params, None)
    base_order = _rotated_order(z0, cont.rot)
    base_roots = z0[base_order]
    cur = base_roots.copy()
    # order[p] = strand at position p; strands are named by basepoint position
    order = list(range(len(cur)))
    min_sep = cont.check_collision(cur, base_params)
    max_res = resid
    steps = 0
    rejected = 0
    letters: list[int] = []
    traj: list[tuple[float, int, float, float]] | None = [] if record else None
    nseg = len(loop.segments)

    def log(s_global: float, z: np.ndarray) -> None:
        if traj is not None:
            for i, x in enumerate(z):
                traj.append((s_global, i + 1, float(x.real), float(x.imag)))

    log(0.0, cur)
    for si, seg in enumerate(loop.segments):
        hmax = 1.0 / seg.min_steps
        h = hmax
        t = 0.0
        while t < 1.0:
            t1 = min(1.0, t + h)
            params = seg.point(t1)
            new_raw, resid = cont.solve(params, cur)
            sep = cont.check_collision(new_raw, params)
            idx = cont.match(cur, new_raw)
            new = new_raw[idx] if idx is not None else None
            step_letters = cont.crossings(cur, new, order) if new is not None else None
            if step_letters is None:
                rejected += 1
                h /= 2
                if h < cfg.min_step:
                    raise AmbiguousMatchError(
                        f"root matching ambiguous at minimum step on loop {loop.label!r}, "
                        f"segment {si} ({seg.kind}), t={t:.6g}"
                    )
                continue
            letters.extend(step_letters)
            cur = new
            t = t1
            steps += 1
            min_sep = min(min_sep, sep)
            max_res = max(max_res, resid)
            log((si + t) / nseg, cur)
            h = min(hmax, h * 2)
    # endpoint matching against the basepoint fibre
    D = np.abs(cur[:, None] - base_roots[None, :])
    ends = np.argmin(D, axis=1)
    scale = max(1.0, float(np.max(np.abs(base_roots))))
    if len(set(ends.tolist())) != len(cur) or float(np.max(D[np.arange(len(cur)), ends])) > 1e-6 * scale:
        raise TrackingError(f"loop {loop.label!r} does not return to its basepoint fibre")
    endperm = Permutation(tuple(int(e) for e in ends))
    braid = BraidWord(len(cur), tuple(letters)) if len(cur) >= 1 else BraidWord(1)
    return TrackedBraid(
        braid=braid,
        basepoint_roots=[complex(z) for z in base_roots],
        min_separation=min_sep,
        steps=steps,
        max_residual=max_res,
        endpoint_permutation=endperm,
        label=loop.label,
        trajectory=traj,
        rejected_steps=rejected,
    )


def power_family(m: int) -> PolynomialFamily:
    """x^m - t, one parameter."""

    def rule(params: np.ndarray) -> np.ndarray:
        c = np.zeros(m + 1, dtype=complex)
        c[0] = -params[0]
        c[m] = 1
        return c

    return PolynomialFamily(f"power:m={m}", 1, m, rule, {"m": m, "kind": "power"})


def constant_family(coeffs: Sequence[complex], arity: int = 1) -> PolynomialFamily:
    c = np.asarray(coeffs, dtype=complex)
    return PolynomialFamily("const", arity, len(c) - 1, lambda params: c.copy(), {"kind": "const"})


def circle_loop(center: complex = 0.0, radius: float = 1.0, turns: int = 1, min_steps: int = 64) -> LoopPath:
    seg = circle_segment([center + radius], 0, center, 0.0, radius, turns, min_steps)
    return LoopPath(1, (seg,), f"circle(c={center},r={radius},turns={turns})")


# ---------------------------------------------------------------- bases

def bp_radial_targets(n: int) -> list[complex]:
    """Punctures v^n = 1 on the line u = 1, by increasing argument ending at 1."""
    return [cmath.exp(2j * math.pi * i / n) for i in range(1, n + 1)]


def bp_u_loop(n: int, k: int, cfg: RunConfig) -> LoopPath:
    """The path (u, v) = ((1-l)^(n/(n+1)), l*rho), a circuit around u = 0, and back."""
    rho = cmath.exp(1j * math.pi / n)
    lam_end = 1 - cfg.r
    expo = n / (n + 1)

    def path(lam: float) -> np.ndarray:
        return np.array([(1 - lam) ** expo, lam * rho], dtype=complex)

    start = (1 + 0j, 0j)
    end = tuple(complex(x) for x in path(lam_end))
    steps = cfg.min_steps * 2
    out = Segment("curve", start, end, lambda t: path(t * lam_end), steps)
    u1 = end[0]
    circ = circle_segment(end, 0, 0.0, 0.0, abs(u1), 1.0, cfg.min_steps)
    circ = Segment(circ.kind, end, end, circ.fn, circ.min_steps)
    return LoopPath(2, (out, circ, out.reversed()), "u-loop")


def geometric_basis_bp(n: int, k: int, cfg: RunConfig | None = None) -> list[LoopPath]:
    """n radial loops on the line u = 1 plus the loop around u = 0, all based at (1, 0)."""
    cfg = cfg or RunConfig()
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    base = [1 + 0j, 0j]
    loops = [
        excursion_loop(base, 1, xi, cfg.r, f"radial:i={i}", cfg.min_steps)
        for i, xi in enumerate(bp_radial_targets(n), start=1)
    ]
    loops.append(bp_u_loop(n, k, cfg))
    return loops


def plane_targets(d: int) -> list[complex]:
    return [cmath.exp(2j * math.pi * j / d) for j in range(d)]


def geometric_basis_plane(d: int, cfg: RunConfig | None = None) -> list[LoopPath]:
    """d loops based at u = 0 around the punctures u^d = 1, counterclockwise by argument."""
    cfg = cfg or RunConfig()
    if d < 2:
        raise ValueError("d must be at least 2")
    return [
        excursion_loop([0j], 0, xi, cfg.r, f"plane:j={j}", cfg.min_steps, origin=0j)
        for j, xi in enumerate(plane_targets(d))
    ]


# ---------------------------------------------------------------- coverings

def fibre_family(curve: BivariatePolynomial) -> PolynomialFamily:
    """The y-polynomial of ``curve`` as a one-parameter family in x."""
    dy = curve.y_degree

    def rule(params: np.ndarray) -> np.ndarray:
        c = curve.in_y(params[0]).coeffs
        out = np.zeros(dy + 1, dtype=complex)
        out[: len(c)] = c
        return out

    return PolynomialFamily("fibre", 1, dy, rule, {"kind": "fibre"})


@dataclass
class BranchingData:
    """Local monodromies of a covering around its branch points."""

    entries: list[Permutation]
    branch_points: list[complex]
    basis: str
    base: complex
    sheets: list[complex]
    loops: list[LoopPath] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "base": [self.base.real, self.base.imag],
            "branch_points": [[z.real, z.imag] for z in self.branch_points],
            "entries": [str(g) for g in self.entries],
        }


def _x_loop(base: complex, waypoints: list[complex], target: complex, eps: float, label: str, min_steps: int) -> LoopPath:
    pts = [base] + waypoints
    segs: list[Segment] = []
    for a, b in zip(pts, pts[1:]):
        segs.append(line_segment([a], [b], "line", min_steps))
    last = pts[-1]
    angle = cmath.phase(last - target)
    circ = circle_segment([last], 0, target, angle, eps, 1.0, min_steps)
    circ = Segment(circ.kind, (last,), (last,), circ.fn, circ.min_steps)
    back = [s.reversed() for s in reversed(segs)]
    return LoopPath(1, tuple(segs) + (circ,) + tuple(back), label)


def branching_tuple(
    curve: BivariatePolynomial,
    branch_points: Sequence[complex],
    cfg: RunConfig | None = None,
    basis: str = "vertical",
) -> BranchingData:
    """Monodromy permutations of the y-sheets around each branch point.

    ``basis="vertical"`` matches the tracker: branch points ordered by
    rotated real part, loops rising from a base point far below.  Together
    with the Hurwitz convention of :mod:`braid_monodromy.hurwitz`, braids
    returned by :func:`track_loop` act on this tuple.

    ``basis="radial"``: base point x = 0, straight loops to the branch points
    taken by increasing argument in (0, 2*pi] (so a point at argument 0 comes
    last).
    """
    cfg = cfg or RunConfig()
    pts = np.asarray(branch_points, dtype=complex)
    m = len(pts)
    D = np.abs(pts[:, None] - pts[None, :])
    np.fill_diagonal(D, np.inf)
    spacing = float(D.min()) if m > 1 else 1.0
    fam = fibre_family(curve)
    loops: list[LoopPath] = []
    if basis == "vertical":
        rot = cmath.exp(1j * cfg.theta)
        w = pts * rot
        order = sorted(range(m), key=lambda i: (w[i].real, w[i].imag))
        pts = pts[order]
        w = w[order]
        gaps = [abs(w[i].real - w[j].real) for i in range(m) for j in range(m) if i != j and w[j].imag < w[i].imag]
        eps = 0.3 * min([spacing] + gaps)
        depth = float(w.imag.min()) - max(1.0, float(np.ptp(w.imag)) if m > 1 else 1.0)
        base_w = complex(float(np.mean(w.real)), depth)
        base = base_w / rot
        for idx in range(m):
            foot = complex(w[idx].real, depth) / rot
            below = (w[idx] - 1j * eps) / rot
            loops.append(_x_loop(base, [foot, below], pts[idx], eps, f"branch:{idx + 1}", cfg.min_steps))
    elif basis == "radial":
        args = np.angle(pts) % (2 * math.pi)
        args = np.where(args <= 1e-12, 2 * math.pi, args)
        order = np.argsort(args, kind="stable")
        pts = pts[order]
        eps = 0.3 * spacing
        base = 0j
        for idx in range(m):
            near = pts[idx] * (1 - eps / abs(pts[idx]))
            loops.append(_x_loop(base, [near], pts[idx], eps, f"branch:{idx + 1}", cfg.min_steps))
    else:
        raise ValueError(f"unknown basis {basis!r}")
    entries = []
    sheets: list[complex] = []
    for lp in loops:
        tb = track_loop(fam, lp, cfg)
        sheets = tb.basepoint_roots
        entries.append(tb.endpoint_permutation)
    return BranchingData(entries, [complex(p) for p in pts], basis, complex(base), sheets, loops)


def bp_branch_points(n: int, k: int, u: complex = 1.0, v: complex = 0.0, cfg: RunConfig | None = None) -> list[complex]:
    from .polynomials import bp_discriminant_family

    cfg = cfg or RunConfig()
    return [complex(z) for z in roots(bp_discriminant_family(n, k)([u, v]), tol=cfg.root_tol).roots]


def arg_labels(points: Sequence[complex]) -> list[int]:
    """1-based rank of each point by increasing argument in (0, 2*pi]."""
    args = [(cmath.phase(z) % (2 * math.pi)) or 2 * math.pi for z in points]
    ranked = sorted(range(len(points)), key=lambda i: args[i])
    labels = [0] * len(points)
    for r, i in enumerate(ranked, start=1):
        labels[i] = r
    return labels


def discriminant_winding(family: PolynomialFamily, loop: LoopPath, samples_per_segment: int = 2000) -> float:
    """Winding number of the monic discriminant of ``family`` along ``loop``.

    Computed from the Sylvester resultant of the normalised polynomial and
    its derivative; independent of root tracking.  It equals the exponent
    sum of the loop's braid.
    """
    from .polynomials import sylvester_resultant

    vals = []
    for seg in loop.segments:
        for t in np.linspace(0, 1, samples_per_segment, endpoint=False):
            c = family.coeffs(seg.point(float(t)))
            p = ComplexPolynomial(c / c[-1])
            vals.append(sylvester_resultant(p, p.derivative()))
    vals.append(vals[0])
    ang = np.unwrap(np.angle(np.asarray(vals)))
    return float((ang[-1] - ang[0]) / (2 * math.pi))


# ---------------------------------------------------------------- output

def write_trajectory_csv(tb: TrackedBraid, path) -> None:
    import csv

    if tb.trajectory is None:
        raise ValueError("braid was tracked without record=True")
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["s", "root_index", "re", "im"])
        for s, r, re, im in tb.trajectory:
            w.writerow([f"{s:.9g}", r, f"{re:.12g}", f"{im:.12g}"])


def write_trajectory_svg(tb: TrackedBraid, path, size: int = 480) -> None:
    """One polyline per root in the x-plane; presentation only."""
    if tb.trajectory is None:
        raise ValueError("braid was tracked without record=True")
    pts: dict[int, list[tuple[float, float]]] = {}
    for _, r, re, im in tb.trajectory:
        pts.setdefault(r, []).append((re, im))
    xs = [p[0] for ps in pts.values() for p in ps]
    ys = [p[1] for ps in pts.values() for p in ps]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9) * 1.1
    cx, cy = (lo_x + hi_x) / 2, (lo_y + hi_y) / 2

    def to_px(x: float, y: float) -> str:
        return f"{(x - cx) / span * size + size / 2:.2f},{size / 2 - (y - cy) / span * size:.2f}"

    palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
             f'<rect width="{size}" height="{size}" fill="white"/>']
    for r, ps in sorted(pts.items()):
        colour = palette[(r - 1) % len(palette)]
        poly = " ".join(to_px(x, y) for x, y in ps)
        lines.append(f'<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{poly}"/>')
        x0, y0 = to_px(*ps[0]).split(",")
        lines.append(f'<circle cx="{x0}" cy="{y0}" r="3" fill="{colour}"/>')
        lines.append(f'<text x="{float(x0) + 4:.2f}" y="{float(y0) - 4:.2f}" font-size="10">{r}</text>')
    lines.append(f'<text x="6" y="14" font-size="11">{tb.label}: {" ".join(map(str, tb.braid.letters))}</text>')
    lines.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def parse_loop(spec: str, family: PolynomialFamily, cfg: RunConfig | None = None) -> LoopPath:
    """Loop specs: ``radial:i=1``, ``u-loop``, ``plane:j=0``, ``circle:center=0,radius=1,turns=1``."""
    cfg = cfg or RunConfig()
    kind, _, rest = spec.strip().partition(":")
    kw: dict[str, str] = {}
    for item in rest.split(","):
        if "=" in item:
            a, b = item.split("=", 1)
            kw[a.strip()] = b.strip()
    meta = family.meta
    if kind == "circle":
        if family.arity != 1:
            raise ValueError("circle loops need a one-parameter family")
        return circle_loop(complex(kw.get("center", "0")), float(kw.get("radius", "1")),
                           int(kw.get("turns", "1")), cfg.min_steps)
    if kind in ("radial", "u-loop"):
        if meta.get("kind") != "bp":
            raise ValueError(f"loop {spec!r} needs a BP family")
        loops = geometric_basis_bp(meta["n"], meta["k"], cfg)
        if kind == "u-loop":
            return loops[-1]
        i = int(kw.get("i", "1"))
        if not 1 <= i <= meta["n"]:
            raise ValueError(f"radial index must be in 1..{meta['n']}")
        return loops[i - 1]
    if kind == "plane":
        if meta.get("kind") != "plane":
            raise ValueError(f"loop {spec!r} needs a plane family")
        j = int(kw.get("j", "0"))
        loops = geometric_basis_plane(meta["d"], cfg)
        if not 0 <= j < len(loops):
            raise ValueError(f"plane loop index must be in 0..{len(loops) - 1}")
        return loops[j]
    raise ValueError(f"unknown loop spec {spec!r}")
