"""Complex polynomial algebra: resultants, discriminants, roots and families.

Univariate coefficients are stored lowest degree first.  Bivariate
polynomials are 2-D arrays ``c[i, j]`` holding the coefficient of
``x**i * y**j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

import numpy as np

DEFAULT_ROOT_TOL = 1e-9
DEFAULT_MULTIPLICITY_TOL = 1e-7


class RootFindingError(RuntimeError):
    pass


class InterpolationError(ValueError):
    pass


def _trim(c: np.ndarray) -> np.ndarray:
    nz = np.nonzero(c)[0]
    if len(nz) == 0:
        return np.zeros(1, dtype=complex)
    return c[: nz[-1] + 1]


class ComplexPolynomial:
    """Univariate polynomial with complex coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[complex] | np.ndarray) -> None:
        self.coeffs = _trim(np.asarray(coeffs, dtype=complex).ravel().copy())

    @classmethod
    def from_roots(cls, roots: Sequence[complex], lead: complex = 1.0) -> ComplexPolynomial:
        return cls(lead * np.polynomial.polynomial.polyfromroots(np.asarray(roots, dtype=complex)))

    @classmethod
    def monomial(cls, degree: int, coeff: complex = 1.0) -> ComplexPolynomial:
        c = np.zeros(degree + 1, dtype=complex)
        c[degree] = coeff
        return cls(c)

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    @property
    def lead(self) -> complex:
        return complex(self.coeffs[-1])

    def is_zero(self) -> bool:
        return self.degree < 0

    def __call__(self, x):
        return np.polynomial.polynomial.polyval(x, self.coeffs)

    def derivative(self) -> ComplexPolynomial:
        if len(self.coeffs) == 1:
            return ComplexPolynomial([0])
        return ComplexPolynomial(self.coeffs[1:] * np.arange(1, len(self.coeffs)))

    def monic(self) -> ComplexPolynomial:
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return ComplexPolynomial(self.coeffs / self.coeffs[-1])

    def __add__(self, other: ComplexPolynomial) -> ComplexPolynomial:
        return ComplexPolynomial(np.polynomial.polynomial.polyadd(self.coeffs, other.coeffs))

    def __sub__(self, other: ComplexPolynomial) -> ComplexPolynomial:
        return ComplexPolynomial(np.polynomial.polynomial.polysub(self.coeffs, other.coeffs))

    def __mul__(self, other: ComplexPolynomial | complex) -> ComplexPolynomial:
        if isinstance(other, ComplexPolynomial):
            return ComplexPolynomial(np.polynomial.polynomial.polymul(self.coeffs, other.coeffs))
        return ComplexPolynomial(self.coeffs * other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> ComplexPolynomial:
        out = ComplexPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def scale(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def to_json(self) -> dict:
        return {"coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict | str) -> ComplexPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls([complex(re, im) for re, im in data["coeffs"]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexPolynomial):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(np.all(self.coeffs == other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        return f"ComplexPolynomial({np.array2string(self.coeffs, precision=6)})"


def sylvester_matrix(f: ComplexPolynomial, g: ComplexPolynomial) -> np.ndarray:
    m, n = f.degree, g.degree
    size = m + n
    S = np.zeros((size, size), dtype=complex)
    fh, gh = f.coeffs[::-1], g.coeffs[::-1]
    for r in range(n):
        S[r, r : r + m + 1] = fh
    for r in range(m):
        S[n + r, r : r + n + 1] = gh
    return S


def sylvester_resultant(f: ComplexPolynomial, g: ComplexPolynomial) -> complex:
    """Determinant of the Sylvester matrix of ``f`` and ``g``."""
    if f.is_zero() and g.is_zero():
        raise ValueError("resultant of two zero polynomials is undefined")
    if f.is_zero() or g.is_zero():
        return 0j
    if f.degree == 0 and g.degree == 0:
        return 1 + 0j
    return complex(np.linalg.det(sylvester_matrix(f, g)))


class BivariatePolynomial:
    """Polynomial in (x, y) with ``c[i, j]`` the coefficient of x^i y^j."""

    def __init__(self, coeffs: np.ndarray) -> None:
        self.coeffs = np.atleast_2d(np.asarray(coeffs, dtype=complex))

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], complex]) -> BivariatePolynomial:
        dx = max(i for i, _ in terms) + 1
        dy = max(j for _, j in terms) + 1
        c = np.zeros((dx, dy), dtype=complex)
        for (i, j), v in terms.items():
            c[i, j] += v
        return cls(c)

    @classmethod
    def from_y_coeffs(cls, y_coeffs: Sequence[ComplexPolynomial]) -> BivariatePolynomial:
        """Build from polynomials in x, one per power of y."""
        dx = max(len(p.coeffs) for p in y_coeffs)
        c = np.zeros((dx, len(y_coeffs)), dtype=complex)
        for j, p in enumerate(y_coeffs):
            c[: len(p.coeffs), j] = p.coeffs
        return cls(c)

    @property
    def y_degree(self) -> int:
        cols = np.nonzero(np.any(self.coeffs != 0, axis=0))[0]
        return int(cols[-1]) if len(cols) else -1

    @property
    def x_degree(self) -> int:
        rows = np.nonzero(np.any(self.coeffs != 0, axis=1))[0]
        return int(rows[-1]) if len(rows) else -1

    def in_y(self, x0: complex) -> ComplexPolynomial:
        """Specialise x = x0; the result is a polynomial in y."""
        powers = x0 ** np.arange(self.coeffs.shape[0])
        return ComplexPolynomial(powers @ self.coeffs)

    def d_dy(self) -> BivariatePolynomial:
        c = self.coeffs[:, 1:] * np.arange(1, self.coeffs.shape[1])
        if c.shape[1] == 0:
            c = np.zeros((self.coeffs.shape[0], 1), dtype=complex)
        return BivariatePolynomial(c)

    def __call__(self, x: complex, y: complex) -> complex:
        return complex(self.in_y(x)(y))


def discriminant_in_x(
    f: BivariatePolynomial,
    bound: int,
    radius: float = 1.0,
    monic: bool = False,
    rtol: float = 1e-8,
) -> ComplexPolynomial:
    """res_y(f, d_y f) as a polynomial in x, by evaluation and interpolation.

    The resultant is sampled at ``bound + 1`` scaled roots of unity and the
    coefficients recovered with an inverse DFT.  An extra node off the grid
    checks that ``bound`` was large enough.
    """
    if bound < 0:
        raise ValueError("degree bound must be non-negative")
    fy = f.d_dy()
    dy = f.y_degree
    lead_col = f.coeffs[:, dy]
    N = bound + 1
    nodes = radius * np.exp(2j * np.pi * np.arange(N) / N)

    def sample(x0: complex) -> complex:
        if abs(np.polynomial.polynomial.polyval(x0, lead_col)) == 0:
            raise InterpolationError(f"leading y-coefficient vanishes at node {x0}")
        return sylvester_resultant(f.in_y(x0), fy.in_y(x0))

    vals = np.array([sample(x0) for x0 in nodes])
    coeffs = np.fft.fft(vals) / N / radius ** np.arange(N)
    poly = ComplexPolynomial(coeffs)
    scale = max(poly.scale(), 1e-300)
    # clean numerical noise so the degree is meaningful
    cleaned = np.where(np.abs(poly.coeffs) < rtol * scale * 1e-3, 0, poly.coeffs)
    poly = ComplexPolynomial(cleaned)
    extra = radius * np.exp(1j * np.pi / N) * 1.05
    ref = sample(extra)
    if abs(poly(extra) - ref) > rtol * max(abs(ref), scale):
        raise InterpolationError(f"degree bound {bound} too small: residual at extra node")
    return poly.monic() if monic else poly


@dataclass
class RootResult:
    roots: np.ndarray
    residual: float
    iterations: int
    min_separation: float
    near_multiple: list[tuple[int, int]] = field(default_factory=list)

    @property
    def has_multiple(self) -> bool:
        return bool(self.near_multiple)

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)


def _initial_guesses(c: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    # radius from the geometric mean of roots, angles offset to avoid symmetry
    rad = abs(c[0] / c[-1]) ** (1.0 / n) if c[0] != 0 else 1.0
    upper = 1 + np.max(np.abs(c[:-1] / c[-1]))
    rad = min(max(rad, 1e-3), upper)
    return rad * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))


def _pairwise_min(z: np.ndarray) -> tuple[float, np.ndarray]:
    if len(z) < 2:
        return float("inf"), np.zeros((len(z), len(z)))
    D = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(D, np.inf)
    return float(D.min()), D


def roots(
    p: ComplexPolynomial | Sequence[complex],
    tol: float = DEFAULT_ROOT_TOL,
    init: np.ndarray | None = None,
    max_iter: int = 500,
    multiplicity_tol: float = DEFAULT_MULTIPLICITY_TOL,
) -> RootResult:
    """All roots of ``p`` by Aberth-Ehrlich simultaneous iteration.

    Converged when every root has backward error
    ``|p(z)| <= tol * sum |a_j| |z|^j``.  ``init`` warm-starts the iteration
    (used for continuation).  Pairs closer than ``multiplicity_tol`` (relative
    to the root scale) are flagged in ``near_multiple``.
    """
    if not isinstance(p, ComplexPolynomial):
        p = ComplexPolynomial(p)
    c = p.coeffs
    n = p.degree
    if n < 1:
        raise ValueError("roots() needs degree >= 1")
    c = c / c[-1]
    hi = c[::-1]
    dhi = (c[1:] * np.arange(1, n + 1))[::-1]
    abshi = np.abs(hi)
    z = np.array(init, dtype=complex).copy() if init is not None else _initial_guesses(c)
    if len(z) != n:
        raise ValueError(f"warm start has {len(z)} values for degree {n}")
    it = 0
    polish = 0
    eps_tol = 16 * np.finfo(float).eps
    for it in range(1, max_iter + 1):
        pv = np.polyval(hi, z)
        bound = np.maximum(np.polyval(abshi, np.abs(z)), np.finfo(float).tiny)
        err = np.abs(pv) / bound
        if (err <= tol).all():
            # a few extra sweeps sharpen clustered (near-multiple) roots
            if (err <= eps_tol).all() or polish >= 8:
                break
            polish += 1
        dpv = np.polyval(dhi, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        if np.any(diff == 0):
            z = z + 1e-12 * (1 + np.abs(z)) * np.exp(1j * np.arange(n))
            continue
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dpv
            w = ratio / (1 - ratio * inv.sum(axis=1))
        w = np.where(np.isfinite(w), w, 0.0)
        w[err <= eps_tol] = 0.0
        z = z - w
    pv = np.polyval(hi, z)
    bound = np.maximum(np.polyval(abshi, np.abs(z)), np.finfo(float).tiny)
    residual = float(np.max(np.abs(pv) / bound))
    if residual > tol:
        raise RootFindingError(f"Aberth iteration did not converge in {max_iter} steps (degree {n})")
    sep, D = _pairwise_min(z)
    scale = max(1.0, float(np.max(np.abs(z))))
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if D[i, j] < multiplicity_tol * scale:
                pairs.append((i, j))
            elif D[i, j] < _CLUSTER_CANDIDATE * scale and _certify_cluster(c, z[i], z[j]):
                pairs.append((i, j))
    return RootResult(z, residual, it, sep, pairs)


_CLUSTER_CANDIDATE = 1e-4


def _certify_cluster(c: np.ndarray, a: complex, b: complex) -> bool:
    # A multiple root of p is a root of p' where p also vanishes; floating
    # point splits it by ~sqrt(eps), which the plain distance test misses.
    dc = c[1:] * np.arange(1, len(c))
    ddc = dc[1:] * np.arange(1, len(dc))
    z = 0.5 * (a + b)
    for _ in range(30):
        d1 = np.polynomial.polynomial.polyval(z, dc)
        d2 = np.polynomial.polynomial.polyval(z, ddc)
        if d2 == 0:
            break
        step = d1 / d2
        z = z - step
        if abs(step) <= 1e-15 * max(1.0, abs(z)):
            break
    if abs(z - 0.5 * (a + b)) > abs(a - b):
        return False
    bound = np.polynomial.polynomial.polyval(abs(z), np.abs(c))
    return abs(np.polynomial.polynomial.polyval(z, c)) <= 1e3 * np.finfo(float).eps * bound


@dataclass
class PolynomialFamily:
    """Polynomials in x whose coefficients depend on complex parameters.

    ``rule(params)`` returns coefficients lowest degree first.  The family is
    monic of ``degree`` off its degeneracy set when ``monic`` is true; the
    plane-curve family is not monic and may drop degree.
    """

    name: str
    arity: int
    degree: int
    rule: Callable[[np.ndarray], np.ndarray]
    meta: dict = field(default_factory=dict)
    monic: bool = True

    def __call__(self, params: Sequence[complex] | complex) -> ComplexPolynomial:
        params = np.atleast_1d(np.asarray(params, dtype=complex))
        if len(params) != self.arity:
            raise ValueError(f"{self.name} takes {self.arity} parameter(s), got {len(params)}")
        return ComplexPolynomial(self.rule(params))

    def coeffs(self, params: np.ndarray) -> np.ndarray:
        """Full-length coefficient vector (no trimming), lowest first."""
        c = np.asarray(self.rule(np.atleast_1d(np.asarray(params, dtype=complex))), dtype=complex)
        out = np.zeros(self.degree + 1, dtype=complex)
        out[: len(c)] = c[: self.degree + 1]
        return out

    def degree_drop(self, params, rtol: float = 1e-12) -> bool:
        c = self.coeffs(params)
        return abs(c[-1]) <= rtol * np.max(np.abs(c))


def _binomial_power(base_low: np.ndarray, n: int) -> np.ndarray:
    out = np.array([1.0 + 0j])
    for _ in range(n):
        out = np.polynomial.polynomial.polymul(out, base_low)
    return out


def bp_discriminant_family(n: int, k: int) -> PolynomialFamily:
    """p_{u,v}(x) = (x^k + v)^n - u^(n+1), monic of degree nk."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")

    def rule(params: np.ndarray) -> np.ndarray:
        u, v = params
        base = np.zeros(k + 1, dtype=complex)
        base[0] = v
        base[k] = 1
        c = _binomial_power(base, n)
        c[0] -= u ** (n + 1)
        return c

    return PolynomialFamily(f"bp:n={n},k={k}", 2, n * k, rule, {"n": n, "k": k, "kind": "bp"})


def bp_curve(n: int, k: int, u: complex, v: complex) -> BivariatePolynomial:
    """y^(n+1) - (n+1) u y + n (x^k + v)."""
    terms = {(0, n + 1): 1.0, (0, 1): -(n + 1) * u, (k, 0): n, (0, 0): n * v}
    return BivariatePolynomial.from_terms(terms)


def star_curve(n: int, p: ComplexPolynomial, q: ComplexPolynomial) -> BivariatePolynomial:
    """y^(n+1) - (n+1) p(x) y + n q(x)."""
    ycoeffs = [n * q, -(n + 1) * p] + [ComplexPolynomial([0])] * (n - 1) + [ComplexPolynomial([1])]
    return BivariatePolynomial.from_y_coeffs(ycoeffs)


def plane_discriminant_family(d: int) -> PolynomialFamily:
    """p_u(x) = (u x^(d-1) + 1)^d - x^(d(d-1)) in the chart z = 1.

    Leading coefficient u^d - 1: the degree drops (branch points escape to
    infinity) exactly when u^d = 1.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    m = d * (d - 1)

    def rule(params: np.ndarray) -> np.ndarray:
        (u,) = params
        c = np.zeros(m + 1, dtype=complex)
        for j in range(d + 1):
            c[j * (d - 1)] += comb(d, j) * u**j
        c[m] -= 1
        return c

    return PolynomialFamily(f"plane:d={d}", 1, m, rule, {"d": d, "kind": "plane"}, monic=False)


def plane_curve(d: int, u: complex) -> BivariatePolynomial:
    """f_u(x, y, 1) = y^d - d (u x^(d-1) + 1) y + (d-1) x^d."""
    terms = {(0, d): 1.0, (d - 1, 1): -d * u, (0, 1): -d, (d, 0): d - 1}
    return BivariatePolynomial.from_terms(terms)


def plane_degeneration_at_infinity(d: int, u: complex, rtol: float = 1e-12) -> bool:
    return plane_discriminant_family(d).degree_drop([u], rtol)


def degeneracy_check_plane(d: int, u: complex, tol: float = 1e-4) -> bool:
    """True iff p_u drops degree or has two roots closer than ``tol``."""
    fam = plane_discriminant_family(d)
    if fam.degree_drop([u], tol):
        return True
    return roots(fam([u]), multiplicity_tol=tol).has_multiple


def degeneracy_check_bp(n: int, k: int, u: complex, v: complex, tol: float = 1e-4) -> bool:
    """True iff p_{u,v} has two roots closer than ``tol`` (relative to scale)."""
    fam = bp_discriminant_family(n, k)
    p = fam([u, v])
    if p.degree < 2:
        return False
    res = roots(p, multiplicity_tol=tol)
    return res.has_multiple


def bp_degeneracy_closed_form(n: int, k: int, u: complex, v: complex) -> float:
    """Distance-like measure of (u, v) from the exact degeneracy locus.

    The locus is u^(n+1) = v^n (when k >= 2) together with u = 0 (when
    n >= 2).  Returns the smallest of the relevant moduli.
    """
    parts = []
    if k >= 2:
        parts.append(abs(u ** (n + 1) - v**n))
    if n >= 2:
        parts.append(abs(u))
    return min(parts) if parts else float("inf")


def parse_family(spec: str) -> PolynomialFamily:
    """Parse ``"bp:n=2,k=3"``, ``"plane:d=3"`` or ``"bp-disc:n=1,k=2"``.

    Extra comma-separated flags without ``=`` are ignored here (they select
    loops in the CLI).
    """
    kind, _, rest = spec.partition(":")
    kw: dict[str, int] = {}
    for item in rest.split(","):
        item = item.strip()
        if "=" in item and ":" not in item:
            key, val = item.split("=", 1)
            kw[key.strip()] = int(val)
    kind = kind.strip()
    try:
        if kind in ("bp", "bp-disc"):
            return bp_discriminant_family(kw["n"], kw["k"])
        if kind == "plane":
            return plane_discriminant_family(kw["d"])
    except KeyError as exc:
        raise ValueError(f"family spec {spec!r} is missing {exc.args[0]!r}") from None
    raise ValueError(f"unknown family kind {kind!r} in {spec!r}")
