"""Coefficient model and basic calculus of the quadratic difference pencil.

The operator acts on sequences over Z as

    (L y)_n = Delta(a_{n-1} Delta y_{n-1}) + (q_n + 2*lam*p_n + lam**2) y_n,

with complex coefficient sequences a (nonzero), p, q that differ from the
free values (a = 1, p = q = 0) only on a finite index window.  Everything
downstream (Jost solutions, spectra, resolvents) is exact under this
compact-support model: all series terminate and all tail sums vanish.

The spectral parameter is tied to a strip coordinate by lam = 2*cos(z/2);
the fundamental strip is Re z in [-pi, 3*pi], Im z >= 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ContractViolation

STRIP_RE_MIN = -math.pi
STRIP_RE_MAX = 3.0 * math.pi

#: tag recorded on every Jost-type object built with the alternating free
#: tail f_n = (-1)^n e^{+-inz} (see jost module notes).
ALT_TAIL = "alternating-free-tail"


def _as_complex_array(values, length, name):
    arr = np.asarray(values, dtype=np.complex128)
    if arr.ndim != 1 or arr.size != length:
        raise ContractViolation(f"{name} must be a 1-d array of length {length}")
    return arr


@dataclass(frozen=True)
class WindowSeq:
    """A finite complex sequence indexed by consecutive integers.

    ``values[k]`` is the entry at index ``n_lo + k``.
    """

    n_lo: int
    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.complex128)
        object.__setattr__(self, "values", arr)

    @property
    def n_hi(self):
        return self.n_lo + len(self.values) - 1

    def at(self, n: int) -> complex:
        if not self.n_lo <= n <= self.n_hi:
            raise ContractViolation(f"index {n} outside window [{self.n_lo}, {self.n_hi}]")
        return complex(self.values[n - self.n_lo])

    def indices(self) -> np.ndarray:
        return np.arange(self.n_lo, self.n_hi + 1)

    def norm2(self) -> float:
        return float(np.linalg.norm(self.values))


@dataclass(frozen=True)
class CoefficientTriple:
    """Compactly supported perturbation of the free pencil.

    ``a``, ``p``, ``q`` hold the values on ``[n_min, n_max]``; outside that
    window the triple equals the free pencil (a = 1, p = q = 0), so the
    l1-weighted summability condition and both exponential decay conditions
    hold automatically.
    """

    n_min: int
    n_max: int
    a: np.ndarray = field(default=None)
    p: np.ndarray = field(default=None)
    q: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.n_min > self.n_max:
            raise ContractViolation("n_min must be <= n_max")
        width = self.n_max - self.n_min + 1
        a = np.ones(width, dtype=np.complex128) if self.a is None else \
            _as_complex_array(self.a, width, "a")
        p = np.zeros(width, dtype=np.complex128) if self.p is None else \
            _as_complex_array(self.p, width, "p")
        q = np.zeros(width, dtype=np.complex128) if self.q is None else \
            _as_complex_array(self.q, width, "q")
        if np.any(a == 0):
            raise ContractViolation("a_n must be nonzero for every n")
        for arr in (a, p, q):
            arr.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def free(cls, n_min: int = 0, n_max: int = 0) -> "CoefficientTriple":
        return cls(n_min=n_min, n_max=n_max)

    def a_at(self, n: int) -> complex:
        if self.n_min <= n <= self.n_max:
            return complex(self.a[n - self.n_min])
        return 1.0 + 0.0j

    def p_at(self, n: int) -> complex:
        if self.n_min <= n <= self.n_max:
            return complex(self.p[n - self.n_min])
        return 0.0j

    def q_at(self, n: int) -> complex:
        if self.n_min <= n <= self.n_max:
            return complex(self.q[n - self.n_min])
        return 0.0j

    def h_at(self, n: int) -> complex:
        return 2.0 - self.a_at(n) - self.a_at(n - 1) + self.q_at(n)

    def packed(self, lo: int, hi: int):
        """Arrays (a, h, p) covering indices lo..hi, free values outside."""
        if lo > hi:
            raise ContractViolation("packed window is empty")
        ns = np.arange(lo, hi + 1)
        a = np.ones(ns.size, dtype=np.complex128)
        p = np.zeros(ns.size, dtype=np.complex128)
        q = np.zeros(ns.size, dtype=np.complex128)
        inside = (ns >= self.n_min) & (ns <= self.n_max)
        a[inside] = self.a[ns[inside] - self.n_min]
        p[inside] = self.p[ns[inside] - self.n_min]
        q[inside] = self.q[ns[inside] - self.n_min]
        a_left = np.ones(ns.size, dtype=np.complex128)
        left = (ns - 1 >= self.n_min) & (ns - 1 <= self.n_max)
        a_left[left] = self.a[ns[left] - 1 - self.n_min]
        h = 2.0 - a - a_left + q
        return a, h, p

    def a_product(self) -> complex:
        """prod a_r over the support window."""
        return complex(np.prod(self.a))

    def perturbation_size(self) -> float:
        return float(np.sum(np.abs(1.0 - self.a) + np.abs(self.p) + np.abs(self.q)))

    # -- JSON wire format: {"n_min", "n_max", "a": [[re, im], ...], ...} ----

    def to_json_dict(self) -> dict:
        def pairs(arr):
            return [[float(v.real), float(v.imag)] for v in arr]

        return {
            "n_min": int(self.n_min),
            "n_max": int(self.n_max),
            "a": pairs(self.a),
            "p": pairs(self.p),
            "q": pairs(self.q),
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "CoefficientTriple":
        try:
            n_min = int(obj["n_min"])
            n_max = int(obj["n_max"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ContractViolation(f"bad coefficient payload: {exc}") from exc
        width = n_max - n_min + 1

        def parse(name, default):
            if name not in obj or obj[name] is None:
                return np.full(width, default, dtype=np.complex128)
            raw = obj[name]
            if len(raw) != width:
                raise ContractViolation(
                    f"array {name!r} has length {len(raw)}, window needs {width}")
            out = np.empty(width, dtype=np.complex128)
            for i, v in enumerate(raw):
                if isinstance(v, (int, float)):
                    out[i] = complex(v)
                else:
                    out[i] = complex(float(v[0]), float(v[1]))
            return out

        return cls(n_min=n_min, n_max=n_max, a=parse("a", 1.0),
                   p=parse("p", 0.0), q=parse("q", 0.0))


@dataclass(frozen=True)
class DerivedSequences:
    """h_n = 2 - a_n - a_{n-1} + q_n over [n_min, n_max + 1].

    The Sturm-Liouville diagonal b_n = 2 + q_n - a_n - a_{n-1} is the same
    sequence, so ``b`` is just an alias.
    """

    h: WindowSeq

    @property
    def b(self) -> WindowSeq:
        return self.h


def derived_sequences(coeffs: CoefficientTriple) -> DerivedSequences:
    """h_n over [n_min, n_max + 1]; identically zero outside."""
    ns = np.arange(coeffs.n_min, coeffs.n_max + 2)
    vals = np.array([coeffs.h_at(int(n)) for n in ns], dtype=np.complex128)
    return DerivedSequences(h=WindowSeq(coeffs.n_min, vals))


def z_to_lambda(z) -> complex:
    """lam = 2 cos(z/2)."""
    if isinstance(z, np.ndarray):
        return 2.0 * np.cos(0.5 * z)
    return 2.0 * cmath.cos(0.5 * complex(z))


def lambda_to_z(lam: complex) -> complex:
    """Inverse of ``z_to_lambda`` into the fundamental half-strip.

    Principal arccos composed with the strip convention: the returned z has
    Re z in [-pi, 3pi] and Im z >= 0, and for real lam with |lam| > 2 the
    ambiguity is resolved by requiring Im z > 0.
    """
    lam = complex(lam)
    z0 = 2.0 * cmath.acos(0.5 * lam)

    def fold(z):
        re, im = z.real, z.imag
        while re > STRIP_RE_MAX:
            re -= 4.0 * math.pi
        while re < STRIP_RE_MIN:
            re += 4.0 * math.pi
        return complex(re, im)

    if abs(z0.imag) <= 1e-14:
        z = fold(complex(z0.real, 0.0))
    elif z0.imag > 0:
        z = fold(z0)
    else:
        z = fold(-z0)
    err = abs(z_to_lambda(z) - lam)
    if err > 1e-12 * (1.0 + abs(lam)):
        raise ContractViolation(f"branch selection failed for lambda={lam}: residual {err}")
    return z


def real_strip_partner(zeta: float) -> float:
    """The second real preimage of lam = 2 cos(zeta/2) inside the strip.

    For real lam in [-2, 2] the strip contains two real points with the
    same lam: zeta and its reflection -zeta folded back by 4*pi.
    """
    partner = -float(zeta)
    if partner < STRIP_RE_MIN:
        partner += 4.0 * math.pi
    elif partner > STRIP_RE_MAX:
        partner -= 4.0 * math.pi
    return partner


@dataclass(frozen=True)
class SpectralPoint:
    """A point recorded in both coordinates, lam = 2 cos(z/2)."""

    z: complex
    lam: complex
    multiplicity: int = 1

    @classmethod
    def from_z(cls, z: complex, multiplicity: int = 1) -> "SpectralPoint":
        return cls(z=complex(z), lam=z_to_lambda(z), multiplicity=multiplicity)

    def consistent(self, tol: float = 1e-10) -> bool:
        return abs(z_to_lambda(self.z) - self.lam) <= tol * (1.0 + abs(self.lam))


def apply_pencil(coeffs: CoefficientTriple, lam: complex, y: WindowSeq) -> WindowSeq:
    """Residual r_n = a_n y_{n+1} + a_{n-1} y_{n-1} + (h_n + 2 lam p_n + lam^2 - 2) y_n.

    ``y`` must span [w_min - 1, w_max + 1]; the residual covers the interior
    indices and is algebraically identical to
    Delta(a_{n-1} Delta y_{n-1}) + (q_n + 2 lam p_n + lam^2) y_n.
    """
    if len(y.values) < 3:
        raise ContractViolation("window too small: need at least 3 points for an interior")
    lam = complex(lam)
    lo, hi = y.n_lo + 1, y.n_hi - 1
    a, h, p = coeffs.packed(lo, hi)
    a_left = np.empty_like(a)
    a_left[0] = coeffs.a_at(lo - 1)
    a_left[1:] = a[:-1]
    centre = y.values[1:-1]
    res = (a * y.values[2:] + a_left * y.values[:-2]
           + (h + 2.0 * lam * p + lam * lam - 2.0) * centre)
    return WindowSeq(lo, res)


@dataclass(frozen=True)
class ConditionReport:
    """Finite margins of the decay conditions for a compact triple."""

    satisfies_pq: bool
    condition1_margin: float
    condition2_margin: float
    eps: float
    delta: float


def condition_report(coeffs: CoefficientTriple, eps: float, delta: float) -> ConditionReport:
    """sup_n exp(eps |n|^d) (|1-a_n| + |p_n| + |q_n|) for d = 1 and d = delta.

    Both suprema are attained on the support window; the tails vanish.
    """
    if eps <= 0:
        raise ContractViolation("eps must be positive")
    if not 0.5 <= delta <= 1.0:
        raise ContractViolation("delta must lie in [1/2, 1]")
    ns = np.arange(coeffs.n_min, coeffs.n_max + 1)
    weight = np.abs(1.0 - coeffs.a) + np.abs(coeffs.p) + np.abs(coeffs.q)
    m1 = float(np.max(np.exp(eps * np.abs(ns)) * weight, initial=0.0))
    m2 = float(np.max(np.exp(eps * np.abs(ns) ** delta) * weight, initial=0.0))
    return ConditionReport(satisfies_pq=True, condition1_margin=m1,
                           condition2_margin=m2, eps=float(eps), delta=float(delta))
