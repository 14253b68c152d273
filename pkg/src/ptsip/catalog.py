"""Catalog of primary translationally shape-invariant potentials.

Every potential is written with a zero-energy ground state in units
``hbar = 2m = 1``.  The generic members are reduced by a change of
variable ``y(x)`` with ``y' = alpha_eff (1 +/- y^2)`` to

* first category:  ``V = lambda2 y^2 + lambda1 y + lambda0``
* second category: ``V = lambda2 y^2 + mu2 / y^2 + lambda0``

with superpotential ``W = a y + b`` or ``W = a y - b / y``.  The harmonic,
Morse, Kepler-Coulomb and isotonic potentials are handled as exceptional
cases with their own variables.

Eckart is reduced with ``y = -coth(alpha x)``, which lives outside
``[-1, 1]``; its map is ``y' = -alpha (1 - y^2)``, so its canonical form
carries a *negative* ``alpha_eff``.  All generic formulas hold with that
sign flip.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Mapping

import numpy as np

from .errors import DomainError, ParamError, SingularityError, Unbound

__all__ = [
    "UNBOUNDED",
    "PotentialId",
    "Category",
    "MapSign",
    "PotentialSpec",
    "CanonicalForm",
    "SuperpotentialCoeffs",
    "SpectrumLevel",
    "REFERENCE_PARAMS",
    "CATALOG",
    "reference_spec",
    "evaluate_potential",
    "evaluate_variable_map",
    "canonical_form",
    "superpotential_coeffs",
    "ground_state_energy",
    "evaluate_superpotential",
    "superpotential_derivative",
    "riccati_residual",
    "reconstruction_residual",
    "closed_form_level",
    "master_level",
    "level_count",
    "spectrum_levels",
    "continuum_threshold",
    "potential_minimum",
    "sample_grid",
    "describe",
]

UNBOUNDED = math.inf
"""Level count of potentials with infinitely many bound states."""


class PotentialId(str, Enum):
    ROSEN_MORSE_I = "rosen-morse-1"
    ROSEN_MORSE_II = "rosen-morse-2"
    ECKART = "eckart"
    POSCHL_TELLER = "poschl-teller"
    POSCHL_TELLER_I = "poschl-teller-1"
    POSCHL_TELLER_II = "poschl-teller-2"
    SCARF_I = "scarf-1"
    HARMONIC = "harmonic"
    MORSE = "morse"
    KEPLER_COULOMB = "kepler-coulomb"
    ISOTONIC = "isotonic"
    GENERIC_FIRST = "generic-first"
    GENERIC_SECOND = "generic-second"

    @classmethod
    def parse(cls, name: "str | PotentialId") -> "PotentialId":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-").replace(" ", "-")
        for member in cls:
            if key in (member.value, member.name.lower().replace("_", "-")):
                return member
        raise ParamError(f"unknown potential {name!r}")


class Category(Enum):
    FIRST = "first"
    SECOND = "second"
    HARMONIC = "harmonic"
    MORSE = "morse"
    COULOMB = "coulomb"
    ISOTONIC = "isotonic"

    @property
    def family(self) -> str:
        """``"first"`` or ``"second"``; exceptional cases join their family."""
        return "second" if self in (Category.SECOND, Category.ISOTONIC) else "first"

    @property
    def exceptional(self) -> bool:
        return self not in (Category.FIRST, Category.SECOND)


class MapSign(Enum):
    PLUS = 1
    MINUS = -1


@dataclass(frozen=True)
class CanonicalForm:
    """Reduced coefficients of a catalog potential.

    For exceptional categories the generic fields are ``None`` and
    ``bundle`` holds the case-specific parameters.
    """

    category: Category
    lambda2: float | None = None
    lambda1: float | None = None
    mu2: float | None = None
    lambda0: float | None = None
    alpha_eff: float | None = None
    map_sign: MapSign | None = None
    bundle: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.category is Category.FIRST:
            if not self.lambda2 > 0:
                raise ParamError(f"first category needs lambda2 > 0, got {self.lambda2}")
        elif self.category is Category.SECOND:
            if not (self.lambda2 > 0 and self.mu2 > 0):
                raise ParamError(
                    f"second category needs lambda2, mu2 > 0, got {self.lambda2}, {self.mu2}"
                )

    def value(self, y):
        """Canonical polynomial (or Laurent polynomial) at ``y``."""
        y = np.asarray(y, dtype=float)
        if self.category is Category.FIRST:
            return self.lambda2 * y * y + self.lambda1 * y + self.lambda0
        if self.category is Category.SECOND:
            return self.lambda2 * y * y + self.mu2 / (y * y) + self.lambda0
        raise TypeError(f"no canonical polynomial for {self.category.value}")


@dataclass(frozen=True)
class SuperpotentialCoeffs:
    """``W = a y + b`` (first) or ``W = a y - b / y`` (second).

    Exceptional cases: harmonic ``W = a x``; Morse ``W = b - a e^{-alpha x}``;
    Kepler-Coulomb ``W = b - a / x``; isotonic ``W = a x - b / x``.
    """

    a: float
    b: float


@dataclass(frozen=True)
class SpectrumLevel:
    n: int
    energy: float
    shifted_energy: float


# ---------------------------------------------------------------------------
# potential models


class _Model:
    pid: PotentialId
    category: Category
    param_names: tuple[str, ...] = ()
    constraint = ""
    spectrum_formula = ""
    domain_kind = "line"  # "finite" | "half" | "line"

    def __init__(self, params: Mapping[str, float]):
        missing = [k for k in self.param_names if k not in params]
        if missing:
            raise ParamError(f"{self.pid.value}: missing parameter(s) {', '.join(missing)}")
        extra = sorted(set(params) - set(self.param_names))
        if extra:
            raise ParamError(f"{self.pid.value}: unknown parameter(s) {', '.join(extra)}")
        self.p = {k: float(params[k]) for k in self.param_names}
        for k, v in self.p.items():
            if not math.isfinite(v):
                raise ParamError(f"{self.pid.value}: parameter {k} must be finite")
        self.validate()

    def validate(self):
        pass

    def _require(self, ok: bool, what: str):
        if not ok:
            raise ParamError(f"{self.pid.value}: {what} violated")

    # subclasses supply: domain, potential, variable, x_of_y, canonical,
    # coeffs, superpotential(_prime), level, master_level, level_count,
    # threshold, minimum, window

    def ground_energy(self) -> float:
        return 0.0

    def y_range(self) -> tuple[float, float]:
        return (-math.inf, math.inf)


class _FirstCategory(_Model):
    category = Category.FIRST

    @cached_property
    def form(self) -> CanonicalForm:
        return self.canonical()

    @cached_property
    def sp(self) -> SuperpotentialCoeffs:
        return superpotential_coeffs(self.form)

    def coeffs(self):
        return self.sp

    def superpotential(self, x):
        y, _ = self.variable(x)
        return self.sp.a * y + self.sp.b

    def superpotential_prime(self, x):
        _, dy = self.variable(x)
        return self.sp.a * dy

    def ground_energy(self):
        return ground_state_energy(self.form, self.sp)

    def master_level(self, n):
        f, a = self.form, self.sp.a
        s, al = f.map_sign.value, f.alpha_eff
        k = a + s * al * n
        return -s * a * a + al * a + f.lambda0 + s * k * k - f.lambda1**2 / (4 * k * k)

    def level(self, n):
        return self.master_level(n)

    def level_count(self):
        f, a, b = self.form, self.sp.a, self.sp.b
        if f.map_sign is MapSign.PLUS:
            return UNBOUNDED
        al = f.alpha_eff
        thr = self.threshold()
        n = 0
        while True:
            k = a - al * n
            if k <= 0:
                break
            # interior map (|y| < 1) needs k^2 > a|b|; exterior map (|y| > 1) the reverse
            if (k * k > a * abs(b)) != (al > 0):
                break
            if not self.master_level(n) < thr:
                break
            n += 1
        return n

    def minimum(self):
        f = self.form
        ystar = -f.lambda1 / (2 * f.lambda2)
        lo, hi = self.y_range()
        if lo < ystar < hi:
            return f.lambda0 - f.lambda1**2 / (4 * f.lambda2)
        return self.threshold()


class _SecondCategory(_Model):
    category = Category.SECOND

    @cached_property
    def form(self) -> CanonicalForm:
        return self.canonical()

    @cached_property
    def sp(self) -> SuperpotentialCoeffs:
        return superpotential_coeffs(self.form)

    def coeffs(self):
        return self.sp

    def superpotential(self, x):
        y, _ = self.variable(x)
        if np.any(np.asarray(y) == 0):
            raise SingularityError("W = a y - b/y is singular at y = 0")
        return self.sp.a * y - self.sp.b / y

    def superpotential_prime(self, x):
        y, dy = self.variable(x)
        if np.any(np.asarray(y) == 0):
            raise SingularityError("W = a y - b/y is singular at y = 0")
        return (self.sp.a + self.sp.b / (y * y)) * dy

    def ground_energy(self):
        return ground_state_energy(self.form, self.sp)

    def master_level(self, n):
        f, a, b = self.form, self.sp.a, self.sp.b
        s, al = f.map_sign.value, f.alpha_eff
        return f.lambda0 - s * (f.mu2 + f.lambda2) + s * (2 * al * n + s * a + b) ** 2

    def level(self, n):
        return self.master_level(n)

    def level_count(self):
        f, a, b = self.form, self.sp.a, self.sp.b
        if f.map_sign is MapSign.PLUS:
            return UNBOUNDED
        thr = self.threshold()
        n = 0
        while a - b - 2 * f.alpha_eff * n > 0 and self.master_level(n) < thr:
            n += 1
        return n

    def minimum(self):
        f = self.form
        zstar = math.sqrt(f.mu2 / f.lambda2)
        zmax = 1.0 if f.map_sign is MapSign.MINUS else math.inf
        if zstar < zmax:
            return f.lambda0 + 2 * math.sqrt(f.lambda2 * f.mu2)
        return self.threshold()

    def y_range(self):
        return (0.0, 1.0) if self.form.map_sign is MapSign.MINUS else (0.0, math.inf)


class RosenMorseI(_FirstCategory):
    pid = PotentialId.ROSEN_MORSE_I
    param_names = ("A", "B", "alpha")
    constraint = "A > alpha > 0"
    spectrum_formula = "E_n = -A^2 + B^2/A^2 + (A+alpha n)^2 - B^2/(A+alpha n)^2"
    domain_kind = "finite"

    def validate(self):
        A, al = self.p["A"], self.p["alpha"]
        self._require(al > 0, "alpha>0")
        self._require(A > al, "A>alpha")

    def domain(self):
        return (0.0, math.pi / self.p["alpha"])

    def window(self):
        w = math.pi / self.p["alpha"]
        return (0.01 * w, 0.99 * w)

    def potential(self, x):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        s, c = np.sin(al * x), np.cos(al * x)
        return A * (A - al) / s**2 + 2 * B * c / s - A * A + B * B / (A * A)

    def variable(self, x):
        al = self.p["alpha"]
        s = np.sin(al * x)
        return -np.cos(al * x) / s, al / s**2

    def x_of_y(self, y):
        return (0.5 * math.pi + np.arctan(y)) / self.p["alpha"]

    def canonical(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return CanonicalForm(
            Category.FIRST, lambda2=A * (A - al), lambda1=-2 * B,
            lambda0=B * B / (A * A) - al * A, alpha_eff=al, map_sign=MapSign.PLUS,
        )

    @staticmethod
    def level_formula(A, B, alpha, n):
        k = A + alpha * n
        return -A * A + B * B / (A * A) + k * k - B * B / (k * k)

    def level(self, n):
        return self.level_formula(self.p["A"], self.p["B"], self.p["alpha"], n)

    def threshold(self):
        return math.inf


class RosenMorseII(_FirstCategory):
    pid = PotentialId.ROSEN_MORSE_II
    param_names = ("A", "B", "alpha")
    constraint = "A > 0, 0 < B < A^2, alpha > 0"
    spectrum_formula = "E_n = A^2 + B^2/A^2 - (A-alpha n)^2 - B^2/(A-alpha n)^2"

    def validate(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        self._require(al > 0, "alpha>0")
        self._require(A > 0, "A>0")
        self._require(B > 0, "B>0")
        self._require(B < A * A, "B<A^2")

    def domain(self):
        return (-math.inf, math.inf)

    def window(self):
        L = 5.0 / self.p["alpha"]
        return (-L, L)

    def y_range(self):
        return (-1.0, 1.0)

    def potential(self, x):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return -A * (A + al) / np.cosh(al * x) ** 2 + 2 * B * np.tanh(al * x) + A * A + B * B / (A * A)

    def variable(self, x):
        al = self.p["alpha"]
        return np.tanh(al * x), al / np.cosh(al * x) ** 2

    def x_of_y(self, y):
        return np.arctanh(y) / self.p["alpha"]

    def canonical(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return CanonicalForm(
            Category.FIRST, lambda2=A * (A + al), lambda1=2 * B,
            lambda0=B * B / (A * A) - al * A, alpha_eff=al, map_sign=MapSign.MINUS,
        )

    @staticmethod
    def level_formula(A, B, alpha, n):
        k = A - alpha * n
        return A * A + B * B / (A * A) - k * k - B * B / (k * k)

    def level(self, n):
        return self.level_formula(self.p["A"], self.p["B"], self.p["alpha"], n)

    def threshold(self):
        A, B = self.p["A"], self.p["B"]
        return (A - B / A) ** 2


class Eckart(_FirstCategory):
    pid = PotentialId.ECKART
    param_names = ("A", "B", "alpha")
    constraint = "A > alpha > 0, B > A^2"
    spectrum_formula = "E_n = A^2 + B^2/A^2 - (A+alpha n)^2 - B^2/(A+alpha n)^2"
    domain_kind = "half"

    def validate(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        self._require(al > 0, "alpha>0")
        self._require(A > al, "A>alpha")
        self._require(B > A * A, "B>A^2")

    def domain(self):
        return (0.0, math.inf)

    def window(self):
        al = self.p["alpha"]
        return (0.05 / al, 6.0 / al)

    def y_range(self):
        return (-math.inf, -1.0)

    def potential(self, x):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return A * (A - al) / np.sinh(al * x) ** 2 - 2 * B / np.tanh(al * x) + A * A + B * B / (A * A)

    def variable(self, x):
        al = self.p["alpha"]
        return -1.0 / np.tanh(al * x), al / np.sinh(al * x) ** 2

    def x_of_y(self, y):
        return np.arctanh(-1.0 / np.asarray(y, dtype=float)) / self.p["alpha"]

    def canonical(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return CanonicalForm(
            Category.FIRST, lambda2=A * (A - al), lambda1=2 * B,
            lambda0=al * A + B * B / (A * A), alpha_eff=-al, map_sign=MapSign.MINUS,
        )

    @staticmethod
    def level_formula(A, B, alpha, n):
        k = A + alpha * n
        return A * A + B * B / (A * A) - k * k - B * B / (k * k)

    def level(self, n):
        return self.level_formula(self.p["A"], self.p["B"], self.p["alpha"], n)

    def threshold(self):
        A, B = self.p["A"], self.p["B"]
        return (A - B / A) ** 2


class PoschlTeller(_SecondCategory):
    pid = PotentialId.POSCHL_TELLER
    param_names = ("A", "B", "alpha")
    constraint = "A > 0, B > A + alpha, alpha > 0"
    spectrum_formula = "E_n = A^2 - (alpha n - A)^2"
    domain_kind = "half"

    def validate(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        self._require(al > 0, "alpha>0")
        self._require(A > 0, "A>0")
        self._require(B > A + al, "B>A+alpha")

    def domain(self):
        return (0.0, math.inf)

    def window(self):
        al = self.p["alpha"]
        return (0.05 / al, 8.0 / al)

    def potential(self, x):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        # exponential form avoids inf/inf in cosh/sinh^2 at large x
        q = np.exp(-al * np.asarray(x, dtype=float))
        d = -np.expm1(-2 * al * np.asarray(x, dtype=float))
        inv_s2 = 4 * q * q / (d * d)
        c_s2 = 2 * q * (1 + q * q) / (d * d)
        return A * A + (A * A + B * B + al * A) * inv_s2 - B * (2 * A + al) * c_s2

    def variable(self, x):
        h = 0.5 * self.p["alpha"]
        return np.tanh(h * x), h / np.cosh(h * x) ** 2

    def x_of_y(self, y):
        return 2.0 * np.arctanh(y) / self.p["alpha"]

    def canonical(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return CanonicalForm(
            Category.SECOND, lambda2=(A + B) * (A + B + al) / 4, mu2=(B - A) * (B - A - al) / 4,
            lambda0=(A * A - B * B - al * A) / 2, alpha_eff=al / 2, map_sign=MapSign.MINUS,
        )

    @staticmethod
    def level_formula(A, B, alpha, n):
        return A * A - (alpha * n - A) ** 2

    def level(self, n):
        return self.level_formula(self.p["A"], self.p["B"], self.p["alpha"], n)

    def threshold(self):
        return self.p["A"] ** 2


class PoschlTellerI(_SecondCategory):
    pid = PotentialId.POSCHL_TELLER_I
    param_names = ("A", "B", "alpha")
    constraint = "A > alpha, B > alpha, alpha > 0"
    spectrum_formula = "E_n = -(A+B)^2 + (2 alpha n + A + B)^2"
    domain_kind = "finite"

    def validate(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        self._require(al > 0, "alpha>0")
        self._require(A > al, "A>alpha")
        self._require(B > al, "B>alpha")

    def domain(self):
        return (0.0, 0.5 * math.pi / self.p["alpha"])

    def window(self):
        w = 0.5 * math.pi / self.p["alpha"]
        return (0.01 * w, 0.99 * w)

    def potential(self, x):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return -(A + B) ** 2 + A * (A - al) / np.cos(al * x) ** 2 + B * (B - al) / np.sin(al * x) ** 2

    def variable(self, x):
        al = self.p["alpha"]
        return np.tan(al * x), al / np.cos(al * x) ** 2

    def x_of_y(self, y):
        return np.arctan(y) / self.p["alpha"]

    def canonical(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return CanonicalForm(
            Category.SECOND, lambda2=A * (A - al), mu2=B * (B - al),
            lambda0=-al * (A + B) - 2 * A * B, alpha_eff=al, map_sign=MapSign.PLUS,
        )

    @staticmethod
    def level_formula(A, B, alpha, n):
        return -((A + B) ** 2) + (2 * alpha * n + A + B) ** 2

    def level(self, n):
        return self.level_formula(self.p["A"], self.p["B"], self.p["alpha"], n)

    def threshold(self):
        return math.inf


class PoschlTellerII(_SecondCategory):
    pid = PotentialId.POSCHL_TELLER_II
    param_names = ("A", "B", "alpha")
    constraint = "A > B > alpha > 0"
    spectrum_formula = "E_n = (B-A)^2 - (2 alpha n + B - A)^2"
    domain_kind = "half"

    def validate(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        self._require(al > 0, "alpha>0")
        self._require(B > al, "B>alpha")
        self._require(B < A, "B<A")

    def domain(self):
        return (0.0, math.inf)

    def window(self):
        al = self.p["alpha"]
        return (0.05 / al, 5.0 / al)

    def potential(self, x):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return (A - B) ** 2 - A * (A + al) / np.cosh(al * x) ** 2 + B * (B - al) / np.sinh(al * x) ** 2

    def variable(self, x):
        al = self.p["alpha"]
        return np.tanh(al * x), al / np.cosh(al * x) ** 2

    def x_of_y(self, y):
        return np.arctanh(y) / self.p["alpha"]

    def canonical(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return CanonicalForm(
            Category.SECOND, lambda2=A * (A + al), mu2=B * (B - al),
            lambda0=-2 * A * B - al * (A - B), alpha_eff=al, map_sign=MapSign.MINUS,
        )

    @staticmethod
    def level_formula(A, B, alpha, n):
        return (B - A) ** 2 - (2 * alpha * n + B - A) ** 2

    def level(self, n):
        return self.level_formula(self.p["A"], self.p["B"], self.p["alpha"], n)

    def threshold(self):
        return (self.p["A"] - self.p["B"]) ** 2


class ScarfI(_SecondCategory):
    pid = PotentialId.SCARF_I
    param_names = ("A", "B", "alpha")
    constraint = "B > 0, A - B > alpha > 0"
    spectrum_formula = "E_n = -A^2 + (A + alpha n)^2"
    domain_kind = "finite"

    def validate(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        self._require(al > 0, "alpha>0")
        self._require(B > 0, "B>0")
        self._require(A - B > al, "A-B>alpha")

    def domain(self):
        # y = tan(alpha x / 2) must sweep (0, inf): 0 < alpha x < pi
        return (0.0, math.pi / self.p["alpha"])

    def window(self):
        w = math.pi / self.p["alpha"]
        return (0.01 * w, 0.99 * w)

    def potential(self, x):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        s2 = np.sin(al * x) ** 2
        return -A * A + (A * A + B * B - al * A) / s2 - B * (2 * A - al) * np.cos(al * x) / s2

    def variable(self, x):
        h = 0.5 * self.p["alpha"]
        return np.tan(h * x), h / np.cos(h * x) ** 2

    def x_of_y(self, y):
        return 2.0 * np.arctan(y) / self.p["alpha"]

    def canonical(self):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        return CanonicalForm(
            Category.SECOND, lambda2=(A + B) * (A + B - al) / 4, mu2=(A - B) * (A - B - al) / 4,
            lambda0=(B * B - A * A - al * A) / 2, alpha_eff=al / 2, map_sign=MapSign.PLUS,
        )

    @staticmethod
    def level_formula(A, B, alpha, n):
        return -A * A + (A + alpha * n) ** 2

    def level(self, n):
        return self.level_formula(self.p["A"], self.p["B"], self.p["alpha"], n)

    def threshold(self):
        return math.inf


class Harmonic(_Model):
    pid = PotentialId.HARMONIC
    category = Category.HARMONIC
    param_names = ("omega",)
    constraint = "omega > 0"
    spectrum_formula = "E_n = n omega"

    def validate(self):
        self._require(self.p["omega"] > 0, "omega>0")

    def domain(self):
        return (-math.inf, math.inf)

    def window(self):
        L = 6.0 / math.sqrt(self.p["omega"])
        return (-L, L)

    def potential(self, x):
        w = self.p["omega"]
        return 0.25 * w * w * x * x - 0.5 * w

    def variable(self, x):
        x = np.asarray(x, dtype=float)
        return x, np.ones_like(x)

    def x_of_y(self, y):
        return y

    def canonical(self):
        return CanonicalForm(Category.HARMONIC, bundle={"omega": self.p["omega"]})

    def coeffs(self):
        return SuperpotentialCoeffs(a=0.5 * self.p["omega"], b=0.0)

    def superpotential(self, x):
        return 0.5 * self.p["omega"] * np.asarray(x, dtype=float)

    def superpotential_prime(self, x):
        return 0.5 * self.p["omega"] * np.ones_like(np.asarray(x, dtype=float))

    @staticmethod
    def level_formula(omega, n):
        return n * omega

    def level(self, n):
        return self.level_formula(self.p["omega"], n)

    master_level = level

    def level_count(self):
        return UNBOUNDED

    def threshold(self):
        return math.inf

    def minimum(self):
        return -0.5 * self.p["omega"]


class Morse(_Model):
    pid = PotentialId.MORSE
    category = Category.MORSE
    param_names = ("A", "B", "alpha")
    constraint = "A > 0, B > 0, alpha > 0"
    spectrum_formula = "E_n = A^2 - (A - alpha n)^2"

    def validate(self):
        for k in self.param_names:
            self._require(self.p[k] > 0, f"{k}>0")

    def domain(self):
        return (-math.inf, math.inf)

    def window(self):
        al = self.p["alpha"]
        c = math.log(self.p["B"] / self.p["A"]) / al
        return (c - 1.5 / al, c + 10.0 / al)

    def y_range(self):
        return (0.0, math.inf)

    def potential(self, x):
        A, B, al = self.p["A"], self.p["B"], self.p["alpha"]
        e = np.exp(-al * x)
        return A * A + B * B * e * e - 2 * B * (A + 0.5 * al) * e

    def variable(self, x):
        al = self.p["alpha"]
        y = np.exp(-al * x)
        return y, -al * y

    def x_of_y(self, y):
        return -np.log(y) / self.p["alpha"]

    def canonical(self):
        return CanonicalForm(Category.MORSE, bundle=dict(self.p))

    def coeffs(self):
        return SuperpotentialCoeffs(a=self.p["B"], b=self.p["A"])

    def superpotential(self, x):
        return self.p["A"] - self.p["B"] * np.exp(-self.p["alpha"] * x)

    def superpotential_prime(self, x):
        al = self.p["alpha"]
        return al * self.p["B"] * np.exp(-al * x)

    @staticmethod
    def level_formula(A, alpha, n):
        return A * A - (A - alpha * n) ** 2

    def level(self, n):
        return self.level_formula(self.p["A"], self.p["alpha"], n)

    master_level = level

    def level_count(self):
        A, al = self.p["A"], self.p["alpha"]
        n = 0
        while A - al * n > 0:
            n += 1
        return n

    def threshold(self):
        return self.p["A"] ** 2

    def minimum(self):
        A, al = self.p["A"], self.p["alpha"]
        return -A * al - 0.25 * al * al


class KeplerCoulomb(_Model):
    pid = PotentialId.KEPLER_COULOMB
    category = Category.COULOMB
    param_names = ("g", "l")
    constraint = "g > 0, l >= 0"
    spectrum_formula = "E_n = g^2/(4(l+1)^2) - g^2/(4(n+l+1)^2)"
    domain_kind = "half"

    def validate(self):
        self._require(self.p["g"] > 0, "g>0")
        self._require(self.p["l"] >= 0, "l>=0")

    def domain(self):
        return (0.0, math.inf)

    def window(self):
        a = self.p["l"] + 1
        r = a * a / self.p["g"]
        return (0.05 * r, 40.0 * r)

    def y_range(self):
        return (0.0, math.inf)

    def potential(self, x):
        g, l = self.p["g"], self.p["l"]
        return -g / x + l * (l + 1) / (x * x) + g * g / (4 * (l + 1) ** 2)

    def variable(self, x):
        x = np.asarray(x, dtype=float)
        return 1.0 / x, -1.0 / (x * x)

    def x_of_y(self, y):
        return 1.0 / np.asarray(y, dtype=float)

    def canonical(self):
        c = self.coeffs()
        return CanonicalForm(Category.COULOMB, bundle={"a": c.a, "b": c.b, "g": self.p["g"], "l": self.p["l"]})

    def coeffs(self):
        a = self.p["l"] + 1
        return SuperpotentialCoeffs(a=a, b=self.p["g"] / (2 * a))

    def superpotential(self, x):
        c = self.coeffs()
        return c.b - c.a / np.asarray(x, dtype=float)

    def superpotential_prime(self, x):
        x = np.asarray(x, dtype=float)
        return self.coeffs().a / (x * x)

    @staticmethod
    def level_formula(g, l, n):
        return g * g / (4 * (l + 1) ** 2) - g * g / (4 * (n + l + 1) ** 2)

    def level(self, n):
        return self.level_formula(self.p["g"], self.p["l"], n)

    def master_level(self, n):
        c = self.coeffs()
        return c.b**2 - (c.a * c.b / (c.a + n)) ** 2

    def level_count(self):
        return UNBOUNDED

    def threshold(self):
        return self.coeffs().b ** 2

    def minimum(self):
        g, l = self.p["g"], self.p["l"]
        if l == 0:
            return -math.inf
        return self.threshold() - g * g / (4 * l * (l + 1))


class Isotonic(_Model):
    pid = PotentialId.ISOTONIC
    category = Category.ISOTONIC
    param_names = ("omega", "l")
    constraint = "omega > 0, l > 0"
    spectrum_formula = "E_n = 2 n omega"
    domain_kind = "half"

    def validate(self):
        self._require(self.p["omega"] > 0, "omega>0")
        # l = 0 puts the proper turning point on the wall x = 0
        self._require(self.p["l"] > 0, "l>0")

    def domain(self):
        return (0.0, math.inf)

    def window(self):
        return (0.05, 6.0 / math.sqrt(self.p["omega"]))

    def y_range(self):
        return (0.0, math.inf)

    def potential(self, x):
        w, l = self.p["omega"], self.p["l"]
        return 0.25 * w * w * x * x + l * (l + 1) / (x * x) - w * (l + 1.5)

    def variable(self, x):
        x = np.asarray(x, dtype=float)
        return x, np.ones_like(x)

    def x_of_y(self, y):
        return y

    def canonical(self):
        c = self.coeffs()
        return CanonicalForm(Category.ISOTONIC, bundle={"a": c.a, "b": c.b, "omega": self.p["omega"], "l": self.p["l"]})

    def coeffs(self):
        return SuperpotentialCoeffs(a=0.5 * self.p["omega"], b=self.p["l"] + 1)

    def superpotential(self, x):
        c = self.coeffs()
        x = np.asarray(x, dtype=float)
        return c.a * x - c.b / x

    def superpotential_prime(self, x):
        c = self.coeffs()
        x = np.asarray(x, dtype=float)
        return c.a + c.b / (x * x)

    @staticmethod
    def level_formula(omega, n):
        return 2 * n * omega

    def level(self, n):
        return self.level_formula(self.p["omega"], n)

    master_level = level

    def level_count(self):
        return UNBOUNDED

    def threshold(self):
        return math.inf

    def minimum(self):
        w, l = self.p["omega"], self.p["l"]
        return w * math.sqrt(l * (l + 1)) - w * (l + 1.5)


class GenericFirst(_FirstCategory):
    """Raw first-category coefficients on the model map ``tan`` / ``tanh``."""

    pid = PotentialId.GENERIC_FIRST
    param_names = ("lambda2", "lambda1", "lambda0", "alpha", "sign")
    constraint = "lambda2 > 0, alpha > 0, sign = +1|-1, a > |b| when sign = -1"
    spectrum_formula = "E_n = -/+a^2 + alpha a + lambda0 +/- (a +/- alpha n)^2 - lambda1^2/(4(a +/- alpha n)^2)"

    def validate(self):
        self._require(self.p["alpha"] > 0, "alpha>0")
        self._require(self.p["sign"] in (1.0, -1.0), "sign=+1|-1")
        self.form  # noqa: B018 - raises ParamError on lambda2 <= 0
        if self.form.map_sign is MapSign.MINUS:
            self._require(self.sp.a > abs(self.sp.b), "a>|b|")

    @property
    def _plus(self):
        return self.p["sign"] > 0

    def domain(self):
        if self._plus:
            h = 0.5 * math.pi / self.p["alpha"]
            return (-h, h)
        return (-math.inf, math.inf)

    def window(self):
        lo, hi = self.domain()
        if self._plus:
            return (0.99 * lo, 0.99 * hi)
        L = 5.0 / self.p["alpha"]
        return (-L, L)

    def y_range(self):
        return (-math.inf, math.inf) if self._plus else (-1.0, 1.0)

    def variable(self, x):
        al = self.p["alpha"]
        if self._plus:
            return np.tan(al * x), al / np.cos(al * x) ** 2
        return np.tanh(al * x), al / np.cosh(al * x) ** 2

    def x_of_y(self, y):
        al = self.p["alpha"]
        return (np.arctan(y) if self._plus else np.arctanh(y)) / al

    def potential(self, x):
        y, _ = self.variable(x)
        return self.form.value(y)

    def canonical(self):
        p = self.p
        return CanonicalForm(
            Category.FIRST, lambda2=p["lambda2"], lambda1=p["lambda1"], lambda0=p["lambda0"],
            alpha_eff=p["alpha"], map_sign=MapSign(int(p["sign"])),
        )

    def threshold(self):
        if self._plus:
            return math.inf
        f = self.form
        return min(f.lambda2 + f.lambda1 + f.lambda0, f.lambda2 - f.lambda1 + f.lambda0)


class GenericSecond(_SecondCategory):
    """Raw second-category coefficients on the model map ``tan`` / ``tanh``."""

    pid = PotentialId.GENERIC_SECOND
    param_names = ("lambda2", "mu2", "lambda0", "alpha", "sign")
    constraint = "lambda2 > 0, mu2 > 0, alpha > 0, sign = +1|-1, b < a when sign = -1"
    spectrum_formula = "E_n = lambda0 -/+ (mu2 + lambda2) +/- (2 alpha n +/- a + b)^2"

    def validate(self):
        self._require(self.p["alpha"] > 0, "alpha>0")
        self._require(self.p["sign"] in (1.0, -1.0), "sign=+1|-1")
        self.form  # noqa: B018
        if self.form.map_sign is MapSign.MINUS:
            self._require(self.sp.b < self.sp.a, "b<a")

    @property
    def _plus(self):
        return self.p["sign"] > 0

    def domain(self):
        if self._plus:
            return (0.0, 0.5 * math.pi / self.p["alpha"])
        return (0.0, math.inf)

    @property
    def domain_kind(self):
        return "finite" if self._plus else "half"

    def window(self):
        al = self.p["alpha"]
        if self._plus:
            w = 0.5 * math.pi / al
            return (0.01 * w, 0.99 * w)
        return (0.05 / al, 5.0 / al)

    def variable(self, x):
        al = self.p["alpha"]
        if self._plus:
            return np.tan(al * x), al / np.cos(al * x) ** 2
        return np.tanh(al * x), al / np.cosh(al * x) ** 2

    def x_of_y(self, y):
        al = self.p["alpha"]
        return (np.arctan(y) if self._plus else np.arctanh(y)) / al

    def potential(self, x):
        y, _ = self.variable(x)
        return self.form.value(y)

    def canonical(self):
        p = self.p
        return CanonicalForm(
            Category.SECOND, lambda2=p["lambda2"], mu2=p["mu2"], lambda0=p["lambda0"],
            alpha_eff=p["alpha"], map_sign=MapSign(int(p["sign"])),
        )

    def threshold(self):
        if self._plus:
            return math.inf
        f = self.form
        return f.lambda2 + f.mu2 + f.lambda0


_MODELS: dict[PotentialId, type[_Model]] = {
    cls.pid: cls
    for cls in (
        RosenMorseI, RosenMorseII, Eckart, PoschlTeller, PoschlTellerI, PoschlTellerII,
        ScarfI, Harmonic, Morse, KeplerCoulomb, Isotonic, GenericFirst, GenericSecond,
    )
}

CATALOG: tuple[PotentialId, ...] = tuple(
    pid for pid in PotentialId if pid not in (PotentialId.GENERIC_FIRST, PotentialId.GENERIC_SECOND)
)
"""The eleven named potentials."""

REFERENCE_PARAMS: dict[PotentialId, dict[str, float]] = {
    PotentialId.ROSEN_MORSE_I: {"A": 2.0, "B": 1.0, "alpha": 1.0},
    PotentialId.ROSEN_MORSE_II: {"A": 2.0, "B": 0.5, "alpha": 1.0},
    PotentialId.ECKART: {"A": 2.0, "B": 20.0, "alpha": 1.0},
    PotentialId.POSCHL_TELLER: {"A": 2.5, "B": 5.0, "alpha": 1.0},
    PotentialId.POSCHL_TELLER_I: {"A": 3.0, "B": 2.0, "alpha": 1.0},
    PotentialId.POSCHL_TELLER_II: {"A": 7.0, "B": 2.0, "alpha": 1.0},
    PotentialId.SCARF_I: {"A": 3.0, "B": 1.0, "alpha": 1.0},
    PotentialId.HARMONIC: {"omega": 2.0},
    PotentialId.MORSE: {"A": 2.0, "B": 1.0, "alpha": 1.0},
    PotentialId.KEPLER_COULOMB: {"g": 2.0, "l": 1.0},
    PotentialId.ISOTONIC: {"omega": 2.0, "l": 1.0},
}
"""Parameter sets used by the verification suites and the CLI ``--all`` sweep."""


@dataclass(frozen=True)
class PotentialSpec:
    """A catalog potential plus its physical parameters.

    Construction validates the parameters and raises :class:`ParamError`.

    >>> PotentialSpec("harmonic", {"omega": 2.0}).params["omega"]
    2.0
    """

    id: PotentialId
    params: Mapping[str, float]

    def __post_init__(self):
        object.__setattr__(self, "id", PotentialId.parse(self.id))
        object.__setattr__(self, "params", {k: float(v) for k, v in dict(self.params).items()})
        self.model  # noqa: B018 - validates

    @classmethod
    def make(cls, name: str | PotentialId, **params: float) -> "PotentialSpec":
        return cls(PotentialId.parse(name), params)

    @cached_property
    def model(self) -> _Model:
        return _MODELS[self.id](self.params)

    @property
    def category(self) -> Category:
        return self.model.category

    def __hash__(self):
        return hash((self.id, tuple(sorted(self.params.items()))))


def reference_spec(name: str | PotentialId) -> PotentialSpec:
    pid = PotentialId.parse(name)
    return PotentialSpec(pid, REFERENCE_PARAMS[pid])


# ---------------------------------------------------------------------------
# operations


def _in_domain(spec: PotentialSpec, x) -> np.ndarray:
    lo, hi = spec.model.domain()
    xa = np.asarray(x, dtype=float)
    if not np.all((xa > lo) & (xa < hi)):
        raise DomainError(f"{spec.id.value}: x outside natural domain ({lo}, {hi})")
    return xa


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


def evaluate_potential(spec: PotentialSpec, x):
    """V(x) from the potential's defining expression (scalar or array)."""
    xa = _in_domain(spec, x)
    with np.errstate(over="ignore"):
        return _out(spec.model.potential(xa))


def evaluate_variable_map(spec: PotentialSpec, x):
    """``(y(x), dy/dx)`` for the potential's canonical change of variable."""
    xa = _in_domain(spec, x)
    y, dy = spec.model.variable(xa)
    return _out(y), _out(dy)


def canonical_form(spec: PotentialSpec) -> CanonicalForm:
    return spec.model.canonical()


def superpotential_coeffs(form: CanonicalForm) -> SuperpotentialCoeffs:
    """``(a, b)`` from canonical coefficients.

    ``a = s alpha/2 + sqrt(alpha^2/4 + lambda2)`` with ``s`` the map sign, so
    that ``a (a - s alpha) = lambda2``; first category ``b = lambda1 / 2a``,
    second category ``b = alpha/2 + sqrt(alpha^2/4 + mu2)``.
    """
    cat = form.category
    if cat is Category.HARMONIC:
        return SuperpotentialCoeffs(a=0.5 * form.bundle["omega"], b=0.0)
    if cat is Category.MORSE:
        return SuperpotentialCoeffs(a=form.bundle["B"], b=form.bundle["A"])
    if cat in (Category.COULOMB, Category.ISOTONIC):
        return SuperpotentialCoeffs(a=form.bundle["a"], b=form.bundle["b"])
    if not form.lambda2 > 0:
        raise ParamError("lambda2 must be positive")
    s, al = form.map_sign.value, form.alpha_eff
    a = 0.5 * s * al + math.sqrt(0.25 * al * al + form.lambda2)
    if not a > 0:
        raise ParamError(f"superpotential slope a = {a} is not positive")
    if cat is Category.FIRST:
        b = form.lambda1 / (2 * a)
    else:
        if not form.mu2 > 0:
            raise ParamError("mu2 must be positive")
        b = 0.5 * al + math.sqrt(0.25 * al * al + form.mu2)
    resid = a * (a - s * al) - form.lambda2
    if abs(resid) > 1e-12 * max(1.0, form.lambda2):
        raise ParamError(f"slope relation residual {resid:.3e}")
    return SuperpotentialCoeffs(a=a, b=b)


def ground_state_energy(form: CanonicalForm, coeffs: SuperpotentialCoeffs) -> float:
    """E0 from canonical data; zero for the exceptional cases."""
    if form.category.exceptional:
        return 0.0
    a, b, al = coeffs.a, coeffs.b, form.alpha_eff
    if form.category is Category.FIRST:
        return form.lambda0 + al * a - b * b
    return form.lambda0 + 2 * a * b + al * (a + form.map_sign.value * b)


def evaluate_superpotential(spec: PotentialSpec, x):
    xa = _in_domain(spec, x)
    return _out(spec.model.superpotential(xa))


def superpotential_derivative(spec: PotentialSpec, x):
    """Analytic dW/dx via the chain rule through the variable map."""
    xa = _in_domain(spec, x)
    return _out(spec.model.superpotential_prime(xa))


def riccati_residual(spec: PotentialSpec, x):
    """``W^2 - W' - (V - E0)``; zero wherever everything is consistent."""
    xa = _in_domain(spec, x)
    m = spec.model
    w = m.superpotential(xa)
    return _out(w * w - m.superpotential_prime(xa) - (m.potential(xa) - m.ground_energy()))


def reconstruction_residual(spec: PotentialSpec, x):
    """``V(x) - V_canonical(y(x))`` for the generic categories."""
    xa = _in_domain(spec, x)
    m = spec.model
    y, _ = m.variable(xa)
    return _out(m.potential(xa) - m.canonical().value(y))


def level_count(spec: PotentialSpec) -> int | float:
    """Number of bound levels, or :data:`UNBOUNDED`."""
    return spec.model.level_count()


def _check_level(spec, n):
    if n < 0 or n != int(n):
        raise Unbound(f"level index must be a non-negative integer, got {n}")
    if n >= level_count(spec):
        raise Unbound(f"{spec.id.value} has {level_count(spec)} bound level(s); n={n} requested")


def closed_form_level(spec: PotentialSpec, n: int) -> float:
    """E_n from the potential's own spectrum formula."""
    _check_level(spec, n)
    return float(spec.model.level(n))


def master_level(spec: PotentialSpec, n: int) -> float:
    """E_n from the category-wide formula written in canonical coefficients."""
    _check_level(spec, n)
    return float(spec.model.master_level(n))


def spectrum_levels(spec: PotentialSpec, n_max: int) -> list[SpectrumLevel]:
    top = min(n_max + 1, level_count(spec))
    e0 = spec.model.ground_energy()
    out = []
    for n in range(int(top)):
        e = closed_form_level(spec, n)
        out.append(SpectrumLevel(n=n, energy=e, shifted_energy=e - e0))
    return out


def continuum_threshold(spec: PotentialSpec) -> float:
    """Lowest asymptotic (or boundary) value of V; ``inf`` for confining potentials."""
    return float(spec.model.threshold())


def potential_minimum(spec: PotentialSpec) -> float:
    return float(spec.model.minimum())


def sample_grid(spec: PotentialSpec, n: int = 200) -> np.ndarray:
    """``n`` points spread over a window that stays clear of singular walls."""
    lo, hi = spec.model.window()
    return np.linspace(lo, hi, n)


def describe(pid: str | PotentialId) -> dict:
    """Static descriptor used by the CLI ``list`` command."""
    cls = _MODELS[PotentialId.parse(pid)]
    cat = cls.category
    return {
        "name": cls.pid.value,
        "category": cat.family,
        "exceptional": cat.exceptional,
        "params": list(cls.param_names),
        "constraints": cls.constraint,
        "spectrum": cls.spectrum_formula,
    }
