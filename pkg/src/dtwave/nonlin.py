"""Force families -V'(u) for the semi-linear wave equation u_tt = u_xx - V'(u).

Each nonlinearity exposes the potential V (normalised so V(0) = 0), the
derivative V', the force -V', and, for smooth families, higher derivatives
of V' up to fourth order (needed by the modified-equation machinery).
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "Nonlinearity",
    "McKean",
    "Sawtooth",
    "Sine",
    "AppendixForce",
    "CustomSmooth",
]


class Nonlinearity:
    """Base class; concrete families implement vprime/potential."""

    kind: str = "abstract"
    smooth: bool = False
    #: open interval of admissible u, or None for the whole line
    domain: tuple[float, float] | None = None

    def vprime(self, u):
        raise NotImplementedError

    def potential(self, u):
        raise NotImplementedError

    def force(self, u):
        """Return -V'(u)."""
        return -self.vprime(u)

    def vprime_derivative(self, u, order: int):
        """Return d^order V' / du^order; only defined for smooth families."""
        raise ValueError(f"{self.kind} nonlinearity has no smooth derivatives")

    def _check_domain(self, u):
        if self.domain is None:
            return
        lo, hi = self.domain
        u = np.asarray(u)
        if np.any(u <= lo) or np.any(u >= hi):
            raise ValueError(f"{self.kind} input outside domain ({lo}, {hi})")


class McKean(Nonlinearity):
    """Caricature of the cubic: V'(u) = u - h(u - a), 0 < a < 1.

    h is the Heaviside step with h(0) := 1 (right-continuous), so the jump
    point itself sits on the upper branch.
    """

    kind = "mckean"
    smooth = False

    def __init__(self, a: float):
        if not 0.0 < a < 1.0:
            raise ValueError("threshold a must lie in (0, 1)")
        self.a = float(a)

    def heaviside(self, u):
        return np.where(np.asarray(u, dtype=float) >= self.a, 1.0, 0.0)

    def vprime(self, u):
        u = np.asarray(u, dtype=float)
        out = u - self.heaviside(u)
        return out if out.ndim else float(out)

    def potential(self, u):
        u = np.asarray(u, dtype=float)
        out = 0.5 * u**2 - np.where(u >= self.a, u - self.a, 0.0)
        return out if out.ndim else float(out)


class Sawtooth(Nonlinearity):
    """Continuous piecewise-linear approximation of the cubic on (-2, 2).

    V' equals u+2 on (-2,-1), -u on (-1,1) and u-2 on (1,2); the breakpoint
    values match, so V' is continuous.  Inputs outside (-2, 2) raise rather
    than clamp: a solver escaping the domain is a bug we want to see.
    """

    kind = "sawtooth"
    smooth = False
    domain = (-2.0, 2.0)

    def vprime(self, u):
        self._check_domain(u)
        u = np.asarray(u, dtype=float)
        out = np.select([u <= -1.0, u < 1.0], [u + 2.0, -u], default=u - 2.0)
        return out if out.ndim else float(out)

    def potential(self, u):
        self._check_domain(u)
        u = np.asarray(u, dtype=float)
        out = np.select(
            [u <= -1.0, u < 1.0],
            [0.5 * (u + 2.0) ** 2 - 1.0, -0.5 * u**2],
            default=0.5 * (u - 2.0) ** 2 - 1.0,
        )
        return out if out.ndim else float(out)


class Sine(Nonlinearity):
    """V'(u) = sin(u), i.e. the sine-Gordon force."""

    kind = "sine"
    smooth = True

    def vprime(self, u):
        return np.sin(u)

    def potential(self, u):
        return 1.0 - np.cos(u)

    def vprime_derivative(self, u, order: int):
        if order not in (1, 2, 3, 4):
            raise ValueError("order must be in 1..4")
        return (np.cos(u), -np.sin(u), -np.cos(u), np.sin(u))[order - 1]


class AppendixForce(Nonlinearity):
    """Nonsymmetric force -V'(u) = sin(u) + (2/5) cos(2u)."""

    kind = "appendix-force"
    smooth = True

    def vprime(self, u):
        return -np.sin(u) - 0.4 * np.cos(2.0 * u)

    def potential(self, u):
        return np.cos(u) - 0.2 * np.sin(2.0 * u) - 1.0

    def vprime_derivative(self, u, order: int):
        if order == 1:
            return -np.cos(u) + 0.8 * np.sin(2.0 * u)
        if order == 2:
            return np.sin(u) + 1.6 * np.cos(2.0 * u)
        if order == 3:
            return np.cos(u) - 3.2 * np.sin(2.0 * u)
        if order == 4:
            return -np.sin(u) - 6.4 * np.cos(2.0 * u)
        raise ValueError("order must be in 1..4")


class CustomSmooth(Nonlinearity):
    """User-supplied smooth family: callables for V, V' and d^k V' (k=1..4).

    The supplied derivatives are cross-checked against central finite
    differences of V' at a few probe points on construction; an inconsistent
    family is rejected immediately instead of producing silently wrong
    modified equations later.
    """

    kind = "custom-smooth"
    smooth = True

    def __init__(self, potential, vprime, derivatives, *, probe_points=(-1.3, -0.2, 0.7, 1.9),
                 validate: bool = True):
        if len(derivatives) != 4:
            raise ValueError("need the four derivatives of V' (orders 1..4)")
        self._potential = potential
        self._vprime = vprime
        self._derivs = tuple(derivatives)
        if validate:
            self._validate(probe_points)

    def _validate(self, probe_points, step: float = 1e-4, rtol: float = 1e-5):
        chain = (self._vprime,) + self._derivs[:3]
        for k, (fun, claimed) in enumerate(zip(chain, self._derivs), start=1):
            for u in probe_points:
                fd = (fun(u + step) - fun(u - step)) / (2.0 * step)
                ref = claimed(u)
                if abs(fd - ref) > rtol * (1.0 + abs(ref)):
                    raise ValueError(
                        f"supplied derivative of order {k} disagrees with finite "
                        f"differences at u={u}: {ref} vs {fd}"
                    )

    def vprime(self, u):
        return self._vprime(u)

    def potential(self, u):
        return self._potential(u) - self._potential(0.0)

    def vprime_derivative(self, u, order: int):
        if order not in (1, 2, 3, 4):
            raise ValueError("order must be in 1..4")
        return self._derivs[order - 1](u)
