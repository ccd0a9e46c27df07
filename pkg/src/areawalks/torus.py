"""Finite-dimensional realization of the magnetic translation algebra.

Unitaries u, v with v u = Q^2 u v at Q^2 = exp(2*pi*i*p/q), together with
an involution sigma that inverts both (u sigma = sigma u^-1 and likewise
for v). For odd q = 2s+1 and zero casimirs the q-dimensional
representation admits a trace with tr(sigma) = tr(u sigma) =
tr(v sigma) = 1 and tr(v u sigma) = Q, which turns traces of walk
Hamiltonians into area generating functions evaluated at the root of
unity Q = exp(2*pi*i*p*(s+1)/q).

Everything here is dense complex double-precision; exactness lives on
the combinatorial side and these matrices serve as an independent
numerical witness. Matrix powers go through repeated multiplication so
error growth stays of order n * ||H||^n * eps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

RELATION_TOL = 1e-12

CASIMIR_ZERO = "0"
CASIMIR_PI_OVER_Q = "pi/q"
_CASIMIR_LABELS = (CASIMIR_ZERO, CASIMIR_PI_OVER_Q)


def _casimir_value(label: str, q: int) -> float:
    if label == CASIMIR_ZERO:
        return 0.0
    if label == CASIMIR_PI_OVER_Q:
        return math.pi / q
    raise ValueError(f"casimir must be one of {_CASIMIR_LABELS}, got {label!r}")


@dataclass(frozen=True, eq=False)
class TorusRepresentation:
    """Concrete u, v, sigma matrices with their defining parameters.

    basis_j0 is the j-value of array slot 0; slot a carries |j0 + a>.
    The q-dimensional odd-q representation uses the centered basis
    j = -s..s, the doubled one a 0-based basis in each block.
    """

    p: int
    q: int
    dim: int
    casimir_x: str
    casimir_y: str
    pivot_r: int
    basis_j0: int
    u: np.ndarray
    v: np.ndarray
    sigma: np.ndarray
    root_q: complex

    @property
    def s(self) -> int:
        if self.q % 2 == 0:
            raise ValueError("s is defined for odd q only")
        return (self.q - 1) // 2

    def index_of(self, j: int) -> int:
        """Array slot of basis state |j>, reduced periodically."""
        return (j - self.basis_j0) % self.q


def _periodic_matrices(p: int, q: int, j0: int, kx: float, ky: float, r: int):
    """u diagonal, v the down-shift, sigma the inversion j -> r - j.

    Phases follow the periodic action u|j> = e^{i(kx + 2 pi p j / q)}|j>,
    v|j> = e^{i ky}|j-1>, sigma|j> = e^{i ky (2j - r)}|r - j>, evaluated
    on the basis representatives (consistent for casimirs in {0, pi/q}).
    """
    js = [j0 + a for a in range(q)]
    u = np.diag([np.exp(1j * (kx + 2 * np.pi * p * j / q)) for j in js])
    v = np.zeros((q, q), dtype=complex)
    sigma = np.zeros((q, q), dtype=complex)
    phase_y = np.exp(1j * ky)
    for a, j in enumerate(js):
        v[(a - 1) % q, a] = phase_y
        sigma[(r - j - j0) % q, a] = np.exp(1j * ky * (2 * j - r))
    return u, v, sigma


def _pivot(p: int, q: int, kx_label: str) -> int:
    # for kx = pi/q the inversion center must satisfy r p = -1 (mod q)
    if kx_label == CASIMIR_ZERO:
        return 0
    return (-pow(p, -1, q)) % q


def build_rep_q(
    p: int,
    s: int,
    casimir_x: str = CASIMIR_ZERO,
    casimir_y: str = CASIMIR_ZERO,
) -> TorusRepresentation:
    """Odd-dimensional representation, q = 2s+1, centered basis j = -s..s."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    q = 2 * s + 1
    if math.gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} must be coprime")
    kx = _casimir_value(casimir_x, q)
    ky = _casimir_value(casimir_y, q)
    r = _pivot(p, q, casimir_x)
    u, v, sigma = _periodic_matrices(p, q, -s, kx, ky, r)
    return TorusRepresentation(
        p=p,
        q=q,
        dim=q,
        casimir_x=casimir_x,
        casimir_y=casimir_y,
        pivot_r=r,
        basis_j0=-s,
        u=u,
        v=v,
        sigma=sigma,
        root_q=complex(np.exp(2j * np.pi * p * (s + 1) / q)),
    )


def build_rep_even_sector(
    p: int,
    q: int,
    casimir_x: str = CASIMIR_ZERO,
    casimir_y: str = CASIMIR_ZERO,
) -> TorusRepresentation:
    """q-dimensional periodic action for arbitrary q, 0-based basis.

    For even q no casimir sector carries the unit-trace structure; this
    constructor exists to exhibit that vanishing.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} must be coprime")
    kx = _casimir_value(casimir_x, q)
    ky = _casimir_value(casimir_y, q)
    r = _pivot(p, q, casimir_x)
    u, v, sigma = _periodic_matrices(p, q, 0, kx, ky, r)
    return TorusRepresentation(
        p=p,
        q=q,
        dim=q,
        casimir_x=casimir_x,
        casimir_y=casimir_y,
        pivot_r=r,
        basis_j0=0,
        u=u,
        v=v,
        sigma=sigma,
        root_q=complex(np.exp(1j * np.pi * p / q)),
    )


def build_rep_2q(p: int, q: int) -> TorusRepresentation:
    """Doubled representation u = diag(u0, u0^-1) etc. with block-swap sigma.

    All sigma-traces vanish identically here, for any q.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} must be coprime")
    u0, v0, _ = _periodic_matrices(p, q, 0, 0.0, 0.0, 0)
    zero = np.zeros((q, q), dtype=complex)
    eye = np.eye(q, dtype=complex)
    u = np.block([[u0, zero], [zero, u0.conj().T]])
    v = np.block([[v0, zero], [zero, v0.conj().T]])
    sigma = np.block([[zero, eye], [eye, zero]])
    return TorusRepresentation(
        p=p,
        q=q,
        dim=2 * q,
        casimir_x=CASIMIR_ZERO,
        casimir_y=CASIMIR_ZERO,
        pivot_r=0,
        basis_j0=0,
        u=u,
        v=v,
        sigma=sigma,
        root_q=complex(np.exp(1j * np.pi * p / q)),
    )


def hamiltonian(rep: TorusRepresentation, variant: str = "standard") -> np.ndarray:
    """Walk Hamiltonian: 'standard' u + u^-1 + v + v^-1, or the
    'off_diagonal' substitute (1 + Q u) v + (1 + Q u^-1) v^-1 whose
    sigma-traces coincide with the standard ones."""
    u, v = rep.u, rep.v
    u_inv, v_inv = u.conj().T, v.conj().T
    if variant == "standard":
        return u + u_inv + v + v_inv
    if variant == "off_diagonal":
        eye = np.eye(rep.dim, dtype=complex)
        return (eye + rep.root_q * u) @ v + (eye + rep.root_q * u_inv) @ v_inv
    raise ValueError(f"variant must be 'standard' or 'off_diagonal', got {variant!r}")


def _matrix_power(m: np.ndarray, n: int) -> np.ndarray:
    if n == 0:
        return np.eye(m.shape[0], dtype=complex)
    return reduce(np.matmul, [m] * n)


def trace_gf(rep: TorusRepresentation, n_steps: int, variant: str = "standard") -> complex:
    """tr(H^n sigma): the open-walk area polynomial evaluated at root_q
    when the representation carries the unit-trace structure."""
    if n_steps < 0:
        raise ValueError(f"n_steps must be >= 0, got {n_steps}")
    h = hamiltonian(rep, variant)
    return complex(np.trace(_matrix_power(h, n_steps) @ rep.sigma))


def split_pm(rep: TorusRepresentation) -> tuple[np.ndarray, np.ndarray]:
    """H projected onto the sigma = +1 / -1 eigenspaces.

    H commutes with sigma, so tr(H^n sigma) = tr(H_+^n) - tr(H_-^n)
    for n >= 1; at n = 0 the difference is the rank gap of the
    projectors, (s+1) - s = 1 for the odd-q representation.
    """
    h = hamiltonian(rep, "standard")
    eye = np.eye(rep.dim, dtype=complex)
    h_plus = h @ (eye + rep.sigma) / 2
    h_minus = h @ (eye - rep.sigma) / 2
    return h_plus, h_minus


def matrix_element_paradiagonal(
    rep: TorusRepresentation, n_steps: int, line_index: int, j_center: int
) -> complex:
    """<j_center - line_index| H_od^n_steps |j_center + line_index>.

    For even n_steps = 2n and 2n < 2q - 2*line_index (so the walk cannot
    wrap the periodic basis) this equals the sum over endpoints (k, l)
    on k + l = 2*line_index of the endpoint polynomial at root_q,
    weighted by root_q^(2*j_center*k).
    """
    if rep.dim != rep.q:
        raise ValueError("matrix elements are defined on the q-dimensional representation")
    if n_steps < 0:
        raise ValueError(f"n_steps must be >= 0, got {n_steps}")
    h = hamiltonian(rep, "off_diagonal")
    power = _matrix_power(h, n_steps)
    row = rep.index_of(j_center - line_index)
    col = rep.index_of(j_center + line_index)
    return complex(power[row, col])


def relation_residuals(rep: TorusRepresentation) -> dict[str, float]:
    """Max entrywise deviation of each defining relation; all should sit
    at floating-point noise level."""
    u, v, sigma = rep.u, rep.v, rep.sigma
    u_inv, v_inv = u.conj().T, v.conj().T
    q = rep.q
    q_squared = np.exp(2j * np.pi * rep.p / q)
    eye = np.eye(rep.dim, dtype=complex)
    kx = _casimir_value(rep.casimir_x, q)
    ky = _casimir_value(rep.casimir_y, q)

    def dev(a: np.ndarray, b: np.ndarray) -> float:
        return float(np.max(np.abs(a - b)))

    return {
        "vu_commutation": dev(v @ u, q_squared * u @ v),
        "u_inversion": dev(u @ sigma, sigma @ u_inv),
        "v_inversion": dev(v @ sigma, sigma @ v_inv),
        "sigma_squared": dev(sigma @ sigma, eye),
        "u_power_q": dev(_matrix_power(u, q), np.exp(1j * q * kx) * eye),
        "v_power_q": dev(_matrix_power(v, q), np.exp(1j * q * ky) * eye),
    }


def trace_conditions(rep: TorusRepresentation) -> dict[str, complex]:
    """Traces of sigma, u sigma, v sigma, v u sigma."""
    u, v, sigma = rep.u, rep.v, rep.sigma
    return {
        "sigma": complex(np.trace(sigma)),
        "u_sigma": complex(np.trace(u @ sigma)),
        "v_sigma": complex(np.trace(v @ sigma)),
        "vu_sigma": complex(np.trace(v @ u @ sigma)),
    }


def verify_even_q_vanishing(p: int, q: int) -> bool:
    """True when every casimir sector (k_x, k_y in {0, pi/q}) of the
    q-dimensional action has at least one vanishing trace among sigma,
    u sigma, v sigma.

    That is the obstruction to the unit-trace normalization: it holds
    for every even q, while odd q admits the all-ones sector (0, 0) and
    returns False.
    """
    for cx in _CASIMIR_LABELS:
        for cy in _CASIMIR_LABELS:
            rep = build_rep_even_sector(p, q, cx, cy)
            traces = trace_conditions(rep)
            smallest = min(
                abs(traces["sigma"]), abs(traces["u_sigma"]), abs(traces["v_sigma"])
            )
            if smallest > 1e-9:
                return False
    return True


def diagnostics(rep: TorusRepresentation) -> dict:
    """JSON-friendly dump: parameters, relation residuals, sigma-traces."""
    traces = trace_conditions(rep)
    return {
        "p": rep.p,
        "q": rep.q,
        "dim": rep.dim,
        "casimir_x": rep.casimir_x,
        "casimir_y": rep.casimir_y,
        "pivot_r": rep.pivot_r,
        "root_q": {"re": rep.root_q.real, "im": rep.root_q.imag},
        "relation_residuals": relation_residuals(rep),
        "traces": {
            name: {"re": value.real, "im": value.imag} for name, value in traces.items()
        },
    }
