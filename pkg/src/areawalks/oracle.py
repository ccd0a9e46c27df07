"""Ground-truth enumeration of open walks with radial algebraic area.

Two independent oracles with identical output contracts:

  - brute_force sweeps every one of the 4^n step sequences (vectorized in
    blocks, int64 counters, no state merging);
  - dp_enumerate propagates exact per-position area polynomials step by
    step with arbitrary-precision Python ints.

The doubled radial area of a walk is the shoelace sum over its vertex
sequence; the closing chord back to the origin contributes nothing.
Area bookkeeping uses that a step from (x, y) changes the shoelace sum
by -y, +y, +x, -x for R, L, U, D respectively.

Steps are ordered R < L < U < D (+x, -x, +y, -y) wherever walks are
enumerated or dumped.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .laurent import ZERO, AreaPolynomial

STEP_ORDER = "RLUD"
STEP_VECTORS = {"R": (1, 0), "L": (-1, 0), "U": (0, 1), "D": (0, -1)}

DEFAULT_BRUTE_CAP = 14
DEFAULT_DP_CAP = 40

# Walks expanded per vectorized block: 4^10 states, a few tens of MB.
_BLOCK_STEPS = 10


def walk_positions(steps: str) -> list[tuple[int, int]]:
    """Vertex sequence of a walk given as a string over RLUD, origin first."""
    x, y = 0, 0
    positions = [(0, 0)]
    for ch in steps:
        try:
            dx, dy = STEP_VECTORS[ch]
        except KeyError:
            raise ValueError(f"invalid step {ch!r}; expected one of {STEP_ORDER}") from None
        x, y = x + dx, y + dy
        positions.append((x, y))
    return positions


def radial_double_area(steps: str) -> int:
    """t = 2A for a single walk, radial closing (chord endpoint -> origin).

    Shoelace sum of x_i y_{i+1} - x_{i+1} y_i over consecutive vertices;
    the closing chord through the origin adds zero.
    """
    t = 0
    x, y = 0, 0
    for ch in steps:
        dx, dy = STEP_VECTORS[ch]
        nx, ny = x + dx, y + dy
        t += x * ny - nx * y
        x, y = nx, ny
    return t


@dataclass(frozen=True)
class EndpointHistogram:
    """Map from endpoint (k, l) to the exact area polynomial of walks ending there.

    The stored polynomial at (k, l) already includes the radial-closing
    contribution, i.e. it is g_{k,l}(Q) * Q^{k l} in operator-ordering terms.
    """

    length: int
    by_endpoint: Mapping[tuple[int, int], AreaPolynomial]

    def endpoints(self) -> list[tuple[int, int]]:
        return sorted(self.by_endpoint)

    def endpoint_gf(self, k: int, l: int) -> AreaPolynomial:
        """Polynomial of walks ending exactly at (k, l); empty if unreachable."""
        return self.by_endpoint.get((k, l), ZERO)

    def line_gf(self, c: int) -> AreaPolynomial:
        """Sum of endpoint polynomials over the paradiagonal k + l = c."""
        total = AreaPolynomial()
        for (k, l), poly in self.by_endpoint.items():
            if k + l == c:
                total = total + poly
        return total

    def total(self) -> AreaPolynomial:
        """Sum over all endpoints; equals the open-walk generating function."""
        total = AreaPolynomial()
        for poly in self.by_endpoint.values():
            total = total + poly
        return total

    def to_json_dict(self) -> dict:
        return {
            "length": self.length,
            "endpoints": [
                {"k": k, "l": l, "coeffs": self.by_endpoint[(k, l)].to_json_dict()["coeffs"]}
                for k, l in self.endpoints()
            ],
        }

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> "EndpointHistogram":
        by_endpoint = {
            (entry["k"], entry["l"]): AreaPolynomial.from_json_dict(entry)
            for entry in payload["endpoints"]
        }
        return cls(length=payload["length"], by_endpoint=by_endpoint)

    def csv_rows(self) -> Iterable[tuple[int, int, int, int, int]]:
        """Rows (length, k, l, t, count), endpoints lexicographic, t ascending."""
        for k, l in self.endpoints():
            for t, c in self.by_endpoint[(k, l)].items():
                yield (self.length, k, l, t, c)


def brute_force(n_steps: int, cap: int = DEFAULT_BRUTE_CAP, threads: int = 1) -> EndpointHistogram:
    """Enumerate all 4^n_steps walks individually and histogram (endpoint, t).

    The walk space is partitioned by step prefixes; each block expands its
    suffixes as flat numpy arrays (one entry per walk, never merged) and
    the per-block histograms are summed, which is order independent.
    """
    if n_steps < 1:
        raise ValueError(f"n_steps must be >= 1, got {n_steps}")
    if n_steps > cap:
        raise ValueError(f"n_steps={n_steps} exceeds the brute-force cap {cap}")

    reach = n_steps
    tmax = n_steps * (n_steps - 1) // 2  # |shoelace increment| at step m is < m
    side = 2 * reach + 1
    tside = 2 * tmax + 1

    suffix_len = min(n_steps, _BLOCK_STEPS)
    prefix_len = n_steps - suffix_len

    def run_block(prefix: tuple[str, ...]) -> np.ndarray:
        x0, y0, t0 = 0, 0, 0
        for ch in prefix:
            dx, dy = STEP_VECTORS[ch]
            t0 += x0 * (y0 + dy) - (x0 + dx) * y0
            x0, y0 = x0 + dx, y0 + dy
        x = np.array([x0], dtype=np.int32)
        y = np.array([y0], dtype=np.int32)
        t = np.array([t0], dtype=np.int32)
        for _ in range(suffix_len):
            x, y, t = (
                np.concatenate([x + 1, x - 1, x, x]),
                np.concatenate([y, y, y + 1, y - 1]),
                np.concatenate([t - y, t + y, t + x, t - x]),
            )
        key = ((x + reach).astype(np.int64) * side + (y + reach)) * tside + (t + tmax)
        return np.bincount(key, minlength=side * side * tside)

    prefixes = list(itertools.product(STEP_ORDER, repeat=prefix_len))
    if threads > 1 and len(prefixes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            counts = sum(pool.map(run_block, prefixes))
    else:
        counts = sum(run_block(prefix) for prefix in prefixes)

    by_endpoint: dict[tuple[int, int], dict[int, int]] = {}
    for idx in np.flatnonzero(counts):
        idx = int(idx)
        t = idx % tside - tmax
        kl = idx // tside
        k, l = kl // side - reach, kl % side - reach
        by_endpoint.setdefault((k, l), {})[t] = int(counts[idx])
    return EndpointHistogram(
        length=n_steps,
        by_endpoint={pos: AreaPolynomial(p) for pos, p in by_endpoint.items()},
    )


def dp_enumerate(n_steps: int, cap: int = DEFAULT_DP_CAP) -> EndpointHistogram:
    """Position-resolved dynamic program, exact for any length.

    For each reachable position the doubled-area distribution is kept as a
    dict t -> count with Python ints; a step to a neighbor shifts every
    exponent by the constant increment fixed by the current position.
    """
    if n_steps < 1:
        raise ValueError(f"n_steps must be >= 1, got {n_steps}")
    if n_steps > cap:
        raise ValueError(f"n_steps={n_steps} exceeds the DP cap {cap}")
    layer: dict[tuple[int, int], dict[int, int]] = {(0, 0): {0: 1}}
    for _ in range(n_steps):
        new: dict[tuple[int, int], dict[int, int]] = {}
        for (x, y), dist in layer.items():
            for nx, ny, dt in ((x + 1, y, -y), (x - 1, y, y), (x, y + 1, x), (x, y - 1, -x)):
                target = new.setdefault((nx, ny), {})
                if dt:
                    for t, c in dist.items():
                        key = t + dt
                        target[key] = target.get(key, 0) + c
                else:
                    for t, c in dist.items():
                        target[t] = target.get(t, 0) + c
        layer = new
    return EndpointHistogram(
        length=n_steps,
        by_endpoint={pos: AreaPolynomial(dist) for pos, dist in layer.items()},
    )
