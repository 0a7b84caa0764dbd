"""Generalized Petersen graphs P(n, k) and the C5/C6 existence criteria."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import InputError, UnsupportedLength
from .multigraph import Multigraph

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class PetersenParams:
    """Validated (n, k) with n >= 3 and 1 <= k <= (n-1)//2."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 3:
            raise InputError(f"n must be at least 3, got {self.n}")
        hi = (self.n - 1) // 2
        if not 1 <= self.k <= hi:
            raise InputError(
                f"k must satisfy 1 <= k <= {hi} for n={self.n}, got k={self.k}")

    @classmethod
    def normalized(cls, n: int, k: int) -> "PetersenParams":
        """Accept a raw k, replacing k > (n-1)/2 by n-k (P(n,k) ~ P(n,n-k))."""
        if n >= 3 and (n - 1) // 2 < k < n and n - k != k:
            log.info("normalizing P(%d,%d) to the isomorphic P(%d,%d)", n, k, n, n - k)
            k = n - k
        return cls(n, k)

    # canonical edge-id layout
    def outer(self, i: int) -> int:
        """Edge id of u_i u_{i+1}."""
        return i % self.n

    def spoke(self, i: int) -> int:
        """Edge id of u_i v_i."""
        return self.n + i % self.n

    def inner(self, i: int) -> int:
        """Edge id of v_i v_{i+k}."""
        return 2 * self.n + i % self.n

    def u(self, i: int) -> int:
        return i % self.n

    def v(self, i: int) -> int:
        return self.n + i % self.n

    @property
    def edge_count(self) -> int:
        return 3 * self.n


def generate(p: PetersenParams) -> Multigraph:
    """Build P(n, k): outer ids [0, n), spokes [n, 2n), inner [2n, 3n)."""
    n, k = p.n, p.k
    edges = ([(i, (i + 1) % n) for i in range(n)]
             + [(i, n + i) for i in range(n)]
             + [(n + i, n + (i + k) % n) for i in range(n)])
    labels = ([f"u{i}u{(i + 1) % n}" for i in range(n)]
              + [f"u{i}v{i}" for i in range(n)]
              + [f"v{i}v{(i + k) % n}" for i in range(n)])
    vlabels = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    return Multigraph(2 * n, tuple(edges), tuple(vlabels), tuple(labels))


def _is(num: int, den: int, k: int) -> bool:
    # k == num/den with exact divisibility
    return num % den == 0 and num // den == k


def has_cycle_closed_form(p: PetersenParams, d: int) -> bool:
    """Whether P(n, k) contains C_d, d in {5, 6}, by the closed-form criteria."""
    n, k = p.n, p.k
    if d == 5:
        return (n in (3, 5) or k == 2 or _is(n, 5, k) or _is(2 * n, 5, k)
                or _is(n - 1, 2, k))
    if d == 6:
        return (k in (1, 3) or _is(n, 6, k) or _is(n - 1, 3, k)
                or _is(n + 1, 3, k) or _is(n - 2, 2, k))
    raise UnsupportedLength(f"only C5 and C6 are supported, got d={d}")


def valid_params(n_max: int, n_min: int = 3):
    """All valid (n, k) with n_min <= n <= n_max, in (n, k) order."""
    for n in range(max(3, n_min), n_max + 1):
        for k in range(1, (n - 1) // 2 + 1):
            yield PetersenParams(n, k)


def rotation(p: PetersenParams) -> list[int]:
    """Edge-id permutation induced by i -> i+1 on both rims."""
    n = p.n
    return ([(i + 1) % n for i in range(n)]
            + [n + (i + 1) % n for i in range(n)]
            + [2 * n + (i + 1) % n for i in range(n)])
