"""Exception types shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """Invalid arguments: bad vertex index, edge id, parameter range, ..."""


class UnsupportedLength(InputError):
    """Cycle length outside the supported set {5, 6}."""


class NoCatalog(LookupError):
    """No hand-written catalog covers the requested (n, k, d)."""


class NoCopies(ValueError):
    """The copy family is empty, so Ar equals the host edge count."""

    def __init__(self, edge_count: int):
        super().__init__(f"no copies: Ar = |E(G)| = {edge_count} by definition")
        self.edge_count = edge_count


class ReductionRequired(ValueError):
    """Some host edges lie in no copy and must be split off first."""

    def __init__(self, dead: frozenset[int]):
        super().__init__(
            f"{len(dead)} edge(s) lie in no copy; remove them with delete_edges "
            f"and add |E'| back: {sorted(dead)}"
        )
        self.dead = dead


class SearchBudgetExceeded(RuntimeError):
    """A branch-and-bound search hit its node budget.

    ``lower`` and ``upper`` bracket the quantity being optimized when known.
    """

    def __init__(self, what: str, nodes: int, lower: int | None = None,
                 upper: int | None = None):
        msg = f"{what}: node budget exhausted after {nodes} nodes"
        if lower is not None or upper is not None:
            msg += f" (bracket [{lower}, {upper}])"
        super().__init__(msg)
        self.nodes = nodes
        self.lower = lower
        self.upper = upper
