"""Exception types shared across the package."""
from __future__ import annotations


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, parse failure)."""


class ClassViolation(ValueError):
    """The input graph is outside the class an algorithm requires.

    ``pattern`` names the forbidden induced subgraph that was found and
    ``witness`` is the sorted tuple of vertices inducing it.
    """

    def __init__(self, pattern: str, witness: tuple[int, ...], message: str | None = None):
        self.pattern = pattern
        self.witness = tuple(witness)
        super().__init__(message or f"graph contains an induced {pattern}: {self.witness}")


class DeskLimitExceeded(ValueError):
    """An exponential-time routine was called on a graph above its size cap."""

    def __init__(self, what: str, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"{what}: graph has {n} vertices, above the desk limit {limit} "
                         f"(raise it with CHIBOUND_DESK_LIMIT or the limit= argument)")


class StructureError(AssertionError):
    """A structural fact the colorers rely on did not hold at runtime.

    They always hold for inputs in the class, so seeing
    one means either a bug or a counterexample; ``witness`` carries the
    offending vertices and ``graph`` the instance for triage.
    """

    def __init__(self, claim: str, witness: tuple[int, ...] = (), graph=None):
        self.claim = claim
        self.witness = tuple(witness)
        self.graph = graph
        super().__init__(f"{claim} (witness {self.witness})")


class BudgetExceeded(ValueError):
    """A triangle-free part needed more colors than the promised budget k."""

    def __init__(self, needed: int, budget: int, witness: tuple[int, ...] = ()):
        self.needed = needed
        self.budget = budget
        self.witness = tuple(witness)
        super().__init__(f"triangle-free part needs {needed} colors, budget is {budget} "
                         f"(component {self.witness})")
