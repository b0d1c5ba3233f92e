"""Exception types shared across the library."""

from __future__ import annotations


class BullchromeError(Exception):
    """Base class for all library errors."""


class InvalidEdge(BullchromeError):
    """Edge endpoint out of range, or a self-loop."""


class InvalidVertex(BullchromeError):
    """Vertex identifier outside 0..n-1."""


class InvalidColoring(BullchromeError):
    """Coloring does not cover the vertex set."""


class ParseError(BullchromeError):
    """Malformed graph file (JSON or DIMACS)."""


class DisconnectedInput(BullchromeError):
    """Operation requires a connected graph."""


class EvenLength(BullchromeError):
    """Cycle-expansion operation got an even-length size vector."""


class BudgetTooSmall(BullchromeError):
    """Color budget below the supported minimum."""


class TooSmall(BullchromeError):
    """Generator parameter below the family's minimum size."""


class NotAnObstruction(BullchromeError):
    """A constructed graph failed its own non-colorability assertion."""


class TimeBudgetExceeded(BullchromeError):
    """Pattern search ran past its node budget."""

    def __init__(self, nodes: int, budget: int) -> None:
        super().__init__(f"search exceeded node budget ({nodes} > {budget})")
        self.nodes = nodes
        self.budget = budget


class DeskCapExceeded(BullchromeError):
    """Exact solver ran past its node budget or size cap."""


class AlphaNotTwo(BullchromeError):
    """Matching-based coloring requires independence number at most 2."""


class FreenessViolation(BullchromeError):
    """Input graph contains a pattern the decider requires to be absent.

    Carries the violating witness so callers can report it.
    """

    def __init__(self, witness) -> None:
        super().__init__(f"input contains forbidden {witness.kind}")
        self.witness = witness


class UnclassifiedNeighbor(BullchromeError):
    """A vertex next to the anchor cycle fits no admissible neighborhood
    shape; the input violated the decider's structural assumptions."""

    def __init__(self, vertex: int, detail: str = "") -> None:
        msg = f"vertex {vertex} has an inadmissible neighborhood"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.vertex = vertex


class SeparationViolation(BullchromeError):
    """A structural fact (separation, domination, expansion shape) failed;
    the input violated the decider's assumptions."""


class CharacterizationMismatch(BullchromeError):
    """Internal consistency failure: the dispatch reached a state the
    characterization rules out.  Indicates a bug or a violated premise."""
