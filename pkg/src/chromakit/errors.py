"""Exception hierarchy shared by every chromakit module."""


class ChromakitError(Exception):
    """Base class for all errors raised by chromakit."""


class GraphError(ChromakitError, ValueError):
    """Invalid graph construction or rewrite (bad endpoint, bad edge id, loop contraction)."""


class EdgeListFormatError(GraphError):
    """Malformed edge-list text."""


class BudgetExceededError(ChromakitError):
    """A brute-force or exhaustive computation would exceed its configured work budget."""


class ColoringError(ChromakitError, ValueError):
    """A tuple is outside the domain of a bijection map (improper coloring, constant word, bad entry)."""
