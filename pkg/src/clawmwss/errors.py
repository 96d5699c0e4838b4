"""Shared exception types.

Everything raised on purpose by this package derives from ClawMwssError, so
callers (and the CLI) can distinguish solver-reported conditions from plain
bugs.
"""

from __future__ import annotations


class ClawMwssError(Exception):
    pass


class InstanceFormatError(ClawMwssError):
    """Malformed instance file. Carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


class NotStableError(ClawMwssError):
    """A set that was required to be stable contains an edge."""

    def __init__(self, u: int, v: int):
        super().__init__(f"set is not stable: edge ({u}, {v})")
        self.edge = (u, v)


class ClawWitnessError(ClawMwssError):
    """The input is not claw-free; carries an explicit claw certificate.

    ``center`` is adjacent to all three ``leaves``, which are pairwise
    non-adjacent.
    """

    def __init__(self, center: int, leaves: tuple[int, int, int]):
        super().__init__(f"claw found: center {center}, leaves {sorted(leaves)}")
        self.center = center
        self.leaves = tuple(sorted(leaves))


class PreconditionError(ClawMwssError):
    """A debug-build precondition check failed; names the violated clause."""

    def __init__(self, clause: str):
        super().__init__(f"precondition violated: {clause}")
        self.clause = clause
