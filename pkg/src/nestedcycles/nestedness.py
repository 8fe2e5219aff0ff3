"""Nestedness of cuts and of embedded cycles."""

from __future__ import annotations

import logging
from typing import Sequence

from .duality import DualPair, image_of, tight_cut_sides
from .embedding import CycleSides, RotationSystem
from .graphcore import Cut, Cycle, GraphError, Multigraph, component_map

log = logging.getLogger(__name__)


def cuts_nested(b1: Cut, b2: Cut) -> bool:
    """Some corner X1∩X2, X1∩Y2, Y1∩X2, Y1∩Y2 is empty."""
    return any(
        not (a & b)
        for a in (b1.side_x, b1.side_y)
        for b in (b2.side_x, b2.side_y)
    )


def crosses(sides_of_c: CycleSides, d: Cycle) -> bool:
    """True iff d has vertices strictly on both sides of c."""
    return len(sides_of_c.witnesses(d.vertices)) == 2


def _nested_from_sides(sc: CycleSides, sd: CycleSides, c: Cycle, d: Cycle) -> bool:
    one, two = crosses(sc, d), crosses(sd, c)
    if one != two:
        log.info("one-sided crossing: %r vs %r (c over d: %s, d over c: %s)", c.edges, d.edges, one, two)
    return not (one or two)


def cycles_nested(g: Multigraph, rot: RotationSystem, c: Cycle, d: Cycle) -> bool:
    """Neither cycle has vertices on both sides of the other.

    Cycles in different components never cross.
    """
    if not (c.vertices & d.vertices) and _different_components(g, c, d):
        return True
    return _nested_from_sides(CycleSides(g, rot, c), CycleSides(g, rot, d), c, d)


def _different_components(g: Multigraph, c: Cycle, d: Cycle) -> bool:
    comp = component_map(g)
    return comp[next(iter(c.vertices))] != comp[next(iter(d.vertices))]


class NestingTable:
    """Cached side computations for pairwise checks over one family."""

    def __init__(self, g: Multigraph, rot: RotationSystem, family: Sequence[Cycle]):
        self.graph, self.rot, self.family = g, rot, list(family)
        self._comp = component_map(g)
        self._sides: dict[int, CycleSides] = {}

    def sides(self, k: int) -> CycleSides:
        if k not in self._sides:
            self._sides[k] = CycleSides(self.graph, self.rot, self.family[k])
        return self._sides[k]

    def nested(self, i: int, j: int) -> bool:
        c, d = self.family[i], self.family[j]
        if self._comp[c.vertex_order[0]] != self._comp[d.vertex_order[0]]:
            return True
        return _nested_from_sides(self.sides(i), self.sides(j), c, d)

    def one_sided(self, i: int, j: int) -> tuple[bool, bool]:
        """(i crosses over j, j crosses over i) for same-component cycles."""
        c, d = self.family[i], self.family[j]
        if self._comp[c.vertex_order[0]] != self._comp[d.vertex_order[0]]:
            return False, False
        return crosses(self.sides(i), d), crosses(self.sides(j), c)

    def first_violation(self) -> tuple[int, int] | None:
        n = len(self.family)
        for i in range(n):
            for j in range(i + 1, n):
                if not self.nested(i, j):
                    return i, j
        return None


def family_nested(g: Multigraph, rot: RotationSystem, family: Sequence[Cycle]) -> tuple[int, int] | None:
    """None if the family is pairwise nested, else the first crossing index pair."""
    return NestingTable(g, rot, family).first_violation()


def dual_cut(dp: DualPair, c: Cycle) -> Cut:
    """The tight cut of the dual formed by the dual edges of c."""
    cut = tight_cut_sides(dp.dual, image_of(dp, c.edges))
    if cut is None:
        raise GraphError(f"dual of {c.edges!r} is not a tight cut")
    return cut


def nested_cuts_imply_nested_cycles(dp: DualPair, rot: RotationSystem, c1: Cycle, c2: Cycle) -> bool:
    """Nested dual cuts imply nested cycles (evaluated as an implication)."""
    if not cuts_nested(dual_cut(dp, c1), dual_cut(dp, c2)):
        return True
    return cycles_nested(dp.primal, rot, c1, c2)


__all__ = [
    "NestingTable",
    "crosses",
    "cuts_nested",
    "cycles_nested",
    "dual_cut",
    "family_nested",
    "nested_cuts_imply_nested_cycles",
]
