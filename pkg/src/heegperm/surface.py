"""
Boundary of the ribbon diagram and genus of the splitting surface.

Each crossing ``i`` has four corners ``(i, Q)``.  Walking the boundary of the
ribbon diagram moves from corner to corner; the rules are the sixteen rows of
``CORNER_FLOW_TABLE`` and each boundary circle is one cycle of the resulting
permutation of the ``4d`` corners.  The ribbon diagram retracts onto a graph
with ``d`` vertices and ``2d`` edges, and capping the ``b`` boundary circles
gives the closed surface, so ``chi(S) = b - d`` and ``g(S) = (d - b + 2) / 2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .permdata import PermutationDataSet, is_transitive


class NotTransitiveError(ValueError):
    """The data set is a connected sum; split it with ``split_connected_sum``."""


class Corner(NamedTuple):
    point: int
    quadrant: int


# (eps(i), Q, move, eps(i'), Q').  move names the permutation applied to i:
# "a" alpha, "a-" alpha^-1, "b" beta, "b-" beta^-1.
CORNER_FLOW_TABLE = (
    (+1, 1, "a", +1, 2),
    (+1, 1, "a", -1, 3),
    (+1, 2, "b", +1, 3),
    (+1, 2, "b", -1, 4),
    (+1, 3, "a-", +1, 4),
    (+1, 3, "a-", -1, 1),
    (+1, 4, "b-", +1, 1),
    (+1, 4, "b-", -1, 2),
    (-1, 1, "b", +1, 3),
    (-1, 1, "b", -1, 4),
    (-1, 2, "a-", +1, 4),
    (-1, 2, "a-", -1, 1),
    (-1, 3, "b-", +1, 1),
    (-1, 3, "b-", -1, 2),
    (-1, 4, "a", +1, 2),
    (-1, 4, "a", -1, 3),
)

_MOVES = {
    +1: {1: "a", 2: "b", 3: "a-", 4: "b-"},
    -1: {1: "b", 2: "a-", 3: "b-", 4: "a"},
}


def closed_form_rule(eps_here: int, quadrant: int, eps_next: int):
    """(move, Q') from the arithmetic rule: Q' = Q + 1 + [eps(i) = -1] + [eps(i') = -1]."""
    move = _MOVES[eps_here][quadrant]
    shift = 1 + (eps_here < 0) + (eps_next < 0)
    return move, (quadrant - 1 + shift) % 4 + 1


def check_corner_flow_table(table=CORNER_FLOW_TABLE):
    """Raise RuntimeError unless ``table`` and ``closed_form_rule`` agree row by row."""
    rows = {(e, q, en) for e, q, _, en, _ in table}
    if len(table) != 16 or len(rows) != 16:
        raise RuntimeError("corner flow table must have 16 distinct rows")
    for eps_here, quadrant, move, eps_next, q_next in table:
        got = closed_form_rule(eps_here, quadrant, eps_next)
        if got != (move, q_next):
            raise RuntimeError(
                f"corner flow table row {(eps_here, quadrant, move, eps_next, q_next)} "
                f"disagrees with closed form {got}")


check_corner_flow_table()


def _apply(ds: PermutationDataSet, move: str, i: int) -> int:
    if move == "a":
        return ds.alpha(i)
    if move == "a-":
        return ds.alpha.inv(i)
    if move == "b":
        return ds.beta(i)
    return ds.beta.inv(i)


_TABLE = {(e, q, en): (mv, qn) for e, q, mv, en, qn in CORNER_FLOW_TABLE}


def phi(ds: PermutationDataSet, corner) -> Corner:
    """The corner following ``corner`` along its boundary circle."""
    i, q = corner
    if not (1 <= i <= ds.d and 1 <= q <= 4):
        raise ValueError(f"no corner {corner!r} in a data set of degree {ds.d}")
    eps_here = ds.eps(i)
    move = _MOVES[eps_here][q]
    j = _apply(ds, move, i)
    _, q_next = _TABLE[(eps_here, q, ds.eps(j))]
    return Corner(j, q_next)


def corners(d: int):
    return [Corner(i, q) for i in range(1, d + 1) for q in (1, 2, 3, 4)]


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple
    corner_to_orbit: dict

    @property
    def b(self) -> int:
        return len(self.orbits)

    def orbit_of(self, point: int, quadrant: int) -> int:
        return self.corner_to_orbit[(point, quadrant)]

    def sizes(self) -> list:
        return [len(o) for o in self.orbits]

    def to_json(self) -> list:
        return [[list(c) for c in orbit] for orbit in self.orbits]


def orbit_partition(ds: PermutationDataSet) -> OrbitPartition:
    """Cycles of ``phi``, each starting at its least corner, listed in order of that corner."""
    owner = {}
    found = []
    for start in corners(ds.d):
        if start in owner:
            continue
        idx = len(found)
        orbit = []
        c = start
        while c not in owner:
            owner[c] = idx
            orbit.append(c)
            c = phi(ds, c)
        if c != start:
            raise RuntimeError(f"corner flow is not a permutation near {start}")
        found.append(tuple(orbit))
    return OrbitPartition(tuple(found), owner)


@dataclass(frozen=True)
class SurfaceSummary:
    d: int
    b: int
    euler: int
    genus: int

    def to_json(self) -> dict:
        return {"d": self.d, "b": self.b, "eulerS": self.euler, "genusS": self.genus}


def surface_summary(ds: PermutationDataSet, orbits: OrbitPartition | None = None) -> SurfaceSummary:
    if not is_transitive(ds):
        raise NotTransitiveError(
            "alpha and beta do not act transitively; split the connected sum first")
    if orbits is None:
        orbits = orbit_partition(ds)
    b = orbits.b
    euler = b - ds.d
    if euler % 2:
        raise RuntimeError(f"odd Euler characteristic {euler} (b={b}, d={ds.d})")
    genus = (2 - euler) // 2
    if genus < 0:
        raise RuntimeError(f"negative genus from b={b}, d={ds.d}")
    return SurfaceSummary(ds.d, b, euler, genus)


def to_dot(ds: PermutationDataSet, name: str = "ribbon") -> str:
    """The 4-valent crossing graph: X edges i -> alpha(i), Y edges i -> beta(i)."""
    lines = [f"digraph {name} {{"]
    for i in range(1, ds.d + 1):
        sign = "+" if ds.eps(i) > 0 else "-"
        lines.append(f'  {i} [label="{i} ({sign})"];')
    for k, cycle in enumerate(ds.alpha.cycles, 1):
        for i in cycle:
            lines.append(f'  {i} -> {ds.alpha(i)} [label="X{k}", color=blue];')
    for k, cycle in enumerate(ds.beta.cycles, 1):
        for i in cycle:
            lines.append(f'  {i} -> {ds.beta(i)} [label="Y{k}", color=red];')
    lines.append("}")
    return "\n".join(lines) + "\n"
