"""
Components of S - X and S - Y, their genera, and the closedness test.

The boundary circles of the ribbon diagram are the polygons of S - (X u Y).
Putting the Y-curves back glues polygons across Y, which at every crossing
identifies corners (i,1)~(i,2) and (i,3)~(i,4); the resulting classes are the
components of S - X.  Putting the X-curves back instead identifies
(i,1)~(i,4) and (i,2)~(i,3) and gives the components of S - Y.

For a class with ``n`` polygons, ``m`` glued edges and ``t`` tags (sides of
removed curves, each capped by a disc) the capped component has Euler
characteristic ``n - m + t``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from scipy.cluster.hierarchy import DisjointSet

from .permdata import PermutationDataSet
from .surface import (OrbitPartition, SurfaceSummary, orbit_partition,
                      surface_summary)


class Side(enum.Enum):
    X = "x"
    Y = "y"

    @property
    def merges(self):
        """Quadrant pairs identified at each crossing."""
        return ((1, 2), (3, 4)) if self is Side.X else ((1, 4), (2, 3))

    @property
    def tag_quadrants(self):
        return (1, 3) if self is Side.X else (2, 4)

    def curves(self, ds: PermutationDataSet):
        return ds.alpha.cycles if self is Side.X else ds.beta.cycles


@dataclass(frozen=True)
class ComponentClass:
    orbits: tuple
    n: int
    m: int
    t: int

    @property
    def euler(self) -> int:
        return self.n - self.m + self.t

    @property
    def genus(self) -> int:
        return 1 - self.euler // 2

    @property
    def planar(self) -> bool:
        return self.genus == 0

    def to_json(self) -> dict:
        return {"orbits": list(self.orbits), "n": self.n, "m": self.m, "t": self.t,
                "euler": self.euler, "genus": self.genus, "planar": self.planar}


def side_components(ds: PermutationDataSet, orbits: OrbitPartition, side: Side) -> list:
    """Orbit classes for one side, ordered by their least orbit index."""
    uf = DisjointSet(range(orbits.b))
    for i in range(1, ds.d + 1):
        for q1, q2 in side.merges:
            uf.merge(orbits.orbit_of(i, q1), orbits.orbit_of(i, q2))

    def root(i, q):
        return uf[orbits.orbit_of(i, q)]

    members: dict = {}
    for k in range(orbits.b):
        members.setdefault(uf[k], []).append(k)
    m = dict.fromkeys(members, 0)
    t = dict.fromkeys(members, 0)
    # edge leaving i along the glued curve is flanked by (i,1) and its merge partner
    for i in range(1, ds.d + 1):
        m[root(i, 1)] += 1
    for cycle in side.curves(ds):
        for q in side.tag_quadrants:
            t[root(min(cycle), q)] += 1

    classes = []
    for r, orbs in sorted(members.items(), key=lambda kv: kv[1][0]):
        cls = ComponentClass(tuple(orbs), len(orbs), m[r], t[r])
        if cls.euler % 2 or cls.euler > 2:
            raise RuntimeError(f"impossible component Euler characteristic {cls.euler}")
        classes.append(cls)
    return classes


@dataclass(frozen=True)
class SideSummary:
    side: Side
    component_count: int
    curve_count: int
    boundary_genus: int
    components: tuple

    @property
    def is_empty_boundary(self) -> bool:
        return self.boundary_genus == 0

    def to_json(self, detail: bool = True) -> dict:
        out = {"components": self.component_count, "curves": self.curve_count,
               "boundaryGenus": self.boundary_genus, "empty": self.is_empty_boundary}
        if detail:
            out["classes"] = [c.to_json() for c in self.components]
        return out


def side_summary(ds: PermutationDataSet, orbits: OrbitPartition, side: Side,
                 surface: SurfaceSummary | None = None) -> SideSummary:
    """Boundary genus on one side, computed twice and cross-checked.

    Once as the sum of component genera, once as
    ``components - curves + g(S) - 1``.
    """
    if surface is None:
        surface = surface_summary(ds, orbits)
    classes = side_components(ds, orbits, side)
    curves = len(side.curves(ds))
    by_sum = sum(c.genus for c in classes)
    by_formula = len(classes) - curves + surface.genus - 1
    if by_sum != by_formula:
        raise RuntimeError(
            f"{side.name}-side boundary genus mismatch: components give {by_sum}, "
            f"closed formula gives {by_formula}")
    return SideSummary(side, len(classes), curves, by_sum, tuple(classes))


@dataclass(frozen=True)
class AnalysisReport:
    surface: SurfaceSummary
    x: SideSummary
    y: SideSummary
    orbit_sizes: tuple = ()

    @property
    def closed(self) -> bool:
        return self.x.is_empty_boundary and self.y.is_empty_boundary

    @property
    def presents_group(self) -> bool:
        return self.x.curve_count == self.surface.genus

    def to_json(self, detail: bool = False) -> dict:
        return {
            "d": self.surface.d,
            "b": self.surface.b,
            "genusS": self.surface.genus,
            "x": self.x.to_json(detail),
            "y": self.y.to_json(detail),
            "closed": self.closed,
            "presentsGroup": self.presents_group,
        }

    def summary_text(self) -> str:
        s = self.surface
        lines = [
            f"crossings d = {s.d}, boundary circles b = {s.b}",
            f"chi(S) = {s.euler}, genus g(S) = (d - b + 2)/2 = {s.genus}",
        ]
        for side in (self.x, self.y):
            name = side.side.name
            lines.append(
                f"S-{name}: {side.component_count} component(s), {side.curve_count} "
                f"{name}-curve(s), boundary genus {side.boundary_genus}"
                f"{' (empty)' if side.is_empty_boundary else ''}")
            for k, c in enumerate(side.components, 1):
                if not c.planar:
                    lines.append(f"  component {k} non-planar, genus {c.genus}")
        lines.append(f"closed: {'yes' if self.closed else 'no'}")
        lines.append(f"presents pi_1: {'yes' if self.presents_group else 'not guaranteed'}")
        return "\n".join(lines)


def analyze(ds: PermutationDataSet) -> AnalysisReport:
    """Full report for a transitive data set (raises ``NotTransitiveError`` otherwise)."""
    orbits = orbit_partition(ds)
    surface = surface_summary(ds, orbits)
    x = side_summary(ds, orbits, Side.X, surface)
    y = side_summary(ds, orbits, Side.Y, surface)
    return AnalysisReport(surface, x, y, tuple(orbits.sizes()))
