"""
Signed permutation data sets ``(alpha, beta, epsilon)``.

Points are labelled ``1..d``.  ``alpha`` lists the crossings met along each
X-curve, ``beta`` those along each Y-curve, and ``epsilon[i-1]`` is the sign of
crossing ``i``.  Data sets describing the same permutations compare equal
whatever order or starting point their cycles were written in; the written
order is kept anyway because it fixes which generator and relator each cycle
stands for.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class DataSetError(ValueError):
    """Raised for invalid permutation data."""


def _normal_cycle(cycle: Sequence[int]) -> tuple:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


@dataclass(frozen=True, eq=False)
class CyclePermutation:
    """A permutation of ``{1..degree}`` held as explicit disjoint cycles.

    ``cycles`` keeps the order and starting point the caller gave (implicit
    fixed points are appended in increasing order); that order is what numbers
    generators and relators.  Equality compares the permutations only.
    ``image`` and ``preimage`` are lookup tuples indexed by point (slot 0 is
    unused) so that ``p(i)`` and ``p.inv(i)`` are O(1).
    """

    degree: int
    cycles: tuple
    image: tuple
    preimage: tuple
    cycle_index: tuple

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int,
                    implicit_fixed_points: bool = True, name: str = "permutation"):
        seen = set()
        given = []
        for cycle in cycles:
            cycle = [int(x) for x in cycle]
            if not cycle:
                raise DataSetError(f"{name} contains an empty cycle")
            for x in cycle:
                if not 1 <= x <= degree:
                    raise DataSetError(f"{name}: element {x} out of range 1..{degree}")
                if x in seen:
                    raise DataSetError(f"{name}: repeated element {x}")
                seen.add(x)
            given.append(tuple(cycle))
        missing = sorted(set(range(1, degree + 1)) - seen)
        if missing and not implicit_fixed_points:
            raise DataSetError(f"{name}: elements {missing} are not in any cycle")
        given.extend((x,) for x in missing)

        image = [0] * (degree + 1)
        preimage = [0] * (degree + 1)
        which = [0] * (degree + 1)
        for idx, cycle in enumerate(given, 1):
            for pos, x in enumerate(cycle):
                y = cycle[(pos + 1) % len(cycle)]
                image[x] = y
                preimage[y] = x
                which[x] = idx
        return cls(degree, tuple(given), tuple(image), tuple(preimage), tuple(which))

    @property
    def normal_cycles(self) -> tuple:
        """Each cycle started at its least entry, cycles sorted by that entry."""
        return tuple(sorted(_normal_cycle(c) for c in self.cycles))

    def normalized(self) -> CyclePermutation:
        return CyclePermutation.from_cycles(self.normal_cycles, self.degree)

    def __eq__(self, other):
        if not isinstance(other, CyclePermutation):
            return NotImplemented
        return self.degree == other.degree and self.image == other.image

    def __hash__(self):
        return hash((self.degree, self.image))

    @classmethod
    def from_images(cls, images: Sequence[int]):
        """Build from the one-line form ``[p(1), ..., p(d)]``."""
        d = len(images)
        if sorted(images) != list(range(1, d + 1)):
            raise DataSetError("images do not form a bijection on 1..d")
        seen = [False] * (d + 1)
        cycles = []
        for start in range(1, d + 1):
            if seen[start]:
                continue
            cycle, x = [], start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = images[x - 1]
            cycles.append(cycle)
        return cls.from_cycles(cycles, d)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def inv(self, i: int) -> int:
        return self.preimage[i]

    def inverse(self) -> CyclePermutation:
        return CyclePermutation.from_cycles(
            [(c[0],) + tuple(reversed(c[1:])) for c in self.cycles], self.degree)

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    def cycle_lengths(self) -> list:
        return [len(c) for c in self.cycles]

    def conjugate(self, sigma: Sequence[int]) -> CyclePermutation:
        """sigma * self * sigma^-1, with sigma given 1-indexed (sigma[0] unused)."""
        return CyclePermutation.from_cycles(
            [[sigma[x] for x in c] for c in self.cycles], self.degree)

    def __str__(self):
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles)


@dataclass(frozen=True)
class PermutationDataSet:
    alpha: CyclePermutation
    beta: CyclePermutation
    epsilon: tuple

    def __post_init__(self):
        if not (self.alpha.degree == self.beta.degree == len(self.epsilon)):
            raise DataSetError("alpha, beta and epsilon disagree on the degree")
        if any(s not in (1, -1) for s in self.epsilon):
            raise DataSetError("epsilon values must be +1 or -1")

    @property
    def d(self) -> int:
        return self.alpha.degree

    def eps(self, i: int) -> int:
        return self.epsilon[i - 1]

    def a(self, j: int) -> int:
        """Index (1-based) of the alpha cycle containing point j."""
        return self.alpha.cycle_index[j]

    def normalized(self) -> PermutationDataSet:
        """Same data set with cycles in normal form (least entry first, sorted)."""
        return PermutationDataSet(self.alpha.normalized(), self.beta.normalized(), self.epsilon)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "alpha": [list(c) for c in self.alpha.cycles],
            "beta": [list(c) for c in self.beta.cycles],
            "epsilon": list(self.epsilon),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> PermutationDataSet:
        try:
            alpha, beta, eps = obj["alpha"], obj["beta"], obj["epsilon"]
        except (KeyError, TypeError) as exc:
            raise DataSetError(f"malformed data set JSON: missing {exc}") from exc
        return make_data_set(alpha, beta, eps, d=obj.get("d"))

    def __str__(self):
        eps = ",".join(str(s) for s in self.epsilon)
        return f"alpha={self.alpha} beta={self.beta} epsilon=({eps})"


def make_data_set(alpha_cycles, beta_cycles, signs, d: int | None = None,
                  implicit_fixed_points: bool = True) -> PermutationDataSet:
    """Validate a permutation data set.

    The degree is ``d`` if given, otherwise ``len(signs)``.  Points absent from
    ``alpha`` or ``beta`` become fixed points unless ``implicit_fixed_points``
    is False, in which case they are an error.
    """
    signs = tuple(int(s) for s in signs)
    if d is None:
        d = len(signs)
    d = int(d)
    if d < 1:
        raise DataSetError("degree must be at least 1")
    if len(signs) != d:
        raise DataSetError(f"epsilon has {len(signs)} entries, expected d = {d}")
    alpha = CyclePermutation.from_cycles(alpha_cycles, d, implicit_fixed_points, "alpha")
    beta = CyclePermutation.from_cycles(beta_cycles, d, implicit_fixed_points, "beta")
    return PermutationDataSet(alpha, beta, signs)


def _as_one_indexed(sigma, d: int) -> list:
    if isinstance(sigma, Mapping):
        images = [sigma.get(i, i) for i in range(1, d + 1)]
    else:
        images = list(sigma)
    if sorted(images) != list(range(1, d + 1)):
        raise DataSetError("relabelling is not a bijection on 1..d")
    return [0] + images


def relabel(ds: PermutationDataSet, sigma) -> PermutationDataSet:
    """Renumber points by ``sigma``: returns (s a s^-1, s b s^-1, eps o s^-1).

    ``sigma`` is either the one-line list ``[sigma(1), ..., sigma(d)]`` or a
    mapping (missing keys are fixed).
    """
    s = _as_one_indexed(sigma, ds.d)
    eps = [0] * ds.d
    for i in range(1, ds.d + 1):
        eps[s[i] - 1] = ds.eps(i)
    return PermutationDataSet(ds.alpha.conjugate(s), ds.beta.conjugate(s), tuple(eps))


def orbits(ds: PermutationDataSet) -> list:
    """Orbits of the group generated by alpha and beta, sorted by least point."""
    seen = [False] * (ds.d + 1)
    result = []
    for start in range(1, ds.d + 1):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        orbit = []
        while queue:
            i = queue.popleft()
            orbit.append(i)
            for j in (ds.alpha(i), ds.beta(i), ds.alpha.inv(i), ds.beta.inv(i)):
                if not seen[j]:
                    seen[j] = True
                    queue.append(j)
        result.append(sorted(orbit))
    return result


def is_transitive(ds: PermutationDataSet) -> bool:
    return len(orbits(ds)) == 1


def split_connected_sum(ds: PermutationDataSet) -> list:
    """Split into transitive pieces, one per orbit.

    Each piece is renumbered ``1..len(orbit)`` preserving the order of the old
    labels; pieces come out ordered by their least old label.
    """
    parts = orbits(ds)
    if len(parts) == 1:
        return [ds]
    pieces = []
    for orbit in parts:
        new = {old: k for k, old in enumerate(orbit, 1)}
        members = set(orbit)
        alpha = [[new[x] for x in c] for c in ds.alpha.cycles if c[0] in members]
        beta = [[new[x] for x in c] for c in ds.beta.cycles if c[0] in members]
        signs = [ds.eps(old) for old in orbit]
        pieces.append(make_data_set(alpha, beta, signs, implicit_fixed_points=False))
    return pieces
