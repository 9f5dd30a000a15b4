"""Read the presentation off a permutation data set."""
from __future__ import annotations

from .permdata import PermutationDataSet
from .presentation import Letter, Presentation


def decode(ds: PermutationDataSet, names=None) -> Presentation:
    """One generator per alpha cycle, one relator per beta cycle.

    Relator j walks beta cycle j from its smallest entry and emits, for each
    point, the generator whose alpha cycle holds it, signed by epsilon.  The
    result is not reduced.
    """
    relators = [[Letter(ds.a(i), ds.eps(i)) for i in cycle] for cycle in ds.beta.cycles]
    return Presentation(ds.alpha.num_cycles, relators, names)
