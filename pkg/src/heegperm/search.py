"""
Search the finite class of a presentation for a diagram of a closed manifold.

A member is a witness when every connected-sum piece of it is closed.  The
member index space is cut into contiguous chunks for worker processes and the
results are merged by index, so the outcome does not depend on ``jobs``.
"""
from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .boundary import AnalysisReport, analyze
from .encode import EncodingClass, class_size
from .permdata import PermutationDataSet, split_connected_sum
from .presentation import Presentation

log = logging.getLogger(__name__)

DEFAULT_MAX_MEMBERS = 10**6

WITNESS_FOUND = "closed-witness-found"
NO_CLOSED = "no-closed-diagram-in-family"
ABORTED = "aborted-at-limit"


def analyze_one(ds: PermutationDataSet) -> list:
    """One report per connected-sum piece, in split order."""
    return [analyze(piece) for piece in split_connected_sum(ds)]


def is_witness(ds: PermutationDataSet) -> bool:
    return all(r.closed for r in analyze_one(ds))


@dataclass
class Witness:
    index: int
    data_set: PermutationDataSet
    reports: list

    def to_json(self) -> dict:
        return {"index": self.index, "dataSet": self.data_set.to_json(),
                "reports": [r.to_json() for r in self.reports]}


@dataclass
class SearchResult:
    presentation: Presentation
    class_size_full: int
    class_size_reduced: int
    reduced: bool
    examined: int
    witnesses: list
    verdict: str
    max_members: int
    first_witness_only: bool = False
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        # elapsed is left out so that repeated runs print identical output
        return {
            "presentation": self.presentation.to_json(),
            "degree": self.presentation.degree,
            "reduced": self.reduced,
            "classSizeFull": self.class_size_full,
            "classSizeReduced": self.class_size_reduced,
            "examined": self.examined,
            "maxMembers": self.max_members,
            "firstWitnessOnly": self.first_witness_only,
            "verdict": self.verdict,
            "witnessCount": len(self.witnesses),
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def _scan(presentation_json: dict, reduced: bool, start: int, stop: int,
          first_only: bool) -> list:
    cls = EncodingClass(Presentation.from_json(presentation_json), reduced)
    hits = []
    for index, ds in enumerate(cls.iter_range(start, stop), start):
        if is_witness(ds):
            hits.append(index)
            if first_only:
                break
    return hits


def _chunks(total: int, jobs: int):
    size = max(1, math.ceil(total / (jobs * 8)))
    return [(s, min(s + size, total)) for s in range(0, total, size)]


def search_closed(p: Presentation, reduced: bool = True,
                  max_members: int = DEFAULT_MAX_MEMBERS, jobs: int = 1,
                  first_witness_only: bool = False) -> SearchResult:
    """Examine members of the class of ``p`` in index order, up to ``max_members``."""
    t0 = time.perf_counter()
    cls = EncodingClass(p, reduced)
    full = class_size(p, reduced=False)
    small = class_size(p, reduced=True)
    limit = max(0, min(cls.size, max_members))
    pjson = p.to_json()

    hits: list = []
    if limit and jobs <= 1:
        hits = _scan(pjson, reduced, 0, limit, first_witness_only)
    elif limit:
        chunks = _chunks(limit, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_scan, pjson, reduced, s, e, first_witness_only)
                       for s, e in chunks]
            for fut in futures:
                got = fut.result()
                hits.extend(got)
                if first_witness_only and got:
                    for other in futures:
                        other.cancel()
                    break

    if first_witness_only and hits:
        hits = hits[:1]
        examined = hits[0] + 1
    else:
        examined = limit

    witnesses = []
    for index in hits:
        ds = cls.member(index)
        witnesses.append(Witness(index, ds, analyze_one(ds)))

    if witnesses:
        verdict = WITNESS_FOUND
    elif examined == cls.size:
        verdict = NO_CLOSED
    else:
        verdict = ABORTED
    elapsed = time.perf_counter() - t0
    log.info("examined %d of %d members in %.3fs: %s", examined, cls.size, elapsed, verdict)
    return SearchResult(p, full, small, reduced, examined, witnesses, verdict,
                        max_members, first_witness_only, elapsed)
