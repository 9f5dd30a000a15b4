"""
Permutation data sets realising a given presentation.

Generator ``x_i`` with ``k_i`` occurrences owns the block of consecutive labels
``alpha_i = (K+1, ..., K+k_i)``.  A member of the class is a choice, for every
occurrence of ``x_i`` in the relators, of a distinct label from that block;
``beta_j`` lists the labels chosen along relator ``j`` and each label inherits
the sign of its occurrence.

Members are ordered lexicographically by the choices made while scanning the
relators left to right, free labels tried in increasing order.  That order is
a mixed-radix numbering, so any member can be produced directly from its index
(``EncodingClass.member``) which is what lets a search split the class into
contiguous index ranges.

In the *reduced* class the first occurrence of each generator is pinned to the
least label of its block.  Rotating the labels of a block commutes with alpha,
so every full member is a relabelling of exactly one reduced member.
"""
from __future__ import annotations

from math import factorial, prod

from .permdata import PermutationDataSet, make_data_set
from .presentation import Presentation, PresentationError, validate_for_encoding


class EncodingError(PresentationError):
    pass


def _check(p: Presentation):
    problems = validate_for_encoding(p)
    if problems:
        raise EncodingError("cannot encode presentation: " + "; ".join(problems))


def class_size(p: Presentation, reduced: bool = True) -> int:
    _check(p)
    if reduced:
        return prod(factorial(k - 1) for k in p.occurrence_counts)
    return prod(factorial(k) for k in p.occurrence_counts)


class EncodingClass:
    """The finite class of degree-d data sets determining ``base``."""

    def __init__(self, base: Presentation, reduced: bool = True):
        _check(base)
        self.base = base
        self.reduced = reduced
        self.occurrence_counts = base.occurrence_counts
        self.degree = sum(self.occurrence_counts)
        starts = [1]
        for k in self.occurrence_counts:
            starts.append(starts[-1] + k)
        self.block_starts = tuple(starts[:-1])
        self.alpha_blocks = tuple(
            tuple(range(s, s + k)) for s, k in zip(self.block_starts, self.occurrence_counts))

        # one entry per occurrence in scan order: (generator, sign, radix)
        seen = [0] * (base.generator_count + 1)
        occ = []
        for rel in base.relators:
            for letter in rel:
                r = seen[letter.gen]
                seen[letter.gen] += 1
                k = self.occurrence_counts[letter.gen - 1]
                radix = 1 if (reduced and r == 0) else k - r
                occ.append((letter.gen, letter.sign, radix))
        self._occurrences = occ
        self._relator_lengths = [len(r) for r in base.relators]
        self.size = prod(r for _, _, r in occ)

    def __len__(self):
        return self.size

    def digits(self, index: int) -> list:
        if not 0 <= index < self.size:
            raise IndexError(f"member index {index} out of range 0..{self.size - 1}")
        out = [0] * len(self._occurrences)
        for t in range(len(self._occurrences) - 1, -1, -1):
            radix = self._occurrences[t][2]
            index, out[t] = divmod(index, radix)
        return out

    def _labels(self, digits) -> tuple:
        free = [list(block) for block in self.alpha_blocks]
        return tuple(free[gen - 1].pop(choice)
                     for (gen, _, _), choice in zip(self._occurrences, digits))

    def assignment(self, index: int) -> tuple:
        """Labels given to the occurrences, in relator scan order.

        This, not the resulting data set, identifies a member: a relator that
        is a proper power, or two relators that are rotations of each other,
        let different assignments produce the same (alpha, beta, epsilon).
        """
        return self._labels(self.digits(index))

    def _build(self, digits) -> PermutationDataSet:
        labels = self._labels(digits)
        signs = [0] * self.degree
        for (_, sign, _), label in zip(self._occurrences, labels):
            signs[label - 1] = sign
        beta, pos = [], 0
        for n in self._relator_lengths:
            beta.append(labels[pos:pos + n])
            pos += n
        return make_data_set(self.alpha_blocks, beta, signs, implicit_fixed_points=False)

    def member(self, index: int) -> PermutationDataSet:
        return self._build(self.digits(index))

    def iter_range(self, start: int = 0, stop: int | None = None):
        """Yield members ``start <= index < stop`` in order."""
        stop = self.size if stop is None else min(stop, self.size)
        if start >= stop:
            return
        digits = self.digits(start)
        radices = [r for _, _, r in self._occurrences]
        for _ in range(start, stop):
            yield self._build(digits)
            t = len(digits) - 1
            while t >= 0:
                digits[t] += 1
                if digits[t] < radices[t]:
                    break
                digits[t] = 0
                t -= 1

    def __iter__(self):
        return self.iter_range()


def encode_canonical(p: Presentation) -> PermutationDataSet:
    """Lowest-unused-label encoding: the first member of the class."""
    return EncodingClass(p, reduced=True).member(0)


def enumerate_class(p: Presentation, reduced: bool = True):
    return iter(EncodingClass(p, reduced))
