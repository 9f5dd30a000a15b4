"""
Finite group presentations: data model, text parser and trivial reduction.

Text form::

    < x, y | x y x^-1 y^-1, x^3 >

Exponents are expanded into runs of single letters at parse time, so the
stored relators are words in letters of sign +1 / -1 only.  The literal ``1``
may be used for an empty relator.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class PresentationError(ValueError):
    """Raised for malformed or inconsistent presentations."""


class PresentationSyntaxError(PresentationError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, order=True)
class Letter:
    gen: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PresentationError(f"letter sign must be +1 or -1, got {self.sign}")
        if self.gen < 1:
            raise PresentationError(f"generator index must be >= 1, got {self.gen}")

    def inverse(self) -> Letter:
        return Letter(self.gen, -self.sign)


Relator = tuple  # tuple[Letter, ...]


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple = ()
    generator_names: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        rels = tuple(tuple(Letter(*l) if not isinstance(l, Letter) else l for l in r)
                     for r in self.relators)
        object.__setattr__(self, "relators", rels)
        if self.generator_names is not None:
            object.__setattr__(self, "generator_names", tuple(self.generator_names))
        if self.generator_count < 1:
            raise PresentationError("a presentation needs at least one generator")
        if self.generator_names is not None and len(self.generator_names) != self.generator_count:
            raise PresentationError("generator_names length does not match generator_count")
        for j, rel in enumerate(rels, 1):
            for letter in rel:
                if letter.gen > self.generator_count:
                    raise PresentationError(
                        f"relator {j} uses generator {letter.gen} but only "
                        f"{self.generator_count} are declared")

    @property
    def names(self) -> tuple:
        if self.generator_names is not None:
            return self.generator_names
        return tuple(f"x{i}" for i in range(1, self.generator_count + 1))

    @property
    def occurrence_counts(self) -> tuple:
        """k_i for each generator: occurrences across all relators, either sign."""
        counts = Counter(letter.gen for rel in self.relators for letter in rel)
        return tuple(counts.get(i, 0) for i in range(1, self.generator_count + 1))

    @property
    def degree(self) -> int:
        return sum(len(rel) for rel in self.relators)

    def with_names(self, names: Sequence[str] | None) -> Presentation:
        return Presentation(self.generator_count, self.relators, names)

    def to_text(self) -> str:
        return render_presentation(self)

    def to_json(self) -> dict:
        return {
            "generators": list(self.names),
            "relators": [[[l.gen, l.sign] for l in rel] for rel in self.relators],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Presentation:
        try:
            names = list(obj["generators"])
            relators = [[Letter(int(g), int(s)) for g, s in rel] for rel in obj["relators"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise PresentationError(f"malformed presentation JSON: {exc}") from exc
        if len(set(names)) != len(names):
            raise PresentationError("duplicate generator name")
        return cls(len(names), relators, names)

    def __str__(self):
        return render_presentation(self)


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<sym>[<>|,^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PresentationSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PresentationSyntaxError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Presentation:
        self.take("sym", "<")
        names = [self.take("name")]
        while self.peek()[1] == ",":
            self.take()
            names.append(self.take("name"))
        index = {}
        for _, name, pos in names:
            if name in index:
                raise PresentationSyntaxError(f"duplicate generator name {name!r}", pos)
            index[name] = len(index) + 1
        self.take("sym", "|")
        relators = []
        if self.peek()[1] != ">":
            relators.append(self.relator(index))
            while self.peek()[1] == ",":
                self.take()
                relators.append(self.relator(index))
        self.take("sym", ">")
        self.take("end")
        return Presentation(len(index), relators, [n for _, n, _ in names])

    def relator(self, index):
        kind, value, pos = self.peek()
        if kind == "int" and value == "1":
            self.take()
            return []
        letters = []
        self.term(index, letters)
        while self.peek()[0] == "name":
            self.term(index, letters)
        return letters

    def term(self, index, letters):
        _, name, pos = self.take("name")
        if name not in index:
            raise PresentationSyntaxError(f"undeclared generator {name!r}", pos)
        power = 1
        if self.peek()[1] == "^":
            self.take()
            power = int(self.take("int")[1])
        sign = 1 if power >= 0 else -1
        letters.extend([Letter(index[name], sign)] * abs(power))


def parse_presentation(text: str) -> Presentation:
    """Parse ``< gens | relators >``.  No reduction is applied."""
    return _Parser(text).parse()


def render_presentation(p: Presentation) -> str:
    names = p.names
    rels = []
    for rel in p.relators:
        if not rel:
            rels.append("1")
        else:
            rels.append(" ".join(names[l.gen - 1] + ("" if l.sign > 0 else "^-1") for l in rel))
    body = ", ".join(rels)
    return f"< {', '.join(names)} | {body} >" if body else f"< {', '.join(names)} | >"


def reduce_word(word: Iterable[Letter]) -> tuple:
    # stack-based free reduction; equivalent to cancelling to a fixed point
    out: list = []
    for letter in word:
        if out and out[-1].gen == letter.gen and out[-1].sign == -letter.sign:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def trivially_reduce(p: Presentation) -> Presentation:
    """Cancel adjacent ``x x^-1`` pairs in every relator (not cyclically)."""
    return Presentation(p.generator_count, [reduce_word(r) for r in p.relators],
                        p.generator_names)


def is_trivially_reduced(p: Presentation) -> bool:
    return all(reduce_word(r) == r for r in p.relators)


def validate_for_encoding(p: Presentation) -> list:
    """Return human-readable problems that block encoding; empty if none."""
    diagnostics = []
    names = p.names
    for i, k in enumerate(p.occurrence_counts, 1):
        if k == 0:
            diagnostics.append(f"generator {names[i - 1]} unused (k_{i} = 0)")
    for j, rel in enumerate(p.relators, 1):
        if not rel:
            diagnostics.append(f"empty relator {j}")
    return diagnostics


def cyclically_equal(u: Sequence, v: Sequence) -> bool:
    """True when word v is a cyclic rotation of word u."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        return False
    if not u:
        return True
    return any(u[k:] + u[:k] == v for k in range(len(u)))


def equal_up_to_rotation(p: Presentation, q: Presentation) -> bool:
    return (p.generator_count == q.generator_count
            and len(p.relators) == len(q.relators)
            and all(cyclically_equal(a, b) for a, b in zip(p.relators, q.relators)))
