"""Permutations of ``{1, ..., m}`` stored as image tables.

Products compose left to right: ``p * q`` applies ``p`` first, then ``q``.
This matches the way braid words act, so the permutation image of a word is
the product of the transpositions of its letters in reading order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{1, ..., size}``.

    ``table[i]`` is the image of ``i + 1`` minus one (0-based storage); use
    :attr:`images` for the 1-based image table.
    """

    table: tuple[int, ...]

    def __post_init__(self) -> None:
        table = tuple(int(x) for x in self.table)
        if sorted(table) != list(range(len(table))):
            raise ValueError(f"not a bijection on 0..{len(table) - 1}: {table}")
        object.__setattr__(self, "table", table)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(size)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """Build from a 1-based image table, e.g. ``[2, 1, 3]`` for (1 2)."""
        return cls(tuple(int(x) - 1 for x in images))

    @classmethod
    def transposition(cls, i: int, j: int, size: int) -> Permutation:
        if not (1 <= i <= size and 1 <= j <= size) or i == j:
            raise ValueError(f"bad transposition ({i} {j}) in S_{size}")
        table = list(range(size))
        table[i - 1], table[j - 1] = j - 1, i - 1
        return cls(tuple(table))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], size: int) -> Permutation:
        table = list(range(size))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = [int(c) for c in cycle]
            if any(not 1 <= c <= size for c in cycle):
                raise ValueError(f"cycle {cycle} out of range for S_{size}")
            if seen.intersection(cycle) or len(set(cycle)) != len(cycle):
                raise ValueError("cycles must be disjoint")
            seen.update(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                table[a - 1] = b - 1
        return cls(tuple(table))

    @classmethod
    def parse(cls, text: str, size: int) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 4)"`` or ``"()"``."""
        text = text.strip()
        if not text:
            raise ValueError("empty permutation text")
        cycles = []
        rest = _CYCLE_RE.sub("", text).strip()
        if rest:
            raise ValueError(f"malformed cycle notation: {text!r}")
        for body in _CYCLE_RE.findall(text):
            parts = body.replace(",", " ").split()
            if parts:
                cycles.append([int(p) for p in parts])
        return cls.from_cycles(cycles, size)

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def images(self) -> list[int]:
        return [x + 1 for x in self.table]

    def __call__(self, point: int) -> int:
        return self.table[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(other.table[x] for x in self.table))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, x in enumerate(self.table):
            inv[x] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.table))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = [False] * self.size
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x + 1)
                x = self.table[x]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.size - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, x in enumerate(self.table) if i != x)

    def commutes_with(self, other: Permutation) -> bool:
        return self * other == other * self

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(c) for c in cyc) + ")" for cyc in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def compose_all(perms: Iterable[Permutation], size: int) -> Permutation:
    """Left-to-right product of ``perms``; identity when empty."""
    out = Permutation.identity(size)
    for p in perms:
        out = out * p
    return out
