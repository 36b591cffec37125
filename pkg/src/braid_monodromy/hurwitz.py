"""Hurwitz action of Br_m on m-tuples of permutations.

The positive letter ``+i`` sends ``(..., g_i, g_{i+1}, ...)`` to
``(..., g_i g_{i+1} g_i^-1, g_i, ...)`` where juxtaposition is composition
of maps (``g_i g_{i+1}`` applies ``g_{i+1}`` first).  In the left-to-right
:class:`Permutation` product this entry is ``g_i^-1 * g_{i+1} * g_i``.  The
invariant of the action is the composition ``g_1 g_2 ... g_m``.

With these conventions a positive letter is a counterclockwise half-twist
of branch points ordered by real part, the tuple being read off loops based
far below the branch points (see :mod:`braid_monodromy.tracking`).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations as _all_perms
from typing import Iterable, Sequence

from .braids import BraidWord
from .permutations import Permutation, compose_all


class OrbitCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class HurwitzTuple:
    degree: int
    entries: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        for g in entries:
            if g.size != self.degree:
                raise ValueError(f"entry {g} is not in S_{self.degree}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Permutation:
        return self.entries[i]

    def product(self) -> Permutation:
        """The composition g_1 g_2 ... g_m (g_m applied first)."""
        return compose_all(reversed(self.entries), self.degree)

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        return sorted(g.cycle_type() for g in self.entries)

    def conjugate(self, c: Permutation) -> HurwitzTuple:
        """Relabel sheets by ``c``: each entry becomes ``c^-1 * g * c``."""
        ci = c.inverse()
        return HurwitzTuple(self.degree, tuple(ci * g * c for g in self.entries))

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.table for g in self.entries)

    def to_text(self) -> str:
        return ";".join(str(g) for g in self.entries)

    def to_json(self) -> dict:
        return {"degree": self.degree, "entries": [g.images for g in self.entries]}

    @classmethod
    def parse(cls, text: str, degree: int) -> HurwitzTuple:
        parts = [p for p in text.split(";") if p.strip()]
        return cls(degree, tuple(Permutation.parse(p, degree) for p in parts))

    @classmethod
    def from_json(cls, data: dict | str) -> HurwitzTuple:
        if isinstance(data, str):
            data = json.loads(data)
        degree = int(data["degree"])
        return cls(degree, tuple(Permutation.from_images(e) for e in data["entries"]))

    def __str__(self) -> str:
        return self.to_text()


def _move(entries: list[Permutation], letter: int) -> None:
    i = abs(letter) - 1
    g, h = entries[i], entries[i + 1]
    if letter > 0:
        entries[i], entries[i + 1] = g.inverse() * h * g, g
    else:
        entries[i], entries[i + 1] = h, h * g * h.inverse()


def hurwitz_act(b: BraidWord, t: HurwitzTuple) -> HurwitzTuple:
    if b.strands != len(t):
        raise ValueError(f"braid on {b.strands} strands cannot act on a tuple of length {len(t)}")
    entries = list(t.entries)
    for e in b.letters:
        _move(entries, e)
    return HurwitzTuple(t.degree, tuple(entries))


def stabilizes(b: BraidWord, t: HurwitzTuple) -> bool:
    return hurwitz_act(b, t) == t


def minimal_stabilizing_power(b: BraidWord, t: HurwitzTuple, max_power: int = 64) -> int | None:
    """Smallest p >= 1 with b^p stabilizing t, or None up to ``max_power``."""
    current = t
    for p in range(1, max_power + 1):
        current = hurwitz_act(b, current)
        if current == t:
            return p
    return None


def periodic_tuple(n: int, k: int) -> HurwitzTuple:
    """((12), (23), ..., (n n+1)) repeated k times, in S_{n+1}."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    block = [Permutation.transposition(a, a + 1, n + 1) for a in range(1, n + 1)]
    return HurwitzTuple(n + 1, tuple(block * k))


@dataclass
class OrbitReport:
    size: int
    members: list[HurwitzTuple]
    edges: list[tuple[int, int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "members": [m.to_text() for m in self.members],
            "edges": [list(e) for e in self.edges],
        }


def orbit_bfs(t: HurwitzTuple, cap: int = 1_000_000, with_edges: bool = True) -> OrbitReport:
    """Breadth-first closure of ``t`` under all moves +-1 ... +-(m-1).

    Members are returned sorted lexicographically by image tables; edges are
    ``(source, letter, target)`` indices into that sorted list.
    """
    m = len(t)
    letters = [s * i for i in range(1, m) for s in (1, -1)]
    seen = {t.key(): t}
    raw_edges: list[tuple[tuple, int, tuple]] = []
    queue = deque([t])
    while queue:
        cur = queue.popleft()
        for e in letters:
            entries = list(cur.entries)
            _move(entries, e)
            nxt = HurwitzTuple(cur.degree, tuple(entries))
            key = nxt.key()
            if key not in seen:
                if len(seen) >= cap:
                    raise OrbitCapExceeded(f"Hurwitz orbit exceeds cap of {cap} tuples")
                seen[key] = nxt
                queue.append(nxt)
            if with_edges:
                raw_edges.append((cur.key(), e, key))
    order = sorted(seen)
    index = {key: i for i, key in enumerate(order)}
    edges = sorted((index[a], e, index[b]) for a, e, b in raw_edges)
    return OrbitReport(len(order), [seen[k] for k in order], edges)


def find_conjugator(t: HurwitzTuple, target: HurwitzTuple) -> Permutation | None:
    """A sheet relabelling c with ``t.conjugate(c) == target``, if any.

    Brute force over S_degree; intended for covering degrees up to about 8.
    """
    if t.degree != target.degree or len(t) != len(target):
        return None
    for images in _all_perms(range(t.degree)):
        c = Permutation(images)
        if t.conjugate(c) == target:
            return c
    return None


def tuple_from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> HurwitzTuple:
    """Tuple of transpositions/cycles, one cycle per entry."""
    return HurwitzTuple(degree, tuple(Permutation.from_cycles([c], degree) for c in cycles))


def hurwitz_path(
    source: HurwitzTuple, target: HurwitzTuple, cap: int = 1_000_000
) -> tuple[BraidWord, Permutation] | None:
    """A braid b and relabelling c with ``hurwitz_act(b, source).conjugate(c) == target``.

    Breadth-first, so b is a shortest such word.  Returns None if the target
    class is not in the orbit.
    """
    if source.degree != target.degree or len(source) != len(target):
        return None
    m = len(source)
    wanted: dict[tuple, Permutation] = {}
    for images in _all_perms(range(target.degree)):
        c = Permutation(images)
        # t.conjugate(c) == target  <=>  t == target.conjugate(c^-1)
        wanted.setdefault(target.conjugate(c.inverse()).key(), c)
    letters = [s * i for i in range(1, m) for s in (1, -1)]
    parent: dict[tuple, tuple[tuple, int] | None] = {source.key(): None}
    queue = deque([source])
    while queue:
        cur = queue.popleft()
        key = cur.key()
        if key in wanted:
            word: list[int] = []
            while parent[key] is not None:
                key, e = parent[key]
                word.append(e)
            return BraidWord(m, tuple(reversed(word))), wanted[cur.key()]
        for e in letters:
            entries = list(cur.entries)
            _move(entries, e)
            nxt = HurwitzTuple(cur.degree, tuple(entries))
            nk = nxt.key()
            if nk not in parent:
                if len(parent) >= cap:
                    raise OrbitCapExceeded(f"Hurwitz orbit exceeds cap of {cap} tuples")
                parent[nk] = (key, e)
                queue.append(nxt)
    return None
