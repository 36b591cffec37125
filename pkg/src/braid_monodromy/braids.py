"""Exact arithmetic in the Artin braid group Br_m.

A braid is a :class:`BraidWord`: a strand count and a tuple of signed
letters, ``+i`` for sigma_i and ``-i`` for its inverse.  Words act left to
right.  Equality in the group is decided by Dehornoy's handle reduction.

Three expansions of the band generator sigma_{i,j} are available:

``"band"``
    (s_{j-1} ... s_{i+1}) s_i (s_{i+1}^-1 ... s_{j-1}^-1); the band passes
    on the positive side of the strands strictly between i and j.
``"prime"``
    s_i^-1 ... s_{j-2}^-1 s_{j-1} s_{j-2} ... s_i.  As a braid this is the
    same element as ``"band"``, only spelled differently.
``"mirror"``
    (s_{j-1}^-1 ... s_{i+1}^-1) s_i (s_{i+1} ... s_{j-1}); the band of the
    opposite chirality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .permutations import Permutation

BAND_STYLES = ("band", "prime", "mirror")

_BAND_RE = re.compile(r"^b\(\s*(\d+)\s*,\s*(\d+)\s*\)(?:\^\(?\s*(-?\d+)\s*\)?)?$")


class HandleReductionError(RuntimeError):
    """Raised when handle reduction exceeds its step budget."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple(int(e) for e in self.letters)
        for e in letters:
            if e == 0 or abs(e) >= self.strands:
                raise ValueError(f"letter {e} is not a generator of Br_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else inverse(self)
        return BraidWord(self.strands, base.letters * abs(k))

    def inverse(self) -> BraidWord:
        return inverse(self)

    def conjugate_by(self, c: BraidWord) -> BraidWord:
        """The word ``c * self * c^-1``."""
        return compose(compose(c, self), inverse(c))

    def free_reduce(self) -> BraidWord:
        return BraidWord(self.strands, tuple(free_reduce(self.letters)))

    def permutation(self) -> Permutation:
        return permutation_image(self)

    def exponent_sum(self) -> int:
        return exponent_sum(self)

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.letters)


@dataclass(frozen=True)
class BandGenerator:
    i: int
    j: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j:
            raise ValueError(f"band indices must satisfy 1 <= i < j, got ({self.i}, {self.j})")
        if self.exponent == 0:
            raise ValueError("band exponent must be nonzero")

    def to_word(self, strands: int, style: str = "band") -> BraidWord:
        return expand_band(self.i, self.j, strands, self.exponent, style)

    def __str__(self) -> str:
        return f"b({self.i},{self.j})^{self.exponent}"


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: Br_{a.strands} vs Br_{b.strands}")


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-e for e in reversed(a.letters)))


def free_reduce(letters: Iterable[int]) -> list[int]:
    out: list[int] = []
    for e in letters:
        if out and out[-1] == -e:
            out.pop()
        else:
            out.append(e)
    return out


def _band_letters(i: int, j: int, style: str) -> list[int]:
    if style == "band":
        pre = list(range(j - 1, i, -1))
        return pre + [i] + [-x for x in reversed(pre)]
    if style == "mirror":
        pre = list(range(j - 1, i, -1))
        return [-x for x in pre] + [i] + list(reversed(pre))
    if style == "prime":
        return [-x for x in range(i, j - 1)] + [j - 1] + list(range(j - 2, i - 1, -1))
    raise ValueError(f"unknown band style {style!r}; expected one of {BAND_STYLES}")


def expand_band(i: int, j: int, strands: int, exponent: int = 1, style: str = "band") -> BraidWord:
    """Expand sigma_{i,j}^exponent into Artin letters, freely reduced."""
    if not 1 <= i < j:
        raise ValueError(f"band indices must satisfy 1 <= i < j, got ({i}, {j})")
    if j > strands:
        raise ValueError(f"band ({i},{j}) does not fit in Br_{strands}")
    if exponent == 0:
        return BraidWord(strands)
    one = _band_letters(i, j, style)
    if exponent < 0:
        one = [-e for e in reversed(one)]
    return BraidWord(strands, tuple(free_reduce(one * abs(exponent))))


def band_to_word(g: BandGenerator, strands: int) -> BraidWord:
    return expand_band(g.i, g.j, strands, g.exponent, "band")


def band_prime_to_word(i: int, j: int, strands: int) -> BraidWord:
    if not 1 <= i < j <= strands:
        raise ValueError(f"need 1 <= i < j <= {strands}, got ({i}, {j})")
    return BraidWord(strands, tuple(_band_letters(i, j, "prime")))


def permutation_image(a: BraidWord) -> Permutation:
    table = list(range(a.strands))
    # table[p] = where the strand starting at position p currently sits
    pos_to_strand = list(range(a.strands))
    for e in a.letters:
        i = abs(e) - 1
        pos_to_strand[i], pos_to_strand[i + 1] = pos_to_strand[i + 1], pos_to_strand[i]
    for pos, strand in enumerate(pos_to_strand):
        table[strand] = pos
    return Permutation(tuple(table))


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in a.letters)


def _find_first_handle(w: Sequence[int], start: int, last: dict[int, int]) -> tuple[int, int] | None:
    # `last` must hold, for every generator, its most recent index before `start`.
    for j in range(start, len(w)):
        g = abs(w[j])
        k = last.get(g)
        if k is not None and w[k] == -w[j] and last.get(g - 1, -1) < k:
            return k, j
        last[g] = j
    return None


def handle_reduce(letters: Sequence[int], max_steps: int = 1_000_000) -> list[int]:
    """Reduce a braid word until it contains no handle.

    Always reduces the handle whose right end comes first; such a handle
    contains no nested handle, so it is permitted and the process
    terminates.  The result is empty iff the input is the trivial braid.
    """
    w = list(letters)
    start = 0
    for _ in range(max_steps):
        last: dict[int, int] = {}
        for idx in range(start):
            last[abs(w[idx])] = idx
        found = _find_first_handle(w, start, last)
        if found is None:
            return w
        k, j = found
        g = abs(w[k])
        e = 1 if w[k] > 0 else -1
        middle: list[int] = []
        for x in w[k + 1 : j]:
            if abs(x) == g + 1:
                d = 1 if x > 0 else -1
                middle.extend((-e * (g + 1), d * g, e * (g + 1)))
            else:
                middle.append(x)
        w = w[:k] + middle + w[j + 1 :]
        # no handle ends inside w[:k], and those letters are untouched
        start = k
    raise HandleReductionError(f"handle reduction exceeded {max_steps} steps")


def is_trivial(a: BraidWord) -> bool:
    if not permutation_image(a).is_identity() or exponent_sum(a) != 0:
        return False
    return not handle_reduce(a.letters)


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    _check_same(a, b)
    if permutation_image(a) != permutation_image(b) or exponent_sum(a) != exponent_sum(b):
        return False
    return not handle_reduce(a.letters + inverse(b).letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse ``"1 -2 1"``; tokens ``b(i,j)^e`` expand as bands.

    Commas are accepted as separators between integer letters.
    """
    letters: list[int] = []
    for tok in re.split(r"[\s;]+", text.strip()):
        if not tok:
            continue
        m = _BAND_RE.match(tok)
        if m:
            i, j = int(m.group(1)), int(m.group(2))
            e = int(m.group(3)) if m.group(3) is not None else 1
            letters.extend(expand_band(i, j, strands, e).letters)
            continue
        for part in tok.split(","):
            if part:
                try:
                    letters.append(int(part))
                except ValueError:
                    raise ValueError(f"malformed braid token {part!r}") from None
    return BraidWord(strands, tuple(letters))


def word_from_letters(strands: int, letters: Iterable[int]) -> BraidWord:
    return BraidWord(strands, tuple(letters))
