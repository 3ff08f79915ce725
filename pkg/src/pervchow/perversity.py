"""Perversity sequences and per-stratum incidence bounds."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


class GeneralizedBound:
    """A nondecreasing sequence of nonnegative excess bounds, one per stratum.

    Entries are addressed 1-based: entry ``i`` bounds the allowed excess of
    incidence with the ``i``-th stratum.  Sums of perversities, pushforward
    transforms and rank-jump profiles live here; unlike a :class:`Perversity`,
    steps larger than one are allowed.  An empty bound is permitted (it
    matches a smooth variety with no declared strata).
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[int]) -> None:
        values = tuple(int(v) for v in entries)
        if any(v < 0 for v in values):
            raise ValueError(f"bound entries must be nonnegative: {list(values)}")
        if any(b < a for a, b in zip(values, values[1:])):
            raise ValueError(f"bound entries must be nondecreasing: {list(values)}")
        self.entries = values

    @property
    def depth(self) -> int:
        return len(self.entries)

    def at(self, i: int) -> int:
        """Entry at 1-based index ``i``."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(f"index {i} out of range 1..{len(self.entries)}")
        return self.entries[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneralizedBound):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.entries)})"


class Perversity(GeneralizedBound):
    """A bound starting at 0 whose steps are 0 or 1 (hence p_i <= i - 1)."""

    __slots__ = ()

    def __init__(self, entries: Iterable[int]) -> None:
        super().__init__(entries)
        if not self.entries:
            raise ValueError("a perversity needs at least one entry")
        if self.entries[0] != 0:
            raise ValueError(f"p_1 must be 0: {list(self.entries)}")
        for a, b in zip(self.entries, self.entries[1:]):
            if b - a not in (0, 1):
                raise ValueError(f"perversity steps must be 0 or 1: {list(self.entries)}")


def make_perversity(entries: Iterable[int]) -> Perversity:
    """Validate ``entries`` as a perversity."""
    return Perversity(entries)


def zero(d: int) -> Perversity:
    """The zero perversity of depth ``d``."""
    if d < 1:
        raise ValueError(f"depth must be at least 1, got {d}")
    return Perversity([0] * d)


def top(d: int) -> Perversity:
    """The top perversity p_i = i - 1 of depth ``d``."""
    if d < 1:
        raise ValueError(f"depth must be at least 1, got {d}")
    return Perversity(range(d))


def _require_same_depth(a: GeneralizedBound, b: GeneralizedBound) -> None:
    if a.depth != b.depth:
        raise ValueError(f"depth mismatch: {a.depth} vs {b.depth}")


def add(a: GeneralizedBound, b: GeneralizedBound) -> GeneralizedBound:
    """Entrywise sum.  The result is a plain bound; unit steps may fail."""
    _require_same_depth(a, b)
    return GeneralizedBound(x + y for x, y in zip(a, b))


def star_compose(p: GeneralizedBound, c: GeneralizedBound) -> GeneralizedBound:
    """Pushforward transform of ``p`` along collapse data ``c``.

    Entry ``i`` of the result is ``p[i - c_i] + c_i``.  The shifted index
    must stay in range, which every perversity ``c`` guarantees.
    """
    _require_same_depth(p, c)
    shifted = []
    for i in range(1, p.depth + 1):
        j = i - c.at(i)
        if j < 1:
            raise ValueError(f"collapse entry c_{i}={c.at(i)} exceeds {i - 1}")
        shifted.append(p.at(j) + c.at(i))
    return GeneralizedBound(shifted)


def leq(a: GeneralizedBound, b: GeneralizedBound) -> bool:
    """Entrywise comparison; the partial order of strictness of bounds."""
    _require_same_depth(a, b)
    return all(x <= y for x, y in zip(a, b))
