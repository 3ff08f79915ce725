"""Incidence calculus for generalized cocycles (correspondences over strata).

A correspondence of codimension ``t`` in ``X x Y`` is generically
equidimensional over ``X``; its failure over each stratum is a per-stratum
fiber-dimension excess.  Join, pushforward, hyperplane slicing and the cap
product act on these excess profiles by exact arithmetic.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .cycles import CyclePattern, Incidence, JointPattern
from .perversity import GeneralizedBound
from .strata import Stratification


@dataclass(frozen=True)
class CocyclePattern:
    """Fiber-dimension excess of a correspondence over each stratum.

    Fibers over the open stratum have dimension ``target_dim - t``; over a
    point of stratum ``i`` the dimension may exceed that by at most
    ``excess[i]``.  Excess profiles need not be monotone (they are read per
    locally closed stratum), but can never push a fiber past ``target_dim``.
    """

    strata: Stratification
    t: int
    target_dim: int
    excess: Mapping[int, int]

    def __post_init__(self) -> None:
        if not 0 <= self.t <= self.target_dim:
            raise ValueError(
                f"codimension t={self.t} must lie in 0..target_dim={self.target_dim}"
            )
        table = {int(i): int(v) for i, v in self.excess.items()}
        if set(table) != set(self.strata.indices()):
            raise ValueError(
                f"excess must declare exactly the stratum indices {list(self.strata.indices())}"
            )
        for i, v in table.items():
            if v < 0:
                raise ValueError(f"excess at stratum {i} must be nonnegative")
            if v > self.t:
                raise ValueError(
                    f"excess {v} at stratum {i} pushes the fiber past the target dimension"
                )
        object.__setattr__(self, "excess", table)

    def excess_at(self, i: int) -> int:
        return self.excess[i]


def cocycle_report(pattern: CocyclePattern, bound: GeneralizedBound) -> list[tuple[int, bool, str]]:
    if bound.depth != pattern.strata.depth:
        raise ValueError(
            f"depth mismatch: bound has {bound.depth} entries, stratification depth is {pattern.strata.depth}"
        )
    rows = []
    for i in pattern.strata.indices():
        e = pattern.excess[i]
        ok = e <= bound.at(i)
        rows.append(
            (i, ok, f"i={i}: excess {e} <= p_i = {bound.at(i)}: " + ("ok" if ok else "violated"))
        )
    return rows


def check_cocycle(pattern: CocyclePattern, bound: GeneralizedBound) -> bool:
    """True iff the fiber excess over every stratum is within the bound."""
    return all(ok for _, ok, _ in cocycle_report(pattern, bound))


def join(a: CocyclePattern, b: CocyclePattern) -> CocyclePattern:
    """Fiberwise linear join of two projective-space valued cocycles.

    Requires codimension to match the target dimension on both sides (the
    cup-product situation).  Fibers of a join are joins of fibers, so
    dimensions add plus one and excess profiles add exactly.
    """
    if a.strata != b.strata:
        raise ValueError("joined cocycles need a shared stratification")
    for side, name in ((a, "first"), (b, "second")):
        if side.t != side.target_dim:
            raise ValueError(
                f"{name} factor must take values in a projective space of its own codimension"
            )
    excess = {i: a.excess[i] + b.excess[i] for i in a.strata.indices()}
    return CocyclePattern(a.strata, a.t + b.t, a.target_dim + b.target_dim + 1, excess)


def push_closed_immersion(pattern: CocyclePattern, c: int) -> CocyclePattern:
    """Push forward along a codimension-``c`` closed immersion of targets."""
    if c < 0:
        raise ValueError("codimension must be nonnegative")
    return CocyclePattern(pattern.strata, pattern.t + c, pattern.target_dim + c, pattern.excess)


def slice_with_hyperplanes(pattern: CocyclePattern, count: int) -> CyclePattern:
    """Slice a projective-space valued cocycle with ``t`` generic hyperplanes.

    The result is a cycle of dimension ``d - t`` on the base whose incidence
    with stratum ``i`` is ``d - i + excess(i) - t`` (EMPTY when negative,
    capped at the ambient bound ``d - t``).  Genericity of the hyperplanes is
    assumed, never certified.
    """
    if count != pattern.t:
        raise ValueError(f"need exactly t={pattern.t} hyperplanes, got {count}")
    if pattern.target_dim != pattern.t:
        raise ValueError("slicing needs a cocycle valued in a projective space of its codimension")
    d, t = pattern.strata.ambient_dim, pattern.t
    if t > d:
        raise ValueError(
            f"slicing a codimension-{t} cocycle on a {d}-fold would land in negative dimension"
        )
    r = d - t
    incidence: dict[int, Incidence] = {}
    for i in pattern.strata.indices():
        v = d - i + pattern.excess[i] - t
        incidence[i] = None if v < 0 else min(v, r)
    return CyclePattern(pattern.strata, r, incidence)


def slice_against(a: CocyclePattern, b: CyclePattern) -> JointPattern:
    """Properness certificate of a sliced cocycle against a chosen cycle.

    Generic hyperplanes make the slice meet the given cycle's part of each
    stratum with codimension at least ``t - excess(i)``; the returned joint
    pattern records those bounds.  It satisfies the pairwise intersection
    condition at the sum of any profiles the two inputs satisfy.
    """
    if a.strata != b.strata:
        raise ValueError("slice certificate needs a shared stratification")
    sliced = slice_with_hyperplanes(a, a.t)
    t = a.t
    total: Incidence = b.r - t if b.r >= t else None
    joint: dict[int, Incidence] = {}
    for i in a.strata.indices():
        base = b.incidence[i]
        cut = sliced.incidence[i]
        if base is None or cut is None or total is None:
            joint[i] = None
            continue
        raw = base + a.excess[i] - t
        joint[i] = None if raw < 0 else min(raw, cut, base, total)
    return JointPattern(sliced, b, joint, total)


def cap_pattern(a: CocyclePattern, b: CyclePattern) -> CyclePattern:
    """Cap a codimension-``t`` cocycle with an ``r``-cycle pattern.

    Realized as: restrict the correspondence over the cycle, then slice with
    ``t`` generic hyperplanes.  Incidences combine additively, so a cocycle
    within excess ``p`` capped with a cycle within ``q`` lands within
    ``p + q``.
    """
    if a.strata != b.strata:
        raise ValueError("cap factors need a shared stratification")
    if a.target_dim != a.t:
        raise ValueError("cap needs a cocycle valued in a projective space of its codimension")
    if b.r < a.t:
        raise ValueError(f"cycle dimension {b.r} is below the cocycle codimension {a.t}")
    t = a.t
    r = b.r - t
    incidence: dict[int, Incidence] = {}
    for i in a.strata.indices():
        base = b.incidence[i]
        if base is None:
            incidence[i] = None
            continue
        v = base + a.excess[i] - t
        incidence[i] = None if v < 0 else min(v, r)
    return CyclePattern(a.strata, r, incidence)


def morphism_fiber_pattern(
    strata: Stratification, fiber_dims: Mapping[int | str, int], n: int
) -> CocyclePattern:
    """Cocycle pattern of the transposed graph of a dominant morphism.

    ``fiber_dims[i]`` is the maximal fiber dimension over points of stratum
    ``i`` of a dominant ``f: Y -> X`` with ``dim Y = n``; the generic fiber
    has dimension ``n - d`` and the graph is a codimension-``d``
    correspondence whose excess is the fiber jump.
    """
    d = strata.ambient_dim
    if n < d:
        raise ValueError(f"a dominant morphism needs dim Y = {n} >= dim X = {d}")
    generic = n - d
    excess = {}
    for key, dim in fiber_dims.items():
        i = int(key)
        dim = int(dim)
        if dim < generic:
            raise ValueError(
                f"fiber dimension {dim} at stratum {i} below the generic value {generic}"
            )
        excess[i] = dim - generic
    return CocyclePattern(strata, d, n, excess)


@dataclass(frozen=True)
class RankProfile:
    """Generic rank of a sheaf together with its per-stratum rank jumps."""

    generic_rank: int
    stratum_ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.generic_rank < 0:
            raise ValueError("generic rank must be nonnegative")
        ranks = tuple(int(x) for x in self.stratum_ranks)
        object.__setattr__(self, "stratum_ranks", ranks)
        for i, x in enumerate(ranks, start=1):
            if x < self.generic_rank:
                raise ValueError(
                    f"stratum rank {x} at index {i} below the generic rank {self.generic_rank}"
                )
        if any(b < a for a, b in zip(ranks, ranks[1:])):
            raise ValueError("stratum ranks must be nondecreasing")


def rank_to_incidence(profile: RankProfile) -> tuple[tuple[int, ...], GeneralizedBound]:
    """Stratum indices and incidence bound determined by a rank profile.

    Stratum ``i`` is where the rank jumps to at least generic + ``p_i``; the
    bound is the jump profile itself (jumps need not step by one, so this is
    a plain bound).  Refining the stratification is left to the caller.
    """
    indices = tuple(range(1, len(profile.stratum_ranks) + 1))
    bound = GeneralizedBound(x - profile.generic_rank for x in profile.stratum_ranks)
    return indices, bound
