"""Stratification descriptors and the constructions applied to them.

Strata are dimension bookkeeping only: we record, for each 1-based index
``i``, a lower bound on the codimension of the ``i``-th closed stratum.
The geometric content of a computation lives in the incidence patterns
(:mod:`pervchow.cycles`, :mod:`pervchow.cocycles`) and in the cone model
(:mod:`pervchow.cones`).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class StratumSpec:
    """One closed stratum: 1-based index, codimension lower bound, label."""

    index: int
    codim_lower_bound: int
    label: str = ""


@dataclass(frozen=True)
class ModelTag:
    """Construction marker for a stratification descriptor.

    ``kind`` is one of ``generic``, ``isolated_vertex`` or ``product``;
    products remember the base tag and the fiber dimension.  The tag records
    how the descriptor was built and is carried through transforms unchanged.
    """

    kind: str
    fiber_dim: int | None = None
    base: "ModelTag | None" = None

    def __post_init__(self) -> None:
        if self.kind not in ("generic", "isolated_vertex", "product"):
            raise ValueError(f"unknown model kind {self.kind!r}")
        if (self.kind == "product") != (self.fiber_dim is not None):
            raise ValueError("product tags carry fiber_dim; other tags must not")
        if (self.kind == "product") != (self.base is not None):
            raise ValueError("product tags carry a base tag; other tags must not")


GENERIC = ModelTag("generic")
ISOLATED_VERTEX = ModelTag("isolated_vertex")


@dataclass(frozen=True)
class Stratification:
    """Depth-``k`` filtration descriptor of a ``d``-dimensional variety."""

    ambient_dim: int
    strata: tuple[StratumSpec, ...]
    model: ModelTag = GENERIC

    def __post_init__(self) -> None:
        object.__setattr__(self, "strata", tuple(self.strata))
        if self.ambient_dim < 0:
            raise ValueError("ambient dimension must be nonnegative")
        if len(self.strata) > self.ambient_dim:
            raise ValueError(
                f"depth {len(self.strata)} exceeds ambient dimension {self.ambient_dim}"
            )
        for pos, s in enumerate(self.strata, start=1):
            if s.index != pos:
                raise ValueError(f"stratum indices must run 1..depth, got {s.index} at position {pos}")
            if s.codim_lower_bound < s.index:
                raise ValueError(
                    f"stratum {s.index} codimension bound {s.codim_lower_bound} is below its index"
                )
            if s.codim_lower_bound > self.ambient_dim:
                raise ValueError(
                    f"stratum {s.index} codimension bound {s.codim_lower_bound} exceeds the ambient dimension"
                )

    @property
    def depth(self) -> int:
        return len(self.strata)

    def indices(self) -> tuple[int, ...]:
        return tuple(s.index for s in self.strata)

    def labelled(self, label: str) -> tuple[int, ...]:
        """Indices of all strata carrying ``label``."""
        return tuple(s.index for s in self.strata if s.label == label)


def isolated_vertex(d: int) -> Stratification:
    """Every stratum is a single point: codimension bound ``d`` at each index."""
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got {d}")
    strata = tuple(StratumSpec(i, d, "vertex") for i in range(1, d + 1))
    return Stratification(d, strata, ISOLATED_VERTEX)


def product_with_fiber(s: Stratification, fiber_dim: int) -> Stratification:
    """Cross with a smooth fiber: codimension bounds persist, the ambient grows.

    Iterated products flatten, so crossing with fibers of dimensions ``m``
    and then ``n`` yields the same descriptor as crossing once with ``m + n``.
    """
    if fiber_dim < 0:
        raise ValueError(f"fiber dimension must be nonnegative, got {fiber_dim}")
    if fiber_dim == 0:
        return s
    if s.model.kind == "product":
        tag = ModelTag("product", fiber_dim=s.model.fiber_dim + fiber_dim, base=s.model.base)
    else:
        tag = ModelTag("product", fiber_dim=fiber_dim, base=s.model)
    return Stratification(s.ambient_dim + fiber_dim, s.strata, tag)


def suspend(s: Stratification) -> Stratification:
    """Suspension: every stratum gains a dimension along with the ambient."""
    return Stratification(s.ambient_dim + 1, s.strata, s.model)
