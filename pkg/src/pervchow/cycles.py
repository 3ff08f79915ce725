"""Incidence certificates for cycles on stratified varieties.

Patterns declare, stratum by stratum, the dimension of a cycle's incidence;
membership checks, pullback/pushforward/suspension transforms and family
certificates are pure arithmetic on those declarations.  Soundness of a
declaration is the caller's responsibility (the cone model derives its
patterns automatically).
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from .perversity import GeneralizedBound
from .strata import Stratification, product_with_fiber
from .strata import suspend as suspend_strata

# Incidence value for "the intersection is empty"; kept distinct from any
# integer dimension so emptiness survives serialization unambiguously.
EMPTY = None

Incidence = int | None


def _normalize_incidence(
    strata: Stratification, data: Mapping[int | str, Incidence], what: str
) -> dict[int, Incidence]:
    table: dict[int, Incidence] = {}
    for key, value in data.items():
        i = int(key)
        table[i] = None if value is None else int(value)
    if set(table) != set(strata.indices()):
        raise ValueError(
            f"{what} must declare exactly the stratum indices {list(strata.indices())}, "
            f"got {sorted(table)}"
        )
    return table


@dataclass(frozen=True)
class CyclePattern:
    """Declared incidence dimensions of an ``r``-cycle with each stratum.

    ``incidence[i]`` is the dimension of the intersection of the support
    with stratum ``i``; ``EMPTY`` means the intersection is empty.  Values
    never exceed ``r``.  On a nested filtration honest declarations are
    nonincreasing in ``i``; that is not enforced, because slicing a
    correspondence reports per-stratum (locally closed) dimensions which may
    legitimately jump.
    """

    strata: Stratification
    r: int
    incidence: Mapping[int, Incidence]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("cycle dimension must be nonnegative")
        table = _normalize_incidence(self.strata, self.incidence, "incidence")
        for i, v in table.items():
            if v is not None and not 0 <= v <= self.r:
                raise ValueError(
                    f"incidence {v} at stratum {i} outside 0..r={self.r} (use EMPTY for no intersection)"
                )
        object.__setattr__(self, "incidence", table)

    def incidence_at(self, i: int) -> Incidence:
        return self.incidence[i]


def empty_pattern(strata: Stratification, r: int, label: str | None = None) -> CyclePattern:
    """Pattern of a cycle missing every stratum."""
    return CyclePattern(strata, r, {i: EMPTY for i in strata.indices()}, label)


def _require_depth(strata: Stratification, bound: GeneralizedBound) -> None:
    if bound.depth != strata.depth:
        raise ValueError(
            f"depth mismatch: bound has {bound.depth} entries, stratification depth is {strata.depth}"
        )


def perversity_report(pattern: CyclePattern, bound: GeneralizedBound) -> list[tuple[int, bool, str]]:
    """Per-stratum verdicts for the membership inequality dim <= r - i + p_i."""
    _require_depth(pattern.strata, bound)
    rows: list[tuple[int, bool, str]] = []
    for i in pattern.strata.indices():
        v = pattern.incidence[i]
        if v is None:
            rows.append((i, True, f"i={i}: empty intersection passes every bound"))
            continue
        limit = pattern.r - i + bound.at(i)
        ok = v <= limit
        rows.append(
            (
                i,
                ok,
                f"i={i}: dim {v} <= r-i+p_i = {pattern.r}-{i}+{bound.at(i)} = {limit}: "
                + ("ok" if ok else "violated"),
            )
        )
    return rows


def check_perversity(pattern: CyclePattern, bound: GeneralizedBound) -> bool:
    """True iff incidence(i) <= r - i + p_i for every stratum."""
    return all(ok for _, ok, _ in perversity_report(pattern, bound))


def check_incidence_datum(pattern: CyclePattern, bounds: Mapping[int | str, int]) -> bool:
    """Membership for an incidence datum: a subset of strata with excess limits.

    Keys are stratum indices (ints or digit strings) or labels; a label
    selects every stratum carrying it.  Only listed strata are checked.
    """
    resolved: list[tuple[int, int]] = []
    known = set(pattern.strata.indices())
    for key, limit in bounds.items():
        limit = int(limit)
        if isinstance(key, int) or (isinstance(key, str) and key.lstrip("-").isdigit()):
            i = int(key)
            if i not in known:
                raise ValueError(f"unknown stratum index {i}")
            resolved.append((i, limit))
        else:
            indices = pattern.strata.labelled(str(key))
            if not indices:
                raise ValueError(f"unknown stratum label {key!r}")
            resolved.extend((i, limit) for i in indices)
    for i, limit in resolved:
        v = pattern.incidence[i]
        if v is not None and v > pattern.r - i + limit:
            return False
    return True


@dataclass(frozen=True)
class JointPattern:
    """Pairwise incidence data for two cycle patterns on one stratification.

    ``joint[i]`` declares the dimension of the triple intersection of the
    two supports with stratum ``i``; ``total`` is the dimension of the
    intersection of the supports themselves.
    """

    a: CyclePattern
    b: CyclePattern
    joint: Mapping[int, Incidence]
    total: Incidence

    def __post_init__(self) -> None:
        if self.a.strata != self.b.strata:
            raise ValueError("joint patterns need a shared stratification")
        table = _normalize_incidence(self.a.strata, self.joint, "joint")
        total = None if self.total is None else int(self.total)
        if total is not None and total < 0:
            raise ValueError("total intersection dimension must be nonnegative or EMPTY")
        for i, v in table.items():
            if v is None:
                continue
            if v < 0:
                raise ValueError(f"joint dimension at stratum {i} must be nonnegative or EMPTY")
            if total is None or v > total:
                raise ValueError(f"joint({i})={v} exceeds the declared total {total}")
            for side in (self.a, self.b):
                cap = side.incidence[i]
                if cap is None or v > cap:
                    raise ValueError(
                        f"joint({i})={v} exceeds a factor's incidence {cap} at stratum {i}"
                    )
        object.__setattr__(self, "joint", table)
        object.__setattr__(self, "total", total)


def star_report(joint: JointPattern, c: GeneralizedBound) -> list[tuple[str, bool, str]]:
    """Verdicts for the pairwise intersection condition with shift data ``c``."""
    strata = joint.a.strata
    _require_depth(strata, c)
    r, s, d = joint.a.r, joint.b.r, strata.ambient_dim
    expected = r + s - d
    rows: list[tuple[str, bool, str]] = []
    if joint.total is None:
        rows.append(("total", True, "total: empty intersection passes"))
    else:
        ok = joint.total <= expected
        rows.append(
            (
                "total",
                ok,
                f"total: dim {joint.total} <= r+s-d = {r}+{s}-{d} = {expected}: "
                + ("ok" if ok else "violated"),
            )
        )
    for i in strata.indices():
        v = joint.joint[i]
        if v is None:
            rows.append((f"i={i}", True, f"i={i}: empty intersection passes"))
            continue
        limit = expected - (i - c.at(i))
        ok = v <= limit
        rows.append(
            (
                f"i={i}",
                ok,
                f"i={i}: dim {v} <= r+s-d-(i-c_i) = {expected}-({i}-{c.at(i)}) = {limit}: "
                + ("ok" if ok else "violated"),
            )
        )
    return rows


def check_star(joint: JointPattern, c: GeneralizedBound) -> bool:
    """True iff the pair can be intersected statically with shift data ``c``."""
    return all(ok for _, ok, _ in star_report(joint, c))


def flat_pullback(pattern: CyclePattern, e: int) -> CyclePattern:
    """Pull back along a flat stratified map of relative dimension ``e``."""
    if e < 0:
        raise ValueError("relative dimension must be nonnegative")
    new_strata = product_with_fiber(pattern.strata, e)
    incidence = {
        i: (None if v is None else v + e) for i, v in pattern.incidence.items()
    }
    return CyclePattern(new_strata, pattern.r + e, incidence, pattern.label)


def proper_pushforward(pattern: CyclePattern, c: GeneralizedBound) -> CyclePattern:
    """Push forward along a proper map collapsing strata by ``c``.

    The source stratum over target stratum ``i`` has index ``i - c_i``, so
    the image's incidence at ``i`` is bounded by the input's at ``i - c_i``.
    If the input satisfies a bound ``p`` the output satisfies the transform
    of ``p`` by ``c`` (see :func:`pervchow.perversity.star_compose`).
    """
    _require_depth(pattern.strata, c)
    incidence: dict[int, Incidence] = {}
    for i in pattern.strata.indices():
        j = i - c.at(i)
        if j < 1:
            raise ValueError(f"collapse entry c_{i}={c.at(i)} exceeds {i - 1}")
        incidence[i] = pattern.incidence[j]
    return CyclePattern(pattern.strata, pattern.r, incidence, pattern.label)


def suspend_pattern(pattern: CyclePattern) -> CyclePattern:
    """Suspension: the cycle and all its incidences gain one dimension."""
    incidence = {
        i: (None if v is None else v + 1) for i, v in pattern.incidence.items()
    }
    return CyclePattern(suspend_strata(pattern.strata), pattern.r + 1, incidence, pattern.label)


def sum_patterns(a: CyclePattern, b: CyclePattern) -> CyclePattern:
    """Pattern of a sum of effective cycles: supports union, dimensions max."""
    if a.strata != b.strata or a.r != b.r:
        raise ValueError("summed patterns need equal stratification and dimension")
    incidence: dict[int, Incidence] = {}
    for i in a.strata.indices():
        x, y = a.incidence[i], b.incidence[i]
        if x is None:
            incidence[i] = y
        elif y is None:
            incidence[i] = x
        else:
            incidence[i] = max(x, y)
    return CyclePattern(a.strata, a.r, incidence)


@dataclass(frozen=True)
class FamilyCertificate:
    """Certificate for a rational equivalence through a flat family over a line.

    The certificate is structural: it records the family's fiber patterns
    and endpoints, and the checker validates the stated conditions.  It
    cannot refute geometric existence of such a family.
    """

    generic_fiber: CyclePattern
    special_fibers: tuple[tuple[str, CyclePattern], ...]
    endpoints: tuple[CyclePattern, CyclePattern]
    flat_over_line: bool
    effective_variant: CyclePattern | None = None

    def __post_init__(self) -> None:
        fibers = tuple((str(t), pat) for t, pat in self.special_fibers)
        object.__setattr__(self, "special_fibers", fibers)
        labels = [t for t, _ in fibers]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate fiber parameter labels")
        everything = [self.generic_fiber, *(p for _, p in fibers), *self.endpoints]
        if self.effective_variant is not None:
            everything.append(self.effective_variant)
        strata, r = self.generic_fiber.strata, self.generic_fiber.r
        for pat in everything:
            if pat.strata != strata or pat.r != r:
                raise ValueError("all certificate patterns must share stratification and dimension")


def check_family_certificate(cert: FamilyCertificate, bound: GeneralizedBound) -> bool:
    """Validate flatness, fiberwise membership and endpoint matching.

    With an effective variant ``E`` present the fibers at 0 and 1 must equal
    endpoint + E; otherwise they must equal the endpoints themselves.
    """
    fibers = dict(cert.special_fibers)
    for label in ("0", "1"):
        if label not in fibers:
            raise ValueError(f"missing endpoint fiber at parameter {label}")
    if not cert.flat_over_line:
        return False
    to_check = [cert.generic_fiber, *fibers.values(), *cert.endpoints]
    if cert.effective_variant is not None:
        to_check.append(cert.effective_variant)
    if not all(check_perversity(pat, bound) for pat in to_check):
        return False
    w0, w1 = cert.endpoints
    if cert.effective_variant is not None:
        w0 = sum_patterns(w0, cert.effective_variant)
        w1 = sum_patterns(w1, cert.effective_variant)
    return fibers["0"] == w0 and fibers["1"] == w1
