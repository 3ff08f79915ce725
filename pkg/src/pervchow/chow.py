"""Graded integer presentations of intersection rings of smooth bases.

A presentation lists an ordered integer basis per codimension together with
structure constants; multiplication is their bilinear extension.  Rings are
inputs here (classical presentations ship as built-ins), never computed from
defining equations.
"""

from __future__ import annotations

import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .abgroup import FpAbelianGroup

Combo = dict[str, int]


class ChowRingPresentation:
    """Structure constants of a graded commutative ring on an explicit basis.

    ``basis[k]`` lists the symbols spanning codimension ``k`` for
    ``0 <= k <= dim``; codimension 0 must be spanned by a single unit symbol.
    ``products`` maps symbol pairs to integer combinations in the sum
    codimension: omitted pairs multiply to zero, the unit row is filled in
    automatically, and commutativity plus associativity over all basis
    triples are checked at construction.

    ``hyperplane`` is the coefficient vector (over ``basis[1]``) of the
    hyperplane section of the chosen projective embedding, and
    ``degree_functional`` the vector over ``basis[dim]`` evaluating the
    degree of a zero-cycle class.  ``relations`` optionally presents torsion
    per codimension; products are computed on representatives, and group
    views route through :class:`FpAbelianGroup`.
    """

    def __init__(
        self,
        name: str,
        dim: int,
        basis: Sequence[Sequence[str]],
        products: Mapping[tuple[str, str], Mapping[str, int]],
        hyperplane: Sequence[int],
        degree_functional: Sequence[int],
        relations: Mapping[int, Sequence[Sequence[int]]] | None = None,
    ) -> None:
        self.name = str(name)
        self.dim = int(dim)
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        levels = tuple(tuple(str(s) for s in level) for level in basis)
        if len(levels) != self.dim + 1:
            raise ValueError(f"need basis lists for codimensions 0..{self.dim}")
        if len(levels[0]) != 1:
            raise ValueError("codimension 0 must be spanned by a single unit symbol")
        self.basis = levels
        codim: dict[str, int] = {}
        for k, level in enumerate(levels):
            if not level:
                raise ValueError(f"codimension {k} has no basis symbols")
            for sym in level:
                if sym in codim:
                    raise ValueError(f"duplicate basis symbol {sym!r}")
                codim[sym] = k
        self._codim = codim
        self.unit = levels[0][0]

        table: dict[tuple[str, str], Combo] = {}
        for (a, b), value in products.items():
            if a not in codim or b not in codim:
                raise ValueError(f"product ({a!r}, {b!r}) uses unknown symbols")
            total = codim[a] + codim[b]
            cleaned = {str(s): int(c) for s, c in value.items() if int(c) != 0}
            for sym in cleaned:
                if codim.get(sym) != total:
                    raise ValueError(
                        f"product ({a!r}, {b!r}) lands in codim {total}, got {sym!r}"
                    )
            if total > self.dim and cleaned:
                raise ValueError(f"product ({a!r}, {b!r}) exceeds codimension {self.dim}")
            key = (a, b) if a <= b else (b, a)
            if key in table and table[key] != cleaned:
                raise ValueError(f"inconsistent products for pair {key}")
            table[key] = cleaned
        for sym, k in codim.items():
            key = (self.unit, sym) if self.unit <= sym else (sym, self.unit)
            expected = {sym: 1}
            if key in table and table[key] != expected:
                raise ValueError(f"unit product for {sym!r} must be {sym!r} itself")
            table[key] = expected
        self._table = table

        hyper = tuple(int(c) for c in hyperplane)
        width = len(levels[1]) if self.dim >= 1 else 0
        if len(hyper) != width:
            raise ValueError(f"hyperplane vector must have length {width}")
        self.hyperplane = hyper

        deg = tuple(int(c) for c in degree_functional)
        if len(deg) != len(levels[self.dim]):
            raise ValueError(
                f"degree functional must have length {len(levels[self.dim])}"
            )
        self.degree_functional = deg

        rels: dict[int, tuple[tuple[int, ...], ...]] = {}
        for k, rows in (relations or {}).items():
            k = int(k)
            if not 0 <= k <= self.dim:
                raise ValueError(f"relations declared for impossible codimension {k}")
            packed = tuple(tuple(int(x) for x in row) for row in rows)
            for row in packed:
                if len(row) != len(levels[k]):
                    raise ValueError(f"relation {list(row)} does not match codim {k} basis")
            if packed:
                rels[k] = packed
        self.relations = rels

        self._check_associativity()

    # -- basic queries -------------------------------------------------

    def basis_at(self, k: int) -> tuple[str, ...]:
        """Basis symbols in codimension ``k`` (empty beyond the dimension)."""
        if k < 0:
            raise ValueError("codimension must be nonnegative")
        return self.basis[k] if k <= self.dim else ()

    def codim_of(self, sym: str) -> int:
        return self._codim[sym]

    def pair_product(self, a: str, b: str) -> Combo:
        key = (a, b) if a <= b else (b, a)
        return dict(self._table.get(key, {}))

    def group(self, k: int) -> FpAbelianGroup:
        """The abelian group underlying codimension ``k``."""
        return FpAbelianGroup(len(self.basis_at(k)), self.relations.get(k, ()))

    # -- class constructors --------------------------------------------

    def make(self, k: int, coeffs: Sequence[int] | Mapping[str, int]) -> "ChowClass":
        level = self.basis_at(k)
        if isinstance(coeffs, Mapping):
            unknown = set(coeffs) - set(level)
            if unknown:
                raise ValueError(f"coefficients name unknown symbols {sorted(unknown)}")
            vector = tuple(int(coeffs.get(sym, 0)) for sym in level)
        else:
            vector = tuple(int(c) for c in coeffs)
        return ChowClass(self, k, vector)

    def zero(self, k: int) -> "ChowClass":
        return self.make(k, [0] * len(self.basis_at(k)))

    def basis_class(self, sym: str) -> "ChowClass":
        k = self.codim_of(sym)
        return self.make(k, {sym: 1})

    def unit_class(self) -> "ChowClass":
        return self.basis_class(self.unit)

    def hyperplane_class(self) -> "ChowClass":
        return self.make(1, self.hyperplane)

    # -- validation ------------------------------------------------------

    def _expand(self, combo: Combo, sym: str) -> Combo:
        acc: Combo = {}
        for s, c in combo.items():
            for out, k in self.pair_product(s, sym).items():
                acc[out] = acc.get(out, 0) + c * k
        return {s: c for s, c in acc.items() if c}

    def _check_associativity(self) -> None:
        symbols = list(self._codim)
        for a in symbols:
            for b in symbols:
                for c in symbols:
                    left = self._expand(self.pair_product(a, b), c)
                    right = self._expand(self.pair_product(b, c), a)
                    if left != right:
                        raise ValueError(
                            f"structure constants are not associative at ({a!r}, {b!r}, {c!r})"
                        )

    # -- equality --------------------------------------------------------

    def _key(self):
        rel = tuple(sorted((k, rows) for k, rows in self.relations.items()))
        # explicit zero entries are the same as missing ones
        table = tuple(
            sorted((pair, tuple(sorted(v.items()))) for pair, v in self._table.items() if v)
        )
        return (self.dim, self.basis, table, self.hyperplane, self.degree_functional, rel)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChowRingPresentation):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"ChowRingPresentation({self.name!r}, dim={self.dim})"


@dataclass(frozen=True)
class ChowClass:
    """Integer combination of the basis symbols in one codimension."""

    ring: ChowRingPresentation
    codim: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.codim < 0:
            raise ValueError("codimension must be nonnegative")
        expected = len(self.ring.basis_at(self.codim))
        if len(self.coeffs) != expected:
            raise ValueError(
                f"coefficient vector has length {len(self.coeffs)}, codim {self.codim} needs {expected}"
            )

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "ChowClass") -> "ChowClass":
        if self.ring != other.ring or self.codim != other.codim:
            raise ValueError("classes live in different groups")
        return ChowClass(self.ring, self.codim, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ring, self.codim, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "ChowClass":
        return ChowClass(self.ring, self.codim, tuple(int(scalar) * c for c in self.coeffs))

    def as_dict(self) -> Combo:
        return {
            sym: c
            for sym, c in zip(self.ring.basis_at(self.codim), self.coeffs)
            if c
        }


def mul(x: ChowClass, y: ChowClass) -> ChowClass:
    """Bilinear extension of the structure constants; codimensions add."""
    if x.ring != y.ring:
        raise ValueError("classes live over different ring presentations")
    ring = x.ring
    k = x.codim + y.codim
    if k > ring.dim:
        return ring.zero(k)
    acc = {sym: 0 for sym in ring.basis_at(k)}
    for ca, a in zip(x.coeffs, ring.basis_at(x.codim)):
        if ca == 0:
            continue
        for cb, b in zip(y.coeffs, ring.basis_at(y.codim)):
            if cb == 0:
                continue
            for sym, c in ring.pair_product(a, b).items():
                acc[sym] += ca * cb * c
    return ring.make(k, acc)


def degree(x: ChowClass) -> int:
    """Apply the degree functional; defined only in the top codimension."""
    if x.codim != x.ring.dim:
        raise ValueError(
            f"degree needs codimension {x.ring.dim}, got {x.codim}"
        )
    return sum(c * w for c, w in zip(x.coeffs, x.ring.degree_functional))


# -- built-in presentations ------------------------------------------------


def point() -> ChowRingPresentation:
    return ChowRingPresentation("point", 0, [["1"]], {}, [], [1])


def projective_space(n: int) -> ChowRingPresentation:
    if n < 0:
        raise ValueError("projective space needs nonnegative dimension")
    if n == 0:
        return ChowRingPresentation("P0", 0, [["1"]], {}, [], [1])
    syms = ["1", "h"] + [f"h^{k}" for k in range(2, n + 1)]
    basis = [[s] for s in syms]
    products: dict[tuple[str, str], Combo] = {}
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if a + b <= n:
                products[(syms[a], syms[b])] = {syms[a + b]: 1}
    return ChowRingPresentation(f"P{n}", n, basis, products, [1], [1])


def quadric_surface() -> ChowRingPresentation:
    """The smooth quadric surface: two rulings e, f with e.f = pt, h = e + f."""
    products: dict[tuple[str, str], Combo] = {("e", "f"): {"pt": 1}}
    return ChowRingPresentation(
        "quadric_surface", 2, [["1"], ["e", "f"], ["pt"]], products, [1, 1], [1]
    )


def product_presentation(r1: ChowRingPresentation, r2: ChowRingPresentation) -> ChowRingPresentation:
    """Tensor-product presentation with componentwise structure constants."""
    if r1.relations or r2.relations:
        raise ValueError("product presentations need torsion-free factors")
    dim = r1.dim + r2.dim

    def tensor(a: str, b: str) -> str:
        return f"{a}|{b}"

    pairs_at: dict[int, list[tuple[str, str]]] = {}
    basis: list[list[str]] = []
    for k in range(dim + 1):
        level: list[tuple[str, str]] = []
        for k1 in range(max(0, k - r2.dim), min(k, r1.dim) + 1):
            for a in r1.basis_at(k1):
                for b in r2.basis_at(k - k1):
                    level.append((a, b))
        pairs_at[k] = level
        basis.append([tensor(a, b) for a, b in level])

    all_pairs = [pair for level in pairs_at.values() for pair in level]
    products: dict[tuple[str, str], Combo] = {}
    for a1, b1 in all_pairs:
        for a2, b2 in all_pairs:
            total = r1.codim_of(a1) + r1.codim_of(a2) + r2.codim_of(b1) + r2.codim_of(b2)
            if total > dim:
                continue
            left = r1.pair_product(a1, a2)
            right = r2.pair_product(b1, b2)
            value = {
                tensor(sa, sb): ca * cb
                for sa, ca in left.items()
                for sb, cb in right.items()
            }
            if value:
                products[(tensor(a1, b1), tensor(a2, b2))] = value

    hyper: list[int] = []
    for a, b in pairs_at.get(1, []):
        if a == r1.unit:
            hyper.append(r2.hyperplane[r2.basis_at(1).index(b)])
        else:
            hyper.append(r1.hyperplane[r1.basis_at(1).index(a)])
    deg = [
        r1.degree_functional[r1.basis_at(r1.dim).index(a)]
        * r2.degree_functional[r2.basis_at(r2.dim).index(b)]
        for a, b in pairs_at[dim]
    ]
    name = f"product({r1.name},{r2.name})"
    return ChowRingPresentation(name, dim, basis, products, hyper, deg)


def _split_product_args(body: str) -> tuple[str, str]:
    depth = 0
    for pos, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:pos], body[pos + 1 :]
    raise ValueError(f"cannot split product arguments in {body!r}")


def builtin(name: str) -> ChowRingPresentation:
    """Look up a built-in presentation by name.

    Accepts ``point``, ``P<n>`` (projective space), ``quadric_surface`` (or
    ``quadric``) and ``product(<name>,<name>)``.
    """
    s = name.strip()
    if s == "point":
        return point()
    if s in ("quadric", "quadric_surface"):
        return quadric_surface()
    m = re.fullmatch(r"P(\d+)", s)
    if m:
        return projective_space(int(m.group(1)))
    m = re.fullmatch(r"product\((.+)\)", s)
    if m:
        left, right = _split_product_args(m.group(1))
        return product_presentation(builtin(left), builtin(right))
    raise ValueError(f"unknown built-in presentation {name!r}")
