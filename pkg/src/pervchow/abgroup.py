"""Finitely presented abelian groups over exact integer linear algebra.

Matrices are small dense lists of rows with plain Python ``int`` entries,
so all arithmetic is exact and overflow-free.  A group is presented as a
cokernel: ``Z^rank`` modulo the row span of its relations matrix.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    if not m:
        return []
    return [[m[i][j] for i in range(len(m))] for j in range(len(m[0]))]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    rows, inner = len(a), len(a[0])
    if len(b) != inner:
        raise ValueError(f"shape mismatch: {rows}x{inner} times {len(b)}x?")
    cols = len(b[0]) if b else 0
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def vec_mat(v: Sequence[int], a: Sequence[Sequence[int]]) -> list[int]:
    if len(a) != len(v):
        raise ValueError(f"shape mismatch: 1x{len(v)} times {len(a)}x?")
    cols = len(a[0]) if a else 0
    return [sum(v[k] * a[k][j] for k in range(len(v))) for j in range(cols)]


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination; exact over int."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """Diagonalization ``U * M * V = S`` by unimodular transforms.

    ``S`` is diagonal with nonnegative entries, each dividing the next;
    ``U`` and ``V`` have determinant +-1.
    """

    U: tuple[tuple[int, ...], ...]
    S: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.S[i][i] for i in range(min(len(self.S), len(self.V))))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d != 0)


def _swap_rows(m: Matrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: Matrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: Matrix, dst: int, src: int, k: int) -> None:
    m[dst] = [a + k * b for a, b in zip(m[dst], m[src])]


def _add_col(m: Matrix, dst: int, src: int, k: int) -> None:
    for row in m:
        row[dst] += k * row[src]


def _scale_row(m: Matrix, i: int, k: int) -> None:
    m[i] = [k * x for x in m[i]]


def smith_normal_form(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> SmithForm:
    """Diagonalize an integer matrix with unimodular row/column transforms.

    Euclidean reduction with smallest-pivot selection.  ``ncols``
    disambiguates the width of a matrix with no rows; empty matrices are
    fine.  The returned form is verified against its own contract before
    being handed back.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = int(ncols) if ncols is not None else (len(a[0]) if a else 0)
    if any(len(row) != n for row in a):
        raise ValueError("ragged or mis-sized matrix")

    u = identity(m)
    v = identity(n)
    t = 0
    while t < min(m, n):
        # Smallest nonzero entry of the trailing submatrix becomes the pivot.
        best: tuple[int, int] | None = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            _swap_rows(a, t, best[0])
            _swap_rows(u, t, best[0])
        if best[1] != t:
            _swap_cols(a, t, best[1])
            _swap_cols(v, t, best[1])
        while True:
            for i in range(t + 1, m):
                while a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        _add_row(a, i, t, -q)
                        _add_row(u, i, t, -q)
                    if a[i][t]:
                        # remainder became the smaller value; promote it
                        _swap_rows(a, t, i)
                        _swap_rows(u, t, i)
            for j in range(t + 1, n):
                while a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        _add_col(a, j, t, -q)
                        _add_col(v, j, t, -q)
                    if a[t][j]:
                        _swap_cols(a, t, j)
                        _swap_cols(v, t, j)
            if any(a[i][t] for i in range(t + 1, m)):
                continue  # row clearing disturbed the column
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # pull a non-divisible row up so the next pass shrinks the pivot
            _add_row(a, t, offender, 1)
            _add_row(u, t, offender, 1)
        if a[t][t] < 0:
            _scale_row(a, t, -1)
            _scale_row(u, t, -1)
        t += 1

    form = SmithForm(
        U=tuple(tuple(row) for row in u),
        S=tuple(tuple(row) for row in a),
        V=tuple(tuple(row) for row in v),
    )
    _verify_smith(matrix, n, form)
    return form


def _verify_smith(matrix: Sequence[Sequence[int]], n: int, form: SmithForm) -> None:
    m = len(matrix)
    u = [list(r) for r in form.U]
    s = [list(r) for r in form.S]
    v = [list(r) for r in form.V]
    original = [[int(x) for x in row] for row in matrix]
    if mat_mul(mat_mul(u, original), v) != s:
        raise RuntimeError("Smith form does not reproduce the input matrix")
    if abs(det(u)) != 1 or abs(det(v)) != 1:
        raise RuntimeError("Smith transforms are not unimodular")
    for i in range(m):
        for j in range(n):
            if i != j and s[i][j] != 0:
                raise RuntimeError("Smith form is not diagonal")
    diag = [s[i][i] for i in range(min(m, n))]
    if any(d < 0 for d in diag):
        raise RuntimeError("Smith diagonal has a negative entry")
    for x, y in zip(diag, diag[1:]):
        if x == 0 and y != 0:
            raise RuntimeError("zero diagonal entry precedes a nonzero one")
        if x != 0 and y % x != 0:
            raise RuntimeError("Smith diagonal violates the divisibility chain")


def lattice_solve(generators: Sequence[Sequence[int]], target: Sequence[int]) -> list[int] | None:
    """Integer coefficients expressing ``target`` over the generator rows.

    Returns ``None`` when ``target`` is outside the generated lattice; a
    returned witness always satisfies ``witness . generators == target``.
    """
    gens = [[int(x) for x in g] for g in generators]
    x = [int(val) for val in target]
    n = len(x)
    if any(len(g) != n for g in gens):
        raise ValueError("generator length mismatch")
    if not gens:
        return [] if all(val == 0 for val in x) else None
    form = smith_normal_form(gens)
    m = len(gens)
    b = vec_mat(x, [list(r) for r in form.V])
    a = [0] * m
    for j in range(n):
        s = form.S[j][j] if j < m else 0
        if s:
            if b[j] % s:
                return None
            a[j] = b[j] // s
        elif b[j]:
            return None
    coeffs = vec_mat(a, [list(r) for r in form.U])
    if vec_mat(coeffs, gens) != x:
        raise RuntimeError("lattice witness failed verification")
    return coeffs


def lattice_contains(generators: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    return lattice_solve(generators, target) is not None


def lattice_subset(inner: Sequence[Sequence[int]], outer: Sequence[Sequence[int]]) -> bool:
    """Every generator of ``inner`` lies in the lattice spanned by ``outer``."""
    return all(lattice_contains(outer, g) for g in inner)


def kernel_basis(matrix: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Vectors spanning the integer solutions of ``M x = 0`` (x of length ncols)."""
    rows = [[int(x) for x in r] for r in matrix]
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged or mis-sized matrix")
    if not rows:
        return identity(ncols)
    form = smith_normal_form(rows, ncols=ncols)
    r = form.rank
    return [[form.V[i][j] for i in range(ncols)] for j in range(r, ncols)]


@dataclass(frozen=True)
class FpAbelianGroup:
    """Cokernel presentation: ``Z^rank`` modulo the row span of ``relations``."""

    rank: int
    relations: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        rel = tuple(tuple(int(x) for x in row) for row in self.relations)
        object.__setattr__(self, "relations", rel)
        for row in rel:
            if len(row) != self.rank:
                raise ValueError(
                    f"relation {list(row)} has length {len(row)}, expected rank {self.rank}"
                )

    @classmethod
    def free(cls, rank: int) -> "FpAbelianGroup":
        return cls(rank)

    @classmethod
    def cyclic(cls, n: int) -> "FpAbelianGroup":
        return cls(1, ((n,),))


def invariant_factors(group: FpAbelianGroup) -> tuple[int, tuple[int, ...]]:
    """Free rank and torsion coefficients ``n_1 | n_2 | ...`` (each > 1)."""
    if not group.relations:
        return group.rank, ()
    form = smith_normal_form([list(r) for r in group.relations], ncols=group.rank)
    nonzero = [d for d in form.diagonal() if d != 0]
    return group.rank - len(nonzero), tuple(d for d in nonzero if d > 1)


def describe(group: FpAbelianGroup) -> str:
    """Short human name like ``Z^2``, ``Z + Z/2`` or ``0``."""
    free, torsion = invariant_factors(group)
    parts: list[str] = []
    if free == 1:
        parts.append("Z")
    elif free > 1:
        parts.append(f"Z^{free}")
    parts.extend(f"Z/{n}" for n in torsion)
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupMap:
    """Homomorphism of presented groups, as a matrix on chosen generators.

    The matrix (target rank x source rank) must carry every source relation
    into the relation lattice of the target; this is checked at construction
    so a ``GroupMap`` is always a well-defined homomorphism.
    """

    source: FpAbelianGroup
    target: FpAbelianGroup
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if len(rows) != self.target.rank:
            raise ValueError(
                f"matrix has {len(rows)} rows, expected target rank {self.target.rank}"
            )
        for row in rows:
            if len(row) != self.source.rank:
                raise ValueError(
                    f"matrix row {list(row)} has length {len(row)}, expected source rank {self.source.rank}"
                )
        for rel in self.source.relations:
            image = mat_vec(rows, rel)
            if not lattice_contains(self.target.relations, image):
                raise ValueError(
                    f"matrix does not send relation {list(rel)} into the target relations"
                )


def compose(second: GroupMap, first: GroupMap) -> GroupMap:
    if first.target != second.source:
        raise ValueError("maps are not composable")
    product = mat_mul([list(r) for r in second.matrix], [list(r) for r in first.matrix])
    return GroupMap(first.source, second.target, tuple(tuple(r) for r in product))


def _image_generators(f: GroupMap) -> list[list[int]]:
    cols = transpose([list(r) for r in f.matrix])
    return cols + [list(r) for r in f.target.relations]


def _kernel_generators(g: GroupMap) -> list[list[int]]:
    # x is in the kernel iff g(x) lies in the relation lattice of the target,
    # i.e. (x, y) solves [matrix | relations^T] (x, y) = 0 for some y.
    b = g.source.rank
    rel_t = transpose([list(r) for r in g.target.relations])
    stacked = []
    for i in range(g.target.rank):
        row = list(g.matrix[i])
        row.extend(rel_t[i] if rel_t else [])
        stacked.append(row)
    width = b + len(g.target.relations)
    full = kernel_basis(stacked, width) if stacked else identity(width)
    return [vec[:b] for vec in full]


def is_exact_at_middle(f: GroupMap, g: GroupMap) -> bool:
    """Whether ``image(f) == kernel(g)`` as subgroups of the middle group.

    Both subgroups are compared as sublattices of ``Z^rank`` containing the
    middle group's relations; equality is decided by Smith-form membership
    in both directions (and implies ``g o f = 0``).
    """
    if f.target != g.source:
        raise ValueError("middle groups do not match")
    image = _image_generators(f)
    kernel = _kernel_generators(g)
    return lattice_subset(image, kernel) and lattice_subset(kernel, image)
