"""Integer chain complexes, Smith normal form, and simplicial homology.

All arithmetic is exact, over Python's arbitrary-precision integers; a
matrix is a list of rows of ints.  For a chain complex with boundary maps
d_q : C_q -> C_{q-1} satisfying d o d = 0,

    H_q = Z^{b_q}  +  Z/t_1 + ... + Z/t_m,

where b_q = rank C_q - rank d_q - rank d_{q+1} and the torsion coefficients
t_i are the invariant factors of d_{q+1} exceeding 1.  (See Hatcher,
"Algebraic Topology", section 2.1, or any treatment of finitely generated
abelian groups.)
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .complexes import SimplicialComplex, incidence
from .errors import InternalConsistencyError

__all__ = [
    "smith_normal_form",
    "matrix_rank",
    "IntegerChainComplex",
    "HomologyResult",
    "homology",
    "simplicial_chain_complex",
    "simplicial_homology",
]

Matrix = list[list[int]]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Invariant factors and rank of an integer matrix.

    Returns (d_1, ..., d_r) with d_1 | d_2 | ... | d_r, all positive, and
    the rank r.  The input is not modified.

    >>> smith_normal_form([[2]])
    ((2,), 1)
    >>> smith_normal_form([[0, 0], [0, 0]])
    ((), 0)
    >>> smith_normal_form([[2, 4], [6, 10]])
    ((2, 2), 2)
    >>> smith_normal_form([[2, 0], [0, 3]])
    ((1, 6), 2)
    """
    a = [[int(v) for v in row] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    if any(len(row) != ncols for row in a):
        raise ValueError("ragged matrix")
    factors: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        # Choose the pivot: a minimal-magnitude nonzero entry of the
        # untouched block.  Small pivots keep the Euclidean steps short
        # and the intermediate entries from exploding.
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]

        # Euclidean reduction of row/column t.  If any remainder survives,
        # it is strictly smaller than the pivot; loop and re-pick.
        d = a[t][t]
        dirty = False
        for i in range(t + 1, nrows):
            if a[i][t]:
                q = a[i][t] // d
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                dirty = dirty or a[i][t] != 0
        for j in range(t + 1, ncols):
            if a[t][j]:
                q = a[t][j] // d
                for row in a:
                    row[j] -= q * row[t]
                dirty = dirty or a[t][j] != 0
        if dirty:
            continue
        # Enforce the divisibility chain: the pivot must divide every entry
        # of the remaining block.  Folding an offending row into row t
        # leaves a remainder on the next pass, shrinking the pivot.
        offender = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if a[i][j] % d:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue
        factors.append(abs(d))
        t += 1
    return tuple(factors), len(factors)


def matrix_rank(matrix: Sequence[Sequence[int]]) -> int:
    return smith_normal_form(matrix)[1]


def _zero_matrix(nrows: int, ncols: int) -> Matrix:
    return [[0] * ncols for _ in range(nrows)]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    return [
        [sum(x * y for x, y in zip(row, col)) for col in zip(*b)]
        for row in a
    ]


class IntegerChainComplex:
    """A finitely generated chain complex of free abelian groups.

    ranks[q] is the rank of C_q; boundaries[q-1] is the matrix of
    d_q : C_q -> C_{q-1} (ranks[q-1] rows, ranks[q] columns), for
    1 <= q <= top.  Optional labels name the generators per degree.
    The constructor checks shapes and that consecutive boundaries compose
    to zero, raising InternalConsistencyError otherwise.
    """

    def __init__(
        self,
        ranks: Sequence[int],
        boundaries: Sequence[Sequence[Sequence[int]]],
        labels: Sequence[Sequence[object]] | None = None,
    ):
        self.ranks = tuple(int(r) for r in ranks)
        if not self.ranks or any(r < 0 for r in self.ranks):
            raise InternalConsistencyError("chain complex needs nonnegative ranks")
        mats = [[[int(v) for v in row] for row in m] for m in boundaries]
        if len(mats) != len(self.ranks) - 1:
            raise InternalConsistencyError(
                f"expected {len(self.ranks) - 1} boundary matrices, got {len(mats)}"
            )
        for q, m in enumerate(mats, start=1):
            want = (self.ranks[q - 1], self.ranks[q])
            got = (len(m), len(m[0]) if m else 0)
            # A matrix with zero rows carries no column count; accept it.
            if got[0] != want[0] or (m and got[1] != want[1]):
                raise InternalConsistencyError(
                    f"boundary d_{q} has shape {got}, expected {want}"
                )
        self.boundaries = mats
        if labels is not None:
            labels = [tuple(ls) for ls in labels]
            if len(labels) != len(self.ranks) or any(
                len(ls) != r for ls, r in zip(labels, self.ranks)
            ):
                raise InternalConsistencyError("labels do not match ranks")
        self.labels = labels

        for q in range(2, self.top + 1):
            prod = _matmul(self.boundary(q - 1), self.boundary(q))
            if any(v for row in prod for v in row):
                raise InternalConsistencyError(
                    f"boundary does not square to zero in degree {q}"
                )

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def boundary(self, q: int) -> Matrix:
        """The matrix of d_q, a zero-shaped matrix outside 1 <= q <= top."""
        if 1 <= q <= self.top:
            m = self.boundaries[q - 1]
            # normalise the zero-row case to carry proper column counts
            return [list(row) for row in m] if m else _zero_matrix(0, self.ranks[q])
        if q == self.top + 1:
            return _zero_matrix(self.ranks[self.top], 0)
        if q == 0:
            return _zero_matrix(0, self.ranks[0])
        raise IndexError(f"no boundary in degree {q}")


class HomologyResult:
    """Homology groups, one (betti, torsion coefficients) pair per degree.

    Equality ignores trailing trivial degrees, so the homology of a
    3-sphere computed up to degree 5 equals the same groups listed up to
    degree 3.

    >>> HomologyResult([(1, ()), (0, ())]) == HomologyResult([(1, ())])
    True
    >>> print(HomologyResult([(1, ()), (1, (2,))]))
    H_0 = Z, H_1 = Z + Z/2
    """

    def __init__(self, groups: Iterable[tuple[int, tuple[int, ...]]]):
        self.groups = tuple((int(b), tuple(int(t) for t in ts)) for b, ts in groups)
        if any(b < 0 for b, _ in self.groups):
            raise InternalConsistencyError("negative betti number")

    def betti(self, q: int) -> int:
        return self.groups[q][0] if 0 <= q < len(self.groups) else 0

    def torsion(self, q: int) -> tuple[int, ...]:
        return self.groups[q][1] if 0 <= q < len(self.groups) else ()

    def __getitem__(self, q: int) -> tuple[int, tuple[int, ...]]:
        return (self.betti(q), self.torsion(q))

    def __len__(self) -> int:
        return len(self.groups)

    def _stripped(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        gs = list(self.groups)
        while gs and gs[-1] == (0, ()):
            gs.pop()
        return tuple(gs)

    def __eq__(self, other) -> bool:
        return isinstance(other, HomologyResult) and self._stripped() == other._stripped()

    def __hash__(self) -> int:
        return hash(self._stripped())

    @staticmethod
    def group_name(betti: int, torsion: tuple[int, ...]) -> str:
        parts = []
        if betti == 1:
            parts.append("Z")
        elif betti > 1:
            parts.append(f"Z^{betti}")
        parts.extend(f"Z/{t}" for t in torsion)
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return ", ".join(
            f"H_{q} = {self.group_name(b, ts)}" for q, (b, ts) in enumerate(self.groups)
        )

    def __repr__(self) -> str:
        return f"HomologyResult({list(self.groups)!r})"


def homology(c: IntegerChainComplex) -> HomologyResult:
    """Homology of an integer chain complex, degree by degree."""
    groups = []
    rank_of = {}
    factors_of = {}
    for q in range(0, c.top + 2):
        factors_of[q], rank_of[q] = smith_normal_form(c.boundary(q))
    for q in range(0, c.top + 1):
        betti = c.ranks[q] - rank_of[q] - rank_of[q + 1]
        torsion = tuple(f for f in factors_of[q + 1] if f > 1)
        groups.append((betti, torsion))
    return HomologyResult(groups)


def simplicial_chain_complex(x: SimplicialComplex) -> IntegerChainComplex:
    """The simplicial chain complex of x, generators in canonical order."""
    labels = [x.simplices(q) for q in range(x.dim + 1)]
    boundaries = []
    for q in range(1, x.dim + 1):
        rows = labels[q - 1]
        cols = labels[q]
        boundaries.append([[incidence(t, s) for t in cols] for s in rows])
    return IntegerChainComplex([len(ls) for ls in labels], boundaries, labels)


def simplicial_homology(x: SimplicialComplex) -> HomologyResult:
    """Integer simplicial homology, computed directly from the full
    simplicial chain complex (no Morse-theoretic reduction involved)."""
    return homology(simplicial_chain_complex(x))
