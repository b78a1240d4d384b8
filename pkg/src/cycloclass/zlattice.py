"""Exact integer linear algebra on arbitrary-precision integers.

Provides column-style Hermite normal form (M*U = H with U unimodular),
Smith normal form invariant factors, fraction-free Bareiss determinants,
and a certified decision procedure for integer linear systems M*x = b.
Every negative answer carries a certificate that can be re-verified with
plain integer arithmetic, independent of how it was found.

Matrices here are small (at most ~100 x 50), so everything runs on Python
ints from the start; there is no machine-integer fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CertificateError, DimensionMismatch, NotSquare


class IntMatrix:
    """Immutable dense integer matrix, row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_data", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns) -> "IntMatrix":
        cols = [list(c) for c in columns]
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    def entry(self, i: int, j: int) -> int:
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._data))

    def mul_vector(self, v) -> tuple[int, ...]:
        v = tuple(v)
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector length {len(v)} != cols {self.cols}")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self._data)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        ot = other.transpose()
        return IntMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in ot._data]
                for row in self._data
            ]
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data)
        return f"IntMatrix({self.rows}x{self.cols}: {body})"


def _hnf_columns(matrix: IntMatrix):
    """Column HNF working data: returns (h_cols, u_cols, pivots, det_sign)
    where pivots is a list of (row, col) positions, strictly increasing in
    both coordinates, and det_sign is the tracked determinant of U."""
    rows, cols = matrix.rows, matrix.cols
    a = [list(matrix.column(j)) for j in range(cols)]
    u = [[int(i == j) for i in range(cols)] for j in range(cols)]
    det_sign = 1
    pivots: list[tuple[int, int]] = []
    c = 0
    for i in range(rows):
        if c == cols:
            break
        # Euclidean sweep: leave at most one nonzero among columns >= c in row i.
        while True:
            live = [j for j in range(c, cols) if a[j][i] != 0]
            if not live:
                break
            jm = min(live, key=lambda j: (abs(a[j][i]), j))
            if jm != c:
                a[c], a[jm] = a[jm], a[c]
                u[c], u[jm] = u[jm], u[c]
                det_sign = -det_sign
            done = True
            for j in range(c + 1, cols):
                if a[j][i] != 0:
                    q = a[j][i] // a[c][i]
                    a[j] = [x - q * y for x, y in zip(a[j], a[c])]
                    u[j] = [x - q * y for x, y in zip(u[j], u[c])]
                    if a[j][i] != 0:
                        done = False
            if done:
                break
        if c < cols and a[c][i] != 0:
            if a[c][i] < 0:
                a[c] = [-x for x in a[c]]
                u[c] = [-x for x in u[c]]
                det_sign = -det_sign
            for j in range(c):  # reduce row-i entries left of the new pivot
                q = a[j][i] // a[c][i]
                if q:
                    a[j] = [x - q * y for x, y in zip(a[j], a[c])]
                    u[j] = [x - q * y for x, y in zip(u[j], u[c])]
            pivots.append((i, c))
            c += 1
    return a, u, pivots, det_sign


def hnf(matrix: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column Hermite normal form: returns (H, U) with M @ U == H, U
    unimodular.  Pivots are positive, entries left of a pivot in its row lie
    in [0, pivot), and zero columns come last."""
    a, u, _, det_sign = _hnf_columns(matrix)
    h_mat = IntMatrix.from_columns(a) if matrix.cols else matrix
    u_mat = IntMatrix.from_columns(u)
    if det_sign not in (1, -1):
        raise CertificateError("tracked det(U) is not a unit")
    if matrix @ u_mat != h_mat:
        raise CertificateError("HNF postcondition M*U == H failed")
    return h_mat, u_mat


def bareiss_determinant(matrix: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if matrix.rows != matrix.cols:
        raise NotSquare(f"{matrix.rows}x{matrix.cols} matrix has no determinant")
    n = matrix.rows
    a = matrix.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def snf_diagonal(matrix: IntMatrix) -> list[int]:
    """Smith normal form diagonal d_1 | d_2 | ... (nonnegative, zeros last);
    the number of nonzero entries is the rank."""
    rows, cols = matrix.rows, matrix.cols
    a = matrix.to_lists()
    n = min(rows, cols)
    t = 0
    while t < n:
        # Move a smallest-magnitude nonzero of the trailing block to (t, t).
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(a[i][j])
                if v != 0 and (best is None or v < best):
                    best = v
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        a[t], a[i0] = a[i0], a[t]
        for r in range(rows):
            a[r][t], a[r][j0] = a[r][j0], a[r][t]
        while True:
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            stray = [i for i in range(t + 1, rows) if a[i][t] != 0]
            if stray:
                i = min(stray, key=lambda r: abs(a[r][t]))
                a[t], a[i] = a[i], a[t]
                continue
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    for r in range(rows):
                        a[r][j] -= q * a[r][t]
            stray = [j for j in range(t + 1, cols) if a[t][j] != 0]
            if stray:
                j = min(stray, key=lambda c: abs(a[t][c]))
                for r in range(rows):
                    a[r][t], a[r][j] = a[r][j], a[r][t]
                continue
            break
        d = abs(a[t][t])
        offender = None
        for i in range(t + 1, rows):
            if any(a[i][j] % d for j in range(t + 1, cols)):
                offender = i
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue  # redo position t with the offending row mixed in
        a[t][t] = d
        t += 1
    return [abs(a[i][i]) for i in range(t)] + [0] * (n - t)


def rational_rank(matrix: IntMatrix) -> int:
    """Rank over Q by plain fraction-free row elimination (reference path)."""
    a = [[Fraction(x) for x in row] for row in matrix.to_lists()]
    rows, cols = matrix.rows, matrix.cols
    rank = 0
    for j in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][j] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][j]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][j] != 0:
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def rational_solution(matrix: IntMatrix, rhs):
    """Solve M*x = b over Q by Gauss-Jordan elimination (reference path,
    independent of the HNF machinery).

    Returns (status, x) with status one of "unique", "underdetermined",
    "infeasible"; x is a particular Fraction solution or None.
    """
    rhs = tuple(rhs)
    if len(rhs) != matrix.rows:
        raise DimensionMismatch(f"rhs length {len(rhs)} != rows {matrix.rows}")
    rows, cols = matrix.rows, matrix.cols
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix.to_lists(), rhs)]
    pivots = []
    r = 0
    for j in range(cols):
        piv = next((i for i in range(r, rows) if a[i][j] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][j]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][j] != 0:
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            return "infeasible", None
    x = [Fraction(0)] * cols
    for i, j in enumerate(pivots):
        x[j] = a[i][cols]
    status = "unique" if len(pivots) == cols else "underdetermined"
    return status, tuple(x)


@dataclass(frozen=True)
class Solution:
    """M @ x == b exactly."""

    x: tuple[int, ...]

    def verify(self, matrix: IntMatrix, rhs) -> bool:
        return matrix.mul_vector(self.x) == tuple(rhs)

    def to_dict(self) -> dict:
        return {"tag": "solution", "x": list(self.x)}


@dataclass(frozen=True)
class RationalInfeasible:
    """b is outside the rational column span: dual @ M == 0, dual @ b != 0."""

    dual: tuple[int, ...]

    def verify(self, matrix: IntMatrix, rhs) -> bool:
        if len(self.dual) != matrix.rows:
            return False
        composed = matrix.transpose().mul_vector(self.dual)
        pairing = sum(u * b for u, b in zip(self.dual, rhs))
        return all(v == 0 for v in composed) and pairing != 0

    def to_dict(self) -> dict:
        return {"tag": "rational_infeasible", "dual": list(self.dual)}


@dataclass(frozen=True)
class NonIntegral:
    """b lies in the rational span but not in the integer column lattice.

    pivot/value name the coordinate of the rational solution that is forced
    non-integral.  obstruction/modulus form a congruence refutation checked
    with integer arithmetic alone: obstruction @ M == 0 (mod modulus) while
    obstruction @ b != 0 (mod modulus), so no integer x can solve M x = b.
    """

    pivot: int
    value: Fraction
    obstruction: tuple[int, ...]
    modulus: int

    def verify(self, matrix: IntMatrix, rhs) -> bool:
        if self.modulus <= 1 or self.value.denominator <= 1:
            return False
        if len(self.obstruction) != matrix.rows:
            return False
        composed = matrix.transpose().mul_vector(self.obstruction)
        if any(v % self.modulus for v in composed):
            return False
        pairing = sum(u * b for u, b in zip(self.obstruction, rhs))
        if pairing % self.modulus == 0:
            return False
        status, x = rational_solution(matrix, rhs)
        if status == "unique" and x[self.pivot] != self.value:
            return False
        return True

    def to_dict(self) -> dict:
        return {
            "tag": "non_integral",
            "pivot": self.pivot,
            "value": {"num": self.value.numerator, "den": self.value.denominator},
            "obstruction": list(self.obstruction),
            "modulus": self.modulus,
        }


SolveOutcome = Solution | RationalInfeasible | NonIntegral


def outcome_from_dict(d: dict) -> SolveOutcome:
    tag = d.get("tag")
    if tag == "solution":
        return Solution(tuple(d["x"]))
    if tag == "rational_infeasible":
        return RationalInfeasible(tuple(d["dual"]))
    if tag == "non_integral":
        return NonIntegral(
            pivot=d["pivot"],
            value=Fraction(d["value"]["num"], d["value"]["den"]),
            obstruction=tuple(d["obstruction"]),
            modulus=d["modulus"],
        )
    raise ValueError(f"unknown solve outcome tag {tag!r}")


class HermiteSolver:
    """Decides M x = b over Z for many right-hand sides, reusing one HNF.

    Every outcome is verified against its own invariant before it is
    returned; a failure there is a bug, reported as CertificateError.
    """

    def __init__(self, matrix: IntMatrix):
        self.matrix = matrix
        self._h_cols, self._u_cols, self._pivots, _ = _hnf_columns(matrix)
        self._kernel: list[tuple[int, ...]] | None = None

    def _left_kernel(self) -> list[tuple[int, ...]]:
        # Integer basis of {u : u @ M = 0}: transform columns of the
        # transposed HNF that map onto zero columns.
        if self._kernel is None:
            a, u, pivots, _ = _hnf_columns(self.matrix.transpose())
            self._kernel = [tuple(u[j]) for j in range(len(pivots), self.matrix.rows)]
        return self._kernel

    def _check(self, outcome: SolveOutcome, rhs) -> SolveOutcome:
        if not outcome.verify(self.matrix, rhs):
            raise CertificateError(f"{type(outcome).__name__} failed self-check")
        return outcome

    def solve(self, rhs) -> SolveOutcome:
        rhs = tuple(int(x) for x in rhs)
        if len(rhs) != self.matrix.rows:
            raise DimensionMismatch(
                f"rhs length {len(rhs)} != rows {self.matrix.rows}"
            )
        # Forward substitution along the pivot staircase, exactly over Q.
        residual = [Fraction(x) for x in rhs]
        y: dict[int, Fraction] = {}
        for row, col in self._pivots:
            val = residual[row] / self._h_cols[col][row]
            y[col] = val
            if val:
                hc = self._h_cols[col]
                for i in range(row, self.matrix.rows):
                    residual[i] -= val * hc[i]
        if any(residual):
            for u in self._left_kernel():
                if sum(a * b for a, b in zip(u, rhs)) != 0:
                    return self._check(RationalInfeasible(u), rhs)
            raise CertificateError("no dual vector found for infeasible system")
        bad = next(
            (col for _, col in self._pivots if y[col].denominator != 1), None
        )
        if bad is None:
            x = [0] * self.matrix.cols
            for col, val in y.items():
                if val:
                    uc = self._u_cols[col]
                    k = int(val)
                    for i in range(self.matrix.cols):
                        x[i] += k * uc[i]
            return self._check(Solution(tuple(x)), rhs)
        return self._check(self._non_integral(rhs, y, bad), rhs)

    def _non_integral(self, rhs, y: dict[int, Fraction], bad_col: int) -> NonIntegral:
        # Congruence obstruction: with P the (lower-triangular) pivot
        # submatrix of H and D = det P, the row z of adj(P) selecting the
        # bad coordinate gives z @ M == 0 (mod D) and z @ b == D * y_bad,
        # which D does not divide.
        pivots = self._pivots
        k = len(pivots)
        pos = next(idx for idx, (_, col) in enumerate(pivots) if col == bad_col)
        p = [
            [self._h_cols[pc][pr] for (_, pc) in pivots] for (pr, _) in pivots
        ]  # k x k, lower triangular, positive diagonal
        det = 1
        for t in range(k):
            det *= p[t][t]
        z = [0] * k
        for b in range(k - 1, -1, -1):
            acc = det if b == pos else 0
            acc -= sum(z[c] * p[c][b] for c in range(b + 1, k))
            q, r = divmod(acc, p[b][b])
            if r != 0:
                raise CertificateError("adjugate back-substitution not exact")
            z[b] = q
        u = [0] * self.matrix.rows
        for (pr, _), zval in zip(pivots, z):
            u[pr] = zval
        # Rational solution coordinates in terms of M's own columns.
        x = [Fraction(0)] * self.matrix.cols
        for col, val in y.items():
            if val:
                uc = self._u_cols[col]
                for i in range(self.matrix.cols):
                    x[i] += val * uc[i]
        pivot_coord = next(i for i, v in enumerate(x) if v.denominator != 1)
        return NonIntegral(
            pivot=pivot_coord,
            value=x[pivot_coord],
            obstruction=tuple(u),
            modulus=det,
        )


def solve_integer(matrix: IntMatrix, rhs) -> SolveOutcome:
    """Decide M x = b over the integers; one-shot form of HermiteSolver."""
    return HermiteSolver(matrix).solve(rhs)
