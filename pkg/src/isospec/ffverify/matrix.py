"""Square matrices over a FieldContext, stored row-major as flat tuples."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .field import FieldContext


class FqMatrix:
    __slots__ = ("ctx", "n", "entries", "_hash")

    def __init__(self, ctx: FieldContext, n: int, entries: Iterable[int]):
        entries = tuple(entries)
        if len(entries) != n * n:
            raise ValueError(f"expected {n * n} entries, got {len(entries)}")
        if any(not 0 <= e < ctx.q for e in entries):
            raise ValueError("entries must be reduced field elements")
        self.ctx = ctx
        self.n = n
        self.entries = entries
        self._hash = None

    @classmethod
    def _raw(cls, ctx, n, entries: tuple) -> "FqMatrix":
        m = object.__new__(cls)
        m.ctx, m.n, m.entries, m._hash = ctx, n, entries, None
        return m

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows: Sequence[Sequence[int]]) -> "FqMatrix":
        return cls(ctx, len(rows), [x for r in rows for x in r])

    @classmethod
    def identity(cls, ctx: FieldContext, n: int) -> "FqMatrix":
        return cls._raw(ctx, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def scalar(cls, ctx: FieldContext, n: int, c: int) -> "FqMatrix":
        return cls._raw(ctx, n, tuple(c if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.n + j]

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n : (i + 1) * n]) for i in range(n)]

    def __eq__(self, other) -> bool:
        return isinstance(other, FqMatrix) and self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.entries))
        return self._hash

    def __repr__(self) -> str:
        return f"FqMatrix(q={self.ctx.q}, rows={self.rows()})"

    def is_identity(self) -> bool:
        n = self.n
        e = self.entries
        return all(e[i * n + j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        n = self.n
        q = self.ctx.q
        mul = self.ctx.mul_t
        add = self.ctx.add_t
        a, b = self.entries, other.entries
        cols = [b[j::n] for j in range(n)]
        out = []
        for i in range(0, n * n, n):
            row = a[i : i + n]
            for col in cols:
                acc = 0
                for x, y in zip(row, col):
                    if x and y:
                        acc = add[acc * q + mul[x * q + y]]
                out.append(acc)
        return FqMatrix._raw(self.ctx, n, tuple(out))

    def __add__(self, other: "FqMatrix") -> "FqMatrix":
        q, add = self.ctx.q, self.ctx.add_t
        return FqMatrix._raw(self.ctx, self.n, tuple(add[x * q + y] for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "FqMatrix":
        neg = self.ctx.neg_t
        return FqMatrix._raw(self.ctx, self.n, tuple(neg[x] for x in self.entries))

    def __sub__(self, other: "FqMatrix") -> "FqMatrix":
        return self + (-other)

    def scale(self, c: int) -> "FqMatrix":
        q, mul = self.ctx.q, self.ctx.mul_t
        return FqMatrix._raw(self.ctx, self.n, tuple(mul[c * q + x] for x in self.entries))

    def __pow__(self, e: int) -> "FqMatrix":
        if e < 0:
            return self.inverse() ** (-e)
        result = FqMatrix.identity(self.ctx, self.n)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def frobenius(self) -> "FqMatrix":
        """Entrywise a -> a^3."""
        f = self.ctx.frob
        return FqMatrix._raw(self.ctx, self.n, tuple(f(x) for x in self.entries))

    def kron(self, other: "FqMatrix") -> "FqMatrix":
        """Kronecker product: entry ((i,k),(j,l)) = self[i,j] * other[k,l]."""
        n, m = self.n, other.n
        mul = self.ctx.mul
        out = [0] * (n * m * n * m)
        N = n * m
        for i in range(n):
            for j in range(n):
                a = self.entries[i * n + j]
                for k in range(m):
                    for l in range(m):
                        out[(i * m + k) * N + (j * m + l)] = mul(a, other.entries[k * m + l])
        return FqMatrix._raw(self.ctx, N, tuple(out))

    def trace(self) -> int:
        acc = 0
        for i in range(self.n):
            acc = self.ctx.add(acc, self.entries[i * self.n + i])
        return acc

    def _echelon(self) -> tuple[list[list[int]], int, int]:
        """Row-reduce a copy; returns (rows, rank, determinant)."""
        F = self.ctx
        rows = self.rows()
        n = self.n
        rank = 0
        det = 1
        for col in range(n):
            piv = next((r for r in range(rank, n) if rows[r][col]), None)
            if piv is None:
                det = 0
                continue
            if piv != rank:
                rows[piv], rows[rank] = rows[rank], rows[piv]
                det = F.neg(det)
            pv = rows[rank][col]
            det = F.mul(det, pv)
            inv = F.inv(pv)
            prow = [F.mul(inv, x) for x in rows[rank]]
            rows[rank] = prow
            for r in range(n):
                if r != rank and rows[r][col]:
                    c = rows[r][col]
                    rows[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(rows[r], prow)]
            rank += 1
        return rows, rank, det

    def rank(self) -> int:
        return self._echelon()[1]

    def det(self) -> int:
        if self.n == 2:
            F = self.ctx
            a, b, c, d = self.entries
            return F.sub(F.mul(a, d), F.mul(b, c))
        return self._echelon()[2]

    def inverse(self) -> "FqMatrix":
        F = self.ctx
        n = self.n
        # Gauss-Jordan on [A | I]
        rows = [r + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows())]
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            rows[piv], rows[col] = rows[col], rows[piv]
            inv = F.inv(rows[col][col])
            rows[col] = [F.mul(inv, x) for x in rows[col]]
            for r in range(n):
                if r != col and rows[r][col]:
                    c = rows[r][col]
                    rows[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(rows[r], rows[col])]
        return FqMatrix(F, n, [x for r in rows for x in r[n:]])

    def charpoly(self) -> list[int]:
        """Coefficients of det(xI - A), lowest degree first (monic).

        The coefficient of x^(n-k) is (-1)^k times the sum of the k x k
        principal minors.
        """
        F = self.ctx
        n = self.n
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        for k in range(1, n + 1):
            total = 0
            for idx in combinations(range(n), k):
                sub = FqMatrix._raw(F, k, tuple(self.entries[i * n + j] for i in idx for j in idx))
                total = F.add(total, sub.det())
            coeffs[n - k] = total if k % 2 == 0 else F.neg(total)
        return coeffs

    def to_json(self) -> list[list[int]]:
        return self.rows()
