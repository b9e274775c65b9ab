"""Matrices over a polynomial ring presenting maps between graded free modules."""

from __future__ import annotations

from .ring import Polynomial, PolynomialRing


class FreeModuleMatrix:
    """rows x cols matrix of polynomials with optional twist data.

    Columns are images of the source basis; when every entry is homogeneous,
    entry (r, c) has degree source_twists[c] - target_twists[r] (or is zero).
    """

    __slots__ = ("ring", "rows", "cols", "entries", "source_twists", "target_twists")

    def __init__(self, ring: PolynomialRing, entries, source_twists=None, target_twists=None):
        self.ring = ring
        entries = tuple(tuple(row) for row in entries)
        self.entries = entries
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
            for p in row:
                if not isinstance(p, Polynomial) or p.ring != ring:
                    raise ValueError("entries must belong to the matrix ring")
        self.source_twists = tuple(source_twists) if source_twists is not None else None
        self.target_twists = tuple(target_twists) if target_twists is not None else None
        if self.source_twists is not None and len(self.source_twists) != self.cols:
            raise ValueError("one source twist per column required")
        if self.target_twists is not None and len(self.target_twists) != self.rows:
            raise ValueError("one target twist per row required")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_columns(cls, ring, columns, target_rank, source_twists=None, target_twists=None):
        """Columns given as engine vectors {(pos, exps): coeff}."""
        entries = [[ring.zero() for _ in columns] for _ in range(target_rank)]
        for j, col in enumerate(columns):
            per_row = {}
            for (p, e), c in col.items():
                per_row.setdefault(p, {})[e] = c
            for p, d in per_row.items():
                entries[p][j] = ring.from_dict(d)
        return cls(ring, entries, source_twists, target_twists)

    @classmethod
    def identity(cls, ring, rank, twists=None):
        one, zero = ring.one(), ring.zero()
        entries = [[one if i == j else zero for j in range(rank)] for i in range(rank)]
        return cls(ring, entries, twists, twists)

    @classmethod
    def zero_matrix(cls, ring, rows, cols, source_twists=None, target_twists=None):
        zero = ring.zero()
        return cls(ring, [[zero] * cols for _ in range(rows)], source_twists, target_twists)

    # -- access ---------------------------------------------------------------

    def entry(self, r, c):
        return self.entries[r][c]

    def column_vector(self, j):
        col = {}
        for r in range(self.rows):
            for e, c in self.entries[r][j].terms:
                col[(r, e)] = c
        return col

    def column_vectors(self):
        return [self.column_vector(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    # -- structure --------------------------------------------------------------

    def compose(self, other: "FreeModuleMatrix") -> "FreeModuleMatrix":
        """self o other (matrix product); cols(self) must equal rows(other)."""
        if other.ring != self.ring:
            raise ValueError("matrices over different rings")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} o {other.rows}x{other.cols}")
        if self.source_twists is not None and other.target_twists is not None:
            if self.source_twists != other.target_twists:
                raise ValueError("twist mismatch in composition")
        entries = []
        for r in range(self.rows):
            row = []
            for c in range(other.cols):
                acc = self.ring.zero()
                for k in range(self.cols):
                    a = self.entries[r][k]
                    b = other.entries[k][c]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            entries.append(row)
        return FreeModuleMatrix(self.ring, entries, other.source_twists, self.target_twists)

    def transpose_dual(self) -> "FreeModuleMatrix":
        """Transpose, with twists negated (Hom(-, R) of the map)."""
        entries = [[self.entries[r][c] for r in range(self.rows)] for c in range(self.cols)]
        st = tuple(-t for t in self.target_twists) if self.target_twists is not None else None
        tt = tuple(-t for t in self.source_twists) if self.source_twists is not None else None
        return FreeModuleMatrix(self.ring, entries, st, tt)

    def is_graded(self) -> bool:
        """Graded-map condition: entry (r, c) homogeneous of degree s_c - t_r or zero."""
        if self.source_twists is None or self.target_twists is None:
            return False
        for r in range(self.rows):
            for c in range(self.cols):
                p = self.entries[r][c]
                if p.is_zero():
                    continue
                want = self.source_twists[c] - self.target_twists[r]
                if not p.is_homogeneous() or p.degree() != want:
                    return False
        return True

    # -- minors --------------------------------------------------------------

    def minors(self, t: int):
        """All t x t minors (Laplace expansion, memoised on index pairs)."""
        from itertools import combinations

        if t < 0:
            raise ValueError("negative minor size")
        if t == 0:
            return [self.ring.one()]
        if t > min(self.rows, self.cols):
            return []
        memo = {}

        def det(rows, cols):
            if len(rows) == 1:
                return self.entries[rows[0]][cols[0]]
            key = (rows, cols)
            hit = memo.get(key)
            if hit is not None:
                return hit
            acc = self.ring.zero()
            r0 = rows[0]
            rest = rows[1:]
            for idx, c in enumerate(cols):
                a = self.entries[r0][c]
                if a.is_zero():
                    continue
                sub = det(rest, cols[:idx] + cols[idx + 1 :])
                term = a * sub
                acc = acc + term if idx % 2 == 0 else acc - term
            memo[key] = acc
            return acc

        out = []
        for rows in combinations(range(self.rows), t):
            for cols in combinations(range(self.cols), t):
                out.append(det(rows, cols))
        return out

    # -- display ---------------------------------------------------------------

    def __repr__(self):
        return f"<{self.rows}x{self.cols} matrix over {self.ring!r}>"

    def __str__(self):
        if not self.entries:
            return "[]"
        cells = [[str(p) for p in row] for row in self.entries]
        width = max((len(s) for row in cells for s in row), default=1)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in row) + " ]" for row in cells)


def matrix_compose(a: FreeModuleMatrix, b: FreeModuleMatrix) -> FreeModuleMatrix:
    return a.compose(b)
