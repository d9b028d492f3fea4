"""Dense univariate polynomials over a FieldCtx and Gauss-Jordan linear algebra."""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivisionByZero, SingularSystem
from .gfield import FieldCtx, FieldElement

NEG_INF = float("-inf")


class Poly:
    """Polynomial with coefficients low-to-high; the zero polynomial has no coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        cs = [ctx(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs: tuple[FieldElement, ...] = tuple(cs)

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [0, 1])

    @classmethod
    def const(cls, ctx: FieldCtx, c) -> "Poly":
        return cls(ctx, [c])

    @classmethod
    def linear_root(cls, ctx: FieldCtx, a) -> "Poly":
        """The monic polynomial x - a."""
        return cls(ctx, [-ctx(a), 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero

    def _lift(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly(self.ctx, [other])
        return None

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.ctx == o.ctx and self.coeffs == o.coeffs

    def __hash__(self):
        return hash(tuple(c.v for c in self.coeffs))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.ctx, [self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly(self.ctx)
        zero = self.ctx.zero
        out = [zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly(self.ctx, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if not o:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(o.coeffs) - 1
        inv_lead = o.lead.inv()
        quo = [self.ctx.zero] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv_lead
            quo[k] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(self.ctx, quo), Poly(self.ctx, rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self * self.lead.inv()

    def scale(self, c) -> "Poly":
        return Poly(self.ctx, [a * c for a in self.coeffs])

    def derivative(self) -> "Poly":
        # i * a_i with i reduced mod p by the int coercion
        return Poly(self.ctx, [c * i for i, c in enumerate(self.coeffs)][1:])

    def shift(self, c) -> "Poly":
        """Return a(x + c)."""
        c = self.ctx(c)
        lin = Poly(self.ctx, [c, 1])
        acc = Poly(self.ctx)
        for a in reversed(self.coeffs):
            acc = acc * lin + a
        return acc

    def order_at(self, a) -> float:
        """Multiplicity of the root a (``inf`` for the zero polynomial)."""
        if not self.coeffs:
            return float("inf")
        a = self.ctx(a)
        k = 0
        cur = list(self.coeffs)
        while True:
            # synthetic division by (x - a)
            acc = self.ctx.zero
            quo = []
            for c in reversed(cur):
                acc = acc * a + c
                quo.append(acc)
            if acc:
                return k
            k += 1
            cur = list(reversed(quo[:-1]))

    def strip_root(self, a) -> tuple[int, "Poly"]:
        """Split off the full power of (x - a): self = (x - a)^k * rest."""
        k = self.order_at(a)
        if k == float("inf"):
            raise DivisionByZero("zero polynomial has infinite order")
        return k, self // (Poly.linear_root(self.ctx, a) ** k)

    def taylor(self, a, n: int) -> list[FieldElement]:
        """First n coefficients of the expansion in powers of (x - a)."""
        s = self.shift(a)
        return [s.coeff(i) for i in range(n)]

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            r = str(c)
            if i == 0:
                parts.append(r)
            elif i == 1:
                parts.append(f"{r}*x")
            else:
                parts.append(f"{r}*x^{i}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.render()})"

    __str__ = render


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def resultant(a: Poly, b: Poly) -> FieldElement:
    """Resultant of a and b taken at their actual degrees; zero if either is zero."""
    ctx = a.ctx
    if not a or not b:
        return ctx.zero
    sign_acc = ctx.one
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return sign_acc * b.lead ** m
        r = a % b
        if not r:
            return ctx.zero
        # Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r)
        factor = b.lead ** (m - r.degree)
        if (m * n) % 2:
            factor = -factor
        sign_acc = sign_acc * factor
        a, b = b, r


def poly_arith(ctx: FieldCtx, op: str, a: Poly, b=None):
    """Dispatch add|sub|mul|divrem|gcd|derivative|eval|shift_compose."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divrem":
        return divmod(a, b)
    if op == "gcd":
        return poly_gcd(a, b)
    if op == "derivative":
        return a.derivative()
    if op == "eval":
        return a(ctx(b))
    if op == "shift_compose":
        return a.shift(b)
    raise ValueError(f"unknown polynomial operation {op!r}")


class Matrix:
    """Dense row-major matrix over a FieldCtx."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx: FieldCtx, rows: int, cols: int, entries: Sequence | None = None):
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.entries = [ctx.zero] * (rows * cols)
        else:
            if len(entries) != rows * cols:
                raise ValueError("entry count does not match shape")
            self.entries = [ctx(e) for e in entries]

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(ctx, len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "Matrix":
        return cls.from_rows(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.entries[i * self.cols + j] = self.ctx(value)

    def row(self, i: int) -> list[FieldElement]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> list[FieldElement]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[FieldElement]]:
        return [self.row(i) for i in range(self.rows)]

    def to_ints(self) -> list[list[int]]:
        return [[e.v for e in r] for r in self.to_rows()]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def transpose(self) -> "Matrix":
        if not self.rows:
            return Matrix(self.ctx, self.cols, 0)
        return Matrix.from_rows(self.ctx, [self.column(j) for j in range(self.cols)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        zero = self.ctx.zero
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    if r[k]:
                        acc = acc + r[k] * other[k, j]
                out.append(acc)
        return Matrix(self.ctx, self.rows, other.cols, out)

    def apply(self, vec: Sequence) -> list[FieldElement]:
        zero = self.ctx.zero
        out = []
        for i in range(self.rows):
            acc = zero
            for a, v in zip(self.row(i), vec):
                acc = acc + a * v
            out.append(acc)
        return out

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and pivot columns.

        The pivot for each column is the first remaining row with a nonzero entry,
        so the result is deterministic.
        """
        rows = [list(r) for r in self.to_rows()]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            if r == len(rows):
                break
            piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = rows[r][c].inv()
            rows[r] = [e * inv for e in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    factor = rows[i][c]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.ctx, self.rows, self.cols, [e for row in rows for e in row]), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices are invertible")
        n = self.rows
        aug = Matrix.from_rows(
            self.ctx,
            [self.row(i) + [1 if i == j else 0 for j in range(n)] for i in range(n)],
        )
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise SingularSystem("matrix is singular")
        return Matrix.from_rows(self.ctx, [red.row(i)[n:] for i in range(n)])

    def to_tsv(self) -> str:
        return "\n".join("\t".join(str(e) for e in self.row(i)) for i in range(self.rows))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})\n{self.to_tsv()}"


def linsolve(ctx: FieldCtx, A: Matrix, rhs: Sequence) -> tuple[list[FieldElement] | None, list[list[FieldElement]]]:
    """Solve A x = rhs.

    Returns ``(particular, nullspace)``. The particular solution has every free
    variable set to 0 and is ``None`` when the system is inconsistent; each
    nullspace vector sets one free variable to 1 and the others to 0.
    """
    rhs = [ctx(v) for v in rhs]
    if len(rhs) != A.rows:
        raise ValueError("rhs length must equal the number of rows")
    aug = Matrix(ctx, A.rows, A.cols + 1, [e for i in range(A.rows) for e in A.row(i) + [rhs[i]]])
    red, pivots = aug.rref()
    n = A.cols
    free = [c for c in range(n) if c not in pivots]
    null = []
    for fcol in free:
        v = [ctx.zero] * n
        v[fcol] = ctx.one
        for r, pc in enumerate(pivots):
            if pc < n:
                v[pc] = -red[r, fcol]
        null.append(v)
    if n in pivots:
        return None, null
    x = [ctx.zero] * n
    for r, pc in enumerate(pivots):
        x[pc] = red[r, n]
    return x, null
