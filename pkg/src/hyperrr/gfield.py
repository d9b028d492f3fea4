"""Exact arithmetic in GF(p^t).

Elements are stored by their index ``sum(digits[i] * p**i)``; that integer is
also the canonical total order used for every deterministic tie-break.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterable, Sequence

from .errors import BadModulus, DivisionByZero, NotPrime

MAX_DEGREE = 6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- helpers on integer coefficient lists over GF(p), low-to-high ------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _zp_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        _trim(a)
    return a


def _zp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        q[shift] = coef
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        _trim(a)
    return q, a


def _zp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _zp_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    t = len(modulus) - 1
    if t == 1:
        return True
    # a root means a linear factor; for t <= 3 that is the only way to factor
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(modulus)) % p == 0:
            return False
    if t <= 3:
        return True
    for deg in range(2, t // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            if not _zp_mod(modulus, list(tail) + [1], p):
                return False
    return True


class FieldCtx:
    """The field GF(p^t); ``modulus`` is the monic defining polynomial (t > 1)."""

    __slots__ = ("p", "t", "modulus", "q", "_mul_cache", "_inv_cache", "_pw")

    def __init__(self, p: int, t: int = 1, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if t < 1:
            raise BadModulus(f"extension degree must be >= 1, got {t}")
        if t > MAX_DEGREE:
            raise BadModulus(f"extension degree {t} exceeds supported maximum {MAX_DEGREE}")
        if t == 1:
            if modulus is not None:
                raise BadModulus("a prime field takes no modulus")
            mod = None
        else:
            if modulus is None:
                raise BadModulus(f"GF({p}^{t}) needs a modulus")
            mod = tuple(int(c) for c in modulus)
            if any(not 0 <= c < p for c in mod):
                raise BadModulus("modulus coefficients must lie in [0, p)")
            if len(mod) != t + 1:
                raise BadModulus(f"modulus must have degree {t}")
            if mod[-1] != 1:
                raise BadModulus("modulus must be monic")
            if not _is_irreducible(mod, p):
                raise BadModulus("modulus is reducible")
        self.p = p
        self.t = t
        self.modulus = mod
        self.q = p**t
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._inv_cache: dict[int, int] = {}
        self._pw = [p**i for i in range(t)]

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.t, self.modulus) == (other.p, other.t, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.t, self.modulus))

    def __repr__(self):
        if self.t == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.t}, mod={list(self.modulus)})"

    # construction ---------------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        """Coerce an int (prime-subfield embedding) or an element of this field."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ValueError(f"element of {value.ctx} used in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        if isinstance(value, (list, tuple)):
            return self.from_digits(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def from_digits(self, digits: Sequence[int]) -> "FieldElement":
        if len(digits) > self.t:
            raise ValueError(f"too many digits for {self}")
        return FieldElement(self, sum((d % self.p) * self._pw[i] for i, d in enumerate(digits)))

    def from_index(self, index: int) -> "FieldElement":
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} out of range for {self}")
        return FieldElement(self, index)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        """All q elements in canonical order, starting at 0."""
        return [FieldElement(self, i) for i in range(self.q)]

    def generator(self) -> "FieldElement":
        """The class of x modulo the defining polynomial (t > 1)."""
        if self.t == 1:
            raise ValueError("prime fields have no adjoined generator")
        return FieldElement(self, self.p)

    # raw arithmetic on indices --------------------------------------------

    def digits(self, v: int) -> list[int]:
        out = []
        for _ in range(self.t):
            v, d = divmod(v, self.p)
            out.append(d)
        return out

    def _index(self, digits: Iterable[int]) -> int:
        return sum(d * self._pw[i] for i, d in enumerate(digits))

    def _add(self, a: int, b: int) -> int:
        if self.t == 1:
            return (a + b) % self.p
        p = self.p
        return self._index((x + y) % p for x, y in zip(self.digits(a), self.digits(b)))

    def _neg(self, a: int) -> int:
        if self.t == 1:
            return -a % self.p
        return self._index(-x % self.p for x in self.digits(a))

    def _mul(self, a: int, b: int) -> int:
        if self.t == 1:
            return a * b % self.p
        if a > b:
            a, b = b, a
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is None:
            prod = _zp_mul(_trim(self.digits(a)), _trim(self.digits(b)), self.p)
            hit = self._index(_zp_mod(prod, self.modulus, self.p))
            self._mul_cache[key] = hit
        return hit

    def _inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.t == 1:
            return pow(a, -1, self.p)
        hit = self._inv_cache.get(a)
        if hit is None:
            hit = self._index(self._poly_inverse(_trim(self.digits(a))))
            self._inv_cache[a] = hit
        return hit

    def _poly_inverse(self, a: list[int]) -> list[int]:
        # extended Euclid on residue polynomials
        p = self.p
        r0, r1 = list(self.modulus), a
        s0, s1 = [], [1]
        while r1:
            quo, rem = _zp_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _zp_sub(s0, _zp_mul(quo, s1, p), p)
        # r0 is a nonzero constant
        c = pow(r0[0], -1, p)
        return [x * c % p for x in s0]

    # textual form ---------------------------------------------------------

    def render(self, x: "FieldElement") -> str:
        if self.t == 1:
            return str(x.v)
        return "[" + ",".join(str(d) for d in x.digits) + "]"

    _EXT = re.compile(r"^\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]$")

    def parse(self, text: str) -> "FieldElement":
        """Inverse of :meth:`render`; plain integers are accepted in any field."""
        text = text.strip()
        m = self._EXT.match(text)
        if m:
            digits = [int(d) for d in m.group(1).split(",")]
            if len(digits) != self.t or any(not 0 <= d < self.p for d in digits):
                raise ValueError(f"bad element {text!r} for {self}")
            return self.from_digits(digits)
        if re.fullmatch(r"\d+", text):
            n = int(text)
            if n >= self.p:
                raise ValueError(f"integer {n} out of range for {self}")
            return FieldElement(self, n)
        raise ValueError(f"cannot parse field element {text!r}")


class FieldElement:
    __slots__ = ("ctx", "v")

    def __init__(self, ctx: FieldCtx, v: int):
        self.ctx = ctx
        self.v = v

    @property
    def digits(self) -> list[int]:
        return self.ctx.digits(self.v)

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ValueError(f"mixing {self.ctx} and {other.ctx}")
            return other
        if isinstance(other, int):
            return FieldElement(self.ctx, other % self.ctx.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add(self.v, o.v))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg(self.v))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add(self.v, self.ctx._neg(o.v)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.v, o.v))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._inv(self.v))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = 1
        base = self.v
        ctx = self.ctx
        while n:
            if n & 1:
                result = ctx._mul(result, base)
            base = ctx._mul(base, base)
            n >>= 1
        return FieldElement(ctx, result)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.v == other.v and self.ctx == other.ctx
        if isinstance(other, int):
            # ints embed via the prime subfield, whose indices are 0..p-1
            return self.v == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.ctx.p, self.ctx.t))

    def __lt__(self, other: "FieldElement"):
        return self.v < other.v

    def __le__(self, other: "FieldElement"):
        return self.v <= other.v

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return self.ctx.render(self)

    __str__ = __repr__


def field_make(p: int, t: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    return FieldCtx(p, t, modulus)


def field_arith(ctx: FieldCtx, op: str, a: FieldElement, b=None) -> FieldElement:
    """Dispatch one of add|sub|mul|div|neg|inv|pow on canonical operands."""
    a = ctx(a)
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if op == "pow":
        return a ** int(b)
    b = ctx(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def field_enumerate(ctx: FieldCtx) -> list[FieldElement]:
    return ctx.elements()
