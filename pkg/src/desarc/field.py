"""Exact arithmetic in GF(p^k) with canonical integer-coded elements.

An element of GF(p) is its residue in [0, p).  An element of GF(p^k) is a
coefficient vector (c0, c1, ..., c_{k-1}) over GF(p) packed into the single
integer c0 + c1*p + ... + c_{k-1}*p^(k-1).  Equality of elements is equality
of integers, and the enumeration order 0, 1, ..., q-1 starts with the zero
and one of the field, which keeps every downstream construction
deterministic.

Prime fields compute with plain modular arithmetic; extension fields of
small order precompute full operation tables, larger ones reduce polynomials
on the fly.
"""

from __future__ import annotations

from itertools import product

from .errors import DivisionByZero, InvalidField, MixedFields

# Irreducible moduli for the desk-scale extension fields, coefficient order
# constant-term first, monic.
DEFAULT_MODULI = {
    4: (1, 1, 1),         # x^2 + x + 1 over GF(2)
    8: (1, 1, 0, 1),      # x^3 + x + 1 over GF(2)
    9: (1, 0, 1),         # x^2 + 1 over GF(3)
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1 over GF(2)
    25: (2, 0, 1),        # x^2 + 2 over GF(5)
    27: (1, 2, 0, 1),     # x^3 + 2x + 1 over GF(3)
}

_TABLE_LIMIT = 64   # precompute mul/inv tables up to this order
_ORDER_LIMIT = 2 ** 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def _poly_divmod(a, b, p):
    # b monic-izable; returns (quotient, remainder) over GF(p)
    a = list(a)
    _poly_trim(a)
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = (a[-1] * lead_inv) % p
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _poly_trim(a)
    return q, a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _poly_trim([(x - y) % p for x, y in zip(a, b)])


def _poly_inv_mod(a, modulus, p):
    # extended Euclid in GF(p)[x]; a invertible mod modulus
    r0, r1 = list(modulus), _poly_trim(list(a))
    t0, t1 = [], [1]
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1, p), p)
    if len(r0) != 1:
        raise DivisionByZero("element is not invertible")
    c_inv = pow(r0[0], p - 2, p)
    return [(x * c_inv) % p for x in t0]


def _irreducible(modulus, p) -> bool:
    """Exhaustive factor test: no monic divisor of degree 1..deg//2."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = list(tail) + [1]
            _, rem = _poly_divmod(list(modulus), divisor, p)
            if not rem:
                return False
    return True


class GF:
    """The field GF(p^k), acting as both field spec and arithmetic context.

    Instances are immutable and compare equal when (p, k, modulus) agree.
    The callable attributes add/sub/mul/neg/inv work on integer element
    codes; `element` wraps a code into a FieldElement with operator support.
    """

    __slots__ = ("p", "k", "q", "modulus", "add", "sub", "mul", "neg", "inv")

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not _is_prime(p):
            raise InvalidField(f"characteristic {p} is not prime")
        if k < 1:
            raise InvalidField("degree must be a positive integer")
        q = p ** k
        if q > _ORDER_LIMIT:
            raise InvalidField(f"order {q} exceeds the supported limit {_ORDER_LIMIT}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "q", q)

        if k == 1:
            if modulus is not None:
                raise InvalidField("a modulus is only meaningful for k > 1")
            object.__setattr__(self, "modulus", None)
            self._init_prime_ops()
        else:
            if modulus is None:
                modulus = DEFAULT_MODULI.get(q)
                if modulus is None:
                    raise InvalidField(
                        f"no built-in modulus for GF({q}); pass one explicitly")
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1:
                raise InvalidField(f"modulus must have {k + 1} coefficients")
            if modulus[-1] != 1:
                raise InvalidField("modulus must be monic")
            if k <= 4 and not _irreducible(modulus, p):
                raise InvalidField("modulus is reducible over the prime field")
            if k > 4:
                # root test only; full factoring is quadratic in q
                for t in range(p):
                    acc = 0
                    for c in reversed(modulus):
                        acc = (acc * t + c) % p
                    if acc == 0:
                        raise InvalidField("modulus has a root in the prime field")
            object.__setattr__(self, "modulus", modulus)
            self._init_ext_ops()

    def __setattr__(self, name, value):  # ops are installed via object.__setattr__
        raise AttributeError("GF instances are immutable")

    def _init_prime_ops(self):
        p = self.p

        def inv(a, _p=p):
            if a % _p == 0:
                raise DivisionByZero("inverse of zero")
            return pow(a, _p - 2, _p)

        object.__setattr__(self, "add", lambda a, b, _p=p: (a + b) % _p)
        object.__setattr__(self, "sub", lambda a, b, _p=p: (a - b) % _p)
        object.__setattr__(self, "mul", lambda a, b, _p=p: (a * b) % _p)
        object.__setattr__(self, "neg", lambda a, _p=p: (-a) % _p)
        object.__setattr__(self, "inv", inv)

    def _init_ext_ops(self):
        p, k, q, modulus = self.p, self.k, self.q, self.modulus

        def decode(v):
            out = []
            for _ in range(k):
                v, r = divmod(v, p)
                out.append(r)
            return out

        def encode(c):
            v = 0
            for x in reversed(c):
                v = v * p + x
            return v

        def raw_add(a, b):
            ca, cb = decode(a), decode(b)
            return encode([(x + y) % p for x, y in zip(ca, cb)])

        def raw_sub(a, b):
            ca, cb = decode(a), decode(b)
            return encode([(x - y) % p for x, y in zip(ca, cb)])

        def raw_neg(a):
            return encode([(-x) % p for x in decode(a)])

        def raw_mul(a, b):
            prod = _poly_mul(_poly_trim(decode(a)), _poly_trim(decode(b)), p)
            _, rem = _poly_divmod(prod, list(modulus), p) if prod else ([], [])
            rem = rem + [0] * (k - len(rem))
            return encode(rem)

        def raw_inv(a):
            if a == 0:
                raise DivisionByZero("inverse of zero")
            c = _poly_inv_mod(_poly_trim(decode(a)), list(modulus), p)
            c = c + [0] * (k - len(c))
            return encode(c[:k])

        if q <= _TABLE_LIMIT:
            add_t = [[raw_add(a, b) for b in range(q)] for a in range(q)]
            sub_t = [[raw_sub(a, b) for b in range(q)] for a in range(q)]
            mul_t = [[raw_mul(a, b) for b in range(q)] for a in range(q)]
            neg_t = [raw_neg(a) for a in range(q)]
            inv_t = [0] + [raw_inv(a) for a in range(1, q)]

            def inv(a, _t=inv_t):
                if a == 0:
                    raise DivisionByZero("inverse of zero")
                return _t[a]

            object.__setattr__(self, "add", lambda a, b, _t=add_t: _t[a][b])
            object.__setattr__(self, "sub", lambda a, b, _t=sub_t: _t[a][b])
            object.__setattr__(self, "mul", lambda a, b, _t=mul_t: _t[a][b])
            object.__setattr__(self, "neg", lambda a, _t=neg_t: _t[a])
            object.__setattr__(self, "inv", inv)
        else:
            object.__setattr__(self, "add", raw_add)
            object.__setattr__(self, "sub", raw_sub)
            object.__setattr__(self, "mul", raw_mul)
            object.__setattr__(self, "neg", raw_neg)
            object.__setattr__(self, "inv", raw_inv)

    # -- derived operations ------------------------------------------------

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def scalar(self, m: int) -> int:
        """The image of the rational integer m under the natural map into
        the field, i.e. m copies of 1 summed up."""
        return m % self.p

    def coeffs(self, v: int) -> tuple:
        """Coefficient vector of an element code, length k, constant first."""
        out = []
        for _ in range(self.k):
            v, r = divmod(v, self.p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        if len(coeffs) != self.k:
            raise InvalidField(f"expected {self.k} coefficients")
        v = 0
        for x in reversed([c % self.p for c in coeffs]):
            v = v * self.p + x
        return v

    # -- element interface ---------------------------------------------------

    def element(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field != self:
                raise MixedFields(f"element of {x.field} used in {self}")
            return x
        v = int(x)
        if self.k == 1:
            v %= self.p
        elif not 0 <= v < self.q:
            raise InvalidField(f"element code {v} out of range for {self}")
        return FieldElement(self, v)

    def value(self, x) -> int:
        """Integer code of x, which may be a FieldElement or an int code."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise MixedFields(f"element of {x.field} used in {self}")
            return x.value
        v = int(x)
        if self.k == 1:
            return v % self.p
        if not 0 <= v < self.q:
            raise InvalidField(f"element code {v} out of range for {self}")
        return v

    def elements(self):
        """All q elements: zero first, one second, then the remaining codes
        in increasing order."""
        return [FieldElement(self, v) for v in range(self.q)]

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, GF) and self.p == other.p
                and self.k == other.k and self.modulus == other.modulus)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


def enumerate_field(field: GF):
    """Deterministic enumeration of all field elements."""
    return field.elements()


class FieldElement:
    """A field element carrying its field handle; supports +,-,*,/ and inv.

    Mixing elements of different fields raises MixedFields.  Plain ints on
    either side are coerced into the element's field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(
                    f"cannot combine {self.field} and {other.field} elements")
            return other.value
        return self.field.value(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._coerce(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    @property
    def coeffs(self):
        return self.field.coeffs(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            try:
                return self.value == self.field.value(other)
            except InvalidField:
                return False
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        if self.field.k == 1:
            return f"GF({self.field.q}).{self.value}"
        return f"GF({self.field.q}).{list(self.coeffs)}"
