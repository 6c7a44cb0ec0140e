"""Arithmetic in GF(p^n) with a fixed, reproducible element labeling.

Elements are plain ints in ``range(q)``.  The int is the base-p value of the
coefficient vector of the polynomial representative, constant term least
significant, so 0 and 1 are the field's zero and one and, for q = 4, index 2
is the generator alpha with alpha^2 = alpha + 1 (index 3).
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import DomainError, ParameterError, ResourceError

MAX_ORDER = 1024
TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, n) with q == p**n, or raise ParameterError."""
    if not isinstance(q, int) or q < 2:
        raise ParameterError(f"{q!r} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    if r != 1:
        raise ParameterError(f"{q} is not a prime power")
    return p, n


# Polynomials over GF(p) below are coefficient tuples, constant term first.

def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        if c:
            shift = len(a) - 1 - dm
            for i, mc in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    return a


def _monic_polys(p, d):
    for low in itertools.product(range(p), repeat=d):
        yield low + (1,)


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = tuple(poly)
    d = len(poly) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for div in _monic_polys(p, k):
            if not any(_poly_mod(poly, div, p)):
                return False
    return True


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n.

    Candidates are compared as coefficient sequences read from the constant
    term upward.
    """
    for cand in _monic_polys(p, n):
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


class Field:
    """GF(q) with q = p**n, elements indexed 0..q-1.

    Instances are immutable once built.  Full addition/multiplication tables
    are kept for q <= 256; larger fields multiply through log/antilog tables.
    """

    def __init__(self, p: int, n: int, modulus=None):
        if not _is_prime(p) or n < 1:
            raise ParameterError(f"invalid field shape p={p}, n={n}")
        if modulus is None:
            modulus = smallest_irreducible(p, n)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ParameterError("modulus must be monic of degree n")
        if not is_irreducible(modulus, p):
            raise ParameterError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = modulus
        self._powers = [p**i for i in range(n)]
        self._build_tables()

    # -- representation -------------------------------------------------
    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coefficient vector of element ``x``, constant term first."""
        out = []
        for _ in range(self.n):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def element(self, coeffs) -> int:
        coeffs = list(coeffs) + [0] * (self.n - len(coeffs))
        if len(coeffs) > self.n or any(not 0 <= c < self.p for c in coeffs):
            raise ParameterError(f"invalid coefficient vector {coeffs}")
        return sum(c * w for c, w in zip(coeffs, self._powers))

    def elements(self) -> range:
        return range(self.q)

    def _poly_mul(self, a: int, b: int) -> int:
        p, n = self.p, self.n
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.element(_poly_mod(prod, self.modulus, p)[:n])

    def _digit_add(self, a: int, b: int, sign: int = 1) -> int:
        if self.p == 2:
            return a ^ b
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.element([(x + sign * y) % self.p for x, y in zip(ca, cb)])

    def _build_tables(self):
        q = self.q
        # generator: smallest index of multiplicative order q-1
        self._exp = None
        for g in range(2, q) if q > 2 else [1]:
            seq = [1]
            x = g
            while x != 1:
                seq.append(x)
                x = self._poly_mul(x, g)
            if len(seq) == q - 1:
                self._exp = seq
                self.generator = g
                break
        if self._exp is None:
            raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover
        self._log = [0] * q
        for i, x in enumerate(self._exp):
            self._log[x] = i
        if q <= TABLE_LIMIT:
            self._add_t = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]
            self._neg_t = [self._digit_add(0, a, -1) for a in range(q)]
            self._mul_t = [[self._mul_log(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_t = self._neg_t = self._mul_t = None
        self._inv_t = [0] + [self._exp[(-self._log[a]) % (q - 1)] for a in range(1, q)]

    def _mul_log(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    # -- arithmetic -----------------------------------------------------
    def _check(self, *xs):
        for x in xs:
            if not isinstance(x, int) or not 0 <= x < self.q:
                raise ParameterError(f"{x!r} is not an element of GF({self.q})")

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a][b]
        self._check(a, b)
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        if self._neg_t is not None:
            return self._neg_t[a]
        self._check(a)
        return self._digit_add(0, a, -1)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a][b]
        self._check(a, b)
        return self._mul_log(a, b)

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DomainError("0 has no multiplicative inverse")
        return self._inv_t[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if a == 0:
            if e < 0:
                raise DomainError("0 has no multiplicative inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DomainError("0 has no multiplicative order")
        k = 1
        x = a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def mul_table(self) -> bytes:
        """Serialized multiplication table; used to check labeling stability."""
        width = 2 if self.q > 256 else 1
        return b"".join(
            self.mul(a, b).to_bytes(width, "little") for a in range(self.q) for b in range(self.q)
        )

    def __repr__(self):
        return f"Field(q={self.q}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def field_create(q: int) -> Field:
    """Return GF(q), using the smallest monic irreducible modulus."""
    p, n = prime_power(q)
    if q > MAX_ORDER:
        raise ResourceError(f"GF({q}) exceeds the desk-scale limit q <= {MAX_ORDER}")
    return Field(p, n)


def field_arith(f: Field, op: str, *args: int) -> int:
    """Dispatch ``op`` in {add, sub, mul, inv, pow} by name."""
    ops = {"add": f.add, "sub": f.sub, "mul": f.mul, "inv": f.inv, "pow": f.pow}
    if op not in ops:
        raise ParameterError(f"unknown field operation {op!r}")
    return ops[op](*args)


def suzuki_exponent(f: Field) -> int:
    """2**(e+1) for GF(2**(2e+1)), e >= 1."""
    if f.p != 2 or f.n % 2 == 0 or f.n < 3:
        raise ParameterError(f"GF({f.q}) is not of the form GF(2^(2e+1)) with e >= 1")
    return 2 ** ((f.n - 1) // 2 + 1)


def suzuki_sigma(f: Field, x: int) -> int:
    """The field endomorphism x -> x^(2^(e+1)); applying it twice squares x."""
    return f.pow(x, suzuki_exponent(f))
