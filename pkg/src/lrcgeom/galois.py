"""Exact arithmetic in GF(p^m) with a fixed, reproducible element encoding.

Field elements are plain Python integers ("codes").  The element with
polynomial form  sum_i c_i * x^i  (0 <= c_i < p) has code  sum_i c_i * p^i,
which is a bijection between field elements and the range [0, q).  All
arithmetic goes through a `GF` instance; codes from different fields must
never be mixed (matrix and geometry layers enforce this).

Default moduli are frozen so that codes, and every file this package
writes, are bit-reproducible.  For p = 2 the default modulus of degree m
is the irreducible polynomial with the smallest integer encoding whose
root x generates the multiplicative group (the "smallest primitive"
polynomial):

    m=2 : x^2 + x + 1                     -> 7
    m=3 : x^3 + x + 1                     -> 11
    m=4 : x^4 + x + 1                     -> 19
    m=5 : x^5 + x^2 + 1                   -> 37
    m=6 : x^6 + x + 1                     -> 67
    m=7 : x^7 + x + 1                     -> 131
    m=8 : x^8 + x^4 + x^3 + x^2 + 1       -> 285
    m=9 : x^9 + x^4 + 1                   -> 529
    m=10: x^10 + x^3 + 1                  -> 1033
    m=11: x^11 + x^2 + 1                  -> 2053
    m=12: x^12 + x^6 + x^4 + x + 1        -> 4179
    m=13: x^13 + x^4 + x^3 + x + 1        -> 8219
    m=14: x^14 + x^5 + x^3 + x + 1        -> 16427
    m=15: x^15 + x + 1                    -> 32771
    m=16: x^16 + x^5 + x^3 + x^2 + 1      -> 65581

For m = 1 the default modulus is x itself (encoding p) and arithmetic is
plain integer arithmetic mod p.  For other (p, m) the same
smallest-primitive rule is applied on demand; the search is deterministic,
so encodings remain reproducible.

Inversion is extended Euclid on polynomials.  Fields with m > 1 and
q <= 2^16 additionally build log/exp tables (from the same polynomial
multiplication, hence bit-identical) to speed up products.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

_BINARY_DEFAULT_MODULI = {
    1: 2,  # x
    2: 7,
    3: 11,
    4: 19,
    5: 37,
    6: 67,
    7: 131,
    8: 285,
    9: 529,
    10: 1033,
    11: 2053,
    12: 4179,
    13: 8219,
    14: 16427,
    15: 32771,
    16: 65581,
}

_LOG_TABLE_MAX = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (fields here are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as {prime: exponent}."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p^m if q is a prime power, else None."""
    if q < 2:
        return None
    fs = factorize(q)
    if len(fs) != 1:
        return None
    ((p, m),) = fs.items()
    return p, m


# ----------------------------------------------------------------------
# Polynomials over GF(p): coefficient tuples, low-to-high, no trailing 0.
# ----------------------------------------------------------------------

def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_divmod(f: Sequence[int], g: Sequence[int], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    quo = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and any(f):
        if f[-1] == 0:
            f.pop()
            continue
        shift = len(f) - 1 - dg
        c = (f[-1] * inv_lead) % p
        quo[shift] = c
        for i in range(dg + 1):
            f[shift + i] = (f[shift + i] - c * g[i]) % p
        f.pop()
    return _poly_trim(quo), _poly_trim(f)


def _poly_from_code(code: int, p: int) -> tuple[int, ...]:
    c = []
    while code:
        code, r = divmod(code, p)
        c.append(r)
    return tuple(c)


def _poly_to_code(c: Sequence[int], p: int) -> int:
    code = 0
    for d in reversed(c):
        code = code * p + d
    return code


def _monic_polys_of_degree(d: int, p: int) -> Iterator[tuple[int, ...]]:
    for low in range(p**d):
        yield _poly_from_code(low, p) + (0,) * (d - len(_poly_from_code(low, p))) + (1,)


def poly_is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division against all monic polynomials of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if coeffs[0] == 0:
        return False  # divisible by x
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys_of_degree(d, p):
            _, rem = _poly_divmod(coeffs, g, p)
            if not rem:
                return False
    return True


class GF:
    """The finite field GF(p^m) with a fixed monic irreducible modulus.

    Elements are integer codes in [0, q); see the module docstring for the
    encoding.  Instances are immutable and hashable; two instances compare
    equal iff they have the same (p, m, modulus).
    """

    __slots__ = (
        "p", "m", "q", "modulus", "modulus_code",
        "_exp", "_log", "_xpow", "_mul_rows", "_generator",
    )

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"degree must be positive, got {m}")
        if modulus is None:
            modulus = _default_modulus(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        while modulus and modulus[-1] == 0:
            modulus = modulus[:-1]
        if len(modulus) - 1 != m:
            raise ValueError(f"modulus degree {len(modulus) - 1} != field degree {m}")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if not poly_is_irreducible(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self.modulus_code = _poly_to_code(modulus, p)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._mul_rows: dict[int, list[int]] = {}
        self._generator: int | None = None
        if m > 1:
            # x^k mod modulus for k = m .. 2m-2, as length-m coefficient rows
            xpow = []
            cur = list(modulus[:-1])  # x^m = -(low part), monic
            if p > 2:
                cur = [(-c) % p for c in cur]
            xpow.append(tuple(cur))
            for _ in range(m - 2):
                nxt = [0] + cur[:-1]
                lead = cur[-1]
                if lead:
                    top = xpow[0]
                    for i in range(m):
                        nxt[i] = (nxt[i] + lead * top[i]) % p
                cur = nxt
                xpow.append(tuple(cur))
            self._xpow = tuple(xpow)
        else:
            self._xpow = ()

    # -- identity ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    # -- element enumeration and encoding -------------------------------

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (length m, low-to-high) of an element code."""
        self._check(a)
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, c: Sequence[int]) -> int:
        code = 0
        for d in reversed([x % self.p for x in c]):
            code = code * self.p + d
        return code

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"element code {a} out of range for {self!r}")

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.m):
            out += ((-a) % p) * mul
            a //= p
            mul *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            m, mod, r = self.m, self.modulus_code, 0
            top = 1 << m
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod
            return r
        p, m = self.p, self.m
        ca = self.coeffs(a)
        cb = self.coeffs(b)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(ca):
            if ai:
                for j, bj in enumerate(cb):
                    prod[i + j] += ai * bj
        res = [c % p for c in prod[:m]]
        for k in range(m, 2 * m - 1):
            c = prod[k] % p
            if c:
                row = self._xpow[k - m]
                for i in range(m):
                    res[i] = (res[i] + c * row[i]) % p
        return self.from_coeffs(res)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        self._check(a)
        if self.m == 1:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1) - self._log[a]]
        return self._inv_euclid(a)

    def _inv_euclid(self, a: int) -> int:
        # extended Euclid on (modulus, a) over GF(p)[x]
        p = self.p
        r0, r1 = self.modulus, _poly_from_code(a, p) if p != 2 else _poly_from_code(a, 2)
        t0: tuple[int, ...] = ()
        t1: tuple[int, ...] = (1,)
        while r1:
            quo, rem = _poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            # t0 - quo * t1
            prod = [0] * (len(quo) + len(t1))
            for i, qi in enumerate(quo):
                if qi:
                    for j, tj in enumerate(t1):
                        prod[i + j] = (prod[i + j] + qi * tj) % p
            nt = [0] * max(len(t0), len(prod))
            for i, c in enumerate(t0):
                nt[i] = c
            for i, c in enumerate(prod):
                nt[i] = (nt[i] - c) % p
            t0, t1 = t1, _poly_trim(nt)
        # r0 is gcd, a nonzero constant since modulus is irreducible
        scale = pow(r0[0], -1, p)
        res = self.from_coeffs([(c * scale) % p for c in t0] + [0] * self.m)
        return res

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    # -- multiplicative structure ----------------------------------------

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.q - 1
        if n == 0:
            raise ValueError("trivial group")
        order = n
        for prime in factorize(n):
            while order % prime == 0 and self.pow(a, order // prime) == 1:
                order //= prime
        return order

    def primitive_element(self) -> int:
        """Smallest element code whose multiplicative order is q - 1."""
        if self.q < 2:
            raise ValueError("field too small")
        if self._generator is None:
            if self.q == 2:
                self._generator = 1
            else:
                n = self.q - 1
                primes = list(factorize(n))
                for g in range(1, self.q):
                    if all(self.pow(g, n // r) != 1 for r in primes):
                        self._generator = g
                        break
                else:  # pragma: no cover - cannot happen, F_q* is cyclic
                    raise AssertionError("no generator found")
        return self._generator

    def generator_powers(self) -> list[int]:
        """The units g^0, g^1, ..., g^(q-2) in this fixed order."""
        g = self.primitive_element()
        out = [1]
        for _ in range(self.q - 2):
            out.append(self.mul(out[-1], g))
        return out

    # -- acceleration ------------------------------------------------------

    def enable_log_tables(self) -> None:
        """Build log/exp tables (no-op for m=1 or q > 2^16)."""
        if self.m == 1 or self.q > _LOG_TABLE_MAX or self._exp is not None:
            return
        g = self.primitive_element()
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [0] * self.q
        v = 1
        for i in range(n):
            exp[i] = v
            exp[i + n] = v
            log[v] = i
            v = self._mul_poly(v, g)
        self._exp = exp
        self._log = log

    def mul_row(self, c: int) -> list[int]:
        """The row [c*0, c*1, ..., c*(q-1)], cached; used by elimination."""
        row = self._mul_rows.get(c)
        if row is None:
            row = [self.mul(c, y) for y in range(self.q)]
            self._mul_rows[c] = row
        return row


def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    if p == 2 and m in _BINARY_DEFAULT_MODULI:
        return _poly_from_code(_BINARY_DEFAULT_MODULI[m], 2)
    if p**m > _LOG_TABLE_MAX:
        raise ValueError(
            f"no built-in modulus for GF({p}^{m}); pass one explicitly"
        )
    return _smallest_primitive_modulus(p, m)


def _smallest_primitive_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest-encoding monic irreducible with x a generator (deterministic)."""
    n = p**m - 1
    primes = list(factorize(n))
    for low in range(1, p**m):
        coeffs = _poly_from_code(low, p)
        coeffs = coeffs + (0,) * (m - len(coeffs)) + (1,)
        if coeffs[0] == 0 or not poly_is_irreducible(coeffs, p):
            continue
        f = GF.__new__(GF)
        try:
            f.__init__(p, m, coeffs)
        except ValueError:  # pragma: no cover
            continue
        if f.element_order(p) == n:  # code p encodes the polynomial x
            return coeffs
    raise AssertionError(f"no primitive polynomial of degree {m} over GF({p})")


def field_create(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> GF:
    """Create and validate a field; `modulus` is low-to-high coefficients."""
    return GF(p, m, modulus)


def field_for_order(q: int) -> GF:
    """GF(q) with the default modulus, for q a prime power."""
    pm = is_prime_power(q)
    if pm is None:
        raise ValueError(f"{q} is not a prime power")
    p, m = pm
    return GF(p, m)
