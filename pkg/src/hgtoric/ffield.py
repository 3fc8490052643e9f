"""Finite fields F_q, multiplicative/additive characters, Gauss-sum tables.

Field elements are plain ints in [0, q): the base-p digit encoding of the
polynomial representative, so prime-field elements are just residues. The
modulus and the multiplicative generator are the first valid candidates in
increasing encoding order, which makes every downstream table reproducible
bit for bit.

Roots of unity and Gauss sums are double-precision complex numbers; sums are
accumulated with Kahan compensation. Exact cyclotomic arithmetic is out of
scope: every consumer either verifies an identity to tolerance or rounds an
integer with a hard residual guard.
"""

import cmath
from functools import lru_cache
from math import gcd

FIELD_BOUND = 2**20   # largest q = p^k make_field accepts
CHAR_BOUND = 2**16    # largest q for character/Gauss tables


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_mul_mod(a, b, mod, p):
    """Product of coefficient lists a*b reduced mod (mod, p); mod is monic."""
    k = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(k + 1):
                out[i - k + j] = (out[i - k + j] - c * mod[j]) % p
    out = out[:k]
    return out + [0] * (k - len(out))


def _poly_pow_mod(a, e, mod, p):
    k = len(mod) - 1
    result = [1] + [0] * (k - 1)
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mul_mod(result, base, mod, p)
        base = _poly_mul_mod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while any(b):
        while b and b[-1] == 0:
            b.pop()
        inv = pow(b[-1], -1, p)
        b = [(x * inv) % p for x in b]
        while len(a) >= len(b) and any(a):
            while a and a[-1] == 0:
                a.pop()
            if len(a) < len(b):
                break
            c = a[-1]
            shift = len(a) - len(b)
            a = [(x - c * b[i - shift]) % p if i >= shift else x for i, x in enumerate(a)]
        a, b = b, a
    return a


def _is_irreducible(coeffs, p):
    """Irreducibility of a monic poly over F_p: x^(p^k) = x mod f and
    gcd(x^(p^(k/l)) - x, f) = 1 for every prime l | k."""
    k = len(coeffs) - 1
    if coeffs[0] == 0:  # divisible by x
        return k == 1
    x = [0, 1] + [0] * (k - 2) if k >= 2 else [0]
    if k == 1:
        return True
    frob = list(x)
    powers = {}
    for j in range(1, k + 1):
        frob = _poly_pow_mod(frob, p, coeffs, p)
        powers[j] = list(frob)
    top = powers[k]
    minus_x = [(a - b) % p for a, b in zip(top, x + [0] * (len(top) - len(x)))]
    if any(minus_x):
        return False
    kk = k
    primes = set()
    d = 2
    while d * d <= kk:
        while kk % d == 0:
            primes.add(d)
            kk //= d
        d += 1
    if kk > 1:
        primes.add(kk)
    for l in primes:
        sub = powers[k // l]
        diff = [(a - b) % p for a, b in zip(sub, x + [0] * (len(sub) - len(x)))]
        g = _poly_gcd(list(coeffs), diff, p)
        if sum(1 for c in g if c) != 1 or (len(g) > 1 and any(g[1:])):
            return False
    return True


class Field:
    """F_q = F_p[x]/(modulus), elements encoded as ints in [0, q)."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus  # little-endian, monic, length k+1
        self._xred = None
        if k > 1:
            # x^(k+i) mod modulus for i = 0..k-2, as digit tuples
            red = []
            cur = [(-c) % p for c in modulus[:k]]  # x^k
            red.append(list(cur))
            for _ in range(k - 2):
                cur = [0] + cur
                top = cur.pop()
                if top:
                    cur = [(a - top * c) % p for a, c in zip(cur, modulus[:k])]
                red.append(list(cur))
            self._xred = red

    def __repr__(self):
        return f"F({self.p}^{self.k})" if self.k > 1 else f"F({self.p})"

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus))

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # -- encoding ----------------------------------------------------------
    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_coeffs(self, cs) -> int:
        a = 0
        for c in reversed(list(cs)):
            a = a * self.p + (c % self.p)
        return a

    def from_int(self, n: int) -> int:
        """Image of the rational integer n in F_q (lands in the prime field)."""
        return n % self.p

    def serialize(self, a: int):
        return a if self.k == 1 else self.coeffs(a)

    def deserialize(self, obj) -> int:
        if isinstance(obj, int):
            a = obj
        else:
            a = self.from_coeffs(obj)
        if not 0 <= a < self.q:
            raise FieldError(f"element {obj} out of range for {self}")
        return a

    # -- arithmetic ---------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.k):
            out += ((a + b) % p) * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.from_coeffs([(-c) % self.p for c in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        p = self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        out = [c % p for c in prod[:self.k]]
        for i in range(self.k, len(prod)):
            c = prod[i] % p
            if c:
                red = self._xred[i - self.k]
                out = [(o + c * r) % p for o, r in zip(out, red)]
        return self.from_coeffs(out)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def trace(self, a: int) -> int:
        """Absolute trace to F_p (as an int in [0, p))."""
        t = 0
        cur = a
        for _ in range(self.k):
            t = self.add(t, cur)
            cur = self.pow(cur, self.p)
        assert t < self.p
        return t


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> Field:
    """Deterministic F_{p^k}: first irreducible monic modulus in encoding order."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("k must be >= 1")
    if p**k > FIELD_BOUND:
        raise FieldError(f"q = {p}^{k} exceeds the field bound {FIELD_BOUND}")
    if k == 1:
        return Field(p, 1, (0, 1))
    for enc in range(p**k):
        coeffs = []
        e = enc
        for _ in range(k):
            coeffs.append(e % p)
            e //= p
        coeffs.append(1)
        if _is_irreducible(coeffs, p):
            return Field(p, k, tuple(coeffs))
    raise FieldError("no irreducible modulus found")  # pragma: no cover


def field_for_q(q: int) -> Field:
    """F_q for a prime power q."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise FieldError(f"{q} is not a prime power")
            return make_field(p, k)
        p += 1
    return make_field(q, 1)


def _multiplicative_order(field: Field, a: int, factored_qx) -> bool:
    """True iff a generates the unit group."""
    qx = field.q - 1
    for l in factored_qx:
        if field.pow(a, qx // l) == 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class CharacterTable:
    """Fixes psi(x) = zeta_p^trace(ax) and chi of exact order q-1 on F_q.

    generator_index selects the i-th generator in encoding order (0 = first,
    the deterministic default); psi_scale = a replaces psi by x -> psi(ax).
    Both knobs exist so that invariance of integer outputs under these
    non-canonical choices can be tested.
    """

    def __init__(self, field: Field, generator_index: int = 0, psi_scale: int = 1):
        if field.q > CHAR_BOUND:
            raise FieldError(f"q = {field.q} exceeds the character-table bound {CHAR_BOUND}")
        psi_scale %= field.q
        if psi_scale == 0:
            raise FieldError("psi scale must be a unit")
        self.field = field
        q = field.q
        self.q = q
        self.qx = q - 1
        factored = _prime_factors(self.qx) if self.qx > 1 else []
        gens = []
        g = None
        for a in field.units():
            if self.qx == 1 or _multiplicative_order(field, a, factored):
                gens.append(a)
                if len(gens) > generator_index:
                    g = a
                    break
        if g is None:
            raise FieldError(f"only {len(gens)} generators available in {field}")
        self.generator = g
        dlog = [0] * q  # dlog[0] is meaningless; dlog[1] = 0
        gpow = [0] * self.qx
        cur = 1
        for i in range(self.qx):
            dlog[cur] = i
            gpow[i] = cur
            cur = field.mul(cur, g)
        assert cur == 1
        self.dlog_table = dlog
        self.gpow = gpow
        self.zeta_p = cmath.exp(2j * cmath.pi / field.p)
        self.zeta_qx = cmath.exp(2j * cmath.pi / self.qx) if self.qx > 1 else 1.0 + 0j
        self._zp_pows = [cmath.exp(2j * cmath.pi * t / field.p) for t in range(field.p)]
        self._zqx_pows = [cmath.exp(2j * cmath.pi * m / self.qx) for m in range(self.qx)]
        self.trace_table = [field.trace(x) for x in range(q)]
        self.psi_scale = psi_scale
        self._psi_table = [self._zp_pows[self.trace_table[field.mul(psi_scale, x)]]
                           for x in range(q)]

    def dlog(self, x: int) -> int:
        if x == 0:
            raise FieldError("dlog of zero")
        return self.dlog_table[x]

    def psi(self, x: int) -> complex:
        return self._psi_table[x]

    def chi(self, m: int, x: int) -> complex:
        """chi^m(x) for nonzero x."""
        return self._zqx_pows[(m * self.dlog(x)) % self.qx]

    def root_qx(self, e: int) -> complex:
        """zeta_{q-1}^e."""
        return self._zqx_pows[e % self.qx]


def _kahan_add(total, comp, term):
    y = term - comp
    t = total + y
    comp = (t - total) - y
    return t, comp


class GaussTable:
    """g(m) = sum over units of psi(u) chi^m(u), for all m mod q-1."""

    def __init__(self, ct: CharacterTable):
        self.ct = ct
        q, qx = ct.q, ct.qx
        vals = []
        for m in range(qx):
            total = 0j
            comp = 0j
            for a in range(qx):
                term = ct._psi_table[ct.gpow[a]] * ct._zqx_pows[(m * a) % qx]
                total, comp = _kahan_add(total, comp, term)
            vals.append(total)
        self.values = vals
        tol = 64 * 2.3e-16 * q
        if abs(vals[0] + 1) > tol:
            raise FieldError("Gauss table failed g(0) = -1 sanity check")
        for m in range(1, qx):
            if abs(abs(vals[m]) ** 2 - q) > tol * q:
                raise FieldError("Gauss table failed |g(m)|^2 = q sanity check")

    @property
    def q(self):
        return self.ct.q

    @property
    def qx(self):
        return self.ct.qx

    def gauss(self, m: int) -> complex:
        return self.values[m % self.ct.qx]

    def gauss_vec(self, v) -> complex:
        out = 1 + 0j
        for m in v:
            out *= self.values[m % self.ct.qx]
        return out


def gauss(table: GaussTable, m: int) -> complex:
    return table.gauss(m)


def char_table(field: Field, generator_index: int = 0, psi_scale: int = 1) -> CharacterTable:
    return _char_table_cached(field, generator_index, psi_scale)


@lru_cache(maxsize=None)
def _char_table_cached(field, generator_index, psi_scale):
    return CharacterTable(field, generator_index, psi_scale)


@lru_cache(maxsize=None)
def gauss_table(ct: CharacterTable) -> GaussTable:
    return GaussTable(ct)


def tables_for(field: Field, generator_index: int = 0, psi_scale: int = 1) -> GaussTable:
    return gauss_table(char_table(field, generator_index, psi_scale))
