"""Gamma triples (gamma, delta, N) and their hypergeometric parameters.

Parameter extraction is exact: roots of each binomial factor T^|g| - zeta_N^d
are tracked as residues mod L = N * lcm|gamma_j| (a mod L encodes the root
e^{2 pi i a / L}), numerator and denominator multisets are cancelled exactly,
and survivors map to rationals a/L in (0, 1] with 0 mapped to 1. No floating
point is involved anywhere in this module.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .zlinalg import gcd_list


class TripleError(ValueError):
    pass


@dataclass(frozen=True)
class GammaTriple:
    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    N: int

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(self.gamma))
        object.__setattr__(self, "delta", tuple(self.delta))
        validate(self)

    @property
    def r(self) -> int:
        return sum(1 for g in self.gamma if g < 0)

    @property
    def s(self) -> int:
        return sum(1 for g in self.gamma if g > 0)

    @property
    def d(self) -> int:
        return len(self.gamma) - 2

    def gamma_product(self) -> int:
        out = 1
        for g in self.gamma:
            out *= g
        return out

    def to_json(self):
        return {"gamma": list(self.gamma), "delta": list(self.delta), "N": self.N}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["gamma"]), tuple(obj["delta"]), int(obj["N"]))


def validate(t: GammaTriple) -> tuple[int, int]:
    """Check the gamma-triple invariants; return (r, s)."""
    if any(g == 0 for g in t.gamma):
        raise TripleError("gamma has a zero component")
    if sum(t.gamma) != 0:
        raise TripleError("gamma does not sum to zero")
    if gcd_list(t.gamma) != 1:
        raise TripleError("gcd of gamma components is not 1")
    if len(t.delta) != len(t.gamma):
        raise TripleError("delta length differs from gamma length")
    if t.N < 1:
        raise TripleError("N must be a positive integer")
    return t.r, t.s


@dataclass(frozen=True)
class HypergeometricParams:
    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def __post_init__(self):
        alpha = tuple(sorted(Fraction(a) for a in self.alpha))
        beta = tuple(sorted(Fraction(b) for b in self.beta))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if len(alpha) != len(beta):
            raise TripleError("alpha and beta must have equal length")
        for x in alpha + beta:
            if not 0 < x <= 1:
                raise TripleError(f"parameter {x} outside (0, 1]")
        for a in alpha:
            for b in beta:
                if (a - b).denominator == 1:
                    raise TripleError(f"alpha - beta integral: {a} - {b}")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def is_empty(self) -> bool:
        return self.n == 0

    def denominator_lcm(self) -> int:
        out = 1
        for x in self.alpha + self.beta:
            out = lcm(out, x.denominator)
        return out

    def to_json(self):
        return {"alpha": [str(a) for a in self.alpha],
                "beta": [str(b) for b in self.beta]}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(Fraction(a) for a in obj["alpha"]),
                   tuple(Fraction(b) for b in obj["beta"]))


@dataclass
class RootMultiset:
    """Multiset of roots of unity at level L; residue a counts e^(2 pi i a/L)."""
    level: int
    exponents: dict[int, int] = field(default_factory=dict)

    def add_binomial_roots(self, k: int, c: int):
        """Add the roots of T^k = zeta_L^c; requires k | L and k | c."""
        L = self.level
        assert k > 0 and L % k == 0 and c % k == 0
        x0 = (c // k) % (L // k)
        for j in range(k):
            e = (x0 + j * (L // k)) % L
            self.exponents[e] = self.exponents.get(e, 0) + 1

    def cancel(self, other: "RootMultiset"):
        assert self.level == other.level
        for e in sorted(set(self.exponents) & set(other.exponents)):
            m = min(self.exponents[e], other.exponents[e])
            for ms in (self, other):
                ms.exponents[e] -= m
                if ms.exponents[e] == 0:
                    del ms.exponents[e]

    def to_fractions(self) -> tuple[Fraction, ...]:
        out = []
        for e in sorted(self.exponents):
            val = Fraction(e, self.level) if e else Fraction(1)
            out.extend([val] * self.exponents[e])
        return tuple(sorted(out))


def params_from_triple(t: GammaTriple) -> HypergeometricParams:
    """Hypergeometric parameters represented by (gamma, delta, N), exactly."""
    L = t.N * lcm(*[abs(g) for g in t.gamma])
    num = RootMultiset(L)
    den = RootMultiset(L)
    for g, d in zip(t.gamma, t.delta):
        if g < 0:
            # roots of T^(-g) = zeta_N^d, i.e. (-g) x = d L/N mod L
            num.add_binomial_roots(-g, (d % t.N) * (L // t.N))
        else:
            den.add_binomial_roots(g, ((-d) % t.N) * (L // t.N))
    num.cancel(den)
    return HypergeometricParams(num.to_fractions(), den.to_fractions())


def triple_from_params(p: HypergeometricParams) -> GammaTriple:
    """The direct representation: gamma = (-1,..,-1,1,..,1), N = lcm of denominators."""
    if p.is_empty:
        raise TripleError("empty parameters: use ((-2,1,1),(0,0,N),2N) instead")
    N = p.denominator_lcm()
    gamma = (-1,) * p.n + (1,) * p.n
    delta = tuple(int(N * a) for a in p.alpha) + tuple(int(-N * b) for b in p.beta)
    return GammaTriple(gamma, delta, N)


def balanced_triple_from_params(p: HypergeometricParams) -> GammaTriple:
    """Representation with sum(delta) = 0 mod N, for sum(alpha - beta) in (1/2)Z.

    Factor-2N construction: delta = (2N alpha; -2N beta) at level 2N; when the
    delta sum is an odd multiple of N, append the empty-parameter block
    (-2, 1, 1)/(0, 0, N).
    """
    twice = sum(p.alpha) - sum(p.beta)
    if (2 * twice).denominator != 1:
        raise TripleError("sum(alpha_i - beta_i) is not a half integer")
    N = p.denominator_lcm()
    gamma = (-1,) * p.n + (1,) * p.n
    delta = tuple(int(2 * N * a) for a in p.alpha) + tuple(int(-2 * N * b) for b in p.beta)
    total = sum(delta)
    assert total % N == 0
    if (total // N) % 2 != 0:
        gamma = gamma + (-2, 1, 1)
        delta = delta + (0, 0, N)
    return GammaTriple(gamma, delta, 2 * N)


def rational_gamma_triple(p: HypergeometricParams) -> GammaTriple | None:
    """(gamma, 0, 1) representation when the parameters are defined over Q.

    Writes both parameter polynomials as products of cyclotomics and converts
    via Moebius inversion into a quotient of binomials T^k - 1; returns None
    when either root multiset is not Galois stable. If the resulting exponents
    share a factor, numerator and denominator are both multiplied by (T - 1).
    """
    L = p.denominator_lcm()

    def exponents(vals):
        counts: dict[int, int] = {}
        for x in vals:
            a = int(x * L) % L
            counts[a] = counts.get(a, 0) + 1
        # group by order d = L / gcd(a, L); need all primitive residues of
        # each order present with equal multiplicity
        e: dict[int, int] = {}
        seen: set[int] = set()
        for a in counts:
            d = L // gcd(a, L) if a else 1
            if d in seen:
                continue
            seen.add(d)
            classmates = [b for b in counts if (L // gcd(b, L) if b else 1) == d]
            mult = counts[classmates[0]]
            phi_d = sum(1 for r in range(1, d + 1) if gcd(r, d) == 1)
            if len(classmates) != phi_d or any(counts[b] != mult for b in classmates):
                return None
            e[d] = mult
        # c_k = sum over multiples d of k of mu(d/k) e_d
        cs: dict[int, int] = {}
        for d, mult in e.items():
            for k in _divisors(d):
                cs[k] = cs.get(k, 0) + _moebius(d // k) * mult
        return {k: v for k, v in cs.items() if v}

    cnum = exponents(p.alpha)
    cden = exponents(p.beta)
    if cnum is None or cden is None:
        return None
    net: dict[int, int] = dict(cnum)
    for k, v in cden.items():
        net[k] = net.get(k, 0) - v
    gamma = []
    for k in sorted(net):
        if net[k] > 0:
            gamma.extend([-k] * net[k])
        elif net[k] < 0:
            gamma.extend([k] * (-net[k]))
    if not gamma:
        return None
    if gcd_list(gamma) != 1:
        gamma.extend([-1, 1])
    gamma.sort()
    return GammaTriple(tuple(gamma), (0,) * len(gamma), 1)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _moebius(n: int) -> int:
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def normalize_minors(t: GammaTriple) -> tuple[GammaTriple, int]:
    """Reduce to maximal-minor gcd 1 as in the reverse-engineering construction.

    Divides delta by its gcd g (the input parameters are then represented by
    (gamma, g * delta', N), so g is returned as the twist multiplier) and, if
    the 2x2 minors of [gamma; delta'] still share a factor, appends the
    parameter-neutral pair (1, -1)/(0, 0).
    """
    if all(d == 0 for d in t.delta):
        raise TripleError("delta = 0: nothing to normalize (use the rational path)")
    g = gcd_list(t.delta)
    delta = tuple(d // g for d in t.delta)
    gamma = t.gamma
    if _minor_gcd(gamma, delta) != 1:
        gamma = gamma + (1, -1)
        delta = delta + (0, 0)
    out = GammaTriple(gamma, delta, t.N)
    assert _minor_gcd(out.gamma, out.delta) == 1
    return out, g % t.N


def _minor_gcd(gamma, delta) -> int:
    g = 0
    n = len(gamma)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(g, gamma[i] * delta[j] - gamma[j] * delta[i])
    return g


def scaled_delta(t: GammaTriple, q: int) -> list[int]:
    """The integers delta_j (q-1) / N; errors when any is non-integral."""
    qx = q - 1
    out = []
    for d in t.delta:
        num = d * qx
        if num % t.N != 0:
            raise TripleError(f"delta_j (q-1)/N not integral at q = {q}")
        out.append(num // t.N)
    return out


def s_delta(t: GammaTriple, q: int, m: int) -> int:
    """Multiplicity of e^(2 pi i m/(q-1)) in the gcd of the two sides of (4).

    Each binomial has simple roots, so the multiplicity on one side is the
    number of j there with gamma_j m + delta_j (q-1)/N = 0 mod q-1, and the
    gcd multiplicity is the minimum of the two sides.
    """
    scaled = scaled_delta(t, q)
    return _s_delta_scaled(t.gamma, scaled, q - 1, m)


def _s_delta_scaled(gamma, scaled, qx: int, m: int) -> int:
    neg = pos = 0
    for g, dd in zip(gamma, scaled):
        if (g * m + dd) % qx == 0:
            if g < 0:
                neg += 1
            else:
                pos += 1
    return min(neg, pos)


def eta_delta(t: GammaTriple, q: int, m: int) -> int:
    """1 iff e^(2 pi i m/(q-1)) is a common root of both sides (s_delta >= 1)."""
    return 1 if s_delta(t, q, m) >= 1 else 0
