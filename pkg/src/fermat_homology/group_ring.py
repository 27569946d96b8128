"""Arithmetic in the group ring of (Z/n)^(m+1) and its differential module.

An element of Lambda_m = A[e_0, ..., e_m] / (e_0^n - 1, ..., e_m^n - 1) is
stored as a dense coefficient table indexed by packed exponent tuples
(big-endian: the exponent of e_0 varies slowest).  Coefficients live in
Z/n by default; a prime-power extension field can be supplied instead,
which is how the gamma-element computations work at finite precision
inside an algebraic closure of Z/p.

Beyond ring arithmetic this module provides the coboundary-style maps
d_prime : Lambda_0^x -> (Lambda_1^x)^w and d_prime_prime into Lambda_2^x,
the swap involution w, the augmentation, and the logarithmic derivative
dlog into the free module of differentials on the generators dlog e_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityMismatch, NotAUnit, NotSymmetric
from .fp_linalg import FpMatrix
from .scalars import Zmod

_MUL_TABLES: dict[tuple[int, int], list[list[int]]] = {}
_EXP_TUPLES: dict[tuple[int, int], list[tuple[int, ...]]] = {}


def _exponent_tuples(n: int, arity: int) -> list[tuple[int, ...]]:
    key = (n, arity)
    cached = _EXP_TUPLES.get(key)
    if cached is None:
        cached = []
        for idx in range(n**arity):
            exps = []
            v = idx
            for _ in range(arity):
                exps.append(v % n)
                v //= n
            cached.append(tuple(reversed(exps)))
        _EXP_TUPLES[key] = cached
    return cached


def _pack(n: int, exps: tuple[int, ...]) -> int:
    idx = 0
    for e in exps:
        idx = idx * n + (e % n)
    return idx


def _mul_table(n: int, arity: int) -> list[list[int]]:
    key = (n, arity)
    cached = _MUL_TABLES.get(key)
    if cached is None:
        tuples = _exponent_tuples(n, arity)
        cached = [
            [
                _pack(n, tuple(x + y for x, y in zip(ea, eb)))
                for eb in tuples
            ]
            for ea in tuples
        ]
        _MUL_TABLES[key] = cached
    return cached


@dataclass(frozen=True)
class GroupRingElement:
    """Element of Lambda_m over Z/n (or an extension field of Z/p)."""

    n: int
    m: int
    ring: object
    coeffs: tuple

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int, m: int, ring=None) -> "GroupRingElement":
        ring = ring if ring is not None else Zmod(n)
        return cls(n, m, ring, (ring.zero,) * (n ** (m + 1)))

    @classmethod
    def one(cls, n: int, m: int, ring=None) -> "GroupRingElement":
        return cls.monomial(n, m, (0,) * (m + 1), ring=ring)

    @classmethod
    def monomial(cls, n, m, exps, coeff=1, ring=None) -> "GroupRingElement":
        ring = ring if ring is not None else Zmod(n)
        if len(exps) != m + 1:
            raise ArityMismatch(f"expected {m + 1} exponents, got {len(exps)}")
        c = ring.lift_int(coeff) if isinstance(coeff, int) else coeff
        table = [ring.zero] * (n ** (m + 1))
        table[_pack(n, tuple(exps))] = c
        return cls(n, m, ring, tuple(table))

    @classmethod
    def from_dict(cls, n, m, coeffs, ring=None) -> "GroupRingElement":
        ring = ring if ring is not None else Zmod(n)
        table = [ring.zero] * (n ** (m + 1))
        for exps, c in coeffs.items():
            if len(exps) != m + 1:
                raise ArityMismatch(f"expected {m + 1} exponents, got {len(exps)}")
            value = ring.lift_int(c) if isinstance(c, int) else c
            idx = _pack(n, tuple(exps))
            table[idx] = ring.add(table[idx], value)
        return cls(n, m, ring, tuple(table))

    @classmethod
    def from_grid(cls, n, rows, ring=None) -> "GroupRingElement":
        """Two-variable element from an n x n table; rows index e_0 powers."""
        return cls.from_dict(
            n,
            1,
            {(i, j): rows[i][j] for i in range(n) for j in range(n)},
            ring=ring,
        )

    # -- basic structure ----------------------------------------------

    def coeff(self, *exps):
        return self.coeffs[_pack(self.n, tuple(exps))]

    def grid(self) -> list[list]:
        if self.m != 1:
            raise ArityMismatch("grids are defined for two-variable elements")
        n = self.n
        return [list(self.coeffs[i * n : (i + 1) * n]) for i in range(n)]

    def support(self):
        tuples = _exponent_tuples(self.n, self.m + 1)
        return [
            (exps, c)
            for exps, c in zip(tuples, self.coeffs)
            if not self.ring.is_zero(c)
        ]

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def _check_compatible(self, other: "GroupRingElement") -> None:
        if (self.n, self.m, self.ring) != (other.n, other.m, other.ring):
            raise ArityMismatch(
                f"incompatible elements: (n={self.n}, m={self.m}) vs "
                f"(n={other.n}, m={other.m})"
            )

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check_compatible(other)
        ring = self.ring
        return GroupRingElement(
            self.n,
            self.m,
            ring,
            tuple(ring.add(a, b) for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check_compatible(other)
        ring = self.ring
        return GroupRingElement(
            self.n,
            self.m,
            ring,
            tuple(ring.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "GroupRingElement":
        ring = self.ring
        return GroupRingElement(
            self.n, self.m, ring, tuple(ring.neg(a) for a in self.coeffs)
        )

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check_compatible(other)
        table = _mul_table(self.n, self.m + 1)
        ring = self.ring
        if isinstance(ring, Zmod):
            out = [0] * len(self.coeffs)
            for ia, ca in enumerate(self.coeffs):
                if ca:
                    row = table[ia]
                    for ib, cb in enumerate(other.coeffs):
                        if cb:
                            out[row[ib]] += ca * cb
            nmod = ring.n
            return GroupRingElement(
                self.n, self.m, ring, tuple(x % nmod for x in out)
            )
        out = [ring.zero] * len(self.coeffs)
        for ia, ca in enumerate(self.coeffs):
            if not ring.is_zero(ca):
                row = table[ia]
                for ib, cb in enumerate(other.coeffs):
                    if not ring.is_zero(cb):
                        idx = row[ib]
                        out[idx] = ring.add(out[idx], ring.mul(ca, cb))
        return GroupRingElement(self.n, self.m, ring, tuple(out))

    def scale(self, c) -> "GroupRingElement":
        ring = self.ring
        value = ring.lift_int(c) if isinstance(c, int) else c
        return GroupRingElement(
            self.n, self.m, ring, tuple(ring.mul(value, a) for a in self.coeffs)
        )

    def __pow__(self, k: int) -> "GroupRingElement":
        if k < 0:
            raise ValueError("negative powers go through invert()")
        result = GroupRingElement.one(self.n, self.m, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structural maps ----------------------------------------------

    def substitute(self, new_m: int, targets) -> "GroupRingElement":
        """Re-index variables: old variable k maps to the product of the
        new variables listed in targets[k]."""
        if len(targets) != self.m + 1:
            raise ArityMismatch("one target list per variable is required")
        n = self.n
        ring = self.ring
        out = [ring.zero] * (n ** (new_m + 1))
        for exps, c in zip(_exponent_tuples(n, self.m + 1), self.coeffs):
            if ring.is_zero(c):
                continue
            new_exps = [0] * (new_m + 1)
            for k, e in enumerate(exps):
                for v in targets[k]:
                    new_exps[v] = (new_exps[v] + e) % n
            idx = _pack(n, tuple(new_exps))
            out[idx] = ring.add(out[idx], c)
        return GroupRingElement(n, new_m, ring, tuple(out))

    def derivative(self, k: int) -> "GroupRingElement":
        """Coefficient of dlog e_k in the canonical derivation d."""
        ring = self.ring
        out = [
            ring.scale_int(exps[k], c)
            for exps, c in zip(_exponent_tuples(self.n, self.m + 1), self.coeffs)
        ]
        return GroupRingElement(self.n, self.m, ring, tuple(out))

    def is_symmetric(self) -> bool:
        return self.m == 1 and self == swap_w(self)

    # -- serialization -------------------------------------------------

    def to_json(self) -> dict:
        if not isinstance(self.ring, Zmod):
            raise TypeError("JSON serialization targets Z/n coefficients")
        coeffs = {}
        for exps, c in self.support():
            key = "(" + ",".join(str(e) for e in exps) + ")"
            coeffs[key] = c
        return {"n": self.n, "m": self.m, "coeffs": coeffs}

    @classmethod
    def from_json(cls, data: dict) -> "GroupRingElement":
        coeffs = {}
        for key, c in data["coeffs"].items():
            exps = tuple(int(part) for part in key.strip("()").split(",") if part != "")
            coeffs[exps] = c
        return cls.from_dict(data["n"], data["m"], coeffs)


@dataclass(frozen=True)
class DifferentialElement:
    """Element of the free Lambda_m-module on dlog e_0, ..., dlog e_m."""

    n: int
    m: int
    ring: object
    components: tuple[GroupRingElement, ...]

    def __post_init__(self):
        if len(self.components) != self.m + 1:
            raise ArityMismatch("one component per generator dlog e_i is required")

    @classmethod
    def zero(cls, n: int, m: int, ring=None) -> "DifferentialElement":
        ring = ring if ring is not None else Zmod(n)
        comp = GroupRingElement.zero(n, m, ring)
        return cls(n, m, ring, (comp,) * (m + 1))

    def __add__(self, other: "DifferentialElement") -> "DifferentialElement":
        return DifferentialElement(
            self.n,
            self.m,
            self.ring,
            tuple(a + b for a, b in zip(self.components, other.components)),
        )

    def __sub__(self, other: "DifferentialElement") -> "DifferentialElement":
        return DifferentialElement(
            self.n,
            self.m,
            self.ring,
            tuple(a - b for a, b in zip(self.components, other.components)),
        )

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)


# -- public operations ------------------------------------------------


def multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


def augmentation(a: GroupRingElement):
    """Sum of all coefficients; a ring homomorphism onto the base ring."""
    total = a.ring.zero
    for c in a.coeffs:
        total = a.ring.add(total, c)
    return total


def swap_w(a: GroupRingElement) -> GroupRingElement:
    """The involution swapping the two variables of Lambda_1."""
    if a.m != 1:
        raise ArityMismatch("swap is defined on two-variable elements")
    n = a.n
    out = [a.ring.zero] * (n * n)
    for i in range(n):
        for j in range(n):
            out[j * n + i] = a.coeffs[i * n + j]
    return GroupRingElement(n, 1, a.ring, tuple(out))


def _unit_group_exponent(ring, n: int, arity: int) -> int | None:
    """An exponent E with u**E = 1 for every unit, when one is known.

    For coefficients in a field of characteristic p with n = p the ring is
    local with nilpotent maximal ideal of index arity*(p-1)+1, so every
    unit satisfies u**((q-1) * p^s) = 1 once p^s clears the nilpotency.
    """
    if getattr(ring, "is_field", False) and ring.char == n:
        p = ring.char
        nilpotency = arity * (p - 1) + 1
        ps = 1
        while ps < nilpotency:
            ps *= p
        return (ring.size - 1) * ps
    return None


def invert(u: GroupRingElement) -> GroupRingElement:
    """Multiplicative inverse; raises NotAUnit when none exists.

    Units have finite multiplicative order, so the inverse is a power of u:
    either u**(E-1) for a known exponent E of the unit group, or the power
    preceding the first return to 1 (with cycle detection rejecting
    non-units) when no exponent formula applies.
    """
    one = GroupRingElement.one(u.n, u.m, u.ring)
    exponent = _unit_group_exponent(u.ring, u.n, u.m + 1)
    if exponent is not None:
        candidate = u ** (exponent - 1)
        if u * candidate == one:
            return candidate
        raise NotAUnit("element is not invertible")
    seen = set()
    prev, cur = one, u
    while True:
        if cur == one:
            return prev
        if cur.coeffs in seen:
            raise NotAUnit("element is not invertible")
        seen.add(cur.coeffs)
        prev, cur = cur, cur * u


def d_prime(g: GroupRingElement) -> GroupRingElement:
    """g(e_0) g(e_1) / g(e_0 e_1), landing in the symmetric units of Lambda_1."""
    if g.m != 0:
        raise ArityMismatch("d_prime takes a one-variable element")
    a = g.substitute(1, ((0,),))
    b = g.substitute(1, ((1,),))
    c = g.substitute(1, ((0, 1),))
    return a * b * invert(c)


def d_prime_prime(f: GroupRingElement) -> GroupRingElement:
    """F(e_1, e_0 e_2) F(e_0, e_2) / (F(e_0, e_1 e_2) F(e_1, e_2))."""
    if f.m != 1:
        raise ArityMismatch("d_prime_prime takes a two-variable element")
    if not f.is_symmetric():
        raise NotSymmetric("d_prime_prime is defined on symmetric units")
    t1 = f.substitute(2, ((1,), (0, 2)))
    t2 = f.substitute(2, ((0,), (2,)))
    t3 = f.substitute(2, ((0,), (1, 2)))
    t4 = f.substitute(2, ((1,), (2,)))
    return t1 * t2 * invert(t3 * t4)


def dlog(u: GroupRingElement) -> DifferentialElement:
    """Logarithmic derivative u^{-1} du of a unit."""
    inv = invert(u)
    components = tuple(inv * u.derivative(k) for k in range(u.m + 1))
    return DifferentialElement(u.n, u.m, u.ring, components)


def multiplication_matrix(a: GroupRingElement) -> FpMatrix:
    """Matrix of x -> a*x in the monomial basis, rows holding images.

    Requires prime n with plain Z/n coefficients so the result is a matrix
    over a field.
    """
    if not isinstance(a.ring, Zmod) or not a.ring.is_field:
        raise ValueError("multiplication matrices require prime-field coefficients")
    n, m = a.n, a.m
    dim = n ** (m + 1)
    table = _mul_table(n, m + 1)
    rows = [[0] * dim for _ in range(dim)]
    for k in range(dim):
        row = rows[k]
        for ia, ca in enumerate(a.coeffs):
            if ca:
                row[table[k][ia]] = (row[table[k][ia]] + ca) % n
    return FpMatrix.from_rows(n, rows)
