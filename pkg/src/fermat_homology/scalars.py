"""Coefficient domains for group-ring arithmetic.

Two domains are supported: the residue ring Z/n (elements are plain ints
reduced into [0, n)) and a prime-power extension field F_{p^k} given by a
fixed monic irreducible modulus (elements are coefficient tuples of length
k, low degree first).  Both expose the same small interface so the group
ring can stay agnostic about which one it is working over.
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Zmod:
    """The ring Z/n acting on plain integers."""

    def __init__(self, n: int) -> None:
        if n < 2:
            raise ValueError(f"modulus must be at least 2, got {n}")
        self.n = n
        self.zero = 0
        self.one = 1
        self.is_field = is_prime(n)
        self.char = n if self.is_field else None
        self.size = n

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.n

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.n

    def neg(self, a: int) -> int:
        return (-a) % self.n

    def scale_int(self, k: int, a: int) -> int:
        return (k * a) % self.n

    def lift_int(self, c: int) -> int:
        return c % self.n

    def is_zero(self, a: int) -> bool:
        return a % self.n == 0

    def to_prime_int(self, a: int) -> int:
        """Return the residue as an int (always defined for Z/n)."""
        return a % self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Zmod) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("Zmod", self.n))

    def __repr__(self) -> str:
        return f"Zmod({self.n})"


class PrimeExtensionField:
    """F_{p^k} as F_p[t] modulo a fixed monic irreducible polynomial.

    ``modulus`` lists the coefficients of the monic modulus from the
    constant term up, so ``(2, 2, 0, 1)`` over p=3 is t^3 - t - 1.
    Elements are length-k tuples of residues, low degree first.
    """

    def __init__(self, p: int, modulus: tuple[int, ...]) -> None:
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if modulus[-1] % p != 1:
            raise ValueError("modulus must be monic")
        self.p = p
        self.degree = len(modulus) - 1
        self.modulus = tuple(c % p for c in modulus)
        self.zero = (0,) * self.degree
        self.one = (1,) + (0,) * (self.degree - 1)
        self.is_field = True
        self.char = p
        self.size = p ** self.degree
        # t^d for d = degree .. 2*degree-2, reduced below the modulus degree.
        self._reductions: list[tuple[int, ...]] = []
        top = tuple((-c) % p for c in self.modulus[:-1])
        self._reductions.append(top)
        for _ in range(self.degree - 2):
            prev = self._reductions[-1]
            shifted = [0] + list(prev[:-1])
            if prev[-1]:
                shifted = [
                    (shifted[i] + prev[-1] * top[i]) % p for i in range(self.degree)
                ]
            self._reductions.append(tuple(shifted))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        k = self.degree
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = [c % self.p for c in prod[:k]]
        for d in range(k, 2 * k - 1):
            c = prod[d] % self.p
            if c:
                red = self._reductions[d - k]
                for i in range(k):
                    out[i] = (out[i] + c * red[i]) % self.p
        return tuple(out)

    def scale_int(self, k: int, a):
        k %= self.p
        return tuple((k * x) % self.p for x in a)

    def lift_int(self, c: int):
        return (c % self.p,) + (0,) * (self.degree - 1)

    def is_zero(self, a) -> bool:
        return all(x % self.p == 0 for x in a)

    def to_prime_int(self, a):
        """The prime-field value of ``a``, or None if a is not in F_p."""
        if any(x % self.p for x in a[1:]):
            return None
        return a[0] % self.p

    def elements(self):
        """All field elements in lexicographic tuple order."""
        k = self.degree
        for idx in range(self.size):
            coeffs = []
            v = idx
            for _ in range(k):
                coeffs.append(v % self.p)
                v //= self.p
            yield tuple(coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PrimeExtensionField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("PrimeExtensionField", self.p, self.modulus))

    def __repr__(self) -> str:
        return f"PrimeExtensionField(p={self.p}, modulus={self.modulus})"


# F_27 = F_3[t]/(t^3 - t - 1), large enough to split x^3 - x + c for c in F_3.
GF27 = PrimeExtensionField(3, (2, 2, 0, 1))
