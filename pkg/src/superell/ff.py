"""Exact arithmetic in prime fields F_p and extensions F_{p^k}.

Elements are coefficient vectors over F_p reduced against a fixed monic
irreducible modulus polynomial.  The modulus is chosen deterministically
(lexicographically smallest monic irreducible, comparing coefficient
vectors constant-term first) so that every derived constant is
reproducible across runs.
"""

from __future__ import annotations

import itertools


class FieldMismatchError(ValueError):
    """Arithmetic between elements of different field descriptors."""


class NonPrimeModulusError(ValueError):
    """Requested characteristic is not a prime number."""


def is_prime(n: int) -> bool:
    """Trial-division primality test; adequate for desk-scale moduli."""
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


# ---------------------------------------------------------------------------
# Raw polynomial helpers over F_p (coefficient lists, ascending degree).
# Kept local so this module stays dependency-free; `poly` builds the public
# polynomial type on top of FieldElement.


def _trim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _polymulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _polyrem(out, mod, p)


def _polyrem(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
    return _trim(a)


def _polygcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _polyrem(a, b, p)
    return a


def _polypowmod(base, e, mod, p):
    result = [1]
    base = _polyrem(base, mod, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod, p)
        base = _polymulmod(base, base, mod, p)
        e >>= 1
    return result


def _is_irreducible(coeffs, p):
    """Irreducibility of a monic polynomial over F_p.

    Degree <= 3 reduces to a root search; higher degrees use the full
    x^(p^d) == x criterion together with gcd checks at proper divisors.
    """
    k = len(coeffs) - 1
    if k == 1:
        return True
    if coeffs[0] == 0:
        return False
    if k <= 3:
        return all(_polyeval(coeffs, a, p) != 0 for a in range(p))
    x = [0, 1]
    xq = _polypowmod(x, p**k, coeffs, p)
    if _trim(list(xq)) != x:
        return False
    for r in _prime_divisors(k):
        xq = _polypowmod(x, p ** (k // r), coeffs, p)
        diff = _polysub(xq, x, p)
        if len(_polygcd(coeffs, diff, p)) > 1:
            return False
    return True


def _polysub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _trim(out)


def _polyeval(coeffs, a, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * a + c) % p
    return acc


def _prime_divisors(n):
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


# ---------------------------------------------------------------------------


class FieldDescriptor:
    """A finite field F_{p^k} with a pinned modulus polynomial.

    For k = 1 the modulus is absent.  Descriptors compare by value, so two
    independently constructed descriptors of the same field are equal.
    """

    __slots__ = ("p", "k", "modulus", "_reductions")

    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise NonPrimeModulusError(f"{p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        if k == 1:
            if modulus is not None:
                raise ValueError("prime field carries no modulus polynomial")
            self.modulus = None
        else:
            if modulus is None:
                modulus = _smallest_irreducible(p, k)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if not _is_irreducible(list(modulus), p):
                raise ValueError("modulus polynomial is reducible")
            self.modulus = modulus
        # x^(k+s) reduced mod the modulus, for schoolbook product reduction
        self._reductions = None
        if k > 1:
            red = []
            cur = [(-c) % p for c in self.modulus[:-1]]  # x^k
            red.append(tuple(cur))
            for _ in range(k - 2):
                cur = [0] + cur
                top = cur.pop()
                if top:
                    cur = [(ci + top * ri) % p for ci, ri in zip(cur, red[0])]
                red.append(tuple(cur))
            self._reductions = red

    @property
    def order(self) -> int:
        return self.p**self.k

    def element(self, value) -> "FieldElement":
        """Coerce an integer or coefficient sequence into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.k - 1)
        else:
            coeffs = [c % self.p for c in value]
            if len(coeffs) > self.k:
                raise ValueError("coefficient vector longer than degree")
            coeffs += [0] * (self.k - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def gen(self) -> "FieldElement":
        """The residue of x, a root of the modulus (k >= 2)."""
        if self.k == 1:
            raise ValueError("prime field has no structural generator")
        return self.element([0, 1])

    def elements(self):
        """All field elements in lexicographic coefficient order."""
        for vec in itertools.product(range(self.p), repeat=self.k):
            yield FieldElement(self, vec)

    def __eq__(self, other):
        return (
            isinstance(other, FieldDescriptor)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"F({self.p})"
        return f"F({self.p}^{self.k}; mod={list(self.modulus)})"


def _smallest_irreducible(p: int, k: int):
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Candidate vectors (c_0, ..., c_{k-1}) are scanned in ascending tuple
    order, constant term most significant.
    """
    for low in itertools.product(range(p), repeat=k):
        cand = list(low) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def make_field(p: int, k: int = 1) -> FieldDescriptor:
    """Build F_{p^k} with the deterministic modulus choice."""
    return FieldDescriptor(p, k)


class FieldElement:
    """Immutable element of F_{p^k}, stored as residues in [0, p)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def lift(self) -> int:
        """Integer lift, only for prime-field elements."""
        if self.field.k != 1:
            raise ValueError("lift is defined on prime fields only")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError("elements live in different fields")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        p = f.p
        if f.k == 1:
            return FieldElement(f, ((self.coeffs[0] * other.coeffs[0]) % p,))
        a, b = self.coeffs, other.coeffs
        k = f.k
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = [c % p for c in prod[:k]]
        for s, c in enumerate(prod[k:]):
            if c % p:
                row = f._reductions[s]
                c %= p
                for idx, r in enumerate(row):
                    out[idx] = (out[idx] + c * r) % p
        return FieldElement(f, tuple(out))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse by extended Euclid on coefficient polys."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        f = self.field
        p = f.p
        if f.k == 1:
            return FieldElement(f, (pow(self.coeffs[0], -1, p),))
        # extended Euclid: r0 = modulus, r1 = self
        r0, r1 = list(f.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while r1:
            q, r = _polydivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1, p), p)
        # r0 is a nonzero constant gcd
        c_inv = pow(r0[0], -1, p)
        inv = [(c * c_inv) % p for c in s0]
        inv = _polyrem(inv, list(f.modulus), p)
        inv += [0] * (f.k - len(inv))
        return FieldElement(f, tuple(inv))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    # -- structure ----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.k))

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.coeffs[0]}"
        return f"{list(self.coeffs)}"


def _polymul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _polydivmod(a, b, p):
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b) and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        a.pop()
    return _trim(q), _trim(a)


def frobenius(a: FieldElement) -> FieldElement:
    """The p-power Frobenius a -> a^p; identity on the prime field."""
    if a.field.k == 1:
        return a
    return a ** a.field.p


def lift_to(a: FieldElement, K: FieldDescriptor) -> FieldElement:
    """Embed a prime-field element into an extension K of the same p.

    Only the canonical embedding F_p -> F_{p^k} is supported; embeddings
    between proper extensions would require a compatibility convention
    that this toolkit deliberately avoids.
    """
    if a.field == K:
        return a
    if a.field.k != 1 or a.field.p != K.p:
        raise FieldMismatchError(f"no canonical embedding of {a.field} into {K}")
    return K.element(a.coeffs[0])
