"""Arithmetic in the rank-m exterior (Grassmann) algebra over an exact ring.

An element is a sparse map from generator-subset bitmasks to nonzero
coefficients.  Bit i-1 of a mask marks the generator v_i, so the basis
monomial v_{i_1}...v_{i_d} with i_1 < ... < i_d is the mask with exactly
those bits set and its degree is the mask's popcount.  Rank is capped at
62 so a mask always fits one machine word.

The product of basis monomials with masks S and T is zero when S and T
intersect, and otherwise is (-1)^inv(S,T) times the monomial with mask
S | T, where inv(S, T) counts pairs s in S, t in T with s > t.  That is
the bilinear extension of the defining relations v_k v_k = 0 and
v_i v_j = -v_j v_i, so homogeneous elements supercommute:
a*b = (-1)^(deg a * deg b) b*a.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .errors import (
    IndexOutOfRangeError,
    MixedRingsError,
    ContextMismatchError,
    NonIncreasingIndicesError,
)
from .ring import Ring

MAX_RANK = 62

# sign of a disjoint mask pair, memoized; key is sa << 62 | sb
_SIGN_CACHE: dict = {}


def _mul_sign(sa: int, sb: int) -> int:
    inv = 0
    t = sb
    while t:
        low = t & -t
        inv += (sa >> low.bit_length()).bit_count()
        t ^= low
    return -1 if inv & 1 else 1


def mul_into(acc: dict, ta: dict, tb: dict, negate: bool = False) -> None:
    """acc += (-1)^negate * a * b on raw term dicts, no normalization.

    Callers clean the accumulator once at the end (ring.clean_terms);
    skipping per-product reduction is what keeps matrix kernels fast.
    """
    cache = _SIGN_CACHE
    get = acc.get
    for sa, ca in ta.items():
        shifted = sa << 62
        for sb, cb in tb.items():
            if sa & sb:
                continue
            key = shifted | sb
            s = cache.get(key)
            if s is None:
                s = _mul_sign(sa, sb)
                cache[key] = s
            c = ca * cb
            if (s < 0) != negate:
                c = -c
            u = sa | sb
            prev = get(u)
            acc[u] = c if prev is None else prev + c


def _check_rank(m: int) -> None:
    if not isinstance(m, int) or not 0 <= m <= MAX_RANK:
        raise IndexOutOfRangeError(f"rank must satisfy 0 <= m <= {MAX_RANK}, got {m}")


class GrassmannElem:
    """One element of the rank-m Grassmann algebra over a fixed ring."""

    __slots__ = ("m", "ring", "terms")

    def __init__(self, m: int, ring: Ring, terms: Iterable = ()):
        """Build from (indices, coeff) pairs; see from_terms for rules."""
        _check_rank(m)
        self.m = m
        self.ring = ring
        acc: dict = {}
        for indices, coeff in terms:
            mask = self._mask_from_indices(m, indices)
            c = ring.coerce(coeff)
            acc[mask] = acc.get(mask, ring.zero) + c
        self.terms = ring.clean_terms(acc)

    @staticmethod
    def _mask_from_indices(m: int, indices: Sequence[int]) -> int:
        mask = 0
        prev = 0
        for i in indices:
            if not 1 <= i <= m:
                raise IndexOutOfRangeError(f"generator index {i} outside 1..{m}")
            if i <= prev:
                raise NonIncreasingIndicesError(
                    f"indices must be strictly increasing, got {tuple(indices)}"
                )
            mask |= 1 << (i - 1)
            prev = i
        return mask

    @classmethod
    def _make(cls, m: int, ring: Ring, clean: dict) -> "GrassmannElem":
        """Internal: wrap an already-canonical term dict."""
        self = cls.__new__(cls)
        self.m = m
        self.ring = ring
        self.terms = clean
        return self

    # ----- constructors -----

    @classmethod
    def zero(cls, m: int, ring: Ring) -> "GrassmannElem":
        _check_rank(m)
        return cls._make(m, ring, {})

    @classmethod
    def one(cls, m: int, ring: Ring) -> "GrassmannElem":
        return cls.scalar(ring.one, m, ring)

    @classmethod
    def scalar(cls, c, m: int, ring: Ring) -> "GrassmannElem":
        _check_rank(m)
        c = ring.coerce(c)
        return cls._make(m, ring, {0: c} if c else {})

    @classmethod
    def generator(cls, i: int, m: int, ring: Ring) -> "GrassmannElem":
        _check_rank(m)
        if not 1 <= i <= m:
            raise IndexOutOfRangeError(f"generator index {i} outside 1..{m}")
        return cls._make(m, ring, {1 << (i - 1): ring.one})

    @classmethod
    def basis(cls, mask: int, m: int, ring: Ring) -> "GrassmannElem":
        """Basis monomial for a subset bitmask, coefficient one."""
        _check_rank(m)
        if not 0 <= mask < (1 << m):
            raise IndexOutOfRangeError(f"mask {mask} outside rank-{m} algebra")
        return cls._make(m, ring, {mask: ring.one})

    @classmethod
    def from_terms(cls, m: int, ring: Ring, terms: Iterable) -> "GrassmannElem":
        """Sum of (indices, coeff) pairs.

        Indices must be strictly increasing and within 1..m; repeated
        masks accumulate.  Coefficients pass through ring.coerce.
        """
        return cls(m, ring, terms)

    # ----- context -----

    def _check_other(self, other: "GrassmannElem") -> None:
        if not isinstance(other, GrassmannElem):
            raise TypeError(f"expected GrassmannElem, got {type(other).__name__}")
        if self.ring != other.ring:
            raise MixedRingsError(f"rings differ: {self.ring} vs {other.ring}")
        if self.m != other.m:
            raise ContextMismatchError(f"ranks differ: {self.m} vs {other.m}")

    # ----- arithmetic -----

    def __add__(self, other: "GrassmannElem") -> "GrassmannElem":
        self._check_other(other)
        ring = self.ring
        acc = dict(self.terms)
        for k, v in other.terms.items():
            prev = acc.get(k)
            acc[k] = v if prev is None else prev + v
        return GrassmannElem._make(self.m, ring, ring.clean_terms(acc))

    def __sub__(self, other: "GrassmannElem") -> "GrassmannElem":
        return self + (-other)

    def __neg__(self) -> "GrassmannElem":
        ring = self.ring
        return GrassmannElem._make(
            self.m, ring, {k: ring.neg(v) for k, v in self.terms.items()}
        )

    def __mul__(self, other: "GrassmannElem") -> "GrassmannElem":
        self._check_other(other)
        ring = self.ring
        acc: dict = {}
        mul_into(acc, self.terms, other.terms)
        return GrassmannElem._make(self.m, ring, ring.clean_terms(acc))

    def __pow__(self, k: int) -> "GrassmannElem":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = GrassmannElem.one(self.m, self.ring)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "GrassmannElem":
        """Multiply every coefficient by the ring value c."""
        ring = self.ring
        c = ring.coerce(c)
        acc = {k: v * c for k, v in self.terms.items()}
        return GrassmannElem._make(self.m, ring, ring.clean_terms(acc))

    # ----- structure -----

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, mask: int):
        """Raw coefficient of a basis monomial, ring zero if absent."""
        return self.terms.get(mask, self.ring.zero)

    def component(self, d: int) -> "GrassmannElem":
        """Homogeneous degree-d part."""
        picked = {k: v for k, v in self.terms.items() if k.bit_count() == d}
        return GrassmannElem._make(self.m, self.ring, picked)

    def degrees(self) -> Tuple[int, ...]:
        """Sorted degrees present in the support; empty for zero."""
        return tuple(sorted({k.bit_count() for k in self.terms}))

    def homogeneous_degree(self):
        """The common degree of all terms, or None if mixed or zero."""
        ds = self.degrees()
        return ds[0] if len(ds) == 1 else None

    def in_filtration(self, r: int) -> bool:
        """True when every term has degree >= r; zero passes for all r."""
        return all(k.bit_count() >= r for k in self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GrassmannElem)
            and self.m == other.m
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None  # mutable-dict carrier, deliberately unhashable

    # ----- text and JSON -----

    def sorted_terms(self):
        """Terms sorted by (degree, mask), the canonical report order."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ring = self.ring
        parts = []
        for mask, c in self.sorted_terms():
            cs = ring.format(c)
            if mask == 0:
                s = cs
            else:
                mono = monomial_str(mask)
                if cs == "1":
                    s = mono
                elif cs == "-1":
                    s = "-" + mono
                else:
                    s = f"{cs}*{mono}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            if s.startswith("-"):
                out += " - " + s[1:]
            else:
                out += " + " + s
        return out

    def __repr__(self) -> str:
        return f"<{self.ring.name}, m={self.m}: {self}>"

    def to_json_terms(self) -> list:
        """[[mask, coeff-string], ...] in canonical order."""
        ring = self.ring
        return [[mask, ring.format(c)] for mask, c in self.sorted_terms()]

    @classmethod
    def from_json_terms(cls, pairs: Iterable, m: int, ring: Ring) -> "GrassmannElem":
        acc: dict = {}
        for mask, cs in pairs:
            mask = int(mask)
            if not 0 <= mask < (1 << m):
                raise IndexOutOfRangeError(f"mask {mask} outside rank-{m} algebra")
            c = ring.parse(cs)
            acc[mask] = acc.get(mask, ring.zero) + c
        return cls._make(m, ring, ring.clean_terms(acc))


def monomial_str(mask: int) -> str:
    """Text of a basis monomial, e.g. mask 0b101 -> "v1v3"."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(f"v{i}")
        mask >>= 1
        i += 1
    return "".join(out)
