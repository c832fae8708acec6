"""Multilinear identity evaluators: standard and Capelli polynomials,
and alternating sums over Young subgroups.

The standard polynomial is s_k(x_1..x_k) = sum over permutations pi of
sign(pi) x_{pi(1)} ... x_{pi(k)}.  The Capelli polynomial interleaves
fixed y's between the alternating x's:

    d_k(x; y) = sum over pi of sign(pi) y_0 x_{pi(1)} y_1 ... x_{pi(k)} y_k.

Substituting every y_i = I recovers s_k.

Both have a naive k!-term evaluator (the oracle, guarded at small k) and
a subset dynamic program.  The DP runs over suffixes: h(S) is the signed
sum over arrangements of S in the last |S| slots, built from
h(S minus {i}) by placing x_i first among them, which costs
sign (-1)^|{j in S : j < i}|.  Only the current cardinality layer is
kept, so memory peaks at C(k, k//2) matrices.  For the Capelli form the
layer at size s multiplies in the fixed y_{k-s+1} once per previous
state before the transition.

young_alternating_sum restricts the alternating sum to a Young subgroup
(a product of symmetric groups on the classes of a set partition).  It
does not verify any commutation hypotheses on its inputs; callers that
rely on the vanishing or factorial lemmas must check those separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import factorial
from typing import List, Sequence, Tuple, Union

from .errors import (
    ContextMismatchError,
    DegreeTooLargeError,
    GroupTooLargeError,
    LengthMismatchError,
)
from .gmatrix import GrMatrix
from .grassmann import GrassmannElem, mul_into

DEFAULT_NAIVE_K = 8
DEFAULT_STANDARD_DP_K = 24
DEFAULT_CAPELLI_DP_K = 20
DEFAULT_YOUNG_ORDER = 10**6

Operand = Union[GrMatrix, GrassmannElem]


def perm_sign(p: Sequence[int]) -> int:
    """Sign by inversion count; fine at the k <= 8 oracle scale."""
    inv = 0
    for a in range(len(p)):
        pa = p[a]
        for b in range(a + 1, len(p)):
            if pa > p[b]:
                inv += 1
    return -1 if inv & 1 else 1


def _check_matrix_family(mats: Sequence[GrMatrix], what: str) -> None:
    if not mats:
        raise LengthMismatchError(f"{what} needs at least one matrix")
    first = mats[0]
    if not isinstance(first, GrMatrix):
        raise TypeError(f"{what} expects GrMatrix arguments")
    for A in mats[1:]:
        first._check_other(A)


def standard_naive(mats: Sequence[GrMatrix], max_k: int = DEFAULT_NAIVE_K) -> GrMatrix:
    """s_k by direct enumeration of all k! words."""
    k = len(mats)
    if k > max_k:
        raise DegreeTooLargeError(f"naive evaluation capped at k <= {max_k}, got {k}")
    _check_matrix_family(mats, "standard_naive")
    first = mats[0]
    total = GrMatrix.zero(first.n, first.m, first.ring)
    for p in permutations(range(k)):
        w = mats[p[0]]
        for idx in p[1:]:
            if w.is_zero():
                break
            w = w * mats[idx]
        if w.is_zero():
            continue
        total = total + w if perm_sign(p) > 0 else total - w
    return total


def capelli_naive(
    xs: Sequence[GrMatrix],
    ys: Sequence[GrMatrix],
    max_k: int = DEFAULT_NAIVE_K,
) -> GrMatrix:
    """d_k by direct enumeration; ys must have length k + 1."""
    k = len(xs)
    if len(ys) != k + 1:
        raise LengthMismatchError(f"need {k + 1} y's for x-degree {k}, got {len(ys)}")
    if k > max_k:
        raise DegreeTooLargeError(f"naive evaluation capped at k <= {max_k}, got {k}")
    _check_matrix_family(list(xs) + list(ys), "capelli_naive")
    first = ys[0]
    total = GrMatrix.zero(first.n, first.m, first.ring)
    for p in permutations(range(k)):
        w = ys[0]
        for t, idx in enumerate(p):
            if w.is_zero():
                break
            w = w * xs[idx] * ys[t + 1]
        if w.is_zero():
            continue
        total = total + w if perm_sign(p) > 0 else total - w
    return total


def _masks_by_size(k: int, s: int):
    for comb in combinations(range(k), s):
        mask = 0
        for i in comb:
            mask |= 1 << i
        yield mask, comb


def _dp_transition(
    mats_rows: List[Tuple], layer: dict, k: int, s: int, n: int, m: int, ring
) -> dict:
    """One cardinality layer of the suffix DP, with fused accumulation.

    For each subset S of size s, h(S) = sum over i in S of
    (-1)^|{j in S : j < i}| mats[i] * layer[S minus {i}].
    """
    clean = ring.clean_terms
    make_elem = GrassmannElem._make
    make_mat = GrMatrix._make
    nxt = {}
    for mask, comb in _masks_by_size(k, s):
        acc = [[{} for _ in range(n)] for _ in range(n)]
        for i in comb:
            prev = layer[mask ^ (1 << i)]
            neg = ((mask & ((1 << i) - 1)).bit_count() & 1) == 1
            xrows = mats_rows[i]
            prows = prev.rows
            for r in range(n):
                xr = xrows[r]
                accr = acc[r]
                for t in range(n):
                    ta = xr[t].terms
                    if not ta:
                        continue
                    pr = prows[t]
                    for c in range(n):
                        tb = pr[c].terms
                        if tb:
                            mul_into(accr[c], ta, tb, neg)
        nxt[mask] = make_mat(
            n, m, ring,
            tuple(tuple(make_elem(m, ring, clean(d)) for d in row) for row in acc),
        )
    return nxt


def standard_dp(
    mats: Sequence[GrMatrix], max_k: int = DEFAULT_STANDARD_DP_K
) -> GrMatrix:
    """s_k via the subset DP; agrees with standard_naive."""
    k = len(mats)
    if k > max_k:
        raise DegreeTooLargeError(f"DP evaluation capped at k <= {max_k}, got {k}")
    _check_matrix_family(mats, "standard_dp")
    first = mats[0]
    n, m, ring = first.n, first.m, first.ring
    mats_rows = [A.rows for A in mats]
    layer = {0: GrMatrix.identity(n, m, ring)}
    for s in range(1, k + 1):
        layer = _dp_transition(mats_rows, layer, k, s, n, m, ring)
    return layer[(1 << k) - 1]


def capelli_dp(
    xs: Sequence[GrMatrix],
    ys: Sequence[GrMatrix],
    max_k: int = DEFAULT_CAPELLI_DP_K,
) -> GrMatrix:
    """d_k via the subset DP; agrees with capelli_naive.

    The suffix owning the x-slots k-s+1..k starts with y_{k-s+1} already
    attached to the previous layer, so each layer premultiplies its
    fixed y once per stored state instead of once per transition term.
    """
    k = len(xs)
    if len(ys) != k + 1:
        raise LengthMismatchError(f"need {k + 1} y's for x-degree {k}, got {len(ys)}")
    if k > max_k:
        raise DegreeTooLargeError(f"DP evaluation capped at k <= {max_k}, got {k}")
    _check_matrix_family(list(xs) + list(ys), "capelli_dp")
    first = ys[0]
    n, m, ring = first.n, first.m, first.ring
    xs_rows = [A.rows for A in xs]
    layer = {0: GrMatrix.identity(n, m, ring)}
    for s in range(1, k + 1):
        y = ys[k - s + 1]
        pre = {mask: y * mat for mask, mat in layer.items()}
        layer = _dp_transition(xs_rows, pre, k, s, n, m, ring)
    return ys[0] * layer[(1 << k) - 1]


def standard_product_eval(
    mats: Sequence[GrMatrix], max_k: int = DEFAULT_STANDARD_DP_K
) -> GrMatrix:
    """Product of s_{2n} over consecutive blocks of 2n matrices.

    The context dictates the shape: with entries of rank m there must be
    exactly (m//2 + 1) blocks, i.e. len(mats) == 2n(m//2 + 1).
    """
    _check_matrix_family(mats, "standard_product_eval")
    first = mats[0]
    n, m = first.n, first.m
    block = 2 * n
    blocks = m // 2 + 1
    if len(mats) != block * blocks:
        raise LengthMismatchError(
            f"need {block * blocks} matrices ({blocks} blocks of {block}), got {len(mats)}"
        )
    result = GrMatrix.identity(n, m, first.ring)
    for b in range(blocks):
        factor = standard_dp(mats[b * block : (b + 1) * block], max_k=max_k)
        result = result * factor
    return result


@dataclass(frozen=True)
class YoungSpec:
    """A Young subgroup datum on positions 1..k.

    classes partitions {1..k}; the subgroup is the product of the
    symmetric groups on the classes.  anticommuting lists the positions
    whose values are declared pairwise anticommuting (the complement is
    declared central for the instance); the vanishing and factorial
    lemmas require exactly one non-anticommuting position per class.
    """

    k: int
    classes: Tuple[Tuple[int, ...], ...]
    anticommuting: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        seen = sorted(p for cls in self.classes for p in cls)
        if seen != list(range(1, self.k + 1)):
            raise ValueError("classes must partition positions 1..k")
        if not self.anticommuting <= set(range(1, self.k + 1)):
            raise ValueError("anticommuting positions outside 1..k")
        object.__setattr__(
            self, "classes", tuple(tuple(sorted(c)) for c in self.classes)
        )
        object.__setattr__(self, "anticommuting", frozenset(self.anticommuting))

    @classmethod
    def from_interval_sizes(cls, sizes: Sequence[int]) -> "YoungSpec":
        """Interval classes of the given sizes, leftmost positions central."""
        k = sum(sizes)
        classes = []
        anticommuting = set()
        start = 1
        for size in sizes:
            if size < 1:
                raise ValueError("interval sizes must be positive")
            cls_positions = tuple(range(start, start + size))
            classes.append(cls_positions)
            anticommuting.update(cls_positions[1:])
            start += size
        return cls(k=k, classes=tuple(classes), anticommuting=frozenset(anticommuting))

    def central_positions(self) -> frozenset:
        return frozenset(range(1, self.k + 1)) - self.anticommuting

    def one_central_per_class(self) -> bool:
        central = self.central_positions()
        return all(len(central & set(c)) == 1 for c in self.classes)

    def group_order(self) -> int:
        order = 1
        for c in self.classes:
            order *= factorial(len(c))
        return order


def young_alternating_sum(
    elems: Sequence[Operand],
    spec: YoungSpec,
    max_order: int = DEFAULT_YOUNG_ORDER,
) -> Operand:
    """sum over the Young subgroup of sign(pi) a_{pi(1)} ... a_{pi(k)}.

    Works on matrices or bare algebra elements; all operands must share
    one context.  Hypotheses on the operands are not checked here.
    """
    if len(elems) != spec.k:
        raise LengthMismatchError(f"need {spec.k} operands, got {len(elems)}")
    order = spec.group_order()
    if order > max_order:
        raise GroupTooLargeError(f"subgroup order {order} exceeds cap {max_order}")
    first = elems[0]
    if isinstance(first, GrMatrix):
        _check_matrix_family(elems, "young_alternating_sum")
        total = GrMatrix.zero(first.n, first.m, first.ring)
    elif isinstance(first, GrassmannElem):
        for e in elems[1:]:
            first._check_other(e)
        total = GrassmannElem.zero(first.m, first.ring)
    else:
        raise TypeError("operands must be GrMatrix or GrassmannElem")
    if any(not isinstance(e, type(first)) for e in elems):
        raise ContextMismatchError("operands mix matrices and bare elements")

    classes = [list(c) for c in spec.classes]
    for choice in product(*(list(permutations(c)) for c in classes)):
        pi = {}
        sign = 1
        for cls_positions, perm in zip(classes, choice):
            for pos, src in zip(cls_positions, perm):
                pi[pos] = src
            sign *= perm_sign(perm)
        w = elems[pi[1] - 1]
        for pos in range(2, spec.k + 1):
            w = w * elems[pi[pos] - 1]
        total = total + w if sign > 0 else total - w
    return total
