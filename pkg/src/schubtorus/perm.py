"""
Permutations of ``[n] = {1, ..., n}`` in one-line notation.

Conventions used throughout the package:

* everything is 1-indexed, ``p(j)`` is the image of ``j``;
* products are function composition, the rightmost factor acts first, so
  ``s_i * w`` swaps the *values* ``i`` and ``i + 1`` in the word of ``w`` and
  ``w * s_i`` swaps the *positions* ``i`` and ``i + 1``.

>>> w = parse_permutation("3412")
>>> length(w), reduced_word(w)
(4, (2, 1, 3, 2))
>>> word_product((2, 1, 3, 2), 4) == w
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator

from .errors import IndexOutOfRange, Malformed, NotABijection, SizeMismatch

__all__ = [
    "Permutation", "parse_permutation", "identity", "longest", "simple_reflection",
    "transposition", "all_permutations", "length", "rank", "rank_table", "bruhat_leq",
    "subword_bruhat_leq", "transposition_apply", "reduced_word", "word_product",
    "simple_reflections_below", "descent_set", "is_irreducible", "direct_sum",
    "w0_star_w0", "hat_w", "reflect",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``[n]``; ``images[j - 1] == p(j)``.

    Ordering is lexicographic on the one-line word.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise NotABijection("a permutation needs n >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise NotABijection(f"{list(images)} is not a bijection of [{len(images)}]")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise IndexOutOfRange(f"{j} not in [1, {self.n}]")
        return self.images[j - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        _check_same_size(self, other)
        return Permutation(tuple(self.images[x - 1] for x in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for j, x in enumerate(self.images, start=1):
            inv[x - 1] = j
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.images))
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def to_json(self) -> list[int]:
        return list(self.images)


_LIST_RE = re.compile(r"^\[\s*(\d+\s*(,\s*\d+\s*)*)?\]$")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"3412"`` (digit string, n <= 9) or ``"[3,4,1,2]"``."""
    if not isinstance(text, str):
        raise Malformed(f"expected a string, got {type(text).__name__}")
    s = text.strip()
    if not s:
        raise Malformed("empty permutation")
    if s.startswith("["):
        if not _LIST_RE.match(s):
            raise Malformed(f"cannot parse {text!r}")
        body = s[1:-1].strip()
        if not body:
            raise Malformed("empty permutation")
        images = tuple(int(tok) for tok in body.split(","))
    elif s.isdigit() and s.isascii():
        images = tuple(int(ch) for ch in s)
    else:
        raise Malformed(f"cannot parse {text!r}")
    return Permutation(images)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    """The longest element ``w0`` of ``S_n``."""
    return Permutation(tuple(range(n, 0, -1)))


def transposition(a: int, b: int, n: int) -> Permutation:
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise IndexOutOfRange(f"bad transposition ({a},{b}) in S_{n}")
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return Permutation(tuple(images))


def simple_reflection(i: int, n: int) -> Permutation:
    return transposition(i, i + 1, n)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic order of the one-line word."""
    for images in _itertools_permutations(range(1, n + 1)):
        yield Permutation(images)


def _check_same_size(v: Permutation, w: Permutation) -> None:
    if v.n != w.n:
        raise SizeMismatch(f"S_{v.n} vs S_{w.n}")


def _inversions(images: tuple[int, ...]) -> int:
    n = len(images)
    return sum(1 for i in range(n) for j in range(i + 1, n) if images[i] > images[j])


@lru_cache(maxsize=1 << 17)
def length(p: Permutation) -> int:
    """Coxeter length, i.e. the number of inversions."""
    return _inversions(p.images)


@lru_cache(maxsize=1 << 17)
def rank_table(p: Permutation) -> tuple[tuple[int, ...], ...]:
    """``table[a - 1][b - 1] == r_p(a, b) == #{j <= b : p(j) >= a}``.

    This is the rank of the south-west submatrix of the permutation matrix
    (rows ``a..n``, columns ``1..b``).
    """
    n = p.n
    rows = []
    for a in range(1, n + 1):
        acc = 0
        row = []
        for x in p.images:
            if x >= a:
                acc += 1
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def rank(p: Permutation, a: int, b: int) -> int:
    if not (1 <= a <= p.n and 1 <= b <= p.n):
        raise IndexOutOfRange(f"({a},{b}) outside [{p.n}]x[{p.n}]")
    return rank_table(p)[a - 1][b - 1]


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Bruhat order by comparing all south-west rank numbers."""
    _check_same_size(v, w)
    if v == w:
        return True
    if length(v) >= length(w):
        return False
    tv, tw = rank_table(v), rank_table(w)
    return all(x <= y for rv, rw in zip(tv, tw) for x, y in zip(rv, rw))


def transposition_apply(a: int, b: int, v: Permutation) -> Permutation:
    """``t_{a,b} * v``: swap the values ``a`` and ``b`` in the word of ``v``."""
    if not (1 <= a < b <= v.n):
        raise IndexOutOfRange(f"need 1 <= a < b <= {v.n}, got ({a},{b})")
    images = tuple(b if x == a else a if x == b else x for x in v.images)
    return Permutation(images)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word ``(i_1, ..., i_k)`` with ``w = s_{i_1} ... s_{i_k}``.

    Peels off the smallest left descent each time: the smallest ``i`` such
    that ``i + 1`` stands before ``i`` in the word, then ``w <- s_i * w``.
    """
    images = list(w.images)
    pos = [0] * (w.n + 1)
    for j, x in enumerate(images):
        pos[x] = j
    word = []
    while True:
        for i in range(1, w.n):
            if pos[i] > pos[i + 1]:
                break
        else:
            return tuple(word)
        word.append(i)
        a, b = pos[i], pos[i + 1]
        images[a], images[b] = i + 1, i
        pos[i], pos[i + 1] = b, a


def word_product(word: Iterable[int], n: int) -> Permutation:
    """The product ``s_{i_1} s_{i_2} ... s_{i_k}`` in ``S_n``."""
    images = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            raise IndexOutOfRange(f"s_{i} not in S_{n}")
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def subword_bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Bruhat order via the subword property (independent cross-check).

    Searches for a reduced word of ``v`` inside ``reduced_word(w)``.  Partial
    products are kept reduced and must stay below ``v`` in the right weak
    order, so every surviving branch extends to a reduced word of ``v``.
    """
    _check_same_size(v, w)
    word = reduced_word(w)
    target = v.images
    target_len = length(v)

    def weak_prefix(u: tuple[int, ...], lu: int) -> bool:
        # l(u^{-1} v) == l(v) - l(u)
        u_inv_v = tuple(u.index(x) + 1 for x in target)
        return _inversions(u_inv_v) == target_len - lu

    @lru_cache(maxsize=None)
    def search(pos: int, u: tuple[int, ...], lu: int) -> bool:
        if lu == target_len:
            return u == target
        if len(word) - pos < target_len - lu:
            return False
        if search(pos + 1, u, lu):
            return True
        i = word[pos]
        if u[i - 1] < u[i]:
            nxt = list(u)
            nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
            nxt = tuple(nxt)
            if weak_prefix(nxt, lu + 1):
                return search(pos + 1, nxt, lu + 1)
        return False

    return search(0, tuple(range(1, v.n + 1)), 0)


def simple_reflections_below(w: Permutation) -> frozenset[int]:
    """``{i : s_i <= w}``, using ``s_i <= w  <=>  r_w(i + 1, i) >= 1``."""
    table = rank_table(w)
    return frozenset(i for i in range(1, w.n) if table[i][i - 1] >= 1)


def descent_set(w: Permutation) -> frozenset[int]:
    return frozenset(i for i in range(1, w.n) if w.images[i - 1] > w.images[i])


def is_irreducible(w: Permutation) -> bool:
    """False iff some proper prefix ``w(1..j)`` is exactly ``{1..j}``."""
    running_max = 0
    for j, x in enumerate(w.images[:-1], start=1):
        running_max = max(running_max, x)
        if running_max == j:
            return False
    return True


def direct_sum(alpha: Permutation, beta: Permutation) -> Permutation:
    shift = alpha.n
    return Permutation(alpha.images + tuple(x + shift for x in beta.images))


def w0_star_w0(n: int) -> Permutation:
    """``w0 (+) w0`` in ``S_{2n}``."""
    return direct_sum(longest(n), longest(n))


def hat_w(w: Permutation) -> Permutation:
    """``w0^{(2n)} * w`` with ``w`` embedded in ``S_{2n}`` fixing ``n+1..2n``."""
    n = w.n
    embedded = direct_sum(w, identity(n))
    return longest(2 * n) * embedded


def reflect(w: Permutation) -> Permutation:
    """``w0 * w``: flips the permutation matrix upside down.

    Translates between south-west rank conditions (used here) and the
    north-west conventions of the lower/upper Borel literature.
    """
    return longest(w.n) * w
