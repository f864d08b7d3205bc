"""Permutations of [n] and the subset combinatorics of Schubert vanishing sets.

Conventions used throughout the package:

- A permutation is written in one-line notation ``w = (w_1, ..., w_n)`` with
  ``w_i = w(i)``, values 1-based.  Positions reported by helper functions are
  0-based unless stated otherwise.
- An index set is a non-empty proper subset ``J`` of ``[n] = {1, ..., n}``,
  stored as a strictly increasing tuple.  It labels the Pluecker variable
  ``P_J``.
- The Gale order compares equal-size index sets elementwise after sorting:
  ``{a_1 < ... < a_m} <= {b_1 < ... < b_m}`` iff ``a_k <= b_k`` for all ``k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

#: Hard implementation bound; the classification sweeps use n <= 7.
MAX_N = 16


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of [n] in one-line notation."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if not 1 <= n <= MAX_N:
            raise ValueError(f"permutation length must be in 1..{MAX_N}, got {n}")
        if sorted(self.entries) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, position: int) -> int:
        return self.entries[position]

    def position_of(self, value: int) -> int:
        """0-based position of ``value`` in the one-line word."""
        return self.entries.index(value)

    @classmethod
    def from_iterable(cls, values: Iterable[int]) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The order-reversing permutation (n, n-1, ..., 1)."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        """Parse ``"3214"`` (n <= 9) or comma-separated ``"10,3,..."``.

        >>> Permutation.from_string("3214").entries
        (3, 2, 1, 4)
        """
        text = text.strip()
        if not text:
            raise ValueError("empty permutation string")
        if "," in text:
            parts = tuple(int(p) for p in text.split(","))
        else:
            if not text.isdigit():
                raise ValueError(f"malformed permutation string: {text!r}")
            parts = tuple(int(ch) for ch in text)
        return cls(parts)

    def to_string(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.entries)
        return ",".join(str(v) for v in self.entries)

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True, slots=True)
class IndexSet:
    """A non-empty proper subset of [n], the index of a Pluecker variable."""

    members: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if not 1 <= len(self.members) <= self.n - 1:
            raise ValueError(
                f"index set must be a non-empty proper subset of [{self.n}]: {self.members}"
            )
        if any(not 1 <= m <= self.n for m in self.members):
            raise ValueError(f"members out of range [1, {self.n}]: {self.members}")
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError(f"members must be strictly increasing: {self.members}")

    @classmethod
    def from_iterable(cls, values: Iterable[int], n: int) -> "IndexSet":
        return cls(tuple(sorted(values)), n)

    @classmethod
    def from_string(cls, text: str, n: int) -> "IndexSet":
        text = text.strip()
        if "," in text:
            values = (int(p) for p in text.split(","))
        else:
            values = (int(ch) for ch in text)
        return cls.from_iterable(values, n)

    def to_string(self) -> str:
        if self.n <= 9:
            return "".join(str(m) for m in self.members)
        return ",".join(str(m) for m in self.members)

    def __str__(self) -> str:
        return self.to_string()

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


@dataclass(frozen=True, slots=True)
class ValueSequence:
    """A sequence of pairwise distinct integers, not necessarily a permutation.

    Used for pattern tests on subsequences and on ``w`` with a value deleted,
    where no relabelling takes place.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.values)) != len(self.values):
            raise ValueError(f"values must be pairwise distinct: {self.values}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


# ---------------------------------------------------------------------------
# Gale order and vanishing sets


def gale_leq(a: IndexSet, b: IndexSet) -> bool:
    """Gale order on equal-size index sets: elementwise after sorting.

    >>> gale_leq(IndexSet((1, 2), 4), IndexSet((2, 3), 4))
    True
    >>> gale_leq(IndexSet((1, 4), 4), IndexSet((2, 3), 4))
    False
    """
    if a.n != b.n:
        raise ValueError(f"ambient size mismatch: {a.n} != {b.n}")
    if len(a.members) != len(b.members):
        raise ValueError(f"size mismatch: {len(a.members)} != {len(b.members)}")
    return all(x <= y for x, y in zip(a.members, b.members))


def dominated(members: Sequence[int], sorted_prefix: Sequence[int]) -> bool:
    """Tuple-level Gale test: ``members <= sorted_prefix`` elementwise."""
    return all(x <= y for x, y in zip(members, sorted_prefix))


def sorted_prefixes(entries: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """``sorted({w_1, ..., w_k})`` for k = 1..n, indexed by k-1."""
    out = []
    prefix: list[int] = []
    for v in entries:
        # insert keeping sorted order; n is tiny so linear insertion is fine
        i = 0
        while i < len(prefix) and prefix[i] < v:
            i += 1
        prefix.insert(i, v)
        out.append(tuple(prefix))
    return tuple(out)


@lru_cache(maxsize=None)
def vanishing_keys(entries: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """Member tuples of the vanishing set S_w, for the hot paths.

    S_w consists of the J with ``J`` not Gale-below ``{w_1, ..., w_|J|}``; the
    Pluecker variables P_J with J in S_w are set to zero on X(w).
    """
    n = len(entries)
    prefixes = sorted_prefixes(entries)
    out = set()
    for size in range(1, n):
        prefix = prefixes[size - 1]
        for combo in itertools.combinations(range(1, n + 1), size):
            if not dominated(combo, prefix):
                out.add(combo)
    return frozenset(out)


def vanishing_set(w: Permutation) -> frozenset[IndexSet]:
    """The set S_w = {J : J is not Gale-below the first |J| values of w}.

    >>> sorted(str(j) for j in vanishing_set(Permutation((3, 2, 1, 4))))
    ['124', '134', '14', '234', '24', '34', '4']
    """
    return frozenset(IndexSet(k, w.n) for k in vanishing_keys(w.entries))


# ---------------------------------------------------------------------------
# Restriction, deletion, overline/underline


def restriction(w: Permutation, m: int) -> Permutation:
    """Remove the values m+1, ..., n from w; a permutation of [m].

    >>> restriction(Permutation((1, 4, 2, 3)), 2).entries
    (1, 2)
    >>> restriction(Permutation((1, 4, 2, 3)), 3).entries
    (1, 2, 3)
    """
    if not 1 <= m <= w.n:
        raise ValueError(f"m must be in 1..{w.n}, got {m}")
    return Permutation(tuple(v for v in w.entries if v <= m))


def delete_value(w: Permutation, v: int) -> ValueSequence:
    """Drop the value v from the one-line word, without relabelling."""
    if not 1 <= v <= w.n:
        raise ValueError(f"value must be in 1..{w.n}, got {v}")
    return ValueSequence(tuple(x for x in w.entries if x != v))


def insert_max(w: Permutation, t: int) -> Permutation:
    """Insert the new maximum value n+1 after position t (0 <= t <= n).

    >>> insert_max(Permutation((1, 2)), 1).entries
    (1, 3, 2)
    """
    if not 0 <= t <= w.n:
        raise ValueError(f"insertion position must be in 0..{w.n}, got {t}")
    entries = w.entries
    return Permutation(entries[:t] + (w.n + 1,) + entries[t:])


def remove_max(w: Permutation) -> Permutation:
    """Delete the maximum value n; inverse of :func:`insert_max`."""
    if w.n < 2:
        raise ValueError("cannot remove the maximum from a singleton permutation")
    return Permutation(tuple(v for v in w.entries if v != w.n))


# ---------------------------------------------------------------------------
# Pattern avoidance


def same_type(a: Sequence[int], b: Sequence[int]) -> bool:
    """Two distinct-entry sequences have the same type if all pairwise
    comparisons agree."""
    if len(a) != len(b):
        return False
    return all(
        (a[i] < a[j]) == (b[i] < b[j])
        for i in range(len(a))
        for j in range(i + 1, len(a))
    )


def avoids(word: Sequence[int] | ValueSequence | Permutation,
           pattern: Sequence[int] | ValueSequence | Permutation) -> bool:
    """True iff no subsequence of ``word`` has the same type as ``pattern``.

    >>> avoids((1, 5, 2, 4, 3), (1, 4, 3, 2))
    False
    >>> avoids((1, 5, 2, 4, 3), (2, 3, 1))
    True
    """
    word_t = tuple(word)
    pattern_t = tuple(pattern)
    if len(pattern_t) > len(word_t):
        raise ValueError("pattern longer than word")
    for positions in itertools.combinations(range(len(word_t)), len(pattern_t)):
        if same_type(tuple(word_t[p] for p in positions), pattern_t):
            return False
    return True


def is_312_free(word: Sequence[int] | ValueSequence | Permutation) -> bool:
    """No subsequence (large, small, middle); O(n^2) scan.

    >>> is_312_free((3, 1, 2))
    False
    >>> is_312_free((4, 3, 1))
    True
    """
    values = tuple(word)
    n = len(values)
    for j in range(1, n - 1):
        # largest value before position j can serve as the "3"
        big = max(values[:j])
        if big <= values[j]:
            continue
        for k in range(j + 1, n):
            if values[j] < values[k] < big:
                return False
    return True


def has_descending_property(w: Permutation) -> bool:
    """Entries after the position of n are strictly decreasing.

    >>> has_descending_property(Permutation((2, 1, 4, 3)))
    True
    >>> has_descending_property(Permutation((1, 4, 2, 3)))
    False
    """
    t = w.position_of(w.n)
    tail = w.entries[t:]
    return all(a > b for a, b in zip(tail, tail[1:]))


# ---------------------------------------------------------------------------
# The zero family Z_n


def in_zero_family(w: Permutation) -> bool:
    """Product of pairwise non-adjacent simple transpositions.

    Closed-form test: w is an involution moving each point by at most one,
    i.e. w(w(i)) = i and |w_i - i| <= 1 for all i.

    >>> [in_zero_family(Permutation.from_string(s)) for s in ("123", "132", "213", "321")]
    [True, True, True, False]
    """
    e = w.entries
    return all(abs(v - i) <= 1 for i, v in enumerate(e, start=1)) and all(
        e[v - 1] == i for i, v in enumerate(e, start=1)
    )


def in_zero_family_inductive(w: Permutation) -> bool:
    """Inductive form: w ends with n, or with (n, n-1); recurse on the rest.

    Kept as a cross-check against :func:`in_zero_family`.
    """
    e = w.entries
    n = len(e)
    if n <= 1:
        return True
    if e[-1] == n:
        return in_zero_family_inductive(Permutation(e[:-1]))
    if n >= 2 and e[-1] == n - 1 and e[-2] == n:
        if n == 2:
            return True
        return in_zero_family_inductive(Permutation(e[:-2]))
    return False


def zero_family(n: int) -> frozenset[Permutation]:
    """All products of pairwise non-adjacent simple transpositions in S_n."""
    out = set()
    positions = range(1, n)  # s_i swaps i and i+1
    for size in range(0, n // 2 + 1):
        for combo in itertools.combinations(positions, size):
            if any(b - a < 2 for a, b in zip(combo, combo[1:])):
                continue
            entries = list(range(1, n + 1))
            for i in combo:
                entries[i - 1], entries[i] = entries[i], entries[i - 1]
            out.add(Permutation(tuple(entries)))
    return frozenset(out)


@lru_cache(maxsize=None)
def zero_family_size(n: int) -> int:
    """|Z_n| via the Fibonacci-style recurrence |Z_n| = |Z_{n-1}| + |Z_{n-2}|."""
    if n <= 0:
        return 1
    if n == 1:
        return 1
    if n == 2:
        return 2
    return zero_family_size(n - 1) + zero_family_size(n - 2)


# ---------------------------------------------------------------------------
# Bruhat order


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Bruhat order via the dominance criterion.

    ``v <= w`` iff for every k the sorted prefix {v_1, ..., v_k} is
    Gale-below the sorted prefix {w_1, ..., w_k}.

    >>> bruhat_leq(Permutation((2, 1, 3)), Permutation((3, 2, 1)))
    True
    >>> bruhat_leq(Permutation((3, 1, 2)), Permutation((2, 3, 1)))
    False
    """
    if v.n != w.n:
        raise ValueError(f"size mismatch: {v.n} != {w.n}")
    return bruhat_leq_entries(v.entries, w.entries)


def bruhat_leq_entries(ve: tuple[int, ...], we: tuple[int, ...]) -> bool:
    """Tuple-level dominance test, for hot loops."""
    for pv, pw in zip(sorted_prefixes(ve)[:-1], sorted_prefixes(we)[:-1]):
        if not all(x <= y for x, y in zip(pv, pw)):
            return False
    return True


def inversions(entries: Sequence[int]) -> int:
    return sum(
        1
        for i in range(len(entries))
        for j in range(i + 1, len(entries))
        if entries[i] > entries[j]
    )


@lru_cache(maxsize=None)
def _bruhat_down_set(we: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """All u <= w by closure of length-decreasing transposition steps.

    Brute-force reachability oracle used to validate the dominance criterion;
    exponential, keep n small.
    """
    n = len(we)
    seen = {we}
    frontier = [we]
    while frontier:
        current = frontier.pop()
        inv = inversions(current)
        for i in range(n):
            for j in range(i + 1, n):
                if current[i] > current[j]:
                    nxt = list(current)
                    nxt[i], nxt[j] = nxt[j], nxt[i]
                    nxt_t = tuple(nxt)
                    if inversions(nxt_t) < inv and nxt_t not in seen:
                        seen.add(nxt_t)
                        frontier.append(nxt_t)
    return frozenset(seen)


def bruhat_leq_oracle(v: Permutation, w: Permutation) -> bool:
    """Reachability-based Bruhat test (test oracle, small n only)."""
    if v.n != w.n:
        raise ValueError(f"size mismatch: {v.n} != {w.n}")
    return v.entries in _bruhat_down_set(w.entries)


# ---------------------------------------------------------------------------
# Enumeration helpers


def all_permutations(n: int) -> Iterator[Permutation]:
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)


def all_index_keys(n: int) -> tuple[tuple[int, ...], ...]:
    """All non-empty proper subsets of [n] as sorted member tuples,
    ordered by (size, lexicographic)."""
    out = []
    for size in range(1, n):
        out.extend(itertools.combinations(range(1, n + 1), size))
    return tuple(out)
