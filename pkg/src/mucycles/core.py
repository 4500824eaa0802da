"""Cycles, permutations, and pattern-occurrence scans.

Everything in this module is definition-level: occurrence detection walks
the cycle for every candidate pair and tests every element that lies
between them.  That makes it the reference the fast kernels are checked
against, not the thing you want to call in a factorial-size loop (use
``mucycles.kernel`` for that).

A pair ``<i,j>`` with ``i < j`` *matches* in a cycle when no value strictly
between ``i`` and ``j`` appears on the clockwise arc from ``i`` to ``j``.
Pairs ``<i,i+1>`` match vacuously and are called trivial; the interesting
statistic is the number of nontrivial matches.
"""

from __future__ import annotations

from functools import reduce as _fold
from typing import Iterable, Iterator


class InputError(ValueError):
    """Raised when an argument violates a documented precondition."""


def _check_permutation(values: tuple[int, ...]) -> None:
    n = len(values)
    if n == 0:
        raise InputError("empty sequence is not a permutation")
    if sorted(values) != list(range(1, n + 1)):
        raise InputError(f"not a permutation of 1..{n}: {values!r}")


class Permutation:
    """A linear arrangement of 1..n (one-line notation)."""

    __slots__ = ("elems",)

    def __init__(self, elems: Iterable[int]):
        self.elems = tuple(elems)
        _check_permutation(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __getitem__(self, i: int) -> int:
        return self.elems[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.elems == other.elems

    def __hash__(self) -> int:
        return hash(("perm", self.elems))

    def __repr__(self) -> str:
        return f"Permutation({list(self.elems)})"

    def position(self, value: int) -> int:
        """0-based position of ``value``."""
        try:
            return self.elems.index(value)
        except ValueError:
            raise InputError(f"{value} not in permutation") from None

    def reverse(self) -> "Permutation":
        return Permutation(self.elems[::-1])

    def complement(self) -> "Permutation":
        n = len(self.elems)
        return Permutation(n + 1 - v for v in self.elems)

    def image(self, value: int) -> int:
        """The value this permutation maps ``value`` to (i -> elems[i-1])."""
        return self.elems[value - 1]

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of the functional digraph, each starting at its
        minimum, ordered by minimum."""
        n = len(self.elems)
        seen = [False] * (n + 1)
        out = []
        for start in range(1, n + 1):
            if seen[start]:
                continue
            cyc = []
            v = start
            while not seen[v]:
                seen[v] = True
                cyc.append(v)
                v = self.elems[v - 1]
            out.append(tuple(cyc))
        return out


class Cycle:
    """An n-cycle on {1..n}, stored in the rotation that starts at 1.

    Construction accepts any rotation of the same cyclic word; equality and
    hashing therefore see through rotation.
    """

    __slots__ = ("elems",)

    def __init__(self, elems: Iterable[int]):
        values = tuple(elems)
        _check_permutation(values)
        k = values.index(1)
        self.elems = values[k:] + values[:k]

    @classmethod
    def _from_canonical(cls, values: tuple[int, ...]) -> "Cycle":
        # trusted fast path for enumeration loops: values already canonical
        self = cls.__new__(cls)
        self.elems = values
        return self

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __getitem__(self, i: int) -> int:
        return self.elems[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Cycle) and self.elems == other.elems

    def __hash__(self) -> int:
        return hash(("cycle", self.elems))

    def __repr__(self) -> str:
        return f"Cycle({list(self.elems)})"

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.elems) + ")"

    def position(self, value: int) -> int:
        try:
            return self.elems.index(value)
        except ValueError:
            raise InputError(f"{value} not in cycle") from None

    def successor(self, value: int) -> int:
        """The element immediately following ``value`` clockwise."""
        i = self.position(value)
        return self.elems[(i + 1) % len(self.elems)]

    def as_permutation(self) -> Permutation:
        """The linear word read clockwise from 1."""
        return Permutation(self.elems)


def reduce_word(values: Iterable[int]) -> tuple[int, ...]:
    """Order-isomorphic image of a distinct-integer sequence onto 1..n.

    The i-th smallest entry becomes i, so relative order is preserved:
    ``reduce_word([3,7,10,5,2]) == (2,4,5,3,1)``.
    """
    vals = tuple(values)
    if len(set(vals)) != len(vals):
        raise InputError(f"duplicate entries in {vals!r}")
    rank = {v: i for i, v in enumerate(sorted(vals), start=1)}
    return tuple(rank[v] for v in vals)


def reduce_cycle(values: Iterable[int]) -> Cycle:
    """Relabel a cycle on any distinct values onto 1..k, keeping cyclic order."""
    return Cycle(reduce_word(values))


def make_cycle(values: Iterable[int]) -> Cycle:
    """Canonicalize any rotation of a cyclic word on {1..n}."""
    return Cycle(values)


def cyclically_between(cycle: Cycle, i: int, j: int, s: int) -> bool:
    """True when walking clockwise from ``i`` meets ``s`` before ``j``."""
    if len({i, j, s}) != 3:
        raise InputError("i, j, s must be three distinct elements")
    pi = cycle.position(i)
    pj = cycle.position(j)
    ps = cycle.position(s)
    n = len(cycle)
    return (ps - pi) % n < (pj - pi) % n


def mu_occurrences(perm: Permutation) -> frozenset[tuple[int, int]]:
    """Value pairs <a,b>, a < b, with no value strictly between them at an
    intermediate position."""
    e = perm.elems
    n = len(e)
    found = []
    for i in range(n):
        for j in range(i + 1, n):
            if e[i] < e[j] and not any(e[i] < e[k] < e[j] for k in range(i + 1, j)):
                found.append((e[i], e[j]))
    return frozenset(found)


def mu_prime_occurrences(perm: Permutation) -> frozenset[tuple[int, int]]:
    """Decreasing mirror of :func:`mu_occurrences`: pairs <a,b> with a > b."""
    e = perm.elems
    n = len(e)
    found = []
    for i in range(n):
        for j in range(i + 1, n):
            if e[i] > e[j] and not any(e[i] > e[k] > e[j] for k in range(i + 1, j)):
                found.append((e[i], e[j]))
    return frozenset(found)


def _arc_values(cycle: Cycle, i: int, j: int) -> Iterator[int]:
    # values strictly between positions of i and j, clockwise
    n = len(cycle)
    pi = cycle.position(i)
    pj = cycle.position(j)
    p = (pi + 1) % n
    while p != pj:
        yield cycle.elems[p]
        p = (p + 1) % n


def cycle_mu_occurrences(cycle: Cycle) -> frozenset[tuple[int, int]]:
    """All value pairs <a,b>, a < b, matching in the cycle."""
    n = len(cycle)
    found = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if not any(a < v < b for v in _arc_values(cycle, a, b)):
                found.append((a, b))
    return frozenset(found)


def cycle_mu_prime_occurrences(cycle: Cycle) -> frozenset[tuple[int, int]]:
    """All value pairs <a,b>, a > b, matching the decreasing mirror."""
    n = len(cycle)
    found = []
    for a in range(1, n + 1):
        for b in range(1, a):
            if not any(b < v < a for v in _arc_values(cycle, a, b)):
                found.append((a, b))
    return frozenset(found)


def mu_match_count(cycle: Cycle) -> int:
    """Total number of matches in the cycle (trivial ones included)."""
    return len(cycle_mu_occurrences(cycle))


def nontrivial_mu_count(cycle: Cycle) -> int:
    """Matches <a,b> with b > a+1.  Zero for 1- and 2-cycles."""
    return sum(1 for a, b in cycle_mu_occurrences(cycle) if b > a + 1)


def non_mu_matches(cycle: Cycle) -> frozenset[tuple[int, int]]:
    """Pairs <a,b>, a < b, that do not match in the cycle."""
    n = len(cycle)
    occ = cycle_mu_occurrences(cycle)
    return frozenset(
        (a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if (a, b) not in occ
    )


def non_mu_match_count(cycle: Cycle) -> int:
    return len(non_mu_matches(cycle))


def cnt_statistic(perm: Permutation) -> int:
    """Sum over the permutation's cycles of the nontrivial match count of
    each reduced cycle."""
    return sum(nontrivial_mu_count(reduce_cycle(c)) for c in perm.cycles())


def cnt_statistic_mu_prime(perm: Permutation) -> int:
    """Mirror-pattern analogue of :func:`cnt_statistic` (nontrivial means
    <a,b> with a > b+1)."""
    total = 0
    for c in perm.cycles():
        occ = cycle_mu_prime_occurrences(reduce_cycle(c))
        total += sum(1 for a, b in occ if a > b + 1)
    return total


def cycle_count(perm: Permutation) -> int:
    return len(perm.cycles())


def cycle_complement(perm: Permutation) -> Permutation:
    """Replace every value i by n+1-i inside the cycle structure.

    Equivalent to conjugating by the complement involution; an involution
    itself, and it preserves cycle type.
    """
    n = len(perm)
    return Permutation(n + 1 - perm.image(n + 1 - i) for i in range(1, n + 1))


# kept for callers that prefer a functional spelling over the methods
def reverse(perm: Permutation) -> Permutation:
    return perm.reverse()


def complement(perm: Permutation) -> Permutation:
    return perm.complement()


def _unused_fold_guard():  # pragma: no cover
    # silences linters about the functools import; _fold is handy in forks
    return _fold
