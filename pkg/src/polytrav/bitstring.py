"""Bitstring primitives shared by every other module.

Conventions used throughout the package:

* A bitstring of length n has positions 1..n, where position 1 is the
  *leftmost* character of the textual form.  So for "0110", position 1
  holds 0 and position 4 holds 0.
* ``max_diff(x, y)`` is the largest position where x and y differ.
  Equivalently, n - max_diff(x, y) is the length of the longest common
  suffix.  Changing the current string into one with small max_diff means
  rewriting only a short prefix.
* A listing (ordering) of a set X of equal-length bitstrings is *genlex*
  if all strings sharing a common suffix occupy a contiguous block.
  Genlex orderings are exactly the orderings of minimum total
  prefix-change cost; ``genlex_cost`` computes that optimum.

Bitstrings are immutable and hashable.  Internally the bits are packed
into a single int with position 1 as the most significant bit, so that
textual lexicographic order coincides with integer order and the
primitives below are O(n / wordsize).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

#: Sentinel strictly greater than every position.  Returned by
#: ``max_diff_in`` (and by the window minimisation built on top of it)
#: when no differing position falls inside the window.
INFINITY = float("inf")


class BitString:
    """Immutable fixed-length string over {0,1}."""

    __slots__ = ("_bits", "_n")

    def __init__(self, bits: int, n: int):
        if n < 0:
            raise ValueError("length must be nonnegative")
        if bits < 0 or bits >> n:
            raise ValueError("bit pattern does not fit the given length")
        self._bits = bits
        self._n = n

    @classmethod
    def from_text(cls, text: str) -> "BitString":
        """Parse '0'/'1' characters, position 1 first."""
        if text and set(text) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BitString":
        bits = 0
        n = 0
        for v in values:
            if v not in (0, 1):
                raise ValueError("entries must be 0 or 1")
            bits = (bits << 1) | v
            n += 1
        return cls(bits, n)

    @classmethod
    def from_support(cls, n: int, positions: Iterable[int]) -> "BitString":
        """Indicator vector of a set of 1-based positions."""
        bits = 0
        for i in positions:
            if not 1 <= i <= n:
                raise ValueError(f"position {i} outside 1..{n}")
            bits |= 1 << (n - i)
        return cls(bits, n)

    @classmethod
    def zeros(cls, n: int) -> "BitString":
        return cls(0, n)

    def __len__(self) -> int:
        return self._n

    @property
    def packed(self) -> int:
        """The underlying int; position 1 is the most significant bit."""
        return self._bits

    def get(self, i: int) -> int:
        if not 1 <= i <= self._n:
            raise IndexError(f"position {i} outside 1..{self._n}")
        return (self._bits >> (self._n - i)) & 1

    def flip(self, i: int) -> "BitString":
        if not 1 <= i <= self._n:
            raise IndexError(f"position {i} outside 1..{self._n}")
        return BitString(self._bits ^ (1 << (self._n - i)), self._n)

    def with_bit(self, i: int, value: int) -> "BitString":
        if value not in (0, 1):
            raise ValueError("bit value must be 0 or 1")
        mask = 1 << (self._n - i)
        bits = (self._bits | mask) if value else (self._bits & ~mask)
        return BitString(bits, self._n)

    def support(self) -> tuple[int, ...]:
        """1-based positions holding a 1, ascending."""
        return tuple(i for i in range(1, self._n + 1) if self.get(i))

    def text(self) -> str:
        return format(self._bits, f"0{self._n}b") if self._n else ""

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"BitString({self.text()!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitString)
            and self._n == other._n
            and self._bits == other._bits
        )

    def __hash__(self) -> int:
        return hash((self._bits, self._n))

    def __lt__(self, other: "BitString") -> bool:
        # Textual lexicographic order; comparisons are only meaningful
        # between strings of equal length.
        _check_same_length(self, other)
        return self._bits < other._bits

    def __le__(self, other: "BitString") -> bool:
        _check_same_length(self, other)
        return self._bits <= other._bits


def _check_same_length(x: BitString, y: BitString) -> None:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")


class Interval:
    """The set of positions {lo, ..., hi}; empty iff lo > hi."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: int, hi: int):
        self.lo = lo
        self.hi = hi

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __contains__(self, i: int) -> bool:
        return self.lo <= i <= self.hi

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Interval)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo}, {self.hi})"


def max_diff(x: BitString, y: BitString) -> int:
    """Largest position where x and y differ.

    max_diff("1010110", "0111110") == 4: the strings agree on the final
    three characters and differ at position 4.
    """
    _check_same_length(x, y)
    z = x.packed ^ y.packed
    if z == 0:
        raise ValueError("max_diff requires distinct strings")
    # Lowest set bit of the XOR is the highest differing position.
    return len(x) - ((z & -z).bit_length() - 1)


def max_diff_in(x: BitString, y: BitString, window: Interval) -> int | float:
    """max_diff(x, y) if it lies in the window, else INFINITY."""
    pos = max_diff(x, y)
    return pos if pos in window else INFINITY


def hamming(x: BitString, y: BitString) -> int:
    """Number of positions where x and y differ."""
    _check_same_length(x, y)
    return (x.packed ^ y.packed).bit_count()


def dot(weights: Sequence, x: BitString) -> int:
    """Weighted sum of the 1-entries; weights[i-1] belongs to position i."""
    if len(weights) != len(x):
        raise ValueError("weight vector length mismatch")
    n = len(x)
    bits = x.packed
    total = 0
    while bits:
        low = bits & -bits
        total += weights[n - low.bit_length()]
        bits ^= low
    return total


def is_genlex(listing: Sequence[BitString]) -> bool:
    """Whether all strings sharing a suffix occupy a contiguous block.

    Uses the recursive characterisation: the listing splits by last bit
    into L = L0,L1 or L = L1,L0, and both halves with the last bit
    stripped are again genlex.  Duplicates violate the ordering contract.
    """
    if not listing:
        return True
    n = len(listing[0])
    packed = []
    seen = set()
    for x in listing:
        if len(x) != n:
            raise ValueError("listing entries must have equal length")
        if x.packed in seen:
            raise ValueError("listing contains duplicates")
        seen.add(x.packed)
        packed.append(x.packed)
    return _is_genlex_packed(packed, n)


def _is_genlex_packed(packed: list[int], n: int) -> bool:
    if len(packed) <= 1 or n == 0:
        return True
    # Last textual character is the least significant stored bit.
    first = packed[0] & 1
    split = len(packed)
    for idx, v in enumerate(packed):
        if v & 1 != first:
            split = idx
            break
    head = [v >> 1 for v in packed[:split]]
    tail = packed[split:]
    if any(v & 1 == first for v in tail):
        return False
    return _is_genlex_packed(head, n - 1) and _is_genlex_packed(
        [v >> 1 for v in tail], n - 1
    )


def listing_cost(listing: Sequence[BitString]) -> int:
    """Sum of prefix-change lengths over consecutive pairs; 0 for a singleton."""
    if not listing:
        raise ValueError("cost of an empty listing is undefined")
    return sum(
        max_diff(listing[i], listing[i + 1]) for i in range(len(listing) - 1)
    )


def genlex_cost(strings: Iterable[BitString]) -> int:
    """The common cost of every genlex ordering of the given set.

    Recursion on the last position: splitting X by its final bit,
    cost(X) = cost(X0) + cost(X1) + n, where the +n applies only when
    both halves are nonempty (one transition crosses the split and
    rewrites the whole prefix).
    """
    items = list(strings)
    if not items:
        raise ValueError("genlex_cost of an empty set is undefined")
    n = len(items[0])
    packed = set()
    for x in items:
        if len(x) != n:
            raise ValueError("set entries must have equal length")
        packed.add(x.packed)
    if len(packed) != len(items):
        raise ValueError("input contains duplicates")
    return _genlex_cost_packed(packed, n)


def _genlex_cost_packed(packed: set[int], n: int) -> int:
    if len(packed) <= 1 or n == 0:
        return 0
    zeros = {v >> 1 for v in packed if v & 1 == 0}
    ones = {v >> 1 for v in packed if v & 1 == 1}
    cost = _genlex_cost_packed(zeros, n - 1) + _genlex_cost_packed(ones, n - 1)
    if zeros and ones:
        cost += n
    return cost


def all_bitstrings(n: int) -> Iterator[BitString]:
    """All 2^n strings of length n in lexicographic order."""
    for bits in range(1 << n):
        yield BitString(bits, n)
