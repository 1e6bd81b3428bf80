"""Free-group words over generators a1..an.

Words are run-length encoded: a letter is a pair (generator index, nonzero
exponent) and adjacent letters always carry distinct generators, so every
``Word`` is freely reduced by construction.  Conjugacy classes are
represented by ``CyclicWord`` values stored in a canonical rotation.

Conjugacy here is free-group conjugacy.  For a closed surface the
fundamental group has one relator, so ``are_conjugate`` is only sound for
surfaces with boundary; the abelianization layer is unaffected either way
because the surface relator abelianizes to the identity.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple


class Letter(NamedTuple):
    """One maximal run a_gen^exp inside a reduced word."""

    gen: int
    exp: int


def _validate_letters(letters: tuple[Letter, ...], n: int) -> None:
    prev_gen = 0
    for let in letters:
        if not 1 <= let.gen <= n:
            raise ValueError(f"generator index {let.gen} out of range 1..{n}")
        if let.exp == 0:
            raise ValueError("zero-exponent letter")
        if let.gen == prev_gen:
            raise ValueError("adjacent letters share a generator; word not reduced")
        prev_gen = let.gen


class Word:
    """A freely reduced word in the free group on a1..an.

    Instances are immutable.  Use :func:`reduce_word` (or :func:`parse_word`)
    to build one from raw letter data; the constructor expects already
    reduced run-length letters.

    >>> w = reduce_word([(1, 2), (2, 1), (2, -1), (1, 3)], n=2)
    >>> str(w)
    'a1^5'
    """

    __slots__ = ("n", "letters")

    def __init__(self, n: int, letters: Iterable[Letter] = ()):
        letters = tuple(Letter(g, e) for g, e in letters)
        if n < 0:
            raise ValueError("alphabet size must be nonnegative")
        _validate_letters(letters, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def identity(cls, n: int) -> "Word":
        return cls(n, ())

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        """Letter count of the reduced word (each run weighted by |exp|)."""
        return sum(abs(let.exp) for let in self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def inverse(self) -> "Word":
        return inverse(self)

    def __pow__(self, k: int) -> "Word":
        if k == 0:
            return Word.identity(self.n)
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.n == other.n and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.n, self.letters))

    def __repr__(self) -> str:
        return f"Word({self.n}, {format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


class CyclicWord:
    """A cyclically reduced word stored in its least rotation.

    The stored rotation is the lexicographically least one under the letter
    order (gen ascending, then exp ascending); any fixed total order would
    do, this one is deterministic and serialization-stable.
    """

    __slots__ = ("n", "letters")

    def __init__(self, n: int, letters: Iterable[Letter] = ()):
        letters = tuple(Letter(g, e) for g, e in letters)
        _validate_letters(letters, n)
        if len(letters) >= 2 and letters[0].gen == letters[-1].gen:
            raise ValueError("first and last letter share a generator; not cyclically reduced")
        if len(letters) >= 2 and letters != min(
            letters[i:] + letters[:i] for i in range(len(letters))
        ):
            raise ValueError("letters not in canonical rotation")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("CyclicWord is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.n == other.n and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.n, self.letters))

    def __repr__(self) -> str:
        body = " ".join(_format_letter(let) for let in self.letters)
        return f"CyclicWord({self.n}, {body!r})"


def _push(stack: list[Letter], gen: int, exp: int) -> None:
    # Merge with the top of the stack when generators coincide.
    if exp == 0:
        return
    if stack and stack[-1].gen == gen:
        merged = stack[-1].exp + exp
        stack.pop()
        if merged != 0:
            stack.append(Letter(gen, merged))
    else:
        stack.append(Letter(gen, exp))


def reduce_word(raw: Iterable[tuple[int, int]], n: int) -> Word:
    """Freely reduce a raw sequence of (generator, exponent) pairs.

    Zero exponents are dropped; adjacent runs of the same generator merge
    and cancel.  The result equals the raw product in the free group.

    >>> str(reduce_word([(1, 1), (1, -1)], n=1))
    ''
    >>> str(reduce_word([(1, 1), (2, 1)], n=2))
    'a1 a2'
    """
    stack: list[Letter] = []
    for gen, exp in raw:
        if not 1 <= gen <= n:
            raise ValueError(f"generator index {gen} out of range 1..{n}")
        _push(stack, gen, exp)
    return Word(n, stack)


def concat(u: Word, v: Word) -> Word:
    """Freely reduced product u·v.  Both words must share an alphabet."""
    if u.n != v.n:
        raise ValueError(f"alphabet mismatch: {u.n} vs {v.n}")
    stack = list(u.letters)
    for let in v.letters:
        _push(stack, let.gen, let.exp)
    return Word(u.n, stack)


def inverse(w: Word) -> Word:
    """The inverse word: letters reversed, exponents negated."""
    return Word(w.n, tuple(Letter(let.gen, -let.exp) for let in reversed(w.letters)))


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Cyclically reduce ``w``, returning (core, conjugator).

    The core is cyclically reduced and ``w == conjugator * core *
    conjugator.inverse()`` in the free group.

    >>> core, conj = cyclic_reduce(parse_word("a1 a2 a1^-1", n=2))
    >>> str(core), str(conj)
    ('a2', 'a1')
    """
    letters = list(w.letters)
    conj: list[Letter] = []
    while len(letters) >= 2 and letters[0].gen == letters[-1].gen:
        first, last = letters[0], letters[-1]
        total = first.exp + last.exp
        if total == 0:
            conj.append(first)
            letters = letters[1:-1]
        else:
            # Ends merge instead of cancelling: rotate the first run inward.
            conj.append(first)
            letters = letters[1:-1] + [Letter(first.gen, total)]
            break
    return Word(w.n, letters), Word(w.n, conj)


def conjugacy_canonical(w: Word) -> CyclicWord:
    """Canonical cyclic form: invariant under free-group conjugation of w."""
    core, _ = cyclic_reduce(w)
    letters = core.letters
    if len(letters) >= 2:
        letters = min(letters[i:] + letters[:i] for i in range(len(letters)))
    return CyclicWord(w.n, letters)


def are_conjugate(u: Word, v: Word) -> bool:
    """Free-group conjugacy test via canonical cyclic forms."""
    if u.n != v.n:
        raise ValueError(f"alphabet mismatch: {u.n} vs {v.n}")
    return conjugacy_canonical(u) == conjugacy_canonical(v)


_TOKEN = re.compile(r"^a(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, n: int) -> Word:
    """Parse whitespace-separated tokens ``a<k>`` / ``a<k>^<e>``.

    The empty string parses to the identity word.

    >>> str(parse_word("a1 a2^-3 a1^2", n=2))
    'a1 a2^-3 a1^2'
    """
    raw: list[tuple[int, int]] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"malformed word token {token!r}")
        gen = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        raw.append((gen, exp))
    return reduce_word(raw, n)


def _format_letter(let: Letter) -> str:
    return f"a{let.gen}" if let.exp == 1 else f"a{let.gen}^{let.exp}"


def format_word(w: Word) -> str:
    """Render a word in the grammar accepted by :func:`parse_word`."""
    return " ".join(_format_letter(let) for let in w.letters)
