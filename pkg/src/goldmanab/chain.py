"""Quotients of a free group by powers of one distinguished generator.

Killing c^(2^level) for a free generator c turns the free group into the
free product of a cyclic group of order 2^level (generated by c) with the
free group on the remaining generators.  Elements are kept in normal form:
c-exponents live in the symmetric residue range (-2^(level-1), 2^(level-1)]
and no two adjacent letters can merge.  At level 0 the c-factor is trivial
and every c-letter vanishes.

The projections at successive levels have nested kernels, which realizes a
strictly descending chain; the separation machinery finds the first level
at which two non-conjugate words stop being conjugate in the quotient.
"""

from __future__ import annotations

from typing import Iterable, Optional, Union

from .words import Letter, Word, are_conjugate, reduce_word

Syllable = tuple[str, Union[int, tuple[Letter, ...]]]


def symmetric_residue(exp: int, level: int) -> int:
    """Reduce mod 2^level into (-2^(level-1), 2^(level-1)].

    The boundary value +2^(level-1) is kept, its negative is folded up.

    >>> [symmetric_residue(e, 2) for e in range(-4, 5)]
    [0, 1, 2, -1, 0, 1, 2, -1, 0]
    """
    modulus = 1 << level
    r = exp % modulus
    if r > modulus >> 1:
        r -= modulus
    return r


class QuotientWord:
    """Normal-form element of the level quotient.

    Immutable; built with :func:`project_word` or by multiplying existing
    elements.
    """

    __slots__ = ("level", "c", "alphabet", "letters")

    def __init__(self, level: int, c: int, alphabet: int, letters: Iterable[Letter] = ()):
        if level < 0:
            raise ValueError("level must be nonnegative")
        if not 1 <= c <= alphabet:
            raise ValueError(f"distinguished generator {c} out of range 1..{alphabet}")
        letters = tuple(Letter(g, e) for g, e in letters)
        prev = 0
        for let in letters:
            if not 1 <= let.gen <= alphabet:
                raise ValueError(f"generator index {let.gen} out of range 1..{alphabet}")
            if let.exp == 0 or let.gen == prev:
                raise ValueError("letters not in normal form")
            if let.gen == c and symmetric_residue(let.exp, level) != let.exp:
                raise ValueError(f"c-exponent {let.exp} outside the level-{level} residue range")
            prev = let.gen
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientWord is immutable")

    @classmethod
    def identity(cls, level: int, c: int, alphabet: int) -> "QuotientWord":
        return cls(level, c, alphabet, ())

    def is_identity(self) -> bool:
        return not self.letters

    def _require_compatible(self, other: "QuotientWord") -> None:
        if (self.level, self.c, self.alphabet) != (other.level, other.c, other.alphabet):
            raise ValueError("level mismatch")

    def __mul__(self, other: "QuotientWord") -> "QuotientWord":
        self._require_compatible(other)
        stack = list(self.letters)
        for let in other.letters:
            _push_quotient(stack, let.gen, let.exp, self.level, self.c)
        return QuotientWord(self.level, self.c, self.alphabet, stack)

    def inverse(self) -> "QuotientWord":
        stack: list[Letter] = []
        for let in reversed(self.letters):
            _push_quotient(stack, let.gen, -let.exp, self.level, self.c)
        return QuotientWord(self.level, self.c, self.alphabet, stack)

    def to_word(self) -> Word:
        """The normal form read back as a plain free-group word."""
        return Word(self.alphabet, self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientWord):
            return NotImplemented
        return (
            self.level == other.level
            and self.c == other.c
            and self.alphabet == other.alphabet
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.level, self.c, self.alphabet, self.letters))

    def __repr__(self) -> str:
        return (
            f"QuotientWord(level={self.level}, c={self.c}, "
            f"word={str(self.to_word())!r})"
        )


def _push_quotient(stack: list[Letter], gen: int, exp: int, level: int, c: int) -> None:
    if gen == c:
        exp = symmetric_residue(exp, level)
    if exp == 0:
        return
    if stack and stack[-1].gen == gen:
        total = stack[-1].exp + exp
        if gen == c:
            total = symmetric_residue(total, level)
        stack.pop()
        if total:
            stack.append(Letter(gen, total))
    else:
        stack.append(Letter(gen, exp))


def project_word(w: Word, level: int, c: int) -> QuotientWord:
    """The canonical projection of a free-group word to the level quotient.

    A group homomorphism: every c-exponent is replaced by its symmetric
    residue mod 2^level and the cascade of cancellations is carried out.

    >>> str(project_word(reduce_word([(1, 5)], 2), 1, 1).to_word())
    'a1'
    """
    if not 1 <= c <= w.n:
        raise ValueError(f"distinguished generator {c} out of range 1..{w.n}")
    stack: list[Letter] = []
    for let in w.letters:
        _push_quotient(stack, let.gen, let.exp, level, c)
    return QuotientWord(level, c, w.n, stack)


def _syllables(q: QuotientWord) -> list[Syllable]:
    # Alternating c-powers and maximal blocks of free-factor letters.
    out: list[Syllable] = []
    block: list[Letter] = []
    for let in q.letters:
        if let.gen == q.c:
            if block:
                out.append(("f", tuple(block)))
                block = []
            out.append(("c", let.exp))
        else:
            block.append(let)
    if block:
        out.append(("f", tuple(block)))
    return out


def _merge_syllables(last: Syllable, first: Syllable, level: int, alphabet: int) -> Optional[Syllable]:
    kind = last[0]
    if kind == "c":
        total = symmetric_residue(last[1] + first[1], level)
        return ("c", total) if total else None
    merged = reduce_word([(g, e) for g, e in last[1]] + [(g, e) for g, e in first[1]], alphabet)
    return ("f", merged.letters) if merged.letters else None


def _cyclic_syllables(q: QuotientWord) -> list[Syllable]:
    # Conjugate away matching ends until the syllable cycle is reduced.
    syl = _syllables(q)
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        merged = _merge_syllables(syl[-1], syl[0], q.level, q.alphabet)
        middle = syl[1:-1]
        syl = middle if merged is None else [merged] + middle
    return syl


def conjugate_in_quotient(x: QuotientWord, y: QuotientWord) -> bool:
    """Conjugacy decision in the free product.

    Both sides are cyclically reduced at the syllable level; single-factor
    elements are compared inside their factor (equal residues for c-powers,
    free-group conjugacy otherwise) and longer normal forms by rotation of
    their syllable cycles.
    """
    x._require_compatible(y)
    sx, sy = _cyclic_syllables(x), _cyclic_syllables(y)
    if len(sx) <= 1 or len(sy) <= 1:
        if len(sx) != len(sy):
            return False
        if not sx:
            return True
        (kx, vx), (ky, vy) = sx[0], sy[0]
        if kx != ky:
            return False
        if kx == "c":
            return vx == vy
        wx = Word(x.alphabet, vx)
        wy = Word(y.alphabet, vy)
        return are_conjugate(wx, wy)
    if len(sx) != len(sy):
        return False
    return any(sy == sx[i:] + sx[:i] for i in range(len(sx)))


def kernel_element(
    level: int,
    exponents: Iterable[int],
    factors: Iterable[Word],
    conjugator: Word,
    c: int,
) -> Word:
    """A conjugated product of commutators of c-power wraps with words.

    Builds g * prod_i (c^(2^m_i) x_i c^(-2^m_i) x_i^(-1)) * g^(-1) as a
    reduced free-group word; every exponent m_i must be at least ``level``,
    which makes the result project to the identity at that level.
    """
    exponents = list(exponents)
    factors = list(factors)
    if not exponents or len(exponents) != len(factors):
        raise ValueError("need equally many exponents and words, at least one of each")
    if any(m < level for m in exponents):
        raise ValueError(f"all exponents must be >= level {level}")
    n = conjugator.n
    if not 1 <= c <= n:
        raise ValueError(f"distinguished generator {c} out of range 1..{n}")
    if any(x.n != n for x in factors):
        raise ValueError("alphabet mismatch among the factor words")
    out = conjugator
    for m, x in zip(exponents, factors):
        wrap = Word(n, (Letter(c, 1 << m),))
        out = out * wrap * x * wrap.inverse() * x.inverse()
    return out * conjugator.inverse()


def separation_level(a: Word, b: Word, c: int, n_max: int) -> Optional[int]:
    """Least level where the projections of two words stop being conjugate.

    The inputs must not be conjugate in the free group (then no level can
    separate them and a ValueError is raised).  Returns None when no level
    up to ``n_max`` separates; a level large enough that 2^(level-1)
    exceeds the total absolute c-exponent of both words always does.
    """
    if a.n != b.n:
        raise ValueError(f"alphabet mismatch: {a.n} vs {b.n}")
    if are_conjugate(a, b):
        raise ValueError("words are conjugate in the free group; no level separates them")
    for level in range(n_max + 1):
        if not conjugate_in_quotient(project_word(a, level, c), project_word(b, level, c)):
            return level
    return None


def total_c_exponent(w: Word, c: int) -> int:
    """Sum of |exp| over the c-letters of a word (the separation budget)."""
    return sum(abs(let.exp) for let in w.letters if let.gen == c)
