"""Words over an ordered alphabet.

Letters are the integers ``1..l``; a larger integer is a lexicographically
larger letter.  Words are plain tuples of letters, so every function here is
pure and works on any sequence of ints.  Character spellings ("abc...") are
only used when reading or printing words.
"""

from __future__ import annotations

import enum
import string
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Sequence, Tuple

Word = Tuple[int, ...]

DEFAULT_CHARS = string.ascii_lowercase


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    size: int
    chars: Optional[str] = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("alphabet needs at least one letter")
        if self.chars is not None:
            if len(self.chars) != self.size or len(set(self.chars)) != self.size:
                raise ValueError("chars must list exactly `size` distinct characters")

    @classmethod
    def from_chars(cls, chars: str) -> "Alphabet":
        return cls(len(chars), chars)

    @property
    def letters(self) -> range:
        return range(1, self.size + 1)

    def contains(self, word: Sequence[int]) -> bool:
        return all(1 <= a <= self.size for a in word)

    def check(self, word: Sequence[int]) -> Word:
        w = tuple(word)
        if not self.contains(w):
            raise AlphabetMismatch(f"word {w} is not over a {self.size}-letter alphabet")
        return w

    def parse(self, text: str) -> Word:
        return parse_word(text, self)

    def format(self, word: Sequence[int]) -> str:
        return format_word(word, self)

    def words(self, length: int) -> Iterator[Word]:
        """All words of the given length, in lexicographic order."""
        return product(self.letters, repeat=length)


def _chars_for(alphabet: Optional[Alphabet]) -> str:
    if alphabet is not None and alphabet.chars is not None:
        return alphabet.chars
    return DEFAULT_CHARS


def parse_word(text: str, alphabet: Optional[Alphabet] = None) -> Word:
    """Read a word from text.

    Whitespace-separated integers (``"1 2 1"``) are taken literally; anything
    else is spelled in the alphabet's characters (default ``a``=1, ``b``=2, ...).
    """
    text = text.strip()
    tokens = text.split()
    if tokens and all(tok.isdigit() for tok in tokens) and (len(tokens) > 1 or text.isdigit()):
        word = tuple(int(tok) for tok in tokens)
        if any(a < 1 for a in word):
            raise ValueError("letters are numbered from 1")
    else:
        chars = _chars_for(alphabet)
        try:
            word = tuple(chars.index(ch) + 1 for ch in "".join(tokens))
        except ValueError:
            raise ValueError(f"{text!r} uses characters outside {chars!r}") from None
    if alphabet is not None:
        alphabet.check(word)
    return word


def format_word(word: Sequence[int], alphabet: Optional[Alphabet] = None, ints: bool = False) -> str:
    chars = _chars_for(alphabet)
    if ints or any(a > len(chars) for a in word):
        return " ".join(str(a) for a in word)
    return "".join(chars[a - 1] for a in word)


def w(text: str) -> Word:
    """Shorthand used in tests and examples: ``w("abba") == (1, 2, 2, 1)``."""
    return parse_word(text)


class Order(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class CompareResult:
    order: Order
    position: Optional[int] = None  # 1-based, set for LESS/GREATER

    @property
    def comparable(self) -> bool:
        return self.order in (Order.LESS, Order.GREATER)

    def __str__(self):
        if self.position is None:
            return self.order.value
        return f"{self.order.value} at {self.position}"


def lex_compare(u: Sequence[int], v: Sequence[int], alphabet: Optional[Alphabet] = None) -> CompareResult:
    """Compare two words letter by letter.

    Words that differ inside their common length are Less/Greater at the
    first differing (1-based) position.  Identical words are Equal, and a
    proper prefix is Incomparable with its extension.
    """
    if alphabet is not None:
        alphabet.check(u)
        alphabet.check(v)
    for p, (a, b) in enumerate(zip(u, v), start=1):
        if a != b:
            return CompareResult(Order.LESS if a < b else Order.GREATER, p)
    if len(u) == len(v):
        return CompareResult(Order.EQUAL)
    return CompareResult(Order.INCOMPARABLE)


def is_prefix_related(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when one word is a beginning of the other (equal words included)."""
    return not lex_compare(u, v).comparable


def _nonempty(word: Sequence[int]) -> Word:
    word = tuple(word)
    if not word:
        raise ValueError("empty word")
    return word


def primitive_root(word: Sequence[int]) -> Tuple[Word, int]:
    """Return ``(root, exponent)`` with ``root ** exponent == word`` and root primitive."""
    word = _nonempty(word)
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[p:] == word[:-p]:
            return word[:p], n // p
    raise AssertionError("unreachable")


def is_primitive(word: Sequence[int]) -> bool:
    return len(word) > 0 and primitive_root(word)[1] == 1


def cyclic_shifts(word: Sequence[int]) -> list:
    word = _nonempty(word)
    return [word[i:] + word[:i] for i in range(len(word))]


def rotate(word: Sequence[int], shift: int) -> Word:
    word = tuple(word)
    if not word:
        return word
    shift %= len(word)
    return word[shift:] + word[:shift]


def strongly_comparable(u: Sequence[int], v: Sequence[int]) -> bool:
    """Every rotation of ``u`` is comparable with every rotation of ``v``."""
    su, sv = cyclic_shifts(u), cyclic_shifts(v)
    return all(lex_compare(x, y).comparable for x in su for y in sv)


def canonical_rotation(word: Sequence[int]) -> Word:
    """Least rotation of the word; the canonical name of its word-cycle."""
    return min(cyclic_shifts(word))


@lru_cache(maxsize=65536)
def cycle_key(word: Word) -> Word:
    """Canonical rotation of the primitive root, cached for hot loops."""
    return canonical_rotation(primitive_root(word)[0])


def same_cycle_class(u: Sequence[int], v: Sequence[int]) -> bool:
    u, v = _nonempty(u), _nonempty(v)
    if not (is_primitive(u) and is_primitive(v)):
        raise ValueError("same_cycle_class expects primitive words")
    return len(u) == len(v) and canonical_rotation(u) == canonical_rotation(v)


def primitive_words(length: int, size: int) -> Iterator[Word]:
    for word in product(range(1, size + 1), repeat=length):
        if is_primitive(word):
            yield word


def lyndon_words(length: int, size: int) -> list:
    """Canonical representatives of all primitive word-cycles of a given length."""
    return [x for x in primitive_words(length, size) if canonical_rotation(x) == x]
