"""Alphabets, words, and antimorphic involutions.

Words are plain Python strings over the first ``size`` lowercase letters
('a' = letter 0, 'b' = letter 1, ...).  The empty word is ``""`` and is
rendered as "ε" on output.  An antimorphic involution is represented by an
involutive permutation of the letters; applying it reverses the word and
maps each letter through the permutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

LETTER_NAMES = "abcdefghijklmnopqrstuvwxyz"

EMPTY_RENDERING = "ε"  # shown for the empty word on output


class InputError(ValueError):
    """A caller-supplied word, involution, or parameter is invalid."""


class ContradictionError(RuntimeError):
    """An operation's guaranteed conclusion failed to hold.

    Raised when input satisfying an operation's hypotheses produces data
    that violates the conclusion the operation is entitled to assume.
    Either the inputs were not actually admissible or there is a bug;
    never swallowed.
    """


@dataclass(frozen=True)
class Alphabet:
    """An indexed alphabet of ``size`` letters with character names."""

    size: int
    names: str = field(default="")

    def __post_init__(self):
        if self.size < 1:
            raise InputError(f"alphabet size must be >= 1, got {self.size}")
        if not self.names:
            if self.size > len(LETTER_NAMES):
                raise InputError(f"alphabet size {self.size} exceeds {len(LETTER_NAMES)} letters")
            object.__setattr__(self, "names", LETTER_NAMES[: self.size])
        if len(self.names) != self.size or len(set(self.names)) != self.size:
            raise InputError(f"need {self.size} distinct letter names, got {self.names!r}")

    @property
    def letters(self) -> str:
        return self.names

    def check_word(self, w: str, what: str = "word") -> str:
        """Validate that every letter of ``w`` belongs to this alphabet."""
        for ch in w:
            if ch not in self.names:
                raise InputError(f"{what} {w!r} contains {ch!r}, not in alphabet {self.names!r}")
        return w

    def words_of_length(self, n: int) -> Iterator[str]:
        for tup in itertools.product(self.names, repeat=n):
            yield "".join(tup)

    def words(self, max_len: int, min_len: int = 1) -> Iterator[str]:
        """All words with min_len <= length <= max_len, shortest first."""
        for n in range(min_len, max_len + 1):
            yield from self.words_of_length(n)

    def involutions(self) -> list["Involution"]:
        """All antimorphic involutions of this alphabet, identity map first."""
        out = []
        for perm in itertools.permutations(range(self.size)):
            if all(perm[perm[i]] == i for i in range(self.size)):
                image = "".join(self.names[j] for j in perm)
                out.append(Involution(self, image))
        out.sort(key=lambda th: th.image)
        return out


class Involution:
    """An antimorphic involution: reversal composed with a letter involution."""

    def __init__(self, alphabet: Alphabet, image: str):
        alphabet.check_word(image, "involution image")
        if len(image) != alphabet.size:
            raise InputError(
                f"involution image {image!r} must name {alphabet.size} letters"
            )
        idx = {ch: i for i, ch in enumerate(alphabet.names)}
        for i, ch in enumerate(image):
            if image[idx[ch]] != alphabet.names[i]:
                raise InputError(f"letter map {image!r} is not involutive")
        self.alphabet = alphabet
        self.image = image
        self._table = str.maketrans(alphabet.names, image)

    @classmethod
    def mirror(cls, alphabet: Alphabet) -> "Involution":
        return cls(alphabet, alphabet.names)

    @classmethod
    def from_spec(cls, spec: str, alphabet: Alphabet) -> "Involution":
        """Parse "mirror" or an explicit image string such as "ba"."""
        if spec == "mirror":
            return cls.mirror(alphabet)
        return cls(alphabet, spec)

    @property
    def spec(self) -> str:
        """Canonical textual form (the image string; "ab" is the mirror map)."""
        return self.image

    def is_mirror(self) -> bool:
        return self.image == self.alphabet.names

    def __call__(self, w: str) -> str:
        return w[::-1].translate(self._table)

    def is_palindrome(self, w: str) -> bool:
        """True iff w is a fixed point of this involution (θ-palindrome)."""
        return w == self(w)

    def palindromes(self, max_len: int, min_len: int = 0) -> Iterator[str]:
        """θ-palindromes by increasing length; includes "" when min_len is 0."""
        if min_len == 0:
            yield ""
            min_len = 1
        for w in self.alphabet.words(max_len, min_len=min_len):
            if self.is_palindrome(w):
                yield w

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Involution)
            and self.alphabet == other.alphabet
            and self.image == other.image
        )

    def __hash__(self):
        return hash((self.alphabet, self.image))

    def __repr__(self):
        return f"Involution({self.alphabet.size}, {self.image!r})"


def apply_involution(theta: Involution, w: str) -> str:
    """Image of ``w``: reverse, then map each letter."""
    theta.alphabet.check_word(w)
    return theta(w)


def is_theta_palindrome(theta: Involution, w: str) -> bool:
    theta.alphabet.check_word(w)
    return w == theta(w)


def longest_common_prefix(u: str, v: str) -> int:
    n = min(len(u), len(v))
    for i in range(n):
        if u[i] != v[i]:
            return i
    return n


def occurrences(pattern: str, text: str) -> list[int]:
    """All start offsets of ``pattern`` in ``text``, overlapping, ascending."""
    if not pattern:
        raise InputError("pattern must be non-empty")
    out = []
    i = text.find(pattern)
    while i != -1:
        out.append(i)
        i = text.find(pattern, i + 1)
    return out


def render_word(w: str) -> str:
    return w if w else EMPTY_RENDERING


def parse_word(s: str, alphabet: Alphabet) -> str:
    """Validate a textual word; the empty string denotes the empty word."""
    return alphabet.check_word(s)
