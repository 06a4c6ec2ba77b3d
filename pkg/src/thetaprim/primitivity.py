"""Primitive roots, θ-primitivity, and decompositions over {t, θ(t)}."""

from __future__ import annotations

from dataclasses import dataclass

from .words import ContradictionError, InputError, Involution

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class Decomposition:
    """A factorization w = b1 ... bk with b1 = root and bi in {root, θ(root)}.

    ``signs`` records one character per block: '+' for root, '-' for
    θ(root).  The first sign is always '+', and when root is a
    θ-palindrome the signs are canonically all '+'.
    """

    root: str
    signs: str

    @property
    def block_count(self) -> int:
        return len(self.signs)

    def word(self, theta: Involution) -> str:
        """Reassemble the decomposed word."""
        img = theta(self.root)
        return "".join(self.root if s == PLUS else img for s in self.signs)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def primitive_root(w: str) -> tuple[str, int]:
    """Shortest t and exponent e with t**e == w; e == 1 iff w is primitive."""
    if not w:
        raise InputError("primitive_root: empty word")
    n = len(w)
    for d in divisors(n):
        t = w[:d]
        if t * (n // d) == w:
            return t, n // d
    raise AssertionError("unreachable: w is a power of itself")


def is_primitive(w: str) -> bool:
    return primitive_root(w)[1] == 1


def _block_signs(theta: Involution, t: str, w: str, first_plus: bool) -> str | None:
    """Signs of w's length-|t| blocks over {t, θ(t)}, or None.

    Requires |t| to divide |w|.  With ``first_plus`` the first block must
    equal t itself.  When t = θ(t) all signs come out '+'.
    """
    d = len(t)
    img = theta(t)
    palindromic = t == img
    signs = []
    for i in range(0, len(w), d):
        b = w[i : i + d]
        if b == t:
            signs.append(PLUS)
        elif not palindromic and b == img:
            if i == 0 and first_plus:
                return None
            signs.append(MINUS)
        else:
            return None
    return "".join(signs)


def is_theta_primitive(theta: Involution, w: str) -> bool:
    """True iff w is not a product of >= 2 blocks from {t, θ(t)}, t shorter."""
    if not w:
        raise InputError("is_theta_primitive: empty word")
    theta.alphabet.check_word(w)
    for d in divisors(len(w)):
        if d == len(w):
            break
        if _block_signs(theta, w[:d], w, first_plus=True) is not None:
            return False
    return True


def theta_primitive_root(theta: Involution, w: str) -> Decomposition:
    """The unique decomposition of w over its θ-primitive root."""
    if not w:
        raise InputError("theta_primitive_root: empty word")
    theta.alphabet.check_word(w)
    for d in divisors(len(w)):
        signs = _block_signs(theta, w[:d], w, first_plus=True)
        if signs is not None:
            root = w[:d]
            # minimality forces θ-primitivity of the root; verified, not assumed
            if not is_theta_primitive(theta, root):
                raise ContradictionError(
                    f"minimal root {root!r} of {w!r} is not theta-primitive"
                )
            return Decomposition(root, signs)
    raise AssertionError("unreachable: w decomposes over itself")


def decompose_over(theta: Involution, t: str, w: str) -> Decomposition | None:
    """Decompose w over {t, θ(t)} with first block t, or None.

    Returns None when |t| does not divide |w|, some block is outside
    {t, θ(t)}, or the first block is θ(t) != t.
    """
    if not t:
        raise InputError("decompose_over: empty root")
    theta.alphabet.check_word(t)
    theta.alphabet.check_word(w)
    if not w or len(w) % len(t) != 0:
        return None
    signs = _block_signs(theta, t, w, first_plus=True)
    if signs is None:
        return None
    return Decomposition(t, signs)


def in_block_closure(theta: Involution, t: str, w: str) -> bool:
    """True iff w is in {t, θ(t)}^+ (first block may be either t or θ(t))."""
    if not t or not w or len(w) % len(t) != 0:
        return False
    return _block_signs(theta, t, w, first_plus=False) is not None


def conjugates(w: str) -> list[str]:
    """The |w| cyclic rotations of w, in rotation order, duplicates kept."""
    if not w:
        raise InputError("conjugates: empty word")
    return [w[i:] + w[:i] for i in range(len(w))]
