"""Overlap witnesses and splitting operations for products of {x, θ(x)} blocks.

For a θ-primitive word x, neither xθ(x) nor θ(x)x can straddle a block
boundary inside a three-block product over {x, θ(x)}.  The operations here
are the constructive faces of that fact: locating markers, splitting a
product at a marker, and splitting concatenations of palindromes or
prefix/suffix fragments back into block-aligned parts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .primitivity import (
    MINUS,
    PLUS,
    Decomposition,
    divisors,
    is_primitive,
    is_theta_primitive,
)
from .words import ContradictionError, InputError, Involution


@dataclass(frozen=True)
class OverlapWitness:
    """A forbidden straddling occurrence: marker found at a non-block offset."""

    triple_signs: str
    marker: str
    offset: int


@dataclass(frozen=True)
class SplitResult:
    """Outcome of a prefix/suffix split.

    kind == "factored": the cut is block-aligned; ``left_signs`` and
    ``right_signs`` decompose the two parts.  kind == "all_equal": the
    whole product repeats a single block, given with its sign.
    """

    kind: str
    left_signs: str = ""
    right_signs: str = ""
    block: str = ""
    sign: str = ""


def _require_theta_primitive(theta: Involution, x: str) -> None:
    if not x:
        raise InputError("x must be non-empty")
    if not is_theta_primitive(theta, x):
        raise InputError(f"x={x!r} is not theta-primitive")


def _loose_signs(theta: Involution, x: str, w: str) -> str | None:
    """Signs of w over {x, θ(x)}, first block unconstrained; None if not a product."""
    if len(w) % len(x) != 0:
        return None
    img = theta(x)
    signs = []
    for i in range(0, len(w), len(x)):
        b = w[i : i + len(x)]
        if b == x:
            signs.append(PLUS)
        elif b == img:
            signs.append(MINUS)
        else:
            return None
    return "".join(signs)


def overlap3_witness(theta: Involution, x: str) -> OverlapWitness | None:
    """Scan {x, θ(x)}^3 for a straddling occurrence of xθ(x) or θ(x)x.

    Returns None when no marker occurs at an offset that is not a multiple
    of |x| (the guaranteed outcome for θ-primitive x), otherwise the first
    witness in lexicographic (triple signs, marker, offset) order.
    """
    _require_theta_primitive(theta, x)
    img = theta(x)
    markers = [(PLUS + MINUS, x + img), (MINUS + PLUS, img + x)]
    for signs in itertools.product((PLUS, MINUS), repeat=3):
        word = "".join(x if s == PLUS else img for s in signs)
        for marker_signs, marker in markers:
            for off in range(1, len(word) - len(marker) + 1):
                if off % len(x) == 0:
                    continue
                if word[off : off + len(marker)] == marker:
                    return OverlapWitness("".join(signs), marker_signs, off)
    return None


def split_at_marker(
    theta: Involution, x: str, w: str
) -> tuple[str, tuple[str, str], str] | None:
    """Split w in {x, θ(x)}* at its first opposite-sign block adjacency.

    Returns (left_signs, (marker sign pair), right_signs), or None when the
    decomposition has no adjacent opposite signs (w is a power of one block).
    """
    _require_theta_primitive(theta, x)
    theta.alphabet.check_word(w)
    signs = _loose_signs(theta, x, w)
    if signs is None:
        raise InputError(f"w={w!r} is not a product over x={x!r} and its image")
    for i in range(len(signs) - 1):
        if signs[i] != signs[i + 1]:
            return signs[:i], (signs[i], signs[i + 1]), signs[i + 2 :]
    return None


def is_suffix_of_products(theta: Involution, x: str, u: str) -> bool:
    """True iff u is a suffix of some word in {x, θ(x)}^+."""
    if not u:
        return True
    c = len(u) % len(x)
    body = u[c:]
    if _loose_signs(theta, x, body) is None:
        return False
    if c == 0:
        return True
    img = theta(x)
    return u[:c] in (x[len(x) - c :], img[len(x) - c :])


def is_prefix_of_products(theta: Involution, x: str, v: str) -> bool:
    """True iff v is a prefix of some word in {x, θ(x)}^+."""
    if not v:
        return True
    c = len(v) % len(x)
    body = v[: len(v) - c]
    if _loose_signs(theta, x, body) is None:
        return False
    if c == 0:
        return True
    img = theta(x)
    return v[len(v) - c :] in (x[:c], img[:c])


def pref_suff_split(theta: Involution, x: str, u: str, v: str) -> SplitResult:
    """Split uv in {x, θ(x)}^(>=2) where u is suffix- and v prefix-material.

    Either the cut between u and v is block-aligned (kind "factored") or
    every block of uv is the same (kind "all_equal"); any other outcome
    contradicts the guarantee and raises.
    """
    _require_theta_primitive(theta, x)
    if not u or not v:
        raise InputError("u and v must be non-empty")
    if not is_suffix_of_products(theta, x, u):
        raise InputError(f"u={u!r} is not a suffix of any product over {x!r}")
    if not is_prefix_of_products(theta, x, v):
        raise InputError(f"v={v!r} is not a prefix of any product over {x!r}")
    w = u + v
    signs = _loose_signs(theta, x, w)
    if signs is None or len(signs) < 2:
        raise InputError(f"uv={w!r} is not in the square-or-longer products over {x!r}")
    if len(u) % len(x) == 0:
        k = len(u) // len(x)
        return SplitResult(kind="factored", left_signs=signs[:k], right_signs=signs[k:])
    if len(set(signs)) != 1:
        raise ContradictionError(
            f"misaligned cut without uniform blocks: x={x!r} u={u!r} v={v!r}"
        )
    block = x if signs[0] == PLUS else theta(x)
    return SplitResult(kind="all_equal", block=block, sign=signs[0])


def clean_split(
    theta: Involution, x: str, p: str, q: str
) -> tuple[int, int, str]:
    """Split a primitive product of two θ-palindromes on even block counts.

    For θ-palindromes p, q with pq primitive and pq a product of n >= 2
    blocks over {x, θ(x)} starting with x, returns (k, m, signs) where
    n = 2m, p spans blocks 1..2k and q spans blocks 2k+1..2m.
    """
    _require_theta_primitive(theta, x)
    if not p or not q:
        raise InputError("p and q must be non-empty")
    if p != theta(p):
        raise InputError(f"p={p!r} is not a theta-palindrome")
    if q != theta(q):
        raise InputError(f"q={q!r} is not a theta-palindrome")
    w = p + q
    if not is_primitive(w):
        raise InputError(f"pq={w!r} is not primitive")
    signs = _loose_signs(theta, x, w)
    if signs is None or len(signs) < 2:
        raise InputError(f"pq={w!r} is not in the square-or-longer products over {x!r}")
    if signs[0] != PLUS:
        raise InputError(f"first block of pq={w!r} is not x={x!r}")
    n = len(signs)
    if n % 2 != 0:
        raise ContradictionError(f"odd block count {n} for x={x!r} p={p!r} q={q!r}")
    if len(p) % len(x) != 0:
        raise ContradictionError(f"p/q cut not block-aligned for x={x!r} p={p!r} q={q!r}")
    pk = len(p) // len(x)
    if pk % 2 != 0:
        raise ContradictionError(f"p spans odd block count for x={x!r} p={p!r} q={q!r}")
    return pk // 2, n // 2, signs


def pal_prefix_classify(
    theta: Involution, x: str, p: str, z: str
) -> tuple[str, str]:
    """Classify pz = (k blocks over {x, θ(x)}) with p a θ-palindrome, |z| < |x|.

    Blocks 1..k-1 are guaranteed uniform; returns (their sign, sign of
    block k).  When z is itself a θ-palindrome the last sign equals the
    uniform sign.
    """
    _require_theta_primitive(theta, x)
    if not z:
        raise InputError("z must be non-empty")
    if len(z) >= len(x):
        raise InputError(f"need |z| < |x|, got |z|={len(z)}, |x|={len(x)}")
    if p != theta(p):
        raise InputError(f"p={p!r} is not a theta-palindrome")
    w = p + z
    signs = _loose_signs(theta, x, w)
    if signs is None:
        raise InputError(f"pz={w!r} is not a product over x={x!r} and its image")
    if len(signs) < 2:
        raise InputError(f"pz={w!r} must span at least 2 blocks")
    head = set(signs[:-1])
    if len(head) != 1:
        raise ContradictionError(f"non-uniform leading blocks for x={x!r} p={p!r} z={z!r}")
    uniform = signs[0]
    last = signs[-1]
    if z == theta(z) and last != uniform:
        raise ContradictionError(f"palindromic z but deviant last block: x={x!r} p={p!r} z={z!r}")
    return uniform, last
