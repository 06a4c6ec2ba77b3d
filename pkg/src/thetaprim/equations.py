"""Periodicity thresholds, common θ-roots, and the θ-commutativity equation.

The equation xy = θ(y)x has exactly the solutions x = r(tr)^i, y = (tr)^j
with θ-palindromes r, t such that rt is primitive, i >= 0 and j >= 1.
``theta_commute_parametrize`` builds (x, y) from such parameters and
``theta_commute_extract`` recovers the canonical parameters (the ones with
|r| < |rt|) from a solution pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .primitivity import (
    divisors,
    in_block_closure,
    is_primitive,
    is_theta_primitive,
    primitive_root,
)
from .words import ContradictionError, InputError, Involution


def fw_threshold(u: str, v: str) -> int:
    """Classic Fine-Wilf bound |u| + |v| - gcd(|u|, |v|)."""
    if not u or not v:
        raise InputError("fw_threshold: empty word")
    return len(u) + len(v) - gcd(len(u), len(v))


def ext_fw_gcd_threshold(u: str, v: str) -> int:
    """Extended bound 2|u| + |v| - gcd(|u|, |v|); requires |u| >= |v|."""
    if not u or not v:
        raise InputError("ext_fw_gcd_threshold: empty word")
    if len(u) < len(v):
        raise InputError("ext_fw_gcd_threshold: need |u| >= |v|")
    return 2 * len(u) + len(v) - gcd(len(u), len(v))


def common_theta_root(theta: Involution, *ws: str) -> str | None:
    """The θ-primitive t with every argument in {t, θ(t)}^+, or None.

    Candidate lengths are the common divisors of the word lengths; among
    {t, θ(t)} the lexicographically smaller word is returned.
    """
    if not ws:
        raise InputError("common_theta_root: no words")
    for w in ws:
        if not w:
            raise InputError("common_theta_root: empty word")
        theta.alphabet.check_word(w)
    g = 0
    for w in ws:
        g = gcd(g, len(w))
    for d in divisors(g):
        t = ws[0][:d]
        if all(in_block_closure(theta, t, w) for w in ws):
            if not is_theta_primitive(theta, t):
                raise ContradictionError(
                    f"minimal common block {t!r} is not theta-primitive"
                )
            return min(t, theta(t))
    return None


@dataclass(frozen=True)
class ThetaCommuteParams:
    """Parameters (r, t, i, j) describing a solution of xy = θ(y)x."""

    r: str
    t: str
    i: int
    j: int

    def validate(self, theta: Involution) -> None:
        if self.i < 0 or self.j < 1:
            raise InputError(f"need i >= 0 and j >= 1, got i={self.i}, j={self.j}")
        if not self.r + self.t:
            raise InputError("r and t must not both be empty")
        if self.r != theta(self.r):
            raise InputError(f"r={self.r!r} is not a theta-palindrome")
        if self.t != theta(self.t):
            raise InputError(f"t={self.t!r} is not a theta-palindrome")
        if not is_primitive(self.r + self.t):
            raise InputError(f"rt={self.r + self.t!r} is not primitive")

    def words(self) -> tuple[str, str]:
        tr = self.t + self.r
        return self.r + tr * self.i, tr * self.j


def theta_commute_parametrize(theta: Involution, params: ThetaCommuteParams) -> tuple[str, str]:
    """Build (x, y) = (r(tr)^i, (tr)^j) and assert xy = θ(y)x."""
    params.validate(theta)
    x, y = params.words()
    if x + y != theta(y) + x:
        raise ContradictionError(f"parametrized pair violates the equation: {params}")
    return x, y


def theta_commute_extract(theta: Involution, x: str, y: str) -> ThetaCommuteParams:
    """Recover the canonical (r, t, i, j) from a solution of xy = θ(y)x.

    Canonical means r is the proper prefix of x left over modulo the
    primitive root of y, so |r| < |rt|; r may be empty, t never is.
    """
    if not x or not y:
        raise InputError("theta_commute_extract: empty word")
    if x + y != theta(y) + x:
        raise InputError(f"equation xy = theta(y)x does not hold for {x!r}, {y!r}")
    root, j = primitive_root(y)
    c = len(x) % len(root)
    r = x[:c]
    t = root[: len(root) - c]
    i = len(x) // len(root)
    params = ThetaCommuteParams(r=r, t=t, i=i, j=j)
    if root != t + r:
        raise ContradictionError(f"root {root!r} does not factor as t+r for {x!r}, {y!r}")
    try:
        params.validate(theta)
    except InputError as exc:
        raise ContradictionError(
            f"extracted parameters invalid for ({x!r}, {y!r}): {exc}"
        ) from exc
    if params.words() != (x, y):
        raise ContradictionError(f"extracted {params} does not rebuild ({x!r}, {y!r})")
    return params
