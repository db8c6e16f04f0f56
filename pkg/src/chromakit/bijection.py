"""Bijective count of proper cycle colorings via cyclic descents.

``encode_phi`` lowers each cyclic descent of a proper coloring ω ∈ X_n by one,
landing in [λ-1]^n. ``decode_psi`` inverts it off the constant words Z_n: it
raises each cyclic descent of σ by one to get σ̄, then bumps every entry whose
run of equal successors (read cyclically) has even length. The colorings
sent into Z_n form Y_n: the 2(λ-1) alternating two-color colorings when n is
even and nothing when n is odd.

Tuples hold colors 1..λ. Positions are 1-based in results and messages.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ColoringError

Coloring = tuple[int, ...]
CodeWord = tuple[int, ...]


@dataclass(frozen=True)
class BijectionCount:
    n: int
    lam: int
    bijective_part: int
    exceptional_part: int

    @property
    def total(self) -> int:
        return self.bijective_part + self.exceptional_part


def _descent_flags(t: Sequence[int]) -> list[bool]:
    n = len(t)
    return [t[i] > t[(i + 1) % n] for i in range(n)]


def cyclic_descents(t: Sequence[int]) -> frozenset[int]:
    """1-based positions i with t_i > t_(i+1), where t_(n+1) = t_1."""
    if not t:
        raise ValueError("cyclic descents need a non-empty tuple")
    return frozenset(i + 1 for i, d in enumerate(_descent_flags(t)) if d)


def is_proper_cycle_coloring(omega: Sequence[int], lam: int) -> bool:
    n = len(omega)
    return n >= 1 and all(1 <= c <= lam for c in omega) and all(omega[i] != omega[(i + 1) % n] for i in range(n))


def is_constant(sigma: Sequence[int]) -> bool:
    """Membership in Z_n."""
    return all(x == sigma[0] for x in sigma)


def encode_phi(omega: Sequence[int], lam: int) -> CodeWord:
    omega = tuple(omega)
    n = len(omega)
    if n == 0:
        raise ColoringError("empty coloring")
    for i, c in enumerate(omega):
        if not 1 <= c <= lam:
            raise ColoringError(f"entry {c} at position {i + 1} is outside 1..{lam}")
    for i in range(n):
        if omega[i] == omega[(i + 1) % n]:
            j = (i + 1) % n + 1
            raise ColoringError(f"not a proper coloring of C_{n}: positions {i + 1} and {j} share color {omega[i]}")
    return tuple(c - 1 if d else c for c, d in zip(omega, _descent_flags(omega)))


def _check_word(sigma: Sequence[int], lam: int) -> CodeWord:
    sigma = tuple(sigma)
    if not sigma:
        raise ColoringError("empty code word")
    for i, s in enumerate(sigma):
        if not 1 <= s <= lam - 1:
            raise ColoringError(f"entry {s} at position {i + 1} is outside 1..{lam - 1}")
    if is_constant(sigma):
        raise ColoringError(f"{format_tuple(sigma)} is constant, so it lies in Z_{len(sigma)} and has no preimage")
    return sigma


def lift_descents(sigma: Sequence[int]) -> CodeWord:
    """σ̄: each cyclic descent of σ raised by one."""
    return tuple(s + 1 if d else s for s, d in zip(sigma, _descent_flags(sigma)))


def _run_length(t: Sequence[int], i: int) -> int:
    """Smallest k >= 1 with t_(i+k) != t_i, cyclically. ``t`` must not be constant."""
    n = len(t)
    k = 1
    while t[(i + k) % n] == t[i]:
        k += 1
    return k


def decode_psi_steps(sigma: Sequence[int], lam: int) -> tuple[CodeWord, Coloring]:
    """Return (σ̄, ψ(σ)) so callers can inspect the intermediate word."""
    sigma = _check_word(sigma, lam)
    bar = lift_descents(sigma)
    omega = tuple(b + 1 if _run_length(bar, i) % 2 == 0 else b for i, b in enumerate(bar))
    return bar, omega


def decode_psi(sigma: Sequence[int], lam: int) -> Coloring:
    return decode_psi_steps(sigma, lam)[1]


def exceptional_colorings(n: int, lam: int) -> list[Coloring]:
    """Y_n: for even n, (i+1, i, ...) and (i, i+1, ...) for each i in 1..λ-1; empty for odd n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if lam < 2:
        raise ValueError(f"λ must be >= 2, got {lam}")
    if n % 2:
        return []
    out = []
    for i in range(1, lam):
        out.append((i + 1, i) * (n // 2))
        out.append((i, i + 1) * (n // 2))
    return out


def count_via_bijection(n: int, lam: int) -> BijectionCount:
    """|X_n| = |[λ-1]^n \\ Z_n| + |Y_n|."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if lam < 0:
        raise ValueError(f"λ must be non-negative, got {lam}")
    bijective = (lam - 1) ** n - (lam - 1)
    exceptional = 2 * (lam - 1) if n % 2 == 0 else 0
    return BijectionCount(n, lam, bijective, exceptional)


def format_tuple(t: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def parse_tuple(text: str) -> tuple[int, ...]:
    """Parse ``(1,2,3)``; surrounding whitespace and spaces after commas are allowed."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"expected a parenthesized tuple like (1,2,3), got {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise ValueError("empty tuple")
    try:
        return tuple(int(part) for part in body.split(","))
    except ValueError:
        raise ValueError(f"tuple entries must be integers: {text!r}") from None
