"""Primitives on strings over the two-letter alphabet {L, R}.

Strings are plain immutable ``str`` values; every function validates its
input and returns fresh strings, so results are safe to use as dict keys.
"""

from .errors import InvalidArgumentError

ALPHABET = frozenset("LR")

_COMPLEMENT = str.maketrans("LR", "RL")


def check_string(s: str) -> str:
    """Validate that s contains only L and R characters; returns s."""
    if not isinstance(s, str):
        raise InvalidArgumentError(f"expected str, got {type(s).__name__}")
    bad = set(s) - ALPHABET
    if bad:
        raise InvalidArgumentError(f"invalid characters {sorted(bad)!r}; alphabet is L/R")
    return s


def height_profile(s: str) -> list[int]:
    """Prefix heights h(0..n): each L adds +1, each R adds -1, h(0) = 0."""
    check_string(s)
    profile = [0]
    h = 0
    for ch in s:
        h += 1 if ch == "L" else -1
        profile.append(h)
    return profile


def height(s: str) -> int:
    """Maximum prefix height of s (0 for the empty string)."""
    return max(height_profile(s))


def is_balanced(s: str) -> bool:
    """True iff s has equally many L and R characters."""
    check_string(s)
    return 2 * s.count("L") == len(s)


def reverse_complement(s: str) -> str:
    """Reversal of s with L and R exchanged; an involution."""
    check_string(s)
    return s.translate(_COMPLEMENT)[::-1]


def alternate(s: str) -> str:
    """Outside-in reordering c1 cn c2 c(n-1) ...; a pure index permutation."""
    check_string(s)
    out = []
    i, j = 0, len(s) - 1
    while i < j:
        out.append(s[i])
        out.append(s[j])
        i += 1
        j -= 1
    if i == j:
        out.append(s[i])
    return "".join(out)


def inverse_alternate(t: str) -> str:
    """Inverse of alternate: inverse_alternate(alternate(s)) == s."""
    check_string(t)
    n = len(t)
    out = [""] * n
    i, j = 0, n - 1
    front = True
    for ch in t:
        if front:
            out[i] = ch
            i += 1
        else:
            out[j] = ch
            j -= 1
        front = not front
    return "".join(out)


def height_greater(s: str, t: str) -> bool:
    """Strict order: at the first differing index the string holding L wins.

    Equivalent to comparing prefix-height profiles pointwise; the profiles
    first diverge exactly where the characters do, in the same direction.
    """
    check_string(s)
    check_string(t)
    if len(s) != len(t):
        raise InvalidArgumentError(f"length mismatch: {len(s)} vs {len(t)}")
    for a, b in zip(s, t):
        if a != b:
            return a == "L"
    return False


def height_ge(s: str, t: str) -> bool:
    """Non-strict variant of height_greater."""
    return s == t or height_greater(s, t)
