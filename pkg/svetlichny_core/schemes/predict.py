"""
Scheme Predictions
Closed-form scheme values and the integer-spin bracket.
"""

import math
from typing import Optional, Tuple

from ..errors import InvalidPartyCount, MissingSearchValue, NotInteger
from ..spin import SpinJ
from ..svetlichny import MIN_PARTIES


def _check_parties(n: int) -> None:
    if n < MIN_PARTIES:
        raise InvalidPartyCount(f"n must be ≥ {MIN_PARTIES}, got {n}")


def predicted_max(n: int, j: SpinJ, m_zero_max: Optional[int] = None) -> float:
    """
    Scheme value: 2^{n-1} sqrt 2 for half-integer j, and
    (2^{n-1} 2 sqrt 2 j + M) / (2j + 1) for integer j, where M is the m=0
    sign-search maximum.
    """
    _check_parties(n)
    if j.is_half_integer():
        return 2 ** (n - 1) * math.sqrt(2)
    if m_zero_max is None:
        raise MissingSearchValue(f"integer spin j={j} needs the m=0 search maximum")
    spin = float(j.value)
    return (2 ** (n - 1) * 2 * math.sqrt(2) * spin + m_zero_max) / (2 * spin + 1)


def integer_spin_bracket(n: int, j: SpinJ) -> Tuple[float, float]:
    """
    Strict lower and inclusive upper bound on the integer-spin scheme maximum.

    The m != 0 part alone gives the lower bound; adding the fixed-sign bound
    sqrt(2^{n+1}) for the m=0 part gives the upper one.
    """
    _check_parties(n)
    if not j.is_integer():
        raise NotInteger(f"bracket applies to integer spin, got j={j}")
    spin = float(j.value)
    lower = 2 ** (n - 1) * 2 * math.sqrt(2) * spin / (2 * spin + 1)
    upper = lower + math.sqrt(2 ** (n + 1)) / (2 * spin + 1)
    return lower, upper


def violation_horizon(j: SpinJ) -> Optional[int]:
    """
    Largest n for which the scheme can still violate the inequality, or None
    when it violates for every n.
    """
    if j.is_half_integer():
        return None
    spin = float(j.value)
    if 2 * math.sqrt(2) * spin / (2 * spin + 1) > 1:
        return None
    n = MIN_PARTIES
    # upper ratio (2 sqrt2 j + 2^{(3-n)/2}) / (2j+1) decreases in n
    while integer_spin_bracket(n, j)[1] > 2 ** (n - 1):
        n += 1
    return n - 1
