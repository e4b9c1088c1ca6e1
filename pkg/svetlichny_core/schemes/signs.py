"""
Sign Assignments
The m=0 contribution of integer-spin schemes: per party a pair (s0, s1)
with s_x = e^{i phase_x(m=0)} in {+1, -1}.
"""

from dataclasses import dataclass
from typing import List, Tuple

from ..errors import InvalidPartyCount, SignParseError
from ..svetlichny import MIN_PARTIES, sign_v
from ..types import SettingsTuple


# Digit order of an assignment index: '+' sorts before '-'
SIGN_PAIRS: Tuple[Tuple[int, int], ...] = ((1, 1), (1, -1), (-1, 1), (-1, -1))

_SYMBOL_TO_SIGN = {'+': 1, '-': -1}
_SIGN_TO_SYMBOL = {1: '+', -1: '-'}


@dataclass(frozen=True)
class SignAssignment:
    signs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        signs = tuple(tuple(int(s) for s in pair) for pair in self.signs)
        object.__setattr__(self, 'signs', signs)
        if len(signs) < MIN_PARTIES:
            raise InvalidPartyCount(f"n must be ≥ {MIN_PARTIES}, got {len(signs)}")
        for party, pair in enumerate(signs, start=1):
            if len(pair) != 2 or any(s not in (1, -1) for s in pair):
                raise SignParseError(f"party {party}: expected a pair of +-1, got {pair}")

    @property
    def n_parties(self) -> int:
        return len(self.signs)

    @classmethod
    def parse(cls, text: str) -> "SignAssignment":
        """Parse "++,++,+-" (one pair per party, setting 0 first)."""
        pairs = []
        for party, item in enumerate(text.split(','), start=1):
            item = item.strip()
            if len(item) != 2 or any(c not in _SYMBOL_TO_SIGN for c in item):
                raise SignParseError(f"party {party}: expected two of '+'/'-', got {item!r}")
            pairs.append((_SYMBOL_TO_SIGN[item[0]], _SYMBOL_TO_SIGN[item[1]]))
        return cls(tuple(pairs))

    @classmethod
    def all_plus(cls, n: int) -> "SignAssignment":
        return cls(tuple((1, 1) for _ in range(n)))

    @classmethod
    def from_index(cls, n: int, index: int) -> "SignAssignment":
        """Assignment number `index` in lexicographic order, party 1 most significant."""
        digits = []
        for _ in range(n):
            index, digit = divmod(index, 4)
            digits.append(digit)
        if index:
            raise SignParseError(f"index out of range for n={n}")
        return cls(tuple(SIGN_PAIRS[d] for d in reversed(digits)))

    @property
    def index(self) -> int:
        value = 0
        for pair in self.signs:
            value = value * 4 + SIGN_PAIRS.index(pair)
        return value

    def flipped(self, party: int) -> "SignAssignment":
        """Negate both signs of one party (0-based)."""
        signs = list(self.signs)
        s0, s1 = signs[party]
        signs[party] = (-s0, -s1)
        return SignAssignment(tuple(signs))

    def tuple_sum(self) -> int:
        """sum over tuples of v_k * prod_i s^(i)_{x_i}, evaluated directly."""
        total = 0
        for settings in SettingsTuple.enumerate(self.n_parties):
            product = 1
            for pair, x in zip(self.signs, settings.bits):
                product *= pair[x]
            total += sign_v(settings.k) * product
        return total

    def to_list(self) -> List[List[int]]:
        return [list(pair) for pair in self.signs]

    def __str__(self) -> str:
        return ','.join(_SIGN_TO_SYMBOL[a] + _SIGN_TO_SYMBOL[b] for a, b in self.signs)
