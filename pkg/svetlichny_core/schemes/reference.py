"""
Reference m=0 Sign Choices
Known maximizing sign assignments for n = 3..8 with their tuple sums.
The search may report different but equivalent maximizers.
"""

from typing import Dict

from .signs import SignAssignment


REFERENCE_ZERO_SIGNS: Dict[int, SignAssignment] = {
    3: SignAssignment.parse("++,++,+-"),
    4: SignAssignment.parse("++,++,++,+-"),
    5: SignAssignment.parse("++,++,++,++,--"),
    6: SignAssignment.parse("++,++,++,++,++,--"),
    7: SignAssignment.parse("++,++,++,++,++,+-,--"),
    8: SignAssignment.parse("++,++,++,++,++,++,++,++"),
}

REFERENCE_MAXIMA: Dict[int, int] = {3: 4, 4: 4, 5: 8, 6: 8, 7: 16, 8: 16}

# <S_N> / 2^{N-1} of the boson scheme at j = 1
REFERENCE_SPIN_ONE_RATIOS: Dict[int, float] = {
    4: 1.10948,
    5: 1.10948,
    6: 1.02614,
    7: 1.02614,
    8: 0.984476,
}
