"""
Exhaustive m=0 Sign Search
Enumerates all 2^{2N} sign assignments, evaluates the tuple sum
sum_x v_k prod_i s^(i)_{x_i} exactly in integers, and checks the
fixed-sign bound sqrt(2^{N+1}) through f = prod_i (s0 + i s1).
"""

import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from ..errors import InvalidPartyCount, InvariantViolation, SearchGuardExceeded, ValidationError
from ..logging import LogStreamer
from ..svetlichny import MIN_PARTIES, sign_vector
from ..types import SearchProgress
from .signs import SIGN_PAIRS, SignAssignment


DEFAULT_SEARCH_GUARD = 14
DEFAULT_MAX_REPORTED = 64

# Parties enumerated inside one vectorized block (4^8 assignments)
BLOCK_PARTIES = 8

_PAIR_MATRIX = np.array(SIGN_PAIRS, dtype=np.int64)


@dataclass
class SearchResult:
    """Maximum of the m=0 tuple sum over all sign assignments"""
    n: int
    best_value: int
    best_assignments: List[SignAssignment]
    evaluated_count: int
    tie_count: int

    @property
    def bound(self) -> float:
        return math.sqrt(2 ** (self.n + 1))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'best_value': self.best_value,
            'bound': self.bound,
            'assignments': [a.to_list() for a in self.best_assignments],
            'evaluated': self.evaluated_count,
            'tie_count': self.tie_count,
        }


@dataclass
class BoundVerification:
    """Exhaustive check of the fixed-sign bound and the f-function identities"""
    n: int
    evaluated: int
    max_value: int
    attaining_count: int
    bound_holds: bool
    sum_identity_holds: bool
    modulus_identity_holds: bool

    @property
    def bound(self) -> float:
        return math.sqrt(2 ** (self.n + 1))

    @property
    def passed(self) -> bool:
        return self.bound_holds and self.sum_identity_holds and self.modulus_identity_holds


class _Block(NamedTuple):
    evaluated: int
    max_value: int
    max_count: int
    first_indices: List[int]
    bound_holds: bool
    sum_identity_holds: bool
    modulus_identity_holds: bool


def f_function(signs: SignAssignment) -> complex:
    """
    f = prod_i (s0^(i) + i s1^(i)), computed in exact Gaussian integers.

    Raises:
        InvariantViolation: if |f|^2 != 2^N or Re f + Im f differs from the
            direct tuple sum
    """
    re, im = 1, 0
    for s0, s1 in signs.signs:
        re, im = re * s0 - im * s1, re * s1 + im * s0
    n = signs.n_parties
    if re * re + im * im != 2 ** n:
        raise InvariantViolation(f"|f|^2 = {re * re + im * im} != 2^{n} for {signs}")
    direct = signs.tuple_sum()
    if re + im != direct:
        raise InvariantViolation(f"Re f + Im f = {re + im} != tuple sum {direct} for {signs}")
    return complex(re, im)


def _expand_assignments(residual: np.ndarray, parties: int) -> np.ndarray:
    """
    Contract a tuple-indexed vector of length 2^parties with every sign
    pair of every party; returns 4^parties sums in assignment-index order.
    """
    values = residual.reshape(1, -1)
    for _ in range(parties):
        head = values.shape[0]
        halves = values.reshape(head, 2, -1)
        # (A, 2, B) x (4, 2) -> (A, 4, B)
        values = np.einsum('axb,cx->acb', halves, _PAIR_MATRIX).reshape(head * 4, -1)
    return values.reshape(-1)


def _expand_f(parties: int) -> Tuple[np.ndarray, np.ndarray]:
    """Re and Im of prod (s0 + i s1) for all 4^parties assignments."""
    re = np.ones(1, dtype=np.int64)
    im = np.zeros(1, dtype=np.int64)
    a = _PAIR_MATRIX[:, 0]
    b = _PAIR_MATRIX[:, 1]
    for _ in range(parties):
        re, im = (
            (re[:, None] * a[None, :] - im[:, None] * b[None, :]).reshape(-1),
            (re[:, None] * b[None, :] + im[:, None] * a[None, :]).reshape(-1),
        )
    return re, im


class SignSearch:
    """
    Exhaustive search over the 2^{2N} m=0 sign assignments.

    Assignments are split into blocks by the signs of the leading parties;
    blocks may run on a thread pool and are merged in index order, so the
    result does not depend on the worker count.
    """

    def __init__(
        self,
        n: int,
        search_guard: int = DEFAULT_SEARCH_GUARD,
        threads: int = 1,
        max_reported: int = DEFAULT_MAX_REPORTED,
        logger: Optional[LogStreamer] = None
    ):
        if n < MIN_PARTIES:
            raise InvalidPartyCount(f"n must be ≥ {MIN_PARTIES}, got {n}")
        if n > search_guard:
            raise SearchGuardExceeded(n, search_guard)
        if max_reported < 1:
            raise ValidationError(f"max_reported must be ≥ 1, got {max_reported}")
        self.n = n
        self.threads = max(1, threads)
        self.max_reported = max_reported
        self.logger = logger

        self.suffix_parties = min(n, BLOCK_PARTIES)
        self.prefix_parties = n - self.suffix_parties
        self._signs = sign_vector(n).reshape(2 ** self.prefix_parties, 2 ** self.suffix_parties)
        self._suffix_re, self._suffix_im = _expand_f(self.suffix_parties)
        self._progress = SearchProgress()
        self._progress_lock = threading.Lock()

    @property
    def progress(self) -> SearchProgress:
        return self._progress

    @property
    def block_count(self) -> int:
        return 4 ** self.prefix_parties

    def _evaluate_block(self, block: int) -> _Block:
        prefix = [SIGN_PAIRS[d] for d in _base4_digits(block, self.prefix_parties)]
        weights = reduce(np.kron, [np.array(p, dtype=np.int64) for p in prefix],
                         np.ones(1, dtype=np.int64))
        values = _expand_assignments(weights @ self._signs, self.suffix_parties)

        f_re, f_im = 1, 0
        for s0, s1 in prefix:
            f_re, f_im = f_re * s0 - f_im * s1, f_re * s1 + f_im * s0
        re = f_re * self._suffix_re - f_im * self._suffix_im
        im = f_re * self._suffix_im + f_im * self._suffix_re

        best = int(values.max())
        hits = np.flatnonzero(values == best)
        offset = block * values.shape[0]
        result = _Block(
            evaluated=int(values.shape[0]),
            max_value=best,
            max_count=int(hits.shape[0]),
            first_indices=[offset + int(i) for i in hits[:self.max_reported]],
            bound_holds=best <= 0 or best * best <= 2 ** (self.n + 1),
            sum_identity_holds=bool(np.array_equal(re + im, values)),
            modulus_identity_holds=bool(np.all(re * re + im * im == 2 ** self.n)),
        )
        with self._progress_lock:
            self._progress.blocks_done += 1
            self._progress.evaluated += result.evaluated
        return result

    def _run_blocks(self) -> List[_Block]:
        self._progress = SearchProgress(
            total=4 ** self.n,
            blocks_total=self.block_count,
            is_running=True,
        )
        self._log(f"n={self.n}: enumerating {4 ** self.n} assignments in {self.block_count} blocks")
        if self.threads == 1 or self.block_count == 1:
            blocks = [self._evaluate_block(b) for b in range(self.block_count)]
        else:
            with ThreadPoolExecutor(max_workers=self.threads) as executor:
                blocks = list(executor.map(self._evaluate_block, range(self.block_count)))
        self._progress.is_running = False
        return blocks

    def run(self) -> SearchResult:
        blocks = self._run_blocks()
        best = max(b.max_value for b in blocks)
        tie_count = 0
        indices: List[int] = []
        for b in blocks:
            if b.max_value != best:
                continue
            tie_count += b.max_count
            indices.extend(b.first_indices[:self.max_reported - len(indices)])

        result = SearchResult(
            n=self.n,
            best_value=best,
            best_assignments=[SignAssignment.from_index(self.n, i) for i in indices],
            evaluated_count=sum(b.evaluated for b in blocks),
            tie_count=tie_count,
        )
        self._log(
            f"n={self.n}: best value {best} ({tie_count} maximizers), bound {result.bound:.9g}",
            level='success'
        )
        return result

    def verify_bound(self) -> BoundVerification:
        blocks = self._run_blocks()
        best = max(b.max_value for b in blocks)
        verification = BoundVerification(
            n=self.n,
            evaluated=sum(b.evaluated for b in blocks),
            max_value=best,
            attaining_count=sum(b.max_count for b in blocks if b.max_value == best),
            bound_holds=all(b.bound_holds for b in blocks),
            sum_identity_holds=all(b.sum_identity_holds for b in blocks),
            modulus_identity_holds=all(b.modulus_identity_holds for b in blocks),
        )
        self._log(
            f"n={self.n}: bound {'holds' if verification.passed else 'FAILS'} "
            f"(max {best}, sqrt(2^{self.n + 1}) = {verification.bound:.9g})",
            level='success' if verification.passed else 'error'
        )
        return verification

    def _log(self, message: str, level: str = 'info') -> None:
        """Log a message using the configured logger"""
        if self.logger:
            self.logger.write(message, level=level, source='search')


def _base4_digits(value: int, width: int) -> List[int]:
    digits = []
    for _ in range(width):
        value, digit = divmod(value, 4)
        digits.append(digit)
    return digits[::-1]


def search_zero_signs(
    n: int,
    search_guard: int = DEFAULT_SEARCH_GUARD,
    threads: int = 1,
    max_reported: int = DEFAULT_MAX_REPORTED,
    logger: Optional[LogStreamer] = None
) -> SearchResult:
    """Exact maximum of the m=0 tuple sum over all 2^{2n} sign assignments."""
    return SignSearch(n, search_guard, threads, max_reported, logger).run()


def verify_fixed_sign_bound(
    n: int,
    search_guard: int = DEFAULT_SEARCH_GUARD,
    threads: int = 1,
    logger: Optional[LogStreamer] = None
) -> BoundVerification:
    """Check sum <= sqrt(2^{n+1}), Re f + Im f = sum and |f|^2 = 2^n for every assignment."""
    return SignSearch(n, search_guard, threads, logger=logger).verify_bound()
