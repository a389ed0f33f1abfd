"""
Unique Decodability
Sardinas-Patterson dangling-suffix iteration with witness reconstruction,
plus a length-bounded search used as an independent oracle.
"""

import heapq
from dataclasses import dataclass
from typing import Optional

from .code_core import Code
from .errors import PreconditionError
from .log import log

Factorization = tuple[str, ...]


@dataclass(frozen=True)
class UdVerdict:
    """Decodability verdict; a witness comes with two factorizations"""
    decodable: bool
    witness: Optional[str] = None
    factorizations: Optional[tuple[Factorization, Factorization]] = None
    bound: Optional[int] = None  # set when the verdict only covers words up to this length

    def __post_init__(self):
        if self.decodable:
            if self.witness is not None or self.factorizations is not None:
                raise ValueError("a decodable verdict carries no witness")
            return
        if self.witness is None or self.factorizations is None:
            raise ValueError("a non-decodable verdict needs a witness and two factorizations")
        first, second = self.factorizations
        if ''.join(first) != self.witness or ''.join(second) != self.witness:
            raise ValueError(f"factorizations do not spell witness {self.witness!r}")
        if first == second:
            raise ValueError("witness factorizations must differ")

    def to_dict(self) -> dict:
        out = {'decodable': self.decodable}
        if self.witness is not None:
            out['witness'] = self.witness
            out['factorizations'] = [list(f) for f in self.factorizations]
        if self.bound is not None:
            out['bound'] = self.bound
        return out


def _require_code(code: Code):
    if len(code) == 0:
        raise PreconditionError("decodability needs a nonempty code")
    if '' in code.words:
        raise PreconditionError("code contains the empty word")


def sardinas_patterson(code: Code) -> UdVerdict:
    """
    Decide unique decodability.

    Each dangling suffix s carries the two partial factorizations it came
    from: `ahead` spells `behind` followed by s. Reaching the empty suffix
    closes both into a witness.
    """
    _require_code(code)
    words = code.sorted()

    # suffix -> (ahead, behind); first derivation wins
    current: dict[str, tuple[Factorization, Factorization]] = {}
    for longer in words:
        for shorter in words:
            if longer != shorter and longer.startswith(shorter):
                suffix = longer[len(shorter):]
                current.setdefault(suffix, ((longer,), (shorter,)))

    seen_sets = set()
    rounds = 0
    while current:
        key = tuple(sorted(current))
        if key in seen_sets:
            log('SP', f"suffix set repeated after {rounds} rounds: decodable")
            return UdVerdict(True)
        seen_sets.add(key)
        rounds += 1

        following: dict[str, tuple[Factorization, Factorization]] = {}
        for suffix in key:
            ahead, behind = current[suffix]
            for word in words:
                if word == suffix:
                    first, second = ahead, behind + (word,)
                    log('SP', f"empty suffix reached in round {rounds}")
                    return UdVerdict(False, ''.join(first), (first, second))
                if suffix.startswith(word):
                    following.setdefault(suffix[len(word):], (ahead, behind + (word,)))
                elif word.startswith(suffix):
                    following.setdefault(word[len(suffix):], (behind + (word,), ahead))
        current = following

    log('SP', f"suffix set emptied after {rounds} rounds: decodable")
    return UdVerdict(True)


def agreement_bound(code: Code) -> int:
    """(distinct nonempty proper suffixes + 1) * max word length"""
    suffixes = {w[i:] for w in code.words for i in range(1, len(w))}
    return (len(suffixes) + 1) * code.max_length


def brute_force_ud(code: Code, bound: int) -> UdVerdict:
    """
    Search every word of length <= bound for two factorizations.

    Dynamic programming over (prefix length, overhang): a state says the
    leading factorization spells `length` symbols and the trailing one
    is `overhang` symbols short. States are expanded in nondecreasing
    length, so the first synchronization found is a shortest witness.
    """
    _require_code(code)
    if bound < code.max_length:
        raise PreconditionError(f"bound {bound} is below the longest word length {code.max_length}")
    words = code.sorted()

    heap = []
    seen = set()
    for longer in words:
        for shorter in words:
            if longer != shorter and longer.startswith(shorter):
                overhang = longer[len(shorter):]
                heapq.heappush(heap, (len(longer), overhang, (longer,), (shorter,)))

    while heap:
        length, overhang, ahead, behind = heapq.heappop(heap)
        if (length, overhang) in seen:
            continue
        seen.add((length, overhang))
        for word in words:
            if word == overhang:
                first, second = ahead, behind + (word,)
                log('BRUTE', f"ambiguous word of length {length}")
                return UdVerdict(False, ''.join(first), (first, second), bound=bound)
            if overhang.startswith(word):
                rest = overhang[len(word):]
                if (length, rest) not in seen:
                    heapq.heappush(heap, (length, rest, ahead, behind + (word,)))
            elif word.startswith(overhang):
                grown = length + len(word) - len(overhang)
                rest = word[len(overhang):]
                if grown <= bound and (grown, rest) not in seen:
                    heapq.heappush(heap, (grown, rest, behind + (word,), ahead))

    return UdVerdict(True, bound=bound)


def is_uniquely_decodable(code: Code) -> bool:
    return sardinas_patterson(code).decodable
