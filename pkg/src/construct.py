"""
Prefixification
Turns a uniquely decodable code into a prefix-free code with the same
per-length sums of 2^{[w]_a}, one word at a time. Each step follows the
subset-sum / missing-word / vacancy-shift construction and falls back to a
complete search whenever that path cannot produce a valid configuration.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Iterable, Iterator, Optional

import numpy as np
from scipy.special import comb

from .code_core import (
    Code, LengthProfile, a_count, is_prefix_free, iter_free_words,
    power_profile, proper_prefixes,
)
from .decodability import sardinas_patterson
from .errors import (
    ConstructionError, KraftViolationError, NotPrefixFreeError,
    NotUniquelyDecodableError, PreconditionError,
)
from .log import log, warn

ExponentMultiset = tuple[int, ...]


def subset_sum_exact(exponents: Iterable[int], target: int) -> ExponentMultiset:
    """
    Pick a sub-multiset of `exponents` whose powers of two sum to 2^target.

    Greedy on descending exponents: before exponent j is considered both 2^target
    and the running total are multiples of 2^j, so taking every element
    that still fits can never overshoot and always lands exactly.
    """
    pool = sorted(exponents, reverse=True)
    if any(n < 0 for n in pool):
        raise PreconditionError("exponents must be natural numbers")
    if pool and pool[0] > target:
        raise PreconditionError(f"exponent {pool[0]} exceeds target {target}")
    goal = 1 << target
    if sum(1 << n for n in pool) < goal:
        raise PreconditionError(f"exponents sum below 2^{target}")

    chosen, total = [], 0
    for n in pool:
        if total + (1 << n) <= goal:
            chosen.append(n)
            total += 1 << n
            if total == goal:
                break
    if total != goal:
        raise ConstructionError(f"greedy subset sum stopped at {total} != {goal}")
    return tuple(chosen)


def subset_sum_feasible(exponents: Iterable[int], target: int) -> bool:
    """Dynamic-programming check that some sub-multiset hits 2^target"""
    goal = 1 << target
    reach = np.zeros(goal + 1, dtype=bool)
    reach[0] = True
    for n in exponents:
        step = 1 << n
        if step > goal:
            continue
        reach[step:] = reach[step:] | reach[:goal + 1 - step]
    return bool(reach[goal])


def binomial(n: int, k: int) -> int:
    return int(comb(n, k, exact=True))


@dataclass(frozen=True)
class OccupancyTable:
    """w_m(j): code words of length m holding j a's, for each length m present"""
    rows: tuple = ()  # ((m, (w_m(0), ..., w_m(m))), ...)

    def __post_init__(self):
        for m, row in self.rows:
            if len(row) != m + 1:
                raise ValueError(f"occupancy row for length {m} must have {m + 1} entries")
            for j, count in enumerate(row):
                if count > binomial(m, j):
                    raise ValueError(f"w_{m}({j}) = {count} exceeds C({m},{j})")

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.rows)

    def row(self, m: int) -> tuple[int, ...]:
        return dict(self.rows).get(m, (0,) * (m + 1))

    def w(self, m: int, j: int) -> int:
        row = self.row(m)
        return row[j] if 0 <= j < len(row) else 0

    def level_weight(self, m: int) -> int:
        """sum_j 2^j w_m(j), the number of tree leaves at depth m"""
        return sum(count << j for j, count in enumerate(self.row(m)))

    def deficits(self, m: int) -> list[int]:
        return [j for j in range(m + 1) if self.w(m, j) < binomial(m, j)]

    def to_dict(self) -> dict:
        return {str(m): list(row) for m, row in self.rows}


def occupancy(code: Code) -> OccupancyTable:
    counts: dict[int, list[int]] = {}
    for w in code.words:
        row = counts.setdefault(len(w), [0] * (len(w) + 1))
        row[a_count(w)] += 1
    return OccupancyTable(tuple((m, tuple(counts[m])) for m in sorted(counts)))


def _check_prefix_code(code: Code, length: int):
    if not is_prefix_free(code):
        raise NotPrefixFreeError("expected a prefix-free code")
    if code.max_length > length:
        raise PreconditionError(f"code has words longer than {length}")


def available_words(code: Code, length: int) -> set[str]:
    """Words of `length` that no word of `code` is a prefix of"""
    _check_prefix_code(code, length)
    return set(iter_free_words(code.words, length))


def available_weight(code: Code, length: int) -> int:
    """3^length minus the ternary leaves the code covers at that depth"""
    return 3 ** length - sum(3 ** (length - len(d)) * 2 ** a_count(d) for d in code.words)


@dataclass(frozen=True)
class StepAction:
    """One edit to the code under construction"""
    kind: str  # 'add' | 'shift' | 'replace'
    case: str  # 'b_power' | 'subset_sum' | 'extension' | 'shift' | 'oracle'
    added: tuple[str, ...] = ()
    deleted: tuple[str, ...] = ()
    m: Optional[int] = None
    j: Optional[int] = None
    exponents: tuple[int, ...] = ()
    note: str = ''

    def apply(self, words: set[str]) -> set[str]:
        if self.kind == 'replace':
            return set(self.added)
        return (set(words) - set(self.deleted)) | set(self.added)

    def to_dict(self) -> dict:
        out = {'kind': self.kind, 'case': self.case, 'added': list(self.added)}
        if self.deleted:
            out['deleted'] = list(self.deleted)
        if self.m is not None:
            out['m'] = self.m
        if self.j is not None:
            out['j'] = self.j
        if self.exponents:
            out['exponents'] = list(self.exponents)
        if self.note:
            out['note'] = self.note
        return out


@dataclass
class StepTrace:
    """Everything one add-word step did"""
    length: int
    exponent: int
    word: Optional[str] = None  # source word, when driven by prefixify
    case: str = ''
    actions: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    fallback: bool = False

    def record(self, action: StepAction):
        self.actions.append(action)

    def replay(self, pre: Code) -> Code:
        words = set(pre.words)
        for action in self.actions:
            words = action.apply(words)
        return Code(frozenset(words))

    @property
    def shifts(self) -> list[StepAction]:
        return [a for a in self.actions if a.kind == 'shift']

    def records(self, step: Optional[int] = None) -> Iterator[dict]:
        """One JSON-ready dict per action"""
        for action in self.actions:
            record = {'length': self.length, 'exponent': self.exponent, 'step_case': self.case}
            if step is not None:
                record['step'] = step
            if self.word is not None:
                record['word'] = self.word
            record.update(action.to_dict())
            yield record

    def to_dict(self) -> dict:
        return {
            'length': self.length,
            'exponent': self.exponent,
            'word': self.word,
            'case': self.case,
            'fallback': self.fallback,
            'notes': list(self.notes),
            'actions': [a.to_dict() for a in self.actions],
        }


def _window(m: int, exponent: int, length: int) -> tuple[int, int]:
    """Classes j a stem of length m may hold and still extend to class `exponent` at `length`"""
    return max(0, exponent - (length - m)), min(m, exponent)


def _slot_free(words: set[str], m: int, j: int) -> Iterator[str]:
    """Length-m class-j words that neither have a prefix in `words` nor prefix one"""
    extended = proper_prefixes(words)
    return (u for u in iter_free_words(words, m, j) if u not in extended)


def _find_extension(words: set[str], exponent: int, length: int) -> Optional[tuple[int, int, str]]:
    """First deficit class in a window holding a slot-free stem"""
    table = occupancy(Code(frozenset(words)))
    for m in sorted(set(table.lengths) | {length}):
        lo, hi = _window(m, exponent, length)
        for j in table.deficits(m):
            if not lo <= j <= hi:
                continue
            stem = next(_slot_free(words, m, j), None)
            if stem is not None:
                return m, j, stem
    return None


def _find_shift(words: set[str], exponent: int, length: int) -> Optional[tuple[int, int, tuple, str]]:
    """Two class t-1 words out, one class t word in, at the same length m"""
    table = occupancy(Code(frozenset(words)))
    for m in table.lengths:
        _, hi = _window(m, exponent, length)
        for t in range(hi + 1, m + 1):
            if table.w(m, t - 1) < 2:
                continue
            donors = sorted(w for w in words if len(w) == m and a_count(w) == t - 1)
            deleted = tuple(donors[-2:])
            added = next(_slot_free(words - set(deleted), m, t), None)
            if added is not None:
                return m, t, deleted, added
    return None


def _extension_path(words: set[str], exponent: int, length: int, trace: StepTrace) -> bool:
    """Missing-word extension, shifting vacancies down until one fits"""
    cap = sum(2 ** m for m in {len(w) for w in words} | {length})
    for _ in range(cap + 1):
        hit = _find_extension(words, exponent, length)
        if hit is not None:
            m, j, stem = hit
            new_word = stem + 'a' * (exponent - j) + 'b' * (length - m - (exponent - j))
            words.add(new_word)
            trace.record(StepAction('add', 'extension', added=(new_word,), m=m, j=j, note=f"stem {stem}"))
            return True
        shift = _find_shift(words, exponent, length)
        if shift is None:
            trace.notes.append('no usable deficit and no vacancy shift available')
            return False
        m, t, deleted, added = shift
        before = occupancy(Code(frozenset(words))).level_weight(m)
        words.difference_update(deleted)
        words.add(added)
        after = occupancy(Code(frozenset(words))).level_weight(m)
        if before != after:
            raise ConstructionError(f"shift at length {m} changed its level weight {before} -> {after}", trace)
        trace.record(StepAction('shift', 'shift', added=(added,), deleted=deleted, m=m, j=t))
        log('SHIFT', f"length {m}: {deleted[0]}, {deleted[1]} -> {added}")
    trace.notes.append(f"vacancy shifting exceeded {cap} iterations")
    return False


def _step_problem(pre: Code, post: Code, exponent: int, length: int) -> Optional[str]:
    if not is_prefix_free(post):
        return 'result is not prefix-free'
    delta = power_profile(post).diff(power_profile(pre))
    if delta != {length: 2 ** exponent}:
        return f"profile changed by {delta}, expected {{{length}: {2 ** exponent}}}"
    return None


def add_word_step(code: Code, exponent: int, length: int) -> tuple[Code, StepTrace]:
    """
    Grow the profile of a prefix-free code by 2^exponent at `length`,
    leaving every other length untouched.
    """
    trace = StepTrace(length=length, exponent=exponent)
    if length < 1:
        raise PreconditionError("length must be at least 1")
    if not 0 <= exponent <= length:
        raise PreconditionError(f"exponent {exponent} outside 0..{length}")
    _check_prefix_code(code, length)

    free = sorted(iter_free_words(code.words, length))
    weight = sum(2 ** a_count(w) for w in free)
    if weight != available_weight(code, length):
        raise ConstructionError(f"free-slot weight {weight} disagrees with capacity formula", trace)
    if weight < 2 ** exponent:
        raise ConstructionError(
            f"available weight {weight} at length {length} is below 2^{exponent}; "
            "the words processed so far do not form a uniquely decodable code", trace)

    words = set(code.words)
    if exponent == 0:
        trace.case = 'b_power'
        target = 'b' * length
        # only an all-b word can block b^length; decodable input never has two
        if any(target.startswith(d) for d in words):
            raise ConstructionError(f"{target} is blocked although exponent is 0", trace)
        words.add(target)
        trace.record(StepAction('add', 'b_power', added=(target,)))
    elif max(a_count(w) for w in free) <= exponent:
        trace.case = 'subset_sum'
        picks = subset_sum_exact((a_count(w) for w in free), exponent)
        by_class: dict[int, list[str]] = defaultdict(list)
        for w in free:
            by_class[a_count(w)].append(w)
        taken = {n: 0 for n in picks}
        chosen = []
        for n in picks:
            chosen.append(by_class[n][taken[n]])
            taken[n] += 1
        words.update(chosen)
        trace.record(StepAction('add', 'subset_sum', added=tuple(sorted(chosen)), exponents=picks))
    else:
        trace.case = 'extension'
        _extension_path(words, exponent, length, trace)

    result = Code(frozenset(words))
    problem = _step_problem(code, result, exponent, length)
    if problem is None:
        log('STEP', f"length {length} exponent {exponent}: {trace.case}")
        return result, trace

    trace.fallback = True
    trace.notes.append(problem)
    warn('ORACLE', f"length {length} exponent {exponent}: {problem}; running complete search")
    target = power_profile(code).plus(length, 2 ** exponent)
    solved = prefixify_oracle(target, target.keys())
    if solved is None:
        raise ConstructionError(
            f"no prefix-free code realizes profile {target.as_dict()}", trace)
    trace.record(StepAction('replace', 'oracle', added=tuple(solved.sorted()), note=problem))
    return solved, trace


def prefixify_with_trace(code: Code) -> tuple[Code, list[StepTrace]]:
    """prefixify, also returning one StepTrace per processed word"""
    if len(code) == 0:
        raise PreconditionError("cannot prefixify the empty code")
    if is_prefix_free(code):
        return code, []
    verdict = sardinas_patterson(code)
    if not verdict.decodable:
        raise NotUniquelyDecodableError(
            f"code is not uniquely decodable: {verdict.witness} = "
            f"{'.'.join(verdict.factorizations[0])} = {'.'.join(verdict.factorizations[1])}",
            verdict)

    built = Code()
    traces = []
    for word in code.sorted():
        built, trace = add_word_step(built, a_count(word), len(word))
        trace.word = word
        traces.append(trace)

    if not is_prefix_free(built) or power_profile(built) != power_profile(code):
        raise ConstructionError("prefixified code misses the input profile", traces[-1] if traces else None)
    fallbacks = sum(t.fallback for t in traces)
    log('PREFIXIFY', f"{len(code)} words -> {len(built)} words, {fallbacks} oracle fallback(s)")
    return built, traces


def prefixify(code: Code) -> Code:
    """Prefix-free code with exactly the power profile of a uniquely decodable code"""
    return prefixify_with_trace(code)[0]


def _class_counts(target: int, caps: list[int]) -> Iterator[tuple[int, ...]]:
    """Vectors n with sum_j n[j] 2^j = target and n[j] <= caps[j], high classes first"""
    top = len(caps) - 1
    below = [0] * (top + 2)  # below[j] = largest sum reachable with classes < j
    for j in range(top + 1):
        below[j + 1] = below[j] + caps[j] * 2 ** j
    counts = [0] * (top + 1)

    def rec(j: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(counts)
            return
        if j < 0 or remaining > below[j + 1]:
            return
        unit = 2 ** j
        for n in range(min(caps[j], remaining // unit), -1, -1):
            counts[j] = n
            yield from rec(j - 1, remaining - n * unit)
        counts[j] = 0

    yield from rec(top, target)


def prefixify_oracle(profile: LengthProfile, lengths: Optional[Iterable[int]] = None) -> Optional[Code]:
    """
    Complete backtracking search for a prefix-free code with this profile,
    using only the profile's lengths. Levels go in ascending length; at each
    level a vector of per-class word counts is chosen. Free slots per class at
    longer lengths depend only on the (length, class) counts already placed,
    so realizing each class by its lexicographically least free words loses
    no solutions.
    """
    keys = profile.keys()
    lengths = keys if lengths is None else frozenset(lengths)
    if lengths != keys:
        raise PreconditionError(f"lengths {sorted(lengths)} differ from profile support {sorted(keys)}")
    if not keys:
        return Code()
    if sum(Fraction(p, 3 ** k) for k, p in profile.items()) > 1:
        return None

    levels = sorted(keys)
    targets = profile.as_dict()
    placed: list[tuple[int, tuple[int, ...]]] = []
    failed = set()

    def free_per_class(length: int) -> list[int]:
        caps = [binomial(length, j) for j in range(length + 1)]
        for k, counts in placed:
            for c, n in enumerate(counts):
                if n:
                    for j in range(c, c + length - k + 1):
                        caps[j] -= n * binomial(length - k, j - c)
        return caps

    def search(idx: int) -> bool:
        if idx == len(levels):
            return True
        state = (idx, tuple(placed))
        if state in failed:
            return False
        length = levels[idx]
        for counts in _class_counts(targets[length], free_per_class(length)):
            placed.append((length, counts))
            if search(idx + 1):
                return True
            placed.pop()
        failed.add(state)
        return False

    if not search(0):
        log('ORACLE', f"profile {targets} has no prefix-free realization")
        return None

    words: set[str] = set()
    for length, counts in placed:
        shorter = set(words)
        for j, n in enumerate(counts):
            if n:
                picks = list(islice(iter_free_words(shorter, length, j), n))
                if len(picks) != n:
                    raise ConstructionError(f"only {len(picks)} free class-{j} words at length {length}, needed {n}")
                words.update(picks)
    result = Code(frozenset(words))
    if not is_prefix_free(result) or power_profile(result) != profile:
        raise ConstructionError(f"oracle realization misses profile {targets}")
    return result


def code_from_lengths(lengths: Iterable[int]) -> Code:
    """Canonical prefix-free code with the given length multiset"""
    ordered = sorted(lengths)
    if not ordered:
        raise PreconditionError("need at least one length")
    if ordered[0] < 1:
        raise PreconditionError("lengths must be positive")
    total = sum(Fraction(1, 2 ** n) for n in ordered)
    if total > 1:
        raise KraftViolationError(f"lengths {ordered} have Kraft sum {total} > 1")

    words = []
    value, previous = 0, ordered[0]
    for n in ordered:
        value <<= n - previous
        previous = n
        words.append(format(value, f'0{n}b').translate(_BITS_TO_SYMBOLS))
        value += 1
    return Code.from_words(words)


_BITS_TO_SYMBOLS = str.maketrans('01', 'ab')
