"""
Sweeps - exhaustive property checks over small universes
Each property pairs a universe generator with a check and an independent
recheck. Failures are collected, never raised.
"""

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Optional

from .code_core import (
    Code, a_count, is_prefix_free, kraft_sum, length_multiset, power_profile,
    weighted_ternary_sum,
)
from .config import DEFAULT_BOUNDS, RECHECK_FRACTION, RECHECK_SEED, SWEEP_ALIASES, SWEEP_PROPERTIES
from .construct import (
    code_from_lengths, prefixify, prefixify_oracle, subset_sum_exact, subset_sum_feasible,
)
from .correspondence import code_to_tree, tree_to_code
from .decodability import agreement_bound, brute_force_ud, sardinas_patterson
from .enumeration import (
    enumerate_codes, enumerate_exponent_instances, enumerate_length_multisets,
    enumerate_symmetric_trees,
)
from .errors import PreconditionError, TreeError
from .log import log
from .symtree import Tree, canonical_form, is_symmetric, leaf_counts, tree_to_nested

# A check returns None on success or (expected, actual) on failure
Outcome = Optional[tuple[Any, Any]]


@dataclass
class SweepReport:
    property: str
    bounds: dict
    instances: int = 0
    failures: list = field(default_factory=list)
    rechecked: int = 0
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            'property': self.property,
            'bounds': dict(self.bounds),
            'instances': self.instances,
            'rechecked': self.rechecked,
            'passed': self.passed,
            'failures': list(self.failures),
        }
        if include_timing:
            out['wall_time'] = round(self.wall_time, 6)
        return out


def _pairwise_prefix_free(words: Iterable[str]) -> bool:
    words = list(words)
    return not any(u != v and v.startswith(u) for u in words for v in words)


def _check_kraft_forward(code: Code) -> Outcome:
    total = kraft_sum(code)
    return None if total <= 1 else ('kraft_sum <= 1', str(total))


def _recheck_kraft_forward(code: Code) -> Outcome:
    if not brute_force_ud(code, agreement_bound(code)).decodable:
        return 'decodable by length-bounded search', 'ambiguous'
    top = code.max_length
    numerator = sum(2 ** (top - len(w)) for w in code.words)
    return None if numerator <= 2 ** top else (f"<= {2 ** top}", numerator)


def _check_ternary_weight(code: Code) -> Outcome:
    ternary, binary = weighted_ternary_sum(code), kraft_sum(code)
    if ternary <= 1 and binary <= 1:
        return None
    return 'both sums <= 1', {'weighted_ternary_sum': str(ternary), 'kraft_sum': str(binary)}


def _recheck_ternary_weight(code: Code) -> Outcome:
    top = code.max_length
    numerator = sum(2 ** a_count(c) * 3 ** (top - len(c)) for c in code.words)
    return None if numerator <= 3 ** top else (f"<= {3 ** top}", numerator)


def _check_profile_prefixify(code: Code) -> Outcome:
    out = prefixify(code)
    if not is_prefix_free(out):
        return 'prefix-free output', out.sorted()
    if power_profile(out) != power_profile(code):
        return power_profile(code).to_dict(), power_profile(out).to_dict()
    return None


def _recheck_profile_prefixify(code: Code) -> Outcome:
    out = prefixify(code)
    if not _pairwise_prefix_free(out.words):
        return 'pairwise prefix-free output', out.sorted()
    if prefixify_oracle(power_profile(code)) is None:
        return 'profile realizable by complete search', None
    return None


def _check_sp_vs_bruteforce(code: Code) -> Outcome:
    sp = sardinas_patterson(code)
    bf = brute_force_ud(code, agreement_bound(code))
    if sp.decodable != bf.decodable:
        return sp.to_dict(), bf.to_dict()
    for verdict in (sp, bf):
        if verdict.decodable:
            continue
        for factors in verdict.factorizations:
            if ''.join(factors) != verdict.witness or any(f not in code for f in factors):
                return 'witness factorizations over the code', verdict.to_dict()
    return None


def _recheck_sp_vs_bruteforce(code: Code) -> Outcome:
    wider = brute_force_ud(code, 2 * agreement_bound(code))
    sp = sardinas_patterson(code)
    return None if wider.decodable == sp.decodable else (sp.to_dict(), wider.to_dict())


def _check_tree_roundtrip(code: Code) -> Outcome:
    labeled = code_to_tree(code)
    if not is_symmetric(labeled.tree):
        return 'symmetric tree', tree_to_nested(labeled.tree)
    counts = leaf_counts(labeled.tree)
    if counts != power_profile(code).as_dict():
        return power_profile(code).to_dict(), {str(k): v for k, v in counts.items()}
    back = tree_to_code(labeled)
    return None if back == code else (code.sorted(), back.sorted())


def _recheck_tree_roundtrip(code: Code) -> Outcome:
    projected = code_to_tree(code).projected_leaves()
    expected = Counter({w: 2 ** a_count(w) for w in code.words})
    return None if projected == expected else (dict(expected), dict(projected))


def _check_tree_converse(tree: Tree) -> Outcome:
    if len(tree) == 1:
        try:
            tree_to_code(tree)
        except TreeError:
            return None
        return 'TreeError for the single vertex', 'a code'
    code = tree_to_code(tree)
    if not is_prefix_free(code):
        return 'prefix-free code', code.sorted()
    lifted = canonical_form(code_to_tree(code).tree)
    want = canonical_form(tree)
    return None if lifted == want else (want, lifted)


def _recheck_tree_converse(tree: Tree) -> Outcome:
    if len(tree) == 1:
        return None
    profile = power_profile(tree_to_code(tree)).as_dict()
    counts = leaf_counts(tree)
    return None if counts == profile else (counts, profile)


def _check_subset_sum(instance: tuple[tuple[int, ...], int]) -> Outcome:
    exponents, target = instance
    picks = subset_sum_exact(exponents, target)
    if Counter(picks) - Counter(exponents):
        return 'sub-multiset of the input', list(picks)
    total = sum(1 << n for n in picks)
    if total != 1 << target:
        return 1 << target, total
    if not subset_sum_feasible(exponents, target):
        return 'feasible by dynamic programming', 'infeasible'
    return None


def _recheck_subset_sum(instance: tuple[tuple[int, ...], int]) -> Outcome:
    exponents, target = instance
    # reachable sums as a bitset
    reach = 1
    for n in exponents:
        reach |= reach << (1 << n)
    return None if reach >> (1 << target) & 1 else ('reachable', 'unreachable')


def _check_kraft_converse(lengths: tuple[int, ...]) -> Outcome:
    code = code_from_lengths(lengths)
    if not is_prefix_free(code):
        return 'prefix-free code', code.sorted()
    got = length_multiset(code)
    return None if got == tuple(sorted(lengths)) else (list(lengths), list(got))


def _recheck_kraft_converse(lengths: tuple[int, ...]) -> Outcome:
    code = code_from_lengths(lengths)
    return None if _pairwise_prefix_free(code.words) else ('pairwise prefix-free', code.sorted())


def _describe(instance: Any) -> Any:
    if isinstance(instance, Code):
        return instance.sorted()
    if isinstance(instance, Tree):
        return tree_to_nested(instance)
    if isinstance(instance, tuple) and len(instance) == 2 and isinstance(instance[0], tuple):
        return {'exponents': list(instance[0]), 'target': instance[1]}
    return list(instance)


def _codes(flt: str) -> Callable[[Mapping], Iterable]:
    return lambda b: enumerate_codes(b['max_words'], b['max_len'], flt)


PROPERTIES: dict[str, tuple[Callable, Callable, Callable]] = {
    'kraft_forward': (_codes('decodable'), _check_kraft_forward, _recheck_kraft_forward),
    'ternary_weight': (_codes('decodable'), _check_ternary_weight, _recheck_ternary_weight),
    'tree_roundtrip': (_codes('prefix_free'), _check_tree_roundtrip, _recheck_tree_roundtrip),
    'tree_converse': (lambda b: enumerate_symmetric_trees(b['max_depth']),
                      _check_tree_converse, _recheck_tree_converse),
    'profile_prefixify': (_codes('decodable'), _check_profile_prefixify, _recheck_profile_prefixify),
    'sp_vs_bruteforce': (_codes('all'), _check_sp_vs_bruteforce, _recheck_sp_vs_bruteforce),
    'subset_sum': (lambda b: enumerate_exponent_instances(b['max_exponent'], b['max_multiplicity']),
                   _check_subset_sum, _recheck_subset_sum),
    'kraft_converse': (lambda b: enumerate_length_multisets(b['max_words'], b['max_len']),
                       _check_kraft_converse, _recheck_kraft_converse),
}
PROPERTIES.update({alias: PROPERTIES[name] for alias, name in SWEEP_ALIASES.items()})


def resolve_bounds(prop: str, bounds: Optional[Mapping] = None) -> dict:
    """Defaults for `prop` overridden by the non-None entries of `bounds`"""
    if prop not in PROPERTIES:
        known = SWEEP_PROPERTIES + tuple(SWEEP_ALIASES)
        raise PreconditionError(f"unknown sweep property {prop!r}; expected one of {known}")
    merged = dict(DEFAULT_BOUNDS[prop])
    for key, value in (bounds or {}).items():
        if value is None:
            continue
        if key not in merged:
            raise PreconditionError(f"property {prop} takes no bound {key!r}; known: {sorted(merged)}")
        merged[key] = value
    for key, value in merged.items():
        floor = 0 if key in ('max_depth', 'max_exponent') else 1
        if not isinstance(value, int) or value < floor:
            raise PreconditionError(f"bound {key} must be an integer >= {floor}, got {value!r}")
    return merged


def run_sweep(prop: str, bounds: Optional[Mapping] = None) -> SweepReport:
    """Check `prop` on every instance of its universe; a sample is rechecked independently"""
    merged = resolve_bounds(prop, bounds)
    universe, check, recheck = PROPERTIES[prop]
    report = SweepReport(property=prop, bounds=merged)
    rng = random.Random(RECHECK_SEED)
    started = time.perf_counter()

    for index, instance in enumerate(universe(merged)):
        report.instances += 1
        try:
            outcome = check(instance)
            if outcome is None and (index == 0 or rng.random() < RECHECK_FRACTION):
                report.rechecked += 1
                outcome = recheck(instance)
        except Exception as e:
            outcome = ('no exception', f"{type(e).__name__}: {e}")
        if outcome is not None:
            expected, actual = outcome
            report.failures.append({'input': _describe(instance), 'expected': expected, 'actual': actual})

    report.wall_time = time.perf_counter() - started
    log('SWEEP', f"{prop} {merged}: {report.instances} instances, "
                 f"{len(report.failures)} failure(s), {report.rechecked} rechecked "
                 f"in {report.wall_time:.2f}s")
    return report
