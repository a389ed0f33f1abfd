"""Tests for the sweep runner and its properties"""
import pytest

from src import sweeps
from src.config import DEFAULT_BOUNDS, SWEEP_PROPERTIES
from src.errors import PreconditionError
from src.export import json_dumps
from src.sweeps import resolve_bounds, run_sweep

SMALL_BOUNDS = {
    'kraft_forward': {'max_words': 2, 'max_len': 3},
    'ternary_weight': {'max_words': 2, 'max_len': 3},
    'tree_roundtrip': {'max_words': 3, 'max_len': 3},
    'tree_converse': {'max_depth': 2},
    'profile_prefixify': {'max_words': 3, 'max_len': 3},
    'sp_vs_bruteforce': {'max_words': 2, 'max_len': 3},
    'subset_sum': {'max_exponent': 4, 'max_multiplicity': 2},
    'kraft_converse': {'max_words': 3, 'max_len': 3},
}


def test_every_property_has_small_bounds():
    assert set(SMALL_BOUNDS) == set(SWEEP_PROPERTIES)


@pytest.mark.parametrize('prop', SWEEP_PROPERTIES)
def test_small_sweeps_pass(prop):
    report = run_sweep(prop, SMALL_BOUNDS[prop])
    assert report.passed, report.failures[:3]
    assert report.instances > 0
    assert report.rechecked >= 1
    assert report.bounds == SMALL_BOUNDS[prop]


def test_reports_are_deterministic():
    first = run_sweep('tree_roundtrip', SMALL_BOUNDS['tree_roundtrip'])
    second = run_sweep('tree_roundtrip', SMALL_BOUNDS['tree_roundtrip'])
    assert json_dumps(first.to_dict(include_timing=False), pretty=True) == \
        json_dumps(second.to_dict(include_timing=False), pretty=True)
    assert 'wall_time' in first.to_dict()


def test_failures_are_collected_not_raised(monkeypatch):
    universe, _, recheck = sweeps.PROPERTIES['kraft_converse']
    monkeypatch.setitem(sweeps.PROPERTIES, 'kraft_converse',
                        (universe, lambda lengths: ('anything', 'nothing'), recheck))
    report = run_sweep('kraft_converse', {'max_words': 2, 'max_len': 2})
    assert not report.passed
    assert len(report.failures) == report.instances == 5
    assert report.failures[0] == {'input': [1], 'expected': 'anything', 'actual': 'nothing'}


def test_exceptions_become_failures(monkeypatch):
    universe, _, recheck = sweeps.PROPERTIES['kraft_converse']

    def explode(lengths):
        raise RuntimeError('boom')

    monkeypatch.setitem(sweeps.PROPERTIES, 'kraft_converse', (universe, explode, recheck))
    report = run_sweep('kraft_converse', {'max_words': 1, 'max_len': 2})
    assert report.instances == 2
    assert all(f['actual'] == 'RuntimeError: boom' for f in report.failures)


def test_resolve_bounds():
    assert resolve_bounds('tree_converse') == DEFAULT_BOUNDS['tree_converse']
    assert resolve_bounds('kraft_forward', {'max_len': 2, 'max_words': None}) == {'max_words': 3, 'max_len': 2}
    with pytest.raises(PreconditionError):
        resolve_bounds('nope')
    with pytest.raises(PreconditionError):
        resolve_bounds('tree_converse', {'max_words': 2})
    with pytest.raises(PreconditionError):
        resolve_bounds('kraft_forward', {'max_len': 0})


@pytest.mark.slow
@pytest.mark.parametrize('prop', SWEEP_PROPERTIES)
def test_default_bounds_pass(prop):
    report = run_sweep(prop)
    assert report.passed, report.failures[:3]
    assert report.instances > 0


@pytest.mark.parametrize('alias, name', [
    ('lemma1', 'ternary_weight'),
    ('theorem1_roundtrip', 'tree_roundtrip'),
    ('theorem2', 'profile_prefixify'),
])
def test_alternate_property_identifiers(alias, name):
    """Alternate identifiers run the same check over the same universe"""
    report = run_sweep(alias, {'max_words': 2, 'max_len': 2})
    assert report.passed
    assert report.property == alias
    assert report.instances == run_sweep(name, {'max_words': 2, 'max_len': 2}).instances
    assert resolve_bounds(alias) == DEFAULT_BOUNDS[name]
