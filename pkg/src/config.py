"""
Workbench defaults
Bounds below are the desk-scale universes every sweep runs over unless the
caller overrides them.
"""

# Sweep property -> default bounds
DEFAULT_BOUNDS = {
    'kraft_forward': {'max_words': 3, 'max_len': 4},
    'ternary_weight': {'max_words': 3, 'max_len': 4},
    'tree_roundtrip': {'max_words': 4, 'max_len': 4},
    'tree_converse': {'max_depth': 3},
    'profile_prefixify': {'max_words': 4, 'max_len': 4},
    'sp_vs_bruteforce': {'max_words': 3, 'max_len': 4},
    'subset_sum': {'max_exponent': 8, 'max_multiplicity': 3},
    'kraft_converse': {'max_words': 5, 'max_len': 5},
}

SWEEP_PROPERTIES = tuple(DEFAULT_BOUNDS)

# Alternate identifiers accepted by run_sweep and the CLI
SWEEP_ALIASES = {
    'lemma1': 'ternary_weight',
    'theorem1_roundtrip': 'tree_roundtrip',
    'theorem2': 'profile_prefixify',
}

DEFAULT_BOUNDS.update({alias: DEFAULT_BOUNDS[name] for alias, name in SWEEP_ALIASES.items()})

# Share of passing instances re-verified through an independent code path
RECHECK_FRACTION = 0.01
RECHECK_SEED = 0

CODE_FILTERS = ('all', 'decodable', 'prefix_free')
