"""
Command-line interface
Exit codes: 0 success, 1 property or construction failure, 2 usage or parse error.
"""

from enum import Enum
from pathlib import Path
from typing import NoReturn, Optional

import typer

from .code_core import (
    Code, builtin_code, is_prefix_free, kraft_sum, length_multiset, load_code,
    power_profile, weighted_ternary_sum,
)
from .construct import code_from_lengths, prefixify_with_trace, subset_sum_exact
from .correspondence import code_to_tree, tree_to_code
from .decodability import sardinas_patterson
from .enumeration import enumerate_codes
from .errors import ConstructionError, WorkbenchError
from .export import export_dot, json_dumps, json_loads, write_trace_jsonl
from .log import log, set_verbose
from .sweeps import run_sweep
from .symtree import tree_from_nested

EXIT_FAILURE = 1
EXIT_USAGE = 2

app = typer.Typer(
    help="Prefix-free codes, symmetric ternary trees and prefixification",
    no_args_is_help=True,
    add_completion=False,
)


class TreeFormat(str, Enum):
    dot = 'dot'
    json = 'json'


class CodeFilter(str, Enum):
    all = 'all'
    decodable = 'decodable'
    prefix_free = 'prefix_free'


class SweepProperty(str, Enum):
    kraft_forward = 'kraft_forward'
    ternary_weight = 'ternary_weight'
    tree_roundtrip = 'tree_roundtrip'
    tree_converse = 'tree_converse'
    profile_prefixify = 'profile_prefixify'
    sp_vs_bruteforce = 'sp_vs_bruteforce'
    subset_sum = 'subset_sum'
    kraft_converse = 'kraft_converse'
    lemma1 = 'lemma1'
    theorem1_roundtrip = 'theorem1_roundtrip'
    theorem2 = 'theorem2'


@app.callback()
def _callback(verbose: bool = typer.Option(False, '--verbose', '-v', help="Print [TAG] progress lines to stderr")):
    set_verbose(verbose)


def _fail(message: str, code: int) -> NoReturn:
    typer.echo(f"[CLI] {message}", err=True)
    raise typer.Exit(code)


def _read_code(path: Optional[Path], builtin: Optional[str]) -> Code:
    if (path is None) == (builtin is None):
        _fail("give exactly one of a code file or --builtin", EXIT_USAGE)
    try:
        return builtin_code(builtin) if builtin is not None else load_code(path)
    except OSError as e:
        _fail(f"cannot read {path}: {e}", EXIT_USAGE)
    except WorkbenchError as e:
        _fail(str(e), EXIT_USAGE)


def _emit_code(code: Code):
    if len(code):
        typer.echo(code.to_lines().rstrip('\n'))


@app.command('check')
def check(
    path: Optional[Path] = typer.Argument(None, help="Code file, one word per line"),
    builtin: Optional[str] = typer.Option(None, '--builtin', help="Named builtin code, e.g. shor"),
    as_json: bool = typer.Option(False, '--json', help="Emit one JSON object"),
):
    """Decodability verdict, prefix-freeness, exact sums and power profile."""
    code = _read_code(path, builtin)
    verdict = sardinas_patterson(code)
    summary = {
        'words': len(code),
        'decodable': verdict.decodable,
        'prefix_free': is_prefix_free(code),
        'kraft_sum': str(kraft_sum(code)),
        'weighted_ternary_sum': str(weighted_ternary_sum(code)),
        'power_profile': power_profile(code).to_dict(),
    }
    if not verdict.decodable:
        summary['witness'] = verdict.witness
        summary['factorizations'] = [list(f) for f in verdict.factorizations]
    else:
        # every decodable code shares its length multiset with a prefix-free one
        summary['length_equivalent_prefix_free'] = code_from_lengths(length_multiset(code)).sorted()

    if as_json:
        typer.echo(json_dumps(summary, pretty=True))
        return
    typer.echo(f"words: {summary['words']}")
    typer.echo(f"decodable: {'yes' if verdict.decodable else 'no'}")
    if not verdict.decodable:
        first, second = verdict.factorizations
        typer.echo(f"witness: {verdict.witness} = {'.'.join(first)} = {'.'.join(second)}")
    typer.echo(f"prefix_free: {'yes' if summary['prefix_free'] else 'no'}")
    typer.echo(f"kraft_sum: {summary['kraft_sum']}")
    typer.echo(f"weighted_ternary_sum: {summary['weighted_ternary_sum']}")
    profile = ', '.join(f"{k}: {v}" for k, v in power_profile(code).items())
    typer.echo(f"power_profile: {{{profile}}}")


@app.command('tree')
def tree(
    path: Path = typer.Argument(..., help="Prefix-free code file"),
    fmt: TreeFormat = typer.Option(TreeFormat.json, '--format', help="dot or json"),
):
    """Lift a prefix-free code to its labeled symmetric tree."""
    code = _read_code(path, None)
    try:
        labeled = code_to_tree(code)
    except WorkbenchError as e:
        _fail(str(e), EXIT_USAGE)
    if fmt is TreeFormat.dot:
        typer.echo(export_dot(labeled).rstrip('\n'))
    else:
        typer.echo(json_dumps(labeled.to_nested(), pretty=True))


@app.command('to-code')
def to_code(path: Path = typer.Argument(..., help="Tree JSON file")):
    """Project a symmetric tree to its prefix-free code."""
    try:
        obj = json_loads(path.read_bytes())
    except OSError as e:
        _fail(f"cannot read {path}: {e}", EXIT_USAGE)
    except ValueError as e:
        _fail(f"{path} is not valid JSON: {e}", EXIT_USAGE)
    try:
        code = tree_to_code(tree_from_nested(obj))
    except WorkbenchError as e:
        _fail(str(e), EXIT_USAGE)
    _emit_code(code)


@app.command('prefixify')
def prefixify_cmd(
    path: Optional[Path] = typer.Argument(None, help="Uniquely decodable code file"),
    builtin: Optional[str] = typer.Option(None, '--builtin', help="Named builtin code, e.g. shor"),
    trace: Optional[Path] = typer.Option(None, '--trace', help="Write step actions as JSON lines"),
    verify: bool = typer.Option(False, '--verify', help="Re-check prefix-freeness and profile equality"),
):
    """Prefix-free code with the same power profile."""
    code = _read_code(path, builtin)
    try:
        out, traces = prefixify_with_trace(code)
    except ConstructionError as e:
        _fail(f"construction failed: {e}", EXIT_FAILURE)
    except WorkbenchError as e:
        _fail(str(e), EXIT_USAGE)

    if trace is not None:
        write_trace_jsonl(traces, trace)
    fallbacks = sum(t.fallback for t in traces)
    typer.echo(f"[PREFIXIFY] {len(code)} words in, {len(out)} words out, "
               f"{fallbacks} oracle fallback(s)", err=True)
    if verify:
        if not is_prefix_free(out):
            _fail("verify: output is not prefix-free", EXIT_FAILURE)
        if power_profile(out) != power_profile(code):
            _fail(f"verify: profile {power_profile(out).to_dict()} != {power_profile(code).to_dict()}",
                  EXIT_FAILURE)
        typer.echo("[PREFIXIFY] verified: prefix-free, profile equal", err=True)
    _emit_code(out)


@app.command('enumerate')
def enumerate_cmd(
    max_words: int = typer.Option(..., '--max-words', min=1),
    max_len: int = typer.Option(..., '--max-len', min=1),
    flt: CodeFilter = typer.Option(CodeFilter.all, '--filter'),
    count_only: bool = typer.Option(False, '--count-only', help="Print only the number of codes"),
):
    """List every small code passing a filter, one code per line."""
    total = 0
    for code in enumerate_codes(max_words, max_len, flt.value):
        total += 1
        if not count_only:
            typer.echo(' '.join(code.sorted()))
    if count_only:
        typer.echo(str(total))


@app.command('sweep')
def sweep(
    prop: SweepProperty = typer.Option(..., '--property'),
    max_words: Optional[int] = typer.Option(None, '--max-words'),
    max_len: Optional[int] = typer.Option(None, '--max-len'),
    max_depth: Optional[int] = typer.Option(None, '--max-depth'),
    max_exponent: Optional[int] = typer.Option(None, '--max-exponent'),
    max_multiplicity: Optional[int] = typer.Option(None, '--max-multiplicity'),
    timing: bool = typer.Option(True, '--timing/--no-timing', help="Include wall time in the report"),
):
    """Run one property over its exhaustive universe and print the JSON report."""
    given = {
        'max_words': max_words, 'max_len': max_len, 'max_depth': max_depth,
        'max_exponent': max_exponent, 'max_multiplicity': max_multiplicity,
    }
    bounds = {k: v for k, v in given.items() if v is not None}
    try:
        report = run_sweep(prop.value, bounds)
    except WorkbenchError as e:
        _fail(str(e), EXIT_USAGE)
    typer.echo(json_dumps(report.to_dict(include_timing=timing), pretty=True))
    if not report.passed:
        raise typer.Exit(EXIT_FAILURE)


@app.command('subset-sum')
def subset_sum(
    target: int = typer.Option(..., '--target', min=0, help="N: pick powers summing to 2^N"),
    exponents: str = typer.Option(..., '--exponents', help="Comma-separated exponents"),
):
    """Pick exponents whose powers of two sum to exactly 2^target."""
    try:
        values = [int(x) for x in exponents.split(',') if x.strip()]
    except ValueError:
        _fail(f"exponents must be comma-separated integers, got {exponents!r}", EXIT_USAGE)
    try:
        picks = subset_sum_exact(values, target)
    except ConstructionError as e:
        _fail(str(e), EXIT_FAILURE)
    except WorkbenchError as e:
        _fail(str(e), EXIT_USAGE)
    typer.echo(','.join(map(str, picks)))
    log('CLI', f"{' + '.join(f'2^{n}' for n in picks)} = 2^{target}")


def main():
    app()


if __name__ == "__main__":
    main()
