"""Executable property checks run by ``codepres check``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .bitword import all_words, decimal_value, schemes_for, word_diff, word_inverse, word_sum
from .codemodel import CharacterSet, Universe, closure_check, code_inverse, well_order
from .presentation import all_presentations, equivalent, equizone_partition, presentation, reconstruct

# pairwise checks are limited to this many words
PAIR_LIMIT = 256


class CheckFailed(Exception):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _well_order(c: CharacterSet) -> str:
    once = well_order(c)
    values = [decimal_value(w) for w in once.words]
    _require(all(a < b for a, b in zip(values, values[1:])), "not strictly ascending")
    _require(well_order(once) == once, "not idempotent")
    return f"{len(values)} words ascending"


def _partition_laws(c: CharacterSet) -> str:
    space = all_words(c.blocklength) if c.universe is Universe.FULL else list(c.words)
    sample = list(c.words)[:PAIR_LIMIT]
    for scheme in schemes_for(c.blocklength):
        zones = equizone_partition(c, scheme)
        members = [w for e in zones for w in e.members]
        _require(all(e.members for e in zones), f"{scheme}: empty equizone")
        _require(len(members) == len(set(members)), f"{scheme}: equizones overlap")
        _require(set(members) == set(space), f"{scheme}: union differs from code")
        where = {w: k for k, e in enumerate(zones) for w in e.members}
        for a in sample:
            _require(equivalent(a, a, scheme), f"{scheme}: not reflexive at {a}")
        for a, b in itertools.combinations(sample, 2):
            rel = equivalent(a, b, scheme)
            _require(rel == equivalent(b, a, scheme), f"{scheme}: not symmetric")
            # same class <=> related, which with the partition gives transitivity
            _require(rel == (where[a] == where[b]), f"{scheme}: relation disagrees with classes")
    return f"schemes {', '.join(map(str, schemes_for(c.blocklength)))}"


def _round_trip(c: CharacterSet) -> str:
    for scheme in schemes_for(c.blocklength):
        _require(reconstruct(presentation(c, scheme)) == c.word_set(), f"{scheme}: mismatch")
    return f"{c.order} words recovered"


def _presentation_count(c: CharacterSet) -> str:
    got = len(all_presentations(c))
    want = 1 if c.blocklength % 2 == 0 else 2
    _require(got == want, f"expected {want}, got {got}")
    return f"{got} presentation(s)"


def _difference_is_sum(c: CharacterSet) -> str:
    sample = list(c.words)[:PAIR_LIMIT]
    for a, b in itertools.product(sample, repeat=2):
        _require(word_diff(a, b) == word_sum(a, b), f"{a} - {b} != {a} + {b}")
    return f"{len(sample) ** 2} pairs"


def _inverses(c: CharacterSet) -> str:
    for w in c.words:
        _require(word_inverse(word_inverse(w)) == w, f"word inverse not involutive at {w}")
    _require(code_inverse(code_inverse(c)) == c, "code inverse not involutive")
    return "involutive"


def _render_round_trip(c: CharacterSet) -> str:
    from .render import context_from_presentation, evaluate, plan_expressions

    rows = 0
    for p in all_presentations(c):
        ctx = context_from_presentation(p)
        plan = plan_expressions(ctx)
        for name, values in ctx.rows:
            _require(evaluate(plan[name], ctx, name) == values, f"{p.scheme}: row {name} misrendered")
            rows += 1
    return f"{rows} rows"


CHECKS: list[tuple[str, Callable[[CharacterSet], str]]] = [
    ("well-order", _well_order),
    ("partition-laws", _partition_laws),
    ("round-trip", _round_trip),
    ("presentation-count", _presentation_count),
    ("difference-equals-sum", _difference_is_sum),
    ("inverse-laws", _inverses),
    ("render-round-trip", _render_round_trip),
]


def run_checks(c: CharacterSet) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        try:
            results.append(CheckResult(name, True, fn(c)))
        except CheckFailed as exc:
            results.append(CheckResult(name, False, str(exc)))
    return results


def closure_summary(c: CharacterSet) -> str:
    """Informational: closure never counts as a failed check."""
    if c.universe is not Universe.LISTED:
        return "n/a (full universe)"
    rep = closure_check(c)
    if rep.closed:
        return "closed, group code"
    w1, w2, total = rep.witness
    return f"not closed: {w1} + {w2} = {total} is not in the code"
