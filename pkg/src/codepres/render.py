"""Compact set expressions for decinumer sets, and table output.

Each row of a table is a set of integers drawn from the universe
``T = {0, ..., 2**width - 1}``. A row is written in one of six forms::

    ∅               Empty
    {a,b,c}         Explicit
    T-{a,b}         Complement (plain ``T`` when nothing is removed)
    l_8             Alias of another row
    l_4∪{1}         AliasUnion
    l_4-{0}         AliasDiff

Cost is the number of enumerated integers plus one per reference to ``T``
or to another row. Rows referenced by an alias must themselves use one of
the first three forms, so no alias ever resolves through another alias.
Choosing which rows act as such anchors couples the rows together, so the
whole table is planned at once to minimise total cost; ties are broken by
form (Empty, Alias, Explicit, Complement, AliasUnion, AliasDiff) and then
by lowest alias target.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from .errors import CyclicAlias, UnknownRow
from .presentation import Presentation, decinumer_set

__all__ = [
    "Form",
    "SetExpression",
    "RenderContext",
    "context_from_presentation",
    "compact_expression",
    "plan_expressions",
    "evaluate",
    "format_expression",
    "render_table",
    "row_label",
]

# exhaustive anchor search above this many candidate anchors falls back to MILP
EXHAUSTIVE_LIMIT = 10


class Form(enum.IntEnum):
    # value doubles as the tie-break rank
    EMPTY = 0
    ALIAS = 1
    EXPLICIT = 2
    COMPLEMENT = 3
    ALIAS_UNION = 4
    ALIAS_DIFF = 5


@dataclass(frozen=True)
class SetExpression:
    form: Form
    values: tuple[int, ...] = ()
    row: Optional[str] = None

    @property
    def cost(self) -> int:
        if self.form is Form.EMPTY:
            return 0
        if self.form is Form.EXPLICIT:
            return len(self.values)
        return 1 + len(self.values)

    @property
    def is_alias(self) -> bool:
        return self.row is not None

    def __str__(self) -> str:
        return format_expression(self)

    @classmethod
    def empty(cls) -> SetExpression:
        return cls(Form.EMPTY)

    @classmethod
    def explicit(cls, values: Iterable[int]) -> SetExpression:
        return cls(Form.EXPLICIT, tuple(sorted(values)))

    @classmethod
    def complement(cls, delta: Iterable[int] = ()) -> SetExpression:
        return cls(Form.COMPLEMENT, tuple(sorted(delta)))

    @classmethod
    def alias(cls, row: str) -> SetExpression:
        return cls(Form.ALIAS, (), row)

    @classmethod
    def alias_union(cls, row: str, delta: Iterable[int]) -> SetExpression:
        return cls(Form.ALIAS_UNION, tuple(sorted(delta)), row)

    @classmethod
    def alias_diff(cls, row: str, delta: Iterable[int]) -> SetExpression:
        return cls(Form.ALIAS_DIFF, tuple(sorted(delta)), row)


@dataclass(frozen=True)
class RenderContext:
    """Universe width plus ordered named rows."""

    width: int
    rows: tuple[tuple[str, frozenset[int]], ...]

    def __post_init__(self):
        top = 1 << self.width
        names = [r for r, _ in self.rows]
        if len(set(names)) != len(names):
            raise ValueError("row ids must be unique")
        for name, values in self.rows:
            if any(not 0 <= v < top for v in values):
                raise ValueError(f"row {name} has values outside T")

    @classmethod
    def of(cls, width: int, rows: Union[Mapping[str, Iterable[int]], Sequence[tuple[str, Iterable[int]]]]) -> RenderContext:
        items = rows.items() if isinstance(rows, Mapping) else rows
        return cls(width, tuple((str(k), frozenset(v)) for k, v in items))

    @property
    def universe(self) -> range:
        return range(1 << self.width)

    @property
    def names(self) -> list[str]:
        return [r for r, _ in self.rows]

    def index(self, row: Union[str, int]) -> int:
        if isinstance(row, int) and not isinstance(row, bool):
            if 0 <= row < len(self.rows):
                return row
            raise UnknownRow(row)
        for i, (name, _) in enumerate(self.rows):
            if name == row:
                return i
        raise UnknownRow(row)

    def values(self, row: Union[str, int]) -> frozenset[int]:
        return self.rows[self.index(row)][1]


def row_label(zone, s: int) -> str:
    """Hex digit for 4-bit zones, the zone bits otherwise."""
    return zone.hex() if s == 4 else str(zone)


def context_from_presentation(p: Presentation) -> RenderContext:
    s = p.s
    return RenderContext(
        p.blocklength - s,
        tuple((row_label(e.zone, s), frozenset(decinumer_set(e))) for e in p.entries),
    )


# -- planning -------------------------------------------------------------

def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


# a candidate is (form, delta mask, cost); expressions are built only for winners

def _base_candidate(mask: int, full: int, size: int) -> tuple[Form, int, int]:
    if mask == 0:
        return Form.EMPTY, 0, 0
    k = _popcount(mask)
    if 1 + size - k < k:
        return Form.COMPLEMENT, full & ~mask, 1 + size - k
    return Form.EXPLICIT, mask, k


def _alias_candidate(mask: int, target_mask: int) -> Optional[tuple[Form, int, int]]:
    if mask == target_mask:
        return Form.ALIAS, 0, 1
    if target_mask & ~mask == 0:
        delta = mask & ~target_mask
        return Form.ALIAS_UNION, delta, 1 + _popcount(delta)
    if mask & ~target_mask == 0:
        delta = target_mask & ~mask
        return Form.ALIAS_DIFF, delta, 1 + _popcount(delta)
    return None


def _expression(form: Form, delta: int, target: Optional[str]) -> SetExpression:
    return SetExpression(form, _bits(delta), target)


class _Planner:
    """Chooses anchor rows and per-row forms for one context."""

    def __init__(self, ctx: RenderContext):
        self.ctx = ctx
        self.names = ctx.names
        nrows = len(self.names)
        size = 1 << ctx.width
        full = (1 << size) - 1
        masks = [sum(1 << v for v in vals) for _, vals in ctx.rows]
        # weights: cost dominates, then form rank, then alias target index
        self.tier = nrows + 1
        self.big = 6 * self.tier * self.tier + 1
        self.base: list[tuple[Form, int]] = []
        self.base_w: list[int] = []
        for m in masks:
            form, delta, cost = _base_candidate(m, full, size)
            self.base.append((form, delta))
            self.base_w.append(cost * self.big + int(form) * self.tier)
        # edges[i] = [(j, form, delta, weight)] for aliases that beat row i's base form
        self.edges: list[list[tuple[int, Form, int, int]]] = []
        for i, m in enumerate(masks):
            row_edges = []
            for j, t in enumerate(masks):
                if i == j or t == 0:
                    continue
                cand = _alias_candidate(m, t)
                if cand is None:
                    continue
                form, delta, cost = cand
                w = cost * self.big + int(form) * self.tier + j + 1
                if w < self.base_w[i]:
                    row_edges.append((j, form, delta, w))
            self.edges.append(row_edges)
        self.hubs = sorted({e[0] for row in self.edges for e in row})

    def _weight(self, expr: SetExpression, target: Optional[int]) -> int:
        tail = 0 if target is None else target + 1
        return expr.cost * self.big + int(expr.form) * self.tier + tail

    def _build(self, picks: Sequence[Optional[tuple[int, Form, int, int]]]) -> list[SetExpression]:
        out = []
        for i, pick in enumerate(picks):
            if pick is None:
                form, delta = self.base[i]
                out.append(_expression(form, delta, None))
            else:
                j, form, delta, _ = pick
                out.append(_expression(form, delta, self.names[j]))
        return out

    def _assign(self, anchors: frozenset[int]) -> tuple[int, list]:
        total = 0
        picks = []
        for i, base_w in enumerate(self.base_w):
            best, best_w = None, base_w
            if i not in anchors:
                for edge in self.edges[i]:
                    if edge[0] in anchors and edge[3] < best_w:
                        best, best_w = edge, edge[3]
            total += best_w
            picks.append(best)
        return total, picks

    def solve(self) -> list[SetExpression]:
        if len(self.hubs) <= EXHAUSTIVE_LIMIT:
            return self.solve_exhaustive()
        return self.solve_milp()

    def solve_exhaustive(self) -> list[SetExpression]:
        best = None
        for r in range(len(self.hubs) + 1):
            for combo in itertools.combinations(self.hubs, r):
                total, picks = self._assign(frozenset(combo))
                if best is None or total < best[0]:
                    best = (total, picks)
        return self._build(best[1])

    def solve_milp(self) -> list[SetExpression]:
        nrows = len(self.base)
        # columns: one "base" choice per row, then one per alias edge
        cols: list[tuple[int, Optional[tuple]]] = [(i, None) for i in range(nrows)]
        weights = list(self.base_w)
        for i, row_edges in enumerate(self.edges):
            for edge in row_edges:
                cols.append((i, edge))
                weights.append(edge[3])
        ncol = len(cols)
        # rows 0..nrows-1: exactly one choice per row; row k >= nrows: edge k <= base of its target
        a = np.zeros((ncol, ncol))
        lo = np.full(ncol, -np.inf)
        hi = np.zeros(ncol)
        for k, (i, _) in enumerate(cols):
            a[i, k] = 1
        lo[:nrows] = hi[:nrows] = 1
        for k in range(nrows, ncol):
            a[k, k] = 1
            a[k, cols[k][1][0]] = -1
        res = milp(
            np.array(weights, dtype=float),
            constraints=LinearConstraint(a, lo, hi),
            integrality=np.ones(ncol),
            bounds=Bounds(0, 1),
        )
        picks: list = [None] * nrows
        if not res.success:  # pragma: no cover - all-base is always feasible
            return self._build(picks)
        for k in range(nrows, ncol):
            if res.x[k] > 0.5:
                i, edge = cols[k]
                picks[i] = edge
        return self._build(picks)


@functools.lru_cache(maxsize=256)
def plan_expressions(ctx: RenderContext) -> dict[str, SetExpression]:
    """Expression for every row of ``ctx``, planned jointly."""
    chosen = _Planner(ctx).solve()
    return dict(zip(ctx.names, chosen))


def compact_expression(row: Union[str, int], ctx: RenderContext) -> SetExpression:
    i = ctx.index(row)
    return plan_expressions(ctx)[ctx.names[i]]


def evaluate(expr: SetExpression, ctx: RenderContext, row: Union[str, int, None] = None) -> frozenset[int]:
    """Set denoted by ``expr``; ``row`` names the row being evaluated, if any."""
    if expr.form is Form.EMPTY:
        return frozenset()
    if expr.form is Form.EXPLICIT:
        return frozenset(expr.values)
    if expr.form is Form.COMPLEMENT:
        return frozenset(ctx.universe) - frozenset(expr.values)
    target = ctx.index(expr.row)
    if row is not None and ctx.index(row) == target:
        raise CyclicAlias(expr.row)
    base = ctx.rows[target][1]
    if expr.form is Form.ALIAS:
        return base
    if expr.form is Form.ALIAS_UNION:
        return base | frozenset(expr.values)
    return base - frozenset(expr.values)


def _braces(values: Sequence[int]) -> str:
    return "{" + ",".join(map(str, values)) + "}"


def format_expression(expr: SetExpression) -> str:
    f = expr.form
    if f is Form.EMPTY:
        return "∅"
    if f is Form.EXPLICIT:
        return _braces(expr.values)
    if f is Form.COMPLEMENT:
        return "T-" + _braces(expr.values) if expr.values else "T"
    ref = f"l_{expr.row}"
    if f is Form.ALIAS:
        return ref
    if f is Form.ALIAS_UNION:
        return ref + "∪" + _braces(expr.values)
    return ref + "-" + _braces(expr.values)


def render_table(p: Presentation) -> str:
    """Tab-separated decinumer table, one row per equizone."""
    ctx = context_from_presentation(p)
    plan = plan_expressions(ctx)
    lines = ["i\tl_i\t|l_i|"]
    for name, values in ctx.rows:
        lines.append(f"{name}\t{format_expression(plan[name])}\t{len(values)}")
    return "\n".join(lines) + "\n"
