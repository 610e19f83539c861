"""Exact classification of distinguished curves on flag manifolds.

The heavy lifting happens in the compiled extension ``flagcurves._core``;
this package wraps its JSON-string API with plain-dict helpers.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from . import _core
from ._core import DomainInputError, InputError, bracket

__all__ = [
    "InputError",
    "DomainInputError",
    "bracket",
    "span_membership",
    "check_closure",
    "classify",
    "criterion",
    "conjugate",
    "table",
    "run_checks",
    "normal_form",
    "ode_report",
    "coord_change_report",
    "flow_report",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 100_000


def _matrix_json(n: int, entries: Sequence[Sequence[object]], blocks: Optional[Sequence[int]]) -> str:
    payload: dict = {"n": n, "entries": [[str(e) for e in row] for row in entries]}
    if blocks is not None:
        payload["blocks"] = list(blocks)
    return json.dumps(payload)


def classify(
    n: int,
    entries: Sequence[Sequence[object]],
    blocks: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    """Classify the curve generated by a strictly-lower block matrix.

    ``entries`` is an ``n`` by ``n`` array of ints or rational strings such as
    ``"1/2"``.  Returns a dict with a ``status`` key taking one of
    ``"projective"``, ``"affine-only"`` or ``"undetermined"``.
    """
    return json.loads(_core.classify_json(_matrix_json(n, entries, blocks), budget))


def criterion(
    n: int,
    entries: Sequence[Sequence[object]],
    blocks: Optional[Sequence[int]] = None,
) -> dict:
    """Return the polynomial criterion system: unknown names and equations."""
    return json.loads(_core.criterion_json(_matrix_json(n, entries, blocks)))


def conjugate(
    n: int,
    first: Sequence[Sequence[object]],
    second: Sequence[Sequence[object]],
    blocks: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    """Search for a parabolic element conjugating ``first`` into ``second``."""
    payload: dict = {
        "n": n,
        "first": [[str(e) for e in row] for row in first],
        "second": [[str(e) for e in row] for row in second],
    }
    if blocks is not None:
        payload["blocks"] = list(blocks)
    return json.loads(_core.conjugate_json(json.dumps(payload), budget))


def table(budget: int = DEFAULT_BUDGET) -> dict:
    """Reproduce the seven-row classification table with conjugacy checks."""
    return json.loads(_core.table_json(budget, False))


def run_checks(budget: int = DEFAULT_BUDGET, order: int = 24) -> dict:
    """Run every built-in verification item and return the report."""
    return json.loads(_core.checks_json(budget, order, False))


def normal_form(entries: Sequence[Sequence[object]]) -> dict:
    """Normal form of a 3x3 strictly lower matrix under the diagonal action."""
    return json.loads(_core.normal_form_json(_matrix_json(3, entries, None)))


def span_membership(f: str, basis: Sequence[str]) -> Optional[list]:
    """Coordinates of the field ``f`` in the span of ``basis``, or ``None``."""
    return _core.span_membership(f, list(basis))


def check_closure(basis: Sequence[str]) -> dict:
    """Check whether a list of line vector fields closes under the bracket."""
    return json.loads(_core.closure_json(list(basis)))


def ode_report() -> dict:
    """Verification report for the model second-order ODE solutions."""
    return json.loads(_core.ode_json())


def coord_change_report(kind: str, lam: object = 1, order: int = 24) -> dict:
    """Verification report for one coordinate change (kind: exp, tan, tanh)."""
    return json.loads(_core.coord_change_json(kind, str(lam), order))


def flow_report() -> dict:
    """Verification report for the exact flow identities."""
    return json.loads(_core.flow_json())
