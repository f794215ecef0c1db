"""Case tables for the three outage probabilities.

Every row carries a stable identifier, the message it belongs to, a tuple
of condition atoms over the boundary constants and the tabulated outage
expression.  Atoms and expressions are small Python expressions over the
names ``C3`` ... ``C9``, ``L`` (half room width), ``L2 = L**2``, ``Dy``,
``d``, ``th2``, ``eg2`` (``eta*gamma2``), the guarded square root ``rt`` and
``phi1`` ... ``phi4``.  They are parsed once, checked against a whitelist of
AST nodes, and compiled.

The rows are used for two things: naming the branch a configuration falls
in (``lookup``) and, in literal mode, evaluating the tabulated expression
as printed (``evaluate_literal``).  Probability values reported by the
package come from :func:`pinch_rsma.closed_form.derive`, which the test
suite checks against every reachable row.

``SUPPLEMENTARY_ROWS`` close cases the tables leave open; they are tried
before the main tables.
"""

from __future__ import annotations

import ast
import math
from functools import lru_cache
from typing import NamedTuple

from . import special
from .errors import InconsistencyError

MESSAGES = ("x1a", "xb", "x2a")


class Row(NamedTuple):
    """One case-table row.

    ``expression`` is the verified outage expression; ``printed`` holds the
    tabulated text when it differs (``None`` otherwise).
    """

    row_id: str
    message: str
    conditions: tuple
    expression: str
    printed: str | None = None

    @property
    def literal_expression(self) -> str:
        return self.expression if self.printed is None else self.printed


_ALLOWED_NODES = (
    ast.Expression, ast.BoolOp, ast.And, ast.Or, ast.Compare, ast.BinOp, ast.UnaryOp,
    ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.USub, ast.Lt, ast.LtE, ast.Gt,
    ast.GtE, ast.Eq, ast.Call, ast.Name, ast.Load, ast.Constant,
)
_CONDITION_NAMES = frozenset({"C3", "C4", "C5", "C6", "C7", "C8", "C9", "L", "L2", "Dy", "d",
                              "th2", "eg2", "rt"})
_EXPRESSION_NAMES = _CONDITION_NAMES | {"phi1", "phi2", "phi3", "phi4"}


@lru_cache(maxsize=None)
def compile_formula(text: str, allow_phi: bool = False):
    """Compile a row atom or expression after validating its syntax tree."""
    tree = ast.parse(text, mode="eval")
    names = _EXPRESSION_NAMES if allow_phi else _CONDITION_NAMES
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise ValueError(f"disallowed syntax {type(node).__name__} in {text!r}")
        if isinstance(node, ast.Name) and node.id not in names:
            raise ValueError(f"unknown name {node.id!r} in {text!r}")
        if isinstance(node, ast.Call) and not isinstance(node.func, ast.Name):
            raise ValueError(f"only plain function calls are allowed in {text!r}")
    return compile(tree, f"<row {text}>", "eval")


def rt(x: float) -> float:
    """Square root that maps negative arguments to NaN (so comparisons are False)."""
    return math.sqrt(x) if x >= 0 else math.nan


def _eval(code, env: dict) -> object:
    return eval(code, {"__builtins__": {}}, env)  # noqa: S307 - whitelisted AST


def condition_env(k) -> dict:
    env = k.namespace()
    env["rt"] = rt
    return env


@lru_cache(maxsize=None)
def _row_code(conditions: tuple):
    for atom in conditions:
        compile_formula(atom)
    return compile_formula(" and ".join(f"({a})" for a in conditions))


def row_matches(row: Row, env: dict) -> bool:
    return bool(_eval(_row_code(row.conditions), env))


@lru_cache(maxsize=None)
def rows_for(message: str) -> tuple:
    if message not in MESSAGES:
        raise ValueError(f"unknown message {message!r}")
    return tuple(r for r in SUPPLEMENTARY_ROWS + ROWS if r.message == message)


def matches(k, message: str) -> list:
    """All rows (supplementary first) whose conditions hold for ``k``."""
    env = condition_env(k)
    return [r for r in rows_for(message) if row_matches(r, env)]


def lookup(k, message: str) -> Row:
    """First matching row; raises :class:`InconsistencyError` if none does."""
    env = condition_env(k)
    for row in rows_for(message):
        if row_matches(row, env):
            return row
    raise InconsistencyError(f"no {message} table row matches constants {k}")


def expression_env(k, literal: bool = False) -> dict:
    """Namespace binding ``phi1`` ... ``phi4`` to the coefficients of ``k``.

    With ``literal=True`` the Φ functions follow the tabulated closed forms
    verbatim instead of the verified ones.
    """
    env = condition_env(k)
    c1, c2, dy = k.coeffs1, k.coeffs2, k.dy
    if literal:
        env.update(
            phi1=lambda x, y: special.phi1_literal(x, y, c1, c2, dy),
            phi2=lambda x, y: special.phi2_literal(x, y, c2, dy),
            phi3=lambda x, y, z: special.phi3_literal(x, y, z, c1, dy),
            phi4=lambda x, y: special.phi4_literal(x, y, c1, dy),
        )
    else:
        env.update(
            phi1=lambda x, y: special.phi1(x, y, c1, c2, dy),
            phi2=lambda x, y: special.phi2(x, y, c2, dy),
            phi3=lambda x, y, z: special.phi3(x, y, z, c1, dy),
            phi4=lambda x, y: special.phi4(x, y, c1, dy),
        )
    return env


def evaluate_row(row: Row, k, literal: bool = False) -> float:
    """Evaluate a row's expression; ``literal`` uses the tabulated text and Φ forms.

    Literal evaluation may raise (malformed rows, arguments outside the
    domain of the printed forms).
    """
    text = row.literal_expression if literal else row.expression
    return float(_eval(compile_formula(text, True), expression_env(k, literal)))


SUPPLEMENTARY_ROWS = (
    # sqrt(C6) >= L (including C6 = +inf when eta*gamma2 <= d**2*theta2): C2 < L**2
    # has no admissible y2 > 0 on the whole room, so xb and x2a always fail.
    Row("xb.s.r01", "xb", ("C6 >= L2",), "1"),
    Row("x2a.s.r01", "x2a", ("C6 >= L2",), "1"),
)

ROWS = (
    Row('x1a.r01', 'x1a',
        ('C3 < 0',),
        '1'),
    Row('x1a.r02', 'x1a',
        ('C3 >= 0', 'C3 < L2', 'C4 >= 0', 'C4 < L2', 'C5 >= 0', 'C5 < L2'),
        'phi4(rt(C4), rt(C5)) + (2 / Dy) * (L - rt(C4))'),
    Row('x1a.r03', 'x1a',
        ('C3 >= 0', 'C3 < L2', 'C4 >= 0', 'C4 < L2', 'C5 < 0'),
        'phi4(rt(C4), 0) + (2 / Dy) * (L - rt(C4))'),
    Row('x1a.r04', 'x1a',
        ('C3 >= 0', 'C3 < L2', 'C4 < 0'),
        '1'),
    Row('x1a.r05', 'x1a',
        ('C3 >= L2', 'C4 >= L2', 'C5 >= L2'),
        '0'),
    Row('x1a.r06', 'x1a',
        ('C3 >= L2', 'C4 >= L2', 'C5 >= 0', 'C5 < L2'),
        'phi4(L, rt(C5))'),
    Row('x1a.r07', 'x1a',
        ('C3 >= L2', 'C4 >= L2', 'C5 < 0'),
        'phi4(L, 0)'),
    Row('x1a.r08', 'x1a',
        ('C3 >= L2', 'C4 >= 0', 'C4 < L2', 'C5 >= 0', 'C5 < L2'),
        'phi4(rt(C4), rt(C5)) + (2 / Dy) * (L - rt(C4))'),
    Row('x1a.r09', 'x1a',
        ('C3 >= L2', 'C4 >= 0', 'C4 < L2', 'C5 < 0'),
        'phi4(rt(C4), 0) + (2 / Dy) * (L - rt(C4))'),
    Row('x1a.r10', 'x1a',
        ('C3 >= L2', 'C4 < 0'),
        '1'),
    Row('xb.c6neg.r01', 'xb',
        ('C6 < 0', 'C7 < 0', 'C4 < 0'),
        '1'),
    Row('xb.c6neg.r02', 'xb',
        ('C6 < 0', 'C7 < 0', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) <= L', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - phi3(rt(C4), rt(C5), L) - 2 * rt(C5) / Dy'),
    Row('xb.c6neg.r03', 'xb',
        ('C6 < 0', 'C7 < 0', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) <= L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 <= C4'),
        '1 - phi1(rt(C9), rt(C5)) - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r04', 'xb',
        ('C6 < 0', 'C7 < 0', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) <= L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C5)) - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r05', 'xb',
        ('C6 < 0', 'C7 < 0', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) <= L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 <= 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r06', 'xb',
        ('C6 < 0', 'C7 < 0', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - phi3(rt(C4), 0, L)'),
    Row('xb.c6neg.r07', 'xb',
        ('C6 < 0', 'C7 < 0', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 <= C4'),
        '1 - phi1(rt(C9), 0)'),
    Row('xb.c6neg.r08', 'xb',
        ('C6 < 0', 'C7 < 0', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), 0)'),
    Row('xb.c6neg.r09', 'xb',
        ('C6 < 0', 'C7 < 0', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 <= 0'),
        '1'),
    Row('xb.c6neg.r10', 'xb',
        ('C6 < 0', 'C7 < 0', 'rt(C4) >= L', 'rt(C5) >= L', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '0'),
    Row('xb.c6neg.r11', 'xb',
        ('C6 < 0', 'C7 < 0', 'rt(C4) >= L', 'rt(C5) >= L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2'),
        '1 - phi2(L, 0)'),
    Row('xb.c6neg.r12', 'xb',
        ('C6 < 0', 'C7 < 0', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) <= L', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - phi3(L, rt(C5), L) - 2 * rt(C5) / Dy',
        printed='1 - phi3(rt(C9), rt(C5), L) - 2 * rt(C5) / Dy'),
    Row('xb.c6neg.r13', 'xb',
        ('C6 < 0', 'C7 < 0', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) <= L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi1(rt(C9), rt(C5)) - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r14', 'xb',
        ('C6 < 0', 'C7 < 0', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) <= L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'rt(C9) > L'),
        '1 - phi1(L, rt(C5)) - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r15', 'xb',
        ('C6 < 0', 'C7 < 0', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) <= L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r16', 'xb',
        ('C6 < 0', 'C7 < 0', 'rt(C4) >= L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - phi3(L, 0, L)'),
    Row('xb.c6neg.r17', 'xb',
        ('C6 < 0', 'C7 < 0', 'rt(C4) >= L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi1(rt(C9), 0)'),
    Row('xb.c6neg.r18', 'xb',
        ('C6 < 0', 'C7 < 0', 'rt(C4) >= L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi1(L, 0)'),
    Row('xb.c6neg.r19', 'xb',
        ('C6 < 0', 'C7 < 0', 'rt(C4) >= L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 < 0'),
        '1'),
    Row('xb.c6neg.r20', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 < 0'),
        '1'),
    Row('xb.c6neg.r21', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= 0', 'C4 < C7', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), rt(C5)) - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r22', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= 0', 'C4 < C7', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C5)) - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r23', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= 0', 'C4 < C7', 'C5 >= 0', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r24', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= 0', 'C4 < C7', 'C5 < 0', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), 0)'),
    Row('xb.c6neg.r25', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= 0', 'C4 < C7', 'C5 < 0', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), 0)'),
    Row('xb.c6neg.r26', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= 0', 'C4 < C7', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('xb.c6neg.r27', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) <= L', 'C5 >= C7', 'rt(C5) < L'),
        '1 - phi2(rt(C7), 0) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(rt(C4), rt(C5), L)'),
    Row('xb.c6neg.r28', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) <= L', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6neg.r29', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) <= L', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C7), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6neg.r30', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) <= L', 'C5 >= 0', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), 0) - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6neg.r31', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) <= L', 'C5 < 0', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), 0) - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6neg.r32', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) <= L', 'C5 < 0', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), 0) - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6neg.r33', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) <= L', 'C5 < 0', 'C9 < 0'),
        '1 - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6neg.r34', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'rt(C5) >= L'),
        '1 - phi2(rt(C7), 0) - (2 / Dy) * (L - rt(C7))'),
    Row('xb.c6neg.r35', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 >= C7', 'rt(C5) < L'),
        '1 - phi2(rt(C7), 0) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(L, rt(C5), L)'),
    Row('xb.c6neg.r36', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5)) - phi3(L, rt(C7), L)'),
    Row('xb.c6neg.r37', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C7), rt(C5)) - phi3(L, rt(C7), L)'),
    Row('xb.c6neg.r38', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 >= 0', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), 0) - phi3(L, rt(C7), L)'),
    Row('xb.c6neg.r39', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 < 0', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), 0) - phi3(L, rt(C7), L)'),
    Row('xb.c6neg.r40', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 < 0', 'C9 >= 0', 'C9 > C7'),
        '1 - phi1(rt(C7), 0) - phi3(L, rt(C7), L)'),
    Row('xb.c6neg.r41', 'xb',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 < 0', 'C9 < 0'),
        '1 - phi3(L, rt(C7), L)'),
    Row('xb.c6neg.r42', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'C4 < 0'),
        '1'),
    Row('xb.c6neg.r43', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) < L', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('xb.c6neg.r44', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) < L', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C4), rt(C5))'),
    Row('xb.c6neg.r45', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r46', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), 0)'),
    Row('xb.c6neg.r47', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), 0)'),
    Row('xb.c6neg.r48', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('xb.c6neg.r49', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C4) >= L', 'rt(C5) >= L'),
        '1 - phi2(L, 0)'),
    Row('xb.c6neg.r50', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('xb.c6neg.r51', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) > L'),
        '1 - phi2(rt(C5), 0) - phi1(L, rt(C5))'),
    Row('xb.c6neg.r52', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('xb.c6neg.r53', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C4) >= L', 'C5 < 0', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi1(rt(C9), 0)'),
    Row('xb.c6neg.r54', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C4) >= L', 'C5 < 0', 'C9 >= 0', 'rt(C9) > L'),
        '1 - phi1(L)'),
    Row('xb.c6neg.r55', 'xb',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C4) >= L', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('xb.c6pos.r01', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C4 < C6'),
        '1'),
    Row('xb.c6pos.r02', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('xb.c6pos.r03', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C4), rt(C5))'),
    Row('xb.c6pos.r04', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('xb.c6pos.r05', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 < C4'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('xb.c6pos.r06', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C6))'),
    Row('xb.c6pos.r07', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('xb.c6pos.r08', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C4) >= L', 'rt(C5) >= L'),
        '1 - phi2(L, rt(C6))',
        printed='1 - (2 / Dy) * (L - rt(C6))'),
    Row('xb.c6pos.r09', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C4) >= L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))',
        printed='1 - (2 / Dy) * (rt(C5) - rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('xb.c6pos.r10', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C4) >= L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(L, rt(C5))',
        printed='1 - (2 / Dy) * (rt(C5) - rt(C6)) - phi1(L, rt(C5))'),
    Row('xb.c6pos.r11', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C4) >= L', 'C5 >= C6', 'rt(C5) < L', 'C9 < 0'),
        '1 - (2 / Dy) * (rt(C5) - rt(C6))'),
    Row('xb.c6pos.r12', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C4) >= L', 'C5 < C6', 'C9 >= 0', 'rt(C9) < L'),
        '1',
        printed='1 - phi3(rt(C9), rt(C6), L)'),
    Row('xb.c6pos.r13', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C4) >= L', 'C5 < C6', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi3(L, rt(C6), L)'),
    Row('xb.c6pos.r14', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C4) >= L', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('xb.c6pos.r15', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 < C6'),
        '1'),
    Row('xb.c6pos.r16', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C6', 'C4 < C7', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('xb.c6pos.r17', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C6', 'C4 < C7', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C4), rt(C5))'),
    Row('xb.c6pos.r18', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C6', 'C4 < C7', 'C5 >= C6', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('xb.c6pos.r19', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C6', 'C4 < C7', 'C5 < C6', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), rt(C6))'),
    Row('xb.c6pos.r20', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C6', 'C4 < C7', 'C5 < C6', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C6))'),
    Row('xb.c6pos.r21', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C6', 'C4 < C7', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('xb.c6pos.r22', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= C7', 'rt(C5) < L'),
        '1 - phi2(rt(C7), rt(C6)) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(rt(C4), rt(C5), L)'),
    Row('xb.c6pos.r23', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6pos.r24', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C7), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6pos.r25', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= C6', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6)) - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6pos.r26', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), rt(C6)) - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6pos.r27', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), rt(C6)) - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6pos.r28', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C4 >= C7', 'rt(C4) < L', 'C5 < C6', 'C9 < 0'),
        '1 - phi3(rt(C4), rt(C7), L)'),
    Row('xb.c6pos.r29', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'rt(C5) >= L'),
        '1 - phi2(rt(C7), rt(C6)) - (2 / Dy) * (L - rt(C7))'),
    Row('xb.c6pos.r30', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 >= C7', 'rt(C5) < L'),
        '1 - phi2(rt(C7), rt(C6)) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(L, rt(C5), L)'),
    Row('xb.c6pos.r31', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5)) - phi3(L, rt(C7), L)'),
    Row('xb.c6pos.r32', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C7), rt(C5)) - phi3(L, rt(C7), L)'),
    Row('xb.c6pos.r33', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 >= C6', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6)) - phi3(L, rt(C7), L)'),
    Row('xb.c6pos.r34', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 < C6', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), rt(C6)) - phi3(L, rt(C7), L)'),
    Row('xb.c6pos.r35', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 < C6', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), rt(C6)) - phi3(L, rt(C7), L)'),
    Row('xb.c6pos.r36', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C4) >= L', 'C5 < C6', 'C9 < 0'),
        '1 - phi3(L, rt(C7), L)'),
    Row('xb.c6pos.r37', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C4 < C6'),
        '1'),
    Row('xb.c6pos.r38', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('xb.c6pos.r39', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C4), rt(C5))'),
    Row('xb.c6pos.r40', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('xb.c6pos.r41', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 < C4'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('xb.c6pos.r42', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C6))'),
    Row('xb.c6pos.r43', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('xb.c6pos.r44', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C4) > L', 'rt(C5) >= L'),
        '1 - phi2(L, rt(C6))'),
    Row('xb.c6pos.r45', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C4) > L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('xb.c6pos.r46', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C4) > L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(L, rt(C5))'),
    Row('xb.c6pos.r47', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C4) > L', 'C5 >= C6', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('xb.c6pos.r48', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C4) > L', 'C5 < C6', 'C9 >= 0', 'rt(C9) < L'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('xb.c6pos.r49', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C4) > L', 'C5 < C6', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi1(L, rt(C6))'),
    Row('xb.c6pos.r50', 'xb',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C4) > L', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.a.r01', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 < 0'),
        '1'),
    Row('x2a.c6neg.a.r02', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 < 0'),
        '1'),
    Row('x2a.c6neg.a.r03', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 >= 0', 'C5 < C8', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - phi3(rt(C4), rt(C5), L) - 2 * rt(C5) / Dy'),
    Row('x2a.c6neg.a.r04', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 >= 0', 'C5 < C8', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), rt(C5)) - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.a.r05', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 >= 0', 'C5 < C8', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C5)) - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.a.r06', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 >= 0', 'C5 < C8', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.a.r07', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - phi3(rt(C4), 0, L)'),
    Row('x2a.c6neg.a.r08', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.a.r09', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), 0)'),
    Row('x2a.c6neg.a.r10', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.a.r11', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C8', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - 2 * rt(C8) / Dy'),
    Row('x2a.c6neg.a.r12', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C8', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2'),
        '1 - phi2(rt(C8), 0)'),
    Row('x2a.c6neg.a.r13', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 >= 0', 'C5 < C8', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - 2 * rt(C5) / Dy - phi3(rt(C8), rt(C5), L)'),
    Row('x2a.c6neg.a.r14', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 >= 0', 'C5 < C8', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 < C8'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6neg.a.r15', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 >= 0', 'C5 < C8', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C8), rt(C5))'),
    Row('x2a.c6neg.a.r16', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 >= 0', 'C5 < C8', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.a.r17', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - phi3(rt(C8), 0, L)'),
    Row('x2a.c6neg.a.r18', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 < C8'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.a.r19', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi1(rt(C8), 0)'),
    Row('x2a.c6neg.a.r20', 'x2a',
        ('C6 < 0', 'C7 < 0', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.a.r21', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'C4 < 0'),
        '1'),
    Row('x2a.c6neg.a.r22', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) < L', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - 2 * rt(C5) / Dy - phi3(rt(C4), rt(C5), L)'),
    Row('x2a.c6neg.a.r23', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) < L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6neg.a.r24', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) < L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6neg.a.r25', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) < L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.a.r26', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - phi3(rt(C4), 0, L)'),
    Row('x2a.c6neg.a.r27', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.a.r28', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), 0)'),
    Row('x2a.c6neg.a.r29', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.a.r30', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'rt(C5) >= L', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '0'),
    Row('x2a.c6neg.a.r31', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'rt(C5) >= L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2'),
        '1 - phi2(L, 0)'),
    Row('x2a.c6neg.a.r32', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) < L', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - 2 * rt(C5) / Dy - phi3(L, rt(C5), L)'),
    Row('x2a.c6neg.a.r33', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) < L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6neg.a.r34', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) < L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi2(rt(C5), 0) - phi1(L, rt(C5))'),
    Row('x2a.c6neg.a.r35', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) < L', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.a.r36', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) < 4 * eg2'),
        '1 - phi3(L, 0, L)'),
    Row('x2a.c6neg.a.r37', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.a.r38', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi1(L, 0)'),
    Row('x2a.c6neg.a.r39', 'x2a',
        ('C6 < 0', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < 0', 'th2 * (4 * d ** 2 + Dy ** 2) >= 4 * eg2', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.b.r01', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 < 0'),
        '1'),
    Row('x2a.c6neg.b.r02', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 < 0'),
        '1'),
    Row('x2a.c6neg.b.r03', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= 0', 'C4 < C8', 'C5 >= 0', 'C5 < C8', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), rt(C5)) - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.b.r04', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= 0', 'C4 < C8', 'C5 >= 0', 'C5 < C8', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C5)) - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.b.r05', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= 0', 'C4 < C8', 'C5 >= 0', 'C5 < C8', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.b.r06', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= 0', 'C4 < C8', 'C5 < 0', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.b.r07', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= 0', 'C4 < C8', 'C5 < 0', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), 0)'),
    Row('x2a.c6neg.b.r08', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= 0', 'C4 < C8', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.b.r09', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= C8', 'C5 >= C8'),
        '1 - phi2(rt(C8), 0)'),
    Row('x2a.c6neg.b.r10', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= C8', 'C5 >= 0', 'C5 < C8', 'C9 >= 0', 'C9 < C8'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6neg.b.r11', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= C8', 'C5 >= 0', 'C5 < C8', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C8), rt(C5))'),
    Row('x2a.c6neg.b.r12', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= C8', 'C5 >= 0', 'C5 < C8', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.b.r13', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= C8', 'C5 < 0', 'C9 >= 0', 'C9 < C8'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.b.r14', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= C8', 'C5 < 0', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi1(rt(C8), 0)'),
    Row('x2a.c6neg.b.r15', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= 0', 'C8 < C7', 'C4 >= C8', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.b.r16', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 < 0'),
        '1'),
    Row('x2a.c6neg.b.r17', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= 0', 'C4 < C7', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6neg.b.r18', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= 0', 'C4 < C7', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6neg.b.r19', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= 0', 'C4 < C7', 'C5 >= 0', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.b.r20', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= 0', 'C4 < C7', 'C5 < 0', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.b.r21', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= 0', 'C4 < C7', 'C5 < 0', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), 0)'),
    Row('x2a.c6neg.b.r22', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= 0', 'C4 < C7', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.b.r23', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 >= C7', 'C5 < C8'),
        '1 - phi2(rt(C7), 0) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(rt(C4), rt(C5), L)'),
    Row('x2a.c6neg.b.r24', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r25', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C7), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r26', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 >= 0', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), 0) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r27', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 < 0', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), 0) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r28', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 < 0', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), 0) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r29', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 < 0', 'C9 < 0'),
        '1 - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r30', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C8'),
        '1 - phi2(rt(C7), 0) - ((2 * (rt(C8) - rt(C7))) / (Dy))'),
    Row('x2a.c6neg.b.r31', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C7', 'C5 < C8'),
        '1 - phi2(rt(C7), 0) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(rt(C8), rt(C5), L)'),
    Row('x2a.c6neg.b.r32', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5)) - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6neg.b.r33', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C7), rt(C5)) - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6neg.b.r34', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 >= 0', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), 0) - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6neg.b.r35', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 < 0', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), 0) - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6neg.b.r36', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 < 0', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), 0) - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6neg.b.r37', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 < 0', 'C9 < 0'),
        '1 - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6neg.b.r38', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 < 0'),
        '1'),
    Row('x2a.c6neg.b.r39', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= 0', 'C4 < C7', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6neg.b.r40', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= 0', 'C4 < C7', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6neg.b.r41', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= 0', 'C4 < C7', 'C5 >= 0', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.b.r42', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= 0', 'C4 < C7', 'C5 < 0', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.b.r43', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= 0', 'C4 < C7', 'C5 < 0', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), 0)'),
    Row('x2a.c6neg.b.r44', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= 0', 'C4 < C7', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.b.r45', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= C7', 'rt(C5) < L'),
        '1 - phi2(rt(C7), 0) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(rt(C4), rt(C5), L)'),
    Row('x2a.c6neg.b.r46', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r47', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C7), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r48', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= 0', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), 0) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r49', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 < 0', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), 0) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r50', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 < 0', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), 0) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r51', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 < 0', 'C9 < 0'),
        '1 - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6neg.b.r52', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'rt(C5) >= L'),
        '1 - phi2(rt(C7), 0) - 2 * (L - rt(C7)) / Dy',
        printed='1 - phi2(rt(C7), 0)'),
    Row('x2a.c6neg.b.r53', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C7', 'rt(C5) < L'),
        '1 - phi2(rt(C7), 0) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(L, rt(C5), L)'),
    Row('x2a.c6neg.b.r54', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5)) - phi3(L, rt(C7), L)'),
    Row('x2a.c6neg.b.r55', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= 0', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C7), rt(C5)) - phi3(L, rt(C7), L)'),
    Row('x2a.c6neg.b.r56', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= 0', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), 0) - phi3(L, rt(C7), L)'),
    Row('x2a.c6neg.b.r57', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < 0', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), 0) - phi3(L, 0, L)'),
    Row('x2a.c6neg.b.r58', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < 0', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), 0) - phi3(L, 0, L)'),
    Row('x2a.c6neg.b.r59', 'x2a',
        ('C6 < 0', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < 0', 'C9 < 0'),
        '1 - phi3(L, 0, L)'),
    Row('x2a.c6neg.c.r01', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 < 0'),
        '1'),
    Row('x2a.c6neg.c.r02', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 < 0'),
        '1'),
    Row('x2a.c6neg.c.r03', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 >= 0', 'C5 < C8', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6neg.c.r04', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 >= 0', 'C5 < C8', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6neg.c.r05', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 >= 0', 'C5 < C8', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.c.r06', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 < 0', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.c.r07', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 < 0', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), 0)'),
    Row('x2a.c6neg.c.r08', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= 0', 'C4 < C8', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.c.r09', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C8'),
        '1 - phi2(rt(C8), 0)'),
    Row('x2a.c6neg.c.r10', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 >= 0', 'C5 < C8', 'C9 >= 0', 'C9 < C8'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6neg.c.r11', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 >= 0', 'C5 < C8', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C8), rt(C5))'),
    Row('x2a.c6neg.c.r12', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 >= 0', 'C5 < C8', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.c.r13', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 < 0', 'C9 >= 0', 'C9 < C8'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.c.r14', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 < 0', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi1(rt(C8), 0)'),
    Row('x2a.c6neg.c.r15', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'C8 >= 0', 'rt(C8) < L', 'C4 >= C8', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.c.r16', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 < 0'),
        '1'),
    Row('x2a.c6neg.c.r17', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) < L', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6neg.c.r18', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) < L', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6neg.c.r19', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 >= 0', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.c.r20', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.c.r21', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), 0)'),
    Row('x2a.c6neg.c.r22', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= 0', 'rt(C4) < L', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('x2a.c6neg.c.r23', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'rt(C5) >= L'),
        '1 - phi2(L, 0)'),
    Row('x2a.c6neg.c.r24', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi2(rt(C5), 0) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6neg.c.r25', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi2(rt(C5), 0) - phi1(L, rt(C5))'),
    Row('x2a.c6neg.c.r26', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= 0', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), 0)'),
    Row('x2a.c6neg.c.r27', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < 0', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi1(rt(C9), 0)'),
    Row('x2a.c6neg.c.r28', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < 0', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi1(L, 0)'),
    Row('x2a.c6neg.c.r29', 'x2a',
        ('C6 < 0', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < 0', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.a.r01', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 < C6'),
        '1'),
    Row('x2a.c6pos.a.r02', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 < C6'),
        '1'),
    Row('x2a.c6pos.a.r03', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.a.r04', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6pos.a.r05', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 >= C6', 'C5 < C8', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.a.r06', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 < C6', 'C9 >= 0', 'C9 < C4'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.a.r07', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 < C6', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C6))'),
    Row('x2a.c6pos.a.r08', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.a.r09', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C8'),
        '1 - phi2(rt(C8), rt(C6))'),
    Row('x2a.c6pos.a.r10', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 < C8'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.a.r11', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C8), rt(C5))'),
    Row('x2a.c6pos.a.r12', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C6', 'C5 < C8', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.a.r13', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 < C6', 'C9 >= 0', 'C9 < C8'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.a.r14', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 < C6', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi1(rt(C8), rt(C6))'),
    Row('x2a.c6pos.a.r15', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.a.r16', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'C4 < C6'),
        '1'),
    Row('x2a.c6pos.a.r17', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.a.r18', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6pos.a.r19', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.a.r20', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 < C4'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.a.r21', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C6))'),
    Row('x2a.c6pos.a.r22', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.a.r23', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'rt(C5) >= L'),
        '1 - phi2(L, rt(C6))'),
    Row('x2a.c6pos.a.r24', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.a.r25', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(L, rt(C5))'),
    Row('x2a.c6pos.a.r26', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C6', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.a.r27', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < C6', 'C9 >= 0', 'rt(C9) < L'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.a.r28', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < C6', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi1(L, rt(C6))'),
    Row('x2a.c6pos.a.r29', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 < 0', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.b.r01', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 < C6'),
        '1'),
    Row('x2a.c6pos.b.r02', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 < C6'),
        '1'),
    Row('x2a.c6pos.b.r03', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C6', 'C4 < C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.b.r04', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C6', 'C4 < C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6pos.b.r05', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C6', 'C4 < C8', 'C5 >= C6', 'C5 < C8', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.b.r06', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C6', 'C4 < C8', 'C5 < C6', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.b.r07', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C6', 'C4 < C8', 'C5 < C6', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C3), rt(C6))'),
    Row('x2a.c6pos.b.r08', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C6', 'C4 < C8', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.b.r09', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C8', 'C5 >= C8'),
        '1 - phi2(rt(C8), rt(C6))'),
    Row('x2a.c6pos.b.r10', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 < C8'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.b.r11', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C8), rt(C5))'),
    Row('x2a.c6pos.b.r12', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C8', 'C5 >= C6', 'C5 < C8', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.b.r13', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C8', 'C5 < C6', 'C9 >= 0', 'C9 < C8'),
        '1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.b.r14', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C8', 'C5 < C6', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi1(rt(C8), rt(C6))'),
    Row('x2a.c6pos.b.r15', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C6', 'C8 < C7', 'C4 >= C8', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.b.r16', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 < C6'),
        '1'),
    Row('x2a.c6pos.b.r17', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C6', 'C4 < C7', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.b.r18', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C6', 'C4 < C7', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6pos.b.r19', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C6', 'C4 < C7', 'C5 >= C6', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.b.r20', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C6', 'C4 < C7', 'C5 < C6', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.b.r21', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C6', 'C4 < C7', 'C5 < C6', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C6))'),
    Row('x2a.c6pos.b.r22', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C6', 'C4 < C7', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.b.r23', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 >= C7', 'C5 < C8'),
        '1 - phi2(rt(C7), rt(C6)) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(rt(C4), rt(C5), L)'),
    Row('x2a.c6pos.b.r24', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r25', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C7), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r26', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 >= C6', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r27', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 < C6', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), rt(C6)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r28', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 < C6', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), rt(C6)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r29', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C7', 'C4 < C8', 'C5 < C6', 'C9 < 0'),
        '1 - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r30', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C8'),
        '1 - phi2(rt(C7), rt(C6)) - ((2 * (rt(C8) - rt(C7))) / (Dy))'),
    Row('x2a.c6pos.b.r31', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C7', 'C5 < C8'),
        '1 - phi2(rt(C7), rt(C6)) - ((2 * (rt(C5) - rt(C7))) / (Dy))'),
    Row('x2a.c6pos.b.r32', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5)) - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6pos.b.r33', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C7), rt(C5)) - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6pos.b.r34', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C6', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6)) - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6pos.b.r35', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 < C6', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), rt(C6)) - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6pos.b.r36', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 < C6', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), rt(C6)) - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6pos.b.r37', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'C8 >= C7', 'rt(C8) < L', 'C4 >= C8', 'C5 < C6', 'C9 < 0'),
        '1 - phi3(rt(C8), rt(C7), L)'),
    Row('x2a.c6pos.b.r38', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 < C6'),
        '1'),
    Row('x2a.c6pos.b.r39', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C6', 'C4 < C7', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.b.r40', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C6', 'C4 < C7', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6pos.b.r41', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C6', 'C4 < C7', 'C5 >= C6', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.b.r42', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C6', 'C4 < C7', 'C5 < C6', 'C9 >= 0', 'C9 < C4'),
        '1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.b.r43', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C6', 'C4 < C7', 'C5 < C6', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C3), rt(C6))'),
    Row('x2a.c6pos.b.r44', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C6', 'C4 < C7', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.b.r45', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= C7', 'rt(C5) < L'),
        '1 - phi2(rt(C7), rt(C6)) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(rt(C4), rt(C5), L)'),
    Row('x2a.c6pos.b.r46', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r47', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C7), rt(C5)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r48', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 >= C6', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r49', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), rt(C6)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r50', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), rt(C6)) - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r51', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'C4 >= C7', 'rt(C4) < L', 'C5 < C6', 'C9 < 0'),
        '1 - phi3(rt(C4), rt(C7), L)'),
    Row('x2a.c6pos.b.r52', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'rt(C5) >= L'),
        '1 - phi2(rt(C7), rt(C6)) - (2 / Dy) * (L - rt(C7))'),
    Row('x2a.c6pos.b.r53', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C7', 'rt(C5) < L'),
        '1 - phi2(rt(C7), rt(C6)) - ((2 * (rt(C5) - rt(C7))) / (Dy)) - phi3(L, rt(C5), L)'),
    Row('x2a.c6pos.b.r54', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 < C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5)) - phi3(L, rt(C5), L)'),
    Row('x2a.c6pos.b.r55', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C6', 'C5 < C7', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C7), rt(C5)) - phi3(L, rt(C5), L)'),
    Row('x2a.c6pos.b.r56', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C6', 'C5 < C7', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6)) - phi3(L, rt(C7), L)'),
    Row('x2a.c6pos.b.r57', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < C6', 'C9 >= 0', 'C9 < C7'),
        '1 - phi1(rt(C9), rt(C6)) - phi3(L, rt(C7), L)'),
    Row('x2a.c6pos.b.r58', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < C6', 'C9 >= 0', 'C9 >= C7'),
        '1 - phi1(rt(C7), rt(C6)) - phi3(L, rt(C7), L)'),
    Row('x2a.c6pos.b.r59', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'C7 >= 0', 'rt(C7) < L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < C6', 'C9 < 0'),
        '1 - phi3(L, rt(C7), L)'),
    Row('x2a.c6pos.c.r01', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 < C6'),
        '1'),
    Row('x2a.c6pos.c.r02', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 < C6'),
        '1'),
    Row('x2a.c6pos.c.r03', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.c.r04', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6pos.c.r05', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 >= C6', 'C5 < C8', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.c.r06', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 < C6', 'C9 >= 0', 'C9 < C4'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.c.r07', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 < C6', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C6))'),
    Row('x2a.c6pos.c.r08', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C6', 'C4 < C8', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.c.r09', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C8'),
        '1 - phi2(rt(C8), rt(C6))'),
    Row('x2a.c6pos.c.r10', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 < C8'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.c.r11', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C6', 'C5 < C8', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C8), rt(C5))'),
    Row('x2a.c6pos.c.r12', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 >= C6', 'C5 < C8', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.c.r13', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 < C6', 'C9 >= 0', 'C9 < C8'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.c.r14', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 < C6', 'C9 >= 0', 'C9 >= C8'),
        '1 - phi1(rt(C8), rt(C6))'),
    Row('x2a.c6pos.c.r15', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'C8 >= C6', 'rt(C8) < L', 'C4 >= C8', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.c.r16', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 < C6'),
        '1'),
    Row('x2a.c6pos.c.r17', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'C9 < C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.c.r18', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C4), rt(C5))'),
    Row('x2a.c6pos.c.r19', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 >= C6', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.c.r20', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 < C4'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.c.r21', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 >= 0', 'C9 >= C4'),
        '1 - phi1(rt(C4), rt(C6))'),
    Row('x2a.c6pos.c.r22', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'C4 >= C6', 'rt(C4) < L', 'C5 < C6', 'C9 < 0'),
        '1'),
    Row('x2a.c6pos.c.r23', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'rt(C5) >= L'),
        '1 - phi2(L, rt(C6))',
        printed='1 - phi2(L, 0)'),
    Row('x2a.c6pos.c.r24', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) < L'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(rt(C9), rt(C5))'),
    Row('x2a.c6pos.c.r25', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C6', 'rt(C5) < L', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi2(rt(C5), rt(C6)) - phi1(L, rt(C5))'),
    Row('x2a.c6pos.c.r26', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 >= C6', 'rt(C5) < L', 'C9 < 0'),
        '1 - phi2(rt(C5), rt(C6))'),
    Row('x2a.c6pos.c.r27', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < C6', 'C9 >= 0', 'rt(C9) < L'),
        '1',
        printed='1 - phi1(rt(C9), rt(C6))'),
    Row('x2a.c6pos.c.r28', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < C6', 'C9 >= 0', 'rt(C9) >= L'),
        '1 - phi1(L, rt(C6))'),
    Row('x2a.c6pos.c.r29', 'x2a',
        ('C6 >= 0', 'rt(C6) < L', 'rt(C7) >= L', 'rt(C8) >= L', 'rt(C4) >= L', 'C5 < C6', 'C9 < 0'),
        '1'),
)
