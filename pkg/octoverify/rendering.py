"""
Markdown Rendering

Jinja2 templates for the tables the CLI prints and for verification reports.
Every number in a rendered table is computed when the table is rendered;
quoted text from the reference data only appears in annotations.
"""

import re
from typing import Any, Dict, List, Optional

from jinja2 import BaseLoader, Environment
from loguru import logger

from .checks import load_reference_values
from .error_handling import UsageError
from .matrix_lie_lab import classical_algebra
from .root_rep_engine.branching import SUGRA_B4
from .root_rep_engine.characters import VirtualRep
from .root_rep_engine.identities import magic_square_table, spinor_power_table, sugra_triplet
from .root_rep_engine.root_system import build_root_system, exponents, sphere_decomposition

TABLE_NAMES = ("magic-square", "sugra-triplet", "table35", "spheres")

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")

_env = Environment(loader=BaseLoader(), trim_blocks=True, lstrip_blocks=True,
                   keep_trailing_newline=True)

MAGIC_SQUARE_TEMPLATE = """\
## Magic square

| | R | C | H | O |
|---|---|---|---|---|
{% for row in rows %}
| {{ row.name }} | {{ row.cells | join(" | ") }} |
{% endfor %}
{% if notes %}

{% for note in notes %}
- {{ note }}
{% endfor %}
{% endif %}
"""

SUGRA_TEMPLATE = """\
## Eleven-dimensional supergravity multiplet

{{ headline }}

| field | B4 highest weight | dimension | sign |
|---|---|---|---|
{% for row in rows %}
| {{ row.name }} | {{ row.weight }} | {{ row.dim }} | {{ row.sign }} |
{% endfor %}

Bosons {{ bosons }}, fermions {{ fermions }}, balance {{ balance }}.
"""

TABLE35_TEMPLATE = """\
## Exterior powers of the Spin(10) spinor

| k | SU(16) | Spin(10) | O(9) | O(8) | particle |
|---|---|---|---|---|---|
{% for row in rows %}
| {{ row.k }} | {{ row.su16 }} | {{ row.spin10 }} | {{ row.o9 }} | {{ row.o8 }} | {{ row.particle }} |
{% endfor %}

Cells in parentheses are quoted as printed and are not recomputed.
"""

SPHERES_TEMPLATE = """\
## Sphere structures

| group | algebra | exponents | spheres | dimension |
|---|---|---|---|---|
{% for row in rows %}
| {{ row.group }} | {{ row.algebra }} | {{ row.exponents }} | {{ row.spheres }} | {{ row.dimension }} |
{% endfor %}
"""

DECOMPOSITION_TEMPLATE = """\
## {{ title }}

{{ describe }} (dimension {{ dimension }})

| coefficient | highest weight | dimension |
|---|---|---|
{% for row in rows %}
{{ row }}
{% endfor %}
"""

REPORT_TEMPLATE = """\
# Verification report: {{ report.suite }}

- engine version: {{ report.engine_version }}
- timestamp: {{ report.timestamp }}
- pass: {{ summary["pass"] }}, fail: {{ summary["fail"] }}, flagged: {{ summary["flagged"] }}

| check | location | expected | actual | status |
|---|---|---|---|---|
{% for r in results %}
| {{ r.check_id }} | {{ r.location | cell }} | {{ r.expected | cell }} | {{ r.actual | cell }} | {{ r.status.value }} |
{% endfor %}
"""


def _cell(value: Any) -> str:
    return str(value).replace("|", "\\|")


_env.filters["cell"] = _cell


def _render(template: str, **context: Any) -> str:
    return _env.from_string(template).render(**context)


def superscript(n: int) -> str:
    return str(n).translate(_SUPERSCRIPTS)


def twisted_product(dims: List[int]) -> str:
    """S³ ×̃ S⁷ ×̃ S¹¹ for (3, 7, 11)."""
    return " ×̃ ".join(f"S{superscript(d)}" for d in dims)


_PRINTED_LABEL = re.compile(r"^(O|U|Sp)\((\d+)\)(\^2)?$")


def printed_label_dimension(label: str) -> int:
    """Dimension of a printed magic-square label such as O(16), U(3)^2 or E7."""
    match = _PRINTED_LABEL.match(label)
    if not match:
        return build_root_system(label).dimension
    family, n, squared = match.group(1), int(match.group(2)), match.group(3)
    if family == "O":
        dim = classical_algebra("so", n).dimension
    elif family == "U":
        dim = classical_algebra("su_realified", n).dimension + 1
    else:
        dim = classical_algebra("sp_realified", n).dimension
    return 2 * dim if squared else dim


def render_magic_square() -> str:
    table = magic_square_table()
    printed = load_reference_values().get("magic_square_printed", [])
    names = ("R", "C", "H", "O")
    rows = [
        {"name": names[r], "cells": [f"{cell.label} ({cell.dim})" for cell in row]}
        for r, row in enumerate(table)
    ]
    notes = []
    for r, row in enumerate(printed):
        for c, label in enumerate(row):
            computed = table[r][c]
            printed_dim = printed_label_dimension(label)
            if printed_dim != computed.dim:
                notes.append(
                    f"cell ({r + 1},{c + 1}) is printed as {label} (dimension {printed_dim}); "
                    f"the computed entry is {computed.label} of dimension {computed.dim}"
                )
    return _render(MAGIC_SQUARE_TEMPLATE, rows=rows, notes=notes)


def _coords_text(rep: VirtualRep) -> str:
    rs = rep.root_system
    (hw,) = rep.terms
    return "(" + ", ".join(str(c) for c in rs.coords(hw)) + ")"


def render_sugra_triplet() -> str:
    triplet = sugra_triplet()
    b4 = build_root_system("B4")
    rows = []
    for name, key, sign in (("graviton h", "graviton", "+"), ("gravitino psi", "gravitino", "-"),
                            ("3-form C", "three_form", "+")):
        rep = VirtualRep.irreducible(b4, b4.to_weight(SUGRA_B4[key]))
        rows.append({"name": name, "weight": _coords_text(rep), "dim": rep.dimension, "sign": sign})
    headline = f"{triplet.graviton} − {triplet.gravitino} + {triplet.three_form}"
    return _render(SUGRA_TEMPLATE, headline=headline, rows=rows, bosons=triplet.bosons,
                   fermions=triplet.gravitino, balance=triplet.balance)


def render_table35(max_k: int = 8, branch_upto: int = 3) -> str:
    printed = {row["k"]: row for row in load_reference_values().get("table35_printed", [])}
    rows = []
    for row in spinor_power_table(max_k=max_k, branch_o9_upto=branch_upto, branch_o8_upto=branch_upto):
        quoted = printed.get(row.k, {})
        rows.append({
            "k": row.k,
            "su16": f"{row.su16_signed:+d}" if row.k else str(row.su16_signed),
            "spin10": row.spin10.describe(),
            "o9": row.o9.describe() if row.o9 is not None else f"({quoted.get('o9', '')})",
            "o8": row.o8.describe() if row.o8 is not None else f"({quoted.get('o8', '')})",
            "particle": quoted.get("particle", ""),
        })
    return _render(TABLE35_TEMPLATE, rows=rows)


def render_spheres(algebra: Optional[str] = None) -> str:
    if algebra:
        entries = [{"group": algebra.upper(), "algebra": algebra.upper()}]
    else:
        entries = load_reference_values().get("sphere_structures", [])
    rows = []
    for entry in entries:
        rs = build_root_system(entry["algebra"])
        spheres = list(sphere_decomposition(rs))
        rows.append({
            "group": entry["group"],
            "algebra": rs.label,
            "exponents": ", ".join(map(str, exponents(rs))),
            "spheres": twisted_product(spheres),
            "dimension": sum(spheres),
        })
    return _render(SPHERES_TEMPLATE, rows=rows)


def render_table(name: str, algebra: Optional[str] = None) -> str:
    """Markdown for one of the named tables."""
    logger.debug(f"Rendering table {name}")
    if name == "magic-square":
        return render_magic_square()
    if name == "sugra-triplet":
        return render_sugra_triplet()
    if name == "table35":
        return render_table35()
    if name == "spheres":
        return render_spheres(algebra)
    raise UsageError(f"Unknown table '{name}'; choose from {', '.join(TABLE_NAMES)}", token=name)


def render_report(report: Any) -> str:
    summary: Dict[str, int] = report.summary
    return _render(REPORT_TEMPLATE, report=report, summary=summary, results=report.results)


def render_decomposition(title: str, rep: VirtualRep) -> str:
    rows = [
        f"| {c.coefficient:+d} | {_cell(', '.join(str(x) for x in rep.root_system.coords(c.highest_weight)))} "
        f"| {c.dimension} |"
        for c in rep.constituents()
    ]
    return _render(DECOMPOSITION_TEMPLATE, title=title, rep=rep, rows=rows,
                   describe=rep.describe(), dimension=rep.dimension)

