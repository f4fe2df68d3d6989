"""Rendering of Dayan traces: TSV, markdown and JSON.

The text layouts put step indices in columns and one quantity per row
(s, r, gamma, c, beta, f), the way the traces are usually tabulated by hand.
Missing cells are left empty.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .dayan import DayanStep, DayanTrace, SignStrategy, Termination, ext_inverse_sum_f

ROWS = ("s", "r", "gamma", "c", "beta", "f")
_MD_LABELS = {"s": "s_i", "r": "r_i", "gamma": "γ_i", "c": "c_i", "beta": "β_i", "f": "f_i"}


def _cell(value: Optional[int]) -> str:
    return "" if value is None else str(value)


def trace_rows(trace: DayanTrace) -> list[list[str]]:
    rows = [["i"] + [str(st.i) for st in trace.steps]]
    for name in ROWS:
        rows.append([name] + [_cell(getattr(st, name)) for st in trace.steps])
    return rows


def render_tsv(trace: DayanTrace) -> str:
    return "".join("\t".join(row) + "\n" for row in trace_rows(trace))


def render_markdown(trace: DayanTrace) -> str:
    rows = trace_rows(trace)
    header = ["Step i"] + rows[0][1:]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join(["---"] + ["---:"] * (len(header) - 1)) + "|",
    ]
    for row in rows[1:]:
        lines.append("| " + " | ".join([_MD_LABELS[row[0]]] + row[1:]) + " |")
    return "\n".join(lines) + "\n"


def trace_to_dict(trace: DayanTrace) -> dict[str, Any]:
    return {
        "p": trace.p,
        "q": trace.q,
        "a": trace.a,
        "strategy": str(trace.strategy),
        "steps": [
            {"i": st.i, "s": st.s, "r": st.r, "gamma": st.gamma, "c": st.c, "beta": st.beta, "f": st.f}
            for st in trace.steps
        ],
        "termination": trace.termination.value,
        "gcd": trace.gcd,
        "sum_index": trace.sum_index,
        "value": ext_inverse_sum_f(trace) if trace.solvable else None,
    }


def render_json(trace: DayanTrace) -> str:
    return json.dumps(trace_to_dict(trace), indent=2) + "\n"


def trace_from_dict(data: dict[str, Any]) -> DayanTrace:
    steps = tuple(
        DayanStep(
            i=row["i"],
            r=row["r"],
            gamma=row.get("gamma"),
            c=row.get("c"),
            beta=row.get("beta"),
            s=row.get("s"),
            f=row.get("f"),
        )
        for row in data["steps"]
    )
    return DayanTrace(
        p=data["p"],
        q=data["q"],
        a=data["a"],
        strategy=SignStrategy.parse(data["strategy"]),
        steps=steps,
        termination=Termination(data["termination"]),
        gcd=data["gcd"],
        sum_index=data["sum_index"],
    )


def trace_from_json(text: str) -> DayanTrace:
    return trace_from_dict(json.loads(text))


RENDERERS = {"tsv": render_tsv, "markdown": render_markdown, "json": render_json}
