# reports.py — pandas tables for analysis results and build traces
# Usage:
#   from reports import cut_table_frame, build_trace_frame, write_csv
#   df = cut_table_frame(G, cut_table(G))
#   print(df.to_string(index=False)); write_csv(df, "house.csv")
#
# Notes:
# - One row per (hole, edge) pair, scan order kept.
# - status is "OK" when the pair gives a chordal cut (T non-empty, chordal side).

from __future__ import annotations

from typing import Iterable, List, Optional

import pandas as pd

from chordality import is_chordal
from competition_builder import CompetitionCertificate
from graph_core import Graph, VertexId, induced_subgraph, sort_vertices
from hole_analysis import CutAnalysis

CUT_COLUMNS = [
    "hole", "edge", "x_ce", "t_ce", "s_nonempty", "s_ce", "u_ce", "side_chordal", "status",
]
TRACE_COLUMNS = ["step", "branch", "hole", "edge", "holes_before", "added_after"]


def fmt_set(vs: Optional[Iterable[VertexId]]) -> str:
    if vs is None:
        return "-"
    return "{" + ",".join(str(v) for v in sort_vertices(vs)) + "}"


def fmt_edge(e) -> str:
    return "-" if e is None else f"{e[0]}-{e[1]}"


def cut_table_frame(G: Graph, table: List[CutAnalysis]) -> pd.DataFrame:
    rows = []
    for info in table:
        side_chordal = is_chordal(induced_subgraph(G, info.u_ce | info.x_ce))
        rows.append({
            "hole": str(info.hole),
            "edge": fmt_edge(info.edge),
            "x_ce": fmt_set(info.x_ce),
            "t_ce": fmt_set(info.t_ce),
            "s_nonempty": info.s_nonempty,
            "s_ce": fmt_set(info.s_ce),
            "u_ce": fmt_set(info.u_ce),
            "side_chordal": side_chordal,
            "status": "OK" if (info.t_ce and side_chordal) else "NOT OK",
        })
    return pd.DataFrame(rows, columns=CUT_COLUMNS)


def build_trace_frame(cert: CompetitionCertificate) -> pd.DataFrame:
    rows = []
    for i, step in enumerate(cert.steps, 1):
        rows.append({
            "step": i,
            "branch": step.branch,
            "hole": str(step.hole) if step.hole is not None else "-",
            "edge": fmt_edge(step.edge),
            "holes_before": step.holes_before,
            "added_after": step.added_after,
        })
    return pd.DataFrame(rows, columns=TRACE_COLUMNS)


def summary_line(df: pd.DataFrame) -> str:
    good = int((df["status"] == "OK").sum()) if len(df) else 0
    return f"chordal-cut pairs: {good}   other pairs: {len(df) - good}"


def write_csv(df: pd.DataFrame, path: str) -> None:
    df.to_csv(path, index=False, encoding="utf-8")
