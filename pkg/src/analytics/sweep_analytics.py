"""
Sweep Analytics Module
Tabulates oracle-sweep rows and summarizes them per rule
"""
from pathlib import Path
from typing import Any, Dict, List, Union

import pandas as pd

SWEEP_COLUMNS = ["s", "t", "h", "config", "rule", "oracle", "brute", "agree"]


class SweepAnalytics:
    """
    Holds one row per (H, t, configuration) checked by a sweep

    Rows are plain dicts with the SWEEP_COLUMNS keys; the table keeps the
    order the rows were added in.
    """

    def __init__(self, rows: List[Dict[str, Any]] = None):
        self.rows: List[Dict[str, Any]] = list(rows or [])

    def add_rows(self, rows: List[Dict[str, Any]]):
        self.rows.extend(rows)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=SWEEP_COLUMNS)

    def rule_counts(self) -> Dict[str, Dict[str, int]]:
        """
        Per rule: how many cases it decided and how many of those agreed

        Returns:
            {rule: {"cases": n, "agree": a, "disagree": n - a}}
        """
        frame = self.to_frame()
        if frame.empty:
            return {}
        grouped = frame.groupby("rule")["agree"].agg(["count", "sum"])
        return {
            str(rule): {
                "cases": int(row["count"]),
                "agree": int(row["sum"]),
                "disagree": int(row["count"] - row["sum"])
            }
            for rule, row in grouped.sort_index().iterrows()
        }

    def winner_split(self) -> Dict[str, int]:
        """Brute-force winner counts"""
        frame = self.to_frame()
        if frame.empty:
            return {}
        return {str(k): int(v) for k, v in frame["brute"].value_counts().sort_index().items()}

    def disagreements(self) -> pd.DataFrame:
        frame = self.to_frame()
        return frame[~frame["agree"].astype(bool)]

    def to_csv(self, path: Union[str, Path]) -> Path:
        """Write the full table as CSV, one row per case"""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(target, index=False)
        return target

    def summary(self) -> Dict[str, Any]:
        frame = self.to_frame()
        return {
            "cases": int(len(frame)),
            "agreements": int(frame["agree"].sum()) if not frame.empty else 0,
            "rules": self.rule_counts(),
            "winners": self.winner_split()
        }
