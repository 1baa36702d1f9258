import pandas as pd

from app.database import clear_runs, recent_runs

COLUMNS = ["id", "kind", "created_at", "input_name", "summary"]


def _summary_text(summary):
    return ", ".join(f"{k}={v}" for k, v in sorted(summary.items()))


def history_frame(limit=20, db_path=None):
    # Most recent run first
    runs = recent_runs(limit, db_path)
    frame = pd.DataFrame(runs, columns=COLUMNS)
    if not frame.empty:
        frame["summary"] = frame["summary"].map(_summary_text)
    return frame


def history_report(limit=20, clear=False, db_path=None):
    if clear:
        removed = clear_runs(db_path)
        return f"Cleared {removed} runs.\n"
    frame = history_frame(limit, db_path)
    if frame.empty:
        return "No runs recorded yet.\n"
    return frame.to_string(index=False) + "\n"
