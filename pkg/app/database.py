import json
import logging
import sqlite3
from datetime import datetime

from app import settings

logger = logging.getLogger(__name__)


def _db_path(db_path=None):
    return db_path or settings.HISTORY_DB


def create_runs_table(db_path=None):
    with sqlite3.connect(_db_path(db_path)) as conn:
        c = conn.cursor()
        c.execute('''CREATE TABLE IF NOT EXISTS runs (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            kind TEXT,
            created_at TEXT,
            input_name TEXT,
            summary TEXT
        )''')
        conn.commit()


def record_run(kind, input_name, summary, db_path=None):
    """Store one CLI run; a no-op while run history is disabled."""
    path = _db_path(db_path)
    if not path:
        return
    create_runs_table(path)
    with sqlite3.connect(path) as conn:
        c = conn.cursor()
        c.execute("INSERT INTO runs (kind, created_at, input_name, summary) VALUES (?, ?, ?, ?)",
                  (kind, datetime.now().strftime("%Y-%m-%d %H:%M:%S"), input_name,
                   json.dumps(summary, sort_keys=True)))
        conn.commit()
    logger.debug("recorded %s run for %s", kind, input_name)


def recent_runs(limit=20, db_path=None):
    path = _db_path(db_path)
    if not path:
        return []
    create_runs_table(path)
    with sqlite3.connect(path) as conn:
        c = conn.cursor()
        c.execute("SELECT id, kind, created_at, input_name, summary FROM runs "
                  "ORDER BY id DESC LIMIT ?", (limit,))
        return [
            {"id": row[0], "kind": row[1], "created_at": row[2],
             "input_name": row[3], "summary": json.loads(row[4])}
            for row in c.fetchall()
        ]


def clear_runs(db_path=None):
    path = _db_path(db_path)
    if not path:
        return 0
    create_runs_table(path)
    with sqlite3.connect(path) as conn:
        c = conn.cursor()
        c.execute("DELETE FROM runs")
        conn.commit()
        return c.rowcount
