import functools
import json
import logging
import time
from dataclasses import dataclass
from datetime import datetime

import psycopg
from psycopg_pool import ConnectionPool

logger = logging.getLogger(__name__)

_CREATE_TABLES = """
CREATE TABLE IF NOT EXISTS verification_reports (
    id BIGSERIAL PRIMARY KEY,
    command TEXT NOT NULL,
    status INT NOT NULL,
    report JSONB NOT NULL,
    created_at TIMESTAMPTZ NOT NULL DEFAULT NOW()
);

CREATE INDEX IF NOT EXISTS idx_verification_reports_command
    ON verification_reports (command, created_at DESC);
"""


def _retry_on_disconnect(method):
    """Retry a method once if the database connection was lost."""
    @functools.wraps(method)
    def wrapper(self, *args, **kwargs):
        try:
            return method(self, *args, **kwargs)
        except psycopg.OperationalError as e:
            logger.warning("Database connection lost (%s), retrying...", e)
            time.sleep(0.5)
            return method(self, *args, **kwargs)
    return wrapper


@dataclass
class StoredReport:
    id: int
    command: str
    status: int
    report: dict
    created_at: datetime


class ReportStore:
    def __init__(self, database_url: str):
        self._pool = ConnectionPool(
            conninfo=database_url,
            min_size=1,
            max_size=4,
            check=ConnectionPool.check_connection,
            kwargs={"autocommit": True},
        )
        with self._pool.connection() as conn:
            conn.execute(_CREATE_TABLES)
        logger.info("ReportStore: tables ensured")

    @_retry_on_disconnect
    def save(self, command: str, status: int, report: dict) -> int:
        with self._pool.connection() as conn:
            row = conn.execute(
                """
                INSERT INTO verification_reports (command, status, report)
                VALUES (%s, %s, %s::jsonb)
                RETURNING id
                """,
                (command, status, json.dumps(report, sort_keys=True)),
            ).fetchone()
        logger.info("Archived %s report as #%d (status %d)", command, row[0], status)
        return row[0]

    @_retry_on_disconnect
    def get(self, report_id: int) -> StoredReport | None:
        with self._pool.connection() as conn:
            row = conn.execute(
                """
                SELECT id, command, status, report, created_at
                FROM verification_reports WHERE id = %s
                """,
                (report_id,),
            ).fetchone()
        return _stored(row) if row else None

    @_retry_on_disconnect
    def recent(self, command: str | None = None, limit: int = 20) -> list[StoredReport]:
        with self._pool.connection() as conn:
            if command is None:
                rows = conn.execute(
                    """
                    SELECT id, command, status, report, created_at
                    FROM verification_reports ORDER BY created_at DESC, id DESC LIMIT %s
                    """,
                    (limit,),
                ).fetchall()
            else:
                rows = conn.execute(
                    """
                    SELECT id, command, status, report, created_at
                    FROM verification_reports WHERE command = %s
                    ORDER BY created_at DESC, id DESC LIMIT %s
                    """,
                    (command, limit),
                ).fetchall()
        return [_stored(row) for row in rows]

    def close(self):
        self._pool.close()


def _stored(row) -> StoredReport:
    report = json.loads(row[3]) if isinstance(row[3], str) else row[3]
    return StoredReport(id=row[0], command=row[1], status=row[2], report=report, created_at=row[4])
