import json
import logging
import os
import sqlite3
from dataclasses import asdict
from typing import List, Optional

from models.records import ExperimentConfig, ResultRecord
from utils.config import get_config

logger = logging.getLogger(__name__)


class ResultDatabase:
    """sqlite archive of experiment runs and their result records"""

    def __init__(self, db_path=None):
        # Default: the configured path, relative to the project root
        if db_path is None:
            package_dir = os.path.dirname(os.path.abspath(__file__))
            project_root = os.path.abspath(os.path.join(package_dir, ".."))
            db_path = os.path.join(project_root, get_config().database_path)
        if db_path != ':memory:':
            os.makedirs(os.path.dirname(os.path.abspath(db_path)), exist_ok=True)

        self.db_path = db_path
        self.conn = sqlite3.connect(self.db_path)
        self.conn.row_factory = sqlite3.Row
        self.conn.execute('PRAGMA foreign_keys = ON')
        self.create_tables()

    def create_tables(self):
        cursor = self.conn.cursor()

        # One row per run_experiment call
        cursor.execute('''
            CREATE TABLE IF NOT EXISTS runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                command TEXT NOT NULL,
                input_path TEXT,
                config TEXT NOT NULL,
                rng_id TEXT NOT NULL,
                record_count INTEGER DEFAULT 0,
                aborted_count INTEGER DEFAULT 0,
                created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            )
        ''')

        # Result records; the full record is kept as JSON next to the query columns
        cursor.execute('''
            CREATE TABLE IF NOT EXISTS records (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                run_id INTEGER NOT NULL,
                k INTEGER,
                t INTEGER,
                seed INTEGER,
                estimate REAL,
                rel_error REAL,
                aborted INTEGER DEFAULT 0,
                payload TEXT NOT NULL,
                FOREIGN KEY (run_id) REFERENCES runs(id) ON DELETE CASCADE
            )
        ''')
        self.conn.commit()

    # ============== RUN OPERATIONS ==============

    def save_run(self, config: ExperimentConfig, records: List[ResultRecord]) -> int:
        """Store a run with its records; returns the run id"""
        cursor = self.conn.cursor()
        cursor.execute('''
            INSERT INTO runs (command, input_path, config, rng_id, record_count, aborted_count)
            VALUES (?, ?, ?, ?, ?, ?)
        ''', (config.command, config.input_path, json.dumps(asdict(config)), config.rng_id,
              len(records), sum(1 for r in records if r.aborted)))
        run_id = cursor.lastrowid

        cursor.executemany('''
            INSERT INTO records (run_id, k, t, seed, estimate, rel_error, aborted, payload)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
        ''', [(run_id, r.k, r.t, r.seed, r.estimate, r.rel_error, int(r.aborted), json.dumps(r.to_dict()))
              for r in records])
        self.conn.commit()
        logger.info("archived run %d (%d records)", run_id, len(records))
        return run_id

    def get_runs(self, command: Optional[str] = None):
        cursor = self.conn.cursor()
        if command is None:
            cursor.execute('SELECT * FROM runs ORDER BY id DESC')
        else:
            cursor.execute('SELECT * FROM runs WHERE command = ? ORDER BY id DESC', (command,))
        return [dict(row) for row in cursor.fetchall()]

    def get_run(self, run_id):
        cursor = self.conn.cursor()
        cursor.execute('SELECT * FROM runs WHERE id = ?', (run_id,))
        row = cursor.fetchone()
        return dict(row) if row else None

    def get_run_config(self, run_id) -> Optional[ExperimentConfig]:
        run = self.get_run(run_id)
        return ExperimentConfig(**json.loads(run['config'])) if run else None

    def get_records(self, run_id) -> List[ResultRecord]:
        """Records of a run in insertion order"""
        cursor = self.conn.cursor()
        cursor.execute('SELECT payload FROM records WHERE run_id = ? ORDER BY id ASC', (run_id,))
        return [ResultRecord.from_dict(json.loads(row['payload'])) for row in cursor.fetchall()]

    def delete_run(self, run_id):
        """Delete a run and its records"""
        cursor = self.conn.cursor()
        cursor.execute('DELETE FROM runs WHERE id = ?', (run_id,))
        self.conn.commit()

    def close(self):
        """Close database connection"""
        self.conn.close()
