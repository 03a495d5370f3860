# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import os

from zneqv.analysis.records import QvRecord
from zneqv.constants import RECORD_FLUSH_INTERVAL
from zneqv.io.file_io import append_jsonl, read_jsonl

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

RECORDS_FILE = "records.jsonl"


class RecordLog:
    """
    Append-only JSON-lines log of QvRecords, one record per line. Appended records are buffered
    and written every ``flush_interval`` records; the log is the single writer of the file. A
    truncated last line left by an interrupted run is removed on opening.

    :Example:
        >>> with RecordLog("run/records.jsonl", flush_interval=250) as log:
        ...     log.append(record)
    """

    def __init__(self, path, flush_interval=RECORD_FLUSH_INTERVAL):
        self.path = path
        self.flush_interval = int(flush_interval)
        self._buffer = []
        self._repair()

    def _repair(self):
        if not os.path.isfile(self.path):
            return
        with open(self.path) as fp:
            text = fp.read()
        if text and not text.endswith("\n"):
            keep = text[:text.rfind("\n") + 1]
            logger.warning("dropping a truncated record line in %s" % self.path)
            with open(self.path, "w") as fp:
                fp.write(keep)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.flush()

    def __len__(self):
        return len(self.completed_ids())

    def append(self, record):
        self._buffer.append(record)
        if len(self._buffer) >= self.flush_interval:
            self.flush()

    def flush(self):
        if not self._buffer:
            return
        directory = os.path.dirname(self.path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        written = append_jsonl(self._buffer, self.path)
        self._buffer = []
        logger.info("flushed %d records to %s" % (written, self.path))

    def read_records(self):
        """
        All records written so far, one per circuit id (first occurrence wins), ordered by id.
        Buffered records are included.
        """
        found = {}
        items = read_jsonl(self.path) if os.path.isfile(self.path) else []
        for rec in [QvRecord.from_dict(d) for d in items] + list(self._buffer):
            found.setdefault(rec.circuit_id, rec)
        return [found[k] for k in sorted(found)]

    def completed_ids(self):
        return set(r.circuit_id for r in self.read_records())
