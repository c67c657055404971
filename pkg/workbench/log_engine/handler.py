from logging import Handler, LogRecord
from typing import Dict, Set, TextIO
import logging
import sys


class RecordTable:
    """In-memory table of formatted log messages for one level group, forgotten once capacity is reached"""

    def __init__(self, capacity: int = 10000) -> None:
        self.capacity = capacity
        self.entries: Set[str] = set()

    def exists(self, message: str = None) -> bool:
        if message is None:
            return len(self.entries) > 0
        return message in self.entries

    def add(self, message: str) -> None:
        if len(self.entries) >= self.capacity:
            self.entries.clear()
        self.entries.add(message)

    def count(self) -> int:
        return len(self.entries)

    def clear(self) -> None:
        self.entries.clear()


class DeduplicatingStreamHandler(Handler):
    """
    Routes records into DEBUG / INFO / ERROR tables (anything above INFO is an error)\n
    and writes each message once to the stream. Repeated messages at the same level are dropped.
    """

    def __init__(self, stream: TextIO = None) -> None:
        super(DeduplicatingStreamHandler, self).__init__()
        self._stream = stream
        self.tables: Dict[str, RecordTable] = {
            "DEBUG": RecordTable(),
            "INFO": RecordTable(),
            "ERROR": RecordTable(),
        }

    @property
    def stream(self) -> TextIO:
        return self._stream if self._stream is not None else sys.stderr

    def table_for(self, levelno: int) -> RecordTable:
        if levelno == logging.DEBUG:
            return self.tables["DEBUG"]
        elif levelno > logging.INFO:
            return self.tables["ERROR"]
        return self.tables["INFO"]

    def emit(self, record: LogRecord) -> None:
        try:
            table = self.table_for(record.levelno)
            message = self.format(record)
            if not table.exists(message):
                table.add(message)
                self.stream.write(message + "\n")
                self.stream.flush()
        except Exception:
            self.handleError(record)

    def reset(self) -> None:
        for table in self.tables.values():
            table.clear()
