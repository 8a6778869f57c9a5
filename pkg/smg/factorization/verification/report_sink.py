import json
import threading

from typing import List

from .check_record import CheckRecord


class ReportSink:
    """An append-only collection of check records that the workers of a verification suite can share."""

    # CONSTRUCTOR

    def __init__(self):
        """Construct an empty report sink."""
        self.__lock = threading.Lock()  # type: threading.Lock
        self.__records = []             # type: List[CheckRecord]

    # SPECIAL METHODS

    def __len__(self) -> int:
        with self.__lock:
            return len(self.__records)

    # PUBLIC METHODS

    def all_ok(self) -> bool:
        """
        Determine whether every check recorded so far came out as it should.

        .. note::
            An empty sink is not ok: a suite that checked nothing has confirmed nothing.

        :return:    True, if there is at least one record and all of them are ok, or False otherwise.
        """
        records = self.get_records()
        return len(records) > 0 and all(r.is_ok() for r in records)

    def append(self, record: CheckRecord) -> None:
        with self.__lock:
            self.__records.append(record)

    def format_table(self) -> str:
        """
        Format the records as a human-readable table, ordered by system, wavenumber and case.

        :return:    The table.
        """
        records = sorted(self.get_records(), key=lambda r: (
            r.get_system().get_name().value, r.get_system().describe(), r.get_k(),
            -1 if r.get_case_id() is None else r.get_case_id()
        ))
        header = "{:<34} {:>6} {:>4} {:<34} {:>10} {:>9}  {}".format(
            "system", "k", "case", "check", "residual", "tolerance", "outcome"
        )
        failures = len([r for r in records if not r.is_ok()])
        lines = [header, "-" * len(header)] + [r.format_row() for r in records]
        lines.append("{} checks, {} not ok".format(len(records), failures))
        return "\n".join(lines)

    def get_failures(self) -> List[CheckRecord]:
        return [r for r in self.get_records() if not r.is_ok()]

    def get_records(self) -> List[CheckRecord]:
        with self.__lock:
            return list(self.__records)

    def write_jsonl(self, path: str) -> None:
        """
        Write the records to a file as JSON lines, one record per line.

        :param path:    The path to the file.
        """
        with open(path, "w", encoding="utf-8") as f:
            for record in self.get_records():
                f.write(json.dumps(record.to_dict(), ensure_ascii=False) + "\n")
