from typing import Iterator, List, Optional

from ..chf import ECHFKind
from .e_system_name import ESystemName
from .e_verdict_status import EVerdictStatus


class VerdictRow:
    """One row of a verdict table: a candidate's parameters as printed, its function kind and its verdict."""

    # CONSTRUCTOR

    def __init__(self, case_id: int, a: str, b: str, c: str, kind: ECHFKind, status: EVerdictStatus, comment: str,
                 *, d: Optional[float] = None, disputed: bool = False, note: str = ""):
        """
        Construct a verdict row.

        :param case_id:     The case (or item) number.
        :param a:           The parameter a, as printed.
        :param b:           The parameter b, as printed.
        :param c:           The ansatz coefficient c, as printed.
        :param kind:        The kind of confluent hypergeometric function.
        :param status:      The verdict.
        :param comment:     The comment printed alongside the verdict.
        :param d:           The power of the power-law ansatz, if used.
        :param disputed:    Whether the printed verdict is known to be inconsistent with the printed parameters.
        :param note:        An explanation of the dispute, if any.
        """
        self.__a = a                # type: str
        self.__b = b                # type: str
        self.__c = c                # type: str
        self.__case_id = case_id    # type: int
        self.__comment = comment    # type: str
        self.__d = d                # type: Optional[float]
        self.__disputed = disputed  # type: bool
        self.__kind = kind          # type: ECHFKind
        self.__note = note          # type: str
        self.__status = status      # type: EVerdictStatus

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "VerdictRow(case_id={}, kind={}, status={}{})".format(
            self.__case_id, self.__kind.value, self.__status.value, ", disputed" if self.__disputed else ""
        )

    # PUBLIC METHODS

    def get_a(self) -> str:
        return self.__a

    def get_b(self) -> str:
        return self.__b

    def get_c(self) -> str:
        return self.__c

    def get_case_id(self) -> int:
        return self.__case_id

    def get_comment(self) -> str:
        return self.__comment

    def get_d(self) -> Optional[float]:
        return self.__d

    def get_kind(self) -> ECHFKind:
        return self.__kind

    def get_note(self) -> str:
        return self.__note

    def get_status(self) -> EVerdictStatus:
        return self.__status

    def is_disputed(self) -> bool:
        return self.__disputed


class VerdictTable:
    """A table of verdicts for every candidate solution of one system."""

    # CONSTRUCTOR

    def __init__(self, system_name: ESystemName, rows: List[VerdictRow]):
        """
        Construct a verdict table.

        :param system_name: The system to which the table belongs.
        :param rows:        The rows, in case order.
        """
        self.__rows = list(rows)          # type: List[VerdictRow]
        self.__system_name = system_name  # type: ESystemName

    # SPECIAL METHODS

    def __iter__(self) -> Iterator[VerdictRow]:
        return iter(self.__rows)

    def __len__(self) -> int:
        return len(self.__rows)

    # PUBLIC METHODS

    def get_accepted_case_ids(self) -> List[int]:
        """
        Get the ids of the cases whose verdict is Accepted.

        :return:    The accepted case ids, in order.
        """
        return [row.get_case_id() for row in self.__rows if row.get_status() is EVerdictStatus.ACCEPTED]

    def get_row(self, case_id: int) -> VerdictRow:
        """
        Get the row for the specified case.

        :param case_id:     The case id.
        :return:            The row.
        :raises KeyError:   If there is no such case.
        """
        for row in self.__rows:
            if row.get_case_id() == case_id:
                return row
        raise KeyError("No case {} in the verdict table for {}".format(case_id, self.__system_name.value))

    def get_rows(self) -> List[VerdictRow]:
        return list(self.__rows)

    def get_system_name(self) -> ESystemName:
        return self.__system_name
