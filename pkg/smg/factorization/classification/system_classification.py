from typing import List

from ..ansatz import Candidate
from ..base import VerdictMismatchError
from ..systems import EVerdictStatus, SystemSpec, VerdictRow, VerdictTable
from .verdict import Verdict


class ClassifiedCandidate:
    """A candidate together with its computed verdict and the golden row it is compared against."""

    # CONSTRUCTOR

    def __init__(self, candidate: Candidate, verdict: Verdict, golden: VerdictRow):
        self.__candidate = candidate  # type: Candidate
        self.__golden = golden        # type: VerdictRow
        self.__verdict = verdict      # type: Verdict

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "ClassifiedCandidate(case {}: {}, golden {})".format(
            self.__golden.get_case_id(), self.__verdict, self.__golden.get_status().value
        )

    # PUBLIC METHODS

    def describe_mismatch(self) -> str:
        """
        Describe how the computed verdict differs from the golden one.

        :return:    The description.
        """
        defects = ", ".join(d.value for d in self.__verdict.get_defects()) or "none"
        return "case {} ({}): computed {} (defects: {}), golden {} ({})".format(
            self.get_case_id(), self.__golden.get_kind().value, self.get_status().value, defects,
            self.__golden.get_status().value, self.__golden.get_comment()
        )

    def get_candidate(self) -> Candidate:
        return self.__candidate

    def get_case_id(self) -> int:
        return self.__golden.get_case_id()

    def get_golden(self) -> VerdictRow:
        return self.__golden

    def get_status(self) -> EVerdictStatus:
        """
        Get the computed status to report for the row, preferring the golden rejection reason when it is confirmed.

        :return:    The status.
        """
        return self.__verdict.status_against(self.__golden.get_status())

    def get_verdict(self) -> Verdict:
        return self.__verdict

    def is_disputed(self) -> bool:
        return self.__golden.is_disputed()

    def matches(self) -> bool:
        return self.__verdict.matches(self.__golden.get_status())


class SystemClassification:
    """The classification of every candidate of one system at one wavenumber, compared against the golden table."""

    # CONSTRUCTOR

    def __init__(self, system: SystemSpec, k: float, rows: List[ClassifiedCandidate]):
        """
        Construct a system classification.

        :param system:  The system.
        :param k:       The wavenumber.
        :param rows:    The classified candidates, in case order.
        """
        self.__k = k                  # type: float
        self.__rows = list(rows)      # type: List[ClassifiedCandidate]
        self.__system = system        # type: SystemSpec

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "SystemClassification({}, k={}, {} rows, {} mismatches)".format(
            self.__system.describe(), self.__k, len(self.__rows), len(self.get_mismatches())
        )

    # PUBLIC METHODS

    def check(self) -> None:
        """
        Check that the computed verdicts agree with the golden table (disputed rows aside).

        :raises VerdictMismatchError:   If any undisputed row disagrees.
        """
        mismatches = self.get_mismatches()
        if mismatches:
            raise VerdictMismatchError(self.__system.get_name().get_display_name(), mismatches)

    def format_table(self) -> str:
        """
        Format the computed verdicts alongside the golden ones as a plain-text table.

        :return:    The table.
        """
        lines = ["{:<5} {:<6} {:<28} {:<28} {}".format("case", "kind", "computed", "golden", "")]
        for row in self.__rows:
            if row.is_disputed():
                flag = "disputed"
            elif row.matches():
                flag = "ok"
            else:
                flag = "MISMATCH"
            lines.append("{:<5} {:<6} {:<28} {:<28} {}".format(
                row.get_case_id(), row.get_golden().get_kind().value, row.get_status().value,
                row.get_golden().get_status().value, flag
            ))
        return "\n".join(lines)

    def get_disputed_rows(self) -> List[ClassifiedCandidate]:
        return [row for row in self.__rows if row.is_disputed()]

    def get_k(self) -> float:
        return self.__k

    def get_mismatches(self) -> List[str]:
        """
        Describe every undisputed row whose computed verdict disagrees with the golden one.

        :return:    One description per mismatching row.
        """
        return [row.describe_mismatch() for row in self.__rows if not row.is_disputed() and not row.matches()]

    def get_rows(self) -> List[ClassifiedCandidate]:
        return list(self.__rows)

    def get_system(self) -> SystemSpec:
        return self.__system

    def is_match(self) -> bool:
        return not self.get_mismatches()

    def to_verdict_table(self) -> VerdictTable:
        """
        Make a verdict table with the computed statuses in place of the golden ones.

        :return:    The computed verdict table.
        """
        rows = []  # type: List[VerdictRow]
        for row in self.__rows:
            golden, verdict = row.get_golden(), row.get_verdict()
            rows.append(VerdictRow(
                golden.get_case_id(), golden.get_a(), golden.get_b(), golden.get_c(), golden.get_kind(),
                row.get_status(), verdict.describe(row.get_status()), d=golden.get_d(), disputed=golden.is_disputed(),
                note=golden.get_note()
            ))
        return VerdictTable(self.__system.get_name(), rows)
