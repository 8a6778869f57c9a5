import math

from typing import Any, Dict, Optional

from ..systems import SystemSpec
from .residual_report import ResidualReport


class CheckRecord:
    """
    One line of a verification report: the outcome of a single check on a single (system, k, case) cell.

    .. note::
        Some checks demonstrate that something fails (a rejected candidate really misbehaves, or a chain that should
        not exist does not). Such checks are constructed with expect_failure=True and are ok when their report fails.
    """

    # CONSTRUCTOR

    def __init__(self, system: SystemSpec, k: float, case_id: Optional[int], report: ResidualReport, *,
                 expect_failure: bool = False):
        """
        Construct a check record.

        :param system:          The system.
        :param k:               The wavenumber.
        :param case_id:         The case the check concerns, or None for a check on the system as a whole.
        :param report:          The report produced by the check.
        :param expect_failure:  Whether the check is meant to fail its tolerance.
        """
        self.__case_id = case_id                # type: Optional[int]
        self.__expect_failure = expect_failure  # type: bool
        self.__k = k                            # type: float
        self.__report = report                  # type: ResidualReport
        self.__system = system                  # type: SystemSpec

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "CheckRecord({}, k={}, case={}, {})".format(
            self.__system.describe(), self.__k, self.__case_id, self.__report
        )

    # PUBLIC METHODS

    def expects_failure(self) -> bool:
        return self.__expect_failure

    def format_row(self) -> str:
        """
        Format the record as a row of the human-readable report table.

        :return:    The row.
        """
        report = self.__report
        if self.is_ok():
            outcome = "ok (fails as expected)" if self.__expect_failure else "ok"
        else:
            outcome = "UNEXPECTED PASS" if self.__expect_failure else "FAILED"
        return "{:<34} {:>6.3g} {:>4} {:<34} {:>10.3e} {:>9.1e}  {}".format(
            self.__system.describe(), self.__k, "-" if self.__case_id is None else self.__case_id,
            report.get_name(), report.get_max_rel_residual(), report.get_tolerance_used(), outcome
        )

    def get_case_id(self) -> Optional[int]:
        return self.__case_id

    def get_k(self) -> float:
        return self.__k

    def get_report(self) -> ResidualReport:
        return self.__report

    def get_system(self) -> SystemSpec:
        return self.__system

    def is_ok(self) -> bool:
        """
        Determine whether the check came out as it should.

        :return:    True, if the report passed and was meant to, or failed and was meant to, or False otherwise.
        """
        return self.__report.passed() != self.__expect_failure

    def to_dict(self) -> Dict[str, Any]:
        """
        Make a JSON-serialisable record of the check (NaN values become None).

        :return:    The record.
        """
        def finite_or_none(value: float) -> Optional[float]:
            return value if math.isfinite(value) else None

        report = self.__report
        parameters = {
            name: value for name, value in self.__system.get_parameters().items()
            if value is not None and name != "system"
        }
        return {
            "system": self.__system.get_name().value,
            "parameters": parameters,
            "k": self.__k,
            "case_id": self.__case_id,
            "check": report.get_name(),
            "max_residual": finite_or_none(report.get_max_rel_residual()),
            "location": finite_or_none(report.get_location()),
            "tolerance": report.get_tolerance_used(),
            "expect_failure": self.__expect_failure,
            "pass": self.is_ok(),
            "detail": report.get_detail()
        }

    # PUBLIC STATIC METHODS

    @staticmethod
    def from_error(system: SystemSpec, k: float, case_id: Optional[int], name: str, tolerance: float,
                   error: Exception) -> "CheckRecord":
        """
        Make a failed record for a check that raised an exception instead of producing a report.

        :param system:      The system.
        :param k:           The wavenumber.
        :param case_id:     The case the check concerns, if any.
        :param name:        The name of the check.
        :param tolerance:   The tolerance the check would have used.
        :param error:       The exception.
        :return:            The record.
        """
        report = ResidualReport(
            name, math.nan, math.nan, tolerance, detail="{}: {}".format(type(error).__name__, error)
        )
        return CheckRecord(system, k, case_id, report)
