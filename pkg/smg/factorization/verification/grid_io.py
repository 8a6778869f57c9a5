import json
import numpy as np
import os

from enum import Enum
from typing import Any, Dict, List, Optional

from ..systems import SystemSpec
from .wavefunction_grid import WavefunctionGrid


class EGridFormat(Enum):
    """The file formats in which sampled wavefunctions can be written."""

    CSV = "csv"
    JSONL = "jsonl"

    # PUBLIC STATIC METHODS

    @staticmethod
    def from_path(path: str) -> "EGridFormat":
        """
        Infer the format of a file from its extension (anything other than .jsonl is taken to be CSV).

        :param path:    The path to the file.
        :return:        The format.
        """
        return EGridFormat.JSONL if os.path.splitext(path)[1].lower() == ".jsonl" else EGridFormat.CSV


class GridIO:
    """
    Reads and writes sampled wavefunctions.

    .. note::
        Each row holds q, Re u, Im u, Re W, Im W and V_eff. Floats are written with repr, which round-trips them
        exactly, so a grid that is written and read back is bit-for-bit the same. The system, the wavenumber, the
        shift α and the case are written as a JSON metadata record: in a "# meta:" comment line of a CSV file, or as
        the first line of a JSON-lines file.
    """

    # CONSTANTS

    COLUMNS = ["q", "re_u", "im_u", "re_w", "im_w", "v_eff"]  # type: List[str]

    # PUBLIC STATIC METHODS

    @staticmethod
    def read(path: str) -> WavefunctionGrid:
        """
        Read a grid from a file.

        :param path:        The path to the file.
        :return:            The grid.
        :raises ValueError: If the file does not contain a metadata record.
        """
        with open(path, "r", encoding="utf-8") as f:
            lines = [line.rstrip("\n") for line in f if line.strip()]

        meta = None    # type: Optional[Dict[str, Any]]
        rows = []      # type: List[Dict[str, float]]
        if EGridFormat.from_path(path) is EGridFormat.JSONL:
            for line in lines:
                record = json.loads(line)
                if "meta" in record:
                    meta = record["meta"]
                else:
                    rows.append(record)
        else:
            for line in lines:
                if line.startswith("# meta:"):
                    meta = json.loads(line[len("# meta:"):])
                elif not line.startswith("#") and not line.startswith(GridIO.COLUMNS[0] + ","):
                    rows.append(dict(zip(GridIO.COLUMNS, (float(v) for v in line.split(",")))))

        if meta is None:
            raise ValueError("'{}' has no metadata record".format(path))

        def column(name: str) -> np.ndarray:
            return np.array([row[name] for row in rows], dtype=float)

        def complex_column(re_name: str, im_name: str) -> np.ndarray:
            values = np.empty(len(rows), dtype=complex)
            values.real = column(re_name)
            values.imag = column(im_name)
            return values

        return WavefunctionGrid(
            SystemSpec.from_parameters(meta["parameters"]), meta["k"], column("q"),
            complex_column("re_u", "im_u"), alpha=meta["alpha"], case_id=meta.get("case"),
            w=complex_column("re_w", "im_w")
        )

    @staticmethod
    def write(grid: WavefunctionGrid, path: str, fmt: Optional[EGridFormat] = None) -> None:
        """
        Write a grid to a file.

        :param grid:    The grid.
        :param path:    The path to the file.
        :param fmt:     The format (optional; inferred from the extension if not given).
        """
        fmt = fmt if fmt is not None else EGridFormat.from_path(path)
        meta = {
            "parameters": grid.get_system().get_parameters(), "k": grid.get_k(), "alpha": grid.get_alpha(),
            "case": grid.get_case_id(), "airy_normalization": grid.get_airy_normalization()
        }

        w = grid.get_w() if grid.get_w() is not None else np.full(grid.get_n(), complex(np.nan, np.nan))
        columns = [grid.get_q(), grid.get_u().real, grid.get_u().imag, w.real, w.imag, grid.effective_potential()]
        rows = [[float(c[i]) for c in columns] for i in range(grid.get_n())]

        with open(path, "w", encoding="utf-8") as f:
            if fmt is EGridFormat.JSONL:
                f.write(json.dumps({"meta": meta}) + "\n")
                for row in rows:
                    f.write(json.dumps(dict(zip(GridIO.COLUMNS, row))) + "\n")
            else:
                f.write("# smg-factorization wavefunction sample\n")
                f.write("# meta: {}\n".format(json.dumps(meta)))
                f.write("# q: physical coordinate; re_u, im_u: reduced wavefunction (global phase removed); "
                        "re_w, im_w: superpotential (NaN at nodes); v_eff: effective potential\n")
                f.write(",".join(GridIO.COLUMNS) + "\n")
                for row in rows:
                    f.write(",".join(repr(v) for v in row) + "\n")
