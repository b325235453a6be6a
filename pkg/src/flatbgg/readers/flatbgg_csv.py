"""The base reader for the headed csv files written by flatbgg.exporters"""

from pathlib import Path
import json
import re

import pandas as pd

from ..exceptions import ReadError
from ..spaces import BasedSpace
from ..tools import to_rational

regular_expressions = {
    "header": r"^([A-Za-z_][A-Za-z0-9_ ]*?) =(?: (.*))?$",
    "N_header_lines": r"^N_header_lines = ([0-9]+)$",
    "json": r"^[\[\{].*[\]\}]$",
}


class FlatbggCSVReader:
    """Reads the header lines and the table of a headed csv file

    The header is every "key = value" line before the column header line. Values
    that look like json lists or dicts are parsed as json. Hand-written files may
    leave out the N_header_lines line; when it is there, it must agree with the
    position of the column header line.

    Attributes:
        path_to_file (Path): the file read by the reader
        header (dict): {key: value} of the header lines
        header_lines (list of str): the header lines, including the column header
        N_header_lines (int): the number of lines before the first record
        data (pd.DataFrame): the records, with every column read as str
    """

    delim = ","
    columns = None  # overwritten by inheriting readers

    def __init__(self):
        self.path_to_file = None
        self.header = {}
        self.header_lines = []
        self.N_header_lines = None
        self.data = None

    def read_header_and_data(self, path_to_file):
        """Read the file into self.header and self.data"""
        self.path_to_file = Path(path_to_file)
        if self.path_to_file.suffix == ".tsv":
            self.delim = "\t"
        stated_N_header_lines = None
        with open(self.path_to_file, "r") as f:
            for n_line, line in enumerate(f):
                self.header_lines.append(line)
                stripped = line.strip()
                if not stripped or stripped.startswith("#"):
                    continue
                N_match = re.search(regular_expressions["N_header_lines"], stripped)
                if N_match:
                    stated_N_header_lines = int(N_match.group(1))
                    continue
                match = re.search(regular_expressions["header"], stripped)
                if match:
                    self.header[match.group(1).strip()] = self._parse_value(
                        (match.group(2) or "").strip(), n_line
                    )
                    continue
                self.N_header_lines = n_line + 1
                break
        if self.N_header_lines is None:
            raise ReadError(f"found no column header line in {self.path_to_file}")
        if stated_N_header_lines not in (None, self.N_header_lines):
            raise ReadError(
                f"{self.path_to_file} states N_header_lines = {stated_N_header_lines}"
                f" but its column header is line {self.N_header_lines}"
            )
        self.data = pd.read_csv(
            self.path_to_file,
            sep=self.delim,
            skiprows=self.N_header_lines - 1,
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
        )
        if self.columns:
            missing = [c for c in self.columns if c not in self.data.columns]
            if missing:
                raise ReadError(f"{self.path_to_file} lacks the columns {missing}")
        return self.header, self.data

    def _parse_value(self, value, n_line):
        if re.search(regular_expressions["json"], value):
            try:
                return json.loads(value)
            except json.JSONDecodeError as e:
                raise ReadError(
                    f"could not parse line {n_line} of {self.path_to_file} as json: {e}"
                )
        return value

    def require(self, key):
        try:
            return self.header[key]
        except KeyError:
            raise ReadError(f"{self.path_to_file} has no header line '{key} = ...'")

    def space_from_header(self, prefix):
        """A BasedSpace from the {prefix}_labels, _weights and _name header lines"""
        labels = self.require(f"{prefix}_labels")
        weights = self.header.get(f"{prefix}_weights")
        name = self.header.get(f"{prefix}_name") or None
        return BasedSpace(labels, weights=weights, name=name)


def rational_column(data, path_to_file=None):
    """The exact rationals numerator/denominator of the rows of a DataFrame"""
    values = []
    for p, q in zip(data["numerator"], data["denominator"]):
        try:
            values.append(to_rational(f"{p}/{q or 1}"))
        except (ValueError, ZeroDivisionError):
            raise ReadError(f"could not read the rational {p}/{q} in {path_to_file}")
    return values


def integer_column(data, column, path_to_file=None):
    try:
        return [int(value) for value in data[column]]
    except ValueError:
        raise ReadError(f"non-integer value in column '{column}' of {path_to_file}")
