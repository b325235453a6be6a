"""The base class for exporting flatbgg artifacts as headed csv files

Every csv artifact starts with header lines "key = value", followed by a line
"N_header_lines = N", a blank line, and the column header line. The data below
is one record per row. The readers of flatbgg.readers read these files back.
"""

from pathlib import Path

import pandas as pd

from .. import __version__

FORMAT_VERSION = 1


class CSVExporter:
    """Writes a header and a table of records to a csv file

    Inheriting exporters set `columns` and `default_suffix` and implement
    prepare_header_and_data(), which fills self.header_lines and self.data.
    """

    columns = None  # overwritten by inheriting exporters
    """The names of the columns, in order"""
    delim = ","
    """The delimiter"""

    def __init__(self):
        self.header_lines = None
        self.data = None
        self.path_to_file = None

    def export(self, obj, path_to_file, delim=None):
        """Export obj to path_to_file and return the path written

        This delegates its work to:
        - prepare_header_and_data()
        - prepare_column_header()
        - write_header()
        - write_data()

        Args:
            obj: The object to export, an OperatorMatrix, Section, etc.
            path_to_file (Path or str): The path to the file to write. If it has no
                suffix, a .csv suffix is appended.
            delim (str): Delimiter. Defaults to self.delim.
        """
        path_to_file = Path(path_to_file)
        if not path_to_file.suffix:
            path_to_file = path_to_file.with_suffix(".csv")
        self.delim = delim or self.delim
        self.path_to_file = path_to_file
        self.header_lines = [
            f"flatbgg version = {__version__}\n",
            f"format_version = {FORMAT_VERSION}\n",
        ]
        self.prepare_header_and_data(obj)
        self.prepare_column_header()
        self.write_header()
        self.write_data()
        return path_to_file

    def prepare_header_and_data(self, obj):
        raise NotImplementedError

    def prepare_column_header(self):
        """Prepare the column header line and finish the header_lines"""
        N_header_lines = len(self.header_lines) + 3
        self.header_lines.append(f"N_header_lines = {N_header_lines}\n")
        self.header_lines.append("\n")
        self.header_lines.append(self.delim.join(self.columns) + "\n")

    def write_header(self):
        """Create the file and write the header lines."""
        with open(self.path_to_file, "w", newline="\n") as f:
            f.writelines(self.header_lines)

    def write_data(self):
        """Append the records of self.data below the header"""
        data = pd.DataFrame(self.data, columns=self.columns)
        with open(self.path_to_file, "a", newline="\n") as f:
            data.to_csv(f, sep=self.delim, header=False, index=False)
