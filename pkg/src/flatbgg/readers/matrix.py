"""Module defining the reader of the sparse triplet files of MatrixExporter"""

from ..exceptions import ReadError
from ..operator_matrix import OperatorMatrix
from .flatbgg_csv import FlatbggCSVReader, integer_column, rational_column


class MatrixReader(FlatbggCSVReader):
    """Reads an OperatorMatrix equal to the exported one, labels and weights included"""

    columns = ["row", "col", "numerator", "denominator"]

    def read(self, path_to_file):
        """Return the OperatorMatrix in path_to_file"""
        self.read_header_and_data(path_to_file)
        domain = self.space_from_header("domain")
        codomain = self.space_from_header("codomain")
        shape = tuple(self.require("shape"))
        if shape != (codomain.dim, domain.dim):
            raise ReadError(
                f"{self.path_to_file} states the shape {shape} but has "
                f"{codomain.dim} codomain and {domain.dim} domain labels"
            )
        rows = integer_column(self.data, "row", self.path_to_file)
        cols = integer_column(self.data, "col", self.path_to_file)
        values = rational_column(self.data, self.path_to_file)
        dok = {}
        for row, col, value in zip(rows, cols, values):
            if not (0 <= row < shape[0] and 0 <= col < shape[1]):
                raise ReadError(f"entry ({row}, {col}) out of shape {shape}")
            if (row, col) in dok:
                raise ReadError(f"repeated entry ({row}, {col}) in {self.path_to_file}")
            dok[(row, col)] = value
        name = self.header.get("matrix_name") or None
        return OperatorMatrix.from_index_entries(domain, codomain, dok, name=name)
