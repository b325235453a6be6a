"""Export OperatorMatrix objects as sparse triplet csv files"""

import json

from ..tools import numerator_denominator, rational_to_string
from .csv_exporter import CSVExporter


class MatrixExporter(CSVExporter):
    """Writes one record (row, col, numerator, denominator) per nonzero entry

    The header carries the name, the shape, and the labels and weights of domain
    and codomain, so that MatrixReader rebuilds an equal OperatorMatrix.
    """

    columns = ["row", "col", "numerator", "denominator"]

    def prepare_header_and_data(self, operator):
        spaces = (("domain", operator.domain), ("codomain", operator.codomain))
        for role, space in spaces:
            self.header_lines += [
                f"{role}_name = {space.name or ''}\n",
                f"{role}_labels = {json.dumps(list(space.labels))}\n",
                f"{role}_weights = "
                f"{json.dumps([rational_to_string(w) for w in space.weights])}\n",
            ]
        self.header_lines += [
            f"matrix_name = {operator.name or ''}\n",
            f"shape = {json.dumps(list(operator.shape))}\n",
        ]
        self.data = [
            (row, col) + numerator_denominator(value)
            for (row, col), value in sorted(operator.index_entries().items())
        ]


def export_matrix(operator, path_to_file):
    return MatrixExporter().export(operator, path_to_file)
