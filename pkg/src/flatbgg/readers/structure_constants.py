"""Module defining the reader of structure constant files

A structure constant file has the header lines

    labels = ["h", "e1", ...]
    grading_element = {"h": "1"}
    m_labels = [...]        (optional)
    m_dual_labels = [...]   (optional)
    name = my_algebra       (optional)

then the records i, j, k, numerator, denominator, one per nonzero c^k_ij with
[x_i, x_j] = sum_k c^k_ij x_k. The indices may be given as integers or as labels.
A bracket given for only one order of i and j is completed by antisymmetry.
"""

from ..exceptions import ReadError
from ..lie_algebra import ParabolicGrading, build_lie_algebra
from ..spaces import BasedSpace
from .flatbgg_csv import FlatbggCSVReader, rational_column


class StructureConstantsReader(FlatbggCSVReader):
    """Reads a validated (LieAlgebraData, ParabolicGrading) pair. A file violating
    antisymmetry, the Jacobi identity or the grading raises AlgebraError."""

    columns = ["i", "j", "k", "numerator", "denominator"]

    def _index(self, basis, value):
        value = value.strip()
        if value.isdigit():
            index = int(value)
            if index >= basis.dim:
                raise ReadError(f"index {index} out of range in {self.path_to_file}")
            return index
        if value not in basis.labels:
            raise ReadError(f"unknown label '{value}' in {self.path_to_file}")
        return basis.index(value)

    def read_constants(self, path_to_file, name=None):
        """Return the validated LieAlgebraData of path_to_file, without a grading"""
        self.read_header_and_data(path_to_file)
        basis = BasedSpace(self.require("labels"), name="g")
        values = rational_column(self.data, self.path_to_file)
        indices = zip(self.data["i"], self.data["j"], self.data["k"])
        records = [
            tuple(self._index(basis, x) for x in (i, j, k)) + (value,)
            for (i, j, k), value in zip(indices, values)
        ]
        name = name or self.header.get("name") or self.path_to_file.stem
        return build_lie_algebra(basis.labels, records, name=name)

    def read(self, path_to_file, name=None):
        """Return (LieAlgebraData, ParabolicGrading) from path_to_file"""
        algebra = self.read_constants(path_to_file, name=name)
        grading_element = self.require("grading_element")
        if not isinstance(grading_element, dict):
            raise ReadError(f"grading_element of {self.path_to_file} is not a json map")
        grading = ParabolicGrading(
            algebra,
            grading_element,
            m_labels=self.header.get("m_labels"),
            m_dual_labels=self.header.get("m_dual_labels"),
        )
        return algebra, grading
