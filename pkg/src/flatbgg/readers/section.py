"""Module defining the reader of the section files of SectionExporter"""

from ..exceptions import ReadError
from ..flat_model import Section
from .flatbgg_csv import FlatbggCSVReader, rational_column


class SectionReader(FlatbggCSVReader):

    columns = ["exponent", "fiber_label", "numerator", "denominator"]

    def read(self, path_to_file):
        """Return the Section in path_to_file"""
        self.read_header_and_data(path_to_file)
        fiber = self.space_from_header("fiber")
        try:
            n_vars = int(self.require("n_vars"))
        except ValueError:
            raise ReadError(f"n_vars of {self.path_to_file} is not an integer")
        coefficients = {}
        values = rational_column(self.data, self.path_to_file)
        for exponent, label, value in zip(
            self.data["exponent"], self.data["fiber_label"], values
        ):
            try:
                exponent = tuple(int(e) for e in exponent.split())
            except ValueError:
                raise ReadError(f"could not read the exponent '{exponent}'")
            if len(exponent) != n_vars:
                raise ReadError(f"exponent {exponent} does not have {n_vars} entries")
            coefficients.setdefault(exponent, {})[fiber.index(label)] = value
        return Section(fiber, n_vars, coefficients)
