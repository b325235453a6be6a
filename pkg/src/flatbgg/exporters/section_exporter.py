"""Export polynomial sections"""

import json

from ..tools import numerator_denominator, rational_to_string
from .csv_exporter import CSVExporter


class SectionExporter(CSVExporter):
    """Writes one record per nonzero term: exponent vector, fiber label, value

    The exponent vector is written as space-separated integers, like "0 2 1".
    """

    columns = ["exponent", "fiber_label", "numerator", "denominator"]

    def prepare_header_and_data(self, section):
        fiber = section.fiber
        weights = [rational_to_string(w) for w in fiber.weights]
        self.header_lines += [
            f"fiber_name = {fiber.name or ''}\n",
            f"fiber_labels = {json.dumps(list(fiber.labels))}\n",
            f"fiber_weights = {json.dumps(weights)}\n",
            f"n_vars = {section.n_vars}\n",
        ]
        self.data = [
            (" ".join(str(e) for e in exponent), label)
            + numerator_denominator(value)
            for exponent, label, value in section.records()
        ]
