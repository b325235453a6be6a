"""Export the homology table of a chain complex"""

import pandas as pd

from .csv_exporter import CSVExporter

HOMOLOGY_TABLE_COLUMNS = [
    "k",
    "dim_C",
    "dim_im_d",
    "dim_harmonic",
    "dim_im_delta",
    "dim_H",
    "harmonic_weights",
]


def homology_table_frame(complex_data):
    """The homology table of a ChainComplexData as a pandas DataFrame"""
    return pd.DataFrame(complex_data.homology_table(), columns=HOMOLOGY_TABLE_COLUMNS)


class HomologyTableExporter(CSVExporter):
    """Writes one row per degree k: the Hodge split of C_k and dim H_k

    The harmonic weights are the sorted weight multiset of H_k, separated by ";".
    """

    columns = HOMOLOGY_TABLE_COLUMNS

    def prepare_header_and_data(self, complex_data):
        self.header_lines += [
            f"complex_name = {complex_data.name}\n",
            f"dim_m = {complex_data.n}\n",
            f"euler_characteristic = {complex_data.euler_characteristic()}\n",
        ]
        self.data = homology_table_frame(complex_data)
