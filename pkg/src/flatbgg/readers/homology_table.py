"""Module defining the reader of the homology tables of HomologyTableExporter"""

from ..exporters.homology_table_exporter import HOMOLOGY_TABLE_COLUMNS
from .flatbgg_csv import FlatbggCSVReader, integer_column


class HomologyTableReader(FlatbggCSVReader):
    """Reads a homology table into a DataFrame equal to homology_table_frame()"""

    columns = HOMOLOGY_TABLE_COLUMNS

    def read(self, path_to_file):
        self.read_header_and_data(path_to_file)
        table = self.data[self.columns].copy()
        for column in self.columns[:-1]:
            table[column] = integer_column(table, column, self.path_to_file)
        return table
