"""Import readers and build the READER_CLASSES dictionary for direct import

Constants:
    READER_CLASSES (dict): Dictionary of {artifact: ReaderClass} where artifact is
        the kind of file (like "matrix") and ReaderClass is the reader class for
        parsing it.
"""
# artifacts written by flatbgg.exporters
from .flatbgg_csv import FlatbggCSVReader
from .matrix import MatrixReader
from .homology_table import HomologyTableReader
from .section import SectionReader

# inputs
from .structure_constants import StructureConstantsReader
from .job_file import JobFileReader


READER_CLASSES = {
    "matrix": MatrixReader,
    "homology_table": HomologyTableReader,
    "section": SectionReader,
    "structure_constants": StructureConstantsReader,
    "job": JobFileReader,
}
