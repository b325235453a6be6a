"""Import exporters and build the EXPORTER_CLASSES dictionary

Constants:
    EXPORTER_CLASSES (dict): Dictionary of {artifact: ExporterClass}
"""

from .csv_exporter import CSVExporter
from .matrix_exporter import MatrixExporter, export_matrix
from .homology_table_exporter import HomologyTableExporter, homology_table_frame
from .section_exporter import SectionExporter
from .report_exporter import ReportExporter, TimingsExporter

EXPORTER_CLASSES = {
    "matrix": MatrixExporter,
    "homology_table": HomologyTableExporter,
    "section": SectionExporter,
    "report": ReportExporter,
    "timings": TimingsExporter,
}
