"""Export verification reports and the wall times of their checks"""

import json
from pathlib import Path

from .csv_exporter import CSVExporter


class ReportExporter:
    """Writes a report dictionary as sorted, indented json

    The dictionary carries no wall times unless config.record_timings, so two runs
    with the same job and seed write identical files.
    """

    def __init__(self):
        self.path_to_file = None

    def export(self, report, path_to_file):
        """Write report (dict) to path_to_file (.json appended if no suffix)"""
        path_to_file = Path(path_to_file)
        if not path_to_file.suffix:
            path_to_file = path_to_file.with_suffix(".json")
        self.path_to_file = path_to_file
        with open(path_to_file, "w", newline="\n") as f:
            f.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        return path_to_file


class TimingsExporter(CSVExporter):
    """Writes the wall time of each check, as given by VerificationReport.timings()"""

    columns = ["name", "group", "seconds"]

    def prepare_header_and_data(self, timings):
        self.data = [(t["name"], t["group"], t["seconds"]) for t in timings]
