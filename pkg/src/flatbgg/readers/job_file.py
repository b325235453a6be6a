"""Module defining the reader of job files

A job file has one "key = value" line per setting. Blank lines and lines starting
with "#" are ignored. For example:

    # the twistor kernel of the conformal 3-sphere
    command = bgg
    algebra = conformal:3,0
    rep = standard
    degree = 4
"""

from pathlib import Path
import re

from ..exceptions import ConfigError

COMMANDS = ("homology", "bgg", "cup", "ainf", "dual", "deform", "verify")
VERIFY_SCOPES = ("homology", "flat", "bgg", "cup", "ainf", "dual", "deform", "all")
FORMATS = ("csv", "tsv")

regular_expressions = {
    "key": r"^\s*([A-Za-z_]+)\s*=",
    "algebra": r"=\s*(\S.*?)\s*$",
    "rep": r"=\s*(\S.*?)\s*$",
    "degree": r"=\s*([0-9]+)\s*$",
    "command": rf"=\s*({'|'.join(COMMANDS)})\s*$",
    "out": r"=\s*(\S.*?)\s*$",
    "seed": r"=\s*([0-9]+)\s*$",
    "scope": rf"=\s*({'|'.join(VERIFY_SCOPES)})\s*$",
    "format": rf"=\s*({'|'.join(FORMATS)})\s*$",
    "inject_fault": r"(?i)=\s*(true|false|yes|no|1|0)\s*$",
}


class JobFileReader:
    """Reads the settings of a job file as {key: string value}

    Errors carry the 0-based character position in the file of the key or value
    that could not be parsed.
    """

    def __init__(self):
        self.path_to_file = None
        self.settings = {}

    def read(self, path_to_file):
        self.path_to_file = Path(path_to_file)
        with open(self.path_to_file, "r") as f:
            text = f.read()
        return self.parse(text)

    def parse(self, text):
        """Return {key: value} of the lines of text"""
        position = 0
        for line in text.splitlines(keepends=True):
            self.process_line(line.rstrip("\r\n"), position)
            position += len(line)
        return self.settings

    def process_line(self, line, position):
        if not line.strip() or line.lstrip().startswith("#"):
            return
        key_match = re.search(regular_expressions["key"], line)
        if not key_match:
            raise ConfigError(
                f"expected 'key = value' in {self.path_to_file or 'job'}, got '{line}'",
                position=position,
            )
        key = key_match.group(1)
        if key not in regular_expressions or key == "key":
            raise ConfigError(
                f"unknown job setting '{key}'. Options are "
                f"{[k for k in regular_expressions if k != 'key']}",
                position=position + key_match.start(1),
            )
        if key in self.settings:
            raise ConfigError(f"job setting '{key}' given twice", position=position)
        value_match = re.search(regular_expressions[key], line[key_match.end() - 1 :])
        if not value_match:
            raise ConfigError(
                f"could not parse the value of '{key}' in '{line}'",
                position=position + key_match.end(),
            )
        self.settings[key] = value_match.group(1)
