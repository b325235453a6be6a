"""Configuration variables including the standard output directory

The object `config` created here gives direct access to these options.
Example useage:

```
from flatbgg.config import config

config.n_random_samples = 5  # fewer random sections per product check
config.verbose = True  # print progress of long constructions
```

See `help(flatbgg.config._Config)` for information.
"""
import os
from pathlib import Path

OUTPUT_DIRECTORY_VARIABLE = "FLATBGG_OUTPUT_DIR"


class _Config:
    """
    Attributes:
        output_directory (Path): the directory in which jobs write their artifacts by
            default. Taken from the environment variable FLATBGG_OUTPUT_DIR if it is
            set. flatbgg makes the directory when a job writes to it.
        default_seed (int): The seed of the random rational sections when a job does
            not give one.
        default_max_degree (int): The polynomial degree cutoff D when a job does not
            give one.
        n_random_samples (int): The number of random sections (or pairs, triples)
            drawn per product identity.
        numerator_bound (int): Random rationals p/q have |p| <= numerator_bound.
        denominator_bound (int): Random rationals p/q have 1 <= q <= denominator_bound
        max_a_infinity_arity (int): The highest arity m for which the A-infinity
            relations are checked by default.
        elimination_method (str): The method passed to DomainMatrix.rref_den. "CD"
            clears denominators and does fraction-free elimination over the integers.
        verbose (bool): Whether long constructions print progress lines.
        record_timings (bool): Whether wall times go into the report file. They are
            always written to a separate timings file.
    """

    def __init__(self):
        self.output_directory = Path(
            os.environ.get(
                OUTPUT_DIRECTORY_VARIABLE, Path.home() / ".flatbgg" / "output"
            )
        )
        self.default_seed = 0
        self.default_max_degree = 3
        self.n_random_samples = 20
        self.numerator_bound = 3
        self.denominator_bound = 3
        self.max_a_infinity_arity = 3
        self.elimination_method = "CD"
        self.verbose = False
        self.record_timings = False

    @property
    def output_dir(self):
        """The output directory, created if it does not exist"""
        if not self.output_directory.exists():
            self.output_directory.mkdir(parents=True)
        return self.output_directory


config = _Config()
