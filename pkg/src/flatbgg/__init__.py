"""initialize flatbgg, giving top-level access to a few of the important structures
"""

__version__ = "0.1.0"
__title__ = "flatbgg"
__description__ = "Exact curved BGG machinery on flat parabolic models"
__author__ = "The flatbgg developers"
__license__ = "MIT"

from .config import config
from .algebras import builtin_parabolic
from .representations import build_representation
from .homology import ChainComplexData
from .bgg import BGGContext, DualBGGContext
from . import exporters
from . import readers
