"""Community detection scored by agreement with a text-classifier ensemble."""

from . import cda, evaluation, graph, nlp
from ._kernels import backend_name
from .errors import CommtextError, ConfigError, DataError, ParseError, ShortfallError

__version__ = "0.1.0"

__all__ = [
    "graph",
    "cda",
    "nlp",
    "evaluation",
    "backend_name",
    "CommtextError",
    "ConfigError",
    "DataError",
    "ParseError",
    "ShortfallError",
]
