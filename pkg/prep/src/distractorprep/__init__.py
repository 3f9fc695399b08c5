"""Offline toolchain producing the generator's input files."""

from .export import export_annotations
from .kb import build_kb
from .lexgraph import convert_lexical_graph
from .manifest import PrepManifest
from .tagger import BuiltinTagger, get_tagger
from .vectors import convert_vectors

__version__ = "0.1.0"
