"""Heegaard diagrams as signed permutation pairs: encode, decode, analyse, search."""
from .boundary import AnalysisReport, Side, analyze, side_components, side_summary
from .decode import decode
from .encode import EncodingClass, class_size, encode_canonical, enumerate_class
from .permdata import (CyclePermutation, DataSetError, PermutationDataSet, is_transitive,
                       make_data_set, relabel, split_connected_sum)
from .presentation import (Letter, Presentation, PresentationError, parse_presentation,
                           trivially_reduce, validate_for_encoding)
from .search import SearchResult, analyze_one, search_closed
from .surface import Corner, orbit_partition, phi, surface_summary

__version__ = "0.1.0"
