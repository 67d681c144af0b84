"""Degree-0 chromatic symmetric homology of small graphs as Specht multiplicity tables."""

from .chain import ChainComplex, MultiplicityTable, Tabloid, homology_multiplicities
from .characters import ClassLabel, character, class_size
from .csf import CsfExpansion, chromatic_symmetric_function, csf_to_schur
from .graphs import Graph, SpanningSubgraph, star
from .linalg import RankBackend, SparseMatrix
from .partitions import Partition, parse_partition, partitions_of
from .star import StarShape, check_conjecture, mult_general, mult_hook_case, mult_two_column, predict_h10_star
from .tableaux import Tableau, enumerate_ssyt, enumerate_syt, f_syt, hook_lengths, kostka

__version__ = "0.1.0"
