from .errors import CassonError, DiagramError, FramingError, StageError, TreeError
from .diagram import (
    LinkDiagram, Tangle, parse_pd, validate, expand_annotations,
)
from .tree import SignedTree, make_ch_plus, make_ch_mn, refines, common_refinement, first_stage_kinkiness
from .operators import whitehead_double, ramified_double, cable, connect_sum, pretzel, insert_clasp_pattern
from .movie import (
    Movie, generate_c1_movie, generate_annulus_movie, generate_plane_movie,
    surface_stats, end_sum, cyclic_symmetrize, flip_ribbon_move,
)
from .invariants import h1, alexander_polynomial, unknot_certificate
from . import alpha
