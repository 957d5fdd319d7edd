"""Strong partitions of regular 2-balanced multipartite tournaments."""

from .constructions import (attach_controlled_part, build_G1, build_G2, build_H0, build_T,
                            named)
from .control import (ControlType, auxiliary_tournament, classify_pair, control_matrix,
                      from_tournament, is_good_to, part_good_to, render_control_matrix,
                      structure_test_theorem5)
from .core import (CanonicalForm, DegreeInfo, MultipartiteTournament, Regularity, VertexId,
                   build, canonical_form, decode, degree_info, delete_part, encode,
                   is_isomorphic, is_nearly_regular, is_regular, regularity, relabel,
                   swap_slots, tournament)
from .errors import *  # noqa: F401,F403
from .partitions import (Partition, PartitionKind, PartStats, census, classify_partition,
                         enumerate_partitions, has_st_partition, is_strong, part_stats)

__version__ = "0.1.0"
