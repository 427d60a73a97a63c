"""PG(2,q): points, lines, conics, collineations and maximal arcs"""

from .plane import LineIncidence, ProjectivePlane, ProjLine, ProjPoint, enumerate_lines, enumerate_points
from .conics import NUCLEUS, Conic, ConicPencil, conic_points, pencil_parameter
from .collineations import (
    Collineation,
    GroupClosure,
    apply_to_line,
    apply_to_point,
    element_order,
    group_closure,
    group_G1,
    group_G2,
    line_stabilizer,
    orbit,
)
from .arcs import (
    AdditiveSubgroupSet,
    ArcPartition,
    ArcReport,
    MaximalArc,
    build_partition,
    cyclotomic_arc,
    denniston_arc,
    dual_arc,
    verify_field_model_orbits,
    verify_group_action,
    verify_line_stabilizer,
    verify_maximal,
)

__all__ = [
    "LineIncidence",
    "ProjectivePlane",
    "ProjLine",
    "ProjPoint",
    "enumerate_lines",
    "enumerate_points",
    "NUCLEUS",
    "Conic",
    "ConicPencil",
    "conic_points",
    "pencil_parameter",
    "Collineation",
    "GroupClosure",
    "apply_to_line",
    "apply_to_point",
    "element_order",
    "group_closure",
    "group_G1",
    "group_G2",
    "line_stabilizer",
    "orbit",
    "AdditiveSubgroupSet",
    "ArcPartition",
    "ArcReport",
    "MaximalArc",
    "build_partition",
    "cyclotomic_arc",
    "denniston_arc",
    "dual_arc",
    "verify_field_model_orbits",
    "verify_group_action",
    "verify_line_stabilizer",
    "verify_maximal",
]
