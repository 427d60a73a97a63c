"""
Everything constructed for one (m, k), built lazily and shared between the
construction service and the verifiers.
"""

from functools import cached_property
from typing import Dict, List, Optional
import logging

from src.coding.linear_code import LinearCode, WeightDistribution, weight_distribution
from src.coding.trace_codes import augment, build_irreducible_cyclic, build_short_code, extend
from src.core.metrics import track_stage
from src.dependencies import get_plane
from src.geometry.arcs import (
    AdditiveSubgroupSet,
    ArcPartition,
    MaximalArc,
    base_subgroup,
    build_partition,
    denniston_arc,
)
from src.geometry.collineations import Collineation, GroupClosure, group_closure, group_G1, group_G2
from src.geometry.conics import ConicPencil, pencil_parameter
from src.geometry.plane import ProjectivePlane

logger = logging.getLogger(__name__)


class RunContext:
    """
    Lazily built objects of one run.

    Attributes:
        m, k: Tower parameters
        modulus: Modulus override for GF(r), if any
        jobs: Worker count for enumerations
        arc_override: Arc loaded from a file, verified instead of the base arc
    """

    def __init__(
        self,
        m: int,
        k: int,
        modulus: Optional[int] = None,
        jobs: int = 1,
        arc_override: Optional[MaximalArc] = None,
    ):
        self.m = m
        self.k = k
        self.modulus = modulus
        self.jobs = jobs
        self.arc_override = arc_override
        self._distributions: Dict[str, WeightDistribution] = {}

    @cached_property
    def plane(self) -> ProjectivePlane:
        return get_plane(self.m, self.k, self.modulus)

    @property
    def tower(self):
        return self.plane.tower

    @property
    def params(self) -> Dict[str, int]:
        return self.tower.params.as_dict()

    # ------------------------------------------------------------------
    # geometry
    # ------------------------------------------------------------------

    @cached_property
    def b(self) -> int:
        return pencil_parameter(self.plane)

    @cached_property
    def pencil(self) -> ConicPencil:
        return ConicPencil(self.plane, self.b)

    @cached_property
    def H(self) -> AdditiveSubgroupSet:
        return base_subgroup(self.tower)

    @cached_property
    def base_arc(self) -> MaximalArc:
        with track_stage("construct_arc"):
            return denniston_arc(self.plane, self.H, self.b)

    @property
    def arc(self) -> MaximalArc:
        """The arc under test: the loaded file if given, else the base arc"""
        return self.arc_override if self.arc_override is not None else self.base_arc

    @cached_property
    def partition(self) -> ArcPartition:
        with track_stage("construct_partition"):
            return build_partition(self.plane, self.b)

    @cached_property
    def G1(self) -> List[Collineation]:
        return group_G1(self.plane, self.b)

    @cached_property
    def G2(self) -> List[Collineation]:
        return group_G2(self.plane)

    @cached_property
    def group(self) -> GroupClosure:
        with track_stage("group_closure"):
            return group_closure(self.plane, self.G1 + self.G2)

    @cached_property
    def G1_closure(self) -> GroupClosure:
        return group_closure(self.plane, self.G1)

    # ------------------------------------------------------------------
    # codes
    # ------------------------------------------------------------------

    @cached_property
    def code_C(self) -> LinearCode:
        return build_irreducible_cyclic(self.tower)

    @cached_property
    def code_E(self) -> LinearCode:
        return build_short_code(self.tower)

    @cached_property
    def code_augmented(self) -> LinearCode:
        return augment(self.code_C)

    @cached_property
    def code_extended(self) -> LinearCode:
        return extend(self.code_augmented)

    def codes(self) -> Dict[str, LinearCode]:
        return {
            "C": self.code_C,
            "E": self.code_E,
            "augmented": self.code_augmented,
            "extended": self.code_extended,
        }

    def weights(self, code: LinearCode) -> WeightDistribution:
        """Weight distribution, computed once per code"""
        if code.name not in self._distributions:
            with track_stage(f"weights_{code.name}"):
                self._distributions[code.name] = weight_distribution(code, jobs=self.jobs)
        return self._distributions[code.name]
