"""
Code claims: the irreducible cyclic code C, the short MDS code E, the
augmented and extended codes, their dual distances, the MacWilliams
transform and the arc recovered from the extended code.
"""

from typing import Dict, List
import logging

import numpy as np

from src.coding.arc_recovery import arc_from_code, arc_to_code, verify_weight_line_duality
from src.coding.dual import count_weight3_dual_words, dual_distance_upto, is_projective
from src.coding.linear_code import LinearCode, WeightDistribution, code_parameters, is_cyclic
from src.coding.macwilliams import macwilliams_transform, pless_two_weight_enumerator
from src.coding.trace_codes import (
    check_concatenation,
    check_extension_coordinate,
    exponent_zero_counts,
    shift_witness,
)
from src.core.config import settings
from src.core.exceptions import CodeConstructionError, SizeCapError
from src.fields.binary_field import ELEMENT_DTYPE
from src.fields.tower import FieldTower
from src.geometry.arcs import verify_maximal
from src.verification import formulas
from src.verification.base_verifier import BaseVerifier, Deferred
from src.verification.context import RunContext

logger = logging.getLogger(__name__)


def sampled_nonzero(tower: FieldTower) -> np.ndarray:
    """Every nonzero a for small fields, else the first Z_SAMPLE_SIZE"""
    nonzero = tower.field.elements()[1:]
    if tower.r <= settings.Z_EXHAUSTIVE_MAX_FIELD:
        return nonzero
    return nonzero[: settings.Z_SAMPLE_SIZE]


def sample_note(tower: FieldTower) -> str:
    if tower.r <= settings.Z_EXHAUSTIVE_MAX_FIELD:
        return f"every nonzero a ({tower.r - 1})"
    return f"first {settings.Z_SAMPLE_SIZE} nonzero a"


def shift_failures(tower: FieldTower) -> List[int]:
    return [int(a) for a in sampled_nonzero(tower) if not shift_witness(tower, int(a))]


def is_dual_word(code: LinearCode, word) -> bool:
    """G w = 0 over GF(q)"""
    word = np.asarray(word, dtype=ELEMENT_DTYPE)
    syndrome = np.bitwise_xor.reduce(code.field.mul_array(code.gen, word[None, :]), axis=1)
    return bool(np.all(syndrome == 0))


def explicit_dual_witness(tower: FieldTower) -> List[int]:
    """beta^(q+1) at position 0 and 1 at position q+1, zero elsewhere"""
    word = [0] * tower.n
    word[0] = tower.field.pow(tower.beta, tower.q + 1)
    word[tower.q + 1] = 1
    return word


def z_weight_mismatches(tower: FieldTower) -> int:
    """#{i < n : Tr(a beta^i) = b} = (Z(a, b) - [b = 0]) / N, so
    wt(c_a + b 1) = n - (Z(a, b) - [b = 0]) / N"""
    bad = 0
    for a in sampled_nonzero(tower):
        zeros = exponent_zero_counts(tower, int(a))
        fibers = tower.z_fiber_counts(int(a))
        for b, count in zeros.items():
            if count * tower.N + (1 if b == 0 else 0) != fibers[b]:
                bad += 1
    return bad


def pless_from_weights(code: LinearCode, distribution: WeightDistribution) -> Dict[int, int]:
    """Two-weight enumerator solved from the moments, using only the two weights found"""
    weights = distribution.nonzero_weights
    if len(weights) != 2:
        raise CodeConstructionError(f"{code.name} has {len(weights)} nonzero weights, not 2", detail=weights)
    return pless_two_weight_enumerator(code.length, code.dimension, code.q, weights[0], weights[1]).counts


def macwilliams_round_trip(code: LinearCode, distribution: WeightDistribution) -> bool:
    """Transforming the dual distribution back gives the original"""
    if code.length > settings.MACWILLIAMS_FULL_MAX_LENGTH:
        raise SizeCapError("MacWilliams length", code.length, settings.MACWILLIAMS_FULL_MAX_LENGTH)
    dual = macwilliams_transform(distribution, code.length, code.dimension, code.q)
    back = macwilliams_transform(dual, code.length, code.length - code.dimension, code.q)
    return back.counts == distribution.counts


class CodeVerifier(BaseVerifier):
    """Claims about the trace codes"""

    def __init__(self):
        super().__init__("code")

    def run(self, ctx: RunContext) -> None:
        self._certify_irreducible(ctx)
        self._certify_short(ctx)
        self._certify_augmented(ctx)
        self._certify_extended(ctx)

        tower = ctx.tower
        p = ctx.params
        self.certify(
            ctx, "code.z_weight_identity", "wt(c_a + b 1) = n - (Z(a, b) - [b = 0])/N: 0 mismatches",
            lambda: z_weight_mismatches(tower), 0,
            note=sample_note(tower),
        )
        self.certify(
            ctx, "code.arc_to_code", "columns = arc points gives weights (s d - s) d and (s d - s + 1) d",
            lambda: ctx.weights(arc_to_code(ctx.plane, ctx.arc, name="arc")).nonzero_weights,
            [p["n"] + 1 - p["d"], p["n"] + 1],
        )

    def _certify_irreducible(self, ctx: RunContext) -> None:
        tower = ctx.tower
        p = ctx.params
        n, d = p["n"], p["d"]
        code = ctx.code_C

        self.certify(
            ctx, "code.irreducible.dimension", "rank of C = 2",
            code.rank, 2,
        )
        self.certify(
            ctx, "code.irreducible.weight_enumerator", "1 + (q^2 - 1) z^((d - 1) q)",
            lambda: ctx.weights(code).counts, formulas.irreducible_enumerator(p),
        )
        self.certify(
            ctx, "code.irreducible.parameters", "[n, 2, n - d + 1]",
            lambda: list(code_parameters(code, ctx.weights(code)).as_tuple()), [n, 2, n - d + 1],
        )
        self.certify(
            ctx, "code.irreducible.cyclic", "C is closed under the cyclic shift",
            lambda: is_cyclic(code), True,
        )
        self.certify(
            ctx, "code.irreducible.shift", "shifting c_(a beta) by one gives c_a",
            lambda: shift_failures(tower), [],
            note=sample_note(tower),
        )
        self.certify(
            ctx, "code.irreducible.dual_distance", "d(C^perp) = 3 if m = 1 else 2",
            lambda: dual_distance_upto(code).value, formulas.irreducible_dual_distance(p),
            witness=lambda _: dual_distance_upto(code).witness,
        )
        if p["m"] == 1:
            self.skip(
                ctx, "code.irreducible.dual_witness", "(beta^(q+1), 0, ..., 0, 1, 0, ...) in C^perp",
                "no weight-2 dual word when m = 1",
            )
        else:
            self.certify(
                ctx, "code.irreducible.dual_witness", "(beta^(q+1), 0, ..., 0, 1, 0, ...) in C^perp",
                lambda: is_dual_word(code, explicit_dual_witness(tower)), True,
                witness=lambda _: explicit_dual_witness(tower),
            )
        self.certify(
            ctx, "code.concatenation", "c_a = e_a | s_1 e_a | ... | s_(d-2) e_a, {s_i} = GF(d)*",
            lambda: _concatenation(tower), {"failures": 0, "scalars_gf_d_star": True},
        )

    def _certify_short(self, ctx: RunContext) -> None:
        p = ctx.params
        q = p["q"]
        code = ctx.code_E

        self.certify(
            ctx, "code.short.parameters", "[q + 1, 2, q] (MDS)",
            lambda: list(code_parameters(code, ctx.weights(code)).as_tuple()), [q + 1, 2, q],
        )
        self.certify(
            ctx, "code.short.dual_distance", "d(E^perp) = 3",
            lambda: dual_distance_upto(code).value, 3,
        )
        if p["m"] == 1:
            self.certify(
                ctx, "code.short.equals_irreducible", "E = C when d = 2",
                lambda: bool(np.array_equal(code.gen, ctx.code_C.gen)), True,
            )
        else:
            self.skip(ctx, "code.short.equals_irreducible", "E = C when d = 2", "d > 2: E is a proper puncturing of C")

    def _certify_augmented(self, ctx: RunContext) -> None:
        p = ctx.params
        code = ctx.code_augmented
        expected = formulas.augmented_weights(p)

        self.certify(
            ctx, "code.augmented.dimension", "rank of C + <1> = 3",
            code.rank, 3,
        )
        self.certify(
            ctx, "code.augmented.weights", "nonzero weights in {n - d, n - d + 1, n}",
            lambda: ctx.weights(code).nonzero_weights, expected,
            relation="subset",
        )
        self.certify(
            ctx, "code.augmented.weights_attained", "each of n - d, n - d + 1, n occurs",
            lambda: ctx.weights(code).nonzero_weights, expected,
        )
        if p["m"] * p["k"] == 1:
            self.skip(
                ctx, "code.augmented.dual_distance", "d(aug^perp) = 4 if m = 1 else 3",
                "the augmented code is all of GF(2)^3, its dual is zero",
            )
        else:
            self.certify(
                ctx, "code.augmented.dual_distance", "d(aug^perp) = 4 if m = 1 else 3",
                lambda: dual_distance_upto(code).value, formulas.augmented_dual_distance(p),
            )
        self.certify(
            ctx, "code.augmented.cyclic", "C + <1> is cyclic",
            lambda: is_cyclic(code), True,
        )

    def _certify_extended(self, ctx: RunContext) -> None:
        plane = ctx.plane
        tower = ctx.tower
        p = ctx.params
        n, d = p["n"], p["d"]
        code = ctx.code_extended
        distribution = Deferred(lambda: ctx.weights(code))

        self.certify(
            ctx, "code.extended.weight_enumerator",
            "1 + ((q^2 - 1)(n + 1)/d) z^(n + 1 - d) + (((q^3 - 1) d - (q^2 - 1)(n + 1))/d) z^(n + 1)",
            lambda: distribution().counts, formulas.extended_enumerator(p),
        )
        self.certify(
            ctx, "code.extended.two_weight_moments", "power moments with weights n + 1 - d, n + 1",
            lambda: pless_from_weights(code, distribution()), formulas.extended_enumerator(p),
        )
        self.certify(
            ctx, "code.extended.parity_coordinate", "parity coordinate of c_a + b 1 is b",
            lambda: check_extension_coordinate(tower).passed, True,
        )
        self.certify(
            ctx, "code.extended.projective", "no zero and no proportional columns",
            lambda: is_projective(code), True,
        )
        self.certify(
            ctx, "code.extended.dual_distance", "d(ext^perp) = 4 if m = 1 else 3",
            lambda: dual_distance_upto(code).value, formulas.extended_dual_distance(p),
        )
        self.certify(
            ctx, "code.extended.macwilliams_low", "A'_0 = 1, A'_1 = A'_2 = 0, A'_3 = (d-2)(d-1)(q^2-1)(q d - q + d)/6",
            lambda: _dual_low(code, distribution()), [1, 0, 0, formulas.dual_weight3_count(p)],
        )
        self.certify(
            ctx, "code.extended.weight3_search", "(q - 1) x dependent column triples = (d-2)(d-1)(q^2-1)(q d - q + d)/6",
            lambda: count_weight3_dual_words(code), formulas.dual_weight3_count(p),
        )
        self.certify(
            ctx, "code.extended.macwilliams_involution", "transforming the dual distribution back is the identity",
            lambda: macwilliams_round_trip(code, distribution()), True,
        )

        def recovered() -> Dict[str, object]:
            report = verify_maximal(plane, arc_from_code(plane, code))
            return {"size": report.size, "degree": report.degree, "maximal": report.passed}

        self.certify(
            ctx, "code.extended.recovered_arc", "generator columns form a maximal arc of size n + 1 and degree d",
            recovered, {"size": n + 1, "degree": d, "maximal": True},
        )
        self.certify(
            ctx, "code.extended.weight_line_duality", "wt(u G) = n + 1 - |line u meets the columns|: 0 mismatches",
            lambda: verify_weight_line_duality(plane, code).mismatches, 0,
        )
        self.certify(
            ctx, "code.extended.cyclic_on_first_n", "cyclic on the first n coordinates, parity fixed",
            lambda: is_cyclic(code, window=n), True,
        )


def _concatenation(tower: FieldTower) -> Dict[str, object]:
    report = check_concatenation(tower)
    return {"failures": len(report.failures), "scalars_gf_d_star": report.scalars_are_gf_d_star}


def _dual_low(code: LinearCode, distribution: WeightDistribution) -> List[int]:
    dual = macwilliams_transform(distribution, code.length, code.dimension, code.q, upto=3)
    return [dual.count(j) for j in range(4)]

