"""
Field claims: the modulus, alpha and beta, the subfields, the trace, the
cyclotomic classes and the solution counts Z(a, b).
"""

from typing import Dict
import logging

import numpy as np

from src.core.config import settings
from src.core.exceptions import SizeCapError
from src.core.metrics import track_enumeration
from src.fields.binary_field import ELEMENT_DTYPE, BinaryField, is_irreducible
from src.fields.tower import FieldTower
from src.verification import formulas
from src.verification.base_verifier import BaseVerifier
from src.verification.context import RunContext

logger = logging.getLogger(__name__)

EXHAUSTIVE_AXIOM_DEGREE = 8
AXIOM_SAMPLE_SIZE = 64


def _axiom_sample(field: BinaryField) -> np.ndarray:
    """Every element for small fields, else an evenly strided sample"""
    if field.degree <= EXHAUSTIVE_AXIOM_DEGREE:
        return field.elements()
    return np.unique(np.linspace(0, field.order - 1, AXIOM_SAMPLE_SIZE).astype(ELEMENT_DTYPE))


def axiom_violations(field: BinaryField) -> int:
    """Associativity, distributivity and inverses, multiplying bit-serially"""
    sample = _axiom_sample(field)
    mul = field.mul_bitserial_array
    ys, zs = np.meshgrid(sample, sample, indexing="ij")
    ys, zs = ys.ravel(), zs.ravel()
    yz = mul(ys, zs)
    y_plus_z = ys ^ zs

    violations = 0
    for x in sample:
        left = mul(mul(x, ys), zs)
        violations += int(np.count_nonzero(left != mul(x, yz)))
        violations += int(np.count_nonzero(mul(x, y_plus_z) != (mul(x, ys) ^ mul(x, zs))))
    nonzero = sample[sample != 0]
    violations += int(np.count_nonzero(mul(nonzero, field.inv_array(nonzero)) != 1))
    # tables agree with the bit-serial product
    violations += int(np.count_nonzero(field.mul_array(ys, zs) != yz))
    track_enumeration("field_elements", len(sample) ** 3)
    return violations


def frobenius_violations(field: BinaryField) -> int:
    """x -> x^2 is additive, multiplicative and bijective (exhaustive)"""
    if field.order > settings.Z_EXHAUSTIVE_MAX_FIELD:
        raise SizeCapError("Frobenius field size", field.order, settings.Z_EXHAUSTIVE_MAX_FIELD)
    elements = field.elements()
    squares = field.pow_array(elements, 2)
    violations = field.order - len(np.unique(squares))
    for x in elements:
        sx = squares[x]
        violations += int(np.count_nonzero(squares[x ^ elements] != (sx ^ squares)))
        violations += int(np.count_nonzero(squares[field.mul_array(x, elements)] != field.mul_array(sx, squares)))
    track_enumeration("field_elements", field.order * field.order)
    return violations


def subfield_closure_violations(tower: FieldTower, elements: np.ndarray) -> int:
    pairs = len(elements) ** 2
    if pairs > settings.CLOSURE_CHECK_MAX_PAIRS:
        raise SizeCapError("subfield pairs", pairs, settings.CLOSURE_CHECK_MAX_PAIRS)
    sums = elements[:, None] ^ elements[None, :]
    products = tower.field.mul_array(elements[:, None], elements[None, :])
    track_enumeration("field_elements", pairs)
    return int(np.count_nonzero(~np.isin(sums, elements)) + np.count_nonzero(~np.isin(products, elements)))


def trace_fiber_census(tower: FieldTower) -> Dict[int, int]:
    """fiber size -> number of GF(q) values with that fiber"""
    values = tower.trace_array(tower.field.elements())
    track_enumeration("field_elements", tower.r)
    outside = int(np.count_nonzero(~np.isin(values, tower.gf_q)))
    if outside:
        return {-1: outside}
    _, counts = np.unique(values, return_counts=True)
    sizes, multiplicity = np.unique(counts, return_counts=True)
    census = {int(s): int(c) for s, c in zip(sizes, multiplicity)}
    missing = tower.q - len(counts)
    if missing:
        census[0] = missing
    return census


def trace_linearity_violations(tower: FieldTower) -> int:
    """Tr(c x + y) = c Tr(x) + Tr(y) for c in GF(q) and sampled x, y"""
    field = tower.field
    sample = _axiom_sample(field)
    xs, ys = np.meshgrid(sample, sample, indexing="ij")
    xs, ys = xs.ravel(), ys.ravel()
    scalars = tower.gf_q if tower.q <= AXIOM_SAMPLE_SIZE else tower.gf_q[:: tower.q // AXIOM_SAMPLE_SIZE]
    tr_x, tr_y = tower.trace_array(xs), tower.trace_array(ys)
    violations = 0
    for c in scalars:
        left = tower.trace_array(field.mul_array(c, xs) ^ ys)
        violations += int(np.count_nonzero(left != (field.mul_array(c, tr_x) ^ tr_y)))
    return violations


def cyclotomic_census(tower: FieldTower) -> Dict[str, int]:
    classes = [tower.cyclotomic_class(i) for i in range(tower.N)]
    covered = np.unique(np.concatenate(classes))
    sizes = sorted({len(c) for c in classes})
    return {
        "classes": len(classes),
        "size": sizes[0] if len(sizes) == 1 else -1,
        "covered": int(len(covered)),
    }


class ZCounts:
    """Z(a, b) over the a values checked: the distinct values seen per case"""

    def __init__(self, tower: FieldTower):
        nonzero = tower.field.elements()[1:]
        exhaustive = tower.r <= settings.Z_EXHAUSTIVE_MAX_FIELD
        self.checked = nonzero if exhaustive else nonzero[: settings.Z_SAMPLE_SIZE]
        self.exhaustive = exhaustive
        self.at_zero = set()
        self.at_nonzero = set()
        self.totals = set()
        for a in self.checked:
            fibers = tower.z_fiber_counts(int(a))
            self.at_zero.add(fibers[0])
            self.at_nonzero.update(c for b, c in fibers.items() if b != 0)
            self.totals.add(sum(fibers.values()))

    @property
    def note(self) -> str:
        scope = "every" if self.exhaustive else "the first"
        return f"{scope} {len(self.checked)} nonzero values of a"


class FieldVerifier(BaseVerifier):
    """Claims about GF(r) and its subfields"""

    def __init__(self):
        super().__init__("field")

    def run(self, ctx: RunContext) -> None:
        tower = ctx.tower
        field = tower.field
        p = ctx.params

        self.certify(
            ctx, "field.modulus_irreducible", "x^(2 * k * m) + ... irreducible over GF(2)",
            lambda: is_irreducible(field.modulus), True,
        )
        self.certify(
            ctx, "field.alpha_order", "ord(alpha) = r - 1",
            lambda: field.multiplicative_order(tower.alpha), p["r"] - 1,
        )
        self.certify(
            ctx, "field.beta_order", "ord(beta) = n",
            lambda: field.multiplicative_order(tower.beta), p["n"],
        )
        self.certify(
            ctx, "field.subfield_q_size", "|{x : x^q = x}| = q",
            lambda: tower.count_fixed_points(tower.q), p["q"],
        )
        self.certify(
            ctx, "field.subfield_d_size", "|{x : x^d = x}| = d",
            lambda: tower.count_fixed_points(tower.d), p["d"],
        )
        self.certify(
            ctx, "field.subfield_closure", "GF(q) and GF(d) closed under + and *",
            lambda: subfield_closure_violations(tower, tower.gf_q) + subfield_closure_violations(tower, tower.gf_d), 0,
        )
        self.certify(
            ctx, "field.axioms", "associativity, distributivity, inverses: 0 violations",
            lambda: axiom_violations(field), 0,
            note="exhaustive" if field.degree <= EXHAUSTIVE_AXIOM_DEGREE else f"strided sample of {AXIOM_SAMPLE_SIZE}",
        )
        self.certify(
            ctx, "field.frobenius", "x -> x^2 is a field automorphism: 0 violations",
            lambda: frobenius_violations(field), 0,
        )
        self.certify(
            ctx, "field.trace_fibers", "each c in GF(q) has q preimages under x + x^q",
            lambda: trace_fiber_census(tower), {p["q"]: p["q"]},
        )
        self.certify(
            ctx, "field.trace_linear", "Tr(c x + y) = c Tr(x) + Tr(y): 0 violations",
            lambda: trace_linearity_violations(tower), 0,
        )
        self.certify(
            ctx, "field.cyclotomic_partition", "N classes of size n covering r - 1 elements",
            lambda: cyclotomic_census(tower),
            {"classes": p["N"], "size": p["n"], "covered": p["r"] - 1},
        )
        self.certify(
            ctx, "field.beta_q1_generates_gf_d", "{beta^((q+1)i) : i < d - 1} = GF(d)*",
            lambda: sorted(int(v) for v in tower.beta_powers((tower.d - 1) * (tower.q + 1))[:: tower.q + 1]),
            [int(v) for v in tower.gf_d[1:]],
        )
        self.certify(
            ctx, "field.gcd_q1_N", "gcd(q + 1, N) = 1",
            tower.gcd_q_plus_one_N, 1,
        )
        self.certify(
            ctx, "field.ord_n_q", "ord_n(q) = 2",
            tower.ord_n_of_q, 2,
        )
        self.certify(
            ctx, "field.N_series", "N = (q - 1)/(d - 1) = sum_{j<k} d^j",
            lambda: tower.N, formulas.N_series(p),
        )
        self._certify_z(ctx, p)

    def _certify_z(self, ctx: RunContext, p: Dict[str, int]) -> None:
        counts = ZCounts(ctx.tower)
        self.certify(
            ctx, "field.z_zero", "Z(a, 0) = (d - 1)N + 1",
            lambda: sorted(counts.at_zero), [formulas.z_zero(p)],
            note=counts.note,
        )
        self.certify(
            ctx, "field.z_nonzero", "Z(a, b) in {0, dN} for b != 0",
            lambda: sorted(counts.at_nonzero), formulas.z_nonzero(p),
            relation="subset", note=counts.note,
        )
        self.certify(
            ctx, "field.z_total", "sum_b Z(a, b) = r",
            lambda: sorted(counts.totals), [p["r"]],
            note=counts.note,
        )
