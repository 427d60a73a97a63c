"""
Closed-form counts as functions of the tower constants.

Each function takes the parameter dict (m, k, q, d, n, N, r, s) and returns
the exact integer value.
"""

import re
from typing import Dict, List

Params = Dict[str, int]

PARAMETER_TOKEN = re.compile(r"\b([qdnNrsmk])\b")


def arc_size(p: Params) -> int:
    """(q+1)(d-1) + 1"""
    return (p["q"] + 1) * (p["d"] - 1) + 1


def secant_lines(p: Params) -> int:
    """(n+1)(q+1)/d"""
    return (p["n"] + 1) * (p["q"] + 1) // p["d"]


def external_lines(p: Params) -> int:
    """(sd - d + 1)s, the size of the dual arc"""
    s, d = p["s"], p["d"]
    return (s * d - d + 1) * s


def plane_size(p: Params) -> int:
    return p["q"] ** 2 + p["q"] + 1


def z_zero(p: Params) -> int:
    """Z(a, 0) = (d-1)N + 1"""
    return (p["d"] - 1) * p["N"] + 1


def z_nonzero(p: Params) -> List[int]:
    """Z(a, b) for b != 0 lies in {0, dN}"""
    return [0, p["d"] * p["N"]]


def N_series(p: Params) -> int:
    """sum_{j<k} d^j"""
    return sum(p["d"] ** j for j in range(p["k"]))


def irreducible_enumerator(p: Params) -> Dict[int, int]:
    """1 + (q^2 - 1) z^((d-1)q)"""
    return {0: 1, (p["d"] - 1) * p["q"]: p["q"] ** 2 - 1}


def irreducible_dual_distance(p: Params) -> int:
    return 3 if p["m"] == 1 else 2


def augmented_weights(p: Params) -> List[int]:
    """n-d, n-d+1, n"""
    n, d = p["n"], p["d"]
    return [n - d, n - d + 1, n]


def augmented_dual_distance(p: Params) -> int:
    return 4 if p["m"] == 1 else 3


def extended_enumerator(p: Params) -> Dict[int, int]:
    """1 + (q^2-1)(n+1)/d z^(n+1-d) + ((q^3-1)d - (q^2-1)(n+1))/d z^(n+1)"""
    q, d, n = p["q"], p["d"], p["n"]
    low = (q * q - 1) * (n + 1) // d
    high = ((q ** 3 - 1) * d - (q * q - 1) * (n + 1)) // d
    return {0: 1, n + 1 - d: low, n + 1: high}


def extended_dual_distance(p: Params) -> int:
    return 4 if p["m"] == 1 else 3


def dual_weight3_count(p: Params) -> int:
    """A_3 of the dual of the extended code: (d-2)(d-1)(q^2-1)(qd-q+d)/6"""
    q, d = p["q"], p["d"]
    return (d - 2) * (d - 1) * (q * q - 1) * (q * d - q + d) // 6


def min_weight_blocks(p: Params) -> int:
    """(q+1)(n+1)/d"""
    return (p["q"] + 1) * (p["n"] + 1) // p["d"]


def min_weight_lambda(p: Params) -> int:
    """(n+1-d)(n-d) / (d(d-1))"""
    n, d = p["n"], p["d"]
    return (n + 1 - d) * (n - d) // (d * (d - 1))


def dual_design_blocks(p: Params) -> int:
    """(d-2) n (n+1) / 6"""
    n, d = p["n"], p["d"]
    return (d - 2) * n * (n + 1) // 6


def instantiate(formula: str, p: Params) -> str:
    """The formula with every tower constant replaced by its value"""
    return PARAMETER_TOKEN.sub(lambda match: str(p[match.group(1)]), formula)
