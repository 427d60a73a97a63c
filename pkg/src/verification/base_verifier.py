"""
Base verifier abstract class.
All claim groups (field, arc, partition, group, code, designs) inherit from it.
"""

from abc import ABC, abstractmethod
from typing import Any, Callable, List, Optional
import logging

from src.core.exceptions import MaximalArcError, SizeCapError
from src.core.metrics import track_certificate, track_stage
from src.schemas.certificate_schemas import Certificate
from src.verification.context import RunContext
from src.verification.formulas import instantiate

logger = logging.getLogger(__name__)


class Deferred:
    """A computation shared by several claims, run on first use

    The result, or the toolkit error it raised, is kept and handed to every
    later caller.
    """

    def __init__(self, compute: Callable[[], Any]):
        self._compute = compute
        self._done = False
        self._value: Any = None
        self._error: Optional[MaximalArcError] = None

    def __call__(self) -> Any:
        if not self._done:
            try:
                self._value = self._compute()
            except MaximalArcError as e:
                self._error = e
            self._done = True
        if self._error is not None:
            raise self._error
        return self._value


class BaseVerifier(ABC):
    """
    Abstract base class for claim groups.

    Subclasses implement run(), which calls certify() once per claim.
    Claims whose computation hits a desk-scale cap come out as skipped.
    """

    def __init__(self, name: str):
        """Initialize verifier

        Args:
            name: Target name on the command line (e.g. "arc", "code")
        """
        self.name = name
        self._certificates: List[Certificate] = []
        logger.debug(f"Initialized {self.name} verifier")

    @abstractmethod
    def run(self, ctx: RunContext) -> None:
        """Check every claim of the group against ctx

        Args:
            ctx: Lazily built objects for one (m, k)
        """
        pass

    def verify(self, ctx: RunContext) -> List[Certificate]:
        """Run the group and return its certificates in claim order"""
        self._certificates = []
        with track_stage(f"verify_{self.name}"):
            self.run(ctx)
        certificates, self._certificates = self._certificates, []
        return certificates

    def certify(
        self,
        ctx: RunContext,
        claim: str,
        formula: str,
        compute: Callable[[], Any],
        expected: Any,
        relation: str = "eq",
        witness: Optional[Callable[[Any], Any]] = None,
        note: Optional[str] = None,
    ) -> Certificate:
        """Evaluate one claim

        Args:
            claim: Dotted claim id
            formula: Closed form in terms of q, d, n, N, r, s, m, k
            compute: Independent computation of the value
            expected: The closed-form value
            relation: "eq" (exact equality) or "subset" (computed values
                contained in the expected list)
            witness: Builds a witness from the computed value on failure
            note: Free text stored with the certificate
        """
        params = ctx.params
        try:
            computed = compute()
        except SizeCapError as e:
            logger.warning(
                "Claim skipped at size cap",
                extra={"claim": claim, "what": e.what, "value": e.value, "cap": e.cap}
            )
            return self._record(Certificate(
                claim=claim,
                status="skipped",
                formula=formula,
                formula_value=_plain(expected),
                parameters=params,
                instantiated=instantiate(formula, params),
                relation=relation,
                note=str(e),
            ))
        except MaximalArcError as e:
            logger.warning(
                "Claim computation rejected its input",
                extra={"claim": claim, "error_type": type(e).__name__, "error": str(e)}
            )
            return self._record(Certificate(
                claim=claim,
                status="fail",
                formula=formula,
                formula_value=_plain(expected),
                parameters=params,
                instantiated=instantiate(formula, params),
                relation=relation,
                note=f"{type(e).__name__}: {e}",
            ))

        if relation == "subset":
            passed = set(_plain(computed)) <= set(_plain(expected))
        else:
            passed = _plain(computed) == _plain(expected)

        certificate = Certificate(
            claim=claim,
            status="pass" if passed else "fail",
            formula=formula,
            formula_value=_plain(expected),
            computed_value=_plain(computed),
            parameters=params,
            instantiated=instantiate(formula, params),
            witness=_plain(witness(computed)) if (witness and not passed) else None,
            relation=relation,
            note=note,
        )
        if not passed:
            logger.warning(
                "Claim failed",
                extra={"claim": claim, "expected": certificate.formula_value, "computed": certificate.computed_value}
            )
        return self._record(certificate)

    def skip(self, ctx: RunContext, claim: str, formula: str, note: str, computed: Any = None) -> Certificate:
        """Record a claim that is reported but not classified"""
        params = ctx.params
        return self._record(Certificate(
            claim=claim,
            status="skipped",
            formula=formula,
            computed_value=_plain(computed),
            parameters=params,
            instantiated=instantiate(formula, params),
            note=note,
        ))

    def _record(self, certificate: Certificate) -> Certificate:
        track_certificate(certificate.group, certificate.status)
        self._certificates.append(certificate)
        return certificate


def _plain(value: Any) -> Any:
    """Convert numpy scalars, tuples, sets and dataclass-like values to JSON types"""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, dict):
        return {(int(k) if _is_int(k) else str(k)): _plain(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "to_list"):
        return _plain(value.to_list())
    if hasattr(value, "tolist"):
        return value.tolist()
    if _is_int(value):
        return int(value)
    return value


def _is_int(value: Any) -> bool:
    try:
        return int(value) == value and not isinstance(value, bool)
    except (TypeError, ValueError):
        return False
