# src/application/use_cases/verify_identities.py

import logging
from typing import Any, Dict, Union

from src.application.services.lemma_verifier import (
    verify_bn_report,
    verify_eq3_report,
    verify_lemma_tr,
    verify_square_law,
    verify_trace_sum,
)
from src.core.entities.estimates import VerificationReport
from src.core.value_objects.moebius_map import (
    hyperbolic_from_fixed_points,
    parabolic_from_fixed_point,
)
from src.shared.constants import DEFAULT_LEMMA_NMAX, LemmaName
from src.shared.utils.exceptions import ValidationError

logger = logging.getLogger(__name__)


class VerifyIdentitiesUseCase:
    """Dispatch one identity check on synthetic maps built from scalar parameters."""

    REQUIRED = {
        LemmaName.TRACE: ('lsrc', 'ltgt'),
        LemmaName.SQUARE: ('omega', 'fixed'),
        LemmaName.TRACE_SUM: ('omega', 'fixed'),
        LemmaName.CONJUGATE: ('lambda', 'N', 'n'),
        LemmaName.EXPONENT_LIMIT: ('lsrc', 'ltgt'),
    }

    def execute(self, lemma: Union[LemmaName, str], params: Dict[str, Any]) -> VerificationReport:
        lemma = LemmaName(lemma) if not isinstance(lemma, LemmaName) else lemma
        for key in self.REQUIRED[lemma]:
            if params.get(key) is None:
                raise ValidationError("required parameter missing", field=f"--{key}")

        if lemma in (LemmaName.SQUARE, LemmaName.TRACE_SUM):
            h = parabolic_from_fixed_point(params['omega'], params['fixed'])
            report = verify_square_law(h) if lemma == LemmaName.SQUARE else verify_trace_sum(h)
        elif lemma == LemmaName.CONJUGATE:
            report = verify_eq3_report(params['lambda'], params['N'], int(params['n']))
        else:
            n_max = int(params.get('nmax') or DEFAULT_LEMMA_NMAX)
            g_src = hyperbolic_from_fixed_points(params['lsrc'], 0.0, params.get('nsrc') or 1.0)
            g_tgt = hyperbolic_from_fixed_points(params['ltgt'], 0.0, params.get('ntgt') or 1.0)
            if lemma == LemmaName.TRACE:
                report = verify_lemma_tr(g_src, g_tgt, n_max)
            else:
                report = verify_bn_report(g_src, g_tgt, n_max)

        status = "PASS" if report.passed else "FAIL"
        logger.info(f"verify {lemma.value}: {status}, residual {report.residual:.3g}")
        return report
