import logging
import math
from collections.abc import Sequence

from lib.errors import DegenerateOrderError
from lib.specfun import log_pochhammer

from .model import AsymptoticForm, SumProductModel, TColumn

logger = logging.getLogger(__name__)


def column_form(column: TColumn) -> AsymptoticForm:
    """Small-h form of one product; the smallest shape must be unique."""
    ordered = sorted(column, key=lambda p: p.m)
    lead = ordered[0].m
    if any(p.m <= lead for p in ordered[1:]):
        raise DegenerateOrderError(f"shapes {[p.m for p in ordered]} have no strictly smallest entry")
    log_gain = math.log(2) + log_pochhammer(lead, lead) + lead * sum(math.log(p.omega) for p in ordered)
    log_gain += sum(log_pochhammer(p.m, -lead) for p in ordered[1:])
    return AsymptoticForm(log_gain, lead)


def asymptotic_form_columns(columns: Sequence[TColumn]) -> AsymptoticForm:
    """Form of a sum of independent products; columns may differ in depth."""
    if not columns:
        msg = "at least one column is required"
        raise ValueError(msg)
    form = column_form(columns[0])
    for column in columns[1:]:
        form = form.combine(column_form(column))
    logger.debug(f"Asymptotic form over {len(columns)} columns: gain={form.gain:.4e}, exponent={form.exponent:g}")
    return form


def asymptotic_form(model: SumProductModel) -> AsymptoticForm:
    return asymptotic_form_columns(model.columns)


def mgf_asymptotic(model: SumProductModel, s: float) -> float:
    """Upper bound on M_H(s) that becomes exact as s grows."""
    if s <= 0:
        msg = f"mgf_asymptotic needs s > 0, got {s:g}"
        raise ValueError(msg)
    return asymptotic_form(model).mgf(s)


def pdf_asymptotic(model: SumProductModel, h: float) -> float:
    return asymptotic_form(model).pdf(h)
