from .asymptotic import asymptotic_form, asymptotic_form_columns, column_form, mgf_asymptotic, pdf_asymptotic
from .exact import (
    branch_mgf_exact,
    cdf_from_mgf,
    cdf_numeric,
    double_product_pdf_closed,
    mgf_exact,
    pdf_from_mgf,
    pdf_numeric,
    product_mgf,
)
from .model import AsymptoticForm, DoubleIidModel, SeriesTerm, SumProductModel, TColumn
from .sampling import sample_columns, sample_H
from .series import (
    SeriesEvaluation,
    branch_series_mgf,
    cdf_series,
    iter_terms,
    mgf_series,
    mgf_series_detailed,
    pdf_series,
    pdf_series_detailed,
    series_accumulate,
    series_evaluate,
    term_count,
)

__all__ = (
    "AsymptoticForm",
    "DoubleIidModel",
    "SeriesEvaluation",
    "SeriesTerm",
    "SumProductModel",
    "TColumn",
    "asymptotic_form",
    "asymptotic_form_columns",
    "branch_mgf_exact",
    "branch_series_mgf",
    "cdf_from_mgf",
    "cdf_numeric",
    "cdf_series",
    "column_form",
    "double_product_pdf_closed",
    "iter_terms",
    "mgf_asymptotic",
    "mgf_exact",
    "mgf_series",
    "mgf_series_detailed",
    "pdf_asymptotic",
    "pdf_from_mgf",
    "pdf_numeric",
    "pdf_series",
    "pdf_series_detailed",
    "product_mgf",
    "sample_H",
    "sample_columns",
    "series_accumulate",
    "series_evaluate",
    "term_count",
)
