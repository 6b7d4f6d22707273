from .diversity import diversity_order, empirical_diversity_slope
from .metrics import (
    aser,
    aser_from_mgf,
    aser_series,
    channel_cdf,
    channel_mgf,
    expected_q,
    outage_curve,
    outage_probability,
    outage_series,
    series_model,
    snr_mgf,
    snr_mgf_series,
    snr_pdf,
    snr_pdf_curve,
    snr_pdf_series,
    upper_form,
)
from .model import IrsModel, MetricMethod, ModulationSpec, TModulationName

__all__ = (
    "IrsModel",
    "MetricMethod",
    "ModulationSpec",
    "TModulationName",
    "aser",
    "aser_from_mgf",
    "aser_series",
    "channel_cdf",
    "channel_mgf",
    "diversity_order",
    "empirical_diversity_slope",
    "expected_q",
    "outage_curve",
    "outage_probability",
    "outage_series",
    "series_model",
    "snr_mgf",
    "snr_mgf_series",
    "snr_pdf",
    "snr_pdf_curve",
    "snr_pdf_series",
    "upper_form",
)
