"""Blow-up charts, center dimensions and geometric pullback of divisor classes."""
from .centers import c21_center, center_dimension, stated_dimension
from .charts import CHARTS, BlowupChart, atlas_dump, chart_to_base
from .pullback import (
    PseudoIsoCertificate,
    PullbackDisagreement,
    PullbackReport,
    compare_with_table,
    contraction_witness,
    contraction_witnesses,
    matrix_of,
    pseudo_iso_certificate,
    pullback_class,
)
from .suites import chart_roundtrip, prop1_intersection_suite

__all__ = [
    "BlowupChart", "CHARTS", "PseudoIsoCertificate", "PullbackDisagreement", "PullbackReport",
    "atlas_dump", "c21_center", "center_dimension", "chart_roundtrip", "chart_to_base",
    "compare_with_table", "contraction_witness", "contraction_witnesses", "matrix_of",
    "prop1_intersection_suite", "pseudo_iso_certificate", "pullback_class", "stated_dimension",
]
