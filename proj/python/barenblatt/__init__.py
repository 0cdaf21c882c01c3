"""Self-similar compactly supported densities."""

from ._barenblatt import (
    DomainError,
    FamilyParams,
    ball_probability,
    catalan,
    cdf_1d,
    char_fn_1d,
    char_fn_projection,
    char_fn_radial,
    epd_preset,
    npme_preset,
    pdf,
    pdf_at_radius,
    ple_preset,
    quantile_1d,
    radial_moment,
    radial_pdf,
    run_suite,
    sample,
    suite_names,
    support_radius,
    total_mass,
    wigner_preset,
)

__all__ = [
    "DomainError",
    "FamilyParams",
    "ball_probability",
    "catalan",
    "cdf_1d",
    "char_fn_1d",
    "char_fn_projection",
    "char_fn_radial",
    "epd_preset",
    "npme_preset",
    "pdf",
    "pdf_at_radius",
    "ple_preset",
    "quantile_1d",
    "radial_moment",
    "radial_pdf",
    "run_suite",
    "sample",
    "suite_names",
    "support_radius",
    "total_mass",
    "wigner_preset",
]
