"""Typical-user propagation processes of heterogeneous Poisson networks."""

from ._hetnet import (
    EquivalenceReport,
    GofReport,
    IntensityMeasure,
    IsotropicModel,
    Mode,
    NetworkModel,
    PropagationSample,
    Verdict,
    average_height,
    binned_chi2,
    equivalence_verdict,
    exponential_replacement_density,
    hata_params,
    homogeneous_density,
    isotropic_representation,
    phi_corrected,
    simulate,
    time_change_ks,
    two_sample_ks,
)

__all__ = [
    "EquivalenceReport",
    "GofReport",
    "IntensityMeasure",
    "IsotropicModel",
    "Mode",
    "NetworkModel",
    "PropagationSample",
    "Verdict",
    "average_height",
    "binned_chi2",
    "equivalence_verdict",
    "exponential_replacement_density",
    "hata_params",
    "homogeneous_density",
    "isotropic_representation",
    "phi_corrected",
    "simulate",
    "time_change_ks",
    "two_sample_ks",
]
