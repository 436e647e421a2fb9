"""codespectra: random matrices from linear codes and their spectra.

Build a code, map random codewords through the additive character, center
the Gram matrix, and compare its spectrum with the Wigner semicircle law:

    >>> from codespectra import (gold_code, augment_all_ones, sample_codewords,
    ...                          centered_matrix, hermitian_eigenvalues,
    ...                          esd_from_spectrum, interval_discrepancy)
    >>> code = augment_all_ones(gold_code(5))
    >>> mat = centered_matrix(sample_codewords(code, p=8, seed=7))
    >>> esd = esd_from_spectrum(hermitian_eigenvalues(mat.m))
    >>> 0 <= interval_discrepancy(esd) <= 1
    True
"""

from ._rng import DEFAULT_SEED, SplitMix64, avalanche, trial_seed
from .codematrix import (
    CenteredMatrix,
    CharacterMap,
    CodewordMatrix,
    centered_matrix,
    character_map,
    coherence_statistic,
    dump_codeword_matrix,
    gram_matrix,
    load_exponent_dump,
    psi_apply,
    sample_codewords,
)
from .codes import (
    DualDistanceCertificate,
    DualTooLargeError,
    LinearCode,
    RankDeficiencyError,
    Witness,
    augment_all_ones,
    build_named,
    code_from_generator,
    codeword_by_index,
    codewords_for_indices,
    dual_distance_at_least,
    dual_distance_exact,
    gold_code,
    read_generator,
    reed_muller_1,
    sphere_packing_ratio,
    write_generator,
)
from .eigen import (
    ConvergenceError,
    NonHermitianError,
    Spectrum,
    green_function,
    hermitian_eigenvalues,
    zeroed_green_function,
)
from .gf import (
    FieldElement,
    FieldMismatchError,
    FieldSpec,
    get_field,
    modulus_from_string,
    multiplicative_order,
)
from .harness import (
    DEFAULT_Z_GRID,
    PAPER_TRIPLES,
    CertificationError,
    ExperimentConfig,
    InvalidConfigError,
    RateFit,
    fit_rate,
    fit_rate_from_summaries,
    read_summary_csv,
    run_experiment,
    run_trial,
    write_summary_csv,
)
from .semicircle import sc_cdf, sc_interval, sc_pdf, sc_stieltjes
from .spectral import (
    ConcentrationReport,
    DiscrepancyReport,
    EmpiricalSpectralDistribution,
    MomentReport,
    concentration_probe,
    delta_estimate,
    discrepancy_parts,
    empirical_stieltjes,
    esd_from_spectrum,
    esd_from_values,
    interval_discrepancy,
    ks_statistic,
    moment_oracle,
)
from .svgplot import plot_esd, read_esd_csv, render_esd_svg

__version__ = "0.1.0"
