"""Density and survival estimation for weighted (biased-sampling) duration
data via Dirichlet process mixtures of Burr XII kernels, with
Metropolis-Hastings de-biasing back to the un-weighted law.
"""

__version__ = "0.1.0"

from .debias import DebiasChain, acceptance_prob, debias_stream
from .distributions import (Beta, BurrXII, Exponential, Gamma, InverseGamma,
                            LogNormal, ParameterError, Pareto, Uniform)
from .estimators import classic_kde, indirect_kde, silverman_bandwidth
from .mixture import (ChainResult, ChainState, Hyperparams,
                      PosteriorSnapshot, SurvivalObservation, gibbs_sweep,
                      init_state, predictive_density, predictive_draw,
                      predictive_survival, prior_predictive_density,
                      prior_predictive_survival, run_chain)
from .pipeline import (Dataset, RunConfig, cmd_debias, cmd_fit, cmd_kde,
                       cmd_report, ingest_csv, simulate, write_dataset_csv)
from .weighting import (IntegrabilityResult, LengthBias, PowerExp, UnitWeight,
                        WeightedPair, check_integrability, make_weighted)

__all__ = [
    "Beta", "BurrXII", "ChainResult", "ChainState", "Dataset", "DebiasChain",
    "Exponential", "Gamma", "Hyperparams", "IntegrabilityResult",
    "InverseGamma", "LengthBias", "LogNormal", "ParameterError", "Pareto",
    "PosteriorSnapshot", "PowerExp", "RunConfig", "SurvivalObservation",
    "Uniform", "UnitWeight", "WeightedPair", "acceptance_prob",
    "check_integrability", "classic_kde", "cmd_debias", "cmd_fit", "cmd_kde",
    "cmd_report", "debias_stream", "gibbs_sweep", "indirect_kde",
    "ingest_csv", "init_state", "make_weighted", "predictive_density",
    "predictive_draw", "predictive_survival", "prior_predictive_density",
    "prior_predictive_survival", "run_chain", "silverman_bandwidth",
    "simulate", "write_dataset_csv", "__version__",
]
