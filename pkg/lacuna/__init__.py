"""lacuna: certified constructions for the uniqueness theory of trigonometric series.

The package builds a lacunary frequency sequence, encloses the limit point
Omega of its odd-numerator approximants with exact rational arithmetic,
steers Omega into a chosen subinterval, runs the deletion sieve over size
sequences, and checks amplitude-phase and coefficient-decay behaviour of
trigonometric series numerically.

Public names are exported lazily so that importing the package (or a light
submodule like :mod:`lacuna.exact`) does not pull ``numpy`` unless the trig
layer is actually used.
"""

import importlib
from typing import Any

__version__ = "0.1.0"

__all__ = [
    # exact arithmetic
    "Rational",
    "Enclosure",
    "make_enclosure",
    "normalize_rational",
    "parse_rational",
    "reduce_mod_two",
    "cos_pi",
    # sequences
    "LacunarySequence",
    "validate",
    "default_generator",
    "extend",
    # omega
    "OddChain",
    "ApproximantChain",
    "OmegaEnclosure",
    "ThetaResidual",
    "approximants",
    "omega_enclosure",
    "theta",
    "theta_table",
    # targeting
    "TargetSpec",
    "TargetedOmega",
    "targeted_omega",
    "targeted_residuals",
    # sieve
    "SizeSequence",
    "Ladder",
    "SieveReport",
    "sizes",
    "eventually_below",
    "null_subsequence",
    # trig
    "CoefficientPair",
    "PolarTerm",
    "to_polar",
    "from_polar",
    "partial_sum",
    "resonance_point",
    "decay_check",
    # errors, config + logging
    "LacunaError",
    "AppConfig",
    "load_config",
    "setup_logging",
]

# Map each exported name to the submodule that defines it.
_EXPORTS = {
    "Rational": "exact",
    "Enclosure": "exact",
    "make_enclosure": "exact",
    "normalize_rational": "exact",
    "parse_rational": "exact",
    "reduce_mod_two": "exact",
    "cos_pi": "exact",
    "LacunarySequence": "sequence",
    "validate": "sequence",
    "default_generator": "sequence",
    "extend": "sequence",
    "OddChain": "omega",
    "ApproximantChain": "omega",
    "OmegaEnclosure": "omega",
    "ThetaResidual": "omega",
    "approximants": "omega",
    "omega_enclosure": "omega",
    "theta": "omega",
    "theta_table": "omega",
    "TargetSpec": "target",
    "TargetedOmega": "target",
    "targeted_omega": "target",
    "targeted_residuals": "target",
    "SizeSequence": "sieve",
    "Ladder": "sieve",
    "SieveReport": "sieve",
    "sizes": "sieve",
    "eventually_below": "sieve",
    "null_subsequence": "sieve",
    "CoefficientPair": "trig",
    "PolarTerm": "trig",
    "to_polar": "trig",
    "from_polar": "trig",
    "partial_sum": "trig",
    "resonance_point": "trig",
    "decay_check": "trig",
    "LacunaError": "errors",
    "AppConfig": "config",
    "load_config": "config",
    "setup_logging": "logging_config",
}


def __getattr__(name: str) -> Any:  # PEP 562 lazy attribute access
    module_name = _EXPORTS.get(name)
    if module_name is None:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
    module = importlib.import_module(f".{module_name}", __name__)
    return getattr(module, name)


def __dir__():
    return sorted(__all__)
