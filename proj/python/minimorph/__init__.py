"""Complex-valued harmonic morphisms: exact verification, minimal fibers."""

import json

try:
    from ._minimorph import (
        MinimorphError,
        Morphism,
        catalog_names,
        _report_all_json,
        _trace_json,
        _variety_json,
        _verify_json,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _minimorph import (
        MinimorphError,
        Morphism,
        catalog_names,
        _report_all_json,
        _trace_json,
        _variety_json,
        _verify_json,
    )

__all__ = [
    "MinimorphError",
    "Morphism",
    "catalog_names",
    "variety",
    "verify",
    "trace",
    "report_all",
]


def variety(b1, b2, branch="+", seed=424242):
    """Quadric coefficient point from free parameters; exact rational strings.

    Returns the report as a dict; components of the quintuple are exact
    numerator/denominator strings.
    """
    return json.loads(_variety_json(str(b1), str(b2), branch, seed))


def verify(name, mode="auto", seed=424242):
    """Identity suite for a catalog entry. mode: auto | exact | numeric."""
    return json.loads(_verify_json(name, mode, seed))


def trace(name, alpha, grid=(21, 21), step_h=0.02, out_dir=".", seed=424242):
    """Trace a fiber patch of ``phi = alpha`` and certify its minimality.

    Writes PLY/CSV/JSON artifacts into ``out_dir`` and returns the report.
    """
    return json.loads(
        _trace_json(name, complex(alpha), grid[0], grid[1], step_h, str(out_dir), seed)
    )


def report_all(seed=424242):
    """Run the full acceptance suite and return the consolidated report."""
    return json.loads(_report_all_json(seed))
