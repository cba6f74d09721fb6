"""Exact calculator for framed-link surgery diagrams.

Thin wrapper over the native module: parsing and validating diagrams,
polynomial and homology invariants, move scripts, and the bundled
end-to-end scenarios.
"""

from ._corkcalc import (
    Diagram,
    Error,
    alexander,
    apply_script,
    fixtures_dir,
    h1,
    linking_matrix,
    linking_number,
    load_fixture,
    parse,
    run_scenario,
    run_scenario_text,
    scenario_ids,
    twist_family,
    twist_knot,
)

__all__ = [
    "Diagram",
    "Error",
    "alexander",
    "apply_script",
    "fixtures_dir",
    "h1",
    "linking_matrix",
    "linking_number",
    "load_fixture",
    "parse",
    "run_scenario",
    "run_scenario_text",
    "scenario_ids",
    "twist_family",
    "twist_knot",
]
