from .probe import StabilityProbeReport, stability_probe
from .reports import oracle_csv, scenario_csv, scenario_manifest
from .scenario import (
    OracleAssertionError,
    Scenario,
    ScenarioError,
    ScenarioVerdict,
    catalog_names,
    load_catalog,
    load_scenario,
    parse_n_range,
    parse_scenario,
    resolve_family,
    scenario_paths,
    substitute,
    verify_scenario,
)

__all__ = [
    "StabilityProbeReport", "stability_probe", "oracle_csv", "scenario_csv", "scenario_manifest",
    "OracleAssertionError", "Scenario", "ScenarioError", "ScenarioVerdict", "catalog_names", "load_catalog",
    "load_scenario", "parse_n_range", "parse_scenario", "resolve_family", "scenario_paths", "substitute",
    "verify_scenario",
]
