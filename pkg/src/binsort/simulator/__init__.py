from .corpus import generate_synthetic_corpus
from .scenario import FaultInjection, Scenario, ScenarioError, ScenarioItem, load_scenario, save_scenario, scenario_from_corpus
from .virtual import BinFillState, LogicalClock, VirtualPorts
from .runner import CycleRecord, SimulationTrace, run_scenario

__all__ = [
    "generate_synthetic_corpus",
    "Scenario",
    "ScenarioItem",
    "FaultInjection",
    "ScenarioError",
    "load_scenario",
    "save_scenario",
    "scenario_from_corpus",
    "BinFillState",
    "LogicalClock",
    "VirtualPorts",
    "SimulationTrace",
    "CycleRecord",
    "run_scenario",
]
