"""
Testing the axioms
==================

The harness draws random rational instances for each axiom and theorem and
reports any failures. A sound model passes every check. A model that flips
the sign of the product fails positive definiteness right away, and the
counterexample gets shrunk to small integer coordinates.
"""

from arrowspace import SignFlipped
from arrowspace.harness import TrialConfig, run_axiom_suite, run_theorem_suite

cfg = TrialConfig(trials=200, dim=3, seed=42)

report = run_axiom_suite(cfg)
print(report.to_text(), end="")
print("axioms ok:", report.ok)

report = run_theorem_suite(cfg, only=["vector."])
print("vector theorems ok:", report.ok, "(%d checks)" % len(report.results))

broken = run_axiom_suite(cfg, SignFlipped(), only=["axiom1.positive"])
print(broken.to_text(), end="")
