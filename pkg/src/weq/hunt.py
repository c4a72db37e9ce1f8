"""Exhaustive sweep over small quadratic instances, classifying each one and
recording the instances that resist both certification and the growing-
exponent heuristic.

The sweep never claims a counterexample: a Suspect entry is an instance with
infinitely many solutions, constraints outside the supported variety, no
pumpable state on any enumerated simple cycle, and a maximal observed
exponent that did not grow between two oracle bounds.  Anything in that
bucket is flagged for manual study, nothing more.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from . import oracle
from .equations import ConstraintMorphism, Instance, SymbolTable, WordEquation, format_instance
from .periodicity import find_nicely_balanced_on_cycle, simple_cycles
from .semigroup import FiniteSemigroup, is_dlg
from .solution_graph import build, has_infinitely_many, is_solvable


class BudgetExceeded(Exception):
    """Sweep stopped early; `report` carries the partial results."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


CONSTANT_POOL = tuple("abcdefgh")
VARIABLE_POOL = tuple("XYZUVW")


def quadratic_equations(n_constants: int, max_vars: int, max_len: int):
    """All equations (U, V) over the fixed token pools with nonempty sides,
    |UV| <= max_len, and every variable occurring at most twice."""
    sigma = CONSTANT_POOL[:n_constants]
    variables = VARIABLE_POOL[:max_vars]
    alphabet = sigma + variables
    for total in range(2, max_len + 1):
        for word in itertools.product(alphabet, repeat=total):
            if any(word.count(v) > 2 for v in variables):
                continue
            for cut in range(1, total):
                yield WordEquation(word[:cut], word[cut:]), sigma, variables


def canonical_key(eq: WordEquation, sigma, variables, image=None):
    """Minimal form under constant renaming and variable renaming (equation
    reversal and side swaps are intentionally not quotiented)."""
    used_vars = tuple(v for v in variables if v in eq.lhs + eq.rhs)
    best = None
    for cperm in itertools.permutations(sigma):
        cmap = dict(zip(sigma, cperm))
        for vperm in itertools.permutations(used_vars):
            vmap = dict(zip(used_vars, vperm))
            ren = {**cmap, **vmap}
            cand = (
                tuple(ren[t] for t in eq.lhs),
                tuple(ren[t] for t in eq.rhs),
                tuple(sorted((ren[s], e) for s, e in image.items())) if image else (),
            )
            if best is None or cand < best:
                best = cand
    return best


def sweep_instances(sg: FiniteSemigroup, n_constants: int, max_vars: int, max_len: int):
    """Canonical quadratic instances with every constraint map into sg."""
    seen: set = set()
    for eq, sigma, variables in quadratic_equations(n_constants, max_vars, max_len):
        used = tuple(v for v in variables if v in eq.lhs + eq.rhs)
        syms = SymbolTable(sigma, used)
        for images in itertools.product(sg.elements(), repeat=len(syms.all_symbols())):
            mapping = dict(zip(syms.all_symbols(), images))
            key = canonical_key(eq, sigma, used, mapping)
            if key in seen:
                continue
            seen.add(key)
            mu = ConstraintMorphism.from_dict(syms, sg, mapping)
            yield Instance((eq,), mu)


@dataclass
class HuntReport:
    parameters: dict
    total: int = 0
    unsatisfiable: int = 0
    finite: int = 0
    infinite_certified: int = 0
    suspects: int = 0
    discharged: int = 0
    truncated: bool = False
    findings: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "parameters": self.parameters,
            "total": self.total,
            "unsatisfiable": self.unsatisfiable,
            "finite": self.finite,
            "infinite_certified": self.infinite_certified,
            "suspects": self.suspects,
            "discharged": self.discharged,
            "truncated": self.truncated,
        }


def classify(ins: Instance, cycle_cap: int = 20, oracle_budget: int = oracle.DEFAULT_BUDGET) -> tuple[str, dict]:
    g = build(ins)
    if not is_solvable(g):
        return "Unsatisfiable", {}
    if not has_infinitely_many(g):
        return "FiniteSol", {}
    dlg = is_dlg(ins.mu.target).holds
    cycles = simple_cycles(g, max_len=cycle_cap)
    for cycle in cycles:
        if find_nicely_balanced_on_cycle(g, cycle, raise_on_miss=dlg) is not None:
            return "InfiniteCertified", {}
    eq = ins.equation
    low = len(eq.lhs) + len(eq.rhs)
    detail: dict = {"cycles_checked": len(cycles)}
    try:
        e1 = oracle.max_exp_up_to(ins, low, budget=oracle_budget)
        e2 = oracle.max_exp_up_to(ins, low + 2, budget=oracle_budget)
        detail["max_exp"] = {"low_bound": low, "low": e1, "high_bound": low + 2, "high": e2}
        stagnant = e2 <= e1
    except oracle.BudgetExceeded:
        detail["max_exp"] = None
        stagnant = True  # cannot discharge; stay suspicious
    if stagnant:
        return "Suspect", detail
    return "Discharged", detail


def run_hunt(
    sg: FiniteSemigroup,
    n_constants: int,
    max_vars: int,
    max_len: int,
    budget: int,
    seed: int = 0,
    findings_path: str | None = None,
    sg_spec: str | None = None,
) -> HuntReport:
    report = HuntReport(parameters={
        "semigroup": sg_spec or sg.label or "custom",
        "constants": n_constants,
        "max_vars": max_vars,
        "max_len": max_len,
        "budget": budget,
        "seed": seed,
    })
    instances = list(sweep_instances(sg, n_constants, max_vars, max_len))
    random.Random(seed).shuffle(instances)
    sink = open(findings_path, "w", encoding="utf-8") if findings_path else None
    try:
        for ins in instances:
            if report.total >= budget:
                report.truncated = True
                raise BudgetExceeded(f"instance budget {budget} exhausted", report)
            report.total += 1
            clazz, detail = classify(ins)
            if clazz == "Unsatisfiable":
                report.unsatisfiable += 1
            elif clazz == "FiniteSol":
                report.finite += 1
            elif clazz == "InfiniteCertified":
                report.infinite_certified += 1
            elif clazz == "Discharged":
                report.discharged += 1
            else:
                report.suspects += 1
                entry = {
                    "class": "Suspect",
                    "instance": format_instance(ins, sg_spec=sg_spec),
                    "length_constraints": None,
                    **detail,
                }
                report.findings.append(entry)
                if sink:
                    sink.write(json.dumps(entry, sort_keys=True) + "\n")
                    sink.flush()
    finally:
        if sink:
            sink.close()
    return report
