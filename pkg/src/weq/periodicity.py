"""Infinitude-of-exponent machinery for quadratic instances.

Detects states that admit pumping (a head variable whose opposite-side
prefix stabilizes its constraint image, or a variable with an infinite
constraint language that is absent from the equation), analyzes the
invariants of strongly connected components, and assembles reusable
certificates that instantiate to solutions of arbitrarily large exponent
of periodicity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .equations import (
    EquationError,
    Instance,
    Solution,
    Word,
    exp_solution,
    preimage_infinite,
    preimage_pump,
    require_solution,
)
from .semigroup import green, is_dlg, omega, stab_L
from .solution_graph import (
    SolutionGraph,
    _apply_label,
    build,
    has_infinitely_many,
)


class NotDLG(EquationError):
    """The constraint target is outside the supported variety."""


class TheoremViolation(AssertionError):
    """A guaranteed search came back empty; indicates an implementation bug."""


# ---------------------------------------------------------------------------
# nicely balanced states


@dataclass(frozen=True)
class BalanceWitness:
    variable: str
    absent: bool
    swapped: bool  # the pumpable side is the right-hand side
    u: Word = ()
    v: Word = ()
    v_prime: Word = ()


def _constraint_infinite(g: SolutionGraph, element: int) -> bool:
    cache = g._cache.setdefault("preimage_infinite", {})
    if element not in cache:
        cache[element] = preimage_infinite(g.instance.mu, element)
    return cache[element]


def _stab(g: SolutionGraph, element: int) -> frozenset[int]:
    cache = g._cache.setdefault("stab", {})
    if element not in cache:
        cache[element] = stab_L(g.instance.mu.target, element)
    return cache[element]


def is_nicely_balanced(g: SolutionGraph, sid: int, var: str) -> BalanceWitness | None:
    """Whether the state admits pumping on `var`: the constraint language of
    the variable is infinite and either the variable is absent from the
    equation, or (up to swapping sides) the equation reads X u = v X v' with
    the image of v an L-stabilizer of the image of X."""
    st = g.states[sid]
    if var not in st.varset:
        raise EquationError(f"variable {var!r} is not active in state {sid}")
    mu_x = dict(st.mu_items)[var]
    if not _constraint_infinite(g, mu_x):
        return None
    body = st.lhs + st.rhs
    if var not in body:
        return BalanceWitness(var, absent=True, swapped=False)
    for swapped, (this, other) in ((False, (st.lhs, st.rhs)), (True, (st.rhs, st.lhs))):
        if not this or this[0] != var or var in this[1:]:
            continue
        if other.count(var) != 1:
            continue
        i = other.index(var)
        v, v_prime = other[:i], other[i + 1:]
        if g.state_eval1(sid, v) in _stab(g, mu_x):
            return BalanceWitness(var, False, swapped, this[1:], v, v_prime)
    return None


# ---------------------------------------------------------------------------
# SCC invariants


@dataclass(frozen=True)
class StatePlayground:
    prefix_lhs: Word
    prefix_rhs: Word
    size: int
    players: frozenset[str]
    balanced: frozenset[str]
    unbalanced: frozenset[str]


@dataclass
class SccAnalysis:
    component: tuple[int, ...]
    leading_J: frozenset[int] | None
    leading_stab: frozenset[int] | None
    per_state: dict[int, StatePlayground]
    violations: tuple[str, ...]


def _head_j_candidates(g: SolutionGraph, gr, sid: int, comp: set[int]) -> tuple[list[int], list[str]]:
    """J-class indices contributing to a state's leading J-class, plus any
    structural violations found."""
    st = g.states[sid]
    syms = g.instance.symbols
    mu = g.state_mu(sid)
    violations: list[str] = []
    if st.is_true:
        # no heads; use the variables driving the in-component transitions
        cands = []
        for tid in g.out[sid]:
            t = g.transitions[tid]
            if g.scc.comp_of[t.target] != g.scc.comp_of[sid] or t.label is None:
                continue
            var = t.label[0]
            cands.append(gr.indexJ[mu[var]])
        if not cands:
            violations.append(f"state {sid}: no in-component transition to read a class from")
        return sorted(set(cands)), violations
    heads = (st.lhs[0], st.rhs[0])
    var_heads = [h for h in heads if syms.is_variable(h)]
    if not var_heads:
        violations.append(f"state {sid}: both heads are constants inside a cyclic component")
        return sorted({gr.indexJ[mu[h]] for h in heads}), violations
    if len(var_heads) == 1:
        return [gr.indexJ[mu[var_heads[0]]]], violations
    return sorted({gr.indexJ[mu[h]] for h in var_heads}), violations


def analyze_scc(g: SolutionGraph, comp_index: int) -> SccAnalysis:
    """Leading J-class, leading stabilizer, playgrounds and players of one
    strongly connected component that contains a transition.

    When the constraint target is in the supported variety the cross-state
    invariants are asserted; otherwise failures are reported in
    `violations`.
    """
    if not g.scc.has_transition[comp_index]:
        raise EquationError("component has no transition; nothing to analyze")
    comp = g.scc.components[comp_index]
    comp_set = set(comp)
    target = g.instance.mu.target
    gr = g._cache.setdefault("green", green(target))
    dlg = g._cache.setdefault("dlg", is_dlg(target, gr).holds)
    violations: list[str] = []

    leading_per_state: dict[int, int | None] = {}
    for sid in comp:
        cands, vio = _head_j_candidates(g, gr, sid, comp_set)
        violations.extend(vio)
        if not cands:
            leading_per_state[sid] = None
            continue
        reps = [gr.classesJ[c][0] for c in cands]
        mins = [
            c for c, r in zip(cands, reps)
            if all(gr.leq_J(r, r2) for r2 in reps)
        ]
        if not mins:
            violations.append(f"state {sid}: head J-classes are incomparable")
            leading_per_state[sid] = min(cands)
        else:
            leading_per_state[sid] = mins[0]
    values = {v for v in leading_per_state.values() if v is not None}
    if len(values) > 1:
        violations.append(f"leading J-class differs across states: {sorted(values)}")
    leading = min(values) if values else None
    leading_J = frozenset(gr.classesJ[leading]) if leading is not None else None
    leading_stab = _stab(g, gr.classesJ[leading][0]) if leading is not None else None

    per_state: dict[int, StatePlayground] = {}
    for sid in comp:
        st = g.states[sid]
        mu = g.state_mu(sid)

        def prefix(word: Word) -> Word:
            for i, tok in enumerate(word):
                if leading_stab is None or mu[tok] not in leading_stab:
                    return word[:i + 1]
            return word

        pl, pr = prefix(st.lhs), prefix(st.rhs)
        body = pl + pr
        players = frozenset(
            v for v in st.varset
            if leading is not None
            and gr.indexJ[mu[v]] == leading
            and body.count(v) == 2
            and _constraint_infinite(g, mu[v])
        )
        balanced = frozenset(v for v in players if pl.count(v) == 1 and pr.count(v) == 1)
        per_state[sid] = StatePlayground(
            pl, pr, len(body), players, balanced, players - balanced,
        )
    sizes = {p.size for p in per_state.values()}
    players_sets = {p.players for p in per_state.values()}
    if len(sizes) > 1:
        violations.append(f"playground size differs across states: {sorted(sizes)}")
    if len(players_sets) > 1:
        violations.append("player sets differ across states")
    if dlg and violations:
        raise TheoremViolation(
            f"component invariants failed under supported constraints: {violations}"
        )
    return SccAnalysis(comp, leading_J, leading_stab, per_state, tuple(violations))


# ---------------------------------------------------------------------------
# cycles


def simple_cycles(g: SolutionGraph, max_len: int = 20, max_count: int = 10000) -> list[tuple[int, ...]]:
    """Simple cycles (as state sequences, repetition of the anchor implied),
    grouped by component in topological order, then ordered by length and by
    state ids.  Enumeration is capped at `max_count` per component."""
    out: list[tuple[int, ...]] = []
    for ci, comp in enumerate(g.scc.components):
        if not g.scc.has_transition[ci]:
            continue
        comp_set = set(comp)
        cycles: list[tuple[int, ...]] = []
        for anchor in comp:
            # DFS over states >= anchor so each cycle is found at its least state
            stack = [(anchor, (anchor,))]
            while stack and len(cycles) < max_count:
                node, path = stack.pop()
                for tid in g.out[node]:
                    t = g.transitions[tid]
                    nxt = t.target
                    if nxt not in comp_set or nxt < anchor:
                        continue
                    if nxt == anchor:
                        cycles.append(path)
                    elif nxt not in path and len(path) < max_len:
                        stack.append((nxt, path + (nxt,)))
        cycles = sorted(set(cycles), key=lambda c: (len(c), c))
        out.extend(cycles)
    return out


def find_nicely_balanced_on_cycle(
    g: SolutionGraph, cycle, raise_on_miss: bool | None = None
) -> tuple[int, str, BalanceWitness] | None:
    """Walk the cycle's states in order, testing every active variable; under
    supported constraints a hit is guaranteed, so a miss raises."""
    syms = g.instance.symbols
    for sid in cycle:
        st = g.states[sid]
        for var in sorted(st.varset, key=syms.variable_order):
            wit = is_nicely_balanced(g, sid, var)
            if wit is not None:
                return sid, var, wit
    if raise_on_miss is None:
        raise_on_miss = g._cache.setdefault("dlg", is_dlg(g.instance.mu.target).holds)
    if raise_on_miss:
        raise TheoremViolation(f"no pumpable state on cycle {tuple(cycle)}")
    return None


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class PumpingCertificate:
    """Reusable witness that solutions of unbounded exponent exist.

    `prefix_path` leads from the initial state to the pumpable state; `base`
    solves that state's equation.  In the head-balanced case the variable is
    re-solved as base(v)^(m*omega) base(X); in the free-variable case it is
    re-solved as u y^m w from the constraint-language pump.
    """

    state: int
    variable: str
    case: str  # "head_balanced" | "free_variable"
    prefix_labels: tuple[tuple[str, Word] | None, ...]
    base: tuple[tuple[str, Word], ...]
    v: Word | None = None
    omega_exponent: int | None = None
    pump: tuple[Word, Word, Word] | None = None

    def base_dict(self) -> dict[str, Word]:
        return dict(self.base)


def _shortest_path(g: SolutionGraph, src: int, dst: int) -> list[int]:
    if src == dst:
        return []
    prev: dict[int, int] = {src: -1}
    queue = deque([src])
    while queue:
        at = queue.popleft()
        for tid in g.out[at]:
            t = g.transitions[tid]
            if t.target not in prev:
                prev[t.target] = tid
                if t.target == dst:
                    path = []
                    back = dst
                    while back != src:
                        tid2 = prev[back]
                        path.append(tid2)
                        back = g.transitions[tid2].source
                    return path[::-1]
                queue.append(t.target)
    raise EquationError(f"state {dst} unreachable from {src}")


def _first_accepting_path(g: SolutionGraph, start: int) -> list[int]:
    """First accepting path in depth-first order over the deterministic
    transition order; exists because the automaton is trim."""
    if start in g.finals:
        return []
    visited = {start}
    path: list[int] = []

    def dfs(at: int) -> bool:
        for tid in g.out[at]:
            t = g.transitions[tid]
            if t.target in visited:
                continue
            visited.add(t.target)
            path.append(tid)
            if t.target in g.finals or dfs(t.target):
                return True
            path.pop()
        return False

    if not dfs(start):
        raise EquationError("trimmed state has no accepting continuation")  # pragma: no cover
    return path


def _solve_state(g: SolutionGraph, sid: int, path: list[int]) -> dict[str, Word]:
    """Base solution of a state's own equation from an accepting path."""
    st = g.states[sid]
    patterns = {v: (v,) for v in st.varset}
    for tid in path:
        patterns = _apply_label(patterns, g.transitions[tid].label)
    syms = g.instance.symbols
    for v, w in patterns.items():
        assert w and all(syms.is_constant(t) for t in w)
    if not st.is_true:
        sol = Solution.from_dict(patterns)
        assert sol.apply(st.lhs) == sol.apply(st.rhs)
    mu = g.state_mu(sid)
    for v, w in patterns.items():
        assert g.instance.mu.eval(w) == mu[v]
    return patterns


def pumping_certificate(ins: Instance, graph: SolutionGraph | None = None) -> PumpingCertificate | None:
    """None when the trimmed automaton is acyclic (finitely many solutions);
    otherwise a certificate found on some simple cycle.  Under supported
    constraints the first cycle always yields one."""
    g = graph if graph is not None else build(ins)
    if not has_infinitely_many(g):
        return None
    dlg = g._cache.setdefault("dlg", is_dlg(g.instance.mu.target).holds)
    cycles = simple_cycles(g)
    hit = None
    for cycle in cycles:
        hit = find_nicely_balanced_on_cycle(g, cycle, raise_on_miss=False)
        if hit is not None:
            break
    if hit is None:
        if dlg:
            raise TheoremViolation(f"no pumpable state on any of {len(cycles)} cycles")
        return None
    sid, var, wit = hit
    prefix = _shortest_path(g, g.initial, sid)
    base = _solve_state(g, sid, _first_accepting_path(g, sid))
    mu_x = dict(g.states[sid].mu_items)[var]
    if wit.absent or not wit.v:
        pump = preimage_pump(g.instance.mu, mu_x)
        assert pump is not None
        return PumpingCertificate(
            state=sid, variable=var, case="free_variable",
            prefix_labels=tuple(g.transitions[t].label for t in prefix),
            base=tuple(sorted(base.items())), pump=pump,
        )
    base_v = tuple(tok for t in wit.v for tok in base.get(t, (t,)))
    img = g.instance.mu.eval(base_v)
    om = omega(g.instance.mu.target, img)
    return PumpingCertificate(
        state=sid, variable=var, case="head_balanced",
        prefix_labels=tuple(g.transitions[t].label for t in prefix),
        base=tuple(sorted(base.items())), v=wit.v, omega_exponent=om.exponent,
    )


def instantiate(cert: PumpingCertificate, ins: Instance, m: int) -> Solution:
    """The m-th pumped solution of the original instance; checked to solve it
    with exponent of periodicity at least m."""
    if m < 0:
        raise ValueError("the pump count must be nonnegative")
    base = cert.base_dict()
    if cert.case == "head_balanced":
        base_v = tuple(tok for t in cert.v for tok in base.get(t, (t,)))
        assert base_v, "pumped word must be nonempty"
        pumped = base_v * (m * cert.omega_exponent) + base[cert.variable]
    else:
        u, y, w = cert.pump
        reps = m if (u or w) else max(m, 1)
        pumped = u + y * reps + w
    local = dict(base)
    local[cert.variable] = pumped
    # lift through the path prefix back to the original variables
    patterns = {v: (v,) for v in ins.symbols.variables}
    for label in cert.prefix_labels:
        patterns = _apply_label(patterns, label)
    final = {
        v: tuple(tok for t in w for tok in local.get(t, (t,)))
        for v, w in patterns.items()
    }
    sol = Solution.from_dict(final)
    require_solution(ins, sol)
    if exp_solution(sol) < m:
        raise TheoremViolation(f"pumped solution has exponent below {m}")
    return sol


@dataclass(frozen=True)
class ExpDecision:
    infinite: bool
    certificate: PumpingCertificate | None = None


def decide_exp_infinite_dlg(ins: Instance, graph: SolutionGraph | None = None) -> ExpDecision:
    """For constraint targets in the supported variety: finitely many
    solutions, or a certificate of unbounded exponent of periodicity (the two
    cases are exhaustive there)."""
    ins.require_quadratic()
    if not is_dlg(ins.mu.target).holds:
        raise NotDLG("constraint target has a regular D-class that is not a right group")
    g = graph if graph is not None else build(ins)
    if not has_infinitely_many(g):
        return ExpDecision(False, None)
    cert = pumping_certificate(ins, graph=g)
    if cert is None:  # pragma: no cover - excluded by the cycle theorem
        raise TheoremViolation("infinite solution set but no certificate")
    return ExpDecision(True, cert)


# ---------------------------------------------------------------------------
# certificate (de)serialization


def certificate_to_json(cert: PumpingCertificate) -> dict:
    return {
        "state": cert.state,
        "variable": cert.variable,
        "case": cert.case,
        "v": list(cert.v) if cert.v is not None else None,
        "base": {v: list(w) for v, w in cert.base},
        "omega": cert.omega_exponent,
        "prefix_path": [
            "eps" if lab is None else f"{lab[0]}->{','.join(lab[1])}"
            for lab in cert.prefix_labels
        ],
    }


def _parse_label(s: str) -> tuple[str, Word] | None:
    if s == "eps":
        return None
    var, _, repl = s.partition("->")
    return (var, tuple(repl.split(",")))


def load_certificate(ins: Instance, data: dict, graph: SolutionGraph | None = None) -> PumpingCertificate:
    """Rebuild and re-verify a serialized certificate against the instance."""
    g = graph if graph is not None else build(ins)
    sid = data["state"]
    if not 0 <= sid < g.state_count:
        raise EquationError(f"certificate state {sid} does not exist")
    labels = tuple(_parse_label(s) for s in data["prefix_path"])
    # replay the labels from the initial state; the label sequence must
    # admit a run ending at the certified state
    frontier = {g.initial}
    for lab in labels:
        frontier = {
            g.transitions[t].target
            for at in frontier
            for t in g.out[at]
            if g.transitions[t].label == lab
        }
        if not frontier:
            raise EquationError("certificate path prefix does not run in the automaton")
    if sid not in frontier:
        raise EquationError("certificate path prefix does not reach the certified state")
    var = data["variable"]
    wit = is_nicely_balanced(g, sid, var)
    if wit is None:
        raise EquationError(f"state {sid} is not pumpable on {var!r}")
    base = {v: tuple(w) for v, w in data["base"].items()}
    st = g.states[sid]
    if set(base) != set(st.varset):
        raise EquationError("certificate base does not cover the state's variables")
    sol = Solution.from_dict(base)
    if not st.is_true and sol.apply(st.lhs) != sol.apply(st.rhs):
        raise EquationError("certificate base does not solve the certified state")
    mu = g.state_mu(sid)
    for v, w in base.items():
        if ins.mu.eval(w) != mu[v]:
            raise EquationError("certificate base violates the constraints")
    case = data["case"]
    if case == "head_balanced":
        v_word = tuple(data["v"])
        if g.state_eval1(sid, v_word) not in _stab(g, dict(st.mu_items)[var]):
            raise EquationError("certificate word does not stabilize the variable image")
        return PumpingCertificate(
            state=sid, variable=var, case=case, prefix_labels=labels,
            base=tuple(sorted(base.items())), v=v_word,
            omega_exponent=int(data["omega"]),
        )
    pump = preimage_pump(ins.mu, dict(st.mu_items)[var])
    if pump is None:
        raise EquationError("constraint language of the variable is finite")
    return PumpingCertificate(
        state=sid, variable=var, case="free_variable", prefix_labels=labels,
        base=tuple(sorted(base.items())), pump=pump,
    )
