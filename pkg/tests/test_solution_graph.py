import pytest

from conftest import make_instance
from weq.equations import NotQuadratic, Solution
from weq.oracle import brute_solutions
from weq.semigroup import builtin
from weq.solution_graph import (
    NotAccepting,
    build,
    enumerate_solutions,
    export_dot,
    extract_solution,
    has_infinitely_many,
    is_solvable,
)


def state_strs(g):
    return {st.equation_str() for st in g.states}


def find_state(g, s):
    for i, st in enumerate(g.states):
        if st.equation_str() == s:
            return i
    raise AssertionError(f"no state {s!r}")


class TestBuild:
    def test_xa_ax_cycle_and_exit(self):
        g = build(make_instance("Xa=aX"))
        sid = find_state(g, "X a = a X")
        labels = {t.label_str(): t.target for t in g.out_transitions(sid)}
        assert labels.get("X->aX") == sid  # self-reachable cycle
        assert "X->a" in labels
        assert has_infinitely_many(g)

    def test_n2_constrained_no_keeping_transition(self):
        ins = make_instance("Xa=aX", constants="a", sg=builtin("n2"),
                            mapping={"a": "x", "X": "x"})
        g = build(ins)
        sid = g.initial
        labels = [t.label_str() for t in g.out_transitions(sid)]
        assert labels == ["X->a"]
        assert not has_infinitely_many(g)

    def test_rejects_non_quadratic(self):
        with pytest.raises(NotQuadratic):
            build(make_instance("XXa=aXb"))

    def test_rejects_system(self):
        from weq.equations import EquationError
        with pytest.raises(EquationError):
            build(make_instance(["Xa=aX", "Xb=bX"]))

    def test_lengths_never_increase(self):
        for spec in ("XabY=YbaX", "Xa=aX", "XY=YX", "XaY=YbX"):
            g = build(make_instance(spec))
            n0 = g.n0
            for t in g.transitions:
                src = g.states[t.source]
                dst = g.states[t.target]
                ls = len(src.lhs) + len(src.rhs)
                ld = len(dst.lhs) + len(dst.rhs)
                assert ls <= n0 and ld <= ls
                if t.label is None:
                    assert ld < ls

    def test_quadraticity_preserved(self):
        for spec in ("XabY=YbaX", "XY=YX", "XXa=ab"):
            g = build(make_instance(spec))
            for st in g.states:
                body = st.lhs + st.rhs
                for v in st.varset:
                    assert body.count(v) <= 2


class TestVerdicts:
    def test_solvable(self):
        assert is_solvable(build(make_instance("Xa=aX")))
        assert not is_solvable(build(make_instance("Xa=bX")))
        assert is_solvable(build(make_instance("XabY=YbaX")))

    def test_infinitude(self):
        assert has_infinitely_many(build(make_instance("Xa=aX")))
        assert not has_infinitely_many(build(make_instance("ab=ab")))
        ins = make_instance("Xa=aX", constants="a", sg=builtin("n2"),
                            mapping={"a": "x", "X": "x"})
        assert not has_infinitely_many(build(ins))

    def test_no_variable_ground(self):
        g = build(make_instance("ab=ab"))
        assert is_solvable(g)
        assert enumerate_solutions(g, max_word_len=2) == [Solution.from_dict({})]

    def test_true_marker_equation(self):
        g = build(make_instance("X=Y"))
        assert is_solvable(g) and has_infinitely_many(g)
        got = enumerate_solutions(g, max_word_len=2)
        want = list(brute_solutions(make_instance("X=Y"), 2).solutions)
        assert got == want


class TestExtract:
    def test_shortest_and_longer_paths(self):
        g = build(make_instance("Xa=aX"))
        sid = g.initial
        loop = next(t for t in g.out[sid] if g.transitions[t].label == ("X", ("a", "X")))
        exit_ = next(t for t in g.out[sid] if g.transitions[t].label == ("X", ("a",)))
        after = g.transitions[exit_].target
        eps = [t for t in g.out[after] if g.transitions[t].label is None]
        assert extract_solution(g, [exit_] + eps[:0]).value("X") == ("a",)
        sol = extract_solution(g, [loop, exit_])
        assert sol.value("X") == ("a", "a")

    def test_rejects_bad_paths(self):
        g = build(make_instance("Xa=aX"))
        with pytest.raises(NotAccepting):
            extract_solution(g, [10**6])
        loop = next(
            t for t in g.out[g.initial]
            if g.transitions[t].label == ("X", ("a", "X"))
        )
        with pytest.raises(NotAccepting):
            extract_solution(g, [loop])  # ends at a non-final state

    def test_fig1_style_path(self):
        ins = make_instance("XabY=YbaX")
        g = build(ins)
        sols = enumerate_solutions(g, max_word_len=3)
        assert Solution.from_dict({"X": tuple("aba"), "Y": ("a",)}) in sols


class TestEnumerate:
    @pytest.mark.parametrize("spec", [
        "Xa=aX", "XabY=YbaX", "XY=YX", "XaY=YbX", "Xab=baX", "XY=ab",
    ])
    def test_matches_oracle(self, spec):
        ins = make_instance(spec)
        g = build(ins)
        for bound in (2, 3, 4):
            got = enumerate_solutions(g, max_word_len=bound)
            want = list(brute_solutions(ins, bound).solutions)
            assert got == want, (spec, bound)

    def test_unsolvable_empty(self):
        assert enumerate_solutions(build(make_instance("Xa=bX")), max_word_len=4) == []

    def test_needs_some_bound(self):
        with pytest.raises(ValueError):
            enumerate_solutions(build(make_instance("Xa=aX")))

    def test_faithful_mode_agrees(self):
        # scheduling restriction does not change the language
        for spec in ("XY=ab", "X=Y", "XaY=YaX"):
            ins = make_instance(spec)
            canonical = enumerate_solutions(build(ins), max_word_len=3)
            faithful = enumerate_solutions(build(ins, faithful=True), max_word_len=3)
            assert canonical == faithful


class TestDot:
    def test_deterministic(self):
        ins = make_instance("XabY=YbaX")
        assert export_dot(build(ins)) == export_dot(build(ins))

    def test_contents(self):
        g = build(make_instance("Xa=aX"))
        dot = export_dot(g)
        assert "X->aX" in dot
        assert "doublecircle" in dot
        assert "style=dashed" in dot
        assert dot.startswith("digraph")

    def test_single_state_graph(self):
        g = build(make_instance("a=a", variables=""))
        dot = export_dot(g)
        assert dot.count("label=") >= 1
