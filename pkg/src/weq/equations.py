"""Words over constants and variables, equations with constraints valued in a
finite semigroup, substitutions, the exponent of periodicity, and the
constraint-language pumping machinery.

A word is a tuple of symbol tokens.  An instance bundles one or more
equations with a constraint morphism; the morphism knows the symbol table,
the target semigroup, and the image of every symbol.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from . import semigroup as sgmod
from ._text import ParseError, logical_lines
from .semigroup import ONE, FiniteSemigroup, adjoin_zero, builtin, resolve_semigroup

Word = tuple[str, ...]


class EquationError(Exception):
    pass


class EmptyWord(EquationError):
    pass


class NotQuadratic(EquationError):
    """Some variable occurs more than twice across the equations."""


class WrongConstraintShape(EquationError):
    """The constraint map does not have the required special form."""


def as_word(w) -> Word:
    """Coerce a token iterable (a string is read as 1-char tokens) to a word."""
    return tuple(w)


@dataclass(frozen=True)
class SymbolTable:
    constants: tuple[str, ...]
    variables: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.constants:
            raise EquationError("at least one constant is required")
        seen = self.constants + self.variables
        if len(set(seen)) != len(seen):
            raise EquationError("symbol tokens must be pairwise distinct")

    @cached_property
    def constant_set(self) -> frozenset[str]:
        return frozenset(self.constants)

    @cached_property
    def variable_set(self) -> frozenset[str]:
        return frozenset(self.variables)

    def is_constant(self, tok: str) -> bool:
        return tok in self.constant_set

    def is_variable(self, tok: str) -> bool:
        return tok in self.variable_set

    def all_symbols(self) -> tuple[str, ...]:
        return self.constants + self.variables

    def variable_order(self, var: str) -> int:
        return self.variables.index(var)


@dataclass(frozen=True)
class WordEquation:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if not self.lhs or not self.rhs:
            raise EquationError("equation sides must be nonempty")

    def sides(self) -> tuple[Word, Word]:
        return self.lhs, self.rhs

    def occurrences(self, tok: str) -> int:
        return self.lhs.count(tok) + self.rhs.count(tok)

    def __str__(self):
        return " ".join(self.lhs) + " = " + " ".join(self.rhs)


def equation(lhs, rhs) -> WordEquation:
    return WordEquation(as_word(lhs), as_word(rhs))


@dataclass(frozen=True)
class ConstraintMorphism:
    """Assignment of a target element to every symbol, evaluated on words by
    folding the multiplication table."""

    symbols: SymbolTable
    target: FiniteSemigroup
    image: tuple[tuple[str, int], ...]

    @classmethod
    def from_dict(cls, symbols: SymbolTable, target: FiniteSemigroup, mapping) -> "ConstraintMorphism":
        missing = [s for s in symbols.all_symbols() if s not in mapping]
        if missing:
            raise EquationError(f"constraint map misses symbols {missing}")
        extra = [s for s in mapping if s not in symbols.constant_set | symbols.variable_set]
        if extra:
            raise EquationError(f"constraint map has unknown symbols {extra}")
        items = []
        for sym in symbols.all_symbols():
            el = mapping[sym]
            if not 0 <= el < target.order:
                raise sgmod.BadIndex(f"image of {sym!r} out of range")
            items.append((sym, el))
        return cls(symbols, target, tuple(sorted(items)))

    @classmethod
    def trivial(cls, symbols: SymbolTable) -> "ConstraintMorphism":
        sg = builtin("trivial")
        return cls.from_dict(symbols, sg, {s: 0 for s in symbols.all_symbols()})

    @cached_property
    def _map(self) -> dict[str, int]:
        return dict(self.image)

    def __getitem__(self, sym: str) -> int:
        return self._map[sym]

    def eval(self, w) -> int:
        w = as_word(w)
        if not w:
            raise EmptyWord("cannot evaluate the empty word in a semigroup")
        m = self._map
        acc = m[w[0]]
        for tok in w[1:]:
            acc = self.target.table[acc][m[tok]]
        return acc

    def eval1(self, w) -> int:
        """Evaluation in S^1: the empty word maps to ONE."""
        w = as_word(w)
        return self.eval(w) if w else ONE


def eval_word(mu: ConstraintMorphism, w) -> int:
    return mu.eval(w)


@dataclass(frozen=True)
class Instance:
    """One or more equations together with a constraint morphism."""

    equations: tuple[WordEquation, ...]
    mu: ConstraintMorphism

    def __post_init__(self):
        if not self.equations:
            raise EquationError("an instance needs at least one equation")
        known = self.symbols.constant_set | self.symbols.variable_set
        for eq in self.equations:
            for tok in eq.lhs + eq.rhs:
                if tok not in known:
                    raise EquationError(f"undeclared symbol {tok!r} in equation")

    @property
    def symbols(self) -> SymbolTable:
        return self.mu.symbols

    @property
    def equation(self) -> WordEquation:
        if len(self.equations) != 1:
            raise EquationError("instance is a system; reduce it to a single equation first")
        return self.equations[0]

    def occurrences(self, tok: str) -> int:
        return sum(eq.occurrences(tok) for eq in self.equations)

    def is_quadratic(self) -> bool:
        return all(self.occurrences(v) <= 2 for v in self.symbols.variables)

    def require_quadratic(self) -> None:
        for v in self.symbols.variables:
            if self.occurrences(v) > 2:
                raise NotQuadratic(f"variable {v!r} occurs {self.occurrences(v)} times")


def instance(equations, mu: ConstraintMorphism) -> Instance:
    eqs = tuple(equations) if not isinstance(equations, WordEquation) else (equations,)
    return Instance(eqs, mu)


def unconstrained(equations, constants, variables) -> Instance:
    """Instance over the one-element semigroup (no effective constraints)."""
    table = SymbolTable(tuple(constants), tuple(variables))
    return instance(equations, ConstraintMorphism.trivial(table))


# ---------------------------------------------------------------------------
# substitutions and solutions


def substitute(word: Word, var: str, repl: Word) -> Word:
    if var not in word:
        return word
    out: list[str] = []
    for tok in word:
        if tok == var:
            out.extend(repl)
        else:
            out.append(tok)
    return tuple(out)


@dataclass(frozen=True)
class Substitution:
    """Endomorphism fixing constants, given by its action on finitely many
    variables.  Images containing other variables are substituted once, not
    iterated."""

    assignments: tuple[tuple[str, Word], ...]

    @classmethod
    def from_dict(cls, mapping) -> "Substitution":
        items = tuple(sorted((v, as_word(w)) for v, w in mapping.items()))
        for v, w in items:
            if not w:
                raise EmptyWord(f"substitution image of {v!r} is empty")
        return cls(items)

    @cached_property
    def _map(self) -> dict[str, Word]:
        return dict(self.assignments)

    def apply(self, word) -> Word:
        m = self._map
        out: list[str] = []
        for tok in as_word(word):
            out.extend(m.get(tok, (tok,)))
        return tuple(out)

    def is_basic(self, symbols: SymbolTable) -> bool:
        """A single assignment X -> aX with a in the full alphabet, or X -> c
        with c a constant."""
        if len(self.assignments) != 1:
            return False
        var, img = self.assignments[0]
        if not symbols.is_variable(var):
            return False
        if len(img) == 1:
            return symbols.is_constant(img[0])
        return len(img) == 2 and img[1] == var and (
            symbols.is_constant(img[0]) or symbols.is_variable(img[0])
        )

    def is_trivial(self, symbols: SymbolTable) -> bool:
        """Every image is constants-then-the-same-variable, or all constants."""
        for var, img in self.assignments:
            if not symbols.is_variable(var):
                return False
            if img[-1] == var:
                body = img[:-1]
            else:
                body = img
            if any(not symbols.is_constant(t) for t in body):
                return False
        return True

    def basic_factors(self, symbols: SymbolTable) -> list["Substitution"]:
        """Write a trivial substitution as a sequence of basic ones (applied
        first-to-last)."""
        if not self.is_trivial(symbols):
            raise EquationError("only trivial substitutions factor into basic steps")
        steps: list[Substitution] = []
        for var, img in self.assignments:
            if img == (var,):
                continue
            if img[-1] == var:
                body, keep = img[:-1], True
            else:
                body, keep = img, False
            prefix = body if keep else body[:-1]
            for c in prefix:
                steps.append(Substitution.from_dict({var: (c, var)}))
            if not keep:
                steps.append(Substitution.from_dict({var: (body[-1],)}))
        return steps


def compose_apply(steps, word) -> Word:
    """Apply substitutions first-to-last."""
    w = as_word(word)
    for s in steps:
        w = s.apply(w)
    return w


@dataclass(frozen=True)
class Solution:
    """Total assignment of nonempty constant words to the variables."""

    assignment: tuple[tuple[str, Word], ...]

    @classmethod
    def from_dict(cls, mapping) -> "Solution":
        return cls(tuple(sorted((v, as_word(w)) for v, w in mapping.items())))

    @cached_property
    def as_dict(self) -> dict[str, Word]:
        return dict(self.assignment)

    def value(self, var: str) -> Word:
        return self.as_dict[var]

    def apply(self, word) -> Word:
        m = self.as_dict
        out: list[str] = []
        for tok in as_word(word):
            out.extend(m.get(tok, (tok,)))
        return tuple(out)

    def sort_key(self, symbols: SymbolTable):
        m = self.as_dict
        return tuple((len(m[v]), m[v]) for v in symbols.variables if v in m)


def verify_solution(ins: Instance, sol: Solution) -> bool:
    m = sol.as_dict
    syms = ins.symbols
    for v in syms.variables:
        w = m.get(v)
        if not w or any(not syms.is_constant(t) for t in w):
            return False
    for eq in ins.equations:
        if sol.apply(eq.lhs) != sol.apply(eq.rhs):
            return False
    for v in syms.variables:
        if ins.mu.eval(m[v]) != ins.mu[v]:
            return False
    return True


def require_solution(ins: Instance, sol: Solution) -> None:
    if not verify_solution(ins, sol):
        raise EquationError(f"assignment {sol.assignment} does not solve the instance")


# ---------------------------------------------------------------------------
# exponent of periodicity


def exp_word(w) -> int:
    """Greatest k such that some nonempty p has p^k as a factor; 0 only for
    the empty word.  Plain start/period scan."""
    w = as_word(w)
    n = len(w)
    if n == 0:
        return 0
    best = 1
    for start in range(n):
        limit = (n - start) // 2
        for period in range(1, limit + 1):
            p = w[start:start + period]
            k = 1
            pos = start + period
            while w[pos:pos + period] == p:
                k += 1
                pos += period
            if k > best:
                best = k
    return best


def exp_solution(sol: Solution) -> int:
    return max((exp_word(w) for _, w in sol.assignment), default=0)


# ---------------------------------------------------------------------------
# constraint languages: the deterministic reachability automaton over S^1


def _preimage_useful(mu: ConstraintMorphism, s: int):
    """States of the S^1 automaton that lie on a path start -> accept, plus
    the full transition function on constants."""
    sg = mu.target
    sigma = mu.symbols.constants
    step = {a: mu[a] for a in sigma}
    states = [ONE] + list(sg.elements())
    delta = {t: {a: sg.mul1(t, step[a])for a in sigma} for t in states}
    reach = {ONE}
    frontier = deque([ONE])
    while frontier:
        t = frontier.popleft()
        for a in sigma:
            nxt = delta[t][a]
            if nxt not in reach:
                reach.add(nxt)
                frontier.append(nxt)
    co = {s} if s in delta else set()
    frontier = deque(co)
    rev: dict[int, set[int]] = {t: set() for t in states}
    for t in states:
        for a in sigma:
            rev[delta[t][a]].add(t)
    while frontier:
        t = frontier.popleft()
        for p in rev[t]:
            if p not in co:
                co.add(p)
                frontier.append(p)
    useful = reach & co
    return useful, delta


def preimage_infinite(mu: ConstraintMorphism, s: int) -> bool:
    """Whether infinitely many nonempty constant words map to s."""
    if not 0 <= s < mu.target.order:
        raise sgmod.BadIndex(f"element {s} out of range")
    useful, delta = _preimage_useful(mu, s)
    if s not in useful:
        return False
    sigma = mu.symbols.constants
    # a cycle through a useful state pumps the accepted language
    for q in useful:
        seen = set()
        frontier = deque(delta[q][a] for a in sigma if delta[q][a] in useful)
        while frontier:
            t = frontier.popleft()
            if t == q:
                return True
            if t in seen:
                continue
            seen.add(t)
            for a in sigma:
                nxt = delta[t][a]
                if nxt in useful:
                    frontier.append(nxt)
    return False


def _bfs_word(delta, sigma, useful, sources, target, min_len: int) -> tuple[Word, int] | None:
    """Shortest (then constant-order lexicographically least) word of length
    >= min_len driving some source state to the target inside the useful set.
    Returns (word, source_used)."""
    start = [(q, (), q) for q in sources]
    queue = deque(start)
    seen = {(q, 0) for q in sources}
    while queue:
        state, word, src = queue.popleft()
        if state == target and len(word) >= min_len:
            return word, src
        if len(word) > len(useful) + min_len + 1:
            continue
        for a in sigma:
            nxt = delta[state][a]
            if nxt not in useful:
                continue
            key = (nxt, min(len(word) + 1, min_len))
            if key in seen:
                continue
            seen.add(key)
            queue.append((nxt, word + (a,), src))
    return None


def preimage_pump(mu: ConstraintMorphism, s: int) -> tuple[Word, Word, Word] | None:
    """A decomposition (u, y, w), y nonempty, with u y^m w mapping to s for
    all m >= 0; None when the preimage language is finite."""
    if not preimage_infinite(mu, s):
        return None
    useful, delta = _preimage_useful(mu, s)
    sigma = mu.symbols.constants

    def on_cycle(q) -> bool:
        hit = _bfs_word(delta, sigma, useful, [q], q, min_len=1)
        return hit is not None

    cyclic = sorted(q for q in useful if q != ONE and on_cycle(q))
    q = cyclic[0]
    u, _ = _bfs_word(delta, sigma, useful, [ONE], q, min_len=0)
    y, _ = _bfs_word(delta, sigma, useful, [q], q, min_len=1)
    w, _ = _bfs_word(delta, sigma, useful, [q], s, min_len=0)
    return u, y, w


# ---------------------------------------------------------------------------
# fresh tokens and instance-level reductions


def fresh_constant(taken, base: str = "#") -> str:
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def fresh_variables(taken, count: int) -> list[str]:
    out: list[str] = []
    taken = set(taken)
    i = 1
    while len(out) < count:
        cand = f"${i}"
        if cand not in taken:
            out.append(cand)
            taken.add(cand)
        i += 1
    return out


def system_to_single(ins: Instance) -> Instance:
    """Encode a system as one equation by joining sides with a fresh separator
    constant that maps to a freshly adjoined zero."""
    syms = ins.symbols
    sep = fresh_constant(set(syms.all_symbols()))
    target = adjoin_zero(ins.mu.target)
    zero = target.order - 1
    new_syms = SymbolTable(syms.constants + (sep,), syms.variables)
    mapping = {s: ins.mu[s] for s in syms.all_symbols()}
    mapping[sep] = zero
    mu = ConstraintMorphism.from_dict(new_syms, target, mapping)
    lhs: list[str] = []
    rhs: list[str] = []
    for eq in ins.equations:
        lhs.extend(eq.lhs)
        lhs.append(sep)
        rhs.extend(eq.rhs)
        rhs.append(sep)
    return Instance((WordEquation(tuple(lhs), tuple(rhs)),), mu)


def singular_guesses(ins: Instance) -> list[Instance]:
    """All ways of erasing a subset of variables (declaring them mapped to the
    empty word), dropping trivially true equations and discarding guesses that
    leave an equation with exactly one empty side.

    Erasing a variable is only allowed when the target has a neutral element
    and the variable's image is that element, so that the re-extended
    assignment still respects the constraint.
    """
    syms = ins.symbols
    identity = ins.mu.target.identity_element()
    erasable = [
        v for v in syms.variables
        if identity is not None and ins.mu[v] == identity
    ]
    guesses: list[Instance] = []
    for mask in range(1 << len(erasable)):
        erased = {erasable[i] for i in range(len(erasable)) if mask >> i & 1}
        eqs: list[WordEquation] = []
        contradictory = False
        for eq in ins.equations:
            lhs = tuple(t for t in eq.lhs if t not in erased)
            rhs = tuple(t for t in eq.rhs if t not in erased)
            if not lhs and not rhs:
                continue
            if not lhs or not rhs:
                contradictory = True
                break
            eqs.append(WordEquation(lhs, rhs))
        if contradictory:
            continue
        kept = tuple(v for v in syms.variables if v not in erased)
        new_syms = SymbolTable(syms.constants, kept)
        mu = ConstraintMorphism.from_dict(
            new_syms, ins.mu.target,
            {s: ins.mu[s] for s in new_syms.all_symbols()},
        )
        guesses.append(_RawInstance(tuple(eqs), mu))
    return guesses


class _RawInstance(Instance):
    """Instance that may carry zero equations (a fully erased system)."""

    def __post_init__(self):
        # same symbol validation as Instance, minus the nonempty-system check
        known = self.symbols.constant_set | self.symbols.variable_set
        for eq in self.equations:
            for tok in eq.lhs + eq.rhs:
                if tok not in known:
                    raise EquationError(f"undeclared symbol {tok!r} in equation")


def periodicity_reduction(ins: Instance, m: int, var: str | None = None):
    """Augment the system with a power chain for one variable: X = Y X1 Z and
    X_{i-1} = X_i X_i for 2 <= i <= m.  Construction only; the result is
    generally not quadratic."""
    if m < 1:
        raise EquationError("the chain length must be at least 1")
    syms = ins.symbols
    if var is None:
        if not syms.variables:
            raise EquationError("no variable to expand")
        var = syms.variables[0]
    elif var not in syms.variable_set:
        raise EquationError(f"unknown variable {var!r}")
    fresh = fresh_variables(syms.all_symbols(), m + 2)
    chain, y, z = fresh[:m], fresh[m], fresh[m + 1]
    eqs = list(ins.equations)
    eqs.append(WordEquation((var,), (y, chain[0], z)))
    for i in range(1, m):
        eqs.append(WordEquation((chain[i - 1],), (chain[i], chain[i])))
    new_syms = SymbolTable(syms.constants, syms.variables + tuple(fresh))
    return EquationSystem(new_syms, tuple(eqs))


@dataclass(frozen=True)
class EquationSystem:
    """Bare equations over a symbol table, with no constraint attached."""

    symbols: SymbolTable
    equations: tuple[WordEquation, ...]


def brandt_two_constant_guesses(ins: Instance) -> list[Instance]:
    """For constraints in the five-element Brandt semigroup with the two
    constants mapped to its generators and every variable mapped to zero,
    replace each variable X by X1 c c X2 for every choice of c per variable
    and drop the constraints."""
    ins.require_quadratic()
    syms = ins.symbols
    if len(syms.constants) != 2:
        raise WrongConstraintShape("exactly two constants are required")
    sg = ins.mu.target
    if sg.order != 5:
        raise WrongConstraintShape("target must have five elements")
    p, q = (ins.mu[c] for c in syms.constants)
    pq, qp = sg.mul(p, q), sg.mul(q, p)
    zero = sg.mul(p, p)
    ok = (
        sg.mul(q, q) == zero
        and sg.zero_element() == zero
        and sg.mul(sg.mul(p, q), p) == p
        and sg.mul(sg.mul(q, p), q) == q
        and len({p, q, pq, qp, zero}) == 5
    )
    if not ok:
        raise WrongConstraintShape("constants do not generate the Brandt relations")
    if any(ins.mu[v] != zero for v in syms.variables):
        raise WrongConstraintShape("every variable must map to the zero element")

    fresh = fresh_variables(syms.all_symbols(), 2 * len(syms.variables))
    halves = {v: (fresh[2 * i], fresh[2 * i + 1]) for i, v in enumerate(syms.variables)}
    out: list[Instance] = []
    for choice in itertools.product(syms.constants, repeat=len(syms.variables)):
        sub = Substitution.from_dict({
            v: (halves[v][0], c, c, halves[v][1])
            for v, c in zip(syms.variables, choice)
        })
        eqs = tuple(
            WordEquation(sub.apply(eq.lhs), sub.apply(eq.rhs)) for eq in ins.equations
        )
        out.append(unconstrained(eqs, syms.constants, fresh))
    return out


def guess_substitution(ins: Instance, choice) -> Substitution:
    """The substitution X -> X1 c_X^2 X2 used by a Brandt two-constant guess."""
    syms = ins.symbols
    fresh = fresh_variables(syms.all_symbols(), 2 * len(syms.variables))
    return Substitution.from_dict({
        v: (fresh[2 * i], c, c, fresh[2 * i + 1])
        for i, (v, c) in enumerate(zip(syms.variables, choice))
    })


# ---------------------------------------------------------------------------
# instance text format (';' comments; '#' may be a constant)


def parse_instance(text: str, base_dir: str = ".") -> Instance:
    constants: tuple[str, ...] | None = None
    variables: tuple[str, ...] = ()
    raw_equations: list[tuple[int, list[str]]] = []
    sg_spec: tuple[int, str] | None = None
    mapping: dict[str, tuple[int, str]] = {}
    seen_variables = False
    for no, toks in logical_lines(text, comment=";"):
        head, rest = toks[0], toks[1:]
        if head == "constants":
            if constants is not None:
                raise ParseError(no, "duplicate constants line")
            constants = tuple(rest)
        elif head == "variables":
            if seen_variables:
                raise ParseError(no, "duplicate variables line")
            seen_variables = True
            variables = tuple(rest)
        elif head == "equation":
            raw_equations.append((no, rest))
        elif head == "semigroup":
            if len(rest) != 1:
                raise ParseError(no, "expected: semigroup <spec>")
            sg_spec = (no, rest[0])
        elif head == "map":
            if len(rest) != 3 or rest[1] != "->":
                raise ParseError(no, "expected: map <symbol> -> <element>")
            if rest[0] in mapping:
                raise ParseError(no, f"duplicate map line for {rest[0]!r}")
            mapping[rest[0]] = (no, rest[2])
        else:
            raise ParseError(no, f"unknown directive {head!r}")
    if constants is None or not constants:
        raise ParseError(1, "missing or empty constants line")
    for tok in constants + variables:
        if tok.startswith("$"):
            raise ParseError(1, f"token {tok!r} uses the reserved '$' prefix")
        if tok == "=":
            raise ParseError(1, "'=' cannot be a symbol token")
    if len(set(constants + variables)) != len(constants + variables):
        raise ParseError(1, "symbol tokens must be pairwise distinct")
    if sg_spec is None:
        raise ParseError(1, "missing semigroup line")
    if not raw_equations:
        raise ParseError(1, "missing equation line")
    no, spec = sg_spec
    try:
        target = resolve_semigroup(spec, base_dir)
    except (OSError, ParseError, sgmod.SemigroupError) as exc:
        raise ParseError(no, f"cannot load semigroup {spec!r}: {exc}") from exc
    syms = SymbolTable(constants, variables)
    eqs = []
    for no, toks in raw_equations:
        if toks.count("=") != 1:
            raise ParseError(no, "equation needs exactly one '='")
        cut = toks.index("=")
        lhs, rhs = tuple(toks[:cut]), tuple(toks[cut + 1:])
        if not lhs or not rhs:
            raise ParseError(no, "equation sides must be nonempty")
        for tok in lhs + rhs:
            if tok not in syms.constant_set and tok not in syms.variable_set:
                raise ParseError(no, f"undeclared symbol {tok!r}")
        eqs.append(WordEquation(lhs, rhs))
    trivial_default = spec in ("builtin:trivial", "trivial")
    image: dict[str, int] = {}
    for sym in syms.all_symbols():
        if sym in mapping:
            no, el_tok = mapping[sym]
            try:
                image[sym] = target.index_of(el_tok)
            except sgmod.BadIndex as exc:
                raise ParseError(no, str(exc)) from exc
        elif trivial_default:
            image[sym] = 0
        else:
            raise ParseError(1, f"missing map line for symbol {sym!r}")
    for sym, (no, _) in mapping.items():
        if sym not in syms.constant_set and sym not in syms.variable_set:
            raise ParseError(no, f"map line for undeclared symbol {sym!r}")
    mu = ConstraintMorphism.from_dict(syms, target, image)
    return Instance(tuple(eqs), mu)


def format_instance(ins: Instance, sg_spec: str | None = None) -> str:
    syms = ins.symbols
    lines = ["constants " + " ".join(syms.constants)]
    if syms.variables:
        lines.append("variables " + " ".join(syms.variables))
    for eq in ins.equations:
        lines.append("equation " + str(eq))
    label = ins.mu.target.label
    lines.append("semigroup " + (sg_spec or (f"builtin:{label}" if label in sgmod.BUILTIN_NAMES else "file:?")))
    for sym in syms.all_symbols():
        lines.append(f"map {sym} -> {ins.mu.target.names[ins.mu[sym]]}")
    return "\n".join(lines) + "\n"
