#!/usr/bin/env python3
"""Equation-level reductions: systems to single equations, singular-solution
guessing, the power-chain construction, and the two-constant Brandt trick."""

from weq import (
    brandt_two_constant_guesses,
    brute_solutions,
    builtin,
    parse_instance,
    periodicity_reduction,
    singular_guesses,
    system_to_single,
)

# A system becomes one equation: sides are joined by a fresh separator that
# maps to a freshly adjoined zero, so no accidental alignment can cross it.
system = parse_instance("""
constants a b
variables X Y
equation X a = a X
equation Y b = b Y
semigroup builtin:trivial
""")
single = system_to_single(system)
print("encoded system:", single.equation)
print("separator maps to:", single.mu.target.names[single.mu["#"]])
left = {s.assignment for s in brute_solutions(system, 2).solutions}
right = {s.assignment for s in brute_solutions(single, 2).solutions}
print("solution sets agree:", left == right)

# Over a free monoid a variable may take the empty word; guessing which
# variables vanish reduces to the nonempty setting.
ins = parse_instance("""
constants a b
variables X Y
equation X Y = a b
semigroup builtin:trivial
""")
print("\nsingular guesses of XY = ab:")
for guess in singular_guesses(ins):
    eqs = "; ".join(str(e) for e in guess.equations) or "(no equations left)"
    print(f"   variables {','.join(guess.symbols.variables) or '-'}: {eqs}")

# The power-chain construction: satisfiability of the augmented system
# witnesses a 2^m-fold repetition inside X.  Construction only; the result
# is generally not quadratic.
chain = periodicity_reduction(ins, 3, var="X")
print("\npower chain for X (m=3):")
for eq in chain.equations[len(ins.equations):]:
    print("   ", eq)

# With both constants generating the five-element Brandt semigroup and every
# variable forced to its zero, each variable must contain a squared letter;
# guessing that letter removes the constraints entirely.
brandt = parse_instance("""
constants a b
variables X Y
equation X a Y = Y a X
semigroup builtin:b2
map a -> a
map b -> b
map X -> 0
map Y -> 0
""")
print("\ntwo-constant Brandt guesses of XaY = YaX:")
for guess in brandt_two_constant_guesses(brandt):
    print("   ", guess.equation)
