"""Driving the expression language from Python.

The same engine powers `ga eval`, `ga repl`, and `ga run`.  Statements
are parsed into small syntax trees and evaluated against an environment
holding the signature, the tolerance, and variable bindings.
"""

import io

from gacalc import Signature
from gacalc.expr import (
    Environment,
    evaluate,
    execute_statement,
    parse_expression,
    parse_statement,
    repl_loop,
)

env = Environment()

# plain expressions evaluate to multivectors
for text in [
    "e1*e2*e1*e2",
    "(e1 + 2*e2).(e1 + 2*e2)",
    "rot(e1, exp(-0.5*3.141592653589793/2*e12))",
    "probp(e3, e1)",
]:
    print(f"{text:48} = {evaluate(parse_expression(text), env)}")
print()

# the syntax tree is plain data
print(parse_expression("a.b + a^b"))
print()

# statements bind variables and check identities
for line in [
    "let a = 0.3*e1 - 1.2*e2 + 0.7*e3",
    "let b = 1.1*e1 + 0.4*e2 - 0.5*e3",
    "assert a*b ~ a.b + a^b 1e-13",
    "assert a*b ~ b*a 1e-13",  # fails: vectors do not commute in general
]:
    outcome = execute_statement(parse_statement(line), env)
    print(f"{line:40} -> {outcome}")
print()

# a scripted REPL session; in a terminal, `ga repl` does the same
session = "let u = (e1 + e2)/norm(e1 + e2)\nrot(e1, rotor(e1, u))\n:sig 1,1\ne2*e2\n:quit\n"
output = io.StringIO()
repl_loop(Environment(), io.StringIO(session), output)
print("repl session output:")
print(output.getvalue())

# other signatures change the metric: in G(0,2) every basis vector
# squares to -1
env = Environment(sig=Signature(0, 2))
print("G(0,2) e1*e1  =", evaluate(parse_expression("e1*e1"), env))
print("G(0,2) e12*e12=", evaluate(parse_expression("e12*e12"), env))
