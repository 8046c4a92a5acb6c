"""Cayley tables: the full blade-product table of a small algebra.

The same tables are available from the command line:

    ga table --sig 2,0
    ga table --sig 1,1 --json
"""

from gacalc import Signature
from gacalc.cli import emit_cayley

# Euclidean plane: e12 squares to -1, so the even subalgebra is the
# complex numbers
print("G(2,0)")
print(emit_cayley(Signature(2, 0)))
print()

# one plus and one minus direction: e12 squares to +1 instead
print("G(1,1)")
print(emit_cayley(Signature(1, 1)))
print()

# both directions negative: the even subalgebra is the quaternions
print("G(0,2)")
print(emit_cayley(Signature(0, 2)))
print()

# the single-generator algebra G(1,0), where e1*e1 = 1
print("G(1,0)")
print(emit_cayley(Signature(1, 0)))
print()

print("G(3,0) as JSON:")
print(emit_cayley(Signature(3, 0), "json"))
