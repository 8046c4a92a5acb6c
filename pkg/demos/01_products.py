"""Products of vectors and blades: geometric, outer, and inner.

The geometric product of two vectors splits into a symmetric scalar part
(the dot product) and an antisymmetric bivector part (the wedge).
"""

from gacalc import G3, Multivector, basis_vectors, dot

e1, e2, e3 = basis_vectors(G3)

a = 2 * e1 + 1 * e2
b = 1 * e1 + 3 * e2

print("a           =", a)
print("b           =", b)
print("a b         =", a * b)
print("a . b       =", a | b)
print("a ^ b       =", a ^ b)
print("dot + wedge =", (a | b) + (a ^ b))
print()

# the symmetric part recovers the dot product, the antisymmetric the wedge
print("(ab + ba)/2 =", (a * b + b * a) / 2, "  scalar =", dot(a, b))
print("(ab - ba)/2 =", (a * b - b * a) / 2)
print()

# parallel vectors commute, orthogonal vectors anticommute
print("e1 e2 + e2 e1 =", e1 * e2 + e2 * e1)
print("e1 (3 e1)     =", e1 * (3 * e1))
print()

# squares of blades: Euclidean vectors square to +1, e12 and e123 to -1
for blade in (e1, e1 ^ e2, e1 ^ e2 ^ e3):
    print(f"({blade})^2 =", blade * blade)
print()

# a sample mixed-grade element and its canonical printed form
m = Multivector(G3, {0b000: -2.0, 0b010: 0.5, 0b101: -4.0, 0b111: 1.0})
print("mixed grades:", m)
print("grade 1 part:", m.grade(1))
print("reverse     :", ~m)
print("norm        :", m.norm())
