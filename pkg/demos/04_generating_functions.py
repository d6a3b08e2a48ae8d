"""Rational generating functions as a sixth compute engine.

Each class count sequence is the coefficient stream of a rational
function; extracting Taylor coefficients through the denominator's linear
recursion reproduces the counts exactly.
"""

from triwords import ClassLabel, composition_sum, gf_coefficients, gf_for_class

print("Stored (sign-normalised) numerator / denominator per class:")
for label in ClassLabel:
    gf = gf_for_class(label)
    print(f"  g_{label.value}: {gf.numerator} / {gf.denominator}")
print()

gf_a = gf_for_class(ClassLabel.A)
print("A, B and C share the denominator", gf_a.denominator)
print("Reading it backwards gives the third-order recurrence coefficients:")
q = gf_a.denominator
print(f"  x(n) = {-q[1]}*x(n-1) + {-q[2]}*x(n-2) + {-q[3]}*x(n-3)"
      f"  ==  27*(x(n-1) - x(n-2) + 27*x(n-3))")
print()

print("First coefficients of each stream:")
for label in ClassLabel:
    print(f"  g_{label.value}:", gf_coefficients(gf_for_class(label), 6))
print()

print("Cross-checks:")
streams = {label: gf_coefficients(gf_for_class(label), 40) for label in ClassLabel}
for n in range(41):
    assert sum(streams[label][n] for label in ClassLabel) == 27**n
print("  the four streams sum to 27^n for n = 0..40")
for n in range(16):
    v = composition_sum(n)
    assert tuple(streams[label][n] for label in ClassLabel) == v.as_tuple()
print("  all four streams match the composition oracle for n = 0..15")
