"""Counting 3n-letter words by the residues of their letter counts.

A word over the alphabet {a1, a2, a3} with letter counts (n1, n2, n3),
n1 + n2 + n3 = 3n, lands in one of exactly four classes:

    A: all counts = 0 (mod 3)       B: all counts = 1 (mod 3)
    C: all counts = 2 (mod 3)       D: counts = 0, 1, 2 in some order

This script computes the class sizes three independent ways and shows
they agree word for word.
"""

from triwords import ClassLabel, brute_force_words, classify, composition_sum, direct_sum, trinomial

print("A single word shape: counts (3, 1, 2) for n = 2 ->", classify((3, 1, 2)).value)
print("Number of words with those counts: trinomial(6; 3, 1, 2) =", trinomial(6, 3, 1, 2))
print()

print("Class sizes from the definitional sums (n = 0..5):")
print(f"{'n':>2} {'C_A':>9} {'C_B':>9} {'C_C':>9} {'C_D':>9} {'total':>10}")
for n in range(6):
    row = [direct_sum(label, n) for label in ClassLabel]
    assert sum(row) == 27**n
    print(f"{n:>2} {row[0]:>9} {row[1]:>9} {row[2]:>9} {row[3]:>9} {sum(row):>10}")
print("Totals are 27^n: appending three letters always multiplies the count by 27.")
print()

print("Cross-checking the definitions against full enumeration (n <= 3):")
for n in range(4):
    enumerated = brute_force_words(n)
    summed = composition_sum(n)
    assert enumerated == summed
    print(f"  n={n}: enumerated {3**(3*n):>6} words -> {enumerated.as_tuple()} == composition sweep")
print()

print("Note C_C(1) = 0: three letters cannot all appear 2 (mod 3) times,")
print("and C_B(n) first becomes nonzero at n = 1 with the word class of 'abc'.")
