# Fibonacci and Lucas numbers modulo a prime
# ------------------------------------------
# Both sequences are periodic modulo any d >= 2.  The period `chi` is the
# first k at which the pair (t(k), t(k+1)) returns to the seed pair.

from fibluc_avoid import FIB, LUCAS, IndexProgression, chi, residue_class_set, residue_table, term, term_mod

print("F(300) =", term(FIB, 300))
print("L(100) =", term(LUCAS, 100))

# Residues of huge indices never build the exact number.
print("F(2**63 + 12) mod 103681 =", term_mod(FIB, 2**63 + 12, 103681))

# Fibonacci mod 5 has period 20, Lucas mod 5 only 4.
for d in (5, 17, 19, 47, 1103):
    print(f"d={d:5d}  chi_f={chi(FIB, d):4d}  chi_l={chi(LUCAS, d):4d}")

# One full period of Fibonacci mod 17, laid out index -> residue.
table = residue_table(FIB, 17)
for row in range(0, len(table), 12):
    print("  ".join(f"{i + 1:2d}:{r:2d}" for i, r in enumerate(table[row:row + 12], start=row)))

# 7 is never reached mod 17 ...
print("7 in F mod 17?", 7 in residue_class_set(FIB, 17, IndexProgression(0, 1)))
# ... and along indices 144k + 12 only the residue 8 occurs.
print("F(144k+12) mod 17:", sorted(residue_class_set(FIB, 17, IndexProgression(12, 144))))
