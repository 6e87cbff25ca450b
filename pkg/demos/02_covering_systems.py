# Covering systems
# ----------------
# A finite set of classes a (mod m) covers the integers iff it covers every
# residue modulo the lcm of the moduli.

from fibluc_avoid import CoveringSystem, builtin_covering, is_covering

for name in ("erdos", "fib33", "lucas15", "lucas14-remark3"):
    system = builtin_covering(name)
    report = is_covering(system)
    print(f"{name:16s} classes={len(system):2d} lcm={report.lcm:5d} covers={report.covers} "
          f"multiplicity={report.multiplicity_min}..{report.multiplicity_max}")

# Dropping a class usually opens a hole; the report names the least uncovered residue.
pairs = [(c.a, c.m) for c in builtin_covering("fib33")]
for i in (0, 15):
    report = is_covering(CoveringSystem.from_pairs(pairs[:i] + pairs[i + 1:]))
    print(f"without {pairs[i]}: covers={report.covers} witness={report.uncovered_witness}")

print(is_covering(CoveringSystem.from_pairs([(0, 2), (1, 4)])))
