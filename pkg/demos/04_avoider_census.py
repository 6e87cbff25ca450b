# Counting avoiders and testing progressions directly
# ---------------------------------------------------
# B = {n > 1 : n is neither p + F(m) nor q + L(n)}.  Enumeration uses a prime
# table and the ~70 sequence terms below the limit.  Progression checks use
# plain primality tests on every n - t, independent of the certificate.
#
# usage: python 04_avoider_census.py [limit] [kmax]

import sys
import time

from fibluc_avoid import check_progression, enumerate_avoiders, rep_counts, verify_certificate
from fibluc_avoid.builtins import builtin_certificate

limit = int(sys.argv[1]) if len(sys.argv) > 1 else 10**7
kmax = int(sys.argv[2]) if len(sys.argv) > 2 else 100

head = []
enumerate_avoiders("B", 2000, sink=head.append)
print("B below 2000:", head)
print("r_f, r_l at 221:", rep_counts(221))

for which in ("B", "B_f", "B_l"):
    start = time.perf_counter()
    count = enumerate_avoiders(which, limit)
    print(f"|{which} below {limit}| = {count}  ({time.perf_counter() - start:.2f}s)")

for name in ("theorem1", "corollary1", "corollary2", "corollary3"):
    cert = builtin_certificate(name)
    prog = verify_certificate(cert).progression
    result = check_progression(prog.step, prog.offset, cert.target_set(), kmax)
    print(f"{name}: S*k + T in {cert.target_set()} for k <= {kmax}: {result.ok} ({result.seconds:.2f}s)")
