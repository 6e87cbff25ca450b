# Replaying the avoidance certificates
# ------------------------------------
# Each certificate lists clauses (a, m, r, p): every term with index = a (mod m)
# is r (mod p).  Verification checks the coverings, the periods and residues,
# solves the CRT for the progression S*k + T, and finds for every clause an
# auxiliary prime q whose residue rules out x = p + t(j).

from fibluc_avoid import builtin_certificates, verify_certificate

for cert in builtin_certificates():
    report = verify_certificate(cert)
    print(f"{cert.label}: ok={report.ok} clauses={len(cert.clauses)} primes={len(report.consolidated)}")
    print(f"  S = {report.progression.step}")
    print(f"  T = {report.progression.offset}")

# The full text report for the two-sequence certificate.
report = verify_certificate(builtin_certificates()[0])
print(report.to_text())
