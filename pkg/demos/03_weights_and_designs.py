"""Weight enumerator of the extended code and the 2-designs held by its supports."""

from grmcodes import codes as cc
from grmcodes.analysis.designs import extract_design
from grmcodes.analysis.enumeration import weight_histogram

e = cc.extend(cc.grm(3, 3, 2))
A = weight_histogram(e.generator_matrix(), e.field, threads=4)
print(" + ".join(f"{a}z^{i}" for i, a in enumerate(A) if a))

for w, a in enumerate(A):
    if a and 3 <= w < e.length:
        cert = extract_design(e, w)
        tag = f"2-({cert.v},{cert.k},{cert.lam})" if cert.uniform else "not a 2-design"
        print(f"weight {w:>2}: {cert.b:>5} blocks  {tag}  arithmetic ok: {cert.arithmetic_ok()}")
