"""Two planes meeting in a point.

A = QQ[x,y,z,w]/(x,y)∩(z,w) has no embedded components, so its dimension
filtration is trivial below the top and A satisfies S_1.  The planes only
touch at the origin, so depth drops to 1 there and S_2 fails.  The checker
finds the origin as the refuting prime.

    python demos/two_planes.py
"""

from dimfilter.filtration import dk
from dimfilter.modules import Presentation, dim_module, ext_module, is_zero
from dimfilter.poly import Ring
from dimfilter.serre import depth_graded, is_sn
from dimfilter.vanishing import verify_theorem, witness_primes

R = Ring(["x", "y", "z", "w"])
x, y, z, w = R.gens()
A = Presentation.quotient_ring([x * z, x * w, y * z, y * w], name="A")

print(f"dim A = {dim_module(A)}, depth A = {depth_graded(A)}")
for j in range(R.nvars + 1):
    E = ext_module(j, A)
    print(f"  Ext^{j}(A, R): " + ("0" if is_zero(E) else f"dimension {dim_module(E)}"))

for k in range(dim_module(A) + 1):
    print(f"D_{k}(A) is {'zero' if dk(A, k).is_zero() else 'nonzero'}")

print("witness primes:", ", ".join(str(p) for p in witness_primes(A).primes))
for n in (1, 2):
    print(f"S_{n}: {bool(is_sn(A, n))}")

report = verify_theorem(A, 2)
for row in report.rows:
    line = f"n={row.n}: S_n {bool(row.sn)}, condition (ii) {row.cond.status}"
    if row.cond.witness:
        line += f", witness {row.cond.witness.as_dict()}"
    print(line)
print("agreement:", report.ok)
