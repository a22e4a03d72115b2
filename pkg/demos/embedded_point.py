"""The dimension filtration of a line with an embedded point.

M = QQ[x,y]/(x^2, xy) is the y-axis with a fuzzy origin.  D_0(M) is the
largest finite-length submodule, generated by the class of x.  Dividing it
out leaves the reduced line, whose D_0 vanishes.  The combinatorial oracle
(intersect the primary components of large dimension) agrees.

    python demos/embedded_point.py
"""

from dimfilter.filtration import dk, dk_oracle_monomial
from dimfilter.modules import Presentation, dim_module
from dimfilter.poly import Ring
from dimfilter.serre import is_sn

R = Ring(["x", "y"])
x, y = R.gens()
M = Presentation.quotient_ring([x ** 2, x * y], name="M")

D0 = dk(M, 0)
print("D_0(M) generators:", [str(g) for g in D0.generators])
print("torsion ideal used:", D0.ideal.strings(), "from Ext indices", D0.ext_indices)
print("dim D_0(M) =", dim_module(D0.submodule))
print("matches the monomial oracle:", D0.submodule == dk_oracle_monomial(M, 0))

Q = D0.submodule.quotient()
print("D_0(M / D_0(M)) is zero:", dk(Q, 0).is_zero())
print("S_1 for M:", bool(is_sn(M, 1)), "and for the quotient:", bool(is_sn(Q, 1)))
