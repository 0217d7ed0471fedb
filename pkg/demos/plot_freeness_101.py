"""
Syzygies and freeness of a plane quintic
========================================

"""

from syzlab import analyze, parse_poly

# a quintic with one E8-type singularity at (0:0:1)
f = parse_poly("y^4z + x^5")
rep = analyze(f)
print(rep.d, rep.r, rep.tau, rep.freeness)

# adding x^2 y^3 keeps tau but makes the Jacobian module free
g = parse_poly("y^4z + x^5 + x^2y^3")
print(analyze(g).freeness)

# the Hilbert function of R/J_f settles on tau
for t, h in analyze(f).hilbert_table:
    print(t, h)
