"""
When is a Jacobian scheme an eigenscheme?
=========================================

"""

from syzlab import parse_poly
from syzlab.arrangements import CurveInput, FamilyTag, generate_family
from syzlab.eigenscheme import NotEigenscheme, Tensor, contains_point, eigenscheme_degree, jacobian_to_tensor
from syzlab.polar import fiber_over_point, polar_report

# eigenpoints of the Fermat cubic
T = Tensor(*(parse_poly(s) for s in ("x^2", "y^2", "z^2")))
print(eigenscheme_degree(T), contains_point(T, (1, 1, 1)), contains_point(T, (1, 2, 0)))

# five lines, four of them through (0:0:1)
c = generate_family(FamilyTag.L, [(1, 0), (0, 1), (1, 1), (1, -1)])
T = jacobian_to_tensor(c.product)
print(T, eigenscheme_degree(T))

# a hyperosculating pencil has a linear syzygy with dependent entries
try:
    jacobian_to_tensor(generate_family(FamilyTag.C1, [1, 2, 3]).product)
except NotEigenscheme as exc:
    print(exc.reason)

# polar map: every line is contracted, a generic fiber has d - 2 points
print(polar_report(c).to_dict())
print(fiber_over_point(c.product, (2, 3, 5)))

# a cuspidal cubic with a line through the cusp also works
print(eigenscheme_degree(jacobian_to_tensor(parse_poly("y(x^3 - y^2z)"))))
print(polar_report(CurveInput([parse_poly("x"), parse_poly("xz+y^2"), parse_poly("xz+2y^2")])).contracted_lines)
