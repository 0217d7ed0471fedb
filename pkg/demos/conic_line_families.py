"""
Conic-line arrangements with maximal Tjurina number
===================================================

"""

import numpy as np

from syzlab.arrangements import FamilyTag, generate_family, perturbed_instance, random_params, recognize
from syzlab.jacobian import Jacobian

rng = np.random.default_rng(7)

# three conics of a bitangent pencil plus the tangent line x
params = random_params(FamilyTag.CL2, 3, rng)
c = generate_family(FamilyTag.CL2, params, normal_form=False, rng=rng)
J = Jacobian(c.product)
d = J.d
print(recognize(c), d, J.tjurina(), d * d - 3 * d + 3)

# the base line y gives one less than the maximum
c6 = generate_family(FamilyTag.CL6, random_params(FamilyTag.CL6, 3, rng))
J6 = Jacobian(c6.product)
print(recognize(c6), J6.tjurina(), J6.resolution_probe())

# nudge one conic out of the pencil and the structure is gone
bad = perturbed_instance(FamilyTag.CL2, params)
print(recognize(bad), Jacobian(bad.product).tjurina())
