#pragma once

#include <vector>

#include "gnc/cohomology.hpp"

namespace gnc {

/* Independent oracle for h^q(O(d)), d ≥ 0, from the normalization cover:
   degree p holds ⊕ H^0(P_{F_{i_0}∩…∩F_{i_p}}, O(d)) over strictly
   increasing component tuples with nonempty intersection, with the basis of
   each summand the degree-d monomials supported on the intersection face.
   Differentials alternate the restriction maps.  Negative twists are out of
   the oracle's domain (components would contribute top cohomology instead
   of sections). */
CochainComplex descent_complex(const ProjectiveModel& pm, int d);

/* H^q of the descent complex for q = 0..dim; degrees past dim must vanish
   and are checked rather than returned. */
std::vector<std::size_t> descent_cohomology(const ProjectiveModel& pm, int d);

}  // namespace gnc
