#pragma once

#include <cstdint>

#include "gnc/model.hpp"

namespace gnc {

/* Deterministic-in-seed model source for fuzzing.  Three families, chosen by
   seed % 3:
     1: all facet_size-subsets of the ambient set containing a random core
        (the cardinality-p family; the core size is tuned so the facet count
        stays near facet_count)
     2: normal crossings, facets [N]∖{i} over a random index family
     0: random facet sets repaired to satisfy axiom b by inserting the
        missing pairwise intersections, rejection-sampled until the full
        validator accepts
   Boundaries are random rationals in [0,1] on the core, with mass on the
   interesting values 0, 1 and simple fractions.
   Throws std::invalid_argument for infeasible parameters. */
GncModel generate_random_model(std::uint64_t seed, int ambient, int facet_size,
                               int facet_count);

}  // namespace gnc
