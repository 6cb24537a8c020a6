#pragma once

#include <optional>
#include <vector>

#include "gnc/model.hpp"

namespace gnc {

/* Log canonical centers: all faces γ with σ' ⊆ γ ⊆ F for some facet F,
   sorted by bit pattern. */
std::vector<IndexSet> lc_centers(const GncModel& m);

/* Closure of a facet set under pairwise meets = the set of intersections of
   nonempty facet families. */
std::vector<IndexSet> intersection_closure(const std::vector<IndexSet>& facets);

/* Independent description of the centers in the boundary-free case; throws
   std::invalid_argument when the boundary is nonzero. */
std::vector<IndexSet> lc_centers_b0_intersections(const GncModel& m);

/* Locus of log canonical singularities (X, B) -> (Y, B_Y): facets are the
   maximal codimension-one faces containing σ', boundary is b restricted to
   σ'.  nullopt encodes the empty locus. */
std::optional<GncModel> lcs(const GncModel& m);

/* LCS of (X, 0): non-normal = singular locus for these unions. */
std::optional<GncModel> sing(const GncModel& m);

/* [X, lcs X, lcs lcs X, ...] down to (not including) the empty locus. */
std::vector<GncModel> lcs_chain(const GncModel& m);

/* The normalization is the disjoint union of the A_F; each carries the
   conductor (coefficient 1 on F∖σ) plus the inherited b_i on σ. */
struct NormalizationComponent {
  IndexSet facet;
  Boundary boundary;
};
std::vector<NormalizationComponent> normalization_components(const GncModel& m);
GncModel normalization_component_model(const GncModel& m, IndexSet facet);

/* Set-level cartesianness: on every facet F, the LCS of the component pair
   agrees with the part of lcs(m) lying inside F. */
bool check_lcs_normalization_compat(const GncModel& m);

}  // namespace gnc
