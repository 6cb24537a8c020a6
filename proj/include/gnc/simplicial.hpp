#pragma once

#include <vector>

#include "gnc/model.hpp"

namespace gnc {

/* Component of the n-th level of the simplicial resolution: a tuple
   (F_0,...,F_n) of facets (as indices into m.facets()), its intersection
   face G, and the induced boundary (conductor 1 on G∖σ, b_i on σ). */
struct LevelComponent {
  std::vector<int> tuple;
  IndexSet intersection;
  Boundary induced_boundary;
};

enum class LevelMode { all_tuples, strict_ordered };

LevelComponent make_level_component(const GncModel& m, const std::vector<int>& tuple);
std::vector<LevelComponent> level_components(const GncModel& m, int n, LevelMode mode);

/* t ∘ spec for an order-preserving spec: returns (t[spec[0]],...,t[spec[n]]).
   spec must be weakly increasing with values inside t. */
std::vector<int> apply_simplicial_map(const std::vector<int>& tuple,
                                      const std::vector<int>& spec);

/* Face/degeneracy identities on all tuples up to level n_max, plus the
   containment G(t) ⊆ G(map t) for every structure map. */
bool check_simplicial_identities(const GncModel& m, int n_max);

struct TwistDegree {
  Rat value;  // ℓ = -Σ_{i∈σ} (1 - b_i)
};
TwistDegree log_canonical_degree(const GncModel& m);

/* On every nonempty level-n component P_G: deg(K + induced boundary) = ℓ,
   i.e. -|G| + |G∖σ| + Σ_{i∈σ} b_i = ℓ. */
bool check_level_adjunction(const GncModel& m, int n);

/* (i) every boundary-free lc center is the intersection of at most
   n_max + 1 facets; (ii) faces γ with σ' ⊆ γ ⊆ G for an intersection face G
   are lc centers of m. */
bool check_lc_center_surjectivity(const GncModel& m, int n_max);

}  // namespace gnc
