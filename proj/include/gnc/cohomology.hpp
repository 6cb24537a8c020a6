#pragma once

#include <vector>

#include "gnc/cochain.hpp"
#include "gnc/model.hpp"

namespace gnc {

/* Projective realization: each facet F of size ≥ 1 contributes the
   coordinate subspace P_F ⊆ P^{N-1}.  Size-0 facets (the origin) have no
   projective trace and are dropped, flagged by dropped_origin. */
struct ProjectiveModel {
  GncModel base;
  int vertex_count = 0;
  std::vector<IndexSet> components;
  bool dropped_origin = false;

  int dim() const;  // max component size - 1, or -1 when empty
  bool face(IndexSet s) const;
};
ProjectiveModel make_projective(const GncModel& m);

/* Fine grading: a ∈ Z^N with its total degree and sign supports. */
struct Multidegree {
  std::vector<int> a;
  int total = 0;
  IndexSet neg, pos;

  static Multidegree of(std::vector<int> a);
  bool operator==(const Multidegree&) const = default;
  bool operator<(const Multidegree& o) const { return a < o.a; }
};

/* Basis of the Čech complex in one fine degree: at cochain degree p the
   charts are the S ⊆ [N] with |S| = p+1, N(a) ⊆ S and S ∪ P(a) a face. */
std::vector<std::vector<IndexSet>> multidegree_basis(const ProjectiveModel& pm,
                                                     IndexSet neg, IndexSet pos);
CochainComplex multidegree_complex(const ProjectiveModel& pm, const Multidegree& a);
std::vector<std::size_t> multidegree_cohomology(const ProjectiveModel& pm,
                                                const Multidegree& a);  // q = 0..dim

/* Hochster-style closed form by sign pattern (G = negative support,
   P = positive support, disjoint):
     both nonempty         -> 0 in every degree
     P ≠ ∅, G = ∅          -> h^0 = 1 if P is a face, else 0
     G ≠ ∅, P = ∅          -> h^q = dim H̃^{q-|G|}(link G)
     both empty            -> unreduced simplicial cohomology of Δ */
std::vector<std::size_t> pattern_closed_form(const ProjectiveModel& pm,
                                             IndexSet G, IndexSet P);

/* Multidegrees that can carry cohomology for twist d: for d ≥ 0 the a ≥ 0
   with face support, for d < 0 the a ≤ 0 with face negative support.
   Everything mixed-sign is acyclic and skipped. */
std::vector<Multidegree> contributing_multidegrees(const ProjectiveModel& pm, int d);

std::vector<std::size_t> sheaf_cohomology(const ProjectiveModel& pm, int d);

/* χ(O(d)) by inclusion-exclusion over facet families, as an exact polynomial
   evaluation; families are grouped by their intersection face, which is the
   same alternating sum with the 2^facets blowup folded away. */
Int euler_characteristic(const ProjectiveModel& pm, int d);

std::vector<IndexSet> all_faces(const ProjectiveModel& pm);  // sorted by bit pattern

}  // namespace gnc
