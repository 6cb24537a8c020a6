#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gnc/model.hpp"

namespace gnc {

/* An arbitrary union of lc centers of a fixed model. */
struct CenterUnion {
  std::vector<IndexSet> faces;  // sorted, deduplicated
};
/* Validates membership: every face must satisfy σ' ⊆ γ ⊆ some facet. */
CenterUnion make_center_union(const GncModel& m, std::vector<IndexSet> faces);

/* Number of degree-d monomials supported inside some member face, i.e. the
   Hilbert function of the coordinate ring of the union. */
std::size_t hilbert_function(const std::vector<IndexSet>& faces, int d);

/* Intersection of Z with the union of y's facets, as a union of lc centers
   of y: the maximal faces among {γ ∩ τ : γ ∈ Z, τ a facet of y}. */
CenterUnion intersect_union(const GncModel& y, const CenterUnion& z);

/* intersect_union against lcs(m); requires lcs(m) nonempty. */
CenterUnion intersect_with_lcs(const GncModel& m, const CenterUnion& z);

/* Preimage of Z under the normalization, one union per facet F: the maximal
   faces among {γ ∩ F : γ ∈ Z}, each an lc center of the single-facet model
   (F, conductor + B). */
std::vector<std::pair<IndexSet, CenterUnion>> normalization_preimage(const GncModel& m,
                                                                     const CenterUnion& z);

/* Degreewise exactness of 0 → I_{Z∪Y} → I_Z → I_{Z∩Y ⊂ Y} → 0 for
   Y = lcs(m): checks h_Z(d) + h_Y(d) = h_{Z∪Y}(d) + h_{Z∩Y}(d) for all
   0 ≤ d ≤ d_max.  Requires lcs(m) nonempty. */
bool check_ideal_sequence(const GncModel& m, const CenterUnion& z, int d_max);

/* Batch form of check_ideal_sequence for sweeping many center unions over
   one model.  Monomial counts are folded over distinct supports (a support
   of size k carries binom(d-1, k-1) monomials), so each union costs a few
   bitset ORs; the Z ∩ Y term still goes through intersect_union on the real
   LCS model, which is the computation the identity actually tests. */
class IdealSequenceChecker {
 public:
  IdealSequenceChecker(GncModel m, int d_max);

  bool applicable() const { return lcs_.has_value(); }  // false when lcs(m) is empty
  bool check(const CenterUnion& z) const;

 private:
  using Bits = std::vector<std::uint64_t>;
  const std::vector<Bits>& bits_for(IndexSet gamma) const;  // indexed by degree
  std::size_t weighted_count(const Bits& b, int d) const;

  GncModel model_;
  std::optional<GncModel> lcs_;
  int d_max_;
  std::vector<std::vector<IndexSet>> supports_;     // per degree: faces with monomials
  std::vector<std::vector<std::size_t>> weights_;   // aligned monomial counts
  std::vector<Bits> y_bits_;                        // per degree, the LCS facet union
  std::vector<std::size_t> h_y_;
  mutable std::unordered_map<std::uint64_t, std::vector<Bits>> face_cache_;
};

}  // namespace gnc
