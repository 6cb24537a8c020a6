#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gnc/matrix.hpp"

namespace gnc {

/* Bounded complex of finite dimensional Q-vector spaces
       C^lo -> C^{lo+1} -> ... -> C^hi
   labels[k] names the basis of C^{lo+k} (only reports and tests look at the
   names); diffs[k] maps C^{lo+k} into C^{lo+k+1}. */
struct CochainComplex {
  int lo = 0;
  std::vector<std::vector<std::string>> labels;
  std::vector<RatMatrix> diffs;  // size == labels.size() - 1 (empty when <= 1 degree)

  int degree_count() const { return static_cast<int>(labels.size()); }
  int hi() const { return lo + degree_count() - 1; }
  bool in_range(int q) const { return q >= lo && q <= hi(); }

  std::size_t dim(int q) const {
    return in_range(q) ? labels[q - lo].size() : 0;
  }
  /* differential out of degree q, or nullptr at the top end */
  const RatMatrix* diff(int q) const {
    int k = q - lo;
    return (k >= 0 && k < static_cast<int>(diffs.size())) ? &diffs[k] : nullptr;
  }

  /* shape consistency plus d∘d = 0; throws std::logic_error on breach */
  void check() const;
};

struct ChainMapError : std::runtime_error {
  int degree;
  explicit ChainMapError(int q)
      : std::runtime_error("chain map does not commute with differentials at degree " +
                           std::to_string(q)),
        degree(q) {}
};

std::size_t cohomology_dim(const CochainComplex& c, int q);
std::vector<std::size_t> cohomology_dims(const CochainComplex& c);  // q = lo..hi

/* Canonical presentation of H^q: a reduced basis of im d_{q-1} and cocycle
   representatives completing it to a basis of ker d_q.  Representatives are
   picked from the reduced kernel basis by a greedy leftmost-independence
   rule, so they are reproducible. */
struct CohomologyBasis {
  std::vector<std::vector<Rat>> image;
  std::vector<std::vector<Rat>> reps;
};
CohomologyBasis cohomology_basis(const CochainComplex& c, int q);

/* Matrix of the map H^q(src) -> H^q(dst) induced by a degreewise chain map
   (chain_map[k] : src degree lo+k -> dst degree lo+k; the two complexes must
   share lo).  Commutation with the differentials is checked in every degree
   first; ChainMapError carries the first failing degree. */
RatMatrix induced_cohomology_map(const CochainComplex& src, const CochainComplex& dst,
                                 const std::vector<RatMatrix>& chain_map, int q);

}  // namespace gnc
