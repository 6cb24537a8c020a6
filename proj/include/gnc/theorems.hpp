#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "gnc/cohomology.hpp"

namespace gnc {

/* Effective invariant divisor div(z^c), c ≥ 0 on [N]. */
struct InvariantDivisor {
  std::vector<int> c;

  int degree() const;
  IndexSet support() const;
};

/* Degree-e form with a seeded nonzero coefficient on every monomial z^m,
   m ≥ 0, Σm = e, supp(m) a face.  Stands in for a general member. */
struct GenericForm {
  int degree = 0;
  std::uint64_t seed = 0;
  std::map<std::vector<int>, Rat> coefficients;
};
GenericForm make_generic_form(const ProjectiveModel& pm, int degree, std::uint64_t seed);

using Multiplier = std::variant<InvariantDivisor, GenericForm>;

int multiplier_degree(const Multiplier& mult);

/* Injectivity of H^q(O(d)) -> H^q(O(d + deg)) under multiplication, per q. */
struct QVerdict {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool injective = true;  // vacuously so when source_dim = 0
};

/* Holds the per-pattern complex/basis/dimension caches for one realization,
   so repeated verdicts on the same model stay cheap. */
class MultiplicationChecker {
 public:
  explicit MultiplicationChecker(ProjectiveModel pm) : pm_(std::move(pm)) {}

  const ProjectiveModel& model() const { return pm_; }

  std::map<int, QVerdict> verdict(int d, const Multiplier& mult, int q_lo, int q_hi);
  /* three seeded forms must agree; throws std::logic_error otherwise */
  std::map<int, QVerdict> generic_verdict(int d, int degree, std::uint64_t seed,
                                          int q_lo, int q_hi);

 private:
  struct Pattern {
    std::vector<std::vector<IndexSet>> basis;
    CochainComplex complex;
    std::map<int, std::size_t> hdim;
  };
  using PatternKey = std::pair<std::uint64_t, std::uint64_t>;

  Pattern& pattern(const Multidegree& a);
  std::size_t hdim(Pattern& p, int q);
  const RatMatrix& induced(const Multidegree& a, const Multidegree& b, int q);

  ProjectiveModel pm_;
  std::map<PatternKey, Pattern> patterns_;
  std::map<std::tuple<PatternKey, PatternKey, int>, RatMatrix> induced_;
};

std::map<int, QVerdict> multiplication_verdict(const ProjectiveModel& pm, int d,
                                               const Multiplier& mult, int q_lo, int q_hi);
std::map<int, QVerdict> multiplication_verdict_generic(const ProjectiveModel& pm, int d,
                                                       int degree, std::uint64_t seed,
                                                       int q_lo, int q_hi);

/* Which theorem hypotheses the pair (d, multiplier) satisfies:
     ev: d = ℓ ∈ ℤ and the multiplier is invariant with support in supp(B)
     tk: d − ℓ > 0 and the multiplier avoids every lc center
     kv: d > ℓ                                                            */
struct HypothesisFlags {
  bool ev = false;
  bool tk = false;
  bool kv = false;
};
HypothesisFlags classify_hypotheses(const ProjectiveModel& pm, int d, const Multiplier& mult);

/* True iff the multiplier does not vanish identically on any P_γ, γ a
   nonempty lc center: invariant z^c restricts nontrivially iff supp(c) ⊆ γ;
   a generic form needs some monomial supported inside γ. */
bool divisor_avoids_lc_centers(const ProjectiveModel& pm, const Multiplier& mult);

struct VanishingRow {
  int d = 0;
  int q = 0;
  std::size_t dim = 0;
  bool pass = true;
};
struct VanishingReport {
  Rat ell;  // log canonical degree of the base model
  std::vector<VanishingRow> rows;
  bool all_pass = true;
};
/* Checks h^q(O(d)) = 0 for q ≥ 1 at every integer d in [d_lo, d_hi] with d > ℓ. */
VanishingReport check_vanishing(const ProjectiveModel& pm, int d_lo, int d_hi);

}  // namespace gnc
