#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gnc/index_set.hpp"
#include "gnc/rational.hpp"

namespace gnc {

/* Facet description of X = union of coordinate subspaces A_F in A^ambient.
   Facets are stored sorted (by bit pattern) and pairwise incomparable. */
struct FacetComplex {
  int ambient = 0;
  std::vector<IndexSet> facets;
};

/* Boundary coefficients b_i on the core; absent key means 0, stored values
   are nonzero and lie in (0, 1]. */
struct Boundary {
  std::map<int, Rat> coeffs;

  const Rat& coeff(int i) const;
  bool zero() const { return coeffs.empty(); }
  bool operator==(const Boundary&) const = default;
};

enum class Axiom { a, b, c, incomparability, emptiness };
const char* axiom_name(Axiom ax);

struct WitnessPair { IndexSet f, g; };           // axiom a chain failure, or comparable pair
struct WitnessFace { IndexSet tau, facet; };     // axiom b: codim-1 face with no partner
struct WitnessCoeff { int index; Rat value; };   // axiom c: bad coefficient
struct WitnessFormat { std::string detail; };    // malformed or empty input
using Witness = std::variant<WitnessPair, WitnessFace, WitnessCoeff, WitnessFormat>;

struct ValidationError {
  Axiom axiom;
  Witness witness;
  std::string describe() const;  // prints 1-based indices
};

class GncModel {
 public:
  const FacetComplex& complex() const { return complex_; }
  int ambient() const { return complex_.ambient; }
  const std::vector<IndexSet>& facets() const { return complex_.facets; }
  const Boundary& boundary() const { return boundary_; }
  IndexSet core() const { return core_; }          // σ = ∩ facets
  IndexSet reduced_core() const { return rcore_; } // σ' = {i ∈ σ : b_i < 1}
  const std::vector<Rat>& psi() const { return psi_; }
  /* internal index -> position in the validated input (identity unless
     unused ambient indices were stripped) */
  const std::vector<int>& source_indices() const { return source_; }

  int facet_size() const { return complex_.facets.empty() ? 0 : complex_.facets[0].size(); }
  bool is_face(IndexSet gamma) const;

 private:
  friend GncModel finish_model(FacetComplex, Boundary, std::vector<int>);
  FacetComplex complex_;
  Boundary boundary_;
  IndexSet core_, rcore_;
  std::vector<Rat> psi_;
  std::vector<int> source_;
};

using ValidateResult = std::variant<GncModel, ValidationError>;

/* Full gate: format, incomparability, axiom a (chain condition), axiom b
   (codim-1 faces over the core are pairwise intersections), axiom c
   (coefficients rational in [0,1], supported on the core).  The first
   violated check is reported with a witness.  On success, unused ambient
   indices are stripped and the renaming is recorded in source_indices(). */
ValidateResult validate(int ambient, std::vector<IndexSet> facets,
                        std::map<int, Rat> boundary);

/* Re-checks just the reported witness against the original input; a witness
   that no longer demonstrates a failure returns false. */
bool replay(const ValidationError& err, int ambient,
            const std::vector<IndexSet>& facets, const std::map<int, Rat>& boundary);

/* Construction for results whose validity is a theorem (LCS, normalization
   components, levels).  Runs the same axiom checks without stripping;
   throws std::logic_error if they fail. */
GncModel internal_model(int ambient, std::vector<IndexSet> facets,
                        std::map<int, Rat> boundary);

/* inclusion-maximal elements, deduplicated, sorted */
std::vector<IndexSet> maximal_faces(std::vector<IndexSet> faces);

std::string face_str(IndexSet s);  // 1-based, e.g. "{1,3}"

}  // namespace gnc
