#include "gnc/ideals.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "gnc/centers.hpp"

namespace gnc {

namespace {

bool is_lc_center(const GncModel& m, IndexSet gamma) {
  return m.reduced_core().subset_of(gamma) && m.is_face(gamma);
}

/* monomials of degree d with support exactly T: binom(d-1, |T|-1) */
std::size_t support_count(int d, int k) {
  if (k == 0) return d == 0 ? 1 : 0;
  if (d < k) return 0;
  std::size_t num = 1, den = 1;
  for (int j = 1; j <= k - 1; ++j) {
    num *= d - j;
    den *= j;
  }
  return num / den;
}

std::set<IndexSet> distinct_supports(const std::vector<IndexSet>& faces) {
  std::set<IndexSet> supports;
  for (IndexSet f : faces) {
    std::uint64_t bits = f.bits(), sub = 0;
    while (true) {
      supports.insert(IndexSet(sub));
      if (sub == bits) break;
      sub = (sub - bits) & bits;
    }
  }
  return supports;
}

}  // namespace

CenterUnion make_center_union(const GncModel& m, std::vector<IndexSet> faces) {
  for (IndexSet gamma : faces)
    if (!is_lc_center(m, gamma))
      throw std::invalid_argument("center union: " + face_str(gamma) + " is not an lc center");
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return {std::move(faces)};
}

std::size_t hilbert_function(const std::vector<IndexSet>& faces, int d) {
  std::size_t total = 0;
  for (IndexSet t : distinct_supports(faces)) total += support_count(d, t.size());
  return total;
}

CenterUnion intersect_union(const GncModel& y, const CenterUnion& z) {
  std::vector<IndexSet> cut;
  for (IndexSet gamma : z.faces)
    for (IndexSet tau : y.facets()) cut.push_back(gamma & tau);
  cut = maximal_faces(std::move(cut));
  for (IndexSet face : cut)
    if (!is_lc_center(y, face))
      throw std::logic_error("intersection " + face_str(face) +
                             " is not an lc center of the LCS model");
  return {std::move(cut)};
}

CenterUnion intersect_with_lcs(const GncModel& m, const CenterUnion& z) {
  std::optional<GncModel> y = lcs(m);
  if (!y) throw std::invalid_argument("intersect_with_lcs: model has empty LCS");
  return intersect_union(*y, z);
}

std::vector<std::pair<IndexSet, CenterUnion>> normalization_preimage(const GncModel& m,
                                                                     const CenterUnion& z) {
  std::vector<std::pair<IndexSet, CenterUnion>> out;
  for (IndexSet f : m.facets()) {
    std::vector<IndexSet> cut;
    for (IndexSet gamma : z.faces) cut.push_back(gamma & f);
    cut = maximal_faces(std::move(cut));
    GncModel component = normalization_component_model(m, f);
    for (IndexSet face : cut)
      if (!is_lc_center(component, face))
        throw std::logic_error("preimage " + face_str(face) +
                               " is not an lc center of the normalization component");
    out.emplace_back(f, CenterUnion{std::move(cut)});
  }
  return out;
}

bool check_ideal_sequence(const GncModel& m, const CenterUnion& z, int d_max) {
  std::optional<GncModel> y = lcs(m);
  if (!y) throw std::invalid_argument("check_ideal_sequence: model has empty LCS");
  CenterUnion zy = intersect_union(*y, z);
  std::vector<IndexSet> both = z.faces;
  both.insert(both.end(), y->facets().begin(), y->facets().end());
  for (int d = 0; d <= d_max; ++d) {
    std::size_t lhs = hilbert_function(z.faces, d) + hilbert_function(y->facets(), d);
    std::size_t rhs = hilbert_function(both, d) + hilbert_function(zy.faces, d);
    if (lhs != rhs) return false;
  }
  return true;
}

IdealSequenceChecker::IdealSequenceChecker(GncModel m, int d_max)
    : model_(std::move(m)), lcs_(lcs(model_)), d_max_(d_max) {
  std::set<IndexSet> faces = distinct_supports(model_.facets());
  supports_.resize(d_max_ + 1);
  weights_.resize(d_max_ + 1);
  for (int d = 0; d <= d_max_; ++d)
    for (IndexSet t : faces)
      if (std::size_t w = support_count(d, t.size())) {
        supports_[d].push_back(t);
        weights_[d].push_back(w);
      }
  if (!lcs_) return;
  const std::vector<Bits>& per_facet_zero = bits_for(IndexSet());
  y_bits_.assign(d_max_ + 1, Bits());
  for (int d = 0; d <= d_max_; ++d) y_bits_[d].assign(per_facet_zero[d].size(), 0);
  for (IndexSet tau : lcs_->facets()) {
    const std::vector<Bits>& fb = bits_for(tau);
    for (int d = 0; d <= d_max_; ++d)
      for (std::size_t w = 0; w < fb[d].size(); ++w) y_bits_[d][w] |= fb[d][w];
  }
  for (int d = 0; d <= d_max_; ++d) h_y_.push_back(weighted_count(y_bits_[d], d));
}

const std::vector<IdealSequenceChecker::Bits>& IdealSequenceChecker::bits_for(
    IndexSet gamma) const {
  auto it = face_cache_.find(gamma.bits());
  if (it != face_cache_.end()) return it->second;
  std::vector<Bits> bits(d_max_ + 1);
  for (int d = 0; d <= d_max_; ++d) {
    bits[d].assign((supports_[d].size() + 63) / 64, 0);
    for (std::size_t s = 0; s < supports_[d].size(); ++s)
      if (supports_[d][s].subset_of(gamma)) bits[d][s / 64] |= std::uint64_t{1} << (s % 64);
  }
  return face_cache_.emplace(gamma.bits(), std::move(bits)).first->second;
}

std::size_t IdealSequenceChecker::weighted_count(const Bits& b, int d) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t word = b[w];
    while (word != 0) {
      int bit = std::countr_zero(word);
      total += weights_[d][w * 64 + bit];
      word &= word - 1;
    }
  }
  return total;
}

bool IdealSequenceChecker::check(const CenterUnion& z) const {
  if (!lcs_) throw std::invalid_argument("ideal sequence checker: model has empty LCS");
  CenterUnion zy = intersect_union(*lcs_, z);
  /* map values are stable under rehash, so the pointers survive inserts */
  std::vector<const std::vector<Bits>*> z_bits, zy_bits;
  for (IndexSet gamma : z.faces) z_bits.push_back(&bits_for(gamma));
  for (IndexSet face : zy.faces) zy_bits.push_back(&bits_for(face));
  for (int d = 0; d <= d_max_; ++d) {
    Bits bz(y_bits_[d].size(), 0);
    for (const auto* g : z_bits)
      for (std::size_t w = 0; w < bz.size(); ++w) bz[w] |= (*g)[d][w];
    Bits bu = bz;
    for (std::size_t w = 0; w < bu.size(); ++w) bu[w] |= y_bits_[d][w];
    Bits bzy(y_bits_[d].size(), 0);
    for (const auto* g : zy_bits)
      for (std::size_t w = 0; w < bzy.size(); ++w) bzy[w] |= (*g)[d][w];
    if (weighted_count(bz, d) + h_y_[d] !=
        weighted_count(bu, d) + weighted_count(bzy, d))
      return false;
  }
  return true;
}

}  // namespace gnc
