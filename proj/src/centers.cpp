#include "gnc/centers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gnc {

std::vector<IndexSet> lc_centers(const GncModel& m) {
  std::set<IndexSet> out;
  IndexSet rcore = m.reduced_core();
  for (IndexSet f : m.facets()) {
    /* all γ with σ' ⊆ γ ⊆ f: iterate subsets of f∖σ' */
    std::uint64_t extra = f.minus(rcore).bits();
    std::uint64_t sub = 0;
    while (true) {
      out.insert(IndexSet(sub) | rcore);
      if (sub == extra) break;
      sub = (sub - extra) & extra;  // next subset of extra
    }
  }
  return {out.begin(), out.end()};
}

std::vector<IndexSet> intersection_closure(const std::vector<IndexSet>& facets) {
  std::set<IndexSet> closure(facets.begin(), facets.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IndexSet> snapshot(closure.begin(), closure.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j)
        if (closure.insert(snapshot[i] & snapshot[j]).second) grew = true;
  }
  return {closure.begin(), closure.end()};
}

std::vector<IndexSet> lc_centers_b0_intersections(const GncModel& m) {
  if (!m.boundary().zero())
    throw std::invalid_argument("intersection description of centers requires B = 0");
  return intersection_closure(m.facets());
}

std::optional<GncModel> lcs(const GncModel& m) {
  IndexSet rcore = m.reduced_core();
  std::vector<IndexSet> taus;
  for (IndexSet f : m.facets())
    for (int i : f.minus(rcore)) taus.push_back(f.without(i));
  if (taus.empty()) return std::nullopt;
  taus = maximal_faces(std::move(taus));

  std::map<int, Rat> b;
  for (int i : rcore)
    if (m.boundary().coeff(i) != 0) b[i] = m.boundary().coeff(i);

  GncModel y = internal_model(m.ambient(), std::move(taus), std::move(b));
  if (y.core() != rcore)
    throw std::logic_error("lcs invariant: core of the LCS differs from σ'");
  return y;
}

std::optional<GncModel> sing(const GncModel& m) {
  GncModel bare = internal_model(m.ambient(), m.facets(), {});
  return lcs(bare);
}

std::vector<GncModel> lcs_chain(const GncModel& m) {
  std::vector<GncModel> chain{m};
  while (true) {
    auto next = lcs(chain.back());
    if (!next) return chain;
    chain.push_back(std::move(*next));
  }
}

std::vector<NormalizationComponent> normalization_components(const GncModel& m) {
  std::vector<NormalizationComponent> out;
  IndexSet sigma = m.core();
  for (IndexSet f : m.facets()) {
    Boundary b;
    for (int i : f.minus(sigma)) b.coeffs[i] = 1;
    for (int i : sigma)
      if (m.boundary().coeff(i) != 0) b.coeffs[i] = m.boundary().coeff(i);
    out.push_back({f, std::move(b)});
  }
  return out;
}

GncModel normalization_component_model(const GncModel& m, IndexSet facet) {
  for (const auto& comp : normalization_components(m))
    if (comp.facet == facet)
      return internal_model(m.ambient(), {facet}, comp.boundary.coeffs);
  throw std::invalid_argument("normalization_component_model: not a facet");
}

bool check_lcs_normalization_compat(const GncModel& m) {
  auto y = lcs(m);
  for (IndexSet f : m.facets()) {
    auto component_lcs = lcs(normalization_component_model(m, f));
    std::vector<IndexSet> lhs =
        component_lcs ? component_lcs->facets() : std::vector<IndexSet>{};

    std::vector<IndexSet> cut;
    if (y)
      for (IndexSet tau : y->facets()) cut.push_back(tau & f);
    std::vector<IndexSet> rhs = maximal_faces(std::move(cut));

    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace gnc
