#include "gnc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

namespace gnc {

namespace {

/* mt19937_64 is fully specified by the standard, and we avoid the
   distribution classes on purpose: their output is implementation defined
   and would break cross-platform regressions. */
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint64_t next() { return engine(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  std::vector<int> subset(int n, int k) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(n - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }
};

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::map<int, Rat> random_boundary(Rng& rng, IndexSet sigma) {
  std::map<int, Rat> b;
  for (int i : sigma) {
    switch (rng.below(8)) {
      case 0: case 1: break;                       // coefficient 0
      case 2: case 3: b[i] = 1; break;
      case 4: b[i] = rat(1, 2); break;
      case 5: b[i] = rat(1, 3); break;
      case 6: b[i] = rat(2, 3); break;
      default: {
        int den = 2 + rng.below(5);
        b[i] = rat(1 + rng.below(den - 1), den);   // proper fraction
        break;
      }
    }
  }
  return b;
}

GncModel validate_or_throw(int ambient, std::vector<IndexSet> facets,
                           std::map<int, Rat> boundary) {
  auto res = validate(ambient, std::move(facets), std::move(boundary));
  if (auto* err = std::get_if<ValidationError>(&res))
    throw std::logic_error("generated model fails validation: " + err->describe());
  return std::get<GncModel>(std::move(res));
}

constexpr int kFacetCap = 12;  // keeps downstream tuple enumerations tame

GncModel cardinality_family(Rng& rng, int ambient, int p, int facet_count) {
  if (p >= ambient)
    return validate_or_throw(ambient, {IndexSet::all_below(ambient)}, random_boundary(rng, IndexSet::all_below(ambient)));

  /* pick |σ| so the family size lands near facet_count without exploding */
  int best_s = p;
  unsigned long long best_gap = ~0ull;
  for (int s = p; s >= 0; --s) {
    unsigned long long count = binomial(ambient - s, p - s);
    if (count > kFacetCap) continue;
    unsigned long long gap = count > static_cast<unsigned long long>(facet_count)
                                 ? count - facet_count
                                 : facet_count - count;
    if (gap < best_gap) { best_gap = gap; best_s = s; }
  }
  IndexSet sigma = IndexSet::from_indices(rng.subset(ambient, best_s));

  std::vector<IndexSet> facets;
  IndexSet rest = IndexSet::all_below(ambient).minus(sigma);
  std::vector<int> pool = rest.indices();
  /* all (p-s)-subsets of the complement, attached to σ */
  std::vector<int> pick(p - best_s);
  auto emit = [&](auto&& self, int from, int depth) -> void {
    if (depth == p - best_s) {
      IndexSet f = sigma;
      for (int idx : pick) f = f.with(pool[idx]);
      facets.push_back(f);
      return;
    }
    for (int i = from; i <= static_cast<int>(pool.size()) - (p - best_s - depth); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  emit(emit, 0, 0);

  IndexSet core = facets.size() == 1 ? facets[0] : sigma;
  return validate_or_throw(ambient, std::move(facets), random_boundary(rng, core));
}

GncModel nc_family(Rng& rng, int ambient, int facet_count) {
  int k = std::min(facet_count, ambient);
  std::vector<int> I = rng.subset(ambient, k);
  std::vector<IndexSet> facets;
  for (int i : I) facets.push_back(IndexSet::all_below(ambient).without(i));
  IndexSet sigma = IndexSet::all_below(ambient).minus(IndexSet::from_indices(I));
  return validate_or_throw(ambient, std::move(facets), random_boundary(rng, sigma));
}

std::optional<GncModel> repaired_family_attempt(Rng& rng, int ambient, int p,
                                                int facet_count) {
  std::set<IndexSet> facets;
  int guard = 0;
  while (static_cast<int>(facets.size()) < facet_count && ++guard < 200)
    facets.insert(IndexSet::from_indices(rng.subset(ambient, p)));
  if (static_cast<int>(facets.size()) < facet_count) return std::nullopt;

  /* repair axiom b: any codim-1 face over the core that is not realized as a
     pairwise intersection gets a partner facet τ ∪ {j} */
  bool stable = false;
  while (!stable) {
    stable = true;
    IndexSet sigma(~std::uint64_t{0});
    for (IndexSet f : facets) sigma = sigma & f;
    for (IndexSet f : std::vector<IndexSet>(facets.begin(), facets.end())) {
      for (int i : f.minus(sigma)) {
        IndexSet tau = f.without(i);
        bool hit = false;
        for (IndexSet g : facets)
          if (g != f && (f & g) == tau) { hit = true; break; }
        if (hit) continue;
        IndexSet outside = IndexSet::all_below(ambient).minus(f);
        if (outside.empty()) return std::nullopt;
        std::vector<int> choices = outside.indices();
        facets.insert(tau.with(choices[rng.below(static_cast<int>(choices.size()))]));
        stable = false;
        break;
      }
      if (!stable) break;
    }
    if (static_cast<int>(facets.size()) > kFacetCap) return std::nullopt;
  }

  std::vector<IndexSet> flist(facets.begin(), facets.end());
  IndexSet sigma(~std::uint64_t{0});
  for (IndexSet f : flist) sigma = sigma & f;
  auto res = validate(ambient, flist, random_boundary(rng, sigma));
  if (std::holds_alternative<ValidationError>(res)) return std::nullopt;
  return std::get<GncModel>(std::move(res));
}

}  // namespace

GncModel generate_random_model(std::uint64_t seed, int ambient, int facet_size,
                               int facet_count) {
  if (ambient < 1 || ambient > 32)
    throw std::invalid_argument("generate_random_model: ambient out of range");
  if (facet_size < 0 || facet_size > ambient)
    throw std::invalid_argument("generate_random_model: facet size out of range");
  if (facet_count < 1 || binomial(ambient, facet_size) < static_cast<unsigned long long>(facet_count))
    throw std::invalid_argument("generate_random_model: facet count infeasible");

  if (facet_size == 0) return validate_or_throw(ambient, {IndexSet()}, {});

  switch (seed % 3) {
    case 1: {
      Rng rng(seed * 0x9e3779b97f4a7c15ull + 1);
      return cardinality_family(rng, ambient, facet_size, facet_count);
    }
    case 2: {
      Rng rng(seed * 0x9e3779b97f4a7c15ull + 2);
      return nc_family(rng, ambient, facet_count);
    }
    default: {
      for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x1000 * (attempt + 1));
        if (auto m = repaired_family_attempt(rng, ambient, facet_size, facet_count))
          return *m;
      }
      throw std::invalid_argument(
          "generate_random_model: could not repair a complex for these parameters");
    }
  }
}

}  // namespace gnc
