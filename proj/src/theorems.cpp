#include "gnc/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gnc/centers.hpp"
#include "gnc/simplicial.hpp"

namespace gnc {

int InvariantDivisor::degree() const {
  return std::accumulate(c.begin(), c.end(), 0);
}

IndexSet InvariantDivisor::support() const {
  IndexSet s;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] > 0) s = s.with(static_cast<int>(i));
  return s;
}

GenericForm make_generic_form(const ProjectiveModel& pm, int degree, std::uint64_t seed) {
  if (degree < 1) throw std::invalid_argument("make_generic_form: degree must be positive");
  GenericForm f;
  f.degree = degree;
  f.seed = seed;
  std::mt19937_64 rng(seed);
  /* contributing_multidegrees(d ≥ 1) is exactly the monomial list, in a
     fixed order, so coefficient draws are reproducible */
  for (const Multidegree& m : contributing_multidegrees(pm, degree)) {
    std::uint64_t r = rng();
    Rat value(1 + static_cast<long>(r % 1000003));
    if ((r >> 40) & 1) value = -value;
    f.coefficients[m.a] = value;
  }
  return f;
}

int multiplier_degree(const Multiplier& mult) {
  if (const auto* div = std::get_if<InvariantDivisor>(&mult)) return div->degree();
  return std::get<GenericForm>(mult).degree;
}

namespace {

std::vector<std::pair<std::vector<int>, Rat>> multiplier_terms(const ProjectiveModel& pm,
                                                               const Multiplier& mult) {
  std::vector<std::pair<std::vector<int>, Rat>> terms;
  if (const auto* div = std::get_if<InvariantDivisor>(&mult)) {
    if (static_cast<int>(div->c.size()) != pm.vertex_count)
      throw std::invalid_argument("invariant divisor: exponent vector has wrong length");
    for (int ci : div->c)
      if (ci < 0) throw std::invalid_argument("invariant divisor: exponents must be >= 0");
    terms.emplace_back(div->c, Rat(1));
  } else {
    for (const auto& [m, coeff] : std::get<GenericForm>(mult).coefficients) {
      if (static_cast<int>(m.size()) != pm.vertex_count)
        throw std::invalid_argument("generic form: monomial has wrong length");
      if (coeff != 0) terms.emplace_back(m, coeff);
    }
  }
  return terms;
}

}  // namespace

MultiplicationChecker::Pattern& MultiplicationChecker::pattern(const Multidegree& a) {
  PatternKey key{a.neg.bits(), a.pos.bits()};
  auto it = patterns_.find(key);
  if (it == patterns_.end()) {
    Pattern p;
    p.basis = multidegree_basis(pm_, a.neg, a.pos);
    p.complex = multidegree_complex(pm_, a);
    it = patterns_.emplace(key, std::move(p)).first;
  }
  return it->second;
}

std::size_t MultiplicationChecker::hdim(Pattern& p, int q) {
  auto it = p.hdim.find(q);
  if (it == p.hdim.end()) {
    std::size_t dim = p.complex.in_range(q) ? cohomology_dim(p.complex, q) : 0;
    it = p.hdim.emplace(q, dim).first;
  }
  return it->second;
}

const RatMatrix& MultiplicationChecker::induced(const Multidegree& a, const Multidegree& b,
                                                int q) {
  PatternKey ka{a.neg.bits(), a.pos.bits()}, kb{b.neg.bits(), b.pos.bits()};
  auto key = std::make_tuple(ka, kb, q);
  auto it = induced_.find(key);
  if (it == induced_.end()) {
    Pattern& pa = pattern(a);
    Pattern& pb = pattern(b);
    /* multiplication by z^{b-a} keeps each chart: S ↦ S when S stays a
       chart for the target multidegree, i.e. S ∪ P(b) is a face */
    std::vector<RatMatrix> f;
    for (std::size_t p = 0; p < pa.basis.size(); ++p) {
      RatMatrix fp(pb.basis[p].size(), pa.basis[p].size());
      for (std::size_t col = 0; col < pa.basis[p].size(); ++col) {
        auto pos = std::lower_bound(pb.basis[p].begin(), pb.basis[p].end(), pa.basis[p][col]);
        if (pos != pb.basis[p].end() && *pos == pa.basis[p][col])
          fp.set(pos - pb.basis[p].begin(), col, 1);
      }
      f.push_back(std::move(fp));
    }
    it = induced_.emplace(key, induced_cohomology_map(pa.complex, pb.complex, f, q)).first;
  }
  return it->second;
}

std::map<int, QVerdict> MultiplicationChecker::verdict(int d, const Multiplier& mult,
                                                       int q_lo, int q_hi) {
  if (q_lo > q_hi) throw std::invalid_argument("multiplication_verdict: empty q range");
  auto terms = multiplier_terms(pm_, mult);
  int e = multiplier_degree(mult);
  std::vector<Multidegree> sources = contributing_multidegrees(pm_, d);
  std::vector<Multidegree> targets = contributing_multidegrees(pm_, d + e);
  std::map<std::vector<int>, std::size_t> target_at;
  for (std::size_t j = 0; j < targets.size(); ++j) target_at[targets[j].a] = j;

  std::map<int, QVerdict> out;
  for (int q = q_lo; q <= q_hi; ++q) {
    std::vector<std::size_t> soff(sources.size() + 1, 0);
    for (std::size_t i = 0; i < sources.size(); ++i)
      soff[i + 1] = soff[i] + hdim(pattern(sources[i]), q);
    std::vector<std::size_t> toff(targets.size() + 1, 0);
    for (std::size_t j = 0; j < targets.size(); ++j)
      toff[j + 1] = toff[j] + hdim(pattern(targets[j]), q);

    RatMatrix total(toff.back(), soff.back());
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (soff[i + 1] == soff[i]) continue;
      for (const auto& [m, coeff] : terms) {
        std::vector<int> b = sources[i].a;
        for (std::size_t k = 0; k < b.size(); ++k) b[k] += m[k];
        auto hit = target_at.find(b);
        if (hit == target_at.end()) continue;  // mixed-sign target, acyclic
        std::size_t j = hit->second;
        if (toff[j + 1] == toff[j]) continue;
        const RatMatrix& block = induced(sources[i], targets[j], q);
        for (const auto& [rc, val] : block.entries())
          total.set(toff[j] + rc.first, soff[i] + rc.second, val * coeff);
      }
    }

    QVerdict v;
    v.source_dim = soff.back();
    v.target_dim = toff.back();
    v.injective = v.source_dim == 0 || rank(total) == v.source_dim;
    out[q] = v;
  }
  return out;
}

std::map<int, QVerdict> MultiplicationChecker::generic_verdict(int d, int degree,
                                                               std::uint64_t seed,
                                                               int q_lo, int q_hi) {
  std::map<int, QVerdict> first;
  for (int k = 0; k < 3; ++k) {
    std::uint64_t sk = seed + static_cast<std::uint64_t>(k) * 0x9e3779b97f4a7c15ull;
    auto v = verdict(d, make_generic_form(pm_, degree, sk), q_lo, q_hi);
    if (k == 0) {
      first = std::move(v);
      continue;
    }
    for (const auto& [q, qv] : v)
      if (qv.injective != first.at(q).injective)
        throw std::logic_error("generic multiplication verdicts disagree across seeds at q=" +
                               std::to_string(q));
  }
  return first;
}

std::map<int, QVerdict> multiplication_verdict(const ProjectiveModel& pm, int d,
                                               const Multiplier& mult, int q_lo, int q_hi) {
  MultiplicationChecker checker(pm);
  return checker.verdict(d, mult, q_lo, q_hi);
}

std::map<int, QVerdict> multiplication_verdict_generic(const ProjectiveModel& pm, int d,
                                                       int degree, std::uint64_t seed,
                                                       int q_lo, int q_hi) {
  MultiplicationChecker checker(pm);
  return checker.generic_verdict(d, degree, seed, q_lo, q_hi);
}

bool divisor_avoids_lc_centers(const ProjectiveModel& pm, const Multiplier& mult) {
  std::vector<IndexSet> centers = lc_centers(pm.base);
  if (const auto* div = std::get_if<InvariantDivisor>(&mult)) {
    IndexSet supp = div->support();
    for (IndexSet gamma : centers)
      if (!gamma.empty() && !supp.subset_of(gamma)) return false;
    return true;
  }
  const GenericForm& form = std::get<GenericForm>(mult);
  for (IndexSet gamma : centers) {
    if (gamma.empty()) continue;
    bool hit = false;
    for (const auto& [m, coeff] : form.coefficients) {
      if (coeff == 0) continue;
      IndexSet supp;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) supp = supp.with(static_cast<int>(i));
      if (supp.subset_of(gamma)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

HypothesisFlags classify_hypotheses(const ProjectiveModel& pm, int d, const Multiplier& mult) {
  Rat ell = log_canonical_degree(pm.base).value;
  HypothesisFlags flags;
  if (const auto* div = std::get_if<InvariantDivisor>(&mult)) {
    IndexSet positive;
    for (int i = 0; i < pm.base.ambient(); ++i)
      if (pm.base.boundary().coeff(i) > 0) positive = positive.with(i);
    flags.ev = Rat(d) == ell && div->support().subset_of(positive);
  }
  flags.tk = Rat(d) - ell > 0 && divisor_avoids_lc_centers(pm, mult);
  flags.kv = Rat(d) > ell;
  return flags;
}

VanishingReport check_vanishing(const ProjectiveModel& pm, int d_lo, int d_hi) {
  VanishingReport report;
  report.ell = log_canonical_degree(pm.base).value;
  for (int d = d_lo; d <= d_hi; ++d) {
    if (!(Rat(d) > report.ell)) continue;
    std::vector<std::size_t> dims = sheaf_cohomology(pm, d);
    for (int q = 1; q < static_cast<int>(dims.size()); ++q) {
      VanishingRow row{d, q, dims[q], dims[q] == 0};
      report.all_pass = report.all_pass && row.pass;
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace gnc
