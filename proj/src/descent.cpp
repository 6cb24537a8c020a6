#include "gnc/descent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace gnc {

namespace {

struct Summand {
  std::vector<int> tuple;  // strictly increasing component indices
  IndexSet g;              // intersection face, nonempty
};

/* monomials m ≥ 0 on g with Σm = d, lex order on the exponent vector */
std::vector<std::vector<int>> monomials_on(IndexSet g, int d, int n) {
  std::vector<int> idx = g.indices();
  std::vector<std::vector<int>> out;
  std::vector<int> current(n, 0);
  auto rec = [&](auto&& self, std::size_t at, int left) -> void {
    if (at + 1 == idx.size()) {
      current[idx[at]] = left;
      out.push_back(current);
      current[idx[at]] = 0;
      return;
    }
    for (int take = 0; take <= left; ++take) {
      current[idx[at]] = take;
      self(self, at + 1, left - take);
    }
    current[idx[at]] = 0;
  };
  if (!idx.empty()) rec(rec, 0, d);
  return out;
}

std::string monomial_str(const std::vector<int>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) {
      if (!s.empty()) s += ' ';
      s += 'z' + std::to_string(i + 1);
      if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
  return s.empty() ? "1" : s;
}

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i] + 1);
  }
  return s + ")";
}

}  // namespace

CochainComplex descent_complex(const ProjectiveModel& pm, int d) {
  if (d < 0) throw std::invalid_argument("descent_complex: negative twist outside oracle domain");
  int n = pm.vertex_count;

  /* strictly increasing tuples, grown depth-first; intersections only
     shrink, so a tuple with empty intersection has no live extensions */
  std::vector<std::vector<Summand>> levels;
  std::vector<Summand> frontier;
  for (std::size_t i = 0; i < pm.components.size(); ++i)
    frontier.push_back({{static_cast<int>(i)}, pm.components[i]});
  while (!frontier.empty()) {
    levels.push_back(frontier);
    std::vector<Summand> next;
    for (const Summand& s : frontier)
      for (std::size_t j = s.tuple.back() + 1; j < pm.components.size(); ++j) {
        IndexSet g = s.g & pm.components[j];
        if (g.empty()) continue;
        Summand ext = s;
        ext.tuple.push_back(static_cast<int>(j));
        ext.g = g;
        next.push_back(std::move(ext));
      }
    frontier = std::move(next);
  }

  CochainComplex c;
  c.lo = 0;
  if (levels.empty()) {
    c.labels.push_back({});
    return c;
  }

  /* basis per level: (tuple, monomial); offsets locate a tuple's block */
  std::vector<std::vector<std::vector<std::vector<int>>>> mons(levels.size());
  std::vector<std::vector<std::size_t>> offset(levels.size());
  std::vector<std::map<std::vector<int>, std::size_t>> tuple_at(levels.size());
  for (std::size_t p = 0; p < levels.size(); ++p) {
    std::vector<std::string> names;
    std::size_t off = 0;
    for (std::size_t t = 0; t < levels[p].size(); ++t) {
      tuple_at[p][levels[p][t].tuple] = t;
      offset[p].push_back(off);
      mons[p].push_back(monomials_on(levels[p][t].g, d, n));
      for (const auto& m : mons[p][t]) names.push_back(tuple_str(levels[p][t].tuple) + " " + monomial_str(m));
      off += mons[p][t].size();
    }
    offset[p].push_back(off);
    c.labels.push_back(std::move(names));
  }

  for (std::size_t p = 0; p + 1 < levels.size(); ++p) {
    RatMatrix diff(offset[p + 1].back(), offset[p].back());
    for (std::size_t t = 0; t < levels[p + 1].size(); ++t) {
      const Summand& target = levels[p + 1][t];
      for (std::size_t k = 0; k < target.tuple.size(); ++k) {
        std::vector<int> parent = target.tuple;
        parent.erase(parent.begin() + k);
        auto it = tuple_at[p].find(parent);
        if (it == tuple_at[p].end()) continue;  // parent had empty intersection: impossible, but harmless
        std::size_t src = it->second;
        int sign = k % 2 == 0 ? 1 : -1;
        /* restriction kills monomials not supported on the smaller face */
        const auto& source_mons = mons[p][src];
        const auto& target_mons = mons[p + 1][t];
        for (std::size_t mi = 0; mi < source_mons.size(); ++mi) {
          IndexSet supp;
          for (int i = 0; i < n; ++i)
            if (source_mons[mi][i] > 0) supp = supp.with(i);
          if (!supp.subset_of(target.g)) continue;
          auto pos = std::lower_bound(target_mons.begin(), target_mons.end(), source_mons[mi]);
          std::size_t row = offset[p + 1][t] + (pos - target_mons.begin());
          std::size_t col = offset[p][src] + mi;
          diff.set(row, col, diff.at(row, col) + sign);
        }
      }
    }
    c.diffs.push_back(std::move(diff));
  }
  return c;
}

std::vector<std::size_t> descent_cohomology(const ProjectiveModel& pm, int d) {
  CochainComplex c = descent_complex(pm, d);
  int top = pm.dim();
  std::vector<std::size_t> out(std::max(top + 1, 0), 0);
  for (int q = c.lo; q <= c.hi(); ++q) {
    std::size_t h = cohomology_dim(c, q);
    if (q <= top)
      out[q] = h;
    else if (h != 0)
      throw std::logic_error("descent complex has cohomology above the model dimension");
  }
  return out;
}

}  // namespace gnc
