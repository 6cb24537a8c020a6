#include "gnc/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gnc/centers.hpp"

namespace gnc {

int ProjectiveModel::dim() const {
  int d = -1;
  for (IndexSet c : components) d = std::max(d, c.size() - 1);
  return d;
}

bool ProjectiveModel::face(IndexSet s) const {
  for (IndexSet c : components)
    if (s.subset_of(c)) return true;
  return false;
}

ProjectiveModel make_projective(const GncModel& m) {
  ProjectiveModel pm;
  pm.base = m;
  pm.vertex_count = m.ambient();
  for (IndexSet f : m.facets()) {
    if (f.empty())
      pm.dropped_origin = true;
    else
      pm.components.push_back(f);
  }
  return pm;
}

std::vector<IndexSet> all_faces(const ProjectiveModel& pm) {
  std::set<IndexSet> faces;
  for (IndexSet c : pm.components) {
    std::uint64_t bits = c.bits(), sub = 0;
    while (true) {
      faces.insert(IndexSet(sub));
      if (sub == bits) break;
      sub = (sub - bits) & bits;
    }
  }
  return {faces.begin(), faces.end()};
}

Multidegree Multidegree::of(std::vector<int> a) {
  Multidegree md;
  md.a = std::move(a);
  for (std::size_t i = 0; i < md.a.size(); ++i) {
    md.total += md.a[i];
    if (md.a[i] < 0) md.neg = md.neg.with(static_cast<int>(i));
    if (md.a[i] > 0) md.pos = md.pos.with(static_cast<int>(i));
  }
  return md;
}

std::vector<std::vector<IndexSet>> multidegree_basis(const ProjectiveModel& pm,
                                                     IndexSet neg, IndexSet pos) {
  int n = pm.vertex_count;
  std::vector<std::vector<IndexSet>> basis(std::max(n, 1));
  for (IndexSet s : all_faces(pm)) {
    if (s.empty()) continue;
    if (!neg.subset_of(s)) continue;
    if (!pm.face(s | pos)) continue;
    basis[s.size() - 1].push_back(s);
  }
  return basis;  // all_faces is sorted, so each level is sorted
}

namespace {

/* Čech sign: position of j inside the sorted set s∪{j} */
int insertion_sign(IndexSet s, int j) {
  int pos = IndexSet(s.bits() & ((std::uint64_t{1} << j) - 1)).size();
  return pos % 2 == 0 ? 1 : -1;
}

CochainComplex cech_complex_from_basis(const std::vector<std::vector<IndexSet>>& basis,
                                       IndexSet allowed_extensions) {
  CochainComplex c;
  c.lo = 0;
  for (const auto& level : basis) {
    std::vector<std::string> names;
    names.reserve(level.size());
    for (IndexSet s : level) names.push_back(face_str(s));
    c.labels.push_back(std::move(names));
  }
  for (std::size_t p = 0; p + 1 < basis.size(); ++p) {
    RatMatrix d(basis[p + 1].size(), basis[p].size());
    std::map<IndexSet, std::size_t> row_of;
    for (std::size_t r = 0; r < basis[p + 1].size(); ++r) row_of[basis[p + 1][r]] = r;
    for (std::size_t col = 0; col < basis[p].size(); ++col) {
      IndexSet s = basis[p][col];
      for (int j : allowed_extensions.minus(s)) {
        auto it = row_of.find(s.with(j));
        if (it != row_of.end()) d.set(it->second, col, insertion_sign(s, j));
      }
    }
    c.diffs.push_back(std::move(d));
  }
  return c;
}

}  // namespace

CochainComplex multidegree_complex(const ProjectiveModel& pm, const Multidegree& a) {
  if (static_cast<int>(a.a.size()) != pm.vertex_count)
    throw std::invalid_argument("multidegree_complex: wrong multidegree length");
  auto basis = multidegree_basis(pm, a.neg, a.pos);
  return cech_complex_from_basis(basis, IndexSet::all_below(pm.vertex_count));
}

std::vector<std::size_t> multidegree_cohomology(const ProjectiveModel& pm,
                                                const Multidegree& a) {
  int top = pm.dim();
  std::vector<std::size_t> out(std::max(top + 1, 0), 0);
  if (top < 0) return out;
  CochainComplex c = multidegree_complex(pm, a);
  for (int q = 0; q <= top; ++q) out[q] = cohomology_dim(c, q);
  return out;
}

std::vector<std::size_t> pattern_closed_form(const ProjectiveModel& pm,
                                             IndexSet G, IndexSet P) {
  if (!(G & P).empty())
    throw std::invalid_argument("pattern_closed_form: supports must be disjoint");
  int top = pm.dim();
  std::vector<std::size_t> out(std::max(top + 1, 0), 0);
  if (top < 0) return out;

  if (!G.empty() && !P.empty()) return out;  // mixed signs are acyclic

  if (!P.empty()) {
    if (pm.face(P)) out[0] = 1;
    return out;
  }

  if (G.empty()) {
    /* a = 0: unreduced simplicial cohomology of the face complex */
    auto basis = multidegree_basis(pm, IndexSet(), IndexSet());
    CochainComplex c = cech_complex_from_basis(basis, IndexSet::all_below(pm.vertex_count));
    for (int q = 0; q <= top; ++q) out[q] = cohomology_dim(c, q);
    return out;
  }

  if (!pm.face(G)) return out;

  /* reduced cohomology of the link of G, shifted by |G| */
  std::vector<IndexSet> link;
  for (IndexSet s : all_faces(pm))
    if ((s & G).empty() && pm.face(s | G)) link.push_back(s);

  int max_size = 0;
  for (IndexSet s : link) max_size = std::max(max_size, s.size());
  std::vector<std::vector<IndexSet>> levels(max_size + 1);  // level j+1 holds |T| = j+1, T = ∅ at 0
  for (IndexSet s : link) levels[s.size()].push_back(s);

  CochainComplex c;
  c.lo = -1;
  for (const auto& level : levels) {
    std::vector<std::string> names;
    for (IndexSet s : level) names.push_back(face_str(s));
    c.labels.push_back(std::move(names));
  }
  IndexSet vertices;
  for (IndexSet s : link) vertices = vertices | s;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    RatMatrix d(levels[k + 1].size(), levels[k].size());
    std::map<IndexSet, std::size_t> row_of;
    for (std::size_t r = 0; r < levels[k + 1].size(); ++r) row_of[levels[k + 1][r]] = r;
    for (std::size_t col = 0; col < levels[k].size(); ++col) {
      IndexSet s = levels[k][col];
      for (int j : vertices.minus(s)) {
        auto it = row_of.find(s.with(j));
        if (it != row_of.end()) d.set(it->second, col, insertion_sign(s, j));
      }
    }
    c.diffs.push_back(std::move(d));
  }

  int gsize = G.size();
  for (int q = 0; q <= top; ++q) {
    int j = q - gsize;  // reduced degree
    if (c.in_range(j)) out[q] = cohomology_dim(c, j);
  }
  return out;
}

namespace {

/* strictly positive vectors on support T summing to total, lex order */
void positive_compositions(IndexSet T, int total, int n,
                           std::vector<Multidegree>& out, int sign) {
  std::vector<int> idx = T.indices();
  int k = static_cast<int>(idx.size());
  if (k == 0) {
    if (total == 0) out.push_back(Multidegree::of(std::vector<int>(n, 0)));
    return;
  }
  if (total < k) return;
  int spare = total - k;
  /* odometer over weak compositions of `spare` on k slots */
  std::vector<int> add(k, 0);
  add[0] = spare;
  while (true) {
    std::vector<int> a(n, 0);
    for (int i = 0; i < k; ++i) a[idx[i]] = sign * (1 + add[i]);
    out.push_back(Multidegree::of(std::move(a)));
    /* next weak composition in colex-ish deterministic order */
    int i = 0;
    while (i < k - 1 && add[i] == 0) ++i;
    if (i == k - 1) break;
    int carry = add[i];
    add[i] = 0;
    ++add[i + 1];
    add[0] = carry - 1;
  }
}

}  // namespace

std::vector<Multidegree> contributing_multidegrees(const ProjectiveModel& pm, int d) {
  std::vector<Multidegree> out;
  if (pm.components.empty()) return out;
  int n = pm.vertex_count;
  for (IndexSet T : all_faces(pm)) {
    if (d >= 0)
      positive_compositions(T, d, n, out, +1);
    else if (!T.empty())
      positive_compositions(T, -d, n, out, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> sheaf_cohomology(const ProjectiveModel& pm, int d) {
  int top = pm.dim();
  std::vector<std::size_t> out(std::max(top + 1, 0), 0);
  if (top < 0) return out;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::size_t>> cache;
  for (const Multidegree& a : contributing_multidegrees(pm, d)) {
    auto key = std::make_pair(a.neg.bits(), a.pos.bits());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, multidegree_cohomology(pm, a)).first;
    for (int q = 0; q <= top; ++q) out[q] += it->second[q];
  }
  return out;
}

Int euler_characteristic(const ProjectiveModel& pm, int d) {
  if (pm.components.empty()) return 0;
  /* group the 2^facets - 1 families by their intersection face γ; the net
     coefficient m_γ satisfies Σ_{δ ⊇ γ in the closure} m_δ = 1 */
  std::vector<IndexSet> closure = intersection_closure(pm.components);
  std::sort(closure.begin(), closure.end(),
            [](IndexSet a, IndexSet b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  std::map<IndexSet, Int> m;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    Int coeff = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (closure[i].subset_of(closure[j]) && closure[i] != closure[j]) coeff -= m[closure[j]];
    m[closure[i]] = coeff;
  }
  Int chi = 0;
  for (const auto& [gamma, coeff] : m) {
    int g = gamma.size();
    if (g == 0) continue;  // P_∅ is empty
    /* χ(P^{g-1}, O(d)) = binom(d+g-1, g-1), evaluated as a polynomial */
    Int num = 1;
    for (int j = 1; j <= g - 1; ++j) num *= Int(d) + j;
    Int den = 1;
    for (int j = 2; j <= g - 1; ++j) den *= j;
    chi += coeff * (num / den);
  }
  return chi;
}

}  // namespace gnc
