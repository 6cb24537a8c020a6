#include "gnc/model.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

namespace gnc {

const Rat& Boundary::coeff(int i) const {
  static const Rat kZero = 0;
  auto it = coeffs.find(i);
  return it == coeffs.end() ? kZero : it->second;
}

const char* axiom_name(Axiom ax) {
  switch (ax) {
    case Axiom::a: return "a";
    case Axiom::b: return "b";
    case Axiom::c: return "c";
    case Axiom::incomparability: return "incomparability";
    case Axiom::emptiness: return "emptiness";
  }
  return "?";
}

std::string face_str(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string ValidationError::describe() const {
  std::string out = std::string("axiom ") + axiom_name(axiom) + ": ";
  if (const auto* p = std::get_if<WitnessPair>(&witness)) {
    if (axiom == Axiom::a)
      out += "no codimension-one chain joins " + face_str(p->f) + " and " + face_str(p->g);
    else
      out += "facets " + face_str(p->f) + " and " + face_str(p->g) + " are comparable";
  } else if (const auto* f = std::get_if<WitnessFace>(&witness)) {
    out += "codimension-one face " + face_str(f->tau) + " of facet " + face_str(f->facet) +
           " is not an intersection with another facet";
  } else if (const auto* c = std::get_if<WitnessCoeff>(&witness)) {
    out += "coefficient " + rat_str(c->value) + " at index " + std::to_string(c->index + 1);
  } else if (const auto* m = std::get_if<WitnessFormat>(&witness)) {
    out += m->detail;
  }
  return out;
}

bool GncModel::is_face(IndexSet gamma) const {
  for (IndexSet f : complex_.facets)
    if (gamma.subset_of(f)) return true;
  return false;
}

std::vector<IndexSet> maximal_faces(std::vector<IndexSet> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<IndexSet> out;
  for (IndexSet f : faces) {
    bool dominated = false;
    for (IndexSet g : faces)
      if (f != g && f.subset_of(g)) { dominated = true; break; }
    if (!dominated) out.push_back(f);
  }
  return out;
}

namespace {

IndexSet intersection_of_all(const std::vector<IndexSet>& facets) {
  IndexSet s(~std::uint64_t{0});
  for (IndexSet f : facets) s = s & f;
  return facets.empty() ? IndexSet() : s;
}

/* axiom a for one pair: breadth-first search through facets, moving only
   along codimension-one meets that contain f∩g */
bool chain_exists(const std::vector<IndexSet>& facets, IndexSet f, IndexSet g) {
  IndexSet meet = f & g;
  std::size_t n = facets.size(), start = 0, goal = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (facets[i] == f) start = i;
    if (facets[i] == g) goal = i;
  }
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    if (cur == goal) return true;
    for (std::size_t next = 0; next < n; ++next) {
      if (seen[next]) continue;
      IndexSet m = facets[cur] & facets[next];
      if (!meet.subset_of(m)) continue;
      if (m.size() != facets[cur].size() - 1 || m.size() != facets[next].size() - 1) continue;
      seen[next] = true;
      queue.push_back(next);
    }
  }
  return false;
}

std::optional<ValidationError> axiom_b_failure(const std::vector<IndexSet>& facets,
                                               IndexSet sigma) {
  for (IndexSet f : facets) {
    for (int i : f.minus(sigma)) {
      IndexSet tau = f.without(i);
      bool hit = false;
      for (IndexSet g : facets)
        if (g != f && (f & g) == tau) { hit = true; break; }
      if (!hit) return ValidationError{Axiom::b, WitnessFace{tau, f}};
    }
  }
  return std::nullopt;
}

std::optional<ValidationError> check_axioms(int ambient,
                                            const std::vector<IndexSet>& facets,
                                            const std::map<int, Rat>& boundary) {
  if (ambient < 0)
    return ValidationError{Axiom::emptiness, WitnessFormat{"negative ambient dimension"}};
  if (facets.empty())
    return ValidationError{Axiom::emptiness, WitnessFormat{"no facets"}};
  IndexSet box = IndexSet::all_below(ambient);
  for (IndexSet f : facets)
    if (!f.subset_of(box))
      return ValidationError{Axiom::emptiness,
                             WitnessFormat{"facet " + face_str(f) + " leaves the ambient index range"}};
  for (const auto& [i, v] : boundary)
    if (i < 0 || i >= ambient)
      return ValidationError{Axiom::emptiness,
                             WitnessFormat{"boundary index " + std::to_string(i + 1) +
                                           " outside the ambient index range"}};

  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = i + 1; j < facets.size(); ++j)
      if (facets[i].subset_of(facets[j]) || facets[j].subset_of(facets[i]))
        return ValidationError{Axiom::incomparability, WitnessPair{facets[i], facets[j]}};

  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = i + 1; j < facets.size(); ++j)
      if (!chain_exists(facets, facets[i], facets[j]))
        return ValidationError{Axiom::a, WitnessPair{facets[i], facets[j]}};

  IndexSet sigma = intersection_of_all(facets);
  if (auto err = axiom_b_failure(facets, sigma)) return err;

  for (const auto& [i, v] : boundary) {
    if (!sigma.contains(i)) return ValidationError{Axiom::c, WitnessCoeff{i, v}};
    if (v < 0 || v > 1) return ValidationError{Axiom::c, WitnessCoeff{i, v}};
  }
  return std::nullopt;
}

}  // namespace

GncModel finish_model(FacetComplex complex, Boundary boundary, std::vector<int> source) {
  GncModel m;
  m.complex_ = std::move(complex);
  m.boundary_ = std::move(boundary);
  m.core_ = intersection_of_all(m.complex_.facets);
  m.rcore_ = IndexSet();
  for (int i : m.core_)
    if (m.boundary_.coeff(i) < 1) m.rcore_ = m.rcore_.with(i);
  m.psi_.assign(m.complex_.ambient, Rat(0));
  for (int i : m.core_) m.psi_[i] = Rat(1) - m.boundary_.coeff(i);
  m.source_ = std::move(source);

  /* equidimensionality follows from axiom a; treat a breach as internal */
  for (IndexSet f : m.complex_.facets)
    if (f.size() != m.facet_size())
      throw std::logic_error("model invariant: facets not equidimensional");
  return m;
}

namespace {

GncModel build_model(int ambient, std::vector<IndexSet> facets,
                     std::map<int, Rat> boundary, bool strip) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  std::vector<int> source;
  if (strip) {
    IndexSet used;
    for (IndexSet f : facets) used = used | f;
    if (used != IndexSet::all_below(ambient)) {
      std::vector<int> rename(ambient, -1);
      int next = 0;
      for (int i : used) {
        rename[i] = next++;
        source.push_back(i);
      }
      std::vector<IndexSet> renamed;
      for (IndexSet f : facets) {
        IndexSet r;
        for (int i : f) r = r.with(rename[i]);
        renamed.push_back(r);
      }
      std::map<int, Rat> rb;
      for (const auto& [i, v] : boundary) rb[rename[i]] = v;  // keys ⊆ σ ⊆ used
      facets = std::move(renamed);
      boundary = std::move(rb);
      ambient = next;
      std::sort(facets.begin(), facets.end());
    }
  }
  if (source.empty())
    for (int i = 0; i < ambient; ++i) source.push_back(i);

  Boundary b;
  for (const auto& [i, v] : boundary)
    if (v != 0) b.coeffs[i] = v;
  return finish_model(FacetComplex{ambient, std::move(facets)}, std::move(b), std::move(source));
}

}  // namespace

ValidateResult validate(int ambient, std::vector<IndexSet> facets,
                        std::map<int, Rat> boundary) {
  if (ambient < 1)
    return ValidationError{Axiom::emptiness, WitnessFormat{"ambient dimension must be at least 1"}};
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  if (auto err = check_axioms(ambient, facets, boundary)) return *err;
  return build_model(ambient, std::move(facets), std::move(boundary), true);
}

GncModel internal_model(int ambient, std::vector<IndexSet> facets,
                        std::map<int, Rat> boundary) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  if (auto err = check_axioms(ambient, facets, boundary))
    throw std::logic_error("internal model fails validation: " + err->describe());
  return build_model(ambient, std::move(facets), std::move(boundary), false);
}

bool replay(const ValidationError& err, int ambient,
            const std::vector<IndexSet>& facets, const std::map<int, Rat>& boundary) {
  switch (err.axiom) {
    case Axiom::emptiness: {
      /* any format failure will do; the detail text is advisory */
      if (ambient < 1 || facets.empty()) return true;
      IndexSet box = IndexSet::all_below(ambient);
      for (IndexSet f : facets)
        if (!f.subset_of(box)) return true;
      for (const auto& [i, v] : boundary) {
        (void)v;
        if (i < 0 || i >= ambient) return true;
      }
      return false;
    }
    case Axiom::incomparability: {
      const auto* w = std::get_if<WitnessPair>(&err.witness);
      return w && w->f != w->g && (w->f.subset_of(w->g) || w->g.subset_of(w->f));
    }
    case Axiom::a: {
      const auto* w = std::get_if<WitnessPair>(&err.witness);
      if (!w) return false;
      bool has_f = std::find(facets.begin(), facets.end(), w->f) != facets.end();
      bool has_g = std::find(facets.begin(), facets.end(), w->g) != facets.end();
      return has_f && has_g && !chain_exists(facets, w->f, w->g);
    }
    case Axiom::b: {
      const auto* w = std::get_if<WitnessFace>(&err.witness);
      if (!w) return false;
      IndexSet sigma = intersection_of_all(facets);
      if (!w->tau.subset_of(w->facet) || w->tau.size() != w->facet.size() - 1) return false;
      if (!sigma.subset_of(w->tau)) return false;
      for (IndexSet g : facets)
        if (g != w->facet && (w->facet & g) == w->tau) return false;
      return true;
    }
    case Axiom::c: {
      const auto* w = std::get_if<WitnessCoeff>(&err.witness);
      if (!w) return false;
      IndexSet sigma = intersection_of_all(facets);
      return !sigma.contains(w->index) || w->value < 0 || w->value > 1;
    }
  }
  return false;
}

}  // namespace gnc
