/* Acceptance gates: ten end-to-end criteria, one verdict line each.
   The binary exits with the number of failed criteria. */

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gnc/centers.hpp"
#include "gnc/cohomology.hpp"
#include "gnc/descent.hpp"
#include "gnc/generate.hpp"
#include "gnc/ideals.hpp"
#include "gnc/model.hpp"
#include "gnc/simplicial.hpp"
#include "gnc/theorems.hpp"

using namespace gnc;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

IndexSet face(std::initializer_list<int> idx) {
  IndexSet s;
  for (int i : idx) s = s.with(i);
  return s;
}

GncModel named_model(int ambient, std::vector<IndexSet> facets, std::map<int, Rat> b = {}) {
  return std::get<GncModel>(validate(ambient, std::move(facets), std::move(b)));
}

GncModel xyz_model() {
  return named_model(3, {face({0, 1}), face({1, 2}), face({0, 2})});
}

GncModel two_lines_model() {
  return named_model(2, {face({0, 1})}, {{0, rat(1)}, {1, rat(1)}});
}

GncModel cone_model(std::map<int, Rat> b) {
  return named_model(4, {face({0, 1, 3}), face({1, 2, 3}), face({0, 2, 3})}, std::move(b));
}

/* 200 models spanning ambient 3..7, all three generator families */
std::vector<GncModel> build_corpus() {
  struct Cfg { int ambient, size, count; };
  const std::vector<Cfg> cfgs = {
      {3, 2, 3}, {4, 2, 4}, {4, 3, 3}, {5, 3, 4}, {5, 2, 4}, {5, 4, 5},
      {6, 3, 5}, {6, 4, 4}, {6, 5, 6}, {7, 4, 5}, {7, 3, 6}, {7, 6, 7},
      {4, 3, 4}, {5, 3, 6}, {6, 4, 6}, {7, 5, 6}};
  std::vector<GncModel> corpus;
  corpus.reserve(200);
  for (int k = 0; k < 200; ++k) {
    const Cfg& c = cfgs[k % cfgs.size()];
    corpus.push_back(generate_random_model(k, c.ambient, c.size, c.count));
  }
  return corpus;
}

int floor_of(const Rat& r) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return static_cast<int>(fl.get_si());
}

std::vector<IndexSet> sorted_union(std::vector<IndexSet> a, const std::vector<IndexSet>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

/* ---- criterion bodies; each returns the detail for its verdict line ---- */

std::string axiom_gate(const std::vector<GncModel>& corpus) {
  auto start = Clock::now();
  require(std::holds_alternative<GncModel>(
              validate(3, {face({0, 1}), face({1, 2}), face({0, 2})}, {})),
          "coordinate planes rejected");
  require(std::holds_alternative<GncModel>(
              validate(2, {face({0, 1})}, {{0, rat(1)}, {1, rat(1)}})),
          "two lines rejected");

  auto bad = validate(4, {face({0, 1}), face({1, 2}), face({2, 3})},
                      {{0, rat(1)}, {3, rat(1)}});
  const auto* err = std::get_if<ValidationError>(&bad);
  require(err && err->axiom == Axiom::b, "chain of planes not rejected by axiom b");
  const auto* w = std::get_if<WitnessFace>(&err->witness);
  require(w && w->tau == face({0}) && w->facet == face({0, 1}), "wrong axiom-b witness");

  int cardinality_p = 0, nc = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    if (k % 3 == 0) continue;  // repaired-random family, already covered by generation
    const GncModel& m = corpus[k];
    require(std::holds_alternative<GncModel>(
                validate(m.ambient(), m.facets(), m.boundary().coeffs)),
            "generated model failed revalidation");
    (k % 3 == 1 ? cardinality_p : nc) += 1;
  }
  double dt = since(start);
  require(dt < 1.0, "ran over the 1 s budget");
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << "named models accepted, chain rejected (axiom b, tau={1} in {1,2}); "
      << cardinality_p << " cardinality-p + " << nc << " NC models revalidated in "
      << dt << " s";
  return out.str();
}

std::string lcs_chains() {
  auto start = Clock::now();
  auto chain = lcs_chain(xyz_model());
  require(chain.size() == 3, "planes chain length");
  require(chain[0].facets() ==
              std::vector<IndexSet>{face({0, 1}), face({0, 2}), face({1, 2})},
          "planes chain step 0");
  require(chain[1].facets() == std::vector<IndexSet>{face({0}), face({1}), face({2})},
          "planes chain step 1");
  require(chain[2].facets() == std::vector<IndexSet>{IndexSet{}}, "planes chain step 2");

  auto lines = lcs_chain(two_lines_model());
  require(lines.size() == 3, "two-lines chain length");
  require(lines[0].facets() == std::vector<IndexSet>{face({0, 1})}, "two-lines step 0");
  require(lines[1].facets() == std::vector<IndexSet>{face({0}), face({1})},
          "two-lines step 1");
  require(lines[2].facets() == std::vector<IndexSet>{IndexSet{}}, "two-lines step 2");
  double dt = since(start);
  require(dt < 1.0, "ran over the 1 s budget");
  return "planes->axes->origin and model->axes->origin, exact face sets";
}

std::string center_decomposition(const std::vector<GncModel>& corpus) {
  auto start = Clock::now();
  int b0 = 0;
  for (const GncModel& m : corpus) {
    auto centers = lc_centers(m);
    std::vector<IndexSet> expect = m.facets();
    if (auto y = lcs(m)) expect = sorted_union(std::move(expect), lc_centers(*y));
    std::sort(expect.begin(), expect.end());
    require(centers == expect, "facets + lcs centers decomposition failed");
    if (m.boundary().zero()) {
      require(centers == lc_centers_b0_intersections(m), "B=0 intersection oracle failed");
      ++b0;
    }
  }
  double dt = since(start);
  require(dt < 30.0, "ran over the 30 s budget");
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << corpus.size() << " models decomposed, " << b0
      << " checked against the B=0 intersection oracle in " << dt << " s";
  return out.str();
}

std::string adjunction_degrees(const std::vector<GncModel>& corpus) {
  auto start = Clock::now();
  long components = 0;
  for (const GncModel& m : corpus) {
    require(check_simplicial_identities(m, 3), "simplicial identities failed");
    for (int n = 0; n <= 3; ++n) {
      require(check_level_adjunction(m, n), "level adjunction degree failed");
      components += static_cast<long>(level_components(m, n, LevelMode::all_tuples).size());
    }
  }
  double dt = since(start);
  require(dt < 60.0, "ran over the 60 s budget");
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << components << " level components at the common twist degree, identities hold, "
      << dt << " s";
  return out.str();
}

std::string oracle_equivalence(const std::vector<GncModel>& corpus) {
  auto start = Clock::now();
  long compared = 0;
  for (const GncModel& m : corpus) {
    ProjectiveModel pm = make_projective(m);
    for (int d = 0; d <= 5; ++d) {
      require(descent_cohomology(pm, d) == sheaf_cohomology(pm, d),
              "descent oracle disagrees with the fine grading");
      ++compared;
    }
    for (int d = -5; d <= 5; ++d) {
      auto dims = sheaf_cohomology(pm, d);
      long alt = 0, sign = 1;
      for (std::size_t q = 0; q < dims.size(); ++q, sign = -sign)
        alt += sign * static_cast<long>(dims[q]);
      require(euler_characteristic(pm, d) == alt, "euler characteristic mismatch");
    }
  }
  double dt = since(start);
  require(dt < 300.0, "ran over the 5 min budget");
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << compared << " twists cross-checked against descent, euler identity on d in [-5,5], "
      << dt << " s";
  return out.str();
}

std::string named_values() {
  ProjectiveModel triangle = make_projective(xyz_model());
  require(sheaf_cohomology(triangle, 0) == std::vector<std::size_t>{1, 1},
          "triangle O: expected h = (1,1)");
  for (int d = 1; d <= 4; ++d)
    require(sheaf_cohomology(triangle, d) ==
                std::vector<std::size_t>{static_cast<std::size_t>(3 * d), 0},
            "triangle O(d): expected h^0 = 3d");

  ProjectiveModel cone = make_projective(cone_model({}));
  require(sheaf_cohomology(cone, 1) == std::vector<std::size_t>{4, 0, 0},
          "cone O(1): expected h^0 = 4");
  require(sheaf_cohomology(cone, -1) == std::vector<std::size_t>{0, 0, 1},
          "cone O(-1): expected h^2 = 1");

  ProjectiveModel plane = make_projective(named_model(3, {face({0, 1, 2})}));
  require(sheaf_cohomology(plane, -3) == std::vector<std::size_t>{0, 0, 1},
          "plane O(-3): expected h^2 = 1");
  return "triangle h(O)=(1,1) and h^0(O(d))=3d, cone h^0(O(1))=4 and h^2(O(-1))=1, "
         "plane h^2(O(-3))=1";
}

std::string vanishing_soundness(const std::vector<GncModel>& corpus) {
  auto start = Clock::now();
  long rows = 0;
  for (const GncModel& m : corpus) {
    ProjectiveModel pm = make_projective(m);
    Rat ell = log_canonical_degree(m).value;
    int hi = floor_of(ell) + 4;  // the largest integer <= ell + 4
    VanishingReport report = check_vanishing(pm, hi - 5, hi);
    require(report.all_pass, "nonzero h^q above the log canonical degree");
    require(static_cast<long>(report.rows.size()) == 4L * pm.dim(),
            "vanishing window did not cover four integer twists");
    rows += static_cast<long>(report.rows.size());
  }

  // contractible instance: the cone complex with zero boundary at d = 0 > ell = -1
  ProjectiveModel cone = make_projective(cone_model({}));
  require(log_canonical_degree(cone.base).value == -1, "cone ell");
  require(sheaf_cohomology(cone, 0) == std::vector<std::size_t>{1, 0, 0},
          "cone O: expected h = (1,0,0)");
  VanishingReport at0 = check_vanishing(cone, 0, 0);
  require(at0.all_pass && at0.rows.size() == 2, "cone vanishing at d = 0");

  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << rows << " (d,q) pairs vanish on the window ell < d <= ell+4, "
      << "cone b4=0 d=0 contractibility included, " << since(start) << " s";
  return out.str();
}

std::string injectivity_soundness(const std::vector<GncModel>& corpus) {
  auto start = Clock::now();

  // negative control: no hypothesis holds and injectivity genuinely fails
  ProjectiveModel triangle = make_projective(xyz_model());
  GenericForm control = make_generic_form(triangle, 1, 0);
  HypothesisFlags cf = classify_hypotheses(triangle, 0, Multiplier{control});
  require(!cf.ev && !cf.tk && !cf.kv, "negative control satisfies a hypothesis");
  auto cv = multiplication_verdict_generic(triangle, 0, 1, 0, 0, 1);
  require(cv.at(1).source_dim == 1 && cv.at(1).target_dim == 0 && !cv.at(1).injective,
          "negative control did not fail injectivity at q = 1");

  long ev = 0, tk = 0, substantive = 0, vacuous = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const GncModel& m = corpus[k];
    MultiplicationChecker checker(make_projective(m));
    const ProjectiveModel& pm = checker.model();
    int q_hi = pm.dim();
    int base = floor_of(log_canonical_degree(m).value);

    std::vector<InvariantDivisor> invariants;
    invariants.push_back(InvariantDivisor{std::vector<int>(pm.vertex_count, 0)});
    std::vector<int> indicator(pm.vertex_count, 0);
    bool boundary_positive = false;
    for (const auto& [i, v] : m.boundary().coeffs)
      if (v > 0) { indicator[i] = 1; boundary_positive = true; }
    if (boundary_positive) {
      invariants.push_back(InvariantDivisor{indicator});
      std::vector<int> doubled = indicator;
      for (int& x : doubled) x *= 2;
      invariants.push_back(InvariantDivisor{doubled});
    }

    auto digest = [&](const std::map<int, QVerdict>& v, const char* what) {
      for (const auto& [q, row] : v) {
        require(row.injective, std::string("non-injective q under ") + what);
        if (q >= 1) (row.source_dim == 0 ? vacuous : substantive) += 1;
      }
    };

    for (int d = base; d <= base + 2; ++d) {
      for (const InvariantDivisor& div : invariants) {
        HypothesisFlags flags = classify_hypotheses(pm, d, Multiplier{div});
        if (!flags.ev && !flags.tk) continue;
        ev += flags.ev;
        tk += flags.tk;
        digest(checker.verdict(d, Multiplier{div}, 0, q_hi), "an invariant divisor");
      }
      for (int e = 1; e <= 2; ++e) {
        GenericForm form = make_generic_form(pm, e, k);
        HypothesisFlags flags = classify_hypotheses(pm, d, Multiplier{form});
        if (!flags.ev && !flags.tk) continue;
        ev += flags.ev;
        tk += flags.tk;
        digest(checker.generic_verdict(d, e, k, 0, q_hi), "a generic form");
      }
    }
  }
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << ev << " EV + " << tk << " TK instances injective at every q (q>=1 rows: "
      << substantive << " substantive, " << vacuous << " vacuous); negative control "
      << "fails as it must, " << since(start) << " s";
  return out.str();
}

std::string ideal_sequences(const std::vector<GncModel>& corpus) {
  auto start = Clock::now();
  long unions = 0;
  int skipped = 0;
  for (const GncModel& m : corpus) {
    IdealSequenceChecker checker(m, 4);
    if (!checker.applicable()) { ++skipped; continue; }
    auto centers = lc_centers(m);
    std::size_t n = centers.size();
    auto run = [&](std::vector<IndexSet> faces) {
      require(checker.check(make_center_union(m, std::move(faces))),
              "ideal sequence identity failed");
      ++unions;
    };
    for (std::size_t i = 0; i < n; ++i) {
      run({centers[i]});
      for (std::size_t j = i + 1; j < n; ++j) {
        run({centers[i], centers[j]});
        for (std::size_t l = j + 1; l < n; ++l) run({centers[i], centers[j], centers[l]});
      }
    }
  }
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << unions << " center unions of size <= 3 pass at d <= 4 (" << skipped
      << " models without locus skipped), " << since(start) << " s";
  return out.str();
}

std::string report_determinism() {
  const std::string model = std::string(GNC_MODELS_DIR) + "/cone.json";
  auto run = [&](const std::string& out_file) {
    std::string cmd = std::string(GNC_CLI_PATH) + " report --seed 7 \"" + model +
                      "\" > " + out_file + " 2>&1";
    require(std::system(cmd.c_str()) == 0, "report run failed");
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
  };
  std::string first = run("acceptance_report_a.json");
  std::string second = run("acceptance_report_b.json");
  require(!first.empty(), "report produced no output");
  require(first == second, "two report runs differ");
  std::remove("acceptance_report_a.json");
  std::remove("acceptance_report_b.json");
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << "two `report --seed 7` runs byte-identical (" << first.size() << " bytes)";
  return out.str();
}

}  // namespace

int main() {
  std::vector<GncModel> corpus;
  try {
    corpus = build_corpus();
  } catch (const std::exception& e) {
    std::printf("[FAIL] corpus generation: %s\n", e.what());
    return 10;
  }

  struct Gate {
    int id;
    const char* name;
    std::function<std::string()> body;
  };
  const std::vector<Gate> gates = {
      {1, "axiom gate", [&] { return axiom_gate(corpus); }},
      {2, "lcs chain regression", [] { return lcs_chains(); }},
      {3, "lc-center decomposition", [&] { return center_decomposition(corpus); }},
      {4, "adjunction degrees", [&] { return adjunction_degrees(corpus); }},
      {5, "cohomology oracle equivalence", [&] { return oracle_equivalence(corpus); }},
      {6, "named values", [] { return named_values(); }},
      {7, "vanishing soundness", [&] { return vanishing_soundness(corpus); }},
      {8, "injectivity soundness", [&] { return injectivity_soundness(corpus); }},
      {9, "ideal sequence", [&] { return ideal_sequences(corpus); }},
      {10, "report determinism", [] { return report_determinism(); }},
  };

  int failures = 0;
  for (const Gate& gate : gates) {
    std::string detail;
    bool ok = true;
    try {
      detail = gate.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", gate.id, gate.name,
                detail.c_str());
    std::fflush(stdout);
  }
  if (failures == 0)
    std::printf("all 10 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
