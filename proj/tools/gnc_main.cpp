#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gnc/centers.hpp"
#include "gnc/cohomology.hpp"
#include "gnc/descent.hpp"
#include "gnc/ideals.hpp"
#include "gnc/json_io.hpp"
#include "gnc/model.hpp"
#include "gnc/simplicial.hpp"
#include "gnc/theorems.hpp"

using nlohmann::json;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GNC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("GNC_SEED must be a nonnegative integer");
    }
  }
  return 0;
}

json faces_json(const std::vector<gnc::IndexSet>& faces) {
  json out = json::array();
  for (gnc::IndexSet f : faces) out.push_back(gnc::face_json(f));
  return out;
}

json boundary_json(const gnc::Boundary& b) {
  json out = json::object();
  for (const auto& [i, v] : b.coeffs) out[std::to_string(i + 1)] = gnc::rat_str(v);
  return out;
}

json verdicts_json(const std::map<int, gnc::QVerdict>& verdicts) {
  json out = json::array();
  for (const auto& [q, v] : verdicts)
    out.push_back({{"q", q},
                   {"source_dim", v.source_dim},
                   {"target_dim", v.target_dim},
                   {"injective", v.injective},
                   {"vacuous", v.source_dim == 0}});
  return out;
}

json hypotheses_json(const gnc::HypothesisFlags& flags) {
  return {{"ev", flags.ev}, {"tk", flags.tk}, {"kv", flags.kv}};
}

json dims_json(const std::vector<std::size_t>& dims) {
  json out = json::array();
  for (std::size_t h : dims) out.push_back(h);
  return out;
}

json cohomology_payload(const gnc::ProjectiveModel& pm, int d) {
  std::vector<std::size_t> dims = gnc::sheaf_cohomology(pm, d);
  gnc::Int chi = gnc::euler_characteristic(pm, d);
  gnc::Int alternating = 0;
  for (std::size_t q = 0; q < dims.size(); ++q) {
    gnc::Int term(static_cast<long>(dims[q]));
    alternating += q % 2 == 0 ? term : -term;
  }
  if (alternating != chi)
    throw std::logic_error("Euler characteristic disagrees with cohomology dimensions");
  return {{"twist", d}, {"dims", dims_json(dims)}, {"euler", chi.get_str()}};
}

json vanishing_payload(const gnc::VanishingReport& report) {
  json rows = json::array();
  for (const gnc::VanishingRow& row : report.rows)
    rows.push_back({{"d", row.d}, {"q", row.q}, {"dim", row.dim}, {"pass", row.pass}});
  return {{"ell", gnc::rat_str(report.ell)}, {"rows", rows}, {"all_pass", report.all_pass}};
}

std::vector<int> parse_divisor(const std::string& text, const gnc::GncModel& m, int input_ambient) {
  std::vector<int> entries;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("divisor: \"" + token + "\" is not an integer");
    }
  }
  if (static_cast<int>(entries.size()) != input_ambient)
    throw std::invalid_argument("divisor needs one exponent per ambient index (" +
                                std::to_string(input_ambient) + ")");
  for (int e : entries)
    if (e < 0) throw std::invalid_argument("divisor exponents must be nonnegative");
  /* translate from file indexing to the validated (possibly stripped) model */
  std::vector<int> c(m.ambient(), 0);
  std::vector<bool> used(entries.size(), false);
  for (int i = 0; i < m.ambient(); ++i) {
    c[i] = entries[m.source_indices()[i]];
    used[m.source_indices()[i]] = true;
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!used[i] && entries[i] != 0)
      throw std::invalid_argument("divisor exponent on index " + std::to_string(i + 1) +
                                  ", which lies outside every facet");
  return c;
}

gnc::CenterUnion parse_centers(const std::string& text, const gnc::GncModel& m,
                               int input_ambient) {
  std::vector<gnc::IndexSet> faces;
  std::string face_token;
  std::istringstream stream(text);
  while (std::getline(stream, face_token, ';')) {
    gnc::IndexSet face;
    if (face_token != "-" && !face_token.empty()) {
      std::istringstream inner(face_token);
      std::string index_token;
      while (std::getline(inner, index_token, ',')) {
        int v = 0;
        try {
          std::size_t used = 0;
          v = std::stoi(index_token, &used);
          if (used != index_token.size()) throw std::invalid_argument(index_token);
        } catch (const std::exception&) {
          throw std::invalid_argument("centers: \"" + index_token + "\" is not an index");
        }
        if (v < 1 || v > input_ambient)
          throw std::invalid_argument("centers: index " + std::to_string(v) + " out of range");
        /* translate through the stripping map */
        int internal = -1;
        for (int i = 0; i < m.ambient(); ++i)
          if (m.source_indices()[i] == v - 1) internal = i;
        if (internal < 0)
          throw std::invalid_argument("centers: index " + std::to_string(v) +
                                      " lies outside every facet");
        face = face.with(internal);
      }
    }
    faces.push_back(face);
  }
  return gnc::make_center_union(m, std::move(faces));
}

json report_payload(const gnc::GncModel& m, std::uint64_t seed) {
  json out;
  out["model"] = gnc::model_json(m);
  gnc::Rat ell = gnc::log_canonical_degree(m).value;
  out["log_canonical_degree"] = gnc::rat_str(ell);

  out["lc_centers"] = faces_json(gnc::lc_centers(m));

  json chain = json::array();
  for (const gnc::GncModel& link : gnc::lcs_chain(m)) chain.push_back(gnc::model_json(link));
  out["lcs_chain"] = chain;

  json adjunction = json::array();
  for (int n = 0; n <= 2; ++n) adjunction.push_back(gnc::check_level_adjunction(m, n));
  out["adjunction_levels_0_2"] = adjunction;
  out["simplicial_identities"] = gnc::check_simplicial_identities(m, 2);

  gnc::ProjectiveModel pm = gnc::make_projective(m);
  json twists = json::array();
  for (int d = -3; d <= 3; ++d) twists.push_back(cohomology_payload(pm, d));
  out["cohomology"] = twists;

  mpz_class floor_z;
  mpz_fdiv_q(floor_z.get_mpz_t(), ell.get_num_mpz_t(), ell.get_den_mpz_t());
  int ell_floor = static_cast<int>(floor_z.get_si());
  out["vanishing"] = vanishing_payload(gnc::check_vanishing(pm, ell_floor, ell_floor + 3));

  gnc::MultiplicationChecker checker(pm);
  json injectivity = json::array();
  if (ell.get_den() == 1) {
    gnc::InvariantDivisor div;
    div.c.assign(m.ambient(), 0);
    for (const auto& [i, b] : m.boundary().coeffs)
      if (b > 0) div.c[i] = 1;
    int d = static_cast<int>(ell.get_num().get_si());
    injectivity.push_back(
        {{"kind", "invariant"},
         {"twist", d},
         {"exponents", div.c},
         {"hypotheses", hypotheses_json(gnc::classify_hypotheses(pm, d, div))},
         {"verdicts", verdicts_json(checker.verdict(d, div, 0, std::max(pm.dim(), 0)))}});
  }
  {
    int d = ell_floor + 1;
    gnc::GenericForm form = gnc::make_generic_form(pm, 1, seed);
    injectivity.push_back(
        {{"kind", "generic"},
         {"twist", d},
         {"degree", 1},
         {"seed", seed},
         {"hypotheses", hypotheses_json(gnc::classify_hypotheses(pm, d, form))},
         {"verdicts", verdicts_json(checker.generic_verdict(d, 1, seed, 0, std::max(pm.dim(), 0)))}});
  }
  out["injectivity"] = injectivity;

  if (std::optional<gnc::GncModel> y = gnc::lcs(m)) {
    gnc::CenterUnion z = gnc::make_center_union(m, {m.facets().front()});
    out["ideal_sequence"] = {{"centers", faces_json(z.faces)},
                             {"dmax", 3},
                             {"holds", gnc::check_ideal_sequence(m, z, 3)}};
  } else {
    out["ideal_sequence"] = {{"applicable", false}};
  }

  json descent = json::array();
  for (int d = 0; d <= 2; ++d) {
    std::vector<std::size_t> oracle = gnc::descent_cohomology(pm, d);
    std::vector<std::size_t> fine = gnc::sheaf_cohomology(pm, d);
    descent.push_back({{"twist", d}, {"dims", dims_json(oracle)}, {"agrees", oracle == fine}});
  }
  out["descent_oracle"] = descent;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized normal crossings local models: validation, lc centers,"
               " simplicial resolutions, and exact Cech cohomology checks"};
  app.require_subcommand(1);

  std::string file;
  int level = 0;
  int twist = 0;
  int from = 0, to = 0;
  int generic_degree = 0;
  int dmax = 4;
  std::string divisor_text, centers_text;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "model JSON file")->required();
  };

  CLI::App* cmd_validate = app.add_subcommand("validate", "check the GNC axioms");
  add_file(cmd_validate);
  CLI::App* cmd_centers = app.add_subcommand("centers", "list lc centers");
  add_file(cmd_centers);
  CLI::App* cmd_lcs = app.add_subcommand("lcs", "LCS locus as a GNC model");
  add_file(cmd_lcs);
  CLI::App* cmd_chain = app.add_subcommand("lcs-chain", "iterated LCS chain");
  add_file(cmd_chain);
  CLI::App* cmd_sing = app.add_subcommand("sing", "singular locus (boundary-free LCS)");
  add_file(cmd_sing);
  CLI::App* cmd_resolve = app.add_subcommand("resolve", "simplicial resolution level");
  add_file(cmd_resolve);
  cmd_resolve->add_option("--level", level, "resolution level n")->required();
  CLI::App* cmd_adj = app.add_subcommand("adjunction", "per-level adjunction degrees");
  add_file(cmd_adj);
  cmd_adj->add_option("--level", level, "check levels 0..n")->required();
  CLI::App* cmd_cohom = app.add_subcommand("cohomology", "h^q(O(d)) and Euler characteristic");
  add_file(cmd_cohom);
  cmd_cohom->add_option("--twist", twist, "twist d")->required();
  CLI::App* cmd_euler = app.add_subcommand("euler", "Euler characteristic of O(d)");
  add_file(cmd_euler);
  cmd_euler->add_option("--twist", twist, "twist d")->required();
  CLI::App* cmd_inj = app.add_subcommand("check-injectivity",
                                         "injectivity of a multiplication map on cohomology");
  add_file(cmd_inj);
  cmd_inj->add_option("--twist", twist, "source twist d")->required();
  CLI::Option* opt_div = cmd_inj->add_option("--divisor", divisor_text,
                                             "invariant multiplier exponents c1,...,cN");
  CLI::Option* opt_gen = cmd_inj->add_option("--generic-degree", generic_degree,
                                             "generic multiplier degree");
  opt_div->excludes(opt_gen);
  CLI::Option* opt_seed = cmd_inj->add_option("--seed", seed, "generic coefficient seed");
  CLI::App* cmd_van = app.add_subcommand("check-vanishing", "h^q(O(d)) = 0 for q >= 1, d > ell");
  add_file(cmd_van);
  cmd_van->add_option("--from", from, "first twist")->required();
  cmd_van->add_option("--to", to, "last twist")->required();
  CLI::App* cmd_ideal = app.add_subcommand("ideal-seq", "degreewise ideal sequence check");
  add_file(cmd_ideal);
  cmd_ideal->add_option("--centers", centers_text,
                        "center union, faces ; separated, e.g. \"1,2;-;3\"")->required();
  cmd_ideal->add_option("--dmax", dmax, "highest degree checked");
  CLI::App* cmd_report = app.add_subcommand("report", "full deterministic suite on one model");
  add_file(cmd_report);
  CLI::Option* opt_report_seed = cmd_report->add_option("--seed", seed, "generic coefficient seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  seed_given = opt_seed->count() > 0 || opt_report_seed->count() > 0;

  json report;
  int exit_code = 0;
  try {
    if (!seed_given) seed = default_seed();

    gnc::ModelInput input = gnc::load_model_file(file);
    CLI::App* sub = app.get_subcommands().front();
    report["command"] = sub->get_name();
    report["file"] = file;
    report["input"] = gnc::model_input_json(input);

    gnc::ValidateResult validated = gnc::validate(input.ambient, input.facets, input.boundary);
    if (const auto* err = std::get_if<gnc::ValidationError>(&validated)) {
      report["status"] = "invalid";
      report["error"] = gnc::validation_error_json(*err);
      std::cout << report.dump(2) << std::endl;
      return 1;
    }
    const gnc::GncModel& m = std::get<gnc::GncModel>(validated);

    json source = json::array();
    for (int original : m.source_indices()) source.push_back(original + 1);

    if (sub == cmd_validate) {
      report["result"] = {{"valid", true},
                          {"model", gnc::model_json(m)},
                          {"source_indices", source},
                          {"log_canonical_degree", gnc::rat_str(gnc::log_canonical_degree(m).value)}};
    } else if (sub == cmd_centers) {
      std::vector<gnc::IndexSet> centers = gnc::lc_centers(m);
      report["result"] = {{"lc_centers", faces_json(centers)}, {"count", centers.size()}};
    } else if (sub == cmd_lcs || sub == cmd_sing) {
      std::optional<gnc::GncModel> locus = sub == cmd_lcs ? gnc::lcs(m) : gnc::sing(m);
      if (locus)
        report["result"] = {{"empty", false}, {"model", gnc::model_json(*locus)}};
      else
        report["result"] = {{"empty", true}};
    } else if (sub == cmd_chain) {
      json chain = json::array();
      for (const gnc::GncModel& link : gnc::lcs_chain(m)) chain.push_back(gnc::model_json(link));
      report["result"] = {{"chain", chain}, {"length", chain.size()}};
    } else if (sub == cmd_resolve) {
      if (level < 0) throw std::invalid_argument("--level must be nonnegative");
      json components = json::array();
      for (const gnc::LevelComponent& comp :
           gnc::level_components(m, level, gnc::LevelMode::strict_ordered)) {
        json tuple = json::array();
        for (int t : comp.tuple) tuple.push_back(gnc::face_json(m.facets()[t]));
        components.push_back({{"tuple", tuple},
                              {"intersection", gnc::face_json(comp.intersection)},
                              {"boundary", boundary_json(comp.induced_boundary)}});
      }
      report["result"] = {{"level", level}, {"components", components}};
    } else if (sub == cmd_adj) {
      if (level < 0) throw std::invalid_argument("--level must be nonnegative");
      json levels = json::array();
      bool all = true;
      for (int n = 0; n <= level; ++n) {
        bool holds = gnc::check_level_adjunction(m, n);
        all = all && holds;
        levels.push_back({{"level", n}, {"holds", holds}});
      }
      report["result"] = {{"ell", gnc::rat_str(gnc::log_canonical_degree(m).value)},
                          {"levels", levels},
                          {"all", all}};
    } else if (sub == cmd_cohom) {
      report["result"] = cohomology_payload(gnc::make_projective(m), twist);
    } else if (sub == cmd_euler) {
      report["result"] = {{"twist", twist},
                          {"euler", gnc::euler_characteristic(gnc::make_projective(m), twist).get_str()}};
    } else if (sub == cmd_inj) {
      if (opt_div->count() == 0 && opt_gen->count() == 0)
        throw std::invalid_argument("check-injectivity needs --divisor or --generic-degree");
      gnc::ProjectiveModel pm = gnc::make_projective(m);
      int q_hi = std::max(pm.dim(), 0);
      json result{{"twist", twist}};
      if (opt_div->count() > 0) {
        gnc::InvariantDivisor div{parse_divisor(divisor_text, m, input.ambient)};
        result["multiplier"] = {{"kind", "invariant"}, {"exponents", div.c}};
        result["hypotheses"] = hypotheses_json(gnc::classify_hypotheses(pm, twist, div));
        result["verdicts"] = verdicts_json(gnc::multiplication_verdict(pm, twist, div, 0, q_hi));
      } else {
        if (generic_degree < 1)
          throw std::invalid_argument("--generic-degree must be at least 1");
        gnc::GenericForm form = gnc::make_generic_form(pm, generic_degree, seed);
        result["multiplier"] = {{"kind", "generic"}, {"degree", generic_degree}, {"seed", seed}};
        result["hypotheses"] = hypotheses_json(gnc::classify_hypotheses(pm, twist, form));
        result["verdicts"] = verdicts_json(
            gnc::multiplication_verdict_generic(pm, twist, generic_degree, seed, 0, q_hi));
      }
      report["result"] = result;
    } else if (sub == cmd_van) {
      if (from > to) throw std::invalid_argument("--from must not exceed --to");
      report["result"] = vanishing_payload(gnc::check_vanishing(gnc::make_projective(m), from, to));
    } else if (sub == cmd_ideal) {
      if (dmax < 0) throw std::invalid_argument("--dmax must be nonnegative");
      gnc::CenterUnion z = parse_centers(centers_text, m, input.ambient);
      std::optional<gnc::GncModel> y = gnc::lcs(m);
      if (!y) throw std::invalid_argument("model has empty LCS; the sequence needs Y");
      gnc::CenterUnion zy = gnc::intersect_union(*y, z);
      std::vector<gnc::IndexSet> both = z.faces;
      both.insert(both.end(), y->facets().begin(), y->facets().end());
      json table = json::array();
      for (int d = 0; d <= dmax; ++d)
        table.push_back({{"d", d},
                         {"h_z", gnc::hilbert_function(z.faces, d)},
                         {"h_y", gnc::hilbert_function(y->facets(), d)},
                         {"h_union", gnc::hilbert_function(both, d)},
                         {"h_cap", gnc::hilbert_function(zy.faces, d)}});
      report["result"] = {{"centers", faces_json(z.faces)},
                          {"intersection_with_lcs", faces_json(zy.faces)},
                          {"dmax", dmax},
                          {"holds", gnc::check_ideal_sequence(m, z, dmax)},
                          {"hilbert", table}};
    } else if (sub == cmd_report) {
      report["seed"] = seed;
      report["result"] = report_payload(m, seed);
    }
    report["status"] = "ok";
  } catch (const std::invalid_argument& e) {
    report["status"] = "invalid";
    report["error"] = e.what();
    exit_code = 1;
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = e.what();
    exit_code = 2;
  }

  std::cout << report.dump(2) << std::endl;
  return exit_code;
}
