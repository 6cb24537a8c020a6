#include "doctest.h"

#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "gnc/cohomology.hpp"
#include "gnc/generate.hpp"
#include "gnc/model.hpp"
#include "gnc/theorems.hpp"

using namespace gnc;

namespace {

IndexSet face(std::initializer_list<int> idx) {
  IndexSet s;
  for (int i : idx) s = s.with(i);
  return s;
}

GncModel model(int ambient, std::vector<IndexSet> facets, std::map<int, Rat> b = {}) {
  return std::get<GncModel>(validate(ambient, std::move(facets), std::move(b)));
}

ProjectiveModel triangle() {
  return make_projective(model(3, {face({0, 1}), face({1, 2}), face({0, 2})}));
}

ProjectiveModel cone(const Rat& apex) {
  std::map<int, Rat> b;
  if (apex != 0) b[3] = apex;
  return make_projective(
      model(4, {face({0, 1, 3}), face({1, 2, 3}), face({0, 2, 3})}, b));
}

void check_q(const std::map<int, QVerdict>& v, int q, std::size_t src, std::size_t dst,
             bool inj) {
  auto it = v.find(q);
  REQUIRE(it != v.end());
  CHECK(it->second.source_dim == src);
  CHECK(it->second.target_dim == dst);
  CHECK(it->second.injective == inj);
}

}  // namespace

TEST_CASE("invariant divisor bookkeeping") {
  InvariantDivisor z4{{0, 0, 0, 1}};
  CHECK(z4.degree() == 1);
  CHECK(z4.support() == face({3}));
  CHECK(multiplier_degree(Multiplier{z4}) == 1);
  CHECK(InvariantDivisor{{2, 0, 1}}.degree() == 3);
}

TEST_CASE("generic forms are seeded and supported on faces") {
  ProjectiveModel t = triangle();
  GenericForm f = make_generic_form(t, 1, 0);
  CHECK(f.degree == 1);
  REQUIRE(f.coefficients.size() == 3);
  for (const auto& [m, coeff] : f.coefficients) CHECK(coeff != 0);
  CHECK(f.coefficients.count({1, 0, 0}) == 1);
  CHECK(make_generic_form(t, 2, 0).coefficients.size() == 6);
  CHECK(multiplier_degree(Multiplier{f}) == 1);

  // determinism in the seed
  CHECK(make_generic_form(t, 1, 42).coefficients == make_generic_form(t, 1, 42).coefficients);
  CHECK(make_generic_form(t, 1, 0).coefficients != make_generic_form(t, 1, 1).coefficients);

  CHECK_THROWS_AS(make_generic_form(t, 0, 0), std::invalid_argument);

  // non-face supports carry no monomials
  ProjectiveModel c = cone(rat(1, 2));
  for (const auto& [m, coeff] : make_generic_form(c, 3, 7).coefficients) {
    IndexSet supp;
    for (int i = 0; i < 4; ++i)
      if (m[i] > 0) supp = supp.with(i);
    CHECK(c.face(supp));
  }
}

TEST_CASE("multiplication by the apex coordinate at the critical twist") {
  ProjectiveModel pm = cone(rat(1));
  Multiplier z4 = InvariantDivisor{{0, 0, 0, 1}};

  HypothesisFlags flags = classify_hypotheses(pm, 0, z4);
  CHECK(flags.ev);
  CHECK(!flags.tk);  // z4 vanishes on the center {1,2}
  CHECK(!flags.kv);

  auto v = multiplication_verdict(pm, 0, z4, 0, 2);
  check_q(v, 0, 1, 4, true);
  check_q(v, 1, 0, 0, true);
  check_q(v, 2, 0, 0, true);
}

TEST_CASE("generic multiplication on the triangle at twist zero fails") {
  ProjectiveModel t = triangle();
  GenericForm f = make_generic_form(t, 1, 0);

  HypothesisFlags flags = classify_hypotheses(t, 0, Multiplier{f});
  CHECK(!flags.ev);  // not invariant
  CHECK(!flags.tk);  // d - ell = 0
  CHECK(!flags.kv);

  auto v = multiplication_verdict(t, 0, Multiplier{f}, 0, 1);
  check_q(v, 0, 1, 3, true);
  check_q(v, 1, 1, 0, false);  // H^1 has nowhere to go
}

TEST_CASE("an invariant multiplier shows the same failure") {
  auto v = multiplication_verdict(triangle(), 0, Multiplier{InvariantDivisor{{1, 0, 0}}}, 0, 2);
  check_q(v, 1, 1, 0, false);
  check_q(v, 2, 0, 0, true);  // beyond the dimension, vacuous
}

TEST_CASE("the trivial multiplier is the identity") {
  ProjectiveModel t = triangle();
  auto v = multiplication_verdict(t, 0, Multiplier{InvariantDivisor{{0, 0, 0}}}, 0, 1);
  check_q(v, 0, 1, 1, true);
  check_q(v, 1, 1, 1, true);

  // effective vanishing with the trivial divisor at d = ell = -1
  ProjectiveModel c = cone(rat(0));
  CHECK(classify_hypotheses(c, -1, Multiplier{InvariantDivisor{{0, 0, 0, 0}}}).ev);
  auto w = multiplication_verdict(c, -1, Multiplier{InvariantDivisor{{0, 0, 0, 0}}}, 0, 2);
  check_q(w, 2, 1, 1, true);
}

TEST_CASE("divisors through the apex avoid every center") {
  ProjectiveModel c = cone(rat(1, 2));
  Multiplier z4 = InvariantDivisor{{0, 0, 0, 1}};
  CHECK(divisor_avoids_lc_centers(c, z4));

  HypothesisFlags flags = classify_hypotheses(c, 0, z4);
  CHECK(!flags.ev);  // d = 0 != -1/2
  CHECK(flags.tk);
  CHECK(flags.kv);  // 0 > -1/2
}

TEST_CASE("avoidance anchors") {
  CHECK(!divisor_avoids_lc_centers(cone(rat(1)), Multiplier{InvariantDivisor{{0, 0, 0, 1}}}));
  CHECK(!divisor_avoids_lc_centers(triangle(), Multiplier{InvariantDivisor{{1, 0, 0}}}));
  CHECK(divisor_avoids_lc_centers(triangle(), Multiplier{InvariantDivisor{{0, 0, 0}}}));
  CHECK(divisor_avoids_lc_centers(triangle(), Multiplier{make_generic_form(triangle(), 1, 0)}));
  CHECK(divisor_avoids_lc_centers(cone(rat(1, 2)), Multiplier{make_generic_form(cone(rat(1, 2)), 2, 3)}));
}

TEST_CASE("classification anchors") {
  ProjectiveModel t = triangle();
  HypothesisFlags tk = classify_hypotheses(t, 1, Multiplier{make_generic_form(t, 2, 0)});
  CHECK(!tk.ev);
  CHECK(tk.tk);
  CHECK(tk.kv);

  // apex coefficient one, twist zero, but a doubled divisor: wrong degree for tk
  ProjectiveModel c = cone(rat(1));
  HypothesisFlags ev = classify_hypotheses(c, 0, Multiplier{InvariantDivisor{{0, 0, 0, 2}}});
  CHECK(ev.ev);
  CHECK(!ev.tk);
  CHECK(!ev.kv);
}

TEST_CASE("tk multiplication through the apex is injective everywhere") {
  MultiplicationChecker checker(cone(rat(1, 2)));
  auto v = checker.verdict(0, Multiplier{InvariantDivisor{{0, 0, 0, 1}}}, 0, 2);
  check_q(v, 0, 1, 4, true);
  check_q(v, 1, 0, 0, true);
  check_q(v, 2, 0, 0, true);

  // reuse of the checker gives the same answers
  auto again = checker.verdict(0, Multiplier{InvariantDivisor{{0, 0, 0, 1}}}, 0, 2);
  CHECK(again.size() == v.size());
  for (const auto& [q, qv] : v) {
    CHECK(again.at(q).source_dim == qv.source_dim);
    CHECK(again.at(q).target_dim == qv.target_dim);
    CHECK(again.at(q).injective == qv.injective);
  }
}

TEST_CASE("three seeds agree on generic verdicts") {
  ProjectiveModel t = triangle();
  auto v = multiplication_verdict_generic(t, 0, 1, 0, 0, 1);
  check_q(v, 1, 1, 0, false);
  // a different base seed reaches the same verdicts
  auto w = multiplication_verdict_generic(t, 0, 1, 99, 0, 1);
  check_q(w, 0, 1, 3, true);
  check_q(w, 1, 1, 0, false);
}

TEST_CASE("generic multiplication out of the top degree of the cone") {
  MultiplicationChecker checker(cone(rat(0)));
  auto v = checker.generic_verdict(-1, 1, 0, 0, 2);
  check_q(v, 0, 0, 1, true);
  check_q(v, 2, 1, 0, false);  // H^2(O(-1)) cannot land in H^2(O(0)) = 0
}

TEST_CASE("vanishing above the log canonical degree") {
  VanishingReport t = check_vanishing(triangle(), -2, 4);
  CHECK(t.ell == 0);
  CHECK(t.all_pass);
  REQUIRE(t.rows.size() == 4);  // d = 1..4, q = 1
  for (const auto& row : t.rows) {
    CHECK(row.d > 0);
    CHECK(row.q == 1);
    CHECK(row.dim == 0);
    CHECK(row.pass);
  }

  VanishingReport c = check_vanishing(cone(rat(1, 2)), 0, 2);
  CHECK(c.ell == rat(-1, 2));
  CHECK(c.all_pass);
  CHECK(c.rows.size() == 6);  // d = 0,1,2 and q = 1,2

  VanishingReport c0 = check_vanishing(cone(rat(0)), -1, 1);
  CHECK(c0.ell == -1);
  CHECK(c0.rows.size() == 4);  // d = 0,1 only: -1 is not above ell
  CHECK(c0.all_pass);
}

TEST_CASE("hypotheses imply injectivity on random models") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    GncModel m = generate_random_model(seed, 5, 3, 4);
    MultiplicationChecker checker(make_projective(m));
    int q_hi = checker.model().dim();
    if (q_hi < 0) continue;
    for (int d = -1; d <= 1; ++d) {
      auto v = checker.generic_verdict(d, 1, seed, 0, q_hi);
      HypothesisFlags g =
          classify_hypotheses(checker.model(), d,
                              Multiplier{make_generic_form(checker.model(), 1, seed)});
      if (g.tk)
        for (const auto& [q, qv] : v) CHECK(qv.injective);
    }
  }
}
