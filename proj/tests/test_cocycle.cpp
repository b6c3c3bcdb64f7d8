#include <doctest.h>

#include <random>

#include <skein/bracket.hpp>
#include <skein/catalog.hpp>
#include <skein/cocycle.hpp>
#include <skein/errors.hpp>

using namespace skein;

namespace {

const Catalog& catalog() { return Catalog::standard(); }
const LongDiagram& cat(const std::string& name) { return catalog().get(name).diagram; }
const LaurentPoly kAm = LaurentPoly::a() - LaurentPoly::monomial(-1);

}  // namespace

TEST_CASE("single crossing changes") {
  CHECK(unknotting_invariant(cat("3_1"), 0, -1) == parse_laurent("A^-6 + A^-4 + A^4"));
  CHECK(unknotting_invariant(cat("3_1!"), 0, 1) == parse_laurent("-A^14 - A^22 - A^24"));
  CHECK(unknotting_invariant(cat("4_1"), 0, 1) == parse_laurent("A^-7 + A^-5 + A + A^3 - A^7"));
  CHECK(unknotting_invariant(cat("4_1"), 2, -1) == parse_laurent("A^-7 - A^-3 - A^-1 - A^5 - A^7"));
  CHECK_THROWS_AS(unknotting_invariant(cat("3_1"), 0, 1), IndMismatch);

  std::vector<std::string> warnings;
  unknotting_invariant(cat("6_3"), 2, -crossing_sign(cat("6_3"), 2), &warnings);
  CHECK(warnings.size() == 1);
}

TEST_CASE("scenarios reproduce the single-change values") {
  CHECK(cross_of_path(catalog().scenario("trefoil_unknotting")).value == parse_laurent("A^-6 + A^-4 + A^4"));
  CHECK(cross_of_path(catalog().scenario("trefoil_mirror_unknotting")).value ==
        parse_laurent("-A^14 - A^22 - A^24"));
  CHECK(cross_of_path(catalog().scenario("fig8_unknotting_pos")).value ==
        parse_laurent("A^-7 + A^-5 + A + A^3 - A^7"));
  CHECK(cross_of_path(catalog().scenario("fig8_unknotting_neg")).value ==
        parse_laurent("A^-7 - A^-3 - A^-1 - A^5 - A^7"));
  CHECK(cross_of_path(catalog().scenario("empty_path")).value.is_zero());
}

TEST_CASE("report contents") {
  const auto r = cross_of_path(catalog().scenario("trefoil_unknotting"));
  REQUIRE(r.contributions.size() == 1);
  CHECK(r.ind_sum == -1);
  CHECK(r.framing_ok);
  CHECK(r.start_framing == FramingData{3, 1});
  CHECK(r.end_framing == FramingData{1, 1});
  CHECK(r.certified);
  CHECK_FALSE(r.loop);
  const auto j = to_json(r, true);
  CHECK(j.at("contributions").size() == 1);
  CHECK(j.at("value") == "A^-6 + A^-4 + A^4");
}

TEST_CASE("loops") {
  const auto& d = cat("4_1");
  const auto r = cross_of_loop(Path{d, {CrossingChange{1}, CrossingChange{1}}});
  CHECK(r.value.is_zero());
  CHECK(r.loop);
  CHECK(r.ind_sum == 0);
  CHECK_THROWS_AS(cross_of_loop(catalog().scenario("trefoil_unknotting")), NotALoop);

  // pure R2/R3 loop
  Path p{d, {}};
  for (const auto& e : applicable_events(d, true)) {
    if (std::holds_alternative<R2Insert>(e)) {
      p.events.push_back(e);
      p.events.push_back(*inverse_event(d, e));
      break;
    }
  }
  CHECK(cross_of_loop(p).value.is_zero());
  CHECK(cross_of_loop(p).contributions.empty());
}

TEST_CASE("generic values") {
  const auto kink = cat("kink+");
  const auto g = generic_cross(Path{kink, {CrossingChange{0}}});
  CHECK(g == SkeinPoly(-1) * (SkeinPoly::b() * SkeinPoly(LaurentPoly::delta()) + SkeinPoly::c()));
  for (const auto& name : catalog().scenario_names()) {
    const auto p = catalog().scenario(name);
    CHECK(eval_bc(generic_cross(p), 1, -1) == cross_of_path(p).value);
  }
}

TEST_CASE("wall values match the resolution difference") {
  for (const auto& name : {"3_1", "4_1", "6_3"}) {
    const auto& d = cat(name);
    for (int c = 0; c < d.size(); ++c) {
      CHECK(singular_bracket_eval(make_singular(d, c)) == LaurentPoly(kOracleSign) * wall_oracle(d, c));
    }
  }
}

TEST_CASE("property: additivity, reversal and telescoping") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    auto d = random_diagram(rng, 7);
    if (d.size() == 0) continue;
    const auto p = random_path(d, rng, 6, true, 9);
    const auto q = random_path(end_diagram(p), rng, 6, true, 9);
    const auto vp = cross_of_path(p).value;
    const auto vq = cross_of_path(q).value;
    CHECK(cross_of_path(concatenate(p, q)).value == vp + vq);
    CHECK(cross_of_path(reverse_path(p)).value == -vp);
    // each wall contributes (<after> - <before>) / (A - A^-1) with the
    // calibrated sign, so the sum only sees the end points
    CHECK(vp * kAm == kauffman_bracket(end_diagram(p)) - kauffman_bracket(p.start));
  }
}

TEST_CASE("meridian suite") {
  const auto rep = meridian_suite(catalog().meridians(), Specialization{}, catalog().resolver());
  CHECK(rep.passed());
  REQUIRE(rep.scenarios.size() == 4);

  const auto coeffs = double_pair_coefficients(catalog().meridians().at("double_pair"));
  CHECK(coeffs.at("D1").is_zero());
  CHECK(coeffs.at("D4").is_zero());
  CHECK(coeffs.at("D2") == parse_skein("-A^-1*B - A^-1*C + A*C + A*B"));
  CHECK(coeffs.at("D3") == -coeffs.at("D2"));

  Specialization same{SkeinPoly::b(), SkeinPoly::b(), "C=B"};
  const auto bad = meridian_suite(catalog().meridians(), same, catalog().resolver());
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.scenarios[0].passed);
  CHECK(bad.scenarios[1].passed);

  auto broken = catalog().meridians();
  broken.erase("cusp");
  CHECK_FALSE(meridian_suite(broken, Specialization{}, catalog().resolver()).passed());
}

TEST_CASE("randomized suites pass") {
  CHECK(move_suite(3, 30).passed());
  CHECK(oracle_suite(3, 30).passed());
  CHECK(framing_suite(3, 30).passed());
}
