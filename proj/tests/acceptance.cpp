// Acceptance checks. `acceptance N` runs criterion N, `acceptance` runs all.
// Each criterion prints one line "criterion N: PASS|FAIL <detail>".

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <skein/bracket.hpp>
#include <skein/catalog.hpp>
#include <skein/cocycle.hpp>
#include <skein/homotopy.hpp>

#include "brute.hpp"

using namespace skein;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << "s";
  return o.str();
}

const Catalog& catalog() { return Catalog::standard(); }

LaurentPoly from_oracle(const oracle::Poly& p) {
  std::vector<LaurentPoly::Term> t;
  for (auto [e, c] : p) t.emplace_back(e, c);
  return LaurentPoly::from_terms(t);
}

Outcome example_values() {
  const auto t0 = Clock::now();
  struct Case {
    const char* scenario;
    const char* entry;
    int crossing;
    int ind;
    const char* expected;
  };
  const Case cases[] = {
      {"trefoil_unknotting", "3_1", 0, -1, "A^-6 + A^-4 + A^4"},
      {"trefoil_mirror_unknotting", "3_1!", 0, 1, "-A^14 - A^22 - A^24"},
      {"fig8_unknotting_pos", "4_1", 0, 1, "A^-7 + A^-5 + A + A^3 - A^7"},
      {"fig8_unknotting_neg", "4_1", 2, -1, "A^-7 - A^-3 - A^-1 - A^5 - A^7"},
  };
  Outcome o;
  int ok = 0;
  for (const auto& c : cases) {
    const auto want = parse_laurent(c.expected);
    const auto via_path = cross_of_path(catalog().scenario(c.scenario)).value;
    const auto direct = unknotting_invariant(catalog().get(c.entry).diagram, c.crossing, c.ind);
    if (via_path == want && direct == want) {
      ++ok;
    } else {
      o.pass = false;
      o.detail += std::string(c.scenario) + " gave " + format(via_path) + "; ";
    }
  }
  const double s = seconds_since(t0);
  if (s >= 1.0) o.pass = false;
  o.detail += std::to_string(ok) + "/4 exact, " + fmt_seconds(s);
  return o;
}

Outcome loop_value() {
  const auto t0 = Clock::now();
  const auto loop = catalog().scenario("loop_41_63");
  const auto r = cross_of_loop(loop);
  LaurentPoly factor;
  for (int k : {1, 3, 5}) factor += LaurentPoly::monomial(k) + LaurentPoly::monomial(-k);
  const auto expected =
      factor * (kauffman_bracket(catalog().get("6_3").diagram) - kauffman_bracket(catalog().get("4_1").diagram));
  const double s = seconds_since(t0);
  Outcome o;
  o.pass = r.value == expected && s < 5.0;
  o.detail = "Cross = " + (r.value.is_zero() ? std::string("0") : format(r.value)) + " over " +
             std::to_string(r.contributions.size()) + " walls, expected " + format(expected) + ", " + fmt_seconds(s);
  return o;
}

Outcome calibration() {
  const auto coeffs = double_pair_coefficients(catalog().meridians().at("double_pair"));
  Outcome o;
  for (const auto& name : {"D1", "D2", "D3", "D4"}) {
    if (!coeffs.count(name)) {
      o.pass = false;
      o.detail += std::string(name) + " missing; ";
      continue;
    }
    const auto& c = coeffs.at(name);
    if (!substitute_bc(c, SkeinPoly::b(), -SkeinPoly::b()).is_zero()) {
      o.pass = false;
      o.detail += std::string(name) + " survives C=-B; ";
    }
  }
  for (const auto& name : {"D2", "D3"}) {
    if (coeffs.count(name) && coeffs.at(name).is_zero()) {
      o.pass = false;
      o.detail += std::string(name) + " vanishes for free B, C; ";
    }
  }
  if (o.pass) o.detail = "all coefficients vanish at C=-B; D2 = " + format(coeffs.at("D2"));
  return o;
}

Outcome meridians() {
  const auto rep = meridian_suite(catalog().meridians(), Specialization{}, catalog().resolver());
  Outcome o;
  std::map<std::string, const ScenarioResult*> by;
  for (const auto& s : rep.scenarios) by[s.name] = &s;
  for (const auto& name : {"tangency", "triple_point", "cusp"}) {
    if (!by.count(name) || !by[name]->passed) {
      o.pass = false;
      o.detail += std::string(name) + " failed; ";
    }
  }
  if (o.pass) {
    o.detail = std::to_string(by["tangency"]->data.at("pairs").size()) + " tangency pairs equal, " +
               std::to_string(by["triple_point"]->data.at("loops").size()) + " theta loops zero, cusp = " +
               by["cusp"]->data.at("specialized").get<std::string>();
  }
  return o;
}

Outcome suite(const std::function<SuiteReport()>& run, double limit) {
  const auto t0 = Clock::now();
  const auto rep = run();
  const double s = seconds_since(t0);
  Outcome o;
  o.pass = rep.passed() && s < limit;
  int failed = 0;
  for (const auto& sc : rep.scenarios) failed += sc.passed ? 0 : 1;
  o.detail = rep.name + ": " + std::to_string(rep.scenarios.size() - static_cast<std::size_t>(failed)) + "/" +
             std::to_string(rep.scenarios.size()) + " checks, " + fmt_seconds(s);
  for (const auto& sc : rep.scenarios) {
    if (!sc.messages.empty()) o.detail += "; " + sc.name + ": " + sc.messages.front();
  }
  return o;
}

// ------------------------------------------------------------------ homologous loop pairs

Path with_cancelling_r2(const Path& p, std::size_t at) {
  const auto trace = validate_path(p);
  const auto& d = trace.diagrams.at(at);
  for (const auto& e : applicable_events(d, true)) {
    if (!std::holds_alternative<R2Insert>(e)) continue;
    Path q = p;
    const auto pos = q.events.begin() + static_cast<std::ptrdiff_t>(at);
    q.events.insert(pos, {e, *inverse_event(d, e)});
    return q;
  }
  throw std::runtime_error("no R2 insertion available");
}

Path rotated(const Path& p, std::size_t k) {
  const auto trace = validate_path(p);
  Path q{trace.diagrams.at(k), {}};
  q.events.insert(q.events.end(), p.events.begin() + static_cast<std::ptrdiff_t>(k), p.events.end());
  q.events.insert(q.events.end(), p.events.begin(), p.events.begin() + static_cast<std::ptrdiff_t>(k));
  return q;
}

Path theta_arc(const nlohmann::json& tp, const std::string& name) {
  Path p{diagram_from_json(tp.at("start")), {}};
  std::size_t i = 0;
  for (const auto& je : tp.at("arcs").at(name)) p.events.push_back(event_from_json(je, i++));
  return p;
}

Outcome homologous_loops() {
  struct Pair {
    std::string name;
    Path first;
    Path second;
  };
  std::vector<Pair> pairs;
  const auto loop = catalog().scenario("loop_41_63");
  pairs.push_back({"loop_41_63 / cancelling R2 pair inserted", loop, with_cancelling_r2(loop, 7)});
  pairs.push_back({"loop_41_63 / cyclically shifted start", loop, rotated(loop, 20)});

  const auto& sum = catalog().get("4_1#6_3").diagram;
  pairs.push_back({"4_1#6_3 distant crossing changes commuted",
                   Path{sum, {CrossingChange{0}, CrossingChange{9}, CrossingChange{0}, CrossingChange{9}}},
                   Path{sum, {CrossingChange{9}, CrossingChange{0}, CrossingChange{0}, CrossingChange{9}}}});
  const auto& fig8 = catalog().get("4_1").diagram;
  pairs.push_back({"4_1 crossing change order swapped",
                   Path{fig8, {CrossingChange{0}, CrossingChange{2}, CrossingChange{2}, CrossingChange{0}}},
                   Path{fig8, {CrossingChange{2}, CrossingChange{0}, CrossingChange{0}, CrossingChange{2}}}});

  const auto& tp = catalog().meridians().at("triple_point");
  const auto m1 = theta_arc(tp, "m1"), m2 = theta_arc(tp, "m2"), m3 = theta_arc(tp, "m3");
  pairs.push_back({"theta m1-m3 / (m1-m2)(m2-m3)", concatenate(m1, reverse_path(m3)),
                   concatenate(concatenate(m1, reverse_path(m2)), concatenate(m2, reverse_path(m3)))});
  pairs.push_back({"theta m1-m2 / m1-m2 with cancelling R2 pair", concatenate(m1, reverse_path(m2)),
                   with_cancelling_r2(concatenate(m1, reverse_path(m2)), 2)});

  Outcome o;
  int equal = 0;
  for (const auto& p : pairs) {
    try {
      const auto a = cross_of_loop(p.first).value;
      const auto b = cross_of_loop(p.second).value;
      if (a == b) {
        ++equal;
      } else {
        o.pass = false;
        o.detail += p.name + ": " + format(a) + " vs " + format(b) + "; ";
      }
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail += p.name + ": " + e.what() + "; ";
    }
  }
  if (equal < 5) o.pass = false;
  o.detail += std::to_string(equal) + "/" + std::to_string(pairs.size()) + " loop pairs agree";
  return o;
}

Outcome jones_vs_oracle() {
  Outcome o;
  int n = 0;
  for (const auto& name : catalog().names()) {
    const auto& d = catalog().get(name).diagram;
    ++n;
    if (jones(d) != from_oracle(oracle::jones(d))) {
      o.pass = false;
      o.detail += name + " differs; ";
    }
  }
  o.detail += std::to_string(n) + " catalog entries checked";
  return o;
}

Outcome performance() {
  const auto& c = catalog();
  const auto d = connected_sum(c.get("4_1#6_3").diagram, c.get("6_3").diagram);
  auto t0 = Clock::now();
  const auto naive = kauffman_bracket(d, EvalOptions{EvalMethod::naive, 1});
  const double tn = seconds_since(t0);
  double tc = 1e9;
  LaurentPoly fast;
  for (int i = 0; i < 5; ++i) {
    t0 = Clock::now();
    fast = kauffman_bracket(d, EvalOptions{EvalMethod::contraction, 1});
    tc = std::min(tc, seconds_since(t0));
  }
  const double ratio = tn / tc;
  Outcome o;
  o.pass = d.size() == 16 && naive == fast && tn < 30.0 && ratio >= 10.0;
  std::ostringstream s;
  s.precision(3);
  s << d.size() << " crossings, naive " << tn << "s, contraction " << tc << "s, speedup " << ratio << "x, "
    << (naive == fast ? "values agree" : "VALUES DIFFER");
  o.detail = s.str();
  return o;
}

Outcome run_criterion(int n) {
  switch (n) {
    case 1: return example_values();
    case 2: return loop_value();
    case 3: return calibration();
    case 4: return meridians();
    case 5: return suite([] { return oracle_suite(20240501, 200, 9); }, 60.0);
    case 6: return suite([] { return move_suite(20240502, 200, 9); }, 1e9);
    case 7: return suite([] { return framing_suite(20240503, 100, 9); }, 1e9);
    case 8: return homologous_loops();
    case 9: return jones_vs_oracle();
    case 10: return performance();
    default: return {false, "no such criterion"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  } else {
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  }
  bool all = true;
  for (int n : which) {
    Outcome o;
    try {
      o = run_criterion(n);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
