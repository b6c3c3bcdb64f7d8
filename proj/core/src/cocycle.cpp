#include "skein/cocycle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "skein/errors.hpp"

namespace skein {

namespace {

std::string framing_text(const FramingData& f) {
  return "(w=" + std::to_string(f.writhe) + ", n=" + std::to_string(f.whitney) + ")";
}

nlohmann::json framing_json(const FramingData& f) { return {{"writhe", f.writhe}, {"whitney", f.whitney}}; }

}  // namespace

CrossReport cross_of_path(const Path& p, const EvalOptions& opts) {
  const auto trace = validate_path(p);
  if (!trace.ok) {
    throw InapplicableMove(trace.failed_at >= 0 ? "event " + std::to_string(trace.failed_at) + ": " + trace.message
                                                : trace.message);
  }
  CrossReport r;
  for (const auto& wall : wall_crossings(p)) {
    Contribution c{wall, LaurentPoly(wall.ind) * singular_bracket_eval(wall.singular, opts),
                   essentialness_check(trace.diagrams[static_cast<std::size_t>(wall.position)], wall.crossing)};
    r.ind_sum += wall.ind;
    r.value += c.value;
    if (c.certificate.status != Essentialness::essential) {
      r.certified = false;
      r.warnings.push_back("wall at event " + std::to_string(wall.position) +
                           " is inconclusive: both resolutions share jones polynomial and whitney index");
    }
    r.contributions.push_back(std::move(c));
  }
  r.start_framing = trace.framing.front();
  r.end_framing = trace.framing.back();
  r.framing_ok = r.end_framing.writhe == r.start_framing.writhe + 2 * r.ind_sum &&
                 r.end_framing.whitney == r.start_framing.whitney;
  r.loop = canonical_form(trace.diagrams.back()) == canonical_form(p.start);
  if (r.loop && r.ind_sum != 0) r.warnings.push_back("loop with nonzero intersection index");
  return r;
}

CrossReport cross_of_loop(const Path& p, const EvalOptions& opts) {
  auto r = cross_of_path(p, opts);
  if (!r.loop) throw NotALoop("path does not return to its start diagram");
  if (r.ind_sum != 0) throw NotALoop("loop has intersection index " + std::to_string(r.ind_sum));
  return r;
}

SkeinPoly generic_cross(const Path& p, const EvalOptions& opts) {
  SkeinPoly out;
  for (const auto& wall : wall_crossings(p)) out += SkeinPoly(wall.ind) * singular_bracket(wall.singular, opts);
  return out;
}

LaurentPoly wall_oracle(const LongDiagram& d, int c, const EvalOptions& opts) {
  const auto singular = make_singular(d, c);
  const auto diff = kauffman_bracket(resolve(singular, c, 1), opts) - kauffman_bracket(resolve(singular, c, -1), opts);
  return exact_div(diff, LaurentPoly::a() - LaurentPoly::monomial(-1));
}

LaurentPoly unknotting_invariant(const LongDiagram& d, int c, int target_ind, std::vector<std::string>* warnings) {
  if (target_ind != 1 && target_ind != -1) throw ValidationError("target ind must be +1 or -1");
  const int sign = crossing_sign(d, c);
  if (-sign != target_ind) {
    throw IndMismatch("crossing " + std::to_string(c) + " has sign " + std::to_string(sign) +
                      "; changing it gives ind " + std::to_string(-sign));
  }
  const auto value = LaurentPoly(target_ind) * singular_bracket_eval(make_singular(d, c));
  if (warnings != nullptr && jones(change_crossing(d, c)) != LaurentPoly(1)) {
    warnings->push_back("changing crossing " + std::to_string(c) + " does not give jones polynomial 1");
  }
  return value;
}

nlohmann::json to_json(const CrossReport& r, bool audit) {
  nlohmann::json j = {
      {"value", format(r.value)},
      {"terms", to_json(r.value)},
      {"ind_sum", r.ind_sum},
      {"walls", r.contributions.size()},
      {"framing", {{"start", framing_json(r.start_framing)}, {"end", framing_json(r.end_framing)}, {"ok", r.framing_ok}}},
      {"loop", r.loop},
      {"certified", r.certified},
      {"warnings", r.warnings},
  };
  if (audit) {
    nlohmann::json walls = nlohmann::json::array();
    for (const auto& c : r.contributions) {
      walls.push_back({
          {"event", c.wall.position},
          {"crossing", c.wall.crossing},
          {"ind", c.wall.ind},
          {"value", format(c.value)},
          {"certificate",
           {{"status", c.certificate.status == Essentialness::essential ? "essential" : "inconclusive"},
            {"differing", c.certificate.differing},
            {"jones_positive", format(c.certificate.jones_positive)},
            {"jones_negative", format(c.certificate.jones_negative)}}},
      });
    }
    j["contributions"] = walls;
  }
  return j;
}

// ------------------------------------------------------------------ suites

bool SuiteReport::passed() const {
  return std::all_of(scenarios.begin(), scenarios.end(), [](const ScenarioResult& s) { return s.passed; });
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json sc = nlohmann::json::array();
  for (const auto& s : r.scenarios) {
    sc.push_back({{"name", s.name}, {"passed", s.passed}, {"messages", s.messages}, {"data", s.data}});
  }
  return {{"suite", r.name}, {"passed", r.passed()}, {"scenarios", sc}};
}

namespace {

Matching matching_from_json(const nlohmann::json& j) {
  Matching m;
  for (const auto& pr : j) {
    int a = pr.at(0).get<int>();
    int b = pr.at(1).get<int>();
    if (a > b) std::swap(a, b);
    m.emplace_back(a, b);
  }
  std::sort(m.begin(), m.end());
  return m;
}

LongDiagram diagram_ref(const nlohmann::json& j, const DiagramResolver& resolve) {
  if (j.is_string()) {
    auto name = j.get<std::string>();
    if (!name.empty() && name[0] == '@') name.erase(0, 1);
    if (!resolve) throw ValidationError("no resolver for diagram reference '" + name + "'");
    return resolve(name);
  }
  return diagram_from_json(j);
}

void fail(ScenarioResult& r, std::string message) {
  r.passed = false;
  r.messages.push_back(std::move(message));
}

ScenarioResult run_double_pair(const nlohmann::json& sc, const Specialization& spec) {
  ScenarioResult r{"double_pair"};
  std::map<std::string, SkeinPoly> coeffs;
  try {
    coeffs = double_pair_coefficients(sc);
  } catch (const std::exception& e) {
    fail(r, e.what());
    return r;
  }
  for (const auto& [name, coef] : coeffs) {
    const auto special = substitute_bc(coef, spec.b, spec.c);
    r.data["coefficients"][name] = {{"generic", format(coef)}, {"specialized", format(special)}};
    if (!special.is_zero()) fail(r, "coefficient of <" + name + "> is " + format(special) + " at " + spec.label);
  }
  if (sc.contains("expected")) {
    for (const auto& [name, text] : sc["expected"].items()) {
      const auto want = parse_skein(text.get<std::string>());
      if (coeffs[name] != want) {
        fail(r, "coefficient of <" + name + "> is " + format(coeffs[name]) + ", expected " + format(want));
      }
    }
  }
  for (const auto& name : sc.value("calibration", std::vector<std::string>{})) {
    if (coeffs[name].is_zero()) fail(r, "coefficient of <" + name + "> vanishes for free B, C");
  }
  if (r.passed) r.messages.push_back("all four coefficients vanish at " + spec.label);
  return r;
}

ScenarioResult run_tangency(const nlohmann::json& sc, const Specialization& spec) {
  ScenarioResult r{"tangency"};
  r.data["pairs"] = nlohmann::json::array();
  for (const auto& pair : sc.at("pairs")) {
    const auto name = pair.value("name", std::string("pair"));
    try {
      const auto left = tangle_bracket(tangle_from_json(pair.at("left")));
      const auto right = tangle_bracket(tangle_from_json(pair.at("right")));
      std::set<Matching> keys;
      for (const auto& [m, v] : left) keys.insert(m);
      for (const auto& [m, v] : right) keys.insert(m);
      bool generic_equal = left == right;
      bool special_equal = true;
      for (const auto& m : keys) {
        auto l = left.count(m) ? left.at(m) : SkeinPoly();
        auto rt = right.count(m) ? right.at(m) : SkeinPoly();
        if (substitute_bc(l - rt, spec.b, spec.c) != SkeinPoly()) special_equal = false;
      }
      r.data["pairs"].push_back({{"name", name}, {"generic_equal", generic_equal}, {"specialized_equal", special_equal},
                                 {"left", to_json(left)}});
      if (!special_equal) fail(r, name + ": tangle brackets differ at " + spec.label);
    } catch (const std::exception& e) {
      fail(r, name + ": " + e.what());
    }
  }
  if (r.passed) r.messages.push_back(std::to_string(r.data["pairs"].size()) + " configurations agree");
  return r;
}

ScenarioResult run_triple_point(const nlohmann::json& sc, const Specialization& spec, const DiagramResolver& resolve) {
  ScenarioResult r{"triple_point"};
  try {
    const auto start = diagram_ref(sc.at("start"), resolve);
    std::map<std::string, Path> arcs;
    for (const auto& [name, events] : sc.at("arcs").items()) {
      Path p{start, {}};
      std::size_t i = 0;
      for (const auto& je : events) p.events.push_back(event_from_json(je, i++));
      arcs[name] = std::move(p);
    }
    std::map<std::string, SkeinPoly> values;
    std::map<std::string, LongDiagram> ends;
    for (const auto& [name, p] : arcs) {
      const auto trace = validate_path(p);
      if (!trace.ok) {
        fail(r, name + ": " + trace.message);
        continue;
      }
      ends[name] = canonical_form(trace.diagrams.back());
      values[name] = generic_cross(p);
      int r3_events = 0;
      for (const auto& e : p.events) r3_events += std::holds_alternative<R3>(e) ? 1 : 0;
      // Each wall must match the bracket difference of its resolutions.
      for (const auto& wall : wall_crossings(p)) {
        const auto& before = trace.diagrams[static_cast<std::size_t>(wall.position)];
        if (singular_bracket_eval(wall.singular) != LaurentPoly(kOracleSign) * wall_oracle(before, wall.crossing)) {
          fail(r, name + ": wall at event " + std::to_string(wall.position) + " disagrees with its resolutions");
        }
      }
      r.data["arcs"][name] = {{"cross", format(values[name])},
                              {"cross_at_1_-1", format(eval_bc(values[name], 1, -1))},
                              {"r3_events", r3_events}};
    }
    for (const auto& pair : sc.at("loops")) {
      const auto a = pair.at(0).get<std::string>();
      const auto b = pair.at(1).get<std::string>();
      const auto label = a + " u -" + b;
      if (!values.count(a) || !values.count(b)) {
        fail(r, label + ": arc missing");
        continue;
      }
      if (ends[a] != ends[b]) fail(r, label + ": arcs end at different diagrams");
      const auto v = substitute_bc(values[a] - values[b], spec.b, spec.c);
      r.data["loops"][label] = format(v);
      if (!v.is_zero()) fail(r, "Cross(" + label + ") = " + format(v) + " at " + spec.label);
    }
  } catch (const std::exception& e) {
    fail(r, e.what());
  }
  if (r.passed) r.messages.push_back("theta-graph loops have zero Cross");
  return r;
}

ScenarioResult run_cusp(const nlohmann::json& sc, const Specialization& spec, const DiagramResolver& resolve) {
  ScenarioResult r{"cusp"};
  try {
    const auto ambient = diagram_ref(sc.at("ambient"), resolve);
    const int edge = sc.value("edge", 0);
    const auto kinked = insert_kink(ambient, edge, sc.value("writhe", 1), sc.value("rotation", 1));
    // The new curl's loop edge is edge + 1.
    int kink = -1;
    for (int v = 0; v < kinked.size(); ++v) {
      const auto& ends = kinked.vertices()[static_cast<std::size_t>(v)].ends;
      if (std::count(ends.begin(), ends.end(), edge + 1) == 2) kink = v;
    }
    Path p{kinked, {CrossingChange{kink}}};
    const auto value = generic_cross(p);
    const int ind = -crossing_sign(kinked, kink);
    const auto expected = SkeinPoly(ind) *
                          (SkeinPoly::b() * SkeinPoly(LaurentPoly::delta()) + SkeinPoly::c()) *
                          SkeinPoly(kauffman_bracket(ambient));
    const auto special = substitute_bc(value, spec.b, spec.c);
    r.data = {{"generic", format(value)}, {"specialized", format(special)}, {"at_1_-1", format(eval_bc(value, 1, -1))},
              {"ambient_bracket", format(kauffman_bracket(ambient))}};
    if (value != expected) fail(r, "cusp meridian is not ind * (B*delta + C) * <ambient>");
    if (special.is_zero()) fail(r, "cusp meridian vanishes at " + spec.label);
    if (r.passed) r.messages.push_back("cusp meridian is a nonzero multiple of the ambient bracket");
  } catch (const std::exception& e) {
    fail(r, e.what());
  }
  return r;
}

}  // namespace

std::map<std::string, SkeinPoly> double_pair_coefficients(const nlohmann::json& sc) {
  std::map<Matching, std::string> names;
  std::map<std::string, SkeinPoly> out;
  for (const auto& [name, m] : sc.at("smoothings").items()) {
    names[matching_from_json(m)] = name;
    out[name] = SkeinPoly();
  }
  for (const auto& wall : sc.at("walls")) {
    const int ind = wall.at("ind").get<int>();
    const auto t = tangle_from_json(wall.at("tangle"));
    int doubles = 0;
    for (const auto& v : t.vertices) doubles += v.kind == VertexKind::double_point ? 1 : 0;
    if (doubles != 1) throw ValidationError("each wall of the double-point meridian needs exactly one double point");
    for (const auto& [m, v] : tangle_bracket(t)) {
      auto it = names.find(m);
      if (it == names.end()) throw ValidationError("wall produces a smoothing that is not one of the named diagrams");
      out[it->second] += SkeinPoly(ind) * v;
    }
  }
  return out;
}

SuiteReport meridian_suite(const nlohmann::json& fixture, const Specialization& spec, const DiagramResolver& resolve) {
  SuiteReport rep{"meridians", {}};
  auto section = [&](const char* key, auto run) {
    if (!fixture.contains(key)) {
      ScenarioResult r{key};
      fail(r, std::string("fixture has no '") + key + "' section");
      rep.scenarios.push_back(r);
      return;
    }
    rep.scenarios.push_back(run(fixture[key]));
  };
  section("double_pair", [&](const nlohmann::json& s) { return run_double_pair(s, spec); });
  section("tangency", [&](const nlohmann::json& s) { return run_tangency(s, spec); });
  section("triple_point", [&](const nlohmann::json& s) { return run_triple_point(s, spec, resolve); });
  section("cusp", [&](const nlohmann::json& s) { return run_cusp(s, spec, resolve); });
  return rep;
}

namespace {

LongDiagram with_crossing(LongDiagram d, std::mt19937_64& rng, int max_crossings) {
  while (d.crossing_count() == 0) d = random_diagram(rng, max_crossings);
  return d;
}

int random_crossing(const LongDiagram& d, std::mt19937_64& rng) {
  std::vector<int> ids;
  for (int v = 0; v < d.size(); ++v) {
    if (d.vertices()[static_cast<std::size_t>(v)].is_crossing()) ids.push_back(v);
  }
  return ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
}

}  // namespace

SuiteReport move_suite(std::uint64_t seed, int count, int max_crossings) {
  std::mt19937_64 rng(seed);
  ScenarioResult plain{"kauffman_bracket"};
  ScenarioResult singular{"singular_bracket"};
  std::map<std::string, int> kinds;
  for (int i = 0; i < count; ++i) {
    const auto d = with_crossing(random_diagram(rng, max_crossings), rng, max_crossings);
    const auto e = random_event(d, rng, false, max_crossings + 2);
    kinds[describe(e).substr(0, describe(e).find('('))]++;
    if (kauffman_bracket(apply_event(d, e)) != kauffman_bracket(d)) {
      fail(plain, "case " + std::to_string(i) + ": " + describe(e) + " changed the bracket of " + to_json(d).dump());
    }
    const auto s = make_singular(d, random_crossing(d, rng));
    const auto es = random_event(s, rng, false, max_crossings + 2);
    kinds[describe(es).substr(0, describe(es).find('('))]++;
    if (singular_bracket(apply_event(s, es)) != singular_bracket(s)) {
      fail(singular, "case " + std::to_string(i) + ": " + describe(es) + " changed the singular bracket of " +
                         to_json(s).dump());
    }
  }
  plain.data["moves"] = kinds;
  plain.messages.push_back(std::to_string(count) + " moves checked");
  singular.messages.push_back(std::to_string(count) + " moves checked");
  return {"moves", {plain, singular}};
}

SuiteReport oracle_suite(std::uint64_t seed, int count, int max_crossings) {
  std::mt19937_64 rng(seed);
  ScenarioResult r{"resolution_difference"};
  int walls = 0;
  for (int i = 0; i < count; ++i) {
    const auto d = random_diagram(rng, max_crossings);
    for (int c = 0; c < d.size(); ++c) {
      ++walls;
      try {
        const auto q = wall_oracle(d, c);
        if (singular_bracket_eval(make_singular(d, c)) != LaurentPoly(kOracleSign) * q) {
          fail(r, "case " + std::to_string(i) + " crossing " + std::to_string(c) + ": singular value differs from " +
                      format(q));
        }
      } catch (const NotDivisible& e) {
        fail(r, "case " + std::to_string(i) + " crossing " + std::to_string(c) + ": " + e.what());
      }
    }
  }
  r.data["walls"] = walls;
  r.messages.push_back(std::to_string(walls) + " walls on " + std::to_string(count) + " diagrams");
  return {"oracle", {r}};
}

SuiteReport framing_suite(std::uint64_t seed, int count, int max_crossings) {
  std::mt19937_64 rng(seed);
  ScenarioResult paths{"paths"};
  ScenarioResult loops{"loops"};
  for (int i = 0; i < count; ++i) {
    const auto start = with_crossing(random_diagram(rng, max_crossings), rng, max_crossings);
    const auto p = random_path(start, rng, 8, true, max_crossings);
    const auto t = validate_path(p);
    if (!t.ok) {
      fail(paths, "case " + std::to_string(i) + ": " + t.message);
      continue;
    }
    int ind = 0;
    for (const auto& w : wall_crossings(p)) ind += w.ind;
    const auto& f0 = t.framing.front();
    const auto& f1 = t.framing.back();
    if (f1.writhe != f0.writhe + 2 * ind || f1.whitney != f0.whitney) {
      fail(paths, "case " + std::to_string(i) + ": " + framing_text(f0) + " -> " + framing_text(f1) + " with ind sum " +
                      std::to_string(ind));
    }
    try {
      const auto loop = concatenate(p, reverse_path(p));
      const auto rep = cross_of_loop(loop);
      if (rep.ind_sum != 0 || !rep.framing_ok || rep.start_framing != rep.end_framing) {
        fail(loops, "case " + std::to_string(i) + ": loop bookkeeping failed");
      }
    } catch (const Error& e) {
      fail(loops, "case " + std::to_string(i) + ": " + e.what());
    }
  }
  paths.messages.push_back(std::to_string(count) + " random paths");
  loops.messages.push_back(std::to_string(count) + " there-and-back loops");
  return {"framing", {paths, loops}};
}

}  // namespace skein
