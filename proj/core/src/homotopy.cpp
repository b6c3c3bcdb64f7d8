#include "skein/homotopy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "raw_diagram.hpp"
#include "skein/bracket.hpp"
#include "skein/errors.hpp"

namespace skein {

using detail::finalize;
using detail::RawDiagram;
using detail::RawVertex;
using detail::to_raw;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void inapplicable(const std::string& what) { throw InapplicableMove(what); }

int slot_of(const Vertex& v, int edge) {
  for (int s = 0; s < 4; ++s) {
    if (v.ends[static_cast<std::size_t>(s)] == edge) return s;
  }
  return -1;
}

const Face& face_at(const std::vector<Face>& fs, int face) {
  if (face < 0 || face >= static_cast<int>(fs.size())) inapplicable("face " + std::to_string(face) + " does not exist");
  return fs[static_cast<std::size_t>(face)];
}

LongDiagram checked(const RawDiagram& raw, const char* move) {
  auto out = finalize(raw);
  auto r = validate(out);
  if (!r) inapplicable(std::string(move) + " produced an invalid diagram (" + r.invariant + ")");
  return out;
}

void replace_in_order(std::vector<int>& order, int edge, std::initializer_list<int> with) {
  auto it = std::find(order.begin(), order.end(), edge);
  it = order.erase(it);
  order.insert(it, with);
}

// ------------------------------------------------------------------ R2

LongDiagram apply_r2_insert(const LongDiagram& d, const R2Insert& e) {
  if (e.finger < 0 || e.finger > d.last_edge() || e.target < 0 || e.target > d.last_edge()) {
    inapplicable("edge out of range");
  }
  if (e.side != 1 && e.side != -1) inapplicable("side must be +1 or -1");
  const auto fs = faces(d);
  const int f = face_beside(d, fs, e.finger, e.side);
  const auto& face = fs[static_cast<std::size_t>(f)];
  int hits = 0;
  bool target_forward = true;
  for (const auto& st : face.steps) {
    if (st.edge == e.target) {
      ++hits;
      target_forward = st.forward;
    }
  }
  if (hits != 1) inapplicable("target edge does not bound the face beside the finger exactly once");

  auto raw = to_raw(d);
  const int e1 = e.finger;
  const int e1m = raw.next_id();
  const int e1c = e1m + 1;
  const int e2m = e1m + 2;
  const int e2c = e1m + 3;
  int e2 = e.target;
  const auto h2 = detail::head_of(d, e2);
  if (e1 == e2) {
    // Finger from the earlier part of the edge across its later part; e1c
    // is the stretch between the two.
    e2 = e1c;
    replace_in_order(raw.order, e1, {e1, e1m, e1c, e2m, e2c});
  } else {
    const auto h1 = detail::head_of(d, e1);
    if (h1.vertex >= 0) raw.vertices[static_cast<std::size_t>(h1.vertex)].ends[static_cast<std::size_t>(h1.slot)] = e1c;
    replace_in_order(raw.order, e1, {e1, e1m, e1c});
    replace_in_order(raw.order, e2, {e2, e2m, e2c});
  }
  if (h2.vertex >= 0) raw.vertices[static_cast<std::size_t>(h2.vertex)].ends[static_cast<std::size_t>(h2.slot)] = e2c;

  const int e2_left = target_forward ? e2 : e2c;
  const int e2_right = target_forward ? e2c : e2;
  const bool finger_forward = e.side > 0;
  const int leg_y = finger_forward ? e1 : e1c;
  const int leg_x = finger_forward ? e1c : e1;
  const int over = e.finger_over ? 1 : 0;
  raw.vertices.push_back({VertexKind::crossing, {e2m, e1m, e2_left, leg_x}, over});
  raw.vertices.push_back({VertexKind::crossing, {e2_right, e1m, e2m, leg_y}, over});
  return checked(raw, "R2 insertion");
}

// Returns an empty string when the face is a removable bigon.
std::string r2_remove_problem(const LongDiagram& d, const Face& face) {
  if (face.steps.size() != 2) return "face is not a bigon";
  const int v0 = face.corners[0];
  const int v1 = face.corners[1];
  if (v0 < 0 || v1 < 0) return "bigon touches the open ends";
  if (v0 == v1) return "bigon corners coincide";
  const auto& x = d.vertices()[static_cast<std::size_t>(v0)];
  const auto& y = d.vertices()[static_cast<std::size_t>(v1)];
  if (!x.is_crossing() || !y.is_crossing()) return "bigon corner is a double point";
  const int a = face.steps[0].edge;
  // Slots 1 and 3 carry the over strand.
  const bool a_over_x = slot_of(x, a) % 2 == 1;
  const bool a_over_y = slot_of(y, a) % 2 == 1;
  if (a_over_x != a_over_y) return "bigon strands alternate over and under";
  return {};
}

LongDiagram apply_r2_remove(const LongDiagram& d, const R2Remove& e) {
  const auto fs = faces(d);
  const auto& face = face_at(fs, e.face);
  if (auto why = r2_remove_problem(d, face); !why.empty()) inapplicable(why);
  const int v0 = face.corners[0];
  const int v1 = face.corners[1];

  std::vector<int> parent(static_cast<std::size_t>(d.edge_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  };
  for (int v : {v0, v1}) {
    const auto& vx = d.vertices()[static_cast<std::size_t>(v)];
    unite(vx.ends[0], vx.ends[2]);
    unite(vx.ends[1], vx.ends[3]);
  }
  RawDiagram raw;
  for (int v = 0; v < d.size(); ++v) {
    if (v == v0 || v == v1) continue;
    const auto& vx = d.vertices()[static_cast<std::size_t>(v)];
    RawVertex rv{vx.kind, vx.ends, 1};
    for (auto& end : rv.ends) end = find(end);
    raw.vertices.push_back(rv);
  }
  for (int edge = 0; edge < d.edge_count(); ++edge) {
    const int r = find(edge);
    if (raw.order.empty() || raw.order.back() != r) raw.order.push_back(r);
  }
  return checked(raw, "R2 removal");
}

// ------------------------------------------------------------------ R3

struct Triangle {
  std::array<int, 3> corner{};
  std::array<int, 3> arrive{};  // slot of the arriving side at each corner
  std::array<int, 3> side{};    // side i arrives at corner i
};

std::string r3_problem(const LongDiagram& d, const Face& face, Triangle& tri, int edge) {
  if (face.steps.size() != 3) return "face is not a triangle";
  for (int i = 0; i < 3; ++i) {
    const int v = face.corners[static_cast<std::size_t>(i)];
    if (v < 0) return "triangle touches the open ends";
    if (!d.vertices()[static_cast<std::size_t>(v)].is_crossing()) return "triangle corner is a double point";
    tri.corner[static_cast<std::size_t>(i)] = v;
    tri.side[static_cast<std::size_t>(i)] = face.steps[static_cast<std::size_t>(i)].edge;
  }
  if (tri.corner[0] == tri.corner[1] || tri.corner[1] == tri.corner[2] || tri.corner[0] == tri.corner[2]) {
    return "triangle corners are not distinct";
  }
  // Line over-count: 2 = top, 1 = middle, 0 = bottom.
  std::map<int, int> over_count;
  for (int i = 0; i < 3; ++i) {
    const auto& vx = d.vertices()[static_cast<std::size_t>(tri.corner[static_cast<std::size_t>(i)])];
    const int a = slot_of(vx, tri.side[static_cast<std::size_t>(i)]);
    const int next_side = tri.side[static_cast<std::size_t>((i + 1) % 3)];
    if (a < 0 || vx.ends[static_cast<std::size_t>((a + 1) & 3)] != next_side) return "triangle sides are not adjacent";
    tri.arrive[static_cast<std::size_t>(i)] = a;
    const int over_side = a % 2 == 1 ? tri.side[static_cast<std::size_t>(i)] : next_side;
    ++over_count[over_side];
  }
  std::vector<int> counts;
  for (int s : tri.side) counts.push_back(over_count[s]);
  std::sort(counts.begin(), counts.end());
  if (counts != std::vector<int>{0, 1, 2}) return "triangle strands pass over each other cyclically";
  if (std::find(tri.side.begin(), tri.side.end(), edge) == tri.side.end()) return "edge is not a side of the triangle";
  if (over_count[edge] == 1) return "edge strand lies between the other two";
  return {};
}

LongDiagram apply_r3(const LongDiagram& d, const R3& e) {
  const auto fs = faces(d);
  const auto& face = face_at(fs, e.face);
  Triangle tri;
  if (auto why = r3_problem(d, face, tri, e.edge); !why.empty()) inapplicable(why);

  // External ends counterclockwise around the triangle: corners in reverse
  // walk order, each giving the slots after its two sides.
  std::array<int, 6> ext{};
  std::array<int, 6> line{};  // triangle side on the same line
  const std::array<int, 3> ccw = {0, 2, 1};
  for (int k = 0; k < 3; ++k) {
    const int i = ccw[static_cast<std::size_t>(k)];
    const auto& vx = d.vertices()[static_cast<std::size_t>(tri.corner[static_cast<std::size_t>(i)])];
    const int a = tri.arrive[static_cast<std::size_t>(i)];
    for (int r = 0; r < 2; ++r) {
      const int slot = (a + 2 + r) & 3;
      ext[static_cast<std::size_t>(2 * k + r)] = vx.ends[static_cast<std::size_t>(slot)];
      line[static_cast<std::size_t>(2 * k + r)] = vx.ends[static_cast<std::size_t>((slot + 2) & 3)];
    }
  }
  auto over_line = [&](int s1, int s2) {
    for (int i = 0; i < 3; ++i) {
      const int a = tri.side[static_cast<std::size_t>(i)];
      const int b = tri.side[static_cast<std::size_t>((i + 1) % 3)];
      if ((a == s1 && b == s2) || (a == s2 && b == s1)) {
        return tri.arrive[static_cast<std::size_t>(i)] % 2 == 1 ? a : b;
      }
    }
    inapplicable("triangle lines do not meet");
  };

  auto raw = to_raw(d);
  std::vector<RawVertex> kept;
  for (int v = 0; v < d.size(); ++v) {
    if (std::find(tri.corner.begin(), tri.corner.end(), v) == tri.corner.end()) {
      kept.push_back(raw.vertices[static_cast<std::size_t>(v)]);
    }
  }
  for (int k = 0; k < 3; ++k) {
    const auto a = static_cast<std::size_t>(2 * k + 1);
    const auto b = static_cast<std::size_t>((2 * k + 2) % 6);
    RawVertex nv{VertexKind::crossing, {ext[a], ext[b], line[a], line[b]}, 1};
    nv.over_pair = over_line(line[a], line[b]) == line[a] ? 0 : 1;
    kept.push_back(nv);
  }
  raw.vertices = std::move(kept);
  return checked(raw, "R3");
}

LongDiagram apply_crossing_change(const LongDiagram& d, const CrossingChange& e) {
  if (e.crossing < 0 || e.crossing >= d.size()) inapplicable("crossing " + std::to_string(e.crossing) + " does not exist");
  if (!d.vertices()[static_cast<std::size_t>(e.crossing)].is_crossing()) {
    inapplicable("vertex " + std::to_string(e.crossing) + " is a double point");
  }
  return change_crossing(d, e.crossing);
}

std::vector<R2Insert> r2_insert_candidates(const LongDiagram& d, const std::vector<Face>& fs) {
  std::vector<R2Insert> out;
  for (int e1 = 0; e1 <= d.last_edge(); ++e1) {
    for (int side : {1, -1}) {
      const auto& face = fs[static_cast<std::size_t>(face_beside(d, fs, e1, side))];
      std::map<int, int> seen;
      for (const auto& st : face.steps) ++seen[st.edge];
      for (const auto& [e2, count] : seen) {
        if (count != 1) continue;
        out.push_back({e1, e2, side, true});
        out.push_back({e1, e2, side, false});
      }
    }
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------ events

std::string describe(const MoveEvent& e) {
  return std::visit(overloaded{
                        [](const R2Insert& m) {
                          return "r2insert(finger=" + std::to_string(m.finger) + ", target=" + std::to_string(m.target) +
                                 ", side=" + std::to_string(m.side) + ", " + (m.finger_over ? "over" : "under") + ")";
                        },
                        [](const R2Remove& m) { return "r2remove(face=" + std::to_string(m.face) + ")"; },
                        [](const R3& m) {
                          return "r3(face=" + std::to_string(m.face) + ", edge=" + std::to_string(m.edge) + ")";
                        },
                        [](const CrossingChange& m) { return "cross(" + std::to_string(m.crossing) + ")"; },
                    },
                    e);
}

nlohmann::json to_json(const MoveEvent& e) {
  return std::visit(overloaded{
                        [](const R2Insert& m) -> nlohmann::json {
                          return {{"op", "r2insert"}, {"finger", m.finger}, {"target", m.target},
                                  {"side", m.side}, {"finger_over", m.finger_over}};
                        },
                        [](const R2Remove& m) -> nlohmann::json { return {{"op", "r2remove"}, {"face", m.face}}; },
                        [](const R3& m) -> nlohmann::json { return {{"op", "r3"}, {"face", m.face}, {"edge", m.edge}}; },
                        [](const CrossingChange& m) -> nlohmann::json {
                          return {{"op", "cross"}, {"crossing", m.crossing}};
                        },
                    },
                    e);
}

MoveEvent event_from_json(const nlohmann::json& j, std::size_t index) {
  const std::string where = "event " + std::to_string(index);
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string()) throw ValidationError(where + ": missing 'op'");
  auto field = [&](const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer()) {
      throw ValidationError(where + ": missing integer field '" + name + "'");
    }
    return j[name].get<int>();
  };
  const auto op = j["op"].get<std::string>();
  if (op == "r2insert") {
    R2Insert m{field("finger"), field("target"), field("side"), true};
    if (j.contains("finger_over")) {
      if (!j["finger_over"].is_boolean()) throw ValidationError(where + ": 'finger_over' must be a boolean");
      m.finger_over = j["finger_over"].get<bool>();
    }
    return m;
  }
  if (op == "r2remove") return R2Remove{field("face")};
  if (op == "r3") return R3{field("face"), field("edge")};
  if (op == "cross") return CrossingChange{field("crossing")};
  throw ValidationError(where + ": unknown op '" + op + "'");
}

LongDiagram apply_event(const LongDiagram& d, const MoveEvent& e) {
  return std::visit(overloaded{
                        [&](const R2Insert& m) { return apply_r2_insert(d, m); },
                        [&](const R2Remove& m) { return apply_r2_remove(d, m); },
                        [&](const R3& m) { return apply_r3(d, m); },
                        [&](const CrossingChange& m) { return apply_crossing_change(d, m); },
                    },
                    e);
}

std::vector<MoveEvent> applicable_events(const LongDiagram& d, bool include_r2_insert) {
  std::vector<MoveEvent> out;
  const auto fs = faces(d);
  for (int v = 0; v < d.size(); ++v) {
    if (d.vertices()[static_cast<std::size_t>(v)].is_crossing()) out.emplace_back(CrossingChange{v});
  }
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    const auto& face = fs[static_cast<std::size_t>(f)];
    if (r2_remove_problem(d, face).empty()) out.emplace_back(R2Remove{f});
    if (face.steps.size() == 3) {
      for (const auto& st : face.steps) {
        Triangle tri;
        if (r3_problem(d, face, tri, st.edge).empty()) out.emplace_back(R3{f, st.edge});
      }
    }
  }
  if (include_r2_insert) {
    for (const auto& m : r2_insert_candidates(d, fs)) out.emplace_back(m);
  }
  return out;
}

std::optional<MoveEvent> inverse_event(const LongDiagram& d, const MoveEvent& e) {
  const auto after = apply_event(d, e);
  if (std::holds_alternative<CrossingChange>(e)) return e;
  const auto target = canonical_form(d);
  const bool want_insert = std::holds_alternative<R2Remove>(e);
  const MoveEvent kind = want_insert ? MoveEvent(R2Insert{})
                         : std::holds_alternative<R2Insert>(e) ? MoveEvent(R2Remove{})
                                                               : MoveEvent(R3{});
  for (const auto& cand : applicable_events(after, want_insert)) {
    if (cand.index() != kind.index()) continue;
    try {
      if (canonical_form(apply_event(after, cand)) == target) return cand;
    } catch (const InapplicableMove&) {
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ paths

PathTrace validate_path(const Path& p) {
  PathTrace t;
  auto start = validate(p.start);
  if (!start) {
    t.ok = false;
    t.message = "start diagram invalid: " + start.invariant + ": " + start.message;
    return t;
  }
  if (p.start.double_point_count() > 0) {
    t.ok = false;
    t.message = "start diagram has double points";
    return t;
  }
  t.diagrams.push_back(p.start);
  t.framing.push_back(framing(p.start));
  for (std::size_t i = 0; i < p.events.size(); ++i) {
    const auto& before = t.diagrams.back();
    try {
      auto next = apply_event(before, p.events[i]);
      auto fr = framing(next);
      int expected = t.framing.back().writhe;
      if (const auto* cc = std::get_if<CrossingChange>(&p.events[i])) {
        expected -= 2 * crossing_sign(before, cc->crossing);
      }
      if (fr.writhe != expected || fr.whitney != t.framing.back().whitney) {
        throw InapplicableMove("framing bookkeeping violated");
      }
      t.diagrams.push_back(std::move(next));
      t.framing.push_back(fr);
    } catch (const Error& err) {
      t.ok = false;
      t.failed_at = static_cast<int>(i);
      t.message = describe(p.events[i]) + ": " + err.what();
      return t;
    }
  }
  return t;
}

LongDiagram end_diagram(const Path& p) {
  auto t = validate_path(p);
  if (!t.ok) throw InapplicableMove(t.failed_at >= 0 ? "event " + std::to_string(t.failed_at) + ": " + t.message : t.message);
  return t.diagrams.back();
}

std::vector<WallCrossing> wall_crossings(const Path& p) {
  auto t = validate_path(p);
  if (!t.ok) throw InapplicableMove(t.failed_at >= 0 ? "event " + std::to_string(t.failed_at) + ": " + t.message : t.message);
  std::vector<WallCrossing> out;
  for (std::size_t i = 0; i < p.events.size(); ++i) {
    if (const auto* cc = std::get_if<CrossingChange>(&p.events[i])) {
      const auto& before = t.diagrams[i];
      out.push_back({make_singular(before, cc->crossing), -crossing_sign(before, cc->crossing), static_cast<int>(i),
                     cc->crossing});
    }
  }
  return out;
}

Certificate essentialness_check(const LongDiagram& d, int c) {
  const auto singular = make_singular(d, c);
  const auto plus = resolve(singular, c, 1);
  const auto minus = resolve(singular, c, -1);
  Certificate cert;
  cert.jones_positive = jones(plus);
  cert.jones_negative = jones(minus);
  cert.framing_positive = framing(plus);
  cert.framing_negative = framing(minus);
  // The writhe of the two resolutions always differs by two, so it cannot
  // separate chambers; only knot invariants count.
  if (cert.jones_positive != cert.jones_negative) cert.differing.emplace_back("jones");
  if (cert.framing_positive.whitney != cert.framing_negative.whitney) cert.differing.emplace_back("whitney");
  cert.status = cert.differing.empty() ? Essentialness::inconclusive : Essentialness::essential;
  return cert;
}

bool is_loop(const Path& p) { return canonical_form(end_diagram(p)) == canonical_form(p.start); }

Path reverse_path(const Path& p) {
  auto t = validate_path(p);
  if (!t.ok) throw InapplicableMove(t.message);
  Path r{t.diagrams.back(), {}};
  for (std::size_t i = p.events.size(); i-- > 0;) {
    auto inv = inverse_event(t.diagrams[i], p.events[i]);
    if (!inv) throw InapplicableMove("no inverse found for " + describe(p.events[i]));
    r.events.push_back(*inv);
  }
  return r;
}

Path concatenate(const Path& first, const Path& second) {
  if (canonical_form(end_diagram(first)) != canonical_form(second.start)) {
    throw InapplicableMove("paths do not meet: end of the first differs from the start of the second");
  }
  Path out = first;
  out.events.insert(out.events.end(), second.events.begin(), second.events.end());
  return out;
}

Path path_from_json(const nlohmann::json& j, const DiagramResolver& resolve) {
  if (!j.is_object()) throw ValidationError("path script must be a JSON object");
  if (!j.contains("start")) throw ValidationError("path script: missing 'start'");
  Path p;
  const auto& s = j["start"];
  if (s.is_string()) {
    auto name = s.get<std::string>();
    if (!name.empty() && name[0] == '@') name.erase(0, 1);
    p.start = resolve(name);
  } else {
    p.start = diagram_from_json(s);
  }
  if (j.contains("events")) {
    if (!j["events"].is_array()) throw ValidationError("path script: 'events' must be an array");
    std::size_t i = 0;
    for (const auto& je : j["events"]) p.events.push_back(event_from_json(je, i++));
  }
  return p;
}

nlohmann::json to_json(const Path& p) {
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : p.events) ev.push_back(to_json(e));
  return {{"schema", 1}, {"start", to_json(p.start)}, {"events", ev}};
}

// ------------------------------------------------------------------ random walks

MoveEvent random_event(const LongDiagram& d, std::mt19937_64& rng, bool allow_crossing_changes, int max_crossings) {
  const auto fs = faces(d);
  std::vector<MoveEvent> removals;
  std::vector<MoveEvent> triangles;
  std::vector<MoveEvent> changes;
  for (const auto& e : applicable_events(d, false)) {
    if (std::holds_alternative<R2Remove>(e)) removals.push_back(e);
    if (std::holds_alternative<R3>(e)) triangles.push_back(e);
    if (std::holds_alternative<CrossingChange>(e) && allow_crossing_changes) changes.push_back(e);
  }
  std::vector<MoveEvent> inserts;
  if (d.crossing_count() + 2 <= max_crossings) {
    for (const auto& m : r2_insert_candidates(d, fs)) inserts.emplace_back(m);
  }
  std::vector<const std::vector<MoveEvent>*> kinds;
  for (const auto* k : {&inserts, &removals, &triangles, &changes}) {
    if (!k->empty()) kinds.push_back(k);
  }
  if (kinds.empty()) throw InapplicableMove("no applicable move");
  const auto& pick = *kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
  return pick[std::uniform_int_distribution<std::size_t>(0, pick.size() - 1)(rng)];
}

Path random_path(const LongDiagram& start, std::mt19937_64& rng, int steps, bool allow_crossing_changes,
                 int max_crossings) {
  Path p{start, {}};
  auto cur = start;
  for (int i = 0; i < steps; ++i) {
    MoveEvent e;
    try {
      e = random_event(cur, rng, allow_crossing_changes, max_crossings);
    } catch (const InapplicableMove&) {
      break;
    }
    cur = apply_event(cur, e);
    p.events.push_back(e);
  }
  return p;
}

LongDiagram random_diagram(std::mt19937_64& rng, int max_crossings) {
  std::uniform_int_distribution<int> coin(0, 1);
  LongDiagram d = insert_kink(LongDiagram(), 0, coin(rng) ? 1 : -1, coin(rng) ? 1 : -1);
  if (max_crossings >= 2 && coin(rng)) d = insert_kink(d, d.last_edge(), coin(rng) ? 1 : -1, coin(rng) ? 1 : -1);
  const int steps = 4 * std::max(max_crossings, 1);
  for (int i = 0; i < steps; ++i) {
    if (d.crossing_count() == 0) d = insert_kink(d, 0, coin(rng) ? 1 : -1, coin(rng) ? 1 : -1);
    d = apply_event(d, random_event(d, rng, true, max_crossings));
  }
  if (d.crossing_count() == 0) d = insert_kink(d, 0, coin(rng) ? 1 : -1, coin(rng) ? 1 : -1);
  return d;
}

}  // namespace skein
