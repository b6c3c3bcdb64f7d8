// Regenerates the checked-in fixture directory.
//
//   skein-make-fixtures <fixture-dir>
//
// Diagrams come from Knot Atlas planar codes. Scenario event lists are found
// by search where they cannot be written down by hand (the R2/R3 paths of the
// 4_1#6_3 loop, the crossing ids on the theta graph).

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

#include <skein/bracket.hpp>
#include <skein/catalog.hpp>
#include <skein/cocycle.hpp>
#include <skein/diagram.hpp>
#include <skein/errors.hpp>
#include <skein/homotopy.hpp>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace skein;

namespace {

using Code = std::vector<std::array<int, 4>>;

const Code kTrefoilLeft = {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
const Code kFigureEight = {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};
const Code kSixThree = {{4, 2, 5, 1}, {8, 4, 9, 3}, {12, 9, 1, 10}, {10, 5, 11, 6}, {6, 11, 7, 12}, {2, 8, 3, 7}};

std::string code_text(const Code& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += "{" + std::to_string(c[i][0]) + "," + std::to_string(c[i][1]) + "," + std::to_string(c[i][2]) + "," +
         std::to_string(c[i][3]) + "}";
  }
  return s + "}";
}

void write(const fs::path& file, const json& j) {
  fs::create_directories(file.parent_path());
  std::ofstream out(file);
  out << j.dump(2) << "\n";
  std::cout << "wrote " << file.string() << "\n";
}

struct Entry {
  std::string name;
  LongDiagram d;
  std::vector<UnknottingCrossing> unknotting;
  std::string note;
  std::vector<std::string> sum;
};

json entry_json(const Entry& e) {
  json j = {{"schema", kFixtureSchema}, {"name", e.name}};
  if (e.sum.empty()) {
    j["diagram"] = to_json(e.d);
  } else {
    j["connected_sum"] = e.sum;
  }
  const auto f = framing(e.d);
  j["anchor"] = {{"writhe", f.writhe}, {"whitney", f.whitney}};
  json u = json::array();
  for (const auto& x : e.unknotting) u.push_back({{"crossing", x.crossing}, {"ind", x.ind}});
  j["unknotting"] = u;
  j["note"] = e.note;
  return j;
}

bool is_unknot(const LongDiagram& d) { return jones(d) == LaurentPoly(1); }

std::vector<UnknottingCrossing> unknotting_crossings(const LongDiagram& d) {
  std::vector<UnknottingCrossing> out;
  for (int c = 0; c < d.size(); ++c) {
    if (is_unknot(change_crossing(d, c))) out.push_back({c, -crossing_sign(d, c)});
  }
  return out;
}

std::string file_stem(const std::string& name) {
  std::string s;
  for (char ch : name) {
    if (ch == '!') s += "_mirror";
    else if (ch == '#') s += "_sum_";
    else if (ch == '+') s += "_pos";
    else if (ch == '-') s += "_neg";
    else s += ch;
  }
  return s;
}

// Best-first descent through R2 removals and R3 moves to the crossingless
// diagram. A few R2 insertions are allowed when the descent stalls.
std::vector<MoveEvent> simplify_path(const LongDiagram& start, int slack) {
  struct Node {
    LongDiagram d;
    std::vector<MoveEvent> events;
  };
  auto cmp = [](const Node& a, const Node& b) {
    if (a.d.size() != b.d.size()) return a.d.size() > b.d.size();
    return a.events.size() > b.events.size();
  };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);
  std::set<std::string> seen;
  open.push({start, {}});
  const int cap = start.size() + slack;
  std::size_t expanded = 0;
  while (!open.empty() && expanded < 200000) {
    Node n = open.top();
    open.pop();
    if (n.d.size() == 0) return n.events;
    const auto key = to_json(canonical_form(n.d)).dump();
    if (!seen.insert(key).second) continue;
    ++expanded;
    for (const auto& e : applicable_events(n.d, slack > 0)) {
      if (std::holds_alternative<CrossingChange>(e)) continue;
      if (std::holds_alternative<R2Insert>(e) && n.d.size() + 2 > cap) continue;
      auto next = apply_event(n.d, e);
      auto ev = n.events;
      ev.push_back(e);
      open.push({std::move(next), std::move(ev)});
    }
  }
  throw std::runtime_error("no simplifying path found");
}

json events_json(const std::vector<MoveEvent>& events) {
  json a = json::array();
  for (const auto& e : events) a.push_back(to_json(e));
  return a;
}

json scenario_json(const std::string& name, const std::string& description, const json& start,
                   const std::vector<MoveEvent>& events) {
  return {{"schema", kFixtureSchema}, {"name", name}, {"description", description}, {"start", start},
          {"events", events_json(events)}};
}

// ------------------------------------------------------------------ theta graph

// Incoming edge labels of the two strands through vertex v.
std::array<int, 2> visits(const Vertex& v) {
  return {std::min(v.ends[0], v.ends[2]), std::min(v.ends[1], v.ends[3])};
}

// Triangle vertices of an applicable R3 move.
std::vector<int> triangle_of(const LongDiagram& d, const R3& m) {
  const auto fs = faces(d);
  std::vector<int> out;
  for (int c : fs[static_cast<std::size_t>(m.face)].corners) {
    if (c >= 0) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Strand blocks of a triangle: each strand passes two of its corners on
// consecutive edges, so block = min(incoming label) along that strand.
std::map<std::pair<int, int>, int> crossings_by_strands(const LongDiagram& d, const std::vector<int>& tri) {
  std::vector<int> labels;
  for (int v : tri) {
    auto vs = visits(d.vertex(v));
    labels.insert(labels.end(), vs.begin(), vs.end());
  }
  std::sort(labels.begin(), labels.end());
  // labels come in consecutive pairs (l, l+1); block index = position / 2
  auto block = [&](int l) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()) / 2;
  };
  std::map<std::pair<int, int>, int> out;
  for (int v : tri) {
    auto vs = visits(d.vertex(v));
    int a = block(vs[0]), b = block(vs[1]);
    out[{std::min(a, b), std::max(a, b)}] = v;
  }
  return out;
}

// Height order of the blocks: the block passing over both others first.
std::vector<int> height_order(const LongDiagram& d, const std::vector<int>& tri,
                              const std::map<std::pair<int, int>, int>& by) {
  std::vector<int> labels;
  for (int v : tri) {
    auto vs = visits(d.vertex(v));
    labels.insert(labels.end(), vs.begin(), vs.end());
  }
  std::sort(labels.begin(), labels.end());
  auto block = [&](int l) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()) / 2;
  };
  std::map<int, int> overs = {{0, 0}, {1, 0}, {2, 0}};
  for (const auto& [pr, v] : by) {
    const auto& ver = d.vertex(v);
    ++overs[block(std::min(ver.ends[1], ver.ends[3]))];
  }
  std::vector<int> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return overs[a] > overs[b]; });
  return order;
}

std::optional<R3> find_r3(const LongDiagram& d) {
  for (const auto& e : applicable_events(d, false)) {
    if (auto r = std::get_if<R3>(&e)) return *r;
  }
  return std::nullopt;
}

json theta_section(const LongDiagram& trefoil, json& notes) {
  // Change one crossing so the central triangle admits a triangle move.
  int changed = -1;
  LongDiagram s;
  for (int c = 0; c < trefoil.size() && changed < 0; ++c) {
    auto t = change_crossing(trefoil, c);
    if (find_r3(t)) {
      changed = c;
      s = t;
    }
  }
  if (changed < 0) throw std::runtime_error("no crossing change exposes a triangle move");
  const auto r3 = *find_r3(s);
  const auto tri = triangle_of(s, r3);
  const auto by = crossings_by_strands(s, tri);
  const auto order = height_order(s, tri, by);
  // Strands named by height: top = 2, middle = 3, bottom = 1.
  std::map<int, int> strand_of_block = {{order[0], 2}, {order[1], 3}, {order[2], 1}};
  auto label = [&](std::pair<int, int> pr) {
    int a = strand_of_block[pr.first], b = strand_of_block[pr.second];
    return "c" + std::to_string(std::min(a, b)) + std::to_string(std::max(a, b));
  };

  // Each arc is a word in r3 / c12 / c13 / c23 applied from s.
  const std::map<std::string, std::vector<std::string>> words = {
      {"m1", {"r3", "c12", "c13", "c23"}},
      {"m2", {"c23", "r3", "c12", "c13"}},
      {"m3", {"c13", "c12", "c23", "r3"}},
  };
  json arcs = json::object();
  for (const auto& [name, word] : words) {
    LongDiagram d = s;
    std::vector<MoveEvent> events;
    for (const auto& step : word) {
      MoveEvent e;
      if (step == "r3") {
        auto m = find_r3(d);
        if (!m) throw std::runtime_error(name + ": triangle move not applicable");
        e = *m;
      } else {
        // The triangle corners keep their incoming edge labels.
        std::set<int> block_labels;
        for (int w : tri) {
          auto ws = visits(s.vertex(w));
          block_labels.insert(ws.begin(), ws.end());
        }
        std::vector<int> tri_now;
        for (int v = 0; v < d.size(); ++v) {
          auto vs = visits(d.vertex(v));
          if (block_labels.count(vs[0]) && block_labels.count(vs[1])) tri_now.push_back(v);
        }
        const auto now = crossings_by_strands(d, tri_now);
        int id = -1;
        for (const auto& [pr, v] : now) {
          if (label(pr) == step) id = v;
        }
        if (id < 0) throw std::runtime_error(name + ": crossing " + step + " not found");
        e = CrossingChange{id};
      }
      d = apply_event(d, e);
      events.push_back(e);
    }
    arcs[name] = events_json(events);
  }
  notes["theta"] = "3_1 with crossing " + std::to_string(changed) + " changed; heights 2 > 3 > 1";
  return {{"start", to_json(s)}, {"arcs", arcs}, {"loops", json::array({json::array({"m1", "m2"}), json::array({"m2", "m3"}), json::array({"m1", "m3"})})}};
}

// ------------------------------------------------------------------ tangles

json vtx(const char* kind, std::array<int, 4> ends, int pairing = -1) {
  json v = {{"kind", kind}, {"ends", ends}};
  if (pairing >= 0) v["oriented_pairing"] = pairing;
  return v;
}

json double_pair_section() {
  // Two transverse double points p (ends 0..3) and q (ends 4..7), each
  // joined straight to the boundary. The meridian crosses four walls.
  const std::array<int, 4> p_pos{0, 1, 2, 3}, p_neg{1, 2, 3, 0};
  const std::array<int, 4> q_pos{4, 5, 6, 7}, q_neg{5, 6, 7, 4};
  const json boundary = {0, 1, 2, 3, 4, 5, 6, 7};
  auto wall = [&](json a, json b, int ind) {
    return json{{"ind", ind}, {"tangle", {{"boundary", boundary}, {"vertices", {a, b}}}}};
  };
  json walls = {
      wall(vtx("double", p_pos, 0), vtx("crossing", q_neg), 1),
      wall(vtx("crossing", p_pos), vtx("double", q_pos, 0), 1),
      wall(vtx("double", p_pos, 0), vtx("crossing", q_pos), -1),
      wall(vtx("crossing", p_neg), vtx("double", q_pos, 0), -1),
  };
  return {{"walls", walls},
          {"smoothings",
           {{"D1", {{0, 1}, {2, 3}, {4, 5}, {6, 7}}},
            {"D2", {{0, 1}, {2, 3}, {4, 7}, {5, 6}}},
            {"D3", {{0, 3}, {1, 2}, {4, 5}, {6, 7}}},
            {"D4", {{0, 3}, {1, 2}, {4, 7}, {5, 6}}}}},
          {"expected",
           {{"D1", "0"},
            {"D2", "-A^-1*B - A^-1*C + A*C + A*B"},
            {"D3", "-A*C - A*B + A^-1*B + A^-1*C"},
            {"D4", "0"}}},
          {"calibration", {"D2", "D3"}}};
}

// Rotates a crossing's ends so they start at the given under edge.
std::array<int, 4> start_at(std::array<int, 4> e, int under) {
  while (e[0] != under) std::rotate(e.begin(), e.begin() + 1, e.end());
  return e;
}

json tangency_section() {
  json pairs = json::array();
  // Vertex flip: two strands meeting at a double point and at a crossing;
  // the crossing moves from one side of the double point to the other.
  // Edges: a1=1 a2=2 m1=3 m2=4 t1=5 t2=6.
  for (int over : {1, 2}) {
    for (int orient : {0, 1}) {
      const std::array<int, 4> v1{3, 4, 1, 2}, v2{6, 5, 4, 3};
      const int dp1 = orient == 0 ? 1 : 0;  // both strands up: pairing 1
      const int dp2 = orient == 0 ? 1 : 0;
      // The strand over at the left crossing arrives from the other side on
      // the right, so the right crossing has the other strand over.
      auto x1 = start_at(v1, over == 1 ? 3 : 4);
      auto x2 = start_at(v2, over == 1 ? 6 : 5);
      json left = {{"boundary", {1, 2, 6, 5}}, {"vertices", {vtx("double", v1, dp1), vtx("crossing", x2)}}};
      json right = {{"boundary", {1, 2, 6, 5}}, {"vertices", {vtx("crossing", x1), vtx("double", v2, dp2)}}};
      const std::string name = std::string("flip, strand ") + std::to_string(over) + " over first, " +
                               (orient == 0 ? "parallel" : "antiparallel");
      pairs.push_back({{"name", name}, {"left", left}, {"right", right}});
    }
  }
  // A third strand t slides across the double point of strands 1 and 2.
  // Edges: tin=1 tmid=2 tout=3 e1a=4 e1b=5 e1c=6 e2a=7 e2b=8 e2c=9.
  for (int t_over : {1, 0}) {
    for (int orient : {0, 1}) {
      const int dp = orient == 0 ? 1 : 0;
      std::array<int, 4> x1{5, 1, 4, 2}, x2{8, 2, 7, 3};
      std::array<int, 4> y1{6, 2, 5, 3}, y2{9, 1, 8, 2};
      if (!t_over) {
        x1 = start_at(x1, 1);
        x2 = start_at(x2, 2);
        y1 = start_at(y1, 2);
        y2 = start_at(y2, 1);
      }
      json boundary = {1, 4, 7, 3, 6, 9};
      json left = {{"boundary", boundary},
                   {"vertices", {vtx("crossing", x1), vtx("crossing", x2), vtx("double", {6, 9, 5, 8}, dp)}}};
      json right = {{"boundary", boundary},
                    {"vertices", {vtx("double", {5, 8, 4, 7}, dp), vtx("crossing", y1), vtx("crossing", y2)}}};
      const std::string name = std::string("slide, third strand ") + (t_over ? "over" : "under") + ", " +
                               (orient == 0 ? "parallel" : "antiparallel");
      pairs.push_back({{"name", name}, {"left", left}, {"right", right}});
    }
  }
  return {{"pairs", pairs}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: skein-make-fixtures <fixture-dir>\n";
    return 2;
  }
  const fs::path root = argv[1];
  try {
    // ---------------------------------------------------------------- diagrams
    std::vector<Entry> entries;
    entries.push_back({"unknot", LongDiagram(), {}, "crossingless long unknot", {}});
    const auto kink = insert_kink(LongDiagram(), 0, 1, 1);
    entries.push_back({"kink+", kink, {}, "single positive curl, counterclockwise", {}});
    entries.push_back({"kink-", mirror(kink), {}, "mirror of kink+", {}});

    const auto left_trefoil = from_planar_code(kTrefoilLeft, 2);
    const auto trefoil = mirror(left_trefoil);
    entries.push_back({"3_1", trefoil, unknotting_crossings(trefoil),
                       "mirror of Knot Atlas 3_1 PD " + code_text(kTrefoilLeft) + " opened at edge 2", {}});

    // The left-handed diagram with six curls: writhe and rotation match 3_1.
    auto mirror_framed = left_trefoil;
    for (int i = 0; i < 3; ++i) mirror_framed = insert_kink(mirror_framed, mirror_framed.last_edge(), 1, 1);
    for (int i = 0; i < 3; ++i) mirror_framed = insert_kink(mirror_framed, mirror_framed.last_edge(), 1, -1);
    std::vector<UnknottingCrossing> mirror_unknot;
    for (int c = 0; c < 3; ++c) mirror_unknot.push_back({c, -crossing_sign(mirror_framed, c)});
    entries.push_back({"3_1!", mirror_framed, mirror_unknot,
                       "Knot Atlas 3_1 PD " + code_text(kTrefoilLeft) +
                           " opened at edge 2, followed by three positive counterclockwise and three positive "
                           "clockwise curls on the outgoing end; framed to writhe 3, rotation 1",
                       {}});

    const auto fig8 = from_planar_code(kFigureEight, 2);
    entries.push_back({"4_1", fig8, unknotting_crossings(fig8),
                       "Knot Atlas 4_1 PD " + code_text(kFigureEight) + " opened at edge 2", {}});
    const auto six3 = from_planar_code(kSixThree, 1);
    entries.push_back({"6_3", six3, unknotting_crossings(six3),
                       "Knot Atlas 6_3 PD " + code_text(kSixThree) + " opened at edge 1", {}});
    const auto sum = connected_sum(fig8, six3);
    std::vector<UnknottingCrossing> none;
    entries.push_back({"4_1#6_3", sum, none, "connected sum, 4_1 first", {"4_1", "6_3"}});

    for (const auto& e : entries) write(root / "diagrams" / (file_stem(e.name) + ".json"), entry_json(e));

    // A lone singular input used by the command line examples.
    write(root / "inputs" / "kinked_double_point.json", to_json(make_singular(kink, 0)));

    // ---------------------------------------------------------------- scenarios
    auto single_change = [&](const std::string& name, const std::string& who, const LongDiagram& d, int ind,
                             const std::string& text) {
      for (const auto& u : unknotting_crossings(d)) {
        if (u.ind == ind) {
          write(root / "scenarios" / (name + ".json"),
                scenario_json(name, text, "@" + who, {CrossingChange{u.crossing}}));
          return;
        }
      }
      throw std::runtime_error(name + ": no unknotting crossing with ind " + std::to_string(ind));
    };
    single_change("trefoil_unknotting", "3_1", trefoil, -1, "3_1 unknotted by one crossing change");
    single_change("trefoil_mirror_unknotting", "3_1!", mirror_framed, 1, "3_1! unknotted by one crossing change");
    single_change("fig8_unknotting_pos", "4_1", fig8, 1, "4_1 unknotted by a positive crossing change");
    single_change("fig8_unknotting_neg", "4_1", fig8, -1, "4_1 unknotted by a negative crossing change");

    // Loop on 4_1#6_3: h unknots with inds (+1, -1), h' with (-1, +1); the
    // two unknot diagrams are joined through the crossingless diagram.
    auto pick = [&](const LongDiagram& d, int offset, int count, int ind) {
      for (int c = offset; c < offset + count; ++c) {
        if (-crossing_sign(d, c) != ind) continue;
        auto part = offset == 0 ? fig8 : six3;
        if (is_unknot(change_crossing(part, c - offset))) return c;
      }
      throw std::runtime_error("no unknotting crossing");
    };
    const int n41 = fig8.size();
    const int n63 = six3.size();
    const std::vector<MoveEvent> h = {CrossingChange{pick(sum, 0, n41, 1)}, CrossingChange{pick(sum, n41, n63, -1)}};
    const std::vector<MoveEvent> hp = {CrossingChange{pick(sum, 0, n41, -1)},
                                       CrossingChange{pick(sum, n41, n63, 1)}};
    const auto u1 = end_diagram({sum, h});
    const auto u2 = end_diagram({sum, hp});
    std::vector<MoveEvent> down1, down2;
    for (int slack = 0; slack <= 4 && down1.empty(); slack += 2) {
      try {
        down1 = simplify_path(u1, slack);
      } catch (const std::exception&) {
      }
    }
    for (int slack = 0; slack <= 4 && down2.empty(); slack += 2) {
      try {
        down2 = simplify_path(u2, slack);
      } catch (const std::exception&) {
      }
    }
    if (down1.empty() || down2.empty()) throw std::runtime_error("could not simplify the unknot diagrams");
    Path loop{sum, h};
    loop = concatenate(loop, Path{u1, down1});
    const auto back = reverse_path(concatenate(Path{sum, hp}, Path{u2, down2}));
    loop = concatenate(loop, back);
    if (!is_loop(loop)) throw std::runtime_error("loop does not close");
    write(root / "scenarios" / "loop_41_63.json",
          scenario_json("loop_41_63",
                        "h unknots 4_1 (ind +1) then 6_3 (ind -1); h' unknots 4_1 (ind -1) then 6_3 (ind +1); "
                        "the loop runs h, simplifies to the crossingless diagram and returns along h' reversed",
                        "@4_1#6_3", loop.events));

    // Two unknot diagrams joined through 4_1, once with each sign.
    const auto up = unknotting_crossings(fig8);
    int pos = -1, neg = -1;
    for (const auto& u : up) {
      if (u.ind == 1 && pos < 0) pos = u.crossing;
      if (u.ind == -1 && neg < 0) neg = u.crossing;
    }
    const auto from = change_crossing(fig8, pos);
    auto fig3 = scenario_json("fig3_demo",
                              "unknot diagram of writhe +2 to unknot diagram of writhe -2 through 4_1, "
                              "using an unknotting crossing of each sign",
                              to_json(from), {CrossingChange{pos}, CrossingChange{neg}});
    fig3["target"] = to_json(change_crossing(fig8, neg));
    write(root / "scenarios" / "fig3_demo.json", fig3);

    write(root / "scenarios" / "empty_path.json",
          scenario_json("empty_path", "constant path at 3_1", "@3_1", {}));

    // ---------------------------------------------------------------- meridians
    json notes = json::object();
    json mer = {{"schema", kFixtureSchema},
                {"double_pair", double_pair_section()},
                {"tangency", tangency_section()},
                {"triple_point", theta_section(trefoil, notes)},
                {"cusp", {{"ambient", "@3_1"}, {"edge", 0}, {"writhe", 1}, {"rotation", 1}}}};
    mer["notes"] = notes;
    write(root / "meridians.json", mer);

    // ---------------------------------------------------------------- check
    const auto cat = Catalog::load(root);
    const auto rep = meridian_suite(cat.meridians(), Specialization{}, cat.resolver());
    std::cout << to_json(rep).dump(2) << "\n";
    const auto lr = cross_of_loop(cat.scenario("loop_41_63"));
    std::cout << "loop_41_63: " << lr.contributions.size() << " walls, Cross = " << format(lr.value) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
