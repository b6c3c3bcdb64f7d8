#include "skein/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "raw_diagram.hpp"
#include "skein/errors.hpp"

namespace skein {

using detail::finalize;
using detail::opposite;
using detail::RawDiagram;
using detail::RawVertex;
using detail::to_raw;

LongDiagram::LongDiagram(int edge_count, std::vector<Vertex> vertices)
    : edge_count_(edge_count), vertices_(std::move(vertices)) {}

const Vertex& LongDiagram::vertex(int id) const {
  if (id < 0 || id >= size()) {
    throw ValidationError("vertex id " + std::to_string(id) + " out of range");
  }
  return vertices_[static_cast<std::size_t>(id)];
}

int LongDiagram::crossing_count() const {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(),
                                        [](const Vertex& v) { return v.is_crossing(); }));
}

int LongDiagram::double_point_count() const { return size() - crossing_count(); }

// ------------------------------------------------------------------ raw form

namespace detail {

int RawDiagram::next_id() const {
  int m = -1;
  for (int id : order) m = std::max(m, id);
  return m + 1;
}

RawDiagram to_raw(const LongDiagram& d) {
  RawDiagram raw;
  raw.order.resize(static_cast<std::size_t>(d.edge_count()));
  std::iota(raw.order.begin(), raw.order.end(), 0);
  for (const auto& v : d.vertices()) raw.vertices.push_back({v.kind, v.ends, 1});
  return raw;
}

LongDiagram finalize(const RawDiagram& raw) {
  std::map<int, int> label;
  for (std::size_t i = 0; i < raw.order.size(); ++i) {
    if (!label.emplace(raw.order[i], static_cast<int>(i)).second) {
      throw ValidationError("edge id repeated in traversal order");
    }
  }
  std::vector<Vertex> out;
  out.reserve(raw.vertices.size());
  for (const auto& rv : raw.vertices) {
    std::array<int, 4> ends{};
    for (int s = 0; s < 4; ++s) {
      auto it = label.find(rv.ends[static_cast<std::size_t>(s)]);
      if (it == label.end()) throw ValidationError("vertex references an edge missing from the traversal");
      ends[static_cast<std::size_t>(s)] = it->second;
    }
    int start = 0;
    if (rv.kind == VertexKind::crossing) {
      const int under = 1 - rv.over_pair;
      start = ends[static_cast<std::size_t>(under)] < ends[static_cast<std::size_t>(under + 2)] ? under : under + 2;
    } else {
      start = static_cast<int>(std::min_element(ends.begin(), ends.end()) - ends.begin());
    }
    Vertex v{rv.kind, {}};
    for (int s = 0; s < 4; ++s) v.ends[static_cast<std::size_t>(s)] = ends[static_cast<std::size_t>((start + s) & 3)];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const Vertex& x, const Vertex& y) {
    return *std::min_element(x.ends.begin(), x.ends.end()) < *std::min_element(y.ends.begin(), y.ends.end());
  });
  return LongDiagram(static_cast<int>(raw.order.size()), std::move(out));
}

SlotRef head_of(const LongDiagram& d, int edge) {
  for (int v = 0; v < d.size(); ++v) {
    const auto& vx = d.vertices()[static_cast<std::size_t>(v)];
    for (int s = 0; s < 4; ++s) {
      if (vx.ends[static_cast<std::size_t>(s)] == edge && is_incoming(vx, s)) return {v, s};
    }
  }
  return {};
}

SlotRef tail_of(const LongDiagram& d, int edge) {
  for (int v = 0; v < d.size(); ++v) {
    const auto& vx = d.vertices()[static_cast<std::size_t>(v)];
    for (int s = 0; s < 4; ++s) {
      if (vx.ends[static_cast<std::size_t>(s)] == edge && !is_incoming(vx, s)) return {v, s};
    }
  }
  return {};
}

}  // namespace detail

// ------------------------------------------------------------------ faces

namespace {

// Darts: 4*v + slot for vertex slots; 4n is the arrival of edge E at
// infinity, 4n+1 the departure of edge 0 from infinity.
struct DartGraph {
  int n = 0;
  std::vector<int> edge_of;    // dart -> edge label
  std::vector<bool> is_tail;   // dart is where its edge starts
  std::vector<int> other_end;  // dart -> dart at the other end of its edge

  int rotate(int dart) const {
    if (dart >= 4 * n) return dart == 4 * n ? 4 * n + 1 : 4 * n;
    return (dart & ~3) | ((dart + 1) & 3);
  }
};

// Assumes label multiplicities are already consistent.
DartGraph build_darts(const LongDiagram& d) {
  DartGraph g;
  g.n = d.size();
  const int total = 4 * g.n + 2;
  g.edge_of.assign(static_cast<std::size_t>(total), -1);
  g.is_tail.assign(static_cast<std::size_t>(total), false);
  g.other_end.assign(static_cast<std::size_t>(total), -1);
  std::vector<int> head(static_cast<std::size_t>(d.edge_count()), -1);
  std::vector<int> tail(static_cast<std::size_t>(d.edge_count()), -1);
  for (int v = 0; v < g.n; ++v) {
    const auto& vx = d.vertices()[static_cast<std::size_t>(v)];
    for (int s = 0; s < 4; ++s) {
      const int dart = 4 * v + s;
      const int e = vx.ends[static_cast<std::size_t>(s)];
      g.edge_of[static_cast<std::size_t>(dart)] = e;
      const bool tail_here = !detail::is_incoming(vx, s);
      g.is_tail[static_cast<std::size_t>(dart)] = tail_here;
      (tail_here ? tail : head)[static_cast<std::size_t>(e)] = dart;
    }
  }
  const int inf_in = 4 * g.n;
  const int inf_out = 4 * g.n + 1;
  g.edge_of[static_cast<std::size_t>(inf_in)] = d.last_edge();
  g.edge_of[static_cast<std::size_t>(inf_out)] = 0;
  g.is_tail[static_cast<std::size_t>(inf_out)] = true;
  head[static_cast<std::size_t>(d.last_edge())] = inf_in;
  tail[0] = inf_out;
  for (int dart = 0; dart < total; ++dart) {
    const int e = g.edge_of[static_cast<std::size_t>(dart)];
    g.other_end[static_cast<std::size_t>(dart)] =
        g.is_tail[static_cast<std::size_t>(dart)] ? head[static_cast<std::size_t>(e)] : tail[static_cast<std::size_t>(e)];
  }
  return g;
}

std::vector<Face> trace_faces(const DartGraph& g) {
  const int total = 4 * g.n + 2;
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  std::vector<Face> out;
  for (int start = 0; start < total; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Face f;
    int dart = start;
    do {
      seen[static_cast<std::size_t>(dart)] = true;
      f.steps.push_back({g.edge_of[static_cast<std::size_t>(dart)], g.is_tail[static_cast<std::size_t>(dart)]});
      const int arrive = g.other_end[static_cast<std::size_t>(dart)];
      f.corners.push_back(arrive >= 4 * g.n ? -1 : arrive / 4);
      dart = g.rotate(arrive);
    } while (dart != start && f.steps.size() <= static_cast<std::size_t>(total));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

bool Face::touches_infinity() const {
  return std::find(corners.begin(), corners.end(), -1) != corners.end();
}

std::vector<Face> faces(const LongDiagram& d) { return trace_faces(build_darts(d)); }

int face_beside(const LongDiagram& d, const std::vector<Face>& fs, int edge, int side) {
  if (edge < 0 || edge > d.last_edge()) throw ValidationError("edge " + std::to_string(edge) + " out of range");
  const bool forward = side > 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (const auto& st : fs[i].steps) {
      if (st.edge == edge && st.forward == forward) return static_cast<int>(i);
    }
  }
  throw ValidationError("edge side not found on any face");
}

// ------------------------------------------------------------------ validation

namespace {

ValidityReport fail(std::string invariant, std::string message) {
  return {false, std::move(invariant), std::move(message)};
}

}  // namespace

ValidityReport validate(const LongDiagram& d) {
  const int n = d.size();
  const int last = d.last_edge();
  if (d.edge_count() != 2 * n + 1) {
    return fail("edge count", "expected " + std::to_string(2 * n + 1) + " edge labels for " + std::to_string(n) +
                                  " vertices, found " + std::to_string(d.edge_count()));
  }
  std::vector<int> count(static_cast<std::size_t>(d.edge_count()), 0);
  for (int v = 0; v < n; ++v) {
    for (int e : d.vertices()[static_cast<std::size_t>(v)].ends) {
      if (e < 0 || e > last) {
        return fail("edge range", "vertex " + std::to_string(v) + " references edge " + std::to_string(e));
      }
      ++count[static_cast<std::size_t>(e)];
    }
  }
  if (n > 0) {
    for (int e = 0; e <= last; ++e) {
      const int want = (e == 0 || e == last) ? 1 : 2;
      if (count[static_cast<std::size_t>(e)] != want) {
        return fail("edge multiplicity", "edge " + std::to_string(e) + " used " +
                                             std::to_string(count[static_cast<std::size_t>(e)]) + " times");
      }
    }
  }
  std::vector<int> passes(static_cast<std::size_t>(d.edge_count()), 0);
  for (int v = 0; v < n; ++v) {
    const auto& vx = d.vertices()[static_cast<std::size_t>(v)];
    for (int s = 0; s < 2; ++s) {
      const int a = vx.ends[static_cast<std::size_t>(s)];
      const int b = vx.ends[static_cast<std::size_t>(s + 2)];
      if (std::abs(a - b) != 1) {
        return fail("traversal", "vertex " + std::to_string(v) + " joins non-consecutive edges " + std::to_string(a) +
                                     " and " + std::to_string(b));
      }
      ++passes[static_cast<std::size_t>(std::min(a, b))];
    }
    if (vx.is_crossing()) {
      if (!detail::is_incoming(vx, 0)) {
        return fail("slot convention", "crossing " + std::to_string(v) + " does not start at its incoming under edge");
      }
    } else if (vx.ends[0] != *std::min_element(vx.ends.begin(), vx.ends.end())) {
      return fail("slot convention", "double point " + std::to_string(v) + " does not start at its first incoming edge");
    }
  }
  for (int e = 0; e < last; ++e) {
    if (passes[static_cast<std::size_t>(e)] != 1) {
      return fail("traversal", "edge " + std::to_string(e) + " is followed by edge " + std::to_string(e + 1) + " " +
                                   std::to_string(passes[static_cast<std::size_t>(e)]) + " times");
    }
  }
  const auto fs = faces(d);
  const int euler = (n + 1) - (2 * n + 1) + static_cast<int>(fs.size());
  if (euler != 2) {
    return fail("planarity", "V - E + F = " + std::to_string(euler) + ", expected 2");
  }
  return {};
}

void require_valid(const LongDiagram& d) {
  auto r = validate(d);
  if (!r) throw ValidationError(r.invariant + ": " + r.message);
}

// ------------------------------------------------------------------ framing

int crossing_sign(const LongDiagram& d, int vertex) {
  const auto& v = d.vertex(vertex);
  if (!v.is_crossing()) throw NotACrossing("vertex " + std::to_string(vertex) + " is a double point");
  // Positive iff the over strand runs from slot 3 to slot 1.
  return v.ends[3] < v.ends[1] ? 1 : -1;
}

int writhe(const LongDiagram& d) {
  int w = 0;
  for (int v = 0; v < d.size(); ++v) {
    if (d.vertices()[static_cast<std::size_t>(v)].is_crossing()) w += crossing_sign(d, v);
  }
  return w;
}

int whitney_index(const LongDiagram& d) {
  // Each self-intersection contributes -sign det(t_first, t_second), where
  // t_first is the tangent of the earlier pass. With counterclockwise slots
  // the determinant is positive exactly when the second incoming end sits
  // one slot counterclockwise of the first.
  int n = 0;
  for (const auto& v : d.vertices()) {
    const int first = static_cast<int>(std::min_element(v.ends.begin(), v.ends.end()) - v.ends.begin());
    const int left = (first + 1) & 3;
    const bool second_is_left = detail::is_incoming(v, left);
    n += second_is_left ? -1 : 1;
  }
  return n;
}

FramingData framing(const LongDiagram& d) { return {writhe(d), whitney_index(d)}; }

// ------------------------------------------------------------------ operations

LongDiagram mirror(const LongDiagram& d) {
  auto raw = to_raw(d);
  for (auto& v : raw.vertices) v.over_pair = 1 - v.over_pair;
  return finalize(raw);
}

LongDiagram change_crossing(const LongDiagram& d, int crossing) {
  if (!d.vertex(crossing).is_crossing()) {
    throw NotACrossing("vertex " + std::to_string(crossing) + " is a double point");
  }
  auto raw = to_raw(d);
  auto& v = raw.vertices[static_cast<std::size_t>(crossing)];
  v.over_pair = 1 - v.over_pair;
  return finalize(raw);
}

LongDiagram connected_sum(const LongDiagram& left, const LongDiagram& right) {
  const int shift = left.last_edge();
  std::vector<Vertex> vs = left.vertices();
  for (auto v : right.vertices()) {
    for (auto& e : v.ends) e += shift;
    vs.push_back(v);
  }
  return LongDiagram(left.edge_count() + right.edge_count() - 1, std::move(vs));
}

LongDiagram make_singular(const LongDiagram& d, int crossing) {
  if (!d.vertex(crossing).is_crossing()) {
    throw NotACrossing("vertex " + std::to_string(crossing) + " is a double point");
  }
  auto raw = to_raw(d);
  raw.vertices[static_cast<std::size_t>(crossing)].kind = VertexKind::double_point;
  return finalize(raw);
}

LongDiagram resolve(const LongDiagram& d, int dp, int sign) {
  if (d.vertex(dp).is_crossing()) throw NotADoublePoint("vertex " + std::to_string(dp) + " is a crossing");
  if (sign != 1 && sign != -1) throw ValidationError("resolution sign must be +1 or -1");
  auto raw = to_raw(d);
  auto& v = raw.vertices[static_cast<std::size_t>(dp)];
  v.kind = VertexKind::crossing;
  for (int over = 0; over < 2; ++over) {
    v.over_pair = over;
    auto out = finalize(raw);
    // finalize keeps vertex order: the first visit of dp is unchanged.
    if (crossing_sign(out, dp) == sign) return out;
  }
  throw ValidationError("unreachable resolution sign");
}

LongDiagram canonical_form(const LongDiagram& d) {
  auto raw = to_raw(d);
  return finalize(raw);
}

LongDiagram from_planar_code(const std::vector<std::array<int, 4>>& code, int cut_edge) {
  const int m = 2 * static_cast<int>(code.size());
  if (m == 0) return LongDiagram();
  if (cut_edge < 1 || cut_edge > m) throw ValidationError("cut edge out of range");
  RawDiagram raw;
  for (const auto& x : code) {
    RawVertex v;
    for (int s = 0; s < 4; ++s) {
      const int label = x[static_cast<std::size_t>(s)];
      if (label < 1 || label > m) throw ValidationError("planar code label out of range");
      const int next = x[static_cast<std::size_t>(opposite(s))];
      const bool incoming = next == label % m + 1;
      int shifted = ((label - cut_edge) % m + m) % m;
      if (label == cut_edge && !incoming) shifted = m;
      v.ends[static_cast<std::size_t>(s)] = shifted;
    }
    raw.vertices.push_back(v);
  }
  raw.order.resize(static_cast<std::size_t>(m + 1));
  std::iota(raw.order.begin(), raw.order.end(), 0);
  auto d = finalize(raw);
  require_valid(d);
  return d;
}

LongDiagram insert_kink(const LongDiagram& d, int edge, int writhe_sign, int rotation) {
  if (edge < 0 || edge > d.last_edge()) throw ValidationError("edge " + std::to_string(edge) + " out of range");
  if ((writhe_sign != 1 && writhe_sign != -1) || (rotation != 1 && rotation != -1)) {
    throw ValidationError("kink writhe and rotation must be +1 or -1");
  }
  auto raw = to_raw(d);
  const int loop = raw.next_id();
  const int after = loop + 1;
  const auto head = detail::head_of(d, edge);
  if (head.vertex >= 0) {
    raw.vertices[static_cast<std::size_t>(head.vertex)].ends[static_cast<std::size_t>(head.slot)] = after;
  }
  auto pos = std::find(raw.order.begin(), raw.order.end(), edge);
  pos = raw.order.insert(pos + 1, loop);
  raw.order.insert(pos + 1, after);
  RawVertex kink;
  kink.ends = rotation > 0 ? std::array<int, 4>{edge, after, loop, loop} : std::array<int, 4>{edge, loop, loop, after};
  raw.vertices.push_back(kink);
  const auto new_id = static_cast<std::size_t>(raw.vertices.size() - 1);
  for (int over = 0; over < 2; ++over) {
    raw.vertices[new_id].over_pair = over;
    auto out = finalize(raw);
    if (writhe(out) - writhe(d) == writhe_sign) return out;
  }
  throw ValidationError("unreachable kink sign");
}

// ------------------------------------------------------------------ tangles

ValidityReport validate(const Tangle& t) {
  std::map<int, int> count;
  for (const auto& v : t.vertices) {
    for (int e : v.ends) ++count[e];
    if (v.kind == VertexKind::double_point && v.oriented_pairing != 0 && v.oriented_pairing != 1) {
      return fail("double point pairing", "oriented_pairing must be 0 or 1");
    }
  }
  for (int e : t.boundary) ++count[e];
  for (const auto& [e, c] : count) {
    if (c != 2) return fail("edge multiplicity", "edge " + std::to_string(e) + " has " + std::to_string(c) + " ends");
  }
  if (t.boundary.size() % 2 != 0) return fail("boundary", "odd number of boundary points");

  // Embedded graph: tangle vertices plus the disk boundary collapsed to one
  // vertex whose rotation runs through the boundary points clockwise.
  const int n = static_cast<int>(t.vertices.size());
  const int k = static_cast<int>(t.boundary.size());
  std::vector<int> degree(static_cast<std::size_t>(n), 4);
  const int vcount = n + (k > 0 ? 1 : 0);
  std::vector<int> base(static_cast<std::size_t>(vcount + 1), 0);
  for (int v = 0; v < n; ++v) base[static_cast<std::size_t>(v + 1)] = base[static_cast<std::size_t>(v)] + 4;
  if (k > 0) base[static_cast<std::size_t>(n + 1)] = base[static_cast<std::size_t>(n)] + k;
  const int total = base.back();
  std::vector<int> dart_edge(static_cast<std::size_t>(total));
  std::vector<int> dart_vertex(static_cast<std::size_t>(total));
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < 4; ++s) {
      dart_edge[static_cast<std::size_t>(4 * v + s)] = t.vertices[static_cast<std::size_t>(v)].ends[static_cast<std::size_t>(s)];
      dart_vertex[static_cast<std::size_t>(4 * v + s)] = v;
    }
  }
  for (int i = 0; i < k; ++i) {
    dart_edge[static_cast<std::size_t>(4 * n + i)] = t.boundary[static_cast<std::size_t>(k - 1 - i)];
    dart_vertex[static_cast<std::size_t>(4 * n + i)] = n;
  }
  std::map<int, std::vector<int>> by_edge;
  for (int dart = 0; dart < total; ++dart) by_edge[dart_edge[static_cast<std::size_t>(dart)]].push_back(dart);
  std::vector<int> other(static_cast<std::size_t>(total));
  for (const auto& [e, ds] : by_edge) {
    other[static_cast<std::size_t>(ds[0])] = ds[1];
    other[static_cast<std::size_t>(ds[1])] = ds[0];
  }
  auto rotate = [&](int dart) {
    const int v = dart_vertex[static_cast<std::size_t>(dart)];
    const int b = base[static_cast<std::size_t>(v)];
    const int deg = base[static_cast<std::size_t>(v + 1)] - b;
    return b + (dart - b + 1) % deg;
  };
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  int face_count = 0;
  for (int start = 0; start < total; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++face_count;
    int dart = start;
    do {
      seen[static_cast<std::size_t>(dart)] = true;
      dart = rotate(other[static_cast<std::size_t>(dart)]);
    } while (dart != start);
  }
  // Connected components of the graph.
  std::vector<int> parent(static_cast<std::size_t>(vcount));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [e, ds] : by_edge) {
    parent[static_cast<std::size_t>(find(dart_vertex[static_cast<std::size_t>(ds[0])]))] =
        find(dart_vertex[static_cast<std::size_t>(ds[1])]);
  }
  int components = 0;
  for (int v = 0; v < vcount; ++v) components += find(v) == v ? 1 : 0;
  const int edges = static_cast<int>(by_edge.size());
  if (vcount - edges + face_count != 2 * components) {
    return fail("planarity", "V - E + F = " + std::to_string(vcount - edges + face_count) + ", expected " +
                                 std::to_string(2 * components));
  }
  return {};
}

Tangle to_tangle(const LongDiagram& d) {
  Tangle t;
  t.boundary = {0, d.last_edge()};
  for (const auto& v : d.vertices()) {
    TangleVertex tv{v.kind, v.ends, 0};
    if (v.kind == VertexKind::double_point) {
      // Slot 0 is incoming; if the other incoming end sits at slot 3 the
      // oriented smoothing joins (0,1),(2,3).
      tv.oriented_pairing = detail::is_incoming(v, 3) ? 0 : 1;
    }
    t.vertices.push_back(tv);
  }
  return t;
}

// ------------------------------------------------------------------ json

namespace {

std::string kind_name(VertexKind k) { return k == VertexKind::crossing ? "crossing" : "double"; }

VertexKind kind_from(const nlohmann::json& j, std::size_t index) {
  if (!j.is_string()) throw ValidationError("vertex " + std::to_string(index) + ": kind must be a string");
  const auto& s = j.get_ref<const std::string&>();
  if (s == "crossing") return VertexKind::crossing;
  if (s == "double") return VertexKind::double_point;
  throw ValidationError("vertex " + std::to_string(index) + ": unknown kind '" + s + "'");
}

std::array<int, 4> ends_from(const nlohmann::json& j, std::size_t index) {
  if (!j.is_array() || j.size() != 4) {
    throw ValidationError("vertex " + std::to_string(index) + ": ends must list exactly 4 edges");
  }
  std::array<int, 4> ends{};
  for (std::size_t s = 0; s < 4; ++s) {
    if (!j[s].is_number_integer()) throw ValidationError("vertex " + std::to_string(index) + ": non-integer edge");
    ends[s] = j[s].get<int>();
  }
  return ends;
}

}  // namespace

nlohmann::json to_json(const LongDiagram& d) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : d.vertices()) vs.push_back({{"kind", kind_name(v.kind)}, {"ends", v.ends}});
  return {{"edges", d.edge_count()}, {"vertices", vs}};
}

LongDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("diagram must be a JSON object");
  if (!j.contains("edges") || !j["edges"].is_number_integer()) throw ValidationError("diagram: missing integer 'edges'");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ValidationError("diagram: missing 'vertices' array");
  std::vector<Vertex> vs;
  std::size_t i = 0;
  for (const auto& jv : j["vertices"]) {
    if (!jv.is_object() || !jv.contains("kind") || !jv.contains("ends")) {
      throw ValidationError("vertex " + std::to_string(i) + ": expected {kind, ends}");
    }
    vs.push_back({kind_from(jv["kind"], i), ends_from(jv["ends"], i)});
    ++i;
  }
  LongDiagram d(j["edges"].get<int>(), std::move(vs));
  require_valid(d);
  return d;
}

nlohmann::json to_json(const Tangle& t) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : t.vertices) {
    nlohmann::json jv = {{"kind", kind_name(v.kind)}, {"ends", v.ends}};
    if (v.kind == VertexKind::double_point) jv["oriented_pairing"] = v.oriented_pairing;
    vs.push_back(jv);
  }
  return {{"boundary", t.boundary}, {"vertices", vs}};
}

Tangle tangle_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("boundary") || !j.contains("vertices")) {
    throw ValidationError("tangle must be an object with 'boundary' and 'vertices'");
  }
  Tangle t;
  t.boundary = j["boundary"].get<std::vector<int>>();
  std::size_t i = 0;
  for (const auto& jv : j["vertices"]) {
    if (!jv.is_object() || !jv.contains("kind") || !jv.contains("ends")) {
      throw ValidationError("vertex " + std::to_string(i) + ": expected {kind, ends}");
    }
    TangleVertex v{kind_from(jv["kind"], i), ends_from(jv["ends"], i), jv.value("oriented_pairing", 0)};
    t.vertices.push_back(v);
    ++i;
  }
  auto r = validate(t);
  if (!r) throw ValidationError(r.invariant + ": " + r.message);
  return t;
}

}  // namespace skein
