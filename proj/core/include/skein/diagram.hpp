#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace skein {

enum class VertexKind { crossing, double_point };

// A 4-valent vertex. `ends` lists the incident edge labels in
// counterclockwise planar order. Crossings start at the incoming
// under-strand edge; double points start at their lower-labeled incoming
// edge. Opposite slots (0,2) and (1,3) belong to the same strand.
struct Vertex {
  VertexKind kind = VertexKind::crossing;
  std::array<int, 4> ends{};

  bool is_crossing() const noexcept { return kind == VertexKind::crossing; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct FramingData {
  int writhe = 0;
  int whitney = 0;
  friend bool operator==(const FramingData&, const FramingData&) = default;
};

// Long knot diagram. Edges carry labels 0..E in traversal order: edge 0
// arrives from the left end, edge E leaves to the right end.
class LongDiagram {
 public:
  LongDiagram() = default;  // the 0-crossing long unknot
  LongDiagram(int edge_count, std::vector<Vertex> vertices);

  int edge_count() const noexcept { return edge_count_; }
  int last_edge() const noexcept { return edge_count_ - 1; }
  int size() const noexcept { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(int id) const;
  int crossing_count() const;
  int double_point_count() const;

  friend bool operator==(const LongDiagram&, const LongDiagram&) = default;

 private:
  int edge_count_ = 1;
  std::vector<Vertex> vertices_;
};

struct ValidityReport {
  bool valid = true;
  std::string invariant;  // empty when valid
  std::string message;
  explicit operator bool() const noexcept { return valid; }
};

ValidityReport validate(const LongDiagram& d);
// Throws ValidationError carrying the first violated invariant.
void require_valid(const LongDiagram& d);

// +1 or -1; throws NotACrossing for double points.
int crossing_sign(const LongDiagram& d, int vertex);
// Double points contribute nothing.
int writhe(const LongDiagram& d);
// Rotation number of the underlying long planar curve, counterclockwise
// positive.
int whitney_index(const LongDiagram& d);
FramingData framing(const LongDiagram& d);

LongDiagram mirror(const LongDiagram& d);
LongDiagram connected_sum(const LongDiagram& left, const LongDiagram& right);
// Replaces double point `dp` by a crossing of the given sign (+1 / -1).
LongDiagram resolve(const LongDiagram& d, int dp, int sign);
LongDiagram make_singular(const LongDiagram& d, int crossing);
// Swaps over and under at one crossing.
LongDiagram change_crossing(const LongDiagram& d, int crossing);
// Vertices sorted by first visit, each rotated to its canonical start slot.
LongDiagram canonical_form(const LongDiagram& d);

// Long diagram obtained by cutting a closed planar code at `cut_edge`.
// Each entry lists edge labels 1..2n counterclockwise starting at the
// incoming under edge (Knot Atlas convention).
LongDiagram from_planar_code(const std::vector<std::array<int, 4>>& code, int cut_edge);

// Inserts a curl on `edge`. `writhe_sign` is the crossing sign, `rotation`
// the turning direction of the curl (+1 counterclockwise).
LongDiagram insert_kink(const LongDiagram& d, int edge, int writhe_sign, int rotation);

// One side of an edge traversed while walking around a face with the face
// on the right.
struct FaceStep {
  int edge = 0;
  bool forward = true;  // traversed along the strand orientation
  friend bool operator==(const FaceStep&, const FaceStep&) = default;
};

struct Face {
  std::vector<FaceStep> steps;
  // Vertex reached after each step; -1 stands for the point at infinity
  // where the two open ends meet.
  std::vector<int> corners;
  bool touches_infinity() const;
};

// Faces of the diagram closed up through the point at infinity. Face ids are
// positions in this list, numbered in order of their first dart (vertex
// index, then slot; the point at infinity last).
std::vector<Face> faces(const LongDiagram& d);

// Face to the right (side = +1) or left (side = -1) of an edge with respect
// to its strand orientation.
int face_beside(const LongDiagram& d, const std::vector<Face>& fs, int edge, int side);

// ------------------------------------------------------------------ tangles

// Vertex of a tangle. Crossings list ends counterclockwise starting at an
// end of the under strand. For double points `oriented_pairing` names the
// orientation-respecting smoothing: 0 joins slots (0,1),(2,3), 1 joins
// (0,3),(1,2).
struct TangleVertex {
  VertexKind kind = VertexKind::crossing;
  std::array<int, 4> ends{};
  int oriented_pairing = 0;
  friend bool operator==(const TangleVertex&, const TangleVertex&) = default;
};

// Planar tangle in a disk. `boundary` lists edge labels at the boundary
// points in counterclockwise order; an edge may join two boundary points
// directly. Closed components are allowed.
struct Tangle {
  std::vector<TangleVertex> vertices;
  std::vector<int> boundary;
};

ValidityReport validate(const Tangle& t);
// The long diagram as a 2-ended tangle with boundary {0, E}.
Tangle to_tangle(const LongDiagram& d);

// ------------------------------------------------------------------ json

nlohmann::json to_json(const LongDiagram& d);
LongDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Tangle& t);
Tangle tangle_from_json(const nlohmann::json& j);

}  // namespace skein
