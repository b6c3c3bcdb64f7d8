#pragma once

// Editable form of a long diagram used by the rewriting code. Edge ids are
// arbitrary; `order` lists them in traversal order. finalize() relabels by
// position in `order` and restores the canonical slot conventions.

#include <array>
#include <vector>

#include "skein/diagram.hpp"

namespace skein::detail {

struct RawVertex {
  VertexKind kind = VertexKind::crossing;
  std::array<int, 4> ends{};  // counterclockwise, any starting slot
  int over_pair = 1;          // 0: slots 0/2 pass over, 1: slots 1/3 pass over
};

struct RawDiagram {
  std::vector<RawVertex> vertices;
  std::vector<int> order;
  int next_id() const;
};

RawDiagram to_raw(const LongDiagram& d);
LongDiagram finalize(const RawDiagram& raw);

inline int opposite(int slot) { return (slot + 2) & 3; }

// In a valid diagram the strand through slots s and s+2 carries labels k
// and k+1; the smaller one is the incoming edge.
inline bool is_incoming(const Vertex& v, int slot) { return v.ends[slot] < v.ends[opposite(slot)]; }

// Slot where `edge` ends (incoming), or -1 if it is the right end.
struct SlotRef {
  int vertex = -1;
  int slot = -1;
};
SlotRef head_of(const LongDiagram& d, int edge);
SlotRef tail_of(const LongDiagram& d, int edge);

}  // namespace skein::detail
