#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/poly.hpp"

namespace skein {

// Pushes a finger of `finger` edge across `target` edge through the face on
// side `side` of the finger (+1 right, -1 left), creating a bigon. When
// finger == target the earlier part of the edge is pushed across its later
// part.
struct R2Insert {
  int finger = 0;
  int target = 0;
  int side = 1;
  bool finger_over = true;
  friend bool operator==(const R2Insert&, const R2Insert&) = default;
};

// Removes the bigon face `face` (both corners crossings, one strand over at both).
struct R2Remove {
  int face = 0;
  friend bool operator==(const R2Remove&, const R2Remove&) = default;
};

// Triangle move on face `face`; `edge` is the triangle side whose strand
// passes over both others or under both.
struct R3 {
  int face = 0;
  int edge = 0;
  friend bool operator==(const R3&, const R3&) = default;
};

struct CrossingChange {
  int crossing = 0;
  friend bool operator==(const CrossingChange&, const CrossingChange&) = default;
};

using MoveEvent = std::variant<R2Insert, R2Remove, R3, CrossingChange>;

std::string describe(const MoveEvent& e);
nlohmann::json to_json(const MoveEvent& e);
MoveEvent event_from_json(const nlohmann::json& j, std::size_t index = 0);

// Throws InapplicableMove. The result is a valid diagram.
LongDiagram apply_event(const LongDiagram& d, const MoveEvent& e);

// Every event applicable to d (R2 insertions included only if requested).
std::vector<MoveEvent> applicable_events(const LongDiagram& d, bool include_r2_insert = true);

// An event taking apply_event(d, e) back to d, found by search.
std::optional<MoveEvent> inverse_event(const LongDiagram& d, const MoveEvent& e);

struct Path {
  LongDiagram start;
  std::vector<MoveEvent> events;
};

struct PathTrace {
  bool ok = true;
  std::vector<LongDiagram> diagrams;  // start plus one per applied event
  std::vector<FramingData> framing;
  int failed_at = -1;  // event index, -1 when ok
  std::string message;
};

PathTrace validate_path(const Path& p);
// Throws InapplicableMove on the first failing event.
LongDiagram end_diagram(const Path& p);

struct WallCrossing {
  LongDiagram singular;  // exactly one double point
  int ind = 0;
  int position = 0;   // event index
  int crossing = 0;   // crossing id in the diagram before the event
};

std::vector<WallCrossing> wall_crossings(const Path& p);

enum class Essentialness { essential, inconclusive };

struct Certificate {
  Essentialness status = Essentialness::inconclusive;
  std::vector<std::string> differing;  // names of separating invariants
  LaurentPoly jones_positive;
  LaurentPoly jones_negative;
  FramingData framing_positive;
  FramingData framing_negative;
};

// Compares the two resolutions of the wall at crossing c.
Certificate essentialness_check(const LongDiagram& d, int c);

bool is_loop(const Path& p);

// Path from the end of p back to its start. Throws InapplicableMove if some
// event has no inverse.
Path reverse_path(const Path& p);
Path concatenate(const Path& first, const Path& second);

// JSON path scripts. String starts are resolved through `resolve`.
using DiagramResolver = std::function<LongDiagram(const std::string&)>;
Path path_from_json(const nlohmann::json& j, const DiagramResolver& resolve);
nlohmann::json to_json(const Path& p);

// Random walks used by property checks.
MoveEvent random_event(const LongDiagram& d, std::mt19937_64& rng, bool allow_crossing_changes, int max_crossings);
Path random_path(const LongDiagram& start, std::mt19937_64& rng, int steps, bool allow_crossing_changes,
                 int max_crossings);
LongDiagram random_diagram(std::mt19937_64& rng, int max_crossings);

}  // namespace skein
