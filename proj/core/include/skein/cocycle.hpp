#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/bracket.hpp"
#include "skein/homotopy.hpp"

namespace skein {

struct Contribution {
  WallCrossing wall;
  LaurentPoly value;  // ind * <K(p)>_s(A, 1, -1)
  Certificate certificate;
};

struct CrossReport {
  LaurentPoly value;
  std::vector<Contribution> contributions;
  int ind_sum = 0;
  FramingData start_framing;
  FramingData end_framing;
  bool framing_ok = true;  // w(end) = w(start) + 2 * ind_sum, whitney constant
  bool loop = false;
  bool certified = true;  // every wall has an essential certificate
  std::vector<std::string> warnings;
};

CrossReport cross_of_path(const Path& p, const EvalOptions& opts = {});
// Throws NotALoop unless the path returns to its start.
CrossReport cross_of_loop(const Path& p, const EvalOptions& opts = {});
// Sum of ind * singular_bracket over the walls, B and C left free.
SkeinPoly generic_cross(const Path& p, const EvalOptions& opts = {});

// (<D+> - <D->) / (A - A^-1) for the two resolutions at crossing c.
LaurentPoly wall_oracle(const LongDiagram& d, int c, const EvalOptions& opts = {});
// Sign relating singular_bracket_eval to wall_oracle.
inline constexpr int kOracleSign = 1;

// Cross of the single crossing change at c. Throws IndMismatch when the
// crossing already has the target sign. Adds a warning if the result is not
// detected as unknotted.
LaurentPoly unknotting_invariant(const LongDiagram& d, int c, int target_ind,
                                 std::vector<std::string>* warnings = nullptr);

nlohmann::json to_json(const CrossReport& r, bool audit);

// ------------------------------------------------------------------ suites

// Substitution applied to generic results before checking.
struct Specialization {
  SkeinPoly b = SkeinPoly::b();
  SkeinPoly c = -SkeinPoly::b();
  std::string label = "C=-B";
};

struct ScenarioResult {
  ScenarioResult() = default;
  explicit ScenarioResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::vector<std::string> messages;
  nlohmann::json data = nlohmann::json::object();
};

struct SuiteReport {
  std::string name;
  std::vector<ScenarioResult> scenarios;
  bool passed() const;
};

nlohmann::json to_json(const SuiteReport& r);

// Coefficients of the smoothed diagrams D1..D4 in Cross of the meridian of
// two transverse double points, with B and C free.
std::map<std::string, SkeinPoly> double_pair_coefficients(const nlohmann::json& scenario);

// Runs the four meridian scenarios described by `fixture` (see
// docs/FORMATS.md). String diagram references are resolved by `resolve`.
SuiteReport meridian_suite(const nlohmann::json& fixture, const Specialization& spec, const DiagramResolver& resolve);

// Randomized property runs.
SuiteReport move_suite(std::uint64_t seed, int count, int max_crossings = 9);
SuiteReport oracle_suite(std::uint64_t seed, int count, int max_crossings = 9);
SuiteReport framing_suite(std::uint64_t seed, int count, int max_crossings = 9);

}  // namespace skein
