#pragma once

#include <map>
#include <utility>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/poly.hpp"

namespace skein {

enum class EvalMethod {
  automatic,    // naive below kAutoContractionThreshold vertices, contraction above
  naive,        // exhaustive 2^n state enumeration
  contraction,  // vertex-by-vertex tangle contraction
};

inline constexpr int kAutoContractionThreshold = 12;

struct EvalOptions {
  EvalMethod method = EvalMethod::automatic;
  int threads = 1;  // only used by the naive evaluator
};

// Unnormalized bracket with loop value -A^2 - A^-2; the open strand carries
// no loop factor, so the 0-crossing long unknot evaluates to 1.
// Throws HasDoublePoints.
LaurentPoly kauffman_bracket(const LongDiagram& d, const EvalOptions& opts = {});

// Double points expand as B * (oriented smoothing) + C * (other smoothing).
SkeinPoly singular_bracket(const LongDiagram& d, const EvalOptions& opts = {});

// singular_bracket at B = 1, C = -1.
LaurentPoly singular_bracket_eval(const LongDiagram& d, const EvalOptions& opts = {});

// (-A)^(-3w) * singular_bracket.
SkeinPoly vs_polynomial(const LongDiagram& d, const EvalOptions& opts = {});

// (-A)^(-3w) * kauffman_bracket. Throws HasDoublePoints.
LaurentPoly jones(const LongDiagram& d, const EvalOptions& opts = {});

// Boundary matching: pairs (i, j), i < j, of boundary positions, sorted.
using Matching = std::vector<std::pair<int, int>>;
using TangleBracket = std::map<Matching, SkeinPoly>;

// Full expansion of a tangle to boundary matchings. Closed loops are
// replaced by the loop value.
TangleBracket tangle_bracket(const Tangle& t);

nlohmann::json to_json(const TangleBracket& tb);

}  // namespace skein
