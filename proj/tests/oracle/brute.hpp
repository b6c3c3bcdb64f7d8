#pragma once

// Exhaustive state-sum evaluator used only to cross-check the library. It
// reads nothing but the vertex end lists and shares no code with the
// production evaluators: its own polynomial type, its own loop counting.

#include <cstdint>
#include <map>
#include <string>

#include <skein/diagram.hpp>

namespace oracle {

// Exponent of A -> coefficient.
using Poly = std::map<int, std::int64_t>;
// (exponent of A, degree of B, degree of C) -> coefficient.
using Poly3 = std::map<std::array<int, 3>, std::int64_t>;

int sign(const skein::Vertex& v);
int writhe(const skein::LongDiagram& d);
Poly bracket(const skein::LongDiagram& d);
Poly3 singular_bracket(const skein::LongDiagram& d);
Poly jones(const skein::LongDiagram& d);

// Poly3 at B = 1, C = -1.
Poly at_one_minus_one(const Poly3& p);
std::string to_string(const Poly& p);

}  // namespace oracle
