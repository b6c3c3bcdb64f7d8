#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace skein {

using Integer = boost::multiprecision::cpp_int;

// Element of Z[A, A^-1], stored as (exponent, coefficient) pairs sorted by
// exponent with no zero coefficients. Two values are equal iff their term
// vectors are equal.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, const Integer& coefficient = 1);
  static LaurentPoly a() { return monomial(1); }
  // Loop value -A^2 - A^-2.
  static const LaurentPoly& delta();
  // Builds from arbitrary (possibly repeated, unsorted, zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(int exponent) const;
  // Only meaningful for nonzero polynomials.
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }

  // Multiplication by A^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned n) const;

 private:
  std::vector<Term> terms_;
};

// Exponent triple (A, B, C) of a SkeinPoly monomial. B and C degrees are
// nonnegative.
struct SkeinExponent {
  int a = 0;
  int b = 0;
  int c = 0;
  friend auto operator<=>(const SkeinExponent&, const SkeinExponent&) = default;
};

// Element of Z[A, A^-1][B, C].
class SkeinPoly {
 public:
  using Term = std::pair<SkeinExponent, Integer>;

  SkeinPoly() = default;
  explicit SkeinPoly(const LaurentPoly& p);
  SkeinPoly(int constant);  // NOLINT(google-explicit-constructor)

  static SkeinPoly monomial(SkeinExponent e, const Integer& coefficient = 1);
  static SkeinPoly b() { return monomial({0, 1, 0}); }
  static SkeinPoly c() { return monomial({0, 0, 1}); }
  static SkeinPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(SkeinExponent e) const;
  // True iff every monomial has B-degree + C-degree == d.
  bool is_homogeneous(int d) const;

  SkeinPoly& operator+=(const SkeinPoly& other);
  SkeinPoly& operator-=(const SkeinPoly& other);
  SkeinPoly& operator*=(const SkeinPoly& other);

  friend SkeinPoly operator+(SkeinPoly lhs, const SkeinPoly& rhs) { return lhs += rhs; }
  friend SkeinPoly operator-(SkeinPoly lhs, const SkeinPoly& rhs) { return lhs -= rhs; }
  friend SkeinPoly operator*(const SkeinPoly& lhs, const SkeinPoly& rhs);
  friend SkeinPoly operator-(const SkeinPoly& p);
  friend bool operator==(const SkeinPoly&, const SkeinPoly&) = default;

 private:
  std::vector<Term> terms_;
};

// Substitutes B -> b, C -> c. eval_bc(p, 1, -1) is the specialization used
// by the crossing cocycle.
LaurentPoly eval_bc(const SkeinPoly& p, const LaurentPoly& b, const LaurentPoly& c);

// Substitutes B -> b, C -> c inside the skein ring, e.g. C -> -B.
SkeinPoly substitute_bc(const SkeinPoly& p, const SkeinPoly& b, const SkeinPoly& c);

// Returns r with r * divisor == dividend; throws NotDivisible otherwise.
LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor);

// A -> A^-1.
LaurentPoly mirror_a(const LaurentPoly& p);
SkeinPoly mirror_a(const SkeinPoly& p);

// Text form: ascending A-exponent, e.g. "A^-6 + A^-4 + A^4", "-2*A^3 + 1", "0".
std::string format(const LaurentPoly& p);
// Skein text form: monomials "c*A^e*B^i*C^j" ordered by (B, C, A) degree.
std::string format(const SkeinPoly& p);
LaurentPoly parse_laurent(std::string_view text);
SkeinPoly parse_skein(std::string_view text);

// JSON: [[exponent, coefficient], ...] and [[[a, b, c], coefficient], ...].
// Coefficients outside the int64 range are written as decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const SkeinPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);
SkeinPoly skein_from_json(const nlohmann::json& j);

}  // namespace skein
