#include "skein/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

#include "skein/errors.hpp"

namespace skein {

namespace {

template <class Key>
std::vector<std::pair<Key, Integer>> normalize(std::vector<std::pair<Key, Integer>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<Key, Integer>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

// Merge of two sorted term vectors with a sign on the right operand.
template <class Key>
std::vector<std::pair<Key, Integer>> merge(const std::vector<std::pair<Key, Integer>>& x,
                                           const std::vector<std::pair<Key, Integer>>& y,
                                           bool negate_y) {
  std::vector<std::pair<Key, Integer>> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, negate_y ? Integer(-y[j].second) : y[j].second);
      ++j;
    } else {
      Integer s = negate_y ? Integer(x[i].second - y[j].second) : Integer(x[i].second + y[j].second);
      if (s != 0) out.emplace_back(x[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

nlohmann::json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                          [](unsigned char ch) { return std::isdigit(ch); })) {
      throw ValidationError("coefficient string is not an integer: " + s);
    }
    return Integer(s);
  }
  throw ValidationError("coefficient must be an integer or a decimal string");
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace_back(exponent, coefficient);
  return p;
}

const LaurentPoly& LaurentPoly::delta() {
  static const LaurentPoly d = from_terms({{-2, -1}, {2, -1}});
  return d;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = normalize(std::move(terms));
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const int lo = lhs.min_exponent() + rhs.min_exponent();
  const int hi = lhs.max_exponent() + rhs.max_exponent();
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ex, cx] : lhs.terms()) {
    for (const auto& [ey, cy] : rhs.terms()) {
      dense[static_cast<std::size_t>(ex + ey - lo)] += cx * cy;
    }
  }
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) terms.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
  }
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly q = p;
  for (auto& t : q.terms_) t.second = -t.second;
  return q;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = 1;
  LaurentPoly base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

// ------------------------------------------------------------------ SkeinPoly

SkeinPoly::SkeinPoly(const LaurentPoly& p) {
  terms_.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) terms_.emplace_back(SkeinExponent{e, 0, 0}, c);
}

SkeinPoly::SkeinPoly(int constant) : SkeinPoly(LaurentPoly(constant)) {}

SkeinPoly SkeinPoly::monomial(SkeinExponent e, const Integer& coefficient) {
  if (e.b < 0 || e.c < 0) throw ValidationError("negative B or C degree");
  SkeinPoly p;
  if (coefficient != 0) p.terms_.emplace_back(e, coefficient);
  return p;
}

SkeinPoly SkeinPoly::from_terms(std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.first.b < 0 || t.first.c < 0) throw ValidationError("negative B or C degree");
  }
  SkeinPoly p;
  p.terms_ = normalize(std::move(terms));
  return p;
}

Integer SkeinPoly::coefficient(SkeinExponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const SkeinExponent& k) { return t.first < k; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

bool SkeinPoly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.first.b + t.first.c == d; });
}

SkeinPoly& SkeinPoly::operator+=(const SkeinPoly& other) {
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

SkeinPoly& SkeinPoly::operator-=(const SkeinPoly& other) {
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

SkeinPoly& SkeinPoly::operator*=(const SkeinPoly& other) {
  *this = *this * other;
  return *this;
}

SkeinPoly operator*(const SkeinPoly& lhs, const SkeinPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::map<SkeinExponent, Integer> acc;
  for (const auto& [ex, cx] : lhs.terms()) {
    for (const auto& [ey, cy] : rhs.terms()) {
      acc[SkeinExponent{ex.a + ey.a, ex.b + ey.b, ex.c + ey.c}] += cx * cy;
    }
  }
  SkeinPoly p;
  for (auto& [e, c] : acc) {
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
  }
  return p;
}

SkeinPoly operator-(const SkeinPoly& p) {
  SkeinPoly q = p;
  for (auto& t : q.terms_) t.second = -t.second;
  return q;
}

// ------------------------------------------------------------------ functions

LaurentPoly eval_bc(const SkeinPoly& p, const LaurentPoly& b, const LaurentPoly& c) {
  std::map<int, LaurentPoly> b_pow;
  std::map<int, LaurentPoly> c_pow;
  auto power = [](std::map<int, LaurentPoly>& cache, const LaurentPoly& base, int n) -> const LaurentPoly& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, base.pow(static_cast<unsigned>(n))).first;
    return it->second;
  };
  LaurentPoly out;
  for (const auto& [e, coef] : p.terms()) {
    out += LaurentPoly::monomial(e.a, coef) * power(b_pow, b, e.b) * power(c_pow, c, e.c);
  }
  return out;
}

SkeinPoly substitute_bc(const SkeinPoly& p, const SkeinPoly& b, const SkeinPoly& c) {
  std::map<int, SkeinPoly> b_pow;
  std::map<int, SkeinPoly> c_pow;
  auto power = [](std::map<int, SkeinPoly>& cache, const SkeinPoly& base, int n) -> const SkeinPoly& {
    auto it = cache.find(n);
    if (it == cache.end()) {
      SkeinPoly r = 1;
      for (int i = 0; i < n; ++i) r *= base;
      it = cache.emplace(n, std::move(r)).first;
    }
    return it->second;
  };
  SkeinPoly out;
  for (const auto& [e, coef] : p.terms()) {
    out += SkeinPoly::monomial({e.a, 0, 0}, coef) * power(b_pow, b, e.b) * power(c_pow, c, e.c);
  }
  return out;
}

LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw NotDivisible("division by the zero polynomial");
  // Long division from the top degree down; the divisor's leading
  // coefficient must divide each leading coefficient of the remainder.
  LaurentPoly remainder = dividend;
  std::vector<LaurentPoly::Term> quotient;
  const int lead_exp = divisor.max_exponent();
  const Integer& lead = divisor.terms().back().second;
  const int span = divisor.max_exponent() - divisor.min_exponent();
  while (!remainder.is_zero()) {
    if (remainder.max_exponent() - remainder.min_exponent() < span) {
      throw NotDivisible(format(dividend) + " is not divisible by " + format(divisor));
    }
    const auto& top = remainder.terms().back();
    if (top.second % lead != 0) {
      throw NotDivisible(format(dividend) + " is not divisible by " + format(divisor));
    }
    LaurentPoly step = LaurentPoly::monomial(top.first - lead_exp, top.second / lead);
    quotient.emplace_back(top.first - lead_exp, top.second / lead);
    remainder -= step * divisor;
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly mirror_a(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) terms.emplace_back(-e, c);
  return LaurentPoly::from_terms(std::move(terms));
}

SkeinPoly mirror_a(const SkeinPoly& p) {
  std::vector<SkeinPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) terms.emplace_back(SkeinExponent{-e.a, e.b, e.c}, c);
  return SkeinPoly::from_terms(std::move(terms));
}

// ------------------------------------------------------------------ text

namespace {

// Appends "coefficient * monomial" with the sign folded into the separator.
void append_term(std::string& out, const Integer& coef, const std::string& mono) {
  const bool negative = coef < 0;
  const Integer mag = negative ? Integer(-coef) : coef;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.str();
  } else if (mag == 1) {
    out += mono;
  } else {
    out += mag.str() + "*" + mono;
  }
}

std::string var_power(char var, int e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

std::string join_vars(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

// Recursive-descent parser over the monomial grammar shared by both rings:
//   poly  := ['+'|'-'] term (('+'|'-') term)*
//   term  := factor ('*' factor)*
//   factor:= integer | var ['^' exp]
//   exp   := ['-'|'+'] digits | '{' ['-'|'+'] digits '}'
class TermParser {
 public:
  explicit TermParser(std::string_view text, bool allow_bc) : s_(text), allow_bc_(allow_bc) {}

  std::vector<SkeinPoly::Term> parse() {
    std::vector<SkeinPoly::Term> terms;
    skip_ws();
    if (at_end()) throw SyntaxError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw SyntaxError("expected '+' or '-'", pos_);
      }
      skip_ws();
      auto term = parse_term();
      if (sign < 0) term.second = -term.second;
      terms.push_back(std::move(term));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return terms;
  }

 private:
  SkeinPoly::Term parse_term() {
    SkeinExponent e;
    Integer coef = 1;
    bool any = false;
    while (true) {
      skip_ws();
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coef *= parse_digits();
      } else if (ch == 'A' || ch == 'a') {
        ++pos_;
        e.a += parse_exponent();
      } else if (allow_bc_ && (ch == 'B' || ch == 'b')) {
        ++pos_;
        e.b += parse_nonneg_exponent();
      } else if (allow_bc_ && (ch == 'C' || ch == 'c')) {
        ++pos_;
        e.c += parse_nonneg_exponent();
      } else {
        throw SyntaxError(any ? "expected a factor after '*'" : "expected a monomial", pos_);
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {e, coef};
  }

  int parse_nonneg_exponent() {
    const std::size_t at = pos_;
    int e = parse_exponent();
    if (e < 0) throw SyntaxError("B and C exponents must be nonnegative", at);
    return e;
  }

  int parse_exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    bool braced = false;
    if (peek() == '{') {
      braced = true;
      ++pos_;
      skip_ws();
    }
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    skip_ws();
    const std::size_t at = pos_;
    Integer mag = parse_digits();
    if (mag > 1000000) throw SyntaxError("exponent out of range", at);
    if (braced) {
      skip_ws();
      if (peek() != '}') throw SyntaxError("expected '}'", pos_);
      ++pos_;
    }
    return sign * static_cast<int>(mag);
  }

  Integer parse_digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError("expected digits", pos_);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  std::string_view s_;
  bool allow_bc_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) append_term(out, c, var_power('A', e));
  return out;
}

std::string format(const SkeinPoly& p) {
  if (p.is_zero()) return "0";
  auto terms = p.terms();
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first.b, x.first.c, x.first.a) < std::tie(y.first.b, y.first.c, y.first.a);
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    append_term(out, c, join_vars({var_power('A', e.a), var_power('B', e.b), var_power('C', e.c)}));
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  auto terms = TermParser(text, false).parse();
  std::vector<LaurentPoly::Term> out;
  out.reserve(terms.size());
  for (auto& [e, c] : terms) out.emplace_back(e.a, std::move(c));
  return LaurentPoly::from_terms(std::move(out));
}

SkeinPoly parse_skein(std::string_view text) {
  return SkeinPoly::from_terms(TermParser(text, true).parse());
}

// ------------------------------------------------------------------ json

nlohmann::json to_json(const LaurentPoly& p) {
  auto j = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({e, integer_to_json(c)});
  return j;
}

nlohmann::json to_json(const SkeinPoly& p) {
  auto j = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    j.push_back({nlohmann::json::array({e.a, e.b, e.c}), integer_to_json(c)});
  }
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("polynomial JSON must be an array of [exponent, coefficient]");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) {
      throw ValidationError("malformed polynomial term: " + t.dump());
    }
    terms.emplace_back(t[0].get<int>(), integer_from_json(t[1]));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

SkeinPoly skein_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("skein JSON must be an array of [[a, b, c], coefficient]");
  std::vector<SkeinPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 3) {
      throw ValidationError("malformed skein term: " + t.dump());
    }
    SkeinExponent e{t[0][0].get<int>(), t[0][1].get<int>(), t[0][2].get<int>()};
    terms.emplace_back(e, integer_from_json(t[1]));
  }
  return SkeinPoly::from_terms(std::move(terms));
}

}  // namespace skein
