#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coulomb/variables.hpp"

namespace coulomb {

// A power product over the variable universe: sorted (Var, exponent) pairs,
// exponents nonzero (possibly negative on Laurent-allowed variables).
class Monomial {
 public:
  using Factor = std::pair<Var, std::int32_t>;

  Monomial() = default;
  static Monomial one() { return {}; }
  static Monomial of(Var v, std::int32_t e) {
    Monomial m;
    if (e != 0) m.factors_.push_back({v, e});
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  std::int32_t exponent(const Var& v) const {
    for (const auto& [w, e] : factors_)
      if (w == v) return e;
    return 0;
  }

  std::int64_t total_degree() const {
    std::int64_t d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
  }

  std::int64_t degree_in(VarKind kind) const {
    std::int64_t d = 0;
    for (const auto& [v, e] : factors_)
      if (v.kind == kind) d += e;
    return d;
  }

  bool has_negative() const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.second < 0; });
  }

  bool uses_kind(VarKind kind) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [kind](const Factor& f) { return f.first.kind == kind; });
  }

  Monomial times(const Monomial& other) const { return merged(other, +1); }
  // Componentwise exponent subtraction; may produce negative exponents.
  Monomial over(const Monomial& other) const { return merged(other, -1); }

  // Divisibility in the polynomial (nonnegative-exponent) sense.
  bool divides(const Monomial& other) const {
    for (const auto& [v, e] : factors_)
      if (e > other.exponent(v)) return false;
    return true;
  }

  Monomial power(std::int32_t n) const {
    Monomial m;
    if (n == 0) return m;
    m.factors_ = factors_;
    for (auto& f : m.factors_) f.second *= n;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Monomial merged(const Monomial& other, int sign) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = other.factors_.begin(), be = other.factors_.end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        out.factors_.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        out.factors_.push_back({b->first, sign * b->second});
        ++b;
      } else {
        std::int32_t e = a->second + sign * b->second;
        if (e != 0) out.factors_.push_back({a->first, e});
        ++a, ++b;
      }
    }
    return out;
  }

  std::vector<Factor> factors_;
};

// Graded-lexicographic order: total degree first, ties broken
// lexicographically in the fixed variable order (an earlier variable with a
// larger exponent wins). Total on all monomials; used as the division order.
inline std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  auto i = a.factors().begin(), ie = a.factors().end();
  auto j = b.factors().begin(), je = b.factors().end();
  while (i != ie || j != je) {
    // Missing variable = exponent 0.
    if (j == je || (i != ie && i->first < j->first)) {
      if (i->second != 0) return i->second > 0 ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
      ++i;
    } else if (i == ie || j->first < i->first) {
      if (j->second != 0) return j->second > 0 ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
      ++j;
    } else {
      if (auto c = i->second <=> j->second; c != 0) return c;
      ++i, ++j;
    }
  }
  return std::strong_ordering::equal;
}

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) == std::strong_ordering::less;
  }
};

}  // namespace coulomb
