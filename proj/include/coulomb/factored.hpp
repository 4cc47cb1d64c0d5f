#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coulomb/poly.hpp"

namespace coulomb {

// A nonzero product  scalar * unit * prod_i base_i^{exp_i}  kept in factored
// form. Stored bases are canonical: at least two terms, monic leading
// coefficient, minimum Laurent exponent zero — every single-term factor is
// absorbed into the scalar and the monomial unit, so equal bases merge and
// cancellation is per-factor exact division.
class FactoredPoly {
 public:
  FactoredPoly() = default;  // the constant 1

  static FactoredPoly from(const Poly& base, std::int32_t exp = 1);

  FactoredPoly& mul(const Poly& base, std::int32_t exp = 1);
  FactoredPoly& mul(const FactoredPoly& other);
  FactoredPoly& mul_scalar(const Rat& c);
  FactoredPoly inverse() const;

  const Rat& scalar() const { return scalar_; }
  const Monomial& unit() const { return unit_; }
  const std::vector<std::pair<Poly, std::int32_t>>& factors() const { return factors_; }

  bool is_one() const { return scalar_ == 1 && unit_.is_one() && factors_.empty(); }
  bool has_negative_factor_exponent() const;

  // Total multiplied-out polynomial. Negative factor exponents cannot be
  // expanded and raise MathError.
  Poly expand() const;

  // Exact quotient p / (this product), nullopt when not divisible. Negative
  // factor exponents multiply instead of divide. Laurent units divide
  // unconditionally (they are units); p itself may be Laurent.
  std::optional<Poly> divide_into(const Poly& p) const;

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  Rat scalar_ = 1;
  Monomial unit_;
  std::vector<std::pair<Poly, std::int32_t>> factors_;
};

// Exact fraction num / den with the denominator in factored form. The
// denominator is normalized to scalar 1 and trivial unit (both are pushed
// into the numerator, which may be Laurent).
struct RationalPoly {
  Poly num;
  FactoredPoly den;

  static RationalPoly from(Poly p) { return {std::move(p), FactoredPoly()}; }
  bool is_polynomial() const { return den.is_one(); }
};

// num/den normalization + per-factor cancellation of den into num.
RationalPoly reduce(Poly num, FactoredPoly den);

RationalPoly rational_add(const RationalPoly& a, const RationalPoly& b);
RationalPoly rational_mul(const RationalPoly& a, const RationalPoly& b);
// Negative n inverts (numerator must be nonzero).
RationalPoly rational_pow(const RationalPoly& a, std::int32_t n);

// Simultaneous substitution with rational replacement values, reduced.
RationalPoly substitute_rational(const Poly& p, const std::map<Var, RationalPoly>& bindings);

}  // namespace coulomb
