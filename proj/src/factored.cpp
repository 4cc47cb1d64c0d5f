#include "coulomb/factored.hpp"

#include <algorithm>
#include <sstream>

#include "coulomb/errors.hpp"

namespace coulomb {

FactoredPoly FactoredPoly::from(const Poly& base, std::int32_t exp) {
  FactoredPoly f;
  f.mul(base, exp);
  return f;
}

FactoredPoly& FactoredPoly::mul(const Poly& base, std::int32_t exp) {
  if (exp == 0) return *this;
  if (base.is_zero()) throw MathError("zero factor in a factored product");
  auto [unit, normalized] = base.laurent_normalized();
  unit_ = unit_.times(unit.power(exp));
  Rat lc = normalized.leading_coefficient();
  scalar_ *= rat_pow(lc, exp);
  if (normalized.term_count() == 1) {
    // Purely a unit. Laurent variables were already stripped into `unit`,
    // but a residual monomial in the remaining variables (e.g. the mu of a
    // base 2*mu) still has to be kept.
    unit_ = unit_.times(normalized.terms().begin()->first.power(exp));
    return *this;
  }
  Poly monic = normalized.scaled(1 / lc);
  for (auto& [b, e] : factors_) {
    if (b == monic) {
      e += exp;
      if (e == 0)
        factors_.erase(std::remove_if(factors_.begin(), factors_.end(),
                                      [&](const auto& f) { return f.second == 0; }),
                       factors_.end());
      return *this;
    }
  }
  factors_.emplace_back(std::move(monic), exp);
  return *this;
}

FactoredPoly& FactoredPoly::mul(const FactoredPoly& other) {
  scalar_ *= other.scalar_;
  unit_ = unit_.times(other.unit_);
  for (const auto& [b, e] : other.factors_) mul(b, e);
  return *this;
}

FactoredPoly& FactoredPoly::mul_scalar(const Rat& c) {
  if (c == 0) throw MathError("zero factor in a factored product");
  scalar_ *= c;
  return *this;
}

FactoredPoly FactoredPoly::inverse() const {
  FactoredPoly inv;
  inv.scalar_ = 1 / scalar_;
  inv.unit_ = unit_.power(-1);
  inv.factors_ = factors_;
  for (auto& [b, e] : inv.factors_) e = -e;
  return inv;
}

bool FactoredPoly::has_negative_factor_exponent() const {
  for (const auto& [b, e] : factors_)
    if (e < 0) return true;
  return false;
}

Poly FactoredPoly::expand() const {
  if (has_negative_factor_exponent())
    throw MathError("cannot expand a factored product with a proper denominator");
  Poly out = Poly::term(unit_, scalar_);
  for (const auto& [b, e] : factors_) out *= b.pow(e);
  return out;
}

std::optional<Poly> FactoredPoly::divide_into(const Poly& p) const {
  if (p.is_zero()) return Poly();
  // Work on the normalized part; monomial units divide freely.
  auto [punit, pnorm] = p.laurent_normalized();
  Poly current = pnorm;
  for (const auto& [b, e] : factors_) {
    for (std::int32_t i = 0; i < e; ++i) {
      auto q = current.divided_by(b);
      if (!q) return std::nullopt;
      current = std::move(*q);
    }
    for (std::int32_t i = 0; i > e; --i) current *= b;
  }
  return current.times(punit.times(unit_.power(-1)), 1 / scalar_);
}

std::string FactoredPoly::str() const {
  std::ostringstream out;
  bool lead = true;
  auto sep = [&] {
    if (!lead) out << " * ";
    lead = false;
  };
  if (scalar_ != 1) {
    sep();
    out << rat_to_string(scalar_);
  }
  if (!unit_.is_one()) {
    sep();
    out << Poly::term(unit_, 1).str();
  }
  for (const auto& [b, e] : factors_) {
    sep();
    out << "(" << b.str() << ")";
    if (e != 1) out << "^" << e;
  }
  if (lead) out << "1";
  return out.str();
}

nlohmann::json FactoredPoly::to_json() const {
  nlohmann::json j;
  j["scalar"] = rat_to_string(scalar_);
  j["unit"] = Poly::term(unit_, 1).str();
  j["factors"] = nlohmann::json::array();
  for (const auto& [b, e] : factors_) j["factors"].push_back({{"base", b.str()}, {"exp", e}});
  return j;
}

RationalPoly reduce(Poly num, FactoredPoly den) {
  if (den.has_negative_factor_exponent()) {
    // Flip inverted denominator factors into the numerator.
    FactoredPoly flat;
    for (const auto& [b, e] : den.factors()) {
      if (e < 0)
        for (std::int32_t i = 0; i > e; --i) num *= b;
      else
        flat.mul(b, e);
    }
    flat.mul_scalar(den.scalar());
    flat.mul(Poly::term(den.unit(), 1), 1);
    den = std::move(flat);
  }
  // Push the denominator's invertible part into the numerator.
  num = num.times(den.unit().power(-1), 1 / den.scalar());
  FactoredPoly out_den;
  if (num.is_zero()) return {Poly(), out_den};
  auto [nunit, nnorm] = num.laurent_normalized();
  for (const auto& [b, e] : den.factors()) {
    std::int32_t remaining = e;
    while (remaining > 0) {
      auto q = nnorm.divided_by(b);
      if (!q) break;
      nnorm = std::move(*q);
      --remaining;
    }
    if (remaining > 0) out_den.mul(b, remaining);
  }
  return {nnorm.times(nunit, 1), out_den};
}

RationalPoly rational_add(const RationalPoly& a_raw, const RationalPoly& b_raw) {
  // Normalize first so both denominators are positive-exponent factor lists.
  RationalPoly a = reduce(a_raw.num, a_raw.den);
  RationalPoly b = reduce(b_raw.num, b_raw.den);
  // Common denominator by per-factor maxima.
  FactoredPoly common = a.den;
  for (const auto& [base, be] : b.den.factors()) {
    std::int32_t have = 0;
    for (const auto& [abase, ae] : a.den.factors())
      if (abase == base) have = ae;
    if (be > have) common.mul(base, be - have);
  }
  auto lift = [&common](const RationalPoly& r) {
    Poly n = r.num;
    for (const auto& [base, ce] : common.factors()) {
      std::int32_t have = 0;
      for (const auto& [rbase, re] : r.den.factors())
        if (rbase == base) have = re;
      for (std::int32_t i = have; i < ce; ++i) n *= base;
    }
    return n;
  };
  return reduce(lift(a) + lift(b), common);
}

RationalPoly rational_mul(const RationalPoly& a, const RationalPoly& b) {
  FactoredPoly den = a.den;
  den.mul(b.den);
  return reduce(a.num * b.num, den);
}

RationalPoly rational_pow(const RationalPoly& a, std::int32_t n) {
  if (n == 0) return RationalPoly::from(Poly::constant(1));
  RationalPoly base = reduce(a.num, a.den);
  if (n < 0) {
    if (base.num.is_zero()) throw MathError("inverting a zero fraction");
    // After reduce() the denominator has positive exponents only, so it
    // expands; the inverse swaps it with the numerator.
    base = reduce(base.den.expand(), FactoredPoly::from(base.num));
    n = -n;
  }
  RationalPoly out = RationalPoly::from(Poly::constant(1));
  for (std::int32_t i = 0; i < n; ++i) out = rational_mul(out, base);
  return out;
}

RationalPoly substitute_rational(const Poly& p, const std::map<Var, RationalPoly>& bindings) {
  RationalPoly total = RationalPoly::from(Poly());
  for (const auto& [m, c] : p.terms()) {
    RationalPoly term = RationalPoly::from(Poly::constant(c));
    Monomial untouched = Monomial::one();
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        untouched = untouched.times(Monomial::of(v, e));
        continue;
      }
      term = rational_mul(term, rational_pow(it->second, e));
    }
    term.num = term.num.times(untouched, 1);
    total = rational_add(total, term);
  }
  return total;
}

}  // namespace coulomb
