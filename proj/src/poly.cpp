#include "coulomb/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "coulomb/errors.hpp"

namespace coulomb {

Poly Poly::constant(Rat c) { return term(Monomial::one(), std::move(c)); }

Poly Poly::variable(Var v, std::int32_t exp) {
  return term(Monomial::of(v, exp), Rat(1));
}

Poly Poly::term(Monomial m, Rat c) {
  Poly p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Poly::constant_part() const { return coefficient(Monomial::one()); }

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw MathError("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& Poly::leading_coefficient() const {
  if (terms_.empty()) throw MathError("leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

std::int64_t Poly::total_degree() const {
  std::int64_t d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int64_t t = m.total_degree();
    if (first || t > d) d = t;
    first = false;
  }
  return d;
}

std::int64_t Poly::degree_in(VarKind kind) const {
  std::int64_t d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int64_t t = m.degree_in(kind);
    if (first || t > d) d = t;
    first = false;
  }
  return d;
}

std::int64_t Poly::degree_in(std::initializer_list<VarKind> kinds) const {
  std::int64_t d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int64_t t = 0;
    for (VarKind k : kinds) t += m.degree_in(k);
    if (first || t > d) d = t;
    first = false;
  }
  return d;
}

std::int32_t Poly::min_exponent(const Var& v) const {
  std::int32_t e = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int32_t t = m.exponent(v);
    if (first || t < e) e = t;
    first = false;
  }
  return e;
}

std::int32_t Poly::max_exponent(const Var& v) const {
  std::int32_t e = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int32_t t = m.exponent(v);
    if (first || t > e) e = t;
    first = false;
  }
  return e;
}

bool Poly::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.has_negative(); });
}

bool Poly::uses_kind(VarKind kind) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [kind](const auto& t) { return t.first.uses_kind(kind); });
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma.times(mb), ca * cb);
  return out;
}

Poly Poly::times(const Monomial& m, const Rat& c) const {
  Poly out;
  if (c == 0) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm.times(m), cc * c);
  return out;
}

Poly Poly::scaled(const Rat& c) const { return times(Monomial::one(), c); }

Poly Poly::pow(std::int32_t n) const {
  if (n < 0) {
    // Only monomials are invertible.
    if (terms_.size() != 1)
      throw MathError("negative power of a non-monomial polynomial");
    const auto& [m, c] = *terms_.begin();
    Rat r(1);
    for (std::int32_t i = 0; i < -n; ++i) r /= c;
    return Poly::term(m.power(n), r);
  }
  Poly result = Poly::constant(1);
  Poly base = *this;
  std::uint32_t e = static_cast<std::uint32_t>(n);
  while (e > 0) {
    if (e & 1) result *= base;
    base = (e >>= 1) > 0 ? base * base : base;
  }
  return result;
}

std::optional<Poly> Poly::divided_by(const Poly& divisor) const {
  if (divisor.is_zero()) throw MathError("division by the zero polynomial");
  if (has_negative_exponents() || divisor.has_negative_exponents())
    throw MathError("exact division requires normalized (nonnegative-exponent) input");
  Poly quotient;
  Poly rem = *this;
  const Monomial& dm = divisor.leading_monomial();
  const Rat& dc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!dm.divides(rm)) return std::nullopt;
    Monomial qm = rm.over(dm);
    Rat qc = rem.leading_coefficient() / dc;
    quotient.add_term(qm, qc);
    rem -= divisor.times(qm, qc);
  }
  return quotient;
}

LaurentParts Poly::laurent_normalized() const {
  if (is_zero()) return {Monomial::one(), Poly()};
  // Every Laurent-allowed variable that appears anywhere, with its minimum
  // exponent across all terms (absence in a term counts as exponent 0,
  // which Monomial::exponent already reports).
  std::map<Var, std::int32_t> mins;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (kind_is_laurent(v.kind)) mins.emplace(v, std::numeric_limits<std::int32_t>::max());
  for (auto& [v, e] : mins)
    for (const auto& [m, c] : terms_) e = std::min(e, m.exponent(v));
  Monomial unit;
  for (const auto& [v, e] : mins)
    if (e != 0) unit = unit.times(Monomial::of(v, e));
  if (unit.is_one()) return {Monomial::one(), *this};
  Poly normalized;
  for (const auto& [m, c] : terms_) normalized.terms_.emplace(m.over(unit), c);
  return {unit, normalized};
}

Poly Poly::substituted(const Var& v, const Poly& replacement) const {
  // Group by exponent of v, then expand.
  std::map<std::int32_t, Poly> buckets;
  for (const auto& [m, c] : terms_) {
    std::int32_t e = m.exponent(v);
    buckets[e].add_term(m.over(Monomial::of(v, e)), c);
  }
  const bool single = replacement.term_count() == 1;
  Poly out;
  for (const auto& [e, part] : buckets) {
    if (e == 0) {
      out += part;
    } else if (e > 0) {
      out += part * replacement.pow(e);
    } else {
      if (!single)
        throw MathError("substituting a sum into a negative power of " + var_name(v));
      out += part * replacement.pow(e);
    }
  }
  return out;
}

Poly Poly::substituted_many(const std::map<Var, Poly>& bindings) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(c);
    Monomial untouched = Monomial::one();
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        untouched = untouched.times(Monomial::of(v, e));
        continue;
      }
      if (e < 0 && it->second.term_count() != 1)
        throw MathError("substituting a sum into a negative power of " + var_name(v));
      term *= it->second.pow(e);
    }
    out += term.times(untouched, 1);
  }
  return out;
}

Rat Poly::eval_rational(const std::map<Var, Rat>& point) const {
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end())
        throw UsageError("unbound variable " + var_name(v) + " in evaluation");
      if (it->second == 0 && e < 0) throw MathError("zero base with negative exponent");
      Rat base = it->second;
      for (std::int32_t i = 0; i < std::abs(e); ++i)
        e > 0 ? term *= base : term /= base;
    }
    total += term;
  }
  return total;
}

std::complex<double> Poly::eval_complex(
    const std::map<Var, std::complex<double>>& point) const {
  std::complex<double> total = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term(c.get_d(), 0.0);
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end())
        throw UsageError("unbound variable " + var_name(v) + " in evaluation");
      std::complex<double> base = it->second;
      std::complex<double> p = 1.0;
      for (std::int32_t i = 0; i < std::abs(e); ++i) p *= base;
      term = e >= 0 ? term * p : term / p;
    }
    total += term;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending grlex.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool coeff_shown = false;
    if (m.is_one() || a != 1) {
      out << rat_to_string(a);
      coeff_shown = true;
    }
    bool leading_var = !coeff_shown;
    for (const auto& [v, e] : m.factors()) {
      if (!leading_var) out << "*";
      leading_var = false;
      out << var_name(v);
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace coulomb
