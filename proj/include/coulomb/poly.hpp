#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>

#include "coulomb/monomial.hpp"
#include "coulomb/rational.hpp"

namespace coulomb {

class Poly;

// Result of pulling a monomial unit out of a Laurent polynomial; the source
// equals unit * normalized with every Laurent variable's minimum exponent in
// normalized equal to zero.
struct LaurentParts;

// Sparse multivariate (Laurent) polynomial with exact rational coefficients.
// Terms are kept in ascending graded-lex order, so the leading term is the
// last map entry. Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexLess>;

  Poly() = default;

  static Poly constant(Rat c);
  static Poly constant(long c) { return constant(Rat(c)); }
  static Poly variable(Var v, std::int32_t exp = 1);
  static Poly term(Monomial m, Rat c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The coefficient of the trivial monomial (the value, if constant).
  Rat constant_part() const;
  Rat coefficient(const Monomial& m) const;
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const Rat& leading_coefficient() const;

  std::int64_t total_degree() const;  // max term degree; 0 for the zero poly
  std::int64_t degree_in(VarKind kind) const;
  std::int64_t degree_in(std::initializer_list<VarKind> kinds) const;
  std::int32_t min_exponent(const Var& v) const;
  std::int32_t max_exponent(const Var& v) const;
  bool has_negative_exponents() const;
  bool uses_kind(VarKind kind) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly times(const Monomial& m, const Rat& c) const;
  Poly scaled(const Rat& c) const;
  // Negative n requires a single-term (monomial) base.
  Poly pow(std::int32_t n) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  // Exact division. Returns nullopt when the divisor does not divide this
  // polynomial. Throws MathError for a zero divisor or for Laurent inputs
  // (normalize first) — the division order needs nonnegative exponents.
  std::optional<Poly> divided_by(const Poly& divisor) const;

  // Splits off the monomial unit that makes every Laurent-allowed variable
  // have minimum exponent zero: *this == unit * normalized.
  LaurentParts laurent_normalized() const;

  // var -> replacement (polynomial, no denominator). A multi-term
  // replacement requires the substituted exponents to be nonnegative; a
  // single-term replacement is inverted for negative exponents.
  Poly substituted(const Var& v, const Poly& replacement) const;

  // All bindings applied simultaneously (so swaps like t1 <-> t2 work);
  // unbound variables pass through. Same exponent rules as substituted().
  Poly substituted_many(const std::map<Var, Poly>& bindings) const;

  // All variables bound; negative exponents need nonzero values.
  Rat eval_rational(const std::map<Var, Rat>& point) const;
  std::complex<double> eval_complex(const std::map<Var, std::complex<double>>& point) const;

  // Canonical text form; grlex-descending terms, "p/q" coefficients.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rat& c);
  TermMap terms_;
};

struct LaurentParts {
  Monomial unit;
  Poly normalized;
};

inline Poly operator*(const Poly& p, const Rat& c) { return p.scaled(c); }
inline Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

}  // namespace coulomb
