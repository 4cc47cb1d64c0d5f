#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coulomb/errors.hpp"
#include "coulomb/parse.hpp"
#include "coulomb/poly.hpp"
#include "coulomb/rational.hpp"

using namespace coulomb;

namespace {

Poly P(const std::string& text, std::int32_t rank = 1) { return parse_poly(text, rank); }

// Dense evaluation oracle: compare polynomials by sampling at random rational
// points. With the degrees in play, agreement at several points on top of a
// structural check is decisive; most tests also compare exactly.
Rat eval_at(const Poly& p, const std::map<Var, Rat>& point) { return p.eval_rational(point); }

std::map<Var, Rat> random_point(std::mt19937_64& rng, std::int32_t rank) {
  std::uniform_int_distribution<int> num(1, 40);
  std::map<Var, Rat> pt;
  auto draw = [&] { return make_rat(num(rng), num(rng) + 3); };
  pt[var_mu()] = draw();
  pt[var_h()] = draw();
  pt[var_m()] = draw();
  pt[var_q()] = draw();
  pt[var_u()] = draw();
  pt[var_v()] = draw();
  for (std::int32_t i = 0; i < rank; ++i) {
    pt[var_tau(i)] = draw();
    pt[var_z(i)] = draw();
    pt[var_x(i)] = draw();
  }
  return pt;
}

}  // namespace

TEST_CASE("rational strings") {
  CHECK(rat_from_string("3/6").value() == Rat(1, 2));
  CHECK(rat_from_string("-4").value() == Rat(-4));
  CHECK(rat_to_string(Rat(-7, 3)) == "-7/3");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(!rat_from_string("1/0").has_value());
  CHECK(!rat_from_string("2.5").has_value());
  CHECK(!rat_from_string("").has_value());
  CHECK(is_integer(Rat(8, 2)));
  CHECK(!is_integer(Rat(1, 2)));
}

TEST_CASE("variable names round-trip") {
  for (Var v : {var_mu(), var_h(), var_m(), var_q(), var_tau(0), var_tau(4), var_z(1), var_x(2),
                var_u(), var_v()}) {
    auto back = var_from_name(var_name(v));
    REQUIRE(back.has_value());
    CHECK(*back == v);
  }
  CHECK(var_from_name("t") == var_tau(0));
  CHECK(var_from_name("z") == var_z(0));
  CHECK(var_from_name("x") == var_x(0));
  CHECK(!var_from_name("t0").has_value());
  CHECK(!var_from_name("w").has_value());
  CHECK(!var_from_name("z01").has_value());
}

TEST_CASE("monomial ordering is graded lexicographic") {
  Monomial mu2 = Monomial::of(var_mu(), 2);
  Monomial mutau = Monomial::of(var_mu(), 1).times(Monomial::of(var_tau(0), 1));
  Monomial tau2 = Monomial::of(var_tau(0), 2);
  Monomial mu = Monomial::of(var_mu(), 1);
  // Same total degree: earlier variable with larger exponent wins.
  CHECK(grlex_compare(mu2, mutau) > 0);
  CHECK(grlex_compare(mutau, tau2) > 0);
  // Degree dominates.
  CHECK(grlex_compare(mu, tau2) < 0);
  CHECK(grlex_compare(mu, mu) == 0);
}

TEST_CASE("polynomial arithmetic basics") {
  Poly p = P("(mu - t) * (mu + t)");
  CHECK(p == P("mu^2 - t^2"));
  CHECK(p.total_degree() == 2);
  CHECK(p.term_count() == 2);
  CHECK((p - p).is_zero());
  CHECK(P("2 * mu + 3 * mu") == P("5*mu"));
  CHECK(P("1/2 * mu + 1/3 * mu") == P("5/6 * mu"));
  CHECK(P("mu - mu").is_zero());
  CHECK(P("(1 + z)^3") == P("1 + 3*z + 3*z^2 + z^3"));
}

TEST_CASE("exact division") {
  auto q = P("mu^2 - t^2").divided_by(P("mu - t"));
  REQUIRE(q.has_value());
  CHECK(*q == P("mu + t"));
  CHECK(!P("mu^2 + t^2").divided_by(P("mu - t")).has_value());
  CHECK(!P("mu^2 - t^2 + 1").divided_by(P("mu - t")).has_value());
  CHECK_THROWS_AS((void)P("mu").divided_by(Poly()), MathError);
  CHECK_THROWS_AS((void)P("z^-1").divided_by(P("z")), MathError);

  // Structured randomized check: (a*b)/b == a.
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a, b;
    for (int i = 0; i < 4; ++i) {
      Monomial ma = Monomial::of(var_mu(), trial % 3).times(Monomial::of(var_tau(0), i));
      Monomial mb = Monomial::of(var_tau(0), trial % 2).times(Monomial::of(var_mu(), i % 2));
      a = a + Poly::term(ma, coeff(rng));
      b = b + Poly::term(mb, coeff(rng) * 2 + 1);
    }
    if (a.is_zero() || b.is_zero()) continue;
    auto back = (a * b).divided_by(b);
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
}

TEST_CASE("laurent normalization") {
  SUBCASE("pure positive monomial is its own unit") {
    auto [unit, normalized] = P("x^3").laurent_normalized();
    CHECK(unit == Monomial::of(var_x(0), 3));
    CHECK(normalized == P("1"));
  }
  SUBCASE("mixed negative example") {
    auto [unit, normalized] = P("m^-2 * x * (1 - x^-1)^2").laurent_normalized();
    CHECK(unit == Monomial::of(var_m(), -2).times(Monomial::of(var_x(0), -1)));
    CHECK(normalized == P("(x - 1)^2"));
  }
  SUBCASE("polynomial variables are untouched") {
    auto [unit, normalized] = P("mu^2*z^-1 + mu^3").laurent_normalized();
    CHECK(unit == Monomial::of(var_z(0), -1));
    CHECK(normalized == P("mu^2 + mu^3*z"));
  }
  SUBCASE("idempotent") {
    Poly p = P("z^-3*(1 + z)*(2 - t^-1)");
    auto first = p.laurent_normalized();
    auto second = first.normalized.laurent_normalized();
    CHECK(second.unit.is_one());
    CHECK(second.normalized == first.normalized);
  }
  SUBCASE("zero") {
    auto [unit, normalized] = Poly().laurent_normalized();
    CHECK(unit.is_one());
    CHECK(normalized.is_zero());
  }
}

TEST_CASE("substitution") {
  // z -> (mu + t)/(mu - t) * z is not polynomial; instead check the
  // polynomial substitutions used by the library.
  SUBCASE("multi-term replacement") {
    Poly p = P("t^2 + t + 1");
    CHECK(p.substituted(var_tau(0), P("t - h")) == P("(t-h)^2 + t - h + 1"));
  }
  SUBCASE("monomial replacement handles negative exponents") {
    Poly p = P("z + z^-1");
    Poly r = p.substituted(var_z(0), P("2*z"));
    CHECK(r == P("2*z + 1/2*z^-1"));
  }
  SUBCASE("negation of t") {
    Poly p = P("(mu + t)*(mu + 2*t)");
    CHECK(p.substituted(var_tau(0), P("-t")) == P("(mu - t)*(mu - 2*t)"));
  }
  SUBCASE("multi-term into negative exponent throws") {
    CHECK_THROWS_AS((void)P("z^-1").substituted(var_z(0), P("z + 1")), MathError);
  }
  SUBCASE("random evaluation consistency") {
    std::mt19937_64 rng(77);
    Poly p = P("3*t^2*z - 2*mu*t + z^2 - 1/3");
    Poly repl = P("2*t + mu");
    Poly subst = p.substituted(var_tau(0), repl);
    for (int i = 0; i < 5; ++i) {
      auto pt = random_point(rng, 1);
      auto shifted = pt;
      shifted[var_tau(0)] = eval_at(repl, pt);
      CHECK(eval_at(subst, pt) == eval_at(p, shifted));
    }
  }
}

TEST_CASE("powers") {
  CHECK(P("(mu + t)^4") == P("(mu+t)^2 * (mu+t)^2"));
  CHECK(P("z^-2") * P("z^2") == P("1"));
  CHECK(P("(2*z)^-1") == P("1/2 * z^-1"));
  CHECK(P("(4*m*x^2)^-2") == P("1/16 * m^-2 * x^-4"));
  CHECK_THROWS_AS((void)P("1 + z", 1).pow(-1), MathError);
  CHECK(P("mu").pow(0) == P("1"));
}

TEST_CASE("printing and re-parsing") {
  std::vector<std::string> samples = {
      "mu^2 - t^2",
      "z^-1 * t",
      "(mu - t) * z",
      "1 - m^-1 * x^-2",
      "3/4 * mu * t1 - t1^2 + u * v",
      "q^-1 * x + q * x^-1",
  };
  for (const auto& s : samples) {
    Poly p = P(s, 1);
    Poly again = P(p.str(), 1);
    CHECK(again == p);
  }
  CHECK(P("mu^2 - t^2").str() == "mu^2 - t^2");
  CHECK(P("- mu").str() == "-mu");
  CHECK(Poly().str() == "0");
  CHECK(P("z^-1*t").str() == "t*z^-1");
  CHECK(P("1/2").str() == "1/2");
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS((void)P("mu +"), UsageError);
  CHECK_THROWS_AS((void)P("(mu"), UsageError);
  CHECK_THROWS_AS((void)P("mu^-1"), UsageError);       // mu is not Laurent
  CHECK_THROWS_AS((void)P("(1 + z)^-1"), UsageError);  // non-monomial base
  CHECK_THROWS_AS((void)P("t2", 1), UsageError);       // rank violation
  CHECK_THROWS_AS((void)P("w"), UsageError);
  CHECK_THROWS_AS((void)P("1/0"), UsageError);
  CHECK_THROWS_AS((void)P("mu mu"), UsageError);
  CHECK_THROWS_AS((void)P(""), UsageError);
  CHECK(P("t2", 2) == Poly::variable(var_tau(1)));

  // Error positions are reported as line:column.
  try {
    (void)P("mu + $");
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("1:6") != std::string::npos);
  }
}

TEST_CASE("evaluation") {
  Poly p = P("mu^2 - t^2");
  std::map<Var, Rat> pt{{var_mu(), Rat(3)}, {var_tau(0), Rat(2)}};
  CHECK(eval_at(p, pt) == Rat(5));
  Poly lp = P("z + z^-1");
  std::map<Var, Rat> zpt{{var_z(0), Rat(2)}};
  CHECK(eval_at(lp, zpt) == Rat(5, 2));
}

TEST_CASE("degree bookkeeping") {
  Poly p = P("mu^2*t - z^-3*t^2");
  CHECK(p.degree_in(VarKind::Tau) == 2);
  CHECK(p.degree_in(VarKind::Mu) == 2);
  CHECK(p.min_exponent(var_z(0)) == -3);
  CHECK(p.max_exponent(var_z(0)) == 0);
  CHECK(p.has_negative_exponents());
  CHECK(!P("mu + t").has_negative_exponents());
  CHECK(p.uses_kind(VarKind::Z));
  CHECK(!p.uses_kind(VarKind::Q));
}

TEST_CASE("ring axioms hold on random sparse polynomials") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> expo(0, 3);
  auto random_poly = [&] {
    Poly p;
    for (int i = 0; i < 5; ++i) {
      Monomial m = Monomial::of(var_mu(), expo(rng))
                       .times(Monomial::of(var_tau(0), expo(rng)))
                       .times(Monomial::of(var_z(0), expo(rng) - 1));
      p = p + Poly::term(m, coeff(rng));
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Poly::constant(1) == a);
    CHECK((a * Poly()).is_zero());
  }
}
