#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "coulomb/errors.hpp"
#include "coulomb/euler.hpp"
#include "coulomb/factored.hpp"
#include "coulomb/graded.hpp"
#include "coulomb/group.hpp"
#include "coulomb/parse.hpp"

using namespace coulomb;

namespace {

Poly P(const std::string& text, std::int32_t rank = 1) { return parse_poly(text, rank); }

GradedElement E(Flavor f, std::int32_t rank, const std::string& text) {
  return parse_graded(f, rank, text);
}

bool eq(const GradedElement& a, const GradedElement& b) {
  return graded_add(a, graded_scale(b, Rat(-1))).is_zero();
}

GradedElement random_element(std::mt19937_64& rng, Flavor f, std::int32_t rank,
                             int max_winding, int max_degree) {
  GradedElement out = graded_zero(f, rank);
  std::uniform_int_distribution<int> wind(-max_winding, max_winding);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> exp(0, max_degree);
  int parts = 1 + static_cast<int>(rng() % 3);
  for (int p = 0; p < parts; ++p) {
    Winding eta(static_cast<std::size_t>(rank));
    for (auto& c : eta) c = wind(rng);
    Poly poly;
    for (int t = 0; t < 3; ++t) {
      int c = coeff(rng);
      if (c == 0) continue;
      Monomial m = Monomial::one();
      if (flavor_is_multiplicative(f)) {
        m = m.times(Monomial::of(var_m(), exp(rng)));
        if (f == Flavor::Q) m = m.times(Monomial::of(var_q(), exp(rng)));
        for (std::int32_t i = 0; i < rank; ++i)
          m = m.times(Monomial::of(var_x(i), coeff(rng)));  // Laurent allowed
      } else {
        m = m.times(Monomial::of(var_mu(), exp(rng)));
        if (f == Flavor::H) m = m.times(Monomial::of(var_h(), exp(rng)));
        for (std::int32_t i = 0; i < rank; ++i)
          m = m.times(Monomial::of(var_tau(i), exp(rng)));
      }
      poly += Poly::term(m, Rat(c));
    }
    if (!poly.is_zero()) out = graded_add(out, [&] {
      GradedElement piece = graded_zero(f, rank);
      piece.parts.emplace(eta, poly);
      return piece;
    }());
  }
  return out;
}

}  // namespace

TEST_CASE("factored products: canonical bases, expansion, division") {
  FactoredPoly f = FactoredPoly::from(P("mu - t"));
  f.mul(P("mu + t"));
  CHECK(f.expand() == P("mu^2 - t^2"));

  // Equal bases merge; scalars and monomial factors fold away.
  FactoredPoly g = FactoredPoly::from(P("2*mu - 2*t"));
  g.mul(P("mu - t"), 2);
  CHECK(g.factors().size() == 1);
  CHECK(g.factors()[0].second == 3);
  CHECK(g.scalar() == Rat(2));
  CHECK(g.expand() == P("2*mu^3 - 6*mu^2*t + 6*mu*t^2 - 2*t^3"));

  // Laurent factors normalize into unit times a min-exponent-zero base.
  FactoredPoly k = FactoredPoly::from(P("1 - m^-1*x^-1"));
  CHECK(k.expand() == P("1 - m^-1*x^-1"));
  CHECK(!k.unit().is_one());

  SUBCASE("divide_into and inverse round trips") {
    CHECK(*f.divide_into(P("mu^2 - t^2")) == P("1"));
    CHECK(*f.divide_into(P("mu^3 - mu*t^2")) == P("mu"));
    CHECK(!f.divide_into(P("mu^2")).has_value());
    FactoredPoly inv = f.inverse();
    inv.mul(f);
    CHECK(inv.is_one());
    CHECK_THROWS_AS(f.inverse().expand(), MathError);
  }
}

TEST_CASE("factored expand/divide invariant on random products") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    FactoredPoly f;
    f.mul_scalar(make_rat(1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 3)));
    for (int i = 0; i < 3; ++i) {
      Poly base = P("mu") * Rat(1 + rng() % 3) + P("t") * Rat(c(rng)) + Poly::constant(c(rng));
      if (base.term_count() < 2) continue;
      f.mul(base, 1 + static_cast<int>(rng() % 2));
    }
    CHECK(*f.divide_into(f.expand()) == Poly::constant(1));
  }
}

TEST_CASE("rational reduction and arithmetic") {
  RationalPoly r = reduce(P("t^2 - mu^2"), FactoredPoly::from(P("mu - t")));
  CHECK(r.is_polynomial());
  CHECK(r.num == P("-mu - t"));

  RationalPoly a = reduce(P("1"), FactoredPoly::from(P("mu - t")));
  RationalPoly b = reduce(P("1"), FactoredPoly::from(P("mu + t")));
  RationalPoly sum = rational_add(a, b);
  CHECK(sum.num == P("2*mu"));
  CHECK(sum.den.expand() == P("mu^2 - t^2"));

  RationalPoly prod = rational_mul(sum, reduce(P("mu + t"), FactoredPoly()));
  CHECK(prod.num == P("2*mu"));
  CHECK(prod.den.expand() == P("mu - t"));

  RationalPoly inv = rational_pow(prod, -1);
  RationalPoly unit = rational_mul(inv, prod);
  CHECK(unit.is_polynomial());
  CHECK(unit.num == P("1"));

  SUBCASE("substitution with rational images") {
    // z + z^-1 at z = 1 + t u.
    std::map<Var, RationalPoly> bind;
    bind.emplace(var_z(0), RationalPoly::from(P("1 + t*u")));
    RationalPoly img = substitute_rational(P("z + z^-1"), bind);
    CHECK(img.num == P("(1+t*u)^2 + 1"));
    CHECK(img.den.expand() == P("1 + t*u"));
  }
}

TEST_CASE("graded parsing splits windings and guards the variable set") {
  GradedElement f = E(Flavor::Comm, 1, "z*(mu - t) + 3");
  REQUIRE(f.parts.size() == 2);
  CHECK(*f.part(Winding{1}) == P("mu - t"));
  CHECK(*f.part(Winding{0}) == P("3"));
  CHECK(f.part(Winding{2}) == nullptr);

  CHECK_THROWS_AS(E(Flavor::Comm, 1, "h*z"), UsageError);   // h is quantized-only
  CHECK_THROWS_AS(E(Flavor::K, 1, "t*z"), UsageError);      // t is additive-only
  CHECK_THROWS_AS(E(Flavor::Q, 1, "u*z"), UsageError);      // u,v are commutative-only
  CHECK_THROWS_AS(E(Flavor::H, 1, "x*z"), UsageError);

  // Round trip through the printer.
  GradedElement g = E(Flavor::H, 2, "z*t2^2*h - z2^-1*mu + 5");
  CHECK(eq(parse_graded(Flavor::H, 2, graded_str(g)), g));
}

TEST_CASE("shift algebra: z t = (t + h) z in normal order") {
  GradedElement z = E(Flavor::H, 1, "z");
  GradedElement t = E(Flavor::H, 1, "t");
  GradedElement zt = graded_mul(z, t);
  GradedElement tz = graded_mul(t, z);
  CHECK(eq(zt, E(Flavor::H, 1, "z*t")));
  CHECK(eq(tz, E(Flavor::H, 1, "z*(t-h)")));
  CHECK(eq(graded_add(zt, graded_scale(tz, Rat(-1))), E(Flavor::H, 1, "h*z")));

  SUBCASE("[X, Y] = h for X = z, Y = z^-1 t") {
    GradedElement y = E(Flavor::H, 1, "z^-1*t");
    GradedElement comm = graded_add(graded_mul(z, y), graded_scale(graded_mul(y, z), Rat(-1)));
    CHECK(eq(comm, E(Flavor::H, 1, "h")));
  }
  SUBCASE("unit law") {
    GradedElement one = E(Flavor::H, 1, "1");
    GradedElement a = E(Flavor::H, 1, "z^2*t*h - z^-1*mu");
    CHECK(eq(graded_mul(a, one), a));
    CHECK(eq(graded_mul(one, a), a));
  }
  SUBCASE("normal-ordered powers of z^-1 t") {
    GradedElement y = E(Flavor::H, 1, "z^-1*t");
    CHECK(eq(graded_pow(y, 2), E(Flavor::H, 1, "z^-2*(t+h)*t")));
    CHECK(eq(graded_pow(y, 3), E(Flavor::H, 1, "z^-3*(t+2*h)*(t+h)*t")));
  }
}

TEST_CASE("q torus: z t = q t z") {
  GradedElement z = E(Flavor::Q, 1, "z");
  GradedElement t = E(Flavor::Q, 1, "m*x");
  GradedElement zt = graded_mul(z, t);
  GradedElement qtz = graded_mul(E(Flavor::Q, 1, "q"), graded_mul(t, z));
  CHECK(eq(zt, qtz));
  CHECK(eq(zt, E(Flavor::Q, 1, "z*m*x")));

  SUBCASE("(z t)(z^-1 t) = q t^2") {
    GradedElement zit = graded_mul(E(Flavor::Q, 1, "z^-1"), t);
    CHECK(eq(graded_mul(zt, zit), E(Flavor::Q, 1, "q*m^2*x^2")));
  }
  SUBCASE("x moving past z^-1 gains q") {
    CHECK(eq(graded_mul(t, E(Flavor::Q, 1, "z^-1")), E(Flavor::Q, 1, "z^-1*q*m*x")));
  }
}

TEST_CASE("associativity of the quantized products") {
  std::mt19937_64 rng(11);
  for (Flavor f : {Flavor::H, Flavor::Q}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::int32_t rank = 1 + static_cast<std::int32_t>(rng() % 2);
      GradedElement a = random_element(rng, f, rank, 3, 4);
      GradedElement b = random_element(rng, f, rank, 3, 4);
      GradedElement c = random_element(rng, f, rank, 3, 4);
      CHECK(eq(graded_mul(graded_mul(a, b), c), graded_mul(a, graded_mul(b, c))));
    }
  }
}

TEST_CASE("h -> 0 degenerates the shift product to the commutative one") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    GradedElement a = random_element(rng, Flavor::H, 1, 3, 3);
    GradedElement b = random_element(rng, Flavor::H, 1, 3, 3);
    GradedElement prod0 = graded_substitute(graded_mul(a, b), var_h(), Poly::constant(0));
    GradedElement a0 = graded_substitute(a, var_h(), Poly::constant(0));
    GradedElement b0 = graded_substitute(b, var_h(), Poly::constant(0));
    a0.flavor = b0.flavor = Flavor::Comm;
    GradedElement comm = graded_mul(a0, b0);
    comm.flavor = Flavor::H;
    CHECK(eq(prod0, comm));
  }
}

TEST_CASE("weyl action on graded elements") {
  GroupData s = su2({1, -1});
  IntMatrix g = s.weyl[0];

  SUBCASE("su2 flip: z p(t) -> z^-1 p(-t)") {
    CHECK(eq(weyl_act(g, E(Flavor::Comm, 1, "z*t")), E(Flavor::Comm, 1, "-z^-1*t")));
    CHECK(eq(weyl_act(g, E(Flavor::Comm, 1, "z + t^2")), E(Flavor::Comm, 1, "z^-1 + t^2")));
  }
  SUBCASE("rank-2 coordinate swap") {
    IntMatrix swap{{0, 1}, {1, 0}};
    CHECK(eq(weyl_act(swap, E(Flavor::Comm, 2, "z*t2")), E(Flavor::Comm, 2, "z2*t")));
    CHECK(eq(weyl_act(swap, E(Flavor::K, 2, "z*x2^-1*m")), E(Flavor::K, 2, "z2*x^-1*m")));
  }
  SUBCASE("inverse action undoes the action") {
    std::mt19937_64 rng(17);
    IntMatrix swap{{0, 1}, {1, 0}};
    for (int trial = 0; trial < 50; ++trial) {
      GradedElement f = random_element(rng, Flavor::Comm, 2, 3, 3);
      CHECK(eq(weyl_act(swap, weyl_act(swap, f)), f));
    }
  }
  SUBCASE("orbit sum is unnormalized") {
    GradedElement f = E(Flavor::Comm, 1, "z + t^2");
    CHECK(eq(weyl_symmetrize(s, f), E(Flavor::Comm, 1, "z + z^-1 + 2*t^2")));
    CHECK(eq(weyl_symmetrize(s, E(Flavor::Comm, 1, "t*z")),
             E(Flavor::Comm, 1, "t*z - t*z^-1")));
  }
}

TEST_CASE("euler pairs per flavor") {
  SUBCASE("commutative: u1({1,-1}) at winding 1") {
    EulerPair p = euler_pair(u1({1, -1}), Winding{1}, Flavor::Comm);
    CHECK(p.eplus.expand() == P("mu + t"));
    CHECK(p.eminus.expand() == P("mu - t"));
  }
  SUBCASE("winding 0 contributes nothing") {
    EulerPair p = euler_pair(u1({1, -1}), Winding{0}, Flavor::Comm);
    CHECK(p.eplus.is_one());
    CHECK(p.eminus.is_one());
  }
  SUBCASE("shift flavor at mu = 0 builds the falling/rising products") {
    EulerOptions mu0;
    mu0.mu_zero = true;
    EulerPair p = euler_pair(u1({1}), Winding{-3}, Flavor::H, mu0);
    CHECK(p.eplus.is_one());
    CHECK(p.eminus.expand() == P("t*(t+h)*(t+2*h)"));
    EulerPair q = euler_pair(u1({1}), Winding{2}, Flavor::H, mu0);
    CHECK(q.eplus.expand() == P("(t-h)*(t-2*h)"));
  }
  SUBCASE("q flavor exponents climb with the winding") {
    EulerPair p = euler_pair(u1({1}), Winding{1}, Flavor::Q);
    CHECK(p.eplus.expand() == P("1 - q*m^-1*x^-1"));
    EulerPair d = euler_pair(u1({1}), Winding{-2}, Flavor::Q);
    CHECK(d.eminus.expand() == P("(1 - m^-1*x^-1)*(1 - q^-1*m^-1*x^-1)"));
  }
  SUBCASE("k flavor drops the q exponents") {
    EulerPair p = euler_pair(u1({1}), Winding{-2}, Flavor::K);
    CHECK(p.eminus.expand() == P("(1 - m^-1*x^-1)^2"));
  }
  SUBCASE("commutative swap symmetry e_plus(-eta) = e_minus(eta)") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::int64_t> ws;
      for (int i = 0; i < 4; ++i) ws.push_back(static_cast<std::int64_t>(rng() % 9) - 4);
      GroupData g = u1(ws);
      Winding eta{static_cast<std::int64_t>(rng() % 7) - 3};
      Winding neg{-eta[0]};
      CHECK(euler_pair(g, eta, Flavor::Comm).eplus.expand() ==
            euler_pair(g, neg, Flavor::Comm).eminus.expand());
    }
  }
  SUBCASE("h -> 0 recovers the commutative factors") {
    EulerPair p = euler_pair(u1({2, -1}), Winding{1}, Flavor::H);
    EulerPair c = euler_pair(u1({2, -1}), Winding{1}, Flavor::Comm);
    CHECK(p.eplus.expand().substituted(var_h(), Poly::constant(0)) == c.eplus.expand());
    CHECK(p.eminus.expand().substituted(var_h(), Poly::constant(0)) == c.eminus.expand());
  }
  SUBCASE("massless specializations") {
    EulerOptions massless;
    massless.massless = true;
    CHECK(euler_pair(u1({1}), Winding{1}, Flavor::Comm, massless).eplus.expand() == P("t"));
    CHECK(euler_pair(u1({1}), Winding{1}, Flavor::H, massless).eplus.expand() ==
          P("t - 1/2*h"));
    CHECK(euler_pair(u1({1}), Winding{-1}, Flavor::K, massless).eminus.expand() ==
          P("1 - x^-1"));
    CHECK_THROWS_AS(euler_pair(u1({1}), Winding{1}, Flavor::Q, massless), MathError);
  }
}

TEST_CASE("distributivity and units across flavors") {
  std::mt19937_64 rng(17);
  for (Flavor f : {Flavor::Comm, Flavor::K, Flavor::H, Flavor::Q}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::int32_t rank = 1 + static_cast<std::int32_t>(rng() % 2);
      GradedElement a = random_element(rng, f, rank, 3, 3);
      GradedElement b = random_element(rng, f, rank, 3, 3);
      GradedElement c = random_element(rng, f, rank, 3, 3);
      CHECK(eq(graded_mul(a, graded_add(b, c)),
               graded_add(graded_mul(a, b), graded_mul(a, c))));
      CHECK(eq(graded_mul(graded_add(a, b), c),
               graded_add(graded_mul(a, c), graded_mul(b, c))));
      GradedElement one = parse_graded(f, rank, "1");
      CHECK(eq(graded_mul(one, a), a));
      CHECK(eq(graded_mul(a, one), a));
    }
  }
}
