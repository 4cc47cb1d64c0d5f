#include "coulomb/euler.hpp"

#include <optional>
#include <utility>

#include "coulomb/errors.hpp"

namespace coulomb {

Poly weight_linear(const Weight& nu) {
  Poly p = Poly::variable(var_mu());
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] != 0)
      p += Poly::variable(var_tau(static_cast<std::int32_t>(i)))
               .scaled(Rat(static_cast<long>(nu[i])));
  return p;
}

Poly weight_multiplicative(const Weight& nu) {
  Monomial mono = Monomial::of(var_m(), 1);
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] != 0)
      mono = mono.times(
          Monomial::of(var_x(static_cast<std::int32_t>(i)), static_cast<std::int32_t>(nu[i])));
  return Poly::term(mono, 1);
}

namespace {

// The variable -> value pair an EulerOptions choice pins, if any.
std::optional<std::pair<Var, Poly>> mass_binding(Flavor flavor, const EulerOptions& opt) {
  if (opt.massless && opt.mu_zero) throw UsageError("choose at most one of massless / mu-zero");
  if (opt.mu_zero) {
    if (flavor_is_multiplicative(flavor))
      throw UsageError("mu-zero applies to the additive flavors only");
    return std::make_pair(var_mu(), Poly::constant(0));
  }
  if (opt.massless) {
    switch (flavor) {
      case Flavor::Comm:
        return std::make_pair(var_mu(), Poly::constant(0));
      case Flavor::H:
        return std::make_pair(var_mu(), Poly::variable(var_h()).scaled(make_rat(1, 2)));
      case Flavor::K:
        return std::make_pair(var_m(), Poly::constant(1));
      case Flavor::Q:
        throw MathError("the q flavor has no massless limit");
    }
  }
  return std::nullopt;
}

}  // namespace

EulerPair euler_pair(const GroupData& G, const Winding& eta, Flavor flavor,
                     const EulerOptions& opt) {
  if (static_cast<std::int32_t>(eta.size()) != G.rank)
    throw UsageError("winding rank does not match group rank");
  auto bind = mass_binding(flavor, opt);
  EulerPair out;
  out.eta = eta;
  out.flavor = flavor;
  for (const auto& nu : G.weights) {
    std::int64_t k = pairing(nu, eta);
    if (k == 0) continue;
    FactoredPoly& side = k > 0 ? out.eplus : out.eminus;
    std::int64_t count = k > 0 ? k : -k;
    if (flavor_is_multiplicative(flavor)) {
      Poly inv_t = weight_multiplicative(nu).pow(-1);
      for (std::int64_t j = 0; j < count; ++j) {
        // Exponents follow the direction of the winding: +j above for
        // eplus, -j below for eminus (and no q at all in the K flavor).
        std::int32_t qexp = 0;
        if (flavor == Flavor::Q) qexp = static_cast<std::int32_t>(k > 0 ? j + 1 : -j);
        Poly factor = Poly::constant(1) - Poly::variable(var_q(), qexp) * inv_t;
        if (bind) factor = factor.substituted(bind->first, bind->second);
        side.mul(factor, 1);
      }
    } else {
      Poly base = weight_linear(nu);
      Poly h = Poly::variable(var_h());
      for (std::int64_t j = 0; j < count; ++j) {
        Poly factor = base;
        if (flavor == Flavor::H)
          factor += h.scaled(Rat(static_cast<long>(k > 0 ? -(j + 1) : j)));
        if (bind) factor = factor.substituted(bind->first, bind->second);
        side.mul(factor, 1);
      }
    }
  }
  return out;
}

}  // namespace coulomb
