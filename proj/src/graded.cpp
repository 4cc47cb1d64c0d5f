#include "coulomb/graded.hpp"

#include <sstream>

#include "coulomb/errors.hpp"
#include "coulomb/parse.hpp"

namespace coulomb {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Comm: return "comm";
    case Flavor::K: return "k";
    case Flavor::H: return "h";
    case Flavor::Q: return "q";
  }
  return "?";
}

std::optional<Flavor> flavor_from_name(const std::string& name) {
  if (name == "comm") return Flavor::Comm;
  if (name == "k") return Flavor::K;
  if (name == "h") return Flavor::H;
  if (name == "q") return Flavor::Q;
  return std::nullopt;
}

bool flavor_is_multiplicative(Flavor f) { return f == Flavor::K || f == Flavor::Q; }
bool flavor_is_quantized(Flavor f) { return f == Flavor::H || f == Flavor::Q; }

bool flavor_allows(Flavor f, VarKind kind) {
  switch (kind) {
    case VarKind::Mu:
    case VarKind::Tau:
      return !flavor_is_multiplicative(f);
    case VarKind::H:
      return f == Flavor::H;
    case VarKind::M:
    case VarKind::X:
      return flavor_is_multiplicative(f);
    case VarKind::Q:
      return f == Flavor::Q;
    case VarKind::U:
    case VarKind::V:
      return !flavor_is_multiplicative(f);  // presentation variables
    case VarKind::Z:
      return false;  // windings are grading data, not coefficients
  }
  return false;
}

const Poly* GradedElement::part(const Winding& eta) const {
  auto it = parts.find(eta);
  return it == parts.end() ? nullptr : &it->second;
}

GradedElement graded_zero(Flavor f, std::int32_t rank) { return {f, rank, {}}; }

GradedElement graded_from_poly(Flavor f, std::int32_t rank, const Poly& p) {
  GradedElement out = graded_zero(f, rank);
  for (const auto& [m, c] : p.terms()) {
    Winding eta(rank, 0);
    Monomial rest = Monomial::one();
    for (const auto& [v, e] : m.factors()) {
      if (v.kind == VarKind::Z) {
        if (v.index >= rank) throw UsageError("winding variable exceeds rank");
        eta[v.index] = e;
      } else {
        if (!flavor_allows(f, v.kind))
          throw UsageError("variable " + var_name(v) + " is not part of the " + flavor_name(f) +
                           " flavor");
        rest = rest.times(Monomial::of(v, e));
      }
    }
    Poly& slot = out.parts[eta];
    slot += Poly::term(rest, c);
    if (slot.is_zero()) out.parts.erase(eta);
  }
  return out;
}

GradedElement parse_graded(Flavor f, std::int32_t rank, const std::string& text) {
  return graded_from_poly(f, rank, parse_poly(text, rank));
}

Poly graded_to_poly(const GradedElement& f) {
  Poly out;
  for (const auto& [eta, p] : f.parts) {
    Monomial zpart = Monomial::one();
    for (std::int32_t i = 0; i < f.rank; ++i)
      if (eta[i] != 0)
        zpart = zpart.times(Monomial::of(var_z(i), static_cast<std::int32_t>(eta[i])));
    out += p.times(zpart, 1);
  }
  return out;
}

namespace {

void check_compatible(const GradedElement& a, const GradedElement& b) {
  if (a.flavor != b.flavor)
    throw UsageError("flavor mismatch: " + flavor_name(a.flavor) + " vs " +
                     flavor_name(b.flavor));
  if (a.rank != b.rank) throw UsageError("rank mismatch between graded elements");
}

void insert_part(GradedElement& f, const Winding& eta, const Poly& p) {
  if (p.is_zero()) return;
  Poly& slot = f.parts[eta];
  slot += p;
  if (slot.is_zero()) f.parts.erase(eta);
}

// The coefficient twist picked up when z^beta moves from the left of p to
// its right: H shifts every t_i by -beta_i h; Q rescales x_i by q^-beta_i.
Poly commute_past(Flavor flavor, const Winding& beta, const Poly& p) {
  if (!flavor_is_quantized(flavor)) return p;
  std::map<Var, Poly> bindings;
  if (flavor == Flavor::H) {
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if (beta[i] == 0) continue;
      Poly shift = Poly::variable(var_tau(static_cast<std::int32_t>(i))) -
                   Poly::variable(var_h()).scaled(Rat(static_cast<long>(beta[i])));
      bindings.emplace(var_tau(static_cast<std::int32_t>(i)), std::move(shift));
    }
  } else {
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if (beta[i] == 0) continue;
      Poly scaled = Poly::variable(var_q(), static_cast<std::int32_t>(-beta[i])) *
                    Poly::variable(var_x(static_cast<std::int32_t>(i)));
      bindings.emplace(var_x(static_cast<std::int32_t>(i)), std::move(scaled));
    }
  }
  if (bindings.empty()) return p;
  return p.substituted_many(bindings);
}

}  // namespace

GradedElement graded_add(const GradedElement& a, const GradedElement& b) {
  check_compatible(a, b);
  GradedElement out = a;
  for (const auto& [eta, p] : b.parts) insert_part(out, eta, p);
  return out;
}

GradedElement graded_scale(const GradedElement& a, const Rat& c) {
  GradedElement out = graded_zero(a.flavor, a.rank);
  if (c == 0) return out;
  for (const auto& [eta, p] : a.parts) out.parts.emplace(eta, p.scaled(c));
  return out;
}

GradedElement graded_mul(const GradedElement& a, const GradedElement& b) {
  check_compatible(a, b);
  GradedElement out = graded_zero(a.flavor, a.rank);
  for (const auto& [alpha, p] : a.parts)
    for (const auto& [beta, q] : b.parts) {
      Winding gamma(alpha.size());
      for (std::size_t i = 0; i < alpha.size(); ++i) gamma[i] = alpha[i] + beta[i];
      insert_part(out, gamma, commute_past(a.flavor, beta, p) * q);
    }
  return out;
}

GradedElement graded_substitute(const GradedElement& f, const Var& v, const Poly& value) {
  GradedElement out = graded_zero(f.flavor, f.rank);
  for (const auto& [eta, p] : f.parts) {
    Poly q = p.substituted(v, value);
    if (!q.is_zero()) out.parts.emplace(eta, std::move(q));
  }
  return out;
}

GradedElement graded_pow(const GradedElement& a, std::int32_t n) {
  if (n < 0) throw MathError("graded elements only take nonnegative powers");
  GradedElement out = graded_from_poly(a.flavor, a.rank, Poly::constant(1));
  for (std::int32_t i = 0; i < n; ++i) out = graded_mul(out, a);
  return out;
}

GradedElement weyl_act(const IntMatrix& g, const GradedElement& f) {
  auto inv = mat_inverse(g);
  if (!inv) throw UsageError("Weyl generator is not invertible over the integers");
  std::map<Var, Poly> bindings;
  for (std::size_t i = 0; i < inv->size(); ++i) {
    Poly trow, xrow = Poly::constant(1);
    for (std::size_t j = 0; j < inv->size(); ++j) {
      std::int64_t c = (*inv)[i][j];
      if (c == 0) continue;
      trow += Poly::variable(var_tau(static_cast<std::int32_t>(j))).scaled(Rat(static_cast<long>(c)));
      xrow *= Poly::variable(var_x(static_cast<std::int32_t>(j)), static_cast<std::int32_t>(c));
    }
    if (flavor_is_multiplicative(f.flavor))
      bindings.emplace(var_x(static_cast<std::int32_t>(i)), xrow);
    else
      bindings.emplace(var_tau(static_cast<std::int32_t>(i)), trow);
  }
  GradedElement out = graded_zero(f.flavor, f.rank);
  for (const auto& [eta, p] : f.parts)
    insert_part(out, mat_apply(g, eta), p.substituted_many(bindings));
  return out;
}

GradedElement weyl_symmetrize(const GroupData& G, const GradedElement& f) {
  GradedElement out = graded_zero(f.flavor, f.rank);
  for (const auto& w : weyl_closure(G)) out = graded_add(out, weyl_act(w, f));
  return out;
}

std::string graded_str(const GradedElement& f) { return graded_to_poly(f).str(); }

nlohmann::json graded_to_json(const GradedElement& f) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& [eta, p] : f.parts) parts.push_back({{"eta", eta}, {"coeff", p.str()}});
  return {{"flavor", flavor_name(f.flavor)}, {"rank", f.rank}, {"parts", parts}};
}

nlohmann::json graded_fraction_to_json(const GradedFraction& f) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& [eta, r] : f.parts) {
    nlohmann::json entry{{"eta", eta}, {"num", r.num.str()}};
    if (!r.den.is_one()) entry["den"] = r.den.str();
    parts.push_back(std::move(entry));
  }
  return {{"flavor", flavor_name(f.flavor)}, {"rank", f.rank}, {"parts", parts}};
}

}  // namespace coulomb
