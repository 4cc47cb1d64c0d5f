#include "coulomb/branch.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "coulomb/errors.hpp"
#include "coulomb/linalg.hpp"

namespace coulomb {

namespace {

std::int64_t winding_width(const Winding& eta) {
  std::int64_t w = 0;
  for (auto c : eta) w = std::max(w, c < 0 ? -c : c);
  return w;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

void check_ranks(const GradedElement& f, const GroupData& G) {
  if (f.rank != G.rank) throw UsageError("element rank does not match group rank");
}

}  // namespace

GradedFraction euler_conjugate(const GradedElement& f, const GroupData& G,
                               const EulerOptions& opt) {
  check_ranks(f, G);
  GradedFraction out;
  out.flavor = f.flavor;
  out.rank = f.rank;
  for (const auto& [eta, p] : f.parts) {
    EulerPair pair = euler_pair(G, eta, f.flavor, opt);
    out.parts.emplace(eta, reduce(p * pair.eplus.expand(), pair.eminus));
  }
  return out;
}

SurvivalReport survives(const GradedElement& f, const GroupData& G, const EulerOptions& opt) {
  check_ranks(f, G);
  SurvivalReport rep;
  for (const auto& [eta, p] : f.parts) {
    SurvivalWitness w;
    w.eta = eta;
    EulerPair pair = euler_pair(G, eta, f.flavor, opt);
    if (!flavor_is_multiplicative(f.flavor) && p.has_negative_exponents()) {
      w.obstruction = "coefficient has a negative exponent: " + p.str();
    } else {
      auto q = pair.eminus.divide_into(p);
      // Monomial units obstruct the additive flavors (t is not invertible
      // there) but never the multiplicative ones.
      if (q && !flavor_is_multiplicative(f.flavor) && q->has_negative_exponents()) q.reset();
      if (q) {
        w.ok = true;
        w.quotient = *q;
      } else {
        w.obstruction = "coefficient is not divisible by " + pair.eminus.str();
      }
    }
    rep.all = rep.all && w.ok;
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

nlohmann::json SurvivalReport::to_json() const {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : witnesses) {
    nlohmann::json j;
    j["eta"] = w.eta;
    j["ok"] = w.ok;
    if (w.ok)
      j["quotient"] = w.quotient.str();
    else
      j["obstruction"] = w.obstruction;
    ws.push_back(std::move(j));
  }
  return nlohmann::json{{"survives", all}, {"witnesses", std::move(ws)}};
}

GradedElement graded_generator(const GroupData& G, const Winding& eta, Flavor flavor,
                               const EulerOptions& opt) {
  EulerPair pair = euler_pair(G, eta, flavor, opt);
  GradedElement out = graded_zero(flavor, G.rank);
  out.parts.emplace(eta, pair.eminus.expand());
  return out;
}

Rank1Presentation su2_presentation(const GroupData& G) {
  if (G.rank != 1) throw UsageError("rank-1 presentation requires a rank-1 group");
  std::multiset<std::int64_t> pos, neg;
  for (const auto& nu : G.weights) {
    if (nu.empty()) throw UsageError("weight entry has the wrong rank");
    if (nu[0] > 0) pos.insert(nu[0]);
    if (nu[0] < 0) neg.insert(-nu[0]);
  }
  if (pos != neg)
    throw UsageError("weight multiset is not symmetric under negation");

  Rank1Presentation out;
  EulerPair pair = euler_pair(G, Winding{1}, Flavor::Comm);
  out.phi_plus = pair.eplus;
  out.phi_minus = pair.eminus;
  Poly phip = out.phi_plus.expand();
  Poly phim = out.phi_minus.expand();
  out.weight_sum = phip.total_degree();
  if (out.weight_sum == 0)
    throw UsageError("the zero representation has no rank-1 presentation (N = 0)");
  std::int32_t n32 = static_cast<std::int32_t>(out.weight_sum);

  Poly tinv = Poly::variable(var_tau(0), -1);
  Poly muN = Poly::variable(var_mu(), n32);

  out.x = graded_zero(Flavor::Comm, 1);
  out.x.parts.emplace(Winding{1}, phim * tinv);
  out.x.parts.emplace(Winding{0}, -(muN * tinv));
  out.y = graded_zero(Flavor::Comm, 1);
  out.y.parts.emplace(Winding{0}, muN * tinv);
  out.y.parts.emplace(Winding{-1}, -(phip * tinv));

  GradedElement tinv_elt = graded_zero(Flavor::Comm, 1);
  tinv_elt.parts.emplace(Winding{0}, tinv);
  GradedElement t_elt = graded_zero(Flavor::Comm, 1);
  t_elt.parts.emplace(Winding{0}, Poly::variable(var_tau(0)));
  GradedElement diff = graded_add(out.x, graded_scale(out.y, Rat(-1)));
  out.w = graded_mul(diff, tinv_elt);

  Poly even_part = Poly::variable(var_mu(), 2 * n32) - phip * phim;
  Poly candidate = even_part * tinv * tinv;
  if (candidate.has_negative_exponents())
    throw MathError("mu^{2N} - phi_plus phi_minus is not divisible by t^2");
  out.xy_constant = candidate;

  out.residue_linear = graded_add(diff, graded_scale(graded_mul(t_elt, out.w), Rat(-1)));
  GradedElement quad = graded_mul(out.x, out.y);
  GradedElement constant_elt = graded_zero(Flavor::Comm, 1);
  constant_elt.parts.emplace(Winding{0}, out.xy_constant);
  GradedElement muNw = out.w;
  for (auto& [eta, p] : muNw.parts) p *= muN;
  quad = graded_add(quad, graded_scale(constant_elt, Rat(-1)));
  out.residue_quadratic = graded_add(quad, graded_scale(muNw, Rat(-1)));

  if (!out.residue_linear.is_zero() || !out.residue_quadratic.is_zero())
    throw MathError("rank-1 presentation relations did not close");
  if (!uv_ring_member(out.x) || !uv_ring_member(out.y) || !uv_ring_member(out.w))
    throw MathError("division by t left the u,v ring (inexact presentation)");
  return out;
}

nlohmann::json Rank1Presentation::to_json() const {
  return nlohmann::json{
      {"N", weight_sum},
      {"phi_plus", phi_plus.to_json()},
      {"phi_minus", phi_minus.to_json()},
      {"x", graded_to_json(x)},
      {"y", graded_to_json(y)},
      {"w", graded_to_json(w)},
      {"xy_constant", xy_constant.str()},
      {"residues_zero", residue_linear.is_zero() && residue_quadratic.is_zero()},
  };
}

bool uv_ring_member(const GradedElement& f) {
  if (f.flavor != Flavor::Comm)
    throw UsageError("the u,v membership test lives in the commutative flavor");
  if (f.rank != 1) throw UsageError("the u,v membership test requires rank 1");
  for (const auto& [eta, p] : f.parts)
    if (p.uses_kind(VarKind::U) || p.uses_kind(VarKind::V))
      throw UsageError("membership input already mentions u or v");
  Poly whole = graded_to_poly(f);
  Poly cover = Poly::constant(1) + Poly::variable(var_tau(0)) * Poly::variable(var_u());
  std::map<Var, RationalPoly> bind;
  bind.emplace(var_z(0), RationalPoly::from(cover));
  RationalPoly image = substitute_rational(whole, bind);
  return image.num.min_exponent(var_tau(0)) >= 0;
}

std::vector<std::int64_t> torus_winding_dimensions(const GroupData& G, const Winding& eta,
                                                   std::int64_t degree_bound) {
  EulerPair pair = euler_pair(G, eta, Flavor::Comm);
  std::int64_t shift = pair.eminus.expand().total_degree();
  std::int64_t nvars = G.rank + 1;  // mu and t_1..t_r
  std::vector<std::int64_t> dims;
  for (std::int64_t d = 0; d <= degree_bound; ++d)
    dims.push_back(d < shift ? 0 : binomial(d - shift + nvars, nvars));
  return dims;
}

nlohmann::json DimTable::to_json() const {
  return nlohmann::json{
      {"width_bound", width_bound}, {"min_degree", min_degree}, {"cells", cells}};
}

namespace {

// Cell space for exact row reduction: one coordinate per (winding, monomial).
struct CellKey {
  Winding eta;
  Monomial m;
  bool operator<(const CellKey& o) const {
    if (eta != o.eta) return eta < o.eta;
    return GrlexLess{}(m, o.m);
  }
};

class CellIndexer {
 public:
  std::size_t id(const Winding& eta, const Monomial& m) {
    auto [it, fresh] = ids_.emplace(CellKey{eta, m}, ids_.size());
    if (fresh) widths_.push_back(winding_width(eta));
    return it->second;
  }
  std::int64_t width_of(std::size_t cell) const { return widths_[cell]; }

 private:
  std::map<CellKey, std::size_t> ids_;
  std::vector<std::int64_t> widths_;
};

SpanBasis::Row row_of(const GradedElement& e, CellIndexer& idx) {
  SpanBasis::Row row;
  for (const auto& [eta, p] : e.parts)
    for (const auto& [m, c] : p.terms()) row.emplace(idx.id(eta, m), c);
  return row;
}

std::int64_t homogeneous_degree(const GradedElement& e) {
  std::optional<std::int64_t> deg;
  for (const auto& [eta, p] : e.parts)
    for (const auto& [m, c] : p.terms()) {
      std::int64_t d = m.total_degree();
      if (!deg) deg = d;
      if (*deg != d) throw MathError("span generator is not homogeneous");
    }
  if (!deg) throw MathError("span generator vanishes");
  return *deg;
}

}  // namespace

DimTable product_span_dims(const GroupData& G, const std::vector<GradedElement>& gens,
                           std::int64_t width_bound, std::int64_t degree_lo,
                           std::int64_t degree_hi, std::int64_t cap, bool symmetrize) {
  if (G.rank != 1) throw UsageError("product spans are implemented for rank 1");
  struct GenInfo {
    std::int64_t degree;
    std::int64_t width;
  };
  std::vector<GenInfo> info;
  for (const auto& g : gens) {
    GenInfo gi{homogeneous_degree(g), 0};
    for (const auto& [eta, p] : g.parts) gi.width = std::max(gi.width, winding_width(eta));
    if (gi.width == 0) throw UsageError("span generators must carry winding (pad with t instead)");
    info.push_back(gi);
  }

  CellIndexer idx;
  std::map<std::int64_t, SpanBasis> buckets;
  GradedElement t_elt = graded_zero(gens.empty() ? Flavor::Comm : gens[0].flavor, 1);
  t_elt.parts.emplace(Winding{0}, Poly::variable(var_tau(0)));

  auto emit = [&](const GradedElement& prod, std::int64_t deg) {
    GradedElement padded = prod;
    for (std::int64_t d = deg; d <= degree_hi; ++d) {
      if (d >= degree_lo) {
        GradedElement elt = symmetrize ? weyl_symmetrize(G, padded) : padded;
        if (!elt.is_zero()) buckets[d].insert(row_of(elt, idx));
      }
      padded = graded_mul(padded, t_elt);
    }
  };

  std::function<void(std::size_t, const GradedElement&, std::int64_t, std::int64_t)> rec =
      [&](std::size_t i, const GradedElement& cur, std::int64_t deg, std::int64_t budget) {
        if (i == gens.size()) {
          emit(cur, deg);
          return;
        }
        GradedElement acc = cur;
        std::int64_t adeg = deg;
        for (std::int64_t a = 0;; ++a) {
          rec(i + 1, acc, adeg, budget - a * info[i].width);
          if ((a + 1) * info[i].width > budget) break;
          acc = graded_mul(acc, gens[i]);
          adeg += info[i].degree;
        }
      };
  GradedElement one = graded_zero(t_elt.flavor, 1);
  one.parts.emplace(Winding{0}, Poly::constant(1));
  rec(0, one, 0, cap);

  DimTable tab;
  tab.width_bound = width_bound;
  tab.min_degree = degree_lo;
  tab.cells.assign(static_cast<std::size_t>(width_bound + 1),
                   std::vector<std::int64_t>(static_cast<std::size_t>(degree_hi - degree_lo + 1), 0));
  for (std::int64_t d = degree_lo; d <= degree_hi; ++d) {
    auto it = buckets.find(d);
    if (it == buckets.end()) continue;
    std::int64_t total = static_cast<std::int64_t>(it->second.dim());
    for (std::int64_t w = 0; w <= width_bound; ++w) {
      SpanBasis wide;
      for (const auto& [pivot, row] : it->second.rows()) {
        SpanBasis::Row stripped;
        for (const auto& [cell, c] : row)
          if (idx.width_of(cell) > w) stripped.emplace(cell, c);
        wide.insert(std::move(stripped));
      }
      tab.cells[static_cast<std::size_t>(w)][static_cast<std::size_t>(d - degree_lo)] =
          total - static_cast<std::int64_t>(wide.dim());
    }
  }
  return tab;
}

namespace {

void enum_tau_monomials(std::int32_t rank, std::int64_t max_degree,
                        const std::function<void(const Monomial&)>& fn) {
  Monomial m = Monomial::one();
  std::function<void(std::int32_t, std::int64_t, Monomial)> rec =
      [&](std::int32_t i, std::int64_t left, Monomial cur) {
        if (i == rank) {
          fn(cur);
          return;
        }
        for (std::int64_t e = 0; e <= left; ++e)
          rec(i + 1, left - e,
              e == 0 ? cur : cur.times(Monomial::of(var_tau(i), static_cast<std::int32_t>(e))));
      };
  rec(0, max_degree, m);
}

void enum_windings(std::int32_t rank, std::int64_t width,
                   const std::function<void(const Winding&)>& fn) {
  Winding eta(static_cast<std::size_t>(rank), 0);
  std::function<void(std::int32_t)> rec = [&](std::int32_t i) {
    if (i == rank) {
      fn(eta);
      return;
    }
    for (std::int64_t c = -width; c <= width; ++c) {
      eta[static_cast<std::size_t>(i)] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

DimTable torus_symmetrized_dims(const GroupData& G, std::int64_t width_bound,
                                std::int64_t degree_bound) {
  CellIndexer idx;
  std::map<std::int64_t, SpanBasis> buckets;
  EulerOptions mu0;
  mu0.mu_zero = true;
  enum_windings(G.rank, width_bound, [&](const Winding& eta) {
    Poly base = euler_pair(G, eta, Flavor::Comm, mu0).eminus.expand();
    std::int64_t shift = base.total_degree();
    enum_tau_monomials(G.rank, degree_bound - shift, [&](const Monomial& m) {
      GradedElement elt = graded_zero(Flavor::Comm, G.rank);
      elt.parts.emplace(eta, base * Poly::term(m, 1));
      GradedElement sym = weyl_symmetrize(G, elt);
      if (!sym.is_zero())
        buckets[shift + m.total_degree()].insert(row_of(sym, idx));
    });
  });

  DimTable tab;
  tab.width_bound = width_bound;
  tab.min_degree = 0;
  tab.cells.assign(static_cast<std::size_t>(width_bound + 1),
                   std::vector<std::int64_t>(static_cast<std::size_t>(degree_bound + 1), 0));
  for (auto& [d, basis] : buckets) {
    if (d < 0 || d > degree_bound) continue;
    std::int64_t total = static_cast<std::int64_t>(basis.dim());
    for (std::int64_t w = 0; w <= width_bound; ++w) {
      SpanBasis wide;
      for (const auto& [pivot, row] : basis.rows()) {
        SpanBasis::Row stripped;
        for (const auto& [cell, c] : row)
          if (idx.width_of(cell) > w) stripped.emplace(cell, c);
        wide.insert(std::move(stripped));
      }
      tab.cells[static_cast<std::size_t>(w)][static_cast<std::size_t>(d)] =
          total - static_cast<std::int64_t>(wide.dim());
    }
  }
  return tab;
}

namespace {

bool is_su2_shaped(const GroupData& G) {
  if (G.rank != 1 || G.roots.size() != 2) return false;
  std::multiset<std::int64_t> roots;
  for (const auto& a : G.roots) roots.insert(a.empty() ? 0 : a[0]);
  return roots == std::multiset<std::int64_t>{-2, 2};
}

// Weyl-invariant mu=0 span of the rank-1 presentation generators, with the
// generation cap grown until the reported window stops changing.
DimTable su2_invariant_table(const GroupData& G, std::int64_t width_bound,
                             std::int64_t degree_lo, std::int64_t degree_hi) {
  Rank1Presentation pres = su2_presentation(G);
  Poly zero = Poly::constant(0);
  std::vector<GradedElement> gens = {
      graded_substitute(pres.x, var_mu(), zero),
      graded_substitute(pres.y, var_mu(), zero),
      graded_substitute(pres.w, var_mu(), zero),
  };
  std::int64_t cap = width_bound + (degree_hi - std::min<std::int64_t>(degree_lo, 0)) + 2;
  std::int64_t cap_max = cap + 6;
  DimTable cur = product_span_dims(G, gens, width_bound, degree_lo, degree_hi, cap, true);
  while (cap < cap_max) {
    DimTable next = product_span_dims(G, gens, width_bound, degree_lo, degree_hi, cap + 1, true);
    if (next == cur) return cur;
    cur = std::move(next);
    ++cap;
  }
  return cur;
}

}  // namespace

std::vector<std::int64_t> su2_orbit_dimensions(const GroupData& G, std::int64_t eta,
                                               std::int64_t degree_bound) {
  if (eta < 0) eta = -eta;
  DimTable tab = su2_invariant_table(G, eta, 0, degree_bound);
  std::vector<std::int64_t> out;
  std::int64_t running = 0;
  for (std::int64_t d = 0; d <= degree_bound; ++d) {
    std::int64_t cell = tab.cells[static_cast<std::size_t>(eta)][static_cast<std::size_t>(d)];
    if (eta > 0) cell -= tab.cells[static_cast<std::size_t>(eta - 1)][static_cast<std::size_t>(d)];
    running += cell;
    out.push_back(running);
  }
  return out;
}

Winding coroot(const Weight& alpha) {
  std::int64_t norm2 = 0;
  for (auto c : alpha) norm2 += c * c;
  if (norm2 == 0) throw UsageError("the zero vector is not a root");
  Winding out(alpha.size(), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::int64_t num = 2 * alpha[i];
    if (num % norm2 != 0) throw UsageError("coroot 2a/(a,a) is not integral");
    out[i] = num / norm2;
  }
  return out;
}

AbelianizationReport abelianization_check(const GroupData& G, std::int64_t degree_bound,
                                          std::int64_t winding_bound) {
  AbelianizationReport rep;
  GroupData reduced = reduce_by_roots(G);

  // mu-generic bookkeeping: removing the roots lowers deg e_minus(eta) by
  // exactly their pairing contribution, so both sides stay free of matching
  // graded rank after the degree shift.
  nlohmann::json degree_rows = nlohmann::json::array();
  bool degrees_ok = true;
  enum_windings(G.rank, winding_bound, [&](const Winding& eta) {
    std::int64_t full = euler_pair(G, eta, Flavor::Comm).eminus.expand().total_degree();
    std::int64_t red = euler_pair(reduced, eta, Flavor::Comm).eminus.expand().total_degree();
    std::int64_t drop = 0;
    for (const auto& alpha : G.roots) {
      std::int64_t k = pairing(alpha, eta);
      if (k < 0) drop -= k;
    }
    bool ok = full == red + drop;
    degrees_ok = degrees_ok && ok;
    degree_rows.push_back(nlohmann::json{
        {"eta", eta}, {"deg_full", full}, {"deg_reduced", red}, {"root_drop", drop}, {"ok", ok}});
  });

  DimTable rhs = torus_symmetrized_dims(reduced, winding_bound, degree_bound);
  rep.details["reduced"] = group_to_json(reduced);
  rep.details["degree_bookkeeping"] = std::move(degree_rows);
  rep.details["rhs_table"] = rhs.to_json();

  if (is_su2_shaped(G)) {
    rep.su2_direct = true;
    DimTable lhs = su2_invariant_table(G, winding_bound, 0, degree_bound);
    rep.details["lhs_table"] = lhs.to_json();
    bool equal = lhs.cells == rhs.cells;
    rep.details["tables_equal"] = equal;
    rep.ok = degrees_ok && equal;
    return rep;
  }

  // General input: report the reduced side, then run the rank-1 comparison
  // along each root direction.
  std::set<Winding> seen;
  nlohmann::json slices = nlohmann::json::array();
  bool slices_ok = true;
  for (const auto& alpha : G.roots) {
    Winding eta_a = coroot(alpha);
    bool negate = false;  // identify the +-alpha directions
    for (auto c : eta_a)
      if (c != 0) {
        negate = c < 0;
        break;
      }
    if (negate)
      for (auto& c : eta_a) c = -c;
    if (!seen.insert(eta_a).second) continue;

    nlohmann::json slice;
    slice["root"] = alpha;
    slice["coroot"] = eta_a;
    std::vector<std::int64_t> slice_weights;
    for (const auto& nu : G.weights) slice_weights.push_back(pairing(nu, eta_a));
    slice["weights"] = slice_weights;
    try {
      GroupData s = su2(slice_weights);
      AbelianizationReport inner = abelianization_check(s, degree_bound, winding_bound);
      slice["ok"] = inner.ok;
      slice["tables_equal"] = inner.details.value("tables_equal", false);
      slices_ok = slices_ok && inner.ok;
    } catch (const Error& e) {
      slice["ok"] = false;
      slice["error"] = e.what();
      slices_ok = false;
    }
    slices.push_back(std::move(slice));
  }
  rep.details["slices"] = std::move(slices);
  rep.ok = degrees_ok && slices_ok;
  return rep;
}

bool nc_power_identity_check(const GroupData& G, std::int64_t n) {
  if (G.rank != 1) throw UsageError("the power identity check requires rank 1");
  if (n <= 0) throw UsageError("the power must be positive");
  std::int32_t n32 = static_cast<std::int32_t>(n);

  EulerPair one = euler_pair(G, Winding{1}, Flavor::H);
  EulerPair top = euler_pair(G, Winding{n}, Flavor::H);

  auto side = [&](const FactoredPoly& base, const FactoredPoly& target) {
    GradedElement gen = graded_zero(Flavor::H, 1);
    gen.parts.emplace(Winding{1}, base.expand());
    GradedElement lhs = graded_pow(gen, n32);
    GradedElement rhs = graded_zero(Flavor::H, 1);
    rhs.parts.emplace(Winding{n}, target.expand());
    return graded_add(lhs, graded_scale(rhs, Rat(-1))).is_zero();
  };
  return side(one.eminus, top.eminus) && side(one.eplus, top.eplus);
}

}  // namespace coulomb
