#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "coulomb/euler.hpp"
#include "coulomb/factored.hpp"
#include "coulomb/graded.hpp"
#include "coulomb/group.hpp"

namespace coulomb {

// Conjugation / translation image: the coefficient at eta is multiplied by
// e_plus(eta)/e_minus(eta) and kept as a reduced fraction. In the quantized
// flavors both Euler sides are functions of the coefficient variables only,
// so the product is the ordinary commutative one on the right of z^eta.
GradedFraction euler_conjugate(const GradedElement& f, const GroupData& G,
                               const EulerOptions& opt = {});

// Per-winding outcome of the survival test. When the piece survives,
// `quotient` holds p_eta / e_minus(eta); otherwise `obstruction` names the
// failing factor (or the negative exponent that already disqualifies the
// coefficient in an additive flavor).
struct SurvivalWitness {
  Winding eta;
  bool ok = false;
  Poly quotient;
  std::string obstruction;
};

struct SurvivalReport {
  bool all = true;
  std::vector<SurvivalWitness> witnesses;

  nlohmann::json to_json() const;
};

// An element survives when every graded piece is divisible by its
// e_minus(eta) — exactly in the additive flavors, up to monomial units in
// the multiplicative ones.
SurvivalReport survives(const GradedElement& f, const GroupData& G,
                        const EulerOptions& opt = {});

// z^eta * e_minus(eta), the canonical surviving element of winding eta.
GradedElement graded_generator(const GroupData& G, const Winding& eta, Flavor flavor,
                               const EulerOptions& opt = {});

// The rank-1 presentation for a weight multiset symmetric under negation:
//   phi_plus = prod_{nu>0} (mu + nu t)^nu,   N = deg phi_plus,
//   phi_minus = phi_plus(t -> -t),
//   x = (z phi_minus - mu^N)/t,  y = (mu^N - z^-1 phi_plus)/t,  w = (x-y)/t,
// with x - y = t w and x y = xy_constant + mu^N w,
// xy_constant = (mu^{2N} - phi_plus phi_minus)/t^2 (an exact division).
// x, y, w are commutative graded elements with Laurent t coefficients; the
// residues of both relations are expanded and must vanish identically.
struct Rank1Presentation {
  std::int64_t weight_sum = 0;  // N
  FactoredPoly phi_plus;
  FactoredPoly phi_minus;
  GradedElement x, y, w;
  Poly xy_constant;
  GradedElement residue_linear;     // x - y - t w
  GradedElement residue_quadratic;  // x y - xy_constant - mu^N w

  nlohmann::json to_json() const;
};

Rank1Presentation su2_presentation(const GroupData& G);

// Membership in C[mu,t][u,v] with z = 1 + t u, z^-1 = 1 - t v and the single
// relation u - v = t u v: substitute z = 1 + t u and accept iff the reduced
// numerator carries no negative power of t (the reduced denominator is
// always a power of 1 + t u, which is invertible in that ring).
bool uv_ring_member(const GradedElement& f);

// Dimensions, for d = 0..degree_bound, of the space of surviving elements of
// total (mu, t) degree <= d concentrated at winding eta: the degree-filtered
// multiples of e_minus(eta). Torus groups, commutative flavor.
std::vector<std::int64_t> torus_winding_dimensions(const GroupData& G, const Winding& eta,
                                                   std::int64_t degree_bound);

// Exact-degree dimension grid: cells[w][d - min_degree] is the dimension of
// the span filtered to winding width <= w (max |eta_i|) and total coefficient
// degree exactly d.
struct DimTable {
  std::int64_t width_bound = 0;
  std::int64_t min_degree = 0;
  std::vector<std::vector<std::int64_t>> cells;

  std::int64_t max_degree() const {
    return min_degree + (cells.empty() ? 0 : static_cast<std::int64_t>(cells[0].size())) - 1;
  }
  bool operator==(const DimTable&) const = default;
  nlohmann::json to_json() const;
};

// Span of all products of `gens` (each t-homogeneous) padded by powers of t,
// generated up to winding width `cap`, optionally replacing each product by
// its Weyl orbit sum. Exact row reduction; the narrow-width cells are exact
// whenever every contributing element has been generated (see cap growth in
// the callers).
DimTable product_span_dims(const GroupData& G, const std::vector<GradedElement>& gens,
                           std::int64_t width_bound, std::int64_t degree_lo,
                           std::int64_t degree_hi, std::int64_t cap, bool symmetrize);

// Orbit-summed span of the full surviving torus ring at mu = 0: basis
// elements z^eta * (e_minus(eta)|_{mu=0}) * t-monomials. Exact at every cell
// (distinct windings never cancel).
DimTable torus_symmetrized_dims(const GroupData& G, std::int64_t width_bound,
                                std::int64_t degree_bound);

// Cumulative (degree <= d) dimensions of the Weyl-invariant surviving ring
// of an su2 group at mu = 0, restricted to the winding orbit {+-eta}.
std::vector<std::int64_t> su2_orbit_dimensions(const GroupData& G, std::int64_t eta,
                                               std::int64_t degree_bound);

// The coweight 2a/(a,a) of a root; UsageError when not integral.
Winding coroot(const Weight& alpha);

struct AbelianizationReport {
  bool ok = false;
  bool su2_direct = false;  // true when both sides were compared in full
  nlohmann::json details;
};

// Compares the Weyl-invariant surviving ring of G at mu = 0 with the
// W-symmetrized surviving ring of the root-reduced torus. Full two-sided
// comparison for su2 input; for general groups, reports the reduced-torus
// side plus an su2 slice check along each root, and verifies the mu-generic
// rank bookkeeping deg e_minus_G(eta) = deg e_minus_red(eta) + sum over
// roots of max(0, -<alpha|eta>) at every checked winding.
AbelianizationReport abelianization_check(const GroupData& G, std::int64_t degree_bound,
                                          std::int64_t winding_bound);

// Verifies [z e_minus(1)]^n = z^n e_minus(n) and [z e_plus(1)]^n =
// z^n e_plus(n) in the shift flavor for a rank-1 group.
bool nc_power_identity_check(const GroupData& G, std::int64_t n);

}  // namespace coulomb
