#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "coulomb/factored.hpp"
#include "coulomb/group.hpp"
#include "coulomb/poly.hpp"

namespace coulomb {

// The four coefficient flavors. Comm and K are commutative (additive and
// multiplicative coordinates); H and Q are their quantizations, where the
// winding variables no longer commute with the coefficients:
//   H:  t z = z (t - h)          Q:  z x = q x z   (per matching index)
enum class Flavor { Comm, K, H, Q };

std::string flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(const std::string& name);
bool flavor_is_multiplicative(Flavor f);  // K and Q
bool flavor_is_quantized(Flavor f);       // H and Q

// Variable discipline per flavor (windings z excluded; they live in the
// grading, not the coefficients).
bool flavor_allows(Flavor f, VarKind kind);

// An element sum_eta z^eta * p_eta with coefficients on the right of the
// winding. Coefficient polynomials never mention z.
struct GradedElement {
  Flavor flavor = Flavor::Comm;
  std::int32_t rank = 1;
  std::map<Winding, Poly> parts;

  bool is_zero() const { return parts.empty(); }
  const Poly* part(const Winding& eta) const;
};

GradedElement graded_zero(Flavor f, std::int32_t rank);
// Splits z-exponents of each term into the winding index; rejects
// coefficient variables the flavor forbids.
GradedElement graded_from_poly(Flavor f, std::int32_t rank, const Poly& p);
GradedElement parse_graded(Flavor f, std::int32_t rank, const std::string& text);
Poly graded_to_poly(const GradedElement& f);

GradedElement graded_add(const GradedElement& a, const GradedElement& b);
GradedElement graded_scale(const GradedElement& a, const Rat& c);

// Flavor-dispatched product. Comm/K multiply componentwise; H shifts the
// left factor's t by the right winding (t_i -> t_i - b_i h); Q rescales the
// left factor's x by the right winding (x_i -> q^{-b_i} x_i).
GradedElement graded_mul(const GradedElement& a, const GradedElement& b);
GradedElement graded_pow(const GradedElement& a, std::int32_t n);  // n >= 0

// Coefficient-wise substitution (e.g. mu := 0); windings untouched. Parts
// whose coefficient vanishes are dropped.
GradedElement graded_substitute(const GradedElement& f, const Var& v, const Poly& value);

// Winding eta -> g eta; coefficients t_i / x_i move by the rows of g^{-1},
// which keeps <nu|t> aligned with the inverse-transpose action on weights.
GradedElement weyl_act(const IntMatrix& g, const GradedElement& f);
// Sum over the full Weyl closure (unnormalized orbit sum).
GradedElement weyl_symmetrize(const GroupData& G, const GradedElement& f);

std::string graded_str(const GradedElement& f);
nlohmann::json graded_to_json(const GradedElement& f);

// Fractions per winding, for conjugation images that leave the polynomial
// coefficient ring.
struct GradedFraction {
  Flavor flavor = Flavor::Comm;
  std::int32_t rank = 1;
  std::map<Winding, RationalPoly> parts;
};

nlohmann::json graded_fraction_to_json(const GradedFraction& f);

}  // namespace coulomb
