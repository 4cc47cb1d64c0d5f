#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace coulomb {

// Integer (co)vectors over the gauge torus: weights pair with windings
// (cocharacters) through the standard dot product.
using IntVec = std::vector<std::int64_t>;
using Weight = IntVec;
using Winding = IntVec;

// Row-major square integer matrix.
using IntMatrix = std::vector<IntVec>;

// Gauge data: the torus rank, the matter weight multiset (repetitions carry
// multiplicity), optional Weyl generators (integer matrices of determinant
// +-1 acting on windings), and an optional root multiset. The pi1_torsion
// flag records a torsion fundamental group; the q flavor refuses it.
struct GroupData {
  std::int32_t rank = 1;
  std::vector<Weight> weights;
  std::vector<IntMatrix> weyl;
  std::vector<Weight> roots;
  bool pi1_torsion = false;
};

std::int64_t pairing(const Weight& nu, const Winding& eta);

IntMatrix mat_identity(std::int32_t r);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_transpose(const IntMatrix& a);
IntVec mat_apply(const IntMatrix& a, const IntVec& v);
std::int64_t mat_det(const IntMatrix& a);
// Exact inverse of a determinant +-1 matrix (adjugate over the determinant).
std::optional<IntMatrix> mat_inverse(const IntMatrix& a);

// Weyl matrices act on windings directly; weights move by the
// inverse-transpose so that pairing(weight_act(g,nu), mat_apply(g,eta)) ==
// pairing(nu, eta).
Weight weight_act(const IntMatrix& g, const Weight& nu);

GroupData u1(std::vector<std::int64_t> weights);
GroupData su2(std::vector<std::int64_t> weights);
GroupData torus(std::int32_t rank, std::vector<Weight> weights);

// Checks rank consistency, determinant +-1, finite generator order, and that
// every generator permutes the weight multiset (and the root multiset when
// present). Throws UsageError with a description of the first violation.
void validate_group(const GroupData& g);

// Weights of V minus one copy of each root; Weyl generators retained, roots
// cleared. Throws UsageError("weights do not contain roots") on failure.
GroupData reduce_by_roots(const GroupData& g);

// Closure of the generators under multiplication (the full Weyl group),
// identity included. Throws MathError if the closure exceeds `bound`.
std::vector<IntMatrix> weyl_closure(const GroupData& g, std::size_t bound = 10080);

// Descriptor form: {"rank": r, "weights": [[..],..], "weyl": [[[..]]],
// "roots": [[..],..], "pi1_torsion": bool}, or a built-in reference
// {"group": "u1"|"su2"|"torus", "weights": ..., "rank": r}. Rank-1 weight
// lists may be flat integer lists.
GroupData group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const GroupData& g);

}  // namespace coulomb
