#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coulomb/errors.hpp"
#include "coulomb/group.hpp"

using namespace coulomb;

namespace {

// Random unimodular matrix: a short word in elementary row operations.
IntMatrix random_unimodular(std::mt19937_64& rng, std::int32_t r) {
  IntMatrix g = mat_identity(r);
  std::uniform_int_distribution<int> pick(0, r - 1);
  std::uniform_int_distribution<int> shear(-2, 2);
  std::uniform_int_distribution<int> op(0, 2);
  for (int step = 0; step < 6; ++step) {
    int i = pick(rng), j = pick(rng);
    switch (op(rng)) {
      case 0:
        if (i != j) {
          std::int64_t c = shear(rng);
          for (std::int32_t k = 0; k < r; ++k) g[i][k] += c * g[j][k];
        }
        break;
      case 1:
        std::swap(g[i], g[j]);
        break;
      default:
        for (std::int32_t k = 0; k < r; ++k) g[i][k] = -g[i][k];
        break;
    }
  }
  return g;
}

}  // namespace

TEST_CASE("pairing is the integer dot product") {
  CHECK(pairing(Weight{1}, Winding{-3}) == -3);
  CHECK(pairing(Weight{2, -1}, Winding{1, 1}) == 1);
  CHECK(pairing(Weight{0, 0}, Winding{5, 7}) == 0);
  CHECK_THROWS_AS(pairing(Weight{1}, Winding{1, 2}), UsageError);
}

TEST_CASE("matrix helpers: identity, product, transpose, determinant, inverse") {
  IntMatrix id = mat_identity(2);
  CHECK(mat_det(id) == 1);
  IntMatrix swap{{0, 1}, {1, 0}};
  CHECK(mat_det(swap) == -1);
  CHECK(mat_mul(swap, swap) == id);
  IntMatrix shear{{1, 3}, {0, 1}};
  CHECK(mat_det(shear) == 1);
  auto inv = mat_inverse(shear);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(shear, *inv) == id);
  CHECK(mat_transpose(shear) == IntMatrix{{1, 0}, {3, 1}});
  CHECK(mat_apply(shear, IntVec{1, 1}) == IntVec{4, 1});
  IntMatrix singular{{2, 0}, {0, 1}};  // det 2: no integer inverse
  CHECK(!mat_inverse(singular).has_value());
}

TEST_CASE("weight action is contragredient to the winding action") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::int32_t r = 1 + static_cast<std::int32_t>(rng() % 3);
    IntMatrix g = random_unimodular(rng, r);
    Weight nu(r);
    Winding eta(r);
    for (auto& c : nu) c = static_cast<std::int64_t>(rng() % 7) - 3;
    for (auto& c : eta) c = static_cast<std::int64_t>(rng() % 7) - 3;
    CHECK(pairing(weight_act(g, nu), mat_apply(g, eta)) == pairing(nu, eta));
  }
}

TEST_CASE("builtin groups") {
  GroupData a = u1({1, -1});
  CHECK(a.rank == 1);
  CHECK(a.weyl.empty());
  CHECK(a.weights == std::vector<Weight>{{1}, {-1}});

  GroupData b = su2({2, 0, -2});
  CHECK(b.rank == 1);
  REQUIRE(b.weyl.size() == 1);
  CHECK(b.weyl[0] == IntMatrix{{-1}});
  CHECK(b.roots == std::vector<Weight>{{2}, {-2}});
  validate_group(b);

  GroupData c = torus(2, {{1, 0}, {0, 1}});
  CHECK(c.rank == 2);
  validate_group(c);
}

TEST_CASE("validation rejects malformed groups") {
  GroupData g = u1({1});
  g.weyl.push_back(IntMatrix{{2}});  // determinant 2
  CHECK_THROWS_AS(validate_group(g), UsageError);

  GroupData shear = torus(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  shear.weyl.push_back(IntMatrix{{1, 1}, {0, 1}});  // infinite order
  CHECK_THROWS_AS(validate_group(shear), UsageError);

  GroupData bad = u1({1, 1});
  bad.weyl.push_back(IntMatrix{{-1}});  // does not permute {1,1}
  CHECK_THROWS_AS(validate_group(bad), UsageError);

  GroupData badroot = su2({2, 0, -2});
  badroot.roots = {{2}, {3}};  // -1 sends 3 to -3, absent
  CHECK_THROWS_AS(validate_group(badroot), UsageError);

  GroupData empty;
  empty.rank = 0;
  CHECK_THROWS_AS(validate_group(empty), UsageError);
}

TEST_CASE("reduce_by_roots removes one copy of each root") {
  GroupData adj = su2({2, 0, -2});
  GroupData red = reduce_by_roots(adj);
  CHECK(red.weights == std::vector<Weight>{{0}});
  CHECK(red.roots.empty());
  CHECK(red.weyl == adj.weyl);

  GroupData mixed = su2({2, -2, 1, -1});
  GroupData red2 = reduce_by_roots(mixed);
  std::multiset<std::int64_t> left;
  for (const auto& nu : red2.weights) left.insert(nu[0]);
  CHECK(left == std::multiset<std::int64_t>{-1, 1});

  GroupData missing = su2({1, -1});
  CHECK_THROWS_AS(reduce_by_roots(missing), UsageError);
}

TEST_CASE("weyl closure enumerates the full group") {
  GroupData s = su2({1, -1});
  CHECK(weyl_closure(s).size() == 2);

  // Symmetric group S3 acting on a rank-3 torus by coordinate permutations.
  GroupData t = torus(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  t.weyl.push_back(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  t.weyl.push_back(IntMatrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  validate_group(t);
  CHECK(weyl_closure(t).size() == 6);

  // Tiny bound trips the explosion guard.
  CHECK_THROWS_AS(weyl_closure(t, 4), MathError);

  GroupData plain = u1({5});
  CHECK(weyl_closure(plain).size() == 1);  // identity only
}

TEST_CASE("group json round trip and builtin descriptors") {
  GroupData g = su2({2, -2, 1, -1});
  nlohmann::json j = group_to_json(g);
  GroupData back = group_from_json(j);
  CHECK(back.rank == g.rank);
  CHECK(back.weights == g.weights);
  CHECK(back.weyl == g.weyl);
  CHECK(back.roots == g.roots);
  CHECK(back.pi1_torsion == g.pi1_torsion);

  GroupData b1 = group_from_json(nlohmann::json{{"group", "u1"}, {"weights", {1, -1}}});
  CHECK(b1.weights == std::vector<Weight>{{1}, {-1}});
  GroupData b2 = group_from_json(nlohmann::json{{"group", "su2"}, {"weights", {2, 0, -2}}});
  CHECK(b2.roots.size() == 2);
  GroupData b3 = group_from_json(
      nlohmann::json{{"group", "torus"}, {"rank", 2}, {"weights", {{1, 0}, {0, 1}}}});
  CHECK(b3.rank == 2);

  // Flat weight lists are only meaningful at rank 1.
  CHECK_THROWS_AS(
      group_from_json(nlohmann::json{{"rank", 2}, {"weights", {1, -1}}}), UsageError);
  CHECK_THROWS_AS(group_from_json(nlohmann::json{{"group", "so3"}}), UsageError);

  GroupData flat = group_from_json(nlohmann::json{{"rank", 1}, {"weights", {3, -3}}});
  CHECK(flat.weights == std::vector<Weight>{{3}, {-3}});
}
