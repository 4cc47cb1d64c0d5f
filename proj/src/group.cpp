#include "coulomb/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coulomb/errors.hpp"

namespace coulomb {

std::int64_t pairing(const Weight& nu, const Winding& eta) {
  if (nu.size() != eta.size())
    throw UsageError("pairing rank mismatch: " + std::to_string(nu.size()) + " vs " +
                     std::to_string(eta.size()));
  std::int64_t dot = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) dot += nu[i] * eta[i];
  return dot;
}

IntMatrix mat_identity(std::int32_t r) {
  IntMatrix id(r, IntVec(r, 0));
  for (std::int32_t i = 0; i < r; ++i) id[i][i] = 1;
  return id;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size();
  IntMatrix c(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntMatrix mat_transpose(const IntMatrix& a) {
  std::size_t n = a.size();
  IntMatrix t(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

IntVec mat_apply(const IntMatrix& a, const IntVec& v) {
  if (a.size() != v.size()) throw UsageError("matrix/vector rank mismatch");
  IntVec out(v.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

std::int64_t mat_det(const IntMatrix& a) {
  // Cofactor expansion; Weyl ranks stay small.
  std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    IntMatrix minor(n - 1, IntVec(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor[i - 1][jj++] = a[i][j];
    }
    std::int64_t term = a[0][c] * mat_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

std::optional<IntMatrix> mat_inverse(const IntMatrix& a) {
  std::size_t n = a.size();
  std::int64_t det = mat_det(a);
  if (det != 1 && det != -1) return std::nullopt;
  IntMatrix inv(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, IntVec(n - 1));
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != i) minor[rr][cc++] = a[r][c];
        ++rr;
      }
      std::int64_t cof = mat_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = cof * det;  // det is +-1, so dividing equals multiplying
    }
  return inv;
}

Weight weight_act(const IntMatrix& g, const Weight& nu) {
  auto inv = mat_inverse(g);
  if (!inv) throw UsageError("Weyl generator is not invertible over the integers");
  return mat_apply(mat_transpose(*inv), nu);
}

GroupData u1(std::vector<std::int64_t> weights) {
  GroupData g;
  g.rank = 1;
  for (auto w : weights) g.weights.push_back({w});
  return g;
}

GroupData su2(std::vector<std::int64_t> weights) {
  GroupData g;
  g.rank = 1;
  for (auto w : weights) g.weights.push_back({w});
  g.weyl = {{{-1}}};
  g.roots = {{2}, {-2}};
  return g;
}

GroupData torus(std::int32_t rank, std::vector<Weight> weights) {
  GroupData g;
  g.rank = rank;
  g.weights = std::move(weights);
  return g;
}

namespace {

bool same_multiset(std::vector<Weight> a, std::vector<Weight> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<Weight> act_on_all(const IntMatrix& g, const std::vector<Weight>& ws) {
  std::vector<Weight> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(weight_act(g, w));
  return out;
}

constexpr std::size_t kOrderBound = 10080;

}  // namespace

void validate_group(const GroupData& g) {
  if (g.rank <= 0) throw UsageError("group rank must be positive");
  std::size_t r = static_cast<std::size_t>(g.rank);
  for (const auto& w : g.weights)
    if (w.size() != r) throw UsageError("weight length does not match rank");
  for (const auto& w : g.roots)
    if (w.size() != r) throw UsageError("root length does not match rank");
  for (const auto& gen : g.weyl) {
    if (gen.size() != r) throw UsageError("Weyl generator is not rank x rank");
    for (const auto& row : gen)
      if (row.size() != r) throw UsageError("Weyl generator is not rank x rank");
    std::int64_t det = mat_det(gen);
    if (det != 1 && det != -1)
      throw UsageError("Weyl generator determinant is " + std::to_string(det) +
                       ", expected +1 or -1");
    // Finite order: iterate until the identity shows up.
    IntMatrix power = gen;
    IntMatrix id = mat_identity(g.rank);
    std::size_t order = 1;
    while (power != id) {
      power = mat_mul(power, gen);
      if (++order > kOrderBound) throw UsageError("Weyl generator order exceeds bound");
    }
    if (!same_multiset(act_on_all(gen, g.weights), g.weights))
      throw UsageError("Weyl generator does not permute the weight multiset");
    if (!g.roots.empty() && !same_multiset(act_on_all(gen, g.roots), g.roots))
      throw UsageError("Weyl generator does not permute the root multiset");
  }
}

GroupData reduce_by_roots(const GroupData& g) {
  GroupData out = g;
  out.roots.clear();
  std::vector<Weight> remaining = g.weights;
  for (const auto& root : g.roots) {
    auto it = std::find(remaining.begin(), remaining.end(), root);
    if (it == remaining.end()) throw UsageError("weights do not contain roots");
    remaining.erase(it);
  }
  out.weights = std::move(remaining);
  return out;
}

std::vector<IntMatrix> weyl_closure(const GroupData& g, std::size_t bound) {
  std::set<IntMatrix> seen;
  std::vector<IntMatrix> queue{mat_identity(g.rank)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    IntMatrix current = queue[head];
    for (const auto& gen : g.weyl) {
      IntMatrix next = mat_mul(gen, current);
      if (seen.insert(next).second) {
        if (seen.size() > bound) throw MathError("Weyl closure exceeds order bound");
        queue.push_back(std::move(next));
      }
    }
  }
  return queue;
}

namespace {

std::vector<Weight> weights_from_json(const nlohmann::json& j, std::int32_t rank,
                                      const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + " must be an array");
  std::vector<Weight> out;
  for (const auto& entry : j) {
    if (entry.is_number_integer()) {
      if (rank != 1) throw UsageError(std::string(what) + ": flat integers need rank 1");
      out.push_back({entry.get<std::int64_t>()});
    } else if (entry.is_array()) {
      Weight w;
      for (const auto& c : entry) {
        if (!c.is_number_integer()) throw UsageError(std::string(what) + ": non-integer entry");
        w.push_back(c.get<std::int64_t>());
      }
      out.push_back(std::move(w));
    } else {
      throw UsageError(std::string(what) + ": entries must be integers or integer arrays");
    }
  }
  return out;
}

}  // namespace

GroupData group_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("group descriptor must be a JSON object");
  GroupData g;
  if (j.contains("group")) {
    std::string name = j.at("group").get<std::string>();
    std::int32_t rank = j.value("rank", 1);
    auto weights = weights_from_json(j.value("weights", nlohmann::json::array()), rank, "weights");
    if (name == "u1" || name == "su2") {
      if (rank != 1) throw UsageError(name + " is a rank-1 built-in");
      std::vector<std::int64_t> flat;
      for (const auto& w : weights) flat.push_back(w.at(0));
      g = (name == "u1") ? u1(flat) : su2(flat);
    } else if (name == "torus") {
      g = torus(rank, weights);
    } else {
      throw UsageError("unknown built-in group '" + name + "'");
    }
  } else {
    g.rank = j.value("rank", 1);
    g.weights = weights_from_json(j.value("weights", nlohmann::json::array()), g.rank, "weights");
    g.roots = weights_from_json(j.value("roots", nlohmann::json::array()), g.rank, "roots");
    if (j.contains("weyl")) {
      for (const auto& gen : j.at("weyl")) {
        IntMatrix m;
        for (const auto& row : gen) {
          IntVec r;
          for (const auto& c : row) r.push_back(c.get<std::int64_t>());
          m.push_back(std::move(r));
        }
        g.weyl.push_back(std::move(m));
      }
    }
  }
  if (j.contains("pi1_torsion")) g.pi1_torsion = j.at("pi1_torsion").get<bool>();
  validate_group(g);
  return g;
}

nlohmann::json group_to_json(const GroupData& g) {
  nlohmann::json j;
  j["rank"] = g.rank;
  j["weights"] = g.weights;
  j["weyl"] = g.weyl;
  j["roots"] = g.roots;
  if (g.pi1_torsion) j["pi1_torsion"] = true;
  return j;
}

}  // namespace coulomb
